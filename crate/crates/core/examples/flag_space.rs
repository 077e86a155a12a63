//! Flags in dual NBC coordinates, the flag differential and its exactness.

use arrangements::flag_space::FlagComplex;
use arrangements::os_algebra::ProjectiveModel;
use arrangements::rational::{format_vec, int};
use arrangements::CentralArrangement;

fn main() {
    let arr = CentralArrangement::from_int_forms(&[&[1, 0], &[0, 1], &[1, 1]], vec![int(1), int(1), int(-2)]).unwrap();
    let model = ProjectiveModel::new(&arr);
    let fc = FlagComplex::new(&model);
    for p in 0..=model.algebra().rank() {
        println!("degree {p}, dim {}", fc.dim(p));
        for f in fc.lattice().flags_of_length(p) {
            let flats: Vec<_> = f.flats().iter().map(|x| x.hyperplanes().to_vec()).collect();
            println!("  {flats:?} -> {:?}", format_vec(&fc.flag_to_dual(&f).coords));
        }
    }
    let d0 = fc.differential(0);
    let d1 = fc.differential(1);
    println!("d_0 {:?}", d0.to_strings());
    println!("d_1 {:?}", d1.to_strings());
    println!("d_1 d_0 = 0: {}", d1.mul(&d0).is_zero());
    println!("rank d_0 + rank d_1 = dim F^1: {}", d0.rank() + d1.rank() == fc.dim(1));
}
