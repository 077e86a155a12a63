//! NBC bases, products and the boundary map of an Orlik–Solomon algebra.

use arrangements::os_algebra::OsAlgebra;
use arrangements::rational::{format_vec, int};
use arrangements::CentralArrangement;

fn main() {
    let arr = CentralArrangement::from_int_forms(
        &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]],
        vec![int(1), int(2), int(-1), int(3)],
    )
    .unwrap();
    let alg = OsAlgebra::central(&arr);
    println!("circuits {:?}", alg.circuits());
    for p in 0..=alg.rank() {
        let basis: Vec<_> = alg.nbc_basis(p).iter().map(|m| m.indices().to_vec()).collect();
        println!("A^{p}: dim {} basis {basis:?}", alg.dim(p));
    }
    let e = alg.wedge(&alg.generator(3), &alg.generator(0)).unwrap();
    println!("e_3 e_0 = {:?}", format_vec(&e.coords));
    let top = alg.wedge(&e, &alg.generator(1)).unwrap();
    println!("e_3 e_0 e_1 = {:?}", format_vec(&top.coords));
    println!("omega_a = {:?}", format_vec(&alg.omega_a().coords));
    println!("boundary A^2 -> A^1 {:?}", alg.boundary(2).to_strings());
}
