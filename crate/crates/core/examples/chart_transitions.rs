//! Transition maps between affine charts, checked against the flag formula,
//! the cocycle rule and the pullback of forms.

use arrangements::contravariant::{
    chart_image, pullback, transition, transition_flag_formula, transition_flag_terms, transition_of_flag,
    verify_diagram_in_cohomology,
};
use arrangements::flag_space::FlagComplex;
use arrangements::os_algebra::ProjectiveModel;
use arrangements::rational::int;
use arrangements::CentralArrangement;

fn main() {
    let arr = CentralArrangement::from_int_forms(
        &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]],
        vec![int(2), int(1), int(-4), int(1)],
    )
    .unwrap();
    let model = ProjectiveModel::new(&arr);
    let fc = FlagComplex::new(&model);
    let (i, j, k) = (0, 1, 3);
    let t = transition(&model, i, j).unwrap();
    for (p, m) in t.blocks.iter().enumerate() {
        println!("tau_{i}{j} degree {p}: {:?}", m.to_strings());
    }
    let top = model.top_degree();
    let tau = t.top();
    let mut agree = 0;
    for f in fc.lattice().flags_of_length(top).iter().filter(|f| !f.last().lies_in(i)) {
        let expected = tau.mul_vec(&chart_image(&fc, i, f).unwrap().coords);
        let got = if transition_flag_terms(fc.lattice(), i, j, f).is_ok() {
            transition_flag_formula(&fc, i, j, f).unwrap()
        } else {
            transition_of_flag(&fc, i, j, f).unwrap()
        };
        agree += usize::from(got.coords == expected);
    }
    println!("flag formula agrees on {agree} admissible flags");
    let ij = transition(&model, i, j).unwrap();
    let jk = transition(&model, j, k).unwrap();
    let ik = transition(&model, i, k).unwrap();
    println!("cocycle: {}", jk.top().mul(ij.top()) == *ik.top());
    println!("pullback tau*_{j}{i} degree 1: {:?}", pullback(&model, i, j, 1).unwrap().to_strings());
    println!("diagram commutes in cohomology: {}", verify_diagram_in_cohomology(&model, i, j).unwrap());
}
