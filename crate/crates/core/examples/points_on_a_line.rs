//! Two weighted points on a line: the affine singular space, its cone, and
//! the same form read off in each of the three charts.

use arrangements::contravariant::{decone_isometry, singular_affine, singular_projective, transition};
use arrangements::os_algebra::ProjectiveModel;
use arrangements::rational::{format, int};
use arrangements::{cone, AffineArrangement};

fn main() {
    let points = AffineArrangement::points(&[int(0), int(1)], vec![int(1), int(2)]).unwrap();
    let sing = singular_affine(&points);
    println!("affine Sing basis {:?}", sing.basis.to_strings());
    println!("restricted Gram   {:?}", sing.restricted_gram.to_strings());

    let central = cone(&points);
    let weights: Vec<String> = central.weights().iter().map(format).collect();
    println!("coned weights     {weights:?}");
    let model = ProjectiveModel::new(&central);
    let proj = singular_projective(&model);
    println!("projective Gram   {:?}", proj.restricted_gram.to_strings());

    for pivot in 0..central.len() {
        let iso = decone_isometry(&model, pivot).unwrap();
        println!(
            "pivot {pivot}: affine Gram {:?}, bijective {}, isometric {}",
            iso.affine.restricted_gram.to_strings(),
            iso.bijective,
            iso.isometric
        );
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        println!("tau_{i}{j} top block {:?}", transition(&model, i, j).unwrap().top().to_strings());
    }
}
