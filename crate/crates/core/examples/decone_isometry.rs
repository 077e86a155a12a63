//! ε* carries the projective singular space onto each affine one isometrically.

use arrangements::contravariant::decone_isometry;
use arrangements::os_algebra::ProjectiveModel;
use arrangements::CentralArrangement;
use arrangements::rational::int;

fn main() {
    let arr = CentralArrangement::from_int_forms(
        &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[1, -1, 2]],
        vec![int(3), int(-1), int(2), int(1), int(-5)],
    )
    .unwrap();
    let model = ProjectiveModel::new(&arr);
    for pivot in 0..arr.len() {
        let iso = decone_isometry(&model, pivot).unwrap();
        println!(
            "pivot {pivot}: dim Sing {} , Gram {:?}, bijective {}, isometric {}",
            iso.projective.basis.dim(),
            iso.affine.restricted_gram.to_strings(),
            iso.bijective,
            iso.isometric
        );
    }
}
