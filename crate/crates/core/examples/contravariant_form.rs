//! The contravariant form of a generic line arrangement and its restriction
//! to singular vectors.

use arrangements::contravariant::{chain_map_holds, gram, singular_of_algebra};
use arrangements::os_algebra::OsAlgebra;
use arrangements::rational::{frac, int};
use arrangements::{AffineArrangement, Hyperplane};

fn line(a: i64, b: i64, c: i64) -> Hyperplane {
    Hyperplane::new(vec![int(a), int(b)], int(c), "").unwrap()
}

fn main() {
    let aff = AffineArrangement::new(
        2,
        vec![line(1, 0, 0), line(0, 1, 0), line(1, 1, -1)],
        vec![frac(1, 2), int(3), int(-2)],
    )
    .unwrap();
    let alg = OsAlgebra::affine(&aff);
    for p in 0..=alg.rank() {
        let g = gram(&alg, p);
        println!("S on F^{p}: {:?}", g.matrix.to_strings());
    }
    for p in 0..alg.rank() {
        println!("chain map in degree {p}: {}", chain_map_holds(&alg, p));
    }
    let sing = singular_of_algebra(&alg);
    println!("Sing basis {:?}", sing.basis.to_strings());
    println!("restricted Gram {:?} rank {}", sing.restricted_gram.to_strings(), sing.rank);
}
