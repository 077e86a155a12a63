//! Flats, Möbius values and Whitney numbers of the braid arrangement in C^3.

use arrangements::lattice::build_lattice;
use arrangements::rational::int;
use arrangements::CentralArrangement;

fn main() {
    let braid = CentralArrangement::from_int_forms(
        &[&[1, -1, 0], &[1, 0, -1], &[0, 1, -1]],
        vec![int(1), int(1), int(1)],
    )
    .unwrap();
    let lattice = build_lattice(&braid);
    for (x, mu) in lattice.moebius() {
        let covers: Vec<_> = lattice.covers(&x).unwrap().map(|y| y.hyperplanes().to_vec()).collect();
        println!("codim {} {:?} mu = {mu:>2} covered by {covers:?}", x.codim(), x.hyperplanes());
    }
    println!("Whitney numbers {:?}", lattice.whitney_numbers());
}
