//! Fixtures shared by the benchmarks.

use npreproj_core::families::{auslander_algebra, dynkin_path_algebra, higher_auslander_chain, linear_nakayama};
use npreproj_core::field::PrimeField;
use npreproj_core::quivalg::Algebra;

/// Named algebras with the `n` they are studied at, smallest first.
pub fn fixtures() -> Vec<(&'static str, Algebra<PrimeField>, usize)> {
    let f = PrimeField::default();
    vec![
        ("kA3", dynkin_path_algebra(&f, &[true, true]).expect("A3"), 1),
        ("nakayama4", linear_nakayama(&f, 4).expect("nakayama"), 2),
        ("aus_A3_nonlinear", auslander_algebra(&dynkin_path_algebra(&f, &[false, true]).expect("A3")).expect("auslander"), 2),
        ("aus_A4", higher_auslander_chain(&f, 4, 1).expect("chain").pop().expect("two stages"), 2),
    ]
}
