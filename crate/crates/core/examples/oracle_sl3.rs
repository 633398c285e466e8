//! Finite-group checks for the rank-one model: Q8 invariants in SU(2) reps.

use pxi::rational::fmt_q_list;
use pxi::oracle::{invariant_counts, invariants_dim, run_sl3_suite, verify_multiplicity_identity};

pub fn run_example() -> pxi::Result<()> {
    for p in (0..=8).step_by(2) {
        let c = invariant_counts(p);
        let (l, weights) = invariants_dim(p)?;
        println!("p = {p}: invariants {l} (character {}), weights {}", c.by_character, fmt_q_list(&weights));
    }
    for r in run_sl3_suite(11)? {
        println!("{} {}", if r.pass { "PASS" } else { "FAIL" }, r.name);
    }
    for e in verify_multiplicity_identity(11)? {
        println!("p = {}: n_xi = {}, sum of l = {}", e.p, e.n_xi, e.sum_l);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> pxi::Result<()> {
    run_example()
}
