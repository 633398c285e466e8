//! The polynomial p_ξ for SL(n,R)~ in factored and expanded form.

use pxi::pxi::{evaluate_real, expand, pxi_type_a_data, with_rho_mode};
use pxi::rank_one::{q_closed_form, q_recursive, QSign, RhoShiftMode};
use pxi::rational::{fmt_q_list, q};
use pxi::root_system::RootSystem;

pub fn run_example() -> pxi::Result<()> {
    for l in 0..4 {
        let a = q_closed_form(l, QSign::PlusT);
        assert_eq!(a, q_recursive(l, QSign::PlusT));
        println!("q_{l}^+ = {} = {}", a.factored(), a.expanded());
    }

    for (n, xi) in [(3, vec![q(5, 2)]), (4, vec![q(3, 2), q(1, 2)]), (5, vec![q(3, 2), q(1, 2)])] {
        let d = pxi_type_a_data(n, &xi)?;
        println!("SL({n})~ xi = {} dim {} j = {:?}", fmt_q_list(&xi), d.dim_xi, d.js);
        println!("  p = {}", d.polynomial);
    }

    let d = pxi_type_a_data(3, &[q(5, 2)])?;
    let rs = RootSystem::build(d.polynomial.lie_type)?;
    println!("  p(rho) = {}", evaluate_real(&d.polynomial, &rs.rho().coords));
    println!("  expanded: {}", expand(&d.polynomial, &rs).fmt_with(&["a1", "a2"]));
    let raw = with_rho_mode(&d.polynomial, &rs, RhoShiftMode::Unshifted)?;
    println!("  without the rho shift: {raw}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> pxi::Result<()> {
    run_example()
}
