//! Weyl dimensions, Freudenthal weight diagrams, tensor products and the
//! Spin(n) to Spin(3) branching chain.

use pxi::rational::{fmt_q_list, half, q};
use pxi::rep_theory::{
    branch_to_spin3, first_coordinate_character, freudenthal_multiplicities, pin_restrict, tensor_decompose, weyl_dim,
    Irrep,
};

pub fn run_example() -> pxi::Result<()> {
    let spin7 = Irrep::spin_rep(7);
    println!("spin rep of Spin(7): dim {}", weyl_dim(&spin7)?);

    let xi = Irrep::spin(5, vec![q(3, 2), half()]);
    let diagram = freudenthal_multiplicities(&xi)?;
    println!("Spin(5) {} has {} distinct weights", fmt_q_list(&xi.highest_weight), diagram.len());
    for (w, m) in first_coordinate_character(&diagram) {
        println!("  first coordinate {w}: multiplicity {m}");
    }

    let product = tensor_decompose(&spin7, &Irrep::spin(7, vec![1.into(), 0.into(), 0.into()]))?;
    for (ir, m) in &product.constituents {
        println!("  spin ⊗ vector ⊃ {m} × {}", fmt_q_list(&ir.highest_weight));
    }

    for n in 4..=7 {
        let js = branch_to_spin3(&Irrep::spin_rep(n))?;
        println!("spin rep of Spin({n}) restricted to Spin(3): j = {js:?}");
    }

    let pin = Irrep::pin(6, vec![q(3, 2), half(), half()], None);
    for (ir, m) in pin_restrict(&pin)?.constituents {
        println!("Pin(6) -> Spin(6): {m} × {}", fmt_q_list(&ir.highest_weight));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> pxi::Result<()> {
    run_example()
}
