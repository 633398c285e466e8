//! Γ-function determinant of the long intertwining operator on a K-isotypic
//! component, symbolic and numeric.

use pxi::analysis::{intertwining_det, numeric_gamma_eval, reflection_ratio};
use pxi::gamma::C64;
use pxi::pxi::pxi_type_a_data;
use pxi::rational::q;

pub fn run_example() -> pxi::Result<()> {
    let xi = [q(3, 2), q(1, 2)];
    let g = intertwining_det(4, &xi)?;
    let reduced = g.reduce()?;
    println!("SL(4)~: {} Γ quotients with exponent {}", g.factors.len(), g.exponent);
    println!("reduced: {reduced}");

    let d = pxi_type_a_data(4, &xi)?;
    assert_eq!(reduced, reflection_ratio(&d.polynomial, d.dim_xi as i64));

    let nu: Vec<C64> = [(2.7, 0.2), (1.3, -0.1), (-0.4, 0.5), (-3.6, -0.6)].iter().map(|&(a, b)| C64::new(a, b)).collect();
    let numeric = numeric_gamma_eval(&g, &nu)?;
    let exact = reduced.evaluate_f64(&nu);
    println!("numeric {numeric:.10}, from the rational form {exact:.10}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> pxi::Result<()> {
    run_example()
}
