//! Root data for every supported type: positive roots, ρ and the Cartan matrix.

use pxi::rational::fmt_q_list;
use pxi::root_system::{LieType, RootSystem, Weight};

pub fn run_example() -> pxi::Result<()> {
    for name in ["A3", "B3", "D4", "G2", "F4", "E6", "E7", "E8"] {
        let rs = RootSystem::build(LieType::parse(name, None)?)?;
        let highest = rs.positive_roots().last().expect("nonempty");
        println!(
            "{name}: {} positive roots, {} short, highest root {}",
            rs.positive_roots().len(),
            rs.short_positive_roots().count(),
            highest
        );
    }

    let g2 = RootSystem::build(LieType::parse("G2", None)?)?;
    println!("G2 Cartan matrix {:?}", g2.cartan_matrix());
    let rho_f = g2.to_fundamental(g2.rho())?;
    println!("G2 rho in fundamental coordinates {}", fmt_q_list(&rho_f.coords));

    let orbit = g2.weyl_orbit(&Weight::fundamental(vec![1.into(), 0.into()]))?;
    println!("orbit of the first fundamental weight has {} elements", orbit.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> pxi::Result<()> {
    run_example()
}
