//! Cyclicity, unitary irreducibility and Langlands data.

use pxi::analysis::{cyclicity, langlands_parameters, summary_table, unitary_irreducible, LanglandsDescriptor};
use pxi::rational::{fmt_q_list, q};
use pxi::root_system::{LieType, NuParameter};
use pxi::small_k::{lookup, TauLabel};

pub fn run_example() -> pxi::Result<()> {
    let b3 = LieType::parse("B3", None)?;
    let tau = lookup(b3, TauLabel::SP2)?;
    let nu = NuParameter::real(vec![q(5, 2), q(3, 2), q(1, 2)]);
    let v = cyclicity(b3, &tau, &nu)?;
    println!("B3 s∘p2 at nu = (5/2,3/2,1/2): cyclic = {}", v.cyclic);
    for (r, why) in &v.violated_roots {
        println!("  root {r}: {why}");
    }

    let tau1 = lookup(b3, TauLabel::SP1)?;
    let im = NuParameter::imaginary(vec![2.into(), 1.into(), 0.into()]);
    let u = unitary_irreducible(b3, &tau1, &im)?;
    println!("B3 s∘p1 at nu = i(2,1,0): irreducible = {}", u.irreducible);

    let l = langlands_parameters(b3, &tau, &NuParameter::real(vec![1.into(), 1.into(), 0.into()]))?;
    match l.descriptor {
        LanglandsDescriptor::Tempered => println!("tempered"),
        LanglandsDescriptor::Triple { f, sigma, mu } => println!(
            "Langlands data: F = {f:?}, sigma = i{}, mu = {}",
            fmt_q_list(&sigma.imag_part),
            fmt_q_list(&mu.real_part)
        ),
    }

    for row in summary_table()? {
        println!(
            "{:3} {:6} closed chamber: {:5} unitary: {:5} witnesses: {}",
            row.family, row.tau, row.closed_chamber, row.unitary, row.witnesses.len()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> pxi::Result<()> {
    run_example()
}
