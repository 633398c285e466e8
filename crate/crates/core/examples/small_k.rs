//! Genuine small K types across the split groups, plus the two cover families.

use pxi::root_system::LieType;
use pxi::small_k::{classify, classify_cover, CoverKind};

pub fn run_example() -> pxi::Result<()> {
    for name in ["A4", "B3", "D5", "E6", "E7", "E8", "F4", "G2"] {
        let lt = LieType::parse(name, None)?;
        for t in classify(lt)? {
            println!(
                "{name:3} {:6} K = {:18} dim {:3} t_long {} t_short {}",
                t.label.as_str(),
                t.k_group,
                t.dim,
                t.t_long,
                t.t_short.map(|x| x.to_string()).unwrap_or_else(|| "-".into())
            );
        }
    }

    match classify(LieType::parse("C3", None)?) {
        Err(e) => println!("C3: {e}"),
        Ok(_) => unreachable!("type C has no genuine small K type"),
    }

    for kind in [CoverKind::MetalinearGL(5), CoverKind::PinPin(4)] {
        for t in classify_cover(kind)? {
            println!("{kind:?}: {} on {} (dim {})", t.label.as_str(), t.lie_type, t.dim);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> pxi::Result<()> {
    run_example()
}
