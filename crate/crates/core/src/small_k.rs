//! Genuine small K types of split simple groups and of the two linear
//! families `GL(n,ℝ)~`, `Pin(n,n)~`.
//!
//! The list itself is fixed data. Dimensions are not: each entry carries the
//! K representation it comes from and its dimension is recomputed with the
//! Weyl dimension formula.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::{half, q, qi, zeros, Q};
use crate::rep_theory::{weyl_dim, Group, Irrep};
use crate::root_system::{LieType, LengthClass, Root, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TauLabel {
    S,
    SP1,
    SP2,
    C8,
    C8Dual,
    C16,
    C2P1,
    C2P2,
}

impl TauLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            TauLabel::S => "s",
            TauLabel::SP1 => "s∘p1",
            TauLabel::SP2 => "s∘p2",
            TauLabel::C8 => "C8",
            TauLabel::C8Dual => "C8*",
            TauLabel::C16 => "C16",
            TauLabel::C2P1 => "C2∘p1",
            TauLabel::C2P2 => "C2∘p2",
        }
    }
}

impl fmt::Display for TauLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TauLabel {
    type Err = Error;

    /// Accepts the display form and ASCII spellings such as `sp1`, `s.p1`,
    /// `C2p2`, `C8dual`.
    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s
            .trim()
            .to_ascii_lowercase()
            .replace('∘', "")
            .replace(['.', '_', '-', ' ', 'o'], "")
            .replace('ℂ', "c")
            .replace('⁸', "8")
            .replace("¹⁶", "16")
            .replace('²', "2");
        Ok(match norm.as_str() {
            "s" => TauLabel::S,
            "sp1" => TauLabel::SP1,
            "sp2" => TauLabel::SP2,
            "c8" => TauLabel::C8,
            "c8*" | "c8dual" => TauLabel::C8Dual,
            "c16" => TauLabel::C16,
            "c2p1" => TauLabel::C2P1,
            "c2p2" => TauLabel::C2P2,
            _ => return Err(Error::Parse(format!("unknown small K type label {s:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoverKind {
    MetalinearGL(usize),
    PinPin(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallKType {
    pub lie_type: LieType,
    pub label: TauLabel,
    pub k_group: String,
    pub dim: u64,
    /// Dominant t_α weight on V_τ for long roots.
    pub t_long: Q,
    /// Dominant t_α weight for short roots; `None` when simply laced.
    pub t_short: Option<Q>,
    /// The K representation τ, used to recompute `dim`.
    pub k_irrep: Irrep,
    pub note: Option<String>,
}

impl SmallKType {
    fn make(lie_type: LieType, label: TauLabel, k_group: String, k_irrep: Irrep, t_short: Option<Q>) -> Result<Self> {
        let dim = weyl_dim(&k_irrep)?;
        let note = (lie_type.series == Series::D && lie_type.rank == 3).then(|| "A3≅D3 alias".to_string());
        Ok(Self { lie_type, label, k_group, dim, t_long: half(), t_short, k_irrep, note })
    }
}

impl fmt::Display for SmallKType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} τ={} K={} dim={}", self.lie_type, self.label, self.k_group, self.dim)
    }
}

fn spin_weight(n: usize) -> Vec<Q> {
    vec![half(); n / 2]
}

fn product(a: Group, b: Group) -> Group {
    Group::Product(Box::new(a), Box::new(b))
}

fn concat(a: Vec<Q>, b: Vec<Q>) -> Vec<Q> {
    a.into_iter().chain(b).collect()
}

fn first_unit(n: usize, c: Q) -> Vec<Q> {
    let mut v = zeros(n);
    v[0] = c;
    v
}

pub fn classify(lie_type: LieType) -> Result<Vec<SmallKType>> {
    let t = LieType::new(lie_type.series, lie_type.rank)?;
    let n = t.rank;
    use TauLabel::*;
    let mk = SmallKType::make;
    Ok(match t.series {
        Series::C => {
            return Err(Error::Unsupported(format!(
                "type {t}: the small K types are 1-dimensional, outside the scope of this engine"
            )))
        }
        Series::A => {
            if n < 2 {
                return Err(Error::Unsupported("type A1 has no genuine small K type of dimension > 1; need n >= 2".into()));
            }
            vec![mk(t, S, format!("Spin({})", n + 1), Irrep::spin(n + 1, spin_weight(n + 1)), None)?]
        }
        Series::B => {
            if n < 3 {
                return Err(Error::Unsupported("type B2 is not covered; need n >= 3".into()));
            }
            let g = product(Group::Spin(n + 1), Group::Spin(n));
            let k = format!("Spin({})×Spin({})", n + 1, n);
            let mut v = Vec::new();
            if n % 2 == 1 {
                let w = concat(spin_weight(n + 1), zeros(n / 2));
                v.push(mk(t, SP1, k.clone(), Irrep::new(g.clone(), w), Some(qi(1)))?);
            }
            let w = concat(zeros((n + 1) / 2), spin_weight(n));
            v.push(mk(t, SP2, k, Irrep::new(g, w), Some(qi(0)))?);
            v
        }
        Series::D => {
            let g = product(Group::Spin(n), Group::Spin(n));
            let k = format!("Spin({n})×Spin({n})");
            let m = n / 2;
            vec![
                mk(t, SP1, k.clone(), Irrep::new(g.clone(), concat(spin_weight(n), zeros(m))), None)?,
                mk(t, SP2, k, Irrep::new(g, concat(zeros(m), spin_weight(n))), None)?,
            ]
        }
        Series::E => match n {
            6 => vec![mk(t, C8, "Sp(4)".into(), Irrep::new(Group::Sp(4), first_unit(4, qi(1))), None)?],
            7 => {
                let mut dual = zeros(8);
                dual[7] = qi(-1);
                vec![
                    mk(t, C8, "SU(8)".into(), Irrep::new(Group::SU(8), first_unit(8, qi(1))), None)?,
                    mk(t, C8Dual, "SU(8)".into(), Irrep::new(Group::SU(8), dual), None)?,
                ]
            }
            _ => vec![mk(t, C16, "Spin(16)".into(), Irrep::spin(16, first_unit(8, qi(1))), None)?],
        },
        Series::F => {
            let g = product(Group::Sp(3), Group::Sp(1));
            vec![mk(t, C2P2, "Sp(3)×Sp(1)".into(), Irrep::new(g, concat(zeros(3), vec![qi(1)])), Some(qi(0)))?]
        }
        Series::G => {
            let g = product(Group::SU(2), Group::SU(2));
            let k = "SU(2)×SU(2)".to_string();
            vec![
                mk(t, C2P1, k.clone(), Irrep::new(g.clone(), vec![qi(1), qi(0), qi(0), qi(0)]), Some(half()))?,
                mk(t, C2P2, k, Irrep::new(g, vec![qi(0), qi(0), qi(1), qi(0)]), Some(q(3, 2)))?,
            ]
        }
    })
}

/// Finds the entry of `classify(lie_type)` with the given label.
pub fn lookup(lie_type: LieType, label: TauLabel) -> Result<SmallKType> {
    classify(lie_type)?
        .into_iter()
        .find(|t| t.label == label)
        .ok_or_else(|| Error::Unsupported(format!("{lie_type} has no small K type {label}")))
}

pub fn classify_cover(kind: CoverKind) -> Result<Vec<SmallKType>> {
    let n = match kind {
        CoverKind::MetalinearGL(n) | CoverKind::PinPin(n) => n,
    };
    if n < 3 {
        return Err(Error::Precondition(format!("covers are classified for n >= 3, got n = {n}")));
    }
    let eps = (n % 2 == 1).then_some(1);
    let spin = Irrep::pin(n, spin_weight(n), eps);
    Ok(match kind {
        CoverKind::MetalinearGL(_) => {
            let t = LieType::new(Series::A, n - 1)?;
            vec![SmallKType::make(t, TauLabel::S, format!("Pin({n})"), spin, None)?]
        }
        CoverKind::PinPin(_) => {
            let t = LieType::new(Series::D, n)?;
            let k = format!("Pin({n})×Pin({n})");
            [TauLabel::SP1, TauLabel::SP2]
                .into_iter()
                .map(|l| SmallKType::make(t, l, k.clone(), spin.clone(), None))
                .collect::<Result<Vec<_>>>()?
        }
    })
}

/// ½ on long roots, `t_short` on short roots.
pub fn dominant_t_weight(tau: &SmallKType, phi: &Root) -> Q {
    match phi.length_class {
        LengthClass::Long => tau.t_long,
        LengthClass::Short => tau.t_short.unwrap_or(tau.t_long),
    }
}
