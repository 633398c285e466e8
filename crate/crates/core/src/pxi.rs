//! `p_ξ(ν)` as a product of linear factors over positive roots.
//!
//! A factor `(φ, c, k)` stands for `(2(ν,φ)/(φ,φ) + c)^k`. The polynomial is
//! never expanded unless asked for, so vanishing at a given ν is an exact
//! hyperplane-membership test.

use std::collections::BTreeMap;
use std::fmt;

use num::{Complex, One, Zero};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::rational::{self, half, q, qi, to_big, BigQ, Q};
use crate::rank_one::{translate_factor, RhoShiftMode};
use crate::rep_theory::{branch_to_spin3, weyl_dim, Irrep};
use crate::root_system::{coroot_pairing, LieType, NuParameter, Root, RootSystem, Series};
use crate::small_k::{classify, SmallKType};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFactor {
    /// Index into the root system's positive roots.
    pub root_index: usize,
    pub root: Root,
    pub shift: Q,
    pub mult: u64,
}

impl LinearFactor {
    pub fn coroot_value(&self, nu_re: &[Q]) -> Q {
        coroot_pairing(nu_re, &self.root.coords)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredPolynomial {
    pub lie_type: LieType,
    pub scalar: Q,
    /// Sorted by `(root_index, shift)`, one entry per distinct pair.
    pub factors: Vec<LinearFactor>,
}

impl FactoredPolynomial {
    pub fn constant(lie_type: LieType, scalar: Q) -> Self {
        Self { lie_type, scalar, factors: vec![] }
    }

    pub fn total_degree(&self) -> u64 {
        self.factors.iter().map(|f| f.mult).sum()
    }

    /// Shift multiset attached to one positive root, with multiplicity.
    pub fn shifts_for(&self, root_index: usize) -> Vec<Q> {
        let mut out = Vec::new();
        for f in self.factors.iter().filter(|f| f.root_index == root_index) {
            out.extend(std::iter::repeat(f.shift).take(f.mult as usize));
        }
        out
    }

    pub fn per_root(&self) -> BTreeMap<usize, Vec<Q>> {
        let mut out: BTreeMap<usize, Vec<Q>> = BTreeMap::new();
        for f in &self.factors {
            out.entry(f.root_index).or_default().extend(std::iter::repeat(f.shift).take(f.mult as usize));
        }
        out
    }

    /// Factors vanishing at ν.
    pub fn vanishing_factors(&self, nu: &NuParameter) -> Vec<&LinearFactor> {
        self.factors
            .iter()
            .filter(|f| {
                let (re, im) = nu.coroot_pairing(&f.root);
                im.is_zero() && (re + f.shift).is_zero()
            })
            .collect()
    }

    /// Divisibility in factored form: every factor of `self` occurs in
    /// `other` with at least the same multiplicity.
    pub fn divides(&self, other: &FactoredPolynomial) -> bool {
        self.factors.iter().all(|f| {
            other
                .factors
                .iter()
                .any(|g| g.root_index == f.root_index && g.shift == f.shift && g.mult >= f.mult)
        })
    }

    /// The part of `self` carried by one root.
    pub fn root_part(&self, root_index: usize) -> FactoredPolynomial {
        FactoredPolynomial {
            lie_type: self.lie_type,
            scalar: qi(1),
            factors: self.factors.iter().filter(|f| f.root_index == root_index).cloned().collect(),
        }
    }

    /// `p(−ν)` as a factored polynomial in ν: each `(x + c)` becomes
    /// `−(x − c)`.
    pub fn reflected(&self) -> (Q, Vec<(usize, Q, u64)>) {
        let mut sign = self.scalar;
        let mut out = Vec::new();
        for f in &self.factors {
            if f.mult % 2 == 1 {
                sign = -sign;
            }
            out.push((f.root_index, -f.shift, f.mult));
        }
        (sign, out)
    }
}

impl fmt::Display for FactoredPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "{}", self.scalar);
        }
        if !self.scalar.is_one() {
            write!(f, "{}·", self.scalar)?;
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|fa| {
                let base = format!("(x{}{})", fa.root, crate::rational::fmt_offset(&fa.shift));
                if fa.mult == 1 {
                    base
                } else {
                    format!("{base}^{}", fa.mult)
                }
            })
            .collect();
        write!(f, "{}", parts.join(""))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiSpec {
    pub lie_type: LieType,
    pub tau: SmallKType,
    pub xi_weight: Vec<Q>,
    pub n_xi: u64,
}

/// `n(ξ) = dim ξ / dim τ`, with exact division required.
pub fn n_xi(xi: &Irrep, tau: &SmallKType) -> Result<u64> {
    let d = weyl_dim(xi)?;
    if d % tau.dim != 0 {
        return Err(Error::NotGenuine(format!("dim {xi} = {d} is not a multiple of dim τ = {}", tau.dim)));
    }
    Ok(d / tau.dim)
}

/// Shift multiset of `q_ν(m)` for odd `m`.
pub fn q_factors(m: u64) -> Result<Vec<Q>> {
    if m % 2 == 0 {
        return Err(Error::Precondition(format!("q(m) needs odd m, got {m}")));
    }
    let mut out = Vec::new();
    let top = if m % 4 == 1 { (m - 1) / 4 } else { (m - 3) / 4 };
    for l in 0..=top as i64 {
        for j in 0..l {
            out.push(qi(2 * j) + half());
            out.push(qi(2 * j) + q(3, 2));
        }
    }
    if m % 4 == 3 {
        for k in 0..=top as i64 {
            out.push(qi(2 * k) + half());
        }
    }
    Ok(out)
}

/// Merges per-root shift lists into one factored polynomial with scalar 1.
pub fn assemble_product<I>(rs: &RootSystem, per_root: I) -> Result<FactoredPolynomial>
where
    I: IntoIterator<Item = (Root, Vec<Q>)>,
{
    let mut acc: BTreeMap<(usize, Q), u64> = BTreeMap::new();
    for (root, shifts) in per_root {
        let idx = rs.positive_root_index(&root.coords).ok_or_else(|| Error::RootNotPositive(root.to_string()))?;
        for s in shifts {
            *acc.entry((idx, s)).or_insert(0) += 1;
        }
    }
    Ok(from_counts(rs, acc))
}

fn from_counts(rs: &RootSystem, acc: BTreeMap<(usize, Q), u64>) -> FactoredPolynomial {
    let factors = acc
        .into_iter()
        .filter(|(_, m)| *m > 0)
        .map(|((root_index, shift), mult)| LinearFactor {
            root_index,
            root: rs.positive_roots()[root_index].clone(),
            shift,
            mult,
        })
        .collect();
    FactoredPolynomial { lie_type: rs.lie_type(), scalar: qi(1), factors }
}

/// Data produced on the way to `p_ξ` for `SL(n,ℝ)~`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeAData {
    pub n: usize,
    pub xi: Irrep,
    pub tau: SmallKType,
    pub dim_xi: u64,
    /// Spin(3) branching multiset `{j_k}`.
    pub js: Vec<u64>,
    /// Shift multiset on each positive root, before the exponent `2/dim τ`.
    pub root_shifts: Vec<Q>,
    pub polynomial: FactoredPolynomial,
}

/// The small K type of `SL(n,ℝ)~`, a (half-)spin representation of Spin(n).
pub fn type_a_tau(n: usize) -> Result<SmallKType> {
    let t = LieType::new(Series::A, n.saturating_sub(1)).map_err(|_| Error::Precondition(format!("need n >= 3, got {n}")))?;
    if n < 3 {
        return Err(Error::Precondition(format!("need n >= 3, got {n}")));
    }
    Ok(classify(t)?.remove(0))
}

pub fn pxi_type_a(n: usize, xi_weight: &[Q]) -> Result<FactoredPolynomial> {
    Ok(pxi_type_a_data(n, xi_weight)?.polynomial)
}

pub fn pxi_type_a_data(n: usize, xi_weight: &[Q]) -> Result<TypeAData> {
    let tau = type_a_tau(n)?;
    let xi = Irrep::spin(n, xi_weight.to_vec());
    if !xi.is_genuine_spin() {
        return Err(Error::NotGenuine(rational::fmt_q_list(xi_weight)));
    }
    let dim_xi = weyl_dim(&xi)?;
    let js = branch_to_spin3(&xi)?;
    let mut root_shifts = Vec::new();
    for &j in &js {
        root_shifts.extend(q_factors(j)?);
    }
    root_shifts.sort();
    let mut counts: BTreeMap<Q, u64> = BTreeMap::new();
    for s in &root_shifts {
        *counts.entry(*s).or_insert(0) += 1;
    }
    let rs = RootSystem::build(tau.lie_type)?;
    let mut acc: BTreeMap<(usize, Q), u64> = BTreeMap::new();
    for (s, c) in &counts {
        let scaled = 2 * c;
        if scaled % tau.dim != 0 {
            return Err(Error::Consistency(format!(
                "multiplicity {c}·2/{} of shift {s} is not an integer for ξ = {}",
                tau.dim,
                rational::fmt_q_list(xi_weight)
            )));
        }
        for idx in 0..rs.positive_roots().len() {
            acc.insert((idx, *s), scaled / tau.dim);
        }
    }
    let polynomial = from_counts(&rs, acc);
    Ok(TypeAData { n, xi, tau, dim_xi, js, root_shifts, polynomial })
}

/// Re-expresses `p` in the given ρ convention (see
/// [`translate_factor`]); the shifted convention is the identity.
pub fn with_rho_mode(p: &FactoredPolynomial, rs: &RootSystem, mode: RhoShiftMode) -> Result<FactoredPolynomial> {
    let mut acc: BTreeMap<(usize, Q), u64> = BTreeMap::new();
    for f in &p.factors {
        let moved = translate_factor(&[f.shift], &f.root, rs, mode)?;
        *acc.entry((f.root_index, moved[0])).or_insert(0) += f.mult;
    }
    let mut out = from_counts(rs, acc);
    out.scalar = p.scalar;
    Ok(out)
}

/// Exact evaluation at complex ν.
pub fn evaluate(p: &FactoredPolynomial, nu: &NuParameter) -> Complex<BigQ> {
    let mut acc = Complex::new(to_big(&p.scalar), BigQ::zero());
    for f in &p.factors {
        let (re, im) = nu.coroot_pairing(&f.root);
        let z = Complex::new(to_big(&(re + f.shift)), to_big(&im));
        for _ in 0..f.mult {
            acc = acc * z.clone();
        }
    }
    acc
}

/// Exact evaluation at real ν (ε-coordinates).
pub fn evaluate_real(p: &FactoredPolynomial, nu: &[Q]) -> BigQ {
    let mut acc = to_big(&p.scalar);
    for f in &p.factors {
        let z = to_big(&(f.coroot_value(nu) + f.shift));
        acc *= rational::big_pow(&z, f.mult as i64);
    }
    acc
}

/// Expansion in the fundamental-weight coordinates `a_i` of ν, where
/// `⟨ν, φ∨⟩ = Σ a_i ⟨ω_i, φ∨⟩`.
pub fn expand(p: &FactoredPolynomial, rs: &RootSystem) -> MultiPoly<BigQ> {
    let r = rs.rank();
    let mut out = MultiPoly::constant(r, to_big(&p.scalar));
    for f in &p.factors {
        let coeffs: Vec<BigQ> =
            rs.fundamental_weights().iter().map(|w| to_big(&coroot_pairing(w, &f.root.coords))).collect();
        let lin = MultiPoly::linear(to_big(&f.shift), &coeffs);
        out = out.mul(&lin.pow(f.mult as u32));
    }
    out
}
