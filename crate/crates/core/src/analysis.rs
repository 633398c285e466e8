//! Cyclicity, unitary irreducibility, Langlands data and intertwining
//! determinants for genuine principal series with a small K type.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, Complex, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gamma::{ln_gamma, pole_distance, C64};
use crate::linalg;
use crate::pxi::{pxi_type_a_data, FactoredPolynomial};
use crate::rational::{self, half, q, qi, to_big, BigQ, Q};
use crate::root_system::{coroot_pairing, LieType, NuParameter, Root, RootSystem, Series, Weight};
use crate::small_k::{classify, dominant_t_weight, SmallKType, TauLabel};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicityVerdict {
    pub cyclic: bool,
    pub violated_roots: Vec<(Root, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityVerdict {
    pub irreducible: bool,
    /// Short roots with `2(ν,α)/(α,α) = 0`.
    pub witnesses: Vec<Root>,
}

fn check_tau(lie_type: LieType, tau: &SmallKType) -> Result<RootSystem> {
    if tau.lie_type != lie_type {
        return Err(Error::GroupMismatch(format!("τ belongs to {}, not {lie_type}", tau.lie_type)));
    }
    if !lie_type.small_k_supported() {
        return Err(Error::Unsupported(format!("type {lie_type} has 1-dimensional small K types")));
    }
    RootSystem::build(lie_type)
}

fn check_nu(rs: &RootSystem, nu: &NuParameter) -> Result<()> {
    if nu.dim() != rs.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: rs.ambient_dim(), found: nu.dim() });
    }
    Ok(())
}

fn check_chamber(rs: &RootSystem, nu: &NuParameter) -> Result<()> {
    check_nu(rs, nu)?;
    if !rs.in_closed_langlands_chamber(&Weight::epsilon(nu.real_part.clone()))? {
        return Err(Error::OutsideChamber);
    }
    Ok(())
}

/// Decides cyclicity of the τ-isotypic component in the closed Langlands
/// chamber by the explicit case list; outside the chamber nothing is claimed.
pub fn cyclicity(lie_type: LieType, tau: &SmallKType, nu: &NuParameter) -> Result<CyclicityVerdict> {
    let rs = check_tau(lie_type, tau)?;
    check_chamber(&rs, nu)?;
    let mut violated = Vec::new();
    match (lie_type.series, tau.label) {
        (Series::B, TauLabel::SP1) => {
            for a in rs.short_positive_roots() {
                let (re, im) = nu.coroot_pairing(a);
                if re.is_zero() && im.is_zero() {
                    violated.push((a.clone(), "2(ν,α)/(α,α) = 0".to_string()));
                }
            }
        }
        (Series::G, TauLabel::C2P2) => {
            for a in rs.short_positive_roots() {
                let (re, im) = nu.coroot_pairing(a);
                if re == half() && im.is_zero() {
                    violated.push((a.clone(), "2(ν,α)/(α,α) = 1/2".to_string()));
                }
            }
        }
        _ => {}
    }
    Ok(CyclicityVerdict { cyclic: violated.is_empty(), violated_roots: violated })
}

/// Irreducibility of the unitary principal series (`Re ν = 0` exactly).
pub fn unitary_irreducible(lie_type: LieType, tau: &SmallKType, nu: &NuParameter) -> Result<IrreducibilityVerdict> {
    let rs = check_tau(lie_type, tau)?;
    check_nu(&rs, nu)?;
    if nu.real_part.iter().any(|x| !x.is_zero()) {
        return Err(Error::NonzeroRealPart);
    }
    let mut witnesses = Vec::new();
    if lie_type.series == Series::B && tau.label == TauLabel::SP1 {
        for a in rs.short_positive_roots() {
            if nu.coroot_pairing(a).1.is_zero() {
                witnesses.push(a.clone());
            }
        }
    }
    Ok(IrreducibilityVerdict { irreducible: witnesses.is_empty(), witnesses })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LanglandsDescriptor {
    Tempered,
    /// `(P_F, σ_F, μ)`: F as indices into the simple roots, and the split
    /// `ν = ς + μ` with ς in the span of F and μ orthogonal to F.
    Triple { f: Vec<usize>, sigma: NuParameter, mu: NuParameter },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LanglandsData {
    pub f: Vec<usize>,
    pub descriptor: LanglandsDescriptor,
    pub discrete_series: bool,
    /// Whether the full principal series equals `Y^{τ,ν}` in the closed
    /// chamber (false for B_n/s∘p1 and G2/C2∘p2, where it is not asserted).
    pub principal_series_is_y: bool,
}

fn project_onto_span(rs: &RootSystem, f: &[usize], v: &[Q]) -> Result<Vec<Q>> {
    if f.is_empty() {
        return Ok(rational::zeros(v.len()));
    }
    let roots: Vec<&Vec<Q>> = f.iter().map(|&i| &rs.simple_roots()[i].coords).collect();
    let gram: linalg::Matrix<Q> = roots.iter().map(|a| roots.iter().map(|b| rational::dot(a, b)).collect()).collect();
    let rhs: Vec<Q> = roots.iter().map(|a| rational::dot(v, a)).collect();
    let c = linalg::solve(&gram, &rhs).ok_or_else(|| Error::Consistency("singular Gram matrix".into()))?;
    let mut out = rational::zeros(v.len());
    for (ci, a) in c.iter().zip(roots) {
        for (x, y) in out.iter_mut().zip(a) {
            *x += ci * y;
        }
    }
    Ok(out)
}

pub fn langlands_parameters(lie_type: LieType, tau: &SmallKType, nu: &NuParameter) -> Result<LanglandsData> {
    let rs = check_tau(lie_type, tau)?;
    check_chamber(&rs, nu)?;
    let f: Vec<usize> = rs
        .simple_roots()
        .iter()
        .enumerate()
        .filter(|(_, a)| coroot_pairing(&nu.real_part, &a.coords).is_zero())
        .map(|(i, _)| i)
        .collect();
    let descriptor = if f.len() == rs.rank() {
        LanglandsDescriptor::Tempered
    } else {
        let s_re = project_onto_span(&rs, &f, &nu.real_part)?;
        let s_im = project_onto_span(&rs, &f, &nu.imag_part)?;
        let sigma = NuParameter::new(s_re.clone(), s_im.clone())?;
        let mu = NuParameter::new(rational::sub(&nu.real_part, &s_re), rational::sub(&nu.imag_part, &s_im))?;
        LanglandsDescriptor::Triple { f: f.clone(), sigma, mu }
    };
    let special = matches!((lie_type.series, tau.label), (Series::B, TauLabel::SP1) | (Series::G, TauLabel::C2P2));
    Ok(LanglandsData { f, descriptor, discrete_series: false, principal_series_is_y: !special })
}

/// Shifts `c` with `x_φ + c` vanishing at ν, over the rank-one factor
/// families `x + 2j + 1 ± r` (all j ≥ 0) that τ allows on each root. Used to
/// cross-check the case list in [`cyclicity`].
pub fn factor_family_zeros(lie_type: LieType, tau: &SmallKType, nu: &NuParameter) -> Result<Vec<(Root, Q)>> {
    let rs = check_tau(lie_type, tau)?;
    check_nu(&rs, nu)?;
    let mut out = Vec::new();
    for phi in rs.positive_roots() {
        let (re, im) = nu.coroot_pairing(phi);
        if !im.is_zero() {
            continue;
        }
        let r = dominant_t_weight(tau, phi);
        // x + 2j + 1 − r = 0 with j ≥ 0; the +r family is positive on Re x ≥ 0.
        let j2 = r - qi(1) - re;
        if !j2.is_negative() && (j2 / qi(2)).is_integer() {
            out.push((phi.clone(), -re));
        }
    }
    Ok(out)
}

/// `c·x_φ + constant`, with `x_φ = 2(ν,φ)/(φ,φ)` and `c = ±1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineForm {
    pub root_index: usize,
    pub root: Root,
    pub coeff: i64,
    pub constant: Q,
}

impl AffineForm {
    fn eval_f64(&self, nu: &[C64]) -> C64 {
        let norm = rational::to_f64(&rational::dot(&self.root.coords, &self.root.coords));
        let mut x = C64::new(0.0, 0.0);
        for (n, c) in nu.iter().zip(&self.root.coords) {
            x += n * rational::to_f64(c);
        }
        x * (2.0 / norm) * self.coeff as f64 + rational::to_f64(&self.constant)
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.coeff < 0 { "-" } else { "" };
        write!(f, "{sign}x{}{}", self.root, rational::fmt_offset(&self.constant))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaFactor {
    pub numerator: AffineForm,
    pub denominator: AffineForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaRatioProduct {
    pub lie_type: LieType,
    pub factors: Vec<GammaFactor>,
    pub exponent: Q,
}

struct GaussianParts {
    num: Complex<BigInt>,
    den: Complex<BigInt>,
    num_scale: BigInt,
    den_scale: BigInt,
}

fn gaussian_log(z: &Complex<BigInt>) -> C64 {
    exact_log(&Complex::new(BigQ::from(z.re.clone()), BigQ::from(z.im.clone())))
}

/// A rational function `scalar · Π (x_φ + c)^e` with signed exponents,
/// canonical by construction (zero exponents dropped, keys sorted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedRational {
    pub scalar: Q,
    pub terms: BTreeMap<(usize, Q), i64>,
    roots: BTreeMap<usize, Root>,
}

impl ReducedRational {
    fn one() -> Self {
        Self { scalar: qi(1), terms: BTreeMap::new(), roots: BTreeMap::new() }
    }

    /// Multiplies by `(c·x + s)^e`.
    fn push_linear(&mut self, root_index: usize, root: &Root, c: i64, s: Q, e: i64) {
        let (sign, shift) = if c >= 0 { (1, s) } else { (-1, -s) };
        if sign < 0 && e % 2 != 0 {
            self.scalar = -self.scalar;
        }
        self.roots.entry(root_index).or_insert_with(|| root.clone());
        let entry = self.terms.entry((root_index, shift)).or_insert(0);
        *entry += e;
        if *entry == 0 {
            self.terms.remove(&(root_index, shift));
        }
    }

    fn pow(&self, k: i64) -> Self {
        let mut out = self.clone();
        out.scalar = rational::q(1, 1) * pow_q(self.scalar, k);
        for e in out.terms.values_mut() {
            *e *= k;
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.scalar.is_one() && self.terms.is_empty()
    }

    /// Exact value as `scalar · num · num_scale / (den · den_scale)` with
    /// Gaussian-integer `num`, `den`.
    fn gaussian_parts(&self, nu: &NuParameter) -> Result<GaussianParts> {
        let one = || Complex::new(BigInt::one(), BigInt::zero());
        let mut g = GaussianParts { num: one(), den: one(), num_scale: BigInt::one(), den_scale: BigInt::one() };
        for ((idx, shift), e) in &self.terms {
            let (re, im) = nu.coroot_pairing(&self.roots[idx]);
            let (a, b) = (to_big(&(re + shift)), to_big(&im));
            if a.is_zero() && b.is_zero() {
                return Err(Error::PoleProximity(format!("factor x{}{} vanishes", self.roots[idx], rational::fmt_offset(shift))));
            }
            let l = num::integer::lcm(a.denom().clone(), b.denom().clone());
            let z = Complex::new((&a * BigQ::from(l.clone())).to_integer(), (&b * BigQ::from(l.clone())).to_integer());
            let k = e.unsigned_abs() as u32;
            if *e > 0 {
                g.num *= z.powu(k);
                g.den_scale *= num::pow(l, k as usize);
            } else {
                g.den *= z.powu(k);
                g.num_scale *= num::pow(l, k as usize);
            }
        }
        Ok(g)
    }

    pub fn evaluate(&self, nu: &NuParameter) -> Result<Complex<BigQ>> {
        let GaussianParts { num, den, num_scale, den_scale } = self.gaussian_parts(nu)?;
        // num/den = num·conj(den)/|den|²
        let norm = &den.re * &den.re + &den.im * &den.im;
        let top = num * den.conj();
        let d = BigQ::new(norm * den_scale, BigInt::one()) / to_big(&self.scalar);
        let f = BigQ::from(num_scale);
        Ok(Complex::new(BigQ::from(top.re) * &f / &d, BigQ::from(top.im) * &f / &d))
    }

    /// `ln` of the exact value (principal argument), computed from the
    /// exact unreduced integers; stays finite where the value overflows f64.
    pub fn evaluate_log(&self, nu: &NuParameter) -> Result<C64> {
        let GaussianParts { num, den, num_scale, den_scale } = self.gaussian_parts(nu)?;
        let s = &self.scalar;
        let ln_s = C64::new((rational::to_f64(s)).abs().ln(), if s.is_negative() { std::f64::consts::PI } else { 0.0 });
        let ln = ln_s + gaussian_log(&num) - gaussian_log(&den)
            + C64::new(rational::ln_bigint(&num_scale) - rational::ln_bigint(&den_scale), 0.0);
        let arg = ln.im.rem_euclid(std::f64::consts::TAU);
        Ok(C64::new(ln.re, if arg > std::f64::consts::PI { arg - std::f64::consts::TAU } else { arg }))
    }

    pub fn evaluate_f64(&self, nu: &[C64]) -> C64 {
        let mut acc = C64::new(rational::to_f64(&self.scalar), 0.0);
        for ((idx, shift), e) in &self.terms {
            let form = AffineForm { root_index: *idx, root: self.roots[idx].clone(), coeff: 1, constant: *shift };
            acc *= form.eval_f64(nu).powi(*e as i32);
        }
        acc
    }
}

impl fmt::Display for ReducedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = Vec::new();
        let mut den = Vec::new();
        for ((idx, shift), e) in &self.terms {
            let base = format!("(x{}{})", self.roots[idx], rational::fmt_offset(shift));
            let s = if e.abs() == 1 { base } else { format!("{base}^{}", e.abs()) };
            if *e > 0 {
                num.push(s)
            } else {
                den.push(s)
            }
        }
        let num = if num.is_empty() { "1".to_string() } else { num.join("") };
        write!(f, "{}·{}", self.scalar, num)?;
        if !den.is_empty() {
            write!(f, " / {}", den.join(""))?;
        }
        Ok(())
    }
}

fn pow_q(x: Q, k: i64) -> Q {
    let mut acc = qi(1);
    let base = if k >= 0 { x } else { qi(1) / x };
    for _ in 0..k.abs() {
        acc *= base;
    }
    acc
}

impl GammaRatioProduct {
    /// Applies `Γ(z+1) = zΓ(z)` to every quotient. Requires integral
    /// argument differences and an integral exponent.
    pub fn reduce(&self) -> Result<ReducedRational> {
        let mut base = ReducedRational::one();
        for g in &self.factors {
            let (a, b) = (&g.numerator, &g.denominator);
            if a.root_index != b.root_index || a.coeff != b.coeff {
                return Err(Error::Precondition("Γ quotient with different linear parts".into()));
            }
            let d = a.constant - b.constant;
            if !d.is_integer() {
                return Err(Error::Precondition(format!("argument difference {d} is not an integer")));
            }
            let d = d.to_integer();
            // Γ(b+d)/Γ(b) = Π_{i<d} (b+i); for d < 0, 1/Π_{i<−d} (a+i)
            if d >= 0 {
                for i in 0..d {
                    base.push_linear(b.root_index, &b.root, b.coeff, b.constant + qi(i), 1);
                }
            } else {
                for i in 0..-d {
                    base.push_linear(a.root_index, &a.root, a.coeff, a.constant + qi(i), -1);
                }
            }
        }
        if !self.exponent.is_integer() {
            return Err(Error::Precondition(format!("exponent {} is not an integer", self.exponent)));
        }
        Ok(base.pow(self.exponent.to_integer()))
    }
}

/// `(p(−ν)/p(ν))^k` in reduced form.
pub fn reflection_ratio(p: &FactoredPolynomial, k: i64) -> ReducedRational {
    let mut out = ReducedRational::one();
    for f in &p.factors {
        let m = f.mult as i64;
        out.push_linear(f.root_index, &f.root, -1, f.shift, m);
        out.push_linear(f.root_index, &f.root, 1, f.shift, -m);
    }
    out.pow(k)
}

fn gamma_factors_for(m: u64, root_index: usize, root: &Root) -> Vec<GammaFactor> {
    let form = |coeff: i64, constant: Q| AffineForm { root_index, root: root.clone(), coeff, constant };
    let quot = |n: AffineForm, d: AffineForm| GammaFactor { numerator: n, denominator: d };
    let mut out = Vec::new();
    let top = if m % 4 == 1 { (m - 1) / 4 } else { (m - 3) / 4 } as i64;
    for l in 0..=top {
        for j in 0..l {
            let tj = qi(2 * j);
            out.push(quot(form(1, half() - tj), form(1, q(-3, 2) - tj)));
            out.push(quot(form(1, tj + half()), form(1, tj + q(5, 2))));
        }
    }
    if m % 4 == 3 {
        // (−x + 2k + ½)/(x + 2k + ½) written as two unit-step Γ quotients.
        for k in 0..=top {
            let tk = qi(2 * k);
            out.push(quot(form(-1, tk + q(3, 2)), form(-1, tk + half())));
            out.push(quot(form(1, tk + half()), form(1, tk + q(3, 2))));
        }
    }
    out
}

/// `det A(ν)` on the ξ-isotypic component for `SL(n,ℝ)~` as a product of Γ
/// quotients per positive root, with exponent `2·dim ξ / dim τ`.
pub fn intertwining_det(n: usize, xi_weight: &[Q]) -> Result<GammaRatioProduct> {
    let data = pxi_type_a_data(n, xi_weight)?;
    let rs = RootSystem::build(data.tau.lie_type)?;
    let mut factors = Vec::new();
    for (idx, root) in rs.positive_roots().iter().enumerate() {
        for &j in &data.js {
            factors.extend(gamma_factors_for(j, idx, root));
        }
    }
    Ok(GammaRatioProduct {
        lie_type: rs.lie_type(),
        factors,
        exponent: Q::new(2 * data.dim_xi as i64, data.tau.dim as i64),
    })
}

pub const POLE_TOLERANCE: f64 = 1e-8;

/// Floating-point evaluation through log-gamma; refuses arguments within
/// `1e-8` of a pole.
pub fn numeric_gamma_eval(g: &GammaRatioProduct, nu: &[C64]) -> Result<C64> {
    Ok(numeric_gamma_log(g, nu)?.exp())
}

/// Logarithm of [`numeric_gamma_eval`] (imaginary part not reduced mod 2π),
/// usable where the value itself leaves f64 range.
pub fn numeric_gamma_log(g: &GammaRatioProduct, nu: &[C64]) -> Result<C64> {
    let mut sum = C64::new(0.0, 0.0);
    for f in &g.factors {
        let a = f.numerator.eval_f64(nu);
        let b = f.denominator.eval_f64(nu);
        for z in [a, b] {
            if pole_distance(z) < POLE_TOLERANCE {
                return Err(Error::PoleProximity(format!("{} + {}i", z.re, z.im)));
            }
        }
        sum += ln_gamma(a) - ln_gamma(b);
    }
    Ok(sum * rational::to_f64(&g.exponent))
}

/// `ln z` for an exact nonzero complex rational, with the principal argument.
pub fn exact_log(z: &Complex<BigQ>) -> C64 {
    let norm2 = &z.re * &z.re + &z.im * &z.im;
    let ln_abs = 0.5 * rational::ln_abs_big(&norm2);
    // Scale both parts by the same power of two before taking atan2.
    let exp2 = |x: &BigQ| if x.is_zero() { i64::MIN } else { x.numer().bits() as i64 - x.denom().bits() as i64 };
    let e = exp2(&z.re).max(exp2(&z.im));
    let shift = |x: &BigQ| -> f64 {
        let p = BigQ::from(num::pow(BigInt::from(2), e.unsigned_abs() as usize));
        rational::big_to_f64(&if e >= 0 { x / p } else { x * p })
    };
    C64::new(ln_abs, shift(&z.im).atan2(shift(&z.re)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummaryRow {
    pub family: String,
    pub tau: String,
    pub closed_chamber: String,
    pub unitary: String,
    /// `(type, root, condition)` at the probes where the generic verdict fails.
    pub witnesses: Vec<(String, String, String)>,
}

fn probes(rs: &RootSystem) -> Vec<Vec<Q>> {
    let mut out = vec![rational::zeros(rs.ambient_dim()), rs.rho().coords.clone()];
    for w in rs.fundamental_weights() {
        out.push(w.clone());
        out.push(rational::scale(w, half()));
    }
    out
}

/// Sweeps the decision procedures over representative types and probe
/// parameters, one row per (family, τ).
pub fn summary_table() -> Result<Vec<SummaryRow>> {
    let lt = |s, n| LieType::new(s, n);
    let families: Vec<(&str, Vec<LieType>, Option<TauLabel>)> = vec![
        (
            "Simply Laced",
            vec![lt(Series::A, 2)?, lt(Series::A, 5)?, lt(Series::D, 4)?, lt(Series::D, 5)?, lt(Series::E, 6)?, lt(Series::E, 7)?, lt(Series::E, 8)?],
            None,
        ),
        ("B_n (n>=3)", vec![lt(Series::B, 3)?, lt(Series::B, 5)?], Some(TauLabel::SP1)),
        ("B_n (n>=3)", vec![lt(Series::B, 3)?, lt(Series::B, 4)?, lt(Series::B, 5)?], Some(TauLabel::SP2)),
        ("F4", vec![lt(Series::F, 4)?], Some(TauLabel::C2P2)),
        ("G2", vec![lt(Series::G, 2)?], Some(TauLabel::C2P1)),
        ("G2", vec![lt(Series::G, 2)?], Some(TauLabel::C2P2)),
    ];
    let mut rows = Vec::new();
    for (family, types, label) in families {
        let mut always_cyclic = true;
        let mut always_irreducible = true;
        let mut witnesses = Vec::new();
        for t in &types {
            let rs = RootSystem::build(*t)?;
            for tau in classify(*t)? {
                if label.is_some_and(|l| l != tau.label) {
                    continue;
                }
                for p in probes(&rs) {
                    let v = cyclicity(*t, &tau, &NuParameter::real(p.clone()))?;
                    if !v.cyclic {
                        always_cyclic = false;
                        for (r, cond) in v.violated_roots {
                            witnesses.push((t.name(), r.to_string(), format!("not cyclic: {cond}")));
                        }
                    }
                    let u = unitary_irreducible(*t, &tau, &NuParameter::imaginary(p))?;
                    if !u.irreducible {
                        always_irreducible = false;
                        for r in u.witnesses {
                            witnesses.push((t.name(), r.to_string(), "reducible: 2(ν,α)/(α,α) = 0".into()));
                        }
                    }
                }
            }
        }
        witnesses.sort();
        witnesses.dedup();
        rows.push(SummaryRow {
            family: family.to_string(),
            tau: label.map(|l| l.to_string()).unwrap_or_else(|| "Any".into()),
            closed_chamber: if always_cyclic { "Cyclic" } else { "Not always Cyclic" }.into(),
            unitary: if always_irreducible { "Irreducible" } else { "Sometimes reducible" }.into(),
            witnesses,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pxi::pxi_type_a;
    use crate::small_k::lookup;

    fn lt(s: Series, n: usize) -> LieType {
        LieType::new(s, n).unwrap()
    }

    #[test]
    fn cyclicity_examples() {
        let e8 = lt(Series::E, 8);
        let tau = &classify(e8).unwrap()[0];
        assert!(cyclicity(e8, tau, &NuParameter::real(rational::zeros(8))).unwrap().cyclic);

        let b3 = lt(Series::B, 3);
        let sp1 = lookup(b3, TauLabel::SP1).unwrap();
        let nu = NuParameter::real(vec![qi(2), qi(1), qi(0)]);
        let v = cyclicity(b3, &sp1, &nu).unwrap();
        assert!(!v.cyclic);
        assert_eq!(v.violated_roots.len(), 1);
        assert_eq!(v.violated_roots[0].0.coords, vec![qi(0), qi(0), qi(1)]);

        let g2 = lt(Series::G, 2);
        let rs = RootSystem::build(g2).unwrap();
        let p2 = lookup(g2, TauLabel::C2P2).unwrap();
        let i = rs.simple_roots().iter().position(|r| r.is_short()).unwrap();
        let nu = NuParameter::real(rational::scale(&rs.fundamental_weights()[i], half()));
        assert!(!cyclicity(g2, &p2, &nu).unwrap().cyclic);
        let p1 = lookup(g2, TauLabel::C2P1).unwrap();
        assert!(cyclicity(g2, &p1, &nu).unwrap().cyclic);

        let outside = NuParameter::real(rs.rho().coords.iter().map(|x| -x).collect());
        assert_eq!(cyclicity(g2, &p1, &outside), Err(Error::OutsideChamber));
    }

    #[test]
    fn unitary_examples() {
        let g2 = lt(Series::G, 2);
        for tau in classify(g2).unwrap() {
            let nu = NuParameter::imaginary(vec![qi(1), qi(0), qi(-1)]);
            assert!(unitary_irreducible(g2, &tau, &nu).unwrap().irreducible);
        }
        let b5 = lt(Series::B, 5);
        let sp1 = lookup(b5, TauLabel::SP1).unwrap();
        let zero = NuParameter::real(rational::zeros(5));
        let v = unitary_irreducible(b5, &sp1, &zero).unwrap();
        assert!(!v.irreducible);
        assert_eq!(v.witnesses.len(), 5);
        let sp2 = lookup(b5, TauLabel::SP2).unwrap();
        assert!(unitary_irreducible(b5, &sp2, &zero).unwrap().irreducible);
        let re = NuParameter::real(vec![qi(1); 5]);
        assert_eq!(unitary_irreducible(b5, &sp2, &re), Err(Error::NonzeroRealPart));
    }

    #[test]
    fn langlands_examples() {
        let a2 = lt(Series::A, 2);
        let tau = &classify(a2).unwrap()[0];
        let d = langlands_parameters(a2, tau, &NuParameter::imaginary(vec![qi(1), qi(0), qi(-1)])).unwrap();
        assert_eq!(d.descriptor, LanglandsDescriptor::Tempered);
        assert!(!d.discrete_series);

        let rs = RootSystem::build(a2).unwrap();
        let nu = NuParameter::real(rs.rho().coords.clone());
        match langlands_parameters(a2, tau, &nu).unwrap().descriptor {
            LanglandsDescriptor::Triple { f, mu, .. } => {
                assert!(f.is_empty());
                assert_eq!(mu, nu);
            }
            other => panic!("unexpected {other:?}"),
        }

        // orthogonal to α1 only: ν = ω2
        let nu = NuParameter::real(rs.fundamental_weights()[1].clone());
        match langlands_parameters(a2, tau, &nu).unwrap().descriptor {
            LanglandsDescriptor::Triple { f, sigma, mu } => {
                assert_eq!(f, vec![0]);
                assert!(sigma.real_part.iter().all(Zero::is_zero));
                assert_eq!(mu.real_part, nu.real_part);
            }
            other => panic!("unexpected {other:?}"),
        }
        let nu = NuParameter::real(vec![qi(1), qi(1), qi(-2)]);
        match langlands_parameters(a2, tau, &nu).unwrap().descriptor {
            LanglandsDescriptor::Triple { f, mu, .. } => {
                assert_eq!(f, vec![0]);
                assert!(coroot_pairing(&mu.real_part, &rs.simple_roots()[0].coords).is_zero());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn gamma_reduction_matches_ratio() {
        let g = intertwining_det(3, &[q(5, 2)]).unwrap();
        let p = pxi_type_a(3, &[q(5, 2)]).unwrap();
        assert_eq!(g.exponent, qi(6));
        let red = g.reduce().unwrap();
        assert_eq!(red, reflection_ratio(&p, 6));

        let rs = RootSystem::build(p.lie_type).unwrap();
        let nu = NuParameter::real(rational::scale(&rs.fundamental_weights()[0], q(7, 3)));
        let lhs = red.evaluate(&nu).unwrap();
        let num = crate::pxi::evaluate(&p, &nu.negated());
        let den = crate::pxi::evaluate(&p, &nu);
        let mut rhs = Complex::new(BigQ::one(), BigQ::zero());
        for _ in 0..6 {
            rhs = rhs * num.clone() / den.clone();
        }
        assert_eq!(lhs, rhs);

        assert!(intertwining_det(3, &[half()]).unwrap().factors.is_empty());
        assert!(intertwining_det(3, &[half()]).unwrap().reduce().unwrap().is_one());
    }

    #[test]
    fn gamma_slice_numeric() {
        let rs = RootSystem::build(lt(Series::A, 1)).unwrap();
        let root = rs.positive_roots()[0].clone();
        let g = GammaRatioProduct { lie_type: rs.lie_type(), factors: gamma_factors_for(5, 0, &root), exponent: qi(1) };
        // x_α = 2(ν,α)/(α,α) = 3 at ν = 3/2·α
        let nu = [C64::new(1.5, 0.0), C64::new(-1.5, 0.0)];
        let val = numeric_gamma_eval(&g, &nu).unwrap();
        let expect = (2.5 * 1.5) / (3.5 * 4.5);
        assert!((val.re - expect).abs() < 1e-12 * expect && val.im.abs() < 1e-12);
        let exact = g.reduce().unwrap().evaluate_f64(&nu);
        assert!((exact.re - expect).abs() < 1e-14);

        let empty = GammaRatioProduct { lie_type: rs.lie_type(), factors: vec![], exponent: qi(1) };
        assert_eq!(numeric_gamma_eval(&empty, &nu).unwrap(), C64::new(1.0, 0.0));
        let pole = [C64::new(0.75, 0.0), C64::new(-0.75, 0.0)];
        assert!(matches!(numeric_gamma_eval(&g, &pole), Err(Error::PoleProximity(_))));
    }

    #[test]
    fn factor_zeros_track_cyclicity() {
        let b3 = lt(Series::B, 3);
        let sp1 = lookup(b3, TauLabel::SP1).unwrap();
        let nu = NuParameter::real(vec![qi(2), qi(1), qi(0)]);
        let zeros = factor_family_zeros(b3, &sp1, &nu).unwrap();
        let v = cyclicity(b3, &sp1, &nu).unwrap();
        let a: Vec<_> = zeros.iter().map(|(r, _)| r.clone()).collect();
        let b: Vec<_> = v.violated_roots.iter().map(|(r, _)| r.clone()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn summary() {
        let rows = summary_table().unwrap();
        let got: Vec<(&str, &str, &str)> =
            rows.iter().map(|r| (r.tau.as_str(), r.closed_chamber.as_str(), r.unitary.as_str())).collect();
        assert_eq!(
            got,
            vec![
                ("Any", "Cyclic", "Irreducible"),
                ("s∘p1", "Not always Cyclic", "Sometimes reducible"),
                ("s∘p2", "Cyclic", "Irreducible"),
                ("C2∘p2", "Cyclic", "Irreducible"),
                ("C2∘p1", "Cyclic", "Irreducible"),
                ("C2∘p2", "Not always Cyclic", "Irreducible"),
            ]
        );
    }
}
