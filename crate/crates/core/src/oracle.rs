//! Brute-force checks at rank one.
//!
//! The order-8 group ⁰M ⊂ SU(2) acts on the symmetric-power model of each
//! SU(2) irrep by substitution. Invariant counts, block structure and torus
//! weights are read off from explicit Gaussian-rational matrices and compared
//! with the closed forms used elsewhere in the crate.

use std::collections::BTreeMap;

use num::{Complex, One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rank_one::shifts_from_dominant_weights;
use crate::rational::{half, q, qi, Q};
use crate::rep_theory::{tensor_decompose, Irrep};

pub type GaussQ = Complex<Q>;
pub type Mat2 = [[GaussQ; 2]; 2];

fn g(re: i64, im: i64) -> GaussQ {
    Complex::new(qi(re), qi(im))
}

/// `±Id, ±diag(i,−i), ±[[0,1],[−1,0]], ±[[0,i],[i,0]]`.
pub fn zero_m() -> Vec<Mat2> {
    let base: [Mat2; 4] = [
        [[g(1, 0), g(0, 0)], [g(0, 0), g(1, 0)]],
        [[g(0, 1), g(0, 0)], [g(0, 0), g(0, -1)]],
        [[g(0, 0), g(1, 0)], [g(-1, 0), g(0, 0)]],
        [[g(0, 0), g(0, 1)], [g(0, 1), g(0, 0)]],
    ];
    let mut out = Vec::with_capacity(8);
    for m in base {
        out.push(m);
        out.push(m.map(|row| row.map(|x| -x)));
    }
    out
}

pub fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[GaussQ::zero(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// Inverse of an SU(2) element: its conjugate transpose.
pub fn mat2_inv(a: &Mat2) -> Mat2 {
    [[a[0][0].conj(), a[1][0].conj()], [a[0][1].conj(), a[1][1].conj()]]
}

/// Multiplication table as indices into [`zero_m`]; `None` if not closed.
pub fn q8_table() -> Option<Vec<Vec<usize>>> {
    let els = zero_m();
    let mut table = Vec::new();
    for a in &els {
        let mut row = Vec::new();
        for b in &els {
            let p = mat2_mul(a, b);
            row.push(els.iter().position(|e| *e == p)?);
        }
        table.push(row);
    }
    Some(table)
}

/// The SU(2) irrep of highest weight `p/2` on homogeneous polynomials of
/// degree `p`; basis `x^a y^{p−a}`, `a = 0..=p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Su2Model {
    pub p: u32,
}

impl Su2Model {
    pub fn dim(&self) -> usize {
        self.p as usize + 1
    }

    pub fn highest_weight(&self) -> Q {
        q(self.p as i64, 2)
    }

    /// Torus weight of `x^a y^{p−a}`.
    pub fn weight(&self, a: usize) -> Q {
        q(2 * a as i64 - self.p as i64, 2)
    }

    /// Matrix of the substitution `x ↦ ax + cy`, `y ↦ bx + dy` for
    /// `m = [[a,b],[c,d]]`; column `k` is the image of `x^k y^{p−k}`.
    pub fn action(&self, m: &Mat2) -> Matrix<GaussQ> {
        let p = self.p as usize;
        let (a, b, c, d) = (m[0][0], m[0][1], m[1][0], m[1][1]);
        let mut out = vec![vec![GaussQ::zero(); p + 1]; p + 1];
        for k in 0..=p {
            // polynomial in x (index = power of x), y implicit
            let mut poly = vec![GaussQ::one()];
            for _ in 0..k {
                poly = mul_linear(&poly, a, c);
            }
            for _ in 0..p - k {
                poly = mul_linear(&poly, b, d);
            }
            for (j, coeff) in poly.into_iter().enumerate() {
                out[j][k] = coeff;
            }
        }
        out
    }
}

/// `poly · (s·x + t·y)` in the x-power representation.
fn mul_linear(poly: &[GaussQ], s: GaussQ, t: GaussQ) -> Vec<GaussQ> {
    let mut out = vec![GaussQ::zero(); poly.len() + 1];
    for (i, c) in poly.iter().enumerate() {
        out[i + 1] += c * s;
        out[i] += c * t;
    }
    out
}

fn trace(m: &Matrix<GaussQ>) -> GaussQ {
    (0..m.len()).map(|i| m[i][i]).fold(GaussQ::zero(), |a, b| a + b)
}

fn averaging_projector(model: &Su2Model) -> Matrix<GaussQ> {
    let n = model.dim();
    let mut p = vec![vec![GaussQ::zero(); n]; n];
    for m in zero_m() {
        let a = model.action(&m);
        for i in 0..n {
            for j in 0..n {
                p[i][j] += a[i][j];
            }
        }
    }
    let eighth = Complex::new(q(1, 8), qi(0));
    p.iter().map(|row| row.iter().map(|x| x * eighth).collect()).collect()
}

/// Connected components of the graph joining basis vectors that some group
/// element mixes.
fn blocks(model: &Su2Model) -> Vec<Vec<usize>> {
    let n = model.dim();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for m in zero_m() {
        let a = model.action(&m);
        for i in 0..n {
            for j in 0..n {
                if !a[i][j].is_zero() {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    out
}

fn restrict(m: &Matrix<GaussQ>, idx: &[usize]) -> Matrix<GaussQ> {
    idx.iter().map(|&i| idx.iter().map(|&j| m[i][j]).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantCounts {
    pub by_character: u64,
    pub by_projector_rank: u64,
    pub by_blocks: u64,
}

/// The three independent invariant counts for `Su2Model(p)`.
pub fn invariant_counts(p: u32) -> InvariantCounts {
    let model = Su2Model { p };
    let mut chi = GaussQ::zero();
    for m in zero_m() {
        chi += trace(&model.action(&m));
    }
    let avg = chi / Complex::new(qi(8), qi(0));
    let by_character = avg.re.to_integer() as u64;
    let proj = averaging_projector(&model);
    let by_projector_rank = linalg::rank(&proj) as u64;
    let by_blocks = blocks(&model).iter().map(|b| linalg::rank(&restrict(&proj, b)) as u64).sum();
    InvariantCounts { by_character, by_projector_rank, by_blocks }
}

/// `l(γ)` for `γ = p/2` (p even) and the dominant torus weights of the blocks
/// carrying invariants.
pub fn invariants_dim(p: u32) -> Result<(u64, Vec<Q>)> {
    if p % 2 != 0 {
        return Err(Error::Precondition(format!("invariants are counted for even p, got {p}")));
    }
    let counts = invariant_counts(p);
    if counts.by_character != counts.by_projector_rank || counts.by_character != counts.by_blocks {
        return Err(Error::Consistency(format!("invariant counts disagree for p = {p}: {counts:?}")));
    }
    let model = Su2Model { p };
    let proj = averaging_projector(&model);
    let mut weights = Vec::new();
    for b in blocks(&model) {
        let r = linalg::rank(&restrict(&proj, &b));
        if r > 0 {
            let w = b.iter().map(|&a| model.weight(a)).max().expect("nonempty block");
            weights.extend(std::iter::repeat(w).take(r));
        }
    }
    weights.sort();
    Ok((counts.by_character, weights))
}

/// Decomposes `Su2Model(p)` (p odd) into blocks stable under the torus and
/// ⁰M, checks that each block carries τ's ⁰M character, and returns the
/// dominant weights.
pub fn genuine_weight_list(p: u32) -> Result<Vec<Q>> {
    if p % 2 == 0 {
        return Err(Error::Precondition(format!("genuine weights need odd p, got {p}")));
    }
    let model = Su2Model { p };
    let tau = Su2Model { p: 1 };
    let els = zero_m();
    let mut out = Vec::new();
    for b in blocks(&model) {
        for m in &els {
            let chi = trace(&restrict(&model.action(m), &b));
            let chi_tau = trace(&tau.action(m));
            if chi != chi_tau {
                return Err(Error::Consistency(format!("block {b:?} of p = {p} is not of type τ")));
            }
        }
        out.push(b.iter().map(|&a| model.weight(a)).max().expect("nonempty block"));
    }
    out.sort();
    Ok(out)
}

/// Per-root factor shifts for `SL(3,ℝ)~`, `ξ = p/2`, read off from the
/// oracle's dominant weights.
pub fn rank_one_shifts(p: u32) -> Result<Vec<Q>> {
    shifts_from_dominant_weights(&genuine_weight_list(p)?, half())
}

/// `g·H·g⁻¹ = ±H` for `H = diag(i,−i)` and every `g ∈ ⁰M`.
pub fn conjugation_signs() -> Vec<i8> {
    let h: Mat2 = [[g(0, 1), g(0, 0)], [g(0, 0), g(0, -1)]];
    let minus_h = h.map(|row| row.map(|x| -x));
    zero_m()
        .iter()
        .map(|m| {
            let c = mat2_mul(&mat2_mul(m, &h), &mat2_inv(m));
            if c == h {
                1
            } else if c == minus_h {
                -1
            } else {
                0
            }
        })
        .collect()
}

/// Every block of `Su2Model(p)` carries weights `{m, −m}` (or just `{0}`).
pub fn blocks_are_symmetric(p: u32) -> bool {
    let model = Su2Model { p };
    blocks(&model).iter().all(|b| {
        let mut w: Vec<Q> = b.iter().map(|&a| model.weight(a)).collect();
        w.sort();
        match w.as_slice() {
            [x] => x.is_zero(),
            [x, y] => *x == -*y && !x.is_zero(),
            _ => false,
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaContribution {
    pub p: u32,
    pub l: u64,
    pub weights: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightComparisonEntry {
    pub p: u32,
    pub xi_weights: Vec<String>,
    pub gammas: Vec<GammaContribution>,
    /// `(δ^ξ, δ^γ)` pairs with `δ^γ = δ^ξ ± ½`.
    pub matching: Vec<(String, String)>,
    pub unmatched_xi: Vec<String>,
    pub unmatched_gamma: Vec<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityEntry {
    pub p: u32,
    pub n_xi: u64,
    pub gammas: Vec<GammaContribution>,
    pub sum_l: u64,
    pub pass: bool,
}

fn strs(v: &[Q]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

/// The γ with `V_ξ ⊂ V_γ ⊗ V_τ` and `l(γ) > 0`.
fn gamma_candidates(p: u32) -> Result<Vec<(u32, u64, Vec<Q>)>> {
    let t = tensor_decompose(&Irrep::su2(p as u64), &Irrep::su2(1))?;
    let mut out = Vec::new();
    for (ir, _) in t.constituents {
        let qq = (ir.highest_weight[0] * qi(2)).to_integer() as u32;
        let (l, w) = invariants_dim(qq)?;
        if l > 0 {
            out.push((qq, l, w));
        }
    }
    Ok(out)
}

fn odd_range(p_max: u32) -> Result<Vec<u32>> {
    if p_max < 3 || p_max % 2 == 0 {
        return Err(Error::Precondition(format!("p_max must be odd and >= 3, got {p_max}")));
    }
    Ok((1..=p_max).step_by(2).collect())
}

pub fn verify_weight_comparison(p_max: u32) -> Result<Vec<WeightComparisonEntry>> {
    let mut out = Vec::new();
    for p in odd_range(p_max)? {
        let xi = genuine_weight_list(p)?;
        let gammas = gamma_candidates(p)?;
        let mut pool: Vec<Q> = gammas.iter().flat_map(|(_, _, w)| w.clone()).collect();
        pool.sort();
        let mut matching = Vec::new();
        let mut unmatched_xi = Vec::new();
        for d in &xi {
            let pick = [d - half(), d + half()].into_iter().find_map(|c| pool.iter().position(|x| *x == c));
            match pick {
                Some(i) => matching.push((d.to_string(), pool.remove(i).to_string())),
                None => unmatched_xi.push(d.to_string()),
            }
        }
        let pass = unmatched_xi.is_empty() && pool.is_empty();
        out.push(WeightComparisonEntry {
            p,
            xi_weights: strs(&xi),
            gammas: gammas.into_iter().map(|(p, l, w)| GammaContribution { p, l, weights: strs(&w) }).collect(),
            matching,
            unmatched_xi,
            unmatched_gamma: strs(&pool),
            pass,
        });
    }
    Ok(out)
}

pub fn verify_multiplicity_identity(p_max: u32) -> Result<Vec<MultiplicityEntry>> {
    let mut out = Vec::new();
    for p in odd_range(p_max)? {
        let n_xi = genuine_weight_list(p)?.len() as u64;
        let gammas = gamma_candidates(p)?;
        let sum_l = gammas.iter().map(|(_, l, _)| l).sum();
        out.push(MultiplicityEntry {
            p,
            n_xi,
            gammas: gammas.into_iter().map(|(p, l, w)| GammaContribution { p, l, weights: strs(&w) }).collect(),
            sum_l,
            pass: n_xi == sum_l,
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// The full rank-one suite up to `p_max`.
pub fn run_sl3_suite(p_max: u32) -> Result<Vec<PropertyResult>> {
    let mut out = Vec::new();
    let table = q8_table();
    out.push(PropertyResult {
        name: "q8_closure".into(),
        pass: table.is_some() && zero_m().len() == 8,
        detail: "8 elements, closed under multiplication".into(),
    });
    let signs = conjugation_signs();
    out.push(PropertyResult {
        name: "torus_conjugation_signs".into(),
        pass: signs.iter().all(|s| *s == 1 || *s == -1),
        detail: format!("{signs:?}"),
    });
    let even: Vec<u32> = (0..=p_max + 1).step_by(2).collect();
    let bad: Vec<u32> = even
        .iter()
        .copied()
        .filter(|&p| {
            let c = invariant_counts(p);
            c.by_character != c.by_projector_rank || c.by_character != c.by_blocks
        })
        .collect();
    out.push(PropertyResult {
        name: "invariant_counts_agree".into(),
        pass: bad.is_empty(),
        detail: format!("even p <= {}; disagreements {bad:?}", p_max + 1),
    });
    let asym: Vec<u32> = (0..=p_max + 1).filter(|&p| !blocks_are_symmetric(p)).collect();
    out.push(PropertyResult {
        name: "block_weights_symmetric".into(),
        pass: asym.is_empty(),
        detail: format!("failures {asym:?}"),
    });
    let mut bad_genuine = Vec::new();
    for p in (1..=p_max).step_by(2) {
        let w = genuine_weight_list(p)?;
        let expect: Vec<Q> = (0..=(p as i64 - 1) / 2).map(|k| q(2 * k + 1, 2)).collect();
        if w != expect {
            bad_genuine.push(p);
        }
    }
    out.push(PropertyResult {
        name: "genuine_weights".into(),
        pass: bad_genuine.is_empty(),
        detail: format!("failures {bad_genuine:?}"),
    });
    let wc = verify_weight_comparison(p_max)?;
    out.push(PropertyResult {
        name: "weight_comparison".into(),
        pass: wc.iter().all(|e| e.pass),
        detail: format!("failures {:?}", wc.iter().filter(|e| !e.pass).map(|e| e.p).collect::<Vec<_>>()),
    });
    let mi = verify_multiplicity_identity(p_max)?;
    out.push(PropertyResult {
        name: "multiplicity_identity".into(),
        pass: mi.iter().all(|e| e.pass),
        detail: format!("failures {:?}", mi.iter().filter(|e| !e.pass).map(|e| e.p).collect::<Vec<_>>()),
    });
    Ok(out)
}
