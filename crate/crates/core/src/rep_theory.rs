//! Finite-dimensional representations of the compact groups that occur as K.
//!
//! Highest weights are kept in ε-coordinates throughout. For a product group
//! the weight is the concatenation of the two factors' coordinates.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, dot, half, qi, to_big, BigQ, Q};
use crate::root_system::{coroot_pairing, reflect, LieType, RootSystem, Series};

pub const DEFAULT_DIM_CAP: u64 = 100_000;

/// The dimension cap, overridable through `PXI_DIM_CAP`.
pub fn dim_cap() -> u64 {
    std::env::var("PXI_DIM_CAP")
        .ok()
        .and_then(|s| s.trim().parse::<u64>().ok())
        .filter(|&c| c > 0)
        .unwrap_or(DEFAULT_DIM_CAP)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    Spin(usize),
    Pin(usize),
    SU(usize),
    /// Compact symplectic group of rank `n` (so `Sp(1) = SU(2)`).
    Sp(usize),
    Product(Box<Group>, Box<Group>),
}

impl Group {
    /// Number of ε-coordinates a highest weight has.
    pub fn weight_len(&self) -> usize {
        match self {
            Group::Spin(n) | Group::Pin(n) => n / 2,
            Group::SU(n) => *n,
            Group::Sp(n) => *n,
            Group::Product(a, b) => a.weight_len() + b.weight_len(),
        }
    }

    fn lie_types(&self) -> Result<Vec<LieType>> {
        Ok(match self {
            Group::Spin(n) | Group::Pin(n) => {
                let n = *n;
                if n < 3 {
                    return Err(Error::Unsupported(format!("Spin({n}) and Pin({n}) are not handled; need n >= 3")));
                }
                if n % 2 == 1 {
                    vec![LieType::compact(Series::B, n / 2)?]
                } else {
                    vec![LieType::compact(Series::D, n / 2)?]
                }
            }
            Group::SU(n) => {
                if *n < 2 {
                    return Err(Error::Unsupported("SU(n) needs n >= 2".into()));
                }
                vec![LieType::compact(Series::A, n - 1)?]
            }
            Group::Sp(n) => vec![LieType::compact(Series::C, *n)?],
            Group::Product(a, b) => {
                let mut v = a.lie_types()?;
                v.extend(b.lie_types()?);
                v
            }
        })
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Spin(n) => write!(f, "Spin({n})"),
            Group::Pin(n) => write!(f, "Pin({n})"),
            Group::SU(n) => write!(f, "SU({n})"),
            Group::Sp(n) => write!(f, "Sp({n})"),
            Group::Product(a, b) => write!(f, "{a}×{b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Irrep {
    pub group: Group,
    /// ε-coordinates.
    pub highest_weight: Vec<Q>,
    /// `±1` for Pin(2k+1) and for Pin(2k) irreps whose last coordinate is 0.
    pub pin_epsilon: Option<i8>,
}

impl Irrep {
    pub fn new(group: Group, highest_weight: Vec<Q>) -> Self {
        Self { group, highest_weight, pin_epsilon: None }
    }

    pub fn spin(n: usize, highest_weight: Vec<Q>) -> Self {
        Self::new(Group::Spin(n), highest_weight)
    }

    /// The SU(2) = Spin(3) irrep of highest weight `p/2`.
    pub fn su2(p: u64) -> Self {
        Self::spin(3, vec![rational::q(p as i64, 2)])
    }

    pub fn pin(n: usize, highest_weight: Vec<Q>, pin_epsilon: Option<i8>) -> Self {
        Self { group: Group::Pin(n), highest_weight, pin_epsilon }
    }

    /// `(½,…,½)`: the spin representation of Spin(2k+1), or the half-spin
    /// representation of Spin(2k) with an even number of minus signs.
    pub fn spin_rep(n: usize) -> Self {
        Self::spin(n, vec![half(); n / 2])
    }

    pub fn is_genuine_spin(&self) -> bool {
        matches!(self.group, Group::Spin(_) | Group::Pin(_))
            && !self.highest_weight.is_empty()
            && self.highest_weight.iter().all(rational::is_half_odd)
    }
}

impl fmt::Display for Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.group, rational::fmt_q_list(&self.highest_weight))?;
        if let Some(e) = self.pin_epsilon {
            write!(f, "^{}", if e > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BranchingList {
    pub constituents: Vec<(Irrep, u64)>,
}

impl BranchingList {
    pub fn total_dim(&self) -> Result<u64> {
        let mut total = 0u64;
        for (ir, m) in &self.constituents {
            total += m * weyl_dim(ir)?;
        }
        Ok(total)
    }

    pub fn multiplicity_of(&self, highest_weight: &[Q]) -> u64 {
        self.constituents
            .iter()
            .filter(|(ir, _)| ir.highest_weight == highest_weight)
            .map(|(_, m)| m)
            .sum()
    }
}

/// Root data of a (possibly non-simple) compact group laid out on the
/// concatenated ε-coordinates.
#[derive(Clone, Debug)]
pub struct CompactRoots {
    dim: usize,
    /// Per-coordinate weight of the invariant form.
    form: Vec<Q>,
    simple: Vec<Vec<Q>>,
    /// Positive roots as (ε-coordinates, simple-root coefficients).
    positive: Vec<(Vec<Q>, Vec<i64>)>,
    rho: Vec<Q>,
}

impl CompactRoots {
    pub fn for_group(g: &Group) -> Result<Self> {
        let mut out = CompactRoots { dim: 0, form: vec![], simple: vec![], positive: vec![], rho: vec![] };
        let mut simple_offset = 0;
        for t in g.lie_types()? {
            let rs = RootSystem::build(t)?;
            let scale = rs.inner(&unit_vec(rs.ambient_dim(), 0), &unit_vec(rs.ambient_dim(), 0));
            let (d0, d) = (out.dim, rs.ambient_dim());
            let pad = |v: &[Q], total: usize| -> Vec<Q> {
                let mut w = rational::zeros(total);
                w[d0..d0 + d].clone_from_slice(v);
                w
            };
            let new_dim = d0 + d;
            for v in out.simple.iter_mut() {
                v.resize(new_dim, Q::zero());
            }
            for (v, _) in out.positive.iter_mut() {
                v.resize(new_dim, Q::zero());
            }
            out.rho.resize(new_dim, Q::zero());
            let r_old = simple_offset;
            let r_new = r_old + rs.rank();
            for (_, c) in out.positive.iter_mut() {
                c.resize(r_new, 0);
            }
            for s in rs.simple_roots() {
                out.simple.push(pad(&s.coords, new_dim));
            }
            for p in rs.positive_roots() {
                let mut c = vec![0; r_new];
                c[r_old..r_new].clone_from_slice(&p.simple_coeffs);
                out.positive.push((pad(&p.coords, new_dim), c));
            }
            for (i, x) in rs.rho().coords.iter().enumerate() {
                out.rho[d0 + i] = *x;
            }
            out.form.extend(std::iter::repeat(scale).take(d));
            out.dim = new_dim;
            simple_offset = r_new;
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn rho(&self) -> &[Q] {
        &self.rho
    }

    pub fn inner(&self, a: &[Q], b: &[Q]) -> Q {
        a.iter().zip(b).zip(&self.form).map(|((x, y), s)| x * y * s).sum()
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Vec<Q>> {
        self.positive.iter().map(|(v, _)| v)
    }

    pub fn is_dominant_integral(&self, w: &[Q]) -> bool {
        self.simple.iter().all(|a| {
            let c = coroot_pairing(w, a);
            c.is_integer() && !c.is_negative()
        })
    }

    /// Reflects `v` into the dominant chamber. Returns the image, the sign
    /// `(-1)^{length}` and whether the image is on a wall.
    pub fn dominant_conjugate(&self, v: &[Q]) -> (Vec<Q>, i64, bool) {
        let mut v = v.to_vec();
        let mut sign = 1;
        while let Some(a) = self.simple.iter().find(|a| coroot_pairing(&v, a).is_negative()) {
            v = reflect(&v, a);
            sign = -sign;
        }
        let wall = self.simple.iter().any(|a| coroot_pairing(&v, a).is_zero());
        (v, sign, wall)
    }
}

fn unit_vec(n: usize, i: usize) -> Vec<Q> {
    let mut v = rational::zeros(n);
    v[i] = qi(1);
    v
}

fn check_weight(ir: &Irrep, roots: &CompactRoots) -> Result<()> {
    let len = ir.group.weight_len();
    if ir.highest_weight.len() != len {
        return Err(Error::DimensionMismatch { expected: len, found: ir.highest_weight.len() });
    }
    if !roots.is_dominant_integral(&ir.highest_weight) {
        return Err(Error::NotDominant(format!("{ir}")));
    }
    Ok(())
}

fn weyl_dim_big(roots: &CompactRoots, lambda: &[Q]) -> BigInt {
    let mut num = BigQ::one();
    let lr = rational::add(lambda, &roots.rho);
    for a in roots.positive_roots() {
        num *= to_big(&dot(&lr, a)) / to_big(&dot(&roots.rho, a));
    }
    debug_assert!(num.is_integer());
    num.to_integer()
}

/// Weyl's dimension formula `Π_{α>0} (λ+ρ,α)/(ρ,α)`.
pub fn weyl_dim(ir: &Irrep) -> Result<u64> {
    if let Group::Pin(_) = ir.group {
        return pin_restrict(ir)?.total_dim();
    }
    let roots = CompactRoots::for_group(&ir.group)?;
    check_weight(ir, &roots)?;
    weyl_dim_big(&roots, &ir.highest_weight)
        .to_u64()
        .ok_or(Error::CapExceeded { dim: u64::MAX, cap: u64::MAX })
}

/// Weight diagram keyed by ε-coordinates.
pub type WeightDiagram = BTreeMap<Vec<Q>, u64>;

pub fn freudenthal_multiplicities(ir: &Irrep) -> Result<WeightDiagram> {
    freudenthal_with_cap(ir, dim_cap())
}

/// Freudenthal's recursion, run on depth vectors `c` with `μ = λ − Σ c_i α_i`.
/// All form values are scaled to integers by a common denominator.
pub fn freudenthal_with_cap(ir: &Irrep, cap: u64) -> Result<WeightDiagram> {
    if let Group::Pin(_) = ir.group {
        let mut total = WeightDiagram::new();
        for (c, m) in pin_restrict(ir)?.constituents {
            for (w, k) in freudenthal_with_cap(&c, cap)? {
                *total.entry(w).or_insert(0) += k * m;
            }
        }
        return Ok(total);
    }
    let roots = CompactRoots::for_group(&ir.group)?;
    check_weight(ir, &roots)?;
    let dim = weyl_dim_big(&roots, &ir.highest_weight);
    let dim_u = dim.to_u64().unwrap_or(u64::MAX);
    if dim_u > cap {
        return Err(Error::CapExceeded { dim: dim_u, cap });
    }
    let diagram = freudenthal_core(&roots, &ir.highest_weight);
    let total: u64 = diagram.values().sum();
    if total != dim_u {
        return Err(Error::Consistency(format!("Freudenthal total {total} differs from Weyl dimension {dim_u}")));
    }
    Ok(diagram)
}

fn freudenthal_core(roots: &CompactRoots, lambda: &[Q]) -> WeightDiagram {
    let r = roots.rank();
    let lr = rational::add(lambda, &roots.rho);
    let gram: Vec<Vec<Q>> =
        (0..r).map(|i| (0..r).map(|j| roots.inner(&roots.simple[i], &roots.simple[j])).collect()).collect();
    let lr_a: Vec<Q> = roots.simple.iter().map(|a| roots.inner(&lr, a)).collect();
    let l_a: Vec<Q> = roots.simple.iter().map(|a| roots.inner(lambda, a)).collect();

    let mut denom = 1i64;
    for x in gram.iter().flatten().chain(&lr_a).chain(&l_a) {
        denom = denom.lcm(x.denom());
    }
    let to_int = |x: &Q| (x * qi(denom)).to_integer() as i128;
    let g: Vec<Vec<i128>> = gram.iter().map(|row| row.iter().map(to_int).collect()).collect();
    let lr_a: Vec<i128> = lr_a.iter().map(to_int).collect();
    let l_a: Vec<i128> = l_a.iter().map(to_int).collect();

    // For each positive root β = Σ b_j α_j: (λ,β), (α_i,β), (β,β).
    struct PosRoot {
        b: Vec<i64>,
        l_b: i128,
        g_b: Vec<i128>,
        bb: i128,
    }
    let pos: Vec<PosRoot> = roots
        .positive
        .iter()
        .map(|(_, b)| {
            let g_b: Vec<i128> = (0..r).map(|i| (0..r).map(|j| b[j] as i128 * g[i][j]).sum()).collect();
            let l_b = (0..r).map(|j| b[j] as i128 * l_a[j]).sum();
            let bb = (0..r).map(|j| b[j] as i128 * g_b[j]).sum();
            PosRoot { b: b.clone(), l_b, g_b, bb }
        })
        .collect();

    let mut mult: HashMap<Vec<i64>, i128> = HashMap::new();
    let top = vec![0i64; r];
    mult.insert(top.clone(), 1);
    let mut level = vec![top];
    while !level.is_empty() {
        let mut candidates: Vec<Vec<i64>> = Vec::new();
        for c in &level {
            for i in 0..r {
                let mut d = c.clone();
                d[i] += 1;
                candidates.push(d);
            }
        }
        candidates.sort();
        candidates.dedup();
        let mut next = Vec::new();
        for c in candidates {
            // (λ+ρ,λ+ρ) − (μ+ρ,μ+ρ) = 2 Σ c_i (λ+ρ,α_i) − cᵀGc
            let mut den: i128 = 2 * (0..r).map(|i| c[i] as i128 * lr_a[i]).sum::<i128>();
            for i in 0..r {
                for j in 0..r {
                    den -= c[i] as i128 * c[j] as i128 * g[i][j];
                }
            }
            if den <= 0 {
                continue;
            }
            let mut num: i128 = 0;
            for p in &pos {
                let mut k = 1i64;
                loop {
                    let shifted: Vec<i64> = c.iter().zip(&p.b).map(|(x, y)| x - k * y).collect();
                    if shifted.iter().any(|&x| x < 0) {
                        break;
                    }
                    let Some(&m) = mult.get(&shifted) else { break };
                    // (μ + kβ, β) = (λ,β) − Σ c_i (α_i,β) + k (β,β)
                    let pair = p.l_b - (0..r).map(|i| c[i] as i128 * p.g_b[i]).sum::<i128>() + k as i128 * p.bb;
                    num += m * pair;
                    k += 1;
                }
            }
            let num = 2 * num;
            debug_assert!(num % den == 0, "Freudenthal quotient not integral");
            let m = num / den;
            if m > 0 {
                mult.insert(c.clone(), m);
                next.push(c);
            }
        }
        level = next;
    }

    let mut out = WeightDiagram::new();
    for (c, m) in mult {
        let mut w = lambda.to_vec();
        for (ci, a) in c.iter().zip(&roots.simple) {
            for (x, y) in w.iter_mut().zip(a) {
                *x -= qi(*ci) * y;
            }
        }
        out.insert(w, m as u64);
    }
    out
}

pub fn tensor_decompose(a: &Irrep, b: &Irrep) -> Result<BranchingList> {
    tensor_decompose_with_cap(a, b, dim_cap())
}

/// Klimyk's formula: add the weights of the smaller factor to the highest
/// weight of the other, shift by ρ, and fold back into the dominant chamber
/// with signs.
pub fn tensor_decompose_with_cap(a: &Irrep, b: &Irrep, cap: u64) -> Result<BranchingList> {
    if a.group != b.group {
        return Err(Error::GroupMismatch(format!("{} vs {}", a.group, b.group)));
    }
    if matches!(a.group, Group::Pin(_)) {
        return Err(Error::Unsupported("tensor products are computed for connected groups".into()));
    }
    let (da, db) = (weyl_dim(a)?, weyl_dim(b)?);
    let combined = da.saturating_mul(db);
    if combined > cap {
        return Err(Error::CapExceeded { dim: combined, cap });
    }
    let (big, small) = if da >= db { (a, b) } else { (b, a) };
    let roots = CompactRoots::for_group(&a.group)?;
    let diagram = freudenthal_core(&roots, &small.highest_weight);
    let mut acc: BTreeMap<Vec<Q>, i64> = BTreeMap::new();
    for (mu, m) in diagram {
        let v: Vec<Q> = big.highest_weight.iter().zip(&mu).zip(&roots.rho).map(|((x, y), r)| x + y + r).collect();
        let (w, sign, wall) = roots.dominant_conjugate(&v);
        if wall {
            continue;
        }
        let hw = rational::sub(&w, &roots.rho);
        *acc.entry(hw).or_insert(0) += sign * m as i64;
    }
    let mut out = BranchingList::default();
    for (hw, m) in acc {
        if m < 0 {
            return Err(Error::Consistency(format!("negative Klimyk multiplicity at {}", rational::fmt_q_list(&hw))));
        }
        if m > 0 {
            out.constituents.push((Irrep::new(a.group.clone(), hw), m as u64));
        }
    }
    Ok(out)
}

/// All values `lo ≤ x ≤ hi` congruent to `class` modulo 1.
fn interlace_range(lo: Q, hi: Q, class: Q) -> Vec<Q> {
    let frac = class - class.floor();
    let mut x = (lo - frac).ceil() + frac;
    let mut out = Vec::new();
    while x <= hi {
        out.push(x);
        x += qi(1);
    }
    out
}

/// One Gelfand–Tsetlin step Spin(m) → Spin(m−1).
fn branch_step(m: usize, lambda: &[Q]) -> Vec<Vec<Q>> {
    let class = lambda[0];
    let mut ranges: Vec<Vec<Q>> = Vec::new();
    if m % 2 == 1 {
        // B_k → D_k: λ_1 ≥ μ_1 ≥ λ_2 ≥ … ≥ λ_k ≥ |μ_k|
        let k = lambda.len();
        for i in 0..k {
            let (lo, hi) = if i + 1 < k { (lambda[i + 1], lambda[i]) } else { (-lambda[k - 1], lambda[k - 1]) };
            ranges.push(interlace_range(lo, hi, class));
        }
    } else {
        // D_k → B_{k−1}: λ_1 ≥ μ_1 ≥ λ_2 ≥ … ≥ μ_{k−1} ≥ |λ_k|
        let k = lambda.len();
        for i in 0..k - 1 {
            let lo = if i + 2 == k { lambda[k - 1].abs() } else { lambda[i + 1] };
            ranges.push(interlace_range(lo, lambda[i], class));
        }
    }
    let mut out: Vec<Vec<Q>> = vec![vec![]];
    for r in ranges {
        let mut next = Vec::with_capacity(out.len() * r.len());
        for prefix in &out {
            for x in &r {
                let mut v = prefix.clone();
                v.push(*x);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Iterated interlacing restriction Spin(n) → … → Spin(3). Returns the
/// sorted multiset of `j` with constituents of highest weight `j/2`.
pub fn branch_to_spin3(ir: &Irrep) -> Result<Vec<u64>> {
    let n = match ir.group {
        Group::Spin(n) => n,
        _ => return Err(Error::GroupMismatch(format!("branching expects a Spin(n) irrep, got {}", ir.group))),
    };
    let roots = CompactRoots::for_group(&ir.group)?;
    check_weight(ir, &roots)?;
    if !ir.is_genuine_spin() {
        return Err(Error::NotGenuine(rational::fmt_q_list(&ir.highest_weight)));
    }
    let mut current: BTreeMap<Vec<Q>, u64> = BTreeMap::new();
    current.insert(ir.highest_weight.clone(), 1);
    for m in (4..=n).rev() {
        let mut next: BTreeMap<Vec<Q>, u64> = BTreeMap::new();
        for (w, k) in &current {
            for mu in branch_step(m, w) {
                *next.entry(mu).or_insert(0) += k;
            }
        }
        current = next;
    }
    let mut js = Vec::new();
    for (w, k) in current {
        let j = (w[0] * qi(2)).to_integer() as u64;
        js.extend(std::iter::repeat(j).take(k as usize));
    }
    js.sort_unstable();
    Ok(js)
}

/// Restriction of a Pin(n) irrep to Spin(n).
pub fn pin_restrict(ir: &Irrep) -> Result<BranchingList> {
    let n = match ir.group {
        Group::Pin(n) => n,
        _ => return Err(Error::GroupMismatch(format!("expected a Pin(n) irrep, got {}", ir.group))),
    };
    if n < 3 {
        return Err(Error::Unsupported(format!("Pin({n}) has no fixed convention here; need n >= 3")));
    }
    let spin = Irrep::spin(n, ir.highest_weight.clone());
    let roots = CompactRoots::for_group(&spin.group)?;
    check_weight(&spin, &roots)?;
    let eps_ok = matches!(ir.pin_epsilon, Some(1) | Some(-1));
    let last = *ir.highest_weight.last().unwrap_or(&Q::zero());
    let mut out = BranchingList::default();
    if n % 2 == 1 || last.is_zero() {
        if !eps_ok {
            return Err(Error::Precondition(format!("{ir} needs pin_epsilon = ±1")));
        }
        out.constituents.push((spin, 1));
    } else {
        if ir.pin_epsilon.is_some() {
            return Err(Error::Precondition(format!("{ir} has a two-dimensional highest weight space and takes no epsilon")));
        }
        let mut flipped = ir.highest_weight.clone();
        *flipped.last_mut().expect("nonempty") = -last;
        out.constituents.push((spin, 1));
        out.constituents.push((Irrep::spin(n, flipped), 1));
    }
    Ok(out)
}

/// Weight of `w` on the standard Spin(3) torus (the first coordinate), used
/// by callers that need the SU(2) character.
pub fn first_coordinate_character(diagram: &WeightDiagram) -> BTreeMap<Q, u64> {
    let mut out = BTreeMap::new();
    for (w, m) in diagram {
        *out.entry(w[0]).or_insert(0) += m;
    }
    out
}
