//! Root systems in Bourbaki's ε-coordinates.
//!
//! Simple roots are written down per series; positive roots are generated by
//! closure from the Cartan matrix (root strings), never tabulated. The Weyl
//! group is kept implicitly as its simple reflections, so orbits are computed
//! by closure and the group itself is never enumerated.
//!
//! The invariant form is the ambient dot product times a per-type scale chosen
//! so that long roots have squared length 2. Every pairing the rest of the
//! crate uses has the form `2(ν,φ)/(φ,φ)`, in which the scale cancels.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{self, dot, half, q, qi, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Result<Self> {
        Ok(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            other => return Err(Error::Parse(format!("unknown series {other:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    pub series: Series,
    pub rank: usize,
}

impl LieType {
    /// Split simple types: `A_n (n ≥ 1)`, `B_n (n ≥ 2)`, `C_n (n ≥ 2)`,
    /// `D_n (n ≥ 3)`, `E_6..E_8`, `F_4`, `G_2`.
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidRank { series: series.letter(), rank });
        }
        Ok(Self { series, rank })
    }

    /// Root data of compact groups, which also needs `B_1` (Spin(3)),
    /// `C_1` and `D_2` (Spin(4)).
    pub fn compact(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A | Series::B | Series::C => rank >= 1,
            Series::D => rank >= 2,
            _ => return Self::new(series, rank),
        };
        if !ok {
            return Err(Error::InvalidRank { series: series.letter(), rank });
        }
        Ok(Self { series, rank })
    }

    /// Parses `"E8"`, `"G2"`, or a bare letter completed by `rank`.
    pub fn parse(name: &str, rank: Option<usize>) -> Result<Self> {
        let name = name.trim();
        let mut chars = name.chars();
        let letter = chars.next().ok_or_else(|| Error::Parse("empty type".into()))?;
        let series = Series::from_letter(letter)?;
        let rest: String = chars.collect();
        let embedded = if rest.is_empty() {
            None
        } else {
            Some(rest.parse::<usize>().map_err(|_| Error::Parse(format!("bad type {name:?}")))?)
        };
        let rank = match (embedded, rank) {
            (Some(a), Some(b)) if a != b => {
                return Err(Error::Parse(format!("type {name} conflicts with rank {b}")))
            }
            (Some(a), _) => a,
            (None, Some(b)) => b,
            (None, None) => return Err(Error::Parse(format!("type {name} needs a rank"))),
        };
        Self::new(series, rank)
    }

    /// Type `C_n` has one-dimensional small K types and is excluded from the
    /// small-K pipeline.
    pub fn small_k_supported(&self) -> bool {
        self.series != Series::C
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.series, Series::A | Series::D | Series::E)
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.series.letter(), self.rank)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LengthClass {
    Long,
    Short,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    /// ε-coordinates.
    pub coords: Vec<Q>,
    /// Coefficients in the basis of simple roots.
    pub simple_coeffs: Vec<i64>,
    pub length_class: LengthClass,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple_coeffs.iter().sum()
    }

    pub fn is_simple(&self) -> bool {
        self.height() == 1
    }

    pub fn is_short(&self) -> bool {
        self.length_class == LengthClass::Short
    }

    /// `(-1)·φ`, used for negative roots in orbit computations.
    pub fn negated(&self) -> Root {
        Root {
            coords: self.coords.iter().map(|x| -x).collect(),
            simple_coeffs: self.simple_coeffs.iter().map(|c| -c).collect(),
            length_class: self.length_class,
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.simple_coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Epsilon,
    Fundamental,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<Q>,
    pub basis: Basis,
}

impl Weight {
    pub fn epsilon(coords: Vec<Q>) -> Self {
        Self { coords, basis: Basis::Epsilon }
    }

    pub fn fundamental(coords: Vec<Q>) -> Self {
        Self { coords, basis: Basis::Fundamental }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.basis {
            Basis::Epsilon => "ε",
            Basis::Fundamental => "ω",
        };
        write!(f, "{}{}", tag, rational::fmt_q_list(&self.coords))
    }
}

/// A complex parameter `ν ∈ 𝔞*_ℂ`, stored as exact real and imaginary parts in
/// ε-coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NuParameter {
    pub real_part: Vec<Q>,
    pub imag_part: Vec<Q>,
}

impl NuParameter {
    pub fn new(real_part: Vec<Q>, imag_part: Vec<Q>) -> Result<Self> {
        if real_part.len() != imag_part.len() {
            return Err(Error::DimensionMismatch { expected: real_part.len(), found: imag_part.len() });
        }
        Ok(Self { real_part, imag_part })
    }

    pub fn real(real_part: Vec<Q>) -> Self {
        let n = real_part.len();
        Self { real_part, imag_part: rational::zeros(n) }
    }

    pub fn imaginary(imag_part: Vec<Q>) -> Self {
        let n = imag_part.len();
        Self { real_part: rational::zeros(n), imag_part }
    }

    /// Builds ν from weights in either basis.
    pub fn from_weights(rs: &RootSystem, re: &Weight, im: &Weight) -> Result<Self> {
        let re = rs.to_epsilon(re)?.coords;
        let im = rs.to_epsilon(im)?.coords;
        Self::new(re, im)
    }

    pub fn dim(&self) -> usize {
        self.real_part.len()
    }

    pub fn negated(&self) -> Self {
        Self {
            real_part: self.real_part.iter().map(|x| -x).collect(),
            imag_part: self.imag_part.iter().map(|x| -x).collect(),
        }
    }

    /// `2(ν,φ)/(φ,φ)` split into real and imaginary parts.
    pub fn coroot_pairing(&self, phi: &Root) -> (Q, Q) {
        (coroot_pairing(&self.real_part, &phi.coords), coroot_pairing(&self.imag_part, &phi.coords))
    }
}

/// `2(w,φ)/(φ,φ)` on raw ε-coordinates; independent of the form's scale.
pub fn coroot_pairing(w: &[Q], phi: &[Q]) -> Q {
    qi(2) * dot(w, phi) / dot(phi, phi)
}

/// `w − ⟨w,φ∨⟩ φ`.
pub fn reflect(w: &[Q], phi: &[Q]) -> Vec<Q> {
    let c = coroot_pairing(w, phi);
    w.iter().zip(phi).map(|(x, p)| x - c * p).collect()
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    lie_type: LieType,
    ambient_dim: usize,
    form_scale: Q,
    simple_roots: Vec<Root>,
    positive_roots: Vec<Root>,
    cartan_matrix: Vec<Vec<i64>>,
    rho: Weight,
    fundamental_weights: Vec<Vec<Q>>,
}

fn unit(n: usize, i: usize, c: Q) -> Vec<Q> {
    let mut v = rational::zeros(n);
    v[i] = c;
    v
}

fn e_diff(n: usize, i: usize, j: usize) -> Vec<Q> {
    let mut v = rational::zeros(n);
    v[i] = qi(1);
    v[j] = qi(-1);
    v
}

/// Bourbaki simple roots (plate I–IX), together with the ambient dimension
/// and the scale that gives long roots squared length 2.
fn bourbaki_simple_roots(t: LieType) -> (usize, Q, Vec<Vec<Q>>) {
    let n = t.rank;
    match t.series {
        Series::A => {
            let dim = n + 1;
            (dim, qi(1), (0..n).map(|i| e_diff(dim, i, i + 1)).collect())
        }
        Series::B => {
            let mut s: Vec<Vec<Q>> = (0..n - 1).map(|i| e_diff(n, i, i + 1)).collect();
            s.push(unit(n, n - 1, qi(1)));
            (n, qi(1), s)
        }
        Series::C => {
            let mut s: Vec<Vec<Q>> = (0..n - 1).map(|i| e_diff(n, i, i + 1)).collect();
            s.push(unit(n, n - 1, qi(2)));
            (n, half(), s)
        }
        Series::D => {
            let mut s: Vec<Vec<Q>> = (0..n - 1).map(|i| e_diff(n, i, i + 1)).collect();
            let mut last = rational::zeros(n);
            last[n - 2] = qi(1);
            last[n - 1] = qi(1);
            s.push(last);
            (n, qi(1), s)
        }
        Series::E => {
            let dim = 8;
            let mut a1 = vec![q(-1, 2); 8];
            a1[0] = half();
            a1[7] = half();
            let mut a2 = rational::zeros(dim);
            a2[0] = qi(1);
            a2[1] = qi(1);
            let mut s = vec![a1, a2];
            for i in 0..n - 2 {
                // α_{i+3} = e_{i+2} − e_{i+1} (1-based)
                s.push(e_diff(dim, i + 1, i));
            }
            (dim, qi(1), s)
        }
        Series::F => {
            let dim = 4;
            let a4 = vec![half(), q(-1, 2), q(-1, 2), q(-1, 2)];
            (dim, qi(1), vec![e_diff(dim, 1, 2), e_diff(dim, 2, 3), unit(dim, 3, qi(1)), a4])
        }
        Series::G => {
            let dim = 3;
            let a1 = vec![qi(1), qi(-1), qi(0)];
            let a2 = vec![qi(-2), qi(1), qi(1)];
            (dim, q(1, 3), vec![a1, a2])
        }
    }
}

impl RootSystem {
    pub fn build(lie_type: LieType) -> Result<Self> {
        // Re-validate in case the struct was assembled by hand.
        LieType::compact(lie_type.series, lie_type.rank)?;
        let (ambient_dim, form_scale, simple) = bourbaki_simple_roots(lie_type);
        let r = simple.len();

        let cartan_matrix: Vec<Vec<i64>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let c = coroot_pairing(&simple[i], &simple[j]);
                        debug_assert!(c.is_integer());
                        c.to_integer()
                    })
                    .collect()
            })
            .collect();

        let coeffs = close_positive_roots(&cartan_matrix);
        let to_coords = |c: &[i64]| -> Vec<Q> {
            let mut v = rational::zeros(ambient_dim);
            for (k, &ck) in c.iter().enumerate() {
                for (x, s) in v.iter_mut().zip(&simple[k]) {
                    *x += s * qi(ck);
                }
            }
            v
        };
        let raw: Vec<(Vec<i64>, Vec<Q>)> = coeffs.into_iter().map(|c| { let v = to_coords(&c); (c, v) }).collect();
        let max_len = raw.iter().map(|(_, v)| dot(v, v)).max().unwrap_or_else(Q::zero);
        let classify = |v: &[Q]| if dot(v, v) == max_len { LengthClass::Long } else { LengthClass::Short };

        let positive_roots: Vec<Root> = raw
            .iter()
            .map(|(c, v)| Root { coords: v.clone(), simple_coeffs: c.clone(), length_class: classify(v) })
            .collect();
        let simple_roots: Vec<Root> = positive_roots.iter().filter(|p| p.is_simple()).cloned().collect();

        let mut rho = rational::zeros(ambient_dim);
        for p in &positive_roots {
            for (x, c) in rho.iter_mut().zip(&p.coords) {
                *x += c * half();
            }
        }

        let cartan_q: linalg::Matrix<Q> =
            cartan_matrix.iter().map(|row| row.iter().map(|&x| qi(x)).collect()).collect();
        let inv = linalg::inverse(&cartan_q)
            .ok_or_else(|| Error::Consistency("singular Cartan matrix".into()))?;
        let fundamental_weights: Vec<Vec<Q>> = (0..r)
            .map(|i| {
                let mut w = rational::zeros(ambient_dim);
                for k in 0..r {
                    for (x, s) in w.iter_mut().zip(&simple[k]) {
                        *x += inv[i][k] * s;
                    }
                }
                w
            })
            .collect();

        Ok(Self {
            lie_type,
            ambient_dim,
            form_scale,
            simple_roots,
            positive_roots,
            cartan_matrix,
            rho: Weight::epsilon(rho),
            fundamental_weights,
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// `cartan[i][j] = ⟨α_i, α_j∨⟩`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan_matrix
    }

    /// ρ in ε-coordinates.
    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn fundamental_weights(&self) -> &[Vec<Q>] {
        &self.fundamental_weights
    }

    /// The invariant form, normalised so that long roots have `(φ,φ) = 2`.
    pub fn inner(&self, a: &[Q], b: &[Q]) -> Q {
        self.form_scale * dot(a, b)
    }

    pub fn positive_root_index(&self, coords: &[Q]) -> Option<usize> {
        self.positive_roots.iter().position(|p| p.coords == coords)
    }

    pub fn short_positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.positive_roots.iter().filter(|p| p.is_short())
    }

    fn check_dim(&self, len: usize) -> Result<()> {
        if len != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: len });
        }
        Ok(())
    }

    pub fn to_epsilon(&self, w: &Weight) -> Result<Weight> {
        match w.basis {
            Basis::Epsilon => {
                self.check_dim(w.coords.len())?;
                Ok(w.clone())
            }
            Basis::Fundamental => {
                if w.coords.len() != self.rank() {
                    return Err(Error::DimensionMismatch { expected: self.rank(), found: w.coords.len() });
                }
                let mut v = rational::zeros(self.ambient_dim);
                for (c, omega) in w.coords.iter().zip(&self.fundamental_weights) {
                    for (x, o) in v.iter_mut().zip(omega) {
                        *x += c * o;
                    }
                }
                Ok(Weight::epsilon(v))
            }
        }
    }

    /// Fundamental-weight coordinates `⟨w, α_i∨⟩`. For types whose ambient
    /// space is larger than the rank (A_n, E6, E7) the component orthogonal
    /// to the roots is dropped.
    pub fn to_fundamental(&self, w: &Weight) -> Result<Weight> {
        match w.basis {
            Basis::Fundamental => {
                if w.coords.len() != self.rank() {
                    return Err(Error::DimensionMismatch { expected: self.rank(), found: w.coords.len() });
                }
                Ok(w.clone())
            }
            Basis::Epsilon => {
                self.check_dim(w.coords.len())?;
                Ok(Weight::fundamental(
                    self.simple_roots.iter().map(|a| coroot_pairing(&w.coords, &a.coords)).collect(),
                ))
            }
        }
    }

    /// `2(ν,φ)/(φ,φ)`.
    pub fn pairing(&self, nu: &Weight, phi: &Root) -> Result<Q> {
        self.check_dim(phi.coords.len())?;
        let nu = self.to_epsilon(nu)?;
        Ok(coroot_pairing(&nu.coords, &phi.coords))
    }

    pub fn simple_reflection(&self, phi: &Root, w: &Weight) -> Result<Weight> {
        self.check_dim(phi.coords.len())?;
        let e = self.to_epsilon(w)?;
        let out = Weight::epsilon(reflect(&e.coords, &phi.coords));
        match w.basis {
            Basis::Epsilon => Ok(out),
            Basis::Fundamental => self.to_fundamental(&out),
        }
    }

    /// Orbit under the group generated by the simple reflections, in
    /// ε-coordinates.
    pub fn weyl_orbit(&self, w: &Weight) -> Result<BTreeSet<Weight>> {
        let start = self.to_epsilon(w)?.coords;
        let mut seen: HashSet<Vec<Q>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for a in &self.simple_roots {
                let r = reflect(&v, &a.coords);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        Ok(seen.into_iter().map(Weight::epsilon).collect())
    }

    pub fn is_dominant(&self, w: &[Q]) -> bool {
        self.simple_roots.iter().all(|a| !coroot_pairing(w, &a.coords).is_negative())
    }

    /// `(ν, α) ≥ 0` for every simple α, equivalently for every positive root.
    pub fn in_closed_langlands_chamber(&self, nu_real: &Weight) -> Result<bool> {
        let e = self.to_epsilon(nu_real)?;
        Ok(self.is_dominant(&e.coords))
    }

    /// Moves `v` into the closed dominant chamber by simple reflections.
    /// Returns the image, the parity of the number of reflections used, and
    /// whether the image lies on a wall.
    pub fn dominant_conjugate(&self, v: &[Q]) -> (Vec<Q>, i64, bool) {
        let mut v = v.to_vec();
        let mut sign = 1;
        loop {
            let neg = self
                .simple_roots
                .iter()
                .find(|a| coroot_pairing(&v, &a.coords).is_negative());
            match neg {
                Some(a) => {
                    v = reflect(&v, &a.coords);
                    sign = -sign;
                }
                None => break,
            }
        }
        let wall = self.simple_roots.iter().any(|a| coroot_pairing(&v, &a.coords).is_zero());
        (v, sign, wall)
    }
}

/// Positive roots in simple-root coordinates, generated level by level: for a
/// root β and a simple root α_i, β + α_i is a root iff `p − ⟨β, α_i∨⟩ > 0`,
/// where `p` is the largest integer with `β − pα_i` a root.
fn close_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let mut all: Vec<Vec<i64>> = (0..r).map(|i| { let mut v = vec![0; r]; v[i] = 1; v }).collect();
    let mut known: HashSet<Vec<i64>> = all.iter().cloned().collect();
    let mut level = all.clone();
    while !level.is_empty() {
        let mut next = Vec::new();
        for beta in &level {
            for i in 0..r {
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..r).map(|j| beta[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        all.extend(next.iter().cloned());
        level = next;
    }
    all.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: Series, n: usize) -> RootSystem {
        RootSystem::build(LieType::new(s, n).unwrap()).unwrap()
    }

    #[test]
    fn rank_validation() {
        assert!(LieType::new(Series::E, 5).is_err());
        assert!(LieType::new(Series::F, 3).is_err());
        assert!(LieType::new(Series::G, 3).is_err());
        assert!(LieType::new(Series::B, 1).is_err());
        assert!(LieType::new(Series::D, 2).is_err());
        assert!(LieType::new(Series::A, 0).is_err());
        assert!(LieType::compact(Series::B, 1).is_ok());
        assert!(LieType::compact(Series::D, 2).is_ok());
        assert!(!LieType::new(Series::C, 3).unwrap().small_k_supported());
        assert_eq!(LieType::parse("E8", None).unwrap(), LieType::new(Series::E, 8).unwrap());
        assert_eq!(LieType::parse("B", Some(3)).unwrap().name(), "B3");
        assert!(LieType::parse("B3", Some(4)).is_err());
    }

    #[test]
    fn g2_has_three_short_and_three_long() {
        let g = rs(Series::G, 2);
        assert_eq!(g.positive_roots().len(), 6);
        assert_eq!(g.short_positive_roots().count(), 3);
        for p in g.positive_roots() {
            let len = g.inner(&p.coords, &p.coords);
            match p.length_class {
                LengthClass::Long => assert_eq!(len, qi(2)),
                LengthClass::Short => assert_eq!(len, q(2, 3)),
            }
        }
    }

    #[test]
    fn a1_rho_is_half_alpha() {
        let a = rs(Series::A, 1);
        assert_eq!(a.positive_roots().len(), 1);
        let alpha = &a.positive_roots()[0].coords;
        assert_eq!(a.rho().coords, rational::scale(alpha, half()));
    }

    #[test]
    fn e8_count_matches_dimension() {
        let e = rs(Series::E, 8);
        assert_eq!(e.positive_roots().len(), 120);
        assert_eq!(2 * e.positive_roots().len() + e.rank(), 248);
    }

    #[test]
    fn pairing_examples() {
        let a2 = rs(Series::A, 2);
        for s in a2.simple_roots() {
            assert_eq!(a2.pairing(a2.rho(), s).unwrap(), qi(1));
            assert_eq!(a2.pairing(&Weight::epsilon(rational::zeros(3)), s).unwrap(), qi(0));
        }
        let g = rs(Series::G, 2);
        let short = g.simple_roots().iter().find(|s| s.is_short()).unwrap().clone();
        let idx = g.simple_roots().iter().position(|s| s.is_short()).unwrap();
        let mut f = rational::zeros(2);
        f[idx] = qi(1);
        assert_eq!(g.pairing(&Weight::fundamental(f), &short).unwrap(), qi(1));
        assert!(a2.pairing(&Weight::epsilon(vec![qi(1)]), &a2.simple_roots()[0]).is_err());
    }

    #[test]
    fn reflection_examples() {
        let a2 = rs(Series::A, 2);
        let a1 = a2.simple_roots()[0].clone();
        let a2r = a2.simple_roots()[1].clone();
        let rho = a2.rho().clone();
        let r = a2.simple_reflection(&a1, &rho).unwrap();
        assert_eq!(r.coords, rational::sub(&rho.coords, &a1.coords));
        let neg = a2.simple_reflection(&a1, &Weight::epsilon(a1.coords.clone())).unwrap();
        assert_eq!(neg.coords, a1.negated().coords);
        let s = a2.simple_reflection(&a2r, &Weight::epsilon(a1.coords.clone())).unwrap();
        assert_eq!(s.coords, rational::add(&a1.coords, &a2r.coords));
    }

    #[test]
    fn orbit_examples() {
        let a2 = rs(Series::A, 2);
        let zero = Weight::epsilon(rational::zeros(3));
        assert_eq!(a2.weyl_orbit(&zero).unwrap().len(), 1);
        let orbit = a2.weyl_orbit(&Weight::epsilon(a2.simple_roots()[0].coords.clone())).unwrap();
        assert_eq!(orbit.len(), 6);

        let g = rs(Series::G, 2);
        let long = g.simple_roots().iter().find(|s| !s.is_short()).unwrap();
        let orbit = g.weyl_orbit(&Weight::epsilon(long.coords.clone())).unwrap();
        assert_eq!(orbit.len(), 6);
        for w in &orbit {
            assert_eq!(g.inner(&w.coords, &w.coords), qi(2));
        }
    }

    #[test]
    fn chamber_examples() {
        let b3 = rs(Series::B, 3);
        let rho = b3.rho().clone();
        assert!(b3.in_closed_langlands_chamber(&rho).unwrap());
        let neg = Weight::epsilon(rho.coords.iter().map(|x| -x).collect());
        assert!(!b3.in_closed_langlands_chamber(&neg).unwrap());
        assert!(b3.in_closed_langlands_chamber(&Weight::epsilon(vec![qi(1), qi(0), qi(0)])).unwrap());
    }

    #[test]
    fn fundamental_round_trip() {
        for (s, n) in [(Series::A, 3), (Series::B, 4), (Series::E, 6), (Series::F, 4), (Series::G, 2)] {
            let r = rs(s, n);
            let w = Weight::fundamental((0..n as i64).map(|i| q(i + 1, 2)).collect());
            let e = r.to_epsilon(&w).unwrap();
            assert_eq!(r.to_fundamental(&e).unwrap(), w);
            let back = r.to_epsilon(&r.to_fundamental(&e).unwrap()).unwrap();
            assert_eq!(back, e);
        }
    }
}
