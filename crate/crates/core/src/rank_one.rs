//! Rank-one building blocks: the bivariate polynomials `Q(Z^l)`, `Q(Z̄^l)` in
//! the commuting symbols `h`, `t`, and the linear factor lists they specialise
//! to once `t` acts by a scalar.

use num::{BigInt, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::rational::{qi, to_big, BigQ, Q};
use crate::root_system::{coroot_pairing, Root, RootSystem};

/// Which of `∓t` enters the factors `h + 2j ∓ t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QSign {
    /// Factors `h + 2j + t`.
    PlusT,
    /// Factors `h + 2j − t`.
    MinusT,
}

impl QSign {
    fn t_sign(self) -> i64 {
        match self {
            QSign::PlusT => 1,
            QSign::MinusT => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    PlusR,
    MinusR,
    Trivial,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum RhoShiftMode {
    #[default]
    Shifted,
    Unshifted,
}

/// `Π_{j<l} (h + 2j ∓ t)` with variables `h` (index 0) and `t` (index 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateQ {
    pub degree_l: u32,
    pub sign: QSign,
    pub poly: MultiPoly<BigInt>,
}

impl BivariateQ {
    pub fn factored(&self) -> String {
        if self.degree_l == 0 {
            return "1".into();
        }
        let t = if self.sign == QSign::PlusT { "+t" } else { "-t" };
        (0..self.degree_l)
            .map(|j| if j == 0 { format!("(h{t})") } else { format!("(h+{}{t})", 2 * j) })
            .collect()
    }

    pub fn expanded(&self) -> String {
        self.poly.fmt_with(&["h", "t"])
    }
}

/// Unsigned Stirling numbers of the first kind `c(l, k)` for `k = 0..=l`.
fn stirling_row(l: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for n in 0..l {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (k, c) in row.iter().enumerate() {
            next[k] += c * BigInt::from(n);
            next[k + 1] += c;
        }
        row = next;
    }
    row
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Coefficients read off directly: with `u = h ∓ t`,
/// `Π_{j<l}(u + 2j) = Σ_k c(l,k) 2^{l−k} u^k`, then the binomial theorem.
pub fn q_closed_form(l: u32, sign: QSign) -> BivariateQ {
    let c = stirling_row(l);
    let s = BigInt::from(sign.t_sign());
    let mut poly = MultiPoly::zero(2);
    for k in 0..=l {
        let base = &c[k as usize] * BigInt::from(2).pow(l - k);
        if base.is_zero() {
            continue;
        }
        for b in 0..=k {
            let coeff = &base * binomial(k, b) * s.pow(b);
            poly.add_term(vec![k - b, b], coeff);
        }
    }
    BivariateQ { degree_l: l, sign, poly }
}

/// `Q(l) = (h + 2(l−1) ∓ t) · Q(l−1)`.
pub fn q_recursive(l: u32, sign: QSign) -> BivariateQ {
    let h = MultiPoly::var(2, 0);
    let t = MultiPoly::var(2, 1).scale(&BigInt::from(sign.t_sign()));
    let mut poly = MultiPoly::one(2);
    for step in 1..=l {
        let factor = h.add(&t).add(&MultiPoly::constant(2, BigInt::from(2 * (step as i64 - 1))));
        poly = factor.mul(&poly);
    }
    BivariateQ { degree_l: l, sign, poly }
}

/// A product of `l` linear factors `(x + shift)` in the coroot coordinate
/// `x = 2(ν,φ)/(φ,φ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneFactor {
    pub degree_l: u32,
    pub branch: Branch,
    pub r: Q,
    pub shifts: Vec<Q>,
}

impl RankOneFactor {
    /// Expanded univariate polynomial in `x`.
    pub fn expand(&self) -> MultiPoly<BigQ> {
        expand_shifts(&self.shifts)
    }
}

pub fn expand_shifts(shifts: &[Q]) -> MultiPoly<BigQ> {
    let x = MultiPoly::var(1, 0);
    shifts
        .iter()
        .fold(MultiPoly::one(1), |acc, s| acc.mul(&x.add(&MultiPoly::constant(1, to_big(s)))))
}

/// `Π_{j<l} (x + 2j + 1 ± r)`, or `Π_{j<l} (x + 2j + 1)` when t acts trivially.
pub fn p_factor(l: i64, r: Q, branch: Branch) -> Result<RankOneFactor> {
    if l < 0 {
        return Err(Error::Precondition(format!("degree must be nonnegative, got {l}")));
    }
    if r.is_negative() {
        return Err(Error::Precondition(format!("t-weight must be nonnegative, got {r}")));
    }
    let offset = match branch {
        Branch::PlusR => r,
        Branch::MinusR => -r,
        Branch::Trivial => Q::zero(),
    };
    let shifts = (0..l).map(|j| qi(2 * j + 1) + offset).collect();
    Ok(RankOneFactor { degree_l: l as u32, branch, r, shifts })
}

/// Moves a factor list for φ between ρ conventions. In the shifted mode this
/// is the identity; in the unshifted mode each shift gains `⟨ρ_φ − ρ, φ∨⟩`
/// with `ρ_φ = φ/2`.
pub fn translate_factor(shifts: &[Q], phi: &Root, rs: &RootSystem, mode: RhoShiftMode) -> Result<Vec<Q>> {
    if rs.positive_root_index(&phi.coords).is_none() {
        return Err(Error::RootNotPositive(phi.to_string()));
    }
    match mode {
        RhoShiftMode::Shifted => Ok(shifts.to_vec()),
        RhoShiftMode::Unshifted => {
            let offset = qi(1) - coroot_pairing(&rs.rho().coords, &phi.coords);
            Ok(shifts.iter().map(|s| s + offset).collect())
        }
    }
}

/// Factor shifts attached to a list of dominant t-weights `δ` of a rank-one
/// K-type decomposition in which `t` acts on `V_τ` with dominant weight `r`:
/// `δ = 2l + r` contributes `p_factor(l, r, PlusR)` and `δ = 2l − r`
/// contributes `p_factor(l, r, MinusR)`. For `r = 0` every `δ = 2l` gives the
/// trivial-action factor. Integral nonzero `r` is refused since then the two
/// cases cannot be told apart from `δ`.
pub fn shifts_from_dominant_weights(deltas: &[Q], r: Q) -> Result<Vec<Q>> {
    if r.is_negative() {
        return Err(Error::Precondition(format!("t-weight must be nonnegative, got {r}")));
    }
    if !r.is_zero() && r.is_integer() {
        return Err(Error::Precondition(format!("dominant weights do not determine the branch for r = {r}")));
    }
    let mut out = Vec::new();
    for d in deltas {
        let (l2, branch) = if r.is_zero() {
            (*d, Branch::Trivial)
        } else if ((d - r) / qi(2)).is_integer() {
            (d - r, Branch::PlusR)
        } else if ((d + r) / qi(2)).is_integer() {
            (d + r, Branch::MinusR)
        } else {
            return Err(Error::Precondition(format!("weight {d} is not of the form 2l ± {r}")));
        };
        let l = l2 / qi(2);
        if !l.is_integer() || l.is_negative() {
            return Err(Error::Precondition(format!("weight {d} is not of the form 2l ± {r}")));
        }
        out.extend(p_factor(l.to_integer(), r, branch)?.shifts);
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{half, q};
    use crate::root_system::{LieType, Series};

    #[test]
    fn closed_form_examples() {
        assert_eq!(q_closed_form(0, QSign::PlusT).expanded(), "1");
        assert_eq!(q_closed_form(1, QSign::MinusT).expanded(), "h - t");
        assert_eq!(q_closed_form(3, QSign::PlusT).factored(), "(h+t)(h+2+t)(h+4+t)");
        assert_eq!(q_closed_form(3, QSign::PlusT).poly, q_recursive(3, QSign::PlusT).poly);
        assert_eq!(q_recursive(2, QSign::MinusT).expanded(), "h^2 - 2*h*t + t^2 + 2*h - 2*t");
    }

    #[test]
    fn p_factor_examples() {
        assert_eq!(p_factor(2, half(), Branch::PlusR).unwrap().shifts, vec![q(3, 2), q(7, 2)]);
        assert_eq!(p_factor(1, qi(5), Branch::Trivial).unwrap().shifts, vec![qi(1)]);
        assert!(p_factor(0, half(), Branch::MinusR).unwrap().shifts.is_empty());
        assert!(p_factor(-1, half(), Branch::PlusR).is_err());
    }

    #[test]
    fn translation() {
        let rs = RootSystem::build(LieType::new(Series::A, 2).unwrap()).unwrap();
        let shifts = vec![half(), q(3, 2)];
        let simple = rs.simple_roots()[0].clone();
        let theta = rs.positive_roots().last().unwrap().clone();
        assert_eq!(theta.simple_coeffs, vec![1, 1]);
        for mode in [RhoShiftMode::Shifted, RhoShiftMode::Unshifted] {
            assert_eq!(translate_factor(&shifts, &simple, &rs, mode).unwrap(), shifts);
        }
        assert_eq!(translate_factor(&shifts, &theta, &rs, RhoShiftMode::Shifted).unwrap(), shifts);
        assert_eq!(
            translate_factor(&shifts, &theta, &rs, RhoShiftMode::Unshifted).unwrap(),
            vec![q(-1, 2), half()]
        );
        assert!(translate_factor(&shifts, &theta.negated(), &rs, RhoShiftMode::Shifted).is_err());
    }

    #[test]
    fn shifts_from_weights() {
        let deltas = vec![half(), q(3, 2), q(5, 2)];
        assert_eq!(shifts_from_dominant_weights(&deltas, half()).unwrap(), vec![half(), q(3, 2)]);
        assert_eq!(shifts_from_dominant_weights(&[qi(0), qi(4)], qi(0)).unwrap(), vec![qi(1), qi(3)]);
        assert!(shifts_from_dominant_weights(&[qi(1)], qi(1)).is_err());
    }
}
