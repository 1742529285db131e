//! Radius ratios against asymmetries.

use serde::Serialize;

use crate::bodies::{Direction, VPolytope};
use crate::error::{Error, Result};
use crate::exact::{Rational, RationalVector};
use crate::radii::{asymmetry_value, circumradius_value, inradius_value, is_minkowski_center};

use super::chains::PairRadii;
use super::concentric::{are_mutually_concentric, is_mirrored_concentric};
use super::simplex::{completeness, Completeness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma31Report {
    pub s_body: Rational,
    pub s_gauge: Rational,
    /// `R(K,C) / r(K,-C)`
    pub ratio_a: Rational,
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
    pub e: bool,
    /// set when `s(C)` attains `ratio_a`: K mirrored concentric wrt C
    pub body_mirrored: Option<bool>,
    /// set when `s(K)` attains `ratio_a`: C mirrored concentric wrt K
    pub gauge_mirrored: Option<bool>,
    pub holds: bool,
}

pub fn check_lemma31(k: &VPolytope, c: &VPolytope) -> Result<Lemma31Report> {
    let one = Rational::one();
    let sk = asymmetry_value(k)?;
    let sc = asymmetry_value(c)?;
    let neg = c.negate();
    let dc = c.difference_body();
    let big = circumradius_value(k, c)?;
    let big_neg = circumradius_value(k, &neg)?;
    let big_d = circumradius_value(k, &dc)?;
    let small = inradius_value(k, c)?;
    let small_neg = inradius_value(k, &neg)?;
    let small_d = inradius_value(k, &dc)?;

    let ratio_a = big.checked_div(&small_neg)?;
    let a = sk <= ratio_a && sc <= ratio_a;
    let lo = (&sc + &one) / &sc;
    let hi = &sc + &one;
    let within = |x: &Rational| &lo <= x && x <= &hi;
    let b = within(&big.checked_div(&big_d)?);
    let cc = within(&small.checked_div(&small_d)?);
    let d = {
        let m = small_neg.checked_div(&small)?.max(big_neg.checked_div(&big)?);
        sk.clone().min(sc.clone()) >= m
    };
    let e = sc >= (&big * &small_d).checked_div(&(&small * &big_d))?;

    let body_mirrored = if sc == ratio_a { Some(is_mirrored_concentric(k, c)?) } else { None };
    let gauge_mirrored = if sk == ratio_a { Some(is_mirrored_concentric(c, k)?) } else { None };
    let holds = a && b && cc && d && e && body_mirrored.unwrap_or(true) && gauge_mirrored.unwrap_or(true);
    Ok(Lemma31Report { s_body: sk, s_gauge: sc, ratio_a, a, b, c: cc, d, e, body_mirrored, gauge_mirrored, holds })
}

/// Breadth split of a Minkowski centered `C` against a shrunk mirror copy:
/// `(h(C,a) + h(rC,-a)) / (h(C,a) + h(C,-a))` lies in
/// `[(1 + s r)/(1 + s), (r + s)/(1 + s)]` for every direction.
pub fn check_lemma32(c: &VPolytope, r: &Rational, dirs: &[Direction]) -> Result<bool> {
    if r.is_negative() || r > &Rational::one() {
        return Err(Error::ParameterViolation(format!("r = {r} must lie in [0, 1]")));
    }
    if !is_minkowski_center(c, &RationalVector::zeros(c.dim()))? {
        return Err(Error::NotCentered);
    }
    let one = Rational::one();
    let s = asymmetry_value(c)?;
    let lower = (&one + &s * r) / (&one + &s);
    let upper = (r + &s) / (&one + &s);
    for a in dirs {
        let v = a.vector();
        if v.dim() != c.dim() {
            return Err(Error::DimensionMismatch { expected: c.dim(), found: v.dim() });
        }
        let plus = c.support_value(v);
        let minus = c.support_value(&v.neg());
        let ratio = (&plus + r * &minus).checked_div(&(&plus + &minus))?;
        if ratio < lower || ratio > upper {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop33Report {
    /// `R(K,C) / r(K,C)`
    pub ratio: Rational,
    /// `max{s(K)/s(C), s(C)/s(K)}`
    pub lower: Rational,
    pub lower_holds: bool,
    pub completeness: Completeness,
    /// `s(K) s(C)`, checked only when K is known to be complete
    pub upper: Option<Rational>,
    pub upper_holds: Option<bool>,
    /// mutual concentricity, checked when the upper bound is attained
    pub concentric_on_equality: Option<bool>,
    pub holds: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

pub fn check_prop33_lemma34(k: &VPolytope, c: &VPolytope) -> Result<Prop33Report> {
    let p = PairRadii::compute(k, c)?;
    let (sk, sc) = (p.s_body(), p.s_gauge());
    let ratio = p.circumradius.checked_div(&p.inradius)?;
    let lower = (sk / sc).max(sc / sk);
    let lower_holds = ratio >= lower;
    let completeness = completeness(k, c)?;
    let mut notes = Vec::new();
    let (upper, upper_holds, concentric_on_equality) = match completeness {
        Completeness::Complete => {
            let upper = sk * sc;
            let ok = ratio <= upper;
            let conc = if ratio == upper { Some(are_mutually_concentric(k, c)?) } else { None };
            (Some(upper), Some(ok), conc)
        }
        Completeness::NotComplete => (None, None, None),
        Completeness::Undecidable => {
            notes.push("completeness undecidable; upper bound skipped".into());
            (None, None, None)
        }
    };
    let holds = lower_holds && upper_holds.unwrap_or(true) && concentric_on_equality.unwrap_or(true);
    Ok(Prop33Report {
        ratio,
        lower,
        lower_holds,
        completeness,
        upper,
        upper_holds,
        concentric_on_equality,
        holds,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{example43, standard_centered_simplex, Variant};
    use crate::exact::rat;

    fn square() -> VPolytope {
        VPolytope::from_int_points(&[&[-1, -1], &[-1, 1], &[1, -1], &[1, 1]])
    }

    #[test]
    fn lemma31_example43() {
        let ex = example43(2, &rat(1, 1), &rat(1, 2), Variant::Min).unwrap();
        let rep = check_lemma31(&ex.simplex, &ex.gauge).unwrap();
        assert_eq!(rep.ratio_a, rat(2, 1));
        assert_eq!(rep.gauge_mirrored, Some(true));
        assert!(rep.holds, "{rep:?}");
    }

    #[test]
    fn lemma31_symmetric_self() {
        let rep = check_lemma31(&square(), &square()).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.ratio_a, Rational::one());
    }

    #[test]
    fn lemma32_cases() {
        let s = standard_centered_simplex(2).unwrap();
        let dirs: Vec<Direction> = [[1, 1], [-2, 1], [1, -2], [1, 0], [0, -1]]
            .iter()
            .map(|a| Direction::new(RationalVector::from_ints(a)).unwrap())
            .collect();
        assert!(check_lemma32(&s, &rat(1, 2), &dirs).unwrap());
        assert!(check_lemma32(&s, &Rational::one(), &dirs).unwrap());
        assert!(check_lemma32(&square(), &Rational::zero(), &dirs).unwrap());
        let off = s.translate(&RationalVector::from_ints(&[1, 0])).unwrap();
        assert_eq!(check_lemma32(&off, &rat(1, 2), &dirs), Err(Error::NotCentered));
        assert!(check_lemma32(&s, &rat(3, 2), &dirs).is_err());
    }

    #[test]
    fn prop33_example43() {
        let ex = example43(2, &rat(1, 1), &rat(1, 2), Variant::Min).unwrap();
        let rep = check_prop33_lemma34(&ex.simplex.negate(), &ex.gauge).unwrap();
        assert_eq!(rep.completeness, Completeness::Complete);
        assert!(rep.holds, "{rep:?}");
        let rep = check_prop33_lemma34(&square(), &square()).unwrap();
        assert_eq!(rep.ratio, Rational::one());
        assert!(rep.holds);
    }
}
