//! Planar triangles: constant width gauges and the mixed decomposition.

use crate::bodies::{is_simplex, simplex_hrep, VPolytope};
use crate::error::{Error, Result};
use crate::exact::{LinearSolution, Rational, RationalMatrix, RationalVector};
use crate::radii::{
    asymmetry, asymmetry_value, circumradius_value, diameter_value, inradius_value, is_constant_width, jung_ratio,
};

use super::{direct_factor, ConditionVector};

fn require_triangle(s: &VPolytope) -> Result<()> {
    if s.dim() != 2 {
        return Err(Error::NotPlanar);
    }
    if !is_simplex(s) {
        return Err(Error::NotATriangle);
    }
    Ok(())
}

/// Writes `C = t + λS + (1-λ)(-S)` with `λ ∈ [0,1]` when possible.
///
/// Both sides are polygons whose support functions must agree on the facet
/// normals of `S`; that fixes `(t, λ)` by a 3x3 system, and the candidate
/// is then compared with `C` as a set.
pub fn decompose_cw_triangle(s: &VPolytope, c: &VPolytope) -> Result<Option<(Rational, RationalVector)>> {
    require_triangle(s)?;
    if c.dim() != 2 {
        return Err(Error::NotPlanar);
    }
    let neg = s.negate();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for f in simplex_hrep(s)?.halfspaces() {
        let a = &f.normal;
        let hs = s.support_value(a);
        let hn = neg.support_value(a);
        // a·t + λ(h(S,a) - h(-S,a)) = h(C,a) - h(-S,a)
        rows.push(RationalVector::from(vec![a[0].clone(), a[1].clone(), &hs - &hn]));
        rhs.push(c.support_value(a) - &hn);
    }
    let m = RationalMatrix::from_vectors(&rows)?;
    let x = match m.solve(&RationalVector::from(rhs))? {
        LinearSolution::Unique(x) => x,
        _ => return Ok(None),
    };
    let lambda = x[2].clone();
    let t = RationalVector::from(vec![x[0].clone(), x[1].clone()]);
    if lambda.is_negative() || lambda > Rational::one() {
        return Ok(None);
    }
    let mixed = s.scale(&lambda)?.minkowski_sum(&neg.scale(&(Rational::one() - &lambda))?)?.translate(&t)?;
    Ok(if mixed.same_set(c) { Some((lambda, t)) } else { None })
}

/// The seven equivalent conditions for a triangle `S` and a planar gauge.
/// `S` is moved to its Minkowski center first; the direct inclusion
/// `3/2 S ⊂ S - S` depends on that.
pub fn corollary47_conditions(s: &VPolytope, c: &VPolytope) -> Result<ConditionVector> {
    require_triangle(s)?;
    if c.dim() != 2 {
        return Err(Error::NotPlanar);
    }
    let s = s.translate(&asymmetry(s)?.center.neg())?;
    let neg = s.negate();
    let one = Rational::one();
    let two = Rational::integer(2);
    let three = Rational::integer(3);
    let half = Rational::new(1, 2)?;

    let sc = asymmetry_value(c)?;
    let r = inradius_value(&s, c)?;
    let big = circumradius_value(&s, c)?;
    let r_neg = inradius_value(&neg, c)?;
    let d = diameter_value(&s, c)?;
    let right = (&sc + &one) * &d * &half;
    let ds = s.difference_body();
    let dc = c.difference_body();

    let cond1 = direct_factor(&s.scale(&Rational::new(3, 2)?)?, &ds)? <= one
        && ds.same_set(&dc.scale(&(&d * &half))?)
        && circumradius_value(&dc.scale(&(&d * &half))?, &c.scale(&right)?)? <= one
        && circumradius_value(&c.scale(&right)?, &neg.scale(&three)?)? <= one;

    let generalized = &sc * &r + &big;
    let links = [&three * &r_neg, &r_neg + &big, &three * &half * &big, generalized.clone(), right.clone()];
    let cond2 = links.windows(2).all(|w| w[0] == w[1]);
    let cond3 = generalized == right;
    let jung = jung_ratio(&s, c)?;
    let cond4 = jung == (&sc + &one) / &three;
    let cw = is_constant_width(&s, c)?;
    let cond5 = cw && big == &two * &sc * &r;
    let cond6 = cw && jung >= jung_ratio(&neg, c)?;
    let scaled = c.scale(&diameter_value(&s, &dc)?)?;
    let cond7 = match decompose_cw_triangle(&s, &scaled)? {
        Some((lambda, _)) => lambda <= half,
        None => false,
    };
    Ok(ConditionVector::new(
        "corollary-4.7",
        vec![("i", cond1), ("ii", cond2), ("iii", cond3), ("iv", cond4), ("v", cond5), ("vi", cond6), ("vii", cond7)],
    ))
}
