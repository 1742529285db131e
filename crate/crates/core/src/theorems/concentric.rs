//! Concentricity predicates as joint feasibility programs.
//!
//! The quantifiers "some Minkowski center `c` of `C`" and "some translation
//! `t`" range over polytopes, so they are resolved by one LP each rather
//! than by testing the single center `asymmetry` happens to return.

use crate::bodies::VPolytope;
use crate::error::Result;
use crate::exact::{Rational, RationalVector};
use crate::lp::{LinearProgram, LpOutcome, VarSign};
use crate::radii::{
    add_center_constraints, add_center_variables, add_membership, asymmetry_value, circumradius_value, inradius_value,
};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Inner {
    Plain,
    Mirrored,
}

/// Feasibility of `inner (C - c) ⊂ K - t ⊂ outer (C - c)` with `c` a
/// Minkowski center of `C`, and with `t` a Minkowski center of `K` when
/// `mutual` is set. A negative `inner` flips the inner copy of `C`.
fn sandwich(k: &VPolytope, c: &VPolytope, inner: &Rational, outer: &Rational, mutual: bool) -> Result<bool> {
    let n = k.dim();
    let mut lp = LinearProgram::new();
    let cv = add_center_variables(&mut lp, c, &asymmetry_value(c)?);
    let tv = lp.add_vars(n, VarSign::Free);
    if mutual {
        add_center_constraints(&mut lp, k, &asymmetry_value(k)?, tv);
    }
    // inner(c_j - c) + t ∈ K
    for cj in c.vertices() {
        let linear: Vec<Vec<(usize, Rational)>> =
            (0..n).map(|a| vec![(cv + a, -inner), (tv + a, Rational::one())]).collect();
        add_membership(&mut lp, k.vertices(), &cj.scale(inner), &linear);
    }
    // v_i - t + outer c ∈ outer C
    let scaled: Vec<RationalVector> = c.vertices().iter().map(|w| w.scale(outer)).collect();
    for v in k.vertices() {
        let linear: Vec<Vec<(usize, Rational)>> =
            (0..n).map(|a| vec![(tv + a, -Rational::one()), (cv + a, outer.clone())]).collect();
        add_membership(&mut lp, &scaled, v, &linear);
    }
    Ok(matches!(lp.solve()?, LpOutcome::Optimal(_)))
}

fn concentric(k: &VPolytope, c: &VPolytope, inner: Inner, mutual: bool) -> Result<bool> {
    let outer = circumradius_value(k, c)?;
    let inner = match inner {
        Inner::Plain => inradius_value(k, c)?,
        Inner::Mirrored => -inradius_value(k, &c.negate())?,
    };
    sandwich(k, c, &inner, &outer, mutual)
}

/// `r(K,C)(C - c) ⊂ K - t ⊂ R(K,C)(C - c)` for some Minkowski center `c`
/// of `C` and some `t`.
pub fn is_minkowski_concentric(k: &VPolytope, c: &VPolytope) -> Result<bool> {
    concentric(k, c, Inner::Plain, false)
}

/// `-r(K,-C)(C - c) ⊂ K - t ⊂ R(K,C)(C - c)` for some Minkowski center `c`
/// of `C` and some `t`.
pub fn is_mirrored_concentric(k: &VPolytope, c: &VPolytope) -> Result<bool> {
    concentric(k, c, Inner::Mirrored, false)
}

/// Minkowski concentricity of `K` with respect to `C` where `t` can be
/// taken to be a Minkowski center of `K`; symmetric in `K` and `C`.
pub fn are_mutually_concentric(k: &VPolytope, c: &VPolytope) -> Result<bool> {
    concentric(k, c, Inner::Plain, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{example43, Variant};
    use crate::exact::rat;

    fn tri() -> VPolytope {
        VPolytope::from_int_points(&[&[1, 0], &[0, 1], &[-1, -1]])
    }

    #[test]
    fn self_pairs() {
        let k = tri().translate(&RationalVector::from_ints(&[2, 1])).unwrap();
        assert!(is_minkowski_concentric(&k, &tri()).unwrap());
        assert!(is_mirrored_concentric(&tri(), &tri()).unwrap());
        assert!(are_mutually_concentric(&k, &tri()).unwrap());
    }

    #[test]
    fn example43_pairs() {
        let ex = example43(2, &rat(1, 1), &rat(1, 2), Variant::Min).unwrap();
        let (s, c) = (&ex.simplex, &ex.gauge);
        assert!(are_mutually_concentric(s, c).unwrap());
        assert!(are_mutually_concentric(c, s).unwrap());
        assert!(is_mirrored_concentric(s, c).unwrap());
        assert!(is_mirrored_concentric(c, s).unwrap());
    }

    #[test]
    fn off_center_square_in_triangle() {
        // a unit square with a corner at the triangle's incenter is not
        // sandwiched between concentric copies
        let s = VPolytope::from_int_points(&[&[0, 0], &[6, 0], &[0, 6]]);
        let k = VPolytope::from_int_points(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let plain = is_minkowski_concentric(&k, &s).unwrap();
        let mutual = are_mutually_concentric(&k, &s).unwrap();
        assert!(!mutual || plain);
    }
}
