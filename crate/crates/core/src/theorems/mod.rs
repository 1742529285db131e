//! Evaluators for the inequality chains, equivalence theorems and
//! concentricity predicates. Every comparison is exact.

mod chains;
mod concentric;
mod lemmas;
mod planar;
mod simplex;

use serde::Serialize;

use crate::bodies::VPolytope;
use crate::error::{Error, Result};
use crate::exact::{Rational, RationalVector};
use crate::lp::{LinearProgram, LpOutcome, VarSign};

pub use chains::{eval_chain, eval_chain_with, ChainId, ChainKind, ChainReport, PairRadii, Relation};
pub use concentric::{are_mutually_concentric, is_minkowski_concentric, is_mirrored_concentric};
pub use lemmas::{check_lemma31, check_lemma32, check_prop33_lemma34, Lemma31Report, Prop33Report};
pub use planar::{corollary47_conditions, decompose_cw_triangle};
pub use simplex::{
    completeness, corollary42_check, is_equilateral, remark35_check, simplex_complete, theorem14_conditions,
    Completeness, Corollary42Report, RatioBounds,
};

/// One named boolean of an equivalence theorem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
}

/// Outcomes of all conditions of an equivalence theorem; `consistent`
/// records whether they agree, which the theorem asserts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionVector {
    pub theorem: String,
    pub conditions: Vec<Condition>,
    pub consistent: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ConditionVector {
    pub fn new(theorem: &str, conditions: Vec<(&str, bool)>) -> Self {
        let conditions: Vec<Condition> =
            conditions.into_iter().map(|(n, h)| Condition { name: n.to_string(), holds: h }).collect();
        let consistent = conditions.windows(2).all(|w| w[0].holds == w[1].holds);
        ConditionVector { theorem: theorem.to_string(), conditions, consistent, notes: Vec::new() }
    }

    pub fn values(&self) -> Vec<bool> {
        self.conditions.iter().map(|c| c.holds).collect()
    }

    pub fn all_true(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }

    pub fn all_false(&self) -> bool {
        self.conditions.iter().all(|c| !c.holds)
    }
}

/// Gauge function of a body containing the origin: the least `ρ >= 0`
/// with `z ∈ ρC`. Not symmetric in general, so not a length.
pub fn gauge_value(z: &RationalVector, c: &VPolytope) -> Result<Rational> {
    if z.dim() != c.dim() {
        return Err(Error::DimensionMismatch { expected: c.dim(), found: z.dim() });
    }
    if !c.contains_point(&RationalVector::zeros(c.dim()))? {
        return Err(Error::OriginNotInGauge);
    }
    if z.is_zero() {
        return Ok(Rational::zero());
    }
    // with the origin interior, the gauge is max_f a_f·z / b_f
    if let Some(facets) = c.facets() {
        if facets.iter().all(|f| f.offset.is_positive()) {
            return Ok(facets.iter().map(|f| f.normal.dot(z) / &f.offset).fold(Rational::zero(), Rational::max));
        }
    }
    let m = c.vertices().len();
    let mut lp = LinearProgram::new();
    let nu = lp.add_vars(m, VarSign::NonNegative);
    for j in 0..m {
        lp.set_cost(nu + j, Rational::one());
    }
    for axis in 0..z.dim() {
        let terms = c
            .vertices()
            .iter()
            .enumerate()
            .filter(|(_, w)| !w[axis].is_zero())
            .map(|(j, w)| (nu + j, w[axis].clone()))
            .collect();
        lp.add_eq(terms, z[axis].clone());
    }
    match lp.solve()? {
        LpOutcome::Optimal(sol) => Ok(sol.value),
        LpOutcome::Infeasible { .. } => Err(Error::InfiniteRadius),
        LpOutcome::Unbounded { .. } => unreachable!("nonnegative costs"),
    }
}

/// Least `ρ` with `A ⊂ ρB` (no translation), for `0 ∈ B`.
pub fn direct_factor(a: &VPolytope, b: &VPolytope) -> Result<Rational> {
    let mut best = Rational::zero();
    for v in a.vertices() {
        best = best.max(gauge_value(v, b)?);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn gauge_values() {
        let s = VPolytope::from_int_points(&[&[1, 0], &[0, 1], &[-1, -1]]);
        assert_eq!(gauge_value(&RationalVector::zeros(2), &s).unwrap(), Rational::zero());
        assert_eq!(gauge_value(&RationalVector::from_ints(&[1, 0]), &s).unwrap(), Rational::one());
        let z = RationalVector::from_ints(&[1, 1]);
        assert_ne!(gauge_value(&z, &s).unwrap(), gauge_value(&z.neg(), &s).unwrap());
        assert_eq!(gauge_value(&z.neg(), &s).unwrap(), Rational::one());
        assert_eq!(gauge_value(&z, &s).unwrap(), Rational::integer(2));
        let off = s.translate(&RationalVector::from_ints(&[5, 5])).unwrap();
        assert_eq!(gauge_value(&z, &off), Err(Error::OriginNotInGauge));
        let seg = VPolytope::from_int_points(&[&[-1, 0], &[1, 0]]);
        assert_eq!(gauge_value(&RationalVector::from_ints(&[0, 1]), &seg), Err(Error::InfiniteRadius));
        assert_eq!(direct_factor(&s.scale(&rat(1, 2)).unwrap(), &s).unwrap(), rat(1, 2));
    }

    #[test]
    fn condition_vectors() {
        let v = ConditionVector::new("t", vec![("i", true), ("ii", true)]);
        assert!(v.consistent && v.all_true());
        let v = ConditionVector::new("t", vec![("i", true), ("ii", false)]);
        assert!(!v.consistent);
    }
}
