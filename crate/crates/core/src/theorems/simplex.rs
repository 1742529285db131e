//! Completeness of simplices and the equivalences built on it.

use serde::Serialize;

use crate::bodies::{is_simplex, simplex_hrep, VPolytope};
use crate::error::{Error, Result};
use crate::exact::{Rational, RationalVector};
use crate::lp::{LinearProgram, LpOutcome, VarSign};
use crate::radii::{circumradius_value, diameter_value, is_constant_width, sym_gauge_norm};

use super::chains::{eval_chain_with, ChainId, PairRadii};
use super::{direct_factor, ConditionVector};

fn require_simplex(s: &VPolytope) -> Result<()> {
    if is_simplex(s) {
        Ok(())
    } else {
        Err(Error::DegenerateSimplex)
    }
}

/// Decides completeness of a simplex `S` with respect to `C`.
///
/// Completeness is unchanged when `C` is replaced by `C' = C - C`, and for
/// a symmetric gauge a simplex is complete iff
/// `S - S ⊂ D' C' ⊂ (n+1)((S - c) ∩ (-S + c))` for some `c`, where
/// `D' = D(S, C')`. The first inclusion is checked vertex by vertex; the
/// second is linear in `c` through the facet description `a·x <= b` of `S`:
/// every vertex `w` of `D'C'` needs `a·w/(n+1) + a·c <= b` and
/// `a·c - a·w/(n+1) <= b`. Returns a witness `c`.
pub fn simplex_complete(s: &VPolytope, c: &VPolytope) -> Result<(bool, Option<RationalVector>)> {
    require_simplex(s)?;
    let n = s.dim();
    let cc = c.difference_body();
    let d = diameter_value(s, &cc)?;
    let big = cc.scale(&d)?;
    let verts = s.vertices();
    for i in 0..verts.len() {
        for j in 0..verts.len() {
            if i != j && !big.contains_point(&verts[i].sub(&verts[j]))? {
                return Ok((false, None));
            }
        }
    }
    let h = simplex_hrep(s)?;
    let inv = Rational::integer(n as i64 + 1).recip()?;
    let mut lp = LinearProgram::new();
    let cv = lp.add_vars(n, VarSign::Free);
    for f in h.halfspaces() {
        let terms: Vec<(usize, Rational)> =
            (0..n).filter(|&a| !f.normal[a].is_zero()).map(|a| (cv + a, f.normal[a].clone())).collect();
        for w in big.vertices() {
            let aw = f.normal.dot(w) * &inv;
            lp.add_le(terms.clone(), &f.offset - &aw);
            lp.add_le(terms.clone(), &f.offset + &aw);
        }
    }
    match lp.solve()? {
        LpOutcome::Optimal(sol) => Ok((true, Some((0..n).map(|a| sol.primal[cv + a].clone()).collect()))),
        _ => Ok((false, None)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Completeness {
    Complete,
    NotComplete,
    /// no decision procedure applies to this input
    Undecidable,
}

/// Completeness where a criterion is available: simplices, constant width
/// bodies (always complete), and planar bodies (complete iff constant width).
pub fn completeness(k: &VPolytope, c: &VPolytope) -> Result<Completeness> {
    if is_simplex(k) {
        return Ok(if simplex_complete(k, c)?.0 { Completeness::Complete } else { Completeness::NotComplete });
    }
    if is_constant_width(k, c)? {
        return Ok(Completeness::Complete);
    }
    if k.dim() == 2 {
        return Ok(Completeness::NotComplete);
    }
    Ok(Completeness::Undecidable)
}

/// All edges have length `D(S, C)` in the `(C - C)/2` norm.
pub fn is_equilateral(s: &VPolytope, c: &VPolytope) -> Result<bool> {
    require_simplex(s)?;
    let verts = s.vertices();
    let mut lengths = Vec::new();
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            lengths.push(sym_gauge_norm(&verts[j].sub(&verts[i]), c)?);
        }
    }
    Ok(lengths.windows(2).all(|w| w[0] == w[1]))
}

/// The five equivalent conditions on a simplex `S` and a gauge `C`:
/// (i) the inclusion chain
/// `(n+1)/n S ⊂_t S - S ⊂ D/2 (C - C) ⊂_t (s(C)+1) D/2 C ⊂_t (n+1)(-S)`,
/// (ii) equality throughout chains 1.6 and 1.7, (iii) equality in 1.9,
/// (iv) equality in 1.3, (v) completeness with `R = n s(C) r`.
pub fn theorem14_conditions(s: &VPolytope, c: &VPolytope) -> Result<ConditionVector> {
    require_simplex(s)?;
    let p = PairRadii::compute(s, c)?;
    theorem14_with(s, c, &p)
}

pub(crate) fn theorem14_with(s: &VPolytope, c: &VPolytope, p: &PairRadii) -> Result<ConditionVector> {
    let n = s.dim() as i64;
    let one = Rational::one();
    let nn = Rational::integer(n);
    let half_d = &p.diameter * Rational::new(1, 2)?;
    let sc = p.s_gauge().clone();
    let db = s.difference_body();
    let cc = c.difference_body();

    let inc1 = circumradius_value(&s.scale(&((&nn + &one) / &nn))?, &db)? <= one;
    let inc2 = direct_factor(&db, &cc.scale(&half_d)?)? <= one;
    let inc3 = circumradius_value(&cc.scale(&half_d)?, &c.scale(&((&sc + &one) * &half_d))?)? <= one;
    let inc4 = circumradius_value(&c.scale(&((&sc + &one) * &half_d))?, &s.negate().scale(&(&nn + &one))?)? <= one;
    let cond1 = inc1 && inc2 && inc3 && inc4;

    let cond2 = eval_chain_with(ChainId::Chain16, s, c, p)?.all_equal()
        && eval_chain_with(ChainId::Chain17, s, c, p)?.all_equal();
    let cond3 = eval_chain_with(ChainId::Generalized19, s, c, p)?.all_equal();
    let cond4 = eval_chain_with(ChainId::JungBound13, s, c, p)?.all_equal();
    let cond5 = simplex_complete(s, c)?.0 && p.circumradius == &nn * &sc * &p.inradius;
    Ok(ConditionVector::new(
        "theorem-1.4",
        vec![("i", cond1), ("ii", cond2), ("iii", cond3), ("iv", cond4), ("v", cond5)],
    ))
}

/// Chain 1.11 holds, and equality throughout chain 1.10 is equivalent to
/// `D/2 (s(C)+1) C ⊂_t (s(K)+1)(-K)`.
pub fn remark35_check(k: &VPolytope, c: &VPolytope) -> Result<ConditionVector> {
    let p = PairRadii::compute(k, c)?;
    let inclusions = eval_chain_with(ChainId::ExtendedJung111, k, c, &p)?;
    let equal = eval_chain_with(ChainId::CompleteChain110, k, c, &p)?.all_equal();
    let one = Rational::one();
    let scaled = c.scale(&(&p.diameter * Rational::new(1, 2)? * (p.s_gauge() + &one)))?;
    let target = k.negate().scale(&(p.s_body() + &one))?;
    let cond2 = circumradius_value(&scaled, &target)? <= one;
    let mut v = ConditionVector::new("remark-3.5", vec![("i", equal), ("ii", cond2)]);
    if !inclusions.holds {
        v.notes.push("chain 1.11 violated".into());
    }
    v.notes.push(format!("chain 1.11 factors: {}", join(&inclusions.values)));
    Ok(v)
}

fn join(values: &[Rational]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// `R/r` of one simplex against the bounds `[n/s(C), n s(C)]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioBounds {
    pub ratio: Rational,
    pub lower: Rational,
    pub upper: Rational,
    pub within: bool,
    pub attains_lower: bool,
    pub attains_upper: bool,
    pub theorem14_all_true: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Corollary42Report {
    /// false when `S` is not complete; the remaining fields are then absent
    pub applicable: bool,
    pub complete_plus: bool,
    pub complete_minus: bool,
    pub plus: Option<RatioBounds>,
    pub minus: Option<RatioBounds>,
    /// `S` attains the upper bound iff `-S` attains the lower bound iff the
    /// conditions of theorem-1.4 hold for `S`, and the same with roles swapped
    pub cross_law: bool,
    pub holds: bool,
}

pub fn corollary42_check(s: &VPolytope, c: &VPolytope) -> Result<Corollary42Report> {
    require_simplex(s)?;
    let neg = s.negate();
    let complete_plus = simplex_complete(s, c)?.0;
    let complete_minus = simplex_complete(&neg, c)?.0;
    if !complete_plus {
        return Ok(Corollary42Report {
            applicable: false,
            complete_plus,
            complete_minus,
            plus: None,
            minus: None,
            cross_law: true,
            holds: !complete_minus,
        });
    }
    let bounds = |body: &VPolytope| -> Result<RatioBounds> {
        let p = PairRadii::compute(body, c)?;
        let nn = Rational::integer(body.dim() as i64);
        let ratio = p.circumradius.checked_div(&p.inradius)?;
        let lower = &nn / p.s_gauge();
        let upper = &nn * p.s_gauge();
        Ok(RatioBounds {
            within: lower <= ratio && ratio <= upper,
            attains_lower: ratio == lower,
            attains_upper: ratio == upper,
            theorem14_all_true: theorem14_with(body, c, &p)?.all_true(),
            ratio,
            lower,
            upper,
        })
    };
    let plus = bounds(s)?;
    let minus = bounds(&neg)?;
    let cross_law = plus.attains_upper == minus.attains_lower
        && minus.attains_lower == plus.theorem14_all_true
        && minus.attains_upper == plus.attains_lower
        && plus.attains_lower == minus.theorem14_all_true;
    let holds = complete_minus && plus.within && minus.within && cross_law;
    Ok(Corollary42Report {
        applicable: true,
        complete_plus,
        complete_minus,
        plus: Some(plus),
        minus: Some(minus),
        cross_law,
        holds,
    })
}
