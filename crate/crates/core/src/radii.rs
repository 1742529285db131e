//! Circumradius, inradius, diameter and Minkowski asymmetry.
//!
//! Every functional is an exact LP. When the facets of the containing body
//! are cheap to enumerate the small facet form is used, otherwise the
//! vertex form. Bodies need not be canonical; redundant points only
//! enlarge the programs.

use rayon::prelude::*;
use serde::Serialize;

use crate::bodies::{Direction, VPolytope};
use crate::error::{Error, Result};
use crate::exact::{Rational, RationalVector};
use crate::lp::{LinearProgram, LpOutcome, VarSign};

/// What attains an optimal value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Attaining {
    /// Indices of body vertices touching the boundary of the gauge.
    Contacts(Vec<usize>),
    /// Indices of a diametral vertex pair.
    Pair(usize, usize),
    Center(RationalVector),
    Nothing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadiiResult {
    pub value: Rational,
    pub translation: RationalVector,
    pub attaining: Attaining,
}

/// Circumradius outcome; infinite when no dilate of the gauge can hold the
/// body, i.e. the affine hulls are incompatible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Radius {
    Finite(RadiiResult),
    Infinite,
}

impl Radius {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            Radius::Finite(r) => Some(&r.value),
            Radius::Infinite => None,
        }
    }

    pub fn finite(self) -> Result<RadiiResult> {
        match self {
            Radius::Finite(r) => Ok(r),
            Radius::Infinite => Err(Error::InfiniteRadius),
        }
    }
}

fn same_dim(k: &VPolytope, c: &VPolytope) -> Result<()> {
    if k.dim() != c.dim() {
        return Err(Error::DimensionMismatch { expected: k.dim(), found: c.dim() });
    }
    Ok(())
}

/// Variable and row layout of the circumradius program.
pub(crate) struct CircumProgram {
    pub lp: LinearProgram,
    pub dim: usize,
    /// first translation variable; `lambda` follows the `dim` entries
    pub t: usize,
    pub lambda: usize,
    /// first row of the `dim` coordinate rows of vertex `i` is `i * (dim + 1)`
    pub block: usize,
}

/// Builds `minimize λ` over `t` free, `λ >= 0`, `ν_ij >= 0` with
///
/// ```text
///   t + Σ_j ν_ij c_j = v_i      (dim rows per body vertex)
///   Σ_j ν_ij - λ     = 0        (one row per body vertex)
/// ```
///
/// The containment `v_i ∈ t + λC` reads `v_i = t + λ Σ_j μ_ij c_j` with
/// convex weights `μ_i`, which is bilinear in `(λ, μ)`. Substituting
/// `ν_ij = λ μ_ij` turns the convexity constraint `Σ_j μ_ij = 1` into
/// `Σ_j ν_ij = λ` and makes the whole program linear; any feasible `ν`
/// with `λ > 0` maps back to `μ = ν / λ`.
pub(crate) fn circumradius_program(k: &VPolytope, c: &VPolytope) -> CircumProgram {
    let n = k.dim();
    let mut lp = LinearProgram::new();
    let t = lp.add_vars(n, VarSign::Free);
    let lambda = lp.add_var(VarSign::NonNegative, Rational::one());
    let mc = c.vertices().len();
    for v in k.vertices() {
        let nu = lp.add_vars(mc, VarSign::NonNegative);
        for axis in 0..n {
            let mut terms = vec![(t + axis, Rational::one())];
            for (j, cj) in c.vertices().iter().enumerate() {
                if !cj[axis].is_zero() {
                    terms.push((nu + j, cj[axis].clone()));
                }
            }
            lp.add_eq(terms, v[axis].clone());
        }
        let mut terms: Vec<(usize, Rational)> = (0..mc).map(|j| (nu + j, Rational::one())).collect();
        terms.push((lambda, -Rational::one()));
        lp.add_eq(terms, Rational::zero());
    }
    CircumProgram { lp, dim: n, t, lambda, block: n + 1 }
}

/// Optimal circumradius program together with its dual normals.
pub(crate) struct CircumSolution {
    pub value: Rational,
    pub translation: RationalVector,
    /// dual block `y_i` of each body vertex; `Σ y_i = 0`
    pub normals: Vec<RationalVector>,
}

pub(crate) fn solve_circumradius(k: &VPolytope, c: &VPolytope) -> Result<Option<CircumSolution>> {
    same_dim(k, c)?;
    let prog = circumradius_program(k, c);
    let sol = match prog.lp.solve()? {
        LpOutcome::Optimal(sol) => sol,
        LpOutcome::Infeasible { .. } => return Ok(None),
        LpOutcome::Unbounded { .. } => unreachable!("λ >= 0 bounds the objective"),
    };
    let n = prog.dim;
    let translation: RationalVector = (0..n).map(|a| sol.primal[prog.t + a].clone()).collect();
    let normals =
        (0..k.vertices().len()).map(|i| (0..n).map(|a| sol.dual[i * prog.block + a].clone()).collect()).collect();
    Ok(Some(CircumSolution { value: sol.primal[prog.lambda].clone(), translation, normals }))
}

/// `R(K, C)`: the least `λ` with `K ⊂ t + λC` for some `t`.
pub fn circumradius(k: &VPolytope, c: &VPolytope) -> Result<Radius> {
    let Some(sol) = solve_circumradius(k, c)? else {
        return Ok(Radius::Infinite);
    };
    // vertices carrying a nonzero dual block lie on the boundary of t + λC
    let contacts = sol.normals.iter().enumerate().filter(|(_, y)| !y.is_zero()).map(|(i, _)| i).collect();
    Ok(Radius::Finite(RadiiResult {
        value: sol.value,
        translation: sol.translation,
        attaining: Attaining::Contacts(contacts),
    }))
}

/// Finite circumradius value; errors when infinite.
pub fn circumradius_value(k: &VPolytope, c: &VPolytope) -> Result<Rational> {
    if let Some((value, _)) = circumradius_by_facets(k, c)? {
        return Ok(value);
    }
    Ok(circumradius(k, c)?.finite()?.value)
}

/// Circumradius through the facets `a·x <= b` of a full-dimensional `C`:
/// minimize `λ` subject to `a·t + λ b >= a·v` for all facets and body
/// vertices. That program has many rows and `n + 1` columns, so its dual
///
/// ```text
///   maximize Σ y_fv a_f·v   s.t.  Σ y_fv a_f = 0,  Σ y_fv b_f <= 1,  y >= 0
/// ```
///
/// is solved instead; `(t, λ)` are read back from the dual's multipliers.
/// `None` when the facets of `C` are unavailable.
fn circumradius_by_facets(k: &VPolytope, c: &VPolytope) -> Result<Option<(Rational, RationalVector)>> {
    same_dim(k, c)?;
    let Some(facets) = c.facets() else {
        return Ok(None);
    };
    let n = k.dim();
    let mut lp = LinearProgram::new();
    let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); n + 1];
    for f in facets {
        for v in k.vertices() {
            let y = lp.add_var(VarSign::NonNegative, -f.normal.dot(v));
            for (a, row) in rows.iter_mut().take(n).enumerate() {
                if !f.normal[a].is_zero() {
                    row.push((y, f.normal[a].clone()));
                }
            }
            if !f.offset.is_zero() {
                rows[n].push((y, f.offset.clone()));
            }
        }
    }
    let last = rows.pop().expect("n + 1 rows");
    for row in rows {
        lp.add_eq(row, Rational::zero());
    }
    lp.add_le(last, Rational::one());
    match lp.solve()? {
        LpOutcome::Optimal(sol) => {
            let translation = (0..n).map(|a| -&sol.dual[a]).collect();
            Ok(Some((-&sol.dual[n], translation)))
        }
        _ => unreachable!("y = 0 is feasible and the value is bounded by R(K,C)"),
    }
}

/// `r(K, C)`: the largest `λ` with `t + λC ⊂ K`. Solved directly by
/// `maximize λ` subject to `λ c_j + t = Σ_i α_ji v_i`, `Σ_i α_ji = 1`.
/// A single-point gauge makes the value unbounded and is rejected.
pub fn inradius(k: &VPolytope, c: &VPolytope) -> Result<RadiiResult> {
    same_dim(k, c)?;
    if let Some(r) = inradius_by_facets(k, c)? {
        return Ok(r);
    }
    let n = k.dim();
    let mut lp = LinearProgram::new();
    let t = lp.add_vars(n, VarSign::Free);
    let lambda = lp.add_var(VarSign::NonNegative, -Rational::one());
    let mk = k.vertices().len();
    for cj in c.vertices() {
        let alpha = lp.add_vars(mk, VarSign::NonNegative);
        for axis in 0..n {
            let mut terms = vec![(t + axis, Rational::one())];
            if !cj[axis].is_zero() {
                terms.push((lambda, cj[axis].clone()));
            }
            for (i, v) in k.vertices().iter().enumerate() {
                if !v[axis].is_zero() {
                    terms.push((alpha + i, -&v[axis]));
                }
            }
            lp.add_eq(terms, Rational::zero());
        }
        lp.add_eq((0..mk).map(|i| (alpha + i, Rational::one())).collect(), Rational::one());
    }
    match lp.solve()? {
        LpOutcome::Optimal(sol) => Ok(RadiiResult {
            value: sol.primal[lambda].clone(),
            translation: (0..n).map(|a| sol.primal[t + a].clone()).collect(),
            attaining: Attaining::Nothing,
        }),
        LpOutcome::Unbounded { .. } => Err(Error::InvalidBody("gauge is a single point".into())),
        LpOutcome::Infeasible { .. } => unreachable!("λ = 0 with t a vertex is feasible"),
    }
}

/// Same value through the facets `a·x <= b` of `K`: maximize `λ` subject
/// to `a·t + λ h(C, a) <= b`.
fn inradius_by_facets(k: &VPolytope, c: &VPolytope) -> Result<Option<RadiiResult>> {
    let Some(facets) = k.facets() else {
        return Ok(None);
    };
    if c.vertices().len() == 1 {
        return Err(Error::InvalidBody("gauge is a single point".into()));
    }
    let n = k.dim();
    let mut lp = LinearProgram::new();
    let t = lp.add_vars(n, VarSign::Free);
    let lambda = lp.add_var(VarSign::NonNegative, -Rational::one());
    for f in facets {
        let mut terms: Vec<(usize, Rational)> =
            (0..n).filter(|&a| !f.normal[a].is_zero()).map(|a| (t + a, f.normal[a].clone())).collect();
        let h = c.support_value(&f.normal);
        if !h.is_zero() {
            terms.push((lambda, h));
        }
        lp.add_le(terms, f.offset.clone());
    }
    match lp.solve()? {
        LpOutcome::Optimal(sol) => Ok(Some(RadiiResult {
            value: sol.primal[lambda].clone(),
            translation: (0..n).map(|a| sol.primal[t + a].clone()).collect(),
            attaining: Attaining::Nothing,
        })),
        // a gauge inside a hyperplane can be dilated without bound
        LpOutcome::Unbounded { .. } => Ok(None),
        LpOutcome::Infeasible { .. } => unreachable!("λ = 0 with t a vertex is feasible"),
    }
}

pub fn inradius_value(k: &VPolytope, c: &VPolytope) -> Result<Rational> {
    Ok(inradius(k, c)?.value)
}

/// Norm of `z` induced by `(C - C)/2`: the least `ρ` with
/// `z = Σ ν_j c_j - Σ ν'_j c_j`, `Σ ν_j = Σ ν'_j = ρ/2`.
pub fn sym_gauge_norm(z: &RationalVector, c: &VPolytope) -> Result<Rational> {
    if z.dim() != c.dim() {
        return Err(Error::DimensionMismatch { expected: c.dim(), found: z.dim() });
    }
    if z.is_zero() {
        return Ok(Rational::zero());
    }
    if c.facets().is_some() {
        let seg = VPolytope::segment(RationalVector::zeros(z.dim()), z.clone())?;
        if let Some((r, _)) = circumradius_by_facets(&seg, c)? {
            return Ok(r * Rational::integer(2));
        }
    }
    let m = c.vertices().len();
    let mut lp = LinearProgram::new();
    let rho = lp.add_var(VarSign::NonNegative, Rational::one());
    let nu = lp.add_vars(m, VarSign::NonNegative);
    let nu2 = lp.add_vars(m, VarSign::NonNegative);
    for axis in 0..z.dim() {
        let mut terms = Vec::new();
        for (j, cj) in c.vertices().iter().enumerate() {
            if !cj[axis].is_zero() {
                terms.push((nu + j, cj[axis].clone()));
                terms.push((nu2 + j, -&cj[axis]));
            }
        }
        lp.add_eq(terms, z[axis].clone());
    }
    let half = Rational::new(-1, 2).expect("nonzero denominator");
    for first in [nu, nu2] {
        let mut terms: Vec<(usize, Rational)> = (0..m).map(|j| (first + j, Rational::one())).collect();
        terms.push((rho, half.clone()));
        lp.add_eq(terms, Rational::zero());
    }
    match lp.solve()? {
        LpOutcome::Optimal(sol) => Ok(sol.value),
        LpOutcome::Infeasible { .. } => Err(Error::InfiniteRadius),
        LpOutcome::Unbounded { .. } => unreachable!("ρ >= 0 bounds the objective"),
    }
}

/// `D(K, C)`: the largest `(C - C)/2`-norm of a vertex difference. Ties
/// are broken towards the lexicographically smallest vertex pair.
pub fn diameter(k: &VPolytope, c: &VPolytope) -> Result<RadiiResult> {
    same_dim(k, c)?;
    let vs = k.vertices();
    let pairs: Vec<(usize, usize)> = (0..vs.len()).flat_map(|i| (i + 1..vs.len()).map(move |j| (i, j))).collect();
    let norms = match symmetric_gauge_facets(c) {
        // for C symmetric about m, (C - C)/2 = C - m and the norm is
        // max_f a_f·z / (b_f - a_f·m)
        Some((facets, m)) => pairs
            .par_iter()
            .map(|&(i, j)| {
                let z = vs[j].sub(&vs[i]);
                facets
                    .iter()
                    .map(|f| (f.normal.dot(&z)).checked_div(&(&f.offset - &f.normal.dot(&m))))
                    .try_fold(Rational::zero(), |acc, x| x.map(|x| acc.max(x)))
            })
            .collect::<Result<Vec<_>>>()?,
        None => pairs.par_iter().map(|&(i, j)| sym_gauge_norm(&vs[j].sub(&vs[i]), c)).collect::<Result<Vec<_>>>()?,
    };
    let key = |&(i, j): &(usize, usize)| {
        if vs[i] <= vs[j] {
            (&vs[i], &vs[j], i, j)
        } else {
            (&vs[j], &vs[i], j, i)
        }
    };
    let mut best: Option<(Rational, (usize, usize))> = None;
    for (p, d) in pairs.iter().zip(norms) {
        let replace = match &best {
            None => true,
            Some((bd, bp)) => d > *bd || (d == *bd && key(p) < key(bp)),
        };
        if replace {
            best = Some((d, *p));
        }
    }
    let Some((value, pair)) = best else {
        // single point
        return Ok(RadiiResult {
            value: Rational::zero(),
            translation: RationalVector::zeros(k.dim()),
            attaining: Attaining::Pair(0, 0),
        });
    };
    let (_, _, a, b) = key(&pair);
    Ok(RadiiResult { value, translation: RationalVector::zeros(k.dim()), attaining: Attaining::Pair(a, b) })
}

pub fn diameter_value(k: &VPolytope, c: &VPolytope) -> Result<Rational> {
    Ok(diameter(k, c)?.value)
}

/// Minkowski asymmetry with one Minkowski center.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Asymmetry {
    pub s: Rational,
    pub center: RationalVector,
}

fn symmetric_gauge_facets(c: &VPolytope) -> Option<(&[crate::bodies::Halfspace], RationalVector)> {
    let m = symmetric_points(c)?;
    Some((c.facets()?, m))
}

/// Symmetry of the listed point set itself, which suffices for the hull.
fn symmetric_points(k: &VPolytope) -> Option<RationalVector> {
    let c = k.centroid();
    let two_c = c.scale(&Rational::integer(2));
    let mut pts: Vec<RationalVector> = k.vertices().to_vec();
    pts.sort();
    pts.dedup();
    let mut reflected: Vec<RationalVector> = pts.iter().map(|v| two_c.sub(v)).collect();
    reflected.sort();
    (reflected == pts).then(|| RationalVector::mean(&pts))
}

/// `s(K) = R(-K, K)`. From `-K ⊂ t* + sK` the point `c = -t*/(1+s)`
/// satisfies `-(K - c) ⊂ s(K - c)`, so it is a Minkowski center.
pub fn asymmetry(k: &VPolytope) -> Result<Asymmetry> {
    if let Some(center) = symmetric_points(k) {
        return Ok(Asymmetry { s: Rational::one(), center });
    }
    let (value, translation) = match circumradius_by_facets(&k.negate(), k)? {
        Some(found) => found,
        None => {
            let r = circumradius(&k.negate(), k)?.finite()?;
            (r.value, r.translation)
        }
    };
    let denom = (Rational::one() + &value).recip()?;
    Ok(Asymmetry { center: translation.neg().scale(&denom), s: value })
}

pub fn asymmetry_value(k: &VPolytope) -> Result<Rational> {
    Ok(asymmetry(k)?.s)
}

/// Whether `c` is a Minkowski center: `-v + (1+s)c ∈ sK` for every vertex.
pub fn is_minkowski_center(k: &VPolytope, c: &RationalVector) -> Result<bool> {
    let s = asymmetry(k)?.s;
    is_center_for(k, &s, c)
}

pub(crate) fn is_center_for(k: &VPolytope, s: &Rational, c: &RationalVector) -> Result<bool> {
    if c.dim() != k.dim() {
        return Err(Error::DimensionMismatch { expected: k.dim(), found: c.dim() });
    }
    let sk = k.scale(s)?;
    let shifted = c.scale(&(Rational::one() + s));
    for v in k.vertices() {
        if !sk.contains_point(&shifted.sub(v))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Adds variables `c` (free) and `β_j >= 0` constraining `c` to the
/// Minkowski-center polytope of `k`:
/// `-v_j + (1+s)c = s Σ_l β_jl v_l`, `Σ_l β_jl = 1` for every vertex `v_j`.
/// Returns the index of the first coordinate of `c`.
pub(crate) fn add_center_variables(lp: &mut LinearProgram, k: &VPolytope, s: &Rational) -> usize {
    let n = k.dim();
    let c = lp.add_vars(n, VarSign::Free);
    add_center_constraints(lp, k, s, c);
    c
}

pub(crate) fn add_center_constraints(lp: &mut LinearProgram, k: &VPolytope, s: &Rational, c: usize) {
    let n = k.dim();
    let m = k.vertices().len();
    let one_plus = Rational::one() + s;
    for vj in k.vertices() {
        let beta = lp.add_vars(m, VarSign::NonNegative);
        for axis in 0..n {
            let mut terms = vec![(c + axis, one_plus.clone())];
            for (l, vl) in k.vertices().iter().enumerate() {
                if !vl[axis].is_zero() {
                    terms.push((beta + l, -(s * &vl[axis])));
                }
            }
            lp.add_eq(terms, vj[axis].clone());
        }
        lp.add_eq((0..m).map(|l| (beta + l, Rational::one())).collect(), Rational::one());
    }
}

/// Adds `Σ_l α_l w_l = rhs + Σ (coef · var)` as membership of an affine
/// expression in `conv(points)`: rows `Σ_l α_l w_l - Σ coef·var = rhs`,
/// `Σ α = 1`.
pub(crate) fn add_membership(
    lp: &mut LinearProgram,
    points: &[RationalVector],
    rhs: &RationalVector,
    linear: &[Vec<(usize, Rational)>],
) {
    let alpha = lp.add_vars(points.len(), VarSign::NonNegative);
    for axis in 0..rhs.dim() {
        let mut terms: Vec<(usize, Rational)> = points
            .iter()
            .enumerate()
            .filter(|(_, w)| !w[axis].is_zero())
            .map(|(l, w)| (alpha + l, w[axis].clone()))
            .collect();
        for (var, coef) in &linear[axis] {
            terms.push((*var, -coef));
        }
        lp.add_eq(terms, rhs[axis].clone());
    }
    lp.add_eq((0..points.len()).map(|l| (alpha + l, Rational::one())).collect(), Rational::one());
}

/// `b_s(K, C) = 2 h(K - K, s) / h(C - C, s)`.
pub fn breadth(k: &VPolytope, c: &VPolytope, s: &Direction) -> Result<Rational> {
    same_dim(k, c)?;
    if s.vector().dim() != k.dim() {
        return Err(Error::DimensionMismatch { expected: k.dim(), found: s.vector().dim() });
    }
    let width = |p: &VPolytope| p.support_value(s.vector()) + p.support_value(&s.vector().neg());
    let wc = width(c);
    if wc.is_zero() {
        return Err(Error::InfiniteRadius);
    }
    Ok(Rational::integer(2) * width(k) / wc)
}

/// `j(K, C) = R(K, C) / D(K, C)`.
pub fn jung_ratio(k: &VPolytope, c: &VPolytope) -> Result<Rational> {
    let r = circumradius_value(k, c)?;
    let d = diameter_value(k, c)?;
    if d.is_zero() {
        return Err(Error::ZeroRadius);
    }
    Ok(r / d)
}

/// Constant width: `K - K = (D(K,C)/2)(C - C)` as point sets.
pub fn is_constant_width(k: &VPolytope, c: &VPolytope) -> Result<bool> {
    let d = diameter_value(k, c)?;
    let half = d * Rational::new(1, 2)?;
    let lhs = k.difference_body();
    let rhs = c.difference_body().scale(&half)?;
    Ok(lhs.same_set(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn square() -> VPolytope {
        VPolytope::from_int_points(&[&[-1, -1], &[-1, 1], &[1, -1], &[1, 1]])
    }

    fn tri() -> VPolytope {
        VPolytope::from_int_points(&[&[1, 0], &[0, 1], &[-1, -1]])
    }

    #[test]
    fn circumradius_examples() {
        let r = circumradius(&tri(), &tri()).unwrap().finite().unwrap();
        assert_eq!(r.value, Rational::one());
        assert_eq!(r.translation, RationalVector::zeros(2));
        assert_eq!(circumradius_value(&tri().negate(), &tri()).unwrap(), Rational::integer(2));
        let r = circumradius(&square(), &tri()).unwrap().finite().unwrap();
        assert_eq!(r.value, rat(8, 3));
        assert_eq!(r.translation, RationalVector::new(vec![rat(-1, 3), rat(-1, 3)]));
    }

    #[test]
    fn infinite_when_hulls_clash() {
        let seg = VPolytope::from_int_points(&[&[0, 0], &[1, 0]]);
        assert_eq!(circumradius(&tri(), &seg).unwrap(), Radius::Infinite);
        assert_eq!(
            circumradius_value(&seg, &seg.translate(&RationalVector::from_ints(&[0, 5])).unwrap()).unwrap(),
            Rational::one()
        );
    }

    #[test]
    fn inradius_examples() {
        assert_eq!(inradius_value(&tri(), &tri()).unwrap(), Rational::one());
        assert_eq!(inradius_value(&square(), &tri()).unwrap(), Rational::one());
        assert_eq!(inradius_value(&tri(), &square()).unwrap(), rat(3, 8));
    }

    #[test]
    fn norms() {
        let c = tri();
        assert_eq!(sym_gauge_norm(&RationalVector::zeros(2), &c).unwrap(), Rational::zero());
        let z = RationalVector::from_ints(&[2, -2]);
        assert_eq!(sym_gauge_norm(&z, &c).unwrap(), Rational::integer(4));
        assert_eq!(sym_gauge_norm(&z.neg(), &c).unwrap(), Rational::integer(4));
        let seg = VPolytope::from_int_points(&[&[0, 0], &[1, 0]]);
        assert_eq!(sym_gauge_norm(&RationalVector::from_ints(&[0, 1]), &seg), Err(Error::InfiniteRadius));
    }

    #[test]
    fn diameters() {
        let d = diameter(&square(), &tri()).unwrap();
        assert_eq!(d.value, Rational::integer(4));
        let Attaining::Pair(a, b) = d.attaining else { panic!() };
        let sq = square();
        let mut pair = [sq.vertices()[a].to_string(), sq.vertices()[b].to_string()];
        pair.sort();
        assert!(pair == ["(-1, 1)", "(1, -1)"] || pair == ["(-1, -1)", "(1, 1)"], "{pair:?}");
        let seg = VPolytope::from_int_points(&[&[0, 0], &[3, 0]]);
        assert_eq!(jung_ratio(&seg, &square()).unwrap(), rat(1, 2));
    }

    #[test]
    fn asymmetry_examples() {
        let a = asymmetry(&square()).unwrap();
        assert_eq!((a.s, a.center), (Rational::one(), RationalVector::zeros(2)));
        let a = asymmetry(&tri()).unwrap();
        assert_eq!(a.s, Rational::integer(2));
        assert_eq!(a.center, RationalVector::zeros(2));
        let std = VPolytope::from_int_points(&[&[0, 0], &[3, 0], &[0, 3]]);
        let a = asymmetry(&std).unwrap();
        assert_eq!(a.center, RationalVector::from_ints(&[1, 1]));
        assert!(is_minkowski_center(&std, &a.center).unwrap());
        assert!(!is_minkowski_center(&std, &RationalVector::from_ints(&[0, 0])).unwrap());
    }

    #[test]
    fn breadth_and_width() {
        let e1 = Direction::new(RationalVector::from_ints(&[1, 0])).unwrap();
        assert_eq!(breadth(&square(), &square(), &e1).unwrap(), Rational::integer(2));
        assert!(is_constant_width(&square(), &square()).unwrap());
        assert!(is_constant_width(&tri().difference_body(), &tri()).unwrap());
        assert!(!is_constant_width(&tri(), &square()).unwrap());
    }

    #[test]
    fn jung_of_simplex_in_difference_body() {
        let db = tri().difference_body();
        assert_eq!(circumradius_value(&tri(), &db).unwrap(), rat(2, 3));
        assert_eq!(diameter_value(&tri(), &db).unwrap(), Rational::one());
        assert_eq!(jung_ratio(&tri(), &db).unwrap(), rat(2, 3));
    }
}
