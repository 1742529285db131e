//! Polytopes in vertex and halfspace form, and the Minkowski algebra on them.
//!
//! The vertex representation is the working one: radii reduce to linear
//! programs over vertex lists. Halfspace form is produced exactly for
//! simplices, by brute force for small bodies (`facets`), and consumed by
//! the small brute-force vertex enumerator.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{affine_rank, LinearSolution, Rational, RationalMatrix, RationalVector};
use crate::lp::{LinearProgram, LpOutcome, VarSign};

/// Nonzero direction vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Direction(RationalVector);

impl Direction {
    pub fn new(v: RationalVector) -> Result<Self> {
        if v.is_zero() {
            return Err(Error::ZeroDirection);
        }
        Ok(Direction(v))
    }

    pub fn vector(&self) -> &RationalVector {
        &self.0
    }

    pub fn neg(&self) -> Direction {
        Direction(self.0.neg())
    }
}

/// Support value together with the indices of every attaining vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Support {
    pub value: Rational,
    pub argmax: Vec<usize>,
}

/// Convex hull of a finite point list.
#[derive(Clone, Serialize, Deserialize)]
#[serde(into = "VRepr", try_from = "VRepr")]
pub struct VPolytope {
    dim: usize,
    vertices: Vec<RationalVector>,
    canonical: bool,
    /// lazily computed facet list, `None` when unavailable
    facets: OnceLock<Option<Vec<Halfspace>>>,
    difference: OnceLock<Box<VPolytope>>,
}

impl PartialEq for VPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices && self.canonical == other.canonical
    }
}

impl Eq for VPolytope {}

impl fmt::Debug for VPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("VPolytope").field("dim", &self.dim).field("vertices", &self.vertices).finish()
    }
}

impl VPolytope {
    fn build(dim: usize, vertices: Vec<RationalVector>, canonical: bool) -> Self {
        VPolytope { dim, vertices, canonical, facets: OnceLock::new(), difference: OnceLock::new() }
    }

    /// Builds the hull of `points`. The list is taken as given; call
    /// [`VPolytope::canonical`] to drop redundant points.
    pub fn new(dim: usize, points: Vec<RationalVector>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidBody("dimension must be positive".into()));
        }
        if points.is_empty() {
            return Err(Error::InvalidBody("a body needs at least one point".into()));
        }
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
            }
        }
        Ok(VPolytope::build(dim, points, false))
    }

    pub fn from_points(points: Vec<RationalVector>) -> Result<Self> {
        let dim = points.first().map_or(0, RationalVector::dim);
        Self::new(dim, points)
    }

    /// Convenience for integer coordinates; panics on malformed input.
    pub fn from_int_points(points: &[&[i64]]) -> Self {
        Self::from_points(points.iter().map(|p| RationalVector::from_ints(p)).collect())
            .expect("well-formed integer points")
    }

    pub fn segment(a: RationalVector, b: RationalVector) -> Result<Self> {
        Self::from_points(vec![a, b])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RationalVector] {
        &self.vertices
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    fn check_dim(&self, dim: usize) -> Result<()> {
        if dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: dim });
        }
        Ok(())
    }

    /// Dimension of the affine hull.
    pub fn affine_dim(&self) -> usize {
        affine_rank(&self.vertices)
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim() == self.dim
    }

    /// Canonical form: extreme points only, sorted lexicographically.
    pub fn canonical(&self) -> VPolytope {
        if self.canonical {
            return self.clone();
        }
        let mut pts = self.vertices.clone();
        pts.sort();
        pts.dedup();
        let sure = extreme_by_axes(&pts);
        let mut keep = vec![true; pts.len()];
        for i in 0..pts.len() {
            if sure[i] {
                continue;
            }
            let others: Vec<RationalVector> =
                pts.iter().enumerate().filter(|&(j, _)| j != i && keep[j]).map(|(_, p)| p.clone()).collect();
            if hull_contains(&others, &pts[i]) {
                keep[i] = false;
            }
        }
        let vertices = pts.into_iter().zip(keep).filter(|(_, k)| *k).map(|(p, _)| p).collect();
        VPolytope::build(self.dim, vertices, true)
    }

    pub fn support(&self, a: &Direction) -> Result<Support> {
        self.check_dim(a.vector().dim())?;
        let values: Vec<Rational> = self.vertices.iter().map(|v| v.dot(a.vector())).collect();
        let value = values.iter().max().expect("nonempty").clone();
        let argmax = values.iter().enumerate().filter(|(_, x)| **x == value).map(|(i, _)| i).collect();
        Ok(Support { value, argmax })
    }

    /// Support value `h(K, a)` for any vector, zero included.
    pub fn support_value(&self, a: &RationalVector) -> Rational {
        self.vertices.iter().map(|v| v.dot(a)).max().expect("nonempty")
    }

    pub fn minkowski_sum(&self, other: &VPolytope) -> Result<VPolytope> {
        self.check_dim(other.dim)?;
        let mut pts = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for v in &self.vertices {
            for w in &other.vertices {
                pts.push(v.add(w));
            }
        }
        Ok(VPolytope::new(self.dim, pts)?.canonical())
    }

    /// `ρK` for `ρ >= 0`.
    pub fn scale(&self, rho: &Rational) -> Result<VPolytope> {
        if rho.is_negative() {
            return Err(Error::NegativeScale(rho.to_string()));
        }
        if rho.is_zero() {
            return Ok(self.map_points(|v| v.scale(rho), false, None::<fn(&Halfspace) -> Halfspace>));
        }
        Ok(self.map_points(
            |v| v.scale(rho),
            true,
            Some(|h: &Halfspace| Halfspace { normal: h.normal.clone(), offset: &h.offset * rho }),
        ))
    }

    pub fn negate(&self) -> VPolytope {
        let out = self.map_points(
            RationalVector::neg,
            true,
            Some(|h: &Halfspace| Halfspace { normal: h.normal.neg(), offset: h.offset.clone() }),
        );
        self.share_difference(&out);
        out
    }

    /// Translates and reflections keep `K - K`.
    fn share_difference(&self, out: &VPolytope) {
        if let Some(d) = self.difference.get() {
            let _ = out.difference.set(d.clone());
        }
    }

    pub fn translate(&self, t: &RationalVector) -> Result<VPolytope> {
        self.check_dim(t.dim())?;
        let out = self.map_points(
            |v| v.add(t),
            true,
            Some(|h: &Halfspace| Halfspace { normal: h.normal.clone(), offset: &h.offset + &h.normal.dot(t) }),
        );
        self.share_difference(&out);
        Ok(out)
    }

    /// Applies an affine bijection (or a collapse when `injective` is
    /// false), carrying already computed facets along through `g`.
    fn map_points(
        &self,
        f: impl Fn(&RationalVector) -> RationalVector,
        injective: bool,
        g: Option<impl Fn(&Halfspace) -> Halfspace>,
    ) -> VPolytope {
        let mut vertices: Vec<RationalVector> = self.vertices.iter().map(f).collect();
        let canonical = self.canonical && injective;
        if canonical {
            // affine maps with positive or negative factor preserve extremality
            vertices.sort();
        }
        let out = VPolytope::build(self.dim, vertices, canonical);
        if let (true, Some(g), Some(Some(facets))) = (injective, g, self.facets.get()) {
            let _ = out.facets.set(Some(facets.iter().map(g).collect()));
        }
        out
    }

    /// Facet halfspaces, found by trying every
    /// `n`-subset of vertices as a supporting hyperplane. `None` for
    /// lower-dimensional bodies or when there are too many subsets.
    pub fn facets(&self) -> Option<&[Halfspace]> {
        self.facets.get_or_init(|| self.compute_facets()).as_deref()
    }

    fn compute_facets(&self) -> Option<Vec<Halfspace>> {
        let pts = self.vertices();
        let n = self.dim;
        if pts.len() < n + 1 || binomial(pts.len(), n) > FACET_SUBSETS || !self.is_full_dimensional() {
            return None;
        }
        let mut found: Vec<Halfspace> = Vec::new();
        for subset in combinations(pts.len(), n) {
            let chosen: Vec<&RationalVector> = subset.iter().map(|&i| &pts[i]).collect();
            let normal = normal_through(&chosen).ok()?;
            if normal.is_zero() {
                continue;
            }
            let offset = normal.dot(chosen[0]);
            let (mut above, mut below) = (false, false);
            for p in pts {
                match normal.dot(p).cmp(&offset) {
                    Ordering::Greater => above = true,
                    Ordering::Less => below = true,
                    Ordering::Equal => {}
                }
                if above && below {
                    break;
                }
            }
            let h = match (above, below) {
                (false, _) => primitive(normal, offset),
                (true, false) => primitive(normal.neg(), -offset),
                (true, true) => continue,
            };
            if !found.contains(&h) {
                found.push(h);
            }
        }
        Some(found)
    }

    /// `K - K`, canonical and origin-symmetric.
    pub fn difference_body(&self) -> VPolytope {
        let d = self.difference.get_or_init(|| {
            let d = self.minkowski_sum(&self.negate()).expect("same dimension");
            // difference bodies mostly serve as gauges, so their facets are wanted
            d.facets();
            Box::new(d)
        });
        (**d).clone()
    }

    pub fn contains_point(&self, x: &RationalVector) -> Result<bool> {
        self.check_dim(x.dim())?;
        Ok(hull_contains(&self.vertices, x))
    }

    /// Direct containment `other ⊂ self`, without translation.
    pub fn contains_polytope(&self, other: &VPolytope) -> Result<bool> {
        self.check_dim(other.dim)?;
        Ok(other.vertices.iter().all(|v| hull_contains(&self.vertices, v)))
    }

    /// Equality as point sets, decided on canonical vertex lists.
    pub fn same_set(&self, other: &VPolytope) -> bool {
        self.dim == other.dim && self.canonical().vertices == other.canonical().vertices
    }

    /// Arithmetic mean of the listed points.
    pub fn centroid(&self) -> RationalVector {
        RationalVector::mean(&self.vertices)
    }

    /// Whether `K = 2c - K` for the vertex mean `c`; returns the center.
    pub fn is_centrally_symmetric(&self) -> Option<RationalVector> {
        let k = self.canonical();
        let c = k.centroid();
        let two_c = c.scale(&Rational::integer(2));
        let mut reflected: Vec<RationalVector> = k.vertices.iter().map(|v| two_c.sub(v)).collect();
        reflected.sort();
        (reflected == k.vertices).then_some(c)
    }

    /// Vertices of a planar polygon in counter-clockwise order around the
    /// vertex mean.
    pub fn polygon_cycle(&self) -> Result<Vec<RationalVector>> {
        if self.dim != 2 {
            return Err(Error::NotPlanar);
        }
        let k = self.canonical();
        if k.vertices.len() < 3 || !k.is_full_dimensional() {
            return Err(Error::DegeneratePolygon);
        }
        let c = k.centroid();
        let mut pts = k.vertices.clone();
        pts.sort_by(|p, q| angle_cmp(&p.sub(&c), &q.sub(&c)));
        Ok(pts)
    }

    /// Checks `Σ length(F_i) a^i = 0` over the edges of a convex polygon.
    ///
    /// Rotating an edge vector by -90° yields its outer normal scaled by the
    /// edge length, so the weighted normal sum is the rotated sum of the
    /// closed edge loop. Convexity of the cycle is verified along the way.
    pub fn polygon_facet_balance(&self) -> Result<bool> {
        let cycle = self.polygon_cycle()?;
        let m = cycle.len();
        let edges: Vec<RationalVector> = (0..m).map(|i| cycle[(i + 1) % m].sub(&cycle[i])).collect();
        for i in 0..m {
            let e = &edges[i];
            let f = &edges[(i + 1) % m];
            if !cross(e, f).is_positive() {
                return Err(Error::DegeneratePolygon);
            }
        }
        let mut sum = RationalVector::zeros(2);
        for e in &edges {
            let normal = RationalVector::new(vec![e[1].clone(), -&e[0]]);
            sum = sum.add(&normal);
        }
        Ok(sum.is_zero())
    }
}

/// Wire form `{"dim": n, "vertices": [["p/q", ...], ...]}`.
#[derive(Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VRepr {
    pub dim: usize,
    pub vertices: Vec<RationalVector>,
}

impl From<VPolytope> for VRepr {
    fn from(k: VPolytope) -> Self {
        VRepr { dim: k.dim, vertices: k.vertices }
    }
}

impl TryFrom<VRepr> for VPolytope {
    type Error = Error;
    fn try_from(r: VRepr) -> Result<Self> {
        VPolytope::new(r.dim, r.vertices)
    }
}

/// Wire form `{"dim": n, "halfspaces": [{"normal": [...], "offset": "p/q"}]}`.
#[derive(Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HRepr {
    pub dim: usize,
    pub halfspaces: Vec<Halfspace>,
}

/// A body file in either representation.
#[derive(Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BodyFile {
    V(VRepr),
    H(HRepr),
}

impl BodyFile {
    /// Vertex form of the body; halfspace input goes through the
    /// brute-force enumerator and its size guard.
    pub fn into_vpolytope(self) -> Result<VPolytope> {
        match self {
            BodyFile::V(r) => VPolytope::try_from(r),
            BodyFile::H(r) => HPolytope::new(r.dim, r.halfspaces)?.enumerate_vertices(),
        }
    }
}

fn cross(a: &RationalVector, b: &RationalVector) -> Rational {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn angle_cmp(p: &RationalVector, q: &RationalVector) -> Ordering {
    let upper = |v: &RationalVector| v[1].is_positive() || (v[1].is_zero() && v[0].is_positive());
    match (upper(p), upper(q)) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        _ => Rational::zero().cmp(&cross(p, q)),
    }
}

/// Flags points that are the unique maximizer or minimizer of some
/// coordinate; those are extreme without any LP.
fn extreme_by_axes(pts: &[RationalVector]) -> Vec<bool> {
    let mut sure = vec![false; pts.len()];
    if pts.is_empty() {
        return sure;
    }
    // lexicographic extremes are always vertices
    sure[0] = true;
    *sure.last_mut().expect("nonempty") = true;
    for axis in 0..pts[0].dim() {
        for want_max in [true, false] {
            let best = pts
                .iter()
                .map(|p| &p[axis])
                .fold(None::<&Rational>, |acc, x| match acc {
                    None => Some(x),
                    Some(a) if (want_max && x > a) || (!want_max && x < a) => Some(x),
                    keep => keep,
                })
                .expect("nonempty");
            let hits: Vec<usize> = (0..pts.len()).filter(|&i| &pts[i][axis] == best).collect();
            if hits.len() == 1 {
                sure[hits[0]] = true;
            }
        }
    }
    sure
}

/// Exact membership of `x` in the convex hull of `points` via a feasibility
/// LP over convex coefficients.
pub(crate) fn hull_contains(points: &[RationalVector], x: &RationalVector) -> bool {
    if points.is_empty() {
        return false;
    }
    if points.iter().any(|p| p == x) {
        return true;
    }
    for axis in 0..x.dim() {
        let lo = points.iter().map(|p| &p[axis]).min().expect("nonempty");
        let hi = points.iter().map(|p| &p[axis]).max().expect("nonempty");
        if &x[axis] < lo || &x[axis] > hi {
            return false;
        }
    }
    let mut lp = LinearProgram::new();
    let first = lp.add_vars(points.len(), VarSign::NonNegative);
    for axis in 0..x.dim() {
        let terms = points
            .iter()
            .enumerate()
            .filter(|(_, p)| !p[axis].is_zero())
            .map(|(i, p)| (first + i, p[axis].clone()))
            .collect();
        lp.add_eq(terms, x[axis].clone());
    }
    lp.add_eq((0..points.len()).map(|i| (first + i, Rational::one())).collect(), Rational::one());
    matches!(lp.solve().expect("well-formed membership program"), LpOutcome::Optimal(_))
}

/// Closed halfspace `normal · x <= offset`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Halfspace {
    pub normal: RationalVector,
    pub offset: Rational,
}

impl Halfspace {
    pub fn contains(&self, x: &RationalVector) -> bool {
        self.normal.dot(x) <= self.offset
    }
}

/// Intersection of finitely many halfspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope {
    dim: usize,
    halfspaces: Vec<Halfspace>,
}

impl HPolytope {
    pub fn new(dim: usize, halfspaces: Vec<Halfspace>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidBody("dimension must be positive".into()));
        }
        for h in &halfspaces {
            if h.normal.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: h.normal.dim() });
            }
        }
        Ok(HPolytope { dim, halfspaces })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    pub fn contains_point(&self, x: &RationalVector) -> Result<bool> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: x.dim() });
        }
        Ok(self.halfspaces.iter().all(|h| h.contains(x)))
    }

    pub fn intersect(&self, other: &HPolytope) -> Result<HPolytope> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        let mut halfspaces = self.halfspaces.clone();
        halfspaces.extend(other.halfspaces.iter().cloned());
        Ok(HPolytope { dim: self.dim, halfspaces })
    }

    /// `ρP` for `ρ > 0`.
    pub fn scale(&self, rho: &Rational) -> Result<HPolytope> {
        if !rho.is_positive() {
            return Err(Error::NegativeScale(rho.to_string()));
        }
        let halfspaces =
            self.halfspaces.iter().map(|h| Halfspace { normal: h.normal.clone(), offset: &h.offset * rho }).collect();
        Ok(HPolytope { dim: self.dim, halfspaces })
    }

    pub fn negate(&self) -> HPolytope {
        let halfspaces =
            self.halfspaces.iter().map(|h| Halfspace { normal: h.normal.neg(), offset: h.offset.clone() }).collect();
        HPolytope { dim: self.dim, halfspaces }
    }

    /// Maximizes `direction · x` over the polyhedron.
    fn maximize(&self, direction: &RationalVector) -> LpOutcome {
        let mut lp = LinearProgram::new();
        let first = lp.add_vars(self.dim, VarSign::Free);
        for (k, c) in direction.iter().enumerate() {
            lp.set_cost(first + k, -c);
        }
        for h in &self.halfspaces {
            let terms = h
                .normal
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (first + k, c.clone()))
                .collect();
            lp.add_le(terms, h.offset.clone());
        }
        lp.solve().expect("well-formed support program")
    }

    /// Bounded and nonempty, judged by support LPs along `±e_i`.
    pub fn check_bounded(&self) -> Result<()> {
        for axis in 0..self.dim {
            for sign in [1, -1] {
                let dir = RationalVector::unit(self.dim, axis).scale(&Rational::integer(sign));
                match self.maximize(&dir) {
                    LpOutcome::Optimal(_) => {}
                    LpOutcome::Unbounded { .. } => return Err(Error::Unbounded),
                    LpOutcome::Infeasible { .. } => return Err(Error::Empty),
                }
            }
        }
        Ok(())
    }

    /// Brute-force vertex enumeration over all `dim`-subsets of facets.
    /// Limited to `dim <= 4` and at most 16 halfspaces.
    pub fn enumerate_vertices(&self) -> Result<VPolytope> {
        let m = self.halfspaces.len();
        if self.dim > 4 || m > 16 {
            return Err(Error::ScaleGuardExceeded { dim: self.dim, halfspaces: m });
        }
        self.check_bounded()?;
        let mut found = Vec::new();
        for subset in combinations(m, self.dim) {
            let rows: Vec<RationalVector> = subset.iter().map(|&i| self.halfspaces[i].normal.clone()).collect();
            let rhs: RationalVector = subset.iter().map(|&i| self.halfspaces[i].offset.clone()).collect();
            let a = RationalMatrix::from_vectors(&rows)?;
            if let LinearSolution::Unique(x) = a.solve(&rhs)? {
                if self.contains_point(&x)? {
                    found.push(x);
                }
            }
        }
        found.sort();
        found.dedup();
        if found.is_empty() {
            return Err(Error::Empty);
        }
        Ok(VPolytope::build(self.dim, found, true))
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn primitive(normal: RationalVector, offset: Rational) -> Halfspace {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};
    let all: Vec<&Rational> = normal.iter().chain(std::iter::once(&offset)).collect();
    let lcm = all.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = all.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let gcd = if gcd.is_zero() { BigInt::one() } else { gcd.abs() };
    let mut scaled: Vec<Rational> = ints.into_iter().map(|x| Rational::from(x / &gcd)).collect();
    let offset = scaled.pop().expect("offset present");
    Halfspace { normal: scaled.into(), offset }
}

/// Normal of the hyperplane through `n` points in `R^n`: the generalized
/// cross product of the edge vectors (cofactors of `[diffs; e_j]`). Zero
/// when the points are affinely dependent.
fn normal_through(points: &[&RationalVector]) -> Result<RationalVector> {
    let n = points[0].dim();
    let base = points[0];
    let diffs: Vec<RationalVector> = points[1..].iter().map(|p| p.sub(base)).collect();
    match n {
        2 => return Ok(vec![-&diffs[0][1], diffs[0][0].clone()].into()),
        3 => {
            let (u, v) = (&diffs[0], &diffs[1]);
            return Ok(vec![
                &u[1] * &v[2] - &u[2] * &v[1],
                &u[2] * &v[0] - &u[0] * &v[2],
                &u[0] * &v[1] - &u[1] * &v[0],
            ]
            .into());
        }
        _ => {}
    }
    Ok((0..n)
        .map(|j| {
            let mut rows = diffs.clone();
            rows.push(RationalVector::unit(n, j));
            RationalMatrix::from_vectors(&rows).and_then(|m| m.det())
        })
        .collect::<Result<Vec<_>>>()?
        .into())
}

/// Upper limit on the `n`-subsets tried by [`VPolytope::facets`].
const FACET_SUBSETS: usize = 20_000;

/// Facet description of a full-dimensional simplex: one halfspace per
/// vertex, namely the facet opposite to it, in vertex order. Coefficients
/// are scaled to coprime integers.
pub fn simplex_hrep(s: &VPolytope) -> Result<HPolytope> {
    let n = s.dim();
    let verts = s.vertices();
    if verts.len() != n + 1 {
        return Err(Error::DegenerateSimplex);
    }
    let mut halfspaces = Vec::with_capacity(n + 1);
    for opposite in 0..=n {
        let facet: Vec<&RationalVector> = (0..=n).filter(|&i| i != opposite).map(|i| &verts[i]).collect();
        let base = facet[0];
        let normal = normal_through(&facet)?;
        let offset = normal.dot(base);
        let apex = normal.dot(&verts[opposite]);
        let (normal, offset) = match apex.cmp(&offset) {
            Ordering::Less => (normal, offset),
            Ordering::Greater => (normal.neg(), -offset),
            Ordering::Equal => return Err(Error::DegenerateSimplex),
        };
        halfspaces.push(primitive(normal, offset));
    }
    HPolytope::new(n, halfspaces)
}

/// Whether the vertex list is an `n`-simplex in `R^n`.
pub fn is_simplex(s: &VPolytope) -> bool {
    s.vertices().len() == s.dim() + 1 && s.is_full_dimensional()
}
