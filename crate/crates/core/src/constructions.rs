//! Example families and seeded random instances.
//!
//! The regular Euclidean simplex has irrational coordinates. All radii,
//! asymmetries and inclusions here are invariant under simultaneous affine
//! maps of body and gauge, so the rational simplex
//! `conv{e_1, …, e_n, -(e_1 + … + e_n)}` stands in for it everywhere. It is
//! Minkowski centered at the origin with `s = n`.

use std::collections::BTreeMap;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};

use crate::bodies::{simplex_hrep, VPolytope};
use crate::error::{Error, Result};
use crate::exact::{Rational, RationalVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "example43-min")]
    Example43Min,
    #[serde(rename = "example43-max")]
    Example43Max,
    #[serde(rename = "example44")]
    Example44,
    #[serde(rename = "cor47")]
    Cor47,
    #[serde(rename = "random")]
    Random,
}

/// A simplex and a gauge from one of the families, with their parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExamplePair {
    pub family: Family,
    pub simplex: VPolytope,
    pub gauge: VPolytope,
    pub parameters: BTreeMap<String, Rational>,
}

/// `conv{e_1, …, e_n, -(e_1 + … + e_n)}`.
pub fn standard_centered_simplex(n: usize) -> Result<VPolytope> {
    if n < 2 {
        return Err(Error::ParameterViolation(format!("simplex dimension must be at least 2, got {n}")));
    }
    let mut pts: Vec<RationalVector> = (0..n).map(|i| RationalVector::unit(n, i)).collect();
    pts.push((0..n).map(|_| -Rational::one()).collect());
    Ok(VPolytope::new(n, pts)?.canonical())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Min,
    Max,
}

/// Sandwiched gauge `λS + μ(-S) ⊂ C ⊂ (λ+nμ)S ∩ (nλ+μ)(-S)`.
///
/// `Min` returns the left end as a Minkowski sum, `Max` the right end by
/// vertex enumeration. In the plane the right end is
/// `(λ+2μ)S ∩ (2λ+μ)(-S)`; the factors `λ+nμ`, `nλ+μ` are the ones that keep
/// the left end inside for every `n`.
pub fn example43(n: usize, lambda: &Rational, mu: &Rational, variant: Variant) -> Result<ExamplePair> {
    if !lambda.is_positive() || mu.is_negative() || mu > lambda {
        return Err(Error::ParameterViolation(format!("need λ >= μ >= 0 and λ > 0, got λ={lambda}, μ={mu}")));
    }
    let s = standard_centered_simplex(n)?;
    let nn = Rational::integer(n as i64);
    let gauge = match variant {
        Variant::Min => s.scale(lambda)?.minkowski_sum(&s.negate().scale(mu)?)?,
        Variant::Max => {
            let h = simplex_hrep(&s)?;
            let upper = h.scale(&(lambda + &nn * mu))?;
            let lower = h.negate().scale(&(&nn * lambda + mu))?;
            upper.intersect(&lower)?.enumerate_vertices()?
        }
    };
    let family = match variant {
        Variant::Min => Family::Example43Min,
        Variant::Max => Family::Example43Max,
    };
    let mut parameters = BTreeMap::new();
    parameters.insert("n".to_string(), nn);
    parameters.insert("lambda".to_string(), lambda.clone());
    parameters.insert("mu".to_string(), mu.clone());
    Ok(ExamplePair { family, simplex: s, gauge, parameters })
}

/// `C = conv({p} ∪ (S - S))` for a vertex `p` of `(n+1)(S ∩ -S)` outside
/// `S - S`; the lexicographically first such vertex unless `p` is given.
pub fn example44(n: usize, p: Option<RationalVector>) -> Result<ExamplePair> {
    if n < 2 {
        return Err(Error::ParameterViolation(format!("dimension must be at least 2, got {n}")));
    }
    let s = standard_centered_simplex(n)?;
    let h = simplex_hrep(&s)?;
    let cap = h.intersect(&h.negate())?.scale(&Rational::integer(n as i64 + 1))?;
    let db = s.difference_body();
    let p = match p {
        Some(p) => {
            if p.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: p.dim() });
            }
            if !cap.contains_point(&p)? || db.contains_point(&p)? {
                return Err(Error::ParameterViolation(format!("{p} is not in (n+1)(S ∩ -S) \\ (S - S)")));
            }
            p
        }
        None => {
            let verts = cap.enumerate_vertices()?;
            let mut found = None;
            for v in verts.vertices() {
                if !db.contains_point(v)? {
                    found = Some(v.clone());
                    break;
                }
            }
            found.ok_or(Error::NoSuchPoint)?
        }
    };
    let mut pts = db.vertices().to_vec();
    pts.push(p.clone());
    let gauge = VPolytope::new(n, pts)?.canonical();
    let mut parameters = BTreeMap::new();
    parameters.insert("n".to_string(), Rational::integer(n as i64));
    for (i, x) in p.iter().enumerate() {
        parameters.insert(format!("p{i}"), x.clone());
    }
    Ok(ExamplePair { family: Family::Example44, simplex: s, gauge, parameters })
}

/// `C = λS + (1-λ)(-S)` for the standard centered triangle.
pub fn corollary47_gauge(lambda: &Rational) -> Result<ExamplePair> {
    if lambda.is_negative() || lambda > &Rational::one() {
        return Err(Error::ParameterViolation(format!("λ must lie in [0, 1], got {lambda}")));
    }
    let s = standard_centered_simplex(2)?;
    let gauge = mixed_gauge(&s, lambda)?;
    let mut parameters = BTreeMap::new();
    parameters.insert("lambda".to_string(), lambda.clone());
    Ok(ExamplePair { family: Family::Cor47, simplex: s, gauge, parameters })
}

/// `λS + (1-λ)(-S)`.
pub fn mixed_gauge(s: &VPolytope, lambda: &Rational) -> Result<VPolytope> {
    s.scale(lambda)?.minkowski_sum(&s.negate().scale(&(Rational::one() - lambda))?)
}

/// Seeded source of small rationals.
///
/// SplitMix64 with its standard constants (increment `0x9e3779b97f4a7c15`,
/// mixers `0xbf58476d1ce4e5b9` and `0x94d049bb133111eb`), seeded with the
/// raw 64-bit seed. Integers in a range are drawn by reducing one output
/// modulo the range width; the slight bias is irrelevant here and keeps the
/// stream easy to reproduce elsewhere.
pub struct Sampler(SplitMix64);

/// Largest denominator of a sampled coordinate.
pub const MAX_DENOMINATOR: u64 = 2;

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-ish integer in `[lo, hi]`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        let width = (hi - lo + 1) as u64;
        lo + (self.next_u64() % width) as i64
    }

    /// `p/q` with `|p| <= bound` and `1 <= q <= MAX_DENOMINATOR`.
    pub fn rational(&mut self, bound: i64) -> Rational {
        let p = self.int_in(-bound, bound);
        let q = self.int_in(1, MAX_DENOMINATOR as i64);
        Rational::new(p, q).expect("positive denominator")
    }

    pub fn point(&mut self, dim: usize, bound: i64) -> RationalVector {
        (0..dim).map(|_| self.rational(bound)).collect()
    }
}

const REDRAWS: usize = 100;

/// Random full-dimensional polytope: the canonical hull of `count` sampled
/// points, redrawn until full-dimensional.
pub fn random_vpolytope(dim: usize, count: usize, bound: i64, seed: u64) -> Result<VPolytope> {
    let mut sampler = Sampler::new(seed);
    random_vpolytope_from(&mut sampler, dim, count, bound)
}

pub fn random_vpolytope_from(sampler: &mut Sampler, dim: usize, count: usize, bound: i64) -> Result<VPolytope> {
    if !(2..=4).contains(&dim) {
        return Err(Error::ParameterViolation(format!("dimension must be 2, 3 or 4, got {dim}")));
    }
    if count < dim + 1 || bound < 1 {
        return Err(Error::ParameterViolation(format!("need at least {} points and a positive bound", dim + 1)));
    }
    for _ in 0..REDRAWS {
        let pts = (0..count).map(|_| sampler.point(dim, bound)).collect();
        let k = VPolytope::new(dim, pts)?;
        if k.is_full_dimensional() {
            return Ok(k.canonical());
        }
    }
    Err(Error::ExhaustedRedraws)
}

/// A random pair `(K, C)` of full-dimensional polytopes with between
/// `dim + 1` and `max_vertices` sample points each.
pub fn random_pair(dim: usize, max_vertices: usize, bound: i64, seed: u64) -> Result<(VPolytope, VPolytope)> {
    let mut sampler = Sampler::new(seed);
    let lo = dim as i64 + 1;
    let hi = (max_vertices as i64).max(lo);
    let mk = sampler.int_in(lo, hi) as usize;
    let k = random_vpolytope_from(&mut sampler, dim, mk, bound)?;
    let mc = sampler.int_in(lo, hi) as usize;
    let c = random_vpolytope_from(&mut sampler, dim, mc, bound)?;
    Ok((k, c))
}

/// A random polytope that is not centrally symmetric.
pub fn random_asymmetric(dim: usize, max_vertices: usize, bound: i64, seed: u64) -> Result<VPolytope> {
    let mut sampler = Sampler::new(seed);
    let lo = dim as i64 + 1;
    let hi = (max_vertices as i64).max(lo);
    for _ in 0..REDRAWS {
        let m = sampler.int_in(lo, hi) as usize;
        let c = random_vpolytope_from(&mut sampler, dim, m, bound)?;
        if c.is_centrally_symmetric().is_none() {
            return Ok(c);
        }
    }
    Err(Error::ExhaustedRedraws)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::radii::{asymmetry, circumradius_value};

    #[test]
    fn centered_simplex() {
        let s = standard_centered_simplex(2).unwrap();
        assert!(s.same_set(&VPolytope::from_int_points(&[&[1, 0], &[0, 1], &[-1, -1]])));
        assert_eq!(s.centroid(), RationalVector::zeros(2));
        let a = asymmetry(&standard_centered_simplex(3).unwrap()).unwrap();
        assert_eq!(a.s, Rational::integer(3));
        assert_eq!(a.center, RationalVector::zeros(3));
        assert!(standard_centered_simplex(1).is_err());
    }

    #[test]
    fn example43_sandwich() {
        for n in [2, 3] {
            let (l, m) = (rat(3, 1), rat(1, 1));
            let lo = example43(n, &l, &m, Variant::Min).unwrap();
            let hi = example43(n, &l, &m, Variant::Max).unwrap();
            assert!(hi.gauge.contains_polytope(&lo.gauge).unwrap());
        }
        let p = example43(2, &rat(2, 1), &rat(0, 1), Variant::Min).unwrap();
        assert!(p.gauge.same_set(&p.simplex.scale(&rat(2, 1)).unwrap()));
        let p = example43(2, &rat(1, 1), &rat(1, 1), Variant::Min).unwrap();
        assert!(p.gauge.is_centrally_symmetric().is_some());
        assert!(example43(2, &rat(1, 2), &rat(1, 1), Variant::Min).is_err());
    }

    #[test]
    fn literal_planar_upper_set_is_too_small_in_space() {
        // (λ+2μ)S ∩ (2λ+μ)(-S) fails to contain λS + μ(-S) once n = 3
        let s = standard_centered_simplex(3).unwrap();
        let (l, m) = (rat(1, 1), rat(1, 1));
        let lower = s.scale(&l).unwrap().minkowski_sum(&s.negate().scale(&m).unwrap()).unwrap();
        let h = simplex_hrep(&s).unwrap();
        let literal = h.scale(&rat(3, 1)).unwrap().intersect(&h.negate().scale(&rat(3, 1)).unwrap()).unwrap();
        let outside = lower.vertices().iter().any(|v| !literal.contains_point(v).unwrap());
        assert!(outside);
    }

    #[test]
    fn example44_point() {
        assert_eq!(example44(2, None), Err(Error::NoSuchPoint));
        let ex = example44(3, None).unwrap();
        let n = 3;
        let p: RationalVector = (0..n).map(|i| ex.parameters[&format!("p{i}")].clone()).collect();
        let s = &ex.simplex;
        assert!(!s.difference_body().contains_point(&p).unwrap());
        let cap = s.scale(&rat(4, 1)).unwrap();
        assert!(cap.contains_point(&p).unwrap() && cap.negate().contains_point(&p).unwrap());
        assert!(ex.gauge.vertices().contains(&p));
    }

    #[test]
    fn cor47_endpoints() {
        let s = standard_centered_simplex(2).unwrap();
        assert!(corollary47_gauge(&rat(0, 1)).unwrap().gauge.same_set(&s.negate()));
        let half = corollary47_gauge(&rat(1, 2)).unwrap().gauge;
        assert!(half.same_set(&s.difference_body().scale(&rat(1, 2)).unwrap()));
        assert!(corollary47_gauge(&rat(3, 2)).is_err());
    }

    #[test]
    fn random_is_deterministic_and_full() {
        let a = random_vpolytope(3, 6, 5, 42).unwrap();
        let b = random_vpolytope(3, 6, 5, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.is_full_dimensional());
        assert!(a.difference_body().is_centrally_symmetric().is_some());
        let (k, c) = random_pair(2, 6, 5, 7).unwrap();
        assert!(circumradius_value(&k, &c).unwrap().is_positive());
    }
}
