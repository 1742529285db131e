use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// Point or direction in rational coordinates. Ordered lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RationalVector(Vec<Rational>);

impl RationalVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalVector(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RationalVector(coords.iter().map(|&c| Rational::integer(c)).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        RationalVector(vec![Rational::zero(); dim])
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[axis] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(())
    }

    /// Inner product. Panics on mismatched dimensions; callers validate
    /// dimensions at the API boundary.
    pub fn dot(&self, other: &Self) -> Rational {
        assert_eq!(self.dim(), other.dim(), "dot: dimension mismatch");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn checked_dot(&self, other: &Self) -> Result<Rational> {
        self.check_dim(other)?;
        Ok(self.dot(other))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "add: dimension mismatch");
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "sub: dimension mismatch");
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        RationalVector(self.0.iter().map(|a| a * factor).collect())
    }

    pub fn neg(&self) -> Self {
        RationalVector(self.0.iter().map(|a| -a).collect())
    }

    /// Arithmetic mean of a nonempty list of equal-dimension points.
    pub fn mean(points: &[RationalVector]) -> Self {
        assert!(!points.is_empty(), "mean of empty point list");
        let dim = points[0].dim();
        let mut acc = Self::zeros(dim);
        for p in points {
            acc = acc.add(p);
        }
        acc.scale(&Rational::integer(points.len() as i64).recip().expect("nonzero count"))
    }
}

impl Index<usize> for RationalVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl From<Vec<Rational>> for RationalVector {
    fn from(v: Vec<Rational>) -> Self {
        RationalVector(v)
    }
}

impl FromIterator<Rational> for RationalVector {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        RationalVector(iter.into_iter().collect())
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn basic_ops() {
        let a = RationalVector::from_ints(&[1, 2]);
        let b = RationalVector::new(vec![rat(1, 2), rat(-1, 3)]);
        assert_eq!(a.dot(&b), rat(-1, 6));
        assert_eq!(a.add(&b), RationalVector::new(vec![rat(3, 2), rat(5, 3)]));
        assert_eq!(a.sub(&a), RationalVector::zeros(2));
        assert!(a.checked_dot(&RationalVector::zeros(3)).is_err());
        assert_eq!(format!("{b}"), "(1/2, -1/3)");
    }

    #[test]
    fn mean_of_simplex() {
        let pts = [
            RationalVector::from_ints(&[0, 0]),
            RationalVector::from_ints(&[1, 0]),
            RationalVector::from_ints(&[0, 1]),
        ];
        assert_eq!(RationalVector::mean(&pts), RationalVector::new(vec![rat(1, 3), rat(1, 3)]));
    }
}
