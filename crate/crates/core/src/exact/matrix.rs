use super::{Rational, RationalVector};
use crate::error::{Error, Result};

/// Dense rectangular matrix of rationals, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Outcome of solving a linear system `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(RationalVector),
    /// Consistent system with a nontrivial null space. Carries one particular
    /// solution (free variables set to zero) and a null-space direction.
    Underdetermined {
        particular: RationalVector,
        kernel: RationalVector,
    },
    NoSolution,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch { expected: c, found: row.len() });
            }
            data.extend(row);
        }
        Ok(RationalMatrix { rows: r, cols: c, data })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::integer(x)).collect()).collect())
    }

    /// Matrix whose rows are the given vectors.
    pub fn from_vectors(rows: &[RationalVector]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|v| v.coords().to_vec()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &RationalVector) -> Result<RationalVector> {
        if x.dim() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: x.dim() });
        }
        Ok((0..self.rows).map(|i| self.row(i).iter().zip(x.iter()).map(|(a, b)| a * b).sum()).collect())
    }

    fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Exact determinant by fraction Gaussian elimination.
    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok(Rational::zero());
            };
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            let p = a[col][col].clone();
            det *= &p;
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] / &p;
                for c in col..n {
                    let delta = &f * &a[col][c];
                    a[r][c] -= &delta;
                }
            }
        }
        Ok(det)
    }

    /// Reduced row echelon form of the augmented matrix `[A | b]`; returns
    /// the reduced rows and the pivot column of each nonzero row.
    fn rref(mut a: Vec<Vec<Rational>>, cols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let rows = a.len();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(p, r);
            let inv = a[r][col].recip().expect("pivot is nonzero");
            for x in a[r].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == r || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    let delta = &f * p;
                    *x -= &delta;
                }
            }
            pivots.push(col);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        Self::rref(self.to_rows(), self.cols).1.len()
    }

    /// Solves `A x = b` exactly, classifying singular systems.
    pub fn solve(&self, b: &RationalVector) -> Result<LinearSolution> {
        if b.dim() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: b.dim() });
        }
        let aug: Vec<Vec<Rational>> = (0..self.rows)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.push(b[i].clone());
                row
            })
            .collect();
        let (red, pivots) = Self::rref(aug, self.cols);
        // a pivot in the augmented column would have been skipped; check consistency
        for row in red.iter().skip(pivots.len()) {
            if !row[self.cols].is_zero() {
                return Ok(LinearSolution::NoSolution);
            }
        }
        let mut particular = vec![Rational::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            particular[c] = red[r][self.cols].clone();
        }
        if pivots.len() == self.cols {
            return Ok(LinearSolution::Unique(particular.into()));
        }
        let free = (0..self.cols).find(|c| !pivots.contains(c)).expect("a free column exists");
        let mut kernel = vec![Rational::zero(); self.cols];
        kernel[free] = Rational::one();
        for (r, &c) in pivots.iter().enumerate() {
            kernel[c] = -&red[r][free];
        }
        Ok(LinearSolution::Underdetermined { particular: particular.into(), kernel: kernel.into() })
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

/// Solves `A x = b`.
pub fn solve_linear(a: &RationalMatrix, b: &RationalVector) -> Result<LinearSolution> {
    a.solve(b)
}

/// Affine rank of a point set: the dimension of its affine hull.
pub fn affine_rank(points: &[RationalVector]) -> usize {
    if points.len() < 2 {
        return 0;
    }
    let diffs: Vec<RationalVector> = points[1..].iter().map(|p| p.sub(&points[0])).collect();
    RationalMatrix::from_vectors(&diffs).expect("equal dimensions").rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn identity_solve() {
        let b = RationalVector::new(vec![rat(1, 2), rat(-3, 1), rat(7, 5)]);
        assert_eq!(solve_linear(&RationalMatrix::identity(3), &b).unwrap(), LinearSolution::Unique(b));
    }

    #[test]
    fn symmetric_two_by_two() {
        let a = RationalMatrix::from_int_rows(&[&[1, 1], &[1, -1]]).unwrap();
        let x = solve_linear(&a, &RationalVector::from_ints(&[1, 0])).unwrap();
        assert_eq!(x, LinearSolution::Unique(RationalVector::new(vec![rat(1, 2), rat(1, 2)])));
    }

    #[test]
    fn singular_systems() {
        let a = RationalMatrix::from_int_rows(&[&[1, 2], &[2, 4]]).unwrap();
        match solve_linear(&a, &RationalVector::from_ints(&[1, 2])).unwrap() {
            LinearSolution::Underdetermined { particular, kernel } => {
                assert_eq!(a.mul_vec(&particular).unwrap(), RationalVector::from_ints(&[1, 2]));
                assert!(a.mul_vec(&kernel).unwrap().is_zero());
                assert!(!kernel.is_zero());
            }
            other => panic!("expected underdetermined, got {other:?}"),
        }
        assert_eq!(solve_linear(&a, &RationalVector::from_ints(&[1, 3])).unwrap(), LinearSolution::NoSolution);
        assert!(solve_linear(&a, &RationalVector::from_ints(&[1])).is_err());
    }

    #[test]
    fn determinants() {
        assert_eq!(RationalMatrix::identity(3).det().unwrap(), Rational::one());
        let dup = RationalMatrix::from_int_rows(&[&[1, 2, 3], &[4, 5, 6], &[1, 2, 3]]).unwrap();
        assert_eq!(dup.det().unwrap(), Rational::zero());
        let m = RationalMatrix::from_int_rows(&[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(m.det().unwrap(), Rational::integer(-2));
        let rect = RationalMatrix::from_int_rows(&[&[1, 2, 3]]).unwrap();
        assert_eq!(rect.det(), Err(Error::NonSquare { rows: 1, cols: 3 }));
    }

    #[test]
    fn rank_and_affine_rank() {
        let pts = [
            RationalVector::from_ints(&[0, 0, 0]),
            RationalVector::from_ints(&[1, 0, 0]),
            RationalVector::from_ints(&[0, 1, 0]),
            RationalVector::from_ints(&[1, 1, 0]),
        ];
        assert_eq!(affine_rank(&pts), 2);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn square(n: usize) -> impl Strategy<Value = Vec<Vec<(i64, i64)>>> {
            proptest::collection::vec(proptest::collection::vec((-9i64..=9, 1i64..=5), n), n)
        }

        proptest! {
            #[test]
            fn solve_roundtrip(entries in square(4), xs in proptest::collection::vec((-9i64..=9, 1i64..=5), 4)) {
                let a = RationalMatrix::from_rows(
                    entries.iter().map(|r| r.iter().map(|&(p, q)| rat(p, q)).collect()).collect(),
                ).unwrap();
                prop_assume!(!a.det().unwrap().is_zero());
                let x: RationalVector = xs.iter().map(|&(p, q)| rat(p, q)).collect();
                let b = a.mul_vec(&x).unwrap();
                prop_assert_eq!(solve_linear(&a, &b).unwrap(), LinearSolution::Unique(x));
            }
        }
    }
}
