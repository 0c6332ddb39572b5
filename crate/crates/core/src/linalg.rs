//! Dense exact linear algebra over the rationals.
//!
//! Everything here runs on matrices with at most a few dozen rows and
//! columns (constraint systems and ray bases of cones in the pattern
//! space), so plain fraction-based Gaussian elimination is the right tool.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Rational>>,
}

impl Matrix {
    pub fn from_rows(data: Vec<Vec<Rational>>) -> Result<Self> {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        if let Some(bad) = data.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch(bad.len(), cols));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_int_rows(data: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            data.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i]
    }

    /// Row echelon reduction in place; returns the pivot columns.
    fn eliminate(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.data[i][c].is_zero()) else {
                continue;
            };
            self.data.swap(r, p);
            let inv = self.data[r][c].recip();
            for v in &mut self.data[r][c..] {
                *v *= &inv;
            }
            for i in 0..self.rows {
                if i != r && !self.data[i][c].is_zero() {
                    let f = self.data[i][c].clone();
                    for k in c..self.cols {
                        let t = &self.data[r][k] * &f;
                        self.data[i][k] -= t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate().len()
    }

    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::LengthMismatch(self.rows, self.cols));
        }
        let mut m = self.data.clone();
        let n = self.rows;
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                m.swap(c, p);
                det = -det;
            }
            det *= &m[c][c];
            let inv = m[c][c].recip();
            for i in (c + 1)..n {
                if !m[i][c].is_zero() {
                    let f = &m[i][c] * &inv;
                    let (upper, lower) = m.split_at_mut(i);
                    for (entry, p) in lower[0][c..].iter_mut().zip(&upper[c][c..]) {
                        let t = p * &f;
                        *entry -= t;
                    }
                }
            }
        }
        Ok(det)
    }

    /// Solves `self * x = rhs` when the columns are linearly independent.
    /// Returns `None` if the system is inconsistent.
    pub fn solve_unique(&self, rhs: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if rhs.len() != self.rows {
            return Err(Error::LengthMismatch(rhs.len(), self.rows));
        }
        let mut aug = self.clone();
        aug.cols += 1;
        for (row, b) in aug.data.iter_mut().zip(rhs) {
            row.push(b.clone());
        }
        let pivots = aug.eliminate();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        if pivots.len() != self.cols {
            return Err(Error::Internal(format!(
                "solve_unique needs independent columns, rank {} of {}",
                pivots.len(),
                self.cols
            )));
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.data[r][self.cols].clone();
        }
        Ok(Some(x))
    }
}

/// Rank of a list of integer row vectors.
pub fn row_rank(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    Matrix::from_int_rows(rows).expect("rectangular").rank()
}

/// Picks coordinate positions at which the given independent integer rows
/// form a nonsingular square matrix; returns the positions together with
/// the absolute determinant of that submatrix.
pub fn nonsingular_coordinate_subset(rows: &[Vec<i64>]) -> Result<(Vec<usize>, Rational)> {
    let d = rows.len();
    let cols = rows.first().map_or(0, Vec::len);
    let mut chosen: Vec<usize> = Vec::new();
    for c in 0..cols {
        if chosen.len() == d {
            break;
        }
        let mut trial = chosen.clone();
        trial.push(c);
        let sub: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| trial.iter().map(|&k| r[k]).collect())
            .collect();
        if row_rank(&sub) == trial.len() {
            chosen = trial;
        }
    }
    if chosen.len() != d {
        return Err(Error::Internal(format!(
            "rows are dependent: no {d} independent coordinates"
        )));
    }
    let sub: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| chosen.iter().map(|&k| r[k]).collect())
        .collect();
    let det = Matrix::from_int_rows(&sub)?.det()?.abs();
    Ok((chosen, det))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use proptest::prelude::*;

    #[test]
    fn rank_and_det_basics() {
        let m = Matrix::from_int_rows(&[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.det().unwrap(), rat(-2));
        let s = Matrix::from_int_rows(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(s.rank(), 1);
        assert_eq!(s.det().unwrap(), rat(0));
        assert_eq!(Matrix::from_rows(vec![]).unwrap().rank(), 0);
    }

    #[test]
    fn det_of_triangular_with_fractions() {
        let m =
            Matrix::from_rows(vec![vec![ratio(1, 2), rat(7)], vec![rat(0), ratio(2, 3)]]).unwrap();
        assert_eq!(m.det().unwrap(), ratio(1, 3));
    }

    #[test]
    fn solve_unique_roundtrip_and_inconsistency() {
        let m = Matrix::from_int_rows(&[vec![1, 1], vec![0, 1], vec![1, 0]]).unwrap();
        let rhs = [rat(3), rat(2), rat(1)];
        assert_eq!(m.solve_unique(&rhs).unwrap(), Some(vec![rat(1), rat(2)]));
        let bad = [rat(3), rat(2), rat(2)];
        assert_eq!(m.solve_unique(&bad).unwrap(), None);
    }

    #[test]
    fn coordinate_subset_of_unimodular_rows() {
        let rows = vec![vec![0, 1, 1, 0], vec![0, 0, 1, 1]];
        let (cols, det) = nonsingular_coordinate_subset(&rows).unwrap();
        assert_eq!(cols, vec![1, 2]);
        assert_eq!(det, rat(1));
    }

    proptest! {
        #[test]
        fn det_vanishes_iff_rank_deficient(a in proptest::collection::vec(-4i64..5, 9)) {
            let rows: Vec<Vec<i64>> = a.chunks(3).map(|c| c.to_vec()).collect();
            let m = Matrix::from_int_rows(&rows).unwrap();
            let det = m.det().unwrap();
            prop_assert_eq!(det.is_zero(), m.rank() < 3);
        }

        #[test]
        fn solve_recovers_known_combination(
            a in proptest::collection::vec(-3i64..4, 12),
            x0 in -5i64..6,
            x1 in -5i64..6,
        ) {
            let rows: Vec<Vec<i64>> = a.chunks(2).map(|c| c.to_vec()).collect();
            let m = Matrix::from_int_rows(&rows).unwrap();
            prop_assume!(m.rank() == 2);
            let rhs: Vec<Rational> = rows
                .iter()
                .map(|r| rat(r[0] * x0 + r[1] * x1))
                .collect();
            let x = m.solve_unique(&rhs).unwrap().unwrap();
            prop_assert_eq!(x, vec![rat(x0), rat(x1)]);
        }
    }
}
