use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `matrix · x = rhs` over a field.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearSystem<T> {
    matrix: Vec<Vec<T>>,
    rhs: Vec<T>,
}

impl<T: Scalar> LinearSystem<T> {
    /// Rejects ragged matrices and a right-hand side of the wrong length.
    pub fn new(matrix: Vec<Vec<T>>, rhs: Vec<T>) -> Result<Self> {
        if rhs.len() != matrix.len() {
            return Err(Error::domain(format!(
                "right-hand side has {} entries for {} rows",
                rhs.len(),
                matrix.len()
            )));
        }
        if let Some(first) = matrix.first() {
            if matrix.iter().any(|row| row.len() != first.len()) {
                return Err(Error::domain("matrix rows differ in length"));
            }
        }
        Ok(LinearSystem { matrix, rhs })
    }

    pub fn rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn cols(&self) -> usize {
        self.matrix.first().map_or(0, Vec::len)
    }

    pub fn matrix(&self) -> &[Vec<T>] {
        &self.matrix
    }

    pub fn rhs(&self) -> &[T] {
        &self.rhs
    }

    /// Gaussian elimination with back-substitution.
    ///
    /// The pivot is the first row at or below the diagonal with a nonzero
    /// entry in the pivot column; with exact scalars no magnitude-based
    /// pivoting is needed.
    pub fn solve(&self) -> Result<Vec<T>> {
        let n = self.rows();
        if self.cols() != n {
            return Err(Error::domain(format!(
                "solver needs a square system, got {}x{}",
                n,
                self.cols()
            )));
        }
        let mut a: Vec<Vec<T>> = self
            .matrix
            .iter()
            .zip(&self.rhs)
            .map(|(row, b)| {
                let mut r = row.clone();
                r.push(b.clone());
                r
            })
            .collect();

        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::SingularSystem)?;
            a.swap(col, pivot);
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone() / a[col][col].clone();
                for c in col..=n {
                    let delta = factor.clone() * a[col][c].clone();
                    a[r][c] = a[r][c].clone() - delta;
                }
            }
        }

        let mut x = vec![T::zero(); n];
        for row in (0..n).rev() {
            let mut acc = a[row][n].clone();
            for c in row + 1..n {
                acc = acc - a[row][c].clone() * x[c].clone();
            }
            x[row] = acc / a[row][row].clone();
        }
        Ok(x)
    }
}
