//! Dense rational matrices.

use super::{IntRowSpace, Rational, Subspace};
use num::Zero;

/// Dense matrix over Q. Small by construction (commutation systems and
/// quotient maps of algebras of dimension at most a few hundred); the heavy
/// sector computations go through [`IntRowSpace`] directly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend(r);
        }
        QMatrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (x, y) in self.row(i).iter().zip(v) {
                    if !x.is_zero() && !y.is_zero() {
                        acc += x * y;
                    }
                }
                acc
            })
            .collect()
    }

    fn row_space(&self) -> IntRowSpace {
        let mut space = IntRowSpace::new(self.cols);
        for i in 0..self.rows {
            space.insert_rational(self.row(i));
        }
        space
    }

    /// Dimension of the row space. Fraction-free elimination over the
    /// integers after clearing denominators; first-nonzero pivot rule.
    pub fn rank(&self) -> usize {
        self.row_space().rank()
    }

    /// Canonical echelon basis of `{v : M v = 0}`.
    pub fn kernel_basis(&self) -> Subspace {
        self.row_space().kernel_subspace()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, rat_int};

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn identity_has_full_rank() {
        let id = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(id.rank(), 3);
        assert!(id.kernel_basis().is_zero());
    }

    #[test]
    fn proportional_rows_rank_one() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_of_zero_matrix_is_full() {
        let z = QMatrix::zero(2, 2);
        assert_eq!(z.kernel_basis(), Subspace::full(2));
    }

    #[test]
    fn single_relation_kernel() {
        let k = m(&[&[1, 1]]).kernel_basis();
        assert_eq!(k.dim(), 1);
        assert!(k.contains_vector(&[rat_int(1), rat_int(-1)]));
    }

    #[test]
    fn rational_entries() {
        // proportional rows: (3/2, 1) = 3 * (1/2, 1/3)
        let a = QMatrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(3, 2), rat(1, 1)],
        ]);
        assert_eq!(a.rank(), 1);
        let b = QMatrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(3, 2), rat(2, 1)],
        ]);
        assert_eq!(b.rank(), 2);
    }

    #[test]
    fn kernel_vectors_multiply_to_zero() {
        let a = m(&[&[1, 2, 3, 4], &[0, 1, 1, 0], &[1, 3, 4, 4]]);
        let k = a.kernel_basis();
        assert_eq!(a.rank() + k.dim(), 4);
        for v in k.basis() {
            assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }
}
