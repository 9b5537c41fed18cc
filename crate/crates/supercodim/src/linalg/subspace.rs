//! Canonical subspaces of Q^n.

use super::{IntRowSpace, Rational};
use num::{One, Zero};

/// A linear subspace given by its reduced row echelon basis (pivot entries
/// equal to 1, pivots strictly increasing, pivot columns eliminated
/// everywhere else). The echelon basis is unique, so `==` decides equality
/// of subspaces with the same ambient dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![Rational::zero(); ambient];
                v[i] = Rational::one();
                v
            })
            .collect();
        Subspace { ambient, basis }
    }

    /// Canonicalizes a spanning set.
    pub fn from_spanning(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        let mut rows = IntRowSpace::new(ambient);
        for v in vectors {
            debug_assert_eq!(v.len(), ambient);
            rows.insert_rational(v);
        }
        rows.to_subspace()
    }

    /// Trusted constructor for rows already in reduced echelon form.
    pub(crate) fn from_rref_unchecked(ambient: usize, basis: Vec<Vec<Rational>>) -> Self {
        Subspace { ambient, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Pivot column of each basis vector.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|r| r.iter().position(|v| !v.is_zero()).unwrap())
            .collect()
    }

    /// Reduces `v` against the echelon basis; membership iff the remainder
    /// vanishes.
    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut rem = v.to_vec();
        for (row, &p) in self.basis.iter().zip(self.pivots().iter()) {
            if rem[p].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut rem[p], Rational::zero());
            for (x, y) in rem.iter_mut().zip(row.iter()) {
                if !y.is_zero() {
                    *x -= &c * y;
                }
            }
            rem[p] = Rational::zero();
        }
        rem.iter().all(|x| x.is_zero())
    }

    /// True iff every basis vector of `other` reduces to zero against this
    /// basis. Errors on ambient mismatch.
    pub fn contains(&self, other: &Subspace) -> crate::Result<bool> {
        if self.ambient != other.ambient {
            return Err(crate::Error::DimensionMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(other.basis.iter().all(|v| self.contains_vector(v)))
    }

    /// Canonical equality check with the ambient-dimension precondition.
    pub fn equal(&self, other: &Subspace) -> crate::Result<bool> {
        if self.ambient != other.ambient {
            return Err(crate::Error::DimensionMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(self == other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat_int;

    fn v(entries: &[i64]) -> Vec<Rational> {
        entries.iter().map(|&e| rat_int(e)).collect()
    }

    #[test]
    fn span_canonicalization() {
        let a = Subspace::from_spanning(2, &[v(&[1, 1]), v(&[1, -1])]);
        let b = Subspace::from_spanning(2, &[v(&[1, 0]), v(&[0, 1])]);
        assert!(a.equal(&b).unwrap());
        assert_eq!(a, Subspace::full(2));

        let c = Subspace::from_spanning(2, &[v(&[1, 0])]);
        let d = Subspace::from_spanning(2, &[v(&[0, 1])]);
        assert!(!c.equal(&d).unwrap());
    }

    #[test]
    fn containment() {
        let full = Subspace::full(3);
        let line = Subspace::from_spanning(3, &[v(&[1, 2, 3])]);
        assert!(full.contains(&line).unwrap());
        assert!(!line.contains(&full).unwrap());

        let a = Subspace::from_spanning(2, &[v(&[1, 0])]);
        let b = Subspace::from_spanning(2, &[v(&[1, 1])]);
        assert!(!a.contains(&b).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(a.equal(&b).is_err());
        assert!(a.contains(&b).is_err());
    }
}
