//! Incremental reduced-echelon row spaces over the integers.
//!
//! `RowSpace` maintains the invariants:
//!   * rows are primitive integer vectors (content 1) with positive pivot,
//!   * pivot columns are strictly increasing and fully eliminated in every
//!     other row (reduced echelon),
//! which makes the stored rows a canonical representative of the row span:
//! two spans are equal iff the stored rows are identical.
//!
//! Pivoting is deterministic (first nonzero entry in row-major order), so
//! the result is independent of how insertions are batched across threads.

use super::{BigInt, Rational, Subspace};
use num::{Integer, One, Signed, Zero};

/// Arithmetic overflowed the machine-word fast path.
#[derive(Debug)]
pub(crate) struct Overflow;

/// Scalar ring used by the elimination engine.
pub(crate) trait Scalar: Clone + Eq + std::fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg_assign(&mut self);
    /// `a*x - b*y`.
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Result<Self, Overflow>;
    /// `x - b*y`.
    fn sub_mul(x: &Self, b: &Self, y: &Self) -> Result<Self, Overflow>;
    fn gcd(&self, other: &Self) -> Self;
    fn exact_div_assign(&mut self, d: &Self);
    /// Entry grew enough that a content reduction is worth trying.
    fn oversized(&self) -> bool;
    fn to_bigint(&self) -> BigInt;
    fn from_bigint(v: &BigInt) -> Option<Self>;
    fn to_rational(&self) -> Rational;
}

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg_assign(&mut self) {
        *self = -*self;
    }
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Result<Self, Overflow> {
        let v = (*a as i128) * (*x as i128) - (*b as i128) * (*y as i128);
        i64::try_from(v).map_err(|_| Overflow)
    }
    fn sub_mul(x: &Self, b: &Self, y: &Self) -> Result<Self, Overflow> {
        let v = (*x as i128) - (*b as i128) * (*y as i128);
        i64::try_from(v).map_err(|_| Overflow)
    }
    fn gcd(&self, other: &Self) -> Self {
        num::integer::gcd(self.abs(), other.abs())
    }
    fn exact_div_assign(&mut self, d: &Self) {
        *self /= d;
    }
    fn oversized(&self) -> bool {
        self.abs() > (1 << 40)
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        i64::try_from(v).ok()
    }
    fn to_rational(&self) -> Rational {
        Rational::from_integer((*self).into())
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg_assign(&mut self) {
        *self = -std::mem::take(self);
    }
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Result<Self, Overflow> {
        Ok(a * x - b * y)
    }
    fn sub_mul(x: &Self, b: &Self, y: &Self) -> Result<Self, Overflow> {
        Ok(x - b * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn exact_div_assign(&mut self, d: &Self) {
        *self = &*self / d;
    }
    fn oversized(&self) -> bool {
        self.bits() > 2048
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_rational(&self) -> Rational {
        Rational::from_integer(self.clone())
    }
}

/// Divides a row by its content and makes the leading entry positive.
/// Returns false if the row is zero.
fn make_primitive<S: Scalar>(row: &mut [S]) -> bool {
    let mut g = S::zero();
    let mut lead: Option<usize> = None;
    for (c, v) in row.iter().enumerate() {
        if !v.is_zero() {
            if lead.is_none() {
                lead = Some(c);
            }
            g = g.gcd(v);
            if g.is_one() && !row[lead.unwrap()].is_negative() {
                // content 1 and sign already right: nothing to do
                return true;
            }
        }
    }
    let lead = match lead {
        Some(l) => l,
        None => return false,
    };
    let negate = row[lead].is_negative();
    for v in row.iter_mut() {
        if !v.is_zero() {
            if !g.is_one() {
                v.exact_div_assign(&g);
            }
            if negate {
                v.neg_assign();
            }
        }
    }
    true
}

/// Divides by content only (no sign flip); used mid-reduction to bound swell.
fn reduce_content<S: Scalar>(row: &mut [S]) {
    let mut g = S::zero();
    for v in row.iter() {
        if !v.is_zero() {
            g = g.gcd(v);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.iter_mut() {
        if !v.is_zero() {
            v.exact_div_assign(&g);
        }
    }
}

pub(crate) struct RowSpace<S> {
    cols: usize,
    pivots: Vec<usize>,
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> RowSpace<S> {
    fn new(cols: usize) -> Self {
        RowSpace {
            cols,
            pivots: Vec::new(),
            rows: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the stored echelon rows in place.
    fn forward_reduce(&self, row: &mut [S]) -> Result<(), Overflow> {
        for (i, &p) in self.pivots.iter().enumerate() {
            if row[p].is_zero() {
                continue;
            }
            let a = self.rows[i][p].clone(); // pivot, positive
            let b = std::mem::replace(&mut row[p], S::zero());
            let mut grew = false;
            if a.is_one() {
                // rows[i] has zeros left of p, so the prefix is untouched
                for c in (p + 1)..self.cols {
                    let y = &self.rows[i][c];
                    if y.is_zero() {
                        continue;
                    }
                    row[c] = S::sub_mul(&row[c], &b, y)?;
                    grew |= row[c].oversized();
                }
            } else {
                for (c, x) in row.iter_mut().enumerate() {
                    if c == p {
                        continue;
                    }
                    let y = &self.rows[i][c];
                    if x.is_zero() && y.is_zero() {
                        continue;
                    }
                    *x = S::combine(&a, x, &b, y)?;
                    grew |= x.oversized();
                }
            }
            if grew {
                reduce_content(row);
            }
        }
        Ok(())
    }

    /// Inserts a row; returns whether the rank grew. Transactional: on
    /// overflow the space is left untouched.
    fn insert(&mut self, mut row: Vec<S>) -> Result<bool, Overflow> {
        debug_assert_eq!(row.len(), self.cols);
        self.forward_reduce(&mut row)?;
        if !make_primitive(&mut row) {
            return Ok(false);
        }
        let lead = row.iter().position(|v| !v.is_zero()).unwrap();

        // Back-eliminate the new pivot column from existing rows, staging
        // the rewrites so an overflow cannot leave the space half-updated.
        let mut staged: Vec<(usize, Vec<S>)> = Vec::new();
        for (j, r) in self.rows.iter().enumerate() {
            if r[lead].is_zero() {
                continue;
            }
            let a = row[lead].clone();
            let b = r[lead].clone();
            let mut nr: Vec<S> = Vec::with_capacity(self.cols);
            if a.is_one() {
                for (c, x) in r.iter().enumerate() {
                    nr.push(S::sub_mul(x, &b, &row[c])?);
                }
            } else {
                for (c, x) in r.iter().enumerate() {
                    nr.push(S::combine(&a, x, &b, &row[c])?);
                }
            }
            make_primitive(&mut nr);
            staged.push((j, nr));
        }
        for (j, nr) in staged {
            self.rows[j] = nr;
        }
        let pos = self.pivots.binary_search(&lead).unwrap_err();
        self.pivots.insert(pos, lead);
        self.rows.insert(pos, row);
        Ok(true)
    }

    /// Span membership test; does not modify the space.
    fn in_span(&self, v: &[S]) -> Result<bool, Overflow> {
        let mut row = v.to_vec();
        self.forward_reduce(&mut row)?;
        Ok(row.iter().all(|x| x.is_zero()))
    }

    fn to_big(&self) -> RowSpace<BigInt> {
        RowSpace {
            cols: self.cols,
            pivots: self.pivots.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|v| v.to_bigint()).collect())
                .collect(),
        }
    }

    /// Canonical rational reduced echelon basis of the row span.
    fn to_subspace(&self) -> Subspace {
        let basis = self
            .rows
            .iter()
            .zip(&self.pivots)
            .map(|(r, &p)| {
                let pivot = r[p].to_rational();
                r.iter().map(|v| v.to_rational() / pivot.clone()).collect()
            })
            .collect();
        Subspace::from_rref_unchecked(self.cols, basis)
    }

    /// Canonical basis of `{v : R v = 0}` where R is the stored row space.
    fn kernel_subspace(&self) -> Subspace {
        let mut free: Vec<usize> = Vec::with_capacity(self.cols - self.rank());
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        for c in 0..self.cols {
            if !is_pivot[c] {
                free.push(c);
            }
        }
        let mut vecs: Vec<Vec<Rational>> = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (i, &p) in self.pivots.iter().enumerate() {
                if !self.rows[i][f].is_zero() {
                    v[p] = -self.rows[i][f].to_rational() / self.rows[i][p].to_rational();
                }
            }
            vecs.push(v);
        }
        Subspace::from_spanning(self.cols, &vecs)
    }
}

/// Row space that works in `i64` while it can and upgrades itself to big
/// integers on overflow. All entry points are exact.
pub struct IntRowSpace {
    inner: Repr,
}

enum Repr {
    Small(RowSpace<i64>),
    Big(RowSpace<BigInt>),
}

impl IntRowSpace {
    pub fn new(cols: usize) -> Self {
        IntRowSpace {
            inner: Repr::Small(RowSpace::new(cols)),
        }
    }

    pub fn cols(&self) -> usize {
        match &self.inner {
            Repr::Small(s) => s.cols,
            Repr::Big(b) => b.cols,
        }
    }

    pub fn rank(&self) -> usize {
        match &self.inner {
            Repr::Small(s) => s.rank(),
            Repr::Big(b) => b.rank(),
        }
    }

    fn upgrade(&mut self) {
        if let Repr::Small(s) = &self.inner {
            self.inner = Repr::Big(s.to_big());
        }
    }

    pub fn insert(&mut self, row: Vec<i64>) -> bool {
        match &mut self.inner {
            Repr::Small(s) => {
                let keep = row.clone();
                match s.insert(row) {
                    Ok(grew) => grew,
                    Err(Overflow) => {
                        self.upgrade();
                        self.insert_big(keep.iter().map(|&v| BigInt::from(v)).collect())
                    }
                }
            }
            Repr::Big(b) => b.insert(row.iter().map(|&v| BigInt::from(v)).collect()).unwrap(),
        }
    }

    pub fn insert_big(&mut self, row: Vec<BigInt>) -> bool {
        match &mut self.inner {
            Repr::Small(s) => {
                if let Some(small) = row
                    .iter()
                    .map(i64::from_bigint)
                    .collect::<Option<Vec<i64>>>()
                {
                    let keep = row;
                    match s.insert(small) {
                        Ok(grew) => return grew,
                        Err(Overflow) => {
                            self.upgrade();
                            return self.insert_big(keep);
                        }
                    }
                }
                self.upgrade();
                self.insert_big(row)
            }
            Repr::Big(b) => b.insert(row).unwrap(),
        }
    }

    /// Clears denominators, reduces to a primitive integer row, inserts.
    pub fn insert_rational(&mut self, row: &[Rational]) -> bool {
        self.insert_big(clear_denominators(row))
    }

    pub fn in_span(&mut self, v: &[Rational]) -> bool {
        let big = clear_denominators(v);
        loop {
            match &self.inner {
                Repr::Small(s) => {
                    if let Some(small) = big
                        .iter()
                        .map(i64::from_bigint)
                        .collect::<Option<Vec<i64>>>()
                    {
                        match s.in_span(&small) {
                            Ok(ans) => return ans,
                            Err(Overflow) => self.upgrade(),
                        }
                    } else {
                        self.upgrade();
                    }
                }
                Repr::Big(b) => return b.in_span(&big).unwrap(),
            }
        }
    }

    /// True iff every stored row is orthogonal to `v` (i.e. `v` lies in the
    /// kernel of the constraint system this space accumulates).
    pub fn annihilates(&self, v: &[Rational]) -> bool {
        let big = clear_denominators(v);
        let dot_zero = |row: &dyn Fn(usize) -> BigInt| {
            let mut acc: BigInt = Zero::zero();
            for (c, x) in big.iter().enumerate() {
                if !Zero::is_zero(x) {
                    acc += row(c) * x;
                }
            }
            Zero::is_zero(&acc)
        };
        match &self.inner {
            Repr::Small(s) => s
                .rows
                .iter()
                .all(|r| dot_zero(&|c| BigInt::from(r[c]))),
            Repr::Big(b) => b.rows.iter().all(|r| dot_zero(&|c| r[c].clone())),
        }
    }

    /// Canonical comparison of the row spans.
    pub fn same_span(&self, other: &IntRowSpace) -> bool {
        if self.cols() != other.cols() || self.rank() != other.rank() {
            return false;
        }
        self.canonical_rows() == other.canonical_rows()
    }

    /// True iff `other`'s span is contained in this span.
    pub fn contains_span(&self, other: &IntRowSpace) -> bool {
        if self.cols() != other.cols() {
            return false;
        }
        // comparing canonical reduced rows keeps this read-only
        let big = self.big_view();
        other
            .canonical_rows()
            .iter()
            .all(|r| big.in_span(r).unwrap())
    }

    fn big_view(&self) -> RowSpace<BigInt> {
        match &self.inner {
            Repr::Small(s) => s.to_big(),
            Repr::Big(b) => RowSpace {
                cols: b.cols,
                pivots: b.pivots.clone(),
                rows: b.rows.clone(),
            },
        }
    }

    fn canonical_rows(&self) -> Vec<Vec<BigInt>> {
        match &self.inner {
            Repr::Small(s) => s
                .rows
                .iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
            Repr::Big(b) => b.rows.clone(),
        }
    }

    pub fn to_subspace(&self) -> Subspace {
        match &self.inner {
            Repr::Small(s) => s.to_subspace(),
            Repr::Big(b) => b.to_subspace(),
        }
    }

    pub fn kernel_subspace(&self) -> Subspace {
        match &self.inner {
            Repr::Small(s) => s.kernel_subspace(),
            Repr::Big(b) => b.kernel_subspace(),
        }
    }
}

/// Scales a rational vector to a primitive integer vector (common
/// denominator, then divide by content). Scaling does not change the span
/// or kernel membership of a constraint row.
pub(crate) fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let mut lcm: BigInt = One::one();
    for v in row {
        if !Zero::is_zero(v) {
            lcm = lcm.lcm(v.denom());
        }
    }
    let mut out: Vec<BigInt> = row
        .iter()
        .map(|v| {
            if Zero::is_zero(v) {
                Zero::zero()
            } else {
                v.numer() * (&lcm / v.denom())
            }
        })
        .collect();
    let mut g: BigInt = Zero::zero();
    for v in &out {
        if !Zero::is_zero(v) {
            g = Integer::gcd(&g, v);
        }
    }
    if !Zero::is_zero(&g) && !One::is_one(&g) {
        for v in out.iter_mut() {
            *v = &*v / &g;
        }
    }
    out
}

/// Incremental kernel refinement: accumulate constraint rows one batch at a
/// time; the kernel never has to be recomputed from scratch.
pub struct KernelAccumulator {
    rows: IntRowSpace,
}

impl KernelAccumulator {
    pub fn new(ambient: usize) -> Self {
        KernelAccumulator {
            rows: IntRowSpace::new(ambient),
        }
    }

    pub fn ambient(&self) -> usize {
        self.rows.cols()
    }

    /// Adds one constraint row; returns true if the kernel shrank.
    pub fn add_constraint(&mut self, row: &[Rational]) -> bool {
        self.rows.insert_rational(row)
    }

    pub fn kernel_dim(&self) -> usize {
        self.rows.cols() - self.rows.rank()
    }

    pub fn kernel(&self) -> Subspace {
        self.rows.kernel_subspace()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat_int;

    fn rows_i64(space: &mut IntRowSpace, rows: &[&[i64]]) {
        for r in rows {
            space.insert(r.to_vec());
        }
    }

    #[test]
    fn rank_and_kernel_dims() {
        let mut s = IntRowSpace::new(3);
        rows_i64(&mut s, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(s.rank(), 2);
        assert_eq!(s.kernel_subspace().dim(), 1);
    }

    #[test]
    fn canonical_rows_are_span_invariants() {
        let mut a = IntRowSpace::new(3);
        rows_i64(&mut a, &[&[1, 1, 0], &[0, 0, 1]]);
        let mut b = IntRowSpace::new(3);
        rows_i64(&mut b, &[&[2, 2, 2], &[-1, -1, 3]]);
        assert!(a.same_span(&b));
        let mut c = IntRowSpace::new(3);
        rows_i64(&mut c, &[&[1, 0, 0], &[0, 0, 1]]);
        assert!(!a.same_span(&c));
    }

    #[test]
    fn kernel_vectors_annihilated() {
        let mut s = IntRowSpace::new(4);
        rows_i64(&mut s, &[&[1, 1, 1, 1], &[0, 1, 2, 3]]);
        let k = s.kernel_subspace();
        assert_eq!(k.dim(), 2);
        for v in k.basis() {
            assert!(s.annihilates(v));
        }
    }

    #[test]
    fn overflow_upgrades_and_stays_exact() {
        // rows engineered so the fraction-free update overflows i64
        let big = (1i64 << 62) - 1;
        let mut s = IntRowSpace::new(2);
        s.insert(vec![big, 1]);
        s.insert(vec![1, big]);
        assert_eq!(s.rank(), 2);
        assert_eq!(s.kernel_subspace().dim(), 0);
    }

    #[test]
    fn accumulator_refines_incrementally() {
        let mut acc = KernelAccumulator::new(3);
        assert_eq!(acc.kernel_dim(), 3);
        assert!(acc.add_constraint(&[rat_int(1), rat_int(1), rat_int(0)]));
        assert!(!acc.add_constraint(&[rat_int(2), rat_int(2), rat_int(0)]));
        assert!(acc.add_constraint(&[rat_int(0), rat_int(0), rat_int(1)]));
        assert_eq!(acc.kernel_dim(), 1);
        let k = acc.kernel();
        assert!(k.contains_vector(&[rat_int(1), rat_int(-1), rat_int(0)]));
    }
}
