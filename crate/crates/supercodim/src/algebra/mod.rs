//! Finite-dimensional superalgebras given by graded structure constants.

mod catalog;
mod io;

pub use catalog::{catalog, catalog_names, resolve};
pub use io::AlgebraFile;

use crate::linalg::{IntRowSpace, QMatrix, Rational, Subspace};
use crate::{Error, Result};
use num::{One, Zero};
use std::sync::OnceLock;

/// Sparse vector in the algebra's own basis.
pub(crate) type SparseVec = Vec<(usize, Rational)>;

/// Machine-integer structure constants: `table[i][j]` lists `(k, c)`.
pub(crate) type IntTable = Vec<Vec<Vec<(u32, i64)>>>;

/// Marks a catalog Grassmann algebra so evaluation can use the
/// disjoint-support substitution stream.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct GrassmannInfo {
    pub t: usize,
    pub graded: bool,
}

/// A finite-dimensional Z2-graded algebra: basis `b_0 .. b_{dim-1}` with
/// parities and structure constants `b_i b_j = sum_k c[i][j][k] b_k`.
pub struct SuperAlgebra {
    name: String,
    dim: usize,
    degrees: Vec<u8>,
    labels: Vec<String>,
    table: Vec<Vec<SparseVec>>,
    /// Machine-integer copy of the table when all constants fit; the
    /// evaluation hot path requires it.
    int_table: Option<IntTable>,
    unit: Option<Vec<Rational>>,
    even: Vec<usize>,
    odd: Vec<usize>,
    grassmann: Option<GrassmannInfo>,
    center_cache: OnceLock<Subspace>,
}

/// Element of a fixed algebra, as a coordinate vector over its basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    pub coords: Vec<Rational>,
}

impl AlgebraElement {
    pub fn zero(dim: usize) -> Self {
        AlgebraElement {
            coords: vec![Rational::zero(); dim],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

/// Outcome of [`SuperAlgebra::validate`]: every violated triple is listed.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    /// `(i, j, k)` with `c[i][j][k] != 0` but `deg k != deg i + deg j`.
    pub grading_violations: Vec<(usize, usize, usize)>,
    /// `(i, j, k)` with `(b_i b_j) b_k != b_i (b_j b_k)`.
    pub associativity_violations: Vec<(usize, usize, usize)>,
    /// Basis indices where the declared unit fails to act as identity.
    pub unit_violations: Vec<usize>,
    /// Set when a declared unit is not even.
    pub unit_not_even: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.grading_violations.is_empty()
            && self.associativity_violations.is_empty()
            && self.unit_violations.is_empty()
            && !self.unit_not_even
    }

    pub fn summary(&self) -> String {
        if self.is_valid() {
            return "valid".into();
        }
        let mut parts = Vec::new();
        if !self.grading_violations.is_empty() {
            parts.push(format!(
                "{} grading violation(s), first {:?}",
                self.grading_violations.len(),
                self.grading_violations[0]
            ));
        }
        if !self.associativity_violations.is_empty() {
            parts.push(format!(
                "{} associativity violation(s), first {:?}",
                self.associativity_violations.len(),
                self.associativity_violations[0]
            ));
        }
        if !self.unit_violations.is_empty() {
            parts.push(format!("unit fails at {:?}", self.unit_violations));
        }
        if self.unit_not_even {
            parts.push("unit is not even".into());
        }
        parts.join("; ")
    }
}

impl SuperAlgebra {
    /// Builds an algebra from raw data. The unit, even/odd index lists and
    /// the integer fast-path table are derived; structure is not verified
    /// here (call [`validate`](Self::validate)).
    pub fn new(
        name: impl Into<String>,
        degrees: Vec<u8>,
        entries: &[(usize, usize, usize, Rational)],
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let dim = degrees.len();
        let mut table = vec![vec![SparseVec::new(); dim]; dim];
        for &(i, j, k, ref c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidAlgebra(format!(
                    "table index ({i},{j},{k}) out of range for dim {dim}"
                )));
            }
            if c.is_zero() {
                continue;
            }
            table[i][j].push((k, c.clone()));
        }
        for row in &mut table {
            for cell in row.iter_mut() {
                cell.sort_by_key(|&(k, _)| k);
                // merge duplicate (i,j,k) entries
                let mut merged: SparseVec = Vec::with_capacity(cell.len());
                for (k, c) in cell.drain(..) {
                    match merged.last_mut() {
                        Some((lk, lc)) if *lk == k => *lc += c,
                        _ => merged.push((k, c)),
                    }
                }
                merged.retain(|(_, c)| !c.is_zero());
                *cell = merged;
            }
        }
        let labels =
            labels.unwrap_or_else(|| (0..dim).map(|i| format!("b{i}")).collect());
        if labels.len() != dim {
            return Err(Error::InvalidAlgebra("label count != dim".into()));
        }
        let mut alg = SuperAlgebra {
            name: name.into(),
            dim,
            even: (0..dim).filter(|&i| degrees[i] == 0).collect(),
            odd: (0..dim).filter(|&i| degrees[i] == 1).collect(),
            degrees,
            labels,
            table,
            int_table: None,
            unit: None,
            grassmann: None,
            center_cache: OnceLock::new(),
        };
        alg.int_table = alg.derive_int_table();
        alg.unit = alg.solve_unit();
        Ok(alg)
    }

    pub(crate) fn set_grassmann(&mut self, info: GrassmannInfo) {
        self.grassmann = Some(info);
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degrees(&self) -> &[u8] {
        &self.degrees
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn even_basis(&self) -> &[usize] {
        &self.even
    }

    pub fn odd_basis(&self) -> &[usize] {
        &self.odd
    }

    pub fn unit(&self) -> Option<&Vec<Rational>> {
        self.unit.as_ref()
    }

    pub fn is_unitary(&self) -> bool {
        self.unit.is_some()
    }

    pub fn grassmann(&self) -> Option<GrassmannInfo> {
        self.grassmann
    }

    pub(crate) fn int_table(&self) -> Option<&IntTable> {
        self.int_table.as_ref()
    }

    pub fn table_entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in &self.table[i][j] {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        let mut e = AlgebraElement::zero(self.dim);
        e.coords[i] = Rational::one();
        e
    }

    /// Homogeneity tag of an element: its parity when the support lies in
    /// a single grading component (zero counts as even), None when mixed.
    pub fn element_parity(&self, e: &AlgebraElement) -> Option<u8> {
        let mut parity: Option<u8> = None;
        for (i, c) in e.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match parity {
                None => parity = Some(self.degrees[i]),
                Some(p) if p == self.degrees[i] => {}
                _ => return None,
            }
        }
        Some(parity.unwrap_or(0))
    }

    /// Integer copy of the table, scaled by the common denominator of all
    /// constants. Evaluation constraints are scale-invariant, so the
    /// uniform factor per multiplication drops out.
    fn derive_int_table(&self) -> Option<IntTable> {
        use num::Integer;
        let mut denom = num::BigInt::one();
        for row in &self.table {
            for cell in row {
                for (_, c) in cell {
                    denom = denom.lcm(c.denom());
                }
            }
        }
        let mut out = vec![vec![Vec::new(); self.dim]; self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in &self.table[i][j] {
                    let scaled = c.numer() * (&denom / c.denom());
                    let v = i64::try_from(&scaled).ok()?;
                    out[i][j].push((*k as u32, v));
                }
            }
        }
        Some(out)
    }

    /// Bilinear product via the structure constants.
    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        if x.coords.len() != self.dim || y.coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: x.coords.len().max(y.coords.len()),
                right: self.dim,
            });
        }
        let mut out = AlgebraElement::zero(self.dim);
        for (i, a) in x.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.table[i][j] {
                    out.coords[*k] += &ab * c;
                }
            }
        }
        Ok(out)
    }

    fn sparse_mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc: std::collections::BTreeMap<usize, Rational> = Default::default();
        for (i, a) in x {
            for (j, b) in y {
                for (k, c) in &self.table[*i][*j] {
                    let e = acc.entry(*k).or_insert_with(Rational::zero);
                    *e += a * b * c;
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Checks grading compatibility, associativity and the unit axioms,
    /// listing every violated triple.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let want = (self.degrees[i] + self.degrees[j]) % 2;
                for (k, c) in &self.table[i][j] {
                    if !c.is_zero() && self.degrees[*k] != want {
                        report.grading_violations.push((i, j, *k));
                    }
                }
            }
        }
        if let Some(int_table) = &self.int_table {
            // machine-integer associativity sweep (keeps Grassmann
            // validation at t = 8 around a tenth of a second)
            let dim = self.dim;
            let mut left = vec![0i64; dim];
            let mut right = vec![0i64; dim];
            for i in 0..dim {
                for j in 0..dim {
                    let ij = &int_table[i][j];
                    for k in 0..dim {
                        for v in left.iter_mut() {
                            *v = 0;
                        }
                        for v in right.iter_mut() {
                            *v = 0;
                        }
                        for &(m, c) in ij {
                            for &(l, d) in &int_table[m as usize][k] {
                                left[l as usize] += c * d;
                            }
                        }
                        for &(m, c) in &int_table[j][k] {
                            for &(l, d) in &int_table[i][m as usize] {
                                right[l as usize] += c * d;
                            }
                        }
                        if left != right {
                            report.associativity_violations.push((i, j, k));
                        }
                    }
                }
            }
        } else {
            for i in 0..self.dim {
                for j in 0..self.dim {
                    for k in 0..self.dim {
                        let ij = self.table[i][j].clone();
                        let jk = self.table[j][k].clone();
                        let lhs = self.sparse_mul(&ij, &vec![(k, Rational::one())]);
                        let rhs = self.sparse_mul(&vec![(i, Rational::one())], &jk);
                        if lhs != rhs {
                            report.associativity_violations.push((i, j, k));
                        }
                    }
                }
            }
        }
        if let Some(u) = &self.unit {
            let ue = AlgebraElement { coords: u.clone() };
            for i in 0..self.dim {
                let b = self.basis_element(i);
                let left = self.multiply(&ue, &b).unwrap();
                let right = self.multiply(&b, &ue).unwrap();
                if left != b || right != b {
                    report.unit_violations.push(i);
                }
            }
            // the unit must be even for the grading to be compatible
            let odd_support = u
                .iter()
                .enumerate()
                .any(|(i, c)| !c.is_zero() && self.degrees[i] == 1);
            report.unit_not_even = odd_support;
        }
        report
    }

    /// Solves `u b_i = b_i u = b_i` for all `i`; verifies the candidate.
    fn solve_unit(&self) -> Option<Vec<Rational>> {
        if self.dim == 0 {
            return None;
        }
        // rows of the linear system in the unknown coordinates of u
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        let mut rhs: Vec<Rational> = Vec::new();
        for i in 0..self.dim {
            for m in 0..self.dim {
                // sum_j u_j c[j][i][m] = delta_{im}
                let mut row = vec![Rational::zero(); self.dim];
                for (j, r) in row.iter_mut().enumerate() {
                    for (k, c) in &self.table[j][i] {
                        if *k == m {
                            *r += c;
                        }
                    }
                }
                rows.push(row);
                rhs.push(if i == m {
                    Rational::one()
                } else {
                    Rational::zero()
                });
            }
        }
        let u = solve_least(rows, rhs)?;
        let ue = AlgebraElement { coords: u.clone() };
        for i in 0..self.dim {
            let b = self.basis_element(i);
            if self.multiply(&ue, &b).ok()? != b || self.multiply(&b, &ue).ok()? != b {
                return None;
            }
        }
        Some(u)
    }

    /// Canonical basis of `{x : x b_i = b_i x for all i}`, computed as the
    /// kernel of the commutation system.
    pub fn center(&self) -> &Subspace {
        self.center_cache.get_or_init(|| {
            let mut rows = IntRowSpace::new(self.dim);
            for i in 0..self.dim {
                for m in 0..self.dim {
                    // sum_j x_j (c[j][i][m] - c[i][j][m]) = 0
                    let mut row = vec![Rational::zero(); self.dim];
                    for (j, r) in row.iter_mut().enumerate() {
                        for (k, c) in &self.table[j][i] {
                            if *k == m {
                                *r += c;
                            }
                        }
                        for (k, c) in &self.table[i][j] {
                            if *k == m {
                                *r -= c;
                            }
                        }
                    }
                    rows.insert_rational(&row);
                }
            }
            rows.kernel_subspace()
        })
    }

    /// Matrix of the projection onto a complement of the center; an element
    /// maps to zero iff it is central.
    pub fn quotient_map_mod_center(&self) -> QMatrix {
        let z = self.center();
        let pivots = z.pivots();
        let mut is_pivot = vec![false; self.dim];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.dim).filter(|&c| !is_pivot[c]).collect();
        let mut q = QMatrix::zero(free.len(), self.dim);
        for (row, &f) in free.iter().enumerate() {
            q.set(row, f, Rational::one());
            for (zi, &p) in z.basis().iter().zip(pivots.iter()) {
                if !zi[f].is_zero() {
                    q.set(row, p, -zi[f].clone());
                }
            }
        }
        q
    }

    /// Fingerprint used as a cache key by the evaluation session.
    pub(crate) fn cache_key(&self) -> String {
        format!("{}#{}", self.name, self.dim)
    }
}

/// Gaussian elimination solve; returns a particular solution (free
/// variables pinned to zero) or None when inconsistent.
fn solve_least(mut rows: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut rank = 0usize;
    for col in 0..ncols {
        let pr = (rank..nrows).find(|&r| !rows[r][col].is_zero());
        let pr = match pr {
            Some(p) => p,
            None => continue,
        };
        rows.swap(rank, pr);
        rhs.swap(rank, pr);
        let inv = rows[rank][col].recip();
        for v in rows[rank].iter_mut() {
            *v *= &inv;
        }
        rhs[rank] *= &inv;
        for r in 0..nrows {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                let (head, tail) = if r < rank {
                    let (a, b) = rows.split_at_mut(rank);
                    (&mut a[r], &b[0])
                } else {
                    let (a, b) = rows.split_at_mut(r);
                    (&mut b[0], &a[rank])
                };
                for (x, y) in head.iter_mut().zip(tail.iter()) {
                    *x -= &f * y;
                }
                let sub = &f * &rhs[rank];
                rhs[r] -= sub;
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }
    // consistency
    for r in rank..nrows {
        if !rhs[r].is_zero() {
            return None;
        }
    }
    let mut sol = vec![Rational::zero(); ncols];
    for (col, p) in pivot_of_col.iter().enumerate() {
        if let Some(r) = p {
            sol[col] = rhs[*r].clone();
        }
    }
    Some(sol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat_int;

    #[test]
    fn ut2_matrix_units() {
        let a = resolve("UT2").unwrap();
        // basis: e11, e22, e12
        let e11 = a.basis_element(0);
        let e12 = a.basis_element(2);
        assert_eq!(a.multiply(&e11, &e12).unwrap(), e12);
        assert!(a.multiply(&e12, &e11).unwrap().is_zero());
        assert!(a.is_unitary());
        assert_eq!(a.unit().unwrap().clone(), vec![rat_int(1), rat_int(1), rat_int(0)]);
    }

    #[test]
    fn grassmann_anticommutes() {
        let g = resolve("G2").unwrap();
        // graded-lex basis: 1, e1, e2, e1e2
        let e1 = g.basis_element(1);
        let e2 = g.basis_element(2);
        let forward = g.multiply(&e1, &e2).unwrap();
        let backward = g.multiply(&e2, &e1).unwrap();
        assert_eq!(forward.coords[3], rat_int(1));
        assert_eq!(backward.coords[3], rat_int(-1));
    }

    #[test]
    fn dgr_product() {
        let d = resolve("Dgr").unwrap();
        let u = d.basis_element(0);
        let v = d.basis_element(1);
        assert_eq!(d.multiply(&u, &v).unwrap(), v);
        assert_eq!(d.multiply(&v, &v).unwrap(), u);
    }

    #[test]
    fn catalog_validates() {
        for name in catalog_names() {
            let a = resolve(&name).unwrap();
            let report = a.validate();
            assert!(report.is_valid(), "{name}: {}", report.summary());
        }
    }

    #[test]
    fn constructed_grading_violation_reported() {
        // odd*odd landing on an odd coordinate
        let bad = SuperAlgebra::new(
            "bad",
            vec![1, 1],
            &[(0, 0, 1, rat_int(1))],
            None,
        )
        .unwrap();
        let report = bad.validate();
        assert_eq!(report.grading_violations, vec![(0, 0, 1)]);
    }

    #[test]
    fn constructed_associativity_violation_reported() {
        // b0 b0 = b1, b0 b1 = b0: (b0 b0) b0 = b1 b0 = 0, b0 (b0 b0) = b0 b1 = b0
        let bad = SuperAlgebra::new(
            "bad",
            vec![0, 0],
            &[(0, 0, 1, rat_int(1)), (0, 1, 0, rat_int(1))],
            None,
        )
        .unwrap();
        let report = bad.validate();
        assert!(!report.associativity_violations.is_empty());
    }

    #[test]
    fn center_of_n4() {
        let n4 = resolve("N4").unwrap();
        let z = n4.center();
        assert_eq!(z.dim(), 2);
        // I_4 and e_14 span the center; e_14 is the last basis vector
        let dim = n4.dim();
        let mut e14 = vec![Rational::zero(); dim];
        e14[dim - 1] = Rational::one();
        assert!(z.contains_vector(&e14));
        let mut ident = vec![Rational::zero(); dim];
        ident[0] = Rational::one();
        assert!(z.contains_vector(&ident));
    }

    #[test]
    fn commutative_catalog_entries_have_full_center() {
        for name in ["Dgr", "C2gr", "C3gr", "C4gr"] {
            let a = resolve(name).unwrap();
            assert_eq!(a.center().dim(), a.dim(), "{name}");
        }
    }

    #[test]
    fn ak_bk_have_trivial_center_and_no_unit() {
        for name in ["A2", "A3", "B2", "B3", "A2gr", "A3gr", "B2gr", "B3gr"] {
            let a = resolve(name).unwrap();
            assert_eq!(a.center().dim(), 0, "{name}");
            assert!(!a.is_unitary(), "{name}");
        }
    }

    #[test]
    fn center_splits_homogeneously() {
        for name in catalog_names() {
            let a = resolve(&name).unwrap();
            for v in a.center().basis() {
                let even = v
                    .iter()
                    .enumerate()
                    .any(|(i, c)| !c.is_zero() && a.degrees()[i] == 0);
                let odd = v
                    .iter()
                    .enumerate()
                    .any(|(i, c)| !c.is_zero() && a.degrees()[i] == 1);
                assert!(
                    !(even && odd),
                    "{name}: center basis vector mixes parities"
                );
            }
        }
    }

    #[test]
    fn quotient_map_exactness() {
        let ut2 = resolve("UT2").unwrap();
        let q = ut2.quotient_map_mod_center();
        assert_eq!(q.rows(), 2); // 3 - dim Z(UT2) = 2
        // center elements map to zero
        for z in ut2.center().basis() {
            assert!(q.mul_vec(z).iter().all(|c| c.is_zero()));
        }
        // commutative algebra: zero map
        let d = resolve("Dgr").unwrap();
        assert_eq!(d.quotient_map_mod_center().rows(), 0);
    }

    #[test]
    fn expected_dimensions() {
        for (name, dim) in [
            ("G1", 2),
            ("G2", 4),
            ("G3", 8),
            ("C2gr", 2),
            ("C4gr", 4),
            ("A2", 2),
            ("A3", 4),
            ("B3", 4),
            ("N3", 4),
            ("N4", 6),
            ("N3gr", 4),
            ("UT2", 3),
            ("Dgr", 2),
        ] {
            assert_eq!(resolve(name).unwrap().dim(), dim, "{name}");
        }
    }

    #[test]
    fn element_parity_tags() {
        let g = resolve("G2gr").unwrap();
        // basis: 1, e1, e2, e1e2
        assert_eq!(g.element_parity(&g.basis_element(0)), Some(0));
        assert_eq!(g.element_parity(&g.basis_element(1)), Some(1));
        let mut mixed = g.basis_element(0);
        mixed.coords[1] = rat_int(1);
        assert_eq!(g.element_parity(&mixed), None);
        assert_eq!(g.element_parity(&AlgebraElement::zero(4)), Some(0));
    }

    #[test]
    fn gt_odd_part_under_canonical_grading() {
        let g = resolve("G2gr").unwrap();
        assert_eq!(g.even_basis().len(), 2); // 1, e1e2
        assert_eq!(g.odd_basis().len(), 2); // e1, e2
        let gt = resolve("G2").unwrap();
        assert!(gt.odd_basis().is_empty());
    }
}
