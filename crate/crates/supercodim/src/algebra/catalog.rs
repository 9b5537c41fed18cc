//! The algebra catalog.
//!
//! Families (parameters in brackets):
//!
//! * `Gt` / `Gtgr` [t >= 1] — Grassmann algebra on `e_1..e_t`, with the
//!   trivial grading resp. the canonical one (even/odd word length).
//! * `UT2` / `UT2gr` — upper triangular 2x2 matrices, trivially graded
//!   resp. graded by `(F e11 + F e22, F e12)`.
//! * `Dgr` — `F + F` with grading `(F(1,1), F(1,-1))`.
//! * `Ckgr` [k >= 2] — `span{I, E, .., E^{k-1}}` in `UT_k`,
//!   `E = e_12 + e_23 + ..`, elementary grading `(0,1,0,1,...)`.
//! * `Ak`, `Bk`, `Nk` [k >= 2] — the tri-diagonal-power subalgebras of
//!   `UT_k` listed below, trivially graded.
//! * `Akgr`, `Bkgr`, `Nkgr` — the same spans with the elementary grading
//!   induced by `(0,1,..,1)` (for `Bk`, by the mirrored tuple
//!   `(1,..,1,0)`; the other choice does not leave the span graded).
//!
//! Matrix-family bases are kept in homogeneous form, even elements first,
//! and products are resolved by solving small linear systems over the
//! matrix-unit coordinates, so closure under multiplication is verified at
//! construction time.

use super::{GrassmannInfo, SuperAlgebra};
use crate::linalg::Rational;
use crate::{Error, Result};
use num::{One, Zero};
use std::collections::BTreeMap;

/// Sparse k x k matrix over Q.
type Mat = BTreeMap<(usize, usize), Rational>;

fn unit_mat(i: usize, j: usize) -> Mat {
    let mut m = Mat::new();
    m.insert((i, j), Rational::one());
    m
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let mut out = Mat::new();
    for (&(i, j), c) in a {
        for (&(j2, k), d) in b {
            if j == j2 {
                let e = out.entry((i, k)).or_insert_with(Rational::zero);
                *e += c * d;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `E^p` restricted to rows `start..`, i.e. `sum_{i>=start} e_{i,i+p}`
/// inside `M_k` (1-based rows).
fn shift_power(k: usize, p: usize, start: usize) -> Mat {
    let mut m = Mat::new();
    for i in start..=k.saturating_sub(p) {
        m.insert((i, i + p), Rational::one());
    }
    m
}

fn identity_mat(k: usize) -> Mat {
    let mut m = Mat::new();
    for i in 1..=k {
        m.insert((i, i), Rational::one());
    }
    m
}

/// Expresses `target` in the span of `basis` (vectors over matrix-unit
/// coordinates); None when not in the span.
fn coords_in_span(basis: &[Mat], target: &Mat) -> Option<Vec<Rational>> {
    // collect the support
    let mut support: Vec<(usize, usize)> = Vec::new();
    for m in basis.iter().chain(std::iter::once(target)) {
        for &p in m.keys() {
            if !support.contains(&p) {
                support.push(p);
            }
        }
    }
    support.sort_unstable();
    let get = |m: &Mat, p: &(usize, usize)| m.get(p).cloned().unwrap_or_else(Rational::zero);
    // gaussian solve of basis^T x = target over the support coordinates
    let mut rows: Vec<Vec<Rational>> = support
        .iter()
        .map(|p| basis.iter().map(|m| get(m, p)).collect())
        .collect();
    let mut rhs: Vec<Rational> = support.iter().map(|p| get(target, p)).collect();
    let ncols = basis.len();
    let nrows = rows.len();
    let mut rank = 0usize;
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
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
                let pivot_row = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(pivot_row.iter()) {
                    *x -= &f * y;
                }
                let sub = &f * &rhs[rank];
                rhs[r] -= sub;
            }
        }
        pivot_col_of_row.push(col);
        rank += 1;
    }
    for r in rank..nrows {
        if !rhs[r].is_zero() {
            return None;
        }
    }
    let mut sol = vec![Rational::zero(); ncols];
    for (r, &col) in pivot_col_of_row.iter().enumerate() {
        sol[col] = rhs[r].clone();
    }
    Some(sol)
}

/// Builds a structure-constant algebra from a matrix basis; errors if the
/// span is not closed under multiplication.
fn span_algebra(
    name: &str,
    basis: Vec<(String, Mat)>,
    degrees: Vec<u8>,
) -> Result<SuperAlgebra> {
    let mats: Vec<Mat> = basis.iter().map(|(_, m)| m.clone()).collect();
    let labels: Vec<String> = basis.iter().map(|(l, _)| l.clone()).collect();
    let dim = mats.len();
    let mut entries = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let prod = mat_mul(&mats[i], &mats[j]);
            let coords = coords_in_span(&mats, &prod).ok_or_else(|| {
                Error::InvalidAlgebra(format!(
                    "{name}: product {} * {} leaves the span",
                    labels[i], labels[j]
                ))
            })?;
            for (k, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    entries.push((i, j, k, c));
                }
            }
        }
    }
    SuperAlgebra::new(name, degrees, &entries, Some(labels))
}

/// Subsets of `{1..t}` in graded-lexicographic order: by size, then
/// lexicographically on the sorted element lists.
fn graded_lex_subsets(t: usize) -> Vec<Vec<u8>> {
    fn rec(t: u8, size: usize, start: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in start..=t {
            cur.push(v);
            rec(t, size, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for size in 0..=t {
        rec(t as u8, size, 1, &mut Vec::new(), &mut out);
    }
    out
}

/// Sign of `e_S e_T` as `(-1)^{#{(s,t) in S x T : s > t}}`; None when the
/// supports overlap.
fn grassmann_sign(s: &[u8], t: &[u8]) -> Option<i64> {
    let mut inversions = 0usize;
    for &a in s {
        for &b in t {
            if a == b {
                return None;
            }
            if a > b {
                inversions += 1;
            }
        }
    }
    Some(if inversions % 2 == 0 { 1 } else { -1 })
}

fn grassmann(t: usize, graded: bool) -> Result<SuperAlgebra> {
    let subsets = graded_lex_subsets(t);
    let index: BTreeMap<Vec<u8>, usize> = subsets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();
    let degrees: Vec<u8> = subsets
        .iter()
        .map(|s| if graded { (s.len() % 2) as u8 } else { 0 })
        .collect();
    let labels: Vec<String> = subsets
        .iter()
        .map(|s| {
            if s.is_empty() {
                "1".to_string()
            } else {
                s.iter().map(|e| format!("e{e}")).collect()
            }
        })
        .collect();
    let mut entries = Vec::new();
    for (i, s) in subsets.iter().enumerate() {
        for (j, u) in subsets.iter().enumerate() {
            if let Some(sign) = grassmann_sign(s, u) {
                let mut merged: Vec<u8> = s.iter().chain(u.iter()).copied().collect();
                merged.sort_unstable();
                let k = index[&merged];
                entries.push((i, j, k, Rational::from_integer(sign.into())));
            }
        }
    }
    let name = if graded {
        format!("G{t}gr")
    } else {
        format!("G{t}")
    };
    let mut alg = SuperAlgebra::new(name, degrees, &entries, Some(labels))?;
    alg.set_grassmann(GrassmannInfo { t, graded });
    Ok(alg)
}

fn ut2(graded: bool) -> Result<SuperAlgebra> {
    let basis = vec![
        ("e11".to_string(), unit_mat(1, 1)),
        ("e22".to_string(), unit_mat(2, 2)),
        ("e12".to_string(), unit_mat(1, 2)),
    ];
    let degrees = if graded {
        vec![0, 0, 1]
    } else {
        vec![0, 0, 0]
    };
    span_algebra(if graded { "UT2gr" } else { "UT2" }, basis, degrees)
}

fn dgr() -> Result<SuperAlgebra> {
    // F + F as diagonal 2x2 matrices; (1,1) even, (1,-1) odd
    let u = identity_mat(2);
    let mut v = unit_mat(1, 1);
    v.insert((2, 2), -Rational::one());
    span_algebra(
        "Dgr",
        vec![("(1,1)".to_string(), u), ("(1,-1)".to_string(), v)],
        vec![0, 1],
    )
}

fn ckgr(k: usize) -> Result<SuperAlgebra> {
    let mut basis = vec![("I".to_string(), identity_mat(k))];
    for p in 1..k {
        basis.push((power_label("E", p), shift_power(k, p, 1)));
    }
    let degrees: Vec<u8> = (0..k).map(|p| (p % 2) as u8).collect();
    span_algebra(&format!("C{k}gr"), basis, degrees)
}

fn power_label(base: &str, p: usize) -> String {
    if p == 1 {
        base.to_string()
    } else {
        format!("{base}^{p}")
    }
}

/// `A_k = span{e11, E, .., E^{k-2}, e12, .., e1k}`.
fn ak(k: usize, graded: bool) -> Result<SuperAlgebra> {
    let mut basis = vec![("e11".to_string(), unit_mat(1, 1))];
    if graded {
        // homogeneous basis: E' = E - e12 spans the even nilpotent part
        for p in 1..=k - 2 {
            basis.push((power_label("E'", p), shift_power(k, p, 2)));
        }
    } else {
        for p in 1..=k - 2 {
            basis.push((power_label("E", p), shift_power(k, p, 1)));
        }
    }
    for j in 2..=k {
        basis.push((format!("e1{j}"), unit_mat(1, j)));
    }
    let even = k - 1;
    let degrees: Vec<u8> = (0..basis.len())
        .map(|i| if graded && i >= even { 1 } else { 0 })
        .collect();
    let name = if graded {
        format!("A{k}gr")
    } else {
        format!("A{k}")
    };
    span_algebra(&name, basis, degrees)
}

/// `B_k = span{e_kk, E, .., E^{k-2}, e_1k, .., e_{k-1,k}}`.
fn bk(k: usize, graded: bool) -> Result<SuperAlgebra> {
    let mut basis = vec![(format!("e{k}{k}"), unit_mat(k, k))];
    if graded {
        // F' = E - e_{k-1,k}: the even nilpotent part under (1,..,1,0)
        for p in 1..=k - 2 {
            let mut m = shift_power(k, p, 1);
            m.remove(&(k - p, k));
            basis.push((power_label("F'", p), m));
        }
    } else {
        for p in 1..=k - 2 {
            basis.push((power_label("E", p), shift_power(k, p, 1)));
        }
    }
    for i in 1..k {
        basis.push((format!("e{i}{k}"), unit_mat(i, k)));
    }
    let even = k - 1;
    let degrees: Vec<u8> = (0..basis.len())
        .map(|i| if graded && i >= even { 1 } else { 0 })
        .collect();
    let name = if graded {
        format!("B{k}gr")
    } else {
        format!("B{k}")
    };
    span_algebra(&name, basis, degrees)
}

/// `N_k = span{I_k, E, .., E^{k-2}, e12, .., e1k}`.
fn nk(k: usize, graded: bool) -> Result<SuperAlgebra> {
    let mut basis = vec![("I".to_string(), identity_mat(k))];
    if graded {
        for p in 1..=k - 2 {
            basis.push((power_label("E'", p), shift_power(k, p, 2)));
        }
    } else {
        for p in 1..=k - 2 {
            basis.push((power_label("E", p), shift_power(k, p, 1)));
        }
    }
    for j in 2..=k {
        basis.push((format!("e1{j}"), unit_mat(1, j)));
    }
    let even = k - 1;
    let degrees: Vec<u8> = (0..basis.len())
        .map(|i| if graded && i >= even { 1 } else { 0 })
        .collect();
    let name = if graded {
        format!("N{k}gr")
    } else {
        format!("N{k}")
    };
    span_algebra(&name, basis, degrees)
}

/// Catalog constructor: family name plus parameter.
pub fn catalog(family: &str, param: Option<u32>) -> Result<SuperAlgebra> {
    let need = |min: u32| -> Result<usize> {
        let v = param.ok_or_else(|| Error::ParameterOutOfRange {
            family: family.to_string(),
            value: 0,
            min,
        })?;
        if v < min {
            return Err(Error::ParameterOutOfRange {
                family: family.to_string(),
                value: v,
                min,
            });
        }
        Ok(v as usize)
    };
    match family {
        "Gt" => grassmann(need(1)?, false),
        "Gtgr" => grassmann(need(1)?, true),
        "UT2" => ut2(false),
        "UT2gr" => ut2(true),
        "Dgr" => dgr(),
        "Ckgr" => ckgr(need(2)?),
        "Ak" => ak(need(2)?, false),
        "Akgr" => ak(need(2)?, true),
        "Bk" => bk(need(2)?, false),
        "Bkgr" => bk(need(2)?, true),
        "Nk" => nk(need(2)?, false),
        "Nkgr" => nk(need(2)?, true),
        _ => Err(Error::UnknownAlgebra(family.to_string())),
    }
}

/// Resolves compact names like `G2`, `G3gr`, `C3gr`, `N4`, `A2gr`, `UT2`.
pub fn resolve(name: &str) -> Result<SuperAlgebra> {
    match name {
        "UT2" => return catalog("UT2", None),
        "UT2gr" => return catalog("UT2gr", None),
        "Dgr" => return catalog("Dgr", None),
        _ => {}
    }
    let bytes = name.as_bytes();
    if bytes.is_empty() {
        return Err(Error::UnknownAlgebra(name.to_string()));
    }
    let head = bytes[0] as char;
    let rest = &name[1..];
    let (digits, suffix) = match rest.find(|c: char| !c.is_ascii_digit()) {
        Some(p) => (&rest[..p], &rest[p..]),
        None => (rest, ""),
    };
    let graded = match suffix {
        "" => false,
        "gr" => true,
        _ => return Err(Error::UnknownAlgebra(name.to_string())),
    };
    let param: u32 = digits
        .parse()
        .map_err(|_| Error::UnknownAlgebra(name.to_string()))?;
    let family = match (head, graded) {
        ('G', false) => "Gt",
        ('G', true) => "Gtgr",
        ('C', true) => "Ckgr",
        ('A', false) => "Ak",
        ('A', true) => "Akgr",
        ('B', false) => "Bk",
        ('B', true) => "Bkgr",
        ('N', false) => "Nk",
        ('N', true) => "Nkgr",
        _ => return Err(Error::UnknownAlgebra(name.to_string())),
    };
    catalog(family, Some(param))
}

/// A representative list of catalog names (used by `algebra list` and the
/// cross-catalog test suites).
pub fn catalog_names() -> Vec<String> {
    let mut names = vec![
        "UT2".to_string(),
        "UT2gr".to_string(),
        "Dgr".to_string(),
    ];
    for k in 2..=4 {
        names.push(format!("C{k}gr"));
    }
    for k in 2..=3 {
        for f in ["A", "B"] {
            names.push(format!("{f}{k}"));
            names.push(format!("{f}{k}gr"));
        }
    }
    for k in 2..=4 {
        names.push(format!("N{k}"));
        names.push(format!("N{k}gr"));
    }
    for t in 1..=4 {
        names.push(format!("G{t}"));
        names.push(format!("G{t}gr"));
    }
    names
}
