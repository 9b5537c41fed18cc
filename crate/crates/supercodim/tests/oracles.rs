//! Independent oracles for the exact linear algebra and the evaluation
//! kernels.
//!
//! The oracle here is a plain rational Gaussian elimination that never
//! touches the fraction-free engine, plus a kernel construction that goes
//! through the public `multiply` API instead of the integer-table
//! evaluation path. Agreement on random matrices and on all sectors at
//! small degree pins both routes to each other.

use num::{One, Zero};
use proptest::prelude::*;
use supercodim::algebra::resolve;
use supercodim::eval::Session;
use supercodim::linalg::{rat, rat_int, QMatrix, Rational, Subspace};
use supercodim::polyspace::{factorial, word_unrank, Sector};

/// Naive reduced row echelon form over Q: textbook elimination with
/// rational divisions, no integer scaling, no content tricks.
fn naive_rref(mut rows: Vec<Vec<Rational>>) -> (usize, Vec<Vec<Rational>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0usize;
    let mut pivots = Vec::new();
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = rows[rank][col].clone().recip();
        for v in rows[rank].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                let pivot = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(pivot.iter()) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    (rank, rows, pivots)
}

/// Kernel basis from the naive echelon form.
fn naive_kernel(rows: Vec<Vec<Rational>>, ncols: usize) -> Vec<Vec<Rational>> {
    let (_, rref, pivots) = naive_rref(rows);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for f in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); ncols];
        v[f] = Rational::one();
        for (row, &p) in rref.iter().zip(pivots.iter()) {
            if !row[f].is_zero() {
                v[p] = -row[f].clone();
            }
        }
        basis.push(v);
    }
    basis
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn matrix_strategy(max: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(small_rational(), c), r)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_matches_naive_oracle(rows in matrix_strategy(6)) {
        let m = QMatrix::from_rows(rows.clone());
        let (naive_rank, _, _) = naive_rref(rows);
        prop_assert_eq!(m.rank(), naive_rank);
    }

    #[test]
    fn rank_plus_kernel_dim_is_cols(rows in matrix_strategy(6)) {
        let m = QMatrix::from_rows(rows);
        prop_assert_eq!(m.rank() + m.kernel_basis().dim(), m.cols());
    }

    #[test]
    fn kernel_matches_naive_oracle(rows in matrix_strategy(5)) {
        let ncols = rows[0].len();
        let m = QMatrix::from_rows(rows.clone());
        let kernel = m.kernel_basis();
        let naive = Subspace::from_spanning(ncols, &naive_kernel(rows, ncols));
        prop_assert!(kernel.equal(&naive).unwrap());
        for v in kernel.basis() {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn kernel_invariant_under_row_permutations(rows in matrix_strategy(5), seed in 0u64..1000) {
        let mut permuted = rows.clone();
        // a cheap deterministic shuffle
        let mut state = seed;
        for i in (1..permuted.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            permuted.swap(i, j);
        }
        let a = QMatrix::from_rows(rows).kernel_basis();
        let b = QMatrix::from_rows(permuted).kernel_basis();
        prop_assert!(a.equal(&b).unwrap());
    }

    #[test]
    fn subspace_equality_is_an_equivalence(
        va in proptest::collection::vec(proptest::collection::vec(small_rational(), 4), 1..4),
        vb in proptest::collection::vec(proptest::collection::vec(small_rational(), 4), 1..4),
    ) {
        let a = Subspace::from_spanning(4, &va);
        let b = Subspace::from_spanning(4, &vb);
        // symmetry
        prop_assert_eq!(a.equal(&b).unwrap(), b.equal(&a).unwrap());
        // mutual containment iff equality
        let mutual = a.contains(&b).unwrap() && b.contains(&a).unwrap();
        prop_assert_eq!(mutual, a.equal(&b).unwrap());
        // reflexivity / transitivity through a shared canonical copy
        let c = Subspace::from_spanning(4, a.basis());
        prop_assert!(a.equal(&c).unwrap());
        if a.equal(&b).unwrap() && b.equal(&c).unwrap() {
            prop_assert!(a.equal(&c).unwrap());
        }
    }
}

/// Constraint matrix of a sector built through the public rational API:
/// every substitution tuple of homogeneous basis elements, every word,
/// values multiplied out with `SuperAlgebra::multiply`.
fn naive_sector_matrix(
    alg: &supercodim::algebra::SuperAlgebra,
    n: usize,
    r: usize,
    central: bool,
) -> Vec<Vec<Rational>> {
    let nfact = factorial(n);
    let even = alg.even_basis();
    let odd = alg.odd_basis();
    let q = alg.quotient_map_mod_center();
    let mut rows = Vec::new();
    let mut tuple = vec![0usize; n];
    let counts: Vec<usize> = (0..n)
        .map(|p| if p < n - r { even.len() } else { odd.len() })
        .collect();
    if counts.iter().any(|&c| c == 0) {
        return rows;
    }
    let total: usize = counts.iter().product();
    for mut idx in 0..total {
        for p in (0..n).rev() {
            let digit = idx % counts[p];
            idx /= counts[p];
            tuple[p] = if p < n - r {
                even[digit]
            } else {
                odd[digit]
            };
        }
        // evaluate each word by repeated multiplication
        let dim = alg.dim();
        let mut value_rows = vec![vec![Rational::zero(); nfact]; dim];
        for w in 0..nfact {
            let word = word_unrank(n, w);
            let mut acc = alg.basis_element(tuple[(word[0] - 1) as usize]);
            for &letter in &word[1..] {
                let b = alg.basis_element(tuple[(letter - 1) as usize]);
                acc = alg.multiply(&acc, &b).unwrap();
            }
            for (coord, c) in acc.coords.iter().enumerate() {
                value_rows[coord][w] = c.clone();
            }
        }
        if central {
            for qr in 0..q.rows() {
                let mut row = vec![Rational::zero(); nfact];
                for (coord, vrow) in value_rows.iter().enumerate() {
                    let f = q.get(qr, coord).clone();
                    if f.is_zero() {
                        continue;
                    }
                    for (x, y) in row.iter_mut().zip(vrow.iter()) {
                        *x += &f * y;
                    }
                }
                rows.push(row);
            }
        } else {
            rows.extend(value_rows);
        }
    }
    rows
}

#[test]
fn sector_kernels_match_naive_route_up_to_degree_three() {
    let session = Session::default();
    for name in ["UT2", "Dgr", "N3", "A2", "G2", "G2gr", "N3gr", "C3gr"] {
        let alg = resolve(name).unwrap();
        for n in 1..=3 {
            for r in 0..=n {
                let kernels = session.sector(&alg, n, r).unwrap();
                let nfact = factorial(n);

                let id_rows = naive_sector_matrix(&alg, n, r, false);
                let naive_id =
                    Subspace::from_spanning(nfact, &naive_kernel(id_rows, nfact));
                assert!(
                    kernels.id_kernel().equal(&naive_id).unwrap(),
                    "{name} id kernel ({n},{r})"
                );

                let central_rows = naive_sector_matrix(&alg, n, r, true);
                let naive_central =
                    Subspace::from_spanning(nfact, &naive_kernel(central_rows, nfact));
                assert!(
                    kernels.central_kernel().equal(&naive_central).unwrap(),
                    "{name} central kernel ({n},{r})"
                );
            }
        }
    }
}

#[test]
fn sector_dimension_identity() {
    // rank + kernel dim = n! on real evaluation data
    let session = Session::default();
    let alg = resolve("N4").unwrap();
    for n in 1..=4 {
        for r in 0..=n {
            let k = session.sector(&alg, n, r).unwrap();
            let s = Sector::new(n, r).unwrap();
            assert_eq!(k.sector_codim() + k.id_kernel().dim(), s.dim());
            assert_eq!(
                k.sector_central_codim() + k.central_kernel().dim(),
                s.dim()
            );
        }
    }
}

#[test]
fn naive_oracle_self_check() {
    // the oracle itself on a known case
    let rows = vec![
        vec![rat_int(1), rat_int(1)],
        vec![rat_int(2), rat_int(2)],
    ];
    let (rank, _, _) = naive_rref(rows.clone());
    assert_eq!(rank, 1);
    let kernel = naive_kernel(rows, 2);
    assert_eq!(kernel.len(), 1);
    assert_eq!(kernel[0], vec![rat_int(-1), rat_int(1)]);
}
