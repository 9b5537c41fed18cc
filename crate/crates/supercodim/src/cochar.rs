//! Partition combinatorics, symmetric-group characters and cocharacter
//! multiplicities.
//!
//! The multilinear quotients `P_{n-r,r}/(P_{n-r,r} ∩ Id)` and
//! `P_{n-r,r}/(P_{n-r,r} ∩ C)` carry the permutation action of
//! `S_{n-r} x S_r` on variable indices. The multiplicity of the
//! irreducible `χ_λ ⊗ χ_μ` (with `λ ⊢ n-r`, `μ ⊢ r`) in the quotient is
//! extracted by a class-weighted inner product of characters; the pair
//! `(λ, μ)` with `r = |μ|` indexes the corresponding irreducible character
//! of the degree-`n` cocharacter, of degree `C(n,r) d_λ d_μ`.
//!
//! Character values come from the Murnaghan–Nakayama recursion on beta
//! numbers; quotient traces are `trace on P` (a fixed-point count) minus
//! the trace on the invariant kernel, read off its echelon basis.

use crate::algebra::SuperAlgebra;
use crate::eval::{KernelKind, Session};
use crate::linalg::{Rational, Subspace};
use crate::polyspace::{factorial, word_rank, word_unrank, Perm};
use crate::{Error, Result};
use num::Zero;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// Largest weight supported by the partition utilities.
pub const PARTITION_CAP: usize = 12;

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u8>);

impl Partition {
    pub fn new(parts: Vec<u8>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::MalformedFormula(format!(
                "not a partition: {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Single row `(m)`; the empty partition when `m = 0`.
    pub fn row(m: usize) -> Self {
        if m == 0 {
            Partition::empty()
        } else {
            Partition(vec![m as u8])
        }
    }

    /// Hook `(m - i, 1^i)`.
    pub fn hook(m: usize, i: usize) -> Result<Self> {
        let mut parts = vec![(m - i) as u8];
        parts.extend(std::iter::repeat(1u8).take(i));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u8] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `m` in reverse-lexicographic order (largest first).
pub fn partitions_of(m: usize) -> Result<Vec<Partition>> {
    if m > PARTITION_CAP {
        return Err(Error::CapExceeded {
            n: m,
            cap: PARTITION_CAP,
        });
    }
    fn rec(rest: usize, cap: usize, cur: &mut Vec<u8>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for next in (1..=rest.min(cap)).rev() {
            cur.push(next as u8);
            rec(rest - next, next, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Dimension of the irreducible `S_m` representation: `m! / prod(hooks)`.
pub fn hook_dim(p: &Partition) -> u64 {
    let parts = p.parts();
    let m = p.weight();
    if m == 0 {
        return 1;
    }
    // column lengths
    let cols = parts[0] as usize;
    let mut col_len = vec![0usize; cols];
    for &row in parts {
        for c in col_len.iter_mut().take(row as usize) {
            *c += 1;
        }
    }
    let mut hooks = 1u128;
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row as usize {
            let hook = (row as usize - j) + (col_len[j] - i) - 1;
            hooks *= hook as u128;
        }
    }
    let mut fact = 1u128;
    for v in 1..=m as u128 {
        fact *= v;
    }
    (fact / hooks) as u64
}

/// Pair of partitions indexing an irreducible character of the degree-`n`
/// cocharacter, `λ ⊢ n - r` and `μ ⊢ r`. Ordered by `(|μ|, λ, μ)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct PartitionPair {
    pub lambda: Partition,
    pub mu: Partition,
}

impl PartitionPair {
    pub fn new(lambda: Partition, mu: Partition) -> Self {
        PartitionPair { lambda, mu }
    }

    pub fn n(&self) -> usize {
        self.lambda.weight() + self.mu.weight()
    }
}

impl Ord for PartitionPair {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.mu.weight(), &self.lambda, &self.mu).cmp(&(
            other.mu.weight(),
            &other.lambda,
            &other.mu,
        ))
    }
}

impl PartialOrd for PartitionPair {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lambda, self.mu)
    }
}

/// Degree of the irreducible character of the pair:
/// `C(n, |μ|) d_λ d_μ`.
pub fn pair_degree(pair: &PartitionPair) -> u64 {
    let n = pair.n() as u64;
    let r = pair.mu.weight() as u64;
    binomial(n, r) * hook_dim(&pair.lambda) * hook_dim(&pair.mu)
}

/// Irreducible character value via the Murnaghan–Nakayama rule on beta
/// numbers, memoized per call.
pub fn mn_char(lambda: &Partition, cycle_type: &Partition) -> Result<i64> {
    if lambda.weight() != cycle_type.weight() {
        return Err(Error::WeightMismatch(
            lambda.weight(),
            cycle_type.weight(),
        ));
    }
    let mut memo = HashMap::new();
    Ok(mn_rec(lambda.parts(), cycle_type.parts(), &mut memo))
}

fn mn_rec(lambda: &[u8], rho: &[u8], memo: &mut HashMap<(Vec<u8>, Vec<u8>), i64>) -> i64 {
    if rho.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let strip = rho[0] as i64;
    let rest = &rho[1..];
    let k = lambda.len();
    let betas: Vec<i64> = (0..k)
        .map(|i| lambda[i] as i64 + (k - 1 - i) as i64)
        .collect();
    let mut total = 0i64;
    for (pos, &b) in betas.iter().enumerate() {
        let target = b - strip;
        if target < 0 || betas.contains(&target) {
            continue;
        }
        // sign: parity of the number of betas strictly between target and b
        let between = betas
            .iter()
            .filter(|&&x| x > target && x < b)
            .count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut new_betas = betas.clone();
        new_betas[pos] = target;
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        let mut new_lambda: Vec<u8> = Vec::with_capacity(k);
        for (i, &nb) in new_betas.iter().enumerate() {
            let part = nb - (k - 1 - i) as i64;
            debug_assert!(part >= 0);
            if part > 0 {
                new_lambda.push(part as u8);
            }
        }
        total += sign * mn_rec(&new_lambda, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Character table of `S_m`: rows indexed by partitions (reverse-lex), as
/// are the column cycle types.
pub struct CharTable {
    pub parts: Vec<Partition>,
    /// `values[lambda][class]`
    pub values: Vec<Vec<i64>>,
    /// conjugacy class sizes per cycle type
    pub class_sizes: Vec<u64>,
}

pub fn char_table(m: usize) -> Result<CharTable> {
    let parts = partitions_of(m)?;
    let mut values = Vec::with_capacity(parts.len());
    for lambda in &parts {
        let mut row = Vec::with_capacity(parts.len());
        for rho in &parts {
            row.push(mn_char(lambda, rho)?);
        }
        values.push(row);
    }
    let class_sizes = parts.iter().map(|p| class_size(p)).collect();
    Ok(CharTable {
        parts,
        values,
        class_sizes,
    })
}

/// Size of the conjugacy class with the given cycle type in `S_{|ρ|}`.
pub fn class_size(rho: &Partition) -> u64 {
    let m = rho.weight();
    let mut mult: BTreeMap<u8, u64> = BTreeMap::new();
    for &p in rho.parts() {
        *mult.entry(p).or_insert(0) += 1;
    }
    let mut z = 1u64;
    for (&p, &k) in &mult {
        z *= (p as u64).pow(k as u32);
        let mut f = 1u64;
        for v in 1..=k {
            f *= v;
        }
        z *= f;
    }
    (factorial(m) as u64) / z
}

/// Canonical representative with ascending cycle blocks: parts laid out on
/// consecutive integers.
pub fn cycle_representative(rho: &Partition, m: usize) -> Perm {
    let mut images: Vec<u8> = (1..=m as u8).collect();
    let mut start = 1u8;
    for &p in rho.parts() {
        if p > 1 {
            // cycle (start, start+1, .., start+p-1)
            for off in 0..p - 1 {
                images[(start + off) as usize - 1] = start + off + 1;
            }
            images[(start + p - 1) as usize - 1] = start;
        }
        start += p;
    }
    Perm::from_images(images).unwrap()
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CocharKind {
    Graded,
    Central,
    ProperCentral,
}

impl fmt::Display for CocharKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CocharKind::Graded => "graded",
            CocharKind::Central => "central",
            CocharKind::ProperCentral => "proper-central",
        };
        write!(f, "{s}")
    }
}

/// Multiplicity table of one cocharacter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocharDecomposition {
    pub algebra: String,
    pub n: usize,
    pub kind: CocharKind,
    pub terms: BTreeMap<PartitionPair, u64>,
}

impl CocharDecomposition {
    /// `sum m_{λ,μ} d_{λ,μ}`; equals the matching codimension.
    pub fn degree_sum(&self) -> u64 {
        self.terms
            .iter()
            .map(|(pair, &m)| m * pair_degree(pair))
            .sum()
    }
}

#[derive(Serialize)]
struct TermDto<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    m: u64,
}

impl Serialize for CocharDecomposition {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = ser.serialize_struct("CocharDecomposition", 4)?;
        s.serialize_field("algebra", &self.algebra)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("kind", &self.kind)?;
        let terms: Vec<TermDto> = self
            .terms
            .iter()
            .map(|(pair, &m)| TermDto {
                lambda: &pair.lambda,
                mu: &pair.mu,
                m,
            })
            .collect();
        s.serialize_field("terms", &terms)?;
        s.end()
    }
}

/// Combined permutation of `1..=n` from a y-part and a z-part permutation.
fn combine_perm(n: usize, yc: usize, g: &Perm, h: &Perm) -> Vec<u8> {
    (1..=n as u8)
        .map(|v| {
            if (v as usize) <= yc {
                g.apply(v)
            } else {
                yc as u8 + h.apply(v - yc as u8)
            }
        })
        .collect()
}

/// Trace of the variable-renaming action on the full sector: the number of
/// fixed monomials (zero except at the identity, where it is `n!`).
fn sector_trace(n: usize, pi: &[u8]) -> i64 {
    let mut fixed = 0i64;
    for idx in 0..factorial(n) {
        let w = word_unrank(n, idx);
        if w.iter().all(|&v| pi[(v - 1) as usize] == v) {
            fixed += 1;
        }
    }
    fixed
}

/// Trace of the action restricted to an invariant subspace in echelon
/// form: coordinates against the echelon basis are read off the pivot
/// columns.
fn kernel_trace(n: usize, kernel: &Subspace, pi: &[u8]) -> Rational {
    let mut inv = vec![0u8; n];
    for (i, &v) in pi.iter().enumerate() {
        inv[(v - 1) as usize] = (i + 1) as u8;
    }
    let pivots = kernel.pivots();
    let mut tr = Rational::zero();
    for (row, &p) in kernel.basis().iter().zip(pivots.iter()) {
        let word = word_unrank(n, p);
        let pre: Vec<u8> = word.iter().map(|&v| inv[(v - 1) as usize]).collect();
        tr += row[word_rank(&pre)].clone();
    }
    tr
}

/// Character of the sector quotient, one value per cycle-type pair
/// `(α ⊢ n-r, β ⊢ r)`, as `trace(P) - trace(kernel)`.
pub fn quotient_character(
    session: &Session,
    alg: &SuperAlgebra,
    n: usize,
    r: usize,
    which: KernelKind,
) -> Result<BTreeMap<(Partition, Partition), Rational>> {
    let kernels = session.sector(alg, n, r)?;
    let kernel = match which {
        KernelKind::Identity => kernels.id_kernel(),
        KernelKind::Central => kernels.central_kernel(),
    };
    let yc = n - r;
    let mut out = BTreeMap::new();
    for alpha in partitions_of(yc)? {
        let g = cycle_representative(&alpha, yc);
        for beta in partitions_of(r)? {
            let h = cycle_representative(&beta, r);
            let pi = combine_perm(n, yc, &g, &h);
            let tp = Rational::from_integer(sector_trace(n, &pi).into());
            let tk = kernel_trace(n, kernel, &pi);
            out.insert((alpha.clone(), beta), tp - tk);
        }
    }
    Ok(out)
}

/// Default degree cap for cocharacter extraction.
pub const COCHAR_CAP: usize = 5;

/// Full cocharacter decomposition at degree `n`.
pub fn cocharacter(
    session: &Session,
    alg: &SuperAlgebra,
    n: usize,
    kind: CocharKind,
) -> Result<CocharDecomposition> {
    let cap = session.options().cochar_cap;
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let terms = match kind {
        CocharKind::Graded => multiplicities(session, alg, n, KernelKind::Identity)?,
        CocharKind::Central => multiplicities(session, alg, n, KernelKind::Central)?,
        CocharKind::ProperCentral => {
            let graded = multiplicities(session, alg, n, KernelKind::Identity)?;
            let central = multiplicities(session, alg, n, KernelKind::Central)?;
            // m'' = m - m', which must stay non-negative pointwise
            for pair in central.keys() {
                if !graded.contains_key(pair) {
                    return Err(Error::NegativeMultiplicity(pair.to_string()));
                }
            }
            let mut out = BTreeMap::new();
            for (pair, m) in graded {
                let mz = central.get(&pair).copied().unwrap_or(0);
                if mz > m {
                    return Err(Error::NegativeMultiplicity(pair.to_string()));
                }
                if m > mz {
                    out.insert(pair, m - mz);
                }
            }
            out
        }
    };
    Ok(CocharDecomposition {
        algebra: alg.name().to_string(),
        n,
        kind,
        terms,
    })
}

fn multiplicities(
    session: &Session,
    alg: &SuperAlgebra,
    n: usize,
    which: KernelKind,
) -> Result<BTreeMap<PartitionPair, u64>> {
    let mut out = BTreeMap::new();
    for r in 0..=n {
        let yc = n - r;
        let phi = quotient_character(session, alg, n, r, which)?;
        let ytab = char_table(yc)?;
        let ztab = char_table(r)?;
        let group_order =
            Rational::from_integer(((factorial(yc) as u64 * factorial(r) as u64) as i64).into());
        for (li, lambda) in ytab.parts.iter().enumerate() {
            for (mi, mu) in ztab.parts.iter().enumerate() {
                let mut acc = Rational::zero();
                for (ai, alpha) in ytab.parts.iter().enumerate() {
                    for (bi, beta) in ztab.parts.iter().enumerate() {
                        let val = &phi[&(alpha.clone(), beta.clone())];
                        if val.is_zero() {
                            continue;
                        }
                        let weight = (ytab.class_sizes[ai] * ztab.class_sizes[bi]) as i64
                            * ytab.values[li][ai]
                            * ztab.values[mi][bi];
                        if weight != 0 {
                            acc += val * Rational::from_integer(weight.into());
                        }
                    }
                }
                let m = acc / &group_order;
                if !m.is_integer() {
                    return Err(Error::NegativeMultiplicity(format!(
                        "non-integer multiplicity {m} at ({lambda},{mu})"
                    )));
                }
                let m_int = i64::try_from(m.to_integer()).map_err(|_| {
                    Error::NegativeMultiplicity("multiplicity out of range".into())
                })?;
                if m_int < 0 {
                    return Err(Error::NegativeMultiplicity(format!(
                        "{m_int} at ({lambda},{mu})"
                    )));
                }
                if m_int > 0 {
                    out.insert(
                        PartitionPair::new(lambda.clone(), mu.clone()),
                        m_int as u64,
                    );
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::resolve;

    #[test]
    fn partition_counts() {
        // p(m) for m = 0..10
        let expected = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (m, &e) in expected.iter().enumerate() {
            assert_eq!(partitions_of(m).unwrap().len(), e, "p({m})");
        }
        assert!(partitions_of(13).is_err());
    }

    #[test]
    fn partition_order_reverse_lex() {
        let p4: Vec<Vec<u8>> = partitions_of(4)
            .unwrap()
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            p4,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn hook_dims() {
        assert_eq!(hook_dim(&Partition::empty()), 1);
        assert_eq!(hook_dim(&Partition::row(5)), 1);
        assert_eq!(hook_dim(&Partition::new(vec![4, 1]).unwrap()), 4);
        assert_eq!(hook_dim(&Partition::new(vec![3, 2]).unwrap()), 5);
        assert_eq!(hook_dim(&Partition::new(vec![2, 2, 1]).unwrap()), 5);
        // hooks (n-i, 1^i) have dimension C(n-1, i)
        for n in 2..=6usize {
            for i in 0..n {
                let h = Partition::hook(n, i).unwrap();
                assert_eq!(hook_dim(&h), binomial(n as u64 - 1, i as u64));
            }
        }
    }

    #[test]
    fn pair_degrees() {
        let p = PartitionPair::new(Partition::row(2), Partition::empty());
        assert_eq!(pair_degree(&p), 1);
        let p = PartitionPair::new(Partition::row(1), Partition::row(1));
        assert_eq!(pair_degree(&p), 2);
        // degree-2 pairs sum to dim P_2 = 4
        let pairs = [
            PartitionPair::new(Partition::row(2), Partition::empty()),
            PartitionPair::new(Partition::new(vec![1, 1]).unwrap(), Partition::empty()),
            PartitionPair::new(Partition::row(1), Partition::row(1)),
            PartitionPair::new(Partition::empty(), Partition::row(2)),
            PartitionPair::new(Partition::empty(), Partition::new(vec![1, 1]).unwrap()),
        ];
        let total: u64 = pairs.iter().map(pair_degree).sum();
        assert_eq!(total, 6); // 1+1+2+1+1
    }

    #[test]
    fn mn_degree_and_sign() {
        for m in 1..=6usize {
            let ones = Partition(vec![1; m]);
            for lambda in partitions_of(m).unwrap() {
                // identity class: the degree
                assert_eq!(
                    mn_char(&lambda, &ones).unwrap(),
                    hook_dim(&lambda) as i64,
                    "{lambda}"
                );
            }
            // sign character: sign of the class
            let sign_part = Partition(vec![1; m]);
            for rho in partitions_of(m).unwrap() {
                let even_strips = rho.parts().iter().filter(|&&p| p % 2 == 0).count();
                let expected = if even_strips % 2 == 0 { 1 } else { -1 };
                assert_eq!(mn_char(&sign_part, &rho).unwrap(), expected, "{rho}");
            }
        }
    }

    #[test]
    fn s4_column_orthogonality() {
        let t = char_table(4).unwrap();
        let classes = t.parts.len();
        for a in 0..classes {
            for b in 0..classes {
                let dot: i64 = (0..classes)
                    .map(|l| t.values[l][a] * t.values[l][b])
                    .sum();
                if a == b {
                    assert_eq!(dot as u64, 24 / t.class_sizes[a]);
                } else {
                    assert_eq!(dot, 0);
                }
            }
        }
    }

    #[test]
    fn first_orthogonality_up_to_six() {
        for m in 1..=6 {
            let t = char_table(m).unwrap();
            let order = factorial(m) as i64;
            for l1 in 0..t.parts.len() {
                for l2 in 0..t.parts.len() {
                    let dot: i64 = (0..t.parts.len())
                        .map(|c| {
                            t.class_sizes[c] as i64 * t.values[l1][c] * t.values[l2][c]
                        })
                        .sum();
                    assert_eq!(dot, if l1 == l2 { order } else { 0 });
                }
            }
        }
    }

    #[test]
    fn weight_mismatch_is_an_error() {
        let l = Partition::row(3);
        let r = Partition::row(2);
        assert!(matches!(mn_char(&l, &r), Err(Error::WeightMismatch(3, 2))));
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for m in 1..=6 {
            let total: u64 = partitions_of(m)
                .unwrap()
                .iter()
                .map(class_size)
                .sum();
            assert_eq!(total, factorial(m) as u64);
        }
    }

    #[test]
    fn representative_has_the_right_cycle_type() {
        let rho = Partition::new(vec![3, 2]).unwrap();
        let g = cycle_representative(&rho, 5);
        // (1 2 3)(4 5)
        assert_eq!(g.apply(1), 2);
        assert_eq!(g.apply(3), 1);
        assert_eq!(g.apply(4), 5);
        assert_eq!(g.apply(5), 4);
    }

    #[test]
    fn dgr_quotient_character_is_trivial() {
        let s = Session::default();
        let d = resolve("Dgr").unwrap();
        for n in 1..=3 {
            for r in 0..=n {
                let phi = quotient_character(&s, &d, n, r, KernelKind::Identity).unwrap();
                for (_, v) in phi {
                    assert_eq!(v, Rational::from_integer(1.into()));
                }
            }
        }
    }

    #[test]
    fn quotient_character_constant_on_classes() {
        // a second representative of the same class gives the same trace
        let s = Session::default();
        let a = resolve("UT2").unwrap();
        let n = 3;
        let kernels = s.sector(&a, n, 0).unwrap();
        let kernel = kernels.id_kernel();
        // class of a transposition in S_3: canonical rep is (1 2)
        let canonical = combine_perm(3, 3, &Perm::transposition(3, 1, 2), &Perm::identity(0));
        let other = combine_perm(3, 3, &Perm::transposition(3, 2, 3), &Perm::identity(0));
        let t1 = Rational::from_integer(sector_trace(n, &canonical).into())
            - kernel_trace(n, kernel, &canonical);
        let t2 = Rational::from_integer(sector_trace(n, &other).into())
            - kernel_trace(n, kernel, &other);
        assert_eq!(t1, t2);
    }

    #[test]
    fn identity_trace_is_sector_codimension() {
        let s = Session::default();
        let a = resolve("UT2").unwrap();
        for n in 1..=3 {
            let phi = quotient_character(&s, &a, n, 0, KernelKind::Identity).unwrap();
            let id_class = (Partition(vec![1; n]), Partition::empty());
            let k = s.sector(&a, n, 0).unwrap();
            assert_eq!(
                phi[&id_class],
                Rational::from_integer((k.sector_codim() as i64).into())
            );
        }
    }

    #[test]
    fn dgr_cocharacter_matches_closed_form() {
        let s = Session::default();
        let d = resolve("Dgr").unwrap();
        for n in 1..=3usize {
            let dec = cocharacter(&s, &d, n, CocharKind::Graded).unwrap();
            assert_eq!(dec.terms.len(), n + 1);
            for (pair, m) in &dec.terms {
                assert_eq!(*m, 1);
                // hooks of shape ((n-i),(i))
                assert!(pair.lambda.len() <= 1 && pair.mu.len() <= 1);
            }
            assert_eq!(dec.degree_sum(), 1 << n);
            // commutative: no central quotient at all
            let cz = cocharacter(&s, &d, n, CocharKind::Central).unwrap();
            assert!(cz.terms.is_empty());
            let delta = cocharacter(&s, &d, n, CocharKind::ProperCentral).unwrap();
            assert_eq!(delta.terms, dec.terms);
        }
    }

    #[test]
    fn degree_sum_equals_codimension() {
        let s = Session::default();
        for name in ["UT2", "N3", "G2", "A2", "UT2gr", "N3gr"] {
            let a = resolve(name).unwrap();
            for n in 1..=3 {
                let dec = cocharacter(&s, &a, n, CocharKind::Graded).unwrap();
                let rep = s.codim_report(&a, n).unwrap();
                assert_eq!(dec.degree_sum(), rep.c, "{name} n={n}");
                let cz = cocharacter(&s, &a, n, CocharKind::Central).unwrap();
                assert_eq!(cz.degree_sum(), rep.cz, "{name} n={n} central");
            }
        }
    }
}
