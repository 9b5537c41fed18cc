//! Identity kernels, central kernels and codimension sequences by graded
//! substitution.
//!
//! For a sector `(n-r, r)` the evaluation map sends a coefficient vector to
//! the tuple of its values under all substitutions of homogeneous basis
//! elements (even elements for y's, odd for z's; multilinearity makes basis
//! substitutions sufficient). The identity kernel is the null space of the
//! resulting constraint rows; the central kernel composes every value with
//! the projection mod the center first. Sector codimensions are the ranks
//! of the two constraint spaces:
//!
//! ```text
//! c_{n-r,r}   = rank(id constraints)       dim id kernel      = n! - c
//! c_{n-r,r}^z = rank(central constraints)  dim central kernel = n! - c^z
//! ```
//!
//! Aggregating sectors with binomial weights gives `c_n`, `c_n^z` and
//! `delta_n = c_n - c_n^z`.
//!
//! Catalog Grassmann algebras take a fast path: a multilinear monomial
//! vanishes on any substitution tuple whose supports overlap, and on
//! disjoint supports its value is a sign times one basis monomial, the
//! sign depending only on the length profile of the tuple. One
//! representative per length profile therefore carries the full constraint
//! system.

use crate::algebra::SuperAlgebra;
use crate::cochar::binomial;
use crate::linalg::{clear_denominators, IntRowSpace, Rational, Subspace};
use crate::polyspace::{factorial, Sector};
use crate::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Guard against accidentally exhaustive runs over large algebras.
const MAX_TUPLES: u128 = 200_000_000;

#[derive(Copy, Clone, Debug)]
pub struct EvalOptions {
    /// Degree cap for kernel computations.
    pub max_n: usize,
    /// Degree cap for cocharacter extraction (kernel materialization plus
    /// character sums are heavier than plain codimension counts).
    pub cochar_cap: usize,
    /// Use the disjoint-support stream for catalog Grassmann algebras.
    pub fast_path: bool,
    /// Stop scanning substitution tuples once both constraint spaces have
    /// saturated the sector (no further row can change them).
    pub early_stop: bool,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            max_n: 6,
            cochar_cap: 5,
            fast_path: true,
            early_stop: true,
        }
    }
}

/// Identity and central constraint spaces of one sector.
pub struct SectorKernels {
    sector: Sector,
    id_rows: IntRowSpace,
    central_rows: IntRowSpace,
    id_kernel: OnceLock<Subspace>,
    central_kernel: OnceLock<Subspace>,
}

impl SectorKernels {
    pub fn sector(&self) -> Sector {
        self.sector
    }

    /// `c_{n-r,r} = n! - dim(id kernel)`.
    pub fn sector_codim(&self) -> usize {
        self.id_rows.rank()
    }

    /// `c_{n-r,r}^z = n! - dim(central kernel)`.
    pub fn sector_central_codim(&self) -> usize {
        self.central_rows.rank()
    }

    /// `P ∩ Id(A)` in monomial coordinates (canonical echelon basis,
    /// materialized lazily).
    pub fn id_kernel(&self) -> &Subspace {
        self.id_kernel.get_or_init(|| self.id_rows.kernel_subspace())
    }

    /// `P ∩ C(A)` in monomial coordinates.
    pub fn central_kernel(&self) -> &Subspace {
        self.central_kernel
            .get_or_init(|| self.central_rows.kernel_subspace())
    }

    pub fn id_kernel_contains(&self, v: &[Rational]) -> bool {
        self.id_rows.annihilates(v)
    }

    pub fn central_kernel_contains(&self, v: &[Rational]) -> bool {
        self.central_rows.annihilates(v)
    }

    /// `id kernel ⊆ central kernel`, checked on the constraint spaces
    /// (kernel containment flips to row-space containment).
    pub fn kernels_nested(&self) -> bool {
        self.id_rows.contains_span(&self.central_rows)
    }

    pub(crate) fn id_rows(&self) -> &IntRowSpace {
        &self.id_rows
    }

    pub(crate) fn central_rows(&self) -> &IntRowSpace {
        &self.central_rows
    }
}

/// Which kernel of a sector to look at.
#[derive(Copy, Clone, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KernelKind {
    Identity,
    Central,
}

#[derive(Clone, Debug, Serialize)]
pub struct SectorCodim {
    pub r: usize,
    pub c: u64,
    pub cz: u64,
}

/// Codimensions at one degree, with the per-sector breakdown.
#[derive(Clone, Debug, Serialize)]
pub struct CodimReport {
    pub algebra: String,
    pub n: usize,
    pub c: u64,
    pub cz: u64,
    pub delta: u64,
    pub sectors: Vec<SectorCodim>,
}

/// Evaluation session: caches sector kernels per algebra and degree.
pub struct Session {
    opts: EvalOptions,
    cache: Mutex<HashMap<(String, usize, usize), Arc<SectorKernels>>>,
}

impl Default for Session {
    fn default() -> Self {
        Session::new(EvalOptions::default())
    }
}

impl Session {
    pub fn new(opts: EvalOptions) -> Self {
        Session {
            opts,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn options(&self) -> EvalOptions {
        self.opts
    }

    /// Kernels of `P_{n-r,r}` for `alg`, computed on first use.
    pub fn sector(&self, alg: &SuperAlgebra, n: usize, r: usize) -> Result<Arc<SectorKernels>> {
        if n > self.opts.max_n {
            return Err(Error::CapExceeded {
                n,
                cap: self.opts.max_n,
            });
        }
        let key = (alg.cache_key(), n, r);
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let computed = Arc::new(compute_sector(alg, n, r, self.opts)?);
        let mut cache = self.cache.lock().unwrap();
        Ok(cache.entry(key).or_insert(computed).clone())
    }

    /// Aggregates sector codimensions with binomial weights.
    pub fn codim_report(&self, alg: &SuperAlgebra, n: usize) -> Result<CodimReport> {
        let mut sectors = Vec::with_capacity(n + 1);
        let mut c = 0u64;
        let mut cz = 0u64;
        for r in 0..=n {
            let k = self.sector(alg, n, r)?;
            let sc = k.sector_codim() as u64;
            let scz = k.sector_central_codim() as u64;
            let w = binomial(n as u64, r as u64);
            c += w * sc;
            cz += w * scz;
            sectors.push(SectorCodim { r, c: sc, cz: scz });
        }
        Ok(CodimReport {
            algebra: alg.name().to_string(),
            n,
            c,
            cz,
            delta: c - cz,
            sectors,
        })
    }

    /// Sector-wise comparison of two kernels across algebras at degree `n`.
    pub fn kernels_equal_sectorwise(
        &self,
        a: &SuperAlgebra,
        ka: KernelKind,
        b: &SuperAlgebra,
        kb: KernelKind,
        n: usize,
    ) -> Result<Vec<(usize, bool)>> {
        let mut out = Vec::with_capacity(n + 1);
        for r in 0..=n {
            let sa = self.sector(a, n, r)?;
            let sb = self.sector(b, n, r)?;
            let ra = match ka {
                KernelKind::Identity => sa.id_rows(),
                KernelKind::Central => sa.central_rows(),
            };
            let rb = match kb {
                KernelKind::Identity => sb.id_rows(),
                KernelKind::Central => sb.central_rows(),
            };
            // equal kernels iff equal constraint row spaces
            out.push((r, ra.same_span(rb)));
        }
        Ok(out)
    }

    /// True iff the chosen kernels agree in every sector of every degree
    /// `1..=n`.
    pub fn kernels_equal(
        &self,
        a: &SuperAlgebra,
        ka: KernelKind,
        b: &SuperAlgebra,
        kb: KernelKind,
        n: usize,
    ) -> Result<bool> {
        for m in 1..=n {
            if self
                .kernels_equal_sectorwise(a, ka, b, kb, m)?
                .iter()
                .any(|(_, eq)| !eq)
            {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn compute_sector(
    alg: &SuperAlgebra,
    n: usize,
    r: usize,
    opts: EvalOptions,
) -> Result<SectorKernels> {
    let sector = Sector::new(n, r)?;
    if let (Some(info), true) = (alg.grassmann(), opts.fast_path) {
        return grassmann_sector(info.t, info.graded, sector, opts);
    }
    exhaustive_sector(alg, sector, opts)
}

// ---------------------------------------------------------------------------
// exhaustive substitution over basis tuples
// ---------------------------------------------------------------------------

struct IntTables {
    dim: usize,
    table: crate::algebra::IntTable,
    /// Quotient-map column per algebra coordinate: list of (quotient row,
    /// coefficient). Empty for commutative algebras.
    qcols: Vec<Vec<(u32, i64)>>,
    qdim: usize,
}

fn int_tables(alg: &SuperAlgebra) -> Result<IntTables> {
    let table = alg
        .int_table()
        .ok_or_else(|| {
            Error::InvalidAlgebra(format!(
                "{}: structure constants exceed the machine-integer range",
                alg.name()
            ))
        })?
        .clone();
    let q = alg.quotient_map_mod_center();
    let qdim = q.rows();
    let mut qcols = vec![Vec::new(); alg.dim()];
    for i in 0..qdim {
        let ints = clear_denominators(q.row(i));
        for (c, v) in ints.iter().enumerate() {
            if !num::Zero::is_zero(v) {
                let small = i64::try_from(v).map_err(|_| {
                    Error::InvalidAlgebra(format!(
                        "{}: quotient map exceeds the machine-integer range",
                        alg.name()
                    ))
                })?;
                qcols[c].push((i as u32, small));
            }
        }
    }
    Ok(IntTables {
        dim: alg.dim(),
        table,
        qcols,
        qdim,
    })
}

/// Per-worker accumulation buffers for one substitution tuple.
struct Work {
    id_rows: Vec<Vec<i64>>,
    id_touched: Vec<Vec<u32>>,
    q_rows: Vec<Vec<i64>>,
    q_touched: Vec<Vec<u32>>,
}

impl Work {
    fn new(dim: usize, qdim: usize, nfact: usize) -> Self {
        Work {
            id_rows: vec![vec![0; nfact]; dim],
            id_touched: vec![Vec::new(); dim],
            q_rows: vec![vec![0; nfact]; qdim],
            q_touched: vec![Vec::new(); qdim],
        }
    }

    fn emit(&mut self, tables: &IntTables, word_idx: u32, coord: u32, val: i64) -> Result<()> {
        let c = coord as usize;
        self.id_rows[c][word_idx as usize] = val;
        self.id_touched[c].push(word_idx);
        for &(q, qc) in &tables.qcols[c] {
            let row = &mut self.q_rows[q as usize];
            if row[word_idx as usize] == 0 {
                self.q_touched[q as usize].push(word_idx);
            }
            row[word_idx as usize] = qc
                .checked_mul(val)
                .and_then(|p| row[word_idx as usize].checked_add(p))
                .ok_or_else(|| Error::InvalidAlgebra("evaluation overflow".into()))?;
        }
        Ok(())
    }

    /// Drains the buffers into candidate rows and re-zeroes them.
    fn finish(&mut self, id_out: &mut Vec<Vec<i64>>, q_out: &mut Vec<Vec<i64>>) {
        for (row, touched) in self.id_rows.iter_mut().zip(self.id_touched.iter_mut()) {
            if touched.is_empty() {
                continue;
            }
            if touched.iter().any(|&i| row[i as usize] != 0) {
                id_out.push(row.clone());
            }
            for &i in touched.iter() {
                row[i as usize] = 0;
            }
            touched.clear();
        }
        for (row, touched) in self.q_rows.iter_mut().zip(self.q_touched.iter_mut()) {
            if touched.is_empty() {
                continue;
            }
            if touched.iter().any(|&i| row[i as usize] != 0) {
                q_out.push(row.clone());
            }
            for &i in touched.iter() {
                row[i as usize] = 0;
            }
            touched.clear();
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn eval_rec(
    tables: &IntTables,
    assign: &[u32],
    n: usize,
    depth: usize,
    used: u32,
    prefix: &[(u32, i64)],
    word_idx: &mut u32,
    work: &mut Work,
    scratch: &mut [i64],
) -> Result<()> {
    for letter in 0..n {
        if used & (1 << letter) != 0 {
            continue;
        }
        let subtree = factorial(n - depth - 1) as u32;
        let elem = assign[letter] as usize;
        // multiply the running prefix by basis element `elem`
        let mut next: Vec<(u32, i64)> = Vec::new();
        if depth == 0 {
            next.push((elem as u32, 1));
        } else {
            let mut touched: Vec<u32> = Vec::new();
            for &(c, v) in prefix {
                for &(k, w) in &tables.table[c as usize][elem] {
                    let add = v
                        .checked_mul(w)
                        .ok_or_else(|| Error::InvalidAlgebra("evaluation overflow".into()))?;
                    if scratch[k as usize] == 0 {
                        touched.push(k);
                    }
                    scratch[k as usize] = scratch[k as usize]
                        .checked_add(add)
                        .ok_or_else(|| Error::InvalidAlgebra("evaluation overflow".into()))?;
                }
            }
            touched.sort_unstable();
            for &k in &touched {
                if scratch[k as usize] != 0 {
                    next.push((k, scratch[k as usize]));
                }
                scratch[k as usize] = 0;
            }
        }
        if next.is_empty() {
            // dead prefix: every word below evaluates to zero
            *word_idx += subtree;
            continue;
        }
        if depth + 1 == n {
            for &(c, v) in &next {
                work.emit(tables, *word_idx, c, v)?;
            }
            *word_idx += 1;
        } else {
            eval_rec(
                tables,
                assign,
                n,
                depth + 1,
                used | (1 << letter),
                &next,
                word_idx,
                work,
                scratch,
            )?;
        }
    }
    Ok(())
}

/// Evaluates all `n!` words on one substitution tuple by depth-first prefix
/// products, pruning dead prefixes. Word indices follow the lexicographic
/// basis order.
fn eval_tuple(
    tables: &IntTables,
    assign: &[u32],
    work: &mut Work,
    scratch: &mut [i64],
) -> Result<()> {
    let n = assign.len();
    let mut word_idx = 0u32;
    eval_rec(tables, assign, n, 0, 0, &[], &mut word_idx, work, scratch)?;
    debug_assert_eq!(word_idx, factorial(n) as u32);
    Ok(())
}

fn exhaustive_sector(
    alg: &SuperAlgebra,
    sector: Sector,
    opts: EvalOptions,
) -> Result<SectorKernels> {
    let n = sector.degree();
    let r = sector.z_count();
    let nfact = sector.dim();
    let tables = int_tables(alg)?;
    let even: Vec<u32> = alg.even_basis().iter().map(|&i| i as u32).collect();
    let odd: Vec<u32> = alg.odd_basis().iter().map(|&i| i as u32).collect();

    let mut id_rows = IntRowSpace::new(nfact);
    let mut central_rows = IntRowSpace::new(nfact);

    let total: u128 = (even.len() as u128)
        .pow((n - r) as u32)
        .saturating_mul((odd.len() as u128).pow(r as u32));
    if total > MAX_TUPLES {
        return Err(Error::EvalTooLarge { tuples: total });
    }
    let total = total as usize;

    // substitution tuple from its mixed-radix index (y positions first)
    let decode = |mut idx: usize| -> Vec<u32> {
        let mut assign = vec![0u32; n];
        for pos in (0..n).rev() {
            let base = if pos < n - r { even.len() } else { odd.len() };
            let digit = idx % base;
            idx /= base;
            assign[pos] = if pos < n - r { even[digit] } else { odd[digit] };
        }
        assign
    };

    let chunk = 1024usize;
    let block = chunk * 64;
    let mut start = 0usize;
    while start < total {
        let end = (start + block).min(total);
        let ranges: Vec<(usize, usize)> = (start..end)
            .step_by(chunk)
            .map(|s| (s, (s + chunk).min(end)))
            .collect();
        type ChunkRows = (Vec<Vec<i64>>, Vec<Vec<i64>>);
        let produced: Vec<Result<ChunkRows>> = ranges
            .into_par_iter()
            .map(|(s, e)| {
                let mut work = Work::new(tables.dim, tables.qdim, nfact);
                let mut scratch = vec![0i64; tables.dim];
                let mut ids = Vec::new();
                let mut qs = Vec::new();
                for idx in s..e {
                    let assign = decode(idx);
                    eval_tuple(&tables, &assign, &mut work, &mut scratch)?;
                    work.finish(&mut ids, &mut qs);
                }
                Ok((ids, qs))
            })
            .collect();
        for res in produced {
            let (ids, qs) = res?;
            for row in ids {
                id_rows.insert(row);
            }
            for row in qs {
                central_rows.insert(row);
            }
        }
        start = end;
        if opts.early_stop && id_rows.rank() == nfact && central_rows.rank() == nfact {
            break;
        }
    }

    Ok(SectorKernels {
        sector,
        id_rows,
        central_rows,
        id_kernel: OnceLock::new(),
        central_kernel: OnceLock::new(),
    })
}

// ---------------------------------------------------------------------------
// Grassmann fast path
// ---------------------------------------------------------------------------

/// Length profiles of the disjoint-support substitution stream for the
/// Grassmann algebra on `t` generators: one length per sector position,
/// summing to at most `t`; length 0 stands for the unit. Under the
/// canonical grading y positions take even lengths and z positions odd
/// ones; under the trivial grading any lengths are allowed but there are
/// no odd substitutions at all, so sectors with `r > 0` produce no
/// constraints.
pub fn grassmann_profiles(t: usize, n: usize, r: usize, graded: bool) -> Result<Vec<Vec<usize>>> {
    let sector = Sector::new(n, r)?;
    let mut out = Vec::new();
    if !graded && r > 0 {
        return Ok(out);
    }
    #[allow(clippy::too_many_arguments)]
    fn rec(
        n: usize,
        pos: usize,
        budget: usize,
        graded: bool,
        sector: &Sector,
        profile: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos == n {
            out.push(profile.clone());
            return;
        }
        let is_z = sector.is_odd_var((pos + 1) as u8);
        let start = if graded && is_z { 1 } else { 0 };
        let step = if graded { 2 } else { 1 };
        let mut l = start;
        while l <= budget {
            profile[pos] = l;
            rec(n, pos + 1, budget - l, graded, sector, profile, out);
            l += step;
        }
        profile[pos] = 0;
    }
    let mut profile = vec![0usize; n];
    rec(n, 0, t, graded, &sector, &mut profile, &mut out);
    Ok(out)
}

/// Constraint row of one profile: each word's sign under merging the
/// disjoint supports, by block-inversion counting.
fn profile_row(n: usize, profile: &[usize]) -> Vec<i64> {
    let nfact = factorial(n);
    let mut row = vec![0i64; nfact];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        n: usize,
        profile: &[usize],
        used: u32,
        depth: usize,
        parity: usize,
        word_idx: &mut usize,
        row: &mut [i64],
    ) {
        if depth == n {
            row[*word_idx] = if parity % 2 == 0 { 1 } else { -1 };
            *word_idx += 1;
            return;
        }
        for letter in 0..n {
            if used & (1 << letter) != 0 {
                continue;
            }
            // crossings of this block against larger-index placed blocks
            let mut add = 0usize;
            for prev in (letter + 1)..n {
                if used & (1 << prev) != 0 {
                    add += profile[prev];
                }
            }
            rec(
                n,
                profile,
                used | (1 << letter),
                depth + 1,
                parity + add * profile[letter],
                word_idx,
                row,
            );
        }
    }
    let mut word_idx = 0usize;
    rec(n, profile, 0, 0, 0, &mut word_idx, &mut row);
    row
}

/// Whether the basis monomial with support of size `len` is central in
/// `G_t`: even products always, and the top product when `t` is odd.
fn grassmann_central(t: usize, len: usize) -> bool {
    len % 2 == 0 || len == t
}

fn grassmann_sector(
    t: usize,
    graded: bool,
    sector: Sector,
    opts: EvalOptions,
) -> Result<SectorKernels> {
    let n = sector.degree();
    let r = sector.z_count();
    let nfact = sector.dim();
    let mut id_rows = IntRowSpace::new(nfact);
    let mut central_rows = IntRowSpace::new(nfact);
    for profile in grassmann_profiles(t, n, r, graded)? {
        let row = profile_row(n, &profile);
        let len: usize = profile.iter().sum();
        if !grassmann_central(t, len) {
            central_rows.insert(row.clone());
        }
        id_rows.insert(row);
        if opts.early_stop && id_rows.rank() == nfact && central_rows.rank() == nfact {
            break;
        }
    }
    Ok(SectorKernels {
        sector,
        id_rows,
        central_rows,
        id_kernel: OnceLock::new(),
        central_kernel: OnceLock::new(),
    })
}
