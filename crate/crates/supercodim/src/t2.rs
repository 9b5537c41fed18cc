//! Multilinear sector components of T2-ideals and T2-spaces.
//!
//! The degree-`n` multilinear component of the T2-ideal generated by a
//! multilinear polynomial `g(x_1..x_d)` is spanned by the elements
//! `a g(m_1,..,m_d) b`, where the `m_i` are parity-correct monomials in
//! disjoint sector variables and `a`, `b` are (possibly empty) outer
//! monomials in the remaining ones. For a T2-space the outer monomials are
//! dropped. Monomial images suffice because the generators are multilinear
//! and substitution is linear in each slot; enumeration is exhaustive over
//! ordered set partitions of the sector's variables.

use crate::algebra::SuperAlgebra;
use crate::eval::{KernelKind, Session};
use crate::linalg::{clear_denominators, IntRowSpace, Rational, Subspace};
use crate::polyspace::{parse_poly, word_rank, MultilinearPoly, Perm, Sector};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Default degree cap for span enumeration.
pub const T2_CAP: usize = 5;

/// A generator with its source text; the polynomial is stored in its
/// canonical sector with machine-integer coefficients.
#[derive(Clone, Debug)]
pub struct Generator {
    pub text: String,
    poly: MultilinearPoly,
    terms: Vec<(Vec<u8>, i64)>,
}

impl Generator {
    pub fn parse(text: &str) -> Result<Generator> {
        let poly = parse_poly(text)?;
        if poly.is_zero() {
            return Err(Error::MalformedFormula(format!(
                "generator '{text}' expands to zero"
            )));
        }
        let ints = clear_denominators(&poly.to_dense());
        let mut terms = Vec::new();
        let n = poly.sector().degree();
        for (idx, v) in ints.iter().enumerate() {
            if !num::Zero::is_zero(v) {
                let c = i64::try_from(v).map_err(|_| {
                    Error::MalformedFormula(format!("generator '{text}': coefficient too large"))
                })?;
                terms.push((crate::polyspace::word_unrank(n, idx), c));
            }
        }
        Ok(Generator {
            text: text.to_string(),
            poly,
            terms,
        })
    }

    pub fn poly(&self) -> &MultilinearPoly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.sector().degree()
    }
}

/// Serialized form of a generator file:
/// `{"space": ["y1", ...], "ideal": ["[y1,y2]", ...]}`.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct GeneratorSpec {
    #[serde(default)]
    pub space: Vec<String>,
    #[serde(default)]
    pub ideal: Vec<String>,
}

/// Parsed generator set: a T2-space part (no outer multiplication) over a
/// T2-ideal part. A plain T2-ideal has an empty `space`.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub space: Vec<Generator>,
    pub ideal: Vec<Generator>,
}

impl GeneratorSet {
    pub fn from_spec(spec: &GeneratorSpec) -> Result<GeneratorSet> {
        Ok(GeneratorSet {
            space: spec
                .space
                .iter()
                .map(|t| Generator::parse(t))
                .collect::<Result<_>>()?,
            ideal: spec
                .ideal
                .iter()
                .map(|t| Generator::parse(t))
                .collect::<Result<_>>()?,
        })
    }

    pub fn ideal_of(texts: &[&str]) -> Result<GeneratorSet> {
        GeneratorSet::from_spec(&GeneratorSpec {
            space: Vec::new(),
            ideal: texts.iter().map(|s| s.to_string()).collect(),
        })
    }

    pub fn space_over_ideal(space: &[&str], ideal: &[&str]) -> Result<GeneratorSet> {
        GeneratorSet::from_spec(&GeneratorSpec {
            space: space.iter().map(|s| s.to_string()).collect(),
            ideal: ideal.iter().map(|s| s.to_string()).collect(),
        })
    }

    pub fn is_pure_ideal(&self) -> bool {
        self.space.is_empty()
    }

    pub fn spec(&self) -> GeneratorSpec {
        GeneratorSpec {
            space: self.space.iter().map(|g| g.text.clone()).collect(),
            ideal: self.ideal.iter().map(|g| g.text.clone()).collect(),
        }
    }
}

/// The generated subspace of one sector (a row span, not a kernel).
pub struct SectorSpan {
    sector: Sector,
    rows: IntRowSpace,
}

impl SectorSpan {
    pub fn sector(&self) -> Sector {
        self.sector
    }

    pub fn dim(&self) -> usize {
        self.rows.rank()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.sector.dim()
    }

    pub fn subspace(&self) -> Subspace {
        self.rows.to_subspace()
    }

    pub fn contains_poly(&mut self, f: &MultilinearPoly) -> Result<bool> {
        if f.sector() != self.sector {
            return Err(Error::MixedSector(format!(
                "{} vs {}",
                f.sector(),
                self.sector
            )));
        }
        Ok(self.rows.in_span(&f.to_dense()))
    }

    pub fn contains_vector(&mut self, v: &[Rational]) -> bool {
        self.rows.in_span(v)
    }
}

/// Enumerates substitution images of one generator into the sector and
/// inserts them into `rows`; with `outer` the images carry prefix and
/// suffix monomials (T2-ideal semantics). Stops early once the sector is
/// saturated.
fn instantiate(g: &Generator, sector: Sector, outer: bool, rows: &mut IntRowSpace) {
    let n = sector.degree();
    let nfact = sector.dim();
    let d = g.degree();
    if d > n {
        return;
    }
    let block_count = d + if outer { 2 } else { 0 };
    if !outer && d < n {
        // a space image must use every sector variable inside the slots
        // only if the degrees match; otherwise nothing lands here
        // (slots absorb all n variables and each uses at least one)
    }
    let mut members: Vec<Vec<u8>> = vec![Vec::new(); block_count];
    let slot_parity: Vec<bool> = (1..=d as u8)
        .map(|s| g.poly.sector().is_odd_var(s))
        .collect();
    let mut ctx = Instantiation {
        n,
        d,
        block_count,
        sector,
        slot_parity,
        g,
        nfact,
        rows,
    };
    ctx.assign(1, &mut members);
}

struct Instantiation<'a> {
    n: usize,
    d: usize,
    block_count: usize,
    sector: Sector,
    slot_parity: Vec<bool>,
    g: &'a Generator,
    nfact: usize,
    rows: &'a mut IntRowSpace,
}

impl Instantiation<'_> {
    fn assign(&mut self, var: u8, members: &mut Vec<Vec<u8>>) {
        if self.rows.rank() == self.nfact {
            return;
        }
        if var as usize > self.n {
            for s in 0..self.d {
                if members[s].is_empty() {
                    return;
                }
                let zc = members[s]
                    .iter()
                    .filter(|&&v| self.sector.is_odd_var(v))
                    .count();
                if (zc % 2 == 1) != self.slot_parity[s] {
                    return;
                }
            }
            self.emit_orderings(members);
            return;
        }
        let remaining = self.n - var as usize + 1;
        for b in 0..self.block_count {
            // enough variables must remain to fill the still-empty slots
            let empty_after = (0..self.d)
                .filter(|&s| members[s].is_empty() && s != b)
                .count();
            if remaining - 1 < empty_after {
                continue;
            }
            members[b].push(var);
            self.assign(var + 1, members);
            members[b].pop();
            if self.rows.rank() == self.nfact {
                return;
            }
        }
    }

    /// Enumerates orderings of every block; one image row per choice.
    fn emit_orderings(&mut self, members: &[Vec<u8>]) {
        let mut block_orders: Vec<Vec<Vec<u8>>> = Vec::with_capacity(self.block_count);
        for m in members {
            block_orders.push(permutations(m));
        }
        let mut choice: Vec<usize> = vec![0; self.block_count];
        loop {
            if self.rows.rank() == self.nfact {
                return;
            }
            let mut vec_row = vec![0i64; self.nfact];
            let mut word: Vec<u8> = Vec::with_capacity(self.n);
            for (gword, coeff) in &self.g.terms {
                word.clear();
                if self.block_count > self.d {
                    word.extend_from_slice(&block_orders[self.d][choice[self.d]]);
                }
                for &slot in gword {
                    let s = (slot - 1) as usize;
                    word.extend_from_slice(&block_orders[s][choice[s]]);
                }
                if self.block_count > self.d {
                    word.extend_from_slice(&block_orders[self.d + 1][choice[self.d + 1]]);
                }
                vec_row[word_rank(&word)] += coeff;
            }
            self.rows.insert(vec_row);
            let mut b = 0;
            loop {
                if b == self.block_count {
                    return;
                }
                choice[b] += 1;
                if choice[b] < block_orders[b].len() {
                    break;
                }
                choice[b] = 0;
                b += 1;
            }
        }
    }
}

fn permutations(items: &[u8]) -> Vec<Vec<u8>> {
    fn rec(items: &[u8], used: &mut [bool], cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == items.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..items.len() {
            if !used[i] {
                used[i] = true;
                cur.push(items[i]);
                rec(items, used, cur, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(items, &mut vec![false; items.len()], &mut Vec::new(), &mut out);
    out
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

/// Sector component of the T2-ideal generated by `gens`.
pub fn t2_ideal_sector(gens: &[Generator], n: usize, r: usize, cap: usize) -> Result<SectorSpan> {
    check_cap(n, cap)?;
    let sector = Sector::new(n, r)?;
    let mut rows = IntRowSpace::new(sector.dim());
    for g in gens {
        instantiate(g, sector, true, &mut rows);
        if rows.rank() == sector.dim() {
            break;
        }
    }
    Ok(SectorSpan { sector, rows })
}

/// Sector component of the T2-space generated by `set`: substitution
/// images of the space part (no outer multiplication) plus the full ideal
/// part.
pub fn t2_space_sector(set: &GeneratorSet, n: usize, r: usize, cap: usize) -> Result<SectorSpan> {
    check_cap(n, cap)?;
    let sector = Sector::new(n, r)?;
    let mut rows = IntRowSpace::new(sector.dim());
    for g in &set.space {
        instantiate(g, sector, false, &mut rows);
        if rows.rank() == sector.dim() {
            break;
        }
    }
    if rows.rank() < sector.dim() {
        for g in &set.ideal {
            instantiate(g, sector, true, &mut rows);
            if rows.rank() == sector.dim() {
                break;
            }
        }
    }
    Ok(SectorSpan { sector, rows })
}

/// Generated sector with the set's own semantics (ideal part with outer
/// monomials, space part without).
pub fn generated_sector(set: &GeneratorSet, n: usize, r: usize, cap: usize) -> Result<SectorSpan> {
    t2_space_sector(set, n, r, cap)
}

#[derive(Clone, Debug, Serialize)]
pub struct SectorVerdict {
    pub n: usize,
    pub r: usize,
    pub dim_generated: usize,
    pub dim_kernel: usize,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub algebra: String,
    pub mode: String,
    pub ok: bool,
    pub sectors: Vec<SectorVerdict>,
}

/// Compares the generated sectors against the evaluation kernels of `alg`
/// for every sector of every degree up to `n_max`.
pub fn verify_generators(
    session: &Session,
    set: &GeneratorSet,
    alg: &SuperAlgebra,
    n_max: usize,
    mode: KernelKind,
) -> Result<VerifyReport> {
    let mut sectors = Vec::new();
    let mut ok = true;
    for n in 1..=n_max {
        for r in 0..=n {
            let span = generated_sector(set, n, r, n_max)?;
            let kernels = session.sector(alg, n, r)?;
            let (kernel_dim, contained) = match mode {
                KernelKind::Identity => (
                    span.sector().dim() - kernels.sector_codim(),
                    span.subspace()
                        .basis()
                        .iter()
                        .all(|v| kernels.id_kernel_contains(v)),
                ),
                KernelKind::Central => (
                    span.sector().dim() - kernels.sector_central_codim(),
                    span.subspace()
                        .basis()
                        .iter()
                        .all(|v| kernels.central_kernel_contains(v)),
                ),
            };
            let equal = contained && span.dim() == kernel_dim;
            ok &= equal;
            sectors.push(SectorVerdict {
                n,
                r,
                dim_generated: span.dim(),
                dim_kernel: kernel_dim,
                equal,
            });
        }
    }
    Ok(VerifyReport {
        algebra: alg.name().to_string(),
        mode: match mode {
            KernelKind::Identity => "identities".to_string(),
            KernelKind::Central => "central".to_string(),
        },
        ok,
        sectors,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureFailure {
    pub n: usize,
    pub r: usize,
    pub side: String,
    pub fresh_parity: char,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    pub algebra: String,
    pub ok: bool,
    pub failures: Vec<ClosureFailure>,
}

/// Checks whether the central kernels behave like a T2-ideal up to degree
/// `n_max`: for every central-kernel basis vector `f` and fresh variable
/// `x` of either parity, `x f` and `f x` must land in the central kernel
/// one degree up.
pub fn t2_closure_check(
    session: &Session,
    alg: &SuperAlgebra,
    n_max: usize,
) -> Result<ClosureReport> {
    let mut failures = Vec::new();
    for m in 1..=n_max {
        for r in 0..=m {
            let kernels = session.sector(alg, m, r)?;
            let kernel = kernels.central_kernel();
            if kernel.is_zero() {
                continue;
            }
            for (side, fresh_z) in [
                ("left", false),
                ("right", false),
                ("left", true),
                ("right", true),
            ] {
                let (n2, r2) = if fresh_z { (m + 1, r + 1) } else { (m + 1, r) };
                let target = session.sector(alg, n2, r2)?;
                let dim2 = Sector::new(n2, r2)?.dim();
                for f in kernel.basis() {
                    let mut v = vec![Rational::from_integer(0.into()); dim2];
                    for (idx, c) in f.iter().enumerate() {
                        if num::Zero::is_zero(c) {
                            continue;
                        }
                        let w = crate::polyspace::word_unrank(m, idx);
                        let mut nw: Vec<u8> = Vec::with_capacity(m + 1);
                        let fresh = if fresh_z { (m + 1) as u8 } else { 1u8 };
                        if side == "left" {
                            nw.push(fresh);
                        }
                        nw.extend(w.iter().map(|&x| if fresh_z { x } else { x + 1 }));
                        if side == "right" {
                            nw.push(fresh);
                        }
                        v[word_rank(&nw)] = c.clone();
                    }
                    if !target.central_kernel_contains(&v) {
                        failures.push(ClosureFailure {
                            n: m,
                            r,
                            side: side.to_string(),
                            fresh_parity: if fresh_z { 'z' } else { 'y' },
                        });
                        break;
                    }
                }
            }
        }
    }
    Ok(ClosureReport {
        algebra: alg.name().to_string(),
        ok: failures.is_empty(),
        failures,
    })
}

/// Product-of-commutators reordering: for `s` in `S_{2p}`,
/// `[y_{s1},y_{s2}]..[y_{s(2p-1)},y_{s(2p)}] - sgn(s) [y1,y2]..[y_{2p-1},y_{2p}]`
/// lies in the T2-ideal of the triple commutator.
pub fn reorder_congruence_holds(p: usize, sigma: &Perm) -> Result<bool> {
    use crate::polyspace::PolyExpr;
    if sigma.size() != 2 * p {
        return Err(Error::PermSizeMismatch);
    }
    let n = 2 * p;
    let product = |perm: &dyn Fn(u8) -> u8| -> PolyExpr {
        PolyExpr::product(
            (0..p)
                .map(|j| {
                    PolyExpr::commutator(vec![
                        PolyExpr::y(perm((2 * j + 1) as u8) as u32),
                        PolyExpr::y(perm((2 * j + 2) as u8) as u32),
                    ])
                })
                .collect(),
        )
    };
    let lhs = crate::polyspace::expand(&product(&|v| sigma.apply(v)))?;
    let rhs = crate::polyspace::expand(&product(&|v| v))?;
    let diff = lhs.sub(&rhs.scale(&Rational::from_integer(sigma.sign().into())))?;
    if diff.is_zero() {
        return Ok(true);
    }
    let gens = [Generator::parse("[y1,y2,y3]")?];
    let mut span = t2_ideal_sector(&gens, n, 0, T2_CAP)?;
    span.contains_poly(&diff)
}

/// Commutator-shift rewriting: `y2..y_{n-1}[y1,yn]` is congruent to
/// `-y1 sum_i y2..^y_i..y_{n-1}[y_i,y_n]` modulo the T2-space generated by
/// `[y1,y2]` and `y0[y1,y2,y3]`.
pub fn prefix_shift_congruence_holds(n: usize) -> Result<bool> {
    use crate::polyspace::PolyExpr;
    if !(3..=T2_CAP).contains(&n) {
        return Err(Error::CapExceeded { n, cap: T2_CAP });
    }
    let mut lhs_factors: Vec<PolyExpr> = (2..n).map(|i| PolyExpr::y(i as u32)).collect();
    lhs_factors.push(PolyExpr::commutator(vec![
        PolyExpr::y(1),
        PolyExpr::y(n as u32),
    ]));
    let lhs = crate::polyspace::expand(&PolyExpr::product(lhs_factors))?;

    let mut sum = MultilinearPoly::zero(lhs.sector());
    for i in 2..n {
        let mut factors = vec![PolyExpr::y(1)];
        for j in 2..n {
            if j != i {
                factors.push(PolyExpr::y(j as u32));
            }
        }
        factors.push(PolyExpr::commutator(vec![
            PolyExpr::y(i as u32),
            PolyExpr::y(n as u32),
        ]));
        sum = sum.add(&crate::polyspace::expand(&PolyExpr::product(factors))?)?;
    }
    // lhs == -sum modulo the space, so lhs + sum must lie in it
    let diff = lhs.add(&sum)?;
    let set = GeneratorSet::space_over_ideal(&["[y1,y2]", "y0[y1,y2,y3]"], &[])?;
    let mut span = t2_space_sector(&set, n, 0, T2_CAP)?;
    span.contains_poly(&diff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::resolve;
    use crate::linalg::rat_int;

    #[test]
    fn single_commutator_span() {
        let gens = [Generator::parse("[y1,y2]").unwrap()];
        let span = t2_ideal_sector(&gens, 2, 0, T2_CAP).unwrap();
        assert_eq!(span.dim(), 1);
        let s = span.subspace();
        assert!(s.contains_vector(&[rat_int(1), rat_int(-1)]));
    }

    #[test]
    fn z_generator_fills_odd_sectors() {
        let gens = [Generator::parse("z1").unwrap()];
        for n in 1..=4 {
            for r in 1..=n {
                let span = t2_ideal_sector(&gens, n, r, T2_CAP).unwrap();
                assert!(span.is_full(), "({n},{r})");
            }
            let span = t2_ideal_sector(&gens, n, 0, T2_CAP).unwrap();
            assert_eq!(span.dim(), 0);
        }
    }

    #[test]
    fn space_vs_ideal_semantics() {
        // the T2-space of y1 is the span of the even monomials: full
        // sectors for even r, nothing for odd r
        let set = GeneratorSet::space_over_ideal(&["y1"], &[]).unwrap();
        for n in 1..=4 {
            for r in 0..=n {
                let span = t2_space_sector(&set, n, r, T2_CAP).unwrap();
                if r % 2 == 0 {
                    assert!(span.is_full(), "({n},{r})");
                } else {
                    assert_eq!(span.dim(), 0, "({n},{r})");
                }
            }
        }
    }

    #[test]
    fn space_images_of_single_variable_are_monomials() {
        let set = GeneratorSet::space_over_ideal(&["y1"], &[]).unwrap();
        let mut span = t2_space_sector(&set, 2, 0, T2_CAP).unwrap();
        let m = parse_poly("y1y2").unwrap();
        assert!(span.contains_poly(&m).unwrap());
    }

    #[test]
    fn ideal_soundness_for_ut2() {
        // every generated element is an identity of UT2
        let session = Session::default();
        let a = resolve("UT2").unwrap();
        let gens = GeneratorSet::ideal_of(&["[y1,y2][y3,y4]", "z1"]).unwrap();
        for n in 1..=4 {
            for r in 0..=n {
                let span = generated_sector(&gens, n, r, T2_CAP).unwrap();
                let kernels = session.sector(&a, n, r).unwrap();
                for v in span.subspace().basis() {
                    assert!(kernels.id_kernel_contains(v), "({n},{r})");
                }
            }
        }
    }

    #[test]
    fn ut2_generators_match_kernels() {
        let session = Session::default();
        let a = resolve("UT2").unwrap();
        let gens = GeneratorSet::ideal_of(&["[y1,y2][y3,y4]", "z1"]).unwrap();
        let report = verify_generators(&session, &gens, &a, 4, KernelKind::Identity).unwrap();
        assert!(report.ok, "{:?}", report.sectors);
    }

    #[test]
    fn dropping_a_generator_breaks_equality() {
        let session = Session::default();
        let a = resolve("UT2").unwrap();
        let gens = GeneratorSet::ideal_of(&["z1"]).unwrap();
        let report = verify_generators(&session, &gens, &a, 4, KernelKind::Identity).unwrap();
        assert!(!report.ok);
        // the failure shows up at the dropped generator's degree
        let bad: Vec<_> = report.sectors.iter().filter(|s| !s.equal).collect();
        assert!(bad.iter().any(|s| s.n == 4 && s.r == 0));
    }

    #[test]
    fn monotone_in_generators() {
        let small = GeneratorSet::space_over_ideal(&["[y1,y2]"], &[]).unwrap();
        let large = GeneratorSet::space_over_ideal(&["[y1,y2]", "y1y2"], &[]).unwrap();
        for n in 2..=4 {
            let s1 = t2_space_sector(&small, n, 0, T2_CAP).unwrap();
            let mut s2 = t2_space_sector(&large, n, 0, T2_CAP).unwrap();
            assert!(s2.dim() >= s1.dim());
            for v in s1.subspace().basis() {
                assert!(s2.contains_vector(v));
            }
        }
    }

    #[test]
    fn generated_sectors_are_action_stable() {
        let gens = GeneratorSet::ideal_of(&["[y1,y2,y3]"]).unwrap();
        let span = t2_ideal_sector(&gens.ideal, 4, 0, T2_CAP).unwrap();
        let sub = span.subspace();
        let mut span2 = t2_ideal_sector(&gens.ideal, 4, 0, T2_CAP).unwrap();
        let h = Perm::identity(0);
        for g in Perm::all(4) {
            for v in sub.basis() {
                let poly = MultilinearPoly::from_terms(
                    span.sector(),
                    v.iter()
                        .enumerate()
                        .filter(|(_, c)| !num::Zero::is_zero(*c))
                        .map(|(idx, c)| (crate::polyspace::word_unrank(4, idx), c.clone())),
                );
                let acted = poly.act(&g, &h).unwrap();
                assert!(span2.contains_poly(&acted).unwrap());
            }
        }
    }

    #[test]
    fn closure_holds_for_n3() {
        let session = Session::default();
        let a = resolve("N3").unwrap();
        let report = t2_closure_check(&session, &a, 3).unwrap();
        assert!(report.ok, "{:?}", report.failures);
    }

    #[test]
    fn closure_fails_for_g4() {
        // [y1,y2] is central in G4 but [y1,y2]y3 is not
        let session = Session::default();
        let a = resolve("G4").unwrap();
        let report = t2_closure_check(&session, &a, 2).unwrap();
        assert!(!report.ok);
    }

    #[test]
    fn reorder_congruence_small_cases() {
        let id = Perm::identity(4);
        assert!(reorder_congruence_holds(2, &id).unwrap());
        let t12 = Perm::transposition(4, 1, 2);
        assert!(reorder_congruence_holds(2, &t12).unwrap());
        let t23 = Perm::transposition(4, 2, 3);
        assert!(reorder_congruence_holds(2, &t23).unwrap());
    }

    #[test]
    fn prefix_shift_congruence_small() {
        assert!(prefix_shift_congruence_holds(4).unwrap());
    }
}
