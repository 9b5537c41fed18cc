//! Replayable ledger of closed-form claims about the catalog algebras.
//!
//! Each fixture pins one claim — a codimension formula, a cocharacter
//! decomposition, a generating set, a kernel equality, a closure property
//! or a rewriting congruence — together with the algebra it applies to and
//! the degree range it is checked on. Formulas are stored as a small
//! expression AST (sums, binomials, powers, parameters) so fixture files
//! are serializable and diffable.
//!
//! A fixture marked `suspect` records a printed formula that fails an
//! internal consistency check (the degree-sum identity); running it never
//! fails the suite, it reports the difference and the computed
//! decomposition instead.

mod catalog;

pub use catalog::{coverage_manifest, standard_fixtures};

use crate::algebra::{self, SuperAlgebra};
use crate::cochar::{cocharacter, CocharDecomposition, CocharKind, Partition, PartitionPair};
use crate::eval::{KernelKind, Session};
use crate::polyspace::Perm;
use crate::t2::{
    prefix_shift_congruence_holds, reorder_congruence_holds, t2_closure_check, verify_generators,
    GeneratorSet, GeneratorSpec,
};
use crate::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Parity filter on a summation index.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Parity {
    Even,
    Odd,
}

/// Closed-form integer expressions in the degree `n`, the algebra
/// parameter `k` and a summation index `i`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expr {
    Int(i64),
    /// The degree.
    N,
    /// The algebra parameter (`k` or `t`).
    K,
    /// The summation index.
    I,
    Add(Vec<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Vec<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    /// `C(a, b)`, zero outside `0 <= b <= a`.
    Binom(Box<Expr>, Box<Expr>),
    Sum {
        lo: Box<Expr>,
        hi: Box<Expr>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        parity: Option<Parity>,
        body: Box<Expr>,
    },
}

pub fn int(v: i64) -> Expr {
    Expr::Int(v)
}
pub fn nn() -> Expr {
    Expr::N
}
pub fn kk() -> Expr {
    Expr::K
}
pub fn ii() -> Expr {
    Expr::I
}
pub fn add(terms: Vec<Expr>) -> Expr {
    Expr::Add(terms)
}
pub fn sub(a: Expr, b: Expr) -> Expr {
    Expr::Sub(Box::new(a), Box::new(b))
}
pub fn mul(factors: Vec<Expr>) -> Expr {
    Expr::Mul(factors)
}
pub fn pow(a: Expr, b: Expr) -> Expr {
    Expr::Pow(Box::new(a), Box::new(b))
}
pub fn binom(a: Expr, b: Expr) -> Expr {
    Expr::Binom(Box::new(a), Box::new(b))
}
pub fn sum(lo: Expr, hi: Expr, body: Expr) -> Expr {
    Expr::Sum {
        lo: Box::new(lo),
        hi: Box::new(hi),
        parity: None,
        body: Box::new(body),
    }
}
pub fn sum_par(lo: Expr, hi: Expr, parity: Parity, body: Expr) -> Expr {
    Expr::Sum {
        lo: Box::new(lo),
        hi: Box::new(hi),
        parity: Some(parity),
        body: Box::new(body),
    }
}

fn binom_i64(a: i64, b: i64) -> i64 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    crate::cochar::binomial(a as u64, b as u64) as i64
}

struct Env {
    n: i64,
    k: Option<i64>,
    i: Option<i64>,
}

impl Expr {
    fn eval_env(&self, env: &Env) -> Result<i64> {
        Ok(match self {
            Expr::Int(v) => *v,
            Expr::N => env.n,
            Expr::K => env.k.ok_or_else(|| {
                Error::MalformedFormula("parameter k used but not bound".into())
            })?,
            Expr::I => env
                .i
                .ok_or_else(|| Error::MalformedFormula("index i used outside a sum".into()))?,
            Expr::Add(ts) => {
                let mut acc = 0i64;
                for t in ts {
                    acc += t.eval_env(env)?;
                }
                acc
            }
            Expr::Sub(a, b) => a.eval_env(env)? - b.eval_env(env)?,
            Expr::Mul(fs) => {
                let mut acc = 1i64;
                for f in fs {
                    acc *= f.eval_env(env)?;
                }
                acc
            }
            Expr::Pow(a, b) => {
                let base = a.eval_env(env)?;
                let exp = b.eval_env(env)?;
                if exp < 0 {
                    return Err(Error::MalformedFormula(format!(
                        "negative exponent {exp}"
                    )));
                }
                base.pow(exp as u32)
            }
            Expr::Binom(a, b) => binom_i64(a.eval_env(env)?, b.eval_env(env)?),
            Expr::Sum {
                lo,
                hi,
                parity,
                body,
            } => {
                if env.i.is_some() {
                    return Err(Error::MalformedFormula("nested sums".into()));
                }
                let lo = lo.eval_env(env)?;
                let hi = hi.eval_env(env)?;
                let mut acc = 0i64;
                for i in lo..=hi {
                    if let Some(p) = parity {
                        let even = i.rem_euclid(2) == 0;
                        if (*p == Parity::Even) != even {
                            continue;
                        }
                    }
                    acc += body.eval_env(&Env {
                        n: env.n,
                        k: env.k,
                        i: Some(i),
                    })?;
                }
                acc
            }
        })
    }

    /// Evaluates at degree `n` with an optional algebra parameter.
    pub fn eval(&self, n: usize, k: Option<u32>) -> Result<i64> {
        self.eval_env(&Env {
            n: n as i64,
            k: k.map(|v| v as i64),
            i: None,
        })
    }
}

/// A symbolic partition: explicit parts plus `1^e` runs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartPattern {
    Part(Expr),
    Ones(Expr),
}

/// One family of cocharacter terms:
/// `coeff * chi_{lambda(i), mu(i)}` summed over `i` (or a single term).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermFamily {
    pub lambda: Vec<PartPattern>,
    pub mu: Vec<PartPattern>,
    pub coeff: Expr,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sum: Option<SumRange>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SumRange {
    pub lo: Expr,
    pub hi: Expr,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub parity: Option<Parity>,
}

/// Materializes a pattern at fixed (n, k, i); None when the result is not
/// a partition (the usual truncation convention for small n).
fn eval_pattern(pats: &[PartPattern], env: &Env) -> Result<Option<Partition>> {
    let mut parts: Vec<i64> = Vec::new();
    for p in pats {
        match p {
            PartPattern::Part(e) => parts.push(e.eval_env(env)?),
            PartPattern::Ones(e) => {
                let count = e.eval_env(env)?;
                if count < 0 {
                    return Ok(None);
                }
                parts.extend(std::iter::repeat(1).take(count as usize));
            }
        }
    }
    if parts.iter().any(|&p| p < 0) {
        return Ok(None);
    }
    while parts.last() == Some(&0) {
        parts.pop();
    }
    if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
        return Ok(None);
    }
    Ok(Some(
        Partition::new(parts.into_iter().map(|p| p as u8).collect()).unwrap(),
    ))
}

/// Expands term families into an expected multiplicity table at degree `n`.
pub fn expected_terms(
    families: &[TermFamily],
    n: usize,
    k: Option<u32>,
) -> Result<BTreeMap<PartitionPair, u64>> {
    let mut out: BTreeMap<PartitionPair, u64> = BTreeMap::new();
    for fam in families {
        let base = Env {
            n: n as i64,
            k: k.map(|v| v as i64),
            i: None,
        };
        let indices: Vec<Option<i64>> = match &fam.sum {
            None => vec![None],
            Some(range) => {
                let lo = range.lo.eval_env(&base)?;
                let hi = range.hi.eval_env(&base)?;
                (lo..=hi)
                    .filter(|i| match range.parity {
                        None => true,
                        Some(Parity::Even) => i.rem_euclid(2) == 0,
                        Some(Parity::Odd) => i.rem_euclid(2) == 1,
                    })
                    .map(Some)
                    .collect()
            }
        };
        for i in indices {
            let env = Env {
                n: n as i64,
                k: k.map(|v| v as i64),
                i,
            };
            let coeff = fam.coeff.eval_env(&env)?;
            if coeff <= 0 {
                continue;
            }
            let lambda = match eval_pattern(&fam.lambda, &env)? {
                Some(p) => p,
                None => continue,
            };
            let mu = match eval_pattern(&fam.mu, &env)? {
                Some(p) => p,
                None => continue,
            };
            if lambda.weight() + mu.weight() != n {
                continue;
            }
            *out.entry(PartitionPair::new(lambda, mu)).or_insert(0) += coeff as u64;
        }
    }
    Ok(out)
}

/// Algebra reference: a catalog family plus parameter, or the infinite
/// Grassmann stand-ins `G` / `Ggr`, which resolve to a truncation large
/// enough to be exact at the requested degree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraRef {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub param: Option<u32>,
}

impl AlgebraRef {
    pub fn family(name: &str, param: Option<u32>) -> Self {
        AlgebraRef {
            name: name.to_string(),
            param,
        }
    }

    /// Display name at a concrete parameter.
    pub fn label(&self) -> String {
        match self.param {
            Some(p) => {
                // family names carry a placeholder letter: Gt -> G2, Nk -> N3
                let base = self
                    .name
                    .trim_end_matches("gr")
                    .trim_end_matches(['t', 'k']);
                let suffix = if self.name.ends_with("gr") { "gr" } else { "" };
                format!("{base}{p}{suffix}")
            }
            None => self.name.clone(),
        }
    }

    /// Resolves the reference for computations at degree `n`.
    pub fn resolve_at(&self, n: usize) -> Result<SuperAlgebra> {
        match self.name.as_str() {
            // identities of the infinite Grassmann algebra agree with the
            // even truncation G_t at degree n once t >= n, and its central
            // polynomials once t >= n + 1
            "G" => {
                let t = if n % 2 == 0 { n + 2 } else { n + 1 };
                algebra::catalog("Gt", Some(t as u32))
            }
            // canonical grading: t even with t >= n covers identities and
            // central polynomials at degree n
            "Ggr" => {
                let t = if n % 2 == 0 { n } else { n + 1 };
                algebra::catalog("Gtgr", Some(t.max(2) as u32))
            }
            _ => algebra::catalog(&self.name, self.param),
        }
    }
}

/// Reference to one kernel family of one algebra.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KernelRef {
    pub algebra: AlgebraRef,
    pub kind: KernelKind,
}

/// The claim a fixture pins, with its formula payload.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "formula", rename_all = "kebab-case")]
pub enum Claim {
    /// `c_n` equals the expression.
    Codim(Expr),
    /// `c_n^z` equals the expression.
    CentralCodim(Expr),
    /// `delta_n` equals the expression.
    Delta(Expr),
    /// The cocharacter of the given kind decomposes with these terms.
    Cochar {
        which: CocharKind,
        terms: Vec<TermFamily>,
    },
    /// The generated T2 sectors match the evaluation kernels.
    Generators {
        mode: KernelKind,
        #[serde(default)]
        space: Vec<String>,
        #[serde(default)]
        ideal: Vec<String>,
    },
    /// Two kernel families agree (or differ, with a witness sector).
    KernelEquality {
        left: KernelRef,
        right: KernelRef,
        expect_equal: bool,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        witness: Option<(usize, usize)>,
    },
    /// The central kernels are closed under outer multiplication.
    Closure { expect: bool },
    /// Product-of-commutators reordering congruence, exhaustively over
    /// `S_{2p}`.
    ReorderCongruence { p: usize },
    /// Commutator-shift congruence at each degree in range.
    PrefixCongruence,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Asserted,
    Suspect,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Fixture {
    pub id: String,
    pub algebra: AlgebraRef,
    #[serde(flatten)]
    pub claim: Claim,
    pub range: (usize, usize),
    pub status: Status,
    /// The symbolic claim in plain text.
    pub anchor: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", content = "detail", rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail(String),
    SuspectDiff(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct FixtureOutcome {
    pub id: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl FixtureOutcome {
    pub fn passed(&self) -> bool {
        !matches!(self.verdict, Verdict::Fail(_))
    }
}

/// Runs one fixture against the computation engines.
pub fn run_fixture(fixture: &Fixture, session: &Session) -> FixtureOutcome {
    let verdict = match run_fixture_inner(fixture, session) {
        Ok(None) => Verdict::Pass,
        Ok(Some(diff)) => match fixture.status {
            Status::Asserted => Verdict::Fail(diff),
            Status::Suspect => Verdict::SuspectDiff(diff),
        },
        Err(e) => Verdict::Fail(format!("error: {e}")),
    };
    FixtureOutcome {
        id: fixture.id.clone(),
        verdict,
    }
}

/// Ok(None) = claim reproduced exactly; Ok(Some(diff)) = mismatch.
fn run_fixture_inner(fixture: &Fixture, session: &Session) -> Result<Option<String>> {
    let (lo, hi) = fixture.range;
    match &fixture.claim {
        Claim::Codim(expr) | Claim::CentralCodim(expr) | Claim::Delta(expr) => {
            let field = match &fixture.claim {
                Claim::Codim(_) => "c",
                Claim::CentralCodim(_) => "cz",
                _ => "delta",
            };
            let mut diffs = Vec::new();
            for n in lo..=hi {
                let alg = fixture.algebra.resolve_at(n)?;
                let rep = session.codim_report(&alg, n)?;
                let got = match field {
                    "c" => rep.c,
                    "cz" => rep.cz,
                    _ => rep.delta,
                };
                let want = expr.eval(n, fixture.algebra.param)?;
                if want < 0 || got != want as u64 {
                    diffs.push(format!("n={n}: computed {field}={got}, formula gives {want}"));
                }
            }
            Ok(non_empty(diffs))
        }
        Claim::Cochar { which, terms } => {
            let mut diffs = Vec::new();
            for n in lo..=hi {
                let alg = fixture.algebra.resolve_at(n)?;
                let computed = cocharacter(session, &alg, n, *which)?;
                let expected = expected_terms(terms, n, fixture.algebra.param)?;
                if computed.terms != expected {
                    diffs.push(format!(
                        "n={n}: formula gives {}, computed decomposition is {}",
                        format_terms(&expected),
                        format_decomposition(&computed),
                    ));
                }
            }
            Ok(non_empty(diffs))
        }
        Claim::Generators { mode, space, ideal } => {
            let set = GeneratorSet::from_spec(&GeneratorSpec {
                space: space.clone(),
                ideal: ideal.clone(),
            })?;
            let alg = fixture.algebra.resolve_at(hi)?;
            let report = verify_generators(session, &set, &alg, hi, *mode)?;
            if report.ok {
                Ok(None)
            } else {
                let bad: Vec<String> = report
                    .sectors
                    .iter()
                    .filter(|s| !s.equal)
                    .map(|s| {
                        format!(
                            "({},{}): generated dim {} vs kernel dim {}",
                            s.n, s.r, s.dim_generated, s.dim_kernel
                        )
                    })
                    .collect();
                Ok(Some(format!("sectors differ: {}", bad.join("; "))))
            }
        }
        Claim::KernelEquality {
            left,
            right,
            expect_equal,
            witness,
        } => {
            let mut all_equal = true;
            let mut witness_differs = false;
            let mut first_diff = None;
            for n in lo..=hi {
                let la = left.algebra.resolve_at(n)?;
                let ra = right.algebra.resolve_at(n)?;
                for (r, eq) in
                    session.kernels_equal_sectorwise(&la, left.kind, &ra, right.kind, n)?
                {
                    if !eq {
                        all_equal = false;
                        if first_diff.is_none() {
                            first_diff = Some((n, r));
                        }
                        if witness.is_some() && witness.unwrap() == (n, r) {
                            witness_differs = true;
                        }
                    }
                }
            }
            if *expect_equal {
                Ok(match first_diff {
                    None => None,
                    Some((n, r)) => Some(format!("kernels differ first at sector ({n},{r})")),
                })
            } else if !all_equal && witness.map_or(true, |_| witness_differs) {
                Ok(None)
            } else if all_equal {
                Ok(Some("kernels unexpectedly agree everywhere".into()))
            } else {
                Ok(Some(format!(
                    "kernels differ, but not at the expected witness sector {:?}",
                    witness.unwrap()
                )))
            }
        }
        Claim::Closure { expect } => {
            let alg = fixture.algebra.resolve_at(hi)?;
            let report = t2_closure_check(session, &alg, hi)?;
            if report.ok == *expect {
                Ok(None)
            } else if *expect {
                Ok(Some(format!(
                    "closure fails at {:?}",
                    report.failures.first()
                )))
            } else {
                Ok(Some("closure unexpectedly holds".into()))
            }
        }
        Claim::ReorderCongruence { p } => {
            for sigma in Perm::all(2 * p) {
                if !reorder_congruence_holds(*p, &sigma)? {
                    return Ok(Some(format!("fails for sigma = {sigma:?}")));
                }
            }
            Ok(None)
        }
        Claim::PrefixCongruence => {
            for n in lo.max(3)..=hi {
                if !prefix_shift_congruence_holds(n)? {
                    return Ok(Some(format!("fails at degree {n}")));
                }
            }
            Ok(None)
        }
    }
}

fn non_empty(diffs: Vec<String>) -> Option<String> {
    if diffs.is_empty() {
        None
    } else {
        Some(diffs.join("; "))
    }
}

fn format_terms(terms: &BTreeMap<PartitionPair, u64>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .iter()
        .map(|(p, m)| format!("{m} {p}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn format_decomposition(dec: &CocharDecomposition) -> String {
    format_terms(&dec.terms)
}

/// Simple `*` wildcard match for fixture id filters.
pub fn wildcard_match(pattern: &str, target: &str) -> bool {
    fn rec(p: &[u8], t: &[u8]) -> bool {
        match (p.first(), t.first()) {
            (None, None) => true,
            (Some(b'*'), _) => rec(&p[1..], t) || (!t.is_empty() && rec(p, &t[1..])),
            (Some(c), Some(d)) if c == d => rec(&p[1..], &t[1..]),
            _ => false,
        }
    }
    rec(pattern.as_bytes(), target.as_bytes())
}

/// Runs fixtures (optionally filtered) in parallel; outcomes are sorted by
/// fixture id, so the report is deterministic.
pub fn run_fixtures(
    fixtures: &[Fixture],
    session: &Session,
    filter: Option<&str>,
) -> Vec<FixtureOutcome> {
    let selected: Vec<&Fixture> = fixtures
        .iter()
        .filter(|f| filter.is_none_or(|pat| wildcard_match(pat, &f.id)))
        .collect();
    let mut outcomes: Vec<FixtureOutcome> = selected
        .par_iter()
        .map(|f| run_fixture(f, session))
        .collect();
    outcomes.sort_by(|a, b| a.id.cmp(&b.id));
    outcomes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expression_evaluation() {
        // sum_{i=0}^{k} C(n, 2i) at n=5, k=2: C(5,0)+C(5,2)+C(5,4) = 16
        let e = sum(int(0), kk(), binom(nn(), mul(vec![int(2), ii()])));
        assert_eq!(e.eval(5, Some(2)).unwrap(), 16);
        // 2^{n-1} at n=4
        let e = pow(int(2), sub(nn(), int(1)));
        assert_eq!(e.eval(4, None).unwrap(), 8);
        // 1 + sum_{i=0}^{k-2} C(n,i)(n-i) at n=3, k=2
        let e = add(vec![
            int(1),
            sum(
                int(0),
                sub(kk(), int(2)),
                mul(vec![binom(nn(), ii()), sub(nn(), ii())]),
            ),
        ]);
        assert_eq!(e.eval(3, Some(2)).unwrap(), 4);
        // parity-filtered sums
        let e = sum_par(int(0), nn(), Parity::Even, binom(nn(), ii()));
        assert_eq!(e.eval(4, None).unwrap(), 8);
    }

    #[test]
    fn binomial_truncates() {
        assert_eq!(binom_i64(3, 5), 0);
        assert_eq!(binom_i64(-1, 0), 0);
        assert_eq!(binom_i64(4, -2), 0);
        assert_eq!(binom_i64(0, 0), 1);
    }

    #[test]
    fn pattern_truncation() {
        // (n - i, i) at n=2, i=2 is (0,2): invalid
        let pat = vec![
            PartPattern::Part(sub(nn(), ii())),
            PartPattern::Part(ii()),
        ];
        let env = Env {
            n: 2,
            k: None,
            i: Some(2),
        };
        assert_eq!(eval_pattern(&pat, &env).unwrap(), None);
        // at i=0: (2, 0) -> (2)
        let env = Env {
            n: 2,
            k: None,
            i: Some(0),
        };
        assert_eq!(
            eval_pattern(&pat, &env).unwrap(),
            Some(Partition::row(2))
        );
        // hooks: (n - i, 1^i)
        let hook = vec![
            PartPattern::Part(sub(nn(), ii())),
            PartPattern::Ones(ii()),
        ];
        let env = Env {
            n: 4,
            k: None,
            i: Some(2),
        };
        assert_eq!(
            eval_pattern(&hook, &env).unwrap(),
            Some(Partition::new(vec![2, 1, 1]).unwrap())
        );
    }

    #[test]
    fn wildcard_filters() {
        assert!(wildcard_match("N*", "N3.codim"));
        assert!(wildcard_match("*codim*", "N3.central-codim"));
        assert!(!wildcard_match("N*", "UT2.codim"));
        assert!(wildcard_match("UT2.codim", "UT2.codim"));
    }

    #[test]
    fn fixture_json_round_trip() {
        let fixtures = standard_fixtures();
        let json = serde_json::to_string_pretty(&fixtures).unwrap();
        let back: Vec<Fixture> = serde_json::from_str(&json).unwrap();
        assert_eq!(back.len(), fixtures.len());
        let json2 = serde_json::to_string_pretty(&back).unwrap();
        assert_eq!(json, json2);
    }

    #[test]
    fn fixture_ids_unique() {
        let fixtures = standard_fixtures();
        let mut ids: Vec<&str> = fixtures.iter().map(|f| f.id.as_str()).collect();
        let before = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), before, "duplicate fixture ids");
    }

    #[test]
    fn mutated_fixture_fails_with_first_divergence() {
        // an off-by-one binomial must be caught at its first bad degree
        let fixture = Fixture {
            id: "selftest.bad-codim".into(),
            algebra: AlgebraRef::family("Dgr", None),
            claim: Claim::Codim(pow(int(2), nn())),
            range: (1, 3),
            status: Status::Asserted,
            anchor: "selftest".into(),
        };
        let session = Session::default();
        let ok = run_fixture(&fixture, &session);
        assert!(ok.passed());

        let bad = Fixture {
            claim: Claim::Codim(add(vec![pow(int(2), nn()), int(1)])),
            ..fixture
        };
        let out = run_fixture(&bad, &session);
        match out.verdict {
            Verdict::Fail(msg) => assert!(msg.contains("n=1"), "{msg}"),
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn suspect_fixture_never_fails() {
        let bad = Fixture {
            id: "selftest.suspect".into(),
            algebra: AlgebraRef::family("Dgr", None),
            claim: Claim::Codim(int(0)),
            range: (1, 2),
            status: Status::Suspect,
            anchor: "selftest".into(),
        };
        let session = Session::default();
        let out = run_fixture(&bad, &session);
        assert!(matches!(out.verdict, Verdict::SuspectDiff(_)));
        assert!(out.passed());
    }
}
