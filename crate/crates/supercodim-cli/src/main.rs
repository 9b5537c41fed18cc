//! `supercodim`: exact graded codimensions, central polynomials and
//! cocharacters of finite-dimensional superalgebras from the command line.
//!
//! Output is deterministic: identical invocations produce byte-identical
//! text regardless of thread count. Exit codes: 0 success, 1 verification
//! failure, 2 usage or input errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use supercodim::algebra::{catalog_names, resolve, SuperAlgebra};
use supercodim::cochar::{cocharacter, pair_degree, CocharKind};
use supercodim::eval::{EvalOptions, KernelKind, Session};
use supercodim::fixtures::{run_fixtures, standard_fixtures, Fixture, Verdict};
use supercodim::linalg::format_rational;
use supercodim::t2::{
    generated_sector, t2_closure_check, verify_generators, GeneratorSet, GeneratorSpec,
};

#[derive(Parser)]
#[command(
    name = "supercodim",
    version,
    about = "Exact codimension sequences, central polynomials and cocharacters of superalgebras"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    run: RunOpts,
}

#[derive(Args, Clone)]
struct RunOpts {
    /// Worker threads (default: all cores; env SUPERCODIM_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Overrides the degree caps of all modules.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Shorthand for --format json.
    #[arg(long, global = true)]
    json: bool,
    /// Disable the disjoint-support substitution stream for Grassmann
    /// algebras (exhaustive evaluation instead).
    #[arg(long, global = true)]
    no_fast_path: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Copy, Clone, ValueEnum)]
enum KindArg {
    Graded,
    Central,
    ProperCentral,
}

impl From<KindArg> for CocharKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Graded => CocharKind::Graded,
            KindArg::Central => CocharKind::Central,
            KindArg::ProperCentral => CocharKind::ProperCentral,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum ModeArg {
    Identities,
    Central,
}

impl From<ModeArg> for KernelKind {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Identities => KernelKind::Identity,
            ModeArg::Central => KernelKind::Central,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Catalog inspection.
    Algebra {
        #[command(subcommand)]
        sub: AlgebraCmd,
    },
    /// Codimension sequences c_n, c_n^z, delta_n with sector breakdown.
    Codim {
        /// Catalog name, e.g. UT2, Dgr, C3gr, N4, A2gr, G2, G3gr.
        #[arg(long)]
        algebra: String,
        /// Degree or inclusive range, e.g. `4` or `1..5`.
        #[arg(long)]
        n: String,
    },
    /// Cocharacter decomposition at one degree.
    Cocharacter {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = KindArg::Graded)]
        kind: KindArg,
    },
    /// T2-ideal and T2-space sector computations.
    T2 {
        #[command(subcommand)]
        sub: T2Cmd,
    },
    /// Replay the fixture ledger.
    Verify {
        /// Fixture file (JSON); defaults to the built-in set.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Run only fixtures whose id matches this `*` pattern.
        #[arg(long)]
        filter: Option<String>,
        /// Print the active fixture set as JSON instead of running it.
        #[arg(long)]
        dump: bool,
    },
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// List the catalog.
    List,
    /// Show one algebra (basis, grading, structure constants).
    Show {
        #[arg(long)]
        algebra: String,
    },
}

#[derive(Subcommand)]
enum T2Cmd {
    /// Dimension of the generated subspace of one sector.
    Span {
        /// Generator file: {"space": [...], "ideal": [...]}.
        #[arg(long)]
        gens: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Compare generated sectors against an algebra's kernels.
    Verify {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        gens: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Identities)]
        mode: ModeArg,
        /// Highest degree to check.
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Check whether the central kernels close under outer multiplication.
    Closure {
        #[arg(long)]
        algebra: String,
        /// Highest degree to check.
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    let threads = cli
        .run
        .threads
        .or_else(|| {
            std::env::var("SUPERCODIM_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(0);
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .ok();
    }
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}

fn session(opts: &RunOpts) -> Session {
    let mut eval = EvalOptions {
        fast_path: !opts.no_fast_path,
        ..Default::default()
    };
    if let Some(cap) = opts.max_n {
        eval.max_n = cap;
        eval.cochar_cap = cap;
    }
    Session::new(eval)
}

fn format_of(opts: &RunOpts) -> Format {
    if opts.json {
        Format::Json
    } else {
        opts.format
    }
}

fn parse_range(text: &str) -> anyhow::Result<(usize, usize)> {
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: usize = lo.trim().parse()?;
        let hi: usize = hi.trim().parse()?;
        anyhow::ensure!(lo >= 1 && lo <= hi, "empty range '{text}'");
        Ok((lo, hi))
    } else {
        let n: usize = text.trim().parse()?;
        anyhow::ensure!(n >= 1, "degree must be positive");
        Ok((n, n))
    }
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let fmt = format_of(&cli.run);
    match cli.cmd {
        Cmd::Algebra { sub } => match sub {
            AlgebraCmd::List => {
                let mut rows = Vec::new();
                for name in catalog_names() {
                    let a = resolve(&name)?;
                    rows.push((
                        name,
                        a.dim(),
                        a.even_basis().len(),
                        a.odd_basis().len(),
                        a.is_unitary(),
                    ));
                }
                match fmt {
                    Format::Json => {
                        let items: Vec<serde_json::Value> = rows
                            .iter()
                            .map(|(name, dim, even, odd, unitary)| {
                                serde_json::json!({
                                    "name": name, "dim": dim,
                                    "even": even, "odd": odd,
                                    "unitary": unitary,
                                })
                            })
                            .collect();
                        emit_json(&items)?;
                    }
                    Format::Csv => {
                        println!("name,dim,even,odd,unitary");
                        for (name, dim, even, odd, unitary) in rows {
                            println!("{name},{dim},{even},{odd},{unitary}");
                        }
                    }
                    Format::Table => {
                        println!("{:<8} {:>4} {:>5} {:>4}  unitary", "name", "dim", "even", "odd");
                        for (name, dim, even, odd, unitary) in rows {
                            println!(
                                "{name:<8} {dim:>4} {even:>5} {odd:>4}  {}",
                                if unitary { "yes" } else { "no" }
                            );
                        }
                    }
                }
                Ok(0)
            }
            AlgebraCmd::Show { algebra } => {
                let a = resolve(&algebra)?;
                show_algebra(&a, fmt)?;
                Ok(0)
            }
        },
        Cmd::Codim { algebra, n } => {
            let a = resolve(&algebra)?;
            let (lo, hi) = parse_range(&n)?;
            let s = session(&cli.run);
            let mut reports = Vec::new();
            for deg in lo..=hi {
                reports.push(s.codim_report(&a, deg)?);
            }
            match fmt {
                Format::Json => emit_json(&reports)?,
                Format::Csv => {
                    println!("algebra,n,c,cz,delta");
                    for rep in &reports {
                        println!(
                            "{},{},{},{},{}",
                            rep.algebra, rep.n, rep.c, rep.cz, rep.delta
                        );
                    }
                }
                Format::Table => {
                    println!("algebra  {:>2} {:>12} {:>12} {:>12}  sectors (r: c/cz)", "n", "c", "cz", "delta");
                    for rep in &reports {
                        let sectors: Vec<String> = rep
                            .sectors
                            .iter()
                            .map(|sc| format!("{}: {}/{}", sc.r, sc.c, sc.cz))
                            .collect();
                        println!(
                            "{:<8} {:>2} {:>12} {:>12} {:>12}  [{}]",
                            rep.algebra,
                            rep.n,
                            rep.c,
                            rep.cz,
                            rep.delta,
                            sectors.join(", ")
                        );
                    }
                }
            }
            Ok(0)
        }
        Cmd::Cocharacter { algebra, n, kind } => {
            let a = resolve(&algebra)?;
            let s = session(&cli.run);
            let dec = cocharacter(&s, &a, n, kind.into())?;
            match fmt {
                Format::Json => emit_json(&dec)?,
                Format::Csv => {
                    println!("lambda,mu,m");
                    for (pair, m) in &dec.terms {
                        println!("{},{},{m}", pair.lambda, pair.mu);
                    }
                }
                Format::Table => {
                    println!("{} cocharacter of {} at n = {}", dec.kind, dec.algebra, dec.n);
                    for (pair, m) in &dec.terms {
                        println!("  {pair}: {m}");
                    }
                    let degree_sum: u64 =
                        dec.terms.iter().map(|(p, m)| m * pair_degree(p)).sum();
                    println!("degree sum = {degree_sum}");
                }
            }
            Ok(0)
        }
        Cmd::T2 { sub } => match sub {
            T2Cmd::Span { gens, n, r } => {
                let set = load_gens(&gens)?;
                let cap = cli.run.max_n.unwrap_or(supercodim::t2::T2_CAP);
                let span = generated_sector(&set, n, r, cap)?;
                match fmt {
                    Format::Json => emit_json(&serde_json::json!({
                        "n": n, "r": r,
                        "dim": span.dim(),
                        "sector_dim": span.sector().dim(),
                        "full": span.is_full(),
                    }))?,
                    _ => println!(
                        "generated subspace of sector ({},{}) has dimension {} of {}",
                        n - r,
                        r,
                        span.dim(),
                        span.sector().dim()
                    ),
                }
                Ok(0)
            }
            T2Cmd::Verify {
                algebra,
                gens,
                mode,
                n,
            } => {
                let a = resolve(&algebra)?;
                let set = load_gens(&gens)?;
                let s = session(&cli.run);
                let report = verify_generators(&s, &set, &a, n, mode.into())?;
                match fmt {
                    Format::Json => emit_json(&report)?,
                    _ => {
                        for v in &report.sectors {
                            println!(
                                "({},{}): generated {} kernel {} {}",
                                v.n,
                                v.r,
                                v.dim_generated,
                                v.dim_kernel,
                                if v.equal { "ok" } else { "MISMATCH" }
                            );
                        }
                        println!(
                            "{}: generated sectors {} the {} kernels up to n = {n}",
                            report.algebra,
                            if report.ok { "match" } else { "do NOT match" },
                            report.mode
                        );
                    }
                }
                Ok(if report.ok { 0 } else { 1 })
            }
            T2Cmd::Closure { algebra, n } => {
                let a = resolve(&algebra)?;
                let s = session(&cli.run);
                let report = t2_closure_check(&s, &a, n)?;
                match fmt {
                    Format::Json => emit_json(&report)?,
                    _ => {
                        if report.ok {
                            println!(
                                "{}: central kernels close under outer multiplication up to n = {n}",
                                report.algebra
                            );
                        } else {
                            for f in &report.failures {
                                println!(
                                    "closure fails at sector ({},{}) on the {} by a fresh {}",
                                    f.n, f.r, f.side, f.fresh_parity
                                );
                            }
                        }
                    }
                }
                Ok(if report.ok { 0 } else { 1 })
            }
        },
        Cmd::Verify {
            fixtures,
            filter,
            dump,
        } => {
            let set: Vec<Fixture> = match fixtures {
                Some(path) => serde_json::from_str(&std::fs::read_to_string(path)?)?,
                None => standard_fixtures(),
            };
            if dump {
                emit_json(&set)?;
                return Ok(0);
            }
            let s = session(&cli.run);
            let outcomes = run_fixtures(&set, &s, filter.as_deref());
            let mut pass = 0;
            let mut fail = 0;
            let mut suspect = 0;
            match fmt {
                Format::Json => emit_json(&outcomes)?,
                _ => {
                    for o in &outcomes {
                        match &o.verdict {
                            Verdict::Pass => {
                                pass += 1;
                                println!("pass          {}", o.id);
                            }
                            Verdict::SuspectDiff(msg) => {
                                suspect += 1;
                                println!("suspect-diff  {}: {msg}", o.id);
                            }
                            Verdict::Fail(msg) => {
                                fail += 1;
                                println!("FAIL          {}: {msg}", o.id);
                            }
                        }
                    }
                    println!(
                        "{} fixtures: {pass} pass, {fail} fail, {suspect} suspect-diff",
                        outcomes.len()
                    );
                }
            }
            if fmt == Format::Json {
                fail = outcomes
                    .iter()
                    .filter(|o| matches!(o.verdict, Verdict::Fail(_)))
                    .count();
            }
            Ok(if fail == 0 { 0 } else { 1 })
        }
    }
}

fn show_algebra(a: &SuperAlgebra, fmt: Format) -> anyhow::Result<()> {
    match fmt {
        Format::Json => emit_json(&a.to_file())?,
        _ => {
            println!("{}: dimension {}", a.name(), a.dim());
            for (i, label) in a.labels().iter().enumerate() {
                println!(
                    "  b{i} = {label}  (degree {})",
                    a.degrees()[i]
                );
            }
            match a.unit() {
                Some(u) => {
                    let coords: Vec<String> = u.iter().map(format_rational).collect();
                    println!("  unit: [{}]", coords.join(", "));
                }
                None => println!("  unit: none"),
            }
            println!("  center dimension: {}", a.center().dim());
            println!("  nonzero products (i * j = sum):");
            for (i, j, k, c) in a.table_entries() {
                let c = format_rational(&c);
                let c = if c == "1" { String::new() } else { format!("{c} ") };
                println!("    b{i} b{j} -> {c}b{k}");
            }
        }
    }
    Ok(())
}

fn load_gens(path: &PathBuf) -> anyhow::Result<GeneratorSet> {
    let spec: GeneratorSpec = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    Ok(GeneratorSet::from_spec(&spec)?)
}

fn emit_json<T: ::serde::Serialize>(value: &T) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}
