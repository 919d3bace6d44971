//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on input or other errors, 2 when a
//! cross-check finds a mismatch, 3 when a brute-force cap is exceeded.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::betti::{self, DEFAULT_CAP};
use crate::bier::{bier_sphere, BierIndex};
use crate::check::{self, PairMismatch};
use crate::classify::Classifier;
use crate::complex::Complex;
use crate::corpus;
use crate::error::{Error, Result};
use crate::fixtures::{self, FIXTURES};
use crate::homology;
use crate::io::{self, ComplexOutput};
use crate::report::{self, Format};
use crate::subset::VertexSet;
use crate::toric::{self, ProductResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Method {
    /// Closed formula in terms of K.
    #[default]
    Closed,
    /// Hochster's formula on the constructed sphere.
    Brute,
    /// Both, with a comparison verdict.
    Both,
}

/// Bier spheres, their full subcomplexes, Betti tables and real toric
/// invariants.
///
/// Input complexes are JSON objects {"m": <int>, "facets": [[...], ...]}
/// with vertices 1..m. Barred vertices print as i' in tables and as m+i in
/// CSV and JSON.
#[derive(Debug, Clone, Parser)]
#[command(name = "bier", version)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Input complex: a file path, inline JSON, or - for stdin.
    #[arg(long, global = true)]
    pub input: Option<String>,

    /// Use a bundled complex instead of --input (see `fixtures`).
    #[arg(long, global = true, conflicts_with = "input")]
    pub fixture: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Betti-table route.
    #[arg(long, global = true, value_enum, default_value_t = Method::Closed)]
    pub method: Method,

    /// Largest ground set for subset-enumerating computations.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,

    /// Worker threads; 0 picks one per core.
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,

    /// Seed for random corpora.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Alexander dual of the input.
    Dual,
    /// Bier sphere of the input.
    Bier,
    /// Full subcomplex of the Bier sphere on I ⊔ J̄.
    Restrict { i: String, j: String },
    /// Homotopy type of Bier(K)|_{I ⊔ J̄}, for one pair or all pairs.
    Classify {
        #[arg(long)]
        all_pairs: bool,
        i: Option<String>,
        j: Option<String>,
    },
    /// Reduced homology (rational ranks and integral torsion).
    Homology {
        /// Use the Bier sphere instead of the input.
        #[arg(long)]
        bier: bool,
    },
    /// Bigraded Betti table of the Bier sphere.
    Betti {
        /// Table of the input complex itself (Hochster's formula).
        #[arg(long)]
        plain: bool,
    },
    /// Cohomology ranks of the real moment-angle complex.
    Rz {
        #[arg(long)]
        bier: bool,
    },
    /// Betti numbers of the real toric manifold and the I_i collections.
    Toric,
    /// h-vector identity for the Bier sphere against the toric Betti numbers.
    Hcheck,
    /// Cup product of the generators indexed by I and J.
    Cup { i: String, j: String },
    /// All cross-checks on one input.
    Verify,
    /// Cross-checks over an exhaustive and a seeded random corpus.
    CorpusVerify {
        /// Every complex on m vertices for m up to this bound (at most 4).
        #[arg(long, default_value_t = 4)]
        exhaustive: usize,
        /// Vertex counts for the random part.
        #[arg(long, value_delimiter = ',', default_values_t = [5usize, 6])]
        sizes: Vec<usize>,
        /// Random complexes per size.
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
    /// List bundled complexes.
    Fixtures,
}

/// Captured result of a run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            }
        }
    }
}

pub fn run(config: &RunConfig) -> Outcome {
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => return failure(EXIT_ERROR, format!("error: thread pool: {e}\n")),
    };
    let mut out = String::new();
    match pool.install(|| dispatch(config, &mut out)) {
        Ok(code) => Outcome {
            code,
            stdout: out,
            stderr: String::new(),
        },
        Err(e) => {
            let code = match e {
                Error::CapExceeded { .. } => EXIT_CAP,
                _ => EXIT_ERROR,
            };
            Outcome {
                code,
                stdout: out,
                stderr: format!("error: {e}\n"),
            }
        }
    }
}

fn failure(code: i32, stderr: String) -> Outcome {
    Outcome {
        code,
        stdout: String::new(),
        stderr,
    }
}

fn load_input(config: &RunConfig) -> Result<Complex> {
    match (&config.input, &config.fixture) {
        (_, Some(name)) => fixtures::load(name),
        (Some(src), None) => {
            let text = if src == "-" {
                std::io::read_to_string(std::io::stdin())
                    .map_err(|e| Error::Parse(format!("stdin: {e}")))?
            } else if src.trim_start().starts_with('{') {
                src.clone()
            } else {
                std::fs::read_to_string(src).map_err(|e| Error::Parse(format!("{src}: {e}")))?
            };
            io::parse_complex(&text)
        }
        (None, None) => Err(Error::Parse("no input: pass --input or --fixture".into())),
    }
}

fn parse_pair(k: &Complex, i: &str, j: &str) -> Result<(VertexSet, VertexSet)> {
    let m = k.ground_size();
    let mut parsed = [VertexSet::EMPTY; 2];
    for (slot, text) in parsed.iter_mut().zip([i, j]) {
        let s = io::parse_subset(text)?;
        if let Some(v) = s.max().filter(|&v| v > m) {
            return Err(Error::Parse(format!(
                "subset `{text}`: vertex {v} out of range 1..={m}"
            )));
        }
        *slot = s;
    }
    Ok((parsed[0], parsed[1]))
}

fn facets_csv(k: &Complex) -> String {
    report::csv_string(
        &["dim", "vertices"],
        k.facets()
            .into_iter()
            .map(|f| [(f.len() as isize - 1).to_string(), report::members(f)]),
    )
}

fn dispatch(config: &RunConfig, out: &mut String) -> Result<i32> {
    let fmt = config.format;
    match &config.command {
        Command::Fixtures => {
            match fmt {
                Format::Table => {
                    for f in FIXTURES {
                        writeln!(out, "{:<16} m={:<2} {}", f.name, f.m, f.description).ok();
                    }
                    writeln!(
                        out,
                        "{:<16} R-skeleton of the simplex on M vertices",
                        "skeleton:M:R"
                    )
                    .ok();
                }
                Format::Csv => out.push_str(&report::csv_string(
                    &["name", "m", "description"],
                    FIXTURES.iter().map(|f| {
                        [
                            f.name.to_string(),
                            f.m.to_string(),
                            f.description.to_string(),
                        ]
                    }),
                )),
                Format::Json => out.push_str(&report::json_string(
                    &FIXTURES
                        .iter()
                        .map(|f| json!({"name": f.name, "m": f.m, "description": f.description}))
                        .collect::<Vec<_>>(),
                )),
            }
            Ok(EXIT_OK)
        }
        Command::CorpusVerify {
            exhaustive,
            sizes,
            count,
        } => corpus_verify(config, *exhaustive, sizes, *count, out),
        command => {
            let k = load_input(config)?;
            dispatch_on(config, command, &k, out)
        }
    }
}

fn dispatch_on(
    config: &RunConfig,
    command: &Command,
    k: &Complex,
    out: &mut String,
) -> Result<i32> {
    let fmt = config.format;
    let m = k.ground_size();
    match command {
        Command::Dual => {
            let d = k.alexander_dual()?;
            let shifted = d.relabel(2 * m, |v| v + m)?;
            match fmt {
                Format::Table => {
                    writeln!(out, "dual on barred vertices, m = {m}").ok();
                    writeln!(
                        out,
                        "facets: {}",
                        report::facet_line(Some(m), &shifted.facets())
                    )
                    .ok();
                    writeln!(out, "faces: {}", d.num_faces()).ok();
                }
                Format::Csv => out.push_str(&facets_csv(&shifted)),
                Format::Json => {
                    let mut o = ComplexOutput::of(&shifted);
                    o.base_m = Some(m);
                    out.push_str(&report::json_string(&o));
                }
            }
        }
        Command::Bier => {
            let b = bier_sphere(k)?;
            match fmt {
                Format::Table => {
                    let c = b.complex();
                    let f: Vec<String> = c.f_vector().0.iter().map(u64::to_string).collect();
                    writeln!(
                        out,
                        "Bier sphere: base m = {m}, dim = {}, faces = {}",
                        c.dim(),
                        c.num_faces()
                    )
                    .ok();
                    writeln!(out, "f-vector: {}", f.join(" ")).ok();
                    writeln!(out, "facets: {}", report::facet_line(Some(m), &c.facets())).ok();
                }
                Format::Csv => out.push_str(&facets_csv(b.complex())),
                Format::Json => out.push_str(&report::json_string(&ComplexOutput::of_bier(&b))),
            }
        }
        Command::Restrict { i, j } => {
            let (i, j) = parse_pair(k, i, j)?;
            let b = bier_sphere(k)?;
            let full = b.full(BierIndex::new(i, j));
            let betti = homology::reduced_betti_q(&full);
            match fmt {
                Format::Table => {
                    writeln!(out, "Bier(K)|{} ⊔ {}'", i, j).ok();
                    writeln!(
                        out,
                        "facets: {}",
                        report::facet_line(Some(m), &full.facets())
                    )
                    .ok();
                    writeln!(out, "reduced Betti (from degree -1): {betti}").ok();
                }
                Format::Csv => out.push_str(&facets_csv(&full)),
                Format::Json => {
                    let mut o = ComplexOutput::of(&full);
                    o.base_m = Some(m);
                    out.push_str(&report::json_string(&json!({
                        "complex": o,
                        "reduced_betti": report::betti_values(&betti),
                    })));
                }
            }
        }
        Command::Classify { all_pairs, i, j } => {
            let classifier = Classifier::new(k)?;
            let pairs: Vec<(VertexSet, VertexSet)> = if *all_pairs {
                let subsets = VertexSet::all_canonical(m);
                subsets
                    .iter()
                    .flat_map(|&i| subsets.iter().map(move |&j| (i, j)))
                    .collect()
            } else {
                match (i, j) {
                    (Some(i), Some(j)) => vec![parse_pair(k, i, j)?],
                    _ => {
                        return Err(Error::Parse(
                            "classify needs I and J, or --all-pairs".into(),
                        ))
                    }
                }
            };
            let rows: Vec<[String; 5]> = pairs
                .iter()
                .map(|&(i, j)| {
                    let c = classifier.classify(i, j);
                    let betti = c.reduced_betti();
                    [
                        i.to_string(),
                        j.to_string(),
                        c.tag().to_string(),
                        report::class_detail(&c),
                        betti.to_string(),
                    ]
                })
                .collect();
            match fmt {
                Format::Table => {
                    writeln!(out, "{:<14} {:<14} {:<16} {:<28} betti", "I", "J", "class", "detail").ok();
                    for r in &rows {
                        writeln!(out, "{:<14} {:<14} {:<16} {:<28} {}", r[0], r[1], r[2], r[3], r[4]).ok();
                    }
                }
                Format::Csv => out.push_str(&report::csv_string(
                    &["I", "J", "class", "detail", "reduced_betti"],
                    rows.iter().cloned(),
                )),
                Format::Json => out.push_str(&report::json_string(
                    &rows
                        .iter()
                        .map(|r| json!({"I": r[0], "J": r[1], "class": r[2], "detail": r[3], "reduced_betti": r[4]}))
                        .collect::<Vec<_>>(),
                )),
            }
        }
        Command::Homology { bier } => {
            let target = if *bier {
                bier_sphere(k)?.into_complex()
            } else {
                k.clone()
            };
            let h = homology::integral_homology(&target)?;
            match fmt {
                Format::Table => out.push_str(&report::homology_text(&h)),
                Format::Csv => {
                    let top = h.reduced_betti.values().len() as isize - 1;
                    out.push_str(&report::csv_string(
                        &["degree", "betti", "torsion"],
                        (-1..top.max(0)).map(|d| {
                            let t: Vec<String> =
                                h.torsion_in(d).iter().map(u64::to_string).collect();
                            [
                                d.to_string(),
                                h.reduced_betti.get(d).to_string(),
                                t.join(" "),
                            ]
                        }),
                    ));
                }
                Format::Json => out.push_str(&report::json_string(&json!({
                    "reduced_betti": report::betti_values(&h.reduced_betti),
                    "torsion": h.torsion,
                }))),
            }
        }
        Command::Betti { plain } => return betti_command(config, k, *plain, out),
        Command::Rz { bier } => {
            let target = if *bier {
                bier_sphere(k)?.into_complex()
            } else {
                k.clone()
            };
            let ranks = betti::rz_cohomology_ranks(&target, config.cap)?;
            match fmt {
                Format::Table => {
                    let r: Vec<String> = ranks.iter().map(u64::to_string).collect();
                    writeln!(out, "ranks: {}", r.join(" ")).ok();
                }
                Format::Csv => out.push_str(&report::csv_string(
                    &["p", "rank"],
                    ranks
                        .iter()
                        .enumerate()
                        .map(|(p, r)| [p.to_string(), r.to_string()]),
                )),
                Format::Json => out.push_str(&report::json_string(&json!({"ranks": ranks}))),
            }
        }
        Command::Toric => {
            let coll = toric::i_collections(k)?;
            let betti = toric::toric_betti(k)?.betti;
            match fmt {
                Format::Table => out.push_str(&report::collections_text(&betti, &coll)),
                Format::Csv => out.push_str(&report::csv_string(
                    &["degree", "subset"],
                    coll.iter().flat_map(|(i, members)| {
                        members
                            .iter()
                            .map(move |s| [i.to_string(), report::members(*s)])
                    }),
                )),
                Format::Json => {
                    let collections: serde_json::Map<String, serde_json::Value> = coll
                        .iter()
                        .map(|(i, members)| {
                            (
                                i.to_string(),
                                json!(members.iter().map(|s| s.to_vec()).collect::<Vec<_>>()),
                            )
                        })
                        .collect();
                    out.push_str(&report::json_string(&json!({
                        "betti": betti,
                        "collections": collections,
                    })));
                }
            }
        }
        Command::Hcheck => {
            let b = bier_sphere(k)?;
            let r = toric::h_corollary_check(k, &b)?;
            match fmt {
                Format::Table => {
                    out.push_str(&report::hcheck_text(&r));
                    writeln!(out, "verdict: {}", if r.passed() { "OK" } else { "MISMATCH" }).ok();
                }
                Format::Csv => out.push_str(&report::csv_string(
                    &["k", "h_diff", "betti_diff", "holds"],
                    r.rows.iter().map(|row| {
                        [row.k.to_string(), row.h_diff.to_string(), row.betti_diff.to_string(), row.holds().to_string()]
                    }),
                )),
                Format::Json => out.push_str(&report::json_string(&json!({
                    "h": r.h,
                    "betti": r.betti,
                    "rows": r.rows.iter().map(|row| json!({"k": row.k, "h_diff": row.h_diff, "betti_diff": row.betti_diff})).collect::<Vec<_>>(),
                    "passed": r.passed(),
                }))),
            }
            if !r.passed() {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Cup { i, j } => {
            let (i, j) = parse_pair(k, i, j)?;
            let p = toric::cup_product(k, i, j)?;
            let (kind, subset) = match p {
                ProductResult::Zero => ("zero", None),
                ProductResult::GeneratorUpToSign(s) => ("generator-up-to-sign", Some(s)),
                ProductResult::Undetermined => ("undetermined", None),
            };
            match fmt {
                Format::Table => {
                    writeln!(out, "{i} x {j} = {p}").ok();
                }
                Format::Csv => out.push_str(&report::csv_string(
                    &["I", "J", "result", "subset"],
                    [[
                        report::members(i),
                        report::members(j),
                        kind.to_string(),
                        subset.map(report::members).unwrap_or_default(),
                    ]],
                )),
                Format::Json => out.push_str(&report::json_string(&json!({
                    "I": i.to_vec(),
                    "J": j.to_vec(),
                    "result": kind,
                    "subset": subset.map(VertexSet::to_vec),
                }))),
            }
        }
        Command::Verify => return verify_one(config, k, out),
        Command::Fixtures | Command::CorpusVerify { .. } => {
            unreachable!("handled before loading input")
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct BettiJson {
    method: &'static str,
    entries: Vec<report::BettiEntry>,
}

fn betti_command(config: &RunConfig, k: &Complex, plain: bool, out: &mut String) -> Result<i32> {
    let fmt = config.format;
    if plain {
        let t = betti::hochster_table(k, config.cap)?;
        match fmt {
            Format::Table => out.push_str(&report::betti_table_text(&t)),
            Format::Csv => out.push_str(&report::betti_table_csv(&t)),
            Format::Json => out.push_str(&report::json_string(&BettiJson {
                method: "brute",
                entries: report::betti_entries(&t),
            })),
        }
        return Ok(EXIT_OK);
    }
    let mut tables = Vec::new();
    if matches!(config.method, Method::Closed | Method::Both) {
        tables.push(("closed", betti::bier_betti_closed(k)?));
    }
    if matches!(config.method, Method::Brute | Method::Both) {
        let b = bier_sphere(k)?;
        tables.push(("brute", betti::hochster_table(b.complex(), config.cap)?));
    }
    let differences = match tables.as_slice() {
        [(_, a), (_, b)] => Some(a.differences(b)),
        _ => None,
    };
    match fmt {
        Format::Table => {
            for (name, t) in &tables {
                writeln!(out, "[{name}]").ok();
                out.push_str(&report::betti_table_text(t));
            }
        }
        Format::Csv => {
            let rows = tables.iter().flat_map(|(name, t)| {
                t.iter().map(move |((i, j), v)| {
                    [
                        name.to_string(),
                        i.to_string(),
                        j.to_string(),
                        v.to_string(),
                    ]
                })
            });
            out.push_str(&report::csv_string(&["method", "i", "j", "value"], rows));
        }
        Format::Json => {
            let list: Vec<BettiJson> = tables
                .iter()
                .map(|(name, t)| BettiJson {
                    method: name,
                    entries: report::betti_entries(t),
                })
                .collect();
            out.push_str(&report::json_string(&json!({
                "tables": list,
                "agree": differences.as_ref().map(Vec::is_empty),
            })));
        }
    }
    match differences {
        Some(d) if !d.is_empty() => {
            if fmt == Format::Table {
                writeln!(out, "verdict: MISMATCH").ok();
                for (i, j, a, b) in d {
                    writeln!(out, "  (i,j)=({i},{j}): closed {a}, brute {b}").ok();
                }
            }
            Ok(EXIT_MISMATCH)
        }
        Some(_) => {
            if fmt == Format::Table {
                writeln!(out, "verdict: OK (closed form = brute force)").ok();
            }
            Ok(EXIT_OK)
        }
        None => Ok(EXIT_OK),
    }
}

fn write_pair_mismatch(out: &mut String, k: &Complex, x: &PairMismatch) {
    writeln!(out, "counterexample:").ok();
    writeln!(
        out,
        "  K: m = {}, facets {}",
        k.ground_size(),
        report::facet_line(None, &k.facets())
    )
    .ok();
    writeln!(out, "  I = {}, J = {}", x.plain, x.barred).ok();
    writeln!(out, "  classifier: {} -> {}", x.class, x.classified).ok();
    writeln!(out, "  homology:   {}", x.oracle).ok();
}

/// Every check on one complex; returns the first failure.
fn check_complex(k: &Complex, cap: usize, out: &mut String) -> Result<Option<String>> {
    let b = bier_sphere(k)?;
    let pairs = check::classifier_vs_oracle(k, &b)?;
    if let Some(x) = pairs.mismatches.first() {
        let mut s = String::new();
        write_pair_mismatch(&mut s, k, x);
        return Ok(Some(s));
    }
    writeln!(out, "classify: {} pairs, 0 mismatches", pairs.pairs).ok();
    let cmp = check::closed_vs_brute(k, &b, cap)?;
    if !cmp.agrees() {
        let mut s = format!(
            "counterexample:\n  K: m = {}, facets {}\n",
            k.ground_size(),
            report::facet_line(None, &k.facets())
        );
        for (i, j, a, bb) in &cmp.differences {
            writeln!(s, "  (i,j)=({i},{j}): closed {a}, brute {bb}").ok();
        }
        return Ok(Some(s));
    }
    writeln!(
        out,
        "betti: closed form = brute force ({} nonzero entries)",
        cmp.closed.len()
    )
    .ok();
    let h = toric::h_corollary_check(k, &b)?;
    if !h.passed() {
        return Ok(Some(format!(
            "counterexample:\n  K: m = {}, facets {}\n{}",
            k.ground_size(),
            report::facet_line(None, &k.facets()),
            report::hcheck_text(&h)
        )));
    }
    writeln!(out, "hcheck: {} rows hold", h.rows.len()).ok();
    if k.ground_size() >= 2 {
        toric::lambda_matrix(&b)?;
        let c = toric::check_concentration(k, &b)?;
        if !c.passed() {
            return Ok(Some(format!(
                "counterexample:\n  K: m = {}, facets {}\n  concentration fails at {:?}, torsion at {:?}\n",
                k.ground_size(),
                report::facet_line(None, &k.facets()),
                c.mismatches,
                c.torsion
            )));
        }
        writeln!(
            out,
            "toric: {} even subsets concentrated, torsion-free",
            c.checked
        )
        .ok();
    }
    Ok(None)
}

fn verify_one(config: &RunConfig, k: &Complex, out: &mut String) -> Result<i32> {
    let mut log = String::new();
    let failure = check_complex(k, config.cap, &mut log)?;
    out.push_str(&log);
    match failure {
        Some(text) => {
            out.push_str(&text);
            writeln!(out, "verdict: MISMATCH").ok();
            Ok(EXIT_MISMATCH)
        }
        None => {
            writeln!(out, "verdict: OK").ok();
            Ok(EXIT_OK)
        }
    }
}

fn corpus_verify(
    config: &RunConfig,
    exhaustive: usize,
    sizes: &[usize],
    count: usize,
    out: &mut String,
) -> Result<i32> {
    if exhaustive > 4 {
        return Err(Error::Parse("--exhaustive is limited to 4".into()));
    }
    let mut batches: Vec<(String, Vec<Complex>)> = (1..=exhaustive)
        .map(|m| (format!("m={m} exhaustive"), corpus::all_proper_complexes(m)))
        .collect();
    for &m in sizes {
        if m == 0 || 2 * m > config.cap {
            return Err(Error::CapExceeded {
                ground: 2 * m,
                cap: config.cap,
                calls: 1u128 << (2 * m).min(127),
            });
        }
        batches.push((
            format!("m={m} random (seed {})", config.seed),
            corpus::random_corpus(m, count, config.seed),
        ));
    }
    for (label, batch) in batches {
        let mut pairs = 0usize;
        for k in &batch {
            let mut scratch = String::new();
            if let Some(text) = check_complex(k, config.cap, &mut scratch)? {
                writeln!(out, "{label}: FAILED").ok();
                out.push_str(&text);
                writeln!(out, "verdict: MISMATCH").ok();
                return Ok(EXIT_MISMATCH);
            }
            pairs += 1usize << (2 * k.ground_size());
        }
        writeln!(
            out,
            "{label}: {} complexes, {pairs} pairs, 0 mismatches",
            batch.len()
        )
        .ok();
    }
    writeln!(out, "verdict: OK").ok();
    Ok(EXIT_OK)
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let outcome = run_args(std::env::args_os());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    outcome.code
}
