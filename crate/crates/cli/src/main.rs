//! `strandlab`: Betti tables, strand and subadditivity checks, constructions
//! and a seeded property harness.
//!
//! Exit codes: 0 pass, 1 property violation or failed certificate, 2 usage or
//! input error.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use strandlab::analysis::{check_strand_theorem, strand, vanishing_table, SubadditivityMode};
use strandlab::constructions::{recheck_counterexample, CounterexampleCertificate};
use strandlab::harness::{run_harness, CorpusSpec, FailureBundle, HarnessReport, RunConfig};
use strandlab::{
    betti_table, build_counterexample, check_subadditivity, derived_stats, eagon_reiner_table, hochster_table,
    parse_input, remark_complex, t_vector, verify_counterexample, verify_remark, BettiTable, Convention,
    CounterexampleOptions, FieldSpec, Oracle, Prepared, DEFAULT_CAP,
};

#[derive(Parser)]
#[command(name = "strandlab", version, about = "Graded Betti tables of monomial ideals and their strands")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// gf2, gf<p> or q
    #[arg(long, global = true, default_value = "gf2")]
    field: FieldSpec,
    /// Largest vertex count for the subset sweeps
    #[arg(long, global = true, env = "STRANDLAB_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true, value_enum, default_value_t = OracleArg::Hochster)]
    oracle: OracleArg,
    /// Worker threads; never changes the output
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleArg {
    Hochster,
    Dual,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Ideal,
    Quotient,
}

#[derive(Subcommand)]
enum Command {
    /// Betti table of a graph, complex or monomial ideal ("-" reads stdin)
    Betti {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ConventionArg::Quotient)]
        convention: ConventionArg,
    },
    /// Strands and the vanishing table
    Strands {
        input: PathBuf,
        /// Comma-separated strands that must be connected; input must be generated in degree 2
        #[arg(long, value_delimiter = ',')]
        expect_connected: Vec<usize>,
    },
    /// Subadditivity of the maximal shifts
    Subadd {
        input: PathBuf,
        #[arg(long, default_value_t = 3, conflicts_with = "all_pairs")]
        b_max: usize,
        #[arg(long)]
        all_pairs: bool,
    },
    /// Build a complex with a disconnected strand
    Construct {
        #[command(subcommand)]
        kind: Construction,
    },
    /// Run the property harness over a seeded or exhaustive corpus
    Fuzz(FuzzArgs),
    /// Re-verify a certificate, failure bundle or harness report
    Recheck { file: PathBuf },
}

#[derive(Subcommand)]
enum Construction {
    /// Join of a simplex boundary with its barycentric subdivision
    Remark {
        #[arg(long, default_value_t = 3)]
        j: usize,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Flag sphere glued to an octahedral sphere on spread-out vertices
    Counterexample {
        #[arg(long, default_value_t = 2)]
        i: usize,
        #[arg(long, default_value_t = 2)]
        subdivisions: usize,
        #[arg(long, default_value_t = 4)]
        max_subdivisions: usize,
        /// Allow i > 2
        #[arg(long)]
        large: bool,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct FuzzArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 4)]
    n_min: usize,
    #[arg(long, default_value_t = 9)]
    n_max: usize,
    /// Edge probability as a decimal with at most three places
    #[arg(long, default_value = "0.4", value_parser = parse_permille)]
    p: u32,
    #[arg(long, default_value_t = 200)]
    count: usize,
    /// Enumerate every graph on this many vertices instead of sampling
    #[arg(long)]
    exhaustive: Option<usize>,
    /// Cross-check with the dual oracle on every k-th instance (0 = never)
    #[arg(long, default_value_t = 4)]
    dual_every: usize,
    /// Extra fields to run besides --field
    #[arg(long, value_delimiter = ',')]
    also: Vec<FieldSpec>,
    /// Write the canonical JSON report here
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write one replayable JSON bundle per failure into this directory
    #[arg(long)]
    bundles: Option<PathBuf>,
}

/// Parses "0.4" into 400 without going through floating point.
fn parse_permille(s: &str) -> Result<u32, String> {
    let bad = || format!("expected a probability like 0.4, got {s:?}");
    let (whole, frac) = s.split_once('.').unwrap_or((s, ""));
    if frac.len() > 3 || !frac.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let whole: u32 = if whole.is_empty() { 0 } else { whole.parse().map_err(|_| bad())? };
    let frac: u32 = if frac.is_empty() { 0 } else { format!("{frac:0<3}").parse().map_err(|_| bad())? };
    let permille = whole.checked_mul(1000).and_then(|w| w.checked_add(frac)).ok_or_else(bad)?;
    if permille > 1000 {
        return Err(bad());
    }
    Ok(permille)
}

enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    fn from_pass(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

fn read_input(path: &Path) -> anyhow::Result<Prepared> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let input = parse_input(&text).with_context(|| format!("parsing {}", path.display()))?;
    let prepared = input.prepare()?;
    if let Some(p) = &prepared.polarization {
        eprintln!(
            "note: ideal is not squarefree; polarized to {} variables (Betti numbers are unchanged)",
            p.ideal.n()
        );
    }
    Ok(prepared)
}

/// The table, plus whether the two oracles agreed when both ran.
fn compute_table(p: &Prepared, g: &Global) -> anyhow::Result<(BettiTable, Option<bool>)> {
    Ok(match g.oracle {
        OracleArg::Hochster => (betti_table(&p.complex, g.field, g.cap, Oracle::Hochster)?, None),
        OracleArg::Dual => (betti_table(&p.complex, g.field, g.cap, Oracle::Dual)?, None),
        OracleArg::Both => {
            let h = hochster_table(&p.complex, g.field, g.cap)?;
            let d = eagon_reiner_table(&p.complex, g.field, g.cap)?;
            if !h.same_entries(&d) {
                eprintln!("oracle disagreement!\nHochster:\n{}Eagon-Reiner:\n{}", h.to_text(Convention::Ideal), d.to_text(Convention::Ideal));
            }
            let agree = h.same_entries(&d);
            (h, Some(agree))
        }
    })
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("values serialize"));
}

fn cmd_betti(input: &Path, convention: ConventionArg, g: &Global) -> anyhow::Result<Verdict> {
    let p = read_input(input)?;
    let (table, agree) = compute_table(&p, g)?;
    let conv = match convention {
        ConventionArg::Ideal => Convention::Ideal,
        ConventionArg::Quotient => Convention::Quotient,
    };
    match g.format {
        Format::Text => print!("{}", table.to_text(conv)),
        Format::Csv => print!("{}", table.to_csv(conv)),
        Format::Json => {
            let mut v = table.to_json(conv);
            if let Some(a) = agree {
                v["oracles_agree"] = json!(a);
            }
            print_json(&v);
        }
    }
    Ok(Verdict::from_pass(agree != Some(false)))
}

fn cmd_strands(input: &Path, expect: &[usize], g: &Global) -> anyhow::Result<Verdict> {
    let p = read_input(input)?;
    if !expect.is_empty() && !p.generated_in_degree_two() {
        bail!("--expect-connected needs an ideal generated in degree 2");
    }
    let (table, agree) = compute_table(&p, g)?;
    if !expect.is_empty() {
        check_strand_theorem(&table)?;
    }
    let vt = vanishing_table(&table);
    let strands: Vec<_> = vt.rows.iter().map(|(j, _)| strand(&table, *j)).collect();
    let broken: Vec<usize> = expect.iter().copied().filter(|&j| !strand(&table, j).connected).collect();
    match g.format {
        Format::Text => {
            for s in &strands {
                let state = match s.gap_witness {
                    None => "connected".to_string(),
                    Some((a, b)) => format!("disconnected (nonzero at {a} and {b}, zero between)"),
                };
                println!("strand {}: {:?} {state}", s.j, s.values);
            }
            print!("vanishing table:\n{vt}");
            for j in &broken {
                println!("expected strand {j} to be connected");
            }
        }
        Format::Csv => {
            println!("j,i,value");
            for s in &strands {
                for (i, v) in s.values.iter().enumerate() {
                    println!("{},{i},{v}", s.j);
                }
            }
        }
        Format::Json => print_json(&json!({
            "strands": strands,
            "vanishing": vt,
            "expect_connected": expect,
            "failed_expectations": broken,
        })),
    }
    Ok(Verdict::from_pass(broken.is_empty() && agree != Some(false)))
}

fn cmd_subadd(input: &Path, b_max: usize, all_pairs: bool, g: &Global) -> anyhow::Result<Verdict> {
    let p = read_input(input)?;
    let (table, agree) = compute_table(&p, g)?;
    let t = t_vector(&table);
    let mode = if all_pairs { SubadditivityMode::AllPairs } else { SubadditivityMode::BMax(b_max) };
    let report = check_subadditivity(&t, mode);
    // the proved cases cover ideals generated in degree 2
    let proved: Vec<_> = if p.generated_in_degree_two() { report.proved_case_violations().copied().collect() } else { Vec::new() };
    let stats = derived_stats(&t);
    match g.format {
        Format::Text => {
            let shown: Vec<String> = t.as_slice().iter().map(|x| x.map_or("-".into(), |v| v.to_string())).collect();
            println!("t = ({})", shown.join(", "));
            println!("pd = {}, reg = {}", stats.projective_dimension, stats.regularity);
            for &(a, b) in &report.checked {
                let (ta, tb, tab) = (t.get(a).unwrap(), t.get(b).unwrap(), t.get(a + b).unwrap());
                let rel = if tab < ta + tb { "<" } else if tab == ta + tb { "= (tight)" } else { "> VIOLATION" };
                println!("t_{} = {tab} {rel} t_{a} + t_{b} = {}", a + b, ta + tb);
            }
            println!("{} pairs checked, {} violations ({} in the proved range)", report.checked.len(), report.violations.len(), proved.len());
        }
        Format::Csv => {
            println!("a,b,t_a_plus_b,t_a_plus_t_b");
            for &(a, b) in &report.checked {
                println!("{a},{b},{},{}", t.get(a + b).unwrap(), t.get(a).unwrap() + t.get(b).unwrap());
            }
        }
        Format::Json => print_json(&json!({
            "report": report,
            "stats": stats,
            "proved_case_violations": proved,
        })),
    }
    Ok(Verdict::from_pass(proved.is_empty() && agree != Some(false)))
}

fn write_json(dir: &Path, name: &str, value: Value) -> anyhow::Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let path = dir.join(name);
    let text = serde_json::to_string_pretty(&value)?;
    fs::write(&path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

fn cmd_construct(kind: &Construction, g: &Global) -> anyhow::Result<Verdict> {
    match kind {
        Construction::Remark { j, verify, out } => {
            let d = remark_complex(*j)?;
            if let Some(dir) = out {
                write_json(dir, "complex.json", serde_json::to_value(&d)?)?;
            }
            if !verify {
                match g.format {
                    Format::Json => print_json(&serde_json::to_value(&d)?),
                    _ => println!("join complex on {} vertices, f-vector {:?}", d.n(), d.f_vector()),
                }
                return Ok(Verdict::Pass);
            }
            let report = verify_remark(*j, g.field, g.cap)?;
            if let Some(dir) = out {
                write_json(dir, "report.json", serde_json::to_value(&report)?)?;
            }
            match g.format {
                Format::Json => print_json(&serde_json::to_value(&report)?),
                Format::Csv => {
                    println!("i,value");
                    for (i, v) in report.strand.values.iter().enumerate() {
                        println!("{i},{v}");
                    }
                }
                Format::Text => {
                    println!("join complex on {} vertices over {}", report.n, report.field);
                    println!("strand {}: {:?}", report.j, report.strand.values);
                    println!("strand 2 connected: {}", report.strand2_connected);
                    println!("verdict: {}", if report.passed { "certified" } else { "NOT certified" });
                }
            }
            Ok(Verdict::from_pass(report.passed))
        }
        Construction::Counterexample { i, subdivisions, max_subdivisions, large, verify, out } => {
            let opts = CounterexampleOptions {
                initial_subdivisions: *subdivisions,
                max_subdivisions: (*max_subdivisions).max(*subdivisions),
                allow_large: *large,
            };
            let mut cert = build_counterexample(*i, opts)?;
            if *verify {
                cert = verify_counterexample(cert, g.field);
            }
            if let Some(dir) = out {
                write_json(dir, "complex.json", serde_json::to_value(&cert.complex)?)?;
                write_json(dir, "certificate.json", serde_json::to_value(&cert)?)?;
            }
            let valid = cert.checks.as_ref().is_none_or(|c| c.valid);
            match g.format {
                Format::Json => print_json(&serde_json::to_value(&cert)?),
                _ => print_certificate(&cert),
            }
            Ok(Verdict::from_pass(valid))
        }
    }
}

fn print_certificate(cert: &CounterexampleCertificate) {
    println!(
        "i = {}, {} subdivisions, {} vertices, {} facets",
        cert.i,
        cert.subdivisions,
        cert.complex.n(),
        cert.complex.facets().len()
    );
    println!("A = {:?}, antipodal pair {:?}", cert.spread, cert.antipodal);
    let Some(c) = &cert.checks else {
        println!("not verified (pass --verify)");
        return;
    };
    println!("field: {}", c.field);
    println!("flag: {} (clique scan: {})", c.flag, c.flag_by_cliques);
    println!("min pairwise distance in A: {:?}", c.min_pairwise_distance);
    println!("reduced betti {} of the complex: {}", cert.i, c.betti_complex);
    println!("reduced betti {} of the slice: {}", cert.i, c.betti_slice);
    println!("vertex deletions with nonzero reduced betti {}: {} of {}", cert.i, c.nonzero_deletions.len(), c.deletions_checked);
    let s = &c.strand;
    println!(
        "strand {}: position {} >= {}, position {} = {}, position {} = {}",
        s.j, s.slice_index, s.slice_lower_bound, s.gap_index, s.gap_value, s.top_index, s.top_value
    );
    for f in &c.failures {
        println!("failure: {f}");
    }
    println!("verdict: {}", if c.valid { "valid" } else { "INVALID" });
}

fn cmd_fuzz(a: &FuzzArgs, g: &Global) -> anyhow::Result<Verdict> {
    let corpus = match a.exhaustive {
        Some(n) => CorpusSpec::Exhaustive { n },
        None => CorpusSpec::Random { seed: a.seed, n_min: a.n_min, n_max: a.n_max, edge_permille: a.p, count: a.count },
    };
    let mut fields = vec![g.field];
    fields.extend(a.also.iter().copied().filter(|f| *f != g.field));
    let config = RunConfig { corpora: vec![corpus], fields, cap: g.cap, dual_every: a.dual_every };
    let report = run_harness(&config, workers(g))?;
    if let Some(path) = &a.out {
        fs::write(path, report.canonical_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(dir) = &a.bundles {
        for f in &report.failures {
            write_json(dir, &format!("failure-{}-{}-{}.json", f.corpus, f.index, f.field), serde_json::to_value(f)?)?;
        }
    }
    match g.format {
        Format::Json => print!("{}", report.canonical_json()),
        Format::Csv => {
            println!("index,field,n,edges,passed");
            for r in report.corpora.iter().flat_map(|c| &c.instances) {
                println!("{},{},{},{},{}", r.index, r.field, r.graph.n(), r.graph.edge_count(), r.passed());
            }
        }
        Format::Text => print!("{}", report.summary_text()),
    }
    Ok(Verdict::from_pass(report.passed()))
}

fn cmd_recheck(file: &Path, g: &Global) -> anyhow::Result<Verdict> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let value: Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", file.display()))?;
    if value.get("spread").is_some() {
        let cert: CounterexampleCertificate = serde_json::from_value(value)?;
        // the stored field wins unless one is given explicitly
        let explicit = std::env::args().any(|a| a == "--field" || a.starts_with("--field="));
        let r = recheck_counterexample(&cert, explicit.then_some(g.field));
        let rechecked = CounterexampleCertificate { checks: Some(r.checks.clone()), ..cert.clone() };
        match g.format {
            Format::Json => print_json(&serde_json::to_value(&r)?),
            _ => {
                print_certificate(&rechecked);
                if cert.checks.is_some() {
                    println!("matches stored checks: {}", r.matches_stored);
                }
            }
        }
        return Ok(Verdict::from_pass(r.valid && (cert.checks.is_none() || r.matches_stored)));
    }
    if value.get("reasons").is_some() {
        let bundle: FailureBundle = serde_json::from_value(value)?;
        let replay = bundle.replay()?;
        let reproduced = replay == bundle.result;
        match g.format {
            Format::Json => print_json(&json!({ "reproduced": reproduced, "failures": replay.failures(), "result": replay })),
            _ => {
                println!("instance {} over {}: reproduced = {reproduced}", bundle.index, bundle.field);
                for f in replay.failures() {
                    println!("failure: {f}");
                }
            }
        }
        return Ok(Verdict::from_pass(replay.passed()));
    }
    if value.get("summary").is_some() && value.get("config").is_some() {
        let stored: HarnessReport = serde_json::from_value(value)?;
        let fresh = run_harness(&stored.config, workers(g))?;
        let identical = fresh.canonical_json() == stored.canonical_json();
        match g.format {
            Format::Json => print_json(&json!({ "identical": identical, "passed": fresh.passed() })),
            _ => {
                print!("{}", fresh.summary_text());
                println!("identical to stored report: {identical}");
            }
        }
        return Ok(Verdict::from_pass(identical && fresh.passed()));
    }
    bail!("{} is not a certificate, failure bundle or harness report", file.display())
}

fn workers(g: &Global) -> usize {
    g.workers.unwrap_or_else(rayon::current_num_threads)
}

fn run(cli: Cli) -> anyhow::Result<Verdict> {
    let g = &cli.global;
    if let Some(w) = g.workers {
        if w == 0 {
            bail!("--workers must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(w).build_global()?;
    }
    match &cli.command {
        Command::Betti { input, convention } => cmd_betti(input, *convention, g),
        Command::Strands { input, expect_connected } => cmd_strands(input, expect_connected, g),
        Command::Subadd { input, b_max, all_pairs } => cmd_subadd(input, *b_max, *all_pairs, g),
        Command::Construct { kind } => cmd_construct(kind, g),
        Command::Fuzz(a) => cmd_fuzz(a, g),
        Command::Recheck { file } => cmd_recheck(file, g),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permille_parsing() {
        assert_eq!(parse_permille("0.4"), Ok(400));
        assert_eq!(parse_permille("0.125"), Ok(125));
        assert_eq!(parse_permille("1"), Ok(1000));
        assert_eq!(parse_permille(".05"), Ok(50));
        assert!(parse_permille("0.1234").is_err());
        assert!(parse_permille("1.5").is_err());
        assert!(parse_permille("-0.1").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
