use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use octic_core::algebra::parse::parse_rational;
use octic_core::algebra::rational::same_square_class;
use octic_core::arrangement::{Arrangement, Violation};
use octic_core::counting::{
    count_double_cover, good_primes, read_cache, write_cache, CachedCount, CountResult, FpOctic,
};
use octic_core::formats::{
    analysis_json, certificate_json, counts_json, load_arrangement, load_case, load_twist, parse_prime_range,
    splitting_json, twist_json, CaseBundle,
};
use octic_core::involution::{certify, classify_twist};
use octic_core::modforms::{ap_elliptic, load_table, verify_splitting, weil_check};
use octic_core::Rat;

#[derive(Parser)]
#[command(name = "octic", version, about = "Exact checks for double octic threefolds and their involutions")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Singular strata and admissibility of an arrangement.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        params: Params,
    },
    /// Run every check on a family case and print the certificate.
    Certify { case: PathBuf },
    /// Count points of the double cover over good primes.
    Count {
        file: PathBuf,
        #[command(flatten)]
        params: Params,
        /// Inclusive prime range, e.g. 3..97.
        #[arg(long, default_value = "3..97")]
        primes: String,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the counts to this cache file.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Check that point counts split as a cubic plus the two forms.
    Verify {
        case: PathBuf,
        /// Weight-4 coefficient table; overrides the case file.
        #[arg(long)]
        f4: Option<PathBuf>,
        /// Weight-2 coefficient table; overrides the case file.
        #[arg(long)]
        f2: Option<PathBuf>,
        /// Count cache to use instead of counting.
        #[arg(long)]
        counts: Option<PathBuf>,
        /// Prime range to count when no cache is given.
        #[arg(long)]
        primes: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Compute the quadratic twist carried by a map between two family members.
    Twist { case: PathBuf },
}

#[derive(clap::Args)]
struct Params {
    /// Value of the parameter A.
    #[arg(long = "A", allow_hyphen_values = true, requires = "b")]
    a: Option<String>,
    /// Value of the parameter B.
    #[arg(long = "B", allow_hyphen_values = true, requires = "a")]
    b: Option<String>,
}

impl Params {
    fn apply(&self, arr: Arrangement) -> Result<Arrangement> {
        match (&self.a, &self.b) {
            (Some(a), Some(b)) => {
                let a = parse_rational(a).map_err(|e| anyhow!("--A: {e}"))?;
                let b = parse_rational(b).map_err(|e| anyhow!("--B: {e}"))?;
                Ok(arr.specialize(&a, &b)?)
            }
            _ if arr.is_parametric() => bail!("{} depends on (A : B); pass --A and --B", arr.name()),
            _ => Ok(arr),
        }
    }
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.cmd {
        Command::Analyze { file, params } => analyze(cli.json, file, params),
        Command::Certify { case } => certify_case(cli.json, case),
        Command::Count {
            file,
            params,
            primes,
            jobs,
            cache,
        } => {
            let arr = params.apply(load_arrangement(file)?)?;
            let (lo, hi) = parse_prime_range(primes)?;
            count(cli.json, &arr, lo, hi, *jobs, cache.as_deref())
        }
        Command::Verify {
            case,
            f4,
            f2,
            counts,
            primes,
            jobs,
        } => verify(cli.json, case, f4.as_deref(), f2.as_deref(), counts.as_deref(), primes.as_deref(), *jobs),
        Command::Twist { case } => twist(cli.json, case),
    }
}

fn emit(json: bool, value: serde_json::Value, text: String) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        print!("{text}");
    }
}

fn outcome(ok: bool) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn fmt_point(p: &[Rat; 4]) -> String {
    let c: Vec<String> = p.iter().map(|c| c.to_string()).collect();
    format!("({})", c.join(" : "))
}

fn analyze(json: bool, file: &Path, params: &Params) -> Result<Outcome> {
    let arr = params.apply(load_arrangement(file)?)?;
    let locus = arr.singular_strata()?;
    let adm = arr.admissibility()?;
    let mut s = String::new();
    writeln!(s, "arrangement {}", arr.name())?;
    if let Some(src) = arr.source() {
        writeln!(s, "source: {src}")?;
    }
    for (i, l) in arr.labels().iter().enumerate() {
        writeln!(s, "  h{} = {l}", i + 1)?;
    }
    writeln!(s, "lines ({}):", locus.lines.len())?;
    for l in &locus.lines {
        writeln!(
            s,
            "  m={}  {} {}  planes {{{}}}",
            l.multiplicity(),
            fmt_point(&l.basis[0]),
            fmt_point(&l.basis[1]),
            arr.label_set(&l.planes).join(", ")
        )?;
    }
    writeln!(s, "points ({}):", locus.points.len())?;
    for p in &locus.points {
        writeln!(
            s,
            "  q={}  {}  planes {{{}}}{}",
            p.multiplicity(),
            fmt_point(&p.point),
            arr.label_set(&p.planes).join(", "),
            if p.on_triple_line { "  on_triple_line" } else { "" }
        )?;
    }
    if adm.passes() {
        writeln!(s, "admissible: pass")?;
    } else {
        writeln!(s, "admissible: fail")?;
        for v in &adm.violations {
            match v {
                Violation::PointTooSingular { point, planes } => writeln!(
                    s,
                    "  {} planes through the point {}: {{{}}}",
                    planes.len(),
                    fmt_point(point),
                    arr.label_set(planes).join(", ")
                )?,
                Violation::LineTooSingular { basis, planes } => writeln!(
                    s,
                    "  {} planes through the line {} {}: {{{}}}",
                    planes.len(),
                    fmt_point(&basis[0]),
                    fmt_point(&basis[1]),
                    arr.label_set(planes).join(", ")
                )?,
            }
        }
    }
    emit(json, analysis_json(&arr, &locus, &adm), s);
    Ok(outcome(adm.passes()))
}

fn certify_case(json: bool, path: &Path) -> Result<Outcome> {
    let bundle = load_case(path)?;
    let cert = certify(&bundle.case);
    let mut s = String::new();
    writeln!(s, "case {}  form {}  tau0 = {}", cert.name, cert.form, cert.tau0)?;
    if let Some(src) = &bundle.source {
        writeln!(s, "source: {src}")?;
    }
    for v in &cert.verdicts {
        writeln!(s, "{}: {} ({})", v.check, v.status, v.witness)?;
    }
    for n in &cert.notes {
        writeln!(s, "note: {n}")?;
    }
    writeln!(s, "conclusion: {}", cert.conclusion)?;
    emit(json, certificate_json(&cert), s);
    Ok(outcome(cert.is_certified()))
}

fn run_counts(arr: &Arrangement, lo: u64, hi: u64, jobs: usize) -> Result<(Vec<CountResult>, Vec<octic_core::counting::Exclusion>)> {
    let gp = good_primes(arr, lo, hi)?;
    let mut results = Vec::with_capacity(gp.good.len());
    for &p in &gp.good {
        let r = count_double_cover(&FpOctic::from_arrangement(arr, p)?, jobs)?;
        eprintln!("p = {p}: {:.3} s", r.elapsed.as_secs_f64());
        results.push(r);
    }
    Ok((results, gp.excluded))
}

fn count(json: bool, arr: &Arrangement, lo: u64, hi: u64, jobs: usize, cache: Option<&Path>) -> Result<Outcome> {
    let start = Instant::now();
    let (results, excluded) = run_counts(arr, lo, hi, jobs)?;
    eprintln!("total: {:.3} s", start.elapsed().as_secs_f64());
    if let Some(path) = cache {
        let entries: Vec<CachedCount> = results.iter().map(CachedCount::from).collect();
        write_cache(path, &entries)?;
    }
    let mut s = String::new();
    writeln!(s, "{:>8} {:>16} {:>14} {:>10}", "p", "N_p", "char_sum", "zeros")?;
    for r in &results {
        writeln!(s, "{:>8} {:>16} {:>14} {:>10}", r.p, r.n_points, r.character_sum, r.zero_count)?;
    }
    for e in &excluded {
        writeln!(s, "skipped p = {}: {}", e.p, e.reason)?;
    }
    if results.is_empty() {
        writeln!(s, "no good primes in {lo}..{hi}")?;
    }
    emit(json, counts_json(&results, &excluded), s);
    Ok(Outcome::Pass)
}

fn case_counts(bundle: &CaseBundle, counts: Option<&Path>, primes: Option<&str>, jobs: usize) -> Result<Vec<CachedCount>> {
    if let Some(path) = counts.map(Path::to_path_buf).or_else(|| bundle.counts.clone()) {
        return Ok(read_cache(&path)?);
    }
    let Some(family) = &bundle.case.arrangement else {
        bail!("no counts given and the arrangement equations are not supplied");
    };
    let arr = family.specialize_tau(&bundle.case.tau0)?;
    let (lo, hi) = match primes {
        Some(r) => parse_prime_range(r)?,
        None => bundle.primes.ok_or_else(|| anyhow!("no prime range; pass --primes"))?,
    };
    let (results, _) = run_counts(&arr, lo, hi, jobs)?;
    Ok(results.iter().map(CachedCount::from).collect())
}

fn verify(
    json: bool,
    path: &Path,
    f4: Option<&Path>,
    f2: Option<&Path>,
    counts: Option<&Path>,
    primes: Option<&str>,
    jobs: usize,
) -> Result<Outcome> {
    let bundle = load_case(path)?;
    let table = |flag: Option<&Path>, fallback: &Option<PathBuf>, name: &str| -> Result<_> {
        let p = flag
            .map(Path::to_path_buf)
            .or_else(|| fallback.clone())
            .ok_or_else(|| anyhow!("no {name} coefficient file; pass --{name}"))?;
        load_table(&p).with_context(|| format!("loading --{name}"))
    };
    let f4 = table(f4, &bundle.f4, "f4")?;
    let f2 = table(f2, &bundle.f2, "f2")?;
    let counts = case_counts(&bundle, counts, primes, jobs)?;
    let rep = verify_splitting(&counts, &f4, &f2)?;

    let weil4 = weil_check(&f4);
    let weil2 = weil_check(&f2);
    let mut oracle_mismatch = Vec::new();
    if let Some(e) = &bundle.elliptic {
        for (&p, &a) in &f2.coeffs {
            if f2.level % p == 0 {
                continue;
            }
            match ap_elliptic(e, p) {
                Ok(b) if b != a => oracle_mismatch.push((p, a, b)),
                _ => {}
            }
        }
    }

    let mut s = String::new();
    writeln!(s, "case {}  f4 = {}  f2 = {}", bundle.case.name, f4.label, f2.label)?;
    writeln!(s, "D(p) = N_p + a_p + p b_p at p = {:?}", rep.primes)?;
    if !rep.skipped.is_empty() {
        writeln!(s, "no coefficients for p = {:?}", rep.skipped)?;
    }
    writeln!(s, "fit through p = {:?}: Q(p) = {}", rep.fit_primes(), rep.q_string())?;
    writeln!(s, "integer coefficients: {}  monic: {}", rep.integer_fit, rep.monic)?;
    writeln!(s, "{:>8} {:>20} {:>12}", "p", "D(p)", "residual")?;
    let fitted = rep.fit_primes().len();
    for (i, (p, d)) in rep.discrepancies.iter().enumerate() {
        let r = if i < fitted {
            "fit".to_string()
        } else {
            rep.residuals[i - fitted].1.to_string()
        };
        writeln!(s, "{p:>8} {d:>20} {r:>12}")?;
    }
    writeln!(s, "weil bound {}: {}", f4.label, if weil4.passes() { "pass" } else { "fail" })?;
    writeln!(s, "weil bound {}: {}", f2.label, if weil2.passes() { "pass" } else { "fail" })?;
    if bundle.elliptic.is_some() {
        for (p, a, b) in &oracle_mismatch {
            writeln!(s, "elliptic oracle: a_{p} = {b}, table has {a}")?;
        }
        writeln!(s, "elliptic oracle: {}", if oracle_mismatch.is_empty() { "pass" } else { "fail" })?;
    }
    let ok = rep.pass && weil4.passes() && weil2.passes() && oracle_mismatch.is_empty();
    writeln!(s, "splitting: {}", if rep.pass { "pass" } else { "fail" })?;

    let mut value = splitting_json(&rep);
    value["weil"] = json!({ "f4": weil4.violations, "f2": weil2.violations });
    value["elliptic_mismatches"] = json!(oracle_mismatch);
    emit(json, value, s);
    Ok(outcome(ok))
}

fn twist(json: bool, path: &Path) -> Result<Outcome> {
    let Some(case) = load_twist(path)? else {
        bail!("{}: arrangement equations not supplied (EXTERNAL)", path.display());
    };
    let t = match classify_twist(&case.f_src, &case.f_dst, &case.map, &case.e) {
        Ok(t) => t,
        Err(e) => {
            let msg = format!("twist {}: {e}\n", case.name);
            emit(json, json!({ "name": case.name, "error": e.to_string(), "match": false }), msg);
            return Ok(Outcome::Fail);
        }
    };
    let matches = same_square_class(&t.class, &case.expected)?;
    let mut s = String::new();
    writeln!(s, "twist {}", case.name)?;
    writeln!(s, "f_dst(M x) = ({}) f_src(x)", t.mu)?;
    writeln!(s, "computed class: {}", t.class)?;
    writeln!(s, "expected class: {}", case.expected)?;
    writeln!(s, "match: {}", if matches { "pass" } else { "fail" })?;
    emit(json, twist_json(&case.name, &t, &case.expected, matches), s);
    Ok(outcome(matches))
}
