use std::fmt;
use std::path::Path;

use anyhow::{bail, Result};
use permuto_core::euler::{
    dhr_degree, hstar_of, kindred_snapper, macaulay_check, multidegree_and_progenitor,
    numerical_dimension, omega_from, snapper_from, MultiSnapper, Transfer,
};
use permuto_core::matroid::{pair_list, parse_matroid_file};
use permuto_core::tropical::bergman_fan;
use permuto_core::{
    build_polytope, catalog, initial_degeneration, sample_weight, Env, Error, InitialDegeneration,
    Matroid, SubmodularSpec, Subset, Weight,
};

use crate::args::{Cli, Command, Level};
use crate::criteria::{self, Settings};
use crate::report::Report;

/// A required flag is missing or malformed.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Machine-readable code for an error returned by [`run`].
pub fn error_code(err: &anyhow::Error) -> &'static str {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<Error>() {
            return e.code();
        }
        if cause.is::<UsageError>() {
            return "USAGE";
        }
        if cause.is::<std::io::Error>() {
            return "IO_ERROR";
        }
    }
    "INTERNAL"
}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

/// Executes one request. The report starts with the echoed inputs and ends
/// with a `replay=` line that reproduces it.
pub fn run(cli: &Cli) -> Result<Report> {
    let mut report = Report::new();
    report.kv("command", cli.command.name());
    for (key, value) in [
        ("matroid", &cli.matroid),
        ("polytope", &cli.polytope),
        ("weight", &cli.weight),
        ("vector", &cli.vector),
        ("sets", &cli.sets),
        ("poly", &cli.poly),
    ] {
        if let Some(v) = value {
            report.kv(key, v);
        }
    }
    if let Some(a) = cli.power {
        report.kv("power", a);
    }
    if let Some(ell) = cli.ell {
        report.kv("ell", ell);
    }
    if cli.command == Command::Selftest {
        report.kv("level", level_name(cli.level));
    }
    report.kv("seed", cli.seed);

    match cli.command {
        Command::Validate => validate(cli, &mut report)?,
        Command::Flats => flats(cli, &mut report)?,
        Command::Bergman => bergman(cli, &mut report)?,
        Command::Indeg => indeg(cli, &mut report)?,
        Command::Chi => chi(cli, &mut report)?,
        Command::Snapper | Command::Hstar => snapper(cli, &mut report)?,
        Command::Macaulay => macaulay(cli, &mut report)?,
        Command::Omega => omega(cli, &mut report)?,
        Command::Numdim => numdim(cli, &mut report)?,
        Command::Dilworth => dilworth(cli, &mut report)?,
        Command::Dhr => dhr(cli, &mut report)?,
        Command::Progenitor => progenitor(cli, &mut report)?,
        Command::Selftest => selftest(cli, &mut report),
    }
    report.kv("replay", replay_line(cli));
    Ok(report)
}

fn level_name(level: Level) -> &'static str {
    match level {
        Level::Fast => "fast",
        Level::Full => "full",
    }
}

/// Shell command line reproducing `cli` (without `--out`).
pub fn replay_line(cli: &Cli) -> String {
    let mut parts = vec!["permuto".to_string(), cli.command.name()];
    let mut flag = |name: &str, value: Option<String>| {
        if let Some(v) = value {
            parts.push(format!("--{name}"));
            parts.push(shell_quote(&v));
        }
    };
    flag("matroid", cli.matroid.clone());
    flag("polytope", cli.polytope.clone());
    flag("power", cli.power.map(|a| a.to_string()));
    flag("weight", cli.weight.clone());
    flag("vector", cli.vector.clone());
    flag("sets", cli.sets.clone());
    flag("poly", cli.poly.clone());
    flag("ell", cli.ell.map(|l| l.to_string()));
    if cli.command == Command::Selftest {
        flag("level", Some(level_name(cli.level).to_string()));
    }
    flag("seed", Some(cli.seed.to_string()));
    if cli.verbose {
        parts.push("--verbose".to_string());
    }
    parts.join(" ")
}

fn shell_quote(s: &str) -> String {
    let plain = !s.is_empty()
        && s
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || ",.:/_-=+".contains(c));
    if plain {
        s.to_string()
    } else {
        format!("'{}'", s.replace('\'', r"'\''"))
    }
}

fn matroid(cli: &Cli) -> Result<Matroid> {
    let expr = cli
        .matroid
        .as_deref()
        .ok_or_else(|| usage(format!("{} needs --matroid", cli.command.name())))?;
    match catalog(expr) {
        Ok(m) => Ok(m),
        // A bare path to a matroid file is accepted too.
        Err(Error::Parse(_)) if Path::new(expr).is_file() => {
            let text = std::fs::read_to_string(expr)
                .map_err(|e| Error::Io(format!("{expr}: {e}")))?;
            Ok(parse_matroid_file(&text)?)
        }
        Err(e) => Err(e.into()),
    }
}

fn polytope(cli: &Cli, m: &Matroid) -> Result<SubmodularSpec> {
    let expr = cli
        .polytope
        .as_deref()
        .ok_or_else(|| usage(format!("{} needs --polytope", cli.command.name())))?;
    Ok(build_polytope(expr, &Env::for_matroid(m))?)
}

fn power(cli: &Cli) -> Result<u64> {
    cli.power
        .ok_or_else(|| usage(format!("{} needs --power", cli.command.name())))
}

fn int_list(text: &str, what: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad {what} entry `{t}`")).into())
        })
        .collect()
}

fn weight(cli: &Cli, m: &Matroid, report: &mut Report) -> Result<Weight> {
    let w = match &cli.weight {
        Some(text) => Weight::certify_for(m, int_list(text, "weight")?)?,
        None => sample_weight(m, cli.seed)?,
    };
    report.kv("w", join(w.values()));
    if cli.verbose {
        let certificate = match w.certificate() {
            Some(permuto_core::tropical::Certificate::BalancedSums) => "balanced-sums",
            Some(permuto_core::tropical::Certificate::Battery(_)) => "battery",
            None => "none",
        };
        report.kv("certificate", certificate);
        report.kv("retries", w.retries());
    }
    Ok(w)
}

fn degeneration(cli: &Cli, m: &Matroid, report: &mut Report) -> Result<InitialDegeneration> {
    let w = weight(cli, m, report)?;
    let deg = initial_degeneration(m, &w)?;
    if cli.verbose {
        report.kv("components", deg.components().len());
        report.kv("support", deg.support().count());
    }
    Ok(deg)
}

fn join<T: ToString>(values: &[T]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn validate(cli: &Cli, report: &mut Report) -> Result<()> {
    let m = matroid(cli)?;
    report
        .kv("valid", true)
        .kv("n", m.n())
        .kv("r", m.rank())
        .kv("bases", m.bases().len())
        .kv("loopless", m.is_loopless())
        .kv("components", m.connected_components()?.len());
    if cli.verbose {
        for b in m.bases() {
            report.kv("basis", b);
        }
    }
    Ok(())
}

fn flats(cli: &Cli, report: &mut Report) -> Result<()> {
    let m = matroid(cli)?;
    let flats = m.proper_flats();
    report.kv("flats", flats.len());
    for f in flats {
        report.raw(format!("flat={f} rank={}", m.rank_of(f)));
    }
    Ok(())
}

fn bergman(cli: &Cli, report: &mut Report) -> Result<()> {
    let m = matroid(cli)?;
    let fan = bergman_fan(&m)?;
    report
        .kv("dim", fan.dim())
        .kv("maximal", fan.maximal_chains().len());
    for chain in fan.maximal_chains() {
        report.kv("cone", chain);
    }
    Ok(())
}

fn indeg(cli: &Cli, report: &mut Report) -> Result<()> {
    let m = matroid(cli)?;
    let deg = degeneration(cli, &m, report)?;
    report.kv("coefficient_sum", deg.coefficient_sum());
    for line in deg.report().lines() {
        report.raw(line);
    }
    Ok(())
}

fn chi(cli: &Cli, report: &mut Report) -> Result<()> {
    let m = matroid(cli)?;
    let p = polytope(cli, &m)?;
    let a = power(cli)?;
    let deg = degeneration(cli, &m, report)?;
    report.kv("chi", Transfer::new(&deg, &p)?.chi(a)?);
    Ok(())
}

fn snapper(cli: &Cli, report: &mut Report) -> Result<()> {
    let m = matroid(cli)?;
    let p = polytope(cli, &m)?;
    let deg = degeneration(cli, &m, report)?;
    let poly = snapper_from(&deg, &p)?;
    report.kv("degree", poly.degree());
    if cli.command == Command::Snapper {
        report.kv("snapper", poly.render());
    }
    let h = hstar_of(&poly)?;
    report.kv("hstar", &h);
    if cli.command == Command::Hstar || cli.verbose {
        report.raw(macaulay_check(h.as_slice()).to_string());
    }
    Ok(())
}

fn macaulay(cli: &Cli, report: &mut Report) -> Result<()> {
    let text = cli
        .vector
        .as_deref()
        .ok_or_else(|| usage("macaulay needs --vector"))?;
    let h: Vec<i128> = int_list(text, "vector")?.into_iter().map(i128::from).collect();
    report.raw(macaulay_check(&h).to_string());
    Ok(())
}

fn omega(cli: &Cli, report: &mut Report) -> Result<()> {
    let m = matroid(cli)?;
    let deg = degeneration(cli, &m, report)?;
    report.kv("omega", omega_from(&deg)?);
    Ok(())
}

fn numdim(cli: &Cli, report: &mut Report) -> Result<()> {
    let m = matroid(cli)?;
    let p = polytope(cli, &m)?;
    let (blocks, dim) = p.induced_partition();
    report
        .kv("numdim", numerical_dimension(&m, &p)?)
        .kv("dim", dim)
        .kv("blocks", blocks.iter().map(|b| format!("{{{b}}}")).collect::<Vec<_>>().join(""));
    Ok(())
}

fn dilworth(cli: &Cli, report: &mut Report) -> Result<()> {
    let m = matroid(cli)?;
    let d = m.dilworth_truncation()?;
    let pairs = pair_list(m.n());
    let label = |s: Subset| -> String {
        s.iter()
            .map(|k| format!("{}{}", pairs[k - 1].0, pairs[k - 1].1))
            .collect::<Vec<_>>()
            .join(",")
    };
    report
        .kv("pairs", pairs.len())
        .kv("rank", d.rank())
        .kv("bases", d.bases().len());
    if cli.verbose {
        for &b in d.bases() {
            report.kv("basis", label(b));
        }
    }
    Ok(())
}

fn dhr(cli: &Cli, report: &mut Report) -> Result<()> {
    let m = matroid(cli)?;
    let text = cli.sets.as_deref().ok_or_else(|| usage("dhr needs --sets"))?;
    let family = parse_sets(text, m.n())?;
    report.kv("dhr", dhr_degree(&m, &family)?);
    Ok(())
}

fn parse_sets(text: &str, n: usize) -> Result<Vec<Subset>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for part in text.split(';') {
        let mut s = Subset::EMPTY;
        for i in int_list(part, "set")? {
            if i < 1 || i as usize > n {
                bail!(Error::Parse(format!("set element {i} outside [1, {n}]")));
            }
            s = s.insert(i as usize);
        }
        out.push(s);
    }
    Ok(out)
}

fn progenitor(cli: &Cli, report: &mut Report) -> Result<()> {
    let ms = match (&cli.poly, &cli.matroid) {
        (Some(text), _) => MultiSnapper::parse(text, cli.ell)?,
        (None, Some(_)) => kindred_snapper(&matroid(cli)?),
        (None, None) => bail!(usage("progenitor needs --poly or --matroid")),
    };
    let md = multidegree_and_progenitor(&ms)?;
    let top = MultiSnapper::new(ms.ell(), md.top.clone())?;
    report
        .kv("kindred", &ms)
        .kv("degree", md.degree)
        .kv("multidegree", &top)
        .kv("progenitor.n", md.progenitor.n())
        .kv("progenitor.r", md.progenitor.rank());
    for b in md.progenitor.bases() {
        report.kv("basis", b);
    }
    Ok(())
}

fn selftest(cli: &Cli, report: &mut Report) {
    let outcomes = criteria::run_all(Settings::new(cli.level, cli.seed));
    let passed = outcomes.iter().filter(|o| o.passed).count();
    for o in &outcomes {
        report.raw(o.line());
        eprintln!("timing.{}={:.3}s", o.id, o.elapsed.as_secs_f64());
    }
    let verdict = if passed == outcomes.len() { "pass" } else { "fail" };
    report.kv("selftest", format!("{verdict} passed={passed}/{}", outcomes.len()));
}

/// Parses and runs; used by `main` and the integration tests.
pub fn run_args<I, T>(args: I) -> Result<Report>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    let cli = Cli::try_parse_from(args).map_err(|e| usage(e.to_string()))?;
    run(&cli)
}
