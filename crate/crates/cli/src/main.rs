//! `invcount` command-line front end.
//!
//! Exit codes: 0 pass, 1 verification mismatch, 2 usage error,
//! 3 resource bound exceeded, 4 network or fixture error.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use invcount::bijections::{coin_removal, format_sequence, table_to_partition, verify_map};
use invcount::counts::Avoid321Table;
use invcount::harness::{
    entry, entry_for_id, oeis_check, validate_id, verify_all, FixtureStore, OeisCheck, Runner,
};
use invcount::objects::{even_fountains_of_size, partitions_of, PartitionMode};
use invcount::oracle::AvoiderQuery;
use invcount::report::{CountReport, Method};
use invcount::{Error, PatternSet};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "invcount", version, about = "Count indecomposable permutations by inversions under pattern restrictions")]
struct Cli {
    /// Directory of OEIS b-files (default: $INVCOUNT_FIXTURE_DIR, then the shipped fixtures).
    #[arg(long, global = true)]
    fixtures: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count |I_k(patterns)| for k = 0..=max-k.
    Count {
        #[arg(long)]
        patterns: PatternSet,
        #[arg(long)]
        max_k: usize,
        #[arg(long, default_value = "all", value_parser = parse_method)]
        method: Method,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List the avoiders with exactly k inversions.
    Enumerate {
        #[arg(long)]
        patterns: PatternSet,
        #[arg(long)]
        k: usize,
        /// Include decomposable permutations (needs an increasing pattern).
        #[arg(long)]
        decomposable: bool,
    },
    /// Run every cross-check up to max-k.
    Verify {
        #[arg(long, default_value_t = 10)]
        max_k: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare computed terms with an OEIS b-file.
    Oeis {
        #[arg(long, conflicts_with = "id", required_unless_present = "id")]
        patterns: Option<PatternSet>,
        #[arg(long)]
        id: Option<String>,
        #[arg(long, default_value_t = 20)]
        max_k: usize,
        /// Use the fixture store only (the default).
        #[arg(long, conflicts_with = "online")]
        offline: bool,
        /// Fetch the b-file from oeis.org and write it to the fixture store first.
        #[arg(long)]
        online: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check one of the executable bijections.
    Biject {
        #[arg(long, value_enum)]
        which: Bijection,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        /// Print the coin-removal walk log for every fountain.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Report elapsed_ms as 0 so output is byte-identical across runs.
    #[arg(long)]
    stable: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Clone, Copy, ValueEnum)]
enum Bijection {
    CoinRemoval,
    TablePartition,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Mismatch,
    /// Stdout was closed by the reader, e.g. `| head`.
    Closed,
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::Closed
        } else {
            Failure::Error(e.into())
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Limit { .. } | Error::OutOfPrecision { .. } => 3,
        Error::MissingFixture(_) | Error::Network(_) | Error::Io(_) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let store = match &cli.fixtures {
        Some(dir) => FixtureStore::new(dir),
        None => FixtureStore::from_env(),
    };
    match run(cli.command, &store) {
        Ok(()) | Err(Failure::Closed) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Error(e)) => {
            eprintln!("invcount: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(command: Command, store: &FixtureStore) -> Result<(), Failure> {
    let runner = Runner::default();
    let mut out = io::stdout().lock();
    match command {
        Command::Count {
            patterns,
            max_k,
            method,
            output,
        } => {
            let result = runner.run_count(&patterns, max_k, method)?;
            for w in &result.warnings {
                eprintln!("warning: {w}");
            }
            let mut report = result.report;
            if output.stable {
                report.elapsed_ms = 0;
            }
            write_report(&mut out, &report, output.format)?;
            if !report.passed() {
                return Err(Failure::Mismatch);
            }
        }
        Command::Enumerate {
            patterns,
            k,
            decomposable,
        } => {
            let mut query = AvoiderQuery::new(k, patterns);
            query.indecomposable_only = !decomposable;
            for p in runner.oracle.enumerate_avoiders(&query)? {
                writeln!(out, "{p}")?;
            }
        }
        Command::Verify { max_k, output } => {
            let mut report = verify_all(&runner, store, max_k);
            if output.stable {
                report.elapsed_ms = 0;
            }
            match output.format {
                Format::Json => writeln!(out, "{}", report.to_json())?,
                Format::Plain => write!(out, "{}", report.to_plain())?,
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut out);
                    w.write_record(["name", "status", "detail"]).map_err(csv_error)?;
                    for c in &report.checks {
                        let status = serde_json::to_value(c.status).expect("status serializes");
                        w.write_record([c.name.as_str(), status.as_str().unwrap_or(""), c.detail.as_str()])
                            .map_err(csv_error)?;
                    }
                    w.flush()?;
                }
            }
            if !report.passed() {
                return Err(Failure::Mismatch);
            }
        }
        Command::Oeis {
            patterns,
            id,
            max_k,
            offline: _,
            online,
            output,
        } => {
            let (patterns, id) = resolve_oeis_target(patterns, id)?;
            let fixture = if online {
                let text = fetch_bfile(&id)?;
                store.save(&id, &text)?
            } else {
                store.load(&id)?
            };
            let mut check = oeis_check(&runner, &patterns, max_k, &fixture)?;
            if output.stable {
                check.report.elapsed_ms = 0;
            }
            write_oeis(&mut out, &check, output.format)?;
            if !check.passed() {
                return Err(Failure::Mismatch);
            }
        }
        Command::Biject {
            which,
            max_size,
            trace,
            format,
        } => {
            let rows = match which {
                Bijection::CoinRemoval => check_coin_removal(&runner, max_size, trace, &mut out)?,
                Bijection::TablePartition => check_table_partition(&runner, max_size)?,
            };
            let ok = rows.iter().all(|r| r.ok);
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("rows serialize"))?,
                Format::Plain => {
                    for r in &rows {
                        writeln!(
                            out,
                            "{:<8} size {:>2}: domain {:>4}, image {:>4}, expected {:>4}  {}",
                            r.family,
                            r.size,
                            r.domain,
                            r.image,
                            r.expected,
                            if r.ok { "ok" } else { "MISMATCH" }
                        )?;
                    }
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut out);
                    for r in &rows {
                        w.serialize(r).map_err(csv_error)?;
                    }
                    w.flush()?;
                }
            }
            if !ok {
                return Err(Failure::Mismatch);
            }
        }
    }
    Ok(())
}

fn csv_error(e: csv::Error) -> Failure {
    Failure::Error(Error::Io(e.to_string()))
}

fn write_report(out: &mut impl Write, report: &CountReport, format: Format) -> Result<(), Failure> {
    match format {
        Format::Json => writeln!(out, "{}", report.to_json())?,
        Format::Plain => write!(out, "{}", report.to_plain())?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["k", "value"]).map_err(csv_error)?;
            for t in &report.terms {
                w.write_record([t.k.to_string(), t.value.to_string()]).map_err(csv_error)?;
            }
            w.flush()?;
            for m in &report.mismatches {
                eprintln!("mismatch: k={} {} expected {} found {}", m.k, m.path, m.expected, m.found);
            }
        }
    }
    Ok(())
}

fn write_oeis(out: &mut impl Write, check: &OeisCheck, format: Format) -> Result<(), Failure> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(check).expect("check serializes"))?,
        _ => {
            let offset = check.offset.map_or("none".to_string(), |o| format!("{o:+}"));
            let status = if check.passed() { "match" } else { "MISMATCH" };
            writeln!(out, "# {} offset {offset} compared {} {status}", check.id, check.compared)?;
            write_report(out, &check.report, format)?;
        }
    }
    Ok(())
}

fn resolve_oeis_target(patterns: Option<PatternSet>, id: Option<String>) -> Result<(PatternSet, String), Error> {
    match (patterns, id) {
        (Some(p), _) => {
            let (e, _) = entry(&p).ok_or_else(|| Error::Domain(format!("{p} is not in the catalog")))?;
            let id = e.oeis.ok_or_else(|| Error::Domain(format!("{p} has no OEIS id")))?;
            Ok((p, id.to_string()))
        }
        (None, Some(id)) => {
            validate_id(&id)?;
            let e = entry_for_id(&id).ok_or_else(|| Error::Domain(format!("no catalog entry cites {id}")))?;
            Ok((e.patterns, id))
        }
        (None, None) => Err(Error::Domain("give --patterns or --id".into())),
    }
}

fn fetch_bfile(id: &str) -> Result<String, Error> {
    validate_id(id)?;
    let url = format!("https://oeis.org/{id}/b{}.txt", &id[1..]);
    let network = |e: ureq::Error| Error::Network(format!("{url}: {e}"));
    ureq::get(&url)
        .call()
        .map_err(network)?
        .body_mut()
        .read_to_string()
        .map_err(network)
}

#[derive(Serialize)]
struct BijectionRow {
    family: &'static str,
    size: usize,
    domain: usize,
    image: usize,
    expected: usize,
    ok: bool,
}

fn check_coin_removal(runner: &Runner, max_size: usize, trace: bool, out: &mut impl Write) -> Result<Vec<BijectionRow>, Failure> {
    let table = Avoid321Table::build(max_size);
    let mut rows = Vec::new();
    for s in 1..=max_size {
        let domain = even_fountains_of_size(s, &runner.bounds)?;
        if trace {
            for f in &domain {
                let t = coin_removal(f);
                writeln!(out, "## {f} -> {}", format_sequence(&t.positional_output))?;
                write!(out, "{}", t.log())?;
            }
        }
        let report = verify_map(&domain, |f| Ok(format_sequence(&coin_removal(f).positional_output)), None::<&[String]>);
        let expected: usize = table.count(s).expect("table covers s").to_string().parse().expect("fits");
        rows.push(BijectionRow {
            family: "fountain",
            size: s,
            domain: report.domain_size,
            image: report.image_size,
            expected,
            ok: report.is_injective() && report.image_size == expected,
        });
    }
    Ok(rows)
}

fn check_table_partition(runner: &Runner, max_size: usize) -> Result<Vec<BijectionRow>, Failure> {
    let mut rows = Vec::new();
    for (family, patterns, mode) in [
        ("all", "132", PartitionMode::All),
        ("distinct", "132,231", PartitionMode::Distinct),
        ("equal", "132,321", PartitionMode::EqualParts),
    ] {
        let patterns: PatternSet = patterns.parse()?;
        for k in 0..=max_size {
            let domain = runner.oracle.enumerate_avoiders(&AvoiderQuery::new(k, patterns.clone()))?;
            let codomain = partitions_of(k, mode);
            let report = verify_map(&domain, table_to_partition, Some(&codomain));
            rows.push(BijectionRow {
                family,
                size: k,
                domain: report.domain_size,
                image: report.image_size,
                expected: codomain.len(),
                ok: report.is_bijective(),
            });
        }
    }
    Ok(rows)
}
