use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use ternary_words::oeis::{self, DEFAULT_OFFSET};
use ternary_words::validate::validate;
use ternary_words::{ClassLabel, ClassVector, EngineId, Error};

/// Exact counts of 3n-letter words over {a1, a2, a3}, split by the residues
/// of the letter counts mod 3.
#[derive(Debug, Parser)]
#[command(name = "twords", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print C_class(n).
    Compute {
        #[arg(long, value_parser = parse_class)]
        class: ClassLabel,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value = "decoupled", value_parser = parse_engine)]
        engine: EngineId,
    },
    /// Print all four classes and the total for n = 0..=max-n.
    Table {
        #[arg(long)]
        max_n: u64,
        #[arg(long, default_value = "decoupled", value_parser = parse_engine)]
        engine: EngineId,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Class to emit with `--format bfile`.
        #[arg(long, value_parser = parse_class)]
        class: Option<ClassLabel>,
    },
    /// Emit an OEIS b-file for A391468 (A), A391469 (B) or A391470 (C).
    Bfile {
        sequence: String,
        #[arg(long)]
        max_n: u64,
        /// First index written.
        #[arg(long, default_value_t = DEFAULT_OFFSET)]
        offset: u64,
    },
    /// Cross-check every engine and identity up to max-n (at least 4).
    Validate {
        #[arg(long)]
        max_n: u64,
    },
    /// Time each engine computing all four classes at n = max-n.
    Bench {
        #[arg(long)]
        max_n: u64,
        #[arg(long, value_delimiter = ',', value_parser = parse_engine)]
        engines: Vec<EngineId>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Bfile,
    Json,
}

fn parse_class(s: &str) -> Result<ClassLabel, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_engine(s: &str) -> Result<EngineId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Exit statuses: 0 success, 1 validation failure, 2 usage error.
enum Failure {
    Validation,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli.command, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            let _ = out.flush();
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command, out: &mut impl Write) -> Result<(), Failure> {
    match cmd {
        Command::Compute { class, n, engine } => {
            writeln!(out, "{}", engine.value(class, n)?)?;
        }
        Command::Table { max_n, engine, format, class } => {
            if format == Format::Bfile {
                let label = class.ok_or_else(|| {
                    Failure::Usage("--format bfile needs --class".into())
                })?;
                write!(out, "{}", oeis::bfile(label, 0, max_n, engine)?)?;
            } else {
                write_table(out, &engine.table(max_n)?, format)?;
            }
        }
        Command::Bfile { sequence, max_n, offset } => {
            if max_n < 1 {
                return Err(Failure::Usage("--max-n must be at least 1".into()));
            }
            let label = oeis::class_for_sequence(&sequence)?;
            write!(out, "{}", oeis::bfile(label, offset, max_n, EngineId::Decoupled)?)?;
        }
        Command::Validate { max_n } => {
            let report = validate(max_n)?;
            write!(out, "{report}")?;
            let failed = report.failures().count();
            if failed > 0 {
                writeln!(out, "{failed} check(s) FAILED")?;
                return Err(Failure::Validation);
            }
            writeln!(out, "all {} checks passed", report.checks.len())?;
        }
        Command::Bench { max_n, engines } => bench(out, max_n, &engines)?,
    }
    Ok(())
}

fn row_cells(v: &ClassVector) -> [String; 6] {
    [
        v.n.to_string(),
        v.a.to_string(),
        v.b.to_string(),
        v.c.to_string(),
        v.d.to_string(),
        v.total().to_string(),
    ]
}

const HEADER: [&str; 6] = ["n", "C_A", "C_B", "C_C", "C_D", "total"];

fn write_table(out: &mut impl Write, rows: &[ClassVector], format: Format) -> io::Result<()> {
    let cells: Vec<[String; 6]> = rows.iter().map(row_cells).collect();
    match format {
        Format::Csv => {
            writeln!(out, "{}", HEADER.join(","))?;
            for row in &cells {
                writeln!(out, "{}", row.join(","))?;
            }
        }
        Format::Json => {
            // big values are emitted as decimal strings
            let objects: Vec<_> = rows
                .iter()
                .zip(&cells)
                .map(|(v, r)| {
                    json!({
                        "n": v.n,
                        "C_A": r[1], "C_B": r[2], "C_C": r[3], "C_D": r[4], "total": r[5],
                    })
                })
                .collect();
            serde_json::to_writer_pretty(&mut *out, &objects)?;
            writeln!(out)?;
        }
        Format::Table | Format::Bfile => {
            let mut widths = HEADER.map(str::len);
            for row in &cells {
                for (w, c) in widths.iter_mut().zip(row) {
                    *w = (*w).max(c.len());
                }
            }
            let line = |fields: [&str; 6]| {
                fields
                    .iter()
                    .zip(widths)
                    .map(|(f, w)| format!("{f:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            writeln!(out, "{}", line(HEADER))?;
            for row in &cells {
                writeln!(out, "{}", line(row.each_ref().map(String::as_str)))?;
            }
        }
    }
    Ok(())
}

/// Last `k` digits of a value, marked when truncated.
fn tail(v: &BigInt, k: usize) -> String {
    let s = v.to_string();
    if s.len() <= k {
        s
    } else {
        format!("…{}", &s[s.len() - k..])
    }
}

fn bench(out: &mut impl Write, max_n: u64, engines: &[EngineId]) -> Result<(), Failure> {
    if engines.is_empty() {
        return Err(Failure::Usage("--engines needs at least one engine".into()));
    }
    let mut results: Vec<(EngineId, Vec<(ClassLabel, BigInt)>)> = Vec::new();
    writeln!(out, "{:<10} {:>12} {:>8}  values (C_A/C_B/C_C/C_D, last 12 digits)", "engine", "time_ms", "digits")?;
    for &engine in engines {
        let labels: Vec<ClassLabel> =
            ClassLabel::ALL.into_iter().filter(|&l| engine.supports(l, max_n)).collect();
        if labels.is_empty() {
            return Err(Error::OutOfDomain { engine, label: ClassLabel::A, n: max_n }.into());
        }
        let start = Instant::now();
        let values: Vec<(ClassLabel, BigInt)> = if labels.len() == 4 {
            let v = engine.vector(max_n)?;
            ClassLabel::ALL.iter().map(|&l| (l, v.get(l).clone())).collect()
        } else {
            labels.iter().map(|&l| Ok((l, engine.value(l, max_n)?))).collect::<Result<_, Error>>()?
        };
        let elapsed = start.elapsed();
        let digits = values.iter().map(|(_, v)| v.to_string().len()).max().unwrap_or(0);
        let shown: Vec<String> = ClassLabel::ALL
            .iter()
            .map(|l| {
                values.iter().find(|(x, _)| x == l).map_or("-".to_string(), |(_, v)| tail(v, 12))
            })
            .collect();
        writeln!(
            out,
            "{:<10} {:>12.3} {:>8}  {}",
            engine.name(),
            elapsed.as_secs_f64() * 1e3,
            digits,
            shown.join("/")
        )?;
        results.push((engine, values));
    }

    let agree = ClassLabel::ALL.iter().all(|l| {
        let mut seen = results.iter().flat_map(|(_, vs)| vs.iter().filter(|(x, _)| x == l));
        match seen.next() {
            Some((_, first)) => seen.all(|(_, v)| v == first),
            None => true,
        }
    });
    if agree {
        writeln!(out, "values agree across engines: PASS")?;
        Ok(())
    } else {
        writeln!(out, "values agree across engines: FAIL")?;
        Err(Failure::Validation)
    }
}
