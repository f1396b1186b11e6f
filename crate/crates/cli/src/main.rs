use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use divprime::export::{to_adjacency_json, to_dot};
use divprime::render::{self, csv_writer};
use divprime::{parse_positive, parse_positive_u64, ExportStyle, OutputFormat};
use divprime_core::verify::verify_factorization;
use divprime_core::{
    build_graph, closed_form, verify_range_with, Error, Factorization, Status, DEFAULT_ORACLE_CAP,
};
use num_bigint::BigUint;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Topological indices of divisor prime graphs.
#[derive(Debug, Parser)]
#[command(name = "divprime", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the index report for one n.
    Compute {
        #[arg(value_parser = parse_positive)]
        n: BigUint,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
        /// Also build the graph and compare against the closed forms.
        #[arg(long)]
        with_oracle: bool,
        /// Largest divisor count the oracle will build a graph for.
        #[arg(long, env = "DIVPRIME_CAP", default_value_t = DEFAULT_ORACLE_CAP)]
        cap: u64,
    },
    /// Verify closed forms against the oracle for every n in [lo, hi].
    Verify {
        #[arg(value_parser = parse_positive_u64)]
        lo: u64,
        #[arg(value_parser = parse_positive_u64)]
        hi: u64,
        #[arg(long, env = "DIVPRIME_CAP", default_value_t = DEFAULT_ORACLE_CAP)]
        cap: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Print the divisor prime graph of n.
    Export {
        #[arg(value_parser = parse_positive)]
        n: BigUint,
        #[arg(long, value_enum, default_value_t = ExportStyle::Dot)]
        style: ExportStyle,
        #[arg(long, env = "DIVPRIME_CAP", default_value_t = DEFAULT_ORACLE_CAP)]
        cap: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute {
            n,
            format,
            with_oracle,
            cap,
        } => compute(&n, format, with_oracle, cap),
        Command::Verify {
            lo,
            hi,
            cap,
            format,
        } => verify(lo, hi, cap, format),
        Command::Export { n, style, cap } => export(&n, style, cap),
    };
    match result {
        Ok(code) => code,
        Err(err) if err.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("divprime: {err}");
            ExitCode::FAILURE
        }
    }
}

fn usage_error(err: &Error) -> ExitCode {
    eprintln!("divprime: {err}");
    ExitCode::from(EXIT_USAGE)
}

fn factorize(n: &BigUint) -> Result<Factorization, ExitCode> {
    Factorization::of(n).map_err(|e| usage_error(&e))
}

fn compute(n: &BigUint, format: OutputFormat, with_oracle: bool, cap: u64) -> io::Result<ExitCode> {
    let f = match factorize(n) {
        Ok(f) => f,
        Err(code) => return Ok(code),
    };
    let mut out = io::stdout().lock();
    if !with_oracle {
        let report = closed_form::report(&f);
        match format {
            OutputFormat::Table => out.write_all(render::report_table(&f, &report).as_bytes())?,
            OutputFormat::Json => out.write_all(render::report_json(&report).as_bytes())?,
            OutputFormat::Csv => {
                let mut w = csv_writer(out)?;
                w.write_record(render::csv_row(&report, None, "closed_form"))?;
                w.flush()?;
            }
        }
        return Ok(ExitCode::SUCCESS);
    }

    let result = verify_factorization(&f, cap);
    match format {
        OutputFormat::Table => out.write_all(render::verification_table(&f, &result).as_bytes())?,
        OutputFormat::Json => out.write_all(render::verification_json(&result).as_bytes())?,
        OutputFormat::Csv => {
            let mut w = csv_writer(out)?;
            w.write_record(render::verification_csv_row(&result))?;
            w.flush()?;
        }
    }
    if let Some(reason) = &result.oracle_skipped_reason {
        eprintln!("divprime: oracle skipped: {reason}");
    }
    Ok(if result.status == Status::Mismatch {
        ExitCode::from(EXIT_MISMATCH)
    } else {
        ExitCode::SUCCESS
    })
}

fn verify(lo: u64, hi: u64, cap: u64, format: OutputFormat) -> io::Result<ExitCode> {
    let stdout = io::stdout();
    let summary = match format {
        OutputFormat::Csv => {
            let mut w = csv_writer(stdout.lock())?;
            let mut write_err = None;
            let summary = verify_range_with(lo, hi, cap, |r| {
                if write_err.is_none() {
                    if let Err(e) = w.write_record(render::verification_csv_row(r)) {
                        write_err = Some(e);
                    }
                }
            });
            if let Some(e) = write_err {
                return Err(e.into());
            }
            w.flush()?;
            summary
        }
        OutputFormat::Table => {
            let mut out = stdout.lock();
            let mut write_err = None;
            let summary = verify_range_with(lo, hi, cap, |r| {
                if r.status == Status::Mismatch && write_err.is_none() {
                    write_err = out.write_all(render::mismatch_line(r).as_bytes()).err();
                }
            });
            if let Some(e) = write_err {
                return Err(e);
            }
            summary
        }
        OutputFormat::Json => verify_range_with(lo, hi, cap, |_| {}),
    };
    let summary = match summary {
        Ok(s) => s,
        Err(err) => return Ok(usage_error(&err)),
    };
    let mut out = stdout.lock();
    match format {
        OutputFormat::Table => out.write_all(render::summary_table(&summary).as_bytes())?,
        OutputFormat::Json => out.write_all(render::summary_json(&summary).as_bytes())?,
        OutputFormat::Csv => eprintln!("divprime: {summary}"),
    }
    Ok(if summary.mismatched == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    })
}

fn export(n: &BigUint, style: ExportStyle, cap: u64) -> io::Result<ExitCode> {
    let f = match factorize(n) {
        Ok(f) => f,
        Err(code) => return Ok(code),
    };
    let graph = match build_graph(&f, cap) {
        Ok(g) => g,
        Err(err) => {
            eprintln!("divprime: cannot export: {err}; raise --cap or DIVPRIME_CAP");
            return Ok(ExitCode::from(EXIT_MISMATCH));
        }
    };
    let text = match style {
        ExportStyle::Dot => to_dot(&graph),
        ExportStyle::AdjacencyJson => to_adjacency_json(&graph),
    };
    io::stdout().lock().write_all(text.as_bytes())?;
    Ok(ExitCode::SUCCESS)
}
