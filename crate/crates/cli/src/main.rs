use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use charsheaf::disconnected::{model_suite, sp4_2_model, ModelName};
use charsheaf_cli::report::{emit, emit_models, Format};
use charsheaf_cli::verify::{run_named, verify_all, RunConfig, ALL_CASES, EXIT_DATA, EXIT_MISMATCH, EXIT_PASS};
use charsheaf_cli::write_reports;
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "charsheaf", version, about = "Exact unipotent support computations for twisted Weyl groups of type B2, G2 and F4")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one case and print or write its report.
    Run {
        /// b2, g2, f4, b2-disconnected, f4-disconnected or models
        #[arg(long)]
        case: String,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "text")]
        emit: Vec<Format>,
        /// Write `<case>.<ext>` files here instead of printing.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "data")]
        data_dir: PathBuf,
        /// Model suite for `--case models`, e.g. s3,z4,d8,q8,a4.
        #[arg(long, value_delimiter = ',')]
        models: Option<Vec<String>>,
    },
    /// Run every case and the model suite; exit 0 on success, 1 on a mismatch, 2 on data errors.
    Verify {
        #[arg(long, default_value = "data")]
        data_dir: PathBuf,
        /// Comma-separated model list; `sp42` toggles the Sp4(2) model.
        #[arg(long, value_delimiter = ',')]
        models: Option<Vec<String>>,
        /// Restrict to these cases.
        #[arg(long, value_delimiter = ',')]
        cases: Option<Vec<String>>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "text")]
        emit: Vec<Format>,
        #[arg(long)]
        parallel: bool,
    },
}

/// Splits a model list into the coset-suite groups and whether Sp₄(2) is included.
fn parse_models(list: Option<Vec<String>>) -> Result<(Vec<ModelName>, bool), String> {
    let Some(list) = list else { return Ok((ModelName::ALL.to_vec(), true)) };
    let mut names = Vec::new();
    let mut sp42 = false;
    for item in list.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        if item.eq_ignore_ascii_case("sp42") {
            sp42 = true;
        } else {
            names.push(item.parse::<ModelName>().map_err(|e| e.to_string())?);
        }
    }
    Ok((names, sp42))
}

fn run(case: &str, formats: &[Format], out: Option<PathBuf>, data_dir: PathBuf, models: Option<Vec<String>>) -> io::Result<i32> {
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    if case == "models" {
        let (names, with_sp42) = match parse_models(models) {
            Ok(m) => m,
            Err(e) => {
                eprintln!("error: {e}");
                return Ok(EXIT_DATA);
            }
        };
        let reports = model_suite(&names);
        let sp42 = if with_sp42 { Some(sp4_2_model().map(|(_, r)| r)) } else { None };
        let sp42_report = match &sp42 {
            Some(Err(e)) => {
                eprintln!("error: {e}");
                return Ok(EXIT_MISMATCH);
            }
            Some(Ok(r)) => Some(r),
            None => None,
        };
        for &f in formats {
            match &out {
                Some(dir) => {
                    std::fs::create_dir_all(dir)?;
                    let mut file = std::fs::File::create(dir.join(format!("models.{}", f.extension())))?;
                    emit_models(&reports, sp42_report, f, &mut file)?;
                }
                None => emit_models(&reports, sp42_report, f, &mut lock)?,
            }
        }
        let ok = reports.iter().all(|r| r.passes()) && sp42_report.is_none_or(|r| r.passes());
        return Ok(if ok { EXIT_PASS } else { EXIT_MISMATCH });
    }
    if !ALL_CASES.contains(&case) {
        eprintln!("error: unknown case {case:?}; expected one of {}", ALL_CASES.join(", "));
        return Ok(EXIT_DATA);
    }
    let result = match run_named(case, &data_dir) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(EXIT_DATA);
        }
    };
    match &out {
        Some(dir) => write_reports(&result, formats, dir)?,
        None => {
            for &f in formats {
                emit(&result, f, &mut lock)?;
            }
        }
    }
    lock.flush()?;
    Ok(if result.passes() { EXIT_PASS } else { EXIT_MISMATCH })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = match cli.command {
        Command::Run { case, emit, out, data_dir, models } => run(&case, &emit, out, data_dir, models),
        Command::Verify { data_dir, models, cases, out, emit, parallel } => {
            let mut config = RunConfig::verify_defaults(data_dir);
            match parse_models(models) {
                Ok((names, with_sp42)) => {
                    config.models = names;
                    config.sp42 = with_sp42;
                    if !with_sp42 && config.models.is_empty() {
                        config.case_names.retain(|c| c != "models");
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_DATA as u8);
                }
            }
            if let Some(cases) = cases {
                let unknown: Vec<&String> = cases.iter().filter(|c| !ALL_CASES.contains(&c.as_str())).collect();
                if !unknown.is_empty() {
                    eprintln!("error: unknown cases {unknown:?}");
                    return ExitCode::from(EXIT_DATA as u8);
                }
                config.case_names = cases;
            }
            config.out_dir = out;
            config.formats = emit;
            config.parallel = parallel;
            verify_all(&config, &mut io::stdout().lock())
        }
    };
    match status {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_DATA as u8)
        }
    }
}
