mod args;

use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use radial_hermite::export::{
    eval_export, gram_export, norm_export, norm_table, poly_export, spectrum_export,
};
use radial_hermite::oscillator::sample_on_rays;
use radial_hermite::{
    errata, gram_matrix, parse_rational, radial_hermite as hermite, spectrum_table, verify,
};
use radial_hermite::{Error, Method, ModelParams};

use args::{Cli, Command, Model};

const THREADS_VAR: &str = "RADIAL_HERMITE_THREADS";

enum Failure {
    Params(String),
    Checks(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Params(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match configure_threads().and_then(|()| run(cli.command)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Params(msg)) => {
            eprintln!("radial-hermite: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Checks(msg)) => {
            eprintln!("radial-hermite: {msg}");
            ExitCode::from(3)
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| {
            Failure::Params(format!(
                "{THREADS_VAR} must be a positive integer, got {value:?}"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Params(format!("cannot size thread pool: {e}")))
}

fn model(m: &Model) -> Result<ModelParams, Failure> {
    let r = u32::try_from(m.r)
        .map_err(|_| Failure::Params(format!("r must be a positive odd integer, got {}", m.r)))?;
    Ok(ModelParams::new(r, parse_rational(&m.nu)?)?)
}

fn parse_grid(text: &str) -> Result<Vec<f64>, Failure> {
    let bad = || {
        Failure::Params(format!(
            "grid must be tmin,tmax,count with count >= 1, got {text:?}"
        ))
    };
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [lo, hi, count] = parts[..] else {
        return Err(bad());
    };
    let lo: f64 = lo.parse().map_err(|_| bad())?;
    let hi: f64 = hi.parse().map_err(|_| bad())?;
    let count: usize = count.parse().map_err(|_| bad())?;
    if count == 0 || !lo.is_finite() || !hi.is_finite() || hi < lo {
        return Err(bad());
    }
    if count == 1 {
        return Ok(vec![lo]);
    }
    let step = (hi - lo) / (count - 1) as f64;
    Ok((0..count)
        .map(|i| {
            if i == count - 1 {
                hi
            } else {
                lo + step * i as f64
            }
        })
        .collect())
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Params(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Poly {
            model: m,
            degree,
            out,
        } => {
            let params = model(&m)?;
            let poly = hermite(&params, degree, Method::Recurrence);
            emit(
                &poly_export(&params, degree, &poly, out.format.into())?,
                out.output.as_deref(),
            )
        }
        Command::Gram {
            model: m,
            nmax,
            out,
        } => {
            let params = model(&m)?;
            let gram = gram_matrix(&params, nmax)?;
            emit(
                &gram_export(&gram, out.format.into())?,
                out.output.as_deref(),
            )?;
            let nonzero = gram.off_diagonal_nonzero();
            match nonzero.first() {
                None => Ok(()),
                Some((i, j)) => Err(Failure::Checks(format!(
                    "{} nonzero off-diagonal entries, first at ({i}, {j})",
                    nonzero.len()
                ))),
            }
        }
        Command::Norms {
            model: m,
            nmax,
            out,
        } => {
            let params = model(&m)?;
            let table = norm_table(&gram_matrix(&params, nmax)?);
            emit(
                &norm_export(&table, out.format.into())?,
                out.output.as_deref(),
            )?;
            eprintln!("max relative deviation: {:e}", table.max_rel_dev);
            if table.all_exact {
                Ok(())
            } else {
                Err(Failure::Checks(
                    "closed-form norm differs from the Gram diagonal".into(),
                ))
            }
        }
        Command::Spectrum {
            model: m,
            nmax,
            out,
        } => {
            let params = model(&m)?;
            let rows = spectrum_table(&params, nmax)?;
            emit(
                &spectrum_export(&params, nmax, &rows, out.format.into())?,
                out.output.as_deref(),
            )
        }
        Command::Eval {
            model: m,
            degree,
            grid,
            out,
        } => {
            let params = model(&m)?;
            let ts = parse_grid(&grid)?;
            let samples = sample_on_rays(&params, degree, &ts)?;
            emit(
                &eval_export(&params, degree, &samples, out.format.into())?,
                out.output.as_deref(),
            )
        }
        Command::Verify {
            model: m,
            nmax,
            output,
        } => {
            let params = model(&m)?;
            let outcomes = verify::run_suite(&params, nmax);
            let mut text = String::new();
            for o in &outcomes {
                let tag = if o.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(text, "{tag} {} ({})", o.name, o.detail);
            }
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            let _ = writeln!(
                text,
                "{} of {} checks passed for r={}, nu={}, nmax={nmax}",
                outcomes.len() - failed,
                outcomes.len(),
                params.r(),
                params.nu()
            );
            emit(&text, output.as_deref())?;
            if failed == 0 {
                Ok(())
            } else {
                Err(Failure::Checks(format!("{failed} checks failed")))
            }
        }
        Command::Errata { output } => {
            let report = errata::errata_report()?;
            emit(&errata::render(&report), output.as_deref())
        }
    }
}
