mod config;
mod run;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser as _;

use config::{Cli, Format, RunConfig};

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<lyubeznik::Error>() {
        Some(lyubeznik::Error::ThresholdExceeded { .. }) | Some(lyubeznik::Error::TooManyGenerators { .. }) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(jobs) = cli.options.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("global pool is built once");
    }
    let config = RunConfig::from(cli);
    match run::run(&config) {
        Ok(report) => {
            let out = match config.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report.json).expect("serializable");
                    s.push('\n');
                    s
                }
                Format::Text => report.text,
            };
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
