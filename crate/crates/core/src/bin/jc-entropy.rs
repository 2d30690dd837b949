use std::process::ExitCode;

use jc_entropy::config::{parse_config, SweepConfig};
use jc_entropy::sweep::{run_sweep, write_csv, write_csv_path};
use jc_entropy::Result;

fn run() -> Result<()> {
    let cfg: SweepConfig = parse_config(std::env::args_os())?;
    let records = run_sweep(&cfg)?;
    let levels = records.first().map_or(4, |r| r.lambdas.len());
    match &cfg.output {
        Some(path) => write_csv_path(path, &records, levels, cfg.oracle),
        None => write_csv(std::io::stdout().lock(), &records, levels, cfg.oracle),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("jc-entropy: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
