use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use ldp_core::cli::{exit_code, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("ldp: cannot start {n} workers: {e}");
            return ExitCode::from(4);
        }
    }
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match run(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("ldp: {e}");
            exit_code(&e)
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
