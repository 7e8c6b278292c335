use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use icanon_cli::{run, Cli, Outcome, EXIT_USAGE};

fn main() -> ExitCode {
    let out = match Cli::try_parse() {
        Ok(cli) => {
            if let Some(limit) = cli.max_dim {
                std::env::set_var("ICANON_MAX_DIM", limit.to_string());
            }
            run(&cli)
        }
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            Outcome { stdout: String::new(), stderr: String::new(), code }
        }
    };
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code as u8)
}
