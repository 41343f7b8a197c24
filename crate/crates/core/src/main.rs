use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use coflag::cli::{run, CommandRequest, USAGE_ERROR};

fn main() -> ExitCode {
    let request = match CommandRequest::try_parse() {
        Ok(r) => r,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(&request) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.status as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE_ERROR as u8)
        }
    }
}
