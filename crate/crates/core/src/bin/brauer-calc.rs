use std::io::{Read, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = brauer_calc::cli::run(std::env::args_os(), || {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    });
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(outcome.stdout.as_bytes()).and_then(|_| out.flush());
    ExitCode::from(outcome.code as u8)
}
