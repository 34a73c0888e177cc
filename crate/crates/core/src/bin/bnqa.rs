use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = io::stdin();
    let mut input = stdin.lock();
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    let code = bnqa_core::cli::run(std::env::args_os(), &mut input, &mut out, &mut err);
    let _ = out.flush();
    ExitCode::from(code as u8)
}
