use std::io::{stderr, stdout};
use std::process::ExitCode;

use hsforce::cli::{run, CAP_ENV};

fn main() -> ExitCode {
    let cap = std::env::var(CAP_ENV).ok();
    let code = run(
        std::env::args_os(),
        cap.as_deref(),
        &mut stdout().lock(),
        &mut stderr().lock(),
    );
    ExitCode::from(code as u8)
}
