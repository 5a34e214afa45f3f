use std::io::Write;
use std::process::ExitCode;

use hamcert::cli::{run, EXIT_USAGE};

fn main() -> ExitCode {
    let out = run(std::env::args_os());
    let written = if out.exit_code == EXIT_USAGE && out.payload.starts_with("error") {
        std::io::stderr().write_all(out.payload.as_bytes())
    } else {
        std::io::stdout().write_all(out.payload.as_bytes())
    };
    if written.is_err() {
        return ExitCode::from(EXIT_USAGE as u8);
    }
    ExitCode::from(out.exit_code as u8)
}
