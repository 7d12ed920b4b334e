use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = conic_mori::cli::run(std::env::args_os());
    if std::io::stdout().write_all(outcome.output.as_bytes()).is_err() {
        return ExitCode::from(1);
    }
    ExitCode::from(outcome.status as u8)
}
