use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(lrmso::cli::run(std::env::args_os()))
}
