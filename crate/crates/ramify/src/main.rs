use std::process::ExitCode;

fn main() -> ExitCode {
    ramify::io::cli::run()
}
