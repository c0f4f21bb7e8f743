use std::process::ExitCode;

fn main() -> ExitCode {
    gf2lab::cli::run()
}
