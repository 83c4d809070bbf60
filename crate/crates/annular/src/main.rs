use std::process::ExitCode;

fn main() -> ExitCode {
    annular::cli::main()
}
