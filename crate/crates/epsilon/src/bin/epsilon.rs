use std::process::ExitCode;

fn main() -> ExitCode {
    epsilon_elim::cli::main()
}
