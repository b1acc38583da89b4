use std::process::ExitCode;

fn main() -> ExitCode {
    let code = std::panic::catch_unwind(|| socle::cli::run(std::env::args_os()))
        .unwrap_or(socle::cli::EXIT_INTERNAL);
    ExitCode::from(u8::try_from(code).unwrap_or(70))
}
