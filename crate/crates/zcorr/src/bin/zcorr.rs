use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(zcorr::cli::run() as u8)
}
