use std::io::{stdin, stdout, Write};
use std::process::ExitCode;

use wildgalois::cli;

fn main() -> ExitCode {
    let outcome = cli::run(std::env::args_os(), &mut stdin());
    if !outcome.json.is_empty() {
        // a closed pipe (`| head`) is not an error
        let _ = writeln!(stdout(), "{}", outcome.json.trim_end());
    }
    ExitCode::from(outcome.exit_code as u8)
}
