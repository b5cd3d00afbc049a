use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    if let Err(e) = grassembed::configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let code = grassembed::run(std::env::args_os(), &mut io::stdin(), &mut io::stdout(), &mut io::stderr());
    ExitCode::from(code as u8)
}
