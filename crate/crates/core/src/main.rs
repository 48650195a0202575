use std::io::Write;

fn main() {
    let run = psubnormal::cli::execute(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(run.stdout.as_bytes());
    let _ = stdout.flush();
    eprint!("{}", run.stderr);
    std::process::exit(run.status);
}
