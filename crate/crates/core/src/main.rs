use clap::Parser;
use quintic::cli::{configure_threads, run, Cli};

fn main() {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        std::process::exit(2);
    }
    let json = cli.json;
    let outcome = run(&cli.into());
    if outcome.report.is_some() || json {
        print!("{}", outcome.output);
    } else {
        eprint!("{}", outcome.output);
    }
    std::process::exit(outcome.exit_code);
}
