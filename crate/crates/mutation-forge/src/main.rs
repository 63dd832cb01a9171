use clap::Parser;
use mutation_forge::{configure_threads, run, Cli};

fn main() {
    let cli = Cli::parse();
    let code = configure_threads().and_then(|()| run(&cli)).unwrap_or_else(|e| {
        eprintln!("mutation-forge: {e}");
        e.exit_code()
    });
    std::process::exit(code);
}
