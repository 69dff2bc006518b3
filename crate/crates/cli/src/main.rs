use clap::Parser;
use period_strata::commands::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    let mut out = std::io::stdout();
    let code = execute(cli, &mut out);
    std::process::exit(code);
}
