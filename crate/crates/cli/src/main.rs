use clap::Parser;

fn main() {
    std::process::exit(backarc_cli::run(backarc_cli::Cli::parse()));
}
