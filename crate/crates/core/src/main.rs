use clap::Parser;

fn main() {
    let cli = bn_courant::cli::Cli::parse();
    std::process::exit(bn_courant::cli::execute(&cli));
}
