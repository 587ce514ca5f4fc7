use clap::Parser;

fn main() {
    let cli = hyperalpha::cli::Cli::parse();
    if let Err(e) = hyperalpha::cli::run(cli) {
        eprintln!("error: {}", e.msg);
        std::process::exit(e.code);
    }
}
