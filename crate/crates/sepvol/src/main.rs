use clap::Parser;
use sepvol::cli;

fn main() {
    let args = cli::Cli::parse();
    match cli::run(args) {
        Ok(outcome) => {
            if outcome.report.ends_with('\n') {
                print!("{}", outcome.report);
            } else {
                println!("{}", outcome.report);
            }
            std::process::exit(outcome.exit_code);
        }
        Err(e) => {
            eprintln!("sepvol: {e}");
            std::process::exit(cli::exit_code_for(&e));
        }
    }
}
