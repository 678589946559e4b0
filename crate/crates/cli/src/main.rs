use std::process::ExitCode;

use clap::Parser;
use ncrw_cli::args::Cli;
use ncrw_cli::{render_text, run};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.parallel > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.parallel).build_global() {
            eprintln!("warning: thread pool: {e}");
        }
    }
    match run(&cli) {
        Ok(report) => {
            if cli.text {
                match &report.text {
                    Some(t) => println!("{t}"),
                    None => print!("{}", render_text(&report.value)),
                }
            } else {
                println!("{}", serde_json::to_string_pretty(&report.value).expect("report serializes"));
            }
            ExitCode::from(report.status.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("ncrw: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
