mod cli;
mod commands;
mod config;

use std::ffi::OsString;
use std::io::Write;
use std::panic;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};

use cli::{Cli, Command};

const USER_ERROR: u8 = 1;
const INTERNAL_ERROR: u8 = 2;

fn run(args: Vec<OsString>) -> Result<(), (u8, String)> {
    let args = match config::config_path(&args) {
        Some(path) => config::splice(&Cli::command(), args, &PathBuf::from(path))
            .map_err(|e| (USER_ERROR, e.to_string()))?,
        None => args,
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return Ok(());
        }
        Err(e) => return Err((USER_ERROR, e.render().to_string().trim_end().to_owned())),
    };

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = match &cli.command {
        Command::Detect(a) => commands::detect(a, cli.workers, &mut out),
        Command::Compare(a) => commands::compare(a, cli.workers, &mut out),
        Command::Synth(a) => commands::synth(a, &mut out),
        Command::Eval(a) => commands::eval(a, &mut out),
    };
    out.flush().ok();
    result.map_err(|e| (USER_ERROR, format!("error: {e}")))
}

fn main() -> ExitCode {
    let args: Vec<OsString> = std::env::args_os().collect();
    match panic::catch_unwind(|| run(args)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err((code, msg))) => {
            eprintln!("{msg}");
            ExitCode::from(code)
        }
        // The default hook has already printed the panic message.
        Err(_) => ExitCode::from(INTERNAL_ERROR),
    }
}
