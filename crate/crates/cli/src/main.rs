//! `qcong`: run single checks, graded suites, or print polynomials.

mod args;
mod commands;
mod params;
mod render;

use std::process::ExitCode;

use clap::{CommandFactory, Parser};

use args::{Cli, Command};
use commands::{CmdError, SuiteArgs, EXIT_FAIL, EXIT_OK, EXIT_USAGE};

fn usage_error(sub: &str, msg: &str) -> u8 {
    let mut cmd = Cli::command();
    cmd.build();
    let usage = cmd
        .find_subcommand_mut(sub)
        .map(|c| c.render_usage().to_string())
        .unwrap_or_default();
    eprintln!("error: {msg}\n\n{usage}");
    EXIT_USAGE
}

fn fail(sub: &str, err: CmdError) -> u8 {
    match err {
        CmdError::Usage(msg) => usage_error(sub, &msg),
        CmdError::Engine(e) => {
            eprintln!("error: {e}");
            EXIT_FAIL
        }
    }
}

fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Verify {
            statement,
            params,
            output,
        } => match commands::run_verify(&statement, &params) {
            Ok(report) => {
                commands::print_report(&report, output);
                if report.pass {
                    EXIT_OK
                } else {
                    EXIT_FAIL
                }
            }
            Err(e) => fail("verify", e),
        },
        Command::Suite {
            level,
            a_max,
            m_max,
            n_max,
            jobs,
            output,
        } => {
            let config = commands::suite_config(&SuiteArgs {
                level,
                a_max,
                m_max,
                n_max,
                jobs,
            });
            commands::run_suite_cmd(&config, output).unwrap_or_else(|e| fail("suite", e))
        }
        Command::Show { object, params } => match commands::run_show(object, &params) {
            Ok(p) => {
                println!("{}", p.to_canonical());
                EXIT_OK
            }
            Err(e) => fail("show", e),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    ExitCode::from(run(cli))
}
