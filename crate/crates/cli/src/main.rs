mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{
    BoundsCommand, Cli, Command, PlotsCommand, SequenceCommand, StatsCommand, TablesCommand,
};
use commands::Violations;
use output::{emit, Output};

fn dispatch(cli: &Cli) -> irrtools::Result<(Output, Violations)> {
    let cap = cli.max_n;
    let ok = |o: Output| (o, Violations(0));
    Ok(match &cli.command {
        Command::Indices(src) => ok(commands::indices(src)?),
        Command::Sequence(SequenceCommand::Analyze {
            sequence,
            convention,
        }) => ok(commands::sequence_analyze(sequence, *convention)?),
        Command::Bounds(BoundsCommand::Check(a)) => commands::bounds_check(a, cap)?,
        Command::Bounds(BoundsCommand::Falsify(a)) => ok(commands::bounds_falsify(a, cap)?),
        Command::Bounds(BoundsCommand::List) => ok(commands::bounds_list()),
        Command::Enumerate { n, count_only } => ok(commands::enumerate(*n, *count_only, cap)?),
        Command::Extremal(a) => ok(commands::extremal(a, cap)?),
        Command::Tables(TablesCommand::Reproduce { table }) => {
            ok(commands::tables_reproduce(*table))
        }
        Command::Tables(TablesCommand::Export { table }) => ok(commands::tables_export(*table)),
        Command::Stats(StatsCommand::Correlate { table }) => ok(commands::stats_correlate(*table)?),
        Command::Stats(StatsCommand::Regress { table, predict }) => {
            ok(commands::stats_regress(*table, predict.as_deref())?)
        }
        Command::Plots(PlotsCommand::Emit { figure }) => ok(commands::plots_emit(*figure)?),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let (out, violations) = match dispatch(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = emit(&out.render(cli.format), cli.out.as_deref()) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(1);
    }
    let expect_hold =
        matches!(&cli.command, Command::Bounds(BoundsCommand::Check(a)) if a.expect_hold);
    if expect_hold && violations.0 > 0 {
        eprintln!("expect-hold: {} probative report(s) violated", violations.0);
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}
