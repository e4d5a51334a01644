use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hexagram::hexagram::special_arrays;
use hexagram::Label;
use hexagram_cli::{
    cmd_forward, cmd_reconstruct, cmd_verify_identities, format_table, parse_arrays,
    parse_lines_input, parse_params, render_svg, CliError, CliResult, RenderOptions, Viewport,
};

#[derive(Parser)]
#[command(name = "hexagram", version, about = "Exact Pascal lines of six points on a conic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Four special Pascals (optionally all sixty) of a sextuple.
    Forward {
        /// Six distinct rationals "a,b,c,d,e,f".
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        /// Also list all sixty Pascals.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Recover the sextuple from l1, l2, l3, l* given as JSON.
    Reconstruct {
        /// JSON file; reads stdin when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the symbolic identity suite and print a pass/fail table.
    VerifyIdentities {
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Draw the conic, the six points and chosen Pascals as SVG.
    Render {
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        /// Comma-separated canonical array codes; defaults to l1, l2, l3, l*.
        #[arg(long)]
        arrays: Option<String>,
        /// Chords to draw, e.g. "AE,CD,BF".
        #[arg(long)]
        chords: Option<String>,
        /// Mark the crosshair points of the drawn Pascals.
        #[arg(long)]
        crosshairs: bool,
        /// "xmin,xmax,ymin,ymax" in the chart z0 = 1.
        #[arg(long, allow_hyphen_values = true)]
        viewport: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn write_out(path: Option<&PathBuf>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_in(path: Option<&PathBuf>) -> CliResult<String> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn parse_chords(text: &str) -> CliResult<Vec<(Label, Label)>> {
    text.split(',')
        .map(|pair| {
            let mut chars = pair.trim().chars();
            match (chars.next().and_then(Label::from_char), chars.next().and_then(Label::from_char), chars.next()) {
                (Some(u), Some(v), None) if u != v => Ok((u, v)),
                _ => Err(CliError::Parse(format!("bad chord {pair:?}"))),
            }
        })
        .collect()
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Forward { params, all, output } => {
            let out = cmd_forward(&parse_params(&params)?, all)?;
            write_out(output.as_ref(), &pretty(&out))
        }
        Command::Reconstruct { input, output } => {
            let text = read_in(input.as_ref())?;
            let out = cmd_reconstruct(&parse_lines_input(&text)?)?;
            write_out(output.as_ref(), &pretty(&out))
        }
        Command::VerifyIdentities { output } => {
            let (table, status) = cmd_verify_identities();
            write_out(output.as_ref(), &format_table(&table))?;
            status
        }
        Command::Render { params, arrays, chords, crosshairs, viewport, output } => {
            let params = parse_params(&params)?;
            let opts = RenderOptions {
                viewport: viewport.as_deref().map(Viewport::parse).transpose()?.unwrap_or_default(),
                arrays: match arrays {
                    Some(a) => parse_arrays(&a)?,
                    None => special_arrays().to_vec(),
                },
                chords: chords.as_deref().map(parse_chords).transpose()?.unwrap_or_default(),
                crosshairs,
            };
            write_out(output.as_ref(), &render_svg(&params, &opts)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
