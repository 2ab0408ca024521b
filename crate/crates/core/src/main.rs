use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use polycoords::commands::{self, CommandOutput};
use polycoords::io::{read_json, DecompositionDoc, PointsDoc, PolygonDoc, SystemDescriptor, ValuesDoc};
use polycoords::{Error, Result};

/// Exact chordal and cartographic coordinates on convex polygons.
#[derive(Debug, Parser)]
#[command(name = "polycoords", version)]
struct Cli {
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Indent the JSON report.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a polygon and, optionally, a chordal decomposition of it.
    Validate {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long)]
        decomposition: Option<PathBuf>,
    },
    /// List every chordal decomposition of the n-gon.
    Triangulations {
        n: usize,
        /// Keep only this degree sequence, e.g. "1^2 2^2".
        #[arg(long)]
        cds: Option<String>,
        /// Group into dihedral orbits with multiplicities.
        #[arg(long)]
        orbits: bool,
    },
    /// Locate points in the regions of a decomposition.
    Locate {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long)]
        decomposition: PathBuf,
        #[arg(long)]
        points: PathBuf,
    },
    /// Print the parsing tree and triangle/chord sign-code table.
    Tree {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long)]
        decomposition: PathBuf,
    },
    /// Evaluate a coordinate system at points.
    Coords {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        points: PathBuf,
    },
    /// Interpolate per-vertex values at points.
    Interpolate {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        values: PathBuf,
        #[arg(long)]
        points: PathBuf,
    },
}

fn run(command: Command) -> Result<CommandOutput> {
    match command {
        Command::Validate { polygon, decomposition } => {
            let polygon: PolygonDoc = read_json(polygon)?;
            let decomposition: Option<DecompositionDoc> = decomposition.map(read_json).transpose()?;
            Ok(commands::validate(&polygon, decomposition.as_ref()))
        }
        Command::Triangulations { n, cds, orbits } => commands::triangulations(n, cds.as_deref(), orbits),
        Command::Locate { polygon, decomposition, points } => commands::locate(
            &read_json::<PolygonDoc>(polygon)?,
            &read_json::<DecompositionDoc>(decomposition)?,
            &read_json::<PointsDoc>(points)?,
        ),
        Command::Tree { polygon, decomposition } => {
            commands::tree(&read_json::<PolygonDoc>(polygon)?, &read_json::<DecompositionDoc>(decomposition)?)
        }
        Command::Coords { polygon, system, points } => commands::coords(
            &read_json::<PolygonDoc>(polygon)?,
            &read_json::<SystemDescriptor>(system)?,
            &read_json::<PointsDoc>(points)?,
        ),
        Command::Interpolate { polygon, system, values, points } => commands::interpolate_values(
            &read_json::<PolygonDoc>(polygon)?,
            &read_json::<SystemDescriptor>(system)?,
            &read_json::<ValuesDoc>(values)?,
            &read_json::<PointsDoc>(points)?,
        ),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { commands::EXIT_INPUT as u8 } else { 0 });
        }
    };
    let (text, code) = match run(cli.command) {
        Ok(out) => (out.render(cli.pretty), out.exit_code),
        Err(e) => {
            eprint!("{}", polycoords::io::to_json(&commands::error_body(&e), cli.pretty));
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, &text).map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprint!("{}", polycoords::io::to_json(&commands::error_body(&e), cli.pretty));
        return ExitCode::from(commands::EXIT_INPUT as u8);
    }
    ExitCode::from(code as u8)
}
