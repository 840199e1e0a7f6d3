//! Argument parsing and dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use symtrap_core::branching::Statistics;
use symtrap_core::character::Group;
use symtrap_core::mapping::{GNLabel, Regime};
use symtrap_core::{Parity, Partition};

use crate::commands::{self, BasisRequest, DegeneracyAxis, MapRequest};
use crate::error::{CliError, CliResult};
use crate::report::{Format, Report};

#[derive(Parser, Debug)]
#[command(name = "symtrap", version, about = "Symmetry classification of few particles in a 1D harmonic trap")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Cross-check against explicit representations where size guards allow.
    #[arg(long, global = true)]
    pub verify: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GroupArg {
    Sn,
    Snz2,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum StatsArg {
    Bose,
    Fermi,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ParityArg {
    #[value(alias = "+", alias = "plus")]
    Even,
    #[value(alias = "-", alias = "minus")]
    Odd,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Parity {
        match p {
            ParityArg::Even => Parity::Plus,
            ParityArg::Odd => Parity::Minus,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum RegimeArg {
    #[value(name = "0", alias = "free")]
    Free,
    #[value(name = "inf", alias = "hard-core")]
    HardCore,
}

impl From<RegimeArg> for Regime {
    fn from(r: RegimeArg) -> Regime {
        match r {
            RegimeArg::Free => Regime::Free,
            RegimeArg::HardCore => Regime::HardCore,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Character table of S_N or S_N x Z2.
    Chartable {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = GroupArg::Sn)]
        group: GroupArg,
        #[command(flatten)]
        out: Output,
    },
    /// S_N content of the shells H_X for X = 0..=max-energy.
    ReduceShell {
        #[arg(long)]
        n: usize,
        /// Largest excitation X.
        #[arg(long)]
        max_energy: u64,
        #[command(flatten)]
        out: Output,
    },
    /// S_N content of the hyperangular subspaces for lambda = 0..=max-lambda.
    ReduceLambda {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_lambda: u32,
        #[command(flatten)]
        out: Output,
    },
    /// S_N x Z2 content of the sector space at even and odd lambda.
    ReduceSnippet {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Branching from S_N irreps to component patterns.
    Branch {
        #[arg(long)]
        n: usize,
        /// Occupations, e.g. `2,2` with --stats, or `(22)_F`.
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long, value_enum)]
        stats: Option<StatsArg>,
        #[command(flatten)]
        out: Output,
    },
    /// States of each component pattern per lambda, or cumulative per shell.
    DegeneracyTable {
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "max_energy", required_unless_present = "max_energy")]
        max_lambda: Option<u32>,
        #[arg(long)]
        max_energy: Option<u64>,
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long, value_enum)]
        stats: Option<StatsArg>,
        #[command(flatten)]
        out: Output,
    },
    /// S_N content of the spin space of k-component particles.
    SpinDecompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Levels carrying one conserved irrep {nu_R, pi, [p]}.
    Spectrum {
        #[arg(long)]
        n: usize,
        /// Partition, e.g. `21^2` or `2,1,1`.
        #[arg(long)]
        irrep: String,
        #[arg(long, value_enum)]
        parity: ParityArg,
        #[arg(long, default_value_t = 0)]
        nu_r: u32,
        #[arg(long, value_enum, default_value_t = RegimeArg::Free)]
        regime: RegimeArg,
        #[arg(long)]
        max_energy: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Adiabatic image of a free state in the hard-core limit.
    Map {
        #[arg(long)]
        n: usize,
        /// `nu_R,nu_rho,lambda,partition`, e.g. `0,0,1,21`.
        #[arg(long)]
        state: String,
        /// Young-subgroup irrep tag, e.g. `1x1` or `[1^2]x[1^2]`.
        #[arg(long)]
        component: Option<String>,
        #[arg(long, default_value_t = 0)]
        tau: u64,
        /// Largest excitation searched in the hard-core spectrum.
        #[arg(long)]
        ceiling: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
    /// Integer sector amplitudes of one snippet irrep.
    SectorBasis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        irrep: String,
        #[arg(long, value_enum)]
        parity: ParityArg,
        #[arg(long, value_enum, default_value_t = ParityArg::Even)]
        lambda_parity: ParityArg,
        #[arg(long)]
        component: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Lowest states of a component pattern.
    GroundState {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: String,
        #[arg(long, value_enum)]
        stats: Option<StatsArg>,
        #[arg(long, value_enum, default_value_t = RegimeArg::HardCore)]
        regime: RegimeArg,
        #[arg(long)]
        ceiling: Option<u64>,
        #[command(flatten)]
        out: Output,
    },
}

fn stats(s: Option<StatsArg>) -> Option<Statistics> {
    s.map(|s| match s {
        StatsArg::Bose => Statistics::Bose,
        StatsArg::Fermi => Statistics::Fermi,
    })
}

fn partition(text: &str) -> CliResult<Partition> {
    if text.contains(',') {
        let parts = text
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| CliError::Input(format!("bad partition `{text}`"))))
            .collect::<CliResult<Vec<usize>>>()?;
        Ok(Partition::from_unsorted(parts)?)
    } else {
        Ok(text.trim().trim_start_matches('[').trim_end_matches(']').parse()?)
    }
}

fn optional_pattern(
    pattern: Option<String>,
    s: Option<StatsArg>,
) -> CliResult<Option<symtrap_core::branching::ComponentPattern>> {
    pattern.map(|p| commands::parse_pattern(&p, stats(s))).transpose()
}

/// Runs one command and returns the report with its output options.
pub fn execute(command: Command) -> CliResult<(Report, Output)> {
    Ok(match command {
        Command::Chartable { n, group, out } => {
            let g = match group {
                GroupArg::Sn => Group::Symmetric,
                GroupArg::Snz2 => Group::SymmetricParity,
            };
            (commands::chartable(n, g, out.verify)?, out)
        }
        Command::ReduceShell { n, max_energy, out } => (commands::reduce_shell(n, max_energy, out.verify)?, out),
        Command::ReduceLambda { n, max_lambda, out } => (commands::reduce_lambda(n, max_lambda, out.verify)?, out),
        Command::ReduceSnippet { n, out } => (commands::reduce_snippet(n, out.verify)?, out),
        Command::Branch { n, pattern, stats: s, out } => {
            (commands::branch(n, optional_pattern(pattern, s)?, out.verify)?, out)
        }
        Command::DegeneracyTable { n, max_lambda, max_energy, pattern, stats: s, out } => {
            let axis = match (max_lambda, max_energy) {
                (Some(l), _) => DegeneracyAxis::Lambda(l),
                (None, Some(x)) => DegeneracyAxis::Shell(x),
                (None, None) => return Err(CliError::Input("one of --max-lambda or --max-energy is required".into())),
            };
            (commands::degeneracy_table(n, axis, optional_pattern(pattern, s)?, out.verify)?, out)
        }
        Command::SpinDecompose { n, k, out } => (commands::spin_decompose(n, k, out.verify)?, out),
        Command::Spectrum { n, irrep, parity, nu_r, regime, max_energy, out } => {
            let mu = GNLabel { nu_r, pi: parity.into(), p: partition(&irrep)? };
            (commands::spectrum(n, regime.into(), mu, max_energy, out.verify)?, out)
        }
        Command::Map { n, state, component, tau, ceiling, out } => {
            (commands::map(n, MapRequest { state, component, tau, ceiling }, out.verify)?, out)
        }
        Command::SectorBasis { n, irrep, parity, lambda_parity, component, out } => {
            let req = BasisRequest {
                irrep: partition(&irrep)?,
                pi: parity.into(),
                lambda_parity: lambda_parity.into(),
                component,
            };
            (commands::sector_basis(n, req, out.verify)?, out)
        }
        Command::GroundState { n, pattern, stats: s, regime, ceiling, out } => {
            let pattern = commands::parse_pattern(&pattern, stats(s))?;
            (commands::ground_state(n, pattern, regime.into(), ceiling, out.verify)?, out)
        }
    })
}

fn emit(report: &Report, out: &Output) -> CliResult<()> {
    let text = report.render(out.format);
    match &out.output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.command).and_then(|(report, out)| emit(&report, &out)) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
