use std::io::Write;
use std::path::PathBuf;
use std::process::exit;

use clap::{Parser, Subcommand};

use ngqm::reports::{self, Command, ExitStatus, Format, ReportRequest};
use ngqm::GeometryOrder;

#[derive(Parser, Debug)]
#[command(name = "ngqm", version, about = "Power-law dispersion quantum mechanics: spectra, uncertainty products and verification")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// 2G|3G|4G|5G or j=N
    #[arg(long, global = true, default_value = "3G")]
    geometry: GeometryOrder,
    /// well width in nm
    #[arg(long, global = true, default_value_t = 1.0)]
    width: f64,
    #[arg(long, global = true, default_value_t = 1)]
    levels: u32,
    /// quantum number for uncertainty and state-dump
    #[arg(long, global = true, default_value_t = 0)]
    n: u32,
    /// `electron` or a rest energy in eV
    #[arg(long, global = true, default_value = "electron")]
    mass: String,
    /// csv or json
    #[arg(long, global = true, default_value = "csv")]
    format: Format,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// use √(2/l) sin((n+1)πx/l) instead of the printed 3G state
    #[arg(long = "textbook-3g", global = true)]
    textbook_3g: bool,
    /// constants file (falls back to $NGQM_CONFIG)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// reserved
    #[arg(long = "paper-constants", global = true, hide = true)]
    paper_constants: bool,
    #[arg(long = "k-min", global = true, default_value_t = 0.1)]
    k_min: f64,
    #[arg(long = "k-max", global = true, default_value_t = 100.0)]
    k_max: f64,
    #[arg(long, global = true, default_value_t = 50)]
    points: usize,
    #[arg(long, global = true, default_value_t = reports::MIN_DUMP_SAMPLES)]
    samples: usize,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Cmd {
    /// k_n, E_n, N and dispersion ratio for n = 0..levels-1
    Spectrum,
    /// Δx, Δp and the Heisenberg product
    Uncertainty,
    /// E(k), E/p and the log-log slope
    Dispersion,
    /// run the verification suite
    Verify,
    /// sampled φ_n and φ_n^j on [0, l]
    StateDump,
    /// closed-form energies against the published table
    TableAudit,
}

fn usage(msg: impl std::fmt::Display) -> ! {
    eprintln!("error: {msg}");
    exit(ExitStatus::USAGE.code)
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { ExitStatus::USAGE.code } else { 0 };
            let _ = e.print();
            exit(code);
        }
    };
    if cli.paper_constants {
        usage("--paper-constants is reserved and not implemented");
    }
    let base = reports::resolve_constants(cli.config.as_deref()).unwrap_or_else(|e| usage(e));
    let constants = reports::parse_mass(&cli.mass, base).unwrap_or_else(|e| usage(e));

    let command = match cli.command {
        Cmd::Spectrum => Command::Spectrum,
        Cmd::Uncertainty => Command::Uncertainty,
        Cmd::Dispersion => Command::Dispersion,
        Cmd::Verify => Command::Verify,
        Cmd::StateDump => Command::StateDump,
        Cmd::TableAudit => Command::TableAudit,
    };
    let request = ReportRequest {
        command,
        geometry: cli.geometry,
        width: cli.width,
        levels: cli.levels,
        n: cli.n,
        constants,
        format: cli.format,
        output_path: cli.out.clone(),
        textbook_3g: cli.textbook_3g,
        k_min: cli.k_min,
        k_max: cli.k_max,
        points: cli.points,
        samples: cli.samples,
    };

    let (text, status) = reports::execute(&request);
    if status == ExitStatus::USAGE || status == ExitStatus::COMPUTATION {
        eprint!("{text}");
    } else if cli.out.is_none() {
        let _ = std::io::stdout().write_all(text.as_bytes());
    }
    exit(status.code)
}
