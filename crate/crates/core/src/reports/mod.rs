//! Tabular reports behind the `ngqm` command line: spectra, uncertainty
//! products, dispersion curves, state dumps, the energy-table audit and the
//! verification suite. Output is CSV or JSON and byte-identical for
//! identical requests.

mod commands;
pub mod verify;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::constants::PhysicalConstants;
use crate::error::{NgError, Result};
use crate::geometry::GeometryOrder;

pub use commands::{run_dispersion, run_spectrum, run_state_dump, run_table_audit, run_uncertainty};
pub use verify::{run_verify, verification_checks, Check, Expectation};

/// Environment variable naming a constants file when `--config` is absent.
pub const CONFIG_ENV: &str = "NGQM_CONFIG";

/// Fewest grid points a state dump will emit.
pub const MIN_DUMP_SAMPLES: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Spectrum,
    Uncertainty,
    Dispersion,
    Verify,
    StateDump,
    TableAudit,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Spectrum => "spectrum",
            Command::Uncertainty => "uncertainty",
            Command::Dispersion => "dispersion",
            Command::Verify => "verify",
            Command::StateDump => "state-dump",
            Command::TableAudit => "table-audit",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = NgError;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(NgError::InvalidArgument(format!("unknown format `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExitStatus {
    pub code: i32,
}

impl ExitStatus {
    pub const SUCCESS: ExitStatus = ExitStatus { code: 0 };
    pub const USAGE: ExitStatus = ExitStatus { code: 1 };
    pub const COMPUTATION: ExitStatus = ExitStatus { code: 2 };
    pub const VERIFICATION_FAILED: ExitStatus = ExitStatus { code: 3 };
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportRequest {
    pub command: Command,
    pub geometry: GeometryOrder,
    pub width: f64,
    pub levels: u32,
    pub n: u32,
    pub constants: PhysicalConstants,
    pub format: Format,
    pub output_path: Option<PathBuf>,
    pub textbook_3g: bool,
    pub k_min: f64,
    pub k_max: f64,
    pub points: usize,
    pub samples: usize,
}

impl ReportRequest {
    /// 3G, l = 1 nm, one level, electron, CSV.
    pub fn new(command: Command) -> Self {
        Self {
            command,
            geometry: GeometryOrder::THREE_G,
            width: 1.0,
            levels: 1,
            n: 0,
            constants: PhysicalConstants::default(),
            format: Format::Csv,
            output_path: None,
            textbook_3g: false,
            k_min: 0.1,
            k_max: 100.0,
            points: 50,
            samples: MIN_DUMP_SAMPLES,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.levels < 1 {
            return Err(NgError::InvalidArgument("--levels must be >= 1".into()));
        }
        if !(self.width.is_finite() && self.width > 0.0) {
            return Err(NgError::InvalidWidth(self.width));
        }
        if self.samples < MIN_DUMP_SAMPLES {
            return Err(NgError::InvalidArgument(format!(
                "--samples must be >= {MIN_DUMP_SAMPLES}"
            )));
        }
        if !(self.k_min > 0.0 && self.k_max > self.k_min && self.k_max.is_finite()) {
            return Err(NgError::InvalidArgument(
                "k range must satisfy 0 < k-min < k-max".into(),
            ));
        }
        if self.points < 2 {
            return Err(NgError::InvalidArgument("--points must be >= 2".into()));
        }
        if self.textbook_3g && self.geometry != GeometryOrder::THREE_G {
            return Err(NgError::InvalidArgument(
                "--textbook-3g only applies to --geometry 3G".into(),
            ));
        }
        self.constants.validate()
    }
}

/// `electron` or a rest energy in eV.
pub fn parse_mass(text: &str, base: PhysicalConstants) -> Result<PhysicalConstants> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("electron") {
        return base.with_rest_energy(crate::constants::ELECTRON_REST_ENERGY_EV);
    }
    let value: f64 = t
        .parse()
        .map_err(|_| NgError::InvalidArgument(format!("--mass: `{t}` is neither `electron` nor a number")))?;
    base.with_rest_energy(value)
}

/// Constants from `--config`, else from `$NGQM_CONFIG`, else CODATA.
pub fn resolve_constants(config: Option<&Path>) -> Result<PhysicalConstants> {
    if let Some(p) = config {
        return PhysicalConstants::load(p);
    }
    match std::env::var_os(CONFIG_ENV) {
        Some(p) if !p.is_empty() => PhysicalConstants::load(p),
        _ => Ok(PhysicalConstants::default()),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Real(f64),
    Text(String),
    Bool(bool),
    Missing,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Real(v)
    }
}
impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v as i64)
    }
}
impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}
impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}
impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}
impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}
impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Missing, Into::into)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Int(v) => write!(f, "{v}"),
            Cell::Real(v) => write!(f, "{v:e}"),
            Cell::Text(v) => f.write_str(v),
            Cell::Bool(v) => write!(f, "{v}"),
            Cell::Missing => Ok(()),
        }
    }
}

impl Cell {
    fn to_json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Real(v) => serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number),
            Cell::Text(v) => json!(v),
            Cell::Bool(v) => json!(v),
            Cell::Missing => Value::Null,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: Command,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// Request parameters echoed into JSON `meta`.
    pub parameters: Vec<(&'static str, Cell)>,
    /// Expected-pass checks that failed (verify only).
    pub failures: usize,
}

impl Report {
    fn new(command: Command, columns: &[&'static str]) -> Self {
        Self {
            command,
            columns: columns.to_vec(),
            rows: Vec::new(),
            parameters: Vec::new(),
            failures: 0,
        }
    }

    fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn param(mut self, key: &'static str, value: impl Into<Cell>) -> Self {
        self.parameters.push((key, value.into()));
        self
    }

    pub fn column(&self, name: &str) -> Option<Vec<&Cell>> {
        let i = self.columns.iter().position(|c| *c == name)?;
        Some(self.rows.iter().map(|r| &r[i]).collect())
    }

    pub fn exit_status(&self) -> ExitStatus {
        if self.failures > 0 {
            ExitStatus::VERIFICATION_FAILED
        } else {
            ExitStatus::SUCCESS
        }
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        let io = |e: csv::Error| NgError::InvalidArgument(format!("csv: {e}"));
        w.write_record(&self.columns).map_err(io)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|c| c.to_string())).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| NgError::InvalidArgument(format!("csv: {e}")))?;
        String::from_utf8(bytes).map_err(|e| NgError::InvalidArgument(e.to_string()))
    }

    pub fn to_json(&self, constants: &PhysicalConstants) -> Result<String> {
        let mut params = Map::new();
        for (k, v) in &self.parameters {
            params.insert((*k).to_string(), v.to_json());
        }
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let mut m = Map::new();
                for (c, v) in self.columns.iter().zip(r) {
                    m.insert((*c).to_string(), v.to_json());
                }
                Value::Object(m)
            })
            .collect();
        let doc = json!({
            "meta": {
                "command": self.command.name(),
                "version": env!("CARGO_PKG_VERSION"),
                "constants": {
                    "hbar_c_ev_nm": constants.hbar_c,
                    "rest_energy_ev": constants.rest_energy,
                },
                "parameters": params,
                "columns": self.columns,
            },
            "rows": rows,
        });
        let mut s = serde_json::to_string_pretty(&doc).map_err(|e| NgError::InvalidArgument(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    pub fn render(&self, format: Format, constants: &PhysicalConstants) -> Result<String> {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(constants),
        }
    }
}

/// Runs the request and returns the report.
pub fn run(request: &ReportRequest) -> Result<Report> {
    request.validate()?;
    match request.command {
        Command::Spectrum => run_spectrum(request),
        Command::Uncertainty => run_uncertainty(request),
        Command::Dispersion => run_dispersion(request),
        Command::Verify => run_verify(request),
        Command::StateDump => run_state_dump(request),
        Command::TableAudit => run_table_audit(request),
    }
}

/// Runs, renders and writes (to `output_path` or the returned string).
/// Returns the rendered text and the exit status.
pub fn execute(request: &ReportRequest) -> (String, ExitStatus) {
    if let Err(e) = request.validate() {
        return (format!("error: {e}\n"), ExitStatus::USAGE);
    }
    let report = match run(request) {
        Ok(r) => r,
        Err(e) => return (format!("error: {e}\n"), ExitStatus::COMPUTATION),
    };
    let text = match report.render(request.format, &request.constants) {
        Ok(t) => t,
        Err(e) => return (format!("error: {e}\n"), ExitStatus::COMPUTATION),
    };
    if let Some(path) = &request.output_path {
        if let Err(e) = fs::write(path, &text) {
            return (
                format!("error: cannot write {}: {e}\n", path.display()),
                ExitStatus::COMPUTATION,
            );
        }
    }
    (text, report.exit_status())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cells_render_locale_free() {
        assert_eq!(Cell::Real(0.375).to_string(), "3.75e-1");
        assert_eq!(Cell::Real(-2.0).to_string(), "-2e0");
        assert_eq!(Cell::Missing.to_string(), "");
        assert_eq!(Cell::from(Some(3u32)).to_string(), "3");
        assert_eq!(Cell::Real(f64::NAN).to_json(), Value::Null);
    }

    #[test]
    fn mass_flag() {
        let base = PhysicalConstants::default();
        assert_eq!(parse_mass("electron", base).unwrap(), base);
        assert_eq!(parse_mass("938272088.16", base).unwrap().rest_energy, 938272088.16);
        assert!(parse_mass("-1", base).is_err());
        assert!(parse_mass("proton", base).is_err());
    }

    #[test]
    fn request_validation() {
        let mut r = ReportRequest::new(Command::Spectrum);
        assert!(r.validate().is_ok());
        r.levels = 0;
        assert!(r.validate().is_err());
        let mut r = ReportRequest::new(Command::StateDump);
        r.samples = 100;
        assert!(r.validate().is_err());
        let mut r = ReportRequest::new(Command::Spectrum);
        r.geometry = GeometryOrder::FOUR_G;
        r.textbook_3g = true;
        assert!(r.validate().is_err());
    }

    #[test]
    fn csv_and_json_shapes() {
        let r = run(&ReportRequest::new(Command::Spectrum)).unwrap();
        let csv = r.to_csv().unwrap();
        assert!(csv.starts_with("n,k_n_per_nm,energy_ev,normalization,dispersion_ratio\n"));
        assert_eq!(csv.lines().count(), 2);
        let json: Value = serde_json::from_str(&r.to_json(&PhysicalConstants::default()).unwrap()).unwrap();
        assert_eq!(json["meta"]["command"], "spectrum");
        assert_eq!(json["rows"].as_array().unwrap().len(), 1);
        assert!(json["meta"]["constants"]["hbar_c_ev_nm"].is_number());
    }

    #[test]
    fn two_g_spectrum_is_a_computation_error() {
        let mut r = ReportRequest::new(Command::Spectrum);
        r.geometry = GeometryOrder::TWO_G;
        let (text, status) = execute(&r);
        assert_eq!(status, ExitStatus::COMPUTATION);
        assert!(text.contains("no bound states"));
    }
}
