//! Command-line front end. Tables go out as CSV (header row, LF, `{:.16e}`
//! floats) or JSON; `separable` encodes its verdict in the exit code.

mod noon;

pub use noon::{noon_circle, NoonCircle, NoonPoint};

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{Map, Value};

use crate::compare::{expansion_rows, pm_number_state, PictureKind};
use crate::error::{Error, Result};
use crate::fock::StateVector;
use crate::model::{
    default_cutoff, eigenstate, energy_bands, fb_modes, product_state_pm, Branch, JcParams,
};
use crate::separability::{
    eigenstate_factorization_conditions, separability_bilinear, separability_by_eigen_conditions,
    separability_fixed_n, BilinearOptions, BilinearTarget, SeparabilityVerdict, Status, Witness, DEFAULT_SEED,
};

pub const EXIT_SEPARABLE: i32 = 0;
pub const EXIT_ENTANGLED: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeparabilityMethod {
    /// Exact test inside one excitation sector.
    ClosedForm,
    /// Match a dressed eigenstate against its factorization conditions.
    Condition,
    /// Alternating least squares over polynomial factors.
    Bilinear,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BranchArg {
    Plus,
    Minus,
}

impl From<BranchArg> for Branch {
    fn from(b: BranchArg) -> Self {
        match b {
            BranchArg::Plus => Branch::Plus,
            BranchArg::Minus => Branch::Minus,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StateKind {
    /// `|m, n⟩±` from `--m` and `--n`.
    Product,
    /// Dressed eigenstate in sector `--n`.
    Eigen,
    /// `psi_0 |N,0⟩± + psi_N |0,N⟩±` in sector `--n`.
    Noon,
}

#[derive(Debug, Parser)]
#[command(name = "quasisep", version, about = "Quasiparticle states and separability under projections")]
pub struct Cli {
    #[arg(long, global = true, default_value_t = 1.0, allow_negative_numbers = true)]
    pub omega_f: f64,
    #[arg(long, global = true, default_value_t = 1.0, allow_negative_numbers = true)]
    pub omega_b: f64,
    #[arg(long, global = true, default_value_t = 1.0, allow_negative_numbers = true)]
    pub kappa_re: f64,
    #[arg(long, global = true, default_value_t = 0.0, allow_negative_numbers = true)]
    pub kappa_im: f64,
    /// Excitation number, or the `-` occupation for `expand` and `state product`.
    #[arg(long, global = true)]
    pub n: Option<u32>,
    /// `+` occupation.
    #[arg(long, global = true)]
    pub m: Option<u32>,
    #[arg(long, global = true)]
    pub cutoff: Option<u32>,
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, global = true, env = "QUASISEP_SEED")]
    pub seed: Option<u64>,
    #[arg(long, global = true, default_value_t = 32)]
    pub restarts: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Band energies over a sweep of |kappa|/delta.
    Bands {
        #[arg(long, default_value_t = 0.0)]
        ratio_min: f64,
        #[arg(long, default_value_t = 3.0)]
        ratio_max: f64,
        #[arg(long, default_value_t = 301)]
        steps: usize,
    },
    /// Real NOON superpositions on the unit circle and their verdicts.
    NoonCircle {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Expansion of |m, n>± in the original two modes.
    Expand {
        #[arg(long, default_value = "FB_quasi")]
        picture: PictureKind,
    },
    /// Separability verdict for a state file.
    Separable {
        state: PathBuf,
        #[arg(long, value_enum, default_value_t = SeparabilityMethod::ClosedForm)]
        method: SeparabilityMethod,
        #[arg(long)]
        left_degree: Option<u32>,
        #[arg(long)]
        right_degree: Option<u32>,
    },
    /// Which dressed eigenstates are ± products, for sectors n-min..=n.
    Eigencheck {
        #[arg(long, default_value_t = 1)]
        n_min: u32,
    },
    /// Writes a state file.
    State {
        #[arg(value_enum)]
        kind: StateKind,
        #[arg(long, value_enum, default_value_t = BranchArg::Plus)]
        branch: BranchArg,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        psi_0: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        psi_n: f64,
    },
}

/// Validated invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub omega_f: f64,
    pub omega_b: f64,
    pub kappa: Complex64,
    pub cutoff: Option<u32>,
    pub tol: f64,
    pub seed: u64,
    pub restarts: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub task: Task,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Task {
    Bands { ratio_min: f64, ratio_max: f64, steps: usize },
    NoonCircle { total: u32, samples: usize },
    Expand { picture: PictureKind, m: u32, n: u32 },
    Separable { state: PathBuf, method: SeparabilityMethod, degrees: (Option<u32>, Option<u32>) },
    Eigencheck { n_min: u32, n_max: u32 },
    State { kind: StateKind, m: u32, n: u32, branch: Branch, psi: (f64, f64) },
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

fn required(value: Option<u32>, flag: &str) -> Result<u32> {
    value.ok_or_else(|| usage(format!("--{flag} is required")))
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self> {
        for (name, v) in [
            ("omega-f", cli.omega_f),
            ("omega-b", cli.omega_b),
            ("kappa-re", cli.kappa_re),
            ("kappa-im", cli.kappa_im),
        ] {
            if !v.is_finite() {
                return Err(usage(format!("--{name} must be finite")));
            }
        }
        if !(cli.tol > 0.0) {
            return Err(usage("--tol must be positive"));
        }
        if cli.restarts == 0 {
            return Err(usage("--restarts must be at least 1"));
        }
        let task = match cli.command {
            Command::Bands {
                ratio_min,
                ratio_max,
                steps,
            } => {
                if cli.omega_f == cli.omega_b {
                    return Err(usage("bands are scaled by the detuning, which must be nonzero"));
                }
                if steps == 0 || !(ratio_min <= ratio_max) || !ratio_max.is_finite() || ratio_min < 0.0 {
                    return Err(usage("empty or invalid ratio range"));
                }
                Task::Bands {
                    ratio_min,
                    ratio_max,
                    steps,
                }
            }
            Command::NoonCircle { samples } => {
                let total = cli.n.unwrap_or(5);
                if total == 0 || samples == 0 {
                    return Err(usage("noon-circle needs --n >= 1 and at least one sample"));
                }
                Task::NoonCircle { total, samples }
            }
            Command::Expand { picture } => {
                let (m, n) = (required(cli.m, "m")?, required(cli.n, "n")?);
                if picture == PictureKind::FF && (m > 1 || n > 1) {
                    return Err(usage("FF occupations are limited to 0 or 1"));
                }
                Task::Expand { picture, m, n }
            }
            Command::Separable {
                state,
                method,
                left_degree,
                right_degree,
            } => Task::Separable {
                state,
                method,
                degrees: (left_degree, right_degree),
            },
            Command::Eigencheck { n_min } => {
                let n_max = cli.n.unwrap_or(20);
                if n_min == 0 || n_min > n_max {
                    return Err(usage("eigencheck needs 1 <= --n-min <= --n"));
                }
                Task::Eigencheck { n_min, n_max }
            }
            Command::State {
                kind,
                branch,
                psi_0,
                psi_n,
            } => {
                let n = required(cli.n, "n")?;
                let m = match kind {
                    StateKind::Product => required(cli.m, "m")?,
                    _ => 0,
                };
                if kind != StateKind::Product && n == 0 {
                    return Err(usage("--n must be positive"));
                }
                if kind == StateKind::Noon && !(psi_0.is_finite() && psi_n.is_finite()) {
                    return Err(usage("NOON coefficients must be finite"));
                }
                Task::State {
                    kind,
                    m,
                    n,
                    branch: branch.into(),
                    psi: (psi_0, psi_n),
                }
            }
        };
        let config = Self {
            omega_f: cli.omega_f,
            omega_b: cli.omega_b,
            kappa: Complex64::new(cli.kappa_re, cli.kappa_im),
            cutoff: cli.cutoff,
            tol: cli.tol,
            seed: cli.seed.unwrap_or(DEFAULT_SEED),
            restarts: cli.restarts,
            format: cli.format,
            out: cli.out,
            task,
        };
        config.validate_physics()?;
        Ok(config)
    }

    fn validate_physics(&self) -> Result<()> {
        let needs_params = match &self.task {
            Task::Bands { .. } => false,
            Task::Expand { picture, .. } => *picture == PictureKind::FbQuasi,
            _ => true,
        };
        if needs_params {
            self.params()?;
        }
        if let Task::NoonCircle { .. } = self.task {
            if self.kappa.norm() == 0.0 {
                return Err(usage("noon-circle needs nonzero coupling"));
            }
        }
        if let (Some(cutoff), Some(needed)) = (self.cutoff, self.needed_cutoff()) {
            if cutoff < needed {
                return Err(Error::CutoffTooSmall { needed, cutoff });
            }
        }
        Ok(())
    }

    fn needed_cutoff(&self) -> Option<u32> {
        match self.task {
            Task::Expand { picture, m, n } if picture != PictureKind::FF => Some(m + n),
            Task::State { m, n, .. } => Some(m + n),
            _ => None,
        }
    }

    pub fn params(&self) -> Result<JcParams> {
        JcParams::new(self.omega_f, self.omega_b, self.kappa)
    }
}

/// Bytes to write and the process exit code.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub output: Vec<u8>,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(output: Vec<u8>) -> Self {
        Self {
            output,
            exit_code: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Cell {
    Num(f64),
    Int(u64),
    Text(String),
    Bool(bool),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => format!("{x:.16e}"),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) => serde_json::Number::from_f64(*x).map_or(Value::Null, Value::Number),
            Cell::Int(i) => Value::from(*i),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Bool(b) => Value::from(*b),
            Cell::Empty => Value::Null,
        }
    }
}

struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(header: Vec<&'static str>) -> Self {
        Self { header, rows: Vec::new() }
    }

    fn render(&self, format: Format) -> Result<Vec<u8>> {
        match format {
            Format::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .terminator(csv::Terminator::Any(b'\n'))
                    .from_writer(Vec::new());
                w.write_record(&self.header)?;
                for row in &self.rows {
                    w.write_record(row.iter().map(Cell::csv))?;
                }
                w.into_inner().map_err(|e| Error::Io(e.into_error()))
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let obj: Map<String, Value> = self
                            .header
                            .iter()
                            .zip(row)
                            .map(|(h, c)| (h.to_string(), c.json()))
                            .collect();
                        Value::Object(obj)
                    })
                    .collect();
                let mut text = serde_json::to_vec(&rows)?;
                text.push(b'\n');
                Ok(text)
            }
        }
    }
}

fn witness_cells(verdict: &SeparabilityVerdict) -> [Cell; 2] {
    match verdict.witness {
        Some(Witness::Monomial { m, n }) => [Cell::Int(m.into()), Cell::Int(n.into())],
        _ => [Cell::Empty, Cell::Empty],
    }
}

fn status_label(status: Status) -> &'static str {
    match status {
        Status::Separable => "separable",
        Status::Entangled => "entangled",
        Status::Inconclusive => "inconclusive",
    }
}

fn bands(config: &RunConfig, ratio_min: f64, ratio_max: f64, steps: usize) -> Result<Table> {
    let delta = config.omega_f - config.omega_b;
    let mut table = Table::new(vec![
        "kappa_over_delta",
        "E_plus_over_hbar_delta",
        "E_minus_over_hbar_delta",
    ]);
    for i in 0..steps {
        let ratio = if steps == 1 {
            ratio_min
        } else {
            ratio_min + (ratio_max - ratio_min) * i as f64 / (steps - 1) as f64
        };
        let params = JcParams::new(config.omega_f, config.omega_b, Complex64::new(ratio * delta.abs(), 0.0))?;
        let e = energy_bands(&params);
        table
            .rows
            .push(vec![Cell::Num(ratio), Cell::Num(e.e_plus / delta), Cell::Num(e.e_minus / delta)]);
    }
    Ok(table)
}

fn noon_table(config: &RunConfig, total: u32, samples: usize) -> Result<Table> {
    let circle = noon_circle(&config.params()?, total, samples)?;
    let mut table = Table::new(vec![
        "kind", "t", "psi_0", "psi_N", "fb_0N_re", "fb_0N_im", "fb_1N1_re", "fb_1N1_im", "status", "m", "n",
        "residual",
    ]);
    let groups = [
        ("sample", &circle.samples),
        ("snapped", &circle.snapped),
        ("exact", &circle.exact),
    ];
    for (kind, points) in groups {
        for p in points {
            let [m, n] = witness_cells(&p.verdict);
            table.rows.push(vec![
                Cell::Text(kind.into()),
                Cell::Num(p.t),
                Cell::Num(p.psi_0),
                Cell::Num(p.psi_n),
                Cell::Num(p.amp_0n.re),
                Cell::Num(p.amp_0n.im),
                Cell::Num(p.amp_1n.re),
                Cell::Num(p.amp_1n.im),
                Cell::Text(status_label(p.verdict.status).into()),
                m,
                n,
                Cell::Num(p.verdict.residual),
            ]);
        }
    }
    Ok(table)
}

fn expand(config: &RunConfig, picture: PictureKind, m: u32, n: u32) -> Result<Table> {
    let cutoff = config.cutoff.unwrap_or(m + n);
    let state = match picture {
        PictureKind::FbQuasi => product_state_pm(m, n, &config.params()?, cutoff)?,
        _ => pm_number_state(picture, m, n, cutoff)?,
    };
    let mut table = Table::new(vec!["picture", "m", "n", "ket", "re", "im"]);
    for row in expansion_rows(picture.label(), m, n, &state) {
        table.rows.push(vec![
            Cell::Text(row.picture),
            Cell::Int(row.m.into()),
            Cell::Int(row.n.into()),
            Cell::Text(row.ket),
            Cell::Num(row.re),
            Cell::Num(row.im),
        ]);
    }
    Ok(table)
}

fn eigencheck(config: &RunConfig, n_min: u32, n_max: u32) -> Result<Table> {
    let params = config.params()?;
    let mut table = Table::new(vec!["N", "branch", "separable", "m", "n"]);
    for total in n_min..=n_max {
        let found = eigenstate_factorization_conditions(total, &params);
        for branch in Branch::BOTH {
            let hit = found.iter().find(|c| c.branch == branch);
            let (sep, m, n) = match hit {
                Some(c) => (true, Cell::Int(c.m.into()), Cell::Int(c.n.into())),
                None => (false, Cell::Empty, Cell::Empty),
            };
            table.rows.push(vec![
                Cell::Int(total.into()),
                Cell::Text(branch.to_string()),
                Cell::Bool(sep),
                m,
                n,
            ]);
        }
    }
    Ok(table)
}

fn separable(
    config: &RunConfig,
    path: &PathBuf,
    method: SeparabilityMethod,
    degrees: (Option<u32>, Option<u32>),
) -> Result<SeparabilityVerdict> {
    let params = config.params()?;
    let state = StateVector::from_json(&std::fs::read_to_string(path)?)?;
    match method {
        SeparabilityMethod::ClosedForm => separability_fixed_n(&state, &params),
        SeparabilityMethod::Condition => separability_by_eigen_conditions(&state, &params),
        SeparabilityMethod::Bilinear => {
            let top = state.sectors().last().copied().ok_or(Error::ZeroState)?;
            let left = degrees.0.unwrap_or(top);
            let right = degrees.1.unwrap_or(top);
            let cutoff = config.cutoff.unwrap_or(0).max(left + right);
            let widened = match state.modes() {
                [f, b] if f.is_fermionic() && !b.is_fermionic() => {
                    state.relabel_modes(&fb_modes(cutoff.max(b.cutoff())))?
                }
                _ => return Err(Error::ModeMismatch),
            };
            let opts = BilinearOptions {
                tol: config.tol,
                restarts: config.restarts,
                seed: config.seed,
                ..BilinearOptions::new(left, right)
            };
            separability_bilinear(&widened, BilinearTarget::Quasiparticle(&params), &opts)
        }
    }
}

fn build_state(config: &RunConfig, kind: StateKind, m: u32, n: u32, branch: Branch, psi: (f64, f64)) -> Result<StateVector> {
    let params = config.params()?;
    let total = m + n;
    let cutoff = config.cutoff.unwrap_or_else(|| default_cutoff(total));
    match kind {
        StateKind::Product => product_state_pm(m, n, &params, cutoff),
        StateKind::Eigen => eigenstate(n, branch, &params, cutoff)?.canonical_phase(),
        StateKind::Noon => {
            let north = product_state_pm(n, 0, &params, cutoff)?;
            let south = product_state_pm(0, n, &params, cutoff)?;
            north
                .scale(psi.0.into())
                .add_scaled(&south, psi.1.into())?
                .normalized()?
                .canonical_phase()
        }
    }
}

/// Executes a validated configuration. The output is not yet written.
pub fn run(config: &RunConfig) -> Result<Outcome> {
    let table = match &config.task {
        Task::Bands {
            ratio_min,
            ratio_max,
            steps,
        } => bands(config, *ratio_min, *ratio_max, *steps)?,
        Task::NoonCircle { total, samples } => noon_table(config, *total, *samples)?,
        Task::Expand { picture, m, n } => expand(config, *picture, *m, *n)?,
        Task::Eigencheck { n_min, n_max } => eigencheck(config, *n_min, *n_max)?,
        Task::Separable { state, method, degrees } => {
            let verdict = separable(config, state, *method, *degrees)?;
            let exit_code = match verdict.status {
                Status::Separable => EXIT_SEPARABLE,
                Status::Entangled => EXIT_ENTANGLED,
                Status::Inconclusive => EXIT_INCONCLUSIVE,
            };
            let mut output = verdict.to_json()?.into_bytes();
            output.push(b'\n');
            return Ok(Outcome { output, exit_code });
        }
        Task::State {
            kind,
            m,
            n,
            branch,
            psi,
        } => {
            let mut output = build_state(config, *kind, *m, *n, *branch, *psi)?.to_json()?.into_bytes();
            output.push(b'\n');
            return Ok(Outcome::ok(output));
        }
    };
    Ok(Outcome::ok(table.render(config.format)?))
}

fn emit(config: &RunConfig, bytes: &[u8]) -> Result<()> {
    match &config.out {
        Some(path) => std::fs::write(path, bytes)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
        }
    }
    Ok(())
}

/// Parses `args`, runs the command, writes its output and returns the exit
/// code: 0/1/2 for separable/entangled/inconclusive, 3 for any error.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    let result = RunConfig::from_cli(cli).and_then(|config| {
        let outcome = run(&config)?;
        emit(&config, &outcome.output)?;
        Ok(outcome.exit_code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(args: &[&str]) -> Result<RunConfig> {
        let cli = Cli::try_parse_from(std::iter::once("quasisep").chain(args.iter().copied()))
            .map_err(|e| usage(e.to_string()))?;
        RunConfig::from_cli(cli)
    }

    fn output(args: &[&str]) -> String {
        String::from_utf8(run(&config(args).unwrap()).unwrap().output).unwrap()
    }

    #[test]
    fn bands_gap_at_three() {
        let text = output(&["--omega-f", "2", "--omega-b", "1", "bands", "--ratio-min", "3", "--ratio-max", "3", "--steps", "1"]);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("kappa_over_delta,E_plus_over_hbar_delta,E_minus_over_hbar_delta"));
        let cols: Vec<f64> = lines.next().unwrap().split(',').map(|s| s.parse().unwrap()).collect();
        assert!((cols[1] - cols[2] - 10f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn bands_reject_resonance_and_empty_range() {
        assert!(config(&["bands"]).is_err());
        assert!(config(&["--omega-f", "2", "bands", "--ratio-min", "2", "--ratio-max", "1"]).is_err());
        assert!(config(&["--omega-f", "2", "bands", "--steps", "0"]).is_err());
    }

    #[test]
    fn expand_tables() {
        let ff = output(&["--m", "1", "--n", "1", "expand", "--picture", "FF"]);
        assert_eq!(ff.lines().count(), 2);
        assert!(ff.contains("\"|1,1>\""));
        let fb = output(&["--m", "2", "--n", "0", "expand"]);
        assert_eq!(fb.lines().count(), 3);
        assert!(config(&["--m", "2", "--n", "0", "expand", "--picture", "FF"]).is_err());
        assert!(config(&["--m", "2", "expand"]).is_err());
    }

    #[test]
    fn eigencheck_rows() {
        let text = output(&["--n", "4", "eigencheck"]);
        let separable: Vec<&str> = text.lines().skip(1).filter(|l| l.contains("true")).collect();
        assert_eq!(separable, vec!["1,+,true,1,0", "1,-,true,0,1", "4,+,true,3,1", "4,-,true,1,3"]);
    }

    #[test]
    fn json_tables_keep_numbers() {
        let text = output(&["--omega-f", "2", "--format", "json", "bands", "--steps", "2"]);
        let rows: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[1]["kappa_over_delta"], 3.0);
    }

    #[test]
    fn seed_defaults() {
        let c = config(&["--n", "2", "eigencheck"]).unwrap();
        assert!(c.seed == DEFAULT_SEED || std::env::var("QUASISEP_SEED").is_ok());
        let c = config(&["--seed", "7", "--n", "2", "eigencheck"]).unwrap();
        assert_eq!(c.seed, 7);
    }

    #[test]
    fn state_cutoff_checked() {
        assert!(config(&["--m", "3", "--n", "2", "--cutoff", "4", "state", "product"]).is_err());
        assert!(config(&["--n", "0", "state", "eigen"]).is_err());
    }
}
