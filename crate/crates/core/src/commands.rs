//! The `qsobp` command-line tool.
//!
//! Every subcommand takes one operator source: an inline model
//! (`--model two-type|four-type|t-map` with `--a --b --c --d --a0 --c0`), an
//! operator document (`--operator`) or a construction document
//! (`--construction`). Trajectories and sweeps are written as CSV, everything
//! else as JSON. Exit codes: 0 when the command ran (a non-converged orbit is
//! a result, not a failure), 2 for bad input, 3 for I/O failures.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::construction::{is_identity, BisexualOperator};
use crate::dynamics::{
    classify_fixed_point_2d, conserved_quantity_drift, find_fixed_points_grid, iterate,
    iterate_map, FixedPointKind, Rect, Trajectory,
};
use crate::error::Error;
use crate::four_type::{
    classify_block, fixed_points_t, lift_to_v4, predict_limit_t, regime, slice_of,
    t_derivative_at_fixed, t_step, v4_step, FixedSet, FourTypeParams, PlanarParams, SliceState,
    TMapParams,
};
use crate::io::{operator_from_json, operator_to_json, ConstructionDoc};
use crate::simplex::{nan_max, state_distance, PopulationState, Tolerance};
use crate::two_type::{
    fixed_sets_w, invariant_line_c, jacobian_w, lift_to_v, predict_limit_v, predict_limit_w,
    w_step, FixedSetsW, ReducedState2, TwoTypeParams,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Mismatch allowed between predicted and iterated limits in `verify`.
pub const MATCH_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "qsobp", version, about = "Quadratic stochastic operators of bisexual populations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandArgs,
}

#[derive(Debug, Subcommand)]
pub enum CommandArgs {
    /// Build an operator from a construction document.
    Construct(RunArgs),
    /// Iterate an operator and write the trajectory.
    Iterate(RunArgs),
    /// Locate fixed points of a model.
    FixedPoints(RunArgs),
    /// Classify the fixed points of a model.
    Classify(RunArgs),
    /// Closed-form limit of an orbit.
    Predict(RunArgs),
    /// Compare predicted and iterated limits over a parameter grid.
    Verify(RunArgs),
    /// Iterate over a parameter grid and tabulate limits.
    Sweep(RunArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Model {
    TwoType,
    FourType,
    TMap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[arg(long, value_enum)]
    pub model: Option<Model>,
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub b: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub c: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub d: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub a0: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub c0: Option<f64>,
    /// Four-type model on a + c = 1: work with the one-dimensional map (c = 1 - a).
    #[arg(long)]
    pub critical_line: bool,
    /// Operator document.
    #[arg(long)]
    pub operator: Option<PathBuf>,
    /// Construction document.
    #[arg(long)]
    pub construction: Option<PathBuf>,
    /// Comma-separated coordinates, `random`, or `grid:N`.
    #[arg(long)]
    pub state: Option<String>,
    #[arg(long)]
    pub iter_eps: Option<f64>,
    #[arg(long)]
    pub abs_eps: Option<f64>,
    #[arg(long)]
    pub max_iters: Option<usize>,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Summary JSON for `iterate` (stderr when omitted).
    #[arg(long)]
    pub summary: Option<PathBuf>,
    /// Cells per axis for `verify`, lattice size for `fixed-points`, curve samples for `classify`.
    #[arg(long, default_value_t = 10)]
    pub grid: usize,
    /// Phase-portrait point streams written by `verify`.
    #[arg(long)]
    pub portrait: Option<PathBuf>,
    /// Swept parameter `name=lo:hi:count` (repeatable; first is outermost).
    #[arg(long)]
    pub vary: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CommandName {
    Construct,
    Iterate,
    FixedPoints,
    Classify,
    Predict,
    Verify,
    Sweep,
}

/// Named model parameters as given on the command line.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct ParamSet {
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub c: Option<f64>,
    pub d: Option<f64>,
    pub a0: Option<f64>,
    pub c0: Option<f64>,
}

impl ParamSet {
    fn get(&self, name: &str) -> CliResult<f64> {
        let v = match name {
            "a" => self.a,
            "b" => self.b,
            "c" => self.c,
            "d" => self.d,
            "a0" => self.a0,
            "c0" => self.c0,
            _ => None,
        };
        v.ok_or_else(|| input(format!("missing --{name}")))
    }

    fn set(&mut self, name: &str, value: f64) -> CliResult<()> {
        let slot = match name {
            "a" => &mut self.a,
            "b" => &mut self.b,
            "c" => &mut self.c,
            "d" => &mut self.d,
            "a0" => &mut self.a0,
            "c0" => &mut self.c0,
            _ => return Err(input(format!("unknown parameter {name:?}"))),
        };
        *slot = Some(value);
        Ok(())
    }

    fn two_type(&self) -> CliResult<TwoTypeParams> {
        Ok(TwoTypeParams::new(self.get("a")?, self.get("b")?)?)
    }

    fn four_type(&self) -> CliResult<FourTypeParams> {
        Ok(FourTypeParams::new(
            self.get("a")?,
            self.get("b")?,
            self.get("c")?,
            self.get("d")?,
            self.get("a0")?,
            self.get("c0")?,
        )?)
    }

    /// Rates only; the slice is a placeholder until a state fixes it.
    fn four_type_rates(&self) -> CliResult<FourTypeParams> {
        Ok(FourTypeParams::new(
            self.get("a")?,
            self.get("b")?,
            self.get("c")?,
            self.get("d")?,
            self.a0.unwrap_or(0.5),
            self.c0.unwrap_or(0.5),
        )?)
    }

    fn t_map(&self) -> CliResult<TMapParams> {
        let a = self.get("a")?;
        if let Some(c) = self.c {
            if (a + c - 1.0).abs() > crate::four_type::CRITICAL_TOLERANCE {
                return Err(input(format!("the one-dimensional map needs a + c = 1, got {}", a + c)));
            }
        }
        Ok(TMapParams::new(a, self.get("a0")?, self.get("c0")?)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OperatorSource {
    Inline { model: Model, params: ParamSet },
    OperatorFile(PathBuf),
    ConstructionFile(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InitialState {
    Coords(Vec<f64>),
    Grid(usize),
    Random,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VarySpec {
    pub name: String,
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
}

impl VarySpec {
    pub fn parse(text: &str) -> CliResult<Self> {
        let bad = || input(format!("--vary expects name=lo:hi:count, got {text:?}"));
        let (name, range) = text.split_once('=').ok_or_else(bad)?;
        let parts: Vec<&str> = range.split(':').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let lo: f64 = parts[0].trim().parse().map_err(|_| bad())?;
        let hi: f64 = parts[1].trim().parse().map_err(|_| bad())?;
        let count: usize = parts[2].trim().parse().map_err(|_| bad())?;
        let name = name.trim().to_string();
        ParamSet::default().set(&name, 0.0)?;
        Ok(Self { name, lo, hi, count })
    }

    /// `count` evenly spaced values from `lo` to `hi` inclusive.
    pub fn values(&self) -> Vec<f64> {
        match self.count {
            0 => Vec::new(),
            1 => vec![self.lo],
            n => (0..n)
                .map(|i| self.lo + (self.hi - self.lo) * i as f64 / (n - 1) as f64)
                .collect(),
        }
    }
}

/// A fully validated invocation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunSpec {
    pub command: CommandName,
    pub source: OperatorSource,
    pub state: Option<InitialState>,
    pub tolerance: Tolerance,
    pub seed: u64,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub summary: Option<PathBuf>,
    pub grid: usize,
    pub portrait: Option<PathBuf>,
    pub vary: Vec<VarySpec>,
}

fn parse_state(text: &str) -> CliResult<InitialState> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("random") {
        return Ok(InitialState::Random);
    }
    if let Some(n) = t.strip_prefix("grid:") {
        let n = n
            .trim()
            .parse()
            .map_err(|_| input(format!("bad grid size in --state {text:?}")))?;
        return Ok(InitialState::Grid(n));
    }
    let coords = t
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| input(format!("bad coordinate {p:?} in --state")))
        })
        .collect::<CliResult<Vec<f64>>>()?;
    Ok(InitialState::Coords(coords))
}

impl RunSpec {
    pub fn from_args(command: CommandName, args: RunArgs) -> CliResult<Self> {
        let params = ParamSet {
            a: args.a,
            b: args.b,
            c: args.c,
            d: args.d,
            a0: args.a0,
            c0: args.c0,
        };
        let model = match (args.model, args.critical_line) {
            (Some(Model::TwoType), true) => {
                return Err(input("--critical-line applies to the four-type model"))
            }
            (Some(Model::FourType) | None, true) => Some(Model::TMap),
            (m, _) => m,
        };
        let mut sources = Vec::new();
        if let Some(model) = model {
            sources.push(OperatorSource::Inline { model, params });
        }
        if let Some(p) = args.operator {
            sources.push(OperatorSource::OperatorFile(p));
        }
        if let Some(p) = args.construction {
            sources.push(OperatorSource::ConstructionFile(p));
        }
        if sources.len() != 1 {
            return Err(input(
                "give exactly one of --model, --operator, --construction",
            ));
        }
        let source = sources.pop().expect("one source");
        let defaults = Tolerance::default();
        let tolerance = Tolerance {
            abs_eps: args.abs_eps.unwrap_or(defaults.abs_eps),
            iter_eps: args.iter_eps.unwrap_or(defaults.iter_eps),
            max_iters: args.max_iters.unwrap_or(defaults.max_iters),
        };
        tolerance.validate()?;
        let state = args.state.as_deref().map(parse_state).transpose()?;
        let tabular = matches!(command, CommandName::Iterate | CommandName::Sweep);
        let format = match args.format {
            Some(Format::Csv) if !tabular => {
                return Err(input("CSV output is only available for iterate and sweep"))
            }
            Some(f) => f,
            None if tabular => Format::Csv,
            None => Format::Json,
        };
        let vary = args
            .vary
            .iter()
            .map(|v| VarySpec::parse(v))
            .collect::<CliResult<Vec<_>>>()?;
        Ok(Self {
            command,
            source,
            state,
            tolerance,
            seed: args.seed,
            output: args.output,
            format,
            summary: args.summary,
            grid: args.grid,
            portrait: args.portrait,
            vary,
        })
    }

    fn inline(&self) -> CliResult<(Model, ParamSet)> {
        match &self.source {
            OperatorSource::Inline { model, params } => Ok((*model, *params)),
            _ => Err(input("this command needs an inline --model")),
        }
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let (name, args) = match cli.command {
        CommandArgs::Construct(a) => (CommandName::Construct, a),
        CommandArgs::Iterate(a) => (CommandName::Iterate, a),
        CommandArgs::FixedPoints(a) => (CommandName::FixedPoints, a),
        CommandArgs::Classify(a) => (CommandName::Classify, a),
        CommandArgs::Predict(a) => (CommandName::Predict, a),
        CommandArgs::Verify(a) => (CommandName::Verify, a),
        CommandArgs::Sweep(a) => (CommandName::Sweep, a),
    };
    match RunSpec::from_args(name, args).and_then(|spec| run(&spec)) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn run(spec: &RunSpec) -> CliResult<()> {
    match spec.command {
        CommandName::Construct => cmd_construct(spec),
        CommandName::Iterate => cmd_iterate(spec),
        CommandName::FixedPoints => cmd_fixed_points(spec),
        CommandName::Classify => cmd_classify(spec),
        CommandName::Predict => cmd_predict(spec),
        CommandName::Verify => cmd_verify(spec),
        CommandName::Sweep => cmd_sweep(spec),
    }
}

fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write_target(path: Option<&Path>, content: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, content).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports always serialize");
    s.push('\n');
    s
}

fn load_operator(source: &OperatorSource) -> CliResult<BisexualOperator> {
    match source {
        OperatorSource::OperatorFile(p) => operator_from_json(&read_file(p)?)
            .map_err(|e| input(format!("{}: {e}", p.display()))),
        OperatorSource::ConstructionFile(p) => {
            let doc = ConstructionDoc::from_json(&read_file(p)?)
                .map_err(|e| input(format!("{}: {e}", p.display())))?;
            Ok(doc.build()?.operator)
        }
        OperatorSource::Inline { .. } => Err(input("expected an operator or construction file")),
    }
}

pub fn cmd_construct(spec: &RunSpec) -> CliResult<()> {
    let OperatorSource::ConstructionFile(path) = &spec.source else {
        return Err(input("construct needs --construction"));
    };
    let doc = ConstructionDoc::from_json(&read_file(path)?)
        .map_err(|e| input(format!("{}: {e}", path.display())))?;
    let built = doc.build()?;
    let op = &built.operator;
    let report = format!(
        "n = {}\nnu = {}\nconnected = {}\nidentity = {}\n",
        op.n(),
        op.nu(),
        built.space.is_connected(),
        is_identity(op, 20, &spec.tolerance)
    );
    write_target(spec.output.as_deref(), &(operator_to_json(op) + "\n"))?;
    if spec.output.is_some() {
        print!("{report}");
    } else {
        eprint!("{report}");
    }
    Ok(())
}

fn random_interior(rng: &mut impl Rng) -> f64 {
    0.01 + 0.98 * rng.random::<f64>()
}

/// The operator, initial state and conserved quantities of an `iterate` run.
struct IterSetup {
    op: BisexualOperator,
    s0: PopulationState,
    model: Option<Model>,
    params: ParamSet,
}

fn state_for_operator(
    op: &BisexualOperator,
    state: &Option<InitialState>,
    rng: &mut ChaCha8Rng,
) -> CliResult<PopulationState> {
    match state {
        None | Some(InitialState::Random) => Ok(PopulationState::random(op.n(), op.nu(), rng)?),
        Some(InitialState::Coords(c)) => {
            if c.len() != op.n() + op.nu() {
                return Err(input(format!(
                    "--state needs {} coordinates, got {}",
                    op.n() + op.nu(),
                    c.len()
                )));
            }
            Ok(PopulationState::from_coords(c, op.n())?)
        }
        Some(InitialState::Grid(_)) => Err(input("iterate needs a single --state")),
    }
}

fn two_type_state(coords: &[f64]) -> CliResult<PopulationState> {
    match coords.len() {
        2 => Ok(ReducedState2::new(coords[0], coords[1])?.lift()),
        4 => Ok(PopulationState::from_coords(coords, 2)?),
        n => Err(input(format!("two-type states have 2 or 4 coordinates, got {n}"))),
    }
}

fn four_type_state(params: &ParamSet, coords: &[f64]) -> CliResult<PopulationState> {
    match coords.len() {
        8 => {
            let s = PopulationState::from_coords(coords, 4)?;
            let (a0, c0) = slice_of(&s)?;
            for (name, given, actual) in [("a0", params.a0, a0), ("c0", params.c0, c0)] {
                if let Some(g) = given {
                    if (g - actual).abs() > crate::four_type::SLICE_TOLERANCE {
                        return Err(Error::NotOnSlice(format!("--{name} {g} but the state has {actual}")).into());
                    }
                }
            }
            Ok(s)
        }
        4 => {
            let p = params.four_type()?;
            Ok(SliceState::new(&p, coords[0], coords[1], coords[2], coords[3])?.lift(&p))
        }
        n => Err(input(format!("four-type states have 4 or 8 coordinates, got {n}"))),
    }
}

fn iterate_setup(spec: &RunSpec, rng: &mut ChaCha8Rng) -> CliResult<IterSetup> {
    match &spec.source {
        OperatorSource::Inline { model, params } => {
            let (op, s0) = match model {
                Model::TwoType => {
                    let p = params.two_type()?;
                    let s0 = match &spec.state {
                        Some(InitialState::Coords(c)) => two_type_state(c)?,
                        Some(InitialState::Grid(_)) => {
                            return Err(input("iterate needs a single --state"))
                        }
                        _ => ReducedState2::new(random_interior(rng), random_interior(rng))?.lift(),
                    };
                    (lift_to_v(&p), s0)
                }
                Model::FourType => {
                    let p = params.four_type_rates()?;
                    let s0 = match &spec.state {
                        Some(InitialState::Coords(c)) => four_type_state(params, c)?,
                        Some(InitialState::Grid(_)) => {
                            return Err(input("iterate needs a single --state"))
                        }
                        _ => PopulationState::random(4, 4, rng)?,
                    };
                    (lift_to_v4(&p), s0)
                }
                Model::TMap => unreachable!("handled by the one-dimensional path"),
            };
            Ok(IterSetup {
                op,
                s0,
                model: Some(*model),
                params: *params,
            })
        }
        source => {
            let op = load_operator(source)?;
            let s0 = state_for_operator(&op, &spec.state, rng)?;
            Ok(IterSetup {
                op,
                s0,
                model: None,
                params: ParamSet::default(),
            })
        }
    }
}

fn fmt_f64(v: f64) -> String {
    format!("{v}")
}

fn join(values: &[f64]) -> String {
    values.iter().map(|v| fmt_f64(*v)).collect::<Vec<_>>().join(" ")
}

fn trajectory_table(header: &[String], traj_rows: Vec<(usize, Vec<f64>)>, format: Format) -> String {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(header).expect("in-memory write");
            for (step, coords) in traj_rows {
                let mut rec = vec![step.to_string()];
                rec.extend(coords.iter().map(|v| fmt_f64(*v)));
                w.write_record(&rec).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        Format::Json => {
            let rows: Vec<Value> = traj_rows
                .into_iter()
                .map(|(step, coords)| json!({ "step": step, "state": coords }))
                .collect();
            to_json(&json!({ "columns": header, "rows": rows }))
        }
    }
}

fn rows_of<S>(traj: &Trajectory<S>, coords: impl Fn(&S) -> Vec<f64>) -> Vec<(usize, Vec<f64>)> {
    let mut rows: Vec<(usize, Vec<f64>)> = traj
        .states
        .iter()
        .zip(&traj.steps)
        .map(|(s, t)| (*t, coords(s)))
        .collect();
    if let Some(lim) = &traj.limit {
        rows.push((traj.steps_taken + 1, coords(lim)));
    }
    rows
}

pub fn cmd_iterate(spec: &RunSpec) -> CliResult<()> {
    let mut rng = spec.rng();
    if let OperatorSource::Inline {
        model: Model::TMap,
        params,
    } = &spec.source
    {
        let tp = params.t_map()?;
        let x0 = match &spec.state {
            Some(InitialState::Coords(c)) if c.len() == 1 => c[0],
            Some(InitialState::Coords(c)) => {
                return Err(input(format!("the one-dimensional map takes 1 coordinate, got {}", c.len())))
            }
            Some(InitialState::Grid(_)) => return Err(input("iterate needs a single --state")),
            _ => rng.random::<f64>(),
        };
        if !(0.0..=1.0).contains(&x0) {
            return Err(input(format!("state {x0} outside [0, 1]")));
        }
        let traj = iterate_map(|x| t_step(&tp, *x), x0, &spec.tolerance);
        let header = vec!["step".to_string(), "x".to_string()];
        write_target(
            spec.output.as_deref(),
            &trajectory_table(&header, rows_of(&traj, |x| vec![*x]), spec.format),
        )?;
        let predicted = fixed_points_t(&tp).t_star;
        let summary = json!({
            "command": "iterate",
            "model": Model::TMap,
            "params": params,
            "seed": spec.seed,
            "tolerance": spec.tolerance,
            "initial": [x0],
            "converged": traj.converged,
            "steps": traj.steps_taken,
            "limit": traj.limit.map(|x| vec![x]),
            "predicted": [predicted],
            "prediction_error": traj.limit.map(|x| (x - predicted).abs()),
        });
        return write_summary(spec, &summary);
    }

    let setup = iterate_setup(spec, &mut rng)?;
    let traj = iterate(&setup.op, setup.s0.clone(), &spec.tolerance)?;
    let (n, nu) = (setup.op.n(), setup.op.nu());
    let mut header = vec!["step".to_string()];
    header.extend((1..=n).map(|i| format!("x_{i}")));
    header.extend((1..=nu).map(|l| format!("y_{l}")));
    write_target(
        spec.output.as_deref(),
        &trajectory_table(&header, rows_of(&traj, |s| s.coords()), spec.format),
    )?;

    let mut drifts = serde_json::Map::new();
    let norm = traj
        .states
        .iter()
        .chain(traj.limit.iter())
        .map(|s| s.normalization_drift())
        .fold(0.0, nan_max);
    drifts.insert("normalization".into(), json!(norm));
    let mut predicted: Option<PopulationState> = None;
    match setup.model {
        Some(Model::TwoType) => {
            let p = setup.params.two_type()?;
            let c = conserved_quantity_drift(&traj, |s| s.x()[0] / p.a() + s.y()[0] / (1.0 - p.b()));
            drifts.insert("c_invariant".into(), json!(c));
            predicted = predict_limit_v(&p, &setup.s0).ok();
        }
        Some(Model::FourType) => {
            let pairs = |s: &PopulationState, i: usize| -> f64 {
                match i {
                    0 => s.x()[0] + s.x()[1],
                    1 => s.x()[2] + s.x()[3],
                    2 => s.y()[0] + s.y()[1],
                    _ => s.y()[2] + s.y()[3],
                }
            };
            let d = (0..4)
                .map(|i| conserved_quantity_drift(&traj, |s| pairs(s, i)))
                .fold(0.0, nan_max);
            drifts.insert("pair_sums".into(), json!(d));
            predicted = setup
                .params
                .four_type_rates()
                .and_then(|p| Ok(p.on_slice_of(&setup.s0)?))
                .ok()
                .and_then(|p| crate::four_type::predict_limit_v4(&p, &setup.s0).ok());
        }
        _ => {}
    }
    let prediction_error = match (&predicted, &traj.limit) {
        (Some(p), Some(l)) => Some(state_distance(p, l)?),
        _ => None,
    };
    let summary = json!({
        "command": "iterate",
        "model": setup.model,
        "params": setup.params,
        "seed": spec.seed,
        "tolerance": spec.tolerance,
        "initial": setup.s0.coords(),
        "converged": traj.converged,
        "steps": traj.steps_taken,
        "limit": traj.limit.as_ref().map(|s| s.coords()),
        "predicted": predicted.as_ref().map(|s| s.coords()),
        "prediction_error": prediction_error,
        "drifts": drifts,
    });
    write_summary(spec, &summary)
}

fn write_summary(spec: &RunSpec, summary: &Value) -> CliResult<()> {
    let text = to_json(summary);
    match &spec.summary {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            eprint!("{text}");
            Ok(())
        }
    }
}

fn block_fixed_points(pp: &PlanarParams, grid: usize, tol: &Tolerance) -> Value {
    let analytic = match pp.fixed_points() {
        FixedSet::Isolated(points) => json!({ "kind": "isolated", "points": points }),
        FixedSet::Curve(curve) => json!({
            "kind": "curve",
            "formula": "y = c c0 x / (a a0 + (c - a) x)",
            "points": curve.samples(grid.max(2)),
        }),
    };
    let found = find_fixed_points_grid(
        |p| {
            let (x, y) = pp.step(p[0], p[1]);
            [x, y]
        },
        &Rect::new(0.0, pp.a0, 0.0, pp.c0),
        grid.max(2),
        tol,
    );
    json!({ "params": pp, "analytic": analytic, "found": found })
}

pub fn cmd_fixed_points(spec: &RunSpec) -> CliResult<()> {
    let (model, params) = spec.inline()?;
    let tol = &spec.tolerance;
    let report = match model {
        Model::TwoType => {
            let p = params.two_type()?;
            let sets = fixed_sets_w(&p);
            let found = find_fixed_points_grid(
                |s| {
                    let out = w_step(&p, &ReducedState2 { x: s[0], y: s[1] });
                    [out.x, out.y]
                },
                &Rect::unit(),
                spec.grid.max(2),
                tol,
            );
            let points: Vec<Value> = found
                .iter()
                .map(|q| {
                    let s = ReducedState2 { x: q[0], y: q[1] };
                    let set = if sets.in_z2(&s) {
                        "Z2"
                    } else if sets.in_z1(&s) {
                        "Z1"
                    } else {
                        "none"
                    };
                    json!({ "x": q[0], "y": q[1], "set": set })
                })
                .collect();
            let all_in = found
                .iter()
                .all(|q| sets.distance(&ReducedState2 { x: q[0], y: q[1] }) <= 1e-6);
            json!({
                "model": model,
                "params": params,
                "fixed_sets": { "Z1": "y = 0, 0 <= x < 1", "Z2": "x = 1, 0 <= y <= 1" },
                "found": points,
                "all_in_fixed_sets": all_in,
            })
        }
        Model::FourType => {
            let p = params.four_type()?;
            json!({
                "model": model,
                "params": params,
                "w1": block_fixed_points(&p.w1(), spec.grid, tol),
                "w2": block_fixed_points(&p.w2(), spec.grid, tol),
            })
        }
        Model::TMap => {
            let tp = params.t_map()?;
            let fp = fixed_points_t(&tp);
            json!({
                "model": model,
                "params": tp,
                "t_star": fp.t_star,
                "label": fp.label.as_str(),
                "spurious": fp.spurious,
                "discriminant": tp.discriminant(),
            })
        }
    };
    write_target(spec.output.as_deref(), &to_json(&report))
}

pub fn cmd_classify(spec: &RunSpec) -> CliResult<()> {
    let (model, params) = spec.inline()?;
    let tol = &spec.tolerance;
    let entries = |list: Vec<([f64; 2], crate::dynamics::FixedPointClass)>| -> Vec<Value> {
        list.into_iter()
            .map(|(pt, cls)| json!({ "point": pt, "kind": cls.kind, "eigen_moduli": [cls.eigen_moduli.0, cls.eigen_moduli.1] }))
            .collect()
    };
    let report = match model {
        Model::TwoType => {
            let p = params.two_type()?;
            let n = spec.grid.max(2);
            let mut list = Vec::new();
            for i in 0..n {
                let z = FixedSetsW::z1(i as f64 / n as f64);
                list.push(([z.x, z.y], classify_fixed_point_2d(&jacobian_w(&p, &z), tol)));
            }
            for i in 0..=n {
                let z = FixedSetsW::z2(i as f64 / n as f64);
                list.push(([z.x, z.y], classify_fixed_point_2d(&jacobian_w(&p, &z), tol)));
            }
            json!({ "model": model, "params": params, "points": entries(list) })
        }
        Model::FourType => {
            let p = params.four_type()?;
            json!({
                "model": model,
                "params": params,
                "w1": entries(classify_block(&p.w1(), spec.grid, tol)),
                "w2": entries(classify_block(&p.w2(), spec.grid, tol)),
            })
        }
        Model::TMap => {
            let tp = params.t_map()?;
            let fp = fixed_points_t(&tp);
            let slope = t_derivative_at_fixed(&tp);
            let kind = if (slope.abs() - 1.0).abs() <= tol.abs_eps {
                FixedPointKind::NonHyperbolic
            } else if slope.abs() < 1.0 {
                FixedPointKind::Attracting
            } else {
                FixedPointKind::Repelling
            };
            json!({
                "model": model,
                "params": tp,
                "t_star": fp.t_star,
                "label": fp.label.as_str(),
                "derivative": slope,
                "kind": kind,
            })
        }
    };
    write_target(spec.output.as_deref(), &to_json(&report))
}

pub fn cmd_predict(spec: &RunSpec) -> CliResult<()> {
    let (model, params) = spec.inline()?;
    let Some(InitialState::Coords(coords)) = &spec.state else {
        return Err(input("predict needs --state with coordinates"));
    };
    let (s0, outcome): (Vec<f64>, crate::error::Result<Vec<f64>>) = match model {
        Model::TwoType => {
            let p = params.two_type()?;
            let s = two_type_state(coords)?;
            (s.coords(), predict_limit_v(&p, &s).map(|l| l.coords()))
        }
        Model::FourType => {
            let s = four_type_state(&params, coords)?;
            let p = params.four_type_rates()?.on_slice_of(&s)?;
            (s.coords(), crate::four_type::predict_limit_v4(&p, &s).map(|l| l.coords()))
        }
        Model::TMap => {
            let tp = params.t_map()?;
            if coords.len() != 1 {
                return Err(input("the one-dimensional map takes 1 coordinate"));
            }
            (coords.clone(), predict_limit_t(&tp, coords[0]).map(|t| vec![t]))
        }
    };
    let (limit, fixed) = match outcome {
        Ok(l) => (l, false),
        Err(Error::IsFixedPoint) => (s0.clone(), true),
        Err(e @ Error::OnCriticalLine(_)) => {
            return Err(input(format!("{e}; use --critical-line for the one-dimensional map")))
        }
        Err(e) => return Err(e.into()),
    };
    let report = json!({
        "model": model,
        "params": params,
        "initial": s0,
        "limit": limit,
        "already_fixed": fixed,
    });
    write_target(spec.output.as_deref(), &to_json(&report))
}

/// Midpoints of `n` equal cells of `(0, 1)`.
fn cell_centers(n: usize) -> Vec<f64> {
    (0..n).map(|i| (i as f64 + 0.5) / n as f64).collect()
}

#[derive(Debug, Clone, Serialize)]
struct VerifyCell {
    params: Value,
    route: &'static str,
    initial: Vec<f64>,
    predicted: Vec<f64>,
    iterated: Option<Vec<f64>>,
    converged: bool,
    steps: usize,
    mismatch: Option<f64>,
    /// Distance of an iterated limit from the fixed curve (critical cells).
    curve_residual: Option<f64>,
    pass: bool,
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, nan_max)
}

/// `(predicted, iterated, converged, steps, mismatch, curve residual)` of a critical block.
type CriticalCheck = (Vec<f64>, Vec<f64>, bool, usize, f64, f64);

fn verify_block_critical(pp: &PlanarParams, start: [f64; 2], x0: f64, tol: &Tolerance) -> CliResult<CriticalCheck> {
    let tp = TMapParams::new(pp.a, pp.a0, pp.c0)?;
    let predicted = fixed_points_t(&tp).t_star;
    let traj = iterate_map(|x| t_step(&tp, *x), x0, tol);
    let iterated = *traj.endpoint();
    let FixedSet::Curve(curve) = pp.fixed_points() else {
        unreachable!("critical blocks have a fixed curve");
    };
    let orbit = iterate_map(
        |p: &[f64; 2]| {
            let (x, y) = pp.step(p[0], p[1]);
            [x, y]
        },
        start,
        tol,
    );
    let end = orbit.endpoint();
    let residual = curve.residual(end[0], end[1]);
    Ok((
        vec![predicted],
        vec![iterated],
        traj.converged && orbit.converged,
        traj.steps_taken.max(orbit.steps_taken),
        (iterated - predicted).abs(),
        residual,
    ))
}

fn verify_block(pp: &PlanarParams, start: [f64; 2], x0: f64, tol: &Tolerance) -> CliResult<VerifyCell> {
    if pp.is_critical() {
        let (predicted, iterated, converged, steps, mismatch, residual) =
            verify_block_critical(pp, start, x0, tol)?;
        return Ok(VerifyCell {
            params: json!(pp),
            route: "t_map",
            initial: vec![x0, start[0], start[1]],
            predicted,
            iterated: Some(iterated),
            converged,
            steps,
            mismatch: Some(mismatch),
            curve_residual: Some(residual),
            pass: converged && mismatch <= MATCH_TOLERANCE && residual <= MATCH_TOLERANCE,
        });
    }
    let predicted = match pp.predict_limit(start[0], start[1]) {
        Ok(p) => p,
        Err(Error::IsFixedPoint) => start,
        Err(e) => return Err(e.into()),
    };
    let traj = iterate_map(
        |p: &[f64; 2]| {
            let (x, y) = pp.step(p[0], p[1]);
            [x, y]
        },
        start,
        tol,
    );
    let iterated = traj.limit.map(|l| l.to_vec());
    let mismatch = iterated.as_ref().map(|l| max_diff(l, &predicted));
    Ok(VerifyCell {
        params: json!(pp),
        route: "closed_form",
        initial: start.to_vec(),
        predicted: predicted.to_vec(),
        converged: traj.converged,
        steps: traj.steps_taken,
        pass: mismatch.is_some_and(|m| m <= MATCH_TOLERANCE),
        iterated,
        mismatch,
        curve_residual: None,
    })
}

fn portrait_rows(pp: &PlanarParams, label: &str, starts: usize, steps: usize, out: &mut String) {
    let fr = cell_centers(starts);
    let mut id = 0;
    for &fx in &fr {
        for &fy in &fr {
            let (mut x, mut y) = (fx * pp.a0, fy * pp.c0);
            for t in 0..=steps {
                let _ = writeln!(out, "{label},{id},{t},{},{}", fmt_f64(x), fmt_f64(y));
                (x, y) = pp.step(x, y);
            }
            id += 1;
        }
    }
}

pub fn cmd_verify(spec: &RunSpec) -> CliResult<()> {
    let (model, params) = spec.inline()?;
    let tol = spec.tolerance;
    let centers = cell_centers(spec.grid);
    let mut rng = spec.rng();
    let fixed_state = match &spec.state {
        Some(InitialState::Coords(c)) => Some(c.clone()),
        None | Some(InitialState::Random) => None,
        Some(InitialState::Grid(_)) => return Err(input("verify takes a single --state or random starts")),
    };

    // Draw every random start up front, in cell order, so results do not
    // depend on scheduling.
    let mut jobs: Vec<(f64, f64, [f64; 4], f64)> = Vec::new();
    for &p in &centers {
        for &q in &centers {
            let r = [
                random_interior(&mut rng),
                random_interior(&mut rng),
                random_interior(&mut rng),
                random_interior(&mut rng),
            ];
            jobs.push((p, q, r, rng.random::<f64>()));
        }
    }

    let cells: Vec<CliResult<VerifyCell>> = match model {
        Model::TwoType => {
            jobs.par_iter()
                .map(|&(a, b, r, _)| {
                    let p = TwoTypeParams::new(a, b)?;
                    let s0 = match &fixed_state {
                        Some(c) => ReducedState2::project(&two_type_state(c)?)?,
                        None => ReducedState2::new(r[0], r[1])?,
                    };
                    let predicted = match predict_limit_w(&p, &s0) {
                        Ok(l) => l,
                        Err(Error::IsFixedPoint) => s0,
                        Err(e) => return Err(e.into()),
                    };
                    let traj = iterate_map(|s| w_step(&p, s), s0, &tol);
                    let iterated = traj.limit.map(|l| vec![l.x, l.y]);
                    let mismatch = iterated.as_ref().map(|l| max_diff(l, &[predicted.x, predicted.y]));
                    Ok(VerifyCell {
                        params: json!({ "a": a, "b": b, "ac": a * invariant_line_c(&p, &s0) }),
                        route: "closed_form",
                        initial: vec![s0.x, s0.y],
                        predicted: vec![predicted.x, predicted.y],
                        converged: traj.converged,
                        steps: traj.steps_taken,
                        pass: mismatch.is_some_and(|m| m <= MATCH_TOLERANCE),
                        iterated,
                        mismatch,
                        curve_residual: None,
                    })
                })
                .collect()
        }
        Model::FourType => {
            let (b, d, a0, c0) = (params.get("b")?, params.get("d")?, params.get("a0")?, params.get("c0")?);
            jobs.par_iter()
                .map(|&(a, c, r, x0)| {
                    let p = FourTypeParams::new(a, b, c, d, a0, c0)?;
                    let slice = match &fixed_state {
                        Some(coords) => SliceState::from_population(&p, &four_type_state(&params, coords)?)?,
                        None => SliceState::new(&p, r[0] * a0, r[1] * c0, r[2] * (1.0 - a0), r[3] * (1.0 - c0))?,
                    };
                    let first = verify_block(&p.w1(), [slice.x, slice.y], x0, &tol)?;
                    let second = verify_block(&p.w2(), [slice.u, slice.v], x0, &tol)?;
                    let route = if first.route == "t_map" || second.route == "t_map" {
                        "t_map"
                    } else {
                        "closed_form"
                    };
                    let both = |f: fn(&VerifyCell) -> Option<f64>| match (f(&first), f(&second)) {
                        (Some(u), Some(v)) => Some(nan_max(u, v)),
                        (u, v) => u.or(v),
                    };
                    let cat = |u: &[f64], v: &[f64]| [u, v].concat();
                    Ok(VerifyCell {
                        params: json!({ "a": a, "b": b, "c": c, "d": d, "a0": a0, "c0": c0, "regime": regime(&p) }),
                        route,
                        initial: slice.lift(&p).coords(),
                        predicted: cat(&first.predicted, &second.predicted),
                        iterated: match (&first.iterated, &second.iterated) {
                            (Some(u), Some(v)) => Some(cat(u, v)),
                            _ => None,
                        },
                        converged: first.converged && second.converged,
                        steps: first.steps.max(second.steps),
                        mismatch: both(|c| c.mismatch),
                        curve_residual: both(|c| c.curve_residual),
                        pass: first.pass && second.pass,
                    })
                })
                .collect()
        }
        Model::TMap => {
            let c0 = params.get("c0")?;
            jobs.par_iter()
                .map(|&(a, a0, _, x0)| {
                    let tp = TMapParams::new(a, a0, c0)?;
                    let x0 = match &fixed_state {
                        Some(c) if c.len() == 1 => c[0],
                        Some(_) => return Err(input("the one-dimensional map takes 1 coordinate")),
                        None => x0,
                    };
                    let predicted = fixed_points_t(&tp).t_star;
                    let traj = iterate_map(|x| t_step(&tp, *x), x0, &tol);
                    let mismatch = traj.limit.map(|l| (l - predicted).abs());
                    Ok(VerifyCell {
                        params: json!({ "a": a, "a0": a0, "c0": c0, "label": fixed_points_t(&tp).label.as_str() }),
                        route: "t_map",
                        initial: vec![x0],
                        predicted: vec![predicted],
                        iterated: traj.limit.map(|l| vec![l]),
                        converged: traj.converged,
                        steps: traj.steps_taken,
                        pass: mismatch.is_some_and(|m| m <= MATCH_TOLERANCE),
                        mismatch,
                        curve_residual: None,
                    })
                })
                .collect()
        }
    };
    let cells = cells.into_iter().collect::<CliResult<Vec<_>>>()?;
    let passed = cells.iter().filter(|c| c.pass).count();
    let report = json!({
        "command": "verify",
        "model": model,
        "params": params,
        "grid": spec.grid,
        "seed": spec.seed,
        "tolerance": tol,
        "match_tolerance": MATCH_TOLERANCE,
        "passed": passed,
        "total": cells.len(),
        "pass": passed == cells.len(),
        "cells": cells,
    });
    write_target(spec.output.as_deref(), &to_json(&report))?;

    if let Some(path) = &spec.portrait {
        let (a0, c0) = (params.a0.unwrap_or(0.5), params.c0.unwrap_or(0.5));
        let mut out = String::from("regime,orbit,step,x,y\n");
        let regimes = [
            ("a+c<1", 0.3, 0.3),
            ("a+c>1", 0.7, 0.7),
            ("a+c=1", 0.4, 0.6),
        ];
        for (label, a, c) in regimes {
            let pp = PlanarParams { a, c, a0, c0 };
            portrait_rows(&pp, label, 5, 200, &mut out);
        }
        fs::write(path, out).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
struct SweepRow {
    params: ParamSet,
    initial: Vec<f64>,
    limit: Option<Vec<f64>>,
    converged: bool,
    class: String,
    error: String,
}

fn sweep_states(model: Model, params: &ParamSet, state: &Option<InitialState>, rng: &mut ChaCha8Rng) -> CliResult<Vec<Vec<f64>>> {
    match state {
        Some(InitialState::Coords(c)) => Ok(vec![c.clone()]),
        Some(InitialState::Grid(n)) => {
            let fr: Vec<f64> = (0..*n).map(|i| (i + 1) as f64 / (*n + 1) as f64).collect();
            Ok(match model {
                Model::TwoType => fr.iter().flat_map(|&x| fr.iter().map(move |&y| vec![x, y])).collect(),
                Model::TMap => fr.iter().map(|&x| vec![x]).collect(),
                Model::FourType => {
                    let (a0, c0) = (params.get("a0")?, params.get("c0")?);
                    fr.iter()
                        .flat_map(|&f| {
                            fr.iter().map(move |&g| vec![f * a0, g * c0, f * (1.0 - a0), g * (1.0 - c0)])
                        })
                        .collect()
                }
            })
        }
        None | Some(InitialState::Random) => Ok(vec![match model {
            Model::TwoType => vec![random_interior(rng), random_interior(rng)],
            Model::TMap => vec![rng.random::<f64>()],
            Model::FourType => {
                let s = PopulationState::random(4, 4, rng)?;
                s.coords()
            }
        }]),
    }
}

/// `(initial state, limit, converged, class)` of one sweep row.
type SweepOutcome = (Vec<f64>, Option<Vec<f64>>, bool, String);

fn sweep_one(model: Model, params: &ParamSet, s0: &[f64], tol: &Tolerance) -> CliResult<SweepOutcome> {
    match model {
        Model::TwoType => {
            let p = params.two_type()?;
            let s = two_type_state(s0)?;
            let r = ReducedState2::project(&s)?;
            let class = if p.a() * invariant_line_c(&p, &r) < 1.0 { "ac<1" } else { "ac>=1" };
            let traj = iterate(&lift_to_v(&p), s.clone(), tol)?;
            Ok((s.coords(), traj.limit.map(|l| l.coords()), traj.converged, class.into()))
        }
        Model::FourType => {
            let s = four_type_state(params, s0)?;
            let p = params.four_type_rates()?.on_slice_of(&s)?;
            let class = regime(&p).unwrap_or("critical");
            let traj = iterate_map(|x| v4_step(&p, x).expect("four-type state"), s.clone(), tol);
            Ok((s.coords(), traj.limit.map(|l| l.coords()), traj.converged, class.into()))
        }
        Model::TMap => {
            let tp = params.t_map()?;
            if s0.len() != 1 || !(0.0..=1.0).contains(&s0[0]) {
                return Err(input("the one-dimensional map takes 1 coordinate in [0, 1]"));
            }
            let traj = iterate_map(|x| t_step(&tp, *x), s0[0], tol);
            let class = fixed_points_t(&tp).label.as_str();
            Ok((s0.to_vec(), traj.limit.map(|l| vec![l]), traj.converged, class.into()))
        }
    }
}

pub fn cmd_sweep(spec: &RunSpec) -> CliResult<()> {
    let (model, base) = spec.inline()?;
    let mut combos: Vec<ParamSet> = vec![base];
    for v in &spec.vary {
        let values = v.values();
        let mut next = Vec::with_capacity(combos.len() * values.len());
        for c in &combos {
            for &x in &values {
                let mut p = *c;
                p.set(&v.name, x)?;
                next.push(p);
            }
        }
        combos = next;
    }
    let mut rng = spec.rng();
    let mut jobs: Vec<(ParamSet, Vec<f64>)> = Vec::new();
    for p in &combos {
        for s in sweep_states(model, p, &spec.state, &mut rng)? {
            jobs.push((*p, s));
        }
    }
    let tol = spec.tolerance;
    let rows: Vec<SweepRow> = jobs
        .par_iter()
        .map(|(p, s)| match sweep_one(model, p, s, &tol) {
            Ok((initial, limit, converged, class)) => SweepRow {
                params: *p,
                initial,
                limit,
                converged,
                class,
                error: String::new(),
            },
            Err(e) => SweepRow {
                params: *p,
                initial: s.clone(),
                limit: None,
                converged: false,
                class: String::new(),
                error: e.to_string(),
            },
        })
        .collect();

    let text = match spec.format {
        Format::Json => to_json(&json!({ "model": model, "seed": spec.seed, "rows": rows })),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["a", "b", "c", "d", "a0", "c0", "s0", "limit", "converged", "class", "error"])
                .expect("in-memory write");
            let opt = |v: Option<f64>| v.map(fmt_f64).unwrap_or_default();
            for r in &rows {
                let p = r.params;
                w.write_record([
                    opt(p.a),
                    opt(p.b),
                    opt(p.c),
                    opt(p.d),
                    opt(p.a0),
                    opt(p.c0),
                    join(&r.initial),
                    r.limit.as_deref().map(join).unwrap_or_default(),
                    r.converged.to_string(),
                    r.class.clone(),
                    r.error.clone(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
    };
    write_target(spec.output.as_deref(), &text)
}
