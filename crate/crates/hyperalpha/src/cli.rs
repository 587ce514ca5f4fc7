//! Command-line surface: compute, bound, transform, generate, enumerate,
//! verify. Reports are emitted as a stable JSON envelope
//! `{command, inputs, alpha, results[], version}` or as a human rendering of
//! the same values; all floats are rounded to 15 significant digits in both
//! modes so the two are numerically identical.
//!
//! Exit codes: 2 parse failure, 3 numeric non-convergence, 4 precondition
//! violation, 5 extremal mismatch.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds::{self, BoundsError};
use crate::families::FamilySpec;
use crate::hypergraph::{HypergraphError, UniformHypergraph};
use crate::spectral::{spectral_radius, Alpha, SpectralError, SpectralOptions};
use crate::transforms::{self, TransformError, TransformOutcome};
use crate::verify::{self, FamilyConstraint, VerifyError};

#[derive(Parser)]
#[command(name = "hyperalpha", version, about = "alpha-spectral analysis of k-uniform hypergraphs")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Comma-separated alpha grid, each in [0, 1)
    #[arg(long, global = true, default_value = "0")]
    alpha: String,
    /// Relative bracket-width stopping tolerance
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true)]
    max_iter: Option<usize>,
    /// Diagonal shift of the power iteration
    #[arg(long, global = true)]
    shift: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Human)]
    format: OutputFormat,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Human,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute rho_alpha and the Perron vector (disconnected inputs are
    /// decomposed per component)
    Spectral { input: PathBuf },
    /// Evaluate every applicable upper bound with slack and equality case
    Bounds { input: PathBuf },
    /// Emit a named family member in .uhg format
    Generate {
        #[command(subcommand)]
        family: FamilyCmd,
    },
    /// Apply a rewiring and report the spectral comparison
    Transform {
        input: PathBuf,
        #[command(subcommand)]
        op: TransformCmd,
    },
    /// List all isomorphism classes of hypertrees (or hypercacti with --r)
    Enumerate {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        /// Cycle count; omit for hypertrees
        #[arg(long)]
        r: Option<usize>,
    },
    /// Run an extremality suite; exits 5 on any mismatch
    Verify {
        #[command(subcommand)]
        suite: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// S_{m,k}: m edges through one center
    Star { m: usize, k: usize },
    /// P_{m,k}: loose path
    Path { m: usize, k: usize },
    /// H_{m,r,k}: r two-edge cycles plus pendant edges at a hub
    Cactus { m: usize, r: usize, k: usize },
    /// S_{m,d,k}: diameter-d broom
    Broom { m: usize, d: usize, k: usize },
    /// T_{m,t,k}: t almost-equal legs
    Spider { m: usize, t: usize, k: usize },
}

impl FamilyCmd {
    fn spec(&self) -> FamilySpec {
        match *self {
            FamilyCmd::Star { m, k } => FamilySpec::Star { m, k },
            FamilyCmd::Path { m, k } => FamilySpec::LoosePath { m, k },
            FamilyCmd::Cactus { m, r, k } => FamilySpec::CactusH { m, r, k },
            FamilyCmd::Broom { m, d, k } => FamilySpec::BroomS { m, d, k },
            FamilyCmd::Spider { m, t, k } => FamilySpec::SpiderT { m, t, k },
        }
    }
}

#[derive(Subcommand)]
enum TransformCmd {
    /// Rehome edges to --u; pair each --edge with the --from vertex it leaves
    Move {
        #[arg(long)]
        u: usize,
        #[arg(long = "edge", required = true)]
        edges: Vec<usize>,
        #[arg(long = "from", required = true)]
        froms: Vec<usize>,
    },
    /// Swap the vertex sets --us of edge --e and --vs of edge --f
    Switch {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        f: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        us: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        vs: Vec<usize>,
    },
    /// Append a pendant path of --s edges at --u
    AttachPath {
        #[arg(long)]
        u: usize,
        #[arg(long)]
        s: usize,
    },
    /// Compare G_u(p,q) against G_u(p+1,q-1)
    Graft {
        #[arg(long)]
        u: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Rehome the branches of edge --edge to --keep
    Consolidate {
        #[arg(long)]
        edge: usize,
        #[arg(long)]
        keep: usize,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Winner over all hypertrees (optionally diameter- or pendant-filtered)
    Hypertrees {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, conflicts_with = "t")]
        d: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
    },
    /// Winner over unicyclic hypergraphs
    Unicyclic {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
    },
    /// Winner over hypercacti with r cycles
    Hypercacti {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
    },
    /// Strict decrease of rho along the broom diameter chain
    BroomChain {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
    },
}

pub struct CliError {
    pub code: i32,
    pub msg: String,
}

impl CliError {
    fn new(code: i32, msg: impl Into<String>) -> Self {
        CliError { code, msg: msg.into() }
    }
}

impl From<HypergraphError> for CliError {
    fn from(e: HypergraphError) -> Self {
        CliError::new(2, e.to_string())
    }
}

impl From<SpectralError> for CliError {
    fn from(e: SpectralError) -> Self {
        match e {
            SpectralError::NoConvergence(_) => CliError::new(3, e.to_string()),
            _ => CliError::new(4, e.to_string()),
        }
    }
}

impl From<TransformError> for CliError {
    fn from(e: TransformError) -> Self {
        match e {
            TransformError::Graph(g) => g.into(),
            TransformError::Spectral(s) => s.into(),
            _ => CliError::new(4, e.to_string()),
        }
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::Graph(g) => g.into(),
            BoundsError::Spectral(s) => s.into(),
            _ => CliError::new(4, e.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Graph(g) => g.into(),
            VerifyError::Spectral(s) => s.into(),
            VerifyError::ExtremalMismatch { .. } | VerifyError::ChainViolation { .. } => {
                CliError::new(5, e.to_string())
            }
            _ => CliError::new(4, e.to_string()),
        }
    }
}

impl From<crate::families::FamilyError> for CliError {
    fn from(e: crate::families::FamilyError) -> Self {
        CliError::new(4, e.to_string())
    }
}

fn sig15(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        x
    } else {
        format!("{x:.14e}").parse().expect("sig15 round trip")
    }
}

/// Rounds every float in a JSON tree to 15 significant digits.
fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) => {
            if n.is_f64() {
                let x = sig15(n.as_f64().unwrap());
                *v = serde_json::Number::from_f64(x).map(Value::Number).unwrap_or(Value::Null);
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

fn render_human(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (key, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}{key}:\n"));
                        render_human(val, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{key}: {val}\n")),
                }
            }
        }
        Value::Array(items) => {
            if items.iter().all(|x| !matches!(x, Value::Object(_) | Value::Array(_))) {
                let words: Vec<String> = items.iter().map(Value::to_string).collect();
                out.push_str(&format!("{pad}[{}]\n", words.join(", ")));
            } else {
                for (i, item) in items.iter().enumerate() {
                    out.push_str(&format!("{pad}- #{i}\n"));
                    render_human(item, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{other}\n")),
    }
}

struct Ctx {
    alphas: Vec<Alpha>,
    opts: SpectralOptions,
    format: OutputFormat,
    out: Option<PathBuf>,
    seed: u64,
}

impl Ctx {
    fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let mut alphas = Vec::new();
        for piece in cli.alpha.split(',') {
            let value: f64 = piece
                .trim()
                .parse()
                .map_err(|_| CliError::new(4, format!("bad alpha value: {piece}")))?;
            alphas.push(Alpha::new(value).map_err(|e| CliError::new(4, e.to_string()))?);
        }
        let mut opts = SpectralOptions::default();
        if let Some(tol) = cli.tol {
            if !tol.is_finite() || tol <= 0.0 {
                return Err(CliError::new(4, "tolerance must be > 0"));
            }
            opts.tol = tol;
        }
        if let Some(mi) = cli.max_iter {
            opts.max_iter = mi;
        }
        if let Some(shift) = cli.shift {
            if !shift.is_finite() || shift <= 0.0 {
                return Err(CliError::new(4, "shift must be > 0"));
            }
            opts.shift = shift;
        }
        Ok(Ctx {
            alphas,
            opts,
            format: cli.format,
            out: cli.out.clone(),
            seed: cli.seed,
        })
    }

    fn write(&self, text: &str) -> Result<(), CliError> {
        match &self.out {
            Some(path) => fs::write(path, text)
                .map_err(|e| CliError::new(4, format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn emit(&self, command: &str, inputs: Value, results: Vec<Value>) -> Result<(), CliError> {
        let mut envelope = json!({
            "command": command,
            "inputs": inputs,
            "alpha": self.alphas.iter().map(|a| a.get()).collect::<Vec<f64>>(),
            "results": results,
            "version": env!("CARGO_PKG_VERSION"),
        });
        round_floats(&mut envelope);
        let text = match self.format {
            OutputFormat::Json => format!("{}\n", serde_json::to_string_pretty(&envelope).unwrap()),
            OutputFormat::Human => {
                let mut buf = String::new();
                render_human(&envelope, 0, &mut buf);
                buf
            }
        };
        self.write(&text)
    }
}

fn read_graph(path: &PathBuf) -> Result<UniformHypergraph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::new(2, format!("cannot read {}: {e}", path.display())))?;
    Ok(UniformHypergraph::parse(&text)?)
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let ctx = Ctx::from_cli(&cli)?;
    match &cli.command {
        Command::Spectral { input } => cmd_spectral(&ctx, input),
        Command::Bounds { input } => cmd_bounds(&ctx, input),
        Command::Generate { family } => cmd_generate(&ctx, family),
        Command::Transform { input, op } => cmd_transform(&ctx, input, op),
        Command::Enumerate { m, k, r } => cmd_enumerate(&ctx, *m, *k, *r),
        Command::Verify { suite } => cmd_verify(&ctx, suite),
    }
}

fn cmd_spectral(ctx: &Ctx, input: &PathBuf) -> Result<(), CliError> {
    let g = read_graph(input)?;
    let comps = g.components();
    let mut results = Vec::new();
    for &alpha in &ctx.alphas {
        let mut records = Vec::new();
        let mut best = (0usize, f64::NEG_INFINITY);
        for (ci, (vertices, sub)) in comps.iter().enumerate() {
            let record = match sub {
                Some(h) => {
                    let res = spectral_radius(h, alpha, &ctx.opts)?;
                    if res.rho > best.1 {
                        best = (ci, res.rho);
                    }
                    json!({
                        "vertices": vertices,
                        "rho": res.rho,
                        "perron": res.perron,
                        "iterations": res.iterations,
                        "residual_inf": res.residual_inf,
                        "bracket": [res.bracket.0, res.bracket.1],
                    })
                }
                None => {
                    if best.1 < 0.0 {
                        best = (ci, 0.0);
                    }
                    json!({ "vertices": vertices, "rho": 0.0, "edgeless": true })
                }
            };
            records.push(record);
        }
        results.push(json!({
            "alpha": alpha.get(),
            "rho": best.1,
            "max_component": best.0,
            "components": records,
        }));
    }
    ctx.emit(
        "spectral",
        json!({ "input": input.display().to_string(), "k": g.k(), "n": g.n(), "m": g.m(),
                "tol": ctx.opts.tol, "shift": ctx.opts.shift }),
        results,
    )
}

fn cmd_bounds(ctx: &Ctx, input: &PathBuf) -> Result<(), CliError> {
    let g = read_graph(input)?;
    if !g.is_connected() {
        return Err(CliError::new(4, "bounds require a connected hypergraph"));
    }
    let mut results = Vec::new();
    for &alpha in &ctx.alphas {
        let res = spectral_radius(&g, alpha, &ctx.opts)?;
        let mut reports = vec![
            bounds::bound_max_degree(&g),
            bounds::bound_thm31(&g, alpha)?,
            bounds::bound_thm31_weak(&g, alpha)?,
        ];
        let (a, b) = bounds::certificates_thm32(&g, alpha, &res)?;
        reports.push(a);
        reports.push(b);
        reports.extend(bounds::bounds_lgz(&g, alpha, Some(&res))?);
        let rows: Vec<Value> = reports
            .iter()
            .map(|r| {
                let mut v = serde_json::to_value(r).unwrap();
                v["slack"] = json!(r.value - res.rho);
                v
            })
            .collect();
        results.push(json!({ "alpha": alpha.get(), "rho": res.rho, "bounds": rows }));
    }
    ctx.emit(
        "bounds",
        json!({ "input": input.display().to_string(), "k": g.k(), "n": g.n(), "m": g.m(),
                "tol": ctx.opts.tol }),
        results,
    )
}

fn cmd_generate(ctx: &Ctx, family: &FamilyCmd) -> Result<(), CliError> {
    let g = family.spec().build()?;
    ctx.write(&g.serialize())
}

fn cmd_transform(ctx: &Ctx, input: &PathBuf, op: &TransformCmd) -> Result<(), CliError> {
    let g = read_graph(input)?;
    let mut results = Vec::new();
    for &alpha in &ctx.alphas {
        let outcome: TransformOutcome = match op {
            TransformCmd::Move { u, edges, froms } => {
                if edges.len() != froms.len() {
                    return Err(CliError::new(4, "--edge and --from must be paired"));
                }
                let moves: Vec<(usize, usize)> =
                    edges.iter().cloned().zip(froms.iter().cloned()).collect();
                transforms::check_move_increase(&g, alpha, *u, &moves, &ctx.opts)?
            }
            TransformCmd::Switch { e, f, us, vs } => {
                transforms::check_switch_compare(&g, alpha, *e, *f, us, vs, &ctx.opts)?
            }
            TransformCmd::AttachPath { u, s } => {
                let result = transforms::attach_path(&g, *u, *s)?;
                let before = spectral_radius(&g, alpha, &ctx.opts)?;
                let after = spectral_radius(&result, alpha, &ctx.opts)?;
                TransformOutcome {
                    result,
                    evidence: [("s".to_string(), *s as f64)].into(),
                    rho_before: before.rho,
                    rho_after: after.rho,
                    strict_increase: after.rho > before.rho + 1e-10,
                }
            }
            TransformCmd::Graft { u, p, q } => {
                transforms::check_graft_compare(&g, alpha, *u, *p, *q, &ctx.opts)?
            }
            TransformCmd::Consolidate { edge, keep } => {
                transforms::check_consolidate_increase(&g, alpha, *edge, *keep, &ctx.opts)?
            }
        };
        let mut v = serde_json::to_value(&outcome).unwrap();
        v["result_uhg"] = json!(outcome.result.serialize());
        results.push(json!({ "alpha": alpha.get(), "outcome": v }));
    }
    ctx.emit(
        "transform",
        json!({ "input": input.display().to_string(), "k": g.k(), "n": g.n(), "m": g.m() }),
        results,
    )
}

fn cmd_enumerate(ctx: &Ctx, m: usize, k: usize, r: Option<usize>) -> Result<(), CliError> {
    let classes = match r {
        None => verify::enumerate_hypertrees(m, k)?,
        Some(r) => verify::enumerate_hypercacti(m, k, r)?,
    };
    let mut results = Vec::new();
    for g in &classes {
        let mut rho = Vec::new();
        for &alpha in &ctx.alphas {
            rho.push(spectral_radius(g, alpha, &ctx.opts)?.rho);
        }
        results.push(json!({ "uhg": g.serialize(), "edges": g.edges(), "n": g.n(), "rho": rho }));
    }
    ctx.emit(
        "enumerate",
        json!({ "m": m, "k": k, "r": r, "classes": classes.len() }),
        results,
    )
}

fn cmd_verify(ctx: &Ctx, suite: &VerifyCmd) -> Result<(), CliError> {
    let _ = ctx.seed; // deterministic suites; seed only matters for sweeps
    match suite {
        VerifyCmd::BroomChain { m, k } => {
            let rows = verify::verify_broom_chain(*m, *k, &ctx.alphas)?;
            let results = rows
                .iter()
                .enumerate()
                .map(|(i, row)| json!({ "d": i + 2, "rho": row }))
                .collect();
            ctx.emit("verify", json!({ "suite": "broom_chain", "m": m, "k": k }), results)
        }
        other => {
            let constraint = match *other {
                VerifyCmd::Hypertrees { m, k, d: Some(d), .. } => {
                    FamilyConstraint::HypertreesDiameter { m, k, d }
                }
                VerifyCmd::Hypertrees { m, k, t: Some(t), .. } => {
                    FamilyConstraint::HypertreesPendant { m, k, t }
                }
                VerifyCmd::Hypertrees { m, k, .. } => FamilyConstraint::Hypertrees { m, k },
                VerifyCmd::Unicyclic { m, k } => FamilyConstraint::Unicyclic { m, k },
                VerifyCmd::Hypercacti { m, k, r } => FamilyConstraint::Hypercacti { m, k, r },
                VerifyCmd::BroomChain { .. } => unreachable!(),
            };
            let report = verify::verify_extremal(constraint, &ctx.alphas)?;
            let value = serde_json::to_value(&report).unwrap();
            ctx.emit("verify", json!({ "suite": "extremal" }), vec![value])
        }
    }
}
