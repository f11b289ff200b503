//! Command-line surface: argument parsing, input ingestion and reports.
//!
//! [`run`] never exits the process; the binary prints the report and uses the
//! returned code (0 pass, 1 check failure, 2 malformed input).

use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::adjunction::{enumerate_two_cells, triangle_check, OneCell, Sign, TwoCell};
use crate::circle::{
    from_para, isotopy, random_move, rotation_morphism, Angle, CircleConfig, CircleMorphism, MONODROMY_SIGN,
};
use crate::hochschild::{describe, hc_minus_truncated, hh_ranks, lift_unit_and_trace, reliable_min_degree, AlgebraSC};
use crate::matcat::{canonical_duality, format_scalar, parse_rational, Ring};
use crate::paracyclic::{dual_translation, enumerate_maps, ParaMap, ParaObj};
use crate::trace::{transport, LabeledCircle, LabeledCircleDoc};
use crate::{laxfact, suite, Error, Result};

#[derive(Debug, Parser)]
#[command(name = "paracycle", about = "Exact checks for paracyclic combinatorics and circle traces")]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Maps of the paracyclic category, written `src:dst:v0,v1,…`.
    #[command(subcommand)]
    Para(ParaCmd),
    /// Point configurations on the circle.
    #[command(subcommand)]
    Circle(CircleCmd),
    /// The walking adjunction.
    #[command(subcommand)]
    Adj(AdjCmd),
    /// Traces of labeled circles.
    #[command(subcommand)]
    Trace(TraceCmd),
    /// Hochschild homology.
    #[command(subcommand)]
    Hh(HhCmd),
    /// Truncated negative cyclic homology.
    Hcminus(HcMinusArgs),
    /// Lax labeled circles.
    #[command(subcommand)]
    Laxfact(LaxCmd),
    /// The full acceptance run.
    Suite,
}

#[derive(Debug, Subcommand)]
enum ParaCmd {
    /// The Poincaré dual of a map.
    Dual { map: String },
    /// `second ∘ first`.
    Compose { second: String, first: String },
    /// All maps `[m] → [n]` with values in `[-offset·n, (offset+1)·n)`.
    Enumerate {
        #[arg(long)]
        src: usize,
        #[arg(long)]
        dst: usize,
        #[arg(long, default_value_t = 1)]
        offset: i64,
    },
}

#[derive(Debug, Subcommand)]
enum CircleCmd {
    /// Pass between a configuration and its paracyclic object.
    Roundtrip {
        /// Comma separated angles in `[0, 1)`, e.g. `0,1/3,1/2`.
        #[arg(long, default_value = "0")]
        points: String,
    },
    /// A random sequence of elementary moves.
    Moves {
        #[arg(long, default_value = "0")]
        points: String,
        #[arg(long, default_value_t = 5)]
        steps: usize,
    },
}

#[derive(Debug, Subcommand)]
enum AdjCmd {
    /// Unit, associativity and interchange laws on all cells with few blocks.
    Axioms {
        #[arg(long, default_value_t = 2)]
        blocks: usize,
    },
    /// The two triangle identities.
    Triangles,
}

#[derive(Debug, Args)]
struct TraceInput {
    /// A labeled circle JSON document; `-` reads standard input.
    file: Option<String>,
    /// Dimension of the identity-labeled circle used when no file is given.
    #[arg(long, default_value_t = 1)]
    dims: usize,
    #[arg(long, default_value = "0")]
    points: String,
    #[arg(long, default_value = "Q")]
    ring: String,
}

#[derive(Debug, Subcommand)]
enum TraceCmd {
    Eval(TraceInput),
    /// Transport along rational rotations and random moves.
    Invariance {
        #[command(flatten)]
        input: TraceInput,
        #[arg(long, default_value_t = 20)]
        moves: usize,
    },
}

#[derive(Debug, Subcommand)]
enum HhCmd {
    Compute(AlgebraArgs),
}

#[derive(Debug, Args)]
struct AlgebraArgs {
    /// `matrix:d`, `truncpoly:n`, `group:Cn` or a JSON file.
    #[arg(long, default_value = "matrix:1")]
    algebra: String,
    /// `Q`, `Z` or `Fp:p`; overrides the ring of a file.
    #[arg(long)]
    ring: Option<String>,
    #[arg(long, default_value_t = 3)]
    max_degree: i64,
}

#[derive(Debug, Args)]
struct HcMinusArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    #[arg(long, default_value_t = 2)]
    weight: usize,
    /// Also lift the unit of `End(V)` for `V` of this dimension and take its trace.
    #[arg(long)]
    dims: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum LaxCmd {
    Properties {
        #[arg(long, default_value_t = 1000)]
        objects: usize,
        #[arg(long, default_value_t = 500)]
        morphisms: usize,
    },
}

/// The outcome of one invocation.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    /// Witnesses of failed checks; empty exactly when the run passed.
    pub failures: Vec<String>,
    pub millis: u128,
    #[serde(skip)]
    json: bool,
}

impl Report {
    fn new(command: &str, inputs: Value) -> Self {
        Report { command: command.into(), inputs, results: Value::Object(Map::new()), failures: Vec::new(), millis: 0, json: false }
    }

    fn set(&mut self, key: &str, value: Value) {
        if let Value::Object(map) = &mut self.results {
            map.insert(key.into(), value);
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(witness());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// JSON when `--json` was given, plain text otherwise.
    pub fn render(&self) -> String {
        if self.json {
            return serde_json::to_string_pretty(self).expect("report serializes");
        }
        let mut out = format!("{}\n", self.command);
        if let Value::Object(map) = &self.results {
            for (k, v) in map {
                let text = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                out.push_str(&format!("  {k}: {text}\n"));
            }
        }
        for f in &self.failures {
            out.push_str(&format!("  failure: {f}\n"));
        }
        out.push_str(if self.passed() { "PASS" } else { "FAIL" });
        out
    }
}

/// Parse `argv` (program name first), run the command and report.
pub fn run<I, T>(argv: I) -> (i32, Report)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let start = Instant::now();
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let mut report = Report::new("usage", Value::Null);
            report.set("message", Value::String(e.to_string()));
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            if !informational {
                report.failures.push("malformed arguments".into());
            }
            return (if informational { 0 } else { 2 }, report);
        }
    };
    let (name, inputs) = describe_command(&cli);
    let mut report = Report::new(&name, inputs);
    report.json = cli.json;
    let code = match dispatch(&cli, &mut report) {
        Ok(()) if report.passed() => 0,
        Ok(()) => 1,
        Err(e) => {
            let code = if matches!(e, Error::Mismatch(_)) { 1 } else { 2 };
            report.failures.push(e.to_string());
            code
        }
    };
    report.millis = start.elapsed().as_millis();
    (code, report)
}

fn describe_command(cli: &Cli) -> (String, Value) {
    let seed = cli.seed;
    match &cli.command {
        Command::Para(ParaCmd::Dual { map }) => ("para dual".into(), json!({ "map": map })),
        Command::Para(ParaCmd::Compose { second, first }) => {
            ("para compose".into(), json!({ "second": second, "first": first }))
        }
        Command::Para(ParaCmd::Enumerate { src, dst, offset }) => {
            ("para enumerate".into(), json!({ "src": src, "dst": dst, "offset": offset }))
        }
        Command::Circle(CircleCmd::Roundtrip { points }) => ("circle roundtrip".into(), json!({ "points": points })),
        Command::Circle(CircleCmd::Moves { points, steps }) => {
            ("circle moves".into(), json!({ "points": points, "steps": steps, "seed": seed }))
        }
        Command::Adj(AdjCmd::Axioms { blocks }) => ("adj axioms".into(), json!({ "blocks": blocks })),
        Command::Adj(AdjCmd::Triangles) => ("adj triangles".into(), json!({})),
        Command::Trace(TraceCmd::Eval(t)) => ("trace eval".into(), trace_inputs(t)),
        Command::Trace(TraceCmd::Invariance { input, moves }) => {
            let mut v = trace_inputs(input);
            v["moves"] = json!(moves);
            v["seed"] = json!(seed);
            ("trace invariance".into(), v)
        }
        Command::Hh(HhCmd::Compute(a)) => ("hh compute".into(), algebra_inputs(a)),
        Command::Hcminus(h) => {
            let mut v = algebra_inputs(&h.algebra);
            v["weight"] = json!(h.weight);
            v["dims"] = json!(h.dims);
            ("hcminus".into(), v)
        }
        Command::Laxfact(LaxCmd::Properties { objects, morphisms }) => {
            ("laxfact properties".into(), json!({ "objects": objects, "morphisms": morphisms, "seed": seed }))
        }
        Command::Suite => ("suite".into(), json!({ "seed": seed })),
    }
}

fn trace_inputs(t: &TraceInput) -> Value {
    match &t.file {
        Some(f) => json!({ "file": f }),
        None => json!({ "dims": t.dims, "points": t.points, "ring": t.ring }),
    }
}

fn algebra_inputs(a: &AlgebraArgs) -> Value {
    json!({ "algebra": a.algebra, "ring": a.ring, "max_degree": a.max_degree })
}

fn dispatch(cli: &Cli, report: &mut Report) -> Result<()> {
    match &cli.command {
        Command::Para(cmd) => para(cmd, report),
        Command::Circle(cmd) => circle(cmd, cli.seed, report),
        Command::Adj(cmd) => adj(cmd, report),
        Command::Trace(cmd) => trace(cmd, cli.seed, report),
        Command::Hh(HhCmd::Compute(a)) => hh(a, report),
        Command::Hcminus(h) => hcminus(h, report),
        Command::Laxfact(LaxCmd::Properties { objects, morphisms }) => {
            let r = laxfact::property_report(cli.seed, *objects, *morphisms)?;
            report.check(r.core_passed(), || "a core property fails; see the counts".into());
            report.check(r.unit_image_exits == 0, || {
                format!(
                    "{} morphisms leave the image of the unit{}",
                    r.unit_image_exits,
                    r.unit_image_witness.as_ref().map(|w| format!(", e.g. {w}")).unwrap_or_default()
                )
            });
            report.results = serde_json::to_value(&r).expect("report serializes");
            Ok(())
        }
        Command::Suite => {
            let checks = suite::run_suite(cli.seed);
            for c in &checks {
                report.check(c.passed, || format!("{}: {}", c.name, c.detail));
                report.set(&c.name, json!({ "passed": c.passed, "detail": c.detail, "millis": c.millis }));
            }
            Ok(())
        }
    }
}

/// `src:dst:v0,v1,…`.
pub fn parse_map(text: &str) -> Result<ParaMap> {
    let bad = || Error::Parse(format!("`{text}` is not of the form src:dst:v0,v1,…"));
    let mut parts = text.splitn(3, ':');
    let (m, n, vals) = (parts.next().ok_or_else(bad)?, parts.next().ok_or_else(bad)?, parts.next().ok_or_else(bad)?);
    let m: usize = m.trim().parse().map_err(|_| bad())?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    let values = vals.split(',').map(|v| v.trim().parse::<i64>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?;
    ParaMap::new(ParaObj::new(m)?, ParaObj::new(n)?, values)
}

pub fn map_json(f: &ParaMap) -> Value {
    json!({ "src_orbits": f.src().orbits(), "dst_orbits": f.dst().orbits(), "values": f.values() })
}

/// Comma separated angles such as `0,1/3,1/2`.
pub fn parse_points(text: &str) -> Result<CircleConfig> {
    let points = text.split(',').map(|p| parse_rational(p.trim())).collect::<Result<Vec<Angle>>>()?;
    CircleConfig::new(points)
}

pub fn config_json(c: &CircleConfig) -> Value {
    Value::Array(c.points().iter().map(|p| Value::String(format_scalar(p))).collect())
}

/// `f^∨∨ ∘ σ = σ ∘ f` for the translation `σ`.
fn double_dual_law(f: &ParaMap) -> Result<bool> {
    let dd = f.poincare_dual().poincare_dual();
    Ok(dd.compose(&dual_translation(f.src()))? == dual_translation(f.dst()).compose(f)?)
}

fn para(cmd: &ParaCmd, report: &mut Report) -> Result<()> {
    match cmd {
        ParaCmd::Dual { map } => {
            let f = parse_map(map)?;
            let dual = f.poincare_dual();
            report.set("dual", map_json(&dual));
            report.check(double_dual_law(&f)?, || "the double dual is not the translated map".into());
        }
        ParaCmd::Compose { second, first } => {
            let (g, f) = (parse_map(second)?, parse_map(first)?);
            let gf = g.compose(&f)?;
            report.set("composite", map_json(&gf));
            report.check(gf.poincare_dual() == f.poincare_dual().compose(&g.poincare_dual())?, || {
                "duality does not reverse this composite".into()
            });
        }
        ParaCmd::Enumerate { src, dst, offset } => {
            let (m, n) = (ParaObj::new(*src)?, ParaObj::new(*dst)?);
            let maps = enumerate_maps(m, n, *offset);
            for f in &maps {
                let ok = ParaMap::identity(n).compose(f)? == *f
                    && f.compose(&ParaMap::identity(m))? == *f
                    && double_dual_law(f)?;
                report.check(ok, || format!("laws fail at {:?}", f.values()));
            }
            report.set("count", json!(maps.len()));
            report.set("maps", Value::Array(maps.iter().map(|f| json!(f.values())).collect()));
        }
    }
    Ok(())
}

fn circle(cmd: &CircleCmd, seed: u64, report: &mut Report) -> Result<()> {
    match cmd {
        CircleCmd::Roundtrip { points } => {
            let c = parse_points(points)?;
            let n = c.to_para();
            let standard = from_para(n);
            let iso = isotopy(&c, &standard)?;
            report.set("orbits", json!(n.orbits()));
            report.set("standard", config_json(&standard));
            report.set("isotopy", map_json(iso.para_map()));
            report.check(standard.to_para() == n, || "from_para does not invert to_para".into());
            report.check(iso.para_map().is_identity(), || "the isotopy to the standard configuration is not the identity".into());
            let looped = rotation_morphism(&c, &Angle::from_integer(1.into()));
            report.check(*looped.para_map() == ParaMap::identity(n).z_action(MONODROMY_SIGN), || {
                "a full turn does not act by the monodromy".into()
            });
        }
        CircleCmd::Moves { points, steps } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let start = parse_points(points)?;
            let mut composite = CircleMorphism::identity(&start);
            let mut para = composite.para_map().clone();
            let mut trail = Vec::new();
            for _ in 0..*steps {
                let mv = random_move(&mut rng, composite.dst(), 8);
                trail.push(json!({ "dst": config_json(mv.dst()), "map": map_json(mv.para_map()) }));
                para = mv.para_map().compose(&para)?;
                composite = mv.compose(&composite)?;
            }
            report.set("moves", Value::Array(trail));
            report.set("composite", map_json(composite.para_map()));
            report.check(*composite.para_map() == para, || "the composite disagrees with the composed maps".into());
        }
    }
    Ok(())
}

fn adj(cmd: &AdjCmd, report: &mut Report) -> Result<()> {
    match cmd {
        AdjCmd::Triangles => {
            let (left, right) = triangle_check()?;
            report.set("left", json!(left));
            report.set("right", json!(right));
            report.check(left, || "(εL)∘(Lη) ≠ id_L".into());
            report.check(right, || "(Rε)∘(ηR) ≠ id_R".into());
        }
        AdjCmd::Axioms { blocks } => {
            let signs = [Sign::Minus, Sign::Plus];
            let mut cells = 0usize;
            for x in signs {
                for y in signs {
                    let ones: Vec<OneCell> = (0..=*blocks).map(|k| OneCell::new(x, y, k)).collect();
                    for &a in &ones {
                        for &b in &ones {
                            for alpha in enumerate_two_cells(a, b) {
                                cells += 1;
                                let left = TwoCell::identity(b).vcompose(&alpha)?;
                                let right = alpha.vcompose(&TwoCell::identity(a))?;
                                let h_units = TwoCell::identity(OneCell::identity(y)).hcompose(&alpha)?
                                    == alpha
                                    && alpha.hcompose(&TwoCell::identity(OneCell::identity(x)))? == alpha;
                                report.check(left == alpha && right == alpha && h_units, || format!("unit law fails at {alpha:?}"));
                                for &c in &ones {
                                    for beta in enumerate_two_cells(b, c) {
                                        for &d in &ones {
                                            for gamma in enumerate_two_cells(c, d) {
                                                let lhs = gamma.vcompose(&beta)?.vcompose(&alpha)?;
                                                let rhs = gamma.vcompose(&beta.vcompose(&alpha)?)?;
                                                report.check(lhs == rhs, || "vertical associativity fails".into());
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            report.set("two_cells", json!(cells));
            if *blocks <= 2 {
                let interchange = suite::adjunction_laws();
                report.set("interchange", json!(interchange.detail));
                report.check(interchange.passed, || interchange.detail.clone());
            }
        }
    }
    Ok(())
}

fn read_input(path: &str) -> Result<String> {
    let read = if path == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    };
    read.map_err(|e| Error::Parse(format!("{path}: {e}")))
}

fn labeled_circle(t: &TraceInput) -> Result<LabeledCircle> {
    match &t.file {
        Some(path) => {
            let doc: LabeledCircleDoc =
                serde_json::from_str(&read_input(path)?).map_err(|e| Error::Parse(e.to_string()))?;
            doc.build()
        }
        None => {
            let ring: Ring = t.ring.parse()?;
            Ok(LabeledCircle::identity(parse_points(&t.points)?, canonical_duality(t.dims, ring)?))
        }
    }
}

fn trace(cmd: &TraceCmd, seed: u64, report: &mut Report) -> Result<()> {
    match cmd {
        TraceCmd::Eval(t) => {
            let lc = labeled_circle(t)?;
            report.set("trace", Value::String(format_scalar(&lc.evaluate_checked()?)));
        }
        TraceCmd::Invariance { input, moves } => {
            let lc = labeled_circle(input)?;
            let value = lc.evaluate()?;
            report.set("trace", Value::String(format_scalar(&value)));
            let mut checked = 0usize;
            for q in 1..=12i64 {
                for p in 0..q {
                    let theta = Angle::new(p.into(), q.into());
                    checked += 1;
                    let moved = transport(&lc, &rotation_morphism(lc.config(), &theta))?.evaluate()?;
                    report.check(moved == value, || format!("rotation by {theta} gives {}", format_scalar(&moved)));
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut current = lc;
            for step in 0..*moves {
                let mv = random_move(&mut rng, current.config(), 8);
                current = transport(&current, &mv)?;
                checked += 1;
                let moved = current.evaluate()?;
                report.check(moved == value, || format!("move {step} gives {}", format_scalar(&moved)));
            }
            report.set("transports", json!(checked));
        }
    }
    Ok(())
}

fn load_algebra(a: &AlgebraArgs, default_ring: Ring) -> Result<AlgebraSC> {
    let ring: Option<Ring> = a.ring.as_deref().map(str::parse).transpose()?;
    if std::path::Path::new(&a.algebra).is_file() {
        let alg = AlgebraSC::from_json(&read_input(&a.algebra)?)?;
        match ring {
            Some(r) if r != alg.ring() => alg.over(r),
            _ => Ok(alg),
        }
    } else {
        AlgebraSC::from_spec(&a.algebra, ring.unwrap_or(default_ring))
    }
}

fn hh(a: &AlgebraArgs, report: &mut Report) -> Result<()> {
    let alg = load_algebra(a, Ring::Rationals)?;
    let n_max = usize::try_from(a.max_degree).map_err(|_| Error::invalid("max degree", "must be nonnegative"))?;
    let groups = hh_ranks(&alg, n_max)?;
    for g in &groups {
        report.set(&g.degree.to_string(), Value::String(g.to_string()));
    }
    report.set("dims", json!(groups.iter().map(|g| g.rank).collect::<Vec<_>>()));
    report.set("summary", Value::String(describe(&groups)));
    Ok(())
}

fn hcminus(h: &HcMinusArgs, report: &mut Report) -> Result<()> {
    let alg = load_algebra(&h.algebra, Ring::Rationals)?;
    let degrees: Vec<i64> = (reliable_min_degree(h.weight)..=h.algebra.max_degree).rev().collect();
    let dims = hc_minus_truncated(&alg, h.weight, &degrees)?;
    for (n, d) in degrees.iter().zip(&dims) {
        report.set(&n.to_string(), json!(d));
    }
    report.set("reliable_from", json!(reliable_min_degree(h.weight)));
    if let Some(d) = h.dims {
        let class = lift_unit_and_trace(&canonical_duality(d, alg.ring())?, h.weight)?;
        report.set("lifted_trace", Value::String(format_scalar(&class.trace)));
        report.check(class.trace == alg.ring().from_i64(d as i64), || "the lifted unit does not trace to the dimension".into());
    }
    Ok(())
}
