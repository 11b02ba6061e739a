//! Command dispatch: builds modules from JSON parameters and runs the checks.

use hv_core::algebra::jacobi_check;
use hv_core::analysis::{
    distinguish, fingerprint_tensor, local_nilpotency_probe, module_axiom_check,
    t_operator_apply, DistinguishOptions, ModuleClass, Nilpotency, Probe, Separable,
    TOperatorSpec, Verdict,
};
use hv_core::modules::{
    AModule, Degree2K, DegreeNK, HBarModuleData, HighestWeightData, IndModule, IntermediateK,
    MVModule, ModuleError, ModuleOracle, OmegaK, OmegaModule, OmegaParams,
};
use hv_core::report::{Check, Report, Status};
use hv_core::tensor::{
    irreducibility_witness, submodule_chain_verify, tensor_iso_check, CyclicOptions,
    TensorModule, TensorParams,
};
use hv_core::{Generator, Scalar, SparseVec};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use crate::expr::{self, Context, ParseError};

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("missing parameter `{0}`")]
    Missing(String),
    #[error("parameter `{key}`: {reason}")]
    Invalid { key: String, reason: String },
    #[error("unknown module family `{0}`")]
    UnknownFamily(String),
    #[error("{what}: {source}")]
    Parse {
        what: String,
        #[source]
        source: ParseError,
    },
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error("{0}")]
    Unsupported(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// One invocation: a command, its module parameters and the shared knobs.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub params: Value,
    pub window: Option<i64>,
    pub cutoff: Option<(u32, u32)>,
    pub trials: Option<usize>,
    pub seed: u64,
    pub format: Format,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            params: Value::Object(Default::default()),
            window: None,
            cutoff: None,
            trials: None,
            seed: 0,
            format: Format::Json,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Jacobi,
    Axioms {
        family: String,
    },
    Act {
        family: String,
        generator: String,
        vector: String,
    },
    SubmoduleChain {
        lambda: String,
        a1: String,
        b1: String,
        a2: String,
        b2: String,
        smax: u32,
        nmax: u32,
    },
    Irreducibility {
        vector: Option<String>,
    },
    TOperator {
        family: String,
        s: u32,
        modes: Option<(i64, i64)>,
        vector: Option<String>,
        expect_zero: bool,
    },
    Nilpotency {
        family: String,
        generator: String,
        vector: Option<String>,
        max_iter: usize,
        expect_nilpotent: bool,
    },
    Fingerprint {
        bound: usize,
    },
    Iso,
    Distinguish,
    Suite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Report(Report),
    /// Printed result of `act`.
    Vector(String),
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match self {
            Outcome::Vector(_) => 0,
            Outcome::Report(r) => match r.status {
                Status::Pass => 0,
                Status::Fail => 1,
                Status::Inconclusive => 2,
            },
        }
    }
}

pub fn emit(outcome: &Outcome, format: Format) -> String {
    match outcome {
        Outcome::Report(r) => emit_report(r, format),
        Outcome::Vector(v) => match format {
            Format::Text => format!("{v}\n"),
            Format::Json => format!("{}\n", serde_json::json!({ "result": v })),
        },
    }
}

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let status = match report.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
                Status::Inconclusive => "inconclusive",
            };
            let mut out = format!("status: {status}\n");
            for c in &report.checks {
                let mark = match (c.ok, c.conclusive) {
                    (true, _) => "ok",
                    (false, true) => "FAIL",
                    (false, false) => "??",
                };
                out.push_str(&format!("[{mark}] {}\n", c.name));
                out.push_str(&format!("    inputs:   {}\n", c.inputs));
                out.push_str(&format!("    expected: {}\n", c.expected));
                out.push_str(&format!("    actual:   {}\n", c.actual));
            }
            if let Some(ce) = &report.counterexample {
                out.push_str(&format!("counterexample: {ce}\n"));
            }
            out.push_str(&format!("version: {}\n", report.version));
            if let Some(seed) = report.seed {
                out.push_str(&format!("seed: {seed}\n"));
            }
            out
        }
    }
}

/// Parsing and printing of a module's vectors.
pub trait CliModule: ModuleOracle {
    fn context(&self) -> Context;
    fn print(v: &SparseVec<Self::Basis>) -> String;
    fn parse(&self, text: &str) -> Result<SparseVec<Self::Basis>, ParseError>;
}

impl CliModule for OmegaModule {
    fn context(&self) -> Context {
        Context::Omega
    }
    fn print(v: &SparseVec<u32>) -> String {
        expr::print_omega(v)
    }
    fn parse(&self, text: &str) -> Result<SparseVec<u32>, ParseError> {
        expr::parse_omega(text)
    }
}

impl CliModule for AModule<OmegaK> {
    fn context(&self) -> Context {
        Context::Omega
    }
    fn print(v: &SparseVec<u32>) -> String {
        expr::print_omega(v)
    }
    fn parse(&self, text: &str) -> Result<SparseVec<u32>, ParseError> {
        expr::parse_omega(text)
    }
}

impl CliModule for AModule<IntermediateK> {
    fn context(&self) -> Context {
        Context::Laurent
    }
    fn print(v: &SparseVec<i64>) -> String {
        expr::print_laurent(v)
    }
    fn parse(&self, text: &str) -> Result<SparseVec<i64>, ParseError> {
        expr::parse_laurent(text)
    }
}

impl CliModule for AModule<Degree2K> {
    fn context(&self) -> Context {
        Context::Degree2
    }
    fn print(v: &SparseVec<Self::Basis>) -> String {
        expr::print_degree2(v)
    }
    fn parse(&self, text: &str) -> Result<SparseVec<Self::Basis>, ParseError> {
        expr::parse_degree2(text)
    }
}

impl CliModule for AModule<DegreeNK> {
    fn context(&self) -> Context {
        Context::DegreeN(self.family.n())
    }
    fn print(v: &SparseVec<Self::Basis>) -> String {
        expr::print_degree_n(v)
    }
    fn parse(&self, text: &str) -> Result<SparseVec<Self::Basis>, ParseError> {
        expr::parse_degree_n(text, self.family.n())
    }
}

impl CliModule for IndModule {
    fn context(&self) -> Context {
        Context::Ind
    }
    fn print(v: &SparseVec<Self::Basis>) -> String {
        expr::print_ind(v)
    }
    fn parse(&self, text: &str) -> Result<SparseVec<Self::Basis>, ParseError> {
        expr::parse_ind(text)
    }
}

impl CliModule for MVModule {
    fn context(&self) -> Context {
        Context::MV(self.v.dim)
    }
    fn print(v: &SparseVec<Self::Basis>) -> String {
        expr::print_mv(v)
    }
    fn parse(&self, text: &str) -> Result<SparseVec<Self::Basis>, ParseError> {
        expr::parse_mv(text, self.v.dim)
    }
}

impl CliModule for TensorModule {
    fn context(&self) -> Context {
        Context::Tensor(self.slots())
    }
    fn print(v: &SparseVec<Self::Basis>) -> String {
        expr::print_tensor(v)
    }
    fn parse(&self, text: &str) -> Result<SparseVec<Self::Basis>, ParseError> {
        expr::parse_tensor(text, self.slots())
    }
}

/// A module built from a family name and JSON parameters.
pub enum Built {
    Omega(OmegaModule),
    AOmega(AModule<OmegaK>),
    Intermediate(AModule<IntermediateK>),
    Degree2(AModule<Degree2K>),
    DegreeN(AModule<DegreeNK>),
    Ind(IndModule),
    MV(MVModule),
    Tensor(TensorModule),
}

macro_rules! with_module {
    ($built:expr, $m:ident => $body:expr) => {
        match $built {
            Built::Omega($m) => $body,
            Built::AOmega($m) => $body,
            Built::Intermediate($m) => $body,
            Built::Degree2($m) => $body,
            Built::DegreeN($m) => $body,
            Built::Ind($m) => $body,
            Built::MV($m) => $body,
            Built::Tensor($m) => $body,
        }
    };
}

pub const FAMILIES: [&str; 8] = [
    "omega",
    "a-omega",
    "intermediate",
    "degree2",
    "degreen",
    "ind",
    "mv",
    "tensor",
];

fn invalid(key: &str, reason: impl ToString) -> ConfigError {
    ConfigError::Invalid {
        key: key.to_string(),
        reason: reason.to_string(),
    }
}

/// A scalar parameter given as a string (`"3/2"`) or an integer.
fn scalar(params: &Value, key: &str, default: Option<i64>) -> Result<Scalar, ConfigError> {
    match params.get(key) {
        Some(Value::String(s)) => expr::parse_scalar(s).map_err(|e| ConfigError::Parse {
            what: format!("parameter `{key}`"),
            source: e,
        }),
        Some(Value::Number(n)) => n
            .as_i64()
            .map(Scalar::from_int)
            .ok_or_else(|| invalid(key, "use a string for non-integers")),
        Some(other) => Err(invalid(key, format!("expected a scalar, got {other}"))),
        None => default
            .map(Scalar::from_int)
            .ok_or_else(|| ConfigError::Missing(key.to_string())),
    }
}

fn uint(params: &Value, key: &str, default: Option<u64>) -> Result<u64, ConfigError> {
    match params.get(key) {
        Some(v) => v
            .as_u64()
            .ok_or_else(|| invalid(key, "expected a non-negative integer")),
        None => default.ok_or_else(|| ConfigError::Missing(key.to_string())),
    }
}

fn omega_params(p: &Value) -> Result<OmegaParams, ConfigError> {
    Ok(OmegaParams::new(
        scalar(p, "lambda", None)?,
        scalar(p, "alpha", None)?,
        scalar(p, "beta", Some(0))?,
    )?)
}

fn highest_weight(p: &Value) -> Result<HighestWeightData, ConfigError> {
    Ok(HighestWeightData::new(
        scalar(p, "h", None)?,
        scalar(p, "c0", None)?,
        scalar(p, "c1", Some(0))?,
        scalar(p, "c2", Some(0))?,
        scalar(p, "c3", Some(0))?,
    )?)
}

pub fn tensor_params(p: &Value) -> Result<TensorParams, ConfigError> {
    let factors = p
        .get("factors")
        .and_then(Value::as_array)
        .ok_or_else(|| ConfigError::Missing("factors".into()))?
        .iter()
        .map(omega_params)
        .collect::<Result<Vec<_>, _>>()?;
    let hw = highest_weight(p.get("hw").ok_or_else(|| ConfigError::Missing("hw".into()))?)?;
    TensorParams::new(factors, hw).map_err(|e| invalid("factors", e))
}

pub fn build(family: &str, p: &Value, rng: &mut dyn RngCore) -> Result<Built, ConfigError> {
    let alpha = || scalar(p, "alpha", None);
    let beta = || scalar(p, "beta", Some(0));
    Ok(match family {
        "omega" => Built::Omega(OmegaModule::new(omega_params(p)?)),
        "a-omega" => Built::AOmega(AModule::new(
            OmegaK::new(scalar(p, "lambda", None)?)?,
            alpha()?,
            beta()?,
        )),
        "intermediate" => Built::Intermediate(AModule::new(
            IntermediateK {
                gamma: scalar(p, "gamma", None)?,
            },
            alpha()?,
            beta()?,
        )),
        "degree2" => {
            let f = match p.get("f") {
                Some(Value::String(s)) => {
                    expr::parse_laurent(s).map_err(|e| ConfigError::Parse {
                        what: "parameter `f`".into(),
                        source: e,
                    })?
                }
                Some(_) => return Err(invalid("f", "expected a Laurent polynomial string")),
                None => return Err(ConfigError::Missing("f".into())),
            };
            Built::Degree2(AModule::new(Degree2K { f }, alpha()?, beta()?))
        }
        "degreen" => {
            let n = uint(p, "n", None)?;
            let n = u32::try_from(n).map_err(|_| invalid("n", "too large"))?;
            Built::DegreeN(AModule::new(DegreeNK::new(n)?, alpha()?, beta()?))
        }
        "ind" => Built::Ind(IndModule::new(highest_weight(p)?)),
        "mv" => {
            let v = if p.get("tau").is_some() {
                HBarModuleData::scalar(scalar(p, "sigma", Some(0))?, scalar(p, "tau", None)?)
            } else {
                let r = uint(p, "r", Some(1))? as u32;
                let d = uint(p, "d", Some(1))? as u32;
                let dim = uint(p, "dim", Some(2))? as usize;
                if d > 1 {
                    return Err(invalid("d", "must be 0 or 1"));
                }
                if dim == 0 || dim > r as usize + 1 {
                    return Err(invalid("dim", "need 1 <= dim <= r + 1"));
                }
                HBarModuleData::random(rng, r, d, dim)
            };
            Built::MV(MVModule::new(v, omega_params(p)?)?)
        }
        "tensor" => Built::Tensor(TensorModule::new(tensor_params(p)?)),
        other => return Err(ConfigError::UnknownFamily(other.to_string())),
    })
}

fn parse_generator(text: &str) -> Result<Generator, ConfigError> {
    expr::parse_generator(text).map_err(|e| ConfigError::Parse {
        what: "generator".into(),
        source: e,
    })
}

fn parse_vector<M: CliModule>(m: &M, text: &str) -> Result<SparseVec<M::Basis>, ConfigError> {
    m.parse(text).map_err(|e| ConfigError::Parse {
        what: "vector".into(),
        source: e,
    })
}

fn vector_or_random<M: CliModule>(
    m: &M,
    text: Option<&str>,
    rng: &mut dyn RngCore,
) -> Result<SparseVec<M::Basis>, ConfigError> {
    match text {
        Some(t) => parse_vector(m, t),
        None => Ok(m.random_vector(rng)),
    }
}

fn family_tag(family: &str) -> ModuleClass {
    match family {
        "tensor" => ModuleClass::TensorProduct,
        "ind" => ModuleClass::Ind,
        "mv" => ModuleClass::MV,
        _ => ModuleClass::AFamily,
    }
}

fn family_of(p: &Value, key: &str) -> Result<(String, Value), ConfigError> {
    let side = p.get(key).ok_or_else(|| ConfigError::Missing(key.into()))?;
    let family = side
        .get("family")
        .and_then(Value::as_str)
        .ok_or_else(|| ConfigError::Missing(format!("{key}.family")))?;
    let params = side
        .get("params")
        .cloned()
        .ok_or_else(|| ConfigError::Missing(format!("{key}.params")))?;
    Ok((family.to_string(), params))
}

/// Sample vectors for the separation probes: a distinguished vector when the
/// module has one, then random ones.
fn probe<'a>(built: &'a Built, family: &str, rng: &mut dyn RngCore) -> Box<dyn Separable + 'a> {
    const RANDOM: usize = 3;
    match built {
        Built::Tensor(m) => Box::new(Probe::sampled(
            m,
            ModuleClass::TensorProduct,
            vec![m.ground()],
            RANDOM,
            rng,
        )),
        Built::Ind(m) => Box::new(Probe::sampled(
            m,
            ModuleClass::Ind,
            vec![m.generator()],
            RANDOM,
            rng,
        )),
        Built::MV(m) => {
            let samples = (0..RANDOM).map(|_| m.random_vector(rng)).collect();
            Box::new(Probe::mv(m, samples))
        }
        other => with_module!(other, m => Box::new(Probe::sampled(
            m,
            family_tag(family),
            Vec::new(),
            RANDOM,
            rng,
        ))),
    }
}

fn single(name: &str, inputs: String, expected: &str, actual: String, ok: bool) -> Report {
    let mut r = Report::new();
    r.push(Check::new(name, inputs, expected, actual, ok));
    r
}

pub fn run_suite(cfg: &RunConfig) -> Result<Outcome, ConfigError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let p = &cfg.params;
    let report = match &cfg.command {
        Command::Jacobi => jacobi_check(cfg.window.unwrap_or(6), cfg.trials.unwrap_or(50), &mut rng),
        Command::Axioms { family } => {
            let built = build(family, p, &mut rng)?;
            let window = cfg.window.unwrap_or(5);
            let trials = cfg.trials.unwrap_or(200);
            with_module!(&built, m => module_axiom_check(m, window, trials, &mut rng))
        }
        Command::Act {
            family,
            generator,
            vector,
        } => {
            let built = build(family, p, &mut rng)?;
            let g = parse_generator(generator)?;
            let text = with_module!(&built, m => {
                let v = parse_vector(m, vector)?;
                print_for(m, &m.act(g, &v))
            });
            return Ok(Outcome::Vector(text));
        }
        Command::SubmoduleChain {
            lambda,
            a1,
            b1,
            a2,
            b2,
            smax,
            nmax,
        } => {
            let s = |key: &str, text: &str| {
                expr::parse_scalar(text).map_err(|e| ConfigError::Parse {
                    what: key.to_string(),
                    source: e,
                })
            };
            submodule_chain_verify(
                &s("lambda", lambda)?,
                &s("a1", a1)?,
                &s("b1", b1)?,
                &s("a2", a2)?,
                &s("b2", b2)?,
                *smax,
                *nmax,
                cfg.window.unwrap_or(4),
            )
        }
        Command::Irreducibility { vector } => {
            let m = TensorModule::new(tensor_params(p)?);
            let u = vector_or_random(&m, vector.as_deref(), &mut rng)?;
            let (e, d) = cfg.cutoff.unwrap_or((2, 2));
            let mut opts = CyclicOptions::new(e, d);
            if let Some(w) = cfg.window {
                opts.window = w;
            }
            irreducibility_witness(&m, &u, opts)
        }
        Command::TOperator {
            family,
            s,
            modes,
            vector,
            expect_zero,
        } => {
            let built = build(family, p, &mut rng)?;
            let window = cfg.window.unwrap_or(6);
            let grid: Vec<(i64, i64)> = match modes {
                Some(lm) => vec![*lm],
                None => (-window..=window)
                    .flat_map(|l| (-window..=window).map(move |m| (l, m)))
                    .collect(),
            };
            with_module!(&built, m => t_operator_report(m, *s, &grid, vector.as_deref(), *expect_zero, &mut rng)?)
        }
        Command::Nilpotency {
            family,
            generator,
            vector,
            max_iter,
            expect_nilpotent,
        } => {
            let built = build(family, p, &mut rng)?;
            let g = parse_generator(generator)?;
            with_module!(&built, m => {
                let v = vector_or_random(m, vector.as_deref(), &mut rng)?;
                let result = local_nilpotency_probe(m, g, &v, *max_iter);
                single(
                    "local-nilpotency",
                    format!("{}; {g}; v = {}", m.label(), print_for(m, &v)),
                    if *expect_nilpotent { "nilpotent" } else { "not nilpotent" },
                    match result {
                        Nilpotency::NilpotentAfter(n) => format!("nilpotent after {n} applications"),
                        Nilpotency::NotNilpotentWithin(n) => format!("nonzero after {n} applications"),
                    },
                    result.is_nilpotent() == *expect_nilpotent,
                )
            })
        }
        Command::Fingerprint { bound } => {
            let params = tensor_params(p)?;
            let m = TensorModule::new(params.clone());
            let inputs = m.label();
            match fingerprint_tensor(&m, *bound).map_err(|e| e.to_string()).and_then(|fp| {
                let recovered = fp.to_params().map_err(|e| e.to_string())?;
                Ok((fp, recovered))
            }) {
                Ok((fp, recovered)) => single(
                    "fingerprint-round-trip",
                    inputs,
                    "invariants of the given parameters",
                    format!(
                        "factors (lambda, alpha, beta) = {}; h = {}; c = {:?}",
                        fp.factors
                            .iter()
                            .map(|(l, a, b)| format!("({}, {a}, {b})", Scalar::real(l.clone())))
                            .collect::<Vec<_>>()
                            .join(", "),
                        fp.h,
                        fp.c
                    ),
                    tensor_iso_check(&params, &recovered),
                ),
                Err(e) => single("fingerprint-round-trip", inputs, "recovery succeeds", e, false),
            }
        }
        Command::Iso => {
            let a = tensor_params(p.get("a").ok_or_else(|| ConfigError::Missing("a".into()))?)?;
            let b = tensor_params(p.get("b").ok_or_else(|| ConfigError::Missing("b".into()))?)?;
            let iso = tensor_iso_check(&a, &b);
            single(
                "tensor-iso",
                format!(
                    "{} vs {}",
                    TensorModule::new(a).label(),
                    TensorModule::new(b).label()
                ),
                "isomorphic",
                if iso { "isomorphic" } else { "not isomorphic" }.into(),
                iso,
            )
        }
        Command::Distinguish => {
            let (fa, pa) = family_of(p, "a")?;
            let (fb, pb) = family_of(p, "b")?;
            let a = build(&fa, &pa, &mut rng)?;
            let b = build(&fb, &pb, &mut rng)?;
            let pa = probe(&a, &fa, &mut rng);
            let pb = probe(&b, &fb, &mut rng);
            let d = distinguish(pa.as_ref(), pb.as_ref(), DistinguishOptions::default());
            let mut r = d.report;
            if d.verdict == Verdict::Inconclusive {
                r.push(
                    Check::new("verdict", "", "distinguished", "no separating property found", false)
                        .tentative(),
                );
            }
            r
        }
        Command::Suite => suite(cfg.seed)?,
    };
    Ok(Outcome::Report(report.with_seed(cfg.seed)))
}

fn print_for<M: CliModule>(_: &M, v: &SparseVec<M::Basis>) -> String {
    M::print(v)
}

fn t_operator_report<M: CliModule>(
    m: &M,
    s: u32,
    grid: &[(i64, i64)],
    vector: Option<&str>,
    expect_zero: bool,
    rng: &mut dyn RngCore,
) -> Result<Report, ConfigError> {
    let samples = match vector {
        Some(t) => vec![parse_vector(m, t)?],
        None => (0..3).map(|_| m.random_vector(rng)).collect(),
    };
    let mut mismatches = 0usize;
    let mut first = None;
    for &(l, mm) in grid {
        let spec = TOperatorSpec { l, m: mm, s };
        for v in &samples {
            let out = t_operator_apply(spec, m, v);
            if out.is_zero() != expect_zero && first.is_none() {
                first = Some(format!(
                    "T^({s})_({l},{mm}) applied to {} gives {}",
                    M::print(v),
                    M::print(&out)
                ));
            }
            if out.is_zero() != expect_zero {
                mismatches += 1;
            }
        }
    }
    let total = grid.len() * samples.len();
    let mut r = Report::new();
    if let Some(ce) = first {
        r.counterexample(ce);
    }
    r.push(Check::new(
        format!("t-operator[s={s}]"),
        format!("{}; {} index pairs; {} vectors", m.label(), grid.len(), samples.len()),
        if expect_zero { "zero on every pair" } else { "nonzero on every pair" },
        format!("{} of {total} as expected", total - mismatches),
        mismatches == 0,
    ));
    Ok(r)
}

fn prefixed(mut r: Report, prefix: &str) -> Report {
    for c in &mut r.checks {
        c.name = format!("{prefix}/{}", c.name);
    }
    r
}

/// The default instance of each suite, merged into one report.
fn suite(seed: u64) -> Result<Report, ConfigError> {
    let mut out = Report::new();
    let run = |command: Command, params: Value, window: Option<i64>, trials: Option<usize>| {
        let cfg = RunConfig {
            command,
            params,
            window,
            cutoff: None,
            trials,
            seed,
            format: Format::Json,
        };
        match run_suite(&cfg)? {
            Outcome::Report(r) => Ok::<Report, ConfigError>(r),
            Outcome::Vector(_) => unreachable!("suite commands produce reports"),
        }
    };
    out.merge(prefixed(run(Command::Jacobi, Value::Null, Some(4), Some(20))?, "jacobi"));
    for (family, params) in default_instances() {
        let r = run(
            Command::Axioms {
                family: family.to_string(),
            },
            params,
            Some(4),
            Some(40),
        )?;
        out.merge(prefixed(r, &format!("axioms[{family}]")));
    }
    let chain = run(
        Command::SubmoduleChain {
            lambda: "1".into(),
            a1: "1/2".into(),
            b1: "2".into(),
            a2: "1/3".into(),
            b2: "0".into(),
            smax: 2,
            nmax: 3,
        },
        Value::Null,
        Some(3),
        None,
    )?;
    out.merge(prefixed(chain, "submodule-chain"));
    let tensor = pipeline_params();
    out.merge(prefixed(
        run(Command::Fingerprint { bound: 4 }, tensor.clone(), None, None)?,
        "fingerprint",
    ));
    out.merge(prefixed(
        run(
            Command::TOperator {
                family: "intermediate".into(),
                s: 2,
                modes: None,
                vector: None,
                expect_zero: true,
            },
            serde_json::json!({"gamma": "1/3", "alpha": "2", "beta": "5"}),
            Some(3),
            None,
        )?,
        "t-operator",
    ));
    out.merge(prefixed(
        run(
            Command::Distinguish,
            serde_json::json!({
                "a": {"family": "tensor", "params": tensor},
                "b": {"family": "ind", "params": {"h": "1", "c0": "1"}},
            }),
            None,
            None,
        )?,
        "distinguish",
    ));
    Ok(out)
}

/// The tensor instance used by the irreducibility pipeline.
pub fn pipeline_params() -> Value {
    serde_json::json!({
        "factors": [
            {"lambda": "1", "alpha": "3", "beta": "0"},
            {"lambda": "2", "alpha": "0", "beta": "5"}
        ],
        "hw": {"h": "1", "c0": "1", "c1": "0", "c2": "0", "c3": "0"}
    })
}

/// One representative parameter set per family.
pub fn default_instances() -> Vec<(&'static str, Value)> {
    use serde_json::json;
    vec![
        ("omega", json!({"lambda": "2", "alpha": "3/2", "beta": "1/3"})),
        ("a-omega", json!({"lambda": "3", "alpha": "1/2", "beta": "2"})),
        ("intermediate", json!({"gamma": "1/3", "alpha": "2", "beta": "5"})),
        ("degree2", json!({"f": "t^2 - 1/2 + 3*t^-1", "alpha": "1/2", "beta": "1"})),
        ("degreen", json!({"n": 3, "alpha": "2/3", "beta": "-1"})),
        ("ind", json!({"h": "2/3", "c0": "5/7", "c1": "1", "c2": "1/2", "c3": "0"})),
        ("mv", json!({"lambda": "2", "alpha": "1/2", "beta": "3", "r": 2, "d": 1, "dim": 3})),
        ("tensor", pipeline_params()),
    ]
}
