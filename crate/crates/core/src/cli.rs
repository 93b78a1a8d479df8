//! The `frobnf` command line: problem files, command dispatch and reports.
//!
//! A problem file is JSON:
//!
//! ```json
//! {
//!   "field": { "poly": [-2, 0, 1], "basis": [["1", "0"], ["0", "1"]] },
//!   "generators": [[1, 0], [4, 1], [6, 2]],
//!   "beta": [3, 1],
//!   "s": 1, "t1": "1", "t2": "8"
//! }
//! ```
//!
//! `poly` lists coefficients constant term first. `basis` lists the basis
//! elements, each as its coordinates over `1, θ, …, θ^{d-1}`. Generators and
//! `beta` are integer coordinates over the basis. Exact values are written as
//! strings: integers in decimal, rationals as `p/q`, enclosures as
//! `{"lo": …, "hi": …}`.
//!
//! Exit codes: 0 success, 1 invalid input or unmet precondition, 2 work or
//! precision limit reached, 3 a checked inequality was violated.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use crate::embeddings::embed;
use crate::error::{Error, Result};
use crate::frobenius::{
    classical_bound, classical_frobenius_limited, corollary_report, frobenius_upper_bound_with_eps, gs_lower_search,
};
use crate::heights::{compare_height, height_elem, height_vector};
use crate::interval::Enclosure;
use crate::measures::{d_measure_height_bound, m_measure_height_bound, measure_report};
use crate::nf::{FieldElement, NumberField};
use crate::semigroup::{
    check_generators_with_cap, cone_membership, count_by_height, enumerate_representations_limited,
    sandwich_certificate, shell, sup_norm, witness_search, ConeMembership, CountPair, CountParams, GeneratorSystem,
    Verdict, DEFAULT_WORK_LIMIT,
};
use crate::DEFAULT_PRECISION_CAP;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Check the field and the generator certificates.
    Validate,
    /// D(α), Δ_K and the maximal minors; M(α, β) with a target.
    Measures,
    /// Upper bound on the s-Frobenius number.
    Bound,
    /// Height of the generators, or of the target.
    Height,
    /// All representations of the target.
    Represent,
    /// First cone lattice point outside the semigroup.
    Witness,
    /// Exact counts by height against the counting bounds.
    Count,
    /// Exact s-Frobenius number over the rationals.
    FrobeniusExact,
    /// Certified lower bound for g_s(α, β).
    FrobeniusSearch,
    /// Run every applicable inequality check.
    Verify,
    /// CSV of (σ1(β), σ2(β), r(β)) over a coordinate box, d = 2.
    Plotdata,
}

#[derive(Debug, Parser)]
#[command(name = "frobnf", version, about = "Frobenius numbers of semigroups in totally real number fields")]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// Problem file (JSON).
    pub spec: PathBuf,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Clone, Debug, Default, clap::Args)]
pub struct Options {
    /// Target coordinates, e.g. "3,1".
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    /// Multiplicity: at least s representations.
    #[arg(long)]
    pub s: Option<u64>,
    /// Lower end of the height window.
    #[arg(long)]
    pub t1: Option<String>,
    /// Upper end of the height window.
    #[arg(long)]
    pub t2: Option<String>,
    /// Enclosure width target, e.g. "1/1000000".
    #[arg(long)]
    pub eps: Option<String>,
    /// Node budget for searches.
    #[arg(long)]
    pub work_limit: Option<u64>,
    /// Coordinate box for witness and plot scans.
    #[arg(long = "box")]
    pub coord_box: Option<u64>,
    /// Bits allowed when refining embeddings.
    #[arg(long)]
    pub precision_cap: Option<u32>,
    /// Largest scale t tried by the lower-bound search.
    #[arg(long)]
    pub t_max: Option<u64>,
    /// Shell radius for the lower-bound search.
    #[arg(long)]
    pub shell: Option<u64>,
}

/// A parsed problem file.
#[derive(Clone, Debug)]
pub struct ProblemSpec {
    pub field: NumberField,
    pub generators: Vec<FieldElement>,
    pub beta: Option<FieldElement>,
    pub s: Option<u64>,
    pub t1: Option<BigRational>,
    pub t2: Option<BigRational>,
    pub eps: Option<BigRational>,
    pub coord_box: Option<u64>,
    pub work_limit: Option<u64>,
}

fn parse_error(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::ParseError { location: location.into(), message: message.into() }
}

/// Parse `p/q`, an integer, or a finite decimal such as `0.25`.
pub fn parse_rational(text: &str) -> std::result::Result<BigRational, String> {
    let t = text.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|e| format!("bad numerator {p:?}: {e}"))?;
        let q = BigInt::from_str(q.trim()).map_err(|e| format!("bad denominator {q:?}: {e}"))?;
        if q.is_zero() {
            return Err("zero denominator".into());
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((int, frac)) = t.split_once('.') {
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        let num = BigInt::from_str(&digits).map_err(|e| format!("bad decimal {t:?}: {e}"))?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let r = BigRational::new(num, den);
        return Ok(if neg { -r } else { r });
    }
    BigInt::from_str(t).map(BigRational::from_integer).map_err(|e| format!("bad number {t:?}: {e}"))
}

fn value_rational(v: &Value, loc: &str) -> Result<BigRational> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|m| parse_error(loc, m)),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()).map_err(|m| parse_error(loc, m)),
        _ => Err(parse_error(loc, "expected an integer or a rational string")),
    }
}

fn value_int(v: &Value, loc: &str) -> Result<BigInt> {
    let r = value_rational(v, loc)?;
    if !r.is_integer() {
        return Err(parse_error(loc, "expected an integer"));
    }
    Ok(r.to_integer())
}

fn value_array<'a>(v: &'a Value, loc: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_error(loc, "expected an array"))
}

fn value_ints(v: &Value, loc: &str) -> Result<Vec<BigInt>> {
    value_array(v, loc)?.iter().enumerate().map(|(i, x)| value_int(x, &format!("{loc}[{i}]"))).collect()
}

fn value_u64(v: &Value, loc: &str) -> Result<u64> {
    value_int(v, loc)?.to_u64().ok_or_else(|| parse_error(loc, "expected a nonnegative integer"))
}

/// Parse comma separated integer coordinates.
pub fn parse_coords(text: &str) -> Result<Vec<BigInt>> {
    text.split(',')
        .map(|p| BigInt::from_str(p.trim()).map_err(|e| parse_error("--beta", format!("{p:?}: {e}"))))
        .collect()
}

impl ProblemSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let root: Value = serde_json::from_str(text)
            .map_err(|e| parse_error(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
        let obj = root.as_object().ok_or_else(|| parse_error("$", "expected an object"))?;
        let field_v = obj.get("field").ok_or_else(|| parse_error("field", "missing"))?;
        let poly = value_ints(field_v.get("poly").ok_or_else(|| parse_error("field.poly", "missing"))?, "field.poly")?;
        let basis_v = field_v.get("basis").ok_or_else(|| parse_error("field.basis", "missing"))?;
        let basis = value_array(basis_v, "field.basis")?
            .iter()
            .enumerate()
            .map(|(j, col)| {
                let loc = format!("field.basis[{j}]");
                value_array(col, &loc)?
                    .iter()
                    .enumerate()
                    .map(|(i, x)| value_rational(x, &format!("{loc}[{i}]")))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let field = NumberField::new(poly, basis)?;
        let gens_v = obj.get("generators").ok_or_else(|| parse_error("generators", "missing"))?;
        let generators = value_array(gens_v, "generators")?
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let loc = format!("generators[{i}]");
                let coords = value_ints(g, &loc)?;
                field.element(coords).map_err(|e| parse_error(loc, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        if generators.is_empty() {
            return Err(parse_error("generators", "need at least one generator"));
        }
        let beta = match obj.get("beta") {
            Some(v) => Some(field.element(value_ints(v, "beta")?).map_err(|e| parse_error("beta", e.to_string()))?),
            None => None,
        };
        let opt_rat = |k: &str| obj.get(k).map(|v| value_rational(v, k)).transpose();
        let opt_u64 = |k: &str| obj.get(k).map(|v| value_u64(v, k)).transpose();
        Ok(ProblemSpec {
            field,
            generators,
            beta,
            s: opt_u64("s")?,
            t1: opt_rat("t1")?,
            t2: opt_rat("t2")?,
            eps: opt_rat("eps")?,
            coord_box: opt_u64("box")?,
            work_limit: opt_u64("work_limit")?,
        })
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| parse_error(path.display().to_string(), e.to_string()))?;
        Self::parse(&text)
    }
}

/// Effective parameters: flags override the problem file, which overrides
/// the defaults.
#[derive(Clone, Debug)]
pub struct Settings {
    pub beta: Option<FieldElement>,
    pub s: u64,
    pub t1: Option<BigRational>,
    pub t2: Option<BigRational>,
    pub eps: BigRational,
    pub work_limit: u64,
    pub coord_box: Option<u64>,
    pub precision_cap: u32,
    pub t_max: Option<u64>,
    pub shell: Option<u64>,
}

impl Settings {
    pub fn resolve(spec: &ProblemSpec, opts: &Options) -> Result<Self> {
        let flag_rat = |v: &Option<String>, name: &str| {
            v.as_deref().map(|t| parse_rational(t).map_err(|m| parse_error(name, m))).transpose()
        };
        let beta = match &opts.beta {
            Some(b) => Some(spec.field.element(parse_coords(b)?).map_err(|e| parse_error("--beta", e.to_string()))?),
            None => spec.beta.clone(),
        };
        let eps =
            flag_rat(&opts.eps, "--eps")?.or_else(|| spec.eps.clone()).unwrap_or_else(crate::frobenius::default_eps);
        if !eps.is_positive() {
            return Err(parse_error("eps", "must be positive"));
        }
        Ok(Settings {
            beta,
            s: opts.s.or(spec.s).unwrap_or(1),
            t1: flag_rat(&opts.t1, "--t1")?.or_else(|| spec.t1.clone()),
            t2: flag_rat(&opts.t2, "--t2")?.or_else(|| spec.t2.clone()),
            eps,
            work_limit: opts.work_limit.or(spec.work_limit).unwrap_or(DEFAULT_WORK_LIMIT),
            coord_box: opts.coord_box.or(spec.coord_box),
            precision_cap: opts.precision_cap.unwrap_or(DEFAULT_PRECISION_CAP),
            t_max: opts.t_max,
            shell: opts.shell,
        })
    }

    fn require_beta(&self) -> Result<&FieldElement> {
        self.beta.as_ref().ok_or_else(|| Error::PreconditionViolated("this command needs a target (--beta)".into()))
    }
}

pub fn rat_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Endpoints are widened to multiples of `2^-128` to keep reports short.
pub fn enclosure_json(e: &Enclosure) -> Value {
    let e = e.round_outward(128);
    json!({ "lo": rat_string(e.lo()), "hi": rat_string(e.hi()) })
}

fn ints_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn pair_json(p: &CountPair) -> Value {
    json!({ "exclusive": p.exclusive.to_string(), "inclusive": p.inclusive.to_string() })
}

/// A finished command: its output and the exit code it calls for.
#[derive(Clone, Debug)]
pub struct Report {
    pub output: Output,
    pub exit_code: i32,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug)]
pub enum Output {
    Json(Value),
    Csv(String),
}

impl Report {
    fn json(value: Value) -> Self {
        Report { output: Output::Json(value), exit_code: 0, warnings: Vec::new() }
    }

    fn red_if(mut self, violated: bool) -> Self {
        if violated {
            self.exit_code = 3;
        }
        self
    }

    pub fn render(&self) -> String {
        match &self.output {
            Output::Json(v) => serde_json::to_string_pretty(v).expect("json values serialize") + "\n",
            Output::Csv(s) => s.clone(),
        }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::WorkLimitExceeded { .. } | Error::BoxTooLarge { .. } | Error::PrecisionExhausted { .. } => 2,
        Error::InternalCrossCheckFailure(_) => 3,
        _ => 1,
    }
}

fn system(spec: &ProblemSpec, set: &Settings) -> Result<GeneratorSystem> {
    check_generators_with_cap(&spec.generators, set.precision_cap)
}

pub fn execute(command: Command, spec: &ProblemSpec, opts: &Options) -> Result<Report> {
    let set = Settings::resolve(spec, opts)?;
    match command {
        Command::Validate => validate(spec, &set),
        Command::Measures => measures(spec, &set),
        Command::Bound => bound(spec, &set),
        Command::Height => height(spec, &set),
        Command::Represent => represent(spec, &set),
        Command::Witness => witness(spec, &set),
        Command::Count => count(spec, &set),
        Command::FrobeniusExact => frobenius_exact(spec, &set),
        Command::FrobeniusSearch => frobenius_search(spec, &set),
        Command::Verify => verify(spec, &set),
        Command::Plotdata => plotdata(spec, &set),
    }
}

fn validate(spec: &ProblemSpec, set: &Settings) -> Result<Report> {
    let sys = system(spec, set)?;
    let body = json!({
        "degree": sys.d().to_string(),
        "Delta_K": spec.field.discriminant().to_string(),
        "n": sys.n().to_string(),
        "spanning": sys.spanning,
        "totally_positive": sys.totally_positive,
        "pointed": sys.pointed,
        "lattice_index": sys.lattice_index().map(|i| Value::String(i.to_string())).unwrap_or(Value::Null),
        "valid": sys.is_valid(),
    });
    let mut r = Report::json(body);
    if !sys.is_valid() {
        r.exit_code = 1;
    }
    Ok(r)
}

fn measures(spec: &ProblemSpec, set: &Settings) -> Result<Report> {
    let report = measure_report(&spec.generators, set.beta.as_ref())?;
    let mut m = Map::new();
    m.insert("D".into(), Value::String(report.d_value.to_string()));
    m.insert("Delta_K".into(), Value::String(spec.field.discriminant().to_string()));
    m.insert("minors".into(), Value::Array(report.minors.iter().map(|(_, v)| Value::String(v.to_string())).collect()));
    if let Some(mv) = &report.m_value {
        m.insert("M".into(), Value::String(mv.to_string()));
    }
    Ok(Report::json(Value::Object(m)))
}

fn bound(spec: &ProblemSpec, set: &Settings) -> Result<Report> {
    let b = frobenius_upper_bound_with_eps(&system(spec, set)?, set.s, &set.eps)?;
    Ok(Report::json(json!({
        "bound": enclosure_json(&b.bound),
        "ceiling": b.bound_ceiling.to_string(),
        "D": b.d_value.to_string(),
        "s": b.s.to_string(),
        "n": b.n.to_string(),
        "d": b.d.to_string(),
    })))
}

fn height(spec: &ProblemSpec, set: &Settings) -> Result<Report> {
    let (target, h) = match &set.beta {
        Some(b) => ("beta", height_elem(b, &set.eps)?),
        None => ("generators", height_vector(&spec.generators, &set.eps)?),
    };
    let mut m = Map::new();
    m.insert("target".into(), json!(target));
    m.insert("H_K".into(), enclosure_json(&h.enclosure));
    m.insert("exact".into(), h.exact.as_ref().map(|v| Value::String(v.to_string())).unwrap_or(Value::Null));
    m.insert("H".into(), enclosure_json(&h.absolute(&set.eps)));
    if let Some(b) = &set.beta {
        for (key, t) in [("vs_t1", &set.t1), ("vs_t2", &set.t2)] {
            if let Some(t) = t {
                m.insert(key.into(), json!(compare_height(b, t, set.precision_cap)?.name()));
            }
        }
    }
    Ok(Report::json(Value::Object(m)))
}

fn represent(spec: &ProblemSpec, set: &Settings) -> Result<Report> {
    let sys = system(spec, set)?;
    let beta = set.require_beta()?;
    let reps = enumerate_representations_limited(&sys, beta, set.work_limit)?;
    let mut m = Map::new();
    m.insert("r".into(), Value::String(reps.r().to_string()));
    m.insert("complete".into(), Value::Bool(reps.complete));
    m.insert("box".into(), Value::String(reps.box_radius.to_string()));
    m.insert(
        "reps".into(),
        Value::Array(
            reps.reps.iter().map(|x| Value::Array(x.iter().map(|v| json!(v.to_string())).collect())).collect(),
        ),
    );
    let mut violated = false;
    if let Some(min) = reps.reps.iter().min_by(|a, b| sup_norm(a).cmp(&sup_norm(b)).then_with(|| a.cmp(b))) {
        let cert = sandwich_certificate(&sys, &reps, &set.eps)?;
        violated = !cert.holds();
        m.insert(
            "min".into(),
            json!({
                "x": min.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "norm": sup_norm(min).to_string(),
                "lower_bound": cert.lower_bound.as_ref().map(enclosure_json).unwrap_or(Value::Null),
                "upper_bound": cert.upper_bound.to_string(),
                "sandwich_holds": cert.holds(),
            }),
        );
    }
    Ok(Report::json(Value::Object(m)).red_if(violated))
}

fn witness(spec: &ProblemSpec, set: &Settings) -> Result<Report> {
    let sys = system(spec, set)?;
    let coord_box = set.coord_box.unwrap_or(4);
    let w = witness_search(&sys, coord_box)?;
    Ok(Report::json(json!({
        "box": coord_box.to_string(),
        "witness": w.map(|b| ints_json(b.coords())).unwrap_or(Value::Null),
    })))
}

fn count(spec: &ProblemSpec, set: &Settings) -> Result<Report> {
    let sys = system(spec, set)?;
    let (t1, t2) = match (&set.t1, &set.t2) {
        (Some(a), Some(b)) => (a.clone(), b.clone()),
        _ => return Err(Error::PreconditionViolated("count needs --t1 and --t2".into())),
    };
    let params = CountParams {
        s: set.s,
        t1,
        t2,
        eps: set.eps.clone(),
        work_limit: set.work_limit,
        precision_cap: set.precision_cap,
    };
    let c = count_by_height(&sys, &params)?;
    let body = json!({
        "box": c.box_radius.to_string(),
        "trace_cap": c.trace_cap.to_string(),
        "vectors": c.vectors_enumerated.to_string(),
        "Sg_s": pair_json(&c.sg_s),
        "Sg_1": pair_json(&c.sg_1),
        "sum_r": pair_json(&c.sum_r),
        "sum_r_from_1": pair_json(&c.sum_r_from_one),
        "ambiguous": c.ambiguous.to_string(),
        "upper_bound": enclosure_json(&c.upper_bound),
        "upper_bound_over_s": enclosure_json(&c.upper_bound_s),
        "lower_bound_T1": enclosure_json(&c.lower_bound),
        "upper": c.upper_verdict.name(),
        "upper_over_s": c.upper_s_verdict.name(),
        "lower": c.lower_verdict.name(),
    });
    let mut r = Report::json(body).red_if(c.any_violated());
    if c.ambiguous > 0 {
        r.warnings.push(format!("{} heights could not be separated from T1 or T2", c.ambiguous));
    }
    Ok(r)
}

fn rational_generators(spec: &ProblemSpec) -> Result<Vec<u64>> {
    if spec.field.degree() != 1 {
        return Err(Error::PreconditionViolated("frobenius-exact needs a degree 1 field".into()));
    }
    spec.generators
        .iter()
        .map(|g| {
            g.coords()[0]
                .to_u64()
                .filter(|v| *v > 0)
                .ok_or_else(|| Error::PreconditionViolated("generators must be positive integers".into()))
        })
        .collect()
}

fn frobenius_exact(spec: &ProblemSpec, set: &Settings) -> Result<Report> {
    let a = rational_generators(spec)?;
    let g = classical_frobenius_limited(&a, set.s, set.work_limit)?;
    let b = classical_bound(&a, set.s)?;
    let within = BigInt::from(g) <= b.bound_ceiling;
    Ok(Report::json(json!({
        "a": a.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "s": set.s.to_string(),
        "g": g.to_string(),
        "bound": enclosure_json(&b.bound),
        "ceiling": b.bound_ceiling.to_string(),
        "within_bound": within,
    }))
    .red_if(!within))
}

fn frobenius_search(spec: &ProblemSpec, set: &Settings) -> Result<Report> {
    let sys = system(spec, set)?;
    let beta = set.require_beta()?;
    let ceiling = frobenius_upper_bound_with_eps(&sys, set.s, &set.eps)?.bound_ceiling;
    let t_max = match set.t_max {
        Some(t) => t,
        None => ceiling.to_u64().ok_or_else(|| Error::WorkLimitExceeded { limit: set.work_limit })?,
    };
    let shell_limit = set.shell.unwrap_or(2);
    let cert = gs_lower_search(&sys, beta, t_max, shell_limit, set.s)?;
    let red = cert.as_ref().map_or(false, |c| BigInt::from(c.t_falsified) >= ceiling);
    let cert_json = match &cert {
        Some(c) => json!({
            "t_falsified": c.t_falsified.to_string(),
            "witness": ints_json(c.witness.coords()),
            "witness_reps": c.witness_reps.to_string(),
            "rechecked": c.recheck(&sys)?,
        }),
        None => Value::Null,
    };
    Ok(Report::json(json!({
        "t_max": t_max.to_string(),
        "shell": shell_limit.to_string(),
        "s": set.s.to_string(),
        "ceiling": ceiling.to_string(),
        "certificate": cert_json,
        "red_alert": red,
    }))
    .red_if(red))
}

struct Checks(Vec<Value>);

impl Checks {
    fn push(&mut self, name: &str, status: &str, detail: Value) {
        self.0.push(json!({ "name": name, "status": status, "detail": detail }));
    }

    fn verdict(&mut self, name: &str, v: Verdict, detail: Value) {
        let status = match v {
            Verdict::Holds => "pass",
            Verdict::Violated => "fail",
            Verdict::Undecided => "undecided",
            Verdict::NotApplicable => "skipped",
        };
        self.push(name, status, detail);
    }

    fn failed(&self) -> bool {
        self.0.iter().any(|c| c["status"] == "fail")
    }
}

fn at_most(value: &BigInt, bound: &Enclosure) -> Verdict {
    let v = BigRational::from_integer(value.clone());
    if &v <= bound.lo() {
        Verdict::Holds
    } else if &v > bound.hi() {
        Verdict::Violated
    } else {
        Verdict::Undecided
    }
}

fn verify(spec: &ProblemSpec, set: &Settings) -> Result<Report> {
    let sys = system(spec, set)?;
    sys.require_valid()?;
    let mut checks = Checks(Vec::new());
    let alpha = sys.generators();
    let d = sys.d();

    let report = measure_report(alpha, set.beta.as_ref())?;
    let rank_ok = report.d_value.is_zero() == (sys.matrix().rank() < d);
    checks.push(
        "measure_zero_iff_rank_deficient",
        if rank_ok { "pass" } else { "fail" },
        json!(report.d_value.to_string()),
    );
    let integral_ok = report.d_value.is_zero() || report.d_value >= BigInt::one();
    checks.push("measure_integral", if integral_ok { "pass" } else { "fail" }, json!(report.d_value.to_string()));
    let db = d_measure_height_bound(alpha, &set.eps)?;
    checks.verdict("measure_height_bound_D", at_most(&report.d_value, &db), enclosure_json(&db));
    if let (Some(beta), Some(mv)) = (&set.beta, &report.m_value) {
        let mb = m_measure_height_bound(alpha, beta, &set.eps)?;
        checks.verdict("measure_height_bound_M", at_most(mv, &mb), enclosure_json(&mb));
    }

    // sandwich on the target and on small combinations of the generators
    let mut targets: Vec<FieldElement> = set.beta.iter().cloned().collect();
    if sys.n() <= 10 {
        for mask in 1u32..(1 << sys.n()) {
            let x: Vec<u64> = (0..sys.n()).map(|i| ((mask >> i) & 1) as u64).collect();
            targets.push(sys.combine(&x));
        }
    }
    let mut checked = 0usize;
    let mut violations = Vec::new();
    for beta in &targets {
        let reps = enumerate_representations_limited(&sys, beta, set.work_limit)?;
        let cert = sandwich_certificate(&sys, &reps, &set.eps)?;
        checked += cert.checked;
        if !cert.holds() {
            violations.push(ints_json(beta.coords()));
        }
    }
    checks.push(
        "representation_size_sandwich",
        if violations.is_empty() { "pass" } else { "fail" },
        json!({ "targets": targets.len().to_string(), "representations": checked.to_string(), "violations": violations }),
    );

    if let (Some(t1), Some(t2)) = (&set.t1, &set.t2) {
        let mut params = CountParams::new(set.s, t1.clone(), t2.clone());
        params.eps = set.eps.clone();
        params.work_limit = set.work_limit;
        params.precision_cap = set.precision_cap;
        let c = count_by_height(&sys, &params)?;
        checks.verdict(
            "count_upper",
            c.upper_verdict,
            json!({ "sum_r": pair_json(&c.sum_r), "bound": enclosure_json(&c.upper_bound) }),
        );
        checks.verdict(
            "count_upper_over_s",
            c.upper_s_verdict,
            json!({ "Sg_s": pair_json(&c.sg_s), "bound": enclosure_json(&c.upper_bound_s) }),
        );
        checks.verdict(
            "count_lower",
            c.lower_verdict,
            json!({ "sum_r": pair_json(&c.sum_r_from_one), "bound": enclosure_json(&c.lower_bound) }),
        );
    }

    if sys.n() > d {
        let bound = frobenius_upper_bound_with_eps(&sys, set.s, &set.eps)?;
        if d == 1 {
            let a = rational_generators(spec)?;
            let g = classical_frobenius_limited(&a, set.s, set.work_limit)?;
            let ok = BigInt::from(g) <= bound.bound_ceiling;
            checks.push(
                "frobenius_upper_bound",
                if ok { "pass" } else { "fail" },
                json!({ "g": g.to_string(), "ceiling": bound.bound_ceiling.to_string() }),
            );
        } else if let Some(beta) = &set.beta {
            if cone_membership(&sys, beta)? == ConeMembership::InInterior {
                let t_max = bound.bound_ceiling.to_u64().unwrap_or(u64::MAX);
                let cert = gs_lower_search(&sys, beta, t_max, set.shell.unwrap_or(2), set.s)?;
                let t = cert.map(|c| c.t_falsified);
                let ok = t.map_or(true, |t| BigInt::from(t) < bound.bound_ceiling);
                checks.push(
                    "frobenius_lower_search_below_bound",
                    if ok { "pass" } else { "fail" },
                    json!({ "t_falsified": t.map(|v| v.to_string()), "ceiling": bound.bound_ceiling.to_string() }),
                );
            }
        }
        match corollary_report(&sys, set.coord_box.unwrap_or(4), &set.eps) {
            Ok(c) => {
                checks.verdict(
                    "gap_measure_lower",
                    c.d_verdict,
                    json!({ "D": c.d_value.to_string(), "bound": enclosure_json(&c.d_lower) }),
                );
                checks.verdict(
                    "gap_height_lower",
                    c.h_verdict,
                    json!({ "H": enclosure_json(&c.abs_height), "bound": enclosure_json(&c.h_lower) }),
                );
                checks.verdict(
                    "gap_height_lower_quadratic",
                    c.quadratic_verdict,
                    c.quadratic_lower.as_ref().map(enclosure_json).unwrap_or(Value::Null),
                );
            }
            Err(Error::HypothesisNotEstablished(msg)) => checks.push("gap_bounds", "skipped", json!(msg)),
            Err(e) => return Err(e),
        }
    }
    let failed = checks.failed();
    Ok(Report::json(json!({ "checks": checks.0, "all_passed": !failed })).red_if(failed))
}

fn plotdata(spec: &ProblemSpec, set: &Settings) -> Result<Report> {
    let sys = system(spec, set)?;
    if sys.d() != 2 {
        return Err(Error::PreconditionViolated("plotdata needs a degree 2 field".into()));
    }
    let r_max = set.coord_box.unwrap_or(4) as i64;
    let plot_eps = BigRational::new(BigInt::one(), BigInt::from(10).pow(12u32));
    let mut points: Vec<Vec<i64>> = (0..=r_max).flat_map(|r| shell(2, r)).collect();
    points.sort();
    let mut csv = String::from("b1,b2,sigma1,sigma2,r\n");
    for b in points {
        let beta = spec.field.element_i64(&b)?;
        if !cone_membership(&sys, &beta)?.in_cone() {
            continue;
        }
        let r = enumerate_representations_limited(&sys, &beta, set.work_limit)?.r();
        let s1 = embed(&beta, 0, &plot_eps)?.to_decimal(10);
        let s2 = embed(&beta, 1, &plot_eps)?.to_decimal(10);
        csv.push_str(&format!("{},{},{s1},{s2},{r}\n", b[0], b[1]));
    }
    Ok(Report { output: Output::Csv(csv), exit_code: 0, warnings: Vec::new() })
}

fn error_json(err: &Error) -> String {
    serde_json::to_string_pretty(&json!({ "error": err.name(), "message": err.to_string() })).expect("serializes")
        + "\n"
}

/// Parse arguments, run the command, write the report, return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let result = ProblemSpec::load(&cli.spec).and_then(|spec| execute(cli.command, &spec, &cli.options));
    match result {
        Ok(report) => {
            for w in &report.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            let _ = out.write_all(report.render().as_bytes());
            report.exit_code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            let _ = out.write_all(error_json(&e).as_bytes());
            exit_code(&e)
        }
    }
}
