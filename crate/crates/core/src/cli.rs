//! Command-line front end.
//!
//! [`run`] parses arguments, dispatches and writes either text or canonical
//! JSON. Exit codes: 0 success, 1 domain error, 2 usage error. JSON objects
//! have sorted keys and every rational is a `"p/q"` string, so re-serialising
//! parsed output reproduces it byte for byte.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::analysis::{
    cyclicity, factor_family_zeros, intertwining_det, langlands_parameters, numeric_gamma_log, reflection_ratio,
    unitary_irreducible, LanglandsDescriptor,
};
use crate::error::{Error, Result};
use crate::gamma::C64;
use crate::oracle;
use crate::pxi::{expand, pxi_type_a_data, with_rho_mode, FactoredPolynomial};
use crate::rank_one::RhoShiftMode;
use crate::rational::{self, parse_q, parse_q_list, Q};
use crate::rep_theory::{self, branch_to_spin3, pin_restrict, weyl_dim, Irrep};
use crate::root_system::{LengthClass, LieType, NuParameter, Root, RootSystem, Series, Weight};
use crate::small_k::{classify, lookup, SmallKType, TauLabel};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum RhoShift {
    #[default]
    Shifted,
    Unshifted,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    #[default]
    Epsilon,
    Fundamental,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    Spin,
    Pin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Sl3,
}

/// Exact rational grid, inclusive at both ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub lo: Q,
    pub hi: Q,
    pub step: Q,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub output_format: OutputFormat,
    pub dimension_cap: u64,
    pub rho_shift_mode: RhoShiftMode,
    pub grid: Option<GridSpec>,
}

#[derive(Parser, Debug)]
#[command(name = "pxi", version, about = "Exact p_ξ determinants, cyclicity and intertwining data for genuine principal series")]
struct Cli {
    /// Emit canonical JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone)]
struct TypeArgs {
    /// Series letter, optionally with rank (A, B, D, E6, E7, E8, F4, G2).
    #[arg(long = "type", value_name = "TYPE")]
    lie_type: String,
    #[arg(long)]
    rank: Option<usize>,
}

#[derive(clap::Args, Debug, Clone)]
struct NuArgs {
    #[command(flatten)]
    ty: TypeArgs,
    /// Small K type label (s, s∘p1 or sp1, s∘p2 or sp2, C8, C8*, C16, C2p1, C2p2).
    #[arg(long)]
    tau: String,
    /// Real part of ν, comma-separated rationals (defaults to 0).
    #[arg(long = "nu-re", allow_hyphen_values = true)]
    nu_re: Option<String>,
    /// Imaginary part of ν (defaults to 0). "Re ν = 0" means every coordinate is exactly 0.
    #[arg(long = "nu-im", allow_hyphen_values = true)]
    nu_im: Option<String>,
    /// Coordinates of ν: ε-basis or fundamental weights.
    #[arg(long, value_enum, default_value_t = BasisArg::Epsilon)]
    basis: BasisArg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Simple and positive roots, ρ and the Cartan matrix.
    Roots {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// Genuine small K types.
    #[command(name = "small-k")]
    SmallK {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// Spin(3) branching multiset of a Spin(n) or Pin(n) irrep.
    Branch {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        n: usize,
        /// Highest weight, comma-separated rationals in the ε-basis.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Pin sign (+1 or -1) where the irrep needs one.
        #[arg(long, allow_hyphen_values = true)]
        epsilon: Option<i8>,
    },
    /// p_ξ for SL(n,R)~ as a factored polynomial (rank = n − 1).
    Pxi {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
        /// Also print the expanded polynomial in fundamental coordinates a_i.
        #[arg(long)]
        expand: bool,
        #[arg(long = "rho-shift", value_enum, default_value_t = RhoShift::Shifted)]
        rho_shift: RhoShift,
    },
    /// Cyclicity of the small K type in the closed Langlands chamber.
    Cyclicity(NuArgs),
    /// Irreducibility of the unitary principal series (requires Re ν = 0).
    Irreducible(NuArgs),
    /// Langlands parameters of the irreducible quotient.
    Langlands(NuArgs),
    /// det A(ν) on the ξ-isotypic component for SL(n,R)~ (rank = n − 1).
    Intertwine {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
        /// Real part of ν in ε-coordinates, comma-separated floats.
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
        /// Imaginary part of ν in ε-coordinates.
        #[arg(long = "nu-im", allow_hyphen_values = true)]
        nu_im: Option<String>,
        /// Print the reduced rational function.
        #[arg(long)]
        symbolic: bool,
    },
    /// Rank-one oracle suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long = "p-max", default_value_t = 21)]
        p_max: u32,
    },
    /// Cyclicity (or unitary irreducibility with --imaginary) over a grid of
    /// ν in fundamental coordinates.
    Sweep {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        tau: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        lo: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        hi: String,
        #[arg(long, default_value = "1/2")]
        step: String,
        /// Sweep purely imaginary ν instead of real ν.
        #[arg(long)]
        imaginary: bool,
    },
}

const MAX_GRID_POINTS: usize = 200_000;

struct Output {
    json: Value,
    text: String,
    /// Nonzero when the command ran but reported a failure (e.g. verify).
    status: i32,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Self { json, text, status: 0 }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let config = Config {
        output_format: if cli.json { OutputFormat::Json } else { OutputFormat::Text },
        dimension_cap: rep_theory::dim_cap(),
        rho_shift_mode: RhoShiftMode::Shifted,
        grid: None,
    };
    match dispatch(&cli.command, &config) {
        Ok(o) => {
            let body = match config.output_format {
                OutputFormat::Json => {
                    let mut s = serde_json::to_string_pretty(&o.json).expect("JSON values serialise");
                    s.push('\n');
                    s
                }
                OutputFormat::Text => o.text,
            };
            let written = match &cli.out {
                Some(path) => std::fs::write(path, body.as_bytes()).map_err(|e| e.to_string()),
                None => out.write_all(body.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: cannot write output: {e}");
                return 1;
            }
            o.status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Parse(_) => 2,
                _ => 1,
            }
        }
    }
}

fn dispatch(cmd: &Command, config: &Config) -> Result<Output> {
    match cmd {
        Command::Roots { ty } => cmd_roots(&parse_type(ty)?),
        Command::SmallK { ty } => cmd_small_k(parse_type(ty)?),
        Command::Branch { group, n, weight, epsilon } => cmd_branch(*group, *n, weight, *epsilon, config),
        Command::Pxi { ty, xi, expand, rho_shift } => {
            let mode = match rho_shift {
                RhoShift::Shifted => RhoShiftMode::Shifted,
                RhoShift::Unshifted => RhoShiftMode::Unshifted,
            };
            cmd_pxi(ty, xi, *expand, &Config { rho_shift_mode: mode, ..config.clone() })
        }
        Command::Cyclicity(a) => cmd_cyclicity(a),
        Command::Irreducible(a) => cmd_irreducible(a),
        Command::Langlands(a) => cmd_langlands(a),
        Command::Intertwine { ty, xi, nu, nu_im, symbolic } => cmd_intertwine(ty, xi, nu.as_deref(), nu_im.as_deref(), *symbolic),
        Command::Verify { suite: Suite::Sl3, p_max } => cmd_verify(*p_max),
        Command::Sweep { ty, tau, lo, hi, step, imaginary } => {
            let grid = GridSpec { lo: parse_q(lo)?, hi: parse_q(hi)?, step: parse_q(step)? };
            cmd_sweep(ty, tau, &Config { grid: Some(grid), ..config.clone() }, *imaginary)
        }
    }
}

fn parse_type(ty: &TypeArgs) -> Result<LieType> {
    LieType::parse(&ty.lie_type, ty.rank).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(m),
        other => other,
    })
}

fn type_a_n(ty: &TypeArgs) -> Result<usize> {
    let t = parse_type(ty)?;
    if t.series != Series::A {
        return Err(Error::Unsupported(format!("the closed-form pipeline covers type A only, got {t}")));
    }
    Ok(t.rank + 1)
}

fn qs(v: &[Q]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn root_json(r: &Root) -> Value {
    json!({
        "simple_coeffs": r.simple_coeffs,
        "coords": qs(&r.coords),
        "length": match r.length_class { LengthClass::Long => "long", LengthClass::Short => "short" },
    })
}

fn cmd_roots(t: &LieType) -> Result<Output> {
    let rs = RootSystem::build(*t)?;
    let json = json!({
        "type": t.name(),
        "rank": rs.rank(),
        "simple_roots": rs.simple_roots().iter().map(root_json).collect::<Vec<_>>(),
        "positive_roots": rs.positive_roots().iter().map(root_json).collect::<Vec<_>>(),
        "rho": qs(&rs.rho().coords),
        "cartan_matrix": rs.cartan_matrix(),
        "small_k_supported": t.small_k_supported(),
    });
    let mut text = format!("{} rank {} with {} positive roots\n", t, rs.rank(), rs.positive_roots().len());
    text += &format!("rho = {}\n", rational::fmt_q_list(&rs.rho().coords));
    text += "cartan matrix:\n";
    for row in rs.cartan_matrix() {
        text += &format!("  {row:?}\n");
    }
    text += "positive roots (simple coefficients, ε-coordinates, length):\n";
    for r in rs.positive_roots() {
        text += &format!("  {} {} {:?}\n", r, rational::fmt_q_list(&r.coords), r.length_class);
    }
    Ok(Output::ok(json, text))
}

fn tau_json(t: &SmallKType) -> Value {
    json!({
        "type": t.lie_type.name(),
        "label": t.label.as_str(),
        "k_group": t.k_group,
        "dim": t.dim,
        "t_long": t.t_long.to_string(),
        "t_short": t.t_short.map(|x| x.to_string()),
        "note": t.note,
    })
}

fn cmd_small_k(t: LieType) -> Result<Output> {
    let types = classify(t)?;
    let mut text = String::new();
    for ty in &types {
        text += &format!(
            "{}  K = {}  dim = {}  t_long = {}  t_short = {}",
            ty.label,
            ty.k_group,
            ty.dim,
            ty.t_long,
            ty.t_short.map(|x| x.to_string()).unwrap_or_else(|| "-".into())
        );
        if let Some(n) = &ty.note {
            text += &format!("  ({n})");
        }
        text.push('\n');
    }
    Ok(Output::ok(json!({ "type": t.name(), "small_k_types": types.iter().map(tau_json).collect::<Vec<_>>() }), text))
}

fn check_cap(dim: u64, config: &Config) -> Result<()> {
    if dim > config.dimension_cap {
        return Err(Error::CapExceeded { dim, cap: config.dimension_cap });
    }
    Ok(())
}

fn cmd_branch(group: GroupArg, n: usize, weight: &str, epsilon: Option<i8>, config: &Config) -> Result<Output> {
    let w = parse_q_list(weight)?;
    let spins: Vec<Irrep> = match group {
        GroupArg::Spin => vec![Irrep::spin(n, w.clone())],
        GroupArg::Pin => pin_restrict(&Irrep::pin(n, w.clone(), epsilon))?.constituents.into_iter().map(|(c, _)| c).collect(),
    };
    let mut js = Vec::new();
    let mut dim = 0;
    for s in &spins {
        let d = weyl_dim(s)?;
        check_cap(d, config)?;
        dim += d;
        js.extend(branch_to_spin3(s)?);
    }
    js.sort_unstable();
    let group_name = match group {
        GroupArg::Spin => format!("Spin({n})"),
        GroupArg::Pin => format!("Pin({n})"),
    };
    let json = json!({
        "group": group_name,
        "weight": qs(&w),
        "dim": dim,
        "j": js,
        "m_xi": js.len(),
        "spin_constituents": spins.iter().map(|s| qs(&s.highest_weight)).collect::<Vec<_>>(),
    });
    let text = format!("{group_name} {}: dim {dim}, m_xi = {}, j = {:?}\n", rational::fmt_q_list(&w), js.len(), js);
    Ok(Output::ok(json, text))
}

fn factored_json(p: &FactoredPolynomial) -> Value {
    json!({
        "scalar": p.scalar.to_string(),
        "factors": p.factors.iter().map(|f| json!({
            "root": f.root.simple_coeffs,
            "shift": f.shift.to_string(),
            "mult": f.mult,
        })).collect::<Vec<_>>(),
    })
}

fn cmd_pxi(ty: &TypeArgs, xi: &str, want_expand: bool, config: &Config) -> Result<Output> {
    let n = type_a_n(ty)?;
    let w = parse_q_list(xi)?;
    let data = pxi_type_a_data(n, &w)?;
    check_cap(data.dim_xi, config)?;
    let rs = RootSystem::build(data.polynomial.lie_type)?;
    let p = with_rho_mode(&data.polynomial, &rs, config.rho_shift_mode)?;
    let mut json = factored_json(&p);
    let obj = json.as_object_mut().expect("object");
    obj.insert("type".into(), json!(rs.lie_type().name()));
    obj.insert("xi".into(), qs(&w));
    obj.insert("dim_xi".into(), json!(data.dim_xi));
    obj.insert("dim_tau".into(), json!(data.tau.dim));
    obj.insert("j".into(), json!(data.js));
    obj.insert("degree".into(), json!(p.total_degree()));
    obj.insert(
        "rho_shift".into(),
        json!(match config.rho_shift_mode {
            RhoShiftMode::Shifted => "shifted",
            RhoShiftMode::Unshifted => "unshifted",
        }),
    );
    let mut text = format!(
        "SL({n})~ xi = {}: dim {}, j = {:?}, degree {}\n",
        rational::fmt_q_list(&w),
        data.dim_xi,
        data.js,
        p.total_degree()
    );
    text += "factors (x_root + shift)^mult, x_root = 2(ν,φ)/(φ,φ):\n";
    for f in &p.factors {
        text += &format!("  root {} shift {} mult {}\n", f.root, f.shift, f.mult);
    }
    if want_expand {
        let names: Vec<String> = (1..=rs.rank()).map(|i| format!("a{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let e = expand(&p, &rs).fmt_with(&refs);
        text += &format!("expanded in fundamental coordinates: {e}\n");
        obj.insert("expanded".into(), json!(e));
    }
    Ok(Output::ok(json, text))
}

struct NuContext {
    lie_type: LieType,
    tau: SmallKType,
    nu: NuParameter,
}

fn nu_context(a: &NuArgs) -> Result<NuContext> {
    let lie_type = parse_type(&a.ty)?;
    let label: TauLabel = a.tau.parse()?;
    let tau = lookup(lie_type, label)?;
    let rs = RootSystem::build(lie_type)?;
    let len = match a.basis {
        BasisArg::Epsilon => rs.ambient_dim(),
        BasisArg::Fundamental => rs.rank(),
    };
    let read = |s: &Option<String>| -> Result<Vec<Q>> {
        match s {
            Some(s) => parse_q_list(s),
            None => Ok(rational::zeros(len)),
        }
    };
    let (re, im) = (read(&a.nu_re)?, read(&a.nu_im)?);
    let wrap = |v: Vec<Q>| match a.basis {
        BasisArg::Epsilon => Weight::epsilon(v),
        BasisArg::Fundamental => Weight::fundamental(v),
    };
    let nu = NuParameter::from_weights(&rs, &wrap(re), &wrap(im))?;
    Ok(NuContext { lie_type, tau, nu })
}

fn nu_json(nu: &NuParameter) -> Value {
    json!({ "re": qs(&nu.real_part), "im": qs(&nu.imag_part) })
}

fn cmd_cyclicity(a: &NuArgs) -> Result<Output> {
    let c = nu_context(a)?;
    let v = cyclicity(c.lie_type, &c.tau, &c.nu)?;
    let json = json!({
        "type": c.lie_type.name(),
        "tau": c.tau.label.as_str(),
        "nu": nu_json(&c.nu),
        "cyclic": v.cyclic,
        "violated_roots": v.violated_roots.iter().map(|(r, cond)| json!({"root": r.simple_coeffs, "condition": cond})).collect::<Vec<_>>(),
    });
    let mut text = format!("{} τ = {}: {}\n", c.lie_type, c.tau.label, if v.cyclic { "cyclic" } else { "not cyclic" });
    for (r, cond) in &v.violated_roots {
        text += &format!("  root {r}: {cond}\n");
    }
    Ok(Output::ok(json, text))
}

fn cmd_irreducible(a: &NuArgs) -> Result<Output> {
    let c = nu_context(a)?;
    let v = unitary_irreducible(c.lie_type, &c.tau, &c.nu)?;
    let json = json!({
        "type": c.lie_type.name(),
        "tau": c.tau.label.as_str(),
        "nu": nu_json(&c.nu),
        "irreducible": v.irreducible,
        "witnesses": v.witnesses.iter().map(|r| json!(r.simple_coeffs)).collect::<Vec<_>>(),
    });
    let mut text = format!("{} τ = {}: {}\n", c.lie_type, c.tau.label, if v.irreducible { "irreducible" } else { "reducible" });
    for r in &v.witnesses {
        text += &format!("  short root {r} with 2(ν,α)/(α,α) = 0\n");
    }
    Ok(Output::ok(json, text))
}

fn cmd_langlands(a: &NuArgs) -> Result<Output> {
    let c = nu_context(a)?;
    let d = langlands_parameters(c.lie_type, &c.tau, &c.nu)?;
    let (desc, text_desc) = match &d.descriptor {
        LanglandsDescriptor::Tempered => (json!("tempered"), "tempered".to_string()),
        LanglandsDescriptor::Triple { f, sigma, mu } => (
            json!({ "F": f, "sigma": nu_json(sigma), "mu": nu_json(mu) }),
            format!(
                "(P_F, σ_F, μ) with F = {:?}, ς = {} + i{}, μ = {} + i{}",
                f,
                rational::fmt_q_list(&sigma.real_part),
                rational::fmt_q_list(&sigma.imag_part),
                rational::fmt_q_list(&mu.real_part),
                rational::fmt_q_list(&mu.imag_part)
            ),
        ),
    };
    let json = json!({
        "type": c.lie_type.name(),
        "tau": c.tau.label.as_str(),
        "nu": nu_json(&c.nu),
        "F": d.f,
        "descriptor": desc,
        "discrete_series": d.discrete_series,
        "principal_series_is_y": d.principal_series_is_y,
    });
    let text = format!(
        "{} τ = {}: {}\ndiscrete series: no\nI ≅ Y in the closed chamber: {}\n",
        c.lie_type,
        c.tau.label,
        text_desc,
        if d.principal_series_is_y { "yes" } else { "not asserted" }
    );
    Ok(Output::ok(json, text))
}

fn parse_floats(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| Error::Parse(format!("bad number {t:?}"))))
        .collect()
}

fn cmd_intertwine(ty: &TypeArgs, xi: &str, nu: Option<&str>, nu_im: Option<&str>, symbolic: bool) -> Result<Output> {
    let n = type_a_n(ty)?;
    let w = parse_q_list(xi)?;
    let g = intertwining_det(n, &w)?;
    let reduced = g.reduce()?;
    let data = pxi_type_a_data(n, &w)?;
    let agrees = reduced == reflection_ratio(&data.polynomial, data.dim_xi as i64);
    let mut json = json!({
        "type": g.lie_type.name(),
        "xi": qs(&w),
        "exponent": g.exponent.to_string(),
        "gamma_factors": g.factors.len(),
        "matches_p_ratio": agrees,
    });
    let mut text = format!(
        "SL({n})~ xi = {}: {} Γ quotients, exponent {}; reduction equals (p(-ν)/p(ν))^dim ξ: {}\n",
        rational::fmt_q_list(&w),
        g.factors.len(),
        g.exponent,
        agrees
    );
    let obj = json.as_object_mut().expect("object");
    if symbolic {
        obj.insert("reduced".into(), json!(reduced.to_string()));
        text += &format!("reduced: {reduced}\n");
    }
    if let Some(nu) = nu {
        let re = parse_floats(nu)?;
        let im = match nu_im {
            Some(s) => parse_floats(s)?,
            None => vec![0.0; re.len()],
        };
        if re.len() != n || im.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: re.len().max(im.len()) });
        }
        let z: Vec<C64> = re.iter().zip(&im).map(|(a, b)| C64::new(*a, *b)).collect();
        let log = numeric_gamma_log(&g, &z)?;
        let val = log.exp();
        let arg = log.im.rem_euclid(std::f64::consts::TAU);
        let arg = if arg > std::f64::consts::PI { arg - std::f64::consts::TAU } else { arg };
        obj.insert("value".into(), json!({"re": val.re, "im": val.im}));
        obj.insert("log_value".into(), json!({"re": log.re, "im": arg}));
        text += &format!("det A(ν) ≈ {:.10e} {:+.10e}i, log = {:.12} {:+.12}i\n", val.re, val.im, log.re, arg);
    }
    Ok(Output::ok(json, text))
}

fn cmd_verify(p_max: u32) -> Result<Output> {
    let results = oracle::run_sl3_suite(p_max)?;
    let wc = oracle::verify_weight_comparison(p_max)?;
    let mi = oracle::verify_multiplicity_identity(p_max)?;
    let all = results.iter().all(|r| r.pass);
    let json = json!({
        "suite": "sl3",
        "p_max": p_max,
        "pass": all,
        "properties": results,
        "weight_comparison": wc,
        "multiplicity_identity": mi,
    });
    let mut text = String::new();
    for r in &results {
        text += &format!("{} {} ({})\n", if r.pass { "PASS" } else { "FAIL" }, r.name, r.detail);
    }
    Ok(Output { json, text, status: if all { 0 } else { 1 } })
}

fn grid_values(g: &GridSpec) -> Result<Vec<Q>> {
    if g.step <= Q::from_integer(0) || g.hi < g.lo {
        return Err(Error::Parse("grid needs step > 0 and lo <= hi".into()));
    }
    let mut out = Vec::new();
    let mut x = g.lo;
    while x <= g.hi {
        out.push(x);
        x += g.step;
    }
    Ok(out)
}

fn cmd_sweep(ty: &TypeArgs, tau: &str, config: &Config, imaginary: bool) -> Result<Output> {
    let lie_type = parse_type(ty)?;
    let tau = lookup(lie_type, tau.parse()?)?;
    let rs = RootSystem::build(lie_type)?;
    let values = grid_values(config.grid.as_ref().expect("grid set"))?;
    let r = rs.rank();
    let total = values.len().checked_pow(r as u32).filter(|&t| t <= MAX_GRID_POINTS).ok_or_else(|| {
        Error::Precondition(format!("grid has more than {MAX_GRID_POINTS} points"))
    })?;
    let points: Vec<Vec<Q>> = (0..total)
        .map(|mut idx| {
            let mut v = vec![Q::from_integer(0); r];
            for slot in v.iter_mut().rev() {
                *slot = values[idx % values.len()];
                idx /= values.len();
            }
            v
        })
        .collect();
    let rows: Vec<Result<Value>> = points
        .par_iter()
        .map(|fund| {
            let eps = rs.to_epsilon(&Weight::fundamental(fund.clone()))?.coords;
            let mut row = json!({ "nu": qs(fund) });
            let obj = row.as_object_mut().expect("object");
            if imaginary {
                let nu = NuParameter::imaginary(eps);
                let v = unitary_irreducible(lie_type, &tau, &nu)?;
                obj.insert("irreducible".into(), json!(v.irreducible));
                obj.insert("loci".into(), json!(v.witnesses.iter().map(|w| json!({"root": w.simple_coeffs, "shift": "0"})).collect::<Vec<_>>()));
            } else {
                let nu = NuParameter::real(eps);
                match cyclicity(lie_type, &tau, &nu) {
                    Ok(v) => {
                        let zeros = factor_family_zeros(lie_type, &tau, &nu)?;
                        obj.insert("cyclic".into(), json!(v.cyclic));
                        obj.insert(
                            "loci".into(),
                            json!(zeros.iter().map(|(root, s)| json!({"root": root.simple_coeffs, "shift": s.to_string()})).collect::<Vec<_>>()),
                        );
                    }
                    Err(Error::OutsideChamber) => {
                        obj.insert("cyclic".into(), Value::Null);
                        obj.insert("outside_chamber".into(), json!(true));
                    }
                    Err(e) => return Err(e),
                }
            }
            Ok(row)
        })
        .collect();
    let rows: Vec<Value> = rows.into_iter().collect::<Result<_>>()?;
    let key = if imaginary { "irreducible" } else { "cyclic" };
    let hits = rows.iter().filter(|r| r[key] == json!(false)).count();
    let mut text = format!(
        "{} τ = {}: {} grid points ({} ν), {} with {}\n",
        lie_type,
        tau.label,
        rows.len(),
        if imaginary { "imaginary" } else { "real" },
        hits,
        if imaginary { "reducibility" } else { "non-cyclicity" }
    );
    for row in rows.iter().filter(|r| r[key] == json!(false)) {
        text += &format!("  ν = {}  loci {}\n", row["nu"], row["loci"]);
    }
    let json = json!({
        "type": lie_type.name(),
        "tau": tau.label.as_str(),
        "imaginary": imaginary,
        "points": rows,
    });
    Ok(Output::ok(json, text))
}
