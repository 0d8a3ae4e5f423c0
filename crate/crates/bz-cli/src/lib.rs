//! The `bz` command: verification suites and one-off evaluations with JSON
//! output.
//!
//! Exit codes: `0` success, `1` a check or suite failed (or a computation
//! errored), `2` usage error or invalid input.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use classgroup::ClassGroup;
use gsp4::besselzeta::{
    local_period, local_period_components, zeta_case1, zeta_case4, zeta_case5_6, zeta_series,
};
use gsp4::globalasm::{arch_lfactor, average_prefactor, global_epsilon, GlobalConfig};
use gsp4::localrep::{spinor_lfactor, spinor_lfactor_half, std_lfactor};
use gsp4::numeric::eval_complex;
use gsp4::suites::{parse_suites, run_suites, Report, DEFAULT_SEED};
use gsp4::{Gsp4Error, LocalRep, RepType, TwistData};
use num_complex::Complex64;
use padicring::{
    gauss_sum_f, gauss_sum_l, norm_char_sum, norm_char_sum_closed, unit_integral, unit_integral_closed, y_eta_check,
    GaloisRing, MultChar, ResidueRing, SymForm,
};
use serde_json::{json, Value};
use symfield::{parse, RatFunc, Var};

/// Version tag of every JSON document.
pub const SCHEMA: &str = "1";

/// Environment variable overriding the seed of randomized suites.
pub const SEED_ENV: &str = "BZ_SEED";

#[derive(Parser, Debug)]
#[command(name = "bz", version, about = "Bessel-model zeta integrals for GSp(4): verification and evaluation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run verification suites (`all` runs every suite in order).
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Run up to this many suites concurrently.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Spinor L-factor of a local representation.
    Lfactor {
        #[arg(long = "type")]
        tag: RepType,
        /// Keep the Satake parameters as symbols A, B, G.
        #[arg(long)]
        symbolic: bool,
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        beta: Option<String>,
        #[arg(long)]
        gamma: Option<String>,
        /// Twist value μ(ϖ) as an expression (default 1).
        #[arg(long, default_value = "1")]
        u: String,
        /// Evaluate at this prime (requires --s).
        #[arg(long, requires = "s")]
        p: Option<u64>,
        /// Real and imaginary part of s.
        #[arg(long, num_args = 2, allow_negative_numbers = true, requires = "p")]
        s: Option<Vec<f64>>,
    },
    /// Local zeta integral: closed form against the geometric-series route.
    ZetaLocal {
        #[arg(long = "type")]
        tag: RepType,
        #[arg(long, value_enum)]
        case: ZetaCase,
        /// Basis vector index.
        #[arg(long, default_value_t = 0)]
        j: usize,
    },
    /// Local period, in closed form and from the per-vector zeta integrals.
    Period {
        #[arg(long = "type")]
        tag: RepType,
    },
    /// Character-sum and Smith-form checks over Z/p^e.
    Gauss {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        e: u32,
        /// Exponent k: the character sends the generator of (Z/p^e)^× to e^{2πik/φ(p^e)}.
        #[arg(long = "char-index", default_value_t = 1)]
        char_index: u64,
        /// Argument θ of μ(ϖ) = e^{iθ}.
        #[arg(long = "pi-arg", default_value_t = 0.0, allow_negative_numbers = true)]
        pi_arg: f64,
        #[arg(long, value_enum)]
        check: GaussCheck,
        /// Unit u for the norm-character sum.
        #[arg(long, default_value_t = 1)]
        u: u64,
        /// Symmetric matrix entries a, b, c for the Smith check.
        #[arg(long, num_args = 3, allow_negative_numbers = true, default_values_t = [1i64, 0, 1])]
        form: Vec<i64>,
        /// η = β₂a + β₃θ₀ for the Smith check.
        #[arg(long, num_args = 2, allow_negative_numbers = true, default_values_t = [1i64, 1])]
        eta: Vec<i64>,
    },
    /// Reduced forms, group structure, characters and conjugation of Cl(D).
    Classgroup {
        #[arg(long = "D", allow_negative_numbers = true)]
        d: i64,
    },
    /// Global constants of the spectral average from a JSON configuration.
    Average {
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ZetaCase {
    #[value(name = "1")]
    One,
    #[value(name = "4")]
    Four,
    #[value(name = "56")]
    FiveSix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GaussCheck {
    Gauss,
    Split,
    Normsum,
    Smith,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Gsp4Error> for Failure {
    fn from(e: Gsp4Error) -> Failure {
        match e {
            Gsp4Error::InvalidParams(_) | Gsp4Error::Unsupported { .. } | Gsp4Error::Degenerate(_) => {
                Failure::Usage(e.to_string())
            }
            Gsp4Error::Padic(ref p) if matches!(p, padicring::PadicError::Precondition(_)) => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

impl From<padicring::PadicError> for Failure {
    fn from(e: padicring::PadicError) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<symfield::SymError> for Failure {
    fn from(e: symfield::SymError) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<classgroup::ClassGroupError> for Failure {
    fn from(e: classgroup::ClassGroupError) -> Failure {
        Failure::Usage(e.to_string())
    }
}

/// A JSON document plus whether every check in it passed.
struct Output {
    doc: Value,
    ok: bool,
}

/// Run `bz` with the given arguments (the first is the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    let seed = match std::env::var(SEED_ENV) {
        Ok(v) => match v.trim().parse::<u64>() {
            Ok(s) => s,
            Err(_) => return usage(format!("{SEED_ENV}={v:?} is not an unsigned integer")),
        },
        Err(_) => DEFAULT_SEED,
    };
    let result = match cli.command {
        Command::Verify { suite, jobs, format } => return verify(&suite, jobs, format, seed),
        Command::Lfactor { tag, symbolic, alpha, beta, gamma, u, p, s } => {
            lfactor(tag, symbolic, [alpha, beta, gamma], &u, p, s)
        }
        Command::ZetaLocal { tag, case, j } => zeta_local(tag, case, j),
        Command::Period { tag } => period(tag),
        Command::Gauss { p, e, char_index, pi_arg, check, u, form, eta } => {
            gauss(p, e, char_index, pi_arg, check, u, &form, &eta)
        }
        Command::Classgroup { d } => classgroup_cmd(d),
        Command::Average { config } => average(&config),
    };
    match result {
        Ok(out) => {
            let mut doc = out.doc;
            if let Value::Object(map) = &mut doc {
                map.insert("schema".into(), json!(SCHEMA));
            }
            let text = serde_json::to_string_pretty(&doc).expect("JSON values serialize") + "\n";
            Outcome { code: if out.ok { 0 } else { 1 }, stdout: text, stderr: String::new() }
        }
        Err(Failure::Usage(msg)) => usage(msg),
        Err(Failure::Compute(msg)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

fn usage(msg: String) -> Outcome {
    Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") }
}

fn verify(suite: &str, jobs: usize, format: Format, seed: u64) -> Outcome {
    let suites = match parse_suites(suite) {
        Ok(s) => s,
        Err(e) => return usage(format!("{e}; expected `all` or one of case1, case4, case56, lemmas, ramified, smith, classgroup, tfactor, epsilon, arch")),
    };
    let reports = run_suites(&suites, seed, jobs.max(1));
    let ok = reports.iter().all(Report::passed);
    let stdout = match format {
        Format::Json => {
            let doc = json!({ "schema": SCHEMA, "seed": seed, "passed": ok, "reports": reports });
            serde_json::to_string_pretty(&doc).expect("reports serialize") + "\n"
        }
        Format::Plain => {
            let mut s = String::new();
            for r in &reports {
                let verdict = if r.passed() { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    s,
                    "criterion {:>2} {:<10} {verdict} ({}/{}) {}",
                    r.suite.criterion(),
                    r.suite.name(),
                    r.summary.passed,
                    r.summary.total,
                    r.suite.description()
                );
                for c in r.cases.iter().filter(|c| !c.pass) {
                    let _ = writeln!(s, "    failed {}: expected {} got {}", c.id, c.expected, c.actual);
                }
            }
            let _ = writeln!(s, "seed {seed}");
            s
        }
    };
    Outcome { code: if ok { 0 } else { 1 }, stdout, stderr: String::new() }
}

fn expr(text: &str) -> Result<RatFunc, Failure> {
    Ok(parse(text)?)
}

fn lfactor(
    tag: RepType,
    symbolic: bool,
    params: [Option<String>; 3],
    u: &str,
    p: Option<u64>,
    s: Option<Vec<f64>>,
) -> Result<Output, Failure> {
    let rep = if symbolic {
        if params.iter().any(Option::is_some) {
            return Err(Failure::Usage("--symbolic cannot be combined with explicit parameters".into()));
        }
        LocalRep::symbolic(tag)
    } else {
        let [a, b, g] = params;
        let a = a.as_deref().map(expr).transpose()?;
        let b = b.as_deref().map(expr).transpose()?;
        let g = g.ok_or_else(|| Failure::Usage("--gamma is required unless --symbolic is given".into()))?;
        LocalRep::new(tag, a, b, expr(&g)?)?
    };
    let twist = TwistData::unramified(expr(u)?, RatFunc::one());
    let l = spinor_lfactor(&rep, &twist)?;
    let mut doc = json!({
        "type": tag,
        "params": rep.params().into_iter().map(|(n, v)| (n.to_string(), json!(v.to_string()))).collect::<serde_json::Map<_, _>>(),
        "u": twist.u.to_string(),
        "lfactor": l.to_string(),
        "lfactor_half_shift": spinor_lfactor_half(&rep, &twist)?.to_string(),
        "central_character": rep.central_character().to_string(),
    });
    if tag.is_spherical() {
        doc["std_lfactor"] = json!(std_lfactor(&rep)?.to_string());
    }
    if let Some(note) = rep.unitarity_note() {
        doc["note"] = json!(note);
    }
    if let (Some(p), Some(s)) = (p, s) {
        let s = Complex64::new(s[0], s[1]);
        let pf = p as f64;
        let env = [(Var::Q, Complex64::new(pf.sqrt(), 0.0)), (Var::T, (-s * pf.ln()).exp())];
        doc["value"] = json!(eval_complex(&l, &env)?);
        doc["p"] = json!(p);
        doc["s"] = json!(s);
    }
    Ok(Output { doc, ok: true })
}

fn zeta_local(tag: RepType, case: ZetaCase, j: usize) -> Result<Output, Failure> {
    let twist = TwistData::unramified(RatFunc::var(Var::U), RatFunc::one());
    let (name, rep, closed, series) = match case {
        ZetaCase::One => {
            let rep = LocalRep::symbolic_trivial_central(tag);
            ("1", rep.clone(), spinor_lfactor_half(&rep, &twist)?, zeta_case1(&rep, &twist)?)
        }
        ZetaCase::Four => {
            let rep = LocalRep::symbolic_trivial_central(tag);
            ("4", rep.clone(), zeta_case4(&rep, &twist, j)?, zeta_series(&rep, &twist, j)?)
        }
        ZetaCase::FiveSix => {
            let rep = LocalRep::symbolic_trivial_central(tag);
            ("5-6", rep.clone(), zeta_case5_6(&rep, &twist, j)?, zeta_series(&rep, &twist, j)?)
        }
    };
    let matched = closed == series;
    let inputs = json!({
        "type": tag,
        "basis_index": j,
        "params": rep.params().into_iter().map(|(n, v)| (n.to_string(), json!(v.to_string()))).collect::<serde_json::Map<_, _>>(),
        "u": "U",
    });
    Ok(Output {
        doc: json!({ "case": name, "inputs": inputs, "closed_form": closed.to_string(), "series_form": series.to_string(), "match": matched }),
        ok: matched,
    })
}

fn period(tag: RepType) -> Result<Output, Failure> {
    let rep = LocalRep::symbolic_trivial_central(tag);
    let twist = if tag.is_spherical() {
        TwistData::unramified(RatFunc::var(Var::U), RatFunc::one())
    } else {
        TwistData::symbolic()
    };
    let closed = local_period(&rep, &twist)?;
    let components = local_period_components(&rep, &twist)?;
    let matched = closed == components;
    Ok(Output {
        doc: json!({
            "type": tag,
            "closed_form": closed.to_string(),
            "from_components": components.to_string(),
            "match": matched,
        }),
        ok: matched,
    })
}

#[allow(clippy::too_many_arguments)]
fn gauss(p: u64, e: u32, k: u64, pi_arg: f64, check: GaussCheck, u: u64, form: &[i64], eta: &[i64]) -> Result<Output, Failure> {
    const TOL: f64 = 1e-9;
    let ring = ResidueRing::new(p, e)?;
    let mu = MultChar::new(&ring, k % ring.unit_order(), Complex64::from_polar(1.0, pi_arg));
    let mut inputs = json!({ "p": p, "e": e, "char_index": k, "pi_arg": pi_arg, "check": format!("{check:?}").to_lowercase() });
    let (lhs, rhs) = match check {
        GaussCheck::Gauss => {
            let n = -(e as i32);
            inputs["n"] = json!(n);
            (unit_integral(&mu, 1, n)?, unit_integral_closed(&mu, n)?)
        }
        GaussCheck::Split => {
            let gr = GaloisRing::new(p, e)?;
            let wf = gauss_sum_f(&mu)?;
            let sign = if e.is_multiple_of(2) { 1.0 } else { -1.0 };
            (gauss_sum_l(&mu, &gr)?, sign * wf * wf)
        }
        GaussCheck::Normsum => {
            let gr = GaloisRing::new(p, e)?;
            inputs["u"] = json!(u);
            (norm_char_sum(&gr, &mu, u)?, norm_char_sum_closed(&mu, u)?)
        }
        GaussCheck::Smith => {
            let s = SymForm { a: form[0], b: form[1], c: form[2] };
            inputs["form"] = json!(form);
            inputs["eta"] = json!(eta);
            let r = y_eta_check(s, (eta[0], eta[1]), p, e)?;
            let det = r.y_scaled[0][0] * r.y_scaled[1][1] - r.y_scaled[0][1] * r.y_scaled[1][0];
            let n = s.norm(eta[0], eta[1]);
            let a = s.a as i128;
            let target = -(a.pow(6) * s.disc() + 4 * n);
            let doc = json!({
                "inputs": inputs,
                "lhs": det.to_string(),
                "rhs": target.to_string(),
                "abs_err": (det - target).abs().to_string(),
                "j": r.j,
                "elementary_divisor_orders": [r.divisor_orders.0, r.divisor_orders.1],
                "smith_claim": r.smith_claim,
                "trace_identity": r.trace_identity,
                "pass": r.det_identity && r.smith_claim && r.trace_identity,
            });
            let ok = r.det_identity && r.smith_claim && r.trace_identity;
            return Ok(Output { doc, ok });
        }
    };
    let err = (lhs - rhs).norm();
    let pass = err < TOL;
    Ok(Output { doc: json!({ "inputs": inputs, "lhs": lhs, "rhs": rhs, "abs_err": err, "pass": pass }), ok: pass })
}

fn classgroup_cmd(d: i64) -> Result<Output, Failure> {
    let g = ClassGroup::new(d)?;
    let h = g.order();
    let forms: Vec<String> = g.classes().iter().map(|f| f.to_string()).collect();
    let table: Vec<Vec<Complex64>> = g.characters().iter().map(|chi| (0..h).map(|i| chi.value(i)).collect()).collect();
    let conj: Vec<Value> = (0..h)
        .map(|i| json!({ "class": forms[i], "conjugate": forms[g.conjugate_class(i)], "inverse": forms[g.inverse(i)] }))
        .collect();
    Ok(Output {
        doc: json!({
            "D": d,
            "class_number": h,
            "w_D": classgroup::w_d(d),
            "reduced_forms": forms,
            "invariants": g.invariants(),
            "character_table": table,
            "conjugation": conj,
        }),
        ok: true,
    })
}

fn average(path: &PathBuf) -> Result<Output, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let cfg: GlobalConfig = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("invalid configuration: {e}")))?;
    let gp = cfg.params()?;
    let s = cfg.point();
    let pre = average_prefactor(s, &gp)?;
    let (l1, l2) = gp.weight();
    let arch = arch_lfactor(s, l1, l2)?;
    let eps = global_epsilon(s, &gp, gp.n())?;
    let eps_half = global_epsilon(Complex64::new(0.5, 0.0), &gp, gp.n())?;
    let inputs = serde_json::to_value(&cfg).map_err(|e| Failure::Compute(e.to_string()))?;
    Ok(Output {
        doc: json!({
            "inputs": inputs,
            "prefactor": {
                "total": pre.total,
                "factors": pre.factors,
                "formula": "2^-2 |D|^((3-(l1+l2)/2)/2) e^(-2 pi sqrt|D|) / (w_D^2 [K_f:K_0(N)]) * M^(s-6) zeta_M(1) zeta_M(4) mu~(2D) G(mu~) * N^(s-1) mu~(N)^-1 prod_{p|N}(1+p^-2)^-1 * (v|v)^2",
            },
            "arch_lfactor": { "value": arch, "formula": "Gamma_C(s+(l1-l2)/2+1/2) Gamma_C(s+(l1+l2)/2-3/2), Gamma_C(s) = 2(2 pi)^-s Gamma(s)" },
            "epsilon": {
                "N_pi": gp.n(),
                "at_s": eps,
                "at_half": eps_half,
                "formula": "(-1)^l2 mu~(N_pi^2) (G(mu~)/sqrt M)^4 (M^4 N_pi^2)^(1/2-s)",
            },
            "vnorm_note": "the archimedean vector norm (v|v) is caller-supplied (default 1)",
        }),
        ok: true,
    })
}
