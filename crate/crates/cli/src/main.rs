use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use skewring::graded::graded_iso_check;
use skewring::k0::{
    idempotent_rank, k0_rank_check, serre_transfer_check, stable_iso_witness, stably_free_witness,
    unimodular_complete, IdempotentMatrix,
};
use skewring::poly::{mkl_oracle_check, poly_product_check};
use skewring::ring::{ring_axiom_check, sigma_derivation_check, sigma_endomorphism_check, sigma_nilpotence_bound};
use skewring::series::{ideal_closure_check, series_law_check, x_multiplication_check};
use skewring::{CheckReport, LocalRing, Matrix, RingContext, SeriesRing};

mod expr;
mod input;

use expr::{eval_poly, eval_series, parse_expression};
use input::{parse_matrix, parse_row, ExprBase, InputError};

#[derive(Parser)]
#[command(name = "skewring", version, about = "Exact arithmetic in skew polynomial and truncated skew power series rings")]
struct Cli {
    /// Ring preset, e.g. `zmod:2^3` or `truncpoly:3:3:c=2`.
    #[arg(long, global = true)]
    ring: Option<String>,
    /// Work in S/G_N with this precision instead of the polynomial ring.
    #[arg(long, global = true)]
    prec: Option<usize>,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 200)]
    samples: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print an expression in left normal form.
    Normalize {
        expr: String,
        /// Also print the right normal form `Σ xⁱ·bᵢ`.
        #[arg(long)]
        right: bool,
    },
    /// Multiply two expressions.
    Mul { left: String, right: String },
    /// Filtration degree in S/G_N.
    Degree { expr: String },
    /// Principal symbol in the associated graded ring.
    Symbol { expr: String },
    /// Least m such that words with m δ-factors map R into Iⁿ.
    Nilbound {
        /// Only this n (default: every n up to the nilpotency index).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 8)]
        word_limit: usize,
    },
    /// Free rank of an idempotent matrix, with a conjugation certificate.
    Rank {
        matrix: String,
        /// Also exhibit image(e) ⊕ base^s ≅ base^(r+s).
        #[arg(long, value_name = "S")]
        stably_free: Option<usize>,
    },
    /// Stable isomorphism between two idempotent matrices.
    StableIso {
        left: String,
        right: String,
        #[arg(long, default_value_t = 3)]
        t_max: usize,
    },
    /// Complete a unimodular row to an invertible matrix.
    CompleteRow { row: String },
    /// Run a seeded property suite.
    Check { suite: Suite },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Suite {
    RingAxioms,
    SigmaDerivation,
    MklOracle,
    PolyAssoc,
    SeriesAssoc,
    IdealClosure,
    GradedIso,
    K0Rank,
    SerreTransfer,
}

/// A failed command: usage and input problems exit 2, everything else 1.
enum Failure {
    Usage(String),
    Refused(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<skewring::Error> for Failure {
    fn from(e: skewring::Error) -> Self {
        Failure::Refused(e.to_string())
    }
}

/// What a command prints, in both formats, and whether it succeeded.
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, ok: true }
    }
}

struct Env {
    ctx: Arc<RingContext>,
    prec: Option<usize>,
    seed: u64,
    samples: usize,
}

impl Env {
    fn series(&self) -> Result<Option<SeriesRing>, Failure> {
        self.prec
            .map(|n| SeriesRing::new(self.ctx.clone(), n))
            .transpose()
            .map_err(Failure::from)
    }

    fn require_series(&self, what: &str) -> Result<SeriesRing, Failure> {
        self.series()?
            .ok_or_else(|| Failure::Usage(format!("{what} needs --prec <N>")))
    }
}

fn matrix_rows<B: LocalRing>(m: &Matrix<B>) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|a| m.base().render(a)).collect())
        .collect();
    json!(rows)
}

fn block<B: LocalRing>(label: &str, m: &Matrix<B>) -> String {
    format!("{label} =\n{}", m.render())
}

fn report_json(r: &CheckReport) -> Value {
    let tallies: serde_json::Map<String, Value> =
        r.tallies.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    json!({
        "suite": r.suite,
        "verdict": if r.passed() { "PASS" } else { "FAIL" },
        "trials": r.trials,
        "skipped": r.skipped,
        "exhaustive": r.exhaustive,
        "tallies": tallies,
        "counterexample": r.counterexample.as_ref().map(|c| json!({"law": c.law, "witness": c.witness})),
    })
}

fn evaluate(env: &Env, text: &str) -> Result<String, Failure> {
    let e = parse_expression(text, &env.ctx).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(match env.series()? {
        Some(ring) => eval_series(&e, &ring).render(),
        None => eval_poly(&e, &env.ctx).render(),
    })
}

fn normalize(env: &Env, text: &str, right: bool) -> Result<Outcome, Failure> {
    let value = evaluate(env, text)?;
    if !right {
        return Ok(Outcome::ok(
            value.clone(),
            json!({"verdict": "OK", "input": text, "result": value}),
        ));
    }
    if env.prec.is_some() {
        return Err(Failure::Usage("--right applies to polynomials; drop --prec".into()));
    }
    let e = parse_expression(text, &env.ctx).map_err(|e| Failure::Usage(e.to_string()))?;
    let right_form = eval_poly(&e, &env.ctx).to_right_form()?.render();
    Ok(Outcome::ok(
        format!("left:  {value}\nright: {right_form}"),
        json!({"verdict": "OK", "input": text, "result": value, "right": right_form}),
    ))
}

fn mul(env: &Env, left: &str, right: &str) -> Result<Outcome, Failure> {
    let parse = |t: &str| parse_expression(t, &env.ctx).map_err(|e| Failure::Usage(e.to_string()));
    let (a, b) = (parse(left)?, parse(right)?);
    let value = match env.series()? {
        Some(ring) => eval_series(&a, &ring).mul(&eval_series(&b, &ring))?.render(),
        None => eval_poly(&a, &env.ctx).mul(&eval_poly(&b, &env.ctx))?.render(),
    };
    Ok(Outcome::ok(
        format!("({a}) * ({b}) = {value}"),
        json!({"verdict": "OK", "left": a.to_string(), "right": b.to_string(), "result": value}),
    ))
}

fn degree(env: &Env, text: &str) -> Result<Outcome, Failure> {
    let ring = env.require_series("degree")?;
    let e = parse_expression(text, &env.ctx).map_err(|e| Failure::Usage(e.to_string()))?;
    let f = eval_series(&e, &ring);
    let n = ring.precision();
    let (text_line, deg) = if f.is_zero() {
        (format!("{f}\nfiltration degree: >= {n} (zero class)"), Value::Null)
    } else {
        let d = f.filtration_degree();
        (format!("{f}\nfiltration degree: {d}"), json!(d))
    };
    Ok(Outcome::ok(
        text_line,
        json!({"verdict": "OK", "element": f.render(), "degree": deg, "precision": n}),
    ))
}

fn symbol(env: &Env, text: &str) -> Result<Outcome, Failure> {
    let ring = env.require_series("symbol")?;
    let e = parse_expression(text, &env.ctx).map_err(|e| Failure::Usage(e.to_string()))?;
    let f = eval_series(&e, &ring);
    let s = f.principal_symbol()?;
    let d = f.filtration_degree();
    Ok(Outcome::ok(
        format!("{f}\nsymbol in degree {d}: {s}"),
        json!({"verdict": "OK", "element": f.render(), "degree": d, "symbol": s.render()}),
    ))
}

fn nilbound(env: &Env, only: Option<usize>, word_limit: usize) -> Result<Outcome, Failure> {
    if word_limit == 0 {
        return Err(Failure::Usage("--word-limit must be positive".into()));
    }
    let top = env.ctx.radical_nilpotency();
    let ns: Vec<usize> = match only {
        Some(0) => return Err(Failure::Usage("--n must be positive".into())),
        Some(n) => vec![n],
        None => (1..=top).collect(),
    };
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for n in ns {
        match sigma_nilpotence_bound(&env.ctx, n, word_limit) {
            Some(m) => {
                lines.push(format!("n={n}: m={m}"));
                rows.push(json!({"n": n, "m": m}));
            }
            None => {
                ok = false;
                lines.push(format!("n={n}: no bound with words of length <= {word_limit}"));
                rows.push(json!({"n": n, "m": null}));
            }
        }
    }
    Ok(Outcome {
        text: lines.join("\n"),
        json: json!({"verdict": if ok { "OK" } else { "NO BOUND" }, "word_limit": word_limit, "bounds": rows}),
        ok,
    })
}

fn rank_on<B: ExprBase>(base: &B, text: &str, stably_free: Option<usize>) -> Result<Outcome, Failure> {
    let m = parse_matrix(base, text)?;
    let e = match IdempotentMatrix::new(m.clone()) {
        Ok(e) => e,
        Err(_) => {
            let square = m.mul(&m)?;
            return Ok(Outcome {
                text: format!("{}{}NOT IDEMPOTENT", block("e", &m), block("e^2", &square)),
                json: json!({
                    "verdict": "NOT IDEMPOTENT",
                    "rank": null,
                    "certificate": null,
                    "counterexample": {"e": matrix_rows(&m), "e^2": matrix_rows(&square)},
                }),
                ok: false,
            });
        }
    };
    let w = idempotent_rank(&e)?;
    let verified = w.verify(&e);
    let verdict = if verified {
        format!("RANK {} VERIFIED", w.rank)
    } else {
        format!("RANK {} UNVERIFIED", w.rank)
    };
    let normal = w.conjugator.mul(e.matrix())?.mul(&w.conjugator_inverse)?;
    let mut text = format!(
        "{}{}{}{}{verdict}\nK0 class: {}*[base]",
        block("e", e.matrix()),
        block("U", &w.conjugator),
        block("U^-1", &w.conjugator_inverse),
        block("U*e*U^-1", &normal),
        w.rank
    );
    let mut json = json!({
        "verdict": verdict,
        "rank": w.rank,
        "certificate": {
            "conjugator": matrix_rows(&w.conjugator),
            "conjugator_inverse": matrix_rows(&w.conjugator_inverse),
            "normal_form": matrix_rows(&normal),
        },
        "counterexample": null,
    });
    let mut ok = verified;
    if let Some(s) = stably_free {
        let sf = stably_free_witness(&e, s)?;
        let sf_ok = sf.verify(&e);
        ok &= sf_ok;
        let line = if sf_ok {
            format!("STABLY FREE image(e) + base^{s} = base^{} VERIFIED", sf.free_rank)
        } else {
            "STABLY FREE UNVERIFIED".to_string()
        };
        text.push_str(&format!("\n{}{}{line}", block("alpha", &sf.alpha), block("beta", &sf.beta)));
        json["stably_free"] = json!({
            "s": s,
            "free_rank": sf.free_rank,
            "alpha": matrix_rows(&sf.alpha),
            "beta": matrix_rows(&sf.beta),
            "verified": sf_ok,
        });
    }
    Ok(Outcome { text, json, ok })
}

fn stable_iso_on<B: ExprBase>(base: &B, left: &str, right: &str, t_max: usize) -> Result<Outcome, Failure> {
    let parse = |t: &str| -> Result<IdempotentMatrix<B>, Failure> {
        IdempotentMatrix::new(parse_matrix(base, t)?).map_err(Failure::from)
    };
    let (e1, e2) = (parse(left)?, parse(right)?);
    let (r1, r2) = (idempotent_rank(&e1)?.rank, idempotent_rank(&e2)?.rank);
    let header = format!("rank(e1) = {r1}, rank(e2) = {r2}\n");
    Ok(match stable_iso_witness(&e1, &e2, t_max)? {
        Some(iso) => {
            let verified = iso.verify(&e1, &e2);
            let verdict = if verified {
                format!("STABLY ISOMORPHIC t={} VERIFIED", iso.t)
            } else {
                format!("STABLY ISOMORPHIC t={} UNVERIFIED", iso.t)
            };
            Outcome {
                text: format!(
                    "{header}{}{}{verdict}",
                    block("W", &iso.conjugator),
                    block("W^-1", &iso.conjugator_inverse)
                ),
                json: json!({
                    "verdict": verdict,
                    "rank": [r1, r2],
                    "t": iso.t,
                    "certificate": {
                        "conjugator": matrix_rows(&iso.conjugator),
                        "conjugator_inverse": matrix_rows(&iso.conjugator_inverse),
                    },
                    "counterexample": null,
                }),
                ok: verified,
            }
        }
        None => Outcome {
            text: format!("{header}NOT STABLY ISOMORPHIC for t <= {t_max}"),
            json: json!({
                "verdict": "NOT STABLY ISOMORPHIC",
                "rank": [r1, r2],
                "t": null,
                "certificate": null,
                "counterexample": format!("ranks differ: {r1} != {r2}"),
            }),
            ok: false,
        },
    })
}

fn complete_row_on<B: ExprBase>(base: &B, text: &str) -> Result<Outcome, Failure> {
    let row = parse_row(base, text)?;
    match unimodular_complete(base, &row) {
        Ok(c) => {
            let verified = c.matrix.mul(&c.inverse)?.is_identity() && c.inverse.mul(&c.matrix)?.is_identity();
            let verdict = if verified { "COMPLETED VERIFIED" } else { "COMPLETED UNVERIFIED" };
            Ok(Outcome {
                text: format!("{}{}{verdict}", block("M", &c.matrix), block("M^-1", &c.inverse)),
                json: json!({
                    "verdict": verdict,
                    "certificate": {"matrix": matrix_rows(&c.matrix), "inverse": matrix_rows(&c.inverse)},
                    "counterexample": null,
                }),
                ok: verified,
            })
        }
        Err(skewring::Error::NotUnimodular) => Ok(Outcome {
            text: "NOT UNIMODULAR: no entry is a unit".into(),
            json: json!({
                "verdict": "NOT UNIMODULAR",
                "certificate": null,
                "counterexample": "no entry is a unit",
            }),
            ok: false,
        }),
        Err(e) => Err(e.into()),
    }
}

/// Runs `f` over S/G_N when `--prec` is set and over the coefficient ring
/// otherwise.
fn on_base(
    env: &Env,
    f_ring: impl FnOnce(&Arc<RingContext>) -> Result<Outcome, Failure>,
    f_series: impl FnOnce(&SeriesRing) -> Result<Outcome, Failure>,
) -> Result<Outcome, Failure> {
    match env.series()? {
        Some(ring) => f_series(&ring),
        None => f_ring(&env.ctx),
    }
}

fn check(env: &Env, suite: Suite) -> Result<Outcome, Failure> {
    let (ctx, samples, seed) = (&env.ctx, env.samples, env.seed);
    let reports = match suite {
        Suite::RingAxioms => vec![ring_axiom_check(&**ctx, samples, seed)],
        Suite::SigmaDerivation => vec![
            sigma_endomorphism_check(ctx, samples, seed),
            sigma_derivation_check(ctx, samples, seed),
        ],
        Suite::MklOracle => vec![mkl_oracle_check(ctx, 6)],
        Suite::PolyAssoc => vec![poly_product_check(ctx, 4, samples, seed)],
        Suite::SeriesAssoc => vec![series_law_check(&env.require_series("series-assoc")?, samples, seed)],
        Suite::IdealClosure => {
            let ring = env.require_series("ideal-closure")?;
            let mut out = Vec::new();
            for k in 0..=ring.precision() {
                let label = format!("k={k}");
                out.push((Some(label.clone()), ideal_closure_check(&ring, k, samples, seed.wrapping_add(k as u64))));
                out.push((Some(label), x_multiplication_check(&ring, k)));
            }
            return Ok(summarize(env, out));
        }
        Suite::GradedIso => vec![graded_iso_check(&env.require_series("graded-iso")?, samples, seed)],
        Suite::K0Rank => {
            let mut out = vec![k0_rank_check(ctx, 3, samples, seed)?];
            if let Some(ring) = env.series()? {
                out.push(k0_rank_check(&ring, 3, samples, seed)?);
            }
            out
        }
        Suite::SerreTransfer => {
            let n = env
                .prec
                .ok_or_else(|| Failure::Usage("serre-transfer needs --prec <N>".into()))?;
            vec![serre_transfer_check(ctx.clone(), n, 3, samples, seed)?]
        }
    };
    Ok(summarize(env, reports.into_iter().map(|r| (None, r)).collect()))
}

fn summarize(env: &Env, reports: Vec<(Option<String>, CheckReport)>) -> Outcome {
    let ok = reports.iter().all(|(_, r)| r.passed());
    let first = reports.iter().find_map(|(_, r)| r.counterexample.as_ref());
    let text: Vec<String> = reports
        .iter()
        .map(|(label, r)| match label {
            Some(l) => format!("[{l}] {r}"),
            None => r.to_string(),
        })
        .collect();
    let entries: Vec<Value> = reports
        .iter()
        .map(|(label, r)| {
            let mut v = report_json(r);
            if let Some(l) = label {
                v["label"] = json!(l);
            }
            v
        })
        .collect();
    Outcome {
        text: text.join("\n"),
        json: json!({
            "verdict": if ok { "PASS" } else { "FAIL" },
            "ring": env.ctx.preset(),
            "precision": env.prec,
            "seed": env.seed,
            "samples": env.samples,
            "counterexample": first.map(|c| json!({"law": c.law, "witness": c.witness})),
            "reports": entries,
        }),
        ok,
    }
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let preset = cli
        .ring
        .ok_or_else(|| Failure::Usage("--ring <preset> is required".into()))?;
    let ctx = RingContext::from_preset(&preset).map_err(|e| Failure::Usage(e.to_string()))?;
    let env = Env {
        ctx: Arc::new(ctx),
        prec: cli.prec,
        seed: cli.seed,
        samples: cli.samples,
    };
    if env.prec == Some(0) {
        return Err(Failure::Usage("--prec must be at least 1".into()));
    }
    match cli.command {
        Command::Normalize { expr, right } => normalize(&env, &expr, right),
        Command::Mul { left, right } => mul(&env, &left, &right),
        Command::Degree { expr } => degree(&env, &expr),
        Command::Symbol { expr } => symbol(&env, &expr),
        Command::Nilbound { n, word_limit } => nilbound(&env, n, word_limit),
        Command::Rank { matrix, stably_free } => on_base(
            &env,
            |b| rank_on(b, &matrix, stably_free),
            |b| rank_on(b, &matrix, stably_free),
        ),
        Command::StableIso { left, right, t_max } => on_base(
            &env,
            |b| stable_iso_on(b, &left, &right, t_max),
            |b| stable_iso_on(b, &left, &right, t_max),
        ),
        Command::CompleteRow { row } => on_base(&env, |b| complete_row_on(b, &row), |b| complete_row_on(b, &row)),
        Command::Check { suite } => check(&env, suite),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            match format {
                Format::Text => println!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json values serialize")),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Refused(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
