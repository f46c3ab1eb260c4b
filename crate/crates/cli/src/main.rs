//! Command-line front end: every computation of the engine behind a
//! deterministic text or JSON interface. Exit code 0 means success or a
//! verified property, 1 a verification failure (negative witness, failed
//! check), 2 a usage error.

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use qgrass::deform::{self, CertificateReport, DeformationCoeffs};
use qgrass::exhibits::{self, LgElement};
use qgrass::partition::{BoxBound, Partition, Permutation};
use qgrass::qring::{self, QClass, RingParams};
use qgrass::rational::{format_rational, parse_rational};
use qgrass::schur;
use qgrass::seidel;
use qgrass::Error;
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "qgrass",
    version,
    about = "Exact quantum Schubert calculus for Grassmannians"
)]
struct Cli {
    /// Emit a stable JSON document instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RingArgs {
    /// Rows of the box (rank of the tautological bundle)
    #[arg(long)]
    m: u32,

    /// Columns of the box
    #[arg(long)]
    k: u32,

    /// Deformation scalar, a fraction string such as 1, -1, or 7/3
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    alpha: String,
}

impl RingArgs {
    fn params(&self) -> Result<RingParams, Error> {
        RingParams::new(self.m, self.k, parse_rational(&self.alpha)?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Branch {
    Positive,
    Classical,
}

#[derive(Subcommand)]
enum Command {
    /// Expand sigma_lambda * sigma_mu in the basis {q^d sigma_nu}
    Multiply {
        #[command(flatten)]
        ring: RingArgs,
        /// Also reduce the product through the ideal normal form and compare
        #[arg(long)]
        verify_oracle: bool,
        /// Degree cap for the normal-form reduction (default 3n)
        #[arg(long)]
        degree_cap: Option<u32>,
        lambda: String,
        mu: String,
    },
    /// Multiply sigma_lambda by a special class: --chern P (column 1^p) or --special P (row p)
    #[command(group(ArgGroup::new("class").required(true).args(["chern", "special"])))]
    Pieri {
        #[command(flatten)]
        ring: RingArgs,
        /// Multiply by the Chern class c_p = sigma_(1^p)
        #[arg(long)]
        chern: Option<u32>,
        /// Multiply by the special class sigma_p
        #[arg(long)]
        special: Option<u32>,
        lambda: String,
    },
    /// Verify the Giambelli determinant identity (all lambda if none given)
    Giambelli {
        #[command(flatten)]
        ring: RingArgs,
        lambda: Option<String>,
    },
    /// Print the structure-constant table over all basis pairs
    Constants {
        #[command(flatten)]
        ring: RingArgs,
        /// Only pairs with |lambda| + |mu| at most this total degree
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Seidel orbit of a partition, with weights and their sum
    Orbit {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: u32,
        lambda: String,
    },
    /// Smallest shift p with |lambda^p| < |mu^p| (requires |lambda| > |mu|)
    Separate {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        k: u32,
        lambda: String,
        mu: String,
    },
    /// Build and verify a uniqueness certificate for the chosen proof branch
    Certify {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, value_enum)]
        branch: Branch,
    },
    /// Check a deformation coefficient file for negative structure constants
    DeformCheck {
        #[command(flatten)]
        ring: RingArgs,
        /// File with lines `<lambda> ; <mu> ; <rational>`
        #[arg(long)]
        coeffs: PathBuf,
    },
    /// The LG(2,4) two-parameter family: table and predicates
    Lg24 {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Report whether the member multiplies non-negatively
        #[arg(long)]
        check_region: bool,
        /// Verify associativity of the member exactly
        #[arg(long)]
        check_assoc: bool,
    },
    /// Shift orbit of a permutation on the complete flag variety
    Flags {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        w: String,
    },
}

fn write_line(args: std::fmt::Arguments) {
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    if writeln!(lock, "{args}").is_err() {
        // Downstream closed the pipe; nothing left to say.
        std::process::exit(0);
    }
}

macro_rules! outln {
    ($($arg:tt)*) => { write_line(format_args!($($arg)*)) };
}

fn parse_partition(text: &str) -> Result<Partition, Error> {
    Partition::from_str(text)
}

fn partition_json(p: &Partition) -> Value {
    json!(p.parts())
}

fn params_json(params: &RingParams) -> Vec<(&'static str, Value)> {
    vec![
        ("m", json!(params.m())),
        ("k", json!(params.k())),
        ("n", json!(params.n())),
        ("alpha", json!(format_rational(params.alpha()))),
    ]
}

fn class_document(params: &RingParams, class: &QClass) -> Value {
    let mut doc = serde_json::Map::new();
    for (key, value) in params_json(params) {
        doc.insert(key.to_string(), value);
    }
    doc.insert("terms".to_string(), class.to_json());
    Value::Object(doc)
}

fn emit(value: &Value) {
    outln!("{}", serde_json::to_string(value).expect("JSON serialization"));
}

fn lg_element_json(element: &LgElement) -> Value {
    let terms: Vec<Value> = element
        .terms()
        .map(|(d, i, coeff)| json!({"d": d, "tau": i, "coeff": format_rational(coeff)}))
        .collect();
    Value::Array(terms)
}

fn run(cli: &Cli) -> Result<i32, Error> {
    match &cli.command {
        Command::Multiply {
            ring,
            verify_oracle,
            degree_cap,
            lambda,
            mu,
        } => {
            let params = ring.params()?;
            let lambda = parse_partition(lambda)?;
            let mu = parse_partition(mu)?;
            let product = qring::multiply(
                &QClass::sigma(lambda.clone()),
                &QClass::sigma(mu.clone()),
                &params,
            )?;
            let oracle_agrees = if *verify_oracle {
                let cap = degree_cap.unwrap_or_else(|| schur::default_degree_cap(&params));
                let f = schur::sigma_polynomial(&lambda, &params)
                    * schur::sigma_polynomial(&mu, &params);
                Some(schur::normal_form(&f, &params, cap)? == product)
            } else {
                None
            };
            if cli.json {
                let mut doc = class_document(&params, &product);
                if let Some(agrees) = oracle_agrees {
                    doc.as_object_mut()
                        .expect("document is an object")
                        .insert("oracle_agrees".to_string(), json!(agrees));
                }
                emit(&doc);
            } else {
                outln!("{product}");
                if let Some(agrees) = oracle_agrees {
                    outln!("oracle: {}", if agrees { "ok" } else { "MISMATCH" });
                }
            }
            Ok(match oracle_agrees {
                Some(false) => 1,
                _ => 0,
            })
        }
        Command::Pieri {
            ring,
            chern,
            special,
            lambda,
        } => {
            let params = ring.params()?;
            let lambda = parse_partition(lambda)?;
            let product = match (chern, special) {
                (Some(p), None) => qring::pieri_chern(*p, &lambda, &params)?,
                (None, Some(p)) => qring::pieri_special(*p, &lambda, &params)?,
                _ => unreachable!("clap enforces exactly one of --chern/--special"),
            };
            if cli.json {
                emit(&class_document(&params, &product));
            } else {
                outln!("{product}");
            }
            Ok(0)
        }
        Command::Giambelli { ring, lambda } => {
            let params = ring.params()?;
            let targets = match lambda {
                Some(text) => vec![parse_partition(text)?],
                None => Partition::all_in_box(&params.bbox()),
            };
            let mut results = Vec::new();
            let mut all_ok = true;
            for lambda in targets {
                let ok = qring::giambelli_check(&lambda, &params)?;
                all_ok &= ok;
                results.push((lambda, ok));
            }
            if cli.json {
                let rows: Vec<Value> = results
                    .iter()
                    .map(|(l, ok)| json!({"lambda": partition_json(l), "ok": ok}))
                    .collect();
                let mut doc = serde_json::Map::new();
                for (key, value) in params_json(&params) {
                    doc.insert(key.to_string(), value);
                }
                doc.insert("results".to_string(), Value::Array(rows));
                doc.insert("all_ok".to_string(), json!(all_ok));
                emit(&Value::Object(doc));
            } else {
                for (l, ok) in &results {
                    outln!("{l} {}", if *ok { "ok" } else { "FAIL" });
                }
            }
            Ok(if all_ok { 0 } else { 1 })
        }
        Command::Constants { ring, max_degree } => {
            let params = ring.params()?;
            let table = qring::full_structure_table(&params, *max_degree)?;
            if cli.json {
                let entries: Vec<Value> = table
                    .iter()
                    .map(|((l, m_, nu, d), value)| {
                        json!({
                            "lambda": partition_json(l),
                            "mu": partition_json(m_),
                            "nu": partition_json(nu),
                            "d": d,
                            "coeff": format_rational(value),
                        })
                    })
                    .collect();
                let mut doc = serde_json::Map::new();
                for (key, value) in params_json(&params) {
                    doc.insert(key.to_string(), value);
                }
                doc.insert("entries".to_string(), Value::Array(entries));
                emit(&Value::Object(doc));
            } else {
                for ((l, m_, nu, d), value) in table.iter() {
                    outln!("{l} ; {m_} ; {nu} ; {d} ; {}", format_rational(value));
                }
            }
            Ok(0)
        }
        Command::Orbit { m, k, lambda } => {
            let bbox = BoxBound::new(*m, *k)?;
            let lambda = parse_partition(lambda)?;
            let orbit = seidel::orbit(&lambda, &bbox)?;
            if cli.json {
                let shifts: Vec<Value> = orbit.shifts().iter().map(partition_json).collect();
                emit(&json!({
                    "m": m,
                    "k": k,
                    "base": partition_json(orbit.base()),
                    "shifts": shifts,
                    "weights": orbit.weights(),
                    "sum": orbit.weight_sum(),
                }));
            } else {
                for shifted in orbit.shifts() {
                    outln!("{shifted} {}", shifted.weight());
                }
                outln!("sum={}", orbit.weight_sum());
            }
            Ok(0)
        }
        Command::Separate { m, k, lambda, mu } => {
            let bbox = BoxBound::new(*m, *k)?;
            let lambda = parse_partition(lambda)?;
            let mu = parse_partition(mu)?;
            let (p, lw, mw) = seidel::find_separating_shift(&lambda, &mu, &bbox)?;
            if cli.json {
                emit(&json!({
                    "p": p,
                    "shifted_lambda_weight": lw,
                    "shifted_mu_weight": mw,
                }));
            } else {
                outln!("p={p} |lambda^p|={lw} |mu^p|={mw}");
            }
            Ok(0)
        }
        Command::Certify { ring, branch } => {
            let params = ring.params()?;
            let report = match branch {
                Branch::Positive => deform::certify_positive_branch(&params),
                Branch::Classical => deform::certify_classical_branch(&params),
            };
            match report {
                Ok(CertificateReport::Positive { pairs, .. }) => {
                    if cli.json {
                        let rows: Vec<Value> = pairs
                            .iter()
                            .map(|c| {
                                json!({
                                    "lambda": partition_json(&c.lambda),
                                    "mu": partition_json(&c.mu),
                                    "p": c.p,
                                    "d": c.d,
                                    "e_prime": c.e_prime,
                                })
                            })
                            .collect();
                        emit(&json!({
                            "branch": "positive",
                            "pairs": rows,
                            "valid": true,
                        }));
                    } else {
                        for c in &pairs {
                            outln!(
                                "{} ; {} ; p={} d={} e'={}",
                                c.lambda, c.mu, c.p, c.d, c.e_prime
                            );
                        }
                        outln!("positive certificate valid: {} pairs", pairs.len());
                    }
                    Ok(0)
                }
                Ok(CertificateReport::Classical {
                    strip_maxima,
                    dual_products,
                    equal_weight_zero,
                    lower_weight_zero,
                    ..
                }) => {
                    if cli.json {
                        emit(&json!({
                            "branch": "classical",
                            "checks": {
                                "strip_maxima": strip_maxima,
                                "dual_products": dual_products,
                                "equal_weight_zero": equal_weight_zero,
                                "lower_weight_zero": lower_weight_zero,
                            },
                            "valid": true,
                        }));
                    } else {
                        outln!("strip maxima verified: {strip_maxima}");
                        outln!("dual products verified: {dual_products}");
                        outln!("equal-weight annihilations verified: {equal_weight_zero}");
                        outln!("lower-weight annihilations verified: {lower_weight_zero}");
                        outln!("classical certificate valid");
                    }
                    Ok(0)
                }
                Err(Error::Internal(message)) => {
                    eprintln!("certificate failed: {message}");
                    Ok(1)
                }
                Err(e) => Err(e),
            }
        }
        Command::DeformCheck { ring, coeffs } => {
            let params = ring.params()?;
            let text = std::fs::read_to_string(coeffs)
                .map_err(|e| Error::CoeffFile(format!("{}: {e}", coeffs.display())))?;
            let deformation = DeformationCoeffs::from_text(params, &text)?;
            let report = deformation.check_nonnegative()?;
            if cli.json {
                let rows: Vec<Value> = report
                    .violations()
                    .iter()
                    .map(|v| {
                        json!({
                            "lambda": partition_json(&v.lambda),
                            "mu": partition_json(&v.mu),
                            "nu": partition_json(&v.nu),
                            "d": v.d,
                            "value": format_rational(&v.value),
                        })
                    })
                    .collect();
                emit(&json!({
                    "nonnegative": report.is_nonnegative(),
                    "violations": rows,
                }));
            } else if report.is_nonnegative() {
                outln!("nonnegative");
            } else {
                for v in report.violations() {
                    outln!(
                        "{} ; {} ; {} ; d={} ; N={}",
                        v.lambda,
                        v.mu,
                        v.nu,
                        v.d,
                        format_rational(&v.value)
                    );
                }
                outln!("violations: {}", report.violations().len());
            }
            Ok(if report.is_nonnegative() { 0 } else { 1 })
        }
        Command::Lg24 {
            a,
            b,
            check_region,
            check_assoc,
        } => {
            let a = parse_rational(a)?;
            let b = parse_rational(b)?;
            if *check_region {
                let (nonnegative, witness) = exhibits::lg24_is_nonnegative(&a, &b);
                if cli.json {
                    let witness_json = witness
                        .as_ref()
                        .map(|(label, value)| {
                            json!({"label": label, "value": format_rational(value)})
                        })
                        .unwrap_or(Value::Null);
                    emit(&json!({
                        "a": format_rational(&a),
                        "b": format_rational(&b),
                        "nonnegative": nonnegative,
                        "witness": witness_json,
                    }));
                } else if let Some((label, value)) = &witness {
                    outln!("negative: {label} = {}", format_rational(value));
                } else {
                    outln!("nonnegative");
                }
                return Ok(if nonnegative { 0 } else { 1 });
            }
            if *check_assoc {
                let associative = exhibits::lg24_associativity(&a, &b);
                if cli.json {
                    emit(&json!({
                        "a": format_rational(&a),
                        "b": format_rational(&b),
                        "associative": associative,
                    }));
                } else {
                    outln!(
                        "{}",
                        if associative { "associative" } else { "not associative" }
                    );
                }
                return Ok(if associative { 0 } else { 1 });
            }
            let table = exhibits::lg24_table(&a, &b);
            if cli.json {
                let rows: Vec<Value> = table
                    .iter()
                    .map(|((i, j), element)| {
                        json!({"i": i, "j": j, "terms": lg_element_json(element)})
                    })
                    .collect();
                emit(&json!({
                    "a": format_rational(&a),
                    "b": format_rational(&b),
                    "table": rows,
                }));
            } else {
                for ((i, j), element) in &table {
                    outln!("tau{i}*tau{j} = {element}");
                }
            }
            Ok(0)
        }
        Command::Flags { n, w } => {
            let w: Permutation = w.parse()?;
            if w.n() != *n {
                return Err(Error::InvalidPermutation(format!(
                    "permutation {w} has {} entries, expected n = {n}",
                    w.n()
                )));
            }
            let orbit = exhibits::flag_seidel_orbit(&w)?;
            let sum: u32 = orbit.iter().map(|(_, l)| *l).sum();
            if cli.json {
                let rows: Vec<Value> = orbit
                    .iter()
                    .enumerate()
                    .map(|(r, (perm, length))| {
                        json!({"r": r, "w": perm.values(), "length": length})
                    })
                    .collect();
                emit(&json!({
                    "n": n,
                    "t": exhibits::flag_shift_perm(*n).values(),
                    "orbit": rows,
                    "sum": sum,
                }));
            } else {
                for (perm, length) in &orbit {
                    outln!("{perm} {length}");
                }
                outln!("sum={sum}");
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(Error::Internal(message)) => {
            eprintln!("error: internal invariant violated: {message}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
