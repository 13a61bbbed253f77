use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use segal_core::burnside::TableOfMarks;
use segal_core::completion::{IdealTower, DEFAULT_HORIZON};
use segal_core::groups::{is_prime, parse_group};
use segal_core::promod::{
    is_pro_trivial, lim1_vanishing, lim_tower, pro_exactness_check, pro_iso_check, DEFAULT_BOUND,
};
use segal_core::segal::{check_condition3, BuildOptions, ConditionOptions, CONDITION_DEGREE_BOUND, DEFAULT_COSET_BOUND};

use crate::selftest::{run_suites, Fault};
use crate::{input, pretty, report, ToolError};

#[derive(Parser, Debug)]
#[command(name = "segal", version, about = "Burnside rings, I-adic towers and pro-module checks")]
struct Cli {
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Seed for the randomized self-test suites; results of the other verbs never depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Table of marks of a finite group.
    Tom { group: String },
    /// Prime ideals of the Burnside ring, grouped by equality.
    Spec {
        group: String,
        /// Comma-separated primes (0 allowed); defaults to 0, the primes dividing |G| and one more.
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
    },
    /// Levels of the augmentation-adic tower {A(G)/I^n} and the detected limit.
    Complete {
        group: String,
        #[arg(long, default_value_t = DEFAULT_HORIZON)]
        horizon: usize,
    },
    /// Pro-module checks on towers given as JSON.
    #[command(subcommand)]
    Pro(ProVerb),
    /// Condition (3) for one object of a family diagram (preset name or JSON).
    SegalCheck {
        family: String,
        /// Object index, counted from 0.
        #[arg(long)]
        object: usize,
        /// Degree of the symmetric group in the trace; defaults to the lcm of the object orders.
        #[arg(long)]
        m: Option<u64>,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[arg(long, default_value_t = CONDITION_DEGREE_BOUND)]
        degree_bound: u64,
        #[arg(long, default_value_t = DEFAULT_COSET_BOUND)]
        coset_bound: u64,
    },
    /// Run the embedded invariant suites.
    Selftest {
        /// Restrict to the named suites (repeatable).
        #[arg(long = "suite")]
        suites: Vec<String>,
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum ProVerb {
    /// Pro-isomorphism check of a strict morphism.
    Iso(ProArgs),
    /// Pro-exactness of {"f": ..., "g": ...} at the middle tower.
    Exact(ProArgs),
    /// Inverse limit of a tower, with lim¹ vanishing.
    Lim(ProArgs),
    /// Pro-triviality of a tower.
    Trivial(ProArgs),
}

#[derive(Args, Debug)]
struct ProArgs {
    /// Inline JSON, a file path, or `-` for stdin.
    input: String,
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    bound: usize,
}

/// Exit code and the bytes for each stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn emit(v: &Value, pretty: bool) -> String {
    if pretty {
        pretty::render(v)
    } else {
        let mut s = serde_json::to_string_pretty(v).expect("serializable");
        s.push('\n');
        s
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome { code: 0, stdout: text, stderr: String::new() },
                _ => Outcome {
                    code: 2,
                    stdout: emit(&report::error("usage", text.trim()), false),
                    stderr: text,
                },
            };
        }
    };
    match dispatch(&cli) {
        Ok((value, code)) => Outcome { code, stdout: emit(&value, cli.pretty), stderr: String::new() },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: emit(&report::error(e.code(), &e.to_string()), false),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn dispatch(cli: &Cli) -> Result<(Value, i32), ToolError> {
    match &cli.verb {
        Verb::Tom { group } => Ok((report::tom(&TableOfMarks::new(parse_group(group)?)), 0)),
        Verb::Spec { group, primes } => {
            let t = TableOfMarks::new(parse_group(group)?);
            let primes = primes.clone().unwrap_or_else(|| t.spectrum_primes());
            if let Some(&p) = primes.iter().find(|&&p| p != 0 && !is_prime(p)) {
                return Err(segal_core::Error::NotPrime(p).into());
            }
            let blocks = t.spectrum(&primes)?;
            Ok((report::spectrum(&t, &primes, &blocks), 0))
        }
        Verb::Complete { group, horizon } => {
            let t = TableOfMarks::new(parse_group(group)?);
            let r = IdealTower::augmentation(&t)?.complete(*horizon)?;
            let mut v = report::completion(&r);
            v["group"] = report::group(t.group());
            v["horizon"] = report::num(horizon);
            Ok((v, 0))
        }
        Verb::Pro(p) => pro(p),
        Verb::SegalCheck { family, object, m, p, degree_bound, coset_bound } => {
            let d = input::diagram(family)?;
            let prepared = d.prepare()?;
            let build = BuildOptions { degree_bound: *degree_bound, coset_bound: *coset_bound, ..BuildOptions::default() };
            let opts = ConditionOptions { m: *m, p: *p, build };
            let r = check_condition3(&prepared, *object, &opts)?;
            Ok((report::condition3(&d, &r), 0))
        }
        Verb::Selftest { suites, inject_fault } => {
            let fault = match inject_fault.as_deref() {
                None => None,
                Some("integrality") => Some(Fault::CorruptMarks),
                Some(other) => return Err(ToolError::Usage(format!("unknown fault `{other}`"))),
            };
            let results = run_suites(suites, cli.seed, fault).map_err(ToolError::Usage)?;
            let passed = results.iter().all(|r| r.passed());
            let v = json!({
                "seed": report::num(cli.seed),
                "suites": results.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                "status": if passed { "pass" } else { "fail" },
            });
            Ok((v, if passed { 0 } else { 1 }))
        }
    }
}

fn pro(p: &ProVerb) -> Result<(Value, i32), ToolError> {
    let check_bound = |b: usize, min: usize| {
        if b < min {
            Err(ToolError::Usage(format!("--bound must be at least {min}")))
        } else {
            Ok(())
        }
    };
    match p {
        ProVerb::Iso(a) => {
            check_bound(a.bound, 2)?;
            let f = input::morphism(&input::load_json(&a.input)?)?;
            let v = pro_iso_check(&f, a.bound)?;
            Ok((json!({ "check": "pro_iso", "verdict": report::verdict(&v) }), 0))
        }
        ProVerb::Exact(a) => {
            check_bound(a.bound, 2)?;
            let (f, g) = input::morphism_pair(&input::load_json(&a.input)?)?;
            let v = pro_exactness_check(&f, &g, a.bound)?;
            Ok((json!({ "check": "pro_exact", "verdict": report::verdict(&v) }), 0))
        }
        ProVerb::Lim(a) => {
            check_bound(a.bound, 1)?;
            let t = input::tower(&input::load_json(&a.input)?)?;
            let (limit, stability) = lim_tower(&t, a.bound)?;
            let lim1 = lim1_vanishing(&t, a.bound)?;
            Ok((
                json!({
                    "check": "lim",
                    "tower": t.describe(),
                    "limit": report::limit(&limit),
                    "stability": report::verdict(&stability),
                    "lim1_vanishing": report::verdict(&lim1),
                }),
                0,
            ))
        }
        ProVerb::Trivial(a) => {
            check_bound(a.bound, 1)?;
            let t = input::tower(&input::load_json(&a.input)?)?;
            let v = is_pro_trivial(&t, a.bound)?;
            Ok((json!({ "check": "pro_trivial", "tower": t.describe(), "verdict": report::verdict(&v) }), 0))
        }
    }
}
