//! JSON-in/JSON-out command front end.
//!
//! Exit status: 0 for success or a positive answer, 1 for a negative
//! membership answer, 2 for malformed input.

use std::io::Read;

use clap::{Parser, ValueEnum};
use serde_json::{json, Map, Value};

use crate::axioms::{run_all, IDENTITIES};
use crate::drw::{all_functionals, drw_dwork_failure, drw_lift, drw_multi_report, dual_functional, DrwForm};
use crate::error::Error;
use crate::json::{
    drw_from_json, drw_to_json, form_to_json, genexpr_from_json, genexpr_to_json, ghost_from_json, ghost_to_json,
    set_to_json, witt_from_json, witt_to_json,
};
use crate::ring::TruncationSet;
use crate::witt::{blowup_merge, blowup_split, dwork_failure, localized_member, mu_element};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    /// Witt coordinates → ghost tuple
    Ghost,
    /// Ghost tuple → Witt coordinates (fails with NotIntegral(n))
    Witt,
    /// Dwork congruences for a ghost tuple
    CheckDwork,
    /// p-typical membership of a tuple of forms (or an expression's value)
    DrwCheck,
    /// Constructive generator expression for a tuple of forms
    DrwLift,
    /// Per-prime congruences for a tuple of forms
    DrwMulti,
    /// Dual functionals of a tuple of forms
    Functional,
    /// The idempotent-like element μ_n
    Mu,
    /// Blow-up split (or merge of {"left","right"})
    Blowup,
    /// Randomized identity suite
    Axioms,
}

#[derive(Parser, Debug)]
#[command(name = "wittdrw", about = "Exact big Witt vector and de Rham-Witt computations")]
pub struct Args {
    #[arg(value_enum)]
    pub verb: Verb,
    /// Truncation set as a comma list, e.g. 1,2,4
    #[arg(long = "S", value_name = "LIST")]
    pub set: Option<String>,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
    /// Index tuple of a functional, 1-based comma list
    #[arg(long = "J", value_name = "LIST")]
    pub index: Option<String>,
    #[arg(long)]
    pub vars: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub cases: usize,
    /// Read the payload from a file instead of standard input
    #[arg(long)]
    pub input: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn json(v: Value, code: i32) -> Self {
        Outcome { stdout: format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable")), stderr: String::new(), code }
    }

    fn malformed(msg: impl Into<String>) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {}\n", msg.into()), code: 2 }
    }
}

/// Short tag for a negative membership answer, e.g. `NotIntegral(2)`.
pub fn diagnostic(e: &Error) -> String {
    match e {
        Error::NotIntegral { index } => format!("NotIntegral({index})"),
        Error::NotInComplex { index } => format!("NotInComplex({index})"),
        Error::NotInImage { level } => format!("NotInImage({level})"),
        other => other.to_string(),
    }
}

fn parse_list(s: &str, flag: &str) -> Result<Vec<u64>, Outcome> {
    s.split(',')
        .map(|x| x.trim().parse::<u64>().map_err(|_| Outcome::malformed(format!("--{flag}: \"{x}\" is not a positive integer"))))
        .collect()
}

fn flag_set(args: &Args) -> Result<Option<TruncationSet>, Outcome> {
    match &args.set {
        None => Ok(None),
        Some(s) => TruncationSet::new(parse_list(s, "S")?).map(Some).map_err(|e| Outcome::malformed(e.to_string())),
    }
}

fn require<T: Copy>(v: Option<T>, flag: &str) -> Result<T, Outcome> {
    v.ok_or_else(|| Outcome::malformed(format!("missing required flag --{flag}")))
}

fn read_payload(args: &Args, stdin: &mut dyn Read) -> Result<Value, Outcome> {
    let mut text = String::new();
    match &args.input {
        Some(path) => {
            text = std::fs::read_to_string(path).map_err(|e| Outcome::malformed(format!("{}: {e}", path.display())))?
        }
        None => {
            stdin.read_to_string(&mut text).map_err(|e| Outcome::malformed(format!("stdin: {e}")))?;
        }
    }
    serde_json::from_str(&text).map_err(|e| Outcome::malformed(format!("invalid JSON: {e}")))
}

/// Wraps a bare array as `{key: array}` and fills `q`/`vars` from flags.
fn normalize(v: Value, key: &str, args: &Args) -> Value {
    let mut obj = match v {
        Value::Array(_) => {
            let mut m = Map::new();
            m.insert(key.into(), v);
            m
        }
        Value::Object(m) => m,
        other => return other,
    };
    if let Some(q) = args.q {
        obj.entry("q").or_insert(json!(q));
    }
    if let Some(t) = args.vars {
        obj.entry("vars").or_insert(json!(t));
    }
    Value::Object(obj)
}

/// Library errors: membership failures exit 1 with a diagnostic, anything
/// else is malformed input.
fn fail(e: Error, key: &str) -> Outcome {
    if e.is_membership_failure() {
        Outcome::json(json!({ key: false, "diagnostic": diagnostic(&e) }), 1)
    } else {
        Outcome::malformed(e.to_string())
    }
}

fn status(ok: bool) -> i32 {
    if ok {
        0
    } else {
        1
    }
}

fn drw_payload(args: &Args, stdin: &mut dyn Read) -> Result<DrwForm, Outcome> {
    let set = flag_set(args)?;
    let v = normalize(read_payload(args, stdin)?, "comps", args);
    drw_from_json(&v, "$", set.as_ref()).map_err(|e| fail(e, "member"))
}

fn run_verb(args: &Args, stdin: &mut dyn Read) -> Result<Outcome, Outcome> {
    Ok(match args.verb {
        Verb::Ghost => {
            let set = flag_set(args)?;
            let v = normalize(read_payload(args, stdin)?, "witt", args);
            let a = witt_from_json(&v, "$", set.as_ref()).map_err(|e| fail(e, "integral"))?;
            Outcome::json(witt_to_json(&a), 0)
        }
        Verb::Witt => {
            let set = flag_set(args)?;
            let v = normalize(read_payload(args, stdin)?, "ghost", args);
            let g = ghost_from_json(&v, "$", set.as_ref()).map_err(|e| fail(e, "integral"))?;
            match crate::witt::witt_of_ghost(g) {
                Ok(a) => {
                    let mut out = witt_to_json(&a);
                    out["integral"] = json!(true);
                    Outcome::json(out, 0)
                }
                Err(e) => fail(e, "integral"),
            }
        }
        Verb::CheckDwork => {
            let set = flag_set(args)?;
            let v = normalize(read_payload(args, stdin)?, "ghost", args);
            let g = ghost_from_json(&v, "$", set.as_ref()).map_err(|e| fail(e, "dwork"))?;
            let failure = dwork_failure(&g);
            let mut out = json!({ "dwork": failure.is_none() });
            if let Some((n, p)) = failure {
                out["failure"] = json!({ "n": n, "p": p });
            }
            Outcome::json(out, status(failure.is_none()))
        }
        Verb::DrwCheck => {
            let p = require(args.p, "p")?;
            let set = flag_set(args)?;
            let v = read_payload(args, stdin)?;
            let raw = match v.get("expr") {
                Some(e) => {
                    let set = match set {
                        Some(s) => s,
                        None => crate::json::set_from_json(
                            v.get("S").ok_or_else(|| Outcome::malformed("invalid input at $: missing field \"S\""))?,
                            "$.S",
                        )
                        .map_err(|e| Outcome::malformed(e.to_string()))?,
                    };
                    let expr = genexpr_from_json(e, "$.expr").map_err(|e| Outcome::malformed(e.to_string()))?;
                    expr.evaluate(&set).map_err(|e| fail(e, "member"))?.uncertified()
                }
                None => {
                    let v = normalize(v, "comps", args);
                    drw_from_json(&v, "$", set.as_ref()).map_err(|e| fail(e, "member"))?
                }
            };
            let failure = drw_dwork_failure(&raw, p).map_err(|e| fail(e, "member"))?;
            let mut out = json!({ "member": failure.is_none() });
            if let Some(level) = failure {
                out["diagnostic"] = json!(diagnostic(&Error::NotInImage { level }));
            }
            Outcome::json(out, status(failure.is_none()))
        }
        Verb::DrwLift => {
            let p = require(args.p, "p")?;
            let raw = drw_payload(args, stdin)?;
            match drw_lift(&raw, p) {
                Ok(expr) => {
                    let value = expr.evaluate(raw.set()).map_err(|e| Outcome::malformed(e.to_string()))?;
                    Outcome::json(
                        json!({ "member": true, "expr": genexpr_to_json(&expr), "evaluation": drw_to_json(&value) }),
                        0,
                    )
                }
                Err(e) => fail(e, "member"),
            }
        }
        Verb::DrwMulti => {
            let raw = drw_payload(args, stdin)?;
            let primes = match args.p {
                Some(p) => vec![p],
                None => raw.set().primes(),
            };
            let mut all = true;
            let mut reports = Vec::new();
            for p in primes {
                let entries = drw_multi_report(&raw, p).map_err(|e| fail(e, "holds"))?;
                let holds = entries.iter().all(|e| e.holds);
                all &= holds;
                let entries: Vec<Value> = entries
                    .iter()
                    .map(|e| {
                        json!({
                            "k": e.k,
                            "modulus_exponent": e.exponent,
                            "holds": e.holds,
                            "difference": form_to_json(&e.difference),
                            "witness": e.witness.as_ref().map(form_to_json),
                        })
                    })
                    .collect();
                reports.push(json!({ "p": p, "holds": holds, "entries": entries }));
            }
            Outcome::json(json!({ "holds": all, "primes": reports }), status(all))
        }
        Verb::Functional => {
            let raw = drw_payload(args, stdin)?;
            let values: Vec<Value> = match args.m {
                Some(m) => {
                    let idx: Vec<usize> = match &args.index {
                        Some(j) => parse_list(j, "J")?
                            .into_iter()
                            .map(|j| j.checked_sub(1).map(|j| j as usize))
                            .collect::<Option<_>>()
                            .ok_or_else(|| Outcome::malformed("--J indices are 1-based"))?,
                        None if raw.degree() == 0 => Vec::new(),
                        None => return Err(Outcome::malformed("missing required flag --J")),
                    };
                    let f = dual_functional(&raw, m, &idx).map_err(|e| Outcome::malformed(e.to_string()))?;
                    vec![functional_json(m, &idx, &f)]
                }
                None => all_functionals(&raw)
                    .map_err(|e| Outcome::malformed(e.to_string()))?
                    .iter()
                    .map(|((m, idx), f)| functional_json(*m, idx, f))
                    .collect(),
            };
            Outcome::json(json!({ "functionals": values }), 0)
        }
        Verb::Mu => {
            let set = flag_set(args)?.ok_or_else(|| Outcome::malformed("missing required flag --S"))?;
            let n = require(args.n, "n")?;
            let mu = mu_element(n, &set, args.vars.unwrap_or(0)).map_err(|e| Outcome::malformed(e.to_string()))?;
            Outcome::json(witt_to_json(&mu), 0)
        }
        Verb::Blowup => {
            let p = require(args.p, "p")?;
            let v = read_payload(args, stdin)?;
            if v.get("left").is_some() {
                let get = |k: &str| {
                    ghost_from_json(&v[k], &format!("$.{k}"), None).map_err(|e| Outcome::malformed(e.to_string()))
                };
                let merged = blowup_merge(&get("left")?, &get("right")?, p).map_err(|e| Outcome::malformed(e.to_string()))?;
                Outcome::json(ghost_to_json(&merged), 0)
            } else {
                let set = flag_set(args)?;
                let v = normalize(v, "ghost", args);
                let g = ghost_from_json(&v, "$", set.as_ref()).map_err(|e| Outcome::malformed(e.to_string()))?;
                let (left, right) = blowup_split(&g, p).map_err(|e| Outcome::malformed(e.to_string()))?;
                let member = localized_member(&g, p).map_err(|e| Outcome::malformed(e.to_string()))?;
                Outcome::json(
                    json!({
                        "left": ghost_to_json(&left),
                        "right": ghost_to_json(&right),
                        "left_set": set_to_json(left.set()),
                        "localized_member": member,
                    }),
                    0,
                )
            }
        }
        Verb::Axioms => axioms_table(args.seed, args.cases),
    })
}

fn functional_json(m: u64, idx: &[usize], f: &crate::witt::WittVector) -> Value {
    json!({ "m": m, "J": idx.iter().map(|j| j + 1).collect::<Vec<_>>(), "value": witt_to_json(f) })
}

fn axioms_table(seed: u64, cases: usize) -> Outcome {
    let reports = run_all(seed, cases);
    let width = IDENTITIES.iter().map(|i| i.name.chars().count()).max().unwrap_or(0);
    let mut out = format!("{:<width$}  {:>6}  {:>8}  result\n", "identity", "cases", "failures");
    let mut ok = true;
    for r in &reports {
        ok &= r.passed();
        let pad = width - r.name.chars().count();
        out.push_str(&format!(
            "{}{}  {:>6}  {:>8}  {}\n",
            r.name,
            " ".repeat(pad),
            r.cases,
            r.failures,
            if r.passed() { "PASS" } else { "FAIL" }
        ));
        if let Some(c) = &r.counterexample {
            out.push_str(&format!("    counterexample: {c}\n"));
        }
    }
    Outcome { stdout: out, stderr: String::new(), code: status(ok) }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    run_verb(&args, stdin).unwrap_or_else(|o| o)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &str, input: &str) -> Outcome {
        let argv = std::iter::once("wittdrw").chain(args.split_whitespace());
        run(argv, &mut input.as_bytes())
    }

    #[test]
    fn worked_examples() {
        let out = call("witt --S 1,2", r#"{"ghost": [1, 2]}"#);
        assert_eq!(out.code, 1);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["diagnostic"], "NotIntegral(2)");

        let dt = r#"{"q":1,"vars":1,"S":[1,2],"comps":[{"q":1,"vars":1,"comps":[]},{"q":1,"vars":1,"comps":[[[1],{"vars":1,"terms":[["1",[0]]]}]]}]}"#;
        let out = call("drw-check --p 2", dt);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v, json!({ "member": true }));

        let out = call("mu --S 1,2 --n 1", "");
        assert_eq!(out.code, 0);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["ghost"][0]["terms"], json!([["2", []]]));
        assert_eq!(v["ghost"][1]["terms"], json!([]));
    }

    #[test]
    fn malformed_input_has_location() {
        let out = call("witt --S 1,2", r#"{"ghost": [1, {"vars": 0}]}"#);
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("$.ghost[1]"), "{}", out.stderr);
        assert_eq!(call("witt", "not json").code, 2);
        assert_eq!(call("frobnicate", "").code, 2);
    }
}
