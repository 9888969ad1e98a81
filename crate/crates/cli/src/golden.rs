//! Golden corpus of published polynomials and the `selftest` runner.
//!
//! Each corpus entry holds an argument vector and the expected value of
//! some of the named outputs. Commands are run with `--format json` and the
//! returned polynomials are compared exactly, so a mismatch can be reported
//! monomial by monomial.

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::Value;
use spincc_core::chern::UcModel;
use spincc_core::properties::run_all;
use spincc_core::ring::{Coefficient, PolyJson};
use spincc_core::spin::spin8_check;
use spincc_core::steenrod::BsoModel;
use spincc_core::{GPoly, Poly, QPoly};

use crate::Failure;

pub const BUILTIN: &str = include_str!("../golden/corpus.toml");

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Corpus {
    pub version: u32,
    #[serde(rename = "entry")]
    pub entries: Vec<Entry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub id: String,
    pub group: String,
    /// Where the expected values were transcribed from.
    pub source: String,
    pub args: Vec<String>,
    #[serde(default)]
    pub exit: i32,
    pub expect: BTreeMap<String, String>,
    /// Published displays that differ from `expect`, kept for auditing.
    #[serde(default)]
    pub published: BTreeMap<String, String>,
    #[serde(default)]
    pub note: Option<String>,
}

impl Corpus {
    pub fn parse(text: &str) -> Result<Corpus, String> {
        let corpus: Corpus = toml::from_str(text).map_err(|e| format!("corpus: {e}"))?;
        if corpus.version != 1 {
            return Err(format!("corpus: unsupported version {}", corpus.version));
        }
        let mut seen = std::collections::HashSet::new();
        for e in &corpus.entries {
            if !seen.insert(e.id.as_str()) {
                return Err(format!("corpus: duplicate id `{}`", e.id));
            }
            if e.source.trim().is_empty() {
                return Err(format!("corpus: entry `{}` has no source", e.id));
            }
        }
        Ok(corpus)
    }
}

pub struct Options {
    pub filter: Option<String>,
    pub prop: bool,
    pub cases: usize,
    pub seed: u64,
}

#[derive(Debug, Default)]
pub struct Report {
    lines: Vec<String>,
    failures: usize,
    checks: usize,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn record(&mut self, name: &str, problems: Vec<String>) {
        self.checks += 1;
        if problems.is_empty() {
            self.lines.push(format!("ok   {name}"));
        } else {
            self.failures += 1;
            self.lines.push(format!("FAIL {name}"));
            self.lines.extend(problems.into_iter().map(|p| format!("     {p}")));
        }
    }

    pub fn render(&self) -> String {
        let mut s = self.lines.join("\n");
        s.push_str(&format!("\n{} checks, {} failed\n", self.checks, self.failures));
        s
    }
}

fn poly_diff<C: Coefficient>(got: &GPoly<C>, want_text: &str) -> Vec<String> {
    let want = match GPoly::<C>::parse(got.ring(), want_text) {
        Ok(w) => w,
        Err(e) => return vec![format!("expected value does not parse: {e}")],
    };
    let diff = got - &want;
    diff.terms()
        .rev()
        .map(|(m, _)| {
            let mono = GPoly::<C>::term(got.ring(), m.clone(), C::one());
            format!("monomial {mono}: computed {}, expected {}", got.coeff(m), want.coeff(m))
        })
        .collect()
}

fn compare(value: &Value, want: &str) -> Vec<String> {
    let poly = match value {
        Value::Object(map) if map.contains_key("bockstein_of") => &map["bockstein_of"],
        Value::Object(map) if map.contains_key("ring") => value,
        Value::String(s) => {
            return if s == want { vec![] } else { vec![format!("computed `{s}`, expected `{want}`")] };
        }
        other => {
            let s = other.to_string();
            return if s == want { vec![] } else { vec![format!("computed `{s}`, expected `{want}`")] };
        }
    };
    let j: PolyJson = match serde_json::from_value(poly.clone()) {
        Ok(j) => j,
        Err(e) => return vec![format!("undecodable polynomial: {e}")],
    };
    match Poly::from_json(&j) {
        Ok(p) => poly_diff(&p, want),
        Err(_) => match QPoly::from_json(&j) {
            Ok(q) => poly_diff(&q, want),
            Err(e) => vec![format!("undecodable polynomial: {e}")],
        },
    }
}

fn check_entry(entry: &Entry) -> Vec<String> {
    let mut argv = vec!["spincc".to_string()];
    argv.extend(entry.args.iter().cloned());
    argv.extend(["--format".to_string(), "json".to_string()]);
    let outcome = crate::run(argv);
    if outcome.code != entry.exit {
        return vec![format!("exit code {}, expected {}: {}", outcome.code, entry.exit, outcome.stderr.trim())];
    }
    let doc: Value = match serde_json::from_str(&outcome.stdout) {
        Ok(v) => v,
        Err(e) => return vec![format!("output is not JSON: {e}")],
    };
    let mut by_name = BTreeMap::new();
    if let Some(results) = doc["results"].as_array() {
        for r in results {
            if let Some(name) = r["name"].as_str() {
                by_name.insert(name.to_string(), &r["value"]);
            }
        }
    }
    let mut problems = Vec::new();
    for (name, want) in &entry.expect {
        match by_name.get(name) {
            Some(v) => problems.extend(compare(v, want).into_iter().map(|p| format!("{name}: {p}"))),
            None => problems.push(format!("{name}: not produced")),
        }
    }
    problems
}

/// `real_reduction(w2^(r))` against `delta^r(2y - c1)` mod 2.
fn reduction_oracle() -> Result<Vec<String>, Failure> {
    let bso = BsoModel::new(16)?;
    let derived = bso.derived_w2(3)?;
    let uc = UcModel::new(8)?;
    let deltas = uc.delta_sequence(3)?;
    let target = bso.chern_ring_mod2();
    let mut images = vec![Poly::zero(&target)];
    images.extend((0..8).map(|i| Poly::var_at(&target, i)));
    let mut problems = Vec::new();
    for r in 1..=3 {
        let real = bso.real_reduction(&derived.steps[r].value)?;
        let delta = deltas.value(r).reduce_mod(2)?.map_into(&target, &images)?;
        if real != delta {
            problems.push(format!("r = {r}: real reduction minus delta = {}", &real - &delta));
        }
    }
    Ok(problems)
}

fn spin8_oracle() -> Result<Vec<String>, Failure> {
    let r = spin8_check(None, None)?;
    Ok(if r.relation_holds() { vec![] } else { vec![format!("4theta8 - q2^2 - a8 = {}", r.relation)] })
}

fn matches(filter: &Option<String>, id: &str, group: &str) -> bool {
    filter.as_ref().map_or(true, |f| id.contains(f.as_str()) || group.contains(f.as_str()))
}

pub fn selftest(corpus_text: &str, options: &Options) -> Result<Report, Failure> {
    let corpus = Corpus::parse(corpus_text).map_err(Failure::Input)?;
    let mut report = Report::default();
    for entry in &corpus.entries {
        if matches(&options.filter, &entry.id, &entry.group) {
            report.record(&entry.id, check_entry(entry));
        }
    }
    if matches(&options.filter, "oracle-real-reduction", "oracle") {
        report.record("oracle-real-reduction", reduction_oracle()?);
    }
    if matches(&options.filter, "oracle-spin8", "oracle") {
        report.record("oracle-spin8", spin8_oracle()?);
    }
    if options.prop {
        for outcome in run_all(options.seed, options.cases)? {
            let problems = match &outcome.first_failure {
                Some(first) => vec![format!("{} of {} cases failed; first: {first}", outcome.failures, outcome.cases)],
                None => vec![],
            };
            report.record(&format!("property {}", outcome.name), problems);
        }
    }
    if report.checks == 0 {
        return Err(Failure::Input("no corpus entry matches the filter".into()));
    }
    Ok(report)
}
