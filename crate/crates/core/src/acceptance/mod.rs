//! The acceptance suite: nine criteria, each a list of checked facts. Shared
//! by the integration test and the `selftest` subcommand.

mod criteria;
mod properties;

use std::time::Instant;

use serde::Serialize;

use crate::error::Result;
use crate::families::{
    auslander_algebra, canonical_2222, dynkin_path_algebra, higher_auslander_chain, linear_nakayama, thm39_type2, Choice,
};
use crate::field::{Field, PrimeField};
use crate::quivalg::Algebra;

pub use properties::{random_module, PROPERTY_CASES};

/// One observed fact of a criterion.
#[derive(Clone, Debug, Serialize)]
pub struct Fact {
    pub label: String,
    pub holds: bool,
    pub observed: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub facts: Vec<Fact>,
    /// Set when the criterion aborted before all facts were checked.
    pub error: Option<String>,
    pub millis: u128,
}

impl CriterionResult {
    /// The single pass/fail line printed per criterion.
    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let failing: Vec<&str> = self.facts.iter().filter(|f| !f.holds).map(|f| f.label.as_str()).collect();
        let mut s = format!("criterion {} [{verdict}] {} ({} facts, {} ms)", self.id, self.title, self.facts.len(), self.millis);
        if !failing.is_empty() {
            s.push_str(&format!("; failing: {}", failing.join(", ")));
        }
        if let Some(e) = &self.error {
            s.push_str(&format!("; error: {e}"));
        }
        s
    }
}

/// Collects facts for one criterion.
#[derive(Default)]
pub(crate) struct Facts(Vec<Fact>);

impl Facts {
    pub(crate) fn check(&mut self, label: impl Into<String>, holds: bool, observed: impl Into<String>) -> bool {
        self.0.push(Fact { label: label.into(), holds, observed: observed.into() });
        holds
    }

    pub(crate) fn eq<T: PartialEq + std::fmt::Debug>(&mut self, label: impl Into<String>, got: T, want: T) -> bool {
        let holds = got == want;
        self.check(label, holds, format!("{got:?} (expected {want:?})"))
    }
}

pub const TITLES: [&str; 9] = [
    "Auslander algebra of A3 (1<-2->3): tau_2^- table, projective-free part, stable Auslander algebra",
    "preprojective algebra of the Auslander algebra of A4",
    "2-representation-finite classification, forward direction",
    "canonical algebras of type (2,2,2,2)",
    "preprojective dimension three ways",
    "homological bounds",
    "Calabi-Yau spot checks",
    "randomized property suites",
    "negative controls",
];

/// Run criterion `id` (1-based).
pub fn run(id: usize, seed: u64) -> CriterionResult {
    let start = Instant::now();
    let mut facts = Facts::default();
    let r = match id {
        1 => criteria::auslander_a3(&mut facts),
        2 => criteria::auslander_a4(&mut facts),
        3 => criteria::classification(&mut facts),
        4 => criteria::canonical(&mut facts),
        5 => criteria::cross_validation(&mut facts),
        6 => criteria::homological_bounds(&mut facts),
        7 => criteria::calabi_yau(&mut facts),
        8 => properties::property_suites(&mut facts, seed),
        9 => criteria::negative_controls(&mut facts),
        _ => panic!("no criterion {id}"),
    };
    let error = r.err().map(|e| e.to_string());
    let facts = facts.0;
    CriterionResult {
        id,
        title: TITLES[id - 1],
        passed: error.is_none() && !facts.is_empty() && facts.iter().all(|f| f.holds),
        facts,
        error,
        millis: start.elapsed().as_millis(),
    }
}

pub fn run_all(seed: u64) -> Vec<CriterionResult> {
    (1..=TITLES.len()).map(|id| run(id, seed)).collect()
}

/// A named algebra with the `n` it is studied at.
#[derive(Clone, Debug)]
pub struct CorpusEntry<F: Field> {
    pub name: String,
    pub algebra: Algebra<F>,
    pub n: usize,
}

fn entry<F: Field>(name: impl Into<String>, algebra: Algebra<F>, n: usize) -> CorpusEntry<F> {
    CorpusEntry { name: name.into(), algebra, n }
}

/// Auslander algebra of `A3` oriented `1 <- 2 -> 3`.
pub fn auslander_a3_nonlinear(f: &PrimeField) -> Result<Algebra<PrimeField>> {
    auslander_algebra(&dynkin_path_algebra(f, &[false, true])?)
}

/// The `thm39_type2` instances: both choices for `v = 2`, all four for `v = 3`.
pub fn thm39_instances() -> Vec<(usize, Vec<Choice>)> {
    use Choice::{Delta, Gamma};
    vec![
        (2, vec![Gamma]),
        (2, vec![Delta]),
        (3, vec![Gamma, Gamma]),
        (3, vec![Gamma, Delta]),
        (3, vec![Delta, Gamma]),
        (3, vec![Delta, Delta]),
    ]
}

fn choice_name(cs: &[Choice]) -> String {
    cs.iter().map(|c| if *c == Choice::Gamma { 'g' } else { 'd' }).collect()
}

/// Algebras of criterion 3, all studied at `n = 2`.
pub fn classification_corpus(f: &PrimeField) -> Result<Vec<CorpusEntry<PrimeField>>> {
    let mut out = vec![entry("linear_nakayama(3)", linear_nakayama(f, 3)?, 2), entry("linear_nakayama(4)", linear_nakayama(f, 4)?, 2)];
    for (v, cs) in thm39_instances() {
        out.push(entry(format!("thm39_type2({v}, {})", choice_name(&cs)), thm39_type2(f, v, &cs)?, 2));
    }
    Ok(out)
}

pub fn canonical_corpus(f: &PrimeField) -> Result<Vec<CorpusEntry<PrimeField>>> {
    [2, 3].iter().map(|&l| Ok(entry(format!("canonical_2222({l})"), canonical_2222(f, &f.from_i64(l))?, 2))).collect()
}

/// Everything of criteria 1–4 plus `kA2` at `n = 1`.
pub fn full_corpus(f: &PrimeField) -> Result<Vec<CorpusEntry<PrimeField>>> {
    let mut out = vec![
        entry("auslander(A3, 1<-2->3)", auslander_a3_nonlinear(f)?, 2),
        entry("auslander(A4)", higher_auslander_chain(f, 4, 1)?.pop().expect("chain has two stages"), 2),
    ];
    out.extend(classification_corpus(f)?);
    out.extend(canonical_corpus(f)?);
    out.push(entry("kA2", dynkin_path_algebra(f, &[true])?, 1));
    Ok(out)
}
