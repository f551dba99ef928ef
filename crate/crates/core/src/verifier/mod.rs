//! Exhaustive verification of the registered claims over a corpus of
//! finite rings and expansions.

mod claims;
pub mod corpus;
pub mod report;

use rayon::prelude::*;

pub use claims::{Claim, ClaimKind, Slot, INTEGER_BOUND, PRIME_BOUND};
pub use corpus::{builtin_corpus, builtin_rings, catalog, integer_catalog, Corpus, CorpusEntry, Instance};
pub use report::{ClaimReport, Observation, Observations, Report, Witness};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use report::Tally;

/// Crate version stamped into reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Default number of witnesses kept per claim.
pub const DEFAULT_WITNESS_CAP: usize = 5;

/// Every registered claim, in report order.
pub fn registry() -> &'static [Claim] {
    claims::CLAIMS
}

pub fn claim(id: &str) -> Result<&'static Claim> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

/// The claims a run checks: the named ones, or every non-self-test claim.
fn select(ids: Option<&[String]>) -> Result<Vec<&'static Claim>> {
    match ids {
        Some(ids) => ids.iter().map(|id| claim(id)).collect(),
        None => Ok(registry().iter().filter(|c| c.kind != ClaimKind::SelfTest).collect()),
    }
}

fn run_one(c: &Claim, instances: &[Instance], cap: usize) -> ClaimReport {
    let mut total = Tally::new(cap);
    if let Some(g) = c.global {
        g(&mut total);
    }
    if let Some(p) = c.per_instance {
        let parts: Vec<Tally> = instances
            .par_iter()
            .map(|inst| {
                let mut t = Tally::new(cap);
                p(inst, &mut t);
                t
            })
            .collect();
        for t in parts {
            total.merge(t);
        }
    }
    total.into_report(c.id)
}

/// Checks the selected claims over bound instances.
pub fn run_claims(instances: &[Instance], ids: Option<&[String]>, cap: usize) -> Result<Vec<ClaimReport>> {
    let chosen = select(ids)?;
    Ok(chosen.iter().map(|c| run_one(c, instances, cap)).collect())
}

/// The first failure of one claim over the corpus, if any.
pub fn find_counterexample(id: &str, instances: &[Instance]) -> Result<Option<Witness>> {
    let c = claim(id)?;
    Ok(run_one(c, instances, 1).failures.into_iter().next())
}

/// Statement, kind, quantified slots and anchor of a claim.
pub fn explain(id: &str) -> Result<String> {
    let c = claim(id)?;
    let kind = match c.kind {
        ClaimKind::Theorem => "theorem",
        ClaimKind::Audit => "audit",
        ClaimKind::SelfTest => "self-test",
    };
    let slots: Vec<String> = c.slots.iter().map(|s| format!("{s:?}").to_lowercase()).collect();
    let mut scope = Vec::new();
    if c.per_instance() {
        scope.push("every corpus instance");
    }
    if c.global() {
        scope.push("fixed rings");
    }
    Ok(format!(
        "{}\n  kind: {kind}\n  statement: {}\n  quantifies over: {}\n  checked on: {}\n  anchor: \"{}\"\n",
        c.id,
        c.description,
        slots.join(", "),
        scope.join(" and "),
        c.anchor.replace('\n', " ")
    ))
}

fn observe(inst: &Instance, cap: usize) -> Observations {
    let _ = cap;
    let mut o = Observations::default();
    let top = inst.top();
    for (e, x) in inst.expansions.iter().enumerate() {
        for i in 0..top {
            if inst.dn[e][i] && inst.at(e, i) != top && !inst.nid(i) {
                o.delta_n_not_n_ideal.add(|| {
                    Witness::new(&inst.ring).expansion(x.recipe()).ideal("I", inst.show(i))
                });
            }
        }
    }
    if let Some(id) = crate::constructions::Idealization::of(&inst.ring) {
        for i in 0..inst.len() {
            let k = Ideal::from_lattice(&inst.ring, i);
            if matches!(id.split(&k), Ok(None)) {
                o.nonhomogeneous_ideals.add(|| Witness::new(&inst.ring).ideal("K", &k));
            }
        }
    }
    for c in inst.localizations() {
        for (e, x) in inst.expansions.iter().enumerate() {
            for i in 0..inst.len() {
                for j in i + 1..inst.len() {
                    if c.extend[i] == c.extend[j] && c.extend[inst.at(e, i)] != c.extend[inst.at(e, j)] {
                        o.localized_representative_conflicts.add(|| {
                            Witness::new(&inst.ring)
                                .expansion(x.recipe())
                                .ideal("I", inst.show(i))
                                .ideal("J", inst.show(j))
                                .element("S", &c.s)
                        });
                    }
                }
            }
        }
    }
    o
}

/// Binds the corpus, checks the claims and, on a default run, collects
/// observations.
pub fn run(corpus: &Corpus, ids: Option<&[String]>, cap: usize) -> Result<Report> {
    select(ids)?;
    let instances = corpus.bind()?;
    let claims = run_claims(&instances, ids, cap)?;
    let observations = ids.is_none().then(|| {
        let parts: Vec<Observations> = instances.par_iter().map(|i| observe(i, cap)).collect();
        let mut o = Observations::default();
        for p in parts {
            o.delta_n_not_n_ideal.merge(p.delta_n_not_n_ideal);
            o.nonhomogeneous_ideals.merge(p.nonhomogeneous_ideals);
            o.localized_representative_conflicts.merge(p.localized_representative_conflicts);
        }
        o
    });
    let mut rings: Vec<String> = corpus.entries.iter().map(|e| e.ring.to_string()).collect();
    rings.sort();
    rings.dedup();
    Ok(Report {
        version: VERSION.to_string(),
        rings: rings.len(),
        instances: corpus.instance_count(),
        witness_cap: cap,
        claims,
        observations,
    })
}
