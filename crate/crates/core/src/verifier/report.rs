//! Claim outcomes, witnesses and the two report renderings.

use std::fmt::Write as _;

use serde::Serialize;

/// Where a failure happened, in canonical notation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub ring: String,
    pub expansion: Option<String>,
    pub ideals: Vec<String>,
    pub elements: Vec<String>,
}

impl Witness {
    pub fn new(ring: impl ToString) -> Witness {
        Witness {
            ring: ring.to_string(),
            ..Witness::default()
        }
    }

    pub fn expansion(mut self, e: impl ToString) -> Witness {
        self.expansion = Some(e.to_string());
        self
    }

    pub fn ideal(mut self, name: &str, i: impl std::fmt::Display) -> Witness {
        self.ideals.push(format!("{name}={i}"));
        self
    }

    pub fn element(mut self, name: &str, a: impl std::fmt::Display) -> Witness {
        self.elements.push(format!("{name}={a}"));
        self
    }
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ring {}", self.ring)?;
        if let Some(e) = &self.expansion {
            write!(f, ", {e}")?;
        }
        for s in self.ideals.iter().chain(&self.elements) {
            write!(f, ", {s}")?;
        }
        Ok(())
    }
}

/// Outcome counts of one claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub instances_checked: u64,
    pub holds: u64,
    pub hypothesis_not_met: u64,
    /// All failures; `failures` keeps only the first few.
    pub failed: u64,
    pub failures: Vec<Witness>,
    pub notes: Vec<String>,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

/// Running counts for one claim over a slice of instances.
#[derive(Clone, Debug, Default)]
pub(crate) struct Tally {
    pub checked: u64,
    pub holds: u64,
    pub hnm: u64,
    pub failed: u64,
    pub failures: Vec<Witness>,
    pub notes: Vec<String>,
    pub cap: usize,
}

impl Tally {
    pub fn new(cap: usize) -> Tally {
        Tally {
            cap,
            ..Tally::default()
        }
    }

    /// One instance: the hypothesis is settled first, the conclusion only
    /// when it holds.
    pub fn case(&mut self, hypothesis: bool, conclusion: impl FnOnce() -> bool, witness: impl FnOnce() -> Witness) {
        self.checked += 1;
        if !hypothesis {
            self.hnm += 1;
        } else if conclusion() {
            self.holds += 1;
        } else {
            self.fail(witness());
        }
    }

    pub fn fail(&mut self, w: Witness) {
        self.failed += 1;
        if self.failures.len() < self.cap {
            self.failures.push(w);
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.holds += other.holds;
        self.hnm += other.hnm;
        self.failed += other.failed;
        let room = self.cap.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        self.notes.extend(other.notes);
    }

    pub fn into_report(self, id: &str) -> ClaimReport {
        ClaimReport {
            id: id.to_string(),
            instances_checked: self.checked,
            holds: self.holds,
            hypothesis_not_met: self.hnm,
            failed: self.failed,
            failures: self.failures,
            notes: self.notes,
        }
    }
}

/// A count with the first example, for corpus-wide observations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Observation {
    pub count: u64,
    pub example: Option<Witness>,
}

impl Observation {
    pub(crate) fn add(&mut self, w: impl FnOnce() -> Witness) {
        if self.example.is_none() {
            self.example = Some(w());
        }
        self.count += 1;
    }

    pub(crate) fn merge(&mut self, other: Observation) {
        if self.example.is_none() {
            self.example = other.example;
        }
        self.count += other.count;
    }
}

/// Facts about the corpus that are not claims of the theory.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Observations {
    /// δ-n-ideals with δ(I) ≠ R that are not n-ideals.
    pub delta_n_not_n_ideal: Observation,
    /// Ideals of idealizations not of the form I(+)N.
    pub nonhomogeneous_ideals: Observation,
    /// Ideals I, I' with S⁻¹I = S⁻¹I' but S⁻¹δ(I) ≠ S⁻¹δ(I').
    pub localized_representative_conflicts: Observation,
}

/// The machine-readable report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub version: String,
    pub rings: usize,
    pub instances: usize,
    pub witness_cap: usize,
    pub claims: Vec<ClaimReport>,
    pub observations: Option<Observations>,
}

impl Report {
    pub fn failed_claims(&self) -> usize {
        self.claims.iter().filter(|c| !c.passed()).count()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    /// The text tree.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "verify: {} claims over {} rings / {} instances, {} failed",
            self.claims.len(),
            self.rings,
            self.instances,
            self.failed_claims()
        );
        for c in &self.claims {
            let status = if c.passed() { "ok  " } else { "FAIL" };
            let _ = writeln!(
                out,
                "  {status} {}  checked={} holds={} hypothesis_not_met={} failed={}",
                c.id, c.instances_checked, c.holds, c.hypothesis_not_met, c.failed
            );
            for n in &c.notes {
                let _ = writeln!(out, "       note: {n}");
            }
            for w in &c.failures {
                let _ = writeln!(out, "       witness: {w}");
            }
        }
        if let Some(o) = &self.observations {
            let _ = writeln!(out, "  observations");
            for (name, ob) in [
                ("delta_n_not_n_ideal", &o.delta_n_not_n_ideal),
                ("nonhomogeneous_ideals", &o.nonhomogeneous_ideals),
                ("localized_representative_conflicts", &o.localized_representative_conflicts),
            ] {
                let _ = write!(out, "       {name}: {}", ob.count);
                if let Some(w) = &ob.example {
                    let _ = write!(out, " (first: {w})");
                }
                out.push('\n');
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tally_counts_and_cap() {
        let mut t = Tally::new(1);
        t.case(false, || unreachable!(), || unreachable!());
        t.case(true, || true, || unreachable!());
        t.case(true, || false, || Witness::new("Z6").element("a", 2));
        t.case(true, || false, || Witness::new("Z6").element("a", 3));
        let r = t.into_report("x");
        assert_eq!((r.instances_checked, r.holds, r.hypothesis_not_met, r.failed), (4, 1, 1, 2));
        assert_eq!(r.holds + r.hypothesis_not_met + r.failed, r.instances_checked);
        assert_eq!(r.failures.len(), 1);
        assert_eq!(r.failures[0].to_string(), "ring Z6, a=2");
    }

    #[test]
    fn merge_keeps_order() {
        let mut a = Tally::new(2);
        a.fail(Witness::new("A"));
        let mut b = Tally::new(2);
        b.fail(Witness::new("B"));
        b.fail(Witness::new("C"));
        a.merge(b);
        assert_eq!(a.failed, 3);
        let rings: Vec<_> = a.failures.iter().map(|w| w.ring.as_str()).collect();
        assert_eq!(rings, ["A", "B"]);
    }
}
