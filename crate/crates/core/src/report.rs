use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// First violation found by a property check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// Short name of the law that failed, e.g. `"mul-assoc"`.
    pub law: &'static str,
    /// Human-readable description of the offending inputs.
    pub witness: String,
}

/// Outcome of a sampled or exhaustive property check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub suite: &'static str,
    /// Number of cases evaluated.
    pub trials: usize,
    /// Cases that could not be judged (e.g. a product fell past the truncation).
    pub skipped: usize,
    pub exhaustive: bool,
    pub counterexample: Option<Counterexample>,
    /// Named counters for interesting branches (e.g. how often a product
    /// jumped filtration degree), sorted by name.
    pub tallies: Vec<(&'static str, usize)>,
}

impl CheckReport {
    pub(crate) fn new(suite: &'static str) -> Self {
        CheckReport {
            suite,
            trials: 0,
            skipped: 0,
            exhaustive: false,
            counterexample: None,
            tallies: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    /// Records a failure unless one was already recorded. Returns `true` when
    /// the caller should stop.
    pub(crate) fn fail(&mut self, law: &'static str, witness: String) -> bool {
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample { law, witness });
        }
        true
    }

    pub(crate) fn tally(&mut self, name: &'static str) {
        match self.tallies.binary_search_by(|(n, _)| (*n).cmp(name)) {
            Ok(i) => self.tallies[i].1 += 1,
            Err(i) => self.tallies.insert(i, (name, 1)),
        }
    }

    pub fn tally_of(&self, name: &str) -> usize {
        self.tallies
            .iter()
            .find(|(n, _)| *n == name)
            .map_or(0, |&(_, c)| c)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{} {}: {} trials, {} skipped{}",
            verdict,
            self.suite,
            self.trials,
            self.skipped,
            if self.exhaustive { " (exhaustive)" } else { "" }
        )?;
        for (name, count) in &self.tallies {
            write!(f, ", {name}={count}")?;
        }
        if let Some(ce) = &self.counterexample {
            write!(f, "\ncounterexample [{}]: {}", ce.law, ce.witness)?;
        }
        Ok(())
    }
}
