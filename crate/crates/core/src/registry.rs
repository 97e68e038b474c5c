//! Named strategies: ways of computing `T^b_f`, and verification suites.
//! The CLI resolves `--method` and `--suite` through these tables.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::bilinear::PairingReport;
use crate::canonical;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::order::{WeightFunction, ZeroOneSequence};
use crate::suites;
use crate::transport::{self, TransportOptions};

/// A way of computing the untruncated canonical element `T^b_f`.
pub trait CanonicalMethod: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn compute(
        &self,
        engine: &Engine,
        seq: &ZeroOneSequence,
        f: &WeightFunction,
    ) -> Result<FockVector>;
}

struct Direct;

impl CanonicalMethod for Direct {
    fn name(&self) -> &'static str {
        "direct"
    }
    fn description(&self) -> &'static str {
        "Lusztig's lemma at increasing levels until the result stabilizes"
    }
    fn compute(
        &self,
        engine: &Engine,
        seq: &ZeroOneSequence,
        f: &WeightFunction,
    ) -> Result<FockVector> {
        Ok(canonical::stabilized_canonical(engine, seq, f)?.vector)
    }
}

struct Transport;

impl CanonicalMethod for Transport {
    fn name(&self) -> &'static str {
        "transport"
    }
    fn description(&self) -> &'static str {
        "solve at the standard sequence, then move along the R_κ chain"
    }
    fn compute(
        &self,
        engine: &Engine,
        seq: &ZeroOneSequence,
        f: &WeightFunction,
    ) -> Result<FockVector> {
        Ok(transport::transport_canonical(engine, seq, f, &TransportOptions::default())?.result)
    }
}

fn unknown(kind: &'static str, name: &str, names: impl Iterator<Item = &'static str>) -> Error {
    Error::Unknown {
        kind,
        name: name.to_string(),
        available: names.collect::<Vec<_>>().join(", "),
    }
}

pub struct MethodRegistry {
    methods: BTreeMap<&'static str, Box<dyn CanonicalMethod>>,
}

impl MethodRegistry {
    pub fn empty() -> Self {
        Self {
            methods: BTreeMap::new(),
        }
    }

    pub fn builtin() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(Direct));
        r.register(Box::new(Transport));
        r
    }

    pub fn register(&mut self, m: Box<dyn CanonicalMethod>) {
        self.methods.insert(m.name(), m);
    }

    pub fn get(&self, name: &str) -> Result<&dyn CanonicalMethod> {
        self.methods
            .get(name)
            .map(|m| m.as_ref())
            .ok_or_else(|| unknown("method", name, self.names()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.methods.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn CanonicalMethod> {
        self.methods.values().map(|m| m.as_ref())
    }
}

/// What a suite runs on. With no sequence, a suite sweeps its default
/// instance set.
#[derive(Clone, Debug, Default)]
pub struct SuiteParams {
    pub seq: Option<ZeroOneSequence>,
    pub level: Option<i32>,
}

impl SuiteParams {
    pub fn new(seq: Option<ZeroOneSequence>, level: Option<i32>) -> Self {
        Self { seq, level }
    }
}

/// One exact comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub detail: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, detail: impl Into<String>, pass: bool) -> Self {
        Self {
            name: name.into(),
            detail: detail.into(),
            pass,
        }
    }

    /// Compares two values and records both on failure.
    pub fn equal<T: PartialEq + fmt::Debug>(
        name: impl Into<String>,
        detail: impl fmt::Display,
        got: &T,
        want: &T,
    ) -> Self {
        let pass = got == want;
        let detail = if pass {
            detail.to_string()
        } else {
            format!("{detail}: got {got:?}, expected {want:?}")
        };
        Self::new(name, detail, pass)
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(suite: &str) -> Self {
        Self {
            suite: suite.to_string(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: SuiteReport) {
        self.checks.extend(other.checks);
    }

    pub fn add_pairings(&mut self, p: &PairingReport) {
        let seq = p.seq.as_ref().map(|s| s.to_string()).unwrap_or_default();
        for e in &p.entries {
            let detail = format!(
                "b={seq} f={:?} g={:?} value={} expected={}",
                e.f, e.g, e.value, e.expected
            );
            self.push(Check::new(e.label.clone(), detail, e.pass));
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn count(&self) -> (usize, usize) {
        let ok = self.checks.iter().filter(|c| c.pass).count();
        (ok, self.checks.len() - ok)
    }
}

pub trait VerificationSuite: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self, engine: &Engine, params: &SuiteParams) -> Result<SuiteReport>;
}

pub struct SuiteRegistry {
    suites: BTreeMap<&'static str, Box<dyn VerificationSuite>>,
}

impl SuiteRegistry {
    pub fn empty() -> Self {
        Self {
            suites: BTreeMap::new(),
        }
    }

    pub fn builtin() -> Self {
        let mut r = Self::empty();
        for s in suites::all() {
            r.register(s);
        }
        r
    }

    pub fn register(&mut self, s: Box<dyn VerificationSuite>) {
        self.suites.insert(s.name(), s);
    }

    pub fn get(&self, name: &str) -> Result<&dyn VerificationSuite> {
        self.suites
            .get(name)
            .map(|s| s.as_ref())
            .ok_or_else(|| unknown("suite", name, self.names()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.suites.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn VerificationSuite> {
        self.suites.values().map(|s| s.as_ref())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup() {
        let m = MethodRegistry::builtin();
        assert_eq!(m.names().collect::<Vec<_>>(), ["direct", "transport"]);
        assert!(matches!(m.get("nope"), Err(Error::Unknown { .. })));
        let s = SuiteRegistry::builtin();
        for name in ["involution", "duality", "inversion", "wedge", "relations"] {
            assert!(s.get(name).is_ok(), "{name}");
        }
    }

    #[test]
    fn methods_agree_on_small_input() {
        let e = Engine::default();
        let seq: ZeroOneSequence = "10".parse().unwrap();
        let f = WeightFunction(vec![1, 1]);
        let m = MethodRegistry::builtin();
        let a = m.get("direct").unwrap().compute(&e, &seq, &f).unwrap();
        let b = m.get("transport").unwrap().compute(&e, &seq, &f).unwrap();
        assert!(a.same_terms(&b));
        assert_eq!(a.to_string(), "M[1,1] + q*M[2,2]");
    }
}
