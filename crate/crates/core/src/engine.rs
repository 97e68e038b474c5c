//! Shared computation context: one bar involution plus memoised canonical
//! and dual canonical elements.

use std::collections::HashMap;
use std::sync::Arc;

use parking_lot::RwLock;

use crate::canonical::{self, BasisKind};
use crate::error::Result;
use crate::fock::FockVector;
use crate::order::{WeightFunction, ZeroOneSequence};
use crate::rmatrix::{BarInvolution, Peel, WordScheme};

#[derive(Clone, Debug)]
pub struct EngineConfig {
    pub scheme: WordScheme,
    pub peel: Peel,
    /// Highest level tried while stabilizing.
    pub max_level: i32,
    /// Check ψ-invariance of every solved element.
    pub verify_invariance: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            scheme: WordScheme::Descending,
            peel: Peel::Right,
            max_level: 8,
            verify_invariance: true,
        }
    }
}

type ElementKey = (ZeroOneSequence, i32, WeightFunction, BasisKind);

pub struct Engine {
    config: EngineConfig,
    bar: BarInvolution,
    elements: RwLock<HashMap<ElementKey, Arc<FockVector>>>,
}

impl Default for Engine {
    fn default() -> Self {
        Self::new(EngineConfig::default())
    }
}

impl Engine {
    pub fn new(config: EngineConfig) -> Self {
        let bar = BarInvolution::new(config.scheme, config.peel);
        Self {
            config,
            bar,
            elements: RwLock::new(HashMap::new()),
        }
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn bar(&self) -> &BarInvolution {
        &self.bar
    }

    /// `ψ^(k)(u)`.
    pub fn psi(&self, u: &FockVector) -> Result<FockVector> {
        self.bar.apply(u)
    }

    /// `T^{b,k}_f` or `L^{b,k}_f`, memoised.
    pub fn element(
        &self,
        seq: &ZeroOneSequence,
        k: i32,
        f: &WeightFunction,
        kind: BasisKind,
    ) -> Result<Arc<FockVector>> {
        let key = (seq.clone(), k, f.clone(), kind);
        if let Some(v) = self.elements.read().get(&key) {
            return Ok(v.clone());
        }
        let v = Arc::new(canonical::solve_element(self, seq, k, f, kind)?);
        Ok(self.elements.write().entry(key).or_insert(v).clone())
    }

    /// Every element solved so far, sorted for deterministic iteration.
    pub fn solved_elements(
        &self,
    ) -> Vec<(
        ZeroOneSequence,
        i32,
        WeightFunction,
        BasisKind,
        Arc<FockVector>,
    )> {
        let mut v: Vec<_> = self
            .elements
            .read()
            .iter()
            .map(|((s, k, f, kind), x)| (s.clone(), *k, f.clone(), *kind, x.clone()))
            .collect();
        v.sort_by(|a, b| (&a.0, a.1, &a.2, a.3).cmp(&(&b.0, b.1, &b.2, b.3)));
        v
    }
}
