//! The bar involution `ψ^(k)` on `T^b_{≤|k|}`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::order::{WeightFunction, ZeroOneSequence};
use crate::rmatrix::theta::{ThetaFactorization, WordScheme};

/// Which tensor factor is split off in `ψ(u ⊗ v) = Θ(ū ⊗ v̄)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Peel {
    /// `ψ(M_{f'} ⊗ x_{f(m+n)})`, the last factor on its own.
    Right,
    /// `ψ(x_{f(1)} ⊗ M_{f''})`, the first factor on its own.
    Left,
}

impl Peel {
    pub const ALL: [Peel; 2] = [Peel::Right, Peel::Left];

    pub fn name(self) -> &'static str {
        match self {
            Peel::Right => "right",
            Peel::Left => "left",
        }
    }
}

impl FromStr for Peel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "peel direction",
                name: s.to_string(),
                available: Self::ALL.map(|p| p.name()).join(", "),
            })
    }
}

impl fmt::Display for Peel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

type MemoKey = (ZeroOneSequence, i32, WeightFunction);

/// Shared, memoised `ψ^(k)` for every `b` and `k`.
pub struct BarInvolution {
    scheme: WordScheme,
    peel: Peel,
    thetas: RwLock<HashMap<i32, Arc<ThetaFactorization>>>,
    memo: RwLock<HashMap<MemoKey, Arc<FockVector>>>,
}

impl Default for BarInvolution {
    fn default() -> Self {
        Self::new(WordScheme::Descending, Peel::Right)
    }
}

impl BarInvolution {
    pub fn new(scheme: WordScheme, peel: Peel) -> Self {
        Self {
            scheme,
            peel,
            thetas: RwLock::new(HashMap::new()),
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn scheme(&self) -> WordScheme {
        self.scheme
    }

    pub fn peel(&self) -> Peel {
        self.peel
    }

    pub fn theta(&self, k: i32) -> Result<Arc<ThetaFactorization>> {
        if let Some(t) = self.thetas.read().get(&k) {
            return Ok(t.clone());
        }
        let t = Arc::new(ThetaFactorization::build(k, self.scheme)?);
        Ok(self.thetas.write().entry(k).or_insert(t).clone())
    }

    /// `ψ^(k)(M_f)`.
    pub fn bar_monomial(
        &self,
        seq: &ZeroOneSequence,
        k: i32,
        f: &WeightFunction,
    ) -> Result<Arc<FockVector>> {
        let key = (seq.clone(), k, f.clone());
        if let Some(v) = self.memo.read().get(&key) {
            return Ok(v.clone());
        }
        let v = Arc::new(self.compute(seq, k, f)?);
        Ok(self.memo.write().entry(key).or_insert(v).clone())
    }

    fn compute(&self, seq: &ZeroOneSequence, k: i32, f: &WeightFunction) -> Result<FockVector> {
        let len = seq.len();
        if len == 1 {
            return FockVector::monomial(seq, k, f);
        }
        if f.len() != len {
            return Err(Error::LengthMismatch(format!("{f:?} for {seq:?}")));
        }
        if !f.in_window(k) {
            return Err(Error::Truncation(format!("{f:?} outside level {k}")));
        }
        let theta = self.theta(k)?;
        let v = f.values();
        let mut w = FockVector::zero(seq.clone(), k);
        match self.peel {
            Peel::Right => {
                let rest = self.bar_monomial(
                    &seq.prefix(len - 1),
                    k,
                    &WeightFunction(v[..len - 1].to_vec()),
                )?;
                for (g, c) in rest.iter() {
                    let mut h = g.values().to_vec();
                    h.push(v[len - 1]);
                    w.add_unchecked(WeightFunction(h), c);
                }
                theta.apply_split_last(&w)
            }
            Peel::Left => {
                let rest =
                    self.bar_monomial(&seq.suffix(1), k, &WeightFunction(v[1..].to_vec()))?;
                for (g, c) in rest.iter() {
                    let mut h = Vec::with_capacity(len);
                    h.push(v[0]);
                    h.extend_from_slice(g.values());
                    w.add_unchecked(WeightFunction(h), c);
                }
                theta.apply_split_first(&w)
            }
        }
    }

    /// `ψ^(k)(u)`, antilinear in the coefficients.
    pub fn apply(&self, u: &FockVector) -> Result<FockVector> {
        let mut out = FockVector::zero(u.seq().clone(), u.level());
        for (f, c) in u.iter() {
            let img = self.bar_monomial(u.seq(), u.level(), f)?;
            out.add_scaled_unchecked(&img, &c.bar());
        }
        Ok(out)
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{bruhat_leq, window};

    fn b(s: &str) -> ZeroOneSequence {
        s.parse().unwrap()
    }
    fn f(v: &[i32]) -> WeightFunction {
        WeightFunction(v.to_vec())
    }

    #[test]
    fn small_examples() {
        let bar = BarInvolution::default();
        assert_eq!(
            bar.bar_monomial(&b("0"), 2, &f(&[1])).unwrap().to_string(),
            "M[1]"
        );
        assert_eq!(
            bar.bar_monomial(&b("00"), 1, &f(&[1, 0]))
                .unwrap()
                .to_string(),
            "M[1,0] + (q-q^-1)*M[0,1]"
        );
        let once = bar.bar_monomial(&b("00"), 1, &f(&[1, 0])).unwrap();
        assert_eq!(bar.apply(&once).unwrap().to_string(), "M[1,0]");
        assert_eq!(
            bar.bar_monomial(&b("01"), 1, &f(&[1, 1]))
                .unwrap()
                .to_string(),
            "M[1,1] + (q-q^-1)*M[0,0] + (-1+q^-2)*M[-1,-1]"
        );
    }

    #[test]
    fn involutive_and_triangular_on_small_spaces() {
        let bar = BarInvolution::default();
        for s in ["00", "01", "10", "11", "010", "101"] {
            let seq = b(s);
            for g in window(seq.len(), 1) {
                let m = FockVector::monomial(&seq, 1, &g).unwrap();
                let once = bar.apply(&m).unwrap();
                assert!(once.coefficient(&g).is_one());
                for h in once.terms().keys() {
                    assert!(bruhat_leq(&seq, h, &g), "{s} {g:?} {h:?}");
                }
                assert_eq!(bar.apply(&once).unwrap(), m, "{s} {g:?}");
            }
        }
    }

    #[test]
    fn peels_agree() {
        let right = BarInvolution::new(WordScheme::Descending, Peel::Right);
        let left = BarInvolution::new(WordScheme::Mirrored, Peel::Left);
        for s in ["010", "110", "001"] {
            let seq = b(s);
            for g in window(3, 1) {
                assert_eq!(
                    right.bar_monomial(&seq, 1, &g).unwrap(),
                    left.bar_monomial(&seq, 1, &g).unwrap()
                );
            }
        }
    }
}
