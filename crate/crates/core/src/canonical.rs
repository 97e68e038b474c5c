//! Canonical bases `T_f`, dual canonical bases `L_f`, their polynomials
//! `t_gf` and `ℓ_gf`, and the q-wedge bases `U_f`, `L^E_f`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::fock::{self, FockVector};
use crate::laurent::{LaurentPoly, Substitution};
use crate::order::{self, WeightFunction, ZeroOneSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisKind {
    Canonical,
    Dual,
}

impl BasisKind {
    pub fn name(self) -> &'static str {
        match self {
            BasisKind::Canonical => "canonical",
            BasisKind::Dual => "dual",
        }
    }

    fn solve(self, c: &LaurentPoly) -> Result<LaurentPoly> {
        match self {
            BasisKind::Canonical => LaurentPoly::positive_solve(c),
            BasisKind::Dual => LaurentPoly::negative_solve(c),
        }
    }

    /// Whether an off-diagonal entry has the expected shape and sign pattern.
    pub fn is_positive(self, c: &LaurentPoly) -> bool {
        match self {
            BasisKind::Canonical => c.is_in_q_zq() && c.has_nonneg_coeffs_after(Substitution::Q),
            BasisKind::Dual => {
                c.is_in_qinv_zqinv() && c.has_nonneg_coeffs_after(Substitution::NegQInv)
            }
        }
    }
}

impl FromStr for BasisKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "canonical" => Ok(BasisKind::Canonical),
            "dual" => Ok(BasisKind::Dual),
            _ => Err(Error::Unknown {
                kind: "basis kind",
                name: s.into(),
                available: "canonical, dual".into(),
            }),
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `r_gh` with `ψ(M_h) = Σ_g r_gh M_g`, for all `h ≼_b f` in the window.
pub fn bar_matrix(
    engine: &Engine,
    seq: &ZeroOneSequence,
    k: i32,
    f: &WeightFunction,
) -> Result<BTreeMap<(WeightFunction, WeightFunction), LaurentPoly>> {
    let lower = order::lower_set(seq, f, k)?;
    let cols = bar_columns(engine, seq, k, &lower)?;
    let mut out = BTreeMap::new();
    for (h, col) in lower.iter().zip(&cols) {
        for (g, c) in col.iter() {
            out.insert((g.clone(), h.clone()), c.clone());
        }
    }
    Ok(out)
}

fn bar_columns(
    engine: &Engine,
    seq: &ZeroOneSequence,
    k: i32,
    set: &[WeightFunction],
) -> Result<Vec<Arc<FockVector>>> {
    set.par_iter()
        .map(|h| engine.bar().bar_monomial(seq, k, h))
        .collect()
}

/// Lusztig's lemma on the lower set of `f`, top-down.
pub(crate) fn solve_element(
    engine: &Engine,
    seq: &ZeroOneSequence,
    k: i32,
    f: &WeightFunction,
    kind: BasisKind,
) -> Result<FockVector> {
    let lower = order::lower_set(seq, f, k)?;
    debug_assert_eq!(lower.first(), Some(f));
    let cols = bar_columns(engine, seq, k, &lower)?;
    let mut coeffs: HashMap<&WeightFunction, LaurentPoly> = HashMap::with_capacity(lower.len());
    coeffs.insert(f, LaurentPoly::one());
    // Barred coefficients of the elements already fixed, with their columns.
    let mut done: Vec<(LaurentPoly, &FockVector)> = vec![(LaurentPoly::one(), cols[0].as_ref())];
    for (g, col) in lower.iter().zip(&cols).skip(1) {
        let mut c = LaurentPoly::zero();
        for (tbar, hcol) in &done {
            if let Some(r) = hcol.terms().get(g) {
                c += &(r * tbar);
            }
        }
        let t = kind
            .solve(&c)
            .map_err(|e| Error::Invariant(format!("{seq:?} k={k} f={f:?} g={g:?}: {e}")))?;
        if !t.is_zero() {
            done.push((t.bar(), col.as_ref()));
            coeffs.insert(g, t);
        }
    }
    let out = FockVector::from_terms(seq, k, coeffs.into_iter().map(|(g, c)| (g.clone(), c)))?;
    if engine.config().verify_invariance {
        let mut image = FockVector::zero(seq.clone(), k);
        for (tbar, col) in &done {
            image.add_scaled_unchecked(col, tbar);
        }
        if image != out {
            return Err(Error::Invariant(format!(
                "{} element for {seq:?} f={f:?} k={k} is not ψ-invariant",
                kind
            )));
        }
    }
    Ok(out)
}

/// `T^{b,k}_f`.
pub fn canonical_element(
    engine: &Engine,
    seq: &ZeroOneSequence,
    k: i32,
    f: &WeightFunction,
) -> Result<FockVector> {
    Ok(engine
        .element(seq, k, f, BasisKind::Canonical)?
        .as_ref()
        .clone())
}

/// `L^{b,k}_f`.
pub fn dual_canonical_element(
    engine: &Engine,
    seq: &ZeroOneSequence,
    k: i32,
    f: &WeightFunction,
) -> Result<FockVector> {
    Ok(engine.element(seq, k, f, BasisKind::Dual)?.as_ref().clone())
}

#[derive(Clone, Debug)]
pub struct Stabilized {
    pub vector: FockVector,
    /// The level at which agreement with the previous level was observed.
    pub level: i32,
    pub levels_tried: Vec<i32>,
}

/// The untruncated `T^b_f`: levels `k_0, k_0 + 2, ...` until two consecutive
/// results coincide and the support stays off the window boundary.
pub fn stabilized_canonical(
    engine: &Engine,
    seq: &ZeroOneSequence,
    f: &WeightFunction,
) -> Result<Stabilized> {
    stabilized_canonical_from(engine, seq, f, f.max_abs().max(1))
}

pub fn stabilized_canonical_from(
    engine: &Engine,
    seq: &ZeroOneSequence,
    f: &WeightFunction,
    start: i32,
) -> Result<Stabilized> {
    let cap = engine.config().max_level;
    let mut prev: Option<Arc<FockVector>> = None;
    let mut tried = Vec::new();
    let mut k = start.max(f.max_abs()).max(1);
    while k <= cap {
        let cur = engine.element(seq, k, f, BasisKind::Canonical)?;
        tried.push(k);
        if let Some(p) = &prev {
            if p.same_terms(&cur) && cur.max_abs() < k {
                return Ok(Stabilized {
                    vector: cur.as_ref().clone(),
                    level: k,
                    levels_tried: tried,
                });
            }
        }
        prev = Some(cur);
        k += 2;
    }
    Err(Error::StabilizationCap(format!(
        "T_{f:?} for {seq:?} did not stabilize by level {cap} (tried {tried:?})"
    )))
}

/// `π_k(L_f)`, explicitly marked as a truncation.
#[derive(Clone, Debug)]
pub struct TruncatedDual {
    pub vector: FockVector,
    pub level: i32,
    pub truncated: bool,
}

pub fn stabilized_dual_truncation(
    engine: &Engine,
    seq: &ZeroOneSequence,
    f: &WeightFunction,
    k: i32,
) -> Result<TruncatedDual> {
    let vector = dual_canonical_element(engine, seq, k, f)?;
    Ok(TruncatedDual {
        vector,
        level: k,
        truncated: true,
    })
}

fn check_dominant(seq: &ZeroOneSequence, f: &WeightFunction) -> Result<()> {
    if !order::is_dominant(seq, f) {
        return Err(Error::Dominance(format!(
            "{f:?} is not dominant for {seq:?}"
        )));
    }
    Ok(())
}

/// `U_f = T_{f·w_0} H_0` for dominant `f`.
pub fn wedge_canonical(
    engine: &Engine,
    seq: &ZeroOneSequence,
    k: i32,
    f: &WeightFunction,
) -> Result<FockVector> {
    check_dominant(seq, f)?;
    let t = engine.element(seq, k, &f.block_reversed(seq), BasisKind::Canonical)?;
    fock::h0_act(&t)
}

/// `L^E_f` for dominant `f`: the solution of the dual triangular problem on
/// the wedge space, written in monomials.
pub fn wedge_dual(
    engine: &Engine,
    seq: &ZeroOneSequence,
    k: i32,
    f: &WeightFunction,
) -> Result<FockVector> {
    let coords = wedge_solve(engine, seq, k, f, BasisKind::Dual)?;
    fock::k_basis_compose(seq, k, &coords)
}

/// `u_gf`: K-basis coordinates of `U_f`.
pub fn wedge_bkl(
    engine: &Engine,
    seq: &ZeroOneSequence,
    k: i32,
    f: &WeightFunction,
) -> Result<BTreeMap<WeightFunction, LaurentPoly>> {
    fock::k_basis_decompose(&wedge_canonical(engine, seq, k, f)?)
}

/// Dominant elements of the window below `f`, top-down.
fn dominant_lower_set(
    seq: &ZeroOneSequence,
    f: &WeightFunction,
    k: i32,
) -> Result<Vec<WeightFunction>> {
    Ok(order::lower_set(seq, f, k)?
        .into_iter()
        .filter(|g| order::is_dominant(seq, g))
        .collect())
}

/// `ψ(K_f)` in the K-basis: `s_gf`.
pub fn wedge_bar_column(
    engine: &Engine,
    seq: &ZeroOneSequence,
    k: i32,
    f: &WeightFunction,
) -> Result<BTreeMap<WeightFunction, LaurentPoly>> {
    check_dominant(seq, f)?;
    let kf = fock::k_element(seq, k, f)?;
    fock::k_basis_decompose(&engine.psi(&kf)?)
}

/// Lusztig's lemma in the K-basis of the wedge space.
pub fn wedge_solve(
    engine: &Engine,
    seq: &ZeroOneSequence,
    k: i32,
    f: &WeightFunction,
    kind: BasisKind,
) -> Result<BTreeMap<WeightFunction, LaurentPoly>> {
    check_dominant(seq, f)?;
    let lower = dominant_lower_set(seq, f, k)?;
    let cols: Vec<BTreeMap<WeightFunction, LaurentPoly>> = lower
        .par_iter()
        .map(|h| wedge_bar_column(engine, seq, k, h))
        .collect::<Result<_>>()?;
    let mut coeffs = BTreeMap::new();
    coeffs.insert(f.clone(), LaurentPoly::one());
    let mut done: Vec<(LaurentPoly, &BTreeMap<WeightFunction, LaurentPoly>)> =
        vec![(LaurentPoly::one(), &cols[0])];
    for (g, col) in lower.iter().zip(&cols).skip(1) {
        let mut c = LaurentPoly::zero();
        for (tbar, hcol) in &done {
            if let Some(s) = hcol.get(g) {
                c += &(s * tbar);
            }
        }
        let t = kind
            .solve(&c)
            .map_err(|e| Error::Invariant(format!("wedge {seq:?} f={f:?} g={g:?}: {e}")))?;
        if !t.is_zero() {
            done.push((t.bar(), col));
            coeffs.insert(g.clone(), t);
        }
    }
    Ok(coeffs)
}

/// All `t_gf` (or `ℓ_gf`) for `f ∈ Z^{m+n}_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BklTable {
    pub seq: ZeroOneSequence,
    pub level: i32,
    pub kind: BasisKind,
    pub entries: BTreeMap<(WeightFunction, WeightFunction), LaurentPoly>,
}

impl BklTable {
    pub fn get(&self, g: &WeightFunction, f: &WeightFunction) -> LaurentPoly {
        self.entries
            .get(&(g.clone(), f.clone()))
            .cloned()
            .unwrap_or_default()
    }

    /// Off-diagonal entries violating the positivity pattern.
    pub fn positivity_violations(&self) -> Vec<(WeightFunction, WeightFunction, LaurentPoly)> {
        self.entries
            .iter()
            .filter(|((g, f), c)| g != f && !self.kind.is_positive(c))
            .map(|((g, f), c)| (g.clone(), f.clone(), c.clone()))
            .collect()
    }
}

pub fn bkl_table(
    engine: &Engine,
    seq: &ZeroOneSequence,
    k: i32,
    kind: BasisKind,
) -> Result<BklTable> {
    let all = order::window(seq.len(), k);
    let elems: Vec<Arc<FockVector>> = all
        .par_iter()
        .map(|f| engine.element(seq, k, f, kind))
        .collect::<Result<_>>()?;
    let mut entries = BTreeMap::new();
    for (f, v) in all.iter().zip(&elems) {
        for (g, c) in v.iter() {
            entries.insert((g.clone(), f.clone()), c.clone());
        }
    }
    Ok(BklTable {
        seq: seq.clone(),
        level: k,
        kind,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> ZeroOneSequence {
        s.parse().unwrap()
    }
    fn f(v: &[i32]) -> WeightFunction {
        WeightFunction(v.to_vec())
    }

    #[test]
    fn two_factor_closed_forms() {
        let e = Engine::default();
        assert_eq!(
            canonical_element(&e, &b("01"), 2, &f(&[1, 1]))
                .unwrap()
                .to_string(),
            "M[1,1] + q*M[0,0]"
        );
        assert_eq!(
            canonical_element(&e, &b("10"), 2, &f(&[1, 1]))
                .unwrap()
                .to_string(),
            "M[1,1] + q*M[2,2]"
        );
        assert_eq!(
            canonical_element(&e, &b("00"), 1, &f(&[1, 0]))
                .unwrap()
                .to_string(),
            "M[1,0] + q*M[0,1]"
        );
        assert_eq!(
            canonical_element(&e, &b("01"), 1, &f(&[0, 1]))
                .unwrap()
                .to_string(),
            "M[0,1]"
        );
    }

    #[test]
    fn bar_matrix_entries() {
        let e = Engine::default();
        let r = bar_matrix(&e, &b("00"), 1, &f(&[1, 0])).unwrap();
        assert_eq!(r[&(f(&[0, 1]), f(&[1, 0]))].to_string(), "q-q^-1");
        assert!(r[&(f(&[1, 0]), f(&[1, 0]))].is_one());
        assert!(!r.contains_key(&(f(&[1, 0]), f(&[0, 1]))));
    }

    #[test]
    fn stabilization() {
        let e = Engine::default();
        let s = stabilized_canonical(&e, &b("01"), &f(&[0, 1])).unwrap();
        assert_eq!(s.vector.to_string(), "M[0,1]");
        let s = stabilized_canonical(&e, &b("01"), &f(&[1, 1])).unwrap();
        assert_eq!(s.vector.to_string(), "M[1,1] + q*M[0,0]");
        let small = Engine::new(crate::engine::EngineConfig {
            max_level: 1,
            ..Default::default()
        });
        assert!(matches!(
            stabilized_canonical(&small, &b("01"), &f(&[1, 1])),
            Err(Error::StabilizationCap(_))
        ));
    }

    #[test]
    fn wedge_small() {
        let e = Engine::default();
        let u = wedge_canonical(&e, &b("00"), 1, &f(&[1, 0])).unwrap();
        assert_eq!(u, fock::k_element(&b("00"), 1, &f(&[1, 0])).unwrap());
        assert!(matches!(
            wedge_canonical(&e, &b("00"), 1, &f(&[0, 1])),
            Err(Error::Dominance(_))
        ));
        assert!(matches!(
            wedge_canonical(&e, &b("00"), 1, &f(&[1, 1])),
            Err(Error::Dominance(_))
        ));
    }
}
