//! The forms `⟨·,·⟩` on `T^b` and `⟨·,·⟩_E` on the q-wedge space, and the
//! duality and inversion checks built on them.
//!
//! Every check reads finitely many coefficients. Before evaluating, the
//! stabilized (finite) side is tested against the window; a support that does
//! not fit raises `Error::Truncation` instead of returning a wrong answer.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::canonical::{self, BasisKind};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::fock::{self, FockVector};
use crate::laurent::LaurentPoly;
use crate::order::{self, ParabolicPerm, WeightFunction, ZeroOneSequence};

/// `⟨u, v⟩ = Σ_g (u, M_g) (σ(ψ(v)), M_g)`.
pub fn form_t(engine: &Engine, u: &FockVector, v: &FockVector) -> Result<LaurentPoly> {
    check_same_space(u, v)?;
    if u.is_zero() || v.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    let image = fock::sigma_map(&engine.psi(v)?);
    Ok(fock::monomial_pairing(u, &image))
}

fn check_same_space(u: &FockVector, v: &FockVector) -> Result<()> {
    if u.seq() != v.seq() {
        return Err(Error::LengthMismatch(format!(
            "{:?} vs {:?}",
            u.seq(),
            v.seq()
        )));
    }
    if u.level() != v.level() {
        return Err(Error::Truncation(format!(
            "levels {} and {} differ",
            u.level(),
            v.level()
        )));
    }
    Ok(())
}

/// `⟨u, v⟩_E = ⟨u, v⟩ / c` for `u, v` in the q-wedge space, where
/// `H_0^2 = c H_0`. For a single block of size 2, `c = -[2]`.
pub fn form_e(engine: &Engine, u: &FockVector, v: &FockVector) -> Result<LaurentPoly> {
    fock::k_basis_decompose(u)?;
    fock::k_basis_decompose(v)?;
    form_t(engine, u, v)?.div_exact(&fock::h0_square_factor(u.seq()))
}

/// `(K_f, K_g)` divided by `(K_f, K_f) = q^{-ℓ(w_0)} Π[r_k - r_{k-1}]!`, so
/// `δ_{f,g}` on dominant indices.
pub fn k_pairing(
    seq: &ZeroOneSequence,
    k: i32,
    f: &WeightFunction,
    g: &WeightFunction,
) -> Result<LaurentPoly> {
    for x in [f, g] {
        if !order::is_dominant(seq, x) {
            return Err(Error::Dominance(format!(
                "{x:?} is not dominant for {seq:?}"
            )));
        }
    }
    let raw = fock::monomial_pairing(&fock::k_element(seq, k, f)?, &fock::k_element(seq, k, g)?);
    raw.div_exact(&k_norm(seq))
}

fn k_norm(seq: &ZeroOneSequence) -> LaurentPoly {
    let l0 = ParabolicPerm::longest(seq).length() as i32;
    fock::block_factorial(seq).shift(-l0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingEntry {
    pub label: String,
    pub f: WeightFunction,
    pub g: WeightFunction,
    pub value: LaurentPoly,
    pub expected: LaurentPoly,
    pub pass: bool,
}

impl PairingEntry {
    pub fn new(
        label: impl Into<String>,
        f: &WeightFunction,
        g: &WeightFunction,
        value: LaurentPoly,
        expected: LaurentPoly,
    ) -> Self {
        let pass = value == expected;
        Self {
            label: label.into(),
            f: f.clone(),
            g: g.clone(),
            value,
            expected,
            pass,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct PairingReport {
    pub seq: Option<ZeroOneSequence>,
    pub level: i32,
    pub entries: Vec<PairingEntry>,
}

impl PairingReport {
    pub fn new(seq: &ZeroOneSequence, level: i32) -> Self {
        Self {
            seq: Some(seq.clone()),
            level,
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, e: PairingEntry) {
        self.entries.push(e);
    }

    pub fn extend(&mut self, other: PairingReport) {
        self.entries.extend(other.entries);
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PairingEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }
}

fn delta(f: &WeightFunction, g: &WeightFunction) -> LaurentPoly {
    if f == g {
        LaurentPoly::one()
    } else {
        LaurentPoly::zero()
    }
}

fn fits(v: &FockVector, k: i32, what: &str) -> Result<()> {
    if v.max_abs() > k {
        return Err(Error::Truncation(format!(
            "support of {what} reaches {} beyond level {k}",
            v.max_abs()
        )));
    }
    Ok(())
}

/// Smallest level at which [`verify_duality`] and [`verify_inversion_t`]
/// can be evaluated for the pair `(f, g)`.
pub fn pair_level(
    engine: &Engine,
    seq: &ZeroOneSequence,
    f: &WeightFunction,
    g: &WeightFunction,
) -> Result<i32> {
    let tf = canonical::stabilized_canonical(engine, seq, f)?.vector;
    let tg = canonical::stabilized_canonical(engine, seq, &g.negated())?.vector;
    Ok([f.max_abs(), g.max_abs(), tf.max_abs(), tg.max_abs(), 1]
        .into_iter()
        .max()
        .unwrap_or(1))
}

/// `⟨L_f, T_{-g}⟩` against `δ_{f,g}`. `L_f` is the level-`k` truncation; the
/// sum only reads it at `-supp(T_{-g})`, which must lie in the window.
pub fn verify_duality(
    engine: &Engine,
    seq: &ZeroOneSequence,
    k: i32,
    f: &WeightFunction,
    g: &WeightFunction,
) -> Result<PairingEntry> {
    let t = canonical::stabilized_canonical(engine, seq, &g.negated())?.vector;
    fits(&t, k, "T_{-g}")?;
    let l = canonical::dual_canonical_element(engine, seq, k, f)?;
    let value = form_t(engine, &l, &t.at_level(k)?)?;
    Ok(PairingEntry::new("duality", f, g, value, delta(f, g)))
}

/// Both orthogonality sums `Σ_h t_hf(q) ℓ_{-h,-g}(q^-1)` and
/// `Σ_h ℓ_hf(q) t_{-h,-g}(q^-1)`.
pub fn verify_inversion_t(
    engine: &Engine,
    seq: &ZeroOneSequence,
    k: i32,
    f: &WeightFunction,
    g: &WeightFunction,
) -> Result<[PairingEntry; 2]> {
    let tf = canonical::stabilized_canonical(engine, seq, f)?.vector;
    let tg = canonical::stabilized_canonical(engine, seq, &g.negated())?.vector;
    fits(&tf, k, "T_f")?;
    fits(&tg, k, "T_{-g}")?;
    let l_neg_g = canonical::dual_canonical_element(engine, seq, k, &g.negated())?;
    let lf = canonical::dual_canonical_element(engine, seq, k, f)?;

    let mut first = LaurentPoly::zero();
    for (h, t) in tf.iter() {
        first += &(t * &l_neg_g.coefficient(&h.negated()).bar());
    }
    let mut second = LaurentPoly::zero();
    for (neg_h, t) in tg.iter() {
        second += &(&lf.coefficient(&neg_h.negated()) * &t.bar());
    }
    Ok([
        PairingEntry::new("inversion t·ℓ", f, g, first, delta(f, g)),
        PairingEntry::new("inversion ℓ·t", f, g, second, delta(f, g)),
    ])
}

/// The two expansions `M_f = Σ_h t_{-f,-h}(q^-1) L_h = Σ_h ℓ_{-f,-h}(q^-1) T_h`,
/// compared on every coordinate `M_g` of the level-`k` window. For fixed `g`
/// only `h` in the interval `[g, f]` contribute, so both sides are finite and
/// the level-`k` polynomials are exact there.
pub fn verify_expansion(
    engine: &Engine,
    seq: &ZeroOneSequence,
    k: i32,
    f: &WeightFunction,
) -> Result<Vec<PairingEntry>> {
    let lower = order::lower_set(seq, f, k)?;
    let neg_f = f.negated();
    let mut via_l: BTreeMap<WeightFunction, LaurentPoly> = BTreeMap::new();
    let mut via_t: BTreeMap<WeightFunction, LaurentPoly> = BTreeMap::new();
    for h in &lower {
        let neg_h = h.negated();
        let t_coef = engine
            .element(seq, k, &neg_h, BasisKind::Canonical)?
            .coefficient(&neg_f)
            .bar();
        if !t_coef.is_zero() {
            for (x, c) in engine.element(seq, k, h, BasisKind::Dual)?.iter() {
                *via_l.entry(x.clone()).or_default() += &(&t_coef * c);
            }
        }
        let l_coef = engine
            .element(seq, k, &neg_h, BasisKind::Dual)?
            .coefficient(&neg_f)
            .bar();
        if !l_coef.is_zero() {
            for (x, c) in engine.element(seq, k, h, BasisKind::Canonical)?.iter() {
                *via_t.entry(x.clone()).or_default() += &(&l_coef * c);
            }
        }
    }
    let mut out = Vec::new();
    for (label, sums) in [("expansion in L", via_l), ("expansion in T", via_t)] {
        for g in &lower {
            let value = sums.get(g).cloned().unwrap_or_default();
            out.push(PairingEntry::new(label, f, g, value, delta(f, g)));
        }
        // Anything outside the lower set would be a triangularity failure.
        for (g, c) in &sums {
            if !c.is_zero() && !lower.contains(g) {
                out.push(PairingEntry::new(
                    label,
                    f,
                    g,
                    c.clone(),
                    LaurentPoly::zero(),
                ));
            }
        }
    }
    Ok(out)
}

/// `U_{-g·w_0} = T_{-g} H_0` from the stabilized `T_{-g}`, at level `k`.
fn wedge_u_neg(
    engine: &Engine,
    seq: &ZeroOneSequence,
    k: i32,
    g: &WeightFunction,
) -> Result<FockVector> {
    let t = canonical::stabilized_canonical(engine, seq, &g.negated())?.vector;
    fits(&t, k, "T_{-g}")?;
    fock::h0_act(&t.at_level(k)?)
}

fn check_dominant_pair(
    seq: &ZeroOneSequence,
    f: &WeightFunction,
    g: &WeightFunction,
) -> Result<()> {
    for x in [f, g] {
        if !order::is_dominant(seq, x) {
            return Err(Error::Dominance(format!(
                "{x:?} is not dominant for {seq:?}"
            )));
        }
    }
    Ok(())
}

/// Smallest level for the wedge checks on a dominant pair.
pub fn wedge_pair_level(
    engine: &Engine,
    seq: &ZeroOneSequence,
    f: &WeightFunction,
    g: &WeightFunction,
) -> Result<i32> {
    check_dominant_pair(seq, f, g)?;
    let mut k = f.max_abs().max(g.max_abs()).max(1);
    for x in [f, g] {
        let t = canonical::stabilized_canonical(engine, seq, &x.negated())?.vector;
        k = k.max(t.max_abs());
    }
    Ok(k)
}

/// `⟨L_f, U_{-g·w_0}⟩_E` against `δ_{f,g}`, with `L_f` the wedge dual
/// canonical element truncated at `k`.
pub fn verify_duality_wedge(
    engine: &Engine,
    seq: &ZeroOneSequence,
    k: i32,
    f: &WeightFunction,
    g: &WeightFunction,
) -> Result<PairingEntry> {
    check_dominant_pair(seq, f, g)?;
    let u = wedge_u_neg(engine, seq, k, g)?;
    let l = canonical::wedge_dual(engine, seq, k, f)?;
    let value = form_e(engine, &l, &u)?;
    Ok(PairingEntry::new("wedge duality", f, g, value, delta(f, g)))
}

/// The two wedge orthogonality sums
/// `Σ_h u_{-h·w_0,-f·w_0}(q) ℓ_{h,g}(q^-1)` and `Σ_h ℓ_{-h·w_0,f}(q) u_{h,-g·w_0}(q^-1)`.
pub fn verify_inversion_wedge(
    engine: &Engine,
    seq: &ZeroOneSequence,
    k: i32,
    f: &WeightFunction,
    g: &WeightFunction,
) -> Result<[PairingEntry; 2]> {
    check_dominant_pair(seq, f, g)?;
    let flip = |x: &WeightFunction| x.negated().block_reversed(seq);
    let u_f = fock::k_basis_decompose(&wedge_u_neg(engine, seq, k, f)?)?;
    let u_g = fock::k_basis_decompose(&wedge_u_neg(engine, seq, k, g)?)?;
    let l_g = canonical::wedge_solve(engine, seq, k, g, BasisKind::Dual)?;
    let l_f = canonical::wedge_solve(engine, seq, k, f, BasisKind::Dual)?;

    // u_f is indexed by x = -h·w_0, so h = -x·w_0.
    let mut first = LaurentPoly::zero();
    for (x, u) in &u_f {
        if let Some(l) = l_g.get(&flip(x)) {
            first += &(u * &l.bar());
        }
    }
    let mut second = LaurentPoly::zero();
    for (h, u) in &u_g {
        if let Some(l) = l_f.get(&flip(h)) {
            second += &(l * &u.bar());
        }
    }
    Ok([
        PairingEntry::new("wedge inversion u·ℓ", f, g, first, delta(f, g)),
        PairingEntry::new("wedge inversion ℓ·u", f, g, second, delta(f, g)),
    ])
}

/// `⟨M_f, M_g⟩` and `⟨M_g, M_f⟩` at level `k`.
pub fn symmetry_pair(
    engine: &Engine,
    seq: &ZeroOneSequence,
    k: i32,
    f: &WeightFunction,
    g: &WeightFunction,
) -> Result<PairingEntry> {
    let mf = FockVector::monomial(seq, k, f)?;
    let mg = FockVector::monomial(seq, k, g)?;
    let fg = form_t(engine, &mf, &mg)?;
    let gf = form_t(engine, &mg, &mf)?;
    Ok(PairingEntry::new("symmetry", f, g, fg, gf))
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
    fn m(seq: &str, k: i32, v: &[i32]) -> FockVector {
        FockVector::monomial(&b(seq), k, &f(v)).unwrap()
    }

    #[test]
    fn single_factor_form() {
        let e = Engine::default();
        for s in ["0", "1"] {
            for a in -2..=2 {
                for c in -2..=2 {
                    let v = form_t(&e, &m(s, 2, &[a]), &m(s, 2, &[c])).unwrap();
                    assert_eq!(v.is_one(), a == -c);
                    assert_eq!(v.is_zero(), a != -c);
                }
            }
        }
        assert!(form_t(&e, &m("0", 1, &[1]), &FockVector::zero(b("0"), 1))
            .unwrap()
            .is_zero());
        assert!(matches!(
            form_t(&e, &m("0", 1, &[1]), &m("0", 2, &[1])),
            Err(Error::Truncation(_))
        ));
    }

    #[test]
    fn symmetric_on_small_pair() {
        let e = Engine::default();
        let x = form_t(&e, &m("00", 1, &[1, 0]), &m("00", 1, &[-1, 0])).unwrap();
        let y = form_t(&e, &m("00", 1, &[-1, 0]), &m("00", 1, &[1, 0])).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn k_basis_is_orthonormal() {
        let seq = b("00");
        assert_eq!(fock::h0_square_factor(&seq).to_string(), "-q-q^-1");
        assert_eq!(fock::h0_square_factor(&b("0011")).to_string(), "q^2+2+q^-2");
        let dom = [f(&[1, 0]), f(&[1, -1]), f(&[0, -1])];
        for x in &dom {
            for y in &dom {
                let v = k_pairing(&seq, 1, x, y).unwrap();
                assert_eq!(v, delta(x, y), "{x:?} {y:?}");
            }
        }
        assert!(matches!(
            k_pairing(&seq, 1, &f(&[0, 1]), &f(&[1, 0])),
            Err(Error::Dominance(_))
        ));
    }

    #[test]
    fn duality_two_factors() {
        let e = Engine::default();
        for s in ["00", "01", "10", "11"] {
            let seq = b(s);
            for x in order::window(2, 1) {
                for y in order::weight_class(&seq, &x, 1).unwrap() {
                    let k = pair_level(&e, &seq, &x, &y).unwrap();
                    let d = verify_duality(&e, &seq, k, &x, &y).unwrap();
                    assert!(d.pass, "{s} {d:?}");
                    for entry in verify_inversion_t(&e, &seq, k, &x, &y).unwrap() {
                        assert!(entry.pass, "{s} {entry:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn duality_rejects_small_level() {
        let e = Engine::default();
        let r = verify_duality(&e, &b("01"), 1, &f(&[1, 1]), &f(&[1, 1]));
        assert!(matches!(r, Err(Error::Truncation(_))), "{r:?}");
    }

    #[test]
    fn expansions_two_factors() {
        let e = Engine::default();
        for s in ["00", "01", "10"] {
            for x in order::window(2, 1) {
                for entry in verify_expansion(&e, &b(s), 2, &x).unwrap() {
                    assert!(entry.pass, "{s} {entry:?}");
                }
            }
        }
    }

    #[test]
    fn k_pairing_even_longest_element() {
        // ℓ(w_0) = 2: (K_f, K_f) = q^-2 [2]^2, with positive sign.
        let seq = b("0011");
        let x = f(&[1, 0, -1, 0]);
        let raw = fock::monomial_pairing(
            &fock::k_element(&seq, 1, &x).unwrap(),
            &fock::k_element(&seq, 1, &x).unwrap(),
        );
        assert_eq!(raw.to_string(), "1+2*q^-2+q^-4");
        assert!(k_pairing(&seq, 1, &x, &x).unwrap().is_one());
    }

    #[test]
    fn wedge_duality_trivial_blocks() {
        // H_0 = 1, so the wedge forms are the T-space ones.
        let e = Engine::default();
        let seq = b("01");
        let x = f(&[1, 1]);
        let k = wedge_pair_level(&e, &seq, &x, &x).unwrap();
        assert!(verify_duality_wedge(&e, &seq, k, &x, &x).unwrap().pass);
    }

    #[test]
    fn wedge_checks_two_factors() {
        let e = Engine::default();
        for s in ["00", "11"] {
            let seq = b(s);
            let dom: Vec<_> = order::window(2, 1)
                .into_iter()
                .filter(|x| order::is_dominant(&seq, x))
                .collect();
            for x in &dom {
                for y in &dom {
                    let k = wedge_pair_level(&e, &seq, x, y).unwrap();
                    assert!(
                        verify_duality_wedge(&e, &seq, k, x, y).unwrap().pass,
                        "{s} {x:?} {y:?}"
                    );
                    for entry in verify_inversion_wedge(&e, &seq, k, x, y).unwrap() {
                        assert!(entry.pass, "{s} {entry:?}");
                    }
                }
            }
        }
    }
}
