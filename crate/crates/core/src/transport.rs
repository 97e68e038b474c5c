//! Moving canonical bases from `b_st = (1^n, 0^m)` to an arbitrary `b`
//! through the two-factor isomorphisms `R_κ`.

use std::collections::BTreeMap;

use crate::canonical::{self, Stabilized};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::laurent::LaurentPoly;
use crate::order::{self, WeightFunction, ZeroOneSequence};
use crate::rmatrix::ThetaFactorization;

/// Which two-factor canonical basis sits at slots `κ, κ+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Slots `(0, 1)`: `T_{(a,a)} = M_{(a,a)} + q M_{(a-1,a-1)}`.
    U,
    /// Slots `(1, 0)`: `T'_{(a,a)} = M'_{(a,a)} + q M'_{(a+1,a+1)}`.
    UPrime,
}

impl Flavor {
    fn pattern(self) -> (u8, u8) {
        match self {
            Flavor::U => (0, 1),
            Flavor::UPrime => (1, 0),
        }
    }

    /// Value of the lower partner of an equal pair `(a, a)`.
    fn partner(self, a: i32) -> i32 {
        match self {
            Flavor::U => a - 1,
            Flavor::UPrime => a + 1,
        }
    }
}

/// Closed-form two-factor canonical element for the pattern `(0,1)` or `(1,0)`.
pub fn two_factor_canonical(pattern: &ZeroOneSequence, f: &WeightFunction) -> Result<FockVector> {
    let flavor = match pattern.entries() {
        [0, 1] => Flavor::U,
        [1, 0] => Flavor::UPrime,
        _ => {
            return Err(Error::SequencePattern(format!(
                "{pattern:?} is not (0,1) or (1,0)"
            )))
        }
    };
    if f.len() != 2 {
        return Err(Error::LengthMismatch(format!("{f:?} is not a pair")));
    }
    let v = f.values();
    let level = f.max_abs() + 1;
    let mut out = FockVector::monomial(pattern, level, f)?;
    if v[0] == v[1] {
        let p = flavor.partner(v[0]);
        out.add_term(WeightFunction(vec![p, p]), &LaurentPoly::q())?;
    }
    Ok(out)
}

/// Coordinates in a basis `U^{b,κ}_f` or `U'^{b,κ}_f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UBasisVector {
    /// The sequence of the underlying Fock space.
    pub seq: ZeroOneSequence,
    pub kappa: usize,
    pub level: i32,
    pub flavor: Flavor,
    pub terms: BTreeMap<WeightFunction, LaurentPoly>,
}

fn check_slots(seq: &ZeroOneSequence, kappa: usize, flavor: Flavor) -> Result<()> {
    if kappa == 0 || kappa >= seq.len() {
        return Err(Error::IndexOutOfRange(format!("κ={kappa} for {seq:?}")));
    }
    let e = seq.entries();
    if (e[kappa - 1], e[kappa]) != flavor.pattern() {
        return Err(Error::SequencePattern(format!(
            "{seq:?} has no {:?} at κ={kappa}",
            flavor.pattern()
        )));
    }
    Ok(())
}

/// The excluded boundary pair value.
fn boundary(flavor: Flavor, k: i32) -> i32 {
    match flavor {
        Flavor::U => -k,
        Flavor::UPrime => k,
    }
}

pub fn to_u_basis(u: &FockVector, kappa: usize, flavor: Flavor) -> Result<UBasisVector> {
    check_slots(u.seq(), kappa, flavor)?;
    let k = u.level();
    let (i, j) = (kappa - 1, kappa);
    let mut terms = BTreeMap::new();
    let mut chains: BTreeMap<WeightFunction, ()> = BTreeMap::new();
    for (f, c) in u.iter() {
        let v = f.values();
        if v[i] != v[j] {
            terms.insert(f.clone(), c.clone());
        } else {
            let mut outer = v.to_vec();
            outer[i] = 0;
            outer[j] = 0;
            chains.insert(WeightFunction(outer), ());
        }
    }
    // Along each chain of equal pairs, walk away from the partner direction:
    // c_a = u_a - q c_{a'} where a' is the pair whose element contains (a,a).
    let walk: Vec<i32> = match flavor {
        Flavor::UPrime => (-k..k).collect(),
        Flavor::U => (-k + 1..=k).rev().collect(),
    };
    for outer in chains.keys() {
        let at = |a: i32| {
            let mut v = outer.values().to_vec();
            v[i] = a;
            v[j] = a;
            WeightFunction(v)
        };
        let mut prev = LaurentPoly::zero();
        for &a in &walk {
            let c = &u.coefficient(&at(a)) - &prev.shift(1);
            if !c.is_zero() {
                terms.insert(at(a), c.clone());
            }
            prev = c;
        }
    }
    let x = UBasisVector {
        seq: u.seq().clone(),
        kappa,
        level: k,
        flavor,
        terms,
    };
    if from_u_basis(&x)? != *u {
        return Err(Error::NotInUSpan(format!("{u:?} at κ={kappa}")));
    }
    Ok(x)
}

pub fn from_u_basis(x: &UBasisVector) -> Result<FockVector> {
    check_slots(&x.seq, x.kappa, x.flavor)?;
    let (i, j) = (x.kappa - 1, x.kappa);
    let mut out = FockVector::zero(x.seq.clone(), x.level);
    for (f, c) in &x.terms {
        out.add_term(f.clone(), c)?;
        let v = f.values();
        if v[i] == v[j] {
            if v[i] == boundary(x.flavor, x.level) {
                return Err(Error::Truncation(format!(
                    "{f:?} is a boundary index at level {}",
                    x.level
                )));
            }
            let p = x.flavor.partner(v[i]);
            let mut h = v.to_vec();
            h[i] = p;
            h[j] = p;
            out.add_term(WeightFunction(h), &c.shift(1))?;
        }
    }
    Ok(out)
}

/// `R_κ(U'_f) = U_{s_κ f}`.
pub fn apply_r_kappa(x: &UBasisVector) -> Result<UBasisVector> {
    if x.flavor != Flavor::UPrime {
        return Err(Error::SequencePattern(
            "R_κ acts on the primed basis".into(),
        ));
    }
    check_slots(&x.seq, x.kappa, x.flavor)?;
    let k = x.level;
    let (i, j) = (x.kappa - 1, x.kappa);
    let mut terms = BTreeMap::new();
    for (f, c) in &x.terms {
        let v = f.values();
        if v[i] == v[j] && v[i] >= k {
            return Err(Error::Truncation(format!(
                "{f:?} touches the level-{k} boundary"
            )));
        }
        terms.insert(order::s_kappa_f(f, x.kappa)?, c.clone());
    }
    let mut e = x.seq.entries().to_vec();
    e.swap(i, j);
    Ok(UBasisVector {
        seq: ZeroOneSequence::new(e)?,
        kappa: x.kappa,
        level: k,
        flavor: Flavor::U,
        terms,
    })
}

/// `Θ ∘ f̃ ∘ P` on `W ⊗ V`: the flip, the twist `q^{-δ_ij}` and `Θ^(k)`.
pub fn r_two_factor_oracle(theta: &ThetaFactorization, v: &FockVector) -> Result<FockVector> {
    if v.seq().entries() != [1, 0] {
        return Err(Error::SequencePattern(format!(
            "{:?} is not (1,0)",
            v.seq()
        )));
    }
    let target = ZeroOneSequence::new(vec![0, 1])?;
    let mut w = FockVector::zero(target, v.level());
    for (f, c) in v.iter() {
        let (a, b) = (f.values()[0], f.values()[1]);
        let twist = if a == b { -1 } else { 0 };
        w.add_term(WeightFunction(vec![b, a]), &c.shift(twist))?;
    }
    theta.apply_split_last(&w)
}

#[derive(Clone, Debug)]
pub struct TransportStep {
    pub kappa: usize,
    pub seq: ZeroOneSequence,
    pub f: WeightFunction,
    pub vector: FockVector,
}

#[derive(Clone, Debug)]
pub struct TransportResult {
    pub word: Vec<usize>,
    pub g: WeightFunction,
    /// Window used for the `R_κ` chain.
    pub level: i32,
    pub start: Stabilized,
    pub steps: Vec<TransportStep>,
    pub result: FockVector,
}

#[derive(Clone, Debug)]
pub struct TransportOptions {
    /// Check `ψ`-invariance of every intermediate element.
    pub validate: bool,
    /// How far past the initial window the chain may escalate.
    pub max_escalations: u32,
}

impl Default for TransportOptions {
    fn default() -> Self {
        Self {
            validate: true,
            max_escalations: 4,
        }
    }
}

/// `T^b_f` obtained from `T^{b_st}_g` along the word of [`order::bst_factorization`].
pub fn transport_canonical(
    engine: &Engine,
    seq: &ZeroOneSequence,
    f: &WeightFunction,
    opts: &TransportOptions,
) -> Result<TransportResult> {
    if f.len() != seq.len() {
        return Err(Error::LengthMismatch(format!("{f:?} for {seq:?}")));
    }
    let word = order::bst_factorization(seq);
    let mut g = f.clone();
    for &kappa in word.iter().rev() {
        g = order::s_kappa_f_inverse(&g, kappa)?;
    }
    let bst = ZeroOneSequence::standard(seq.m(), seq.n());
    let start = canonical::stabilized_canonical(engine, &bst, &g)?;
    let mut k =
        (f.max_abs() + seq.len() as i32).max(start.vector.max_abs() + word.len() as i32 + 1);
    for attempt in 0..=opts.max_escalations {
        match run_chain(engine, &word, &g, &start.vector, k, opts.validate) {
            Ok((steps, result)) => {
                return Ok(TransportResult {
                    word,
                    g,
                    level: k,
                    start,
                    steps,
                    result,
                });
            }
            Err(Error::Truncation(_) | Error::NotInUSpan(_)) if attempt < opts.max_escalations => {
                k += 2
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::StabilizationCap(format!(
        "transport of {f:?} for {seq:?} needed a window beyond {k}"
    )))
}

fn run_chain(
    engine: &Engine,
    word: &[usize],
    g: &WeightFunction,
    start: &FockVector,
    k: i32,
    validate: bool,
) -> Result<(Vec<TransportStep>, FockVector)> {
    let mut cur = start.at_level(k)?;
    let mut idx = g.clone();
    let mut steps = Vec::with_capacity(word.len());
    for &kappa in word {
        let x = to_u_basis(&cur, kappa, Flavor::UPrime)?;
        cur = from_u_basis(&apply_r_kappa(&x)?)?;
        idx = order::s_kappa_f(&idx, kappa)?;
        if validate {
            check_invariant(engine, &cur)?;
        }
        steps.push(TransportStep {
            kappa,
            seq: cur.seq().clone(),
            f: idx.clone(),
            vector: cur.clone(),
        });
    }
    Ok((steps, cur))
}

fn check_invariant(engine: &Engine, v: &FockVector) -> Result<()> {
    let small = v.at_level(v.max_abs().max(1))?;
    if engine.psi(&small)? != small {
        return Err(Error::Invariant(format!(
            "transported element {v:?} is not ψ-invariant"
        )));
    }
    Ok(())
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
    fn closed_forms() {
        assert_eq!(
            two_factor_canonical(&b("01"), &f(&[2, 2]))
                .unwrap()
                .to_string(),
            "M[2,2] + q*M[1,1]"
        );
        assert_eq!(
            two_factor_canonical(&b("10"), &f(&[2, 2]))
                .unwrap()
                .to_string(),
            "M[2,2] + q*M[3,3]"
        );
        assert_eq!(
            two_factor_canonical(&b("01"), &f(&[0, 4]))
                .unwrap()
                .to_string(),
            "M[0,4]"
        );
    }

    #[test]
    fn u_basis_roundtrip() {
        let seq = b("010");
        let v = FockVector::from_terms(
            &seq,
            2,
            [
                (f(&[1, 1, 0]), LaurentPoly::one()),
                (f(&[0, 0, 0]), LaurentPoly::q()),
                (f(&[2, 0, 1]), LaurentPoly::q()),
            ],
        )
        .unwrap();
        let x = to_u_basis(&v, 1, Flavor::U).unwrap();
        assert_eq!(x.terms.len(), 2);
        assert_eq!(from_u_basis(&x).unwrap(), v);
        let bad = FockVector::monomial(&b("10"), 1, &f(&[0, 0])).unwrap();
        assert!(matches!(
            to_u_basis(&bad, 1, Flavor::UPrime),
            Err(Error::NotInUSpan(_))
        ));
    }

    #[test]
    fn example_chain() {
        let e = Engine::default();
        let r = transport_canonical(
            &e,
            &b("101010"),
            &f(&[0, 0, 4, 2, 1, 3]),
            &TransportOptions::default(),
        )
        .unwrap();
        assert_eq!(r.word, vec![3, 4, 2]);
        assert_eq!(r.g, f(&[0, 4, 1, 0, 2, 3]));
        assert_eq!(r.steps[0].seq, b("110100"));
        assert_eq!(r.steps[0].f, f(&[0, 4, 0, 1, 2, 3]));
        let expected = FockVector::from_terms(
            &b("110100"),
            r.level,
            [
                (f(&[0, 4, 0, 1, 2, 3]), "1"),
                (f(&[4, 0, 0, 1, 2, 3]), "q"),
                (f(&[1, 4, 0, 0, 2, 3]), "q^2"),
                (f(&[1, 4, 1, 1, 2, 3]), "q"),
                (f(&[4, 1, 0, 0, 2, 3]), "q^3"),
                (f(&[4, 1, 1, 1, 2, 3]), "q^2"),
            ]
            .map(|(g, c)| (g, c.parse().unwrap())),
        )
        .unwrap();
        assert_eq!(r.steps[0].vector, expected);
        let direct =
            canonical::stabilized_canonical(&e, &b("101010"), &f(&[0, 0, 4, 2, 1, 3])).unwrap();
        assert!(direct.vector.same_terms(&r.result));
    }
}
