//! Truncated Fock spaces `T^b_{≤|k|}`: monomial basis, the left action of
//! the quantum group, the right Hecke action, `σ`, `H_0` and the K-basis of
//! the q-wedge subspace.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::order::{self, bruhat_leq, ParabolicPerm, WeightFunction, ZeroOneSequence};

/// A generator of `U_q(gl_∞)` acting on Fock space. `K(a, e)` is `K_a^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    E(i32),
    F(i32),
    K(i32, i32),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::E(a) => write!(f, "E_{a}"),
            Generator::F(a) => write!(f, "F_{a}"),
            Generator::K(a, 1) => write!(f, "K_{a}"),
            Generator::K(a, e) => write!(f, "K_{a}^{e}"),
        }
    }
}

/// A vector of `T^b_{≤|k|}` in the monomial basis `M_f`.
#[derive(Clone, PartialEq, Eq)]
pub struct FockVector {
    seq: ZeroOneSequence,
    level: i32,
    terms: BTreeMap<WeightFunction, LaurentPoly>,
}

impl FockVector {
    pub fn zero(seq: ZeroOneSequence, level: i32) -> Self {
        Self {
            seq,
            level,
            terms: BTreeMap::new(),
        }
    }

    /// `M_f`.
    pub fn monomial(seq: &ZeroOneSequence, level: i32, f: &WeightFunction) -> Result<Self> {
        let mut v = Self::zero(seq.clone(), level);
        v.add_term(f.clone(), &LaurentPoly::one())?;
        Ok(v)
    }

    pub fn from_terms<I>(seq: &ZeroOneSequence, level: i32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (WeightFunction, LaurentPoly)>,
    {
        let mut v = Self::zero(seq.clone(), level);
        for (f, c) in terms {
            v.add_term(f, &c)?;
        }
        Ok(v)
    }

    pub fn seq(&self) -> &ZeroOneSequence {
        &self.seq
    }

    pub fn level(&self) -> i32 {
        self.level
    }

    pub fn terms(&self) -> &BTreeMap<WeightFunction, LaurentPoly> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<WeightFunction, LaurentPoly> {
        self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeightFunction, &LaurentPoly)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(u, M_f)`: the coefficient at `f`.
    pub fn coefficient(&self, f: &WeightFunction) -> LaurentPoly {
        self.terms.get(f).cloned().unwrap_or_default()
    }

    /// Largest `|f(i)|` over the support.
    pub fn max_abs(&self) -> i32 {
        self.terms.keys().map(|f| f.max_abs()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, f: WeightFunction, c: &LaurentPoly) -> Result<()> {
        if f.len() != self.seq.len() {
            return Err(Error::LengthMismatch(format!(
                "{f:?} in a space over {:?}",
                self.seq
            )));
        }
        if !f.in_window(self.level) {
            return Err(Error::Truncation(format!(
                "{f:?} outside the level-{} window",
                self.level
            )));
        }
        self.add_unchecked(f, c);
        Ok(())
    }

    pub(crate) fn add_unchecked(&mut self, f: WeightFunction, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(f) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.seq != other.seq {
            return Err(Error::LengthMismatch(format!(
                "{:?} vs {:?}",
                self.seq, other.seq
            )));
        }
        if self.level != other.level {
            return Err(Error::Truncation(format!(
                "levels {} and {} differ",
                self.level, other.level
            )));
        }
        Ok(())
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        self.check_compatible(other)?;
        for (f, c) in &other.terms {
            self.add_unchecked(f.clone(), c);
        }
        Ok(())
    }

    pub fn add_scaled(&mut self, other: &Self, c: &LaurentPoly) -> Result<()> {
        self.check_compatible(other)?;
        self.add_scaled_unchecked(other, c);
        Ok(())
    }

    pub(crate) fn add_scaled_unchecked(&mut self, other: &Self, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        for (f, x) in &other.terms {
            self.add_unchecked(f.clone(), &(x * c));
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::constant(-1))?;
        Ok(out)
    }

    pub fn scaled(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.seq.clone(), self.level);
        out.add_scaled_unchecked(self, c);
        out
    }

    /// Coefficientwise `q -> q^-1`, indices untouched.
    pub fn bar_coefficients(&self) -> Self {
        Self {
            seq: self.seq.clone(),
            level: self.level,
            terms: self
                .terms
                .iter()
                .map(|(f, c)| (f.clone(), c.bar()))
                .collect(),
        }
    }

    /// `π_k`: drops every index outside the level-`k` window.
    pub fn truncate(&self, k: i32) -> Self {
        Self {
            seq: self.seq.clone(),
            level: k,
            terms: self
                .terms
                .iter()
                .filter(|(f, _)| f.in_window(k))
                .map(|(f, c)| (f.clone(), c.clone()))
                .collect(),
        }
    }

    /// The same vector viewed at another level; fails if the support does not fit.
    pub fn at_level(&self, k: i32) -> Result<Self> {
        if self.max_abs() > k {
            return Err(Error::Truncation(format!(
                "support reaches {} > {k}",
                self.max_abs()
            )));
        }
        Ok(Self {
            seq: self.seq.clone(),
            level: k,
            terms: self.terms.clone(),
        })
    }

    /// Equality of supports and coefficients, ignoring the level tag.
    pub fn same_terms(&self, other: &Self) -> bool {
        self.seq == other.seq && self.terms == other.terms
    }

    /// Terms ordered with larger elements of `≼_b` first.
    pub fn terms_top_down(&self) -> Vec<(&WeightFunction, &LaurentPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|x, y| {
            order::height(&self.seq, y.0)
                .cmp(&order::height(&self.seq, x.0))
                .then_with(|| y.0.cmp(x.0))
        });
        v
    }
}

impl fmt::Display for FockVector {
    /// e.g. `M[2,2] + q*M[1,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (g, c)) in self.terms_top_down().into_iter().enumerate() {
            let s = c.to_string();
            let (neg, body) = match (c.len(), s.strip_prefix('-')) {
                (1, Some(rest)) => (true, rest.to_string()),
                (1, None) => (false, s),
                _ => (false, format!("({s})")),
            };
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if body != "1" {
                write!(f, "{body}*")?;
            }
            write!(f, "M[{g}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} k={}] {}", self.seq, self.level, self)
    }
}

// Exponent of K_a on the basis vector with index x in a V slot (W negates it).
fn k_weight(is_w: bool, a: i32, x: i32) -> i32 {
    match (is_w, x == a) {
        (_, false) => 0,
        (false, true) => 1,
        (true, true) => -1,
    }
}

fn check_generator(g: Generator, k: i32) -> Result<()> {
    let ok = match g {
        Generator::E(a) | Generator::F(a) => -k <= a && a < k,
        Generator::K(a, _) => -k <= a && a <= k,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::GeneratorRange(format!("{g} on a level-{k} space")))
    }
}

/// Applies a generator to `u` through the iterated coproduct.
pub fn act(g: Generator, u: &FockVector) -> Result<FockVector> {
    check_generator(g, u.level)?;
    Ok(act_unchecked(g, u))
}

pub(crate) fn act_unchecked(g: Generator, u: &FockVector) -> FockVector {
    let b = &u.seq;
    let len = b.len();
    let mut out = FockVector::zero(b.clone(), u.level);
    for (f, c) in &u.terms {
        let vals = f.values();
        match g {
            Generator::K(a, e) => {
                let w: i32 = (0..len).map(|i| k_weight(b.is_w(i), a, vals[i])).sum();
                out.add_unchecked(f.clone(), &c.shift(w * e));
            }
            Generator::E(a) => {
                // K_{a+1,a} tail on slots right of the acting slot.
                let mut tail = 0;
                for i in (0..len).rev() {
                    let x = vals[i];
                    let w = b.is_w(i);
                    let img = if w {
                        (x == a).then_some(a + 1)
                    } else {
                        (x == a + 1).then_some(a)
                    };
                    if let Some(y) = img {
                        let mut h = vals.to_vec();
                        h[i] = y;
                        out.add_unchecked(WeightFunction(h), &c.shift(tail));
                    }
                    tail += k_weight(w, a + 1, x) - k_weight(w, a, x);
                }
            }
            Generator::F(a) => {
                // K_{a,a+1} head on slots left of the acting slot.
                let mut head = 0;
                for i in 0..len {
                    let x = vals[i];
                    let w = b.is_w(i);
                    let img = if w {
                        (x == a + 1).then_some(a)
                    } else {
                        (x == a).then_some(a + 1)
                    };
                    if let Some(y) = img {
                        let mut h = vals.to_vec();
                        h[i] = y;
                        out.add_unchecked(WeightFunction(h), &c.shift(head));
                    }
                    head += k_weight(w, a, x) - k_weight(w, a + 1, x);
                }
            }
        }
    }
    out
}

pub fn act_e(a: i32, u: &FockVector) -> Result<FockVector> {
    act(Generator::E(a), u)
}

pub fn act_f(a: i32, u: &FockVector) -> Result<FockVector> {
    act(Generator::F(a), u)
}

pub fn act_k(a: i32, u: &FockVector) -> Result<FockVector> {
    act(Generator::K(a, 1), u)
}

pub fn act_k_inverse(a: i32, u: &FockVector) -> Result<FockVector> {
    act(Generator::K(a, -1), u)
}

fn check_hecke_index(b: &ZeroOneSequence, i: usize) -> Result<()> {
    if i == 0 || i >= b.len() {
        return Err(Error::IndexOutOfRange(format!("H_{i} for {b:?}")));
    }
    if !b.is_parabolic_generator(i) {
        return Err(Error::BoundaryGenerator(format!(
            "H_{i} crosses a block boundary of {b:?}"
        )));
    }
    Ok(())
}

/// `u·H_i` for `s_i ∈ S^b` (1-based).
pub fn hecke_act(u: &FockVector, i: usize) -> Result<FockVector> {
    check_hecke_index(&u.seq, i)?;
    let b = &u.seq;
    let q_minus = &LaurentPoly::q() - &LaurentPoly::q().bar();
    let mut out = FockVector::zero(b.clone(), u.level);
    for (f, c) in &u.terms {
        let g = f.swapped(i);
        if &g == f {
            out.add_unchecked(g, &c.shift(-1));
        } else if bruhat_leq(b, f, &g) {
            out.add_unchecked(g, c);
        } else {
            out.add_unchecked(g, c);
            out.add_unchecked(f.clone(), &-(c * &q_minus));
        }
    }
    Ok(out)
}

/// `u·(H_i + q - q^-1)`, the Hecke bar of `H_i`.
pub fn hecke_bar_act(u: &FockVector, i: usize) -> Result<FockVector> {
    let mut out = hecke_act(u, i)?;
    let q_minus = &LaurentPoly::q() - &LaurentPoly::q().bar();
    out.add_scaled_unchecked(u, &q_minus);
    Ok(out)
}

/// A formal combination `Σ c_x H_x` over `x ∈ S^b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeWordElement {
    seq: ZeroOneSequence,
    terms: BTreeMap<ParabolicPerm, LaurentPoly>,
}

impl HeckeWordElement {
    pub fn new(seq: &ZeroOneSequence) -> Self {
        Self {
            seq: seq.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, x: ParabolicPerm, c: LaurentPoly) -> Result<()> {
        let blocks = self.seq.blocks();
        let preserved = x.one_line.len() == self.seq.len()
            && blocks
                .iter()
                .all(|r| r.clone().all(|i| r.contains(&x.one_line[i])));
        if !preserved {
            return Err(Error::Domain(format!(
                "{x:?} is not in S^b for {:?}",
                self.seq
            )));
        }
        let e = self.terms.entry(x).or_default();
        *e += &c;
        Ok(())
    }

    /// `H_0 = Σ_{w ∈ S^b} (-q)^{ℓ(w) - ℓ(w_0)} H_w`.
    pub fn h0(seq: &ZeroOneSequence) -> Self {
        let top = ParabolicPerm::longest(seq).length() as i32;
        let mut out = Self::new(seq);
        for w in ParabolicPerm::all_parabolic(seq) {
            let e = w.length() as i32 - top;
            out.terms.insert(w, LaurentPoly::neg_q_pow(e));
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<ParabolicPerm, LaurentPoly> {
        &self.terms
    }

    /// `u·X`, each `H_x` applied along a reduced word.
    pub fn apply(&self, u: &FockVector) -> Result<FockVector> {
        if u.seq != self.seq {
            return Err(Error::LengthMismatch(format!(
                "{:?} vs {:?}",
                u.seq, self.seq
            )));
        }
        let mut out = FockVector::zero(u.seq.clone(), u.level);
        for (x, c) in &self.terms {
            let mut v = u.clone();
            for i in x.reduced_word() {
                v = hecke_act(&v, i)?;
            }
            out.add_scaled_unchecked(&v, c);
        }
        Ok(out)
    }
}

/// `K_g = M_{g·w_0} H_0`, expanded as `Σ_w (-q)^{ℓ(w)-ℓ(w_0)} M_{g·w_0·w}`;
/// zero unless `g` is b-dominant.
pub fn k_element(seq: &ZeroOneSequence, level: i32, g: &WeightFunction) -> Result<FockVector> {
    let perms = ParabolicPerm::all_parabolic(seq);
    let mut out = FockVector::zero(seq.clone(), level);
    add_k_element(&mut out, &perms, g, &LaurentPoly::one())?;
    Ok(out)
}

fn add_k_element(
    out: &mut FockVector,
    perms: &[ParabolicPerm],
    g: &WeightFunction,
    c: &LaurentPoly,
) -> Result<()> {
    let seq = out.seq.clone();
    if !order::is_dominant(&seq, g) {
        return Ok(());
    }
    let top = ParabolicPerm::longest(&seq).length() as i32;
    let base = g.block_reversed(&seq);
    for w in perms {
        let e = w.length() as i32 - top;
        out.add_term(base.permuted(w), &(c * &LaurentPoly::neg_q_pow(e)))?;
    }
    Ok(())
}

/// `u·H_0` via `M_f H_0 = (-q)^{ℓ(x)} K_{f·x·w_0}`.
pub fn h0_act(u: &FockVector) -> Result<FockVector> {
    let seq = u.seq.clone();
    let perms = ParabolicPerm::all_parabolic(&seq);
    let mut out = FockVector::zero(seq.clone(), u.level);
    for (f, c) in &u.terms {
        let (x, len) = order::minimal_antidominant_rep(&seq, f)?;
        let g = f.permuted(&x).block_reversed(&seq);
        add_k_element(
            &mut out,
            &perms,
            &g,
            &(c * &LaurentPoly::neg_q_pow(len as i32)),
        )?;
    }
    Ok(out)
}

/// Brute-force `u·H_0` through [`HeckeWordElement::h0`].
pub fn h0_act_bruteforce(u: &FockVector) -> Result<FockVector> {
    HeckeWordElement::h0(&u.seq).apply(u)
}

/// Coordinates of `u` in the basis `{K_g}` of the q-wedge space.
pub fn k_basis_decompose(u: &FockVector) -> Result<BTreeMap<WeightFunction, LaurentPoly>> {
    let seq = u.seq.clone();
    let coords: BTreeMap<WeightFunction, LaurentPoly> = u
        .terms
        .iter()
        .filter(|(f, _)| order::is_dominant(&seq, f))
        .map(|(f, c)| (f.clone(), c.clone()))
        .collect();
    let perms = ParabolicPerm::all_parabolic(&seq);
    let mut rebuilt = FockVector::zero(seq.clone(), u.level);
    for (g, c) in &coords {
        add_k_element(&mut rebuilt, &perms, g, c)?;
    }
    if rebuilt != *u {
        return Err(Error::NotInWedgeSpace(format!("{u:?}")));
    }
    Ok(coords)
}

/// `Σ_g c_g K_g`.
pub fn k_basis_compose(
    seq: &ZeroOneSequence,
    level: i32,
    coords: &BTreeMap<WeightFunction, LaurentPoly>,
) -> Result<FockVector> {
    let perms = ParabolicPerm::all_parabolic(seq);
    let mut out = FockVector::zero(seq.clone(), level);
    for (g, c) in coords {
        if !order::is_dominant(seq, g) {
            return Err(Error::Dominance(format!("{g:?} for {seq:?}")));
        }
        add_k_element(&mut out, &perms, g, c)?;
    }
    Ok(out)
}

/// `σ(M_f) = M_{-f}`, antilinear.
pub fn sigma_map(u: &FockVector) -> FockVector {
    FockVector {
        seq: u.seq.clone(),
        level: u.level,
        terms: u
            .terms
            .iter()
            .map(|(f, c)| (f.negated(), c.bar()))
            .collect(),
    }
}

/// The symmetric bilinear form with `(M_f, M_g) = δ_{f,g}`.
pub fn monomial_pairing(u: &FockVector, v: &FockVector) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    let (small, large) = if u.len() <= v.len() { (u, v) } else { (v, u) };
    for (f, c) in &small.terms {
        if let Some(d) = large.terms.get(f) {
            acc += &(c * d);
        }
    }
    acc
}

/// `Π_k [r_k - r_{k-1}]!` over the blocks of `b`.
pub fn block_factorial(seq: &ZeroOneSequence) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for r in seq.blocks() {
        acc = &acc * &LaurentPoly::quantum_factorial(r.len() as i64).expect("nonnegative");
    }
    acc
}

/// `c` with `H_0^2 = c H_0`, namely `(-1)^{ℓ(w_0)} Π_k [r_k - r_{k-1}]!`.
pub fn h0_square_factor(seq: &ZeroOneSequence) -> LaurentPoly {
    let fact = block_factorial(seq);
    if ParabolicPerm::longest(seq).length() % 2 == 1 {
        -fact
    } else {
        fact
    }
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
    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }
    fn m(seq: &str, k: i32, v: &[i32]) -> FockVector {
        FockVector::monomial(&b(seq), k, &f(v)).unwrap()
    }
    fn vec_of(seq: &str, k: i32, terms: &[(&[i32], &str)]) -> FockVector {
        FockVector::from_terms(&b(seq), k, terms.iter().map(|(v, c)| (f(v), p(c)))).unwrap()
    }

    #[test]
    fn single_factor_actions() {
        assert_eq!(act_e(0, &m("0", 1, &[1])).unwrap(), m("0", 1, &[0]));
        assert_eq!(act_e(0, &m("1", 1, &[0])).unwrap(), m("1", 1, &[1]));
        assert_eq!(act_f(0, &m("0", 1, &[0])).unwrap(), m("0", 1, &[1]));
        assert_eq!(act_f(0, &m("1", 1, &[1])).unwrap(), m("1", 1, &[0]));
        assert_eq!(
            act_k(0, &m("1", 1, &[0])).unwrap(),
            vec_of("1", 1, &[(&[0], "q^-1")])
        );
    }

    #[test]
    fn coproduct_orientation() {
        let got = act_e(0, &m("00", 1, &[1, 1])).unwrap();
        assert_eq!(got, vec_of("00", 1, &[(&[1, 0], "1"), (&[0, 1], "q")]));
        let got = act_f(0, &m("00", 1, &[0, 0])).unwrap();
        assert_eq!(got, vec_of("00", 1, &[(&[1, 0], "1"), (&[0, 1], "q")]));
    }

    #[test]
    fn generator_range() {
        assert!(matches!(
            act_e(1, &m("0", 1, &[0])),
            Err(Error::GeneratorRange(_))
        ));
        assert!(matches!(
            act_f(-2, &m("0", 1, &[0])),
            Err(Error::GeneratorRange(_))
        ));
        assert!(act_k(1, &m("0", 1, &[0])).is_ok());
    }

    #[test]
    fn hecke_cases() {
        assert_eq!(
            hecke_act(&m("00", 2, &[1, 2]), 1).unwrap(),
            m("00", 2, &[2, 1])
        );
        assert_eq!(
            hecke_act(&m("00", 2, &[1, 1]), 1).unwrap(),
            vec_of("00", 2, &[(&[1, 1], "q^-1")])
        );
        assert_eq!(
            hecke_act(&m("00", 2, &[2, 1]), 1).unwrap(),
            vec_of("00", 2, &[(&[1, 2], "1"), (&[2, 1], "-q+q^-1")])
        );
        assert!(matches!(
            hecke_act(&m("01", 2, &[1, 2]), 1),
            Err(Error::BoundaryGenerator(_))
        ));
    }

    #[test]
    fn h0_examples() {
        assert!(h0_act(&m("00", 2, &[1, 1])).unwrap().is_zero());
        let k21 = vec_of("00", 2, &[(&[2, 1], "1"), (&[1, 2], "-q^-1")]);
        assert_eq!(k_element(&b("00"), 2, &f(&[2, 1])).unwrap(), k21);
        assert_eq!(h0_act(&m("00", 2, &[1, 2])).unwrap(), k21);
        assert_eq!(h0_act(&m("00", 2, &[2, 1])).unwrap(), k21.scaled(&p("-q")));
        for v in [&[1, 2][..], &[2, 1], &[1, 1]] {
            assert_eq!(
                h0_act(&m("00", 2, v)).unwrap(),
                h0_act_bruteforce(&m("00", 2, v)).unwrap()
            );
        }
    }

    #[test]
    fn k_basis_roundtrip() {
        let k21 = k_element(&b("00"), 2, &f(&[2, 1])).unwrap();
        let coords = k_basis_decompose(&k21).unwrap();
        assert_eq!(coords.len(), 1);
        assert!(coords[&f(&[2, 1])].is_one());
        assert!(k_basis_decompose(&FockVector::zero(b("00"), 2))
            .unwrap()
            .is_empty());
        let c = k_basis_decompose(&h0_act(&m("00", 2, &[2, 1])).unwrap()).unwrap();
        assert_eq!(c[&f(&[2, 1])], p("-q"));
        assert!(matches!(
            k_basis_decompose(&m("00", 2, &[2, 1])),
            Err(Error::NotInWedgeSpace(_))
        ));
    }

    #[test]
    fn sigma_and_coefficients() {
        let u = vec_of("00", 2, &[(&[1, 2], "q")]);
        assert_eq!(sigma_map(&u), vec_of("00", 2, &[(&[-1, -2], "q^-1")]));
        let w = vec_of("00", 2, &[(&[0, 1], "1"), (&[1, 0], "q")]);
        assert_eq!(sigma_map(&sigma_map(&w)), w);
        assert_eq!(w.coefficient(&f(&[1, 0])), p("q"));
        assert!(w.coefficient(&f(&[1, 1])).is_zero());
    }

    #[test]
    fn rendering() {
        let w = vec_of("01", 2, &[(&[2, 2], "1"), (&[1, 1], "q")]);
        assert_eq!(w.to_string(), "M[2,2] + q*M[1,1]");
        let w = vec_of("00", 1, &[(&[1, 0], "1"), (&[0, 1], "-q^-1")]);
        assert_eq!(w.to_string(), "M[1,0] - q^-1*M[0,1]");
        let w = vec_of("00", 1, &[(&[1, 0], "1"), (&[0, 1], "q-q^-1")]);
        assert_eq!(w.to_string(), "M[1,0] + (q-q^-1)*M[0,1]");
    }
}
