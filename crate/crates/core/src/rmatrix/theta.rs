//! The quasi-R-matrix `Θ^(k) = Θ_[N] ... Θ_[1]` for the level-`k` Levi
//! subalgebra, as an ordered list of root-vector pairs.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fock::{self, FockVector, Generator};
use crate::laurent::LaurentPoly;
use crate::order::{WeightFunction, ZeroOneSequence};
use crate::rmatrix::expr::UExpression;

/// How the reduced word for the longest element of `S_{[-k,k]}` is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WordScheme {
    /// `(s_{-k})(s_{-k+1} s_{-k})...(s_{k-1}...s_{-k})`.
    Descending,
    /// The image of `Descending` under `s_a -> s_{-1-a}`.
    Mirrored,
}

impl WordScheme {
    pub const ALL: [WordScheme; 2] = [WordScheme::Descending, WordScheme::Mirrored];

    pub fn name(self) -> &'static str {
        match self {
            WordScheme::Descending => "descending",
            WordScheme::Mirrored => "mirrored",
        }
    }

    pub fn word(self, k: i32) -> Vec<i32> {
        let mut word = Vec::with_capacity((k * (2 * k + 1)) as usize);
        for p in 0..2 * k {
            for i in 0..=p {
                word.push(-k + p - i);
            }
        }
        if self == WordScheme::Mirrored {
            for a in &mut word {
                *a = -1 - *a;
            }
        }
        word
    }
}

impl FromStr for WordScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|w| w.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "reduced word scheme",
                name: s.to_string(),
                available: Self::ALL.map(|w| w.name()).join(", "),
            })
    }
}

impl fmt::Display for WordScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One-line notation of a permutation of `{-k..k}` stored at offset `k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Perm {
    k: i32,
    v: Vec<i32>,
}

impl Perm {
    fn identity(k: i32) -> Self {
        Self {
            k,
            v: (-k..=k).collect(),
        }
    }

    fn at(&self, i: i32) -> i32 {
        self.v[(i + self.k) as usize]
    }

    /// `self · s_a`.
    fn times(&self, a: i32) -> Self {
        let mut v = self.v.clone();
        v.swap((a + self.k) as usize, (a + 1 + self.k) as usize);
        Self { k: self.k, v }
    }

    fn is_identity(&self) -> bool {
        self.v.iter().zip(-self.k..).all(|(x, i)| *x == i)
    }

    fn max_descent(&self) -> Option<i32> {
        (-self.k..self.k)
            .rev()
            .find(|&a| self.at(a) > self.at(a + 1))
    }
}

/// Whether `word` is a reduced expression of the longest element of `S_{[-k,k]}`.
pub fn is_reduced_longest(word: &[i32], k: i32) -> bool {
    if word.len() != (k * (2 * k + 1)) as usize || word.iter().any(|&a| a < -k || a >= k) {
        return false;
    }
    let mut w = Perm::identity(k);
    for &a in word {
        if w.at(a) > w.at(a + 1) {
            return false;
        }
        w = w.times(a);
    }
    true
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Kind {
    E,
    F,
}

/// `T_w(X_i)` for `w(α_i) > 0`, built by peeling the largest right descent
/// `a` of `w`. When `|a - i| = 1` either the rank-two formula applies, or
/// `w s_a (α_i) < 0` and the identity `T_i T_a (X_i) = X_a` reduces the length.
struct RootVectors {
    memo: HashMap<(Kind, Vec<i32>, i32), UExpression>,
}

impl RootVectors {
    fn root(&mut self, kind: Kind, w: &Perm, i: i32) -> UExpression {
        let key = (kind, w.v.clone(), i);
        if let Some(x) = self.memo.get(&key) {
            return x.clone();
        }
        let res = if w.is_identity() {
            UExpression::generator(match kind {
                Kind::E => Generator::E(i),
                Kind::F => Generator::F(i),
            })
        } else {
            let a = w
                .max_descent()
                .expect("non-identity permutation has a descent");
            let w1 = w.times(a);
            if (a - i).abs() > 1 {
                self.root(kind, &w1, i)
            } else if w1.at(i) < w1.at(i + 1) {
                let x = self.root(kind, &w1, i);
                let y = self.root(kind, &w1, a);
                match kind {
                    Kind::E => {
                        UExpression::twisted_commutator(&x, &y, &LaurentPoly::monomial(-1, -1))
                    }
                    Kind::F => {
                        UExpression::twisted_commutator(&y, &x, &LaurentPoly::monomial(1, -1))
                    }
                }
            } else {
                self.root(kind, &w1.times(i), a)
            }
        };
        self.memo.insert(key, res.clone());
        res
    }
}

/// A trie over words read right to left, so shared suffixes are applied once.
#[derive(Default)]
struct Trie {
    coeff: LaurentPoly,
    children: Vec<(Generator, Trie)>,
}

impl Trie {
    fn build(e: &UExpression) -> Self {
        let mut root = Trie::default();
        for (w, c) in e.terms() {
            let mut node = &mut root;
            for g in w.iter().rev() {
                let pos = match node.children.iter().position(|(h, _)| h == g) {
                    Some(p) => p,
                    None => {
                        node.children.push((*g, Trie::default()));
                        node.children.len() - 1
                    }
                };
                node = &mut node.children[pos].1;
            }
            node.coeff += c;
        }
        root
    }

    fn apply_into(&self, v: &FockVector, out: &mut FockVector) {
        out.add_scaled_unchecked(v, &self.coeff);
        for (g, child) in &self.children {
            let w = fock::act_unchecked(*g, v);
            if !w.is_zero() {
                child.apply_into(&w, out);
            }
        }
    }

    fn apply(&self, v: &FockVector) -> FockVector {
        let mut out = FockVector::zero(v.seq().clone(), v.level());
        self.apply_into(v, &mut out);
        out
    }
}

/// Nonzero entries `(source, target, coefficient)` of an operator on a single factor.
type SingleFactorOp = Vec<(i32, i32, LaurentPoly)>;

/// `(Eβ_t, Fβ_t)` for one position of the reduced word.
pub struct RootPair {
    pub t: usize,
    pub letter: i32,
    /// `β_t = ε_i - ε_j` as `(i, j)`.
    pub root: (i32, i32),
    pub e: UExpression,
    pub f: UExpression,
    e_trie: Trie,
    f_trie: Trie,
    /// Indexed by `b` of the single factor (0 = V, 1 = W).
    e_single: [SingleFactorOp; 2],
    f_single: [SingleFactorOp; 2],
}

#[derive(Serialize)]
pub struct ThetaRecord {
    pub t: usize,
    pub a_t: i32,
    pub e: String,
    pub f: String,
}

pub struct ThetaFactorization {
    level: i32,
    word: Vec<i32>,
    pairs: Vec<RootPair>,
}

fn single_factor_op(expr: &UExpression, k: i32, bit: u8) -> SingleFactorOp {
    let seq = ZeroOneSequence::new(vec![bit]).expect("valid");
    let trie = Trie::build(expr);
    let mut out = Vec::new();
    for x in -k..=k {
        let v = FockVector::monomial(&seq, k, &WeightFunction(vec![x])).expect("in window");
        for (g, c) in trie.apply(&v).iter() {
            out.push((x, g.values()[0], c.clone()));
        }
    }
    out
}

impl ThetaFactorization {
    pub fn build(k: i32, scheme: WordScheme) -> Result<Self> {
        Self::with_word(k, scheme.word(k))
    }

    pub fn with_word(k: i32, word: Vec<i32>) -> Result<Self> {
        if k < 1 {
            return Err(Error::Domain(format!("level {k} must be positive")));
        }
        if !is_reduced_longest(&word, k) {
            return Err(Error::Domain(format!(
                "{word:?} is not a reduced word for the longest element at level {k}"
            )));
        }
        let mut roots = RootVectors {
            memo: HashMap::new(),
        };
        let mut w = Perm::identity(k);
        let mut pairs = Vec::with_capacity(word.len());
        for (t, &a) in word.iter().enumerate() {
            let e = roots.root(Kind::E, &w, a);
            let f = roots.root(Kind::F, &w, a);
            pairs.push(RootPair {
                t: t + 1,
                letter: a,
                root: (w.at(a), w.at(a + 1)),
                e_trie: Trie::build(&e),
                f_trie: Trie::build(&f),
                e_single: [single_factor_op(&e, k, 0), single_factor_op(&e, k, 1)],
                f_single: [single_factor_op(&f, k, 0), single_factor_op(&f, k, 1)],
                e,
                f,
            });
            w = w.times(a);
        }
        Ok(Self {
            level: k,
            word,
            pairs,
        })
    }

    pub fn level(&self) -> i32 {
        self.level
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn pairs(&self) -> &[RootPair] {
        &self.pairs
    }

    pub fn records(&self) -> Vec<ThetaRecord> {
        self.pairs
            .iter()
            .map(|p| ThetaRecord {
                t: p.t,
                a_t: p.letter,
                e: p.e.to_string(),
                f: p.f.to_string(),
            })
            .collect()
    }

    fn check_level(&self, u: &FockVector) -> Result<()> {
        if u.level() != self.level {
            return Err(Error::Truncation(format!(
                "Θ at level {} applied to a level-{} vector",
                self.level,
                u.level()
            )));
        }
        if u.seq().len() < 2 {
            return Err(Error::Domain("Θ needs at least two tensor factors".into()));
        }
        Ok(())
    }

    /// `Θ(u ⊗ v)` for a single right factor `v`.
    pub fn apply(&self, u: &FockVector, v: &FockVector) -> Result<FockVector> {
        if u.level() != v.level() || u.level() != self.level {
            return Err(Error::Truncation("level mismatch".into()));
        }
        if v.seq().len() != 1 {
            return Err(Error::Domain(
                "right tensor factor must be a single V or W".into(),
            ));
        }
        let mut entries = u.seq().entries().to_vec();
        entries.push(v.seq().entries()[0]);
        let seq = ZeroOneSequence::new(entries)?;
        let mut w = FockVector::zero(seq, self.level);
        for (f, c) in u.iter() {
            for (g, d) in v.iter() {
                let mut h = f.values().to_vec();
                h.push(g.values()[0]);
                w.add_unchecked(WeightFunction(h), &(c * d));
            }
        }
        self.apply_split_last(&w)
    }

    /// `Θ` on `T^{b'} ⊗ (last factor)`, with `E`-parts acting on `b'`.
    pub fn apply_split_last(&self, w: &FockVector) -> Result<FockVector> {
        self.check_level(w)?;
        let seq = w.seq();
        let len = seq.len();
        let left_seq = seq.prefix(len - 1);
        let bit = seq.entries()[len - 1] as usize;
        let mut state: BTreeMap<i32, FockVector> = BTreeMap::new();
        for (f, c) in w.iter() {
            let v = f.values();
            state
                .entry(v[len - 1])
                .or_insert_with(|| FockVector::zero(left_seq.clone(), self.level))
                .add_unchecked(WeightFunction(v[..len - 1].to_vec()), c);
        }
        self.run(&mut state, |p| (&p.f_single[bit], &p.e_trie));
        let mut out = FockVector::zero(seq.clone(), self.level);
        for (j, x) in state {
            for (f, c) in x.iter() {
                let mut h = f.values().to_vec();
                h.push(j);
                out.add_unchecked(WeightFunction(h), c);
            }
        }
        Ok(out)
    }

    /// `Θ` on `(first factor) ⊗ T^{b''}`, with `F`-parts acting on `b''`.
    pub fn apply_split_first(&self, w: &FockVector) -> Result<FockVector> {
        self.check_level(w)?;
        let seq = w.seq();
        let right_seq = seq.suffix(1);
        let bit = seq.entries()[0] as usize;
        let mut state: BTreeMap<i32, FockVector> = BTreeMap::new();
        for (f, c) in w.iter() {
            let v = f.values();
            state
                .entry(v[0])
                .or_insert_with(|| FockVector::zero(right_seq.clone(), self.level))
                .add_unchecked(WeightFunction(v[1..].to_vec()), c);
        }
        self.run(&mut state, |p| (&p.e_single[bit], &p.f_trie));
        let mut out = FockVector::zero(seq.clone(), self.level);
        for (j, x) in state {
            for (f, c) in x.iter() {
                let mut h = Vec::with_capacity(seq.len());
                h.push(j);
                h.extend_from_slice(f.values());
                out.add_unchecked(WeightFunction(h), c);
            }
        }
        Ok(out)
    }

    /// Applies `Θ_[1]`, then `Θ_[2]`, ... Each factor is
    /// `1 + (q - q^-1) X ⊗ Y`, where `X ⊗ Y` is split into an operator on the
    /// single factor (indexing `state`) and a trie acting on the rest.
    fn run<'a>(
        &'a self,
        state: &mut BTreeMap<i32, FockVector>,
        pick: impl Fn(&'a RootPair) -> (&'a SingleFactorOp, &'a Trie),
    ) {
        let q_minus = &LaurentPoly::q() - &LaurentPoly::q().bar();
        for pair in &self.pairs {
            let (single, trie) = pick(pair);
            let mut updates = Vec::new();
            for (src, dst, c) in single {
                if let Some(x) = state.get(src) {
                    let y = trie.apply(x);
                    if !y.is_zero() {
                        updates.push((*dst, y, c * &q_minus));
                    }
                }
            }
            for (dst, y, c) in updates {
                let zero = FockVector::zero(y.seq().clone(), self.level);
                state
                    .entry(dst)
                    .or_insert(zero)
                    .add_scaled_unchecked(&y, &c);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmatrix::expr::braid_t;

    #[test]
    fn words() {
        for k in 1..=4 {
            for s in WordScheme::ALL {
                let w = s.word(k);
                assert_eq!(w.len(), (k * (2 * k + 1)) as usize);
                assert!(is_reduced_longest(&w, k));
            }
        }
        assert_eq!(WordScheme::Descending.word(1), vec![-1, 0, -1]);
        assert!(!is_reduced_longest(&[-1, -1, 0], 1));
    }

    #[test]
    fn first_pair_is_simple() {
        let th = ThetaFactorization::build(1, WordScheme::Descending).unwrap();
        assert_eq!(th.pairs()[0].e, UExpression::generator(Generator::E(-1)));
        assert_eq!(th.pairs()[0].f, UExpression::generator(Generator::F(-1)));
        assert_eq!(
            ThetaFactorization::build(2, WordScheme::Descending)
                .unwrap()
                .word()
                .len(),
            10
        );
    }

    #[test]
    fn root_vectors_match_iterated_braid_action() {
        // Literal T_{a_1}...T_{a_{t-1}}(X_{a_t}), compared as operators on small modules.
        for k in 1..=2 {
            let th = ThetaFactorization::build(k, WordScheme::Descending).unwrap();
            let word = th.word().to_vec();
            for p in th.pairs().iter().take(if k == 1 { 3 } else { 6 }) {
                let mut e = UExpression::generator(Generator::E(p.letter));
                let mut f = UExpression::generator(Generator::F(p.letter));
                for &a in word[..p.t - 1].iter().rev() {
                    e = braid_t(a, &e);
                    f = braid_t(a, &f);
                }
                for s in ["0", "1", "00", "01", "10", "11"] {
                    let seq: ZeroOneSequence = s.parse().unwrap();
                    for g in crate::order::window(seq.len(), k) {
                        let v = FockVector::monomial(&seq, k, &g).unwrap();
                        assert_eq!(
                            e.apply(&v).unwrap(),
                            p.e.apply(&v).unwrap(),
                            "E t={} {s} {g:?}",
                            p.t
                        );
                        assert_eq!(
                            f.apply(&v).unwrap(),
                            p.f.apply(&v).unwrap(),
                            "F t={} {s} {g:?}",
                            p.t
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn single_factor_root_vectors_are_matrix_units() {
        let th = ThetaFactorization::build(1, WordScheme::Descending).unwrap();
        for p in th.pairs() {
            for bit in 0..2 {
                assert_eq!(p.f_single[bit].len(), 1);
                let (src, dst, c) = &p.f_single[bit][0];
                let (i, j) = p.root;
                if bit == 0 {
                    assert_eq!((*src, *dst), (i, j));
                } else {
                    assert_eq!((*src, *dst), (j, i));
                }
                let (_, x) = c.as_monomial().unwrap();
                assert!(x == &1.into() || x == &(-1).into());
            }
        }
    }

    #[test]
    fn theta_on_two_v_factors() {
        let th = ThetaFactorization::build(1, WordScheme::Descending).unwrap();
        let s0: ZeroOneSequence = "0".parse().unwrap();
        let v = |x| FockVector::monomial(&s0, 1, &WeightFunction(vec![x])).unwrap();
        let got = th.apply(&v(0), &v(1)).unwrap();
        assert_eq!(got.to_string(), "M[0,1]");
        let got = th.apply(&v(1), &v(0)).unwrap();
        assert_eq!(got.to_string(), "M[1,0] + (q-q^-1)*M[0,1]");
    }
}
