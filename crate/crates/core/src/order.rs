//! 0/1 sequences, weight functions, the Bruhat order `≼_b` and the
//! parabolic symmetric groups acting blockwise.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A sequence `b` of `m` zeros (`V` factors) and `n` ones (`W` factors).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZeroOneSequence(Vec<u8>);

impl ZeroOneSequence {
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Domain("empty 0/1 sequence".into()));
        }
        if let Some(x) = entries.iter().find(|&&x| x > 1) {
            return Err(Error::Domain(format!("sequence entry {x} is not 0 or 1")));
        }
        Ok(Self(entries))
    }

    /// `b_st = (1^n, 0^m)`.
    pub fn standard(m: usize, n: usize) -> Self {
        let mut v = vec![1u8; n];
        v.extend(std::iter::repeat_n(0u8, m));
        Self(v)
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn m(&self) -> usize {
        self.0.iter().filter(|&&x| x == 0).count()
    }

    pub fn n(&self) -> usize {
        self.0.iter().filter(|&&x| x == 1).count()
    }

    /// Whether slot `i` (0-based) is a `W` factor.
    pub fn is_w(&self, i: usize) -> bool {
        self.0[i] == 1
    }

    /// `(-1)^{b_i}` for a 0-based slot.
    pub fn sign(&self, i: usize) -> i32 {
        if self.0[i] == 0 {
            1
        } else {
            -1
        }
    }

    /// Maximal constant runs as 0-based ranges.
    pub fn blocks(&self) -> Vec<Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        for i in 1..=self.0.len() {
            if i == self.0.len() || self.0[i] != self.0[start] {
                out.push(start..i);
                start = i;
            }
        }
        out
    }

    /// Block boundaries `r_1 < ... < r_{d-1}` (1-based positions after which a block ends).
    pub fn boundaries(&self) -> Vec<usize> {
        (1..self.0.len())
            .filter(|&i| self.0[i - 1] != self.0[i])
            .collect()
    }

    /// Whether `s_i` (1-based, swapping slots `i`, `i+1`) lies in `S^b`.
    pub fn is_parabolic_generator(&self, i: usize) -> bool {
        i >= 1 && i < self.0.len() && self.0[i - 1] == self.0[i]
    }

    /// Prefix of the first `len` entries.
    pub fn prefix(&self, len: usize) -> Self {
        Self(self.0[..len].to_vec())
    }

    pub fn suffix(&self, start: usize) -> Self {
        Self(self.0[start..].to_vec())
    }

    pub fn is_standard(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl FromStr for ZeroOneSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut v = Vec::with_capacity(s.len());
        for (pos, ch) in s.trim().chars().enumerate() {
            match ch {
                '0' => v.push(0),
                '1' => v.push(1),
                ',' | ' ' => {}
                _ => {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("unexpected `{ch}` in 0/1 sequence"),
                    })
                }
            }
        }
        Self::new(v)
    }
}

impl fmt::Display for ZeroOneSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ZeroOneSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b={self}")
    }
}

/// A function `{1..m+n} -> Z`, stored as the tuple of its values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightFunction(pub Vec<i32>);

impl WeightFunction {
    pub fn new(values: Vec<i32>) -> Self {
        Self(values)
    }

    pub fn values(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_abs(&self) -> i32 {
        self.0.iter().map(|x| x.abs()).max().unwrap_or(0)
    }

    pub fn in_window(&self, k: i32) -> bool {
        self.max_abs() <= k
    }

    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|x| -x).collect())
    }

    /// `f·x`, i.e. `i -> f(x(i))`.
    pub fn permuted(&self, x: &ParabolicPerm) -> Self {
        Self(x.one_line.iter().map(|&j| self.0[j]).collect())
    }

    /// `f·s_i` for a 1-based adjacent transposition.
    pub fn swapped(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Self(v)
    }

    /// `f·w_0`: every block of `b` reversed.
    pub fn block_reversed(&self, b: &ZeroOneSequence) -> Self {
        let mut v = self.0.clone();
        for r in b.blocks() {
            v[r].reverse();
        }
        Self(v)
    }
}

impl FromStr for WeightFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        let mut pos = 0;
        for part in s.split(',') {
            let t = part.trim();
            match t.parse::<i32>() {
                Ok(v) => out.push(v),
                Err(_) => {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("bad integer `{t}`"),
                    })
                }
            }
            pos += part.len() + 1;
        }
        Ok(Self(out))
    }
}

impl fmt::Display for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// An element of the weight lattice, `Σ c_a ε_a`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegralWeight(BTreeMap<i32, i32>);

impl IntegralWeight {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn epsilon(a: i32) -> Self {
        let mut w = Self::zero();
        w.add_epsilon(a, 1);
        w
    }

    pub fn add_epsilon(&mut self, a: i32, c: i32) {
        let e = self.0.entry(a).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&a);
        }
    }

    pub fn coeff(&self, a: i32) -> i32 {
        self.0.get(&a).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, i32)> + '_ {
        self.0.iter().map(|(a, c)| (*a, *c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, c) in other.iter() {
            out.add_epsilon(a, -c);
        }
        out
    }
}

impl fmt::Debug for IntegralWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.0.iter().map(|(a, c)| format!("{c}ε{a}")).collect();
        f.write_str(&parts.join("+"))
    }
}

fn check_lengths(b: &ZeroOneSequence, f: &WeightFunction) -> Result<()> {
    if b.len() != f.len() {
        return Err(Error::LengthMismatch(format!(
            "{b:?} has length {}, {f:?} has length {}",
            b.len(),
            f.len()
        )));
    }
    Ok(())
}

/// `wt^j_b(f) = Σ_{i ≥ j} (-1)^{b_i} ε_{f(i)}`, with `j` 1-based.
pub fn wt_prefix(b: &ZeroOneSequence, f: &WeightFunction, j: usize) -> Result<IntegralWeight> {
    check_lengths(b, f)?;
    if j == 0 || j > b.len() {
        return Err(Error::IndexOutOfRange(format!(
            "j={j} not in 1..={}",
            b.len()
        )));
    }
    let mut w = IntegralWeight::zero();
    for i in j - 1..b.len() {
        w.add_epsilon(f.0[i], b.sign(i));
    }
    Ok(w)
}

pub fn wt(b: &ZeroOneSequence, f: &WeightFunction) -> Result<IntegralWeight> {
    wt_prefix(b, f, 1)
}

/// `x ≤ y` in dominance order: `y - x` is a nonnegative sum of `ε_a - ε_{a+1}`.
pub fn dominance_leq(x: &IntegralWeight, y: &IntegralWeight) -> bool {
    let d = y.sub(x);
    let mut partial = 0;
    for (_, c) in d.iter() {
        partial += c;
        if partial < 0 {
            return false;
        }
    }
    partial == 0
}

/// `♯_b(h, a, j) = Σ_{i ≥ j, h(i) ≤ a} (-1)^{b_i}`, `j` 1-based.
pub fn sharp(b: &ZeroOneSequence, h: &WeightFunction, a: i32, j: usize) -> i32 {
    (j - 1..b.len())
        .filter(|&i| h.0[i] <= a)
        .map(|i| b.sign(i))
        .sum()
}

/// `g ≼_b f`.
pub fn bruhat_leq(b: &ZeroOneSequence, g: &WeightFunction, f: &WeightFunction) -> bool {
    let len = b.len();
    if g.len() != len || f.len() != len {
        return false;
    }
    let mut values: Vec<i32> = g.0.iter().chain(f.0.iter()).copied().collect();
    values.sort_unstable();
    values.dedup();
    for &a in &values {
        let (mut sg, mut sf) = (0, 0);
        for i in (0..len).rev() {
            if g.0[i] <= a {
                sg += b.sign(i);
            }
            if f.0[i] <= a {
                sf += b.sign(i);
            }
            if sg > sf {
                return false;
            }
        }
        if sg != sf {
            return false;
        }
    }
    true
}

/// A strictly `≼_b`-monotone integer: `g ≺_b f` implies `height(g) < height(f)`.
pub fn height(b: &ZeroOneSequence, f: &WeightFunction) -> i64 {
    -(0..b.len())
        .map(|i| (i as i64 + 1) * b.sign(i) as i64 * f.0[i] as i64)
        .sum::<i64>()
}

/// Sorts a set by decreasing height, ties broken lexicographically, so that
/// every element precedes everything strictly below it.
pub fn sort_top_down(b: &ZeroOneSequence, v: &mut [WeightFunction]) {
    v.sort_by(|x, y| height(b, y).cmp(&height(b, x)).then_with(|| y.cmp(x)));
}

fn check_window(b: &ZeroOneSequence, f: &WeightFunction, k: i32) -> Result<()> {
    check_lengths(b, f)?;
    if !f.in_window(k) {
        return Err(Error::Truncation(format!(
            "{f:?} lies outside the level-{k} window"
        )));
    }
    Ok(())
}

/// All `h ∈ Z^{m+n}_k` with `wt_b(h) = wt_b(f)`, sorted.
pub fn weight_class(
    b: &ZeroOneSequence,
    f: &WeightFunction,
    k: i32,
) -> Result<Vec<WeightFunction>> {
    check_window(b, f, k)?;
    let v_slots: Vec<usize> = (0..b.len()).filter(|&i| !b.is_w(i)).collect();
    let w_slots: Vec<usize> = (0..b.len()).filter(|&i| b.is_w(i)).collect();
    let target = wt(b, f)?;
    let mut out = Vec::new();
    let mut w_vals = vec![-k; w_slots.len()];
    loop {
        // V values must form the multiset target + Σ ε_{w values}.
        let mut need = target.clone();
        for &x in &w_vals {
            need.add_epsilon(x, 1);
        }
        if need.iter().all(|(a, c)| c > 0 && a.abs() <= k)
            && need.iter().map(|(_, c)| c as usize).sum::<usize>() == v_slots.len()
        {
            let mut multiset: Vec<i32> = need
                .iter()
                .flat_map(|(a, c)| std::iter::repeat_n(a, c as usize))
                .collect();
            multiset.sort_unstable();
            loop {
                let mut h = vec![0; b.len()];
                for (s, &x) in v_slots.iter().zip(&multiset) {
                    h[*s] = x;
                }
                for (s, &x) in w_slots.iter().zip(&w_vals) {
                    h[*s] = x;
                }
                out.push(WeightFunction(h));
                if !next_permutation(&mut multiset) {
                    break;
                }
            }
        }
        // odometer over W values
        let mut i = 0;
        loop {
            if i == w_vals.len() {
                out.sort();
                return Ok(out);
            }
            if w_vals[i] < k {
                w_vals[i] += 1;
                break;
            }
            w_vals[i] = -k;
            i += 1;
        }
    }
}

/// Lexicographic successor; false once the last permutation is reached.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `{h ∈ Z^{m+n}_k : g ≼_b h ≼_b f}`.
pub fn interval(
    b: &ZeroOneSequence,
    g: &WeightFunction,
    f: &WeightFunction,
    k: i32,
) -> Result<Vec<WeightFunction>> {
    check_window(b, g, k)?;
    check_window(b, f, k)?;
    if !bruhat_leq(b, g, f) {
        return Err(Error::EmptyInterval(format!(
            "{g:?} is not below {f:?} for {b:?}"
        )));
    }
    Ok(weight_class(b, f, k)?
        .into_iter()
        .filter(|h| bruhat_leq(b, g, h) && bruhat_leq(b, h, f))
        .collect())
}

/// `{h ∈ Z^{m+n}_k : h ≼_b f}`, sorted top-down.
pub fn lower_set(b: &ZeroOneSequence, f: &WeightFunction, k: i32) -> Result<Vec<WeightFunction>> {
    let mut v: Vec<_> = weight_class(b, f, k)?
        .into_iter()
        .filter(|h| bruhat_leq(b, h, f))
        .collect();
    sort_top_down(b, &mut v);
    Ok(v)
}

/// `{h ∈ Z^{m+n}_k : g ≼_b h}`, sorted top-down.
pub fn upper_set(b: &ZeroOneSequence, g: &WeightFunction, k: i32) -> Result<Vec<WeightFunction>> {
    let mut v: Vec<_> = weight_class(b, g, k)?
        .into_iter()
        .filter(|h| bruhat_leq(b, g, h))
        .collect();
    sort_top_down(b, &mut v);
    Ok(v)
}

fn signed_block_keys(b: &ZeroOneSequence, f: &WeightFunction, r: &Range<usize>) -> Vec<i32> {
    r.clone().map(|i| b.sign(i) * f.0[i]).collect()
}

/// Blockwise strictly decreasing `(-1)^{b_k} f`.
pub fn is_dominant(b: &ZeroOneSequence, f: &WeightFunction) -> bool {
    b.blocks()
        .iter()
        .all(|r| signed_block_keys(b, f, r).windows(2).all(|w| w[0] > w[1]))
}

/// Blockwise weakly increasing `(-1)^{b_k} f`.
pub fn is_antidominant(b: &ZeroOneSequence, f: &WeightFunction) -> bool {
    b.blocks()
        .iter()
        .all(|r| signed_block_keys(b, f, r).windows(2).all(|w| w[0] <= w[1]))
}

/// Blockwise weakly decreasing `(-1)^{b_k} f`.
pub fn is_weakly_dominant(b: &ZeroOneSequence, f: &WeightFunction) -> bool {
    b.blocks()
        .iter()
        .all(|r| signed_block_keys(b, f, r).windows(2).all(|w| w[0] >= w[1]))
}

/// A block-preserving permutation of `{0..m+n-1}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ParabolicPerm {
    pub one_line: Vec<usize>,
}

impl ParabolicPerm {
    pub fn identity(len: usize) -> Self {
        Self {
            one_line: (0..len).collect(),
        }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.one_line;
        let mut c = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// `self ∘ other`, so that `f·(x y) = (f·x)·y`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            one_line: other.one_line.iter().map(|&j| self.one_line[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.one_line.len()];
        for (i, &j) in self.one_line.iter().enumerate() {
            inv[j] = i;
        }
        Self { one_line: inv }
    }

    /// `self · s_i` for a 1-based generator.
    pub fn times_generator(&self, i: usize) -> Self {
        let mut v = self.one_line.clone();
        v.swap(i - 1, i);
        Self { one_line: v }
    }

    /// A reduced word as 1-based generator indices, read left to right.
    pub fn reduced_word(&self) -> Vec<usize> {
        // Peel right descents: w = w' s_i with w(i) > w(i+1).
        let mut w = self.one_line.clone();
        let mut word = Vec::new();
        'outer: loop {
            for i in 0..w.len().saturating_sub(1) {
                if w[i] > w[i + 1] {
                    w.swap(i, i + 1);
                    word.push(i + 1);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        word
    }

    /// All elements of `S^b = S_{I_1} × ... × S_{I_d}`.
    pub fn all_parabolic(b: &ZeroOneSequence) -> Vec<Self> {
        let mut out = vec![Self::identity(b.len())];
        for r in b.blocks() {
            let mut block: Vec<usize> = r.clone().collect();
            let mut perms = Vec::new();
            loop {
                perms.push(block.clone());
                if !next_permutation(&mut block) {
                    break;
                }
            }
            let mut next = Vec::with_capacity(out.len() * perms.len());
            for x in &out {
                for p in &perms {
                    let mut v = x.one_line.clone();
                    v[r.clone()].copy_from_slice(p);
                    next.push(Self { one_line: v });
                }
            }
            out = next;
        }
        out
    }

    /// The longest element `w_0` of `S^b`.
    pub fn longest(b: &ZeroOneSequence) -> Self {
        let mut v: Vec<usize> = (0..b.len()).collect();
        for r in b.blocks() {
            v[r].reverse();
        }
        Self { one_line: v }
    }
}

/// Minimal-length `x ∈ S^b` with `f·x` antidominant, and `ℓ(x)`.
pub fn minimal_antidominant_rep(
    b: &ZeroOneSequence,
    f: &WeightFunction,
) -> Result<(ParabolicPerm, usize)> {
    check_lengths(b, f)?;
    let mut one_line: Vec<usize> = (0..b.len()).collect();
    for r in b.blocks() {
        one_line[r.clone()].sort_by_key(|&i| b.sign(i) * f.0[i]);
    }
    let x = ParabolicPerm { one_line };
    let len = x.length();
    Ok((x, len))
}

fn check_kappa(b: &ZeroOneSequence, kappa: usize) -> Result<()> {
    if kappa == 0 || kappa >= b.len() {
        return Err(Error::IndexOutOfRange(format!(
            "κ={kappa} not in 1..{}",
            b.len()
        )));
    }
    Ok(())
}

/// Swaps `b_κ = 0, b_{κ+1} = 1` into `(1, 0)`.
pub fn s_kappa_seq(b: &ZeroOneSequence, kappa: usize) -> Result<ZeroOneSequence> {
    check_kappa(b, kappa)?;
    if b.0[kappa - 1] != 0 || b.0[kappa] != 1 {
        return Err(Error::SequencePattern(format!(
            "{b:?} has no (0,1) at κ={kappa}"
        )));
    }
    let mut v = b.0.clone();
    v.swap(kappa - 1, kappa);
    Ok(ZeroOneSequence(v))
}

/// Equal pair at `(κ, κ+1)` moves up by one, a distinct pair is swapped.
pub fn s_kappa_f(f: &WeightFunction, kappa: usize) -> Result<WeightFunction> {
    s_kappa_step(f, kappa, 1)
}

pub fn s_kappa_f_inverse(f: &WeightFunction, kappa: usize) -> Result<WeightFunction> {
    s_kappa_step(f, kappa, -1)
}

fn s_kappa_step(f: &WeightFunction, kappa: usize, shift: i32) -> Result<WeightFunction> {
    if kappa == 0 || kappa >= f.len() {
        return Err(Error::IndexOutOfRange(format!(
            "κ={kappa} not in 1..{}",
            f.len()
        )));
    }
    let mut v = f.0.clone();
    if v[kappa - 1] == v[kappa] {
        v[kappa - 1] += shift;
        v[kappa] += shift;
    } else {
        v.swap(kappa - 1, kappa);
    }
    Ok(WeightFunction(v))
}

/// The word `κ_1 κ_2 ... κ_r` with `b_st = s_{κ_1} s_{κ_2} ... s_{κ_r} b`.
///
/// As an operator word it acts right to left: `s_{κ_r}` is applied to `b`
/// first. With `i_1 < ... < i_n` the positions of the ones in `b` and `l`
/// the smallest `j` with `i_j ≠ j`, the word is the concatenation over
/// `j = n, n-1, ..., l` of `j, j+1, ..., i_j - 1`.
pub fn bst_factorization(b: &ZeroOneSequence) -> Vec<usize> {
    let ones: Vec<usize> = (0..b.len()).filter(|&i| b.is_w(i)).map(|i| i + 1).collect();
    let mut word = Vec::new();
    for j in (1..=ones.len()).rev() {
        word.extend(j..ones[j - 1]);
    }
    word
}

/// Every element of `Z^len_k`, in lexicographic order.
pub fn window(len: usize, k: i32) -> Vec<WeightFunction> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i32>| {
                (-k..=k).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(WeightFunction).collect()
}

/// Every 0/1 sequence of the given length.
pub fn all_sequences(len: usize) -> Vec<ZeroOneSequence> {
    (0..1u32 << len)
        .map(|mask| {
            ZeroOneSequence(
                (0..len)
                    .map(|i| ((mask >> (len - 1 - i)) & 1) as u8)
                    .collect(),
            )
        })
        .collect()
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
    fn weights() {
        assert!(wt_prefix(&b("01"), &f(&[0, 0]), 1).unwrap().is_zero());
        let w = wt_prefix(&b("01"), &f(&[1, 2]), 1).unwrap();
        assert_eq!((w.coeff(1), w.coeff(2)), (1, -1));
        let w = wt_prefix(&b("01"), &f(&[1, 2]), 2).unwrap();
        assert_eq!((w.coeff(1), w.coeff(2)), (0, -1));
        assert!(wt_prefix(&b("01"), &f(&[1, 2]), 3).is_err());
        assert!(wt_prefix(&b("01"), &f(&[1, 2]), 0).is_err());
    }

    #[test]
    fn dominance() {
        let e = IntegralWeight::epsilon;
        assert!(dominance_leq(&e(1), &e(0)));
        assert!(dominance_leq(&e(0), &e(0)));
        assert!(!dominance_leq(&e(0), &e(1)));
        assert!(!dominance_leq(&e(0), &IntegralWeight::zero()));
    }

    #[test]
    fn bruhat_examples() {
        assert!(bruhat_leq(&b("00"), &f(&[1, 2]), &f(&[2, 1])));
        assert!(!bruhat_leq(&b("00"), &f(&[2, 1]), &f(&[1, 2])));
        assert!(bruhat_leq(&b("01"), &f(&[0, 0]), &f(&[0, 0])));
        assert!(!bruhat_leq(&b("01"), &f(&[1, 1]), &f(&[0, 0])));
        assert!(bruhat_leq(&b("01"), &f(&[0, 0]), &f(&[1, 1])));
        assert!(bruhat_leq(&b("10"), &f(&[1, 1]), &f(&[0, 0])));
    }

    #[test]
    fn classes_and_intervals() {
        assert_eq!(
            weight_class(&b("01"), &f(&[0, 0]), 1).unwrap(),
            vec![f(&[-1, -1]), f(&[0, 0]), f(&[1, 1])]
        );
        assert_eq!(
            weight_class(&b("00"), &f(&[0, 1]), 1).unwrap(),
            vec![f(&[0, 1]), f(&[1, 0])]
        );
        assert_eq!(weight_class(&b("0"), &f(&[0]), 2).unwrap(), vec![f(&[0])]);
        assert!(matches!(
            weight_class(&b("0"), &f(&[3]), 2),
            Err(Error::Truncation(_))
        ));
        assert_eq!(
            interval(&b("01"), &f(&[-1, -1]), &f(&[0, 0]), 1).unwrap(),
            vec![f(&[-1, -1]), f(&[0, 0])]
        );
        assert_eq!(
            interval(&b("00"), &f(&[0, 1]), &f(&[1, 0]), 1).unwrap(),
            vec![f(&[0, 1]), f(&[1, 0])]
        );
        assert!(matches!(
            interval(&b("00"), &f(&[1, 0]), &f(&[0, 1]), 1),
            Err(Error::EmptyInterval(_))
        ));
    }

    #[test]
    fn dominance_flags() {
        assert!(is_dominant(&b("01"), &f(&[3, -2])));
        assert!(!is_dominant(&b("00"), &f(&[2, 2])));
        assert!(is_dominant(&b("11"), &f(&[1, 2])));
        assert!(is_antidominant(&b("00"), &f(&[1, 3])));
    }

    #[test]
    fn antidominant_reps() {
        assert_eq!(
            minimal_antidominant_rep(&b("00"), &f(&[1, 3])).unwrap().1,
            0
        );
        let (x, l) = minimal_antidominant_rep(&b("00"), &f(&[3, 1])).unwrap();
        assert_eq!((x.one_line, l), (vec![1, 0], 1));
        let (x, l) = minimal_antidominant_rep(&b("11"), &f(&[1, 2])).unwrap();
        assert_eq!((x.one_line, l), (vec![1, 0], 1));
    }

    #[test]
    fn kappa_maps() {
        assert_eq!(
            s_kappa_f(&f(&[0, 4, 1, 0, 2, 3]), 3).unwrap(),
            f(&[0, 4, 0, 1, 2, 3])
        );
        assert_eq!(s_kappa_f(&f(&[1, 1]), 1).unwrap(), f(&[2, 2]));
        let x = f(&[5, 5, 0]);
        assert_eq!(s_kappa_f_inverse(&s_kappa_f(&x, 1).unwrap(), 1).unwrap(), x);
        assert_eq!(s_kappa_seq(&b("01"), 1).unwrap(), b("10"));
        assert!(matches!(
            s_kappa_seq(&b("10"), 1),
            Err(Error::SequencePattern(_))
        ));
    }

    #[test]
    fn standard_word() {
        assert_eq!(bst_factorization(&b("101010")), vec![3, 4, 2]);
        assert_eq!(bst_factorization(&b("111000")), Vec::<usize>::new());
        assert_eq!(bst_factorization(&b("01")), vec![1]);
        for s in ["101010", "010101", "0011", "0101", "100", "0001", "01101"] {
            let seq = b(s);
            let mut cur = seq.clone();
            for &k in bst_factorization(&seq).iter().rev() {
                cur = s_kappa_seq(&cur, k).unwrap();
            }
            assert_eq!(cur, ZeroOneSequence::standard(seq.m(), seq.n()), "{s}");
        }
    }

    #[test]
    fn reduced_words_and_groups() {
        let seq = b("0001");
        let all = ParabolicPerm::all_parabolic(&seq);
        assert_eq!(all.len(), 6);
        for x in &all {
            let w = x.reduced_word();
            assert_eq!(w.len(), x.length());
            let mut y = ParabolicPerm::identity(4);
            for &i in &w {
                y = y.times_generator(i);
            }
            assert_eq!(&y, x);
        }
        assert_eq!(ParabolicPerm::longest(&seq).length(), 3);
    }

    #[test]
    fn height_is_a_linear_extension() {
        for s in ["00", "01", "10", "11", "001", "010", "101", "111"] {
            let seq = b(s);
            let all = window(seq.len(), 1);
            for g in &all {
                for h in &all {
                    if g != h && bruhat_leq(&seq, g, h) {
                        assert!(height(&seq, g) < height(&seq, h), "{s} {g:?} {h:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn intervals_stay_in_the_window() {
        // Widening the window never adds elements to an interval between
        // window elements.
        for len in 2..=3 {
            for seq in all_sequences(len) {
                for f in window(len, 1) {
                    let small = lower_set(&seq, &f, 1).unwrap();
                    let wide = lower_set(&seq, &f, 3).unwrap();
                    for g in &small {
                        let mut a = interval(&seq, g, &f, 1).unwrap();
                        let mut b: Vec<_> = wide
                            .iter()
                            .filter(|h| bruhat_leq(&seq, g, h))
                            .cloned()
                            .collect();
                        sort_top_down(&seq, &mut a);
                        sort_top_down(&seq, &mut b);
                        assert_eq!(a, b, "{seq:?} {g:?} {f:?}");
                    }
                }
            }
        }
    }
}
