//! Formal noncommutative expressions in `E_a, F_a, K_a^{±1}` and the braid
//! group automorphisms `T_a`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::fock::{self, FockVector, Generator};
use crate::laurent::LaurentPoly;

/// A `Z[q,q^-1]`-combination of words. Only adjacent `K` letters are merged;
/// no other relation is used.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct UExpression {
    terms: BTreeMap<Vec<Generator>, LaurentPoly>,
}

fn normalize(word: Vec<Generator>) -> Vec<Generator> {
    let mut out: Vec<Generator> = Vec::with_capacity(word.len());
    let mut run: BTreeMap<i32, i32> = BTreeMap::new();
    let flush = |run: &mut BTreeMap<i32, i32>, out: &mut Vec<Generator>| {
        for (a, e) in std::mem::take(run) {
            if e != 0 {
                out.push(Generator::K(a, e));
            }
        }
    };
    for g in word {
        match g {
            Generator::K(a, e) => *run.entry(a).or_insert(0) += e,
            other => {
                flush(&mut run, &mut out);
                out.push(other);
            }
        }
    }
    flush(&mut run, &mut out);
    out
}

impl UExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Vec::new(), LaurentPoly::one())
    }

    pub fn generator(g: Generator) -> Self {
        Self::word(vec![g], LaurentPoly::one())
    }

    pub fn word(w: Vec<Generator>, c: LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_word(w, &c);
        out
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Generator>, LaurentPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_word(&mut self, w: Vec<Generator>, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let w = normalize(w);
        let e = self.terms.entry(w.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &LaurentPoly) {
        for (w, x) in &other.terms {
            self.add_word(w.clone(), &(x * c));
        }
    }

    /// Concatenation product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_word(w, &(c1 * c2));
            }
        }
        out
    }

    /// `x·y + c·y·x`.
    pub fn twisted_commutator(x: &Self, y: &Self, c: &LaurentPoly) -> Self {
        let mut out = x.mul(y);
        out.add_scaled(&y.mul(x), c);
        out
    }

    /// Evaluates the expression on a Fock vector, rightmost letter first.
    pub fn apply(&self, u: &FockVector) -> Result<FockVector> {
        let mut out = FockVector::zero(u.seq().clone(), u.level());
        for (w, c) in &self.terms {
            let mut v = u.clone();
            for g in w.iter().rev() {
                v = fock::act(*g, &v)?;
                if v.is_zero() {
                    break;
                }
            }
            out.add_scaled_unchecked(&v, c);
        }
        Ok(out)
    }
}

fn braid_image(a: i32, g: Generator) -> UExpression {
    let one = LaurentPoly::one();
    let gen = UExpression::generator;
    match g {
        Generator::E(b) if (b - a).abs() == 1 => UExpression::twisted_commutator(
            &gen(Generator::E(b)),
            &gen(Generator::E(a)),
            &LaurentPoly::monomial(-1, -1),
        ),
        Generator::E(b) if b == a => UExpression::word(
            vec![Generator::K(a + 1, 1), Generator::K(a, -1), Generator::F(a)],
            -&one,
        ),
        Generator::F(b) if (b - a).abs() == 1 => UExpression::twisted_commutator(
            &gen(Generator::F(a)),
            &gen(Generator::F(b)),
            &LaurentPoly::monomial(1, -1),
        ),
        Generator::F(b) if b == a => UExpression::word(
            vec![Generator::E(a), Generator::K(a, 1), Generator::K(a + 1, -1)],
            -&one,
        ),
        Generator::K(b, e) if b == a => gen(Generator::K(a + 1, e)),
        Generator::K(b, e) if b == a + 1 => gen(Generator::K(a, e)),
        other => gen(other),
    }
}

/// `T_a(x)`: every letter replaced by its image, then expanded.
pub fn braid_t(a: i32, x: &UExpression) -> UExpression {
    let mut out = UExpression::zero();
    for (w, c) in &x.terms {
        let mut acc = UExpression::word(Vec::new(), c.clone());
        for g in w {
            acc = acc.mul(&braid_image(a, *g));
        }
        out.add_scaled(&acc, &LaurentPoly::one());
    }
    out
}

impl fmt::Display for UExpression {
    /// e.g. `E_1E_0 - q^-1*E_0E_1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (w, c)) in self.terms.iter().enumerate() {
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
            let letters: String = w.iter().map(|g| g.to_string()).collect();
            match (body.as_str(), letters.is_empty()) {
                (b, true) => f.write_str(b)?,
                ("1", false) => f.write_str(&letters)?,
                (b, false) => write!(f, "{b}*{letters}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UExpression({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid_table() {
        let e1 = UExpression::generator(Generator::E(1));
        assert_eq!(braid_t(0, &e1).to_string(), "-q^-1*E_0E_1 + E_1E_0");
        let e0 = UExpression::generator(Generator::E(0));
        assert_eq!(braid_t(0, &e0).to_string(), "-K_0^-1K_1F_0");
        let k5 = UExpression::generator(Generator::K(5, 1));
        assert_eq!(braid_t(0, &k5), k5);
        let k0 = UExpression::generator(Generator::K(0, 1));
        assert_eq!(braid_t(0, &k0), UExpression::generator(Generator::K(1, 1)));
    }

    #[test]
    fn adjacent_k_letters_merge() {
        let w = UExpression::word(
            vec![Generator::K(1, 1), Generator::K(0, 2), Generator::K(1, -1)],
            LaurentPoly::one(),
        );
        assert_eq!(
            w,
            UExpression::word(vec![Generator::K(0, 2)], LaurentPoly::one())
        );
    }
}
