//! Laurent polynomials in `q` with integer coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient ring.
pub type Coeff = BigInt;

/// An element of `Z[q, q^-1]`.
///
/// Terms are kept sorted by increasing exponent and never store a zero
/// coefficient, so structural equality is mathematical equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(i32, Coeff)>,
}

/// Substitutions accepted by [`LaurentPoly::has_nonneg_coeffs_after`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Substitution {
    /// Leave `q` alone.
    Q,
    /// Replace `q` by `-q^-1`.
    NegQInv,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(exp: i32, coeff: impl Into<Coeff>) -> Self {
        let c = coeff.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Self {
                terms: vec![(exp, c)],
            }
        }
    }

    pub fn constant(c: impl Into<Coeff>) -> Self {
        Self::monomial(0, c)
    }

    /// `(-q)^e`.
    pub fn neg_q_pow(e: i32) -> Self {
        Self::monomial(e, if e.rem_euclid(2) == 0 { 1 } else { -1 })
    }

    /// Builds a polynomial from arbitrary (exponent, coefficient) pairs,
    /// summing repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<Coeff>,
    {
        let mut v: Vec<(i32, Coeff)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(i32, Coeff)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Self { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> &[(i32, Coeff)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> Coeff {
        match self.terms.binary_search_by_key(&exp, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Coeff::zero(),
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    /// Multiplication by `q^e`.
    pub fn shift(&self, e: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(x, c)| (x + e, c.clone())).collect(),
        }
    }

    pub fn shift_in_place(&mut self, e: i32) {
        for t in &mut self.terms {
            t.0 += e;
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// The ring involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| (-e, c.clone()))
                .collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> Coeff {
        self.terms.iter().map(|t| &t.1).sum()
    }

    /// True when every exponent is at least 1.
    pub fn is_in_q_zq(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 1)
    }

    /// True when every exponent is at most -1.
    pub fn is_in_qinv_zqinv(&self) -> bool {
        self.max_exp().is_none_or(|e| e <= -1)
    }

    /// Whether all coefficients are nonnegative after the substitution.
    pub fn has_nonneg_coeffs_after(&self, sub: Substitution) -> bool {
        self.terms.iter().all(|(e, c)| match sub {
            Substitution::Q => !c.is_negative(),
            Substitution::NegQInv => {
                if e.rem_euclid(2) == 0 {
                    !c.is_negative()
                } else {
                    !c.is_positive()
                }
            }
        })
    }

    /// The unique `p` in `qZ[q]` with `p - bar(p) = c`; needs `bar(c) = -c`.
    pub fn positive_solve(c: &Self) -> Result<Self> {
        Self::check_antisymmetric(c)?;
        Ok(Self {
            terms: c.terms.iter().filter(|t| t.0 > 0).cloned().collect(),
        })
    }

    /// The unique `p` in `q^-1 Z[q^-1]` with `p - bar(p) = c`.
    pub fn negative_solve(c: &Self) -> Result<Self> {
        Self::check_antisymmetric(c)?;
        Ok(Self {
            terms: c.terms.iter().filter(|t| t.0 < 0).cloned().collect(),
        })
    }

    fn check_antisymmetric(c: &Self) -> Result<()> {
        if c.bar() == -c {
            Ok(())
        } else {
            Err(Error::BarAntisymmetry(c.to_string()))
        }
    }

    /// `[r] = (q^r - q^-r) / (q - q^-1)`.
    pub fn quantum_integer(r: i64) -> Result<Self> {
        if r < 0 {
            return Err(Error::Domain(format!(
                "quantum integer of negative argument {r}"
            )));
        }
        let r = i32::try_from(r).map_err(|_| Error::Domain(format!("argument {r} too large")))?;
        Ok(Self::from_terms((0..r).map(|i| (r - 1 - 2 * i, 1))))
    }

    /// `[r]! = [1][2]...[r]`.
    pub fn quantum_factorial(r: i64) -> Result<Self> {
        if r < 0 {
            return Err(Error::Domain(format!(
                "quantum factorial of negative argument {r}"
            )));
        }
        let mut acc = Self::one();
        for i in 1..=r {
            acc = &acc * &Self::quantum_integer(i)?;
        }
        Ok(acc)
    }

    /// Exact division in `Z[q, q^-1]`.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (dlo, dhi) = (d.min_exp().unwrap(), d.max_exp().unwrap());
        let lead = &d.terms.last().unwrap().1;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(top) = rem.max_exp() {
            if top - dhi < rem.min_exp().unwrap() - dlo {
                break;
            }
            let c = rem.coeff(top);
            let (qc, r) = c.div_rem(lead);
            if !r.is_zero() {
                break;
            }
            let e = top - dhi;
            quot.push((e, qc.clone()));
            rem = &rem - &d.shift(e).scale(&qc);
        }
        if !rem.is_zero() {
            return Err(Error::InexactDivision(format!("({self}) / ({d})")));
        }
        Ok(Self::from_terms(quot))
    }

    /// `q^e`-monomial coefficient as a small integer when it fits.
    pub fn as_monomial(&self) -> Option<(i32, &Coeff)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((*e, c)),
            _ => None,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    fn merge(a: &[(i32, Coeff)], b: &[(i32, Coeff)], negate_b: bool) -> Vec<(i32, Coeff)> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly {
            terms: LaurentPoly::merge(&self.terms, &rhs.terms, false),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly {
            terms: LaurentPoly::merge(&self.terms, &rhs.terms, true),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        self.terms = LaurentPoly::merge(&self.terms, &rhs.terms, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        if !rhs.is_zero() {
            self.terms = LaurentPoly::merge(&self.terms, &rhs.terms, true);
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some((e, c)) = rhs.as_monomial() {
            if c.is_one() {
                return self.shift(e);
            }
        }
        if let Some((e, c)) = self.as_monomial() {
            if c.is_one() {
                return rhs.shift(e);
            }
        }
        let lo = self.min_exp().unwrap() + rhs.min_exp().unwrap();
        let hi = self.max_exp().unwrap() + rhs.max_exp().unwrap();
        let mut dense = vec![Coeff::zero(); (hi - lo + 1) as usize];
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                dense[(e1 + e2 - lo) as usize] += c1 * c2;
            }
        }
        LaurentPoly {
            terms: dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i32, c))
                .collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    /// Decreasing exponents, e.g. `q^3+2*q-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                f.write_str("-")?;
            } else if n > 0 {
                f.write_str("+")?;
            }
            let unit = abs.is_one();
            if *e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !unit {
                write!(f, "{abs}*")?;
            }
            if *e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

// Serialized through the text form, e.g. `"q^2-1+q^-1"`.
impl serde::Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser {
            src: s.as_bytes(),
            pos: 0,
        }
        .parse()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            None
        } else {
            std::str::from_utf8(&self.src[start..self.pos]).ok()
        }
    }

    fn exponent(&mut self) -> Result<i32> {
        self.skip_ws();
        let neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        self.skip_ws();
        let Some(d) = self.digits() else {
            return self.err("expected exponent");
        };
        let v: i32 = match d.parse() {
            Ok(v) => v,
            Err(_) => return self.err("exponent out of range"),
        };
        Ok(if neg { -v } else { v })
    }

    fn parse(mut self) -> Result<LaurentPoly> {
        let mut terms: Vec<(i32, Coeff)> = Vec::new();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if first => return self.err("empty polynomial"),
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                Some(_) if first => 1,
                Some(_) => return self.err("expected '+' or '-'"),
            };
            first = false;
            self.skip_ws();
            let mut coeff = Coeff::from(sign);
            let mut have_number = false;
            if let Some(d) = self.digits() {
                coeff *= d.parse::<Coeff>().expect("ascii digits");
                have_number = true;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    if self.peek() != Some(b'q') {
                        return self.err("expected 'q' after '*'");
                    }
                }
            }
            let mut exp = 0;
            if self.peek() == Some(b'q') {
                self.pos += 1;
                exp = 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    exp = self.exponent()?;
                }
            } else if !have_number {
                return self.err("expected integer or 'q'");
            }
            terms.push((exp, coeff));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn render_roundtrip() {
        for s in [
            "q^3+2*q-1",
            "0",
            "q",
            "-q^-1",
            "q^2-q^-2",
            "3",
            "-7*q^-3+q^-5",
        ] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("1 + q").to_string(), "q+1");
        assert_eq!(p("q + q - 2*q").to_string(), "0");
    }

    #[test]
    fn parse_errors_report_position() {
        match "q^".parse::<LaurentPoly>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!("q q".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("2*".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(
            LaurentPoly::quantum_integer(0).unwrap(),
            LaurentPoly::zero()
        );
        assert_eq!(LaurentPoly::quantum_integer(3).unwrap(), p("q^2+1+q^-2"));
        assert_eq!(LaurentPoly::quantum_factorial(2).unwrap(), p("q+q^-1"));
        assert!(LaurentPoly::quantum_integer(-1).is_err());
        let qq = &LaurentPoly::q() - &LaurentPoly::q().bar();
        for r in 0..6 {
            let lhs = &LaurentPoly::quantum_integer(r).unwrap() * &qq;
            let rhs = &LaurentPoly::monomial(r as i32, 1) - &LaurentPoly::monomial(-(r as i32), 1);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn solves() {
        let c = p("q^2-q^-2+3*q-3*q^-1");
        assert_eq!(LaurentPoly::positive_solve(&c).unwrap(), p("q^2+3*q"));
        assert_eq!(LaurentPoly::negative_solve(&c).unwrap(), p("-q^-2-3*q^-1"));
        assert!(matches!(
            LaurentPoly::positive_solve(&p("q")),
            Err(Error::BarAntisymmetry(_))
        ));
        assert_eq!(
            LaurentPoly::positive_solve(&LaurentPoly::zero()).unwrap(),
            LaurentPoly::zero()
        );
    }

    #[test]
    fn substitution_positivity() {
        assert!(p("-q^-1").has_nonneg_coeffs_after(Substitution::NegQInv));
        assert!(p("q^-2+1").has_nonneg_coeffs_after(Substitution::NegQInv));
        assert!(!p("q^-1").has_nonneg_coeffs_after(Substitution::NegQInv));
        assert!(p("q^2+q").has_nonneg_coeffs_after(Substitution::Q));
        assert!(!p("q^2-q").has_nonneg_coeffs_after(Substitution::Q));
    }

    #[test]
    fn exact_division() {
        let a = p("q^3-q^-3");
        let d = p("q-q^-1");
        assert_eq!(a.div_exact(&d).unwrap(), p("q^2+1+q^-2"));
        assert!(p("q").div_exact(&p("2")).is_err());
        assert!(p("q^2+1").div_exact(&p("q+1")).is_err());
        assert_eq!(p("-2*q^-1-2*q").div_exact(&p("-2")).unwrap(), p("q+q^-1"));
    }

    #[test]
    fn big_coefficients() {
        let x = p("q+1").pow(80);
        assert!(x.coeff(40) > Coeff::from(i64::MAX));
        assert_eq!(x.div_exact(&p("q+1").pow(79)).unwrap(), p("q+1"));
    }
}
