//! Exact integer polynomial arithmetic.
//!
//! [`IntPoly`] is a dense polynomial in `t` with nonnegative exponents, used
//! as the entry type of the fraction-free determinant. [`HalfLaurent`] is a
//! sparse Laurent polynomial in `t^(1/2)`: exponents are stored as integer
//! counts of half-units, so `t^(3/2)` is stored under key `3` and `t^-1`
//! under key `-2`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

fn checked(v: i128) -> i64 {
    i64::try_from(v).expect("polynomial coefficient overflowed i64")
}

/// Dense integer polynomial, coefficients stored low degree first with no
/// trailing zeros. The zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        IntPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> i64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    /// Exact division. Returns `None` if `divisor` is zero or does not divide
    /// `self` over the integers.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let lead = divisor.lead();
        let mut rem: Vec<i128> = self.coeffs.iter().map(|&c| c as i128).collect();
        let mut quot = vec![0i64; nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = rem[k + dd];
            if top % lead as i128 != 0 {
                return None;
            }
            let q = top / lead as i128;
            quot[k] = checked(q);
            if q != 0 {
                for (j, &c) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= q * c as i128;
                }
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return None;
        }
        Some(IntPoly::from_coeffs(quot))
    }

    pub fn eval(&self, t: i64) -> i128 {
        self.coeffs
            .iter()
            .rev()
            .fold(0i128, |acc, &c| acc * t as i128 + c as i128)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = *self.coeffs.get(i).unwrap_or(&0) as i128;
                let b = *rhs.coeffs.get(i).unwrap_or(&0) as i128;
                checked(a + b)
            })
            .collect();
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut acc = vec![0i128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                acc[i + j] += a as i128 * b as i128;
            }
        }
        IntPoly::from_coeffs(acc.into_iter().map(checked).collect())
    }
}

/// Determinant of a square matrix over `Z[t]` by Bareiss fraction-free
/// elimination. Every division performed is exact.
pub fn det_bareiss(mut m: Vec<Vec<IntPoly>>) -> IntPoly {
    let n = m.len();
    if n == 0 {
        return IntPoly::constant(1);
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut negate = false;
    let mut prev = IntPoly::constant(1);
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return IntPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step must divide exactly");
            }
            m[i][k] = IntPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// Integer Laurent polynomial in `t^(1/2)`.
///
/// Keys of the coefficient map are half-exponents. Zero coefficients are
/// never stored, so the zero polynomial is the empty map and structural
/// equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct HalfLaurent {
    coeffs: BTreeMap<i64, i64>,
}

impl HalfLaurent {
    pub fn zero() -> Self {
        HalfLaurent::default()
    }

    pub fn one() -> Self {
        HalfLaurent::monomial(0, 1)
    }

    /// `coeff * t^(half_exp/2)`
    pub fn monomial(half_exp: i64, coeff: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(half_exp, coeff);
        }
        HalfLaurent { coeffs }
    }

    /// Builds a polynomial from `(half_exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = HalfLaurent::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// `t^(shift_half/2) * p(t)` for an ordinary polynomial `p`.
    pub fn from_int_poly(p: &IntPoly, shift_half: i64) -> Self {
        HalfLaurent::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, &c)| (2 * k as i64 + shift_half, c)),
        )
    }

    /// `t^(1/2) - t^(-1/2)`, the skein factor.
    pub fn skein_factor() -> Self {
        HalfLaurent::from_terms([(1, 1), (-1, -1)])
    }

    fn add_term(&mut self, half_exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.coeffs.entry(half_exp).or_insert(0);
        *entry = checked(*entry as i128 + coeff as i128);
        if *entry == 0 {
            self.coeffs.remove(&half_exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, half_exp: i64) -> i64 {
        *self.coeffs.get(&half_exp).unwrap_or(&0)
    }

    /// Terms in ascending order of half-exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_half_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_half_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Span of the exponents in half-units.
    pub fn half_span(&self) -> i64 {
        match (self.min_half_exp(), self.max_half_exp()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> i64 {
        checked(self.coeffs.values().map(|&c| c as i128).sum())
    }

    /// `p(t^-1)`
    pub fn invert_variable(&self) -> Self {
        HalfLaurent::from_terms(self.terms().map(|(e, c)| (-e, c)))
    }

    /// Multiplies by `t^(half/2)`.
    pub fn shift(&self, half: i64) -> Self {
        HalfLaurent::from_terms(self.terms().map(|(e, c)| (e + half, c)))
    }

    pub fn scale(&self, k: i64) -> Self {
        HalfLaurent::from_terms(
            self.terms()
                .map(|(e, c)| (e, checked(c as i128 * k as i128))),
        )
    }

    /// True iff every exponent is an integer power of `t`.
    pub fn has_integer_exponents(&self) -> bool {
        self.coeffs.keys().all(|e| e % 2 == 0)
    }

    /// Shifts the lowest exponent to zero and makes the leading coefficient
    /// positive. Two polynomials agree up to units `±t^(k/2)` iff their
    /// normalizations are equal.
    pub fn unit_normalized(&self) -> Self {
        let Some(lo) = self.min_half_exp() else {
            return HalfLaurent::zero();
        };
        let p = self.shift(-lo);
        match p.coeffs.values().next_back() {
            Some(&c) if c < 0 => -&p,
            _ => p,
        }
    }

    /// True iff `self = ±t^(k/2) * other` for some integer `k`.
    pub fn equal_up_to_units(&self, other: &HalfLaurent) -> bool {
        self.unit_normalized() == other.unit_normalized()
    }

    /// True iff `self = ±other`.
    pub fn equal_up_to_sign(&self, other: &HalfLaurent) -> bool {
        self == other || *self == -other
    }

    /// Exact division by a nonzero divisor, `None` when it does not divide.
    pub fn div_exact(&self, divisor: &HalfLaurent) -> Option<HalfLaurent> {
        let d_lo = divisor.min_half_exp()?;
        let Some(n_lo) = self.min_half_exp() else {
            return Some(HalfLaurent::zero());
        };
        // Parities of the half-exponents must be handled per residue class,
        // so work in units of t^(1/2) directly.
        let to_poly = |p: &HalfLaurent, lo: i64| {
            let hi = p.max_half_exp().unwrap();
            let mut v = vec![0i64; (hi - lo + 1) as usize];
            for (e, c) in p.terms() {
                v[(e - lo) as usize] = c;
            }
            IntPoly::from_coeffs(v)
        };
        let q = to_poly(self, n_lo).div_exact(&to_poly(divisor, d_lo))?;
        Some(HalfLaurent::from_terms(
            q.coeffs()
                .iter()
                .enumerate()
                .map(|(k, &c)| (k as i64 + n_lo - d_lo, c)),
        ))
    }
}

impl Add for &HalfLaurent {
    type Output = HalfLaurent;
    fn add(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &HalfLaurent {
    type Output = HalfLaurent;
    fn sub(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        HalfLaurent {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &HalfLaurent {
    type Output = HalfLaurent;
    fn mul(self, rhs: &HalfLaurent) -> HalfLaurent {
        let mut out = HalfLaurent::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, checked(c1 as i128 * c2 as i128));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for HalfLaurent {
            type Output = HalfLaurent;
            fn $m(self, rhs: HalfLaurent) -> HalfLaurent {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for HalfLaurent {
    type Output = HalfLaurent;
    fn neg(self) -> HalfLaurent {
        -&self
    }
}

fn write_exponent(f: &mut fmt::Formatter<'_>, half: i64) -> fmt::Result {
    match half {
        0 => Ok(()),
        2 => write!(f, "t"),
        h if h % 2 == 0 => write!(f, "t^{}", h / 2),
        h => write!(f, "t^({}/2)", h),
    }
}

/// Descending exponents, e.g. `t^(5/2) - t^(3/2) + t^(-3/2) - t^(-5/2)` or
/// `t - 1 + t^-1`. Non-unit coefficients are written `3*t^(1/2)`.
impl fmt::Display for HalfLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                write_exponent(f, e)?;
            }
        }
        Ok(())
    }
}

struct PolyParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> PolyParser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{}'", b as char)))
        }
    }

    fn unsigned(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected digits"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::parse(start, "integer out of range"))
    }

    fn signed(&mut self) -> Result<i64> {
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let v = self.unsigned()?;
        Ok(if neg { -v } else { v })
    }

    /// Exponent after `^`, returned in half-units.
    fn exponent(&mut self) -> Result<i64> {
        if self.eat(b'(') {
            let num = self.signed()?;
            let half = if self.eat(b'/') {
                let den_at = self.pos;
                match self.unsigned()? {
                    1 => 2 * num,
                    2 => num,
                    _ => {
                        return Err(Error::parse(
                            den_at,
                            "only denominators 1 and 2 are allowed",
                        ))
                    }
                }
            } else {
                2 * num
            };
            self.expect(b')')?;
            Ok(half)
        } else {
            Ok(2 * self.signed()?)
        }
    }

    fn term(&mut self) -> Result<(i64, i64)> {
        let mut coeff = 1;
        let mut has_coeff = false;
        if matches!(self.peek(), Some(b'0'..=b'9')) {
            coeff = self.unsigned()?;
            has_coeff = true;
            self.eat(b'*');
        }
        if self.eat(b't') {
            let mut sign = 1;
            if self.src.get(self.pos) == Some(&b'\'') {
                self.pos += 1;
                sign = -1;
            }
            let half = if self.eat(b'^') { self.exponent()? } else { 2 };
            Ok((sign * half, coeff))
        } else if has_coeff {
            Ok((0, coeff))
        } else {
            Err(Error::parse(self.pos, "expected a term"))
        }
    }

    fn poly(&mut self) -> Result<HalfLaurent> {
        let mut out = HalfLaurent::zero();
        let mut sign = if self.eat(b'-') {
            -1
        } else {
            self.eat(b'+');
            1
        };
        loop {
            let (e, c) = self.term()?;
            out.add_term(e, sign * c);
            match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                Some(_) => return Err(Error::parse(self.pos, "expected '+' or '-'")),
            }
        }
        Ok(out)
    }
}

/// Accepts the display form plus the `t'` alias for `t^-1`, so both
/// `t - 1 + t^-1` and `t-1+t'` parse to the same polynomial.
impl FromStr for HalfLaurent {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = PolyParser {
            src: s.as_bytes(),
            pos: 0,
        };
        p.poly()
    }
}

/// JSON form: list of `[half_exponent, coefficient]` pairs, ascending.
impl Serialize for HalfLaurent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms().map(|(e, c)| [e, c]))
    }
}

impl<'de> Deserialize<'de> for HalfLaurent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<[i64; 2]> = Vec::deserialize(d)?;
        Ok(HalfLaurent::from_terms(
            pairs.into_iter().map(|[e, c]| (e, c)),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hl(s: &str) -> HalfLaurent {
        s.parse().unwrap()
    }

    #[test]
    fn display_integer_and_half_exponents() {
        assert_eq!(hl("t - 1 + t^-1").to_string(), "t - 1 + t^-1");
        let p = HalfLaurent::from_terms([(5, 1), (3, -1), (-3, 1), (-5, -1)]);
        assert_eq!(p.to_string(), "t^(5/2) - t^(3/2) + t^(-3/2) - t^(-5/2)");
        assert_eq!(HalfLaurent::one().to_string(), "1");
        assert_eq!(HalfLaurent::zero().to_string(), "0");
        let q = HalfLaurent::from_terms([(1, -3), (-1, 3)]);
        assert_eq!(q.to_string(), "-3*t^(1/2) + 3*t^(-1/2)");
    }

    #[test]
    fn parse_prime_alias() {
        assert_eq!(hl("t-1+t'"), hl("t - 1 + t^-1"));
        assert_eq!(hl("t^(5/2)"), HalfLaurent::monomial(5, 1));
        assert_eq!(hl("t'^(3/2)"), HalfLaurent::monomial(-3, 1));
        assert_eq!(
            hl("-3t^(1/2)+3t'^(1/2)"),
            HalfLaurent::from_terms([(1, -3), (-1, 3)])
        );
        assert_eq!(hl("t^(-2)"), HalfLaurent::monomial(-4, 1));
    }

    #[test]
    fn parse_errors_report_offset() {
        let err = "t + * 2".parse::<HalfLaurent>().unwrap_err();
        assert!(matches!(err, Error::Parse { offset: 4, .. }), "{err:?}");
        assert!("t^(1/3)".parse::<HalfLaurent>().is_err());
    }

    #[test]
    fn units() {
        let a = hl("t - 1 + t^-1");
        assert!(a.equal_up_to_units(&hl("-t^2 + t - 1")));
        assert!(!a.equal_up_to_units(&hl("t + 1 + t^-1")));
        let b = hl("3*t^(1/2) - 3*t^(-1/2)");
        assert!(b.equal_up_to_units(&hl("-3*t^(1/2) + 3*t^(-1/2)")));
        assert!(HalfLaurent::zero().equal_up_to_units(&HalfLaurent::zero()));
        assert!(!HalfLaurent::zero().equal_up_to_units(&HalfLaurent::one()));
    }

    #[test]
    fn division_is_exact_or_none() {
        let den = hl("t - 2 + t^-1");
        let num = &hl("t - 1 + t^-1") * &den;
        assert_eq!(num.div_exact(&den), Some(hl("t - 1 + t^-1")));
        assert_eq!(hl("t + 1").div_exact(&hl("t - 1")), None);
        let s = HalfLaurent::skein_factor();
        assert_eq!((&s * &s), den);
        assert_eq!(den.div_exact(&s), Some(s));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        // [[1, t], [t^2, 3]] -> 3 - t^3
        let m = vec![
            vec![IntPoly::constant(1), IntPoly::monomial(1, 1)],
            vec![IntPoly::monomial(1, 2), IntPoly::constant(3)],
        ];
        assert_eq!(det_bareiss(m), IntPoly::from_coeffs(vec![3, 0, 0, -1]));
        // zero leading pivot forces a row swap
        let m = vec![
            vec![IntPoly::zero(), IntPoly::constant(1), IntPoly::zero()],
            vec![IntPoly::constant(1), IntPoly::zero(), IntPoly::zero()],
            vec![IntPoly::zero(), IntPoly::zero(), IntPoly::monomial(2, 1)],
        ];
        assert_eq!(det_bareiss(m), IntPoly::monomial(-2, 1));
        assert_eq!(det_bareiss(Vec::new()), IntPoly::constant(1));
    }

    #[test]
    fn json_form() {
        let p = hl("t - 1 + t^-1");
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, "[[-2,1],[0,-1],[2,1]]");
        let back: HalfLaurent = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
