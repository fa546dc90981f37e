//! Laurent polynomials in `v = q^{1/2}` with exact rational coefficients.
//!
//! Every quantity that carries a half-integral power of `q` (square roots of
//! the modulus character, Hecke eigenvalues, Whittaker values) lives here.
//! The formal variable satisfies `v^2 = q`; numeric evaluation takes the
//! positive square root.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// Finite sum `Σ c_e v^e`; zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentScalar {
    coeffs: BTreeMap<i64, Rational>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::from_integer(1.into()), 0)
    }

    /// `c * v^e`.
    pub fn monomial(c: Rational, e: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        Self { coeffs }
    }

    /// `v^e`.
    pub fn v_pow(e: i64) -> Self {
        Self::monomial(Rational::from_integer(1.into()), e)
    }

    /// `q^e = v^{2e}`.
    pub fn q_pow(e: i64) -> Self {
        Self::v_pow(2 * e)
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// `Some((e, c))` when the value is exactly `c * v^e` with `c != 0`.
    pub fn as_monomial(&self) -> Option<(i64, &Rational)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    /// The value as a plain rational, if no power of `v` survives.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    /// Multiplies by `v^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(k, c)| (k + e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(k, x)| (*k, x * c)).collect(),
        }
    }

    fn add_term(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    /// Floating approximation at `v = +sqrt(q)`. Display only.
    pub fn numeric_eval(&self, q: u64) -> f64 {
        let v = (q as f64).sqrt();
        self.coeffs
            .iter()
            .map(|(e, c)| c.to_f64().unwrap_or(f64::NAN) * v.powi(*e as i32))
            .sum()
    }

    /// JSON form: exponent strings mapped to rational strings.
    pub fn to_string_map(&self) -> BTreeMap<String, String> {
        self.coeffs
            .iter()
            .map(|(e, c)| (e.to_string(), format_rational(c)))
            .collect()
    }

    pub fn from_string_map<'a, I>(map: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a String, &'a String)>,
    {
        let mut out = Self::zero();
        for (e, c) in map {
            let e: i64 = e
                .trim()
                .parse()
                .map_err(|_| Error::MalformedScalar(e.clone()))?;
            out.add_term(e, parse_rational(c)?);
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let body = format_rational(&c.abs());
            let sign = c.is_negative();
            match (idx, sign) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *e == 0 {
                f.write_str(&body)?;
            } else {
                write!(f, "{body}*v^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentScalar({self})")
    }
}

impl FromStr for LaurentScalar {
    type Err = Error;

    /// Accepts the canonical text form, plus bare `v`, `v^e` and `c*v`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedScalar(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        // split before every sign that is not part of an exponent
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for (pos, &b) in bytes.iter().enumerate() {
            if pos > start && (b == b'+' || b == b'-') && bytes[pos - 1] != b'^' {
                terms.push(&compact[start..pos]);
                start = pos;
            }
        }
        terms.push(&compact[start..]);

        let mut out = Self::zero();
        for term in terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            let (coef, exp) = match body.split_once('v') {
                None => (body, 0),
                Some((c, e)) => {
                    let c = match c.strip_suffix('*') {
                        Some(c) => c,
                        None if c.is_empty() => "1",
                        None => return Err(bad()),
                    };
                    let e = match e.strip_prefix('^') {
                        Some(e) => e.parse::<i64>().map_err(|_| bad())?,
                        None if e.is_empty() => 1,
                        None => return Err(bad()),
                    };
                    (c, e)
                }
            };
            if coef.is_empty() {
                return Err(bad());
            }
            let mut c = parse_rational(coef).map_err(|_| bad())?;
            if neg {
                c = -c;
            }
            out.add_term(exp, c);
        }
        Ok(out)
    }
}

impl Serialize for LaurentScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_string_map().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let map = BTreeMap::<String, String>::deserialize(deserializer)?;
        Self::from_string_map(&map).map_err(serde::de::Error::custom)
    }
}

impl From<Rational> for LaurentScalar {
    fn from(c: Rational) -> Self {
        Self::from_rational(c)
    }
}

impl AddAssign<&LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, rhs: &LaurentScalar) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl Add<&LaurentScalar> for &LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentScalar {
    type Output = LaurentScalar;
    fn add(mut self, rhs: LaurentScalar) -> LaurentScalar {
        self += &rhs;
        self
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -&self
    }
}

impl Sub<&LaurentScalar> for &LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Sub for LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: LaurentScalar) -> LaurentScalar {
        &self - &rhs
    }
}

impl Mul<&LaurentScalar> for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: LaurentScalar) -> LaurentScalar {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentScalar {
    fn sum<I: Iterator<Item = LaurentScalar>>(iter: I) -> Self {
        iter.fold(LaurentScalar::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::{int, rat};
    use proptest::prelude::*;

    fn v() -> LaurentScalar {
        LaurentScalar::v_pow(1)
    }

    #[test]
    fn inverse_exponents_cancel() {
        assert_eq!(&v() * &LaurentScalar::v_pow(-1), LaurentScalar::one());
    }

    #[test]
    fn difference_of_squares() {
        let one = LaurentScalar::one();
        let lhs = &(&one + &v()) * &(&one - &v());
        let expected = &one - &LaurentScalar::v_pow(2);
        assert_eq!(lhs, expected);
    }

    #[test]
    fn additive_inverse_is_empty() {
        let a = LaurentScalar::monomial(rat(1, 2), 3);
        let b = LaurentScalar::monomial(rat(-1, 2), 3);
        let s = &a + &b;
        assert!(s.is_zero());
        assert_eq!(s.num_terms(), 0);
        assert_eq!(s.to_string(), "0");
    }

    #[test]
    fn numeric_examples() {
        assert!((LaurentScalar::v_pow(-2).numeric_eval(4) - 0.25).abs() < 1e-15);
        assert_eq!(LaurentScalar::zero().numeric_eval(9), 0.0);
        let half_v = LaurentScalar::monomial(rat(1, 2), 1);
        assert!((half_v.numeric_eval(4) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn canonical_text() {
        let w = LaurentScalar::monomial(rat(5, 36), -4);
        assert_eq!(w.to_string(), "5/36*v^-4");
        let mixed = &(&LaurentScalar::monomial(rat(-1, 2), 3) + &LaurentScalar::one())
            + &LaurentScalar::monomial(int(2), -1);
        assert_eq!(mixed.to_string(), "-1/2*v^3 + 1 + 2*v^-1");
        assert_eq!(mixed.to_string().parse::<LaurentScalar>().unwrap(), mixed);
    }

    #[test]
    fn parse_loose_forms() {
        assert_eq!("v".parse::<LaurentScalar>().unwrap(), v());
        assert_eq!("3*v - v^-2".parse::<LaurentScalar>().unwrap(),
            &LaurentScalar::monomial(int(3), 1) - &LaurentScalar::v_pow(-2));
        assert!("".parse::<LaurentScalar>().is_err());
        assert!("1/2v".parse::<LaurentScalar>().is_err());
        assert!("*v^2".parse::<LaurentScalar>().is_err());
    }

    #[test]
    fn json_map() {
        let w = LaurentScalar::monomial(rat(5, 36), -4);
        let js = serde_json::to_string(&w).unwrap();
        assert_eq!(js, r#"{"-4":"5/36"}"#);
        let back: LaurentScalar = serde_json::from_str(&js).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn rational_projection() {
        assert_eq!(LaurentScalar::zero().as_rational(), Some(int(0)));
        assert_eq!(LaurentScalar::from_rational(rat(1, 3)).as_rational(), Some(rat(1, 3)));
        assert_eq!(v().as_rational(), None);
    }

    fn arb_scalar() -> impl Strategy<Value = LaurentScalar> {
        proptest::collection::vec((-4i64..=4, -6i64..=6, 1i64..=5), 0..5).prop_map(|terms| {
            terms
                .into_iter()
                .map(|(e, n, d)| LaurentScalar::monomial(rat(n, d), e))
                .sum()
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn text_roundtrip(a in arb_scalar()) {
            let back: LaurentScalar = a.to_string().parse().unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
