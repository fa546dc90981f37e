//! Polynomials and truncated power series in `X = q^{-s}`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Dense polynomial in `X`; `coeffs[k]` multiplies `X^k`. Trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct XPoly {
    coeffs: Vec<Rational>,
}

impl XPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![Rational::one()])
    }

    /// `1 - a X`.
    pub fn one_minus(a: &Rational) -> Self {
        Self::new(vec![Rational::one(), -a])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &XPoly) -> XPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return XPoly::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        XPoly::new(out)
    }
}

fn write_x_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    coeffs: impl Iterator<Item = (usize, &'a Rational)>,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs {
        if c.is_zero() {
            continue;
        }
        let body = format_rational(&c.abs());
        match (first, c.is_negative()) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        match k {
            0 => f.write_str(&body)?,
            1 => write!(f, "{body}*X")?,
            _ => write!(f, "{body}*X^{k}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_x_terms(f, self.coeffs.iter().enumerate())
    }
}

impl Serialize for XPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        v.serialize(s)
    }
}

/// Power series known through `X^order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Pads or truncates `coeffs` to exactly `order + 1` entries.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn from_poly(p: &XPoly, order: usize) -> Self {
        Self::from_coeffs(p.coeffs().to_vec(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        let order = self.order().min(other.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        TruncSeries { coeffs: out }
    }

    /// First index where the two series differ, comparing up to the smaller order.
    pub fn first_difference(&self, other: &TruncSeries) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_x_terms(f, self.coeffs.iter().enumerate())?;
        write!(f, " + O(X^{})", self.order() + 1)
    }
}

impl Serialize for TruncSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        v.serialize(s)
    }
}

/// Inverts `p` modulo `X^{order+1}`; `p` must have constant term exactly 1.
pub fn series_invert(p: &XPoly, order: usize) -> Result<TruncSeries> {
    let c0 = p.coeff(0);
    if !c0.is_one() {
        return Err(Error::NonUnitConstantTerm(format_rational(&c0)));
    }
    // t_k = -Σ_{j=1..k} p_j t_{k-j}
    let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
    out.push(Rational::one());
    for k in 1..=order {
        let mut acc = Rational::zero();
        for (j, pj) in p.coeffs().iter().enumerate().skip(1).take(k) {
            if !pj.is_zero() {
                acc -= pj * &out[k - j];
            }
        }
        out.push(acc);
    }
    Ok(TruncSeries { coeffs: out })
}
