//! The zeta integral of the newform against `GL(1)` in the upper-left
//! corner, as a truncated power series in `X = q^{-s}`.
//!
//! `Z(s, W) = Σ_k W(t(ϖ^k)) |ϖ^k|^{s-(n-1)/2}` with `t(a) = diag(a, 1, ..., 1)`.
//! The factor `|ϖ^k|^{-(n-1)/2} = v^{k(n-1)}` must cancel the modulus
//! character exactly, leaving rational coefficients; that cancellation is
//! checked, not assumed.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{series_invert, LaurentScalar, Rational, TruncSeries, XPoly};
use crate::symfunc::{SatakeParams, Signature};
use crate::whittaker::whittaker_value;

/// `Z(s, W)` through `X^order`, from the closed-form Whittaker values.
pub fn zeta_series(alpha: &SatakeParams, order: usize) -> Result<TruncSeries> {
    let n = alpha.rank();
    let mut coeffs: Vec<Rational> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut parts = vec![0i64; n - 1];
        parts[0] = k as i64;
        let w = whittaker_value(&Signature::new(parts), alpha)?;
        let term: LaurentScalar = w.shift(k as i64 * (n as i64 - 1));
        let c = term.as_rational().ok_or_else(|| Error::ResidualVPower {
            degree: k,
            exponent: term.terms().map(|(e, _)| e).find(|&e| e != 0).unwrap_or(0),
        })?;
        coeffs.push(c);
    }
    Ok(TruncSeries::from_coeffs(coeffs, order))
}

/// `Π_i (1 - α_i X)`.
pub fn lfactor_denominator(alpha: &SatakeParams) -> XPoly {
    alpha
        .alphas()
        .iter()
        .fold(XPoly::one(), |acc, a| acc.mul(&XPoly::one_minus(a)))
}

/// `L(s, π) = Π_i (1 - α_i X)^{-1}` through `X^order`.
pub fn lfactor_series(alpha: &SatakeParams, order: usize) -> TruncSeries {
    series_invert(&lfactor_denominator(alpha), order).expect("denominator has constant term 1")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub degree: usize,
    pub zeta: String,
    pub lfactor: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ZetaReport {
    pub order: usize,
    pub zeta: TruncSeries,
    pub lfactor: TruncSeries,
    pub first_discrepancy: Option<Discrepancy>,
}

impl ZetaReport {
    pub fn agrees(&self) -> bool {
        self.first_discrepancy.is_none()
    }
}

/// Compares `Z(s, W)` with `L(s, π)` coefficient by coefficient.
pub fn zeta_equals_lfactor(alpha: &SatakeParams, order: usize) -> Result<ZetaReport> {
    let zeta = zeta_series(alpha, order)?;
    let lfactor = lfactor_series(alpha, order);
    let first_discrepancy = zeta.first_difference(&lfactor).map(|k| Discrepancy {
        degree: k,
        zeta: crate::scalar::format_rational(zeta.coeff(k)),
        lfactor: crate::scalar::format_rational(lfactor.coeff(k)),
    });
    Ok(ZetaReport { order, zeta, lfactor, first_discrepancy })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn zeta_examples() {
        let p = SatakeParams::new(vec![rat(1, 2), int(0)]).unwrap();
        assert_eq!(zeta_series(&p, 3).unwrap().coeffs(), &[int(1), rat(1, 2), rat(1, 4), rat(1, 8)]);

        let z = SatakeParams::new(vec![int(0); 4]).unwrap();
        assert_eq!(zeta_series(&z, 2).unwrap(), TruncSeries::one(2));

        let q = SatakeParams::new(vec![rat(1, 2), rat(1, 3), int(0)]).unwrap();
        assert_eq!(zeta_series(&q, 2).unwrap().coeffs(), &[int(1), rat(5, 6), rat(19, 36)]);
    }

    #[test]
    fn lfactor_examples() {
        let p = SatakeParams::new(vec![rat(1, 2), int(0)]).unwrap();
        assert_eq!(lfactor_series(&p, 2).coeffs(), &[int(1), rat(1, 2), rat(1, 4)]);
        let z = SatakeParams::new(vec![int(0); 3]).unwrap();
        assert_eq!(lfactor_series(&z, 5), TruncSeries::one(5));
        let q = SatakeParams::new(vec![rat(1, 2), rat(1, 3), int(0)]).unwrap();
        assert_eq!(lfactor_series(&q, 2).coeffs(), &[int(1), rat(5, 6), rat(19, 36)]);
    }

    #[test]
    fn equality_instances() {
        let q = SatakeParams::new(vec![rat(1, 2), rat(1, 3), int(0)]).unwrap();
        assert!(zeta_equals_lfactor(&q, 30).unwrap().agrees());
        let g = SatakeParams::new(vec![rat(-5, 8), int(0)]).unwrap();
        assert!(zeta_equals_lfactor(&g, 20).unwrap().agrees());
        let z = SatakeParams::new(vec![int(0); 3]).unwrap();
        assert!(zeta_equals_lfactor(&z, 10).unwrap().agrees());
    }
}
