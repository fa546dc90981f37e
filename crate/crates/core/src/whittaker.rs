//! Newform Whittaker values on the torus, Hecke eigenvalues, and the
//! difference equations that tie them together.
//!
//! With the normalization `W(1) = 1`, the newform Whittaker function at
//! `ϖ^f = diag(ϖ^{f_1}, ..., ϖ^{f_{n-1}}, 1)` is
//!
//! ```text
//! W(ϖ^f) = δ_B^{1/2}(ϖ^f) s_f(α)   if f_1 >= ... >= f_{n-1} >= 0
//!        = 0                       otherwise
//! ```
//!
//! Two independent checks are provided. [`verify_recursion`] evaluates both
//! sides of the Hecke difference equations using closed-form values, and
//! [`solve_recursion_linear`] rebuilds the values from the equations alone by
//! exact elimination.

use std::collections::BTreeMap;

use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{solve_sparse, SparseRow};
use crate::scalar::{LaurentScalar, Rational, XPoly};
use crate::symfunc::{dominant_signatures, pieri_expand, schur_bialternant, SatakeParams, Signature};

/// Exponent `e` with `δ_B^{1/2}(ϖ^f) = v^e`, i.e. `-Σ_j (n + 1 - 2j) f_j`.
pub fn modulus_sqrt_exponent(f: &Signature) -> i64 {
    let n = f.rank() as i64;
    -f.parts()
        .iter()
        .enumerate()
        .map(|(idx, fj)| (n + 1 - 2 * (idx as i64 + 1)) * fj)
        .sum::<i64>()
}

/// Positive square root of the modulus character of the Borel at `ϖ^f`.
pub fn modulus_sqrt(f: &Signature) -> LaurentScalar {
    LaurentScalar::v_pow(modulus_sqrt_exponent(f))
}

/// `W(ϖ^f)` for the newform normalized by `W(1) = 1`.
pub fn whittaker_value(f: &Signature, alpha: &SatakeParams) -> Result<LaurentScalar> {
    alpha.check_signature(f)?;
    if !f.is_dominant() {
        return Ok(LaurentScalar::zero());
    }
    let s = schur_bialternant(f, alpha)?;
    Ok(modulus_sqrt(f).scale(&s))
}

/// `Σ_j (n - 1 - j) f_j`, the `q`-exponent relating `w̃` to `W`.
fn tilde_q_exponent(f: &Signature) -> i64 {
    let n = f.rank() as i64;
    f.parts()
        .iter()
        .enumerate()
        .map(|(idx, fj)| (n - 1 - (idx as i64 + 1)) * fj)
        .sum()
}

/// `w̃(f) = q^{Σ_j (n-1-j) f_j} W(ϖ^f)`.
pub fn whittaker_tilde(f: &Signature, alpha: &SatakeParams) -> Result<LaurentScalar> {
    Ok(whittaker_value(f, alpha)?.shift(2 * tilde_q_exponent(f)))
}

/// Hecke eigenvalues `λ_1, ..., λ_{n-1}` of the operators `T_{ϖ^{f^i}}`
/// on the newform line, `f^i = (1, ..., 1, 0, ..., 0)` with `i` ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeckeEigenvalues {
    pub n: usize,
    pub lambdas: Vec<LaurentScalar>,
}

impl HeckeEigenvalues {
    /// `λ_i` with the convention `λ_0 = 1`.
    pub fn lambda(&self, i: usize) -> LaurentScalar {
        if i == 0 {
            LaurentScalar::one()
        } else {
            self.lambdas[i - 1].clone()
        }
    }
}

/// `μ_i = q^{(n-1)/2 - 1} α_i = v^{n-3} α_i`.
pub fn auxiliary_mu(alpha: &SatakeParams) -> Vec<LaurentScalar> {
    let shift = alpha.rank() as i64 - 3;
    alpha
        .alphas()
        .iter()
        .map(|a| LaurentScalar::monomial(a.clone(), shift))
        .collect()
}

fn elementary_laurent(vars: &[LaurentScalar]) -> Vec<LaurentScalar> {
    let mut e = vec![LaurentScalar::one()];
    for x in vars {
        e.push(LaurentScalar::zero());
        for i in (1..e.len()).rev() {
            let t = &e[i - 1] * x;
            e[i] += &t;
        }
    }
    e
}

/// Eigenvalues from Satake parameters: `e_i(μ) = q^{i(i-1)/2 - i} λ_i`.
///
/// This is the positive-conductor relation; for unramified parameters the
/// spherical Hecke algebra has its own normalization.
pub fn eigen_from_satake(alpha: &SatakeParams) -> HeckeEigenvalues {
    let n = alpha.rank();
    let e_mu = elementary_laurent(&auxiliary_mu(alpha));
    let lambdas = (1..n)
        .map(|i| {
            let i = i as i64;
            e_mu[i as usize].shift(2 * i - i * (i - 1))
        })
        .collect();
    HeckeEigenvalues { n, lambdas }
}

/// Denominator of `L(s, π)` as a polynomial in `X = q^{-s}`:
/// `Σ_i (-1)^i λ_i q^{i(i-1)/2 - i(n-1)/2} X^i`.
///
/// Every coefficient must come out free of `v`; a leftover power means
/// the eigenvalues are not those of a newform.
pub fn lfactor_den_from_eigen(eigen: &HeckeEigenvalues) -> Result<XPoly> {
    let n = eigen.n as i64;
    let mut coeffs = Vec::with_capacity(eigen.n);
    for i in 0..eigen.n {
        let ii = i as i64;
        let mut term = eigen.lambda(i).shift(ii * (ii - 1) - ii * (n - 1));
        if i % 2 == 1 {
            term = -term;
        }
        let c = term.as_rational().ok_or_else(|| Error::ResidualVPower {
            degree: i,
            exponent: term.terms().map(|(e, _)| e).find(|&e| e != 0).unwrap_or(0),
        })?;
        coeffs.push(c);
    }
    Ok(XPoly::new(coeffs))
}

/// One instance of the difference equation at `(f, i)`.
#[derive(Clone, Debug, Serialize)]
pub struct RecursionCheck {
    pub f: Signature,
    pub i: usize,
    /// `q^{i(i-1)/2 - i} λ_i w̃(f)`
    pub lhs: LaurentScalar,
    /// `Σ_{ε ∈ I_i} w̃(f + ε)`
    pub rhs: LaurentScalar,
    /// The same identity written in `W` directly, with the `q^{-Σ ε_j j}` weights.
    pub untwisted_holds: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RecursionReport {
    pub n: usize,
    pub weight_bound: i64,
    pub checks: Vec<RecursionCheck>,
}

impl RecursionReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RecursionCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// All 0/1 vectors of length `len` with exactly `ones` ones.
fn zero_one_vectors(len: usize, ones: usize) -> Vec<Vec<i64>> {
    (0u64..1 << len)
        .filter(|m| m.count_ones() as usize == ones)
        .map(|m| (0..len).map(|j| (m >> j & 1) as i64).collect())
        .collect()
}

/// Checks the Hecke difference equations against closed-form values for
/// every dominant `f` of weight at most `weight_bound` and every `1 <= i < n`.
///
/// The sum runs over all of `I_i`, so non-dominant neighbours enter through
/// the support condition of [`whittaker_value`].
pub fn verify_recursion(alpha: &SatakeParams, weight_bound: i64) -> Result<RecursionReport> {
    let n = alpha.rank();
    let eigen = eigen_from_satake(alpha);
    let mut checks = Vec::new();
    for f in dominant_signatures(n, weight_bound) {
        let w_f = whittaker_value(&f, alpha)?;
        let wt_f = whittaker_tilde(&f, alpha)?;
        for i in 1..n {
            let ii = i as i64;
            let lambda = eigen.lambda(i);
            let eps_set = zero_one_vectors(n - 1, i);

            let lhs = (&lambda * &wt_f).shift(ii * (ii - 1) - 2 * ii);
            let mut rhs = LaurentScalar::zero();
            // q^{-i} λ_i w(f) = q^{i(n-1) - i(i-1)/2} Σ_ε q^{-Σ_j ε_j j} w(f+ε)
            let untwisted_lhs = (&lambda * &w_f).shift(-2 * ii);
            let mut untwisted_rhs = LaurentScalar::zero();
            for eps in &eps_set {
                let g = Signature::new(f.parts().iter().zip(eps).map(|(a, b)| a + b).collect());
                rhs += &whittaker_tilde(&g, alpha)?;
                let weight: i64 = eps.iter().enumerate().map(|(j, e)| e * (j as i64 + 1)).sum();
                untwisted_rhs += &whittaker_value(&g, alpha)?.shift(-2 * weight);
            }
            let untwisted_rhs = untwisted_rhs.shift(2 * ii * (n as i64 - 1) - ii * (ii - 1));
            let untwisted_holds = untwisted_lhs == untwisted_rhs;
            let passed = lhs == rhs && untwisted_holds;
            checks.push(RecursionCheck { f: f.clone(), i, lhs, rhs, untwisted_holds, passed });
        }
    }
    Ok(RecursionReport { n, weight_bound, checks })
}

/// `W(ϖ^f)` on every dominant signature up to a weight bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhittakerTable {
    pub n: usize,
    pub alpha: SatakeParams,
    pub max_weight: i64,
    pub entries: BTreeMap<Signature, LaurentScalar>,
}

impl WhittakerTable {
    /// Table filled from the closed form.
    pub fn closed_form(alpha: &SatakeParams, max_weight: i64) -> Result<Self> {
        let n = alpha.rank();
        let entries = dominant_signatures(n, max_weight)
            .into_par_iter()
            .map(|f| whittaker_value(&f, alpha).map(|w| (f, w)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Self { n, alpha: alpha.clone(), max_weight, entries })
    }

    /// Stored value; signatures outside the table (non-dominant ones in
    /// particular) read as zero.
    pub fn get(&self, f: &Signature) -> LaurentScalar {
        self.entries.get(f).cloned().unwrap_or_default()
    }

    /// First signature where the two tables disagree.
    pub fn first_mismatch(&self, other: &WhittakerTable) -> Option<Signature> {
        self.entries
            .keys()
            .chain(other.entries.keys())
            .find(|f| self.get(f) != other.get(f))
            .cloned()
    }
}

/// Rebuilds the Whittaker values from the Hecke equations alone.
///
/// Unknowns are `u(f) = s_f(α)`, related to `w̃` by `w̃(f) = v^{(n-3)|f|} u(f)`,
/// so each equation `q^{i(i-1)/2-i} λ_i w̃(f) = Σ w̃(f+ε)` becomes
/// `c_i u(f) = Σ_{g ∈ pieri(f, i)} u(g)` with a rational `c_i` read off the
/// eigenvalues. Together with `u(0) = 1` the system must have exactly one
/// solution on the weight range; anything else is reported as an error.
pub fn solve_recursion_linear(alpha: &SatakeParams, weight_bound: i64) -> Result<WhittakerTable> {
    let n = alpha.rank();
    let eigen = eigen_from_satake(alpha);
    let shift = n as i64 - 3;

    let mut coeff = vec![Rational::one()];
    for i in 1..n {
        let ii = i as i64;
        let c = eigen.lambda(i).shift(ii * (ii - 1) - 2 * ii - ii * shift);
        let c = c.as_rational().ok_or(Error::ResidualVPower {
            degree: i,
            exponent: c.terms().next().map_or(0, |(e, _)| e),
        })?;
        coeff.push(c);
    }

    let unknowns = dominant_signatures(n, weight_bound);
    let index: BTreeMap<&Signature, usize> = unknowns.iter().enumerate().map(|(k, f)| (f, k)).collect();

    let mut rows = Vec::new();
    let mut norm = SparseRow { rhs: Rational::one(), ..Default::default() };
    norm.add(index[&Signature::zero(n)], Rational::one());
    rows.push(norm);
    for f in &unknowns {
        for (i, c_i) in coeff.iter().enumerate().skip(1) {
            if f.weight() + i as i64 > weight_bound {
                continue;
            }
            let mut row = SparseRow::default();
            row.add(index[f], c_i.clone());
            for g in pieri_expand(f, i)? {
                row.add(index[&g], -Rational::one());
            }
            rows.push(row);
        }
    }
    let solution = solve_sparse(rows, unknowns.len())?;

    let entries = unknowns
        .iter()
        .zip(solution)
        .map(|(f, u)| {
            let w_tilde = LaurentScalar::monomial(u, shift * f.weight());
            (f.clone(), w_tilde.shift(-2 * tilde_q_exponent(f)))
        })
        .collect();
    Ok(WhittakerTable { n, alpha: alpha.clone(), max_weight: weight_bound, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use crate::symfunc::{complete_h, elementary_e};

    fn a() -> SatakeParams {
        SatakeParams::new(vec![rat(1, 2), rat(1, 3), int(0)]).unwrap()
    }

    fn sig(p: &[i64]) -> Signature {
        Signature::new(p.to_vec())
    }

    #[test]
    fn modulus_examples() {
        assert_eq!(modulus_sqrt(&sig(&[0, 0])), LaurentScalar::one());
        assert_eq!(modulus_sqrt(&sig(&[2, 1])), LaurentScalar::v_pow(-4));
        for k in 0..5 {
            assert_eq!(modulus_sqrt(&sig(&[k])), LaurentScalar::v_pow(-k));
        }
    }

    #[test]
    fn value_examples() {
        assert_eq!(whittaker_value(&sig(&[0, 0]), &a()).unwrap(), LaurentScalar::one());
        assert!(whittaker_value(&sig(&[0, 1]), &a()).unwrap().is_zero());
        assert_eq!(
            whittaker_value(&sig(&[2, 1]), &a()).unwrap(),
            LaurentScalar::monomial(rat(5, 36), -4)
        );
        assert!(matches!(whittaker_value(&sig(&[1]), &a()), Err(Error::SignatureLength { .. })));
    }

    #[test]
    fn eigen_examples() {
        let x = rat(-7, 3);
        let two = SatakeParams::new(vec![x.clone(), int(0)]).unwrap();
        assert_eq!(eigen_from_satake(&two).lambdas, vec![LaurentScalar::monomial(x.clone(), 1)]);

        let e = eigen_from_satake(&a());
        assert_eq!(e.lambdas, vec![
            LaurentScalar::monomial(rat(5, 6), 2),
            LaurentScalar::monomial(rat(1, 6), 2),
        ]);

        let zeros = SatakeParams::new(vec![int(0); 5]).unwrap();
        assert!(eigen_from_satake(&zeros).lambdas.iter().all(LaurentScalar::is_zero));
    }

    #[test]
    fn eigen_closed_exponent() {
        let p = SatakeParams::new(vec![rat(1, 2), rat(-1, 3), rat(2, 5), rat(3, 7), int(0)]).unwrap();
        let n = 5i64;
        let e = eigen_from_satake(&p);
        for i in 1..5i64 {
            let exp = 2 * i - i * (i - 1) + i * (n - 3);
            let want = LaurentScalar::monomial(elementary_e(i as usize, &p).unwrap(), exp);
            assert_eq!(e.lambda(i as usize), want);
        }
    }

    #[test]
    fn lfactor_examples() {
        let den = lfactor_den_from_eigen(&eigen_from_satake(&a())).unwrap();
        assert_eq!(den, XPoly::new(vec![int(1), rat(-5, 6), rat(1, 6)]));
        assert_eq!(den, XPoly::one_minus(&rat(1, 2)).mul(&XPoly::one_minus(&rat(1, 3))));

        let zero = HeckeEigenvalues { n: 3, lambdas: vec![LaurentScalar::zero(); 2] };
        assert_eq!(lfactor_den_from_eigen(&zero).unwrap(), XPoly::one());

        let x = rat(4, 9);
        let two = HeckeEigenvalues { n: 2, lambdas: vec![LaurentScalar::monomial(x.clone(), 1)] };
        assert_eq!(lfactor_den_from_eigen(&two).unwrap(), XPoly::one_minus(&x));
    }

    #[test]
    fn lfactor_rejects_residual_power() {
        let bad = HeckeEigenvalues { n: 2, lambdas: vec![LaurentScalar::monomial(int(1), 2)] };
        assert_eq!(lfactor_den_from_eigen(&bad), Err(Error::ResidualVPower { degree: 1, exponent: 1 }));
    }

    #[test]
    fn recursion_spot_instance() {
        let report = verify_recursion(&a(), 4).unwrap();
        assert!(report.all_passed());
        let first = report.checks.iter().find(|c| c.f == sig(&[0, 0]) && c.i == 1).unwrap();
        assert_eq!(first.lhs, LaurentScalar::from_rational(rat(5, 6)));
        assert_eq!(first.rhs, LaurentScalar::from_rational(rat(5, 6)));
    }

    #[test]
    fn recursion_gl2_geometric() {
        let x = rat(3, 7);
        let p = SatakeParams::new(vec![x.clone(), int(0)]).unwrap();
        assert!(verify_recursion(&p, 5).unwrap().all_passed());
        let lambda = eigen_from_satake(&p).lambda(1);
        for k in 0..5 {
            let next = whittaker_tilde(&sig(&[k + 1]), &p).unwrap();
            let here = whittaker_tilde(&sig(&[k]), &p).unwrap();
            assert_eq!(next, (&lambda * &here).shift(-2));
        }
    }

    #[test]
    fn recursion_zero_parameters() {
        let p = SatakeParams::new(vec![int(0); 4]).unwrap();
        let report = verify_recursion(&p, 3).unwrap();
        assert!(report.all_passed());
        for c in &report.checks {
            assert!(c.lhs.is_zero() && c.rhs.is_zero());
        }
        assert_eq!(whittaker_tilde(&sig(&[0, 0, 0]), &p).unwrap(), LaurentScalar::one());
    }

    #[test]
    fn recursion_detects_unramified_mismatch() {
        // the (n-1)-variable equations describe positive conductor only
        let p = SatakeParams::new(vec![rat(1, 2), rat(1, 3)]).unwrap();
        assert!(!verify_recursion(&p, 2).unwrap().all_passed());
        let solved = solve_recursion_linear(&p, 3).unwrap();
        let closed = WhittakerTable::closed_form(&p, 3).unwrap();
        assert_eq!(solved.first_mismatch(&closed), Some(sig(&[2])));
    }

    #[test]
    fn linear_solve_gl2() {
        let p = SatakeParams::new(vec![rat(1, 2), int(0)]).unwrap();
        let table = solve_recursion_linear(&p, 4).unwrap();
        for k in 0..=4 {
            let want = LaurentScalar::monomial(rat(1, 1 << k), -k);
            assert_eq!(table.get(&sig(&[k])), want);
        }
    }

    #[test]
    fn linear_solve_matches_closed_form() {
        let solved = solve_recursion_linear(&a(), 4).unwrap();
        let closed = WhittakerTable::closed_form(&a(), 4).unwrap();
        assert_eq!(solved.entries.len(), closed.entries.len());
        assert_eq!(solved.first_mismatch(&closed), None);
        assert_eq!(solved.get(&sig(&[0, 0])), LaurentScalar::one());
    }

    #[test]
    fn unramified_gl2_formula() {
        let (a1, a2) = (rat(2, 3), rat(-1, 5));
        let p = SatakeParams::new(vec![a1.clone(), a2.clone()]).unwrap();
        for k in 0..8i64 {
            let h = complete_h(k as usize, &p);
            let num = crate::scalar::rational::pow(&a1, k as u32 + 1) - crate::scalar::rational::pow(&a2, k as u32 + 1);
            assert_eq!(h, num / (&a1 - &a2));
            assert_eq!(whittaker_value(&sig(&[k]), &p).unwrap(), LaurentScalar::monomial(h, -k));
        }
    }
}
