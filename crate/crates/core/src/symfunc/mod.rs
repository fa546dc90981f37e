//! Symmetric functions evaluated at concrete rational points.
//!
//! Schur polynomials are available three ways: the bialternant ratio
//! `det(x_j^{λ_i + k - i}) / Π_{i<j} (x_i - x_j)`, the Jacobi–Trudi
//! determinant `det(h_{λ_i - i + j})`, and a direct sum over semistandard
//! tableaux. The first falls back to the second when the Vandermonde
//! denominator vanishes.

mod ssyt;
mod types;

pub use ssyt::{schur_ssyt_oracle, ssyt_count, DEFAULT_SSYT_BUDGET};
pub use types::{dominant_signatures, SatakeParams, Signature};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::determinant;
use crate::scalar::{rational, Rational};

/// `e_0, ..., e_m` of the given variables (coefficients of `Π (1 + x_j T)`).
pub fn elementary_all(vars: &[Rational]) -> Vec<Rational> {
    let mut e = vec![Rational::one()];
    for x in vars {
        e.push(Rational::zero());
        for i in (1..e.len()).rev() {
            let t = &e[i - 1] * x;
            e[i] += t;
        }
    }
    e
}

/// `h_0, ..., h_kmax` of the given variables.
pub fn complete_all(vars: &[Rational], kmax: usize) -> Vec<Rational> {
    // h_k(x_1..x_m) = h_k(x_1..x_{m-1}) + x_m h_{k-1}(x_1..x_m)
    let mut h = vec![Rational::zero(); kmax + 1];
    h[0] = Rational::one();
    for x in vars {
        for k in 1..=kmax {
            let t = &h[k - 1] * x;
            h[k] += t;
        }
    }
    h
}

/// Elementary symmetric polynomial `e_i(α)`, `0 <= i <= n`.
pub fn elementary_e(i: usize, alpha: &SatakeParams) -> Result<Rational> {
    let n = alpha.rank();
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    Ok(elementary_all(alpha.alphas()).swap_remove(i))
}

/// Complete homogeneous symmetric polynomial `h_k(α)`.
pub fn complete_h(k: usize, alpha: &SatakeParams) -> Rational {
    complete_all(alpha.alphas(), k).swap_remove(k)
}

fn nonzero_vars(alpha: &SatakeParams) -> Vec<Rational> {
    alpha.alphas().iter().filter(|x| !x.is_zero()).cloned().collect()
}

/// Bialternant ratio in `vars`; `None` when two variables coincide.
fn bialternant(lambda: &[usize], vars: &[Rational]) -> Option<Rational> {
    let k = vars.len();
    let mut vandermonde = Rational::one();
    for i in 0..k {
        for j in i + 1..k {
            vandermonde *= &vars[i] - &vars[j];
        }
    }
    if vandermonde.is_zero() {
        return None;
    }
    let row = |i: usize| lambda.get(i).copied().unwrap_or(0) + k - 1 - i;
    let m: Vec<Vec<Rational>> = (0..k)
        .map(|i| vars.iter().map(|x| rational::pow(x, row(i) as u32)).collect())
        .collect();
    Some(determinant(m) / vandermonde)
}

fn jacobi_trudi(lambda: &[usize], vars: &[Rational]) -> Rational {
    let l = lambda.len();
    if l == 0 {
        return Rational::one();
    }
    let h = complete_all(vars, lambda[0] + l);
    let m: Vec<Vec<Rational>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let idx = lambda[i] as i64 - i as i64 + j as i64;
                    if idx < 0 {
                        Rational::zero()
                    } else {
                        h[idx as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    determinant(m)
}

/// `s_λ` at `vars`, zero variables dropped first.
pub(crate) fn schur_partition(lambda: &[usize], vars: &[Rational]) -> Rational {
    let vars: Vec<Rational> = vars.iter().filter(|x| !x.is_zero()).cloned().collect();
    if lambda.len() > vars.len() {
        return Rational::zero();
    }
    bialternant(lambda, &vars).unwrap_or_else(|| jacobi_trudi(lambda, &vars))
}

/// `s_f(α)` via the bialternant, with `f` padded by a trailing zero to length `n`.
///
/// Zero parameters are removed before evaluation; if the remaining ones
/// repeat, the Jacobi–Trudi determinant is used instead.
pub fn schur_bialternant(f: &Signature, alpha: &SatakeParams) -> Result<Rational> {
    alpha.check_signature(f)?;
    let lambda = f.partition()?;
    Ok(schur_partition(&lambda, alpha.alphas()))
}

/// `s_f(α) = det(h_{f_i - i + j}(α))`.
pub fn schur_jacobi_trudi(f: &Signature, alpha: &SatakeParams) -> Result<Rational> {
    alpha.check_signature(f)?;
    let lambda = f.partition()?;
    Ok(jacobi_trudi(&lambda, &nonzero_vars(alpha)))
}

/// All dominant `f + ε` with `ε ∈ {0,1}^{n-1}` having exactly `i` ones.
pub fn pieri_expand(f: &Signature, i: usize) -> Result<Vec<Signature>> {
    let slots = f.parts().len();
    if i == 0 || i > slots {
        return Err(Error::IndexOutOfRange { index: i, max: slots });
    }
    if !f.is_dominant() {
        return Err(Error::NotDominant(f.parts().to_vec()));
    }
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(i);
    fn walk(start: usize, slots: usize, i: usize, chosen: &mut Vec<usize>, f: &Signature, out: &mut Vec<Signature>) {
        if chosen.len() == i {
            let mut parts = f.parts().to_vec();
            for &j in chosen.iter() {
                parts[j] += 1;
            }
            let g = Signature::new(parts);
            if g.is_dominant() {
                out.push(g);
            }
            return;
        }
        for j in start..slots {
            chosen.push(j);
            walk(j + 1, slots, i, chosen, f, out);
            chosen.pop();
        }
    }
    walk(0, slots, i, &mut chosen, f, &mut out);
    Ok(out)
}
