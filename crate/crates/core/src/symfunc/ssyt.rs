//! Brute-force Schur values as sums over semistandard Young tableaux.

use num_traits::{One, Zero};

use super::types::{SatakeParams, Signature};
use crate::error::{Error, Result};
use crate::scalar::Rational;

/// Largest weight the tableau oracle will enumerate unless told otherwise.
pub const DEFAULT_SSYT_BUDGET: i64 = 12;

/// Visits every SSYT of shape `lambda` with entries in `1..=n`, column by
/// column, calling `visit` with the entries in fill order.
fn for_each_ssyt(lambda: &[usize], n: usize, mut visit: impl FnMut(&[usize])) {
    let cols = lambda.first().copied().unwrap_or(0);
    // cells in column-major order as (row, col)
    let mut cells = Vec::new();
    for c in 0..cols {
        for (r, &len) in lambda.iter().enumerate() {
            if len > c {
                cells.push((r, c));
            }
        }
    }
    let mut grid = vec![vec![0usize; cols]; lambda.len()];
    let mut fill = Vec::with_capacity(cells.len());

    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        n: usize,
        grid: &mut Vec<Vec<usize>>,
        fill: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        let Some(&(r, c)) = cells.get(idx) else {
            visit(fill);
            return;
        };
        // strictly increasing down columns, weakly along rows
        let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        let left = if c > 0 { grid[r][c - 1] } else { 1 };
        for v in above.max(left)..=n {
            grid[r][c] = v;
            fill.push(v);
            go(idx + 1, cells, n, grid, fill, visit);
            fill.pop();
        }
    }
    go(0, &cells, n, &mut grid, &mut fill, &mut visit);
}

fn check_budget(f: &Signature, budget: i64) -> Result<Vec<usize>> {
    let lambda = f.partition()?;
    if f.weight() > budget {
        return Err(Error::OverBudget { weight: f.weight(), budget });
    }
    Ok(lambda)
}

/// `Σ_T Π_cells α_{T(cell)}` over SSYT `T` of shape `f` with entries in `1..=n`.
pub fn schur_ssyt_oracle(f: &Signature, alpha: &SatakeParams, budget: i64) -> Result<Rational> {
    alpha.check_signature(f)?;
    let lambda = check_budget(f, budget)?;
    let mut total = Rational::zero();
    for_each_ssyt(&lambda, alpha.rank(), |entries| {
        let mut prod = Rational::one();
        for &e in entries {
            prod *= &alpha.alphas()[e - 1];
            if prod.is_zero() {
                return;
            }
        }
        total += prod;
    });
    Ok(total)
}

/// Number of SSYT of shape `f` with entries in `1..=n`.
pub fn ssyt_count(f: &Signature, n: usize, budget: i64) -> Result<u64> {
    let lambda = check_budget(f, budget)?;
    let mut count = 0u64;
    for_each_ssyt(&lambda, n, |_| count += 1);
    Ok(count)
}
