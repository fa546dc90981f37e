//! Exact linear algebra over the rationals: determinants for the Schur
//! formulas and a sparse elimination solver for the Hecke recursion.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Rational;

/// Determinant by Gaussian elimination. The empty matrix has determinant 1.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

/// One equation `Σ coeffs[j] x_j = rhs`.
#[derive(Clone, Debug, Default)]
pub struct SparseRow {
    pub coeffs: BTreeMap<usize, Rational>,
    pub rhs: Rational,
}

impl SparseRow {
    pub fn add(&mut self, var: usize, c: Rational) {
        let slot = self.coeffs.entry(var).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&var);
        }
    }

    fn axpy(&mut self, factor: &Rational, other: &SparseRow) {
        for (v, c) in &other.coeffs {
            self.add(*v, -(factor * c));
        }
        self.rhs -= factor * &other.rhs;
    }
}

/// Solves an (over)determined sparse system exactly.
///
/// Fails with [`Error::Underdetermined`] unless every unknown is pinned and
/// with [`Error::Inconsistent`] if a surplus equation reduces to `0 = c != 0`.
pub fn solve_sparse(rows: Vec<SparseRow>, unknowns: usize) -> Result<Vec<Rational>> {
    // pivot rows keyed by their leading variable, kept fully reduced against
    // each other so back substitution is a single pass
    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for mut row in rows {
        loop {
            let Some((&lead, c)) = row.coeffs.iter().find(|(v, _)| pivots.contains_key(v)) else {
                break;
            };
            let factor = c.clone();
            row.axpy(&factor, &pivots[&lead]);
        }
        let Some((&lead, c)) = row.coeffs.iter().next() else {
            if !row.rhs.is_zero() {
                return Err(Error::Inconsistent);
            }
            continue;
        };
        let inv = c.recip();
        let mut normalized = SparseRow::default();
        for (v, c) in &row.coeffs {
            normalized.coeffs.insert(*v, c * &inv);
        }
        normalized.rhs = &row.rhs * &inv;
        for other in pivots.values_mut() {
            if let Some(c) = other.coeffs.get(&lead).cloned() {
                other.axpy(&c, &normalized);
            }
        }
        pivots.insert(lead, normalized);
    }
    if pivots.len() < unknowns || pivots.keys().any(|&v| v >= unknowns) {
        return Err(Error::Underdetermined { rank: pivots.len(), unknowns });
    }
    let mut out = vec![Rational::zero(); unknowns];
    for (v, row) in pivots {
        if row.coeffs.len() != 1 {
            return Err(Error::Underdetermined { rank: unknowns, unknowns });
        }
        out[v] = row.rhs;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(vec![]), int(1));
        assert_eq!(determinant(m(&[&[2, 1], &[1, 3]])), int(5));
        assert_eq!(determinant(m(&[&[0, 1], &[1, 0]])), int(-1));
        assert_eq!(determinant(m(&[&[1, 2], &[2, 4]])), int(0));
        // Vandermonde(1,2,3) = (2-1)(3-1)(3-2)
        assert_eq!(determinant(m(&[&[1, 1, 1], &[1, 2, 3], &[1, 4, 9]])), int(2));
    }

    fn row(coeffs: &[(usize, Rational)], rhs: Rational) -> SparseRow {
        let mut r = SparseRow { rhs, ..Default::default() };
        for (v, c) in coeffs {
            r.add(*v, c.clone());
        }
        r
    }

    #[test]
    fn overdetermined_consistent() {
        // x = 1, y = x/2, x + y = 3/2
        let rows = vec![
            row(&[(0, int(1))], int(1)),
            row(&[(1, int(1)), (0, rat(-1, 2))], int(0)),
            row(&[(0, int(1)), (1, int(1))], rat(3, 2)),
        ];
        assert_eq!(solve_sparse(rows, 2).unwrap(), vec![int(1), rat(1, 2)]);
    }

    #[test]
    fn inconsistent() {
        let rows = vec![row(&[(0, int(1))], int(1)), row(&[(0, int(2))], int(3))];
        assert_eq!(solve_sparse(rows, 1), Err(Error::Inconsistent));
    }

    #[test]
    fn underdetermined() {
        let rows = vec![row(&[(0, int(1)), (1, int(1))], int(1))];
        assert!(matches!(solve_sparse(rows, 2), Err(Error::Underdetermined { .. })));
    }
}
