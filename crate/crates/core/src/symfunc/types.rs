use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{format_rational, Rational};

/// Exponent vector `f = (f_1, ..., f_{n-1})` of the torus point
/// `diag(ϖ^{f_1}, ..., ϖ^{f_{n-1}}, 1)` in `GL(n)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Signature {
    parts: Vec<i64>,
}

impl Signature {
    /// A signature for `GL(parts.len() + 1)`.
    pub fn new(parts: Vec<i64>) -> Self {
        Self { parts }
    }

    /// The zero signature of `GL(n)`.
    pub fn zero(n: usize) -> Self {
        Self { parts: vec![0; n.saturating_sub(1)] }
    }

    /// Checks the length against the ambient rank `n`.
    pub fn for_rank(parts: Vec<i64>, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::RankTooSmall(n));
        }
        if parts.len() != n - 1 {
            return Err(Error::SignatureLength { n, got: parts.len() });
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// Ambient rank `n`.
    pub fn rank(&self) -> usize {
        self.parts.len() + 1
    }

    pub fn weight(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// `f_1 >= ... >= f_{n-1} >= 0`.
    pub fn is_dominant(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1]) && self.parts.last().map_or(true, |&x| x >= 0)
    }

    /// The partition `(f_1, ..., f_{n-1}, 0)` of length `n`.
    pub fn padded(&self) -> Vec<i64> {
        let mut p = self.parts.clone();
        p.push(0);
        p
    }

    /// Nonzero parts as a partition, or an error if not dominant.
    pub(crate) fn partition(&self) -> Result<Vec<usize>> {
        if !self.is_dominant() {
            return Err(Error::NotDominant(self.parts.clone()));
        }
        Ok(self.parts.iter().filter(|&&x| x > 0).map(|&x| x as usize).collect())
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// All dominant signatures of `GL(n)` with weight at most `max_weight`,
/// ordered by weight and then lexicographically descending within a weight.
pub fn dominant_signatures(n: usize, max_weight: i64) -> Vec<Signature> {
    fn fill(rest: i64, max_part: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if slots == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for part in (0..=rest.min(max_part)).rev() {
            // the remaining slots cannot absorb more than part each
            if part * slots as i64 >= rest {
                cur.push(part);
                fill(rest - part, part, slots - 1, cur, out);
                cur.pop();
            }
        }
    }
    let slots = n.saturating_sub(1);
    let mut out = Vec::new();
    for w in 0..=max_weight.max(-1) {
        let mut parts = Vec::new();
        fill(w, w, slots, &mut Vec::new(), &mut parts);
        out.extend(parts.into_iter().map(Signature::new));
    }
    out
}

/// Inverse roots `α_1, ..., α_n` of `L(s, π) = Π (1 - α_i q^{-s})^{-1}`.
///
/// A trailing zero marks positive conductor: the L-factor then has degree
/// below `n` and the last parameter is padding.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SatakeParams {
    alphas: Vec<Rational>,
    conductor_positive: bool,
}

impl SatakeParams {
    /// Infers the conductor flag from whether `α_n` is zero.
    pub fn new(alphas: Vec<Rational>) -> Result<Self> {
        if alphas.len() < 2 {
            return Err(Error::RankTooSmall(alphas.len()));
        }
        let conductor_positive = alphas.last().is_some_and(Zero::is_zero);
        Ok(Self { alphas, conductor_positive })
    }

    pub fn with_conductor(alphas: Vec<Rational>, conductor_positive: bool) -> Result<Self> {
        let mut p = Self::new(alphas)?;
        if conductor_positive && !p.conductor_positive {
            return Err(Error::RamifiedNeedsZero);
        }
        p.conductor_positive = conductor_positive;
        Ok(p)
    }

    /// Appends `α_n = 0` to the given `n - 1` parameters.
    pub fn ramified(mut leading: Vec<Rational>) -> Result<Self> {
        leading.push(Rational::zero());
        Self::new(leading)
    }

    /// Checks the parameter count against `n`.
    pub fn for_rank(alphas: Vec<Rational>, n: usize) -> Result<Self> {
        if alphas.len() != n {
            return Err(Error::AlphaLength { expected: n, got: alphas.len() });
        }
        Self::new(alphas)
    }

    pub fn rank(&self) -> usize {
        self.alphas.len()
    }

    pub fn alphas(&self) -> &[Rational] {
        &self.alphas
    }

    pub fn conductor_positive(&self) -> bool {
        self.conductor_positive
    }

    pub(crate) fn check_signature(&self, f: &Signature) -> Result<()> {
        if f.rank() != self.rank() {
            return Err(Error::SignatureLength { n: self.rank(), got: f.parts().len() });
        }
        Ok(())
    }
}

impl fmt::Display for SatakeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.alphas.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn dominance() {
        assert!(Signature::new(vec![2, 1]).is_dominant());
        assert!(Signature::new(vec![0, 0]).is_dominant());
        assert!(!Signature::new(vec![0, 1]).is_dominant());
        assert!(!Signature::new(vec![1, -1]).is_dominant());
        assert_eq!(Signature::new(vec![2, 1]).padded(), vec![2, 1, 0]);
        assert_eq!(Signature::new(vec![3, 1, 0]).weight(), 4);
    }

    #[test]
    fn enumeration_order() {
        let sigs = dominant_signatures(3, 2);
        let parts: Vec<_> = sigs.iter().map(|s| s.parts().to_vec()).collect();
        assert_eq!(parts, vec![vec![0, 0], vec![1, 0], vec![2, 0], vec![1, 1]]);
        assert_eq!(dominant_signatures(2, 0).len(), 1);
        // partitions of w <= 6 into at most 3 parts: 1+1+2+3+4+5+7
        assert_eq!(dominant_signatures(4, 6).len(), 23);
    }

    #[test]
    fn satake_flags() {
        let p = SatakeParams::new(vec![rat(1, 2), rat(1, 3), int(0)]).unwrap();
        assert!(p.conductor_positive());
        let u = SatakeParams::new(vec![rat(1, 2), rat(1, 3)]).unwrap();
        assert!(!u.conductor_positive());
        assert_eq!(SatakeParams::with_conductor(vec![int(1), int(1)], true), Err(Error::RamifiedNeedsZero));
        assert!(SatakeParams::new(vec![int(1)]).is_err());
        assert_eq!(
            SatakeParams::for_rank(vec![int(1), int(0)], 3),
            Err(Error::AlphaLength { expected: 3, got: 2 })
        );
        assert_eq!(SatakeParams::ramified(vec![rat(1, 2)]).unwrap().alphas(), &[rat(1, 2), int(0)]);
    }
}
