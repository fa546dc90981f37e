//! Finite-ring check of the Hecke coset decomposition
//! `K_m / (K_m ∩ ϖ^{f^i} K_m ϖ^{-f^i})`.
//!
//! `K_m` is the subgroup of `GL_n(o)` whose bottom row is congruent to
//! `(0, ..., 0, 1)` modulo `p^m`. The uniformizer is represented by `p` and
//! everything is computed in `Z/p^N`. Candidate representatives are the block
//! matrices `(a x; 0 1)`, with `a` running over `GL_{n-1}` modulo the
//! parabolic fixing `L_i` and `x` over `L_0 / a L_i`. The check is exhaustive:
//! every element of `K_m mod p^N` is matched against every representative.

mod residue;

pub use residue::ResidueMatrix;

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest number of matrices any single scan here will visit.
pub const ENUMERATION_LIMIT: u128 = 50_000_000;

/// Parameters of one coset decomposition: `GL(n)`, residue characteristic
/// `p`, level `m`, Hecke index `i`, and truncation depth `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CosetSpec {
    pub n: usize,
    pub p: u64,
    pub m: u32,
    pub i: usize,
    pub depth: u32,
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl CosetSpec {
    /// Uses depth `m + 1`.
    pub fn new(n: usize, p: u64, m: u32, i: usize) -> Result<Self> {
        Self::with_depth(n, p, m, i, m + 1)
    }

    pub fn with_depth(n: usize, p: u64, m: u32, i: usize, depth: u32) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidCosetSpec(msg));
        if n < 2 {
            return bad(format!("n = {n} < 2"));
        }
        if !is_prime(p) {
            return bad(format!("p = {p} is not prime"));
        }
        if m < 1 {
            return bad("level m must be positive".into());
        }
        if i < 1 || i > n - 1 {
            return bad(format!("i = {i} outside 1..={}", n - 1));
        }
        if depth < m + 1 {
            return bad(format!("depth {depth} < m + 1"));
        }
        Ok(Self { n, p, m, i, depth })
    }

    /// `f^i` padded to length `n`: `i` ones then zeros.
    pub fn hecke_exponents(&self) -> Vec<i64> {
        (0..self.n).map(|j| i64::from(j < self.i)).collect()
    }
}

/// `M ∈ K_m`: invertible with bottom row `≡ (0, ..., 0, 1) mod p^m`.
///
/// Panics if the matrix is stored at depth below `m`.
pub fn km_membership(mat: &ResidueMatrix, m: u32) -> bool {
    assert!(mat.depth() >= m, "depth {} below level {m}", mat.depth());
    let n = mat.size();
    let pm = mat.prime().pow(m);
    let bottom_ok = (0..n).all(|c| {
        let want = u64::from(c == n - 1);
        (mat.get(n - 1, c) + pm - want) % pm == 0
    });
    bottom_ok && mat.is_invertible()
}

/// `ϖ^{-f} M ϖ^{f}` is integral: entry `(j, l)` picks up `p^{f_l - f_j}`,
/// so it must be divisible by `p^{f_j - f_l}` whenever that is positive.
pub fn conjugate_integral(mat: &ResidueMatrix, f: &[i64]) -> bool {
    let n = mat.size();
    let p = mat.prime();
    (0..n).all(|j| {
        (0..n).all(|l| {
            let need = f[j] - f[l];
            need <= 0 || mat.get(j, l) % p.pow(need as u32) == 0
        })
    })
}

/// `M ∈ K_m ∩ ϖ^{f^i} K_m ϖ^{-f^i}`.
///
/// For `f^i` this says the upper-left block lies in `H ∩ ϖ^{f^i} H ϖ^{-f^i}`
/// (entries in rows `<= i`, columns `> i` divisible by `p`) and the last
/// column lies in `L_i` (its first `i` entries divisible by `p`).
pub fn subgroup_membership(mat: &ResidueMatrix, spec: &CosetSpec) -> bool {
    assert!(mat.depth() >= spec.m + 1, "need depth >= m + 1");
    km_membership(mat, spec.m) && conjugate_integral(mat, &spec.hecke_exponents())
}

/// Gaussian binomial `[m choose k]_q`.
pub fn gaussian_binomial(m: usize, k: usize, q: u64) -> u64 {
    if k > m {
        return 0;
    }
    let mut num = 1u128;
    let mut den = 1u128;
    for j in 0..k {
        num *= u128::from(q).pow((m - j) as u32) - 1;
        den *= u128::from(q).pow((j + 1) as u32) - 1;
    }
    (num / den) as u64
}

fn check_limit(count: u128) -> Result<()> {
    if count > ENUMERATION_LIMIT {
        return Err(Error::EnumerationTooLarge(count));
    }
    Ok(())
}

/// Calls `visit` with every `size × size` matrix over `Z/p^depth` whose
/// entries are drawn from the given per-entry value lists.
fn for_each_matrix(
    size: usize,
    p: u64,
    depth: u32,
    choices: &[Vec<i64>],
    mut visit: impl FnMut(&ResidueMatrix),
) {
    let mut digits = vec![0usize; choices.len()];
    let mut mat = ResidueMatrix::zeros(size, p, depth);
    for (k, c) in choices.iter().enumerate() {
        mat.set(k / size, k % size, c[0]);
    }
    loop {
        visit(&mat);
        let mut k = 0;
        loop {
            if k == digits.len() {
                return;
            }
            digits[k] += 1;
            if digits[k] < choices[k].len() {
                mat.set(k / size, k % size, choices[k][digits[k]]);
                break;
            }
            digits[k] = 0;
            mat.set(k / size, k % size, choices[k][0]);
            k += 1;
        }
    }
}

/// Representatives of `GL_size(F_p) / P_i`, where `P_i` is the parabolic
/// `{a : a_{jl} ≡ 0 mod p for j <= i < l}` stabilizing `L_i mod p`.
///
/// Found by brute force over `GL_size(F_p)`, the identity first.
pub fn parabolic_transversal(size: usize, i: usize, p: u64) -> Result<Vec<ResidueMatrix>> {
    if i < 1 || i > size {
        return Err(Error::IndexOutOfRange { index: i, max: size });
    }
    check_limit(u128::from(p).pow((size * size) as u32))?;
    let f: Vec<i64> = (0..size).map(|j| i64::from(j < i)).collect();
    let all: Vec<i64> = (0..p as i64).collect();
    let choices = vec![all; size * size];
    let mut reps: Vec<(ResidueMatrix, ResidueMatrix)> = Vec::new();
    let identity = ResidueMatrix::identity(size, p, 1);
    reps.push((identity.clone(), identity));
    for_each_matrix(size, p, 1, &choices, |a| {
        if !a.is_invertible() {
            return;
        }
        let known = reps
            .iter()
            .any(|(_, b_inv)| conjugate_integral(&b_inv.mul(a), &f));
        if !known {
            let inv = a.inverse().expect("invertible");
            reps.push((a.clone(), inv));
        }
    });
    Ok(reps.into_iter().map(|(a, _)| a).collect())
}

/// Transversal of `L_0 / a L_i` in `(Z/p^depth)^size`, together with the
/// index `[L_0 : a L_i]` counted from the enumerated image `a L_i`.
pub fn lattice_transversal(a: &ResidueMatrix, i: usize) -> Result<(Vec<Vec<u64>>, u64)> {
    let size = a.size();
    let modulus = a.modulus();
    let p = a.prime();
    check_limit(u128::from(modulus).pow(size as u32))?;

    // L_i: first i coordinates in p Z/p^depth
    let mut image: HashSet<Vec<u64>> = HashSet::new();
    let coords: Vec<Vec<u64>> = (0..size)
        .map(|j| {
            let step = if j < i { p } else { 1 };
            (0..modulus).step_by(step as usize).collect()
        })
        .collect();
    let mut idx = vec![0usize; size];
    'outer: loop {
        let y: Vec<u64> = idx.iter().enumerate().map(|(j, &k)| coords[j][k]).collect();
        let ay: Vec<u64> = (0..size)
            .map(|r| (0..size).fold(0, |acc, c| (acc + a.get(r, c) * y[c]) % modulus))
            .collect();
        image.insert(ay);
        for j in 0..size {
            idx[j] += 1;
            if idx[j] < coords[j].len() {
                continue 'outer;
            }
            idx[j] = 0;
        }
        break;
    }
    let total = modulus.pow(size as u32);
    let index = total / image.len() as u64;

    let diff = |x: &[u64], t: &[u64]| -> Vec<u64> {
        x.iter().zip(t).map(|(a, b)| (a + modulus - b) % modulus).collect()
    };
    let mut reps: Vec<Vec<u64>> = Vec::new();
    let mut x = vec![0u64; size];
    'scan: loop {
        if reps.iter().all(|t| !image.contains(&diff(&x, t))) {
            reps.push(x.clone());
        }
        for j in (0..size).rev() {
            x[j] += 1;
            if x[j] < modulus {
                continue 'scan;
            }
            x[j] = 0;
        }
        break;
    }
    Ok((reps, index))
}

/// Outcome of [`verify_coset_transversal`].
#[derive(Clone, Debug, Serialize)]
pub struct CosetReport {
    pub spec: CosetSpec,
    pub parabolic_count: usize,
    pub gaussian_binomial: u64,
    /// `[L_0 : a L_i]` for each parabolic representative `a`.
    pub lattice_indices: Vec<u64>,
    pub representatives: Vec<ResidueMatrix>,
    pub expected_count: u64,
    pub group_order: u64,
    pub subgroup_order: u64,
    pub uncovered: u64,
    pub multiply_covered: u64,
    pub index_ok: bool,
    pub in_group_ok: bool,
    pub distinct_ok: bool,
    pub count_ok: bool,
    pub coverage_ok: bool,
}

impl CosetReport {
    pub fn passed(&self) -> bool {
        self.index_ok && self.in_group_ok && self.distinct_ok && self.count_ok && self.coverage_ok
    }
}

/// Candidate representatives `(a x; 0 1)` at depth `spec.depth`.
pub fn candidate_representatives(spec: &CosetSpec) -> Result<(Vec<ResidueMatrix>, Vec<u64>, usize)> {
    let n = spec.n;
    let parabolic = parabolic_transversal(n - 1, spec.i, spec.p)?;
    let mut reps = Vec::new();
    let mut indices = Vec::new();
    for a in &parabolic {
        let a = a.lift(spec.depth);
        let (xs, index) = lattice_transversal(&a, spec.i)?;
        indices.push(index);
        for x in xs {
            let mut g = ResidueMatrix::identity(n, spec.p, spec.depth);
            for r in 0..n - 1 {
                for c in 0..n - 1 {
                    g.set(r, c, a.get(r, c) as i64);
                }
                g.set(r, n - 1, x[r] as i64);
            }
            reps.push(g);
        }
    }
    Ok((reps, indices, parabolic.len()))
}

/// Exhaustively checks that the block representatives form a complete,
/// irredundant system for `K_m / (K_m ∩ ϖ^{f^i} K_m ϖ^{-f^i})`.
///
/// Cosets are left cosets: `g` and `h` are equivalent iff `h^{-1} g` lies in
/// the subgroup.
pub fn verify_coset_transversal(spec: &CosetSpec) -> Result<CosetReport> {
    let (n, p, depth) = (spec.n, spec.p, spec.depth);
    let (reps, lattice_indices, parabolic_count) = candidate_representatives(spec)?;
    let q_i = p.pow(spec.i as u32);
    let gaussian = gaussian_binomial(n - 1, spec.i, p);
    let expected_count = q_i * gaussian;

    let index_ok = lattice_indices.iter().all(|&k| k == q_i);
    let in_group_ok = reps.iter().all(|g| km_membership(g, spec.m));
    let inverses: Vec<ResidueMatrix> = reps
        .iter()
        .map(|g| g.inverse().ok_or_else(|| Error::InvalidCosetSpec(format!("singular representative {g}"))))
        .collect::<Result<_>>()?;
    let distinct_ok = (0..reps.len()).all(|a| {
        (0..reps.len()).all(|b| a == b || !subgroup_membership(&inverses[b].mul(&reps[a]), spec))
    });
    let count_ok = reps.len() as u64 == expected_count && parabolic_count as u64 == gaussian;

    // K_m mod p^N: top rows free, bottom row pinned modulo p^m
    let modulus = p.pow(depth) as i64;
    let pm = p.pow(spec.m) as i64;
    let free: Vec<i64> = (0..modulus).collect();
    let off_diag: Vec<i64> = (0..modulus).step_by(pm as usize).collect();
    let diag: Vec<i64> = off_diag.iter().map(|x| x + 1).collect();
    let mut choices: Vec<Vec<i64>> = vec![free; n * (n - 1)];
    choices.extend(std::iter::repeat(off_diag).take(n - 1));
    choices.push(diag);
    let total: u128 = choices.iter().map(|c| c.len() as u128).product();
    check_limit(total)?;

    let exponents = spec.hecke_exponents();
    // split on the first entry so chunks can run in parallel
    let first = choices[0].clone();
    let tallies: Vec<[u64; 4]> = first
        .par_iter()
        .map(|&x0| {
            let mut local = choices.clone();
            local[0] = vec![x0];
            let mut t = [0u64; 4];
            for_each_matrix(n, p, depth, &local, |g| {
                if !km_membership(g, spec.m) {
                    return;
                }
                t[0] += 1;
                if conjugate_integral(g, &exponents) {
                    t[1] += 1;
                }
                let hits = inverses
                    .iter()
                    .filter(|h_inv| in_subgroup_fast(h_inv, g, spec))
                    .count();
                match hits {
                    0 => t[2] += 1,
                    1 => {}
                    _ => t[3] += 1,
                }
            });
            t
        })
        .collect();
    let [group_order, subgroup_order, uncovered, multiply_covered] =
        tallies.iter().fold([0u64; 4], |acc, t| std::array::from_fn(|k| acc[k] + t[k]));
    let coverage_ok = uncovered == 0
        && multiply_covered == 0
        && group_order == reps.len() as u64 * subgroup_order;

    Ok(CosetReport {
        spec: *spec,
        parabolic_count,
        gaussian_binomial: gaussian,
        lattice_indices,
        representatives: reps,
        expected_count,
        group_order,
        subgroup_order,
        uncovered,
        multiply_covered,
        index_ok,
        in_group_ok,
        distinct_ok,
        count_ok,
        coverage_ok,
    })
}

/// `h^{-1} g` in the subgroup, with both factors already in `K_m`.
///
/// Rejects on the first `p`-divisibility failure among the entries in rows
/// `<= i` and columns `> i` before forming the full product.
fn in_subgroup_fast(h_inv: &ResidueMatrix, g: &ResidueMatrix, spec: &CosetSpec) -> bool {
    let p = spec.p;
    for j in 0..spec.i {
        for l in spec.i..spec.n {
            if h_inv.product_entry(g, j, l) % p != 0 {
                return false;
            }
        }
    }
    subgroup_membership(&h_inv.mul(g), spec)
}
