#![allow(dead_code)]

use newform::scalar::{int, rat, Rational};
use newform::SatakeParams;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Numerator in -9..=9, denominator in 1..=9.
pub fn random_rational(rng: &mut StdRng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

pub fn random_nonzero(rng: &mut StdRng) -> Rational {
    loop {
        let r = random_rational(rng);
        if r != int(0) {
            return r;
        }
    }
}

/// `n` parameters with `α_n = 0`.
pub fn random_ramified(rng: &mut StdRng, n: usize) -> SatakeParams {
    SatakeParams::ramified((0..n - 1).map(|_| random_rational(rng)).collect()).unwrap()
}

/// `n` nonzero parameters (conductor zero).
pub fn random_unramified(rng: &mut StdRng, n: usize) -> SatakeParams {
    SatakeParams::new((0..n).map(|_| random_nonzero(rng)).collect()).unwrap()
}

/// Ramified parameters drawn from a tiny pool, so repeats and zeros are common.
pub fn random_with_repeats(rng: &mut StdRng, n: usize) -> SatakeParams {
    let pool = [int(0), int(1), rat(1, 2), rat(-2, 3), int(2)];
    let mut v: Vec<Rational> = (0..n).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
    if rng.gen_bool(0.5) {
        v[n - 1] = int(0);
    }
    SatakeParams::new(v).unwrap()
}

pub fn alpha_arg(alpha: &SatakeParams) -> String {
    alpha
        .alphas()
        .iter()
        .map(newform::scalar::format_rational)
        .collect::<Vec<_>>()
        .join(",")
}
