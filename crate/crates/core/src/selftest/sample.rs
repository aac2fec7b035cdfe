use num_bigint::BigInt;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::numkernel::{nonpositive_integer, ExactRational};

/// Distance from a nonpositive integer below which a sampled gamma argument is redrawn.
pub const POLE_GUARD: f64 = 0.05;

/// Deterministic random source for one named check.
pub struct Sampler {
    rng: ChaCha8Rng,
}

fn fnv1a(text: &str) -> u64 {
    text.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

impl Sampler {
    /// Stream keyed by the run seed and the check name, so checks do not share state.
    pub fn new(seed: u64, key: &str) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed ^ fnv1a(key)),
        }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }

    pub fn int(&mut self, lo: i64, hi_inclusive: i64) -> i64 {
        self.rng.random_range(lo..=hi_inclusive)
    }

    /// Uniform point in the closed disc `|z| <= radius`.
    pub fn disc(&mut self, radius: f64) -> Complex64 {
        loop {
            let z = Complex64::new(self.uniform(-radius, radius), self.uniform(-radius, radius));
            if z.norm() <= radius {
                return z;
            }
        }
    }

    /// Point in the disc with `|z| >= min_modulus`.
    pub fn disc_away_from_zero(&mut self, radius: f64, min_modulus: f64) -> Complex64 {
        loop {
            let z = self.disc(radius);
            if z.norm() >= min_modulus {
                return z;
            }
        }
    }

    /// `p/q` with `|p| <= max_num`, `1 <= q <= max_den`.
    pub fn rational(&mut self, max_num: i64, max_den: i64) -> ExactRational {
        let p = self.int(-max_num, max_num);
        let q = self.int(1, max_den);
        ExactRational::new(BigInt::from(p), BigInt::from(q))
    }

    pub fn nonzero_rational(&mut self, max_num: i64, max_den: i64) -> ExactRational {
        loop {
            let r = self.rational(max_num, max_den);
            if r != ExactRational::from_integer(BigInt::from(0)) {
                return r;
            }
        }
    }

    /// `n` points of the disc with pairwise distance at least `min_sep`.
    pub fn separated_nodes(&mut self, n: usize, radius: f64, min_sep: f64) -> Vec<Complex64> {
        let mut nodes: Vec<Complex64> = Vec::with_capacity(n);
        while nodes.len() < n {
            let z = self.disc(radius);
            if nodes.iter().all(|w| (w - z).norm() >= min_sep) {
                nodes.push(z);
            }
        }
        nodes
    }

    /// `n` distinct rationals.
    pub fn distinct_rationals(&mut self, n: usize, max_num: i64, max_den: i64) -> Vec<ExactRational> {
        let mut nodes: Vec<ExactRational> = Vec::with_capacity(n);
        while nodes.len() < n {
            let z = self.rational(max_num, max_den);
            if !nodes.contains(&z) {
                nodes.push(z);
            }
        }
        nodes
    }
}

/// `true` when no argument lies within [`POLE_GUARD`] of a nonpositive integer.
pub fn clear_of_poles(args: &[Complex64]) -> bool {
    args.iter().all(|&z| z.is_finite() && nonpositive_integer(z, POLE_GUARD).is_none())
}

/// `true` when every value has modulus at least `min`.
pub fn clear_of_zero(values: &[Complex64], min: f64) -> bool {
    values.iter().all(|v| v.norm() >= min)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_keyed() {
        let a: Vec<f64> = (0..5).map({
            let mut s = Sampler::new(7, "x");
            move |_| s.uniform(0.0, 1.0)
        }).collect();
        let b: Vec<f64> = (0..5).map({
            let mut s = Sampler::new(7, "x");
            move |_| s.uniform(0.0, 1.0)
        }).collect();
        let c = Sampler::new(7, "y").uniform(0.0, 1.0);
        assert_eq!(a, b);
        assert_ne!(a[0], c);
    }

    #[test]
    fn node_separation() {
        let mut s = Sampler::new(1, "nodes");
        let nodes = s.separated_nodes(8, 4.0, 0.1);
        for i in 0..8 {
            assert!(nodes[i].norm() <= 4.0);
            for j in 0..i {
                assert!((nodes[i] - nodes[j]).norm() >= 0.1);
            }
        }
    }
}
