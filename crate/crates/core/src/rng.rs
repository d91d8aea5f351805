//! Deterministic linear-congruential sequence used for torus weights and
//! symmetry sampling.

use alloc::vec::Vec;

use crate::algebra::{frac, Coeff};

/// 64-bit LCG (Knuth's MMIX constants).
#[derive(Clone, Debug)]
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Lcg {
        Lcg(seed ^ 0x9e37_79b9_7f4a_7c15)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    /// Uniform-ish integer in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// The first `n` distinct values of the seeded sequence, as small rationals.
pub fn lambda_vector(seed: u64, n: usize) -> Vec<Coeff> {
    let mut g = Lcg::new(seed);
    let mut out: Vec<Coeff> = Vec::with_capacity(n);
    while out.len() < n {
        let x = g.next_u64();
        let num = (x % 61) as i64 - 30;
        let den = ((x / 61) % 4) as i64 + 1;
        let v = frac(num, den);
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}
