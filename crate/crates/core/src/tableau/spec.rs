use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest ambient dimension accepted; variable indices are stored in a byte.
pub const MAX_N: usize = 64;

/// Ambient dimension, ranks and degrees of a hyper-Quot scheme.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlagSpec {
    n: usize,
    ranks: Vec<usize>,
    degrees: Vec<u32>,
}

impl FlagSpec {
    /// Validates `0 < r_1 < … < r_I < n` and one degree per rank.
    pub fn new(n: usize, ranks: Vec<usize>, degrees: Vec<u32>) -> Result<FlagSpec> {
        if ranks.is_empty() {
            return Err(Error::InvalidSpec("at least one rank is required".into()));
        }
        if n > MAX_N {
            return Err(Error::InvalidSpec(format!("n must be at most {}", MAX_N)));
        }
        if ranks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSpec("ranks must be strictly increasing".into()));
        }
        if ranks[0] == 0 {
            return Err(Error::InvalidSpec("ranks must be positive".into()));
        }
        if *ranks.last().unwrap() >= n {
            return Err(Error::InvalidSpec("largest rank must be less than n".into()));
        }
        if degrees.len() != ranks.len() {
            return Err(Error::InvalidSpec(format!(
                "expected {} degrees, got {}",
                ranks.len(),
                degrees.len()
            )));
        }
        Ok(FlagSpec { n, ranks, degrees })
    }

    pub fn grassmannian(n: usize, r: usize, d: u32) -> Result<FlagSpec> {
        FlagSpec::new(n, alloc::vec![r], alloc::vec![d])
    }

    /// Same flag type with other degrees.
    pub fn with_degrees(&self, degrees: Vec<u32>) -> Result<FlagSpec> {
        FlagSpec::new(self.n, self.ranks.clone(), degrees)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Number of levels `I`.
    pub fn levels(&self) -> usize {
        self.ranks.len()
    }

    /// `r_i` for `0 ≤ i ≤ I+1`, with `r_0 = 0` and `r_{I+1} = n`.
    pub fn rank(&self, i: usize) -> usize {
        match i {
            0 => 0,
            i if i <= self.levels() => self.ranks[i - 1],
            _ => self.n,
        }
    }

    /// `d_i` for `1 ≤ i ≤ I`, zero outside.
    pub fn degree(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.levels() {
            self.degrees[i - 1]
        } else {
            0
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.degrees.iter().sum()
    }

    /// Hilbert polynomial `P_i(t) = (n−r_i)t + d_i + (n−r_i)` as (slope, constant).
    pub fn hilbert_polynomial(&self, i: usize) -> (usize, usize) {
        let q = self.n - self.rank(i);
        (q, self.degree(i) as usize + q)
    }

    /// Dimension of the flag manifold `Σ (n−r_i)(r_i−r_{i−1})`.
    pub fn flag_dimension(&self) -> u64 {
        (1..=self.levels())
            .map(|i| ((self.n - self.rank(i)) * (self.rank(i) - self.rank(i - 1))) as u64)
            .sum()
    }
}

/// `Σ (n−r_i)(r_i−r_{i−1}) + Σ d_i (r_{i+1}−r_{i−1})`.
pub fn hquot_dimension(spec: &FlagSpec) -> u64 {
    spec.flag_dimension()
        + (1..=spec.levels())
            .map(|i| spec.degree(i) as u64 * (spec.rank(i + 1) - spec.rank(i - 1)) as u64)
            .sum::<u64>()
}
