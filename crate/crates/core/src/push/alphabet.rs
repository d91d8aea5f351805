use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::algebra::{Poly, Var};
use crate::error::{Error, Result};

/// Ordered blocks of Chern-root letters of a flag bundle; the last block is
/// the quotient (ambient) block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockAlphabet {
    blocks: Vec<Vec<Var>>,
}

impl BlockAlphabet {
    pub fn new(blocks: Vec<Vec<Var>>) -> Result<BlockAlphabet> {
        let mut seen = BTreeSet::new();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidSpec("empty alphabet block".into()));
            }
            for &v in b {
                if !seen.insert(v) {
                    return Err(Error::InvalidSpec(format!("letter {} repeated", v)));
                }
            }
        }
        Ok(BlockAlphabet { blocks })
    }

    pub fn blocks(&self) -> &[Vec<Var>] {
        &self.blocks
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// All letters, block by block.
    pub fn letters(&self) -> Vec<Var> {
        self.blocks.concat()
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `Σ_{j<j′} m_j m_j′`.
    pub fn fiber_dimension(&self) -> usize {
        let sizes = self.sizes();
        let mut d = 0;
        for a in 0..sizes.len() {
            for b in a + 1..sizes.len() {
                d += sizes[a] * sizes[b];
            }
        }
        d
    }

    /// `N! / ∏ m_j!`, saturating.
    pub fn coset_count(&self) -> u128 {
        let mut acc: u128 = 1;
        let mut placed: u128 = 0;
        for &m in &self.sizes() {
            // multinomial as a product of binomials, each exact
            for k in 1..=m as u128 {
                placed += 1;
                acc = match acc.checked_mul(placed) {
                    Some(x) => x / k,
                    None => return u128::MAX,
                };
            }
        }
        acc
    }
}

/// Data of a restrictive-flag Thom class: for each constraint `j`, the roots
/// of the jump `F_j/F_{j−1}` and the quotient roots `q_{j;·}` of `E/P_j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OmegaSpec {
    pub constraints: Vec<(Vec<Var>, Vec<Poly>)>,
}

impl OmegaSpec {
    /// `Σ_j (k_j − k_{j−1}) · #q_j`.
    pub fn degree(&self) -> usize {
        self.constraints.iter().map(|(y, q)| y.len() * q.len()).sum()
    }
}

/// `∏_j ∏_{j′} ∏_{j″} (q_{j;j′} − y_{j;j″})`, expanded.
pub fn omega_class(spec: &OmegaSpec) -> Poly {
    let mut acc = Poly::one();
    for (ys, qs) in &spec.constraints {
        for q in qs {
            for &y in ys {
                acc = &acc * &(q - &Poly::var(y));
            }
        }
    }
    acc
}
