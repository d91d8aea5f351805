use alloc::vec::Vec;

use super::Tableau;
use crate::error::{Error, Result};

/// Run-length data of one row: distinct values and their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelBlocks {
    pub values: Vec<u32>,
    pub mult: Vec<usize>,
}

impl LevelBlocks {
    /// Run-length encoding of a non-decreasing row.
    pub fn of_row(row: &[u32]) -> LevelBlocks {
        let mut values = Vec::new();
        let mut mult: Vec<usize> = Vec::new();
        for &x in row {
            if values.last() == Some(&x) {
                *mult.last_mut().unwrap() += 1;
            } else {
                values.push(x);
                mult.push(1);
            }
        }
        LevelBlocks { values, mult }
    }
}

/// Blocks `a_{i,j}`, `m_{i,j}` of every level plus the ambient pseudo-level.
///
/// All accessors are 1-based; level `I+1` is the ambient one with a single
/// block of value 0 and multiplicity `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockData {
    levels: Vec<LevelBlocks>,
}

impl BlockData {
    pub fn of(t: &Tableau) -> BlockData {
        let mut levels: Vec<LevelBlocks> = t.alpha().iter().map(|r| LevelBlocks::of_row(r)).collect();
        levels.push(LevelBlocks { values: alloc::vec![0], mult: alloc::vec![t.spec().n()] });
        BlockData { levels }
    }

    /// Number of genuine levels `I`.
    pub fn levels(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn is_ambient(&self, i: usize) -> bool {
        i == self.levels.len()
    }

    /// `K_i`.
    pub fn k(&self, i: usize) -> usize {
        self.levels[i - 1].values.len()
    }

    /// `a_{i,j}`.
    pub fn a(&self, i: usize, j: usize) -> u32 {
        self.levels[i - 1].values[j - 1]
    }

    /// `m_{i,j}`.
    pub fn m(&self, i: usize, j: usize) -> usize {
        self.levels[i - 1].mult[j - 1]
    }

    /// Partial rank `r_{i,j} = m_{i,1}+…+m_{i,j}`, with `r_{i,0} = 0`.
    pub fn r(&self, i: usize, j: usize) -> usize {
        self.levels[i - 1].mult[..j].iter().sum()
    }

    pub fn level(&self, i: usize) -> &LevelBlocks {
        &self.levels[i - 1]
    }
}

/// `block_decomposition` of a tableau.
pub fn block_decomposition(t: &Tableau) -> BlockData {
    BlockData::of(t)
}

/// Index functions `I_A`, `I′_A` and restriction ranks for each level pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexTables {
    ia: Vec<Vec<usize>>,
    ia_prime: Vec<Vec<usize>>,
    l: Vec<Vec<usize>>,
}

impl IndexTables {
    pub fn of(blocks: &BlockData) -> IndexTables {
        let levels = blocks.levels();
        let mut ia = Vec::with_capacity(levels);
        let mut ia_prime = Vec::with_capacity(levels);
        let mut l = Vec::with_capacity(levels);
        for i in 1..=levels {
            let up = blocks.level(i + 1);
            // max{j' : a_{i+1,j'} ≤ bound}, 0 when empty
            let last_at_most = |bound: i64| up.values.iter().take_while(|&&v| (v as i64) <= bound).count();
            let mut row = alloc::vec![0];
            let mut row_p = alloc::vec![0];
            let mut row_l = alloc::vec![0];
            for j in 1..=blocks.k(i) {
                let a = blocks.a(i, j) as i64;
                let x = last_at_most(a);
                row.push(x);
                row_p.push(last_at_most(a - 1));
                row_l.push(blocks.r(i + 1, x));
            }
            ia.push(row);
            ia_prime.push(row_p);
            l.push(row_l);
        }
        IndexTables { ia, ia_prime, l }
    }

    /// `I_A(i,j)` for `0 ≤ j ≤ K_i`.
    pub fn ia(&self, i: usize, j: usize) -> usize {
        self.ia[i - 1][j]
    }

    /// `I′_A(i,j)` for `1 ≤ j ≤ K_i`.
    pub fn ia_prime(&self, i: usize, j: usize) -> usize {
        self.ia_prime[i - 1][j]
    }

    /// `l_{i+1,j} = r_{i+1, I_A(i,j)}`.
    pub fn l(&self, i: usize, j: usize) -> usize {
        self.l[i - 1][j]
    }
}

/// `index_tables` of a tableau.
pub fn index_tables(t: &Tableau) -> IndexTables {
    IndexTables::of(&BlockData::of(t))
}

/// `dim E_(A;0) = Σ_i Σ_j (r_{i,j} − r_{i,j−1})(l_{i+1,j} − r_{i,j})`.
pub fn component_dimension(t: &Tableau) -> Result<u64> {
    let blocks = BlockData::of(t);
    let idx = IndexTables::of(&blocks);
    let mut dim = 0u64;
    for i in 1..=blocks.levels() {
        for j in 1..=blocks.k(i) {
            let room = idx.l(i, j) as i64 - blocks.r(i, j) as i64;
            if room < 0 {
                return Err(Error::InfeasibleTableau { level: i, block: j });
            }
            dim += blocks.m(i, j) as u64 * room as u64;
        }
    }
    Ok(dim)
}
