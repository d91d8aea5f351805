use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::tableau::{BlockData, IndexTables, Tableau};

/// A block `(i, j)` of level `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockRef {
    pub level: usize,
    pub block: usize,
}

/// Target of a Hom summand: a block or the trivial ambient bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Target {
    Block(BlockRef),
    Ambient,
}

/// One summand `sign · Hom(gr_src, gr_tgt) ⊗ (weight w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LedgerTerm {
    pub sign: i8,
    pub src: BlockRef,
    pub tgt: Target,
    pub w: i64,
}

/// Signed multiset of Hom summands over a tableau's blocks.
///
/// Stored as net multiplicities keyed by `(src, tgt, w)`, so matching `±`
/// pairs cancel on insertion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ledger {
    blocks: BlockData,
    counts: BTreeMap<(BlockRef, Target, i64), i64>,
}

impl Ledger {
    fn new(blocks: BlockData) -> Ledger {
        Ledger { blocks, counts: BTreeMap::new() }
    }

    fn add(&mut self, sign: i64, src: BlockRef, tgt: Target, w: i64) {
        let e = self.counts.entry((src, tgt, w)).or_insert(0);
        *e += sign;
        if *e == 0 {
            self.counts.remove(&(src, tgt, w));
        }
    }

    fn target(&self, level: usize, block: usize) -> Target {
        if self.blocks.is_ambient(level) {
            Target::Ambient
        } else {
            Target::Block(BlockRef { level, block })
        }
    }

    pub fn blocks(&self) -> &BlockData {
        &self.blocks
    }

    /// Terms in canonical order, repeated by multiplicity.
    pub fn terms(&self) -> Vec<LedgerTerm> {
        let mut out = Vec::new();
        for (&(src, tgt, w), &c) in &self.counts {
            let sign = if c > 0 { 1 } else { -1 };
            for _ in 0..c.abs() {
                out.push(LedgerTerm { sign, src, tgt, w });
            }
        }
        out
    }

    /// Net multiplicities keyed by `(src, tgt, w)`.
    pub fn counts(&self) -> &BTreeMap<(BlockRef, Target, i64), i64> {
        &self.counts
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn source_mult(&self, b: BlockRef) -> usize {
        self.blocks.m(b.level, b.block)
    }

    pub fn target_mult(&self, t: Target) -> usize {
        match t {
            Target::Block(b) => self.blocks.m(b.level, b.block),
            Target::Ambient => self.blocks.m(self.blocks.levels() + 1, 1),
        }
    }

    /// `Σ sign · m_src · m_tgt`.
    pub fn rank(&self) -> i64 {
        self.counts
            .iter()
            .map(|(&(s, t, _), &c)| c * (self.source_mult(s) * self.target_mult(t)) as i64)
            .sum()
    }

    /// `self − other`, cancelling matching terms.
    pub fn difference(&self, other: &Ledger) -> Ledger {
        let mut out = self.clone();
        for (&(s, t, w), &c) in &other.counts {
            out.add(-c, s, t, w);
        }
        out
    }

    pub fn has_weight_zero(&self) -> bool {
        self.counts.keys().any(|&(_, _, w)| w == 0)
    }
}

/// Weights of `H⁰(O(m))`: `{0, −1, …, −m}` for `m ≥ 0`.
pub fn wt0(m: i64) -> impl Iterator<Item = i64> {
    (0..=m.max(-1)).map(|k| -k)
}

/// Weights of `H¹(O(m))`: `{1, …, −m−1}` for `m ≤ −2`.
pub fn wt1(m: i64) -> impl Iterator<Item = i64> {
    1..=(-m - 1)
}

/// Ledger of `T E_(A;0)` from the relative Euler sequences of the tower.
pub fn tangent_ledger(t: &Tableau) -> Ledger {
    let blocks = BlockData::of(t);
    let idx = IndexTables::of(&blocks);
    let mut l = Ledger::new(blocks.clone());
    for i in 1..=blocks.levels() {
        for j in 1..=blocks.k(i) {
            let src = BlockRef { level: i, block: j };
            for jp in 1..=j {
                for k in idx.ia(i, jp - 1) + 1..=idx.ia(i, jp) {
                    let tgt = l.target(i + 1, k);
                    l.add(1, src, tgt, 0);
                }
                l.add(-1, src, Target::Block(BlockRef { level: i, block: jp }), 0);
            }
        }
    }
    l
}

/// Ledger of the hyper-Quot tangent bundle restricted to `E_(A;0)`.
///
/// `π_! Hom(E_i, E_{i+1}) − π_! End(E_i)` split into weight spaces. Both
/// `H⁰` and `H¹` are kept for every family, cross-level included.
pub fn hquot_restriction_ledger(t: &Tableau) -> Ledger {
    let blocks = BlockData::of(t);
    let mut l = Ledger::new(blocks.clone());
    for i in 1..=blocks.levels() {
        for j in 1..=blocks.k(i) {
            let src = BlockRef { level: i, block: j };
            let a = blocks.a(i, j) as i64;
            for jp in 1..=blocks.k(i + 1) {
                let tgt = l.target(i + 1, jp);
                let m = a - blocks.a(i + 1, jp) as i64;
                for w in wt0(m) {
                    l.add(1, src, tgt, w);
                }
                for w in wt1(m) {
                    l.add(-1, src, tgt, w);
                }
            }
            for jp in 1..=blocks.k(i) {
                let tgt = Target::Block(BlockRef { level: i, block: jp });
                let m = a - blocks.a(i, jp) as i64;
                for w in wt0(m) {
                    l.add(-1, src, tgt, w);
                }
                for w in wt1(m) {
                    l.add(1, src, tgt, w);
                }
            }
        }
    }
    l
}

/// Restriction ledger minus tangent ledger; no weight-0 term may survive.
pub fn normal_ledger(t: &Tableau) -> Result<Ledger> {
    let nu = hquot_restriction_ledger(t).difference(&tangent_ledger(t));
    if let Some((&(s, tg, _), c)) = nu.counts.iter().find(|(&(_, _, w), _)| w == 0) {
        return Err(Error::CancellationFailure(format!("{:?} -> {:?} with multiplicity {}", s, tg, c)));
    }
    Ok(nu)
}
