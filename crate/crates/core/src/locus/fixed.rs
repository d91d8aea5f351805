use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::ledger::{tangent_ledger, Target};
use crate::algebra::{Coeff, Poly, RatFun, Var};
use crate::error::{Error, Result};
use crate::rng::Lcg;
use crate::tableau::{BlockData, IndexTables, Tableau};

/// A torus-fixed point of a component: coordinate subsets `C_{i,j}` of
/// `{1..n}`, stored sorted, level by level.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusFixedPoint {
    sets: Vec<Vec<Vec<usize>>>,
}

impl TorusFixedPoint {
    /// `C_{i,j}` (1-based level and block).
    pub fn coords(&self, i: usize, j: usize) -> &[usize] {
        &self.sets[i - 1][j - 1]
    }

    pub fn levels(&self) -> usize {
        self.sets.len()
    }

    /// Coordinate carried by a root variable, `None` for other variables.
    pub fn coordinate_of(&self, v: Var) -> Option<usize> {
        match v {
            Var::Root { level, block, slot } => {
                self.sets.get(level as usize - 1)?.get(block as usize - 1)?.get(slot as usize - 1).copied()
            }
            Var::Ambient(k) => Some(k as usize),
            _ => None,
        }
    }
}

/// Fixed points of `E_(A;0)` under the ambient torus, in lexicographic order.
///
/// `C_{i,1} ∪ … ∪ C_{i,j}` must lie inside the union of the level-`(i+1)`
/// sets of blocks up to `I_A(i,j)`.
pub fn torus_fixed_points(t: &Tableau) -> Vec<TorusFixedPoint> {
    let blocks = BlockData::of(t);
    let idx = IndexTables::of(&blocks);
    let levels = blocks.levels();
    let n = t.spec().n();
    let mut out = Vec::new();
    let mut sets: Vec<Vec<Vec<usize>>> = (1..=levels).map(|i| alloc::vec![Vec::new(); blocks.k(i)]).collect();
    fill(&blocks, &idx, n, levels, 1, &mut Vec::new(), &mut sets, &mut out);
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn fill(
    blocks: &BlockData,
    idx: &IndexTables,
    n: usize,
    i: usize,
    j: usize,
    used: &mut Vec<usize>,
    sets: &mut Vec<Vec<Vec<usize>>>,
    out: &mut Vec<TorusFixedPoint>,
) {
    if i == 0 {
        out.push(TorusFixedPoint { sets: sets.clone() });
        return;
    }
    if j > blocks.k(i) {
        let mut fresh = Vec::new();
        fill(blocks, idx, n, i - 1, 1, &mut fresh, sets, out);
        return;
    }
    let avail: Vec<usize> = if blocks.is_ambient(i + 1) {
        (1..=n).collect()
    } else {
        let mut v: Vec<usize> = (1..=idx.ia(i, j)).flat_map(|jp| sets[i][jp - 1].iter().copied()).collect();
        v.sort_unstable();
        v
    };
    let avail: Vec<usize> = avail.into_iter().filter(|c| !used.contains(c)).collect();
    for choice in subsets(&avail, blocks.m(i, j)) {
        sets[i - 1][j - 1] = choice.clone();
        used.extend_from_slice(&choice);
        fill(blocks, idx, n, i, j + 1, used, sets, out);
        used.truncate(used.len() - choice.len());
    }
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return alloc::vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (p, &x) in items.iter().enumerate() {
        for mut rest in subsets(&items[p + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// Substitution sending roots to the torus weights of their coordinates.
pub fn fixed_point_map(p: &TorusFixedPoint, blocks: &BlockData, weights: &[Poly]) -> BTreeMap<Var, Poly> {
    let mut map = BTreeMap::new();
    for i in 1..=blocks.levels() {
        for j in 1..=blocks.k(i) {
            for (k, &c) in p.coords(i, j).iter().enumerate() {
                map.insert(Var::root(i, j, k + 1), weights[c - 1].clone());
            }
        }
    }
    for (c, w) in weights.iter().enumerate() {
        map.insert(Var::ambient(c + 1), w.clone());
    }
    map
}

/// Evaluates a block-symmetric class at a fixed point.
pub fn specialize_at_fixed_point(
    f: &RatFun,
    t: &Tableau,
    p: &TorusFixedPoint,
    weights: &[Poly],
) -> Result<RatFun> {
    let blocks = BlockData::of(t);
    check_block_symmetric(f, &blocks, 0)?;
    f.substitute(&fixed_point_map(p, &blocks, weights))
}

/// Rejects classes that change under a sampled transposition of two roots
/// in the same block of a tableau. Three transpositions are drawn.
pub fn check_block_symmetric(f: &RatFun, blocks: &BlockData, seed: u64) -> Result<()> {
    let mut groups = Vec::new();
    for i in 1..=blocks.levels() {
        for j in 1..=blocks.k(i) {
            groups.push((1..=blocks.m(i, j)).map(|k| Var::root(i, j, k)).collect::<Vec<_>>());
        }
    }
    check_symmetric_in(f, &groups, seed)
}

/// As [`check_block_symmetric`] for arbitrary groups of variables.
pub fn check_symmetric_in(f: &RatFun, groups: &[Vec<Var>], seed: u64) -> Result<()> {
    let candidates: Vec<&Vec<Var>> = groups.iter().filter(|g| g.len() > 1).collect();
    if candidates.is_empty() {
        return Ok(());
    }
    let mut g = Lcg::new(seed);
    for _ in 0..3 {
        let group = candidates[g.below(candidates.len() as u64) as usize];
        let m = group.len() as u64;
        let a = g.below(m) as usize;
        let mut b = g.below(m - 1) as usize;
        if b >= a {
            b += 1;
        }
        let (va, vb) = (group[a], group[b]);
        let swapped = f.rename(&|v| if v == va { vb } else if v == vb { va } else { v })?;
        if &swapped != f {
            return Err(Error::SymmetryViolation(format!("{} <-> {}", va, vb)));
        }
    }
    Ok(())
}

/// Tangent weights at a fixed point as ordered coordinate pairs
/// `(c_tgt, c_src)` with multiplicities; the weight is `λ_tgt − λ_src`.
pub fn tangent_weight_pairs(t: &Tableau, p: &TorusFixedPoint) -> Result<BTreeMap<(usize, usize), i64>> {
    let ledger = tangent_ledger(t);
    let n = t.spec().n();
    let mut pairs: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for (&(src, tgt, _), &c) in ledger.counts() {
        let tcoords: Vec<usize> = match tgt {
            Target::Ambient => (1..=n).collect(),
            Target::Block(b) => p.coords(b.level, b.block).to_vec(),
        };
        for &cs in p.coords(src.level, src.block) {
            for &ct in &tcoords {
                *pairs.entry((ct, cs)).or_insert(0) += c;
            }
        }
    }
    pairs.retain(|_, e| *e != 0);
    if let Some((&(a, b), e)) = pairs.iter().find(|(&(a, b), _)| a == b) {
        return Err(Error::CancellationFailure(format!("diagonal pair ({}, {}) with multiplicity {}", a, b, e)));
    }
    Ok(pairs)
}

/// `∏ (λ_tgt − λ_src)^mult` for numeric weights.
pub fn tangent_euler_at(t: &Tableau, p: &TorusFixedPoint, lambda: &[Coeff]) -> Result<Coeff> {
    let mut acc = Coeff::from_integer(1.into());
    for ((ct, cs), e) in tangent_weight_pairs(t, p)? {
        let w = &lambda[ct - 1] - &lambda[cs - 1];
        if e < 0 {
            return Err(Error::CancellationFailure(format!("negative multiplicity at ({}, {})", ct, cs)));
        }
        for _ in 0..e {
            acc *= &w;
        }
    }
    Ok(acc)
}

