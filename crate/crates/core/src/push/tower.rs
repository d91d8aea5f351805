use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use alloc::string::ToString;

use num_traits::{One, Zero};

use super::brion::coset_images;
use super::{omega_class, restrictive_pushforward, BlockAlphabet, OmegaSpec};
use crate::algebra::{Coeff, Poly, RatFun, Var};
use crate::error::{Error, Result};
use crate::rng::lambda_vector;
use crate::tableau::{BlockData, IndexTables, Tableau};

/// One stage of the fibration tower: push forward along `alphabet` against
/// `omega`, then send the letters, in order, to `targets`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerLevel {
    pub alphabet: BlockAlphabet,
    pub omega: Poly,
    pub targets: Vec<Poly>,
}

/// The tower of restrictive flag bundles realizing `E_(A;0)`.
///
/// Level `i` fibers over level `i+1`: its alphabet is the level-`i` blocks
/// plus a quotient block of size `r_{i+1} − r_i`, and the letters become the
/// level-`(i+1)` roots; at the top they become the ambient roots.
pub fn component_tower(t: &Tableau) -> Result<Vec<TowerLevel>> {
    let blocks = BlockData::of(t);
    let idx = IndexTables::of(&blocks);
    let spec = t.spec();
    let mut tower = Vec::with_capacity(blocks.levels());
    for i in 1..=blocks.levels() {
        let k = blocks.k(i);
        let mut ab: Vec<Vec<Var>> = (1..=k).map(|j| (1..=blocks.m(i, j)).map(|s| Var::root(i, j, s)).collect()).collect();
        let extra = spec.rank(i + 1) - spec.rank(i);
        ab.push((1..=extra).map(|s| Var::root(i, k + 1, s)).collect());
        let alphabet = BlockAlphabet::new(ab)?;

        let top = blocks.is_ambient(i + 1);
        let mut om = OmegaSpec::default();
        if !top {
            for j in 1..=k {
                let qs: Vec<Poly> = (idx.ia(i, j) + 1..=blocks.k(i + 1))
                    .flat_map(|jp| (1..=blocks.m(i + 1, jp)).map(move |s| Poly::var(Var::root(i + 1, jp, s))))
                    .collect();
                om.constraints.push((alphabet.blocks()[j - 1].clone(), qs));
            }
        }
        let targets = if top {
            (1..=alphabet.len()).map(|k| Poly::var(Var::ambient(k))).collect()
        } else {
            (1..=blocks.k(i + 1))
                .flat_map(|jp| (1..=blocks.m(i + 1, jp)).map(move |s| Poly::var(Var::root(i + 1, jp, s))))
                .collect()
        };
        tower.push(TowerLevel { alphabet, omega: omega_class(&om), targets });
    }
    Ok(tower)
}

/// Iterated restrictive push-forward down the tower, then ambient roots to
/// zero.
pub fn integrate_to_point(p: &RatFun, tower: &[TowerLevel], budget: u128) -> Result<RatFun> {
    let mut cur = p.clone();
    for level in tower {
        let pushed = restrictive_pushforward(&cur, &level.alphabet, &level.omega, budget)?;
        let map: BTreeMap<Var, Poly> = level.alphabet.letters().into_iter().zip(level.targets.iter().cloned()).collect();
        cur = pushed.substitute(&map)?;
    }
    let ambient: BTreeMap<Var, Poly> = cur.vars().into_iter().filter(|v| v.is_ambient()).map(|v| (v, Poly::zero())).collect();
    if !ambient.is_empty() {
        cur = cur.substitute(&ambient)?;
    }
    if let Some(v) = cur.vars().into_iter().find(|v| v.is_root() || v.is_ambient()) {
        return Err(Error::IntegrationShape(format!("{} survives integration", v)));
    }
    Ok(cur)
}

/// `∫_{E_(A;0)} P` through the symbolic tower. The ambient roots are set to
/// zero first; the result is regular there, so this only saves work.
pub fn integrate_over_component(t: &Tableau, p: &RatFun, budget: u128) -> Result<RatFun> {
    let n = t.spec().n();
    let zero: BTreeMap<Var, Poly> = (1..=n).map(|k| (Var::ambient(k), Poly::zero())).collect();
    let p = p.substitute(&zero)?;
    integrate_to_point(&p, &component_tower(t)?, budget)
}

/// The tower's iterated coset sums evaluated at ambient roots `s·μ`, with
/// `s → 0` taken after summing.
///
/// Each level's letters receive the values of its targets in every coset
/// order, so a full chain of choices evaluates `P · ∏ Ω_i / Δ_i` at a point.
/// Chains on which some `Ω_i` vanishes are skipped. The sum equals
/// [`integrate_to_point`] of the same tower.
pub fn integrate_tower_at(p: &RatFun, tower: &[TowerLevel], n: usize, seed: u64, budget: u128) -> Result<RatFun> {
    for level in tower {
        let cosets = level.alphabet.coset_count();
        if cosets > budget {
            return Err(Error::BudgetExceeded { cosets, budget });
        }
    }
    for attempt in 0..super::LAMBDA_ATTEMPTS as u64 {
        let mu = lambda_vector(seed.wrapping_add(attempt), n);
        match nested_sum(p, tower, &mu) {
            Err(Error::SingularSubstitution(_)) | Err(Error::ZeroDenominator) => continue,
            other => return other,
        }
    }
    Err(Error::LambdaExhausted { attempts: super::LAMBDA_ATTEMPTS })
}

fn nested_sum(p: &RatFun, tower: &[TowerLevel], mu: &[Coeff]) -> Result<RatFun> {
    let mut values: BTreeMap<Var, Coeff> = BTreeMap::new();
    for (k, m) in mu.iter().enumerate() {
        values.insert(Var::ambient(k + 1), m.clone());
    }
    let mut leaves = Vec::new();
    descend(p, tower, tower.len(), &mut values, Coeff::one(), 0, &mut leaves)?;
    let total = RatFun::sum_all(&leaves);
    let s = Poly::var(Var::Scale);
    if total.denominator().keys().any(|f| f == &s) {
        return Err(Error::IntegrationShape("pole at s = 0".into()));
    }
    total.substitute_var(Var::Scale, &Poly::zero())
}

fn value_of(values: &BTreeMap<Var, Coeff>, p: &Poly) -> Result<Coeff> {
    match p.as_constant() {
        Some(c) => Ok(c),
        None => {
            let v = p.vars().into_iter().next().ok_or_else(|| Error::IntegrationShape(p.to_string()))?;
            values.get(&v).cloned().ok_or_else(|| Error::IntegrationShape(format!("{} has no value", v)))
        }
    }
}

fn descend(
    p: &RatFun,
    tower: &[TowerLevel],
    level: usize,
    values: &mut BTreeMap<Var, Coeff>,
    weight: Coeff,
    s_exp: i64,
    leaves: &mut Vec<RatFun>,
) -> Result<()> {
    if level == 0 {
        let s = Poly::var(Var::Scale);
        let map: BTreeMap<Var, Poly> = values.iter().map(|(v, c)| (*v, s.scale(c))).collect();
        let mut val = p.substitute(&map)?.scale(&weight);
        if s_exp >= 0 {
            val = val.mul_poly(&s.pow(s_exp as u32));
        } else {
            val = &val * &RatFun::recip_linear(&s)?.pow((-s_exp) as u32);
        }
        leaves.push(val);
        return Ok(());
    }
    let stage = &tower[level - 1];
    let letters = stage.alphabet.letters();
    let target_values: Vec<Coeff> = stage.targets.iter().map(|t| value_of(values, t)).collect::<Result<_>>()?;
    let index: BTreeMap<Var, usize> = letters.iter().enumerate().map(|(k, v)| (*v, k)).collect();
    let blocks = stage.alphabet.blocks();
    let omega_deg = stage.omega.total_degree().unwrap_or(0) as i64;
    let fiber = stage.alphabet.fiber_dimension() as i64;
    for image in coset_images(&letters, &stage.alphabet.sizes()) {
        for (k, v) in letters.iter().enumerate() {
            values.insert(*v, target_values[index[&image[k]]].clone());
        }
        let consts: BTreeMap<Var, Poly> = values.iter().map(|(v, c)| (*v, Poly::constant(c.clone()))).collect();
        let omega = stage.omega.substitute(&consts).as_constant().unwrap_or_else(Coeff::zero);
        if omega.is_zero() {
            continue;
        }
        let mut delta = Coeff::one();
        for a in 0..blocks.len() {
            for b in a + 1..blocks.len() {
                for x in &blocks[a] {
                    for y in &blocks[b] {
                        delta *= &values[y] - &values[x];
                    }
                }
            }
        }
        if delta.is_zero() {
            return Err(Error::SingularSubstitution("coincident letters".into()));
        }
        let w = &weight * &omega / delta;
        descend(p, tower, level - 1, values, w, s_exp + omega_deg - fiber, leaves)?;
    }
    for v in &letters {
        values.remove(v);
    }
    Ok(())
}
