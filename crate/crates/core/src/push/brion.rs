use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::BlockAlphabet;
use crate::algebra::{Poly, RatFun, Var};
use crate::error::{Error, Result};
use crate::locus::check_symmetric_in;

/// Default bound on the number of cosets a push-forward may enumerate.
pub const DEFAULT_COSET_BUDGET: u128 = 10080;

/// Push-forward along the flag bundle with Chern-root alphabet `alphabet`:
/// the coset sum of `σ · (P / ∏_{j<j′} ∏ (y_{j′;k′} − y_{j;k}))`.
pub fn brion_pushforward(p: &RatFun, alphabet: &BlockAlphabet, budget: u128) -> Result<RatFun> {
    let cosets = alphabet.coset_count();
    if cosets > budget {
        return Err(Error::BudgetExceeded { cosets, budget });
    }
    check_symmetric_in(p, alphabet.blocks(), 0x5eed)?;
    if p.is_zero() {
        return Ok(RatFun::zero());
    }
    let blocks = alphabet.blocks();
    let mut delta = Vec::new();
    for a in 0..blocks.len() {
        for b in a + 1..blocks.len() {
            for &x in &blocks[a] {
                for &y in &blocks[b] {
                    delta.push((&Poly::var(y) - &Poly::var(x), 1));
                }
            }
        }
    }
    let inv = crate::algebra::ratfun_normalize(Poly::one(), delta)?;
    let q = p * &inv;

    let letters = alphabet.letters();
    let mut terms = Vec::with_capacity(cosets as usize);
    for image in coset_images(&letters, &alphabet.sizes()) {
        let map: BTreeMap<Var, Var> = letters.iter().copied().zip(image).collect();
        terms.push(q.rename(&|v| map.get(&v).copied().unwrap_or(v))?);
    }
    Ok(RatFun::sum_all(&terms))
}

/// `brion_pushforward(P · Ω)`.
pub fn restrictive_pushforward(p: &RatFun, alphabet: &BlockAlphabet, omega: &Poly, budget: u128) -> Result<RatFun> {
    brion_pushforward(&p.mul_poly(omega), alphabet, budget)
}

/// One representative per coset: the letters assigned to each block slot,
/// increasing within a block.
pub(crate) fn coset_images(letters: &[Var], sizes: &[usize]) -> Vec<Vec<Var>> {
    let mut out = Vec::new();
    let mut used = alloc::vec![false; letters.len()];
    let mut current = Vec::with_capacity(letters.len());
    place(letters, sizes, 0, 0, &mut used, &mut current, &mut out);
    out
}

fn place(
    letters: &[Var],
    sizes: &[usize],
    block: usize,
    from: usize,
    used: &mut [bool],
    current: &mut Vec<Var>,
    out: &mut Vec<Vec<Var>>,
) {
    if block == sizes.len() {
        out.push(current.clone());
        return;
    }
    let filled: usize = sizes[..block].iter().sum();
    if current.len() == filled + sizes[block] {
        place(letters, sizes, block + 1, 0, used, current, out);
        return;
    }
    for k in from..letters.len() {
        if used[k] {
            continue;
        }
        used[k] = true;
        current.push(letters[k]);
        place(letters, sizes, block, k + 1, used, current, out);
        current.pop();
        used[k] = false;
    }
}
