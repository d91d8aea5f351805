use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::{ratfun_normalize, rat, Coeff, Poly, RatFun, Var};
use crate::error::{Error, Result};
use crate::locus::inverse_normal_euler_ambient_zero;
use crate::push::{ab_integrate, brion_pushforward, partitions_in_box, schur_polynomial, BlockAlphabet};
use crate::tableau::{enumerate_tableaux, BlockData, FlagSpec, Tableau};

/// Roots `y_1..y_r` of the tautological subbundle on `Gr_r(Cⁿ)`.
pub fn grassmannian_roots(r: usize) -> Vec<Var> {
    (1..=r).map(|k| Var::root(1, 1, k)).collect()
}

/// All `(c_1..c_r)` with `c_k ≥ 0` and `Σ c_k = d`, lexicographic.
pub fn compositions(d: u32, r: usize) -> Vec<Vec<u32>> {
    fn go(left: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=left {
            cur.push(x);
            go(left - x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r > 0 {
        go(d, r, &mut Vec::new(), &mut out);
    }
    out
}

/// `1_d` as the sum over tableaux of the push-forward of `1/e(ν)` to `X`.
pub fn hg_term_by_tableaux(n: usize, r: usize, d: u32, budget: u128) -> Result<RatFun> {
    let spec = FlagSpec::grassmannian(n, r, d)?;
    let targets: Vec<Poly> = grassmannian_roots(r).into_iter().map(Poly::var).collect();
    let mut parts = Vec::new();
    for t in enumerate_tableaux(&spec) {
        parts.push(push_to_base(&t, &inverse_normal_euler_ambient_zero(&t)?, &targets, budget)?);
    }
    Ok(RatFun::sum_all(&parts))
}

fn push_to_base(t: &Tableau, p: &RatFun, targets: &[Poly], budget: u128) -> Result<RatFun> {
    let b = BlockData::of(t);
    let blocks: Vec<Vec<Var>> = (1..=b.k(1)).map(|j| (1..=b.m(1, j)).map(|k| Var::root(1, j, k)).collect()).collect();
    let alphabet = BlockAlphabet::new(blocks)?;
    let pushed = brion_pushforward(p, &alphabet, budget)?;
    let map: BTreeMap<Var, Poly> = alphabet.letters().into_iter().zip(targets.iter().cloned()).collect();
    pushed.substitute(&map)
}

/// `1_d` from the simplified product display: the sum over compositions
/// `c ⊨ d` of `(−1)^{(r−1)d} ∏_{k<k′} (y_k′ − y_k + (c_k′ − c_k)α)/(y_k′ − y_k)
/// · ∏_k ∏_{l ≤ c_k} (−y_k − lα)^{−n}`.
pub fn hg_term_by_display(n: usize, r: usize, d: u32) -> Result<RatFun> {
    let roots = grassmannian_roots(r);
    let alpha = Poly::var(Var::Alpha);
    let sign = if ((r as u32 - 1) * d) % 2 == 0 { rat(1) } else { rat(-1) };
    let mut terms = Vec::new();
    for c in compositions(d, r) {
        let mut num = Poly::constant(sign.clone());
        let mut den: Vec<(Poly, u32)> = Vec::new();
        for a in 0..r {
            for b in a + 1..r {
                let diff = &Poly::var(roots[b]) - &Poly::var(roots[a]);
                num = &num * &(&diff + &alpha.scale(&rat(c[b] as i64 - c[a] as i64)));
                den.push((diff, 1));
            }
            for l in 1..=c[a] as i64 {
                den.push((&(-&Poly::var(roots[a])) - &alpha.scale(&rat(l)), n as u32));
            }
        }
        terms.push(ratfun_normalize(num, den)?);
    }
    Ok(RatFun::sum_all(&terms))
}

/// `∫_X s_μ(y) · C` for every `μ` in the `r × (n−r)` box.
pub fn schur_pairings(n: usize, r: usize, class: &RatFun, seed: u64) -> Result<Vec<(Vec<u32>, RatFun)>> {
    let x = Tableau::zero(&FlagSpec::grassmannian(n, r, 0)?)?;
    let roots = grassmannian_roots(r);
    partitions_in_box(r, (n - r) as u32)
        .into_iter()
        .map(|mu| {
            let s = schur_polynomial(&mu, &roots);
            Ok((mu, ab_integrate(&x, &class.mul_poly(&s), seed)?))
        })
        .collect()
}

/// `1_d` for `Gr_r(Cⁿ)`, computed by both routes; they must pair identically
/// against every Schur class.
pub fn grassmannian_hg_term(n: usize, r: usize, d: u32, seed: u64, budget: u128) -> Result<RatFun> {
    let by_tableaux = hg_term_by_tableaux(n, r, d, budget)?;
    let by_display = hg_term_by_display(n, r, d)?;
    if by_tableaux != by_display {
        let a = schur_pairings(n, r, &by_tableaux, seed)?;
        let b = schur_pairings(n, r, &by_display, seed)?;
        if let Some(((mu, x), (_, y))) = a.iter().zip(&b).find(|(x, y)| x.1 != y.1) {
            return Err(Error::FormulaMismatch(format!("pairing with s{:?}: {} vs {}", mu, x, y)));
        }
    }
    Ok(by_tableaux)
}

/// The class `Σ_ν a_ν s_ν(y)` whose Schur pairings are `pairings`.
pub fn reconstruct_class_from_pairings(n: usize, r: usize, pairings: &[(Vec<u32>, RatFun)], seed: u64) -> Result<RatFun> {
    let basis = partitions_in_box(r, (n - r) as u32);
    if pairings.len() != basis.len() {
        return Err(Error::PairingCount { expected: basis.len(), got: pairings.len() });
    }
    let by_mu: BTreeMap<&Vec<u32>, &RatFun> = pairings.iter().map(|(m, p)| (m, p)).collect();
    let rhs: Vec<&RatFun> = basis
        .iter()
        .map(|m| by_mu.get(m).copied().ok_or_else(|| Error::PairingCount { expected: basis.len(), got: by_mu.len() }))
        .collect::<Result<_>>()?;
    let x = Tableau::zero(&FlagSpec::grassmannian(n, r, 0)?)?;
    let roots = grassmannian_roots(r);
    let schur: Vec<Poly> = basis.iter().map(|m| schur_polynomial(m, &roots)).collect();
    let k = basis.len();
    let mut gram = alloc::vec![alloc::vec![Coeff::zero(); k]; k];
    for a in 0..k {
        for b in a..k {
            let v = ab_integrate(&x, &RatFun::from_poly(&schur[a] * &schur[b]), seed)?;
            let c = v.as_constant().ok_or_else(|| Error::IntegrationShape(format!("Gram entry {}", v)))?;
            gram[a][b] = c.clone();
            gram[b][a] = c;
        }
    }
    let inv = invert(gram)?;
    let mut parts = Vec::new();
    for nu in 0..k {
        let mut coeff = RatFun::zero();
        for mu in 0..k {
            if !inv[nu][mu].is_zero() {
                coeff = &coeff + &rhs[mu].scale(&inv[nu][mu]);
            }
        }
        parts.push(coeff.mul_poly(&schur[nu]));
    }
    Ok(RatFun::sum_all(&parts))
}

fn invert(mut m: Vec<Vec<Coeff>>) -> Result<Vec<Vec<Coeff>>> {
    let k = m.len();
    let mut inv: Vec<Vec<Coeff>> = (0..k).map(|i| (0..k).map(|j| if i == j { Coeff::one() } else { Coeff::zero() }).collect()).collect();
    for col in 0..k {
        let pivot = (col..k).find(|&r| !m[r][col].is_zero()).ok_or(Error::ZeroDenominator)?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col].recip();
        for j in 0..k {
            m[col][j] *= &p;
            inv[col][j] *= &p;
        }
        for row in 0..k {
            if row != col && !m[row][col].is_zero() {
                let f = m[row][col].clone();
                for j in 0..k {
                    let a = &m[col][j] * &f;
                    m[row][j] -= a;
                    let b = &inv[col][j] * &f;
                    inv[row][j] -= b;
                }
            }
        }
    }
    Ok(inv)
}
