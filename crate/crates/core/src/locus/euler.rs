use alloc::format;

use super::ledger::{normal_ledger, Ledger, Target};
use crate::algebra::{Factored, Poly, RatFun, Var};
use crate::error::{Error, Result};
use crate::tableau::{BlockData, IndexTables, Tableau};

/// Chern-root variable of slot `k` in block `j` of level `i`; the ambient
/// level maps to the ambient roots.
pub fn slot_var(blocks: &BlockData, i: usize, j: usize, k: usize) -> Var {
    if blocks.is_ambient(i) {
        Var::ambient(k)
    } else {
        Var::root(i, j, k)
    }
}

fn target_coords(blocks: &BlockData, t: Target) -> (usize, usize) {
    match t {
        Target::Block(b) => (b.level, b.block),
        Target::Ambient => (blocks.levels() + 1, 1),
    }
}

/// `∏ (x_tgt − x_src + wα)^{sign}` over all slot pairs of every term, with
/// roots assigned by `assign`.
pub fn euler_factored_with(ledger: &Ledger, assign: &dyn Fn(Var) -> Poly) -> Result<Factored> {
    let blocks = ledger.blocks();
    let alpha = Poly::var(Var::Alpha);
    let mut out = Factored::one();
    for (&(src, tgt, w), &c) in ledger.counts() {
        if w == 0 {
            return Err(Error::WeightZeroTerm(format!("{:?} -> {:?}", src, tgt)));
        }
        let (ti, tj) = target_coords(blocks, tgt);
        let wa = alpha.scale(&crate::algebra::rat(w));
        for ks in 1..=ledger.source_mult(src) {
            let ys = assign(slot_var(blocks, src.level, src.block, ks));
            for kt in 1..=ledger.target_mult(tgt) {
                let yt = assign(slot_var(blocks, ti, tj, kt));
                out.push(&(&(&yt - &ys) + &wa), c)?;
            }
        }
    }
    Ok(out)
}

/// Equivariant Euler class of a ledger in canonical root variables.
pub fn euler_class_from_ledger(ledger: &Ledger) -> Result<RatFun> {
    Ok(euler_factored_with(ledger, &|v| Poly::var(v))?.to_ratfun())
}

/// `1 / e(ν)` for the normal ledger of a tableau.
pub fn inverse_normal_euler(t: &Tableau) -> Result<RatFun> {
    let nu = normal_ledger(t)?;
    Ok(euler_factored_with(&nu, &|v| Poly::var(v))?.recip()?.to_ratfun())
}

fn push_pairs(
    out: &mut Factored,
    blocks: &BlockData,
    src: (usize, usize),
    tgt: (usize, usize),
    form: &dyn Fn(&Poly, &Poly) -> Poly,
    exp: i64,
) -> Result<()> {
    for ks in 1..=blocks.m(src.0, src.1) {
        let ys = Poly::var(slot_var(blocks, src.0, src.1, ks));
        for kt in 1..=blocks.m(tgt.0, tgt.1) {
            let yt = Poly::var(slot_var(blocks, tgt.0, tgt.1, kt));
            out.push(&form(&ys, &yt), exp)?;
        }
    }
    Ok(())
}

/// Upper bound for the cross-level block range attached to `(i, j, j″)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) enum CrossBound {
    /// `I′_A(i,j″)` on every sub-range.
    PrimeEverywhere,
    /// `I_A(i,j″)` below `j`, `I′_A(i,j)` at `j″ = j`.
    Staggered,
}

pub(crate) fn closed_form_factored(t: &Tableau, bound: CrossBound) -> Result<Factored> {
    let blocks = BlockData::of(t);
    let idx = IndexTables::of(&blocks);
    let alpha = Poly::var(Var::Alpha);
    let la = |l: i64| alpha.scale(&crate::algebra::rat(l));
    let mut out = Factored::one();
    for i in 1..=blocks.levels() {
        let up_k = blocks.k(i + 1);
        for j in 1..=blocks.k(i) {
            let a = blocks.a(i, j) as i64;
            for jpp in 1..=j {
                let hi = match bound {
                    CrossBound::PrimeEverywhere => idx.ia_prime(i, jpp),
                    CrossBound::Staggered if jpp < j => idx.ia(i, jpp),
                    CrossBound::Staggered => idx.ia_prime(i, j),
                };
                for jp in idx.ia(i, jpp - 1) + 1..=hi {
                    for l in 1..=a - blocks.a(i + 1, jp) as i64 {
                        let f = |ys: &Poly, yt: &Poly| &(yt - ys) - &la(l);
                        push_pairs(&mut out, &blocks, (i, j), (i + 1, jp), &f, 1)?;
                    }
                }
            }
            for jp in 1..j {
                for l in 1..=a - blocks.a(i, jp) as i64 {
                    let f = |ys: &Poly, yt: &Poly| &(yt - ys) - &la(l);
                    push_pairs(&mut out, &blocks, (i, j), (i, jp), &f, -1)?;
                }
            }
            for jp in j + 1..=blocks.k(i) {
                let g = a - blocks.a(i, jp) as i64;
                for l in g + 1..=-1 {
                    let f = |ys: &Poly, yt: &Poly| &(yt - ys) - &la(l);
                    push_pairs(&mut out, &blocks, (i, j), (i, jp), &f, 1)?;
                }
            }
            for jp in 1..=up_k {
                let g = a - blocks.a(i + 1, jp) as i64;
                for l in g + 1..=-1 {
                    let f = |ys: &Poly, yt: &Poly| &(yt - ys) - &la(l);
                    push_pairs(&mut out, &blocks, (i, j), (i + 1, jp), &f, -1)?;
                }
            }
        }
    }
    Ok(out)
}

/// `e(ν)` from the normal ledger, left factored.
pub fn normal_euler_factored(t: &Tableau) -> Result<Factored> {
    euler_factored_with(&normal_ledger(t)?, &|v| Poly::var(v))
}

/// Closed-form `e(ν)`, left factored.
pub fn closed_form_euler_factored(t: &Tableau) -> Result<Factored> {
    closed_form_factored(t, CrossBound::Staggered)
}

/// Closed-form product for `e(ν)`, built without any ledger.
pub fn euler_class_closed_form(t: &Tableau) -> Result<RatFun> {
    Ok(closed_form_factored(t, CrossBound::Staggered)?.to_ratfun())
}

/// Grassmannian product form of `e(ν)` with ambient roots set to zero:
/// `∏_j ∏_k ∏_{l ≤ a_j} (−y_{j;k} − lα)^n` over
/// `∏_{j<j′} (−1)^{m_j m_j′ (g−1)} ∏_{k,k′} (−y_{j′;k′} + y_{j;k} − gα)`,
/// `g = a_j′ − a_j`.
pub fn grassmannian_euler_product(t: &Tableau) -> Result<RatFun> {
    Ok(grassmannian_euler_factored(t)?.to_ratfun())
}

/// Factored form of [`grassmannian_euler_product`].
pub fn grassmannian_euler_factored(t: &Tableau) -> Result<Factored> {
    if t.spec().levels() != 1 {
        return Err(Error::InvalidSpec(format!("expected one level, got {}", t.spec().levels())));
    }
    let blocks = BlockData::of(t);
    let n = t.spec().n() as i64;
    let alpha = Poly::var(Var::Alpha);
    let mut out = Factored::one();
    for j in 1..=blocks.k(1) {
        for k in 1..=blocks.m(1, j) {
            let y = Poly::var(Var::root(1, j, k));
            for l in 1..=blocks.a(1, j) as i64 {
                out.push(&(&(-&y) - &alpha.scale(&crate::algebra::rat(l))), n)?;
            }
        }
    }
    for j in 1..=blocks.k(1) {
        for jp in j + 1..=blocks.k(1) {
            let g = blocks.a(1, jp) as i64 - blocks.a(1, j) as i64;
            let mm = (blocks.m(1, j) * blocks.m(1, jp)) as i64;
            if (mm * (g - 1)) % 2 != 0 {
                out.scale(&crate::algebra::rat(-1));
            }
            let f = |ys: &Poly, yt: &Poly| &(ys - yt) - &alpha.scale(&crate::algebra::rat(g));
            push_pairs(&mut out, &blocks, (1, j), (1, jp), &f, -1)?;
        }
    }
    Ok(out)
}

/// Euler class of the normal ledger with ambient roots specialized to zero.
pub fn normal_euler_ambient_zero(t: &Tableau) -> Result<RatFun> {
    Ok(normal_euler_factored_ambient_zero(t)?.to_ratfun())
}

/// Factored form of [`normal_euler_ambient_zero`].
pub fn normal_euler_factored_ambient_zero(t: &Tableau) -> Result<Factored> {
    let nu = normal_ledger(t)?;
    euler_factored_with(&nu, &|v| if v.is_ambient() { Poly::zero() } else { Poly::var(v) })
}


/// `1 / e(ν)` with ambient roots specialized to zero.
pub fn inverse_normal_euler_ambient_zero(t: &Tableau) -> Result<RatFun> {
    Ok(normal_euler_factored_ambient_zero(t)?.recip()?.to_ratfun())
}
