use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::grassmannian::{compositions, grassmannian_hg_term, grassmannian_roots, schur_pairings};
use crate::algebra::{factorial, rat, Poly, RatFun, Var};
use crate::error::{Error, Result};

/// One comparison of a Schur pairing at a fixed degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoriVafaRow {
    pub degree: u32,
    pub partition: Vec<u32>,
    pub expected: RatFun,
    pub computed: RatFun,
    pub residual: RatFun,
}

/// Result of checking the Grassmannian series against the product of
/// projective spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoriVafaReport {
    pub n: usize,
    pub r: usize,
    pub max_degree: u32,
    /// Per degree: whether the Vandermonde divided out exactly.
    pub exact_division: Vec<bool>,
    pub rows: Vec<HoriVafaRow>,
}

impl HoriVafaReport {
    pub fn passed(&self) -> bool {
        self.exact_division.iter().all(|&b| b) && self.rows.iter().all(|r| r.residual.is_zero())
    }
}

/// `Σ_{k ≤ d} (x/α)^k / k!`.
fn exp_over_alpha(x: &Poly, d: u32) -> Result<RatFun> {
    let inv_alpha = RatFun::recip_linear(&Poly::var(Var::Alpha))?;
    let mut out = Vec::new();
    let mut term = RatFun::one();
    for k in 0..=d {
        if k > 0 {
            term = &term.mul_poly(x) * &inv_alpha;
        }
        out.push(term.scale(&factorial(k).recip()));
    }
    Ok(RatFun::sum_all(&out))
}

/// Coefficient of `e^{d·t}` in the assembled series, common `e^{−H·t/α}`
/// removed: the antisymmetrized product of projective-space terms divided
/// by `Δ`, times the leftover `c`-exponentials. Also reports whether `Δ`
/// divided out exactly.
pub fn hori_vafa_side(n: usize, r: usize, d: u32, p_terms: &[RatFun]) -> Result<(RatFun, bool)> {
    let roots = grassmannian_roots(r);
    let alpha = Poly::var(Var::Alpha);
    let sign = if ((r as u32 - 1) * d) % 2 == 0 { rat(1) } else { rat(-1) };
    let single = Var::root(1, 1, 1);
    let mut parts = Vec::new();
    for c in compositions(d, r) {
        let mut term = RatFun::constant(sign.clone());
        for a in 0..r {
            for b in a + 1..r {
                let shifted = &(&Poly::var(roots[b]) - &Poly::var(roots[a])) + &alpha.scale(&rat(c[b] as i64 - c[a] as i64));
                term = term.mul_poly(&shifted);
            }
            let y = roots[a];
            let g = p_terms[c[a] as usize].rename(&|v| if v == single { y } else { v })?;
            term = &term * &g;
        }
        parts.push(term);
    }
    let mut total = RatFun::sum_all(&parts);
    for a in 0..r {
        for b in a + 1..r {
            total = total.div_linear(&(&Poly::var(roots[b]) - &Poly::var(roots[a])))?;
        }
    }
    let exact = !total.denominator().keys().any(|f| f.vars().iter().all(|v| v.is_root()));
    let dim = (r * (n - r)) as u32;
    let sum_y: Poly = roots.iter().map(|&v| Poly::var(v)).sum();
    let c = Poly::var(Var::FormalC);
    let up = exp_over_alpha(&(&sum_y * &c), dim)?;
    let down = exp_over_alpha(&(-&(&sum_y * &c)), dim)?;
    Ok((&(&total * &up) * &down, exact))
}

/// Compares every Schur pairing of the Grassmannian terms `1_d`, `d ≤ D`,
/// with those of the series assembled from `r` copies of `P^{n−1}`.
pub fn hori_vafa_verify(n: usize, r: usize, max_degree: u32, seed: u64, budget: u128) -> Result<HoriVafaReport> {
    if r < 2 || r >= n || max_degree < 1 {
        return Err(Error::InvalidSpec(alloc::format!("need 2 ≤ r < n and D ≥ 1, got n={} r={} D={}", n, r, max_degree)));
    }
    let p_terms: Vec<RatFun> = (0..=max_degree).map(|d| grassmannian_hg_term(n, 1, d, seed, budget)).collect::<Result<_>>()?;
    let mut rows = Vec::new();
    let mut exact_division = Vec::new();
    for d in 0..=max_degree {
        let expected = schur_pairings(n, r, &grassmannian_hg_term(n, r, d, seed, budget)?, seed)?;
        let (side, exact) = hori_vafa_side(n, r, d, &p_terms)?;
        exact_division.push(exact);
        let computed: BTreeMap<Vec<u32>, RatFun> = schur_pairings(n, r, &side, seed)?.into_iter().collect();
        for (mu, e) in expected {
            let got = computed[&mu].clone();
            let residual = &got - &e;
            rows.push(HoriVafaRow { degree: d, partition: mu, expected: e, computed: got, residual });
        }
    }
    Ok(HoriVafaReport { n, r, max_degree, exact_division, rows })
}
