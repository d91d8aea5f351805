use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::algebra::{Coeff, Poly, RatFun, Var};
use crate::error::{Error, Result};
use crate::locus::{check_block_symmetric, fixed_point_map, tangent_euler_at, torus_fixed_points};
use crate::rng::lambda_vector;
use crate::tableau::{component_dimension, BlockData, Tableau};

/// Attempts before giving up on generic torus weights.
pub const LAMBDA_ATTEMPTS: usize = 5;

/// `∫_{E_(A;0)} P` by fixed-point localization for the ambient torus.
///
/// Weights are `λ = s·μ` with `μ` drawn from `seed`; the sum over fixed
/// points is formed exactly and the limit `s → 0` taken at the end, which
/// leaves the circle-equivariant integral. A singular weight choice moves on
/// to the next seed.
pub fn ab_integrate(t: &Tableau, p: &RatFun, seed: u64) -> Result<RatFun> {
    let blocks = BlockData::of(t);
    check_block_symmetric(p, &blocks, seed)?;
    for attempt in 0..LAMBDA_ATTEMPTS as u64 {
        match ab_integrate_at(t, p, &blocks, seed.wrapping_add(attempt)) {
            Err(Error::SingularSubstitution(_)) | Err(Error::ZeroDenominator) => continue,
            other => return other,
        }
    }
    Err(Error::LambdaExhausted { attempts: LAMBDA_ATTEMPTS })
}

fn ab_integrate_at(t: &Tableau, p: &RatFun, blocks: &BlockData, seed: u64) -> Result<RatFun> {
    let n = t.spec().n();
    let mu = lambda_vector(seed, n);
    let s = Poly::var(Var::Scale);
    let weights: Vec<Poly> = mu.iter().map(|m| s.scale(m)).collect();
    let dim = component_dimension(t)? as u32;
    let s_pow = RatFun::recip_linear(&s)?.pow(dim);
    let mut terms = Vec::new();
    for pt in torus_fixed_points(t) {
        let e = tangent_euler_at(t, &pt, &mu)?;
        if e == Coeff::from_integer(0.into()) {
            return Err(Error::SingularSubstitution(format!("tangent weight vanishes at seed {}", seed)));
        }
        let map: BTreeMap<Var, Poly> = fixed_point_map(&pt, blocks, &weights);
        let val = p.substitute(&map)?;
        terms.push(&val.scale(&e.recip()) * &s_pow);
    }
    let total = RatFun::sum_all(&terms);
    if total.denominator().keys().any(|f| f == &s) {
        return Err(Error::IntegrationShape("pole at s = 0".into()));
    }
    total.substitute_var(Var::Scale, &Poly::zero())
}
