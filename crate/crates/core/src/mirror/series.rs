use alloc::vec::Vec;

use super::{grassmannian_hg_term, integral_id, IntegralResult};
use crate::algebra::RatFun;
use crate::error::Result;
use crate::tableau::FlagSpec;

/// One degree of the series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HgTerm {
    /// `1_d` as a class in the tautological roots (one level).
    Class(RatFun),
    /// The integral `I_d` (several levels).
    Integral(IntegralResult),
}

/// Series terms for every multi-degree with `Σd ≤ max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HgSeries {
    pub max_degree: u32,
    pub terms: Vec<(Vec<u32>, HgTerm)>,
}

fn multi_degrees(levels: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for total in 0..=max {
        out.extend(super::compositions(total, levels));
    }
    out
}

pub fn hg_series(n: usize, ranks: &[usize], max_degree: u32, seed: u64, budget: u128) -> Result<HgSeries> {
    FlagSpec::new(n, ranks.to_vec(), alloc::vec![0; ranks.len()])?;
    let mut terms = Vec::new();
    for d in multi_degrees(ranks.len(), max_degree) {
        let term = if ranks.len() == 1 {
            HgTerm::Class(grassmannian_hg_term(n, ranks[0], d[0], seed, budget)?)
        } else {
            HgTerm::Integral(integral_id(&FlagSpec::new(n, ranks.to_vec(), d.clone())?, seed)?)
        };
        terms.push((d, term));
    }
    Ok(HgSeries { max_degree, terms })
}
