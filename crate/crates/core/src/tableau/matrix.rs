use alloc::format;
use alloc::vec::Vec;

use super::FlagSpec;
use crate::error::{Error, Result};

/// An admissible incomplete matrix `A` (and optionally `B`) over a [`FlagSpec`].
///
/// Row `i` has length `r_i`. Without `beta` the row sums are the degrees;
/// with `beta` the sums of both rows together are.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    spec: FlagSpec,
    alpha: Vec<Vec<u32>>,
    beta: Option<Vec<Vec<u32>>>,
}

fn check_shape(spec: &FlagSpec, rows: &[Vec<u32>], name: &str) -> Result<()> {
    if rows.len() != spec.levels() {
        return Err(Error::InvalidTableau(format!("{} needs {} rows", name, spec.levels())));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != spec.rank(i + 1) {
            return Err(Error::InvalidTableau(format!(
                "{} row {} must have length {}",
                name,
                i + 1,
                spec.rank(i + 1)
            )));
        }
        if row.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidTableau(format!("{} row {} is not non-decreasing", name, i + 1)));
        }
    }
    if !columns_admissible(rows) {
        return Err(Error::InvalidTableau(format!("{} violates column admissibility", name)));
    }
    Ok(())
}

/// `row_i[j] ≥ row_{i+1}[j]` wherever both exist.
pub(crate) fn columns_admissible(rows: &[Vec<u32>]) -> bool {
    rows.windows(2)
        .all(|w| w[0].iter().zip(w[1].iter()).all(|(a, b)| a >= b))
}

impl Tableau {
    pub fn new(spec: FlagSpec, alpha: Vec<Vec<u32>>, beta: Option<Vec<Vec<u32>>>) -> Result<Tableau> {
        check_shape(&spec, &alpha, "alpha")?;
        if let Some(b) = &beta {
            check_shape(&spec, b, "beta")?;
        }
        for i in 1..=spec.levels() {
            let mut s: u32 = alpha[i - 1].iter().sum();
            if let Some(b) = &beta {
                s += b[i - 1].iter().sum::<u32>();
            }
            if s != spec.degree(i) {
                return Err(Error::InvalidTableau(format!(
                    "row {} sums to {} instead of {}",
                    i,
                    s,
                    spec.degree(i)
                )));
            }
        }
        Ok(Tableau { spec, alpha, beta })
    }

    /// The zero tableau of a degree-zero flag type.
    pub fn zero(spec: &FlagSpec) -> Result<Tableau> {
        let spec = spec.with_degrees(alloc::vec![0; spec.levels()])?;
        let alpha = (1..=spec.levels()).map(|i| alloc::vec![0; spec.rank(i)]).collect();
        Tableau::new(spec, alpha, None)
    }

    pub fn spec(&self) -> &FlagSpec {
        &self.spec
    }

    pub fn alpha(&self) -> &[Vec<u32>] {
        &self.alpha
    }

    pub fn beta(&self) -> Option<&[Vec<u32>]> {
        self.beta.as_deref()
    }

    /// Whether `B` is absent or identically zero.
    pub fn is_distinguished(&self) -> bool {
        self.beta
            .as_ref()
            .map_or(true, |b| b.iter().all(|r| r.iter().all(|&x| x == 0)))
    }

    /// The same `A` with `B` dropped.
    pub fn distinguished(&self) -> Tableau {
        Tableau { spec: self.spec.clone(), alpha: self.alpha.clone(), beta: None }
    }

    pub fn is_zero(&self) -> bool {
        self.is_distinguished() && self.alpha.iter().all(|r| r.iter().all(|&x| x == 0))
    }
}

/// Non-decreasing sequences of length `len` summing to `sum`, lexicographic.
pub fn nondecreasing_rows(len: usize, sum: u32) -> Vec<Vec<u32>> {
    fn go(len: usize, sum: u32, min: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if len == 0 {
            if sum == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        // remaining entries are all ≥ x, so x ≤ sum/len
        let mut x = min;
        while (x as u64) * (len as u64) <= sum as u64 {
            prefix.push(x);
            go(len - 1, sum - x, x, prefix, out);
            prefix.pop();
            x += 1;
        }
    }
    let mut out = Vec::new();
    go(len, sum, 0, &mut Vec::new(), &mut out);
    out
}

/// All distinguished tableaux of the given flag type, lexicographic on flattened rows.
pub fn enumerate_tableaux(spec: &FlagSpec) -> Vec<Tableau> {
    let candidates: Vec<Vec<Vec<u32>>> = (1..=spec.levels())
        .map(|i| nondecreasing_rows(spec.rank(i), spec.degree(i)))
        .collect();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    fn go(level: usize, cands: &[Vec<Vec<u32>>], rows: &mut Vec<Vec<u32>>, spec: &FlagSpec, out: &mut Vec<Tableau>) {
        if level == cands.len() {
            out.push(Tableau { spec: spec.clone(), alpha: rows.clone(), beta: None });
            return;
        }
        for row in &cands[level] {
            if let Some(prev) = rows.last() {
                if !prev.iter().zip(row.iter()).all(|(a, b)| a >= b) {
                    continue;
                }
            }
            rows.push(row.clone());
            go(level + 1, cands, rows, spec, out);
            rows.pop();
        }
    }
    go(0, &candidates, &mut rows, spec, &mut out);
    out
}
