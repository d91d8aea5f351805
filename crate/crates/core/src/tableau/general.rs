use alloc::vec::Vec;

use super::matrix::{columns_admissible, nondecreasing_rows};
use super::{FlagSpec, Tableau};

/// A fixed-point component `E_(A;B)` together with its dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralComponent {
    pub tableau: Tableau,
    pub dimension: u64,
}

/// Weight-0 part of `χ(O(p[0] + q[∞]))`: `H⁰` has it iff `p,q ≥ 0`, `H¹` iff `p,q ≤ −1`.
fn weight_zero_euler(p: i64, q: i64) -> i64 {
    if p >= 0 && q >= 0 {
        1
    } else if p < 0 && q < 0 {
        -1
    } else {
        0
    }
}

/// Dimension of `E_(A;B)` from labels `(a_i(c), b_i(c))` of a coordinate fixed point.
///
/// `labels[i]` lists the pairs of level `i+1` (0-based), the last entry being
/// the ambient level with all labels zero. The count is the rank of the
/// circle-weight-0 part of `Σ π_! Hom(E_i, E_{i+1}) − Σ π_! End(E_i)`.
pub fn weight_zero_rank(labels: &[Vec<(u32, u32)>]) -> i64 {
    let mut rank = 0i64;
    for w in labels.windows(2) {
        let (lo, hi) = (&w[0], &w[1]);
        for &(a, b) in lo {
            for &(a2, b2) in hi {
                rank += weight_zero_euler(a as i64 - a2 as i64, b as i64 - b2 as i64);
            }
            for &(a2, b2) in lo {
                rank -= weight_zero_euler(a as i64 - a2 as i64, b as i64 - b2 as i64);
            }
        }
    }
    rank
}

/// Labels of the coordinate fixed point pairing column `j` of `A` with column `j` of `B`.
pub fn canonical_labels(t: &Tableau) -> Vec<Vec<(u32, u32)>> {
    let spec = t.spec();
    let zero_beta: Vec<Vec<u32>> = (1..=spec.levels()).map(|i| alloc::vec![0; spec.rank(i)]).collect();
    let beta = t.beta().unwrap_or(&zero_beta);
    let mut labels: Vec<Vec<(u32, u32)>> = t
        .alpha()
        .iter()
        .zip(beta.iter())
        .map(|(a, b)| a.iter().copied().zip(b.iter().copied()).collect())
        .collect();
    labels.push(alloc::vec![(0, 0); spec.n()]);
    labels
}

/// Dimension of the component indexed by `(A;B)`.
pub fn general_dimension(t: &Tableau) -> u64 {
    let r = weight_zero_rank(&canonical_labels(t));
    debug_assert!(r >= 0);
    r.max(0) as u64
}

/// All `(A;B)` with admissible columns and `Σα_i + Σβ_i = d_i`.
///
/// Ordered lexicographically by flattened `A`, then flattened `B`.
pub fn enumerate_general_components(spec: &FlagSpec) -> Vec<GeneralComponent> {
    let per_level: Vec<Vec<(Vec<u32>, Vec<u32>)>> = (1..=spec.levels())
        .map(|i| {
            let r = spec.rank(i);
            let d = spec.degree(i);
            let mut pairs = Vec::new();
            for da in 0..=d {
                for a in nondecreasing_rows(r, da) {
                    for b in nondecreasing_rows(r, d - da) {
                        pairs.push((a.clone(), b));
                    }
                }
            }
            pairs
        })
        .collect();
    let mut found: Vec<(Vec<Vec<u32>>, Vec<Vec<u32>>)> = Vec::new();
    fn go(
        level: usize,
        per_level: &[Vec<(Vec<u32>, Vec<u32>)>],
        a: &mut Vec<Vec<u32>>,
        b: &mut Vec<Vec<u32>>,
        out: &mut Vec<(Vec<Vec<u32>>, Vec<Vec<u32>>)>,
    ) {
        if level == per_level.len() {
            out.push((a.clone(), b.clone()));
            return;
        }
        for (ra, rb) in &per_level[level] {
            a.push(ra.clone());
            b.push(rb.clone());
            if columns_admissible(a) && columns_admissible(b) {
                go(level + 1, per_level, a, b, out);
            }
            a.pop();
            b.pop();
        }
    }
    go(0, &per_level, &mut Vec::new(), &mut Vec::new(), &mut found);
    found.sort();
    found
        .into_iter()
        .map(|(a, b)| {
            let t = Tableau::new(spec.clone(), a, Some(b)).expect("enumerated rows are admissible");
            let dimension = general_dimension(&t);
            GeneralComponent { tableau: t, dimension }
        })
        .collect()
}
