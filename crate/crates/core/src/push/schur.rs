use alloc::vec::Vec;

use crate::algebra::{ratfun_normalize, Poly, Var};
use crate::error::{Error, Result};

/// Complete homogeneous symmetric polynomial `h_k`.
pub fn complete_homogeneous(k: i64, roots: &[Var]) -> Poly {
    if k < 0 {
        return Poly::zero();
    }
    // h_k(x_1..x_m) = Σ_i x_1^i h_{k−i}(x_2..x_m)
    let mut table: Vec<Poly> = (0..=k).map(|d| if d == 0 { Poly::one() } else { Poly::zero() }).collect();
    for &v in roots.iter().rev() {
        let x = Poly::var(v);
        let mut next = table.clone();
        for d in 1..=k as usize {
            next[d] = &table[d] + &(&x * &next[d - 1]);
        }
        table = next;
    }
    table.pop().unwrap_or_else(Poly::one)
}

fn determinant(m: &[Vec<Poly>]) -> Poly {
    match m.len() {
        0 => Poly::one(),
        1 => m[0][0].clone(),
        n => {
            let mut acc = Poly::zero();
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, p)| p.clone()).collect()).collect();
                let term = &m[0][col] * &determinant(&minor);
                acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

fn trimmed(mu: &[u32]) -> Vec<u32> {
    mu.iter().copied().filter(|&x| x > 0).collect()
}

/// Schur polynomial `s_μ(roots)` by the Jacobi–Trudi determinant
/// `det(h_{μ_i − i + j})`.
pub fn schur_polynomial(mu: &[u32], roots: &[Var]) -> Poly {
    let mu = trimmed(mu);
    if mu.len() > roots.len() {
        return Poly::zero();
    }
    let l = mu.len();
    let m: Vec<Vec<Poly>> = (0..l)
        .map(|i| (0..l).map(|j| complete_homogeneous(mu[i] as i64 - i as i64 + j as i64, roots)).collect())
        .collect();
    determinant(&m)
}

/// Schur polynomial as the bialternant `det(x_j^{μ_i + N − i}) / det(x_j^{N − i})`.
pub fn schur_bialternant(mu: &[u32], roots: &[Var]) -> Result<Poly> {
    let mu = trimmed(mu);
    let n = roots.len();
    if mu.len() > n {
        return Ok(Poly::zero());
    }
    let part = |i: usize| mu.get(i).copied().unwrap_or(0);
    let m: Vec<Vec<Poly>> = (0..n)
        .map(|i| roots.iter().map(|&v| Poly::var(v).pow(part(i) + (n - 1 - i) as u32)).collect())
        .collect();
    let num = determinant(&m);
    let mut vander = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            vander.push((&Poly::var(roots[a]) - &Poly::var(roots[b]), 1));
        }
    }
    let q = ratfun_normalize(num, vander)?;
    q.as_poly().cloned().ok_or_else(|| Error::FormulaMismatch("bialternant is not a polynomial".into()))
}

/// Partitions in the `rows × cols` box as `rows`-tuples padded with zeros,
/// in increasing lexicographic order.
pub fn partitions_in_box(rows: usize, cols: u32) -> Vec<Vec<u32>> {
    fn go(rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == rows {
            out.push(cur.clone());
            return;
        }
        for x in (0..=max).rev() {
            cur.push(x);
            go(rows, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out.reverse();
    out
}
