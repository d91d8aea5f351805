use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use num_traits::{One, Signed};

use crate::algebra::{exp_series, ratfun_normalize, Coeff, Monomial, Poly, RatFun, Var};
use crate::error::{Error, Result};
use crate::locus::inverse_normal_euler;
use crate::push::ab_integrate;
use crate::tableau::{component_dimension, enumerate_tableaux, BlockData, FlagSpec, Tableau};

/// Pullback of the `i`-th hyperplane class: `−Σ_{j,k} y_{i,j;k}`.
pub fn hyperplane_pullback(t: &Tableau, i: usize) -> Poly {
    let b = BlockData::of(t);
    let mut h = Poly::zero();
    for j in 1..=b.k(i) {
        for k in 1..=b.m(i, j) {
            h -= &Poly::var(Var::root(i, j, k));
        }
    }
    h
}

/// `Σ_i t_i · H_i` on a component.
pub fn kahler_pairing(t: &Tableau) -> Poly {
    (1..=t.spec().levels()).map(|i| &hyperplane_pullback(t, i) * &Poly::var(Var::kahler(i))).sum()
}

/// The localized integrand `e^{H·t} / e(ν)` on `E_(A;0)`, the exponential cut
/// at the component dimension.
pub fn localized_integrand(t: &Tableau) -> Result<RatFun> {
    let dim = component_dimension(t)? as u32;
    Ok(inverse_normal_euler(t)?.mul_poly(&exp_series(&kahler_pairing(t), dim)))
}

/// `I_d(t, α)` with its per-tableau breakdown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralResult {
    pub spec: FlagSpec,
    pub value: RatFun,
    pub per_tableau: Vec<(Tableau, RatFun)>,
}

/// One term of the `t`-expansion: exponents of `t_1..t_I` and a coefficient
/// in `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TTerm {
    pub t_exp: Vec<u32>,
    pub alpha: RatFun,
}

/// `Σ_A ∫_{E_(A;0)} e^{H·t} / e(ν)` via the fixed-point oracle.
pub fn integral_id(spec: &FlagSpec, seed: u64) -> Result<IntegralResult> {
    let mut per_tableau = Vec::new();
    for t in enumerate_tableaux(spec) {
        let c = ab_integrate(&t, &localized_integrand(&t)?, seed)?;
        per_tableau.push((t, c));
    }
    let value = RatFun::sum_all(&per_tableau.iter().map(|(_, c)| c.clone()).collect::<Vec<_>>());
    let alpha = Poly::var(Var::Alpha);
    if let Some(f) = value.denominator().keys().find(|f| **f != alpha) {
        return Err(Error::IntegrationShape(alloc::format!("denominator factor {} is not α", f)));
    }
    Ok(IntegralResult { spec: spec.clone(), value, per_tableau })
}

/// Splits a rational function into `t`-monomials with coefficients in the
/// remaining variables, in descending `t`-degree then exponent order.
pub fn t_expansion(value: &RatFun, levels: usize) -> Result<Vec<TTerm>> {
    let mut groups: BTreeMap<Vec<u32>, Poly> = BTreeMap::new();
    for (m, c) in value.numerator().terms() {
        let mut exp = alloc::vec![0u32; levels];
        let mut rest = Vec::new();
        for &(v, e) in m.pairs() {
            match v {
                Var::Kahler(i) if (i as usize) >= 1 && (i as usize) <= levels => exp[i as usize - 1] = e,
                _ => rest.push((v, e)),
            }
        }
        groups.entry(exp).or_insert_with(Poly::zero).add_term(Monomial::from_pairs(rest), c.clone());
    }
    let den: Vec<(Poly, u32)> = value.denominator().iter().map(|(f, e)| (f.clone(), *e)).collect();
    let mut out = Vec::new();
    for (exp, num) in groups {
        out.push(TTerm { t_exp: exp, alpha: ratfun_normalize(num, den.clone())? });
    }
    out.sort_by(|a, b| {
        let da: u32 = a.t_exp.iter().sum();
        let db: u32 = b.t_exp.iter().sum();
        db.cmp(&da).then_with(|| b.t_exp.cmp(&a.t_exp))
    });
    Ok(out)
}

impl IntegralResult {
    pub fn t_terms(&self) -> Result<Vec<TTerm>> {
        t_expansion(&self.value, self.spec.levels())
    }

    /// Human-readable form such as `t/α² + 2/α³`.
    pub fn pretty(&self) -> Result<String> {
        pretty_t_series(&self.value, self.spec.levels())
    }
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
const SUBSCRIPTS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];

fn digits(n: u32, table: &[char; 10]) -> String {
    n.to_string().chars().map(|c| table[c.to_digit(10).unwrap() as usize]).collect()
}

fn power(base: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => base.to_string(),
        _ => alloc::format!("{}{}", base, digits(e, &SUPERSCRIPTS)),
    }
}

/// Renders a function of `t` and `α` whose denominator is a power of `α`
/// as a signed sum of `c · t^e · α^k`.
pub fn pretty_t_series(value: &RatFun, levels: usize) -> Result<String> {
    let alpha = Poly::var(Var::Alpha);
    let shift = match value.denominator().len() {
        0 => 0,
        1 if value.denominator().contains_key(&alpha) => value.denominator()[&alpha] as i64,
        _ => return Err(Error::IntegrationShape(alloc::format!("{} is not Laurent in α", value))),
    };
    // (t exponents, α exponent) → coefficient
    let mut terms: Vec<(Vec<u32>, i64, Coeff)> = Vec::new();
    for (m, c) in value.numerator().terms() {
        let mut exp = alloc::vec![0u32; levels];
        let mut a = 0i64;
        for &(v, e) in m.pairs() {
            match v {
                Var::Kahler(i) if (i as usize) >= 1 && (i as usize) <= levels => exp[i as usize - 1] = e,
                Var::Alpha => a = e as i64,
                other => return Err(Error::IntegrationShape(alloc::format!("unexpected variable {}", other))),
            }
        }
        terms.push((exp, a - shift, c.clone()));
    }
    terms.sort_by(|x, y| {
        let dx: u32 = x.0.iter().sum();
        let dy: u32 = y.0.iter().sum();
        dy.cmp(&dx).then_with(|| y.0.cmp(&x.0)).then_with(|| y.1.cmp(&x.1))
    });
    if terms.is_empty() {
        return Ok("0".to_string());
    }
    let mut out = String::new();
    for (idx, (exp, a, c)) in terms.iter().enumerate() {
        let sign = if c.is_negative() { "-" } else { "+" };
        if idx == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            let _ = write!(out, " {} ", sign);
        }
        let c = c.abs();
        let mut top = String::new();
        for (i, &e) in exp.iter().enumerate() {
            let base = if levels == 1 { "t".to_string() } else { alloc::format!("t{}", digits(i as u32 + 1, &SUBSCRIPTS)) };
            top.push_str(&power(&base, e));
        }
        if *a > 0 {
            top.push_str(&power("α", *a as u32));
        }
        let numer = c.numer().to_string();
        let top = if top.is_empty() {
            numer
        } else if c.numer().is_one() {
            top
        } else {
            alloc::format!("{}{}", numer, top)
        };
        let mut bottom = String::new();
        let has_den = !c.denom().is_one();
        if has_den {
            bottom.push_str(&c.denom().to_string());
        }
        if *a < 0 {
            bottom.push_str(&power("α", (-*a) as u32));
        }
        out.push_str(&top);
        if !bottom.is_empty() {
            if has_den && *a < 0 {
                let _ = write!(out, "/({})", bottom);
            } else {
                let _ = write!(out, "/{}", bottom);
            }
        }
    }
    Ok(out)
}
