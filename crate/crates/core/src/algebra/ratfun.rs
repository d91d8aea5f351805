use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Coeff, Poly, Var};
use crate::error::{Error, Result};

/// An affine form split as `scale · canonical`, or a bare constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Canonical {
    Constant(Coeff),
    Linear(Coeff, Poly),
}

/// Normalizes an affine form to be monic in its least variable.
pub fn canonical_linear(l: &Poly) -> Result<Canonical> {
    if !l.is_affine() {
        return Err(Error::NonLinearFactor(l.to_string()));
    }
    match l.leading_linear() {
        None => {
            let c = l.as_constant().unwrap_or_else(Coeff::zero);
            if c.is_zero() {
                Err(Error::ZeroDenominator)
            } else {
                Ok(Canonical::Constant(c))
            }
        }
        Some((_, a)) => {
            let monic = l.scale(&a.recip());
            Ok(Canonical::Linear(a, monic))
        }
    }
}

/// A rational function whose denominator is a product of linear forms.
///
/// Invariants: every denominator factor is affine, monic in its least
/// variable, and does not divide the numerator. A zero numerator carries an
/// empty denominator. These make the representation unique, so structural
/// equality is equality of rational functions.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatFun {
    num: Poly,
    den: BTreeMap<Poly, u32>,
}

/// Builds the canonical form of `num / ∏ den`.
pub fn ratfun_normalize(num: Poly, den: impl IntoIterator<Item = (Poly, u32)>) -> Result<RatFun> {
    let mut scalar = Coeff::one();
    let mut factors: BTreeMap<Poly, u32> = BTreeMap::new();
    for (f, e) in den {
        if e == 0 {
            continue;
        }
        match canonical_linear(&f)? {
            Canonical::Constant(c) => scalar *= pow_coeff(&c, e),
            Canonical::Linear(a, g) => {
                scalar *= pow_coeff(&a, e);
                *factors.entry(g).or_insert(0) += e;
            }
        }
    }
    let num = if scalar.is_one() { num } else { num.scale(&scalar.recip()) };
    Ok(RatFun::cancel(num, factors))
}

pub(crate) fn pow_coeff(c: &Coeff, e: u32) -> Coeff {
    let mut acc = Coeff::one();
    for _ in 0..e {
        acc *= c;
    }
    acc
}

impl RatFun {
    pub fn zero() -> RatFun {
        RatFun::default()
    }

    pub fn one() -> RatFun {
        RatFun::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> RatFun {
        RatFun { num: p, den: BTreeMap::new() }
    }

    pub fn constant(c: Coeff) -> RatFun {
        RatFun::from_poly(Poly::constant(c))
    }

    pub fn int(n: i64) -> RatFun {
        RatFun::from_poly(Poly::int(n))
    }

    pub fn var(v: Var) -> RatFun {
        RatFun::from_poly(Poly::var(v))
    }

    /// `1 / l` for an affine form `l`.
    pub fn recip_linear(l: &Poly) -> Result<RatFun> {
        ratfun_normalize(Poly::one(), [(l.clone(), 1)])
    }

    /// Divides out canonical factors that divide `num`; `factors` must be canonical.
    fn cancel(mut num: Poly, mut factors: BTreeMap<Poly, u32>) -> RatFun {
        if num.is_zero() {
            return RatFun::zero();
        }
        for (g, e) in factors.iter_mut() {
            while *e > 0 {
                match num.div_linear(g) {
                    Some(q) => {
                        num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        factors.retain(|_, e| *e > 0);
        RatFun { num, den: factors }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &BTreeMap<Poly, u32> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        if self.den.is_empty() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Coeff> {
        self.as_poly().and_then(Poly::as_constant)
    }

    /// Number of linear factors in the denominator, with multiplicity.
    pub fn denominator_degree(&self) -> u32 {
        self.den.values().sum()
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.num.contains_var(v) || self.den.keys().any(|f| f.contains_var(v))
    }

    pub fn vars(&self) -> alloc::collections::BTreeSet<Var> {
        let mut vs = self.num.vars();
        for f in self.den.keys() {
            vs.extend(f.vars());
        }
        vs
    }

    pub fn scale(&self, c: &Coeff) -> RatFun {
        if c.is_zero() {
            return RatFun::zero();
        }
        RatFun { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &Poly) -> RatFun {
        RatFun::cancel(&self.num * p, self.den.clone())
    }

    /// Divides by an affine form.
    pub fn div_linear(&self, l: &Poly) -> Result<RatFun> {
        Ok(self * &RatFun::recip_linear(l)?)
    }

    pub fn pow(&self, e: u32) -> RatFun {
        let mut acc = RatFun::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes polynomial values for variables and renormalizes.
    pub fn substitute(&self, map: &BTreeMap<Var, Poly>) -> Result<RatFun> {
        let num = self.num.substitute(map);
        let mut den = Vec::with_capacity(self.den.len());
        for (f, e) in &self.den {
            let g = f.substitute(map);
            if g.is_zero() {
                return Err(Error::SingularSubstitution(f.to_string()));
            }
            den.push((g, *e));
        }
        ratfun_normalize(num, den)
    }

    pub fn substitute_var(&self, v: Var, value: &Poly) -> Result<RatFun> {
        let mut map = BTreeMap::new();
        map.insert(v, value.clone());
        self.substitute(&map)
    }

    /// Applies a variable renaming.
    pub fn rename(&self, f: &impl Fn(Var) -> Var) -> Result<RatFun> {
        let num = self.num.rename(f);
        let mut den = Vec::with_capacity(self.den.len());
        for (g, e) in &self.den {
            let h = g.rename(f);
            if h.is_zero() {
                return Err(Error::SingularSubstitution(g.to_string()));
            }
            den.push((h, *e));
        }
        ratfun_normalize(num, den)
    }

    /// Sum of many terms over the least common denominator, normalized once.
    pub fn sum_all(items: &[RatFun]) -> RatFun {
        let mut lcm: BTreeMap<Poly, u32> = BTreeMap::new();
        for it in items {
            for (f, e) in &it.den {
                let slot = lcm.entry(f.clone()).or_insert(0);
                *slot = (*slot).max(*e);
            }
        }
        let mut num = Poly::zero();
        for it in items {
            if it.is_zero() {
                continue;
            }
            let mut term = it.num.clone();
            for (f, e) in &lcm {
                let have = it.den.get(f).copied().unwrap_or(0);
                for _ in have..*e {
                    term = &term * f;
                }
            }
            num += &term;
        }
        RatFun::cancel(num, lcm)
    }
}

impl Add<&RatFun> for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFun::cancel(&self.num + &rhs.num, self.den.clone());
        }
        RatFun::sum_all(&[self.clone(), rhs.clone()])
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl Sub<&RatFun> for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul<&RatFun> for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        // cross-cancel first; both sides are already reduced
        let a = RatFun::cancel(self.num.clone(), rhs.den.clone());
        let b = RatFun::cancel(rhs.num.clone(), self.den.clone());
        let mut den = a.den;
        for (f, e) in b.den {
            *den.entry(f).or_insert(0) += e;
        }
        RatFun { num: &a.num * &b.num, den }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<RatFun> for RatFun {
            type Output = RatFun;
            fn $f(self, rhs: RatFun) -> RatFun { (&self).$f(&rhs) }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $f(self, rhs: &RatFun) -> RatFun { (&self).$f(rhs) }
        }
        impl $tr<RatFun> for &RatFun {
            type Output = RatFun;
            fn $f(self, rhs: RatFun) -> RatFun { self.$f(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl core::iter::Sum for RatFun {
    fn sum<I: Iterator<Item = RatFun>>(iter: I) -> RatFun {
        let items: Vec<RatFun> = iter.collect();
        RatFun::sum_all(&items)
    }
}

impl From<Poly> for RatFun {
    fn from(p: Poly) -> RatFun {
        RatFun::from_poly(p)
    }
}

impl fmt::Display for RatFun {
    /// Canonical text `(numerator)/(f1^e1*f2*...)`, factors in sorted order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/(", self.num)?;
        for (idx, (g, e)) in self.den.iter().enumerate() {
            if idx > 0 {
                f.write_str("*")?;
            }
            if g.len() == 1 {
                write!(f, "{}", g)?;
            } else {
                write!(f, "({})", g)?;
            }
            if *e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        f.write_str(")")
    }
}
