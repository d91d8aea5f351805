use alloc::collections::BTreeMap;
use alloc::string::ToString;
use core::fmt;

use num_traits::{One, Zero};

use super::ratfun::{canonical_linear, pow_coeff, Canonical};
use super::{Coeff, Poly, RatFun};
use crate::error::{Error, Result};

/// A product `scalar · ∏ f^e` of canonical linear forms with signed exponents.
///
/// Euler classes are built in this shape so that they can be inverted before
/// the numerator is expanded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factored {
    scalar: Coeff,
    factors: BTreeMap<Poly, i64>,
}

impl Default for Factored {
    fn default() -> Self {
        Factored::one()
    }
}

impl Factored {
    pub fn one() -> Factored {
        Factored { scalar: Coeff::one(), factors: BTreeMap::new() }
    }

    pub fn scalar(&self) -> &Coeff {
        &self.scalar
    }

    pub fn factors(&self) -> &BTreeMap<Poly, i64> {
        &self.factors
    }

    pub fn scale(&mut self, c: &Coeff) {
        self.scalar *= c;
    }

    /// Multiplies by `l^exp` for an affine form `l`.
    pub fn push(&mut self, l: &Poly, exp: i64) -> Result<()> {
        if exp == 0 {
            return Ok(());
        }
        let canon = match canonical_linear(l) {
            Err(Error::ZeroDenominator) if exp > 0 => {
                self.scalar = Coeff::zero();
                return Ok(());
            }
            Err(Error::ZeroDenominator) => return Err(Error::SingularSubstitution(l.to_string())),
            other => other?,
        };
        let (a, g) = match canon {
            Canonical::Constant(c) => (c, None),
            Canonical::Linear(a, g) => (a, Some(g)),
        };
        let p = pow_coeff(&a, exp.unsigned_abs() as u32);
        if exp > 0 {
            self.scalar *= p;
        } else {
            self.scalar /= p;
        }
        if let Some(g) = g {
            let e = self.factors.entry(g.clone()).or_insert(0);
            *e += exp;
            if *e == 0 {
                self.factors.remove(&g);
            }
        }
        Ok(())
    }

    pub fn mul(&self, other: &Factored) -> Factored {
        let mut out = self.clone();
        out.scalar *= &other.scalar;
        for (g, e) in &other.factors {
            let slot = out.factors.entry(g.clone()).or_insert(0);
            *slot += e;
            if *slot == 0 {
                out.factors.remove(g);
            }
        }
        out
    }

    /// The reciprocal; fails on zero.
    pub fn recip(&self) -> Result<Factored> {
        if self.scalar.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Factored {
            scalar: self.scalar.recip(),
            factors: self.factors.iter().map(|(g, e)| (g.clone(), -e)).collect(),
        })
    }

    /// Linear factors in the numerator, with multiplicity.
    pub fn numerator_count(&self) -> i64 {
        self.factors.values().filter(|e| **e > 0).sum()
    }

    /// Linear factors in the denominator, with multiplicity.
    pub fn denominator_count(&self) -> i64 {
        -self.factors.values().filter(|e| **e < 0).sum::<i64>()
    }

    /// Expands the numerator and keeps the denominator factored.
    pub fn to_ratfun(&self) -> RatFun {
        if self.scalar.is_zero() {
            return RatFun::zero();
        }
        let mut num = Poly::constant(self.scalar.clone());
        let mut den = BTreeMap::new();
        for (g, e) in &self.factors {
            if *e > 0 {
                num = &num * &g.pow(*e as u32);
            } else {
                den.insert(g.clone(), (-e) as u32);
            }
        }
        // distinct monic linear forms are coprime, so nothing cancels
        super::ratfun::ratfun_normalize(num, den).expect("canonical factors are nonzero")
    }
}

impl fmt::Display for Factored {
    /// `scalar*(f)^e*…/((g)^e*…)`, numerator factors first, each side sorted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |f: &mut fmt::Formatter<'_>, pos: bool| -> fmt::Result {
            let mut first = true;
            for (g, e) in self.factors.iter().filter(|(_, e)| (**e > 0) == pos) {
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "({})", g)?;
                if e.abs() > 1 {
                    write!(f, "^{}", e.abs())?;
                }
            }
            Ok(())
        };
        let nums = self.numerator_count() > 0;
        if !self.scalar.is_one() || !nums {
            write!(f, "{}", self.scalar)?;
            if nums {
                f.write_str("*")?;
            }
        }
        side(f, true)?;
        if self.denominator_count() > 0 {
            f.write_str("/(")?;
            side(f, false)?;
            f.write_str(")")?;
        }
        Ok(())
    }
}
