//! Exact sparse polynomials and rational functions with linear denominators.

mod factored;
mod poly;
mod ratfun;
mod series;
mod var;

pub use factored::Factored;
pub use poly::{Monomial, Poly};
pub use ratfun::{canonical_linear, ratfun_normalize, Canonical, RatFun};
pub use series::{exp_series, exp_truncated, factorial};
pub use var::Var;

/// Coefficient field.
pub type Coeff = num_rational::BigRational;

/// Integer as a coefficient.
pub fn rat(n: i64) -> Coeff {
    poly::int(n)
}

/// `p/q` as a coefficient.
pub fn frac(p: i64, q: i64) -> Coeff {
    Coeff::new(p.into(), q.into())
}
