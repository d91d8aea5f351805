use super::{poly::int, Coeff, Poly, Var};

/// `Σ_{k=0}^{d} x^k / k!`.
pub fn exp_series(x: &Poly, d: u32) -> Poly {
    let mut out = Poly::one();
    let mut term = Poly::one();
    for k in 1..=d {
        term = (&term * x).scale(&Coeff::new(1.into(), (k as i64).into()));
        if term.is_zero() {
            break;
        }
        out += &term;
    }
    out
}

/// `Σ_{k=0}^{d} (c·s)^k / k!` for a class `c` and a scalar symbol `s`.
pub fn exp_truncated(c: &Poly, s: Var, d: u32) -> Poly {
    exp_series(&(c * &Poly::var(s)), d)
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Coeff {
    let mut acc = int(1);
    for k in 2..=n {
        acc *= int(k as i64);
    }
    acc
}
