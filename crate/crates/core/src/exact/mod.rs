//! Exact arithmetic shared by every other module.
//!
//! Scalars are arbitrary-precision rationals. Half-integers (conformal
//! weights, mode depths, q-exponents) are stored doubled so that they key and
//! order exactly.

mod halfint;
mod qseries;
mod sparse;

pub use halfint::HalfInt;
pub use qseries::{fock_series, heisenberg_plus_series, heisenberg_series, QSeries};
pub use sparse::{invert_dense, nullspace, Echelon, SparseMatrix};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Size measure used by pivot selection: bit length of numerator plus denominator.
pub(crate) fn height(s: &Scalar) -> u64 {
    s.numer().abs().bits() + s.denom().bits()
}

/// Generalized binomial coefficient `C(n, k)` for integer `n` (possibly negative).
pub fn binomial(n: i64, k: i64) -> Scalar {
    if k < 0 {
        return zero();
    }
    let mut acc = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Scalar::new(acc, den)
}

/// Renders a scalar as `p` or `p/q`.
pub fn fmt_scalar(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Scalar::new(n, d))
        }
        None => Some(Scalar::from_integer(text.parse().ok()?)),
    }
}
