use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::HalfInt;

/// Truncated generating series in `q^(1/2)` with integer coefficients.
///
/// Coefficients are known exactly up to and including `order`; everything
/// beyond is unknown, not zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: BTreeMap<i32, BigInt>,
    order: HalfInt,
}

impl QSeries {
    pub fn zero(order: HalfInt) -> Self {
        Self { coeffs: BTreeMap::new(), order }
    }

    pub fn one(order: HalfInt) -> Self {
        Self::monomial(HalfInt::ZERO, BigInt::one(), order)
    }

    pub fn monomial(exp: HalfInt, c: BigInt, order: HalfInt) -> Self {
        let mut s = Self::zero(order);
        s.set(exp, c);
        s
    }

    /// From coefficients at `0, 1, 2, ...` (integer exponents only).
    pub fn from_integer_coeffs(cs: &[i64]) -> Self {
        let order = HalfInt::from_int(cs.len() as i32 - 1);
        let mut s = Self::zero(order);
        for (n, &c) in cs.iter().enumerate() {
            s.set(HalfInt::from_int(n as i32), BigInt::from(c));
        }
        s
    }

    pub fn order(&self) -> HalfInt {
        self.order
    }

    pub fn set(&mut self, exp: HalfInt, c: BigInt) {
        assert!(exp >= HalfInt::ZERO, "negative exponent {exp}");
        if exp > self.order {
            return;
        }
        if c.is_zero() {
            self.coeffs.remove(&exp.twice());
        } else {
            self.coeffs.insert(exp.twice(), c);
        }
    }

    pub fn coeff(&self, exp: HalfInt) -> BigInt {
        assert!(exp <= self.order, "coefficient q^{exp} beyond truncation {}", self.order);
        self.coeffs.get(&exp.twice()).cloned().unwrap_or_default()
    }

    /// Coefficients at `0, 1/2, 1, ..., order`.
    pub fn coeffs(&self) -> Vec<BigInt> {
        self.order.steps_up_to().map(|e| self.coeff(e)).collect()
    }

    /// Coefficients at integer exponents `0, 1, ..., floor(order)`.
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        (0..=self.order.floor()).map(|n| self.coeff(HalfInt::from_int(n))).collect()
    }

    pub fn truncate(&self, order: HalfInt) -> Self {
        let order = order.min(self.order);
        Self {
            coeffs: self.coeffs.range(..=order.twice()).map(|(k, v)| (*k, v.clone())).collect(),
            order,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut s = Self::zero(self.order);
        for (&k, v) in &self.coeffs {
            s.set(HalfInt::from_twice(k), v * c);
        }
        s
    }

    /// Multiplies in place by `1 / (1 - sign * q^exp)`.
    fn divide_by_binomial(&mut self, exp: HalfInt, sign: i64) {
        assert!(exp > HalfInt::ZERO);
        let step = exp.twice();
        let top = self.order.twice();
        let sign = BigInt::from(sign);
        for k in step..=top {
            if let Some(prev) = self.coeffs.get(&(k - step)).cloned() {
                let add = prev * &sign;
                let entry = self.coeffs.entry(k).or_default();
                *entry += add;
                if entry.is_zero() {
                    self.coeffs.remove(&k);
                }
            }
        }
    }

    /// Exact integer halving; panics if some coefficient is odd.
    fn halve(&self) -> Self {
        let two = BigInt::from(2);
        let mut s = Self::zero(self.order);
        for (&k, v) in &self.coeffs {
            assert!((v % &two).is_zero(), "odd coefficient in halving");
            s.set(HalfInt::from_twice(k), v / &two);
        }
        s
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let order = self.order.min(rhs.order);
        let mut s = self.truncate(order);
        for (&k, v) in rhs.coeffs.range(..=order.twice()) {
            let e = HalfInt::from_twice(k);
            let c = s.coeff(e) + v;
            s.set(e, c);
        }
        s
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        self + &rhs.scale(&BigInt::from(-1))
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let order = self.order.min(rhs.order);
        let mut acc: BTreeMap<i32, BigInt> = BTreeMap::new();
        for (&a, x) in &self.coeffs {
            for (&b, y) in rhs.coeffs.range(..=order.twice() - a) {
                *acc.entry(a + b).or_default() += x * y;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        QSeries { coeffs: acc, order }
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&k, v) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{v}")?,
                _ => write!(f, "{v}*q^{}", HalfInt::from_twice(k))?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order + HalfInt::HALF)
    }
}

/// Character of the rank-`rank` Heisenberg vertex algebra, `prod_{n>=1} (1-q^n)^(-rank)`.
pub fn heisenberg_series(rank: usize, order: HalfInt) -> QSeries {
    assert!(rank >= 1);
    let mut s = QSeries::one(order);
    for n in 1..=order.floor().max(0) {
        for _ in 0..rank {
            s.divide_by_binomial(HalfInt::from_int(n), 1);
        }
    }
    s
}

/// Character of the fixed points of `h -> -h` in the rank-`rank` Heisenberg
/// vertex algebra: `(prod (1-q^n)^(-rank) + prod (1+q^n)^(-rank)) / 2`.
pub fn heisenberg_plus_series(rank: usize, order: HalfInt) -> QSeries {
    assert!(rank >= 1);
    let mut signed = QSeries::one(order);
    for n in 1..=order.floor().max(0) {
        for _ in 0..rank {
            signed.divide_by_binomial(HalfInt::from_int(n), -1);
        }
    }
    (&heisenberg_series(rank, order) + &signed).halve()
}

/// Character of the Weyl vertex algebra with `pairs` pairs of generators,
/// `prod_{n>=1} (1 - q^(n-1/2))^(-2 pairs)`.
pub fn fock_series(pairs: usize, order: HalfInt) -> QSeries {
    assert!(pairs >= 1);
    let mut s = QSeries::one(order);
    let mut depth = HalfInt::HALF;
    while depth <= order {
        for _ in 0..2 * pairs {
            s.divide_by_binomial(depth, 1);
        }
        depth = depth + HalfInt::from_int(1);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries) -> Vec<i64> {
        s.integer_coeffs().iter().map(|c| c.try_into().unwrap()).collect()
    }

    fn all(s: &QSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.try_into().unwrap()).collect()
    }

    /// Multisets of positive integers summing to `n` with parts `<= max`,
    /// each part coloured by one of `colors`; returns the count split by
    /// parity of the number of parts.
    fn colored_partitions(n: u32, max: u32, colors: u32) -> (i64, i64) {
        if n == 0 {
            return (1, 0);
        }
        let mut even = 0;
        let mut odd = 0;
        // choose the largest part p (with color index order enforced via
        // recursion on (part, color) pairs)
        fn rec(n: u32, max_key: u32, colors: u32, parts: u32, even: &mut i64, odd: &mut i64) {
            if n == 0 {
                if parts.is_multiple_of(2) {
                    *even += 1;
                } else {
                    *odd += 1;
                }
                return;
            }
            for key in (0..max_key).rev() {
                let p = key / colors + 1;
                if p <= n {
                    rec(n - p, key + 1, colors, parts + 1, even, odd);
                }
            }
        }
        rec(n, max * colors, colors, 0, &mut even, &mut odd);
        (even, odd)
    }

    #[test]
    fn partition_oracle_sanity() {
        // p(4) = 5, split even/odd by part count: (3,1),(2,2),(1^4) even
        assert_eq!(colored_partitions(4, 4, 1), (3, 2));
    }

    #[test]
    fn heisenberg_rank1() {
        let expected: Vec<i64> = (0..=6).map(|n| {
            let (e, o) = colored_partitions(n, n.max(1), 1);
            e + o
        }).collect();
        assert_eq!(expected, vec![1, 1, 2, 3, 5, 7, 11]);
        assert_eq!(ints(&heisenberg_series(1, HalfInt::from_int(6))), expected);
    }

    #[test]
    fn heisenberg_rank2() {
        let expected: Vec<i64> = (0..=2).map(|n| {
            let (e, o) = colored_partitions(n, n.max(1), 2);
            e + o
        }).collect();
        assert_eq!(expected, vec![1, 2, 5]);
        assert_eq!(ints(&heisenberg_series(2, HalfInt::from_int(2))), expected);
        assert_eq!(ints(&heisenberg_series(1, HalfInt::ZERO)), vec![1]);
    }

    #[test]
    fn heisenberg_plus_rank1() {
        let expected: Vec<i64> = (0..=6).map(|n| colored_partitions(n, n.max(1), 1).0).collect();
        assert_eq!(expected, vec![1, 0, 1, 1, 3, 3, 6]);
        assert_eq!(ints(&heisenberg_plus_series(1, HalfInt::from_int(6))), expected);
        assert_eq!(ints(&heisenberg_plus_series(1, HalfInt::from_int(2))), vec![1, 0, 1]);
        assert_eq!(ints(&heisenberg_plus_series(2, HalfInt::from_int(1))), vec![1, 0]);
    }

    #[test]
    fn fock_dims() {
        assert_eq!(all(&fock_series(1, HalfInt::from_int(2))), vec![1, 2, 3, 6, 9]);
        assert_eq!(all(&fock_series(1, HalfInt::ZERO)), vec![1]);
        assert_eq!(all(&fock_series(2, HalfInt::HALF)), vec![1, 4]);
    }

    #[test]
    fn heisenberg_multiplicative_in_rank() {
        let o = HalfInt::from_int(8);
        for r in 1..3 {
            for s in 1..3 {
                assert_eq!(&heisenberg_series(r, o) * &heisenberg_series(s, o), heisenberg_series(r + s, o));
            }
        }
    }

    #[test]
    fn signed_partition_cross_check() {
        // 2 * plus - full = sum over partitions of (-1)^{parts}
        let o = HalfInt::from_int(7);
        for rank in 1..=2u32 {
            let full = heisenberg_series(rank as usize, o);
            let plus = heisenberg_plus_series(rank as usize, o);
            let diff = &plus.scale(&BigInt::from(2)) - &full;
            for n in 0..=7u32 {
                let (e, od) = colored_partitions(n, n.max(1), rank);
                assert_eq!(diff.coeff(HalfInt::from_int(n as i32)), BigInt::from(e - od));
            }
        }
    }

    #[test]
    fn truncation_is_min_of_operands() {
        let a = heisenberg_series(1, HalfInt::from_int(3));
        let b = heisenberg_series(1, HalfInt::from_int(5));
        assert_eq!((&a * &b).order(), HalfInt::from_int(3));
        assert_eq!((&a + &b).order(), HalfInt::from_int(3));
    }
}
