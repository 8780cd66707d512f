use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{FockMonomial, Mode};
use crate::error::{Error, Result};
use crate::exact::{fmt_scalar, parse_scalar, HalfInt, Scalar};

/// A finite rational linear combination of Fock monomials.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FockVector {
    terms: BTreeMap<FockMonomial, Scalar>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::from(FockMonomial::vacuum())
    }

    pub fn term(c: Scalar, m: FockMonomial) -> Self {
        let mut v = Self::zero();
        v.add_term(m, c);
        v
    }

    /// Parses a product of creation modes such as `"a1+(-1/2) a4-(-1/2)"`
    /// (no `|0>` needed) and returns `c` times it.
    pub fn modes(c: Scalar, modes: &str) -> Result<Self> {
        let mono: FockMonomial = format!("{modes} |0>").parse()?;
        Ok(Self::term(c, mono))
    }

    pub fn add_term(&mut self, m: FockMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &FockVector) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), c * x);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (FockMonomial, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &FockMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coefficient of the vacuum.
    pub fn vacuum_coeff(&self) -> Scalar {
        self.coeff(&FockMonomial::vacuum())
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn weights(&self) -> BTreeSet<HalfInt> {
        self.terms.keys().map(FockMonomial::weight).collect()
    }

    /// The common weight of all terms, if there is one. The zero vector has none.
    pub fn homogeneous_weight(&self) -> Option<HalfInt> {
        let ws = self.weights();
        (ws.len() == 1).then(|| *ws.iter().next().unwrap())
    }

    pub fn max_weight(&self) -> Option<HalfInt> {
        self.terms.keys().map(FockMonomial::weight).max()
    }

    pub fn component_of_weight(&self, w: HalfInt) -> Self {
        self.filter(|m| m.weight() == w)
    }

    pub fn component_of_charge(&self, c: i32) -> Self {
        self.filter(|m| m.charge() == c)
    }

    pub fn filter(&self, pred: impl Fn(&FockMonomial) -> bool) -> Self {
        Self {
            terms: self.terms.iter().filter(|(m, _)| pred(m)).map(|(m, x)| (m.clone(), x.clone())).collect(),
        }
    }

    pub fn max_species(&self) -> u16 {
        self.terms.keys().map(FockMonomial::max_species).max().unwrap_or(0)
    }

    pub fn to_row(&self) -> Vec<(FockMonomial, Scalar)> {
        self.terms.iter().map(|(m, x)| (m.clone(), x.clone())).collect()
    }

    pub fn from_row(row: Vec<(FockMonomial, Scalar)>) -> Self {
        let mut v = Self::zero();
        for (m, x) in row {
            v.add_term(m, x);
        }
        v
    }
}

impl From<FockMonomial> for FockVector {
    fn from(m: FockMonomial) -> Self {
        Self::term(Scalar::one(), m)
    }
}

impl FromIterator<(FockMonomial, Scalar)> for FockVector {
    fn from_iter<T: IntoIterator<Item = (FockMonomial, Scalar)>>(iter: T) -> Self {
        let mut v = Self::zero();
        for (m, x) in iter {
            v.add_term(m, x);
        }
        v
    }
}

impl AddAssign<&FockVector> for FockVector {
    fn add_assign(&mut self, rhs: &FockVector) {
        for (m, x) in &rhs.terms {
            self.add_term(m.clone(), x.clone());
        }
    }
}

impl SubAssign<&FockVector> for FockVector {
    fn sub_assign(&mut self, rhs: &FockVector) {
        for (m, x) in &rhs.terms {
            self.add_term(m.clone(), -x.clone());
        }
    }
}

impl Add for &FockVector {
    type Output = FockVector;
    fn add(self, rhs: &FockVector) -> FockVector {
        let mut v = self.clone();
        v += rhs;
        v
    }
}

impl Sub for &FockVector {
    type Output = FockVector;
    fn sub(self, rhs: &FockVector) -> FockVector {
        let mut v = self.clone();
        v -= rhs;
        v
    }
}

impl Neg for &FockVector {
    type Output = FockVector;
    fn neg(self) -> FockVector {
        self.scaled(&-Scalar::one())
    }
}

impl Mul<&FockVector> for &Scalar {
    type Output = FockVector;
    fn mul(self, rhs: &FockVector) -> FockVector {
        rhs.scaled(self)
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, x)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{}] {m}", fmt_scalar(x))?;
        }
        Ok(())
    }
}

impl FromStr for FockVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut v = Self::zero();
        for term in s.split(" + ") {
            let bad = || Error::Parse(format!("bad vector term {term:?}"));
            let rest = term.trim().strip_prefix('[').ok_or_else(bad)?;
            let (c, mono) = rest.split_once(']').ok_or_else(bad)?;
            let c = parse_scalar(c).ok_or_else(bad)?;
            v.add_term(mono.parse()?, c);
        }
        Ok(v)
    }
}

/// Action of a single mode on one monomial: `(coefficient, result)` pairs.
pub(crate) fn apply_mode_to_monomial(mode: Mode, m: &FockMonomial) -> Option<(i64, FockMonomial)> {
    if mode.is_creation() {
        return Some((1, m.times(mode)));
    }
    // annihilation acts as a derivation, contracting its partner
    let (partner, bracket) = mode.partner();
    let k = m.multiplicity(partner);
    if k == 0 {
        return None;
    }
    Some((bracket as i64 * k as i64, m.without(partner).expect("partner present")))
}

/// `mode` applied to `v`.
pub fn apply_mode(mode: Mode, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero();
    for (m, x) in v.terms() {
        if let Some((c, r)) = apply_mode_to_monomial(mode, m) {
            out.add_term(r, x * Scalar::from_integer(c.into()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};
    use crate::weylfock::graded_basis;
    use proptest::prelude::*;

    fn v(text: &str) -> FockVector {
        FockVector::modes(int(1), text).unwrap()
    }

    #[test]
    fn creation_multiplies() {
        let r = apply_mode(Mode::plus(1, -1), &FockVector::vacuum());
        assert_eq!(r, v("a1+(-1/2)"));
        assert_eq!(r.homogeneous_weight(), Some(HalfInt::HALF));
    }

    #[test]
    fn annihilation_contracts() {
        let r = apply_mode(Mode::minus(1, 1), &v("a1+(-1/2)"));
        assert_eq!(r, FockVector::vacuum().scaled(&int(-1)));
        let r = apply_mode(Mode::minus(2, 3), &v("a1+(-1/2) a2+(-3/2)"));
        assert_eq!(r, v("a1+(-1/2)").scaled(&int(-1)));
        let r = apply_mode(Mode::plus(1, 1), &v("a1-(-1/2) a1-(-1/2)"));
        assert_eq!(r, v("a1-(-1/2)").scaled(&int(2)));
        assert!(apply_mode(Mode::plus(1, 1), &FockVector::vacuum()).is_zero());
    }

    /// Brute-force normal ordering: a word in modes is reduced by moving
    /// annihilators right through the Weyl relations until they hit the vacuum.
    fn normal_order_word(word: &[Mode]) -> FockVector {
        fn rec(word: &[Mode]) -> Vec<(i64, Vec<Mode>)> {
            // rightmost annihilator with only creators to its right
            match word.iter().rposition(|m| !m.is_creation()) {
                None => vec![(1, word.to_vec())],
                Some(pos) if pos == word.len() - 1 => vec![],
                Some(pos) => {
                    let (a, b) = (word[pos], word[pos + 1]);
                    let mut swapped = word.to_vec();
                    swapped.swap(pos, pos + 1);
                    let mut out = rec(&swapped);
                    // [a, b]
                    let c = if a.species() == b.species() && a.charge() != b.charge() && a.depth() == -b.depth() {
                        a.charge().sign() as i64
                    } else {
                        0
                    };
                    if c != 0 {
                        let mut shorter = word.to_vec();
                        shorter.drain(pos..pos + 2);
                        out.extend(rec(&shorter).into_iter().map(|(k, w)| (k * c, w)));
                    }
                    out
                }
            }
        }
        rec(word)
            .into_iter()
            .map(|(k, w)| (FockMonomial::from_modes(w).unwrap(), int(k)))
            .collect()
    }

    #[test]
    fn matches_normal_ordering_oracle() {
        let word = [Mode::minus(2, 3), Mode::plus(1, -1), Mode::plus(2, -3)];
        assert_eq!(normal_order_word(&word), v("a1+(-1/2)").scaled(&int(-1)));
        let modes: Vec<Mode> = (1..=2u16)
            .flat_map(|s| [1, 3, -1, -3].into_iter().flat_map(move |d| [Mode::plus(s, d), Mode::minus(s, d)]))
            .collect();
        for w in [HalfInt::from_int(1), HalfInt::from_twice(3)] {
            for b in graded_basis(2, w, None) {
                for &m in &modes {
                    let mut word = vec![m];
                    word.extend(b.factors().iter().copied());
                    assert_eq!(apply_mode(m, &FockVector::from(b.clone())), normal_order_word(&word), "{m} on {b}");
                }
            }
        }
    }

    fn any_mode() -> impl Strategy<Value = Mode> {
        (1u16..=2, any::<bool>(), prop::sample::select(vec![-5, -3, -1, 1, 3, 5])).prop_map(|(s, p, d)| {
            if p {
                Mode::plus(s, d)
            } else {
                Mode::minus(s, d)
            }
        })
    }

    fn small_vector() -> impl Strategy<Value = FockVector> {
        let basis: Vec<FockMonomial> = (0..=4).flat_map(|t| graded_basis(2, HalfInt::from_twice(t), None)).collect();
        let n = basis.len();
        prop::collection::vec((0..n, -4i64..4), 1..5)
            .prop_map(move |ts| ts.into_iter().map(|(i, a)| (basis[i].clone(), int(a))).collect())
    }

    proptest! {
        #[test]
        fn weyl_relations(m in any_mode(), n in any_mode(), x in small_vector()) {
            let lhs = &apply_mode(m, &apply_mode(n, &x)) - &apply_mode(n, &apply_mode(m, &x));
            let (p, c) = m.partner();
            let delta = if n == p { c } else { 0 };
            prop_assert_eq!(lhs, x.scaled(&int(delta as i64)));
        }
    }

    #[test]
    fn text_round_trip() {
        let mut x = v("a1+(-1/2) a3-(-1/2)").scaled(&frac(1, 2));
        x -= &v("a2+(-3/2)");
        x += &FockVector::vacuum();
        let back: FockVector = x.to_string().parse().unwrap();
        assert_eq!(back, x);
        assert_eq!("0".parse::<FockVector>().unwrap(), FockVector::zero());
    }
}
