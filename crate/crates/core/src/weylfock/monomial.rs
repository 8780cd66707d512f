use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use super::{Charge, Mode};
use crate::error::{Error, Result};
use crate::exact::HalfInt;

/// A normally ordered product of creation modes applied to the vacuum.
///
/// Factors are kept sorted in the canonical [`Mode`] order. The conformal
/// weight is cached and participates in the ordering, so monomials sort by
/// weight first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FockMonomial {
    weight: HalfInt,
    factors: SmallVec<[Mode; 4]>,
}

impl FockMonomial {
    pub fn vacuum() -> Self {
        Self::default()
    }

    /// Normalizes an arbitrary list of creation modes.
    pub fn from_modes<I: IntoIterator<Item = Mode>>(modes: I) -> Result<Self> {
        let mut factors: SmallVec<[Mode; 4]> = modes.into_iter().collect();
        if let Some(m) = factors.iter().find(|m| !m.is_creation()) {
            return Err(Error::Parse(format!("{m} is not a creation mode")));
        }
        factors.sort();
        let weight = factors.iter().fold(HalfInt::ZERO, |w, m| w - m.depth());
        Ok(Self { weight, factors })
    }

    pub fn factors(&self) -> &[Mode] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_vacuum(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn weight(&self) -> HalfInt {
        self.weight
    }

    /// `#(+) - #(-)`.
    pub fn charge(&self) -> i32 {
        self.factors.iter().map(|m| m.charge().sign()).sum()
    }

    pub fn max_species(&self) -> u16 {
        self.factors.iter().map(|m| m.species()).max().unwrap_or(0)
    }

    /// Number of factors equal to `mode`.
    pub fn multiplicity(&self, mode: Mode) -> usize {
        self.factors.iter().filter(|&&m| m == mode).count()
    }

    pub fn count_where(&self, pred: impl Fn(&Mode) -> bool) -> usize {
        self.factors.iter().filter(|m| pred(m)).count()
    }

    /// Product with one more creation mode.
    pub fn times(&self, mode: Mode) -> Self {
        debug_assert!(mode.is_creation());
        let pos = self.factors.partition_point(|m| *m <= mode);
        let mut factors = self.factors.clone();
        factors.insert(pos, mode);
        Self { weight: self.weight - mode.depth(), factors }
    }

    /// Removes one copy of `mode`, if present.
    pub fn without(&self, mode: Mode) -> Option<Self> {
        let pos = self.factors.iter().position(|&m| m == mode)?;
        let mut factors = self.factors.clone();
        factors.remove(pos);
        Some(Self { weight: self.weight + mode.depth(), factors })
    }

    /// Distinct factors with their multiplicities.
    pub fn distinct_factors(&self) -> impl Iterator<Item = (Mode, usize)> + '_ {
        let mut i = 0;
        std::iter::from_fn(move || {
            let m = *self.factors.get(i)?;
            let mut k = 0;
            while self.factors.get(i + k) == Some(&m) {
                k += 1;
            }
            i += k;
            Some((m, k))
        })
    }

    pub fn count_charge(&self, c: Charge) -> usize {
        self.count_where(|m| m.charge() == c)
    }
}

impl fmt::Display for FockMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.factors {
            write!(f, "{m} ")?;
        }
        write!(f, "|0>")
    }
}

impl FromStr for FockMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let body = s
            .strip_suffix("|0>")
            .ok_or_else(|| Error::Parse(format!("monomial must end with |0>: {s:?}")))?;
        let modes = body.split_whitespace().map(str::parse).collect::<Result<Vec<Mode>>>()?;
        Self::from_modes(modes)
    }
}
