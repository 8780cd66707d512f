use std::collections::BTreeSet;
use std::fmt;

use super::{kernel_combinations, GradedSubspace};
use crate::error::{Error, Result};
use crate::exact::HalfInt;
use crate::weylfock::{graded_basis, theta, FockMonomial, FockVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    fn plus(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Clone, Debug)]
enum Base {
    Fock(usize),
    Span(GradedSubspace),
}

/// The space a commutant is computed in.
///
/// Either the whole Fock space `M_pairs` or a previously computed graded
/// subspace, cut down by any number of constraints: the parity of the number
/// of factors with species in a group, a fixed charge, and the parities of the
/// two halves of the `b`-basis.
#[derive(Clone, Debug)]
pub struct AmbientSpec {
    base: Base,
    groups: Vec<(BTreeSet<u16>, Parity)>,
    charge: Option<i32>,
    b_parity: Option<(Parity, Parity)>,
}

impl AmbientSpec {
    /// The whole of `M_pairs`.
    pub fn full(pairs: usize) -> Self {
        AmbientSpec { base: Base::Fock(pairs), groups: Vec::new(), charge: None, b_parity: None }
    }

    /// Restriction to a computed graded subspace.
    pub fn within(space: GradedSubspace) -> Self {
        AmbientSpec { base: Base::Span(space), groups: Vec::new(), charge: None, b_parity: None }
    }

    /// `M_l^0 (x) M_l^0` inside `M_{2l}`: even in both halves of the `b`-basis.
    pub fn even_even(ell: usize) -> Self {
        Self::full(2 * ell).with_b_parity(Parity::Even, Parity::Even)
    }

    pub fn with_group_parity(mut self, group: impl IntoIterator<Item = u16>, parity: Parity) -> Self {
        self.groups.push((group.into_iter().collect(), parity));
        self
    }

    pub fn with_charge(mut self, charge: i32) -> Self {
        self.charge = Some(charge);
        self
    }

    /// Parity of the number of `b`-factors with index `<= l` and `> l`.
    ///
    /// The low half is `theta`-invariant and the high half `theta`-odd, so this
    /// is the `theta`-eigenspace `(-1)^high` intersected with total degree
    /// parity `low + high`.
    pub fn with_b_parity(mut self, low: Parity, high: Parity) -> Self {
        self.b_parity = Some((low, high));
        self
    }

    pub fn pairs(&self) -> usize {
        match &self.base {
            Base::Fock(p) => *p,
            Base::Span(s) => s.pairs(),
        }
    }

    /// Highest weight the ambient is defined at, if bounded.
    pub fn max_weight(&self) -> Option<HalfInt> {
        match &self.base {
            Base::Fock(_) => None,
            Base::Span(s) => Some(s.max_weight()),
        }
    }

    fn monomial_ok(&self, m: &FockMonomial) -> bool {
        self.groups.iter().all(|(g, p)| Parity::of(m.count_where(|f| g.contains(&f.species()))) == *p)
            && self.charge.is_none_or(|c| m.charge() == c)
            && self.b_parity.is_none_or(|(lo, hi)| Parity::of(m.len()) == lo.plus(hi))
    }

    /// A basis of the weight-`w` piece of the ambient.
    pub fn basis(&self, w: HalfInt) -> Result<Vec<FockVector>> {
        let cands: Vec<FockVector> = match &self.base {
            Base::Fock(p) => graded_basis(*p, w, self.charge)
                .into_iter()
                .filter(|m| self.monomial_ok(m))
                .map(FockVector::from)
                .collect(),
            Base::Span(s) => {
                if w > s.max_weight() {
                    return Err(Error::AmbientTooNarrow { requested: w, available: s.max_weight() });
                }
                let basis = s.basis(w);
                if self.groups.is_empty() && self.charge.is_none() && self.b_parity.is_none() {
                    return Ok(basis);
                }
                let images = basis.iter().map(|b| b.filter(|m| !self.monomial_ok(m)).to_row()).collect();
                kernel_combinations(&basis, images)
            }
        };
        let Some((_, hi)) = self.b_parity else { return Ok(cands) };
        let pairs = self.pairs();
        if !pairs.is_multiple_of(2) {
            return Err(Error::UnsupportedRank { what: "b-basis parity (needs an even number of pairs)", rank: pairs });
        }
        let sign = if hi == Parity::Even { 1 } else { -1 };
        let images = cands
            .iter()
            .map(|v| {
                let mut d = theta(v, pairs / 2)?;
                d.add_scaled(&crate::exact::int(-sign), v);
                Ok(d.to_row())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(kernel_combinations(&cands, images))
    }
}

impl fmt::Display for AmbientSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.base {
            Base::Fock(p) => write!(f, "M_{p}")?,
            Base::Span(s) => write!(f, "span in M_{} up to weight {}", s.pairs(), s.max_weight())?,
        }
        for (g, p) in &self.groups {
            write!(f, ", {p} in species {g:?}")?;
        }
        if let Some(c) = self.charge {
            write!(f, ", charge {c}")?;
        }
        if let Some((lo, hi)) = self.b_parity {
            write!(f, ", b-parity {lo}-{hi}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::fock_series;
    use crate::weylfock::{b_to_a, FockMonomial, Mode};
    use crate::exact::Echelon;

    #[test]
    fn full_ambient_matches_character() {
        let s = fock_series(2, HalfInt::from_int(3));
        for w in HalfInt::from_int(3).steps_up_to() {
            assert_eq!(s.coeff(w), (AmbientSpec::full(2).basis(w).unwrap().len() as i64).into());
        }
    }

    #[test]
    fn group_parity_and_charge() {
        let w = HalfInt::from_int(1);
        let even = AmbientSpec::full(2).with_group_parity([1], Parity::Even).basis(w).unwrap();
        let odd = AmbientSpec::full(2).with_group_parity([1], Parity::Odd).basis(w).unwrap();
        assert_eq!(even.len() + odd.len(), 10);
        assert_eq!(odd.len(), 4);
        assert_eq!(AmbientSpec::full(2).with_charge(0).basis(w).unwrap().len(), 4);
    }

    /// The `b`-parity ambient equals the span of `b`-monomials of that parity.
    #[test]
    fn b_parity_matches_b_monomials() {
        let ell = 1;
        for w in HalfInt::from_int(2).steps_up_to() {
            for (lo, hi) in [(Parity::Even, Parity::Even), (Parity::Odd, Parity::Even), (Parity::Even, Parity::Odd)] {
                let got = AmbientSpec::full(2).with_b_parity(lo, hi).basis(w).unwrap();
                let mut span = Echelon::new();
                for b in graded_basis(2, w, None) {
                    let low = b.count_where(|f| f.species() as usize <= ell);
                    if Parity::of(low) == lo && Parity::of(b.len() - low) == hi {
                        span.insert(b_to_a(&b, ell).unwrap().0.to_row());
                    }
                }
                assert_eq!(got.len(), span.dim(), "{w} {lo} {hi}");
                for v in &got {
                    assert!(span.contains(v.to_row()));
                }
            }
        }
    }

    #[test]
    fn restriction_to_span() {
        let v = FockVector::from(FockMonomial::from_modes([Mode::plus(1, -1), Mode::minus(1, -1)]).unwrap());
        let u = FockVector::from(FockMonomial::from_modes([Mode::plus(1, -1), Mode::plus(2, -1)]).unwrap());
        let s = GradedSubspace::spanned_by(2, HalfInt::from_int(1), [&v, &u, &(&u + &v)]);
        let a = AmbientSpec::within(s.clone());
        assert_eq!(a.basis(HalfInt::from_int(1)).unwrap().len(), 2);
        assert_eq!(AmbientSpec::within(s.clone()).with_charge(0).basis(HalfInt::from_int(1)).unwrap(), vec![v]);
        assert!(matches!(a.basis(HalfInt::from_int(2)), Err(Error::AmbientTooNarrow { .. })));
    }
}
