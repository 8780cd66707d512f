use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{frac, Echelon, HalfInt, QSeries};
use crate::weylfock::{theta, FockMonomial, FockVector};

/// A subspace of `M_pairs` truncated at a maximal weight, stored weight by
/// weight as a reduced row-echelon basis over the monomials.
///
/// The reduced form is canonical, so two subspaces are equal exactly when
/// their stored bases are.
#[derive(Clone, Debug)]
pub struct GradedSubspace {
    pairs: usize,
    max_weight: HalfInt,
    pieces: BTreeMap<HalfInt, Echelon<FockMonomial>>,
}

impl GradedSubspace {
    pub fn empty(pairs: usize, max_weight: HalfInt) -> Self {
        GradedSubspace { pairs, max_weight, pieces: BTreeMap::new() }
    }

    /// The line through the vacuum.
    pub fn vacuum_line(pairs: usize, max_weight: HalfInt) -> Self {
        Self::spanned_by(pairs, max_weight, [&FockVector::vacuum()])
    }

    /// Span of the homogeneous components (of weight `<= max_weight`) of `vectors`.
    pub fn spanned_by<'a>(pairs: usize, max_weight: HalfInt, vectors: impl IntoIterator<Item = &'a FockVector>) -> Self {
        let mut s = Self::empty(pairs, max_weight);
        for v in vectors {
            s.insert(v);
        }
        s.reduce();
        s
    }

    pub(crate) fn from_echelons(pairs: usize, max_weight: HalfInt, pieces: BTreeMap<HalfInt, Echelon<FockMonomial>>) -> Self {
        let mut s = GradedSubspace { pairs, max_weight, pieces };
        s.reduce();
        s
    }

    /// Adds the homogeneous components of `v`; true if the space grew.
    pub(crate) fn insert(&mut self, v: &FockVector) -> bool {
        let mut grew = false;
        for w in v.weights() {
            if w <= self.max_weight {
                grew |= self.pieces.entry(w).or_default().insert(v.component_of_weight(w).to_row()).is_some();
            }
        }
        grew
    }

    fn reduce(&mut self) {
        let pieces = std::mem::take(&mut self.pieces);
        self.pieces =
            pieces.into_iter().filter(|(_, e)| !e.is_empty()).map(|(w, e)| (w, e.into_reduced())).collect();
    }

    pub fn pairs(&self) -> usize {
        self.pairs
    }

    pub fn max_weight(&self) -> HalfInt {
        self.max_weight
    }

    pub fn dim(&self, w: HalfInt) -> usize {
        self.pieces.get(&w).map_or(0, Echelon::dim)
    }

    /// `(weight, dimension)` for every half-integer weight `0..=max_weight`.
    pub fn dims(&self) -> Vec<(HalfInt, usize)> {
        self.max_weight.steps_up_to().map(|w| (w, self.dim(w))).collect()
    }

    /// Dimensions at integer weights only.
    pub fn integer_dims(&self) -> Vec<usize> {
        self.dims().into_iter().filter(|(w, _)| w.is_integer()).map(|(_, d)| d).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.pieces.values().map(Echelon::dim).sum()
    }

    pub fn basis(&self, w: HalfInt) -> Vec<FockVector> {
        self.pieces.get(&w).map_or_else(Vec::new, |e| e.rows().map(|r| FockVector::from_row(r.clone())).collect())
    }

    /// Graded dimension as a q-series truncated at `max_weight`.
    pub fn series(&self) -> QSeries {
        let mut s = QSeries::zero(self.max_weight);
        for (w, d) in self.dims() {
            s.set(w, BigInt::from(d));
        }
        s
    }

    /// True if every homogeneous component of `v` of weight `<= max_weight` lies in the space.
    pub fn contains(&self, v: &FockVector) -> bool {
        v.weights().into_iter().filter(|&w| w <= self.max_weight).all(|w| match self.pieces.get(&w) {
            Some(e) => e.contains(v.component_of_weight(w).to_row()),
            None => v.component_of_weight(w).is_zero(),
        })
    }

    /// True if `self` is contained in `other` up to the smaller truncation.
    pub fn is_subspace_of(&self, other: &GradedSubspace) -> bool {
        let top = self.max_weight.min(other.max_weight);
        self.pieces.iter().filter(|(w, _)| **w <= top).all(|(w, e)| {
            e.rows().all(|r| other.pieces.get(w).is_some_and(|o| o.contains(r.clone())))
        })
    }

    /// Sum of two subspaces, truncated at the smaller weight bound.
    pub fn sum(&self, other: &GradedSubspace) -> GradedSubspace {
        let top = self.max_weight.min(other.max_weight);
        let mut s = GradedSubspace::empty(self.pairs.max(other.pairs), top);
        for space in [self, other] {
            for (w, e) in space.pieces.iter().filter(|(w, _)| **w <= top) {
                for r in e.rows() {
                    s.pieces.entry(*w).or_default().insert(r.clone());
                }
            }
        }
        s.reduce();
        s
    }

    pub fn truncated(&self, max_weight: HalfInt) -> GradedSubspace {
        let pieces = self.pieces.iter().filter(|(w, _)| **w <= max_weight).map(|(w, e)| (*w, e.clone())).collect();
        GradedSubspace { pairs: self.pairs, max_weight: max_weight.min(self.max_weight), pieces }
    }
}

impl PartialEq for GradedSubspace {
    fn eq(&self, other: &Self) -> bool {
        self.max_weight == other.max_weight
            && self.pieces.len() == other.pieces.len()
            && self.pieces.iter().zip(&other.pieces).all(|((w, a), (v, b))| w == v && a.rows().eq(b.rows()))
    }
}

impl Eq for GradedSubspace {}

impl fmt::Display for GradedSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.dims().iter().map(|(w, d)| format!("{w}:{d}")).collect();
        write!(f, "[{}]", dims.join(" "))
    }
}

/// The two `theta`-eigenspaces of a `theta`-stable subspace.
#[derive(Clone, Debug)]
pub struct ThetaSplit {
    pub even: GradedSubspace,
    pub odd: GradedSubspace,
}

impl ThetaSplit {
    pub fn even_dims(&self) -> Vec<(HalfInt, usize)> {
        self.even.dims()
    }

    pub fn odd_dims(&self) -> Vec<(HalfInt, usize)> {
        self.odd.dims()
    }
}

/// Splits a `theta`-stable subspace of `M_{2l}` into its `+1` and `-1` eigenspaces.
pub fn theta_split(space: &GradedSubspace, ell: usize) -> Result<ThetaSplit> {
    let mut even = GradedSubspace::empty(space.pairs, space.max_weight);
    let mut odd = GradedSubspace::empty(space.pairs, space.max_weight);
    for (&w, e) in &space.pieces {
        for r in e.rows() {
            let v = FockVector::from_row(r.clone());
            let t = theta(&v, ell)?;
            if !e.contains(t.to_row()) {
                return Err(Error::NotThetaStable(w));
            }
            even.insert(&(&v + &t).scaled(&frac(1, 2)));
            odd.insert(&(&v - &t).scaled(&frac(1, 2)));
        }
    }
    even.reduce();
    odd.reduce();
    Ok(ThetaSplit { even, odd })
}

/// Outcome of comparing graded dimensions with a q-series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesComparison {
    pub agrees: bool,
    /// Highest weight compared.
    pub up_to: HalfInt,
    /// `(weight, expected, found)` at the first disagreement.
    pub first_mismatch: Option<(HalfInt, String, usize)>,
}

impl fmt::Display for SeriesComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_mismatch {
            None => write!(f, "agrees up to weight {}", self.up_to),
            Some((w, e, d)) => write!(f, "differs at weight {w}: expected {e}, found {d}"),
        }
    }
}

/// Coefficientwise comparison of `dims` with `series` on their common range.
pub fn compare_series(dims: &[(HalfInt, usize)], series: &QSeries) -> SeriesComparison {
    let top = dims.iter().map(|(w, _)| *w).max().unwrap_or(HalfInt::ZERO).min(series.order());
    let found: BTreeMap<HalfInt, usize> = dims.iter().copied().collect();
    let first_mismatch = top.steps_up_to().find_map(|w| {
        let d = found.get(&w).copied().unwrap_or(0);
        let e = series.coeff(w);
        (e != BigInt::from(d)).then(|| (w, e.to_string(), d))
    });
    SeriesComparison { agrees: first_mismatch.is_none(), up_to: top, first_mismatch }
}
