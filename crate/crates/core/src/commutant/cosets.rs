use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{commutant_dims, compare_series, subalgebra_span, verify_commutant, AmbientSpec, SeriesComparison};
use crate::error::{Error, Result};
use crate::exact::{heisenberg_plus_series, heisenberg_series, HalfInt, QSeries};
use crate::opcalc::{mode, QuadraticElement};
use crate::realization::{cartan_elements, GeneratorTable, TableKind};
use crate::weylfock::FockVector;

/// The coset problems with a known Heisenberg answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Coset {
    /// `A_1^l` table in `M_{2l}`: rank-`l` Heisenberg algebra of the `H^(i)`.
    A1InFock,
    /// `A_1^l` table in the even-even part: its `theta`-fixed points.
    A1InEvenEven,
    /// `C_l` table in `M_{2l}`: rank-one Heisenberg algebra of `H`.
    CInFock,
    /// `C_l` table in the even-even part.
    CInEvenEven,
    /// `A_1^l` table inside the span of the `C_l` table: fixed points of the
    /// rank `l-1` Heisenberg algebra of the `Hbar^(i)`.
    A1InC,
}

impl Coset {
    pub const ALL: [Coset; 5] = [Coset::A1InFock, Coset::A1InEvenEven, Coset::CInFock, Coset::CInEvenEven, Coset::A1InC];

    pub fn name(self) -> &'static str {
        match self {
            Coset::A1InFock => "a1-fock",
            Coset::A1InEvenEven => "a1-even",
            Coset::CInFock => "c-fock",
            Coset::CInEvenEven => "c-even",
            Coset::A1InC => "a1-in-c",
        }
    }

    /// Short alias accepted on the command line.
    pub fn alias(self) -> &'static str {
        match self {
            Coset::A1InFock => "sec5",
            Coset::A1InEvenEven => "sec5-even",
            Coset::CInFock => "sec6",
            Coset::CInEvenEven => "sec6-even",
            Coset::A1InC => "sec9",
        }
    }

    fn min_ell(self) -> usize {
        if self == Coset::A1InC {
            2
        } else {
            1
        }
    }

    pub fn table_kind(self) -> TableKind {
        match self {
            Coset::CInFock | Coset::CInEvenEven => TableKind::CLevelMinusOne,
            _ => TableKind::A1Power,
        }
    }

    /// Expected graded dimension.
    pub fn expected_series(self, ell: usize, n: HalfInt) -> QSeries {
        match self {
            Coset::A1InFock => heisenberg_series(ell, n),
            Coset::A1InEvenEven => heisenberg_plus_series(ell, n),
            Coset::CInFock => heisenberg_series(1, n),
            Coset::CInEvenEven => heisenberg_plus_series(1, n),
            Coset::A1InC => heisenberg_plus_series(ell - 1, n),
        }
    }

    /// Generators of the expected answer that must lie in the commutant:
    /// the Heisenberg fields themselves, or their quadratic products for the
    /// `theta`-fixed cases.
    fn witnesses(self, ell: usize, n: HalfInt) -> Vec<FockVector> {
        let ce = cartan_elements(ell);
        let fields: Vec<QuadraticElement> = match self {
            Coset::A1InFock | Coset::A1InEvenEven => ce.h,
            Coset::CInFock | Coset::CInEvenEven => vec![ce.total],
            Coset::A1InC => ce.bar,
        };
        let linear = matches!(self, Coset::A1InFock | Coset::CInFock);
        if linear {
            if n < HalfInt::from_int(1) {
                return Vec::new();
            }
            return fields.into_iter().map(QuadraticElement::into_vector).collect();
        }
        if n < HalfInt::from_int(2) {
            return Vec::new();
        }
        let mut out = Vec::new();
        for (i, x) in fields.iter().enumerate() {
            for y in &fields[i..] {
                out.push(mode(x.vector(), -1, y.vector()));
            }
        }
        out
    }

    /// Computes the commutant up to weight `n` and compares it with the expected series.
    pub fn run(self, ell: usize, n: HalfInt) -> Result<CosetReport> {
        if ell < self.min_ell() {
            return Err(Error::UnsupportedRank { what: self.name(), rank: ell });
        }
        let table = GeneratorTable::build(self.table_kind(), ell)?;
        let ambient = match self {
            Coset::A1InFock | Coset::CInFock => AmbientSpec::full(2 * ell),
            Coset::A1InEvenEven | Coset::CInEvenEven => AmbientSpec::even_even(ell),
            Coset::A1InC => {
                let c = GeneratorTable::build(TableKind::CLevelMinusOne, ell)?;
                AmbientSpec::within(subalgebra_span(&c, &[FockVector::vacuum()], n))
            }
        };
        let space = commutant_dims(&table, &ambient, n)?;
        let expected = self.expected_series(ell, n);
        let dims = space.dims();
        let comparison = compare_series(&dims, &expected);
        let gens: Vec<QuadraticElement> = table.elements().cloned().collect();
        let recheck_failures = verify_commutant(&gens, &space).len();
        let witnesses_contained = self.witnesses(ell, n).iter().all(|w| space.contains(w));
        Ok(CosetReport {
            coset: self,
            ell,
            max_weight: n,
            ambient: ambient.to_string(),
            dims,
            expected: expected.to_string(),
            comparison,
            recheck_failures,
            witnesses_contained,
        })
    }
}

impl fmt::Display for Coset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Coset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s || c.alias() == s).ok_or_else(|| {
            let names: Vec<&str> = Self::ALL.iter().map(|c| c.name()).collect();
            Error::Parse(format!("unknown coset {s:?} (expected one of {})", names.join(", ")))
        })
    }
}

/// Result of [`Coset::run`].
#[derive(Clone, Debug, Serialize)]
pub struct CosetReport {
    pub coset: Coset,
    pub ell: usize,
    pub max_weight: HalfInt,
    pub ambient: String,
    pub dims: Vec<(HalfInt, usize)>,
    pub expected: String,
    pub comparison: SeriesComparison,
    /// Basis vectors failing the independent re-check.
    pub recheck_failures: usize,
    /// Whether the Heisenberg generators (or their squares) lie in the commutant.
    pub witnesses_contained: bool,
}

impl CosetReport {
    pub fn passed(&self) -> bool {
        self.comparison.agrees && self.recheck_failures == 0 && self.witnesses_contained
    }

    pub fn integer_dims(&self) -> Vec<usize> {
        self.dims.iter().filter(|(w, _)| w.is_integer()).map(|(_, d)| *d).collect()
    }
}
