//! Graded linear algebra inside the Fock space: commutants of generator
//! tables, subalgebras generated from seed vectors, `theta`-parity splits and
//! comparison of graded dimensions with q-series.

mod ambient;
mod cosets;
mod solve;
mod space;
mod span;

pub use ambient::{AmbientSpec, Parity};
pub use cosets::{Coset, CosetReport};
pub use solve::{commutant, commutant_dims, verify_commutant};
pub use space::{compare_series, theta_split, GradedSubspace, SeriesComparison, ThetaSplit};
pub use span::{span_of, subalgebra_span};

use std::collections::BTreeMap;

use crate::exact::{Scalar, SparseMatrix};
use crate::weylfock::FockVector;

/// Basis of `{ c : sum_j c_j images[j] = 0 }`, returned as combinations of `cands`.
///
/// `images[j]` is the image of `cands[j]` under some linear map, written as a
/// sparse row over an arbitrary ordered key type.
pub(crate) fn kernel_combinations<K: Ord>(cands: &[FockVector], images: Vec<Vec<(K, Scalar)>>) -> Vec<FockVector> {
    let mut rows: BTreeMap<K, Vec<(usize, Scalar)>> = BTreeMap::new();
    for (j, img) in images.into_iter().enumerate() {
        for (k, x) in img {
            rows.entry(k).or_default().push((j, x));
        }
    }
    let m = SparseMatrix::from_rows(cands.len(), rows.into_values().collect());
    let (_, kernel) = m.kernel_sparse();
    kernel
        .into_iter()
        .map(|combo| {
            let mut v = FockVector::zero();
            for (j, c) in combo {
                v.add_scaled(&c, &cands[j]);
            }
            v
        })
        .collect()
}
