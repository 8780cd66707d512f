use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;

use super::GradedSubspace;
use crate::exact::{Echelon, HalfInt};
use crate::opcalc::{mode_action, QuadraticElement};
use crate::realization::GeneratorTable;
use crate::weylfock::{FockMonomial, FockVector};

/// Smallest graded subspace up to weight `n` that contains `seeds` and is
/// closed under every mode of every table entry.
pub fn subalgebra_span(table: &GeneratorTable, seeds: &[FockVector], n: HalfInt) -> GradedSubspace {
    let gens: Vec<QuadraticElement> = table.elements().cloned().collect();
    span_of(&gens, seeds, table.pairs(), n)
}

/// As [`subalgebra_span`] for an arbitrary list of weight-one generators.
///
/// Works through a queue of newly found basis vectors; each is hit with all
/// `u_m` whose target weight lies in `0..=n`, and whatever is new is queued in
/// turn. Finite graded dimensions make this terminate.
pub fn span_of(gens: &[QuadraticElement], seeds: &[FockVector], pairs: usize, n: HalfInt) -> GradedSubspace {
    let mut pieces: BTreeMap<HalfInt, Echelon<FockMonomial>> = BTreeMap::new();
    let mut queue: VecDeque<(HalfInt, FockVector)> = VecDeque::new();
    let offer = |v: FockVector, pieces: &mut BTreeMap<HalfInt, Echelon<FockMonomial>>, queue: &mut VecDeque<_>| {
        for w in v.weights() {
            if w <= n {
                if let Some(row) = pieces.entry(w).or_default().insert(v.component_of_weight(w).to_row()) {
                    queue.push_back((w, FockVector::from_row(row.clone())));
                }
            }
        }
    };
    for s in seeds {
        offer(s.clone(), &mut pieces, &mut queue);
    }
    while !queue.is_empty() {
        let batch: Vec<(HalfInt, FockVector)> = queue.drain(..).collect();
        let products: Vec<FockVector> = batch
            .par_iter()
            .flat_map_iter(|(w, v)| {
                // u_m takes weight w to w - m
                let lo = -(n - *w).floor() as i64;
                let hi = w.floor() as i64;
                gens.iter().flat_map(move |u| (lo..=hi).map(move |m| mode_action(u, m, v)))
            })
            .filter(|p| !p.is_zero())
            .collect();
        for p in products {
            offer(p, &mut pieces, &mut queue);
        }
    }
    GradedSubspace::from_echelons(pairs, n, pieces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commutant::theta_split;
    use crate::realization::{estar, TableKind};

    fn hw(n: i32) -> HalfInt {
        HalfInt::from_int(n)
    }

    #[test]
    fn vacuum_only() {
        let s = span_of(&[], &[FockVector::vacuum()], 2, hw(1));
        assert_eq!(s, GradedSubspace::vacuum_line(2, hw(1)));
        assert_eq!(span_of(&[], &[], 2, hw(1)).total_dim(), 0);
    }

    #[test]
    fn weight_one_piece_is_the_lie_algebra() {
        for (kind, dim) in [(TableKind::CLevelMinusOne, 10), (TableKind::ALevelMinusOne, 15), (TableKind::A1Power, 6)] {
            let t = GeneratorTable::build(kind, 2).unwrap();
            let s = subalgebra_span(&t, &[FockVector::vacuum()], hw(1));
            assert_eq!(s.integer_dims(), vec![1, dim], "{kind}");
        }
    }

    #[test]
    fn theta_splits_the_a_span() {
        let n = hw(2);
        let a = GeneratorTable::build(TableKind::ALevelMinusOne, 2).unwrap();
        let c = GeneratorTable::build(TableKind::CLevelMinusOne, 2).unwrap();
        let big = subalgebra_span(&a, &[FockVector::vacuum()], n);
        let even = subalgebra_span(&c, &[FockVector::vacuum()], n);
        let odd = subalgebra_span(&c, &[estar(2).unwrap().into_vector()], n);
        let split = theta_split(&big, 2).unwrap();
        assert_eq!(split.even, even);
        assert_eq!(split.odd, odd);
        assert!(even.is_subspace_of(&big));
        assert_eq!(even.sum(&odd), big);
    }

    /// Products of two `theta`-odd vectors land in the `theta`-even part.
    #[test]
    fn odd_times_odd_is_even() {
        let n = hw(2);
        let a = GeneratorTable::build(TableKind::ALevelMinusOne, 2).unwrap();
        let split = theta_split(&subalgebra_span(&a, &[FockVector::vacuum()], n), 2).unwrap();
        let odd1 = split.odd.basis(hw(1));
        let odd2 = split.odd.basis(hw(2));
        assert_eq!(odd1.len(), 5);
        let mut checked = 0;
        for u in odd1.iter().chain(odd2.iter().take(6)) {
            for v in odd1.iter().chain(odd2.iter().take(6)) {
                let (wu, wv) = (u.homogeneous_weight().unwrap(), v.homogeneous_weight().unwrap());
                // result weight wu + wv - m - 1 must lie in 0..=n
                let lo = (wu + wv - n).floor() as i64 - 1;
                let hi = (wu + wv).floor() as i64 - 1;
                for m in lo..=hi {
                    let p = crate::opcalc::mode(u, m, v);
                    assert!(split.even.contains(&p), "m = {m}");
                    checked += 1;
                }
            }
        }
        assert!(checked > 100);
    }
}
