use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::{kernel_combinations, AmbientSpec, GradedSubspace};
use crate::error::{Error, Result};
use crate::exact::HalfInt;
use crate::opcalc::{mode_action, physics_mode, QuadraticElement};
use crate::realization::GeneratorTable;
use crate::weylfock::{FockMonomial, FockVector};

/// Commutant of a generator table in an ambient, up to weight `n`.
pub fn commutant_dims(table: &GeneratorTable, ambient: &AmbientSpec, n: HalfInt) -> Result<GradedSubspace> {
    let gens: Vec<QuadraticElement> = table.elements().cloned().collect();
    commutant(&gens, ambient, n)
}

/// `{ w in ambient : u_m w = 0 for every generator u and every m >= wt(u) - 1 }`
/// weight by weight up to `n`.
///
/// For a weight-one `u`, `u_m` lowers the weight by `m`, so at weight `w` only
/// `0 <= m <= w` can act nontrivially. When every generator preserves the
/// charge, the problem splits into independent charge sectors.
pub fn commutant(gens: &[QuadraticElement], ambient: &AmbientSpec, n: HalfInt) -> Result<GradedSubspace> {
    let pairs = ambient.pairs();
    for u in gens {
        let s = u.vector().max_species();
        if s as usize > pairs {
            return Err(Error::SpeciesOutOfRange { species: s, max: pairs as u16 });
        }
    }
    if let Some(top) = ambient.max_weight() {
        if n > top {
            return Err(Error::AmbientTooNarrow { requested: n, available: top });
        }
    }
    let neutral = gens.iter().all(|u| u.vector().terms().all(|(m, _)| m.charge() == 0));
    let pieces = n
        .steps_up_to()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|w| {
            let basis = ambient.basis(w)?;
            let blocks = if neutral { charge_blocks(&basis) } else { vec![(0..basis.len()).collect()] };
            let mut ech = crate::exact::Echelon::<FockMonomial>::new();
            for block in blocks {
                let cands: Vec<FockVector> = block.iter().map(|&j| basis[j].clone()).collect();
                for v in solve_block(gens, w, &cands) {
                    ech.insert(v.to_row());
                }
            }
            Ok((w, ech))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedSubspace::from_echelons(pairs, n, pieces.into_iter().collect()))
}

/// Row key: generator index, mode and output monomial.
type ImageKey = (usize, i64, FockMonomial);

fn solve_block(gens: &[QuadraticElement], w: HalfInt, cands: &[FockVector]) -> Vec<FockVector> {
    let top = w.floor() as i64;
    let images: Vec<Vec<(ImageKey, _)>> = cands
        .par_iter()
        .map(|v| {
            let mut row = Vec::new();
            for (g, u) in gens.iter().enumerate() {
                for m in 0..=top {
                    row.extend(mode_action(u, m, v).into_terms().map(|(mono, c)| ((g, m, mono), c)));
                }
            }
            row
        })
        .collect();
    kernel_combinations(cands, images)
}

/// Groups basis vectors whose charges can mix under charge-preserving maps.
fn charge_blocks(basis: &[FockVector]) -> Vec<Vec<usize>> {
    let mut groups: Vec<(BTreeSet<i32>, Vec<usize>)> = Vec::new();
    for (j, v) in basis.iter().enumerate() {
        let charges: BTreeSet<i32> = v.terms().map(|(m, _)| m.charge()).collect();
        let mut merged = (charges, vec![j]);
        let mut rest = Vec::new();
        for g in groups.drain(..) {
            if g.0.is_disjoint(&merged.0) {
                rest.push(g);
            } else {
                merged.0.extend(g.0);
                merged.1.extend(g.1);
            }
        }
        rest.push(merged);
        groups = rest;
    }
    let mut out: Vec<Vec<usize>> = groups
        .into_iter()
        .map(|(_, mut idx)| {
            idx.sort_unstable();
            idx
        })
        .collect();
    out.sort();
    out
}

/// Independent check that every basis vector of `space` is killed by the
/// non-negative physics modes of every generator. Returns the offending
/// `(weight, generator index, mode)` triples.
pub fn verify_commutant(gens: &[QuadraticElement], space: &GradedSubspace) -> Vec<(HalfInt, usize, i64)> {
    let mut bad = BTreeMap::new();
    for (w, _) in space.dims() {
        for v in space.basis(w) {
            for (g, u) in gens.iter().enumerate() {
                for n in 0..=w.floor() as i64 {
                    if !physics_mode(u.vector(), n, &v).is_zero() {
                        bad.insert((w, g, n), ());
                    }
                }
            }
        }
    }
    bad.into_keys().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commutant::{compare_series, span_of, subalgebra_span};
    use crate::exact::{heisenberg_plus_series, heisenberg_series};
    use crate::opcalc::mode;
    use crate::realization::{cartan_elements, TableKind};

    fn hw(n: i32) -> HalfInt {
        HalfInt::from_int(n)
    }

    #[test]
    fn a1_commutant_is_a_free_boson() {
        let t = GeneratorTable::build(TableKind::A1Power, 1).unwrap();
        let c = commutant_dims(&t, &AmbientSpec::full(2), hw(4)).unwrap();
        assert_eq!(c.integer_dims(), vec![1, 1, 2, 3, 5]);
        assert!(compare_series(&c.dims(), &heisenberg_series(1, hw(4))).agrees);
        let h = cartan_elements(1).h[0].vector().clone();
        assert!(c.contains(&h));
        assert!(c.contains(&mode(&h, -1, &h)));
        assert!(verify_commutant(&t.elements().cloned().collect::<Vec<_>>(), &c).is_empty());
    }

    #[test]
    fn a1_commutant_even_even() {
        let t = GeneratorTable::build(TableKind::A1Power, 1).unwrap();
        let c = commutant_dims(&t, &AmbientSpec::even_even(1), hw(5)).unwrap();
        assert_eq!(c.integer_dims(), vec![1, 0, 1, 1, 3, 3]);
        assert!(compare_series(&c.dims(), &heisenberg_plus_series(1, hw(5))).agrees);
    }

    #[test]
    fn c_commutant_is_generated_by_h() {
        let t = GeneratorTable::build(TableKind::CLevelMinusOne, 2).unwrap();
        let c = commutant_dims(&t, &AmbientSpec::full(4), hw(3)).unwrap();
        assert_eq!(c.integer_dims(), vec![1, 1, 2, 3]);
        assert!(compare_series(&c.dims(), &heisenberg_series(1, hw(3))).agrees);
        let big_h = cartan_elements(2).total;
        assert_eq!(c.basis(hw(1)).len(), 1);
        assert!(c.contains(big_h.vector()));
        // the commutant is exactly the Heisenberg algebra generated by H
        let heis = span_of(&[big_h], &[FockVector::vacuum()], 4, hw(3));
        assert_eq!(heis, c);
    }

    #[test]
    fn adding_generators_shrinks_the_commutant() {
        let t = GeneratorTable::build(TableKind::CLevelMinusOne, 2).unwrap();
        let mut gens: Vec<QuadraticElement> = t.elements().cloned().collect();
        let amb = AmbientSpec::full(4).with_charge(0);
        let base = commutant(&gens, &amb, hw(2)).unwrap();
        for h in cartan_elements(2).h {
            gens.push(h);
            let smaller = commutant(&gens, &amb, hw(2)).unwrap();
            assert!(smaller.is_subspace_of(&base));
            for ((_, a), (_, b)) in smaller.dims().iter().zip(base.dims()) {
                assert!(*a <= b);
            }
        }
        let last = commutant(&gens, &amb, hw(2)).unwrap();
        assert_eq!(last.integer_dims(), vec![1, 0, 0]);
    }

    #[test]
    fn commutant_inside_a_span() {
        let c = GeneratorTable::build(TableKind::CLevelMinusOne, 2).unwrap();
        let a1 = GeneratorTable::build(TableKind::A1Power, 2).unwrap();
        let span = subalgebra_span(&c, &[FockVector::vacuum()], hw(3));
        let com = commutant_dims(&a1, &AmbientSpec::within(span.clone()), hw(3)).unwrap();
        assert_eq!(com.integer_dims(), vec![1, 0, 1, 1]);
        assert!(com.is_subspace_of(&span));
        let hbar = &cartan_elements(2).bar[0];
        assert!(com.contains(&mode(hbar.vector(), -1, hbar.vector())));
        assert!(!com.contains(hbar.vector()));
    }

    #[test]
    fn errors() {
        let t = GeneratorTable::build(TableKind::CLevelMinusOne, 2).unwrap();
        assert!(matches!(commutant_dims(&t, &AmbientSpec::full(2), hw(1)), Err(Error::SpeciesOutOfRange { .. })));
        let s = GradedSubspace::vacuum_line(4, hw(1));
        assert!(matches!(commutant_dims(&t, &AmbientSpec::within(s), hw(2)), Err(Error::AmbientTooNarrow { .. })));
        assert_eq!(commutant(&[], &AmbientSpec::full(1), hw(1)).unwrap().dims()[2], (hw(1), 3));
    }
}
