use std::collections::BTreeSet;

use super::{Charge, FockMonomial, Mode};
use crate::exact::HalfInt;

/// All monomials of `M_pairs` of the given weight, optionally restricted to
/// one charge, in ascending canonical order.
pub fn graded_basis(pairs: usize, weight: HalfInt, charge_filter: Option<i32>) -> Vec<FockMonomial> {
    if weight < HalfInt::ZERO {
        return Vec::new();
    }
    let mut modes = Vec::new();
    for s in 1..=pairs as u16 {
        for c in [Charge::Plus, Charge::Minus] {
            let mut r = HalfInt::HALF;
            while r <= weight {
                modes.push(Mode::new(s, c, -r));
                r = r + HalfInt::from_int(1);
            }
        }
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill(&modes, 0, weight, &mut stack, &mut out);
    if let Some(c) = charge_filter {
        out.retain(|m| m.charge() == c);
    }
    out.sort();
    out
}

fn fill(modes: &[Mode], from: usize, left: HalfInt, stack: &mut Vec<Mode>, out: &mut Vec<FockMonomial>) {
    if left == HalfInt::ZERO {
        out.push(FockMonomial::from_modes(stack.iter().copied()).expect("creation modes"));
        return;
    }
    for (i, &m) in modes.iter().enumerate().skip(from) {
        let r = -m.depth();
        if r <= left {
            stack.push(m);
            fill(modes, i, left - r, stack, out);
            stack.pop();
        }
    }
}

/// Splits `items` by the parity of `count`.
pub fn split_by_parity<T: Clone>(items: &[T], count: impl Fn(&T) -> usize) -> (Vec<T>, Vec<T>) {
    let (even, odd): (Vec<&T>, Vec<&T>) = items.iter().partition(|x| count(x).is_multiple_of(2));
    (even.into_iter().cloned().collect(), odd.into_iter().cloned().collect())
}

/// Splits monomials by the parity of the number of factors with species in `group`.
pub fn parity_split(basis: &[FockMonomial], group: &BTreeSet<u16>) -> (Vec<FockMonomial>, Vec<FockMonomial>) {
    split_by_parity(basis, |m| m.count_where(|f| group.contains(&f.species())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::fock_series;
    use num_bigint::BigInt;

    fn all(pairs: u16) -> BTreeSet<u16> {
        (1..=pairs).collect()
    }

    #[test]
    fn small_bases() {
        assert_eq!(graded_basis(1, HalfInt::HALF, None).len(), 2);
        assert_eq!(graded_basis(1, HalfInt::ZERO, None), vec![FockMonomial::vacuum()]);
        let b = graded_basis(2, HalfInt::from_int(1), Some(0));
        assert_eq!(b.len(), 4);
        for m in &b {
            assert_eq!(m.len(), 2);
            assert!(m.factors().iter().all(|f| f.depth() == -HalfInt::HALF));
        }
    }

    #[test]
    fn counts_match_character() {
        for pairs in 1..=3 {
            let order = HalfInt::from_int(3);
            let ch = fock_series(pairs, order);
            for w in order.steps_up_to() {
                let basis = graded_basis(pairs, w, None);
                assert_eq!(BigInt::from(basis.len()), ch.coeff(w), "pairs {pairs} weight {w}");
                let distinct: BTreeSet<_> = basis.iter().collect();
                assert_eq!(distinct.len(), basis.len());
                assert!(basis.iter().all(|m| m.weight() == w));
            }
        }
    }

    #[test]
    fn parity_examples() {
        // generic split on rank-one Heisenberg monomials, written as part lists
        let heis = vec![vec![1, 1], vec![2]];
        let (even, odd) = split_by_parity(&heis, Vec::len);
        assert_eq!(even, vec![vec![1, 1]]);
        assert_eq!(odd, vec![vec![2]]);

        let (even, odd) = parity_split(&graded_basis(1, HalfInt::HALF, None), &all(1));
        assert!(even.is_empty());
        assert_eq!(odd.len(), 2);

        let b = graded_basis(1, HalfInt::from_int(1), Some(0));
        let (even, odd) = parity_split(&b, &all(1));
        assert_eq!(even, b);
        assert!(odd.is_empty());
    }
}
