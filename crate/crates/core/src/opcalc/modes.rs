use num_traits::Zero;

use crate::exact::{binomial, int, HalfInt, Scalar};
use crate::weylfock::{FockMonomial, FockVector, Mode};
use crate::weylfock::apply_mode_to_monomial;

/// Coefficient of `x(t)` in `d^p x(z) / p!`.
fn derivative_coeff(p: i32, t: HalfInt) -> Scalar {
    // -t - 1/2 is an integer for t in 1/2 + Z
    binomial(((-t).twice() - 1) as i64 / 2, p as i64)
}

/// Borcherds mode `u_m` applied to `v`. `u` may be any element of the Fock
/// space; each monomial of `u` contributes according to its own weight.
pub fn mode(u: &FockVector, m: i64, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero();
    for (um, uc) in u.terms() {
        let s = HalfInt::from_int(m as i32 + 1) - um.weight();
        for (vm, vc) in v.terms() {
            let coeff = uc * vc;
            monomial_mode(um, s, vm, &coeff, &mut out);
        }
    }
    out
}

/// Physics mode `x(n) = x_{n + wt - 1}` of a homogeneous element of integral weight.
pub fn physics_mode(u: &FockVector, n: i64, v: &FockVector) -> FockVector {
    let wt = u.homogeneous_weight().and_then(HalfInt::as_int).unwrap_or(1) as i64;
    mode(u, n + wt - 1, v)
}

struct Slot {
    mode: Mode,
    p: i32,
}

fn monomial_mode(u: &FockMonomial, s: HalfInt, v: &FockMonomial, coeff: &Scalar, out: &mut FockVector) {
    let slots: Vec<Slot> = u
        .factors()
        .iter()
        .map(|&f| Slot { mode: f, p: ((-f.depth()).twice() - 1) / 2 })
        .collect();
    let mut creators = Vec::with_capacity(slots.len());
    annihilate(&slots, 0, v.clone(), coeff.clone(), s, &mut creators, out);
}

/// Decides for each slot whether it annihilates a factor of `v` or creates.
/// `left` is the total mode index still to be distributed.
fn annihilate(
    slots: &[Slot],
    k: usize,
    v: FockMonomial,
    coeff: Scalar,
    left: HalfInt,
    creators: &mut Vec<usize>,
    out: &mut FockVector,
) {
    if k == slots.len() {
        create(slots, creators, 0, &v, coeff, left, out);
        return;
    }
    let slot = &slots[k];
    // annihilating: t > 0 must match the depth of a partner factor in v
    let mut seen = Vec::new();
    for &f in v.factors() {
        if f.species() != slot.mode.species() || f.charge() == slot.mode.charge() || seen.contains(&f) {
            continue;
        }
        seen.push(f);
        let t = -f.depth();
        let applied = slot.mode.with_depth(t);
        if let Some((c, rest)) = apply_mode_to_monomial(applied, &v) {
            let c = &coeff * int(c) * derivative_coeff(slot.p, t);
            if !c.is_zero() {
                annihilate(slots, k + 1, rest, c, left - t, creators, out);
            }
        }
    }
    creators.push(k);
    annihilate(slots, k + 1, v, coeff, left, creators, out);
    creators.pop();
}

/// Distributes `left` (which must be negative in total) over the creating
/// slots. A creating slot with derivative order `p` needs depth `<= -(p + 1/2)`.
fn create(
    slots: &[Slot],
    creators: &[usize],
    i: usize,
    v: &FockMonomial,
    coeff: Scalar,
    left: HalfInt,
    out: &mut FockVector,
) {
    if i == creators.len() {
        if left == HalfInt::ZERO {
            out.add_term(v.clone(), coeff);
        }
        return;
    }
    let slot = &slots[creators[i]];
    let min_depth = |q: &Slot| HalfInt::from_twice(2 * q.p + 1);
    let rest_need = creators[i + 1..].iter().fold(HalfInt::ZERO, |a, &j| a + min_depth(&slots[j]));
    // t ranges over -(p+1/2), -(p+3/2), ... while the rest can still be filled
    let mut r = min_depth(slot);
    while r + rest_need <= -left {
        let t = -r;
        let c = &coeff * derivative_coeff(slot.p, t);
        create(slots, creators, i + 1, &v.times(slot.mode.with_depth(t)), c, left - t, out);
        r = r + HalfInt::from_int(1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;
    use crate::weylfock::{apply_mode, graded_basis};
    use proptest::prelude::*;

    fn v(text: &str) -> FockVector {
        FockVector::modes(int(1), text).unwrap()
    }

    /// Literal double sum for a quadratic monomial, built only from single
    /// mode actions and the normal-ordering rule.
    pub(crate) fn window_oracle(u: &FockVector, m: i64, w: &FockVector) -> FockVector {
        let mut out = FockVector::zero();
        for (um, uc) in u.terms() {
            let f = um.factors();
            assert_eq!(f.len(), 2);
            let (x, y) = (f[0], f[1]);
            let p = ((-x.depth()).twice() - 1) / 2;
            let q = ((-y.depth()).twice() - 1) / 2;
            let s = HalfInt::from_int(m as i32 + 1) - um.weight();
            let bound = w.max_weight().unwrap_or(HalfInt::ZERO).floor() + s.floor().abs() + 2;
            let mut t1 = HalfInt::from_twice(-2 * bound - 1);
            while t1 <= HalfInt::from_int(bound) {
                let t2 = s - t1;
                let c = uc * derivative_coeff(p, t1) * derivative_coeff(q, t2);
                let (mx, my) = (x.with_depth(t1), y.with_depth(t2));
                // annihilator to the right
                let term = if t1 > HalfInt::ZERO {
                    apply_mode(my, &apply_mode(mx, w))
                } else {
                    apply_mode(mx, &apply_mode(my, w))
                };
                out.add_scaled(&c, &term);
                t1 = t1 + HalfInt::from_int(1);
            }
        }
        out
    }

    /// `(a_{-1} b)_m w` through the iterate formula, using only quadratic modes.
    fn iterate_oracle(a: &FockVector, b: &FockVector, m: i64, w: &FockVector) -> FockVector {
        let wt = |x: &FockVector| x.max_weight().unwrap_or(HalfInt::ZERO).floor() as i64;
        let top = (wt(w) + wt(a) + wt(b) - m).max(wt(w) + wt(a)) + 2;
        let mut out = FockVector::zero();
        for j in 0..=top {
            out += &window_oracle(a, -1 - j, &window_oracle(b, m + j, w));
            out += &window_oracle(b, m - 1 - j, &window_oracle(a, j, w));
        }
        out
    }

    fn quadratics(pairs: usize, tw: i32) -> Vec<FockMonomial> {
        graded_basis(pairs, HalfInt::from_twice(tw), None).into_iter().filter(|m| m.len() == 2).collect()
    }

    #[test]
    fn agrees_with_window_sum() {
        for pairs in 1..=2 {
            let us: Vec<_> = (2..=4).flat_map(|tw| quadratics(pairs, tw)).collect();
            let ws: Vec<_> = (0..=4).flat_map(|tw| graded_basis(pairs, HalfInt::from_twice(tw), None)).collect();
            for u in &us {
                let u = FockVector::from(u.clone());
                for w in &ws {
                    let w = FockVector::from(w.clone());
                    for m in -3..=4 {
                        assert_eq!(mode(&u, m, &w), window_oracle(&u, m, &w), "{u} mode {m} on {w}");
                    }
                }
            }
        }
    }

    #[test]
    fn quartic_agrees_with_iterate_formula() {
        let a = &v("a1+(-1/2) a2-(-1/2)") - &v("a1-(-3/2) a1+(-1/2)").scaled(&frac(1, 2));
        let b = &v("a2+(-1/2) a1-(-1/2)") + &v("a2+(-1/2) a2-(-1/2)");
        let prod = mode(&a, -1, &b);
        assert!(prod.terms().any(|(m, _)| m.len() == 4));
        let ws: Vec<_> = (0..=3).flat_map(|tw| graded_basis(2, HalfInt::from_twice(tw), None)).collect();
        for w in ws {
            let w = FockVector::from(w);
            for m in -2..=4 {
                assert_eq!(mode(&prod, m, &w), iterate_oracle(&a, &b, m, &w), "mode {m} on {w}");
            }
        }
    }

    #[test]
    fn vacuum_is_identity_and_creates_states() {
        let one = FockVector::vacuum();
        let w = v("a1+(-1/2) a2-(-3/2)");
        assert_eq!(mode(&one, -1, &w), w);
        assert!(mode(&one, 0, &w).is_zero());
        let u = &v("a1+(-3/2) a2-(-1/2)") + &v("a1+(-1/2) a1+(-1/2) a2-(-1/2) a2-(-1/2)");
        assert_eq!(mode(&u, -1, &one), u);
        assert!(mode(&u, 0, &one).is_zero());
    }

    fn sample_quadratic() -> impl Strategy<Value = FockVector> {
        let basis: Vec<FockMonomial> = (2..=4).flat_map(|tw| quadratics(2, tw)).collect();
        let n = basis.len();
        prop::collection::vec((0..n, -3i64..=3), 1..3)
            .prop_map(move |ts| ts.into_iter().map(|(i, c)| (basis[i].clone(), int(c))).collect())
    }

    fn sample_state() -> impl Strategy<Value = FockVector> {
        let basis: Vec<FockMonomial> = (0..=3).flat_map(|tw| graded_basis(2, HalfInt::from_twice(tw), None)).collect();
        (0..basis.len()).prop_map(move |i| FockVector::from(basis[i].clone()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn borcherds_commutator(u in sample_quadratic(), x in sample_quadratic(), w in sample_state(), m in -2i64..=2, n in -2i64..=2) {
            let lhs = &mode(&u, m, &mode(&x, n, &w)) - &mode(&x, n, &mode(&u, m, &w));
            let mut rhs = FockVector::zero();
            for k in 0..=6 {
                let ukx = mode(&u, k, &x);
                rhs.add_scaled(&binomial(m, k), &mode(&ukx, m + n - k, &w));
            }
            prop_assert_eq!(lhs, rhs);
        }
    }
}
