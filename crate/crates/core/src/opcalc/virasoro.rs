use num_traits::Zero;

use super::{level_pairing, mode, QuadraticElement};
use crate::error::{Error, Result};
use crate::exact::{frac, int, invert_dense, HalfInt, Scalar};
use crate::weylfock::{graded_basis, FockVector, Mode};

/// `1/2 sum_i (a_i^-(-3/2) a_i^+(-1/2) - a_i^+(-3/2) a_i^-(-1/2)) 1` in `M_pairs`.
pub fn free_virasoro(pairs: usize) -> QuadraticElement {
    let mut v = FockVector::zero();
    for i in 1..=pairs as u16 {
        let a = |m: Mode, n: Mode| FockVector::from(crate::weylfock::FockMonomial::from_modes([m, n]).unwrap());
        v.add_scaled(&frac(1, 2), &a(Mode::minus(i, -3), Mode::plus(i, -1)));
        v.add_scaled(&frac(-1, 2), &a(Mode::plus(i, -3), Mode::minus(i, -1)));
    }
    QuadraticElement::new(v).expect("free Virasoro vector is quadratic")
}

/// `1/2 sum_{ij} (gram^-1)_{ij} H^i_{-1} H^j` for weight-one `cartans`.
pub fn heisenberg_virasoro(cartans: &[QuadraticElement], gram: &[Vec<Scalar>]) -> Result<FockVector> {
    let inv = invert_dense(gram)?;
    let mut out = FockVector::zero();
    for (i, hi) in cartans.iter().enumerate() {
        for (j, hj) in cartans.iter().enumerate() {
            let c = &inv[i][j] / int(2);
            if !c.is_zero() {
                out.add_scaled(&c, &mode(hi.vector(), -1, hj.vector()));
            }
        }
    }
    Ok(out)
}

/// Sugawara vector `1/(2(k+h)) sum_i a^i_{-1} b^i`, summed over simple
/// factors, with `b^i` the dual basis of `a^i` for the form `<.,.>/k`.
pub fn sugawara(factors: &[Vec<QuadraticElement>], k: &Scalar, h_dual: &Scalar) -> Result<FockVector> {
    let shifted = k + h_dual;
    if shifted.is_zero() {
        return Err(Error::CriticalLevel);
    }
    if k.is_zero() {
        return Err(Error::SingularGram);
    }
    let mut out = FockVector::zero();
    for basis in factors {
        let form: Vec<Vec<Scalar>> =
            basis.iter().map(|a| basis.iter().map(|b| level_pairing(a, b) / k).collect()).collect();
        let inv = invert_dense(&form)?;
        for (i, a) in basis.iter().enumerate() {
            let mut dual = FockVector::zero();
            for (j, b) in basis.iter().enumerate() {
                dual.add_scaled(&inv[j][i], b.vector());
            }
            out += &mode(a.vector(), -1, &dual);
        }
    }
    Ok(out.scaled(&(int(1) / (int(2) * shifted))))
}

/// `c = 2 <1, omega_3 omega>`.
pub fn central_charge(omega: &FockVector) -> Scalar {
    mode(omega, 3, omega).vacuum_coeff() * int(2)
}

/// Outcome of [`virasoro_axioms`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirasoroReport {
    pub central_charge: Scalar,
    pub pairs: usize,
    pub max_weight: HalfInt,
    pub checked: usize,
    /// Whether `L(0)` equals the Fock weight on every checked monomial.
    pub grades_fock_space: bool,
    pub failure: Option<String>,
}

impl VirasoroReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks `L(0) omega = 2 omega`, `L(-1) 1 = 0` and the Virasoro relations for
/// `|m|, |n| <= 2` on every monomial of weight `<= max_weight` in the Fock
/// space spanned by the species of `omega`.
pub fn virasoro_axioms(omega: &FockVector, max_weight: HalfInt) -> VirasoroReport {
    let c = central_charge(omega);
    let pairs = omega.max_species() as usize;
    let l = |n: i64, v: &FockVector| mode(omega, n + 1, v);
    let mut checked = 0;
    let mut grades = true;
    let mut failure = None;
    if l(0, omega) != omega.scaled(&int(2)) {
        failure = Some("L(0) omega != 2 omega".to_string());
    } else if !l(-1, &FockVector::vacuum()).is_zero() {
        failure = Some("L(-1) 1 != 0".to_string());
    }
    'outer: for w in max_weight.steps_up_to() {
        if failure.is_some() {
            break;
        }
        for b in graded_basis(pairs, w, None) {
            let v = FockVector::from(b.clone());
            checked += 1;
            let lv: Vec<FockVector> = (-2..=2).map(|n| l(n, &v)).collect();
            let twice = Scalar::new(w.twice().into(), 2.into());
            grades &= lv[2] == v.scaled(&twice);
            for m in -2i64..=2 {
                for n in -2i64..=2 {
                    let lhs = &l(m, &lv[(n + 2) as usize]) - &l(n, &lv[(m + 2) as usize]);
                    let mut rhs = if (m + n).abs() <= 2 {
                        lv[(m + n + 2) as usize].scaled(&int(m - n))
                    } else {
                        l(m + n, &v).scaled(&int(m - n))
                    };
                    if m + n == 0 {
                        rhs.add_scaled(&(&c * int(m * m * m - m) / int(12)), &v);
                    }
                    if lhs != rhs {
                        failure = Some(format!("[L({m}), L({n})] on {b}"));
                        break 'outer;
                    }
                }
            }
        }
    }
    VirasoroReport { central_charge: c, pairs, max_weight, checked, grades_fock_space: grades, failure }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opcalc::{bracket, mode_action};

    fn q(text: &str) -> QuadraticElement {
        QuadraticElement::parse(text).unwrap()
    }

    fn big_h(i: u16, ell: u16) -> QuadraticElement {
        let k = 2 * ell + 1 - i;
        q(&format!("[1] a{i}+(-1/2) a{i}-(-1/2) |0> + [1] a{k}+(-1/2) a{k}-(-1/2) |0>"))
    }

    fn sl2(i: u16, ell: u16) -> Vec<QuadraticElement> {
        let k = 2 * ell + 1 - i;
        vec![
            q(&format!("[1] a{i}+(-1/2) a{k}-(-1/2) |0>")),
            q(&format!("[1] a{i}-(-1/2) a{k}+(-1/2) |0>")),
            q(&format!("[-1] a{i}+(-1/2) a{i}-(-1/2) |0> + [1] a{k}+(-1/2) a{k}-(-1/2) |0>")),
        ]
    }

    #[test]
    fn free_field_vector() {
        let w = free_virasoro(1);
        assert_eq!(w.vector().len(), 2);
        assert!(w.vector().terms().all(|(_, c)| *c == frac(1, 2) || *c == frac(-1, 2)));
        for s in ["[1] a1+(-1/2) |0>", "[1] a1-(-1/2) |0>"] {
            let x: FockVector = s.parse().unwrap();
            assert_eq!(mode_action(&w, 1, &x), x.scaled(&frac(1, 2)));
        }
        assert!(mode_action(&w, 0, &FockVector::vacuum()).is_zero());
        for ell in 1..=4 {
            assert_eq!(central_charge(free_virasoro(ell).vector()), int(-(ell as i64)));
        }
    }

    #[test]
    fn heisenberg_vectors() {
        let ell = 2u16;
        let total = QuadraticElement::new(big_h(1, ell).vector() + big_h(2, ell).vector()).unwrap();
        let w = heisenberg_virasoro(std::slice::from_ref(&total), &[vec![int(-2 * ell as i64)]]).unwrap();
        let expect = mode(total.vector(), -1, total.vector()).scaled(&frac(-1, 4 * ell as i64));
        assert_eq!(w, expect);
        assert_eq!(central_charge(&w), int(1));

        let hs: Vec<_> = (1..=ell).map(|i| big_h(i, ell)).collect();
        let gram = vec![vec![int(-2), int(0)], vec![int(0), int(-2)]];
        let w = heisenberg_virasoro(&hs, &gram).unwrap();
        let mut expect = FockVector::zero();
        for h in &hs {
            expect.add_scaled(&frac(-1, 4), &mode(h.vector(), -1, h.vector()));
        }
        assert_eq!(w, expect);
        assert_eq!(central_charge(&w), int(2));
        assert!(heisenberg_virasoro(&hs, &[vec![int(1), int(1)], vec![int(1), int(1)]]).is_err());
    }

    #[test]
    fn sugawara_sl2_products() {
        for ell in 1..=2u16 {
            let factors: Vec<_> = (1..=ell).map(|i| sl2(i, ell)).collect();
            let w1 = sugawara(&factors, &int(-1), &int(2)).unwrap();
            assert_eq!(central_charge(&w1), int(-3 * ell as i64));
            let hs: Vec<_> = (1..=ell).map(|i| big_h(i, ell)).collect();
            let gram: Vec<Vec<Scalar>> =
                (0..ell).map(|i| (0..ell).map(|j| int(if i == j { -2 } else { 0 })).collect()).collect();
            let w2 = heisenberg_virasoro(&hs, &gram).unwrap();
            assert_eq!(&w1 + &w2, *free_virasoro(2 * ell as usize).vector());
            for g in factors.iter().flatten() {
                assert_eq!(mode(&w1, 1, g.vector()), *g.vector());
                assert!(mode(&w2, 1, g.vector()).is_zero());
            }
        }
        assert_eq!(sugawara(&[sl2(1, 1)], &int(-2), &int(2)), Err(Error::CriticalLevel));
    }

    #[test]
    fn axioms() {
        assert!(virasoro_axioms(free_virasoro(1).vector(), HalfInt::from_int(2)).passed());
        let r = virasoro_axioms(free_virasoro(2).vector(), HalfInt::from_twice(3));
        assert!(r.passed() && r.grades_fock_space, "{:?}", r.failure);
        assert_eq!(r.central_charge, int(-2));
        let w1 = sugawara(&[sl2(1, 1)], &int(-1), &int(2)).unwrap();
        let r = virasoro_axioms(&w1, HalfInt::from_int(1));
        assert!(r.passed() && !r.grades_fock_space);
        assert_eq!(r.central_charge, int(-3));

        let mut bad = free_virasoro(1).into_vector();
        let (m, c) = bad.terms().next().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        bad.add_term(m, c);
        assert!(!virasoro_axioms(&bad, HalfInt::from_int(2)).passed());
    }

    #[test]
    fn translation_property() {
        let omega = free_virasoro(2).into_vector();
        let us = [
            q("[1] a1+(-1/2) a2-(-1/2) |0>"),
            q("[2] a1+(-3/2) a2-(-1/2) |0> + [-1] a1-(-1/2) a2+(-3/2) |0>"),
        ];
        let ws: Vec<_> = (0..=4).flat_map(|tw| graded_basis(2, HalfInt::from_twice(tw), None)).collect();
        for u in &us {
            let du = mode(&omega, 0, u.vector());
            assert_eq!(mode(&omega, 1, u.vector()), u.vector().scaled(&Scalar::new(u.weight().twice().into(), 2.into())));
            for w in &ws {
                let w = FockVector::from(w.clone());
                for m in -2..=3 {
                    assert_eq!(mode(&du, m, &w), mode(u.vector(), m - 1, &w).scaled(&int(-m)));
                }
            }
            let _ = bracket(u, u);
        }
    }
}
