use num_traits::Zero;
use serde::Serialize;

use super::GeneratorTable;
use super::TableKind;
use crate::error::{Error, Result};
use crate::exact::{frac, int, Scalar};
use crate::opcalc::mode;
use crate::weylfock::FockVector;

/// The six signed triple products of the expansion of
/// `det [e_{ei+ej}(-1)]_{i,j<=3} 1` (with `e_{2ei}` on the diagonal).
pub fn delta3_terms(ell: usize) -> Result<Vec<FockVector>> {
    if ell < 3 {
        return Err(Error::UnsupportedRank { what: "Delta_3", rank: ell });
    }
    let table = GeneratorTable::build(TableKind::CLevelMinusOne, ell)?;
    let entry = |i: usize, j: usize| {
        let name = if i == j { format!("e_2e{i}") } else { format!("e_e{}+e{}", i.min(j), i.max(j)) };
        table.get(&name).expect("table entry").vector().clone()
    };
    let perms: [([usize; 3], i64); 6] =
        [([1, 2, 3], 1), ([2, 3, 1], 1), ([3, 1, 2], 1), ([1, 3, 2], -1), ([3, 2, 1], -1), ([2, 1, 3], -1)];
    Ok(perms
        .iter()
        .map(|(p, sign)| {
            let v = mode(&entry(3, p[2]), -1, &FockVector::vacuum());
            let v = mode(&entry(2, p[1]), -1, &v);
            mode(&entry(1, p[0]), -1, &v).scaled(&int(*sign))
        })
        .collect())
}

/// `Delta_3(-1) 1`.
pub fn delta3_vector(ell: usize) -> Result<FockVector> {
    Ok(delta3_terms(ell)?.iter().fold(FockVector::zero(), |acc, t| &acc + t))
}

/// Values of `p_i`, `q_i`, `r_i` at one index `i >= 3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyValues {
    pub i: usize,
    #[serde(serialize_with = "ser_scalar")]
    pub p: Scalar,
    #[serde(serialize_with = "ser_scalar")]
    pub q: Scalar,
    #[serde(serialize_with = "ser_scalar")]
    pub r: Scalar,
}

fn ser_scalar<S: serde::Serializer>(x: &Scalar, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::exact::fmt_scalar(x))
}

impl PolyValues {
    pub fn vanish(&self) -> bool {
        self.p.is_zero() && self.q.is_zero() && self.r.is_zero()
    }
}

/// The polynomial conditions on a highest weight `sum h_i e_i` (at level -1)
/// of an ordinary module, evaluated for `i = 3..=l`.
pub fn classification_polys(h: &[Scalar]) -> Result<Vec<PolyValues>> {
    if h.len() < 3 {
        return Err(Error::UnsupportedRank { what: "classification polynomials", rank: h.len() });
    }
    let one = int(1);
    let (h1, h2) = (&h[0], &h[1]);
    Ok(h[2..]
        .iter()
        .enumerate()
        .map(|(k, hi)| {
            let p = (h1 + &one) * (h2 + frac(1, 2)) * hi;
            let s = h2 + hi;
            let q = (h1 + &one) * (int(4) * hi + &s * (&s - &one));
            let t = h1 + hi;
            let r = int(4) * hi * (h2 + &one) + (&t - &one) * (h2 + hi + h2 * &t);
            PolyValues { i: k + 3, p, q, r }
        })
        .collect())
}

/// All `h in {0..=bound}^l` on which every `p_i, q_i, r_i` vanishes, in
/// lexicographic order.
pub fn classify_box(ell: usize, bound: u32) -> Result<Vec<Vec<i64>>> {
    if ell < 3 {
        return Err(Error::UnsupportedRank { what: "classification", rank: ell });
    }
    let mut out = Vec::new();
    let mut h = vec![0i64; ell];
    loop {
        let hs: Vec<Scalar> = h.iter().map(|&x| int(x)).collect();
        if classification_polys(&hs)?.iter().all(PolyValues::vanish) {
            out.push(h.clone());
        }
        // odometer, last coordinate fastest
        let mut k = ell;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if h[k] < bound as i64 {
                h[k] += 1;
                break;
            }
            h[k] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hs(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn delta3_vanishes() {
        for ell in 3..=4 {
            let terms = delta3_terms(ell).unwrap();
            assert!(terms.iter().all(|t| !t.is_zero()));
            assert!(delta3_vector(ell).unwrap().is_zero());
            for skip in 0..6 {
                let partial = terms.iter().enumerate().filter(|(i, _)| *i != skip).fold(FockVector::zero(), |a, (_, t)| &a + t);
                assert!(!partial.is_zero());
            }
        }
        assert!(delta3_vector(2).is_err());
    }

    #[test]
    fn polynomial_values() {
        for n in 0..=5 {
            let mut h = vec![n, 0, 0, 0];
            assert!(classification_polys(&hs(&h)).unwrap().iter().all(PolyValues::vanish));
            h[1] = 1;
            h[0] = 1;
            assert!(classification_polys(&hs(&h)).unwrap().iter().all(PolyValues::vanish));
        }
        let v = classification_polys(&hs(&[0, 1, 0])).unwrap();
        assert_eq!(v[0].r, int(-1));
        assert_eq!(v[0].i, 3);
    }

    /// Brute-force reference for the solution set, independent of the odometer.
    fn expected(ell: usize, bound: i64) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = (0..=bound).map(|n| {
            let mut v = vec![0; ell];
            v[0] = n;
            v
        }).collect();
        if bound >= 1 {
            let mut v = vec![0; ell];
            v[0] = 1;
            v[1] = 1;
            out.push(v);
        }
        out.sort();
        out
    }

    #[test]
    fn box_search() {
        assert_eq!(classify_box(3, 8).unwrap(), expected(3, 8));
        assert_eq!(classify_box(3, 8).unwrap().len(), 10);
        assert_eq!(classify_box(5, 5).unwrap().len(), 7);
        assert_eq!(classify_box(3, 0).unwrap(), vec![vec![0, 0, 0]]);
        for b in 1..=6 {
            let small = classify_box(4, b).unwrap();
            let big = classify_box(4, b + 1).unwrap();
            let extra: Vec<_> = big.iter().filter(|h| !small.contains(h)).collect();
            assert_eq!(extra, vec![&vec![b as i64 + 1, 0, 0, 0]]);
        }
    }
}
