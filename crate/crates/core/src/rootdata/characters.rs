use std::collections::{BTreeMap, BTreeSet};

use num_traits::{ToPrimitive, Zero};

use super::{RootSystem, RootType, WeightVector};
use crate::error::Result;
use crate::exact::{int, Scalar};

/// Weight multiplicities, keyed by weight.
pub type Character = BTreeMap<WeightVector, u64>;

/// Weyl's product formula.
pub fn weyl_dim(rs: &RootSystem, lambda: &WeightVector) -> Result<u64> {
    rs.require_dominant(lambda)?;
    let rho = rs.rho();
    let shifted = lambda + &rho;
    let mut d = int(1);
    for a in rs.positive_roots() {
        d = d * rs.form(&shifted, a) / rs.form(&rho, a);
    }
    Ok(d.to_integer().to_u64().expect("dimension fits"))
}

/// Multiplicities of the dominant weights of `V(lambda)` by Freudenthal's
/// recursion.
pub fn dominant_character(rs: &RootSystem, lambda: &WeightVector) -> Result<Character> {
    rs.require_dominant(lambda)?;
    // dominant weights below lambda: closed under "subtract a positive root,
    // stay dominant" starting from lambda
    let mut dominant = BTreeSet::new();
    dominant.insert(lambda.clone());
    let mut stack = vec![lambda.clone()];
    while let Some(mu) = stack.pop() {
        for a in rs.positive_roots() {
            let nu = rs.normalize(&mu - a);
            if rs.is_dominant(&nu) && dominant.insert(nu.clone()) {
                stack.push(nu);
            }
        }
    }
    let mut order: Vec<WeightVector> = dominant.into_iter().collect();
    order.sort_by_key(|mu| rs.height(&(lambda - mu)));

    let rho = rs.rho();
    let norm = |v: &WeightVector| rs.form(v, v);
    let top = norm(&(lambda + &rho));
    let mut mult: Character = BTreeMap::new();
    let lookup = |mult: &Character, v: &WeightVector| {
        let (d, _) = rs.to_dominant(v);
        mult.get(&rs.normalize(d)).copied().unwrap_or(0)
    };
    for mu in order {
        if mu == *lambda {
            mult.insert(mu, 1);
            continue;
        }
        let mut sum = Scalar::zero();
        for a in rs.positive_roots() {
            let mut k = 1;
            loop {
                let nu = rs.normalize(&mu + &scale(a, k));
                let m = lookup(&mult, &nu);
                if m == 0 {
                    break;
                }
                sum += int(m as i64) * rs.form(&nu, a);
                k += 1;
            }
        }
        let denom = &top - norm(&(&mu + &rho));
        let m = int(2) * sum / denom;
        assert!(m.is_integer(), "non-integral multiplicity");
        let m = m.to_integer().to_u64().expect("multiplicity");
        if m > 0 {
            mult.insert(mu, m);
        }
    }
    let total: u64 = mult.iter().map(|(mu, m)| m * orbit_size(rs, mu)).sum();
    assert_eq!(total, weyl_dim(rs, lambda)?, "dimension audit of {} {lambda}", rs.name());
    Ok(mult)
}

fn scale(v: &WeightVector, k: i64) -> WeightVector {
    WeightVector(v.coords().iter().map(|x| x * k).collect())
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Size of the Weyl group orbit of a dominant weight.
pub(crate) fn orbit_size(rs: &RootSystem, mu: &WeightVector) -> u64 {
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &x in mu.coords() {
        *counts.entry(x.abs()).or_default() += 1;
    }
    let perms = counts.values().fold(factorial(mu.len()), |acc, &c| acc / factorial(c));
    match rs.kind() {
        RootType::A => perms,
        RootType::C => perms << mu.coords().iter().filter(|&&x| x != 0).count(),
    }
}

/// The full character: every weight with its multiplicity.
pub fn full_character(rs: &RootSystem, lambda: &WeightVector) -> Result<Character> {
    let mut out = Character::new();
    for (mu, m) in dominant_character(rs, lambda)? {
        for w in rs.orbit(&mu) {
            out.insert(rs.normalize(w), m);
        }
    }
    Ok(out)
}

/// Decomposes `V(lambda) (x) V(mu)` by Klimyk's formula.
pub fn tensor_decompose(rs: &RootSystem, lambda: &WeightVector, mu: &WeightVector) -> Result<Vec<(WeightVector, u64)>> {
    rs.require_dominant(lambda)?;
    let rho = rs.rho();
    let mut acc: BTreeMap<WeightVector, i64> = BTreeMap::new();
    for (nu, m) in full_character(rs, mu)? {
        let (d, sign) = rs.to_dominant(&(&(lambda + &nu) + &rho));
        if rs.labels(&d).contains(&0) {
            continue;
        }
        *acc.entry(rs.normalize(&d - &rho)).or_default() += sign * m as i64;
    }
    let out = sorted_positive(rs, acc);
    let total: u64 = out.iter().map(|(nu, m)| m * weyl_dim(rs, nu).unwrap()).sum();
    assert_eq!(total, weyl_dim(rs, lambda)? * weyl_dim(rs, mu)?, "dimension audit");
    Ok(out)
}

fn sorted_positive(rs: &RootSystem, acc: BTreeMap<WeightVector, i64>) -> Vec<(WeightVector, u64)> {
    assert!(acc.values().all(|&m| m >= 0), "negative multiplicity");
    let mut out: Vec<(WeightVector, u64)> = acc.into_iter().filter(|(_, m)| *m > 0).map(|(w, m)| (w, m as u64)).collect();
    // highest first
    out.sort_by(|(a, _), (b, _)| rs.height_of_weight(b).cmp(&rs.height_of_weight(a)).then(b.cmp(a)));
    out
}

impl RootSystem {
    /// `(v, 2 rho)` scaled to an integer order key.
    pub(crate) fn height_of_weight(&self, v: &WeightVector) -> Scalar {
        self.form(v, &self.two_rho())
    }
}

/// Restricts `V_{A_{2l-1}}(lambda)` to `C_l` through the folding
/// `e_i -> e_i`, `e_{2l+1-i} -> -e_i`.
pub fn branch_a_to_c(ell: usize, lambda: &WeightVector) -> Result<Vec<(WeightVector, u64)>> {
    let a = RootSystem::a(2 * ell - 1)?;
    let c = RootSystem::c(ell)?;
    let lambda = a.normalize(lambda.clone());
    a.require_dominant(&lambda)?;
    let mut rest: BTreeMap<WeightVector, i64> = BTreeMap::new();
    for (mu, m) in full_character(&a, &lambda)? {
        let x = mu.coords();
        let nu = WeightVector((0..ell).map(|i| x[i] - x[2 * ell - 1 - i]).collect());
        if c.is_dominant(&nu) {
            *rest.entry(nu).or_default() += m as i64;
        }
    }
    let mut out: BTreeMap<WeightVector, i64> = BTreeMap::new();
    loop {
        rest.retain(|_, m| *m != 0);
        let Some(top) = rest.keys().max_by(|p, q| c.height_of_weight(p).cmp(&c.height_of_weight(q)).then(p.cmp(q))).cloned()
        else {
            break;
        };
        let m = rest[&top];
        assert!(m > 0, "branching peeled a negative multiplicity");
        *out.entry(top.clone()).or_default() += m;
        for (nu, k) in dominant_character(&c, &top)? {
            *rest.entry(nu).or_default() -= m * k as i64;
        }
    }
    let out = sorted_positive(&c, out);
    let total: u64 = out.iter().map(|(nu, m)| m * weyl_dim(&c, nu).unwrap()).sum();
    assert_eq!(total, weyl_dim(&a, &lambda)?, "dimension audit");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(rs: &RootSystem, s: &str) -> WeightVector {
        rs.parse_weight(s).unwrap()
    }

    fn names(rs: &RootSystem, d: &[(WeightVector, u64)]) -> Vec<(String, u64)> {
        d.iter().map(|(v, m)| (rs.fmt_weight(v), *m)).collect()
    }

    #[test]
    fn dimensions() {
        let c2 = RootSystem::c(2).unwrap();
        assert_eq!(weyl_dim(&c2, &w(&c2, "w2")).unwrap(), 5);
        assert_eq!(weyl_dim(&c2, &w(&c2, "2w1")).unwrap(), 10);
        assert_eq!(weyl_dim(&c2, &w(&c2, "2w2")).unwrap(), 14);
        let a3 = RootSystem::a(3).unwrap();
        assert_eq!(weyl_dim(&a3, &w(&a3, "w1")).unwrap(), 4);
        for l in 2..=4usize {
            let c = RootSystem::c(l).unwrap();
            let adj = weyl_dim(&c, &w(&c, "2w1")).unwrap();
            let w2 = weyl_dim(&c, &w(&c, "w2")).unwrap();
            let l = l as u64;
            assert_eq!(adj, l * (2 * l + 1));
            assert_eq!(w2, 2 * l * l - l - 1);
            assert_eq!(adj + w2, 4 * l * l - 1);
        }
        assert!(weyl_dim(&c2, &WeightVector(vec![0, 1])).is_err());
    }

    /// Brute-force weight multiplicities of a tensor power of the defining
    /// representation are checked against Freudenthal through Klimyk.
    #[test]
    fn characters() {
        let c2 = RootSystem::c(2).unwrap();
        let ch = dominant_character(&c2, &w(&c2, "w2")).unwrap();
        assert_eq!(ch.len(), 2);
        assert_eq!(ch[&w(&c2, "w2")], 1);
        assert_eq!(ch[&WeightVector::zero(2)], 1);
        let a3 = RootSystem::a(3).unwrap();
        let ch = dominant_character(&a3, &w(&a3, "w2")).unwrap();
        assert_eq!(ch.len(), 1);
        assert_eq!(orbit_size(&a3, &w(&a3, "w2")), 6);
        for rs in [&c2, &a3] {
            let zero = WeightVector::zero(rs.dim());
            assert_eq!(dominant_character(rs, &zero).unwrap(), Character::from([(zero.clone(), 1)]));
        }
        // adjoint of C3: zero weight has multiplicity equal to the rank
        let c3 = RootSystem::c(3).unwrap();
        assert_eq!(dominant_character(&c3, &w(&c3, "2w1")).unwrap()[&WeightVector::zero(3)], 3);
    }

    fn add_chars(a: &mut BTreeMap<WeightVector, i64>, b: &Character, m: i64) {
        for (w, k) in b {
            *a.entry(w.clone()).or_default() += m * *k as i64;
        }
    }

    /// Independent oracle: the character of the third tensor power of the
    /// defining representation, from its explicit weight list.
    #[test]
    fn cube_of_defining_representation() {
        for rs in [RootSystem::c(2).unwrap(), RootSystem::c(3).unwrap(), RootSystem::a(3).unwrap()] {
            let n = rs.dim();
            let e = |i: usize, s: i64| {
                let mut v = vec![0; n];
                v[i] = s;
                rs.normalize(WeightVector(v))
            };
            let defining: Vec<WeightVector> = match rs.kind() {
                RootType::C => (0..n).flat_map(|i| [e(i, 1), e(i, -1)]).collect(),
                RootType::A => (0..n).map(|i| e(i, 1)).collect(),
            };
            let mut brute: BTreeMap<WeightVector, i64> = BTreeMap::new();
            for x in &defining {
                for y in &defining {
                    for z in &defining {
                        *brute.entry(rs.normalize(&(x + y) + z)).or_default() += 1;
                    }
                }
            }
            let w1 = rs.fundamental(1);
            let mut via_klimyk = BTreeMap::new();
            for (nu, m) in tensor_decompose(&rs, &w1, &w1).unwrap() {
                for (rho, k) in tensor_decompose(&rs, &nu, &w1).unwrap() {
                    add_chars(&mut via_klimyk, &full_character(&rs, &rho).unwrap(), (m * k) as i64);
                }
            }
            assert_eq!(brute, via_klimyk, "{}", rs.name());
        }
    }

    #[test]
    fn tensor_products() {
        let c2 = RootSystem::c(2).unwrap();
        let d = tensor_decompose(&c2, &w(&c2, "w2"), &w(&c2, "w2")).unwrap();
        assert_eq!(names(&c2, &d), vec![("2w2".into(), 1), ("2w1".into(), 1), ("0".into(), 1)]);

        let c3 = RootSystem::c(3).unwrap();
        let d = tensor_decompose(&c3, &w(&c3, "w2"), &w(&c3, "w2")).unwrap();
        let got: BTreeSet<_> = names(&c3, &d).into_iter().collect();
        let expect: BTreeSet<_> =
            ["2w2", "w1+w3", "2w1", "w2", "0"].iter().map(|s| (s.to_string(), 1u64)).collect();
        assert_eq!(got, expect);
        let dims: Vec<u64> = d.iter().map(|(v, _)| weyl_dim(&c3, v).unwrap()).collect();
        assert_eq!(dims.iter().sum::<u64>(), 196);
        assert_eq!(BTreeSet::from_iter(dims), BTreeSet::from([90, 70, 21, 14, 1]));

        for l in 3..=4usize {
            let c = RootSystem::c(l).unwrap();
            let labels = |a: i64, k: usize| {
                let mut v = vec![0; l];
                v[0] = a;
                if k > 0 {
                    v[k - 1] += 1;
                }
                c.from_labels(&v).unwrap()
            };
            for n in 2..=4i64 {
                let d = tensor_decompose(&c, &c.fundamental(1).scaled_by(n), &c.fundamental(2)).unwrap();
                let got: BTreeSet<_> = d.into_iter().collect();
                let expect = BTreeSet::from([
                    (labels(n, 2), 1),
                    (labels(n - 1, 3), 1),
                    (labels(n, 0), 1),
                    (labels(n - 2, 2), 1),
                ]);
                assert_eq!(got, expect, "C{l} n={n}");
            }
        }
    }

    #[test]
    fn tensor_symmetry() {
        let c3 = RootSystem::c(3).unwrap();
        let ws = ["w1", "w2", "w3", "2w1", "w1+w2"];
        for x in ws {
            for y in ws {
                let (x, y) = (w(&c3, x), w(&c3, y));
                assert_eq!(tensor_decompose(&c3, &x, &y).unwrap(), tensor_decompose(&c3, &y, &x).unwrap());
            }
        }
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(24))]

        #[test]
        fn tensor_sum_rule_and_symmetry(x in proptest::collection::vec(0i64..=2, 3), y in proptest::collection::vec(0i64..=1, 3)) {
            let c3 = RootSystem::c(3).unwrap();
            let (x, y) = (c3.from_labels(&x).unwrap(), c3.from_labels(&y).unwrap());
            let d = tensor_decompose(&c3, &x, &y).unwrap();
            let total: u64 = d.iter().map(|(v, m)| m * weyl_dim(&c3, v).unwrap()).sum();
            proptest::prop_assert_eq!(total, weyl_dim(&c3, &x).unwrap() * weyl_dim(&c3, &y).unwrap());
            proptest::prop_assert_eq!(d, tensor_decompose(&c3, &y, &x).unwrap());
        }

        #[test]
        fn branching_sum_rule(x in proptest::collection::vec(0i64..=1, 5)) {
            let a5 = RootSystem::a(5).unwrap();
            let c3 = RootSystem::c(3).unwrap();
            let lambda = a5.from_labels(&x).unwrap();
            let d = branch_a_to_c(3, &lambda).unwrap();
            let total: u64 = d.iter().map(|(v, m)| m * weyl_dim(&c3, v).unwrap()).sum();
            proptest::prop_assert_eq!(total, weyl_dim(&a5, &lambda).unwrap());
            // the diagram flip of A5 is dual to the folding, so flipped weights branch alike
            let mut flipped = x.clone();
            flipped.reverse();
            proptest::prop_assert_eq!(d, branch_a_to_c(3, &a5.from_labels(&flipped).unwrap()).unwrap());
        }
    }

    #[test]
    fn branching() {
        for l in 2..=3usize {
            let a = RootSystem::a(2 * l - 1).unwrap();
            let c = RootSystem::c(l).unwrap();
            let adj = w(&a, &format!("w1+w{}", 2 * l - 1));
            let d = branch_a_to_c(l, &adj).unwrap();
            assert_eq!(names(&c, &d), vec![("2w1".into(), 1), ("w2".into(), 1)]);
            for n in 1..=4i64 {
                let expect = vec![(c.fmt_weight(&c.fundamental(1).scaled_by(n)), 1)];
                let d = branch_a_to_c(l, &a.fundamental(1).scaled_by(n)).unwrap();
                assert_eq!(names(&c, &d), expect);
                let d = branch_a_to_c(l, &a.fundamental(2 * l - 1).scaled_by(n)).unwrap();
                assert_eq!(names(&c, &d), expect);
            }
        }
        // exterior square of the defining representation: w2 + trivial
        let a3 = RootSystem::a(3).unwrap();
        let c2 = RootSystem::c(2).unwrap();
        assert_eq!(names(&c2, &branch_a_to_c(2, &a3.fundamental(2)).unwrap()), vec![("w2".into(), 1), ("0".into(), 1)]);
    }
}
