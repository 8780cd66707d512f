use std::fmt;

use num_traits::Zero;

use super::{EntryKind, GeneratorTable, TableKind};
use crate::error::{Error, Result};
use crate::exact::{fmt_scalar, int, HalfInt, Scalar};
use crate::opcalc::{mode, mode_action};
use crate::rootdata::{lowest_conformal_weight, WeightVector};
use crate::weylfock::FockVector;

/// An affine highest weight, stored as level plus finite weight. For a product
/// table the finite weight has one coordinate per `A_1` factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineWeight {
    pub level: Scalar,
    pub finite: WeightVector,
    /// Dynkin labels of the finite part (per factor for a product table).
    pub labels: Vec<i64>,
    product: bool,
}

impl AffineWeight {
    /// Coefficient of `Lambda_0`: level minus the finite labels (all comarks are 1).
    pub fn lambda0(&self) -> Scalar {
        &self.level - int(self.labels.iter().sum())
    }
}

fn fmt_affine(level: &Scalar, labels: &[(usize, i64)]) -> String {
    let l0 = level - int(labels.iter().map(|(_, a)| a).sum());
    let mut s = format!("{}L0", fmt_scalar(&l0));
    for &(i, a) in labels.iter().filter(|(_, a)| *a != 0) {
        let c = if a == 1 { String::new() } else { a.to_string() };
        s.push_str(&format!("+{c}L{i}"));
    }
    s
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.product {
            let parts: Vec<String> = self.labels.iter().map(|&a| fmt_affine(&self.level, &[(1, a)])).collect();
            write!(f, "{}", parts.join(" (x) "))
        } else {
            let labels: Vec<(usize, i64)> = self.labels.iter().enumerate().map(|(i, &a)| (i + 1, a)).collect();
            write!(f, "{}", fmt_affine(&self.level, &labels))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularReport {
    pub singular: bool,
    /// Why the vector failed, if it did.
    pub reason: Option<String>,
    pub weight: Option<AffineWeight>,
    /// `L(0)` eigenvalue for the Sugawara vector of the table, if `v` is an eigenvector.
    pub sugawara_weight: Option<Scalar>,
    /// `(lambda, lambda + 2 rho) / (2 (k + h))` of the labelled weight.
    pub expected_weight: Option<Scalar>,
}

fn eigenvalue(u: &FockVector, v: &FockVector) -> Option<Scalar> {
    let (m, c) = v.terms().next()?;
    let img = mode(u, 1, v);
    let lambda = img.coeff(m) / c;
    (img == v.scaled(&lambda)).then_some(lambda)
}

/// Decides whether `v` is a highest-weight vector for the affine algebra of
/// `table`: killed by every `x_m`, `m >= 1`, and by the raising zero modes, and
/// an eigenvector of the Cartan zero modes.
pub fn singular_check(v: &FockVector, table: &GeneratorTable) -> Result<SingularReport> {
    let w = v.homogeneous_weight().ok_or(Error::NotHomogeneous)?;
    let fail = |reason: String| SingularReport {
        singular: false,
        reason: Some(reason),
        weight: None,
        sugawara_weight: None,
        expected_weight: None,
    };
    let mut coords = Vec::new();
    for (i, h) in table.eps_cartan().iter().enumerate() {
        let x = mode_action(h, 0, v);
        let Some((m, c)) = v.terms().next() else { return Ok(fail("zero vector".into())) };
        let lambda = x.coeff(m) / c;
        if x != v.scaled(&lambda) {
            return Ok(fail(format!("not an eigenvector of Cartan element {}", i + 1)));
        }
        if !lambda.is_integer() {
            return Ok(fail(format!("non-integral weight {}", fmt_scalar(&lambda))));
        }
        coords.push(lambda.to_integer().try_into().expect("small weight"));
    }
    for e in table.entries() {
        if e.kind == EntryKind::Raising && !mode_action(&e.element, 0, v).is_zero() {
            return Ok(fail(format!("{}(0) acts nontrivially", e.name)));
        }
        let mut m = 1;
        while HalfInt::from_int(m) <= w {
            if !mode_action(&e.element, m as i64, v).is_zero() {
                return Ok(fail(format!("{}({}) acts nontrivially", e.name, m)));
            }
            m += 1;
        }
    }
    let finite = WeightVector(coords);
    let product = table.kind() == TableKind::A1Power;
    let rs = table.root_system();
    let (finite, labels) = if product {
        (finite.clone(), finite.0.clone())
    } else {
        let f = rs.normalize(finite);
        let labels = rs.labels(&f);
        (f, labels)
    };
    let sugawara_weight = eigenvalue(&table.sugawara()?, v);
    let expected_weight = if product {
        let c1 = crate::rootdata::RootSystem::c(1)?;
        let mut total = Scalar::zero();
        for &a in &labels {
            total += lowest_conformal_weight(&c1, &WeightVector(vec![a]), &table.level())?;
        }
        Some(total)
    } else {
        Some(lowest_conformal_weight(&rs, &finite, &table.level())?)
    };
    Ok(SingularReport {
        singular: true,
        reason: None,
        weight: Some(AffineWeight { level: table.level(), finite, labels, product }),
        sugawara_weight,
        expected_weight,
    })
}
