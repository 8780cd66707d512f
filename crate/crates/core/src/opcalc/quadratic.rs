use std::fmt;

use super::mode;
use crate::error::{Error, Result};
use crate::exact::{HalfInt, Scalar};
use crate::weylfock::FockVector;

/// A nonzero homogeneous vector whose monomials all have exactly two factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticElement {
    vector: FockVector,
    weight: HalfInt,
}

impl QuadraticElement {
    pub fn new(vector: FockVector) -> Result<Self> {
        if let Some((m, _)) = vector.terms().find(|(m, _)| m.len() != 2) {
            return Err(Error::NotQuadratic(m.to_string()));
        }
        let weight = vector.homogeneous_weight().ok_or(Error::NotHomogeneous)?;
        Ok(Self { vector, weight })
    }

    /// Parses `"[c] a1+(-1/2) a2-(-1/2) |0> + ..."`.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(text.parse()?)
    }

    pub fn vector(&self) -> &FockVector {
        &self.vector
    }

    pub fn into_vector(self) -> FockVector {
        self.vector
    }

    pub fn weight(&self) -> HalfInt {
        self.weight
    }

    pub fn scaled(&self, c: &Scalar) -> Result<Self> {
        Self::new(self.vector.scaled(c))
    }
}

impl AsRef<FockVector> for QuadraticElement {
    fn as_ref(&self) -> &FockVector {
        &self.vector
    }
}

impl fmt::Display for QuadraticElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.vector.fmt(f)
    }
}

/// `u_m v`; the result has weight `wt(v) + wt(u) - m - 1`.
pub fn mode_action(u: &QuadraticElement, m: i64, v: &FockVector) -> FockVector {
    mode(&u.vector, m, v)
}

/// The Lie bracket `[u, v] = u_0 v`.
pub fn bracket(u: &QuadraticElement, v: &QuadraticElement) -> FockVector {
    mode_action(u, 0, &v.vector)
}

/// The invariant pairing `<u, v>`: vacuum coefficient of `u_1 v`.
pub fn level_pairing(u: &QuadraticElement, v: &QuadraticElement) -> Scalar {
    mode_action(u, 1, &v.vector).vacuum_coeff()
}
