use super::{Charge, FockMonomial, FockVector, Mode};
use crate::error::{Error, Result};
use crate::exact::int;

/// Image of one mode under the involution of `M_{2l}`, as `(sign, mode)`.
pub fn theta_mode(m: Mode, ell: usize) -> Result<(i32, Mode)> {
    let n = 2 * ell as u16;
    let s = m.species();
    if s > n {
        return Err(Error::SpeciesOutOfRange { species: s, max: n });
    }
    let other = n + 1 - s;
    let low = s as usize <= ell;
    let (sign, charge) = match (low, m.charge()) {
        (true, Charge::Plus) => (1, Charge::Minus),
        (true, Charge::Minus) => (-1, Charge::Plus),
        (false, Charge::Minus) => (1, Charge::Plus),
        (false, Charge::Plus) => (-1, Charge::Minus),
    };
    Ok((sign, Mode::new(other, charge, m.depth())))
}

pub fn theta_monomial(m: &FockMonomial, ell: usize) -> Result<(i32, FockMonomial)> {
    let mut sign = 1;
    let mut factors = Vec::with_capacity(m.len());
    for &f in m.factors() {
        let (s, g) = theta_mode(f, ell)?;
        sign *= s;
        factors.push(g);
    }
    Ok((sign, FockMonomial::from_modes(factors)?))
}

/// The order-two automorphism of `M_{2l}` exchanging species `i` and `2l+1-i`.
pub fn theta(v: &FockVector, ell: usize) -> Result<FockVector> {
    let mut out = FockVector::zero();
    for (m, x) in v.terms() {
        let (s, g) = theta_monomial(m, ell)?;
        out.add_term(g, x * int(s as i64));
    }
    Ok(out)
}
