use std::fmt;

use super::{apply_mode, Charge, FockMonomial, FockVector};
use crate::error::{Error, Result};
use crate::exact::int;

/// Scalar relating a rescaled b-monomial to the actual one:
/// `actual = 2^(-half_powers/2) * i^i_power * rescaled`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BRescaling {
    pub half_powers: u32,
    pub i_power: u8,
}

impl fmt::Display for BRescaling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = ["", "i", "-", "-i"][self.i_power as usize];
        write!(f, "{unit}2^(-{}/2)", self.half_powers)
    }
}

/// Expands a monomial in the `b` modes, with species read as b-indices
/// `1..=2l`, into the `a` modes of `M_{2l}`. Each factor is replaced by its
/// integral rescaling, e.g. `b_i^+ -> a_i^+ + a_{2l+1-i}^-`.
pub fn b_to_a(b: &FockMonomial, ell: usize) -> Result<(FockVector, BRescaling)> {
    let n = 2 * ell as u16;
    let mut out = FockVector::vacuum();
    let mut i_power = 0u32;
    for &f in b.factors() {
        let s = f.species();
        if s > n || s == 0 {
            return Err(Error::SpeciesOutOfRange { species: s, max: n });
        }
        let low = s as usize <= ell;
        let (i, k) = if low { (s, n + 1 - s) } else { (n + 1 - s, s) };
        let d = f.depth();
        let ai = |c: Charge| super::Mode::new(i, c, d);
        let ak = |c: Charge| super::Mode::new(k, c, d);
        let (first, second, sign) = match (low, f.charge()) {
            (true, Charge::Plus) => (ai(Charge::Plus), ak(Charge::Minus), 1),
            (true, Charge::Minus) => (ai(Charge::Minus), ak(Charge::Plus), -1),
            (false, Charge::Plus) => (ai(Charge::Plus), ak(Charge::Minus), -1),
            (false, Charge::Minus) => (ai(Charge::Minus), ak(Charge::Plus), 1),
        };
        if !low {
            i_power += if f.charge() == Charge::Plus { 1 } else { 3 };
        }
        let mut next = apply_mode(first, &out);
        next.add_scaled(&int(sign), &apply_mode(second, &out));
        out = next;
    }
    Ok((out, BRescaling { half_powers: b.len() as u32, i_power: (i_power % 4) as u8 }))
}
