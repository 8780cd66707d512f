use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::HalfInt;

/// Sign label of a generator pair member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Charge {
    Plus,
    Minus,
}

impl Charge {
    pub fn opposite(self) -> Charge {
        match self {
            Charge::Plus => Charge::Minus,
            Charge::Minus => Charge::Plus,
        }
    }

    /// `+1` for `Plus`, `-1` for `Minus`.
    pub fn sign(self) -> i32 {
        match self {
            Charge::Plus => 1,
            Charge::Minus => -1,
        }
    }

    fn symbol(self) -> char {
        match self {
            Charge::Plus => '+',
            Charge::Minus => '-',
        }
    }
}

/// A single mode `a_i^{+/-}(r)` with `r in 1/2 + Z`.
///
/// The derived order (species, then charge, then depth) is the canonical
/// factor order inside monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mode {
    species: u16,
    charge: Charge,
    depth: HalfInt,
}

impl Mode {
    pub fn new(species: u16, charge: Charge, depth: HalfInt) -> Self {
        assert!(species >= 1, "species are 1-based");
        assert!(depth.is_half_odd(), "mode index {depth} is not in 1/2 + Z");
        Mode { species, charge, depth }
    }

    /// `a_species^+(depth)`.
    pub fn plus(species: u16, depth_twice: i32) -> Self {
        Self::new(species, Charge::Plus, HalfInt::from_twice(depth_twice))
    }

    /// `a_species^-(depth)`.
    pub fn minus(species: u16, depth_twice: i32) -> Self {
        Self::new(species, Charge::Minus, HalfInt::from_twice(depth_twice))
    }

    pub fn species(self) -> u16 {
        self.species
    }

    pub fn charge(self) -> Charge {
        self.charge
    }

    pub fn depth(self) -> HalfInt {
        self.depth
    }

    pub fn is_creation(self) -> bool {
        self.depth < HalfInt::ZERO
    }

    pub fn with_depth(self, depth: HalfInt) -> Self {
        Self::new(self.species, self.charge, depth)
    }

    pub fn with_species(self, species: u16) -> Self {
        Self::new(species, self.charge, self.depth)
    }

    /// The mode with which this one has a nonzero commutator, and the value
    /// `[self, partner]`.
    pub fn partner(self) -> (Mode, i32) {
        let p = Mode::new(self.species, self.charge.opposite(), -self.depth);
        (p, self.charge.sign())
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}{}({})", self.species, self.charge.symbol(), self.depth)
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a mode: {s:?}"));
        let rest = s.trim().strip_prefix('a').ok_or_else(bad)?;
        let sign_at = rest.find(['+', '-']).ok_or_else(bad)?;
        let species: u16 = rest[..sign_at].parse().map_err(|_| bad())?;
        let charge = if rest[sign_at..].starts_with('+') { Charge::Plus } else { Charge::Minus };
        let depth = rest[sign_at + 1..]
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let depth: HalfInt = depth.parse()?;
        if species == 0 || !depth.is_half_odd() {
            return Err(bad());
        }
        Ok(Mode::new(species, charge, depth))
    }
}
