use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{int, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RootType {
    A,
    C,
}

impl FromStr for RootType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(RootType::A),
            "C" | "c" => Ok(RootType::C),
            _ => Err(Error::Parse(format!("unknown root type {s:?} (expected A or C)"))),
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootType::A => "A",
            RootType::C => "C",
        })
    }
}

/// Epsilon-coordinates of a weight.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(len: usize) -> Self {
        WeightVector(vec![0; len])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn scaled(&self, c: i64) -> Self {
        WeightVector(self.0.iter().map(|x| x * c).collect())
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &WeightVector {
    type Output = WeightVector;
    fn neg(self) -> WeightVector {
        self.scaled(-1)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A root system of type `A_rank` or `C_rank`, with invariant form normalized
/// so that long roots have squared length 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    kind: RootType,
    rank: usize,
    positive: Vec<WeightVector>,
}

impl RootSystem {
    pub fn new(kind: RootType, rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::UnsupportedRank { what: "root system", rank });
        }
        let mut rs = RootSystem { kind, rank, positive: Vec::new() };
        let n = rs.dim();
        let e = |i: usize| {
            let mut v = vec![0; n];
            v[i] = 1;
            WeightVector(v)
        };
        let mut pos = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                pos.push(&e(i) - &e(j));
                if kind == RootType::C {
                    pos.push(&e(i) + &e(j));
                }
            }
            if kind == RootType::C {
                pos.push(e(i).scaled(2));
            }
        }
        rs.positive = pos.into_iter().map(|r| rs.normalize(r)).collect();
        Ok(rs)
    }

    pub fn a(rank: usize) -> Result<Self> {
        Self::new(RootType::A, rank)
    }

    pub fn c(rank: usize) -> Result<Self> {
        Self::new(RootType::C, rank)
    }

    pub fn kind(&self) -> RootType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of epsilon-coordinates.
    pub fn dim(&self) -> usize {
        match self.kind {
            RootType::A => self.rank + 1,
            RootType::C => self.rank,
        }
    }

    pub fn dual_coxeter(&self) -> i64 {
        self.rank as i64 + 1
    }

    /// `dim g`.
    pub fn dim_algebra(&self) -> i64 {
        let l = self.rank as i64;
        match self.kind {
            RootType::A => l * (l + 2),
            RootType::C => l * (2 * l + 1),
        }
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    /// Canonical representative (type A: last coordinate zero).
    pub fn normalize(&self, v: WeightVector) -> WeightVector {
        match self.kind {
            RootType::A => {
                let last = *v.0.last().unwrap_or(&0);
                WeightVector(v.0.iter().map(|x| x - last).collect())
            }
            RootType::C => v,
        }
    }

    pub fn check(&self, v: &WeightVector) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::WeightLength { expected: self.dim(), found: v.len() });
        }
        Ok(())
    }

    pub fn positive_roots(&self) -> &[WeightVector] {
        &self.positive
    }

    pub fn simple_roots(&self) -> Vec<WeightVector> {
        let n = self.dim();
        (0..self.rank)
            .map(|i| {
                let mut v = vec![0; n];
                if i + 1 < n {
                    v[i] = 1;
                    v[i + 1] = -1;
                } else {
                    v[i] = 2;
                }
                self.normalize(WeightVector(v))
            })
            .collect()
    }

    /// `omega_k = e_1 + ... + e_k`, `1 <= k <= rank`.
    pub fn fundamental(&self, k: usize) -> WeightVector {
        let mut v = vec![0; self.dim()];
        v[..k].iter_mut().for_each(|x| *x = 1);
        self.normalize(WeightVector(v))
    }

    pub fn from_labels(&self, labels: &[i64]) -> Result<WeightVector> {
        if labels.len() != self.rank {
            return Err(Error::WeightLength { expected: self.rank, found: labels.len() });
        }
        let mut v = WeightVector::zero(self.dim());
        for (k, &a) in labels.iter().enumerate() {
            v = &v + &self.fundamental(k + 1).scaled(a);
        }
        Ok(v)
    }

    /// Dynkin labels `2 (v, a_i) / (a_i, a_i)`.
    pub fn labels(&self, v: &WeightVector) -> Vec<i64> {
        let c = &v.0;
        (0..self.rank)
            .map(|i| if i + 1 < self.dim() { c[i] - c[i + 1] } else { c[i] })
            .collect()
    }

    pub fn is_dominant(&self, v: &WeightVector) -> bool {
        self.labels(v).iter().all(|&a| a >= 0)
    }

    pub fn require_dominant(&self, v: &WeightVector) -> Result<()> {
        self.check(v)?;
        if !self.is_dominant(v) {
            return Err(Error::NotDominant(format!("{v} in {}", self.name())));
        }
        Ok(())
    }

    /// The normalized invariant form.
    pub fn form(&self, u: &WeightVector, v: &WeightVector) -> Scalar {
        let dot: i64 = u.0.iter().zip(&v.0).map(|(a, b)| a * b).sum();
        match self.kind {
            RootType::C => Scalar::new(dot.into(), 2.into()),
            RootType::A => {
                let (su, sv): (i64, i64) = (u.0.iter().sum(), v.0.iter().sum());
                int(dot) - Scalar::new((su * sv).into(), (self.dim() as i64).into())
            }
        }
    }

    /// Twice the Weyl vector, `sum of positive roots`.
    pub fn two_rho(&self) -> WeightVector {
        self.positive.iter().fold(WeightVector::zero(self.dim()), |a, r| self.normalize(&a + r))
    }

    /// `rho`, which is integral in epsilon-coordinates for types A and C.
    pub fn rho(&self) -> WeightVector {
        let n = self.dim() as i64;
        match self.kind {
            RootType::A => WeightVector((0..n).rev().collect()),
            RootType::C => WeightVector((1..=n).rev().collect()),
        }
    }

    /// Height of `beta` in the root lattice: sum of its simple-root coefficients.
    pub fn height(&self, beta: &WeightVector) -> i64 {
        // coefficients are partial sums of coordinates (type C: last halved)
        let c = &beta.0;
        match self.kind {
            RootType::A => {
                let t: i64 = c.iter().sum();
                let shift = -t / self.dim() as i64;
                let mut acc = 0;
                let mut h = 0;
                for x in &c[..self.rank] {
                    acc += x + shift;
                    h += acc;
                }
                h
            }
            RootType::C => {
                let mut acc = 0;
                let mut h = 0;
                for (i, x) in c.iter().enumerate() {
                    acc += x;
                    h += if i + 1 == self.rank { acc / 2 } else { acc };
                }
                h
            }
        }
    }

    /// Simple reflection `s_i`.
    pub fn reflect(&self, v: &WeightVector, i: usize) -> WeightVector {
        let mut c = v.0.clone();
        if i + 1 < self.dim() {
            c.swap(i, i + 1);
        } else {
            c[i] = -c[i];
        }
        WeightVector(c)
    }

    /// Conjugates `v` into the dominant chamber, returning `(w v, det w)`.
    pub fn to_dominant(&self, v: &WeightVector) -> (WeightVector, i64) {
        let mut v = v.clone();
        let mut sign = 1;
        loop {
            let labels = self.labels(&v);
            match labels.iter().position(|&a| a < 0) {
                Some(i) => {
                    v = self.reflect(&v, i);
                    sign = -sign;
                }
                None => return (v, sign),
            }
        }
    }

    /// The Weyl group orbit of `v`.
    pub fn orbit(&self, v: &WeightVector) -> Vec<WeightVector> {
        let mut seen = std::collections::BTreeSet::new();
        let mut stack = vec![v.clone()];
        seen.insert(v.clone());
        while let Some(x) = stack.pop() {
            for i in 0..self.rank {
                let y = self.reflect(&x, i);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Parses `"0"`, `"w2"`, `"2w1+w3"` or a comma list of Dynkin labels `"0,2"`.
    pub fn parse_weight(&self, text: &str) -> Result<WeightVector> {
        let text = text.trim();
        if text.contains(',') {
            let labels: std::result::Result<Vec<i64>, _> = text.split(',').map(|t| t.trim().parse()).collect();
            return self.from_labels(&labels.map_err(|e| Error::Parse(format!("{text:?}: {e}")))?);
        }
        let mut labels = vec![0; self.rank];
        if text != "0" {
            for term in text.split('+') {
                let bad = || Error::Parse(format!("bad weight term {term:?} (expected like 2w1)"));
                let (c, k) = term.trim().split_once(['w', 'ω']).ok_or_else(bad)?;
                let c: i64 = if c.is_empty() { 1 } else { c.parse().map_err(|_| bad())? };
                let k: usize = k.parse().map_err(|_| bad())?;
                if k == 0 || k > self.rank {
                    return Err(bad());
                }
                labels[k - 1] += c;
            }
        }
        self.from_labels(&labels)
    }

    /// Renders a weight through its Dynkin labels, e.g. `2w1+w3`.
    pub fn fmt_weight(&self, v: &WeightVector) -> String {
        let parts: Vec<String> = self
            .labels(v)
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(i, &a)| if a == 1 { format!("w{}", i + 1) } else { format!("{a}w{}", i + 1) })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}

/// `(lambda, lambda + 2 rho) / (2 (k + h))`: the `L(0)`-eigenvalue on the top
/// of the affine module with finite highest weight `lambda` at level `k`.
pub fn lowest_conformal_weight(rs: &RootSystem, lambda: &WeightVector, k: &Scalar) -> Result<Scalar> {
    rs.check(lambda)?;
    let shifted = k + int(rs.dual_coxeter());
    if shifted.is_zero() {
        return Err(Error::CriticalLevel);
    }
    let num = rs.form(lambda, &(lambda + &rs.two_rho()));
    Ok(num / (int(2) * shifted))
}

impl WeightVector {
    /// `k * self`.
    pub fn scaled_by(&self, k: i64) -> Self {
        self.scaled(k)
    }
}
