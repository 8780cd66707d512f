use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{frac, int, Scalar};
use crate::opcalc::{sugawara, QuadraticElement};
use crate::rootdata::{RootSystem, WeightVector};
use crate::weylfock::{Charge, FockMonomial, FockVector, Mode};

/// Which free-field realization a table describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TableKind {
    /// `C_l` at level -1 inside `M_{2l}`.
    CLevelMinusOne,
    /// `A_{2l-1}` at level -1 inside `M_{2l}`.
    ALevelMinusOne,
    /// `l` commuting copies of `A_1` at level -1 inside `M_{2l}`.
    A1Power,
    /// `C_l` at level -1/2 inside `M_l`, built from `a^+ a^+` and `a^- a^-` pairs.
    CLevelMinusHalf,
}

impl TableKind {
    pub const ALL: [TableKind; 4] =
        [TableKind::CLevelMinusOne, TableKind::ALevelMinusOne, TableKind::A1Power, TableKind::CLevelMinusHalf];

    pub fn name(self) -> &'static str {
        match self {
            TableKind::CLevelMinusOne => "C",
            TableKind::ALevelMinusOne => "A",
            TableKind::A1Power => "A1^l",
            TableKind::CLevelMinusHalf => "C-half",
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown table {s:?} (expected C, A, A1^l or C-half)")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EntryKind {
    Raising,
    Lowering,
    Cartan,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub name: String,
    pub kind: EntryKind,
    /// Epsilon-coordinates of the root (zero for Cartan entries).
    pub root: WeightVector,
    /// Index of the simple factor the entry belongs to.
    pub factor: usize,
    pub element: QuadraticElement,
}

/// A basis of a simple (or semisimple) Lie algebra realized by weight-one
/// quadratic vectors, together with its level.
#[derive(Clone, Debug)]
pub struct GeneratorTable {
    kind: TableKind,
    ell: usize,
    entries: Vec<TableEntry>,
    /// Elements whose zero-mode eigenvalues are the epsilon-coordinates of a weight.
    eps_cartan: Vec<QuadraticElement>,
}

fn mono(modes: &[(u16, Charge)]) -> FockVector {
    FockVector::from(
        FockMonomial::from_modes(modes.iter().map(|&(s, c)| Mode::new(s, c, crate::exact::HalfInt::from_twice(-1))))
            .expect("creation modes"),
    )
}

/// `a_i^{c} (-1/2) a_j^{d} (-1/2) 1`.
fn ab(i: u16, c: Charge, j: u16, d: Charge) -> FockVector {
    mono(&[(i, c), (j, d)])
}

use Charge::{Minus as M, Plus as P};

fn comb(terms: &[(Scalar, FockVector)]) -> QuadraticElement {
    let mut v = FockVector::zero();
    for (c, x) in terms {
        v.add_scaled(c, x);
    }
    QuadraticElement::new(v).expect("table entries are quadratic")
}

fn eps(n: usize, plus: &[usize], minus: &[usize]) -> WeightVector {
    let mut v = vec![0; n];
    for &i in plus {
        v[i - 1] += 1;
    }
    for &i in minus {
        v[i - 1] -= 1;
    }
    WeightVector(v)
}

impl GeneratorTable {
    pub fn build(kind: TableKind, ell: usize) -> Result<Self> {
        if ell == 0 {
            return Err(Error::UnsupportedRank { what: "generator table", rank: ell });
        }
        let l = ell as u16;
        let bar = |i: u16| 2 * l + 1 - i;
        let half = frac(1, 2);
        let mut entries = Vec::new();
        let mut push = |name: String, kind: EntryKind, root: WeightVector, factor: usize, element: QuadraticElement| {
            entries.push(TableEntry { name, kind, root, factor, element })
        };
        let zero = WeightVector::zero(ell);
        let eps_cartan = match kind {
            TableKind::CLevelMinusOne => {
                for i in 1..=l {
                    let iu = i as usize;
                    push(format!("e_2e{i}"), EntryKind::Raising, eps(ell, &[iu, iu], &[]), 0, comb(&[(int(1), ab(i, P, bar(i), M))]));
                    push(format!("f_2e{i}"), EntryKind::Lowering, eps(ell, &[], &[iu, iu]), 0, comb(&[(int(1), ab(i, M, bar(i), P))]));
                }
                for i in 1..=l {
                    for j in i + 1..=l {
                        let (iu, ju) = (i as usize, j as usize);
                        push(
                            format!("e_e{i}+e{j}"),
                            EntryKind::Raising,
                            eps(ell, &[iu, ju], &[]),
                            0,
                            comb(&[(half.clone(), ab(i, P, bar(j), M)), (half.clone(), ab(j, P, bar(i), M))]),
                        );
                        push(
                            format!("f_e{i}+e{j}"),
                            EntryKind::Lowering,
                            eps(ell, &[], &[iu, ju]),
                            0,
                            comb(&[(half.clone(), ab(i, M, bar(j), P)), (half.clone(), ab(j, M, bar(i), P))]),
                        );
                        push(
                            format!("e_e{i}-e{j}"),
                            EntryKind::Raising,
                            eps(ell, &[iu], &[ju]),
                            0,
                            comb(&[(half.clone(), ab(i, P, j, M)), (-&half, ab(bar(j), P, bar(i), M))]),
                        );
                        push(
                            format!("f_e{i}-e{j}"),
                            EntryKind::Lowering,
                            eps(ell, &[ju], &[iu]),
                            0,
                            comb(&[(half.clone(), ab(j, P, i, M)), (-&half, ab(bar(i), P, bar(j), M))]),
                        );
                    }
                }
                let hs: Vec<_> = (1..=l).map(|i| comb(&[(int(-1), ab(i, P, i, M)), (int(1), ab(bar(i), P, bar(i), M))])).collect();
                for (i, h) in hs.iter().enumerate() {
                    push(format!("h_2e{}", i + 1), EntryKind::Cartan, zero.clone(), 0, h.clone());
                }
                hs
            }
            TableKind::ALevelMinusOne => {
                let n = 2 * ell;
                for i in 1..=2 * l {
                    for j in i + 1..=2 * l {
                        let (iu, ju) = (i as usize, j as usize);
                        push(format!("eA_e{i}-e{j}"), EntryKind::Raising, eps(n, &[iu], &[ju]), 0, comb(&[(int(1), ab(i, P, j, M))]));
                        push(format!("fA_e{i}-e{j}"), EntryKind::Lowering, eps(n, &[ju], &[iu]), 0, comb(&[(int(1), ab(i, M, j, P))]));
                    }
                }
                let big_h = |i: u16| comb(&[(int(-1), ab(i, P, i, M))]);
                for i in 1..2 * l {
                    let h = QuadraticElement::new(big_h(i).vector() - big_h(i + 1).vector()).unwrap();
                    push(format!("H{i}-H{}", i + 1), EntryKind::Cartan, WeightVector::zero(n), 0, h);
                }
                (1..=2 * l).map(big_h).collect()
            }
            TableKind::A1Power => {
                let mut hs = Vec::new();
                for i in 1..=l {
                    let iu = i as usize;
                    let f = iu - 1;
                    push(format!("e({i})"), EntryKind::Raising, eps(ell, &[iu, iu], &[]), f, comb(&[(int(1), ab(i, P, bar(i), M))]));
                    push(format!("f({i})"), EntryKind::Lowering, eps(ell, &[], &[iu, iu]), f, comb(&[(int(1), ab(i, M, bar(i), P))]));
                    let h = comb(&[(int(-1), ab(i, P, i, M)), (int(1), ab(bar(i), P, bar(i), M))]);
                    push(format!("h({i})"), EntryKind::Cartan, zero.clone(), f, h.clone());
                    hs.push(h);
                }
                hs
            }
            TableKind::CLevelMinusHalf => {
                for i in 1..=l {
                    let iu = i as usize;
                    push(format!("e_2e{i}"), EntryKind::Raising, eps(ell, &[iu, iu], &[]), 0, comb(&[(half.clone(), ab(i, P, i, P))]));
                    push(format!("f_2e{i}"), EntryKind::Lowering, eps(ell, &[], &[iu, iu]), 0, comb(&[(-&half, ab(i, M, i, M))]));
                }
                for i in 1..=l {
                    for j in i + 1..=l {
                        let (iu, ju) = (i as usize, j as usize);
                        push(format!("e_e{i}+e{j}"), EntryKind::Raising, eps(ell, &[iu, ju], &[]), 0, comb(&[(int(1), ab(i, P, j, P))]));
                        push(format!("f_e{i}+e{j}"), EntryKind::Lowering, eps(ell, &[], &[iu, ju]), 0, comb(&[(int(-1), ab(i, M, j, M))]));
                        push(format!("e_e{i}-e{j}"), EntryKind::Raising, eps(ell, &[iu], &[ju]), 0, comb(&[(int(1), ab(i, P, j, M))]));
                        push(format!("f_e{i}-e{j}"), EntryKind::Lowering, eps(ell, &[ju], &[iu]), 0, comb(&[(int(1), ab(j, P, i, M))]));
                    }
                }
                let hs: Vec<_> = (1..=l).map(|i| comb(&[(int(-1), ab(i, P, i, M))])).collect();
                for (i, h) in hs.iter().enumerate() {
                    push(format!("h_2e{}", i + 1), EntryKind::Cartan, zero.clone(), 0, h.clone());
                }
                hs
            }
        };
        Ok(GeneratorTable { kind, ell, entries, eps_cartan })
    }

    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Number of boson pairs of the ambient Fock space.
    pub fn pairs(&self) -> usize {
        match self.kind {
            TableKind::CLevelMinusHalf => self.ell,
            _ => 2 * self.ell,
        }
    }

    pub fn entries(&self) -> &[TableEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&QuadraticElement> {
        self.entries.iter().find(|e| e.name == name).map(|e| &e.element)
    }

    pub fn elements(&self) -> impl Iterator<Item = &QuadraticElement> {
        self.entries.iter().map(|e| &e.element)
    }

    pub fn eps_cartan(&self) -> &[QuadraticElement] {
        &self.eps_cartan
    }

    pub fn level(&self) -> Scalar {
        match self.kind {
            TableKind::CLevelMinusHalf => frac(-1, 2),
            _ => int(-1),
        }
    }

    /// Root system of a simple factor (every factor of `A1^l` is `C_1 = A_1`).
    pub fn root_system(&self) -> RootSystem {
        match self.kind {
            TableKind::CLevelMinusOne | TableKind::CLevelMinusHalf => RootSystem::c(self.ell),
            TableKind::ALevelMinusOne => RootSystem::a(2 * self.ell - 1),
            TableKind::A1Power => RootSystem::c(1),
        }
        .expect("rank >= 1")
    }

    pub fn dual_coxeter(&self) -> Scalar {
        int(self.root_system().dual_coxeter())
    }

    pub fn factor_count(&self) -> usize {
        match self.kind {
            TableKind::A1Power => self.ell,
            _ => 1,
        }
    }

    /// Table elements grouped by simple factor.
    pub fn factors(&self) -> Vec<Vec<QuadraticElement>> {
        (0..self.factor_count())
            .map(|f| self.entries.iter().filter(|e| e.factor == f).map(|e| e.element.clone()).collect())
            .collect()
    }

    /// The Sugawara Virasoro vector of the table.
    pub fn sugawara(&self) -> Result<FockVector> {
        sugawara(&self.factors(), &self.level(), &self.dual_coxeter())
    }
}

/// The Heisenberg elements `H^(i)`, their sum `H` and differences `Hbar^(i)`.
#[derive(Clone, Debug)]
pub struct CartanElements {
    pub h: Vec<QuadraticElement>,
    pub total: QuadraticElement,
    pub bar: Vec<QuadraticElement>,
}

/// `H^(i) = (a_i^+ a_i^- + a_{2l+1-i}^+ a_{2l+1-i}^-)(-1/2) 1` in `M_{2l}`.
pub fn cartan_elements(ell: usize) -> CartanElements {
    let l = ell as u16;
    let h: Vec<_> =
        (1..=l).map(|i| comb(&[(int(1), ab(i, P, i, M)), (int(1), ab(2 * l + 1 - i, P, 2 * l + 1 - i, M))])).collect();
    let total = h.iter().fold(FockVector::zero(), |acc, x| &acc + x.vector());
    let bar = h.windows(2).map(|w| QuadraticElement::new(w[0].vector() - w[1].vector()).unwrap()).collect();
    CartanElements { total: QuadraticElement::new(total).unwrap(), h, bar }
}

/// `e*_{e1+e2} = 1/2 (a_1^+ a_{2l-1}^- - a_2^+ a_{2l}^-)(-1/2) 1`.
pub fn estar(ell: usize) -> Result<QuadraticElement> {
    if ell < 2 {
        return Err(Error::UnsupportedRank { what: "e*", rank: ell });
    }
    let l = ell as u16;
    Ok(comb(&[(frac(1, 2), ab(1, P, 2 * l - 1, M)), (frac(-1, 2), ab(2, P, 2 * l, M))]))
}
