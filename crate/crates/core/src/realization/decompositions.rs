use serde::Serialize;

use super::{cartan_elements, GeneratorTable, TableKind};
use crate::error::{Error, Result};
use crate::exact::{frac, int, Scalar};
use crate::opcalc::{central_charge, free_virasoro, heisenberg_virasoro, mode};
use crate::weylfock::{FockMonomial, FockVector, Mode};

/// One exact vector identity `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    /// The identity being verified, in words.
    pub statement: String,
    pub passed: bool,
    /// `lhs - rhs`, rendered; `"0"` on success.
    pub difference: String,
    /// Identities checked on the way.
    pub sub_checks: Vec<IdentityCheck>,
}

impl IdentityCheck {
    fn new(name: &str, statement: &str, lhs: &FockVector, rhs: &FockVector) -> Self {
        let d = lhs - rhs;
        IdentityCheck {
            name: name.into(),
            statement: statement.into(),
            passed: d.is_zero(),
            difference: d.to_string(),
            sub_checks: Vec::new(),
        }
    }

    fn scalar(name: &str, statement: &str, lhs: Scalar, rhs: Scalar) -> Self {
        let d = lhs - rhs;
        IdentityCheck {
            name: name.into(),
            statement: statement.into(),
            passed: d == int(0),
            difference: crate::exact::fmt_scalar(&d),
            sub_checks: Vec::new(),
        }
    }

    /// True when this check and all sub-checks pass.
    pub fn all_passed(&self) -> bool {
        self.passed && self.sub_checks.iter().all(IdentityCheck::all_passed)
    }
}

fn sq(u: &FockVector) -> FockVector {
    mode(u, -1, u)
}

fn sym(x: &FockVector, y: &FockVector) -> FockVector {
    &mode(x, -1, y) + &mode(y, -1, x)
}

fn m(modes: &[(u16, char, i32)]) -> FockVector {
    let ms = modes.iter().map(|&(s, c, d)| if c == '+' { Mode::plus(s, d) } else { Mode::minus(s, d) });
    FockVector::from(FockMonomial::from_modes(ms).unwrap())
}

/// `1/2 sum_{s in S} (a_s^-(-3/2) a_s^+(-1/2) - a_s^+(-3/2) a_s^-(-1/2))`.
fn free_part(species: &[u16], c: Scalar) -> FockVector {
    let mut v = FockVector::zero();
    for &s in species {
        v.add_scaled(&c, &m(&[(s, '-', -3), (s, '+', -1)]));
        v.add_scaled(&-&c, &m(&[(s, '+', -3), (s, '-', -1)]));
    }
    v
}

/// The three Virasoro-vector identities in `M_{2l}`:
/// the `A_1^l` Sugawara plus Heisenberg split, the `C_l` Sugawara plus `H`
/// split, and equality of the `C_l` and `A_{2l-1}` Sugawara vectors. For
/// `l = 1` only the first applies.
pub fn virasoro_decompositions(ell: usize) -> Result<Vec<IdentityCheck>> {
    if ell == 0 {
        return Err(Error::UnsupportedRank { what: "Virasoro decomposition", rank: ell });
    }
    let l = ell as i64;
    let omega = free_virasoro(2 * ell).into_vector();
    let ce = cartan_elements(ell);
    let mut out = Vec::new();

    // A_1^l
    let t = GeneratorTable::build(TableKind::A1Power, ell)?;
    let w1 = t.sugawara()?;
    let gram: Vec<Vec<Scalar>> =
        (0..ell).map(|i| (0..ell).map(|j| int(if i == j { -2 } else { 0 })).collect()).collect();
    let w2 = heisenberg_virasoro(&ce.h, &gram)?;
    let mut check = IdentityCheck::new(
        "omega = omega_1(A1^l) + omega_2(h)",
        "free-field Virasoro vector of M_2l splits as A_1^l Sugawara plus -1/4 sum H^(i)(-1)^2",
        &omega,
        &(&w1 + &w2),
    );
    let mut explicit = FockVector::zero();
    for i in 1..=ell {
        let (e, f, h) = (t.get(&format!("e({i})")).unwrap(), t.get(&format!("f({i})")).unwrap(), t.get(&format!("h({i})")).unwrap());
        explicit.add_scaled(&frac(1, 2), &sym(e.vector(), f.vector()));
        explicit.add_scaled(&frac(1, 4), &sq(h.vector()));
    }
    check.sub_checks.push(IdentityCheck::new(
        "omega_1(A1^l) explicit",
        "Sugawara vector equals 1/2 sum (e(-1)f(-1) + f(-1)e(-1) + 1/2 h(-1)^2) 1",
        &w1,
        &explicit,
    ));
    let mut w2_explicit = FockVector::zero();
    for h in &ce.h {
        w2_explicit.add_scaled(&frac(-1, 4), &sq(h.vector()));
    }
    check.sub_checks.push(IdentityCheck::new("omega_2(h) explicit", "omega_2 = -1/4 sum H^(i)(-1)^2 1", &w2, &w2_explicit));
    check.sub_checks.push(IdentityCheck::scalar("c(omega_1) + c(omega_2) = -2l", "central charges add up", central_charge(&w1) + central_charge(&w2), int(-2 * l)));
    out.push(check);

    if ell < 2 {
        return Ok(out);
    }

    // C_l
    let c = GeneratorTable::build(TableKind::CLevelMinusOne, ell)?;
    let w1c = c.sugawara()?;
    let big_h = ce.total.vector();
    let w2c = heisenberg_virasoro(std::slice::from_ref(&ce.total), &[vec![int(-2 * l)]])?;
    let mut check = IdentityCheck::new(
        "omega = omega_1(C_l) + omega_2(H)",
        "free-field Virasoro vector of M_2l splits as C_l Sugawara plus -1/(4l) H(-1)^2",
        &omega,
        &(&w1c + &w2c),
    );
    check.sub_checks.push(IdentityCheck::new(
        "omega_2(H) explicit",
        "omega_2 = -1/(4l) H(-1)^2 1",
        &w2c,
        &sq(big_h).scaled(&frac(-1, 4 * l)),
    ));
    check.sub_checks.push(IdentityCheck::new(
        "omega_1(C_l) closed form",
        "omega_1 = free-field Virasoro vector + 1/(4l) H(-1)^2 1",
        &w1c,
        &(&omega + &sq(big_h).scaled(&frac(1, 4 * l))),
    ));
    check.sub_checks.extend(expansion_checks(&c, ell, &w1c));
    check.sub_checks.push(IdentityCheck::scalar(
        "c(omega_1) = -(2l+1)",
        "central charge k dim g / (k + h) at k = -1",
        central_charge(&w1c),
        int(-(2 * l + 1)),
    ));
    check.sub_checks.push(IdentityCheck::scalar("c(omega_2) = 1", "rank-one Heisenberg central charge", central_charge(&w2c), int(1)));
    out.push(check);

    // A_{2l-1}
    let a = GeneratorTable::build(TableKind::ALevelMinusOne, ell)?;
    let w1a = a.sugawara()?;
    out.push(IdentityCheck::new(
        "omega_1(C_l) = omega_1(A_2l-1)",
        "the C_l and A_2l-1 Sugawara vectors at level -1 coincide",
        &w1c,
        &w1a,
    ));
    Ok(out)
}

/// The term-by-term expansion of the `C_l` Sugawara vector, and the three
/// quartic expansions for the pair `(i, j) = (1, 2)`.
fn expansion_checks(c: &GeneratorTable, ell: usize, w1c: &FockVector) -> Vec<IdentityCheck> {
    let l = ell as i64;
    let g = |name: String| c.get(&name).unwrap().vector().clone();
    let mut sum = FockVector::zero();
    for i in 1..=ell {
        sum += &sym(&g(format!("e_2e{i}")), &g(format!("f_2e{i}")));
        sum.add_scaled(&frac(1, 2), &sq(&g(format!("h_2e{i}"))));
        for j in i + 1..=ell {
            sum.add_scaled(&int(2), &sym(&g(format!("e_e{i}+e{j}")), &g(format!("f_e{i}+e{j}"))));
            sum.add_scaled(&int(2), &sym(&g(format!("e_e{i}-e{j}")), &g(format!("f_e{i}-e{j}"))));
        }
    }
    let mut out = vec![IdentityCheck::new(
        "Sugawara expansion",
        "omega_1 = 1/(2l) (sum over roots of e(-1)f(-1) + f(-1)e(-1) with weights 1, 2, 2, plus 1/2 sum h(-1)^2) 1",
        w1c,
        &sum.scaled(&frac(1, 2 * l)),
    )];

    let (i, j) = (1u16, 2u16);
    let bar = |s: u16| 2 * ell as u16 + 1 - s;
    let (bi, bj) = (bar(i), bar(j));
    let q = |a: (u16, char), b: (u16, char), c2: (u16, char), d: (u16, char)| {
        m(&[(a.0, a.1, -1), (b.0, b.1, -1), (c2.0, c2.1, -1), (d.0, d.1, -1)])
    };

    let lhs = sym(&g(format!("e_2e{i}")), &g(format!("f_2e{i}")));
    let mut rhs = q((i, '+'), (i, '-'), (bi, '+'), (bi, '-')).scaled(&int(2));
    rhs += &free_part(&[i, bi], int(1));
    out.push(IdentityCheck::new("e_2e1 f_2e1 expansion", "(e_2ei(-1)f_2ei(-1) + f_2ei(-1)e_2ei(-1)) 1 in free fields", &lhs, &rhs));

    let lhs = sym(&g(format!("e_e{i}+e{j}")), &g(format!("f_e{i}+e{j}"))).scaled(&int(2));
    let mut rhs = q((i, '+'), (i, '-'), (bj, '+'), (bj, '-'));
    rhs += &q((i, '+'), (j, '-'), (bj, '-'), (bi, '+'));
    rhs += &q((i, '-'), (j, '+'), (bi, '-'), (bj, '+'));
    rhs += &q((j, '+'), (j, '-'), (bi, '+'), (bi, '-'));
    rhs += &free_part(&[i, j, bi, bj], frac(1, 2));
    out.push(IdentityCheck::new("e_e1+e2 f_e1+e2 expansion", "2(e(-1)f(-1) + f(-1)e(-1)) 1 for ei+ej in free fields", &lhs, &rhs));

    let lhs = sym(&g(format!("e_e{i}-e{j}")), &g(format!("f_e{i}-e{j}"))).scaled(&int(2));
    let mut rhs = q((i, '+'), (i, '-'), (j, '+'), (j, '-'));
    rhs -= &q((j, '+'), (i, '-'), (bj, '+'), (bi, '-'));
    rhs -= &q((i, '+'), (j, '-'), (bi, '+'), (bj, '-'));
    rhs += &q((bi, '+'), (bi, '-'), (bj, '+'), (bj, '-'));
    rhs += &free_part(&[i, j, bi, bj], frac(1, 2));
    out.push(IdentityCheck::new("e_e1-e2 f_e1-e2 expansion", "2(e(-1)f(-1) + f(-1)e(-1)) 1 for ei-ej in free fields", &lhs, &rhs));
    out
}
