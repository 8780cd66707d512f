//! Each suite turns one family of statements into report checks. Library
//! errors (bad ranks, unparsable weights) propagate and become usage errors.

use std::collections::BTreeSet;

use super::report::{Check, Status};
use crate::commutant::{subalgebra_span, theta_split, Coset};
use crate::error::Result;
use crate::exact::{fmt_scalar, frac, int, HalfInt, Scalar};
use crate::realization::{
    classify_box, delta3_terms, estar, singular_check, virasoro_decompositions, GeneratorTable, TableKind,
};
use crate::rootdata::{
    branch_a_to_c, dominant_character, full_character, lowest_conformal_weight, tensor_decompose, weyl_dim,
    RootSystem, RootType, WeightVector,
};
use crate::weylfock::{FockMonomial, FockVector, Mode};

fn pass_fail(ok: bool) -> Status {
    Status::from_bool(ok)
}

fn skip(name: &str, anchor: &str, why: &str) -> Check {
    Check::new(name, anchor, Status::Skip, why)
}

pub fn virasoro(ell: usize) -> Result<Vec<Check>> {
    Ok(virasoro_decompositions(ell)?
        .into_iter()
        .map(|c| {
            let subs = c.sub_checks.len();
            let good = c.sub_checks.iter().filter(|s| s.passed).count();
            let mut details = format!("difference {}", c.difference);
            if subs > 0 {
                details.push_str(&format!("; {good}/{subs} sub-identities hold"));
            }
            for s in c.sub_checks.iter().filter(|s| !s.passed) {
                details.push_str(&format!("; {} fails by {}", s.name, s.difference));
            }
            Check::new(c.name.clone(), c.statement.clone(), pass_fail(c.all_passed()), details)
        })
        .collect())
}

fn singular_case(name: String, anchor: &str, v: &FockVector, table: &GeneratorTable, label: Option<&str>) -> Result<Check> {
    let r = singular_check(v, table)?;
    let shown = r.weight.as_ref().map_or_else(|| "-".to_string(), ToString::to_string);
    let conformal = match (&r.sugawara_weight, &r.expected_weight) {
        (Some(a), Some(b)) => format!("; L(0) = {}, lowest conformal weight {}", fmt_scalar(a), fmt_scalar(b)),
        _ => String::new(),
    };
    let (ok, details) = match label {
        Some(label) => {
            let ok = r.singular && shown == label && r.sugawara_weight.is_some() && r.sugawara_weight == r.expected_weight;
            (ok, format!("singular = {}, weight {shown} (expected {label}){conformal}", r.singular))
        }
        None => (!r.singular, format!("not singular: {}", r.reason.unwrap_or_default())),
    };
    Ok(Check::new(name, anchor, pass_fail(ok), details))
}

pub fn singular(ell: usize) -> Result<Vec<Check>> {
    let table = GeneratorTable::build(TableKind::CLevelMinusOne, ell)?;
    let mut out = Vec::new();
    for n in 1..=3usize {
        let v = FockVector::from(FockMonomial::from_modes(std::iter::repeat_n(Mode::plus(1, -1), n))?);
        let label = if n == 1 { "-2L0+L1".to_string() } else { format!("-{}L0+{n}L1", n + 1) };
        out.push(singular_case(
            format!("a1+(-1/2)^{n} 1 is singular"),
            "powers of a_1^+(-1/2) are singular of weight -(n+1)L0 + nL1",
            &v,
            &table,
            Some(&label),
        )?);
    }
    if ell >= 2 {
        out.push(singular_case(
            "e* is singular".into(),
            "e*_{e1+e2} is singular of weight -2L0 + L2",
            estar(ell)?.vector(),
            &table,
            Some("-2L0+L2"),
        )?);
    } else {
        out.push(skip("e* is singular", "e*_{e1+e2} is singular of weight -2L0 + L2", "needs l >= 2"));
    }
    let v = FockVector::from(FockMonomial::from_modes([Mode::minus(1, -1)])?);
    out.push(singular_case("a1-(-1/2) 1 is not singular".into(), "negative control", &v, &table, None)?);
    Ok(out)
}

pub fn delta3(ell: usize) -> Result<Vec<Check>> {
    let anchor = "Delta_3(-1) 1 vanishes in the free-field realization";
    if ell < 3 {
        return Ok(vec![skip("Delta_3(-1) 1 = 0", anchor, "needs l >= 3")]);
    }
    let terms = delta3_terms(ell)?;
    let total = terms.iter().fold(FockVector::zero(), |acc, t| &acc + t);
    let nonzero_terms = terms.iter().filter(|t| !t.is_zero()).count();
    let partial_nonzero =
        (0..terms.len()).filter(|&k| !(&total - &terms[k]).is_zero()).count();
    Ok(vec![
        Check::new(
            format!("Delta_3(-1) 1 = 0 in M_{}", 2 * ell),
            anchor,
            pass_fail(total.is_zero()),
            format!("sum of 6 signed products has {} terms; {nonzero_terms}/6 products nonzero", total.len()),
        ),
        Check::new(
            "every determinant term is needed",
            "negative control: dropping any product leaves a nonzero vector",
            pass_fail(partial_nonzero == terms.len()),
            format!("{partial_nonzero}/{} partial sums nonzero", terms.len()),
        ),
    ])
}

pub fn classify(ell: usize, bound: u32) -> Result<Vec<Check>> {
    let anchor = "ordinary modules: p_i = q_i = r_i = 0 only at (n,0,..,0) and (1,1,0,..,0)";
    if ell < 3 {
        return Ok(vec![skip("classification box", anchor, "needs l >= 3")]);
    }
    let found = classify_box(ell, bound)?;
    let mut expected: BTreeSet<Vec<i64>> = (0..=bound as i64)
        .map(|n| {
            let mut h = vec![0; ell];
            h[0] = n;
            h
        })
        .collect();
    if bound >= 1 {
        let mut h = vec![0; ell];
        h[0] = 1;
        h[1] = 1;
        expected.insert(h);
    }
    let ok = found.iter().cloned().collect::<BTreeSet<_>>() == expected && found.len() == expected.len();
    let shown: Vec<String> = found.iter().map(|h| format!("({})", join(h))).collect();
    Ok(vec![Check::new(
        format!("classification box l={ell}, bound {bound}"),
        anchor,
        pass_fail(ok),
        format!("{} solutions: {}", found.len(), shown.join(" ")),
    )])
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn show_decomposition(rs: &RootSystem, d: &[(WeightVector, u64)]) -> String {
    d.iter()
        .map(|(v, m)| if *m == 1 { rs.fmt_weight(v) } else { format!("{m}x{}", rs.fmt_weight(v)) })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn decomposition_check(
    name: String,
    anchor: &str,
    rs: &RootSystem,
    got: &[(WeightVector, u64)],
    expected: Option<&[&str]>,
    dim: u64,
) -> Result<Check> {
    let total: u64 = got.iter().map(|(v, m)| Ok(m * weyl_dim(rs, v)?)).sum::<Result<u64>>()?;
    let mut ok = total == dim;
    if let Some(expected) = expected {
        let want: BTreeSet<(WeightVector, u64)> =
            expected.iter().map(|s| Ok((rs.parse_weight(s)?, 1))).collect::<Result<_>>()?;
        ok &= got.iter().cloned().collect::<BTreeSet<_>>() == want && got.len() == want.len();
    }
    Ok(Check::new(name, anchor, pass_fail(ok), format!("{} (dimension {total} of {dim})", show_decomposition(rs, got))))
}

/// The tensor products quoted for `C_l` at desk scale.
pub const TENSOR_CASES: [(usize, &str, &str, &[&str]); 6] = [
    (2, "w2", "w2", &["2w2", "2w1", "0"]),
    (3, "w2", "w2", &["2w2", "w1+w3", "2w1", "w2", "0"]),
    (4, "w2", "w2", &["2w2", "w1+w3", "w4", "2w1", "w2", "0"]),
    (3, "w1", "w2", &["w1+w2", "w3", "w1"]),
    (3, "2w1", "w2", &["2w1+w2", "w1+w3", "2w1", "w2"]),
    (3, "3w1", "w2", &["3w1+w2", "2w1+w3", "3w1", "w1+w2"]),
];

pub fn tensor(kind: RootType, rank: usize, lhs: Option<&str>, rhs: Option<&str>) -> Result<Vec<Check>> {
    let anchor = "tensor product multiplicities by Klimyk's formula";
    if let (Some(l), Some(r)) = (lhs, rhs) {
        let rs = RootSystem::new(kind, rank)?;
        let (x, y) = (rs.parse_weight(l)?, rs.parse_weight(r)?);
        let d = tensor_decompose(&rs, &x, &y)?;
        let dim = weyl_dim(&rs, &x)? * weyl_dim(&rs, &y)?;
        return Ok(vec![decomposition_check(format!("{} {l} (x) {r}", rs.name()), anchor, &rs, &d, None, dim)?]);
    }
    TENSOR_CASES
        .iter()
        .map(|&(l, x, y, expect)| {
            let rs = RootSystem::c(l)?;
            let (a, b) = (rs.parse_weight(x)?, rs.parse_weight(y)?);
            let d = tensor_decompose(&rs, &a, &b)?;
            let dim = weyl_dim(&rs, &a)? * weyl_dim(&rs, &b)?;
            decomposition_check(format!("{} {x} (x) {y}", rs.name()), anchor, &rs, &d, Some(expect), dim)
        })
        .collect()
}

pub fn branch(ell: usize, lhs: Option<&str>) -> Result<Vec<Check>> {
    let anchor = "restriction from A_{2l-1} to C_l";
    if ell < 2 {
        return Ok(vec![skip("branching", anchor, "needs l >= 2")]);
    }
    let a = RootSystem::a(2 * ell - 1)?;
    let c = RootSystem::c(ell)?;
    let case = |lambda: &WeightVector, expect: Option<Vec<String>>| -> Result<Check> {
        let d = branch_a_to_c(ell, lambda)?;
        let expect_refs: Option<Vec<&str>> = expect.as_ref().map(|e| e.iter().map(String::as_str).collect());
        decomposition_check(
            format!("{} {} -> {}", a.name(), a.fmt_weight(lambda), c.name()),
            anchor,
            &c,
            &d,
            expect_refs.as_deref(),
            weyl_dim(&a, lambda)?,
        )
    };
    if let Some(l) = lhs {
        return Ok(vec![case(&a.parse_weight(l)?, None)?]);
    }
    let top = 2 * ell - 1;
    let mut out = vec![case(&a.parse_weight(&format!("w1+w{top}"))?, Some(vec!["2w1".into(), "w2".into()]))?];
    for n in 1..=4 {
        let image = if n == 1 { "w1".to_string() } else { format!("{n}w1") };
        out.push(case(&a.fundamental(1).scaled_by(n), Some(vec![image.clone()]))?);
        out.push(case(&a.fundamental(top).scaled_by(n), Some(vec![image]))?);
    }
    Ok(out)
}

pub fn chars(kind: RootType, rank: usize, lhs: Option<&str>) -> Result<Vec<Check>> {
    if let Some(l) = lhs {
        let rs = RootSystem::new(kind, rank)?;
        let lambda = rs.parse_weight(l)?;
        let dom = dominant_character(&rs, &lambda)?;
        let total: u64 = full_character(&rs, &lambda)?.values().sum();
        let dim = weyl_dim(&rs, &lambda)?;
        let shown: Vec<String> = dom.iter().rev().map(|(w, m)| format!("{}:{m}", rs.fmt_weight(w))).collect();
        return Ok(vec![Check::new(
            format!("{} character of {l}", rs.name()),
            "Freudenthal multiplicities sum to the Weyl dimension",
            pass_fail(total == dim),
            format!("dominant multiplicities {}; {total} weights, Weyl dimension {dim}", shown.join(" ")),
        )]);
    }
    // lowest conformal weights at level -1
    let rs = RootSystem::c(rank)?;
    let mut cases: Vec<(&str, Scalar)> = vec![("2w1", frac(rank as i64 + 1, rank as i64))];
    if rank >= 2 {
        cases.push(("w2", int(1)));
    }
    if rank == 2 {
        cases.push(("2w2", frac(5, 2)));
    }
    cases
        .into_iter()
        .map(|(w, expect)| {
            let got = lowest_conformal_weight(&rs, &rs.parse_weight(w)?, &int(-1))?;
            Ok(Check::new(
                format!("conformal weight of -L0+{w} for {}", rs.name()),
                "(lambda, lambda + 2 rho) / (2 (k + h)) at k = -1",
                pass_fail(got == expect),
                format!("{} (expected {})", fmt_scalar(&got), fmt_scalar(&expect)),
            ))
        })
        .collect()
}

pub fn commutant(ell: usize, n: HalfInt, coset: Option<Coset>) -> Result<Vec<Check>> {
    let cosets: Vec<Coset> = match coset {
        Some(c) => vec![c],
        None => Coset::ALL.into_iter().filter(|c| ell >= 2 || *c != Coset::A1InC).collect(),
    };
    cosets
        .into_iter()
        .map(|c| {
            let r = c.run(ell, n)?;
            let mut details = format!("dims {} at weights 0..{}", join(&r.integer_dims()), n.floor());
            let half: Vec<String> =
                r.dims.iter().filter(|(w, d)| !w.is_integer() && *d > 0).map(|(w, d)| format!("{w}:{d}")).collect();
            if !half.is_empty() {
                details.push_str(&format!(", half-integer weights {}", half.join(" ")));
            }
            details.push_str(&format!("; {}", r.comparison));
            if !r.witnesses_contained {
                details.push_str("; Heisenberg generators missing");
            }
            if r.recheck_failures > 0 {
                details.push_str(&format!("; {} re-check failures", r.recheck_failures));
            }
            let anchor = match c {
                Coset::A1InFock => "Com(A1^l, M_2l) is the rank-l Heisenberg algebra",
                Coset::A1InEvenEven => "Com(A1^l, M_l^0 (x) M_l^0) is its theta-fixed part M(1)^+",
                Coset::CInFock => "Com(C_l, M_2l) is the rank-one Heisenberg algebra of H",
                Coset::CInEvenEven => "Com(C_l, M_l^0 (x) M_l^0) is M(1)^+ for H",
                Coset::A1InC => "Com(A1^l, C_l span) is M(1)^+ for the Hbar^(i)",
            };
            Ok(Check::new(format!("commutant {c} (l={ell})"), anchor, pass_fail(r.passed()), details))
        })
        .collect()
}

pub fn span(ell: usize, n: HalfInt) -> Result<Vec<Check>> {
    let anchor = "the A_{2l-1} vacuum span splits under theta into the C_l span and the module of e*";
    if ell < 2 {
        return Ok(vec![skip("theta splits the A span", anchor, "needs l >= 2")]);
    }
    let vac = [FockVector::vacuum()];
    let a = GeneratorTable::build(TableKind::ALevelMinusOne, ell)?;
    let c = GeneratorTable::build(TableKind::CLevelMinusOne, ell)?;
    let big = subalgebra_span(&a, &vac, n);
    let even = subalgebra_span(&c, &vac, n);
    let odd = subalgebra_span(&c, &[estar(ell)?.into_vector()], n);
    let split = theta_split(&big, ell)?;
    let d = |s: &crate::commutant::GradedSubspace| join(&s.integer_dims());
    Ok(vec![
        Check::new(
            "theta-even part = C span",
            anchor,
            pass_fail(split.even == even),
            format!("A span dims {}; even {} ; C span {}", d(&big), d(&split.even), d(&even)),
        ),
        Check::new(
            "theta-odd part = e* span",
            anchor,
            pass_fail(split.odd == odd),
            format!("odd {}; e* span {}", d(&split.odd), d(&odd)),
        ),
    ])
}
