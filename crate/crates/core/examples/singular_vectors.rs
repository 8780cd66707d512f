// Highest-weight vectors for the level -1 C_l table.

use weylvoa::exact::fmt_scalar;
use weylvoa::realization::{estar, singular_check, GeneratorTable, TableKind};
use weylvoa::weylfock::FockVector;

pub fn run_example() -> weylvoa::Result<()> {
    let table = GeneratorTable::build(TableKind::CLevelMinusOne, 3)?;
    let mut candidates = vec![("e*".to_string(), estar(3)?.into_vector())];
    for n in 1..=3 {
        let text = vec!["a1+(-1/2)"; n].join(" ");
        candidates.push((format!("{text} 1"), FockVector::modes(weylvoa::exact::int(1), &text)?));
    }
    candidates.push(("a1-(-1/2) 1".into(), FockVector::modes(weylvoa::exact::int(1), "a1-(-1/2)")?));

    for (name, v) in candidates {
        let r = singular_check(&v, &table)?;
        match (&r.weight, r.singular) {
            (Some(w), true) => println!(
                "{name}: singular, weight {w}, L(0) = {}",
                r.sugawara_weight.as_ref().map(fmt_scalar).unwrap_or_default()
            ),
            _ => println!("{name}: not singular ({})", r.reason.unwrap_or_default()),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> weylvoa::Result<()> {
    run_example()
}
