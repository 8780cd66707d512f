// Virasoro vectors: the free-field one, the Sugawara vectors of the
// generator tables, and the exact identities relating them.

use weylvoa::exact::{fmt_scalar, HalfInt};
use weylvoa::opcalc::{central_charge, free_virasoro, virasoro_axioms};
use weylvoa::realization::{virasoro_decompositions, GeneratorTable, TableKind};

pub fn run_example() -> weylvoa::Result<()> {
    let omega = free_virasoro(2);
    let report = virasoro_axioms(omega.vector(), HalfInt::from_int(2));
    println!("free-field omega in M_2: c = {}, axioms hold: {}", fmt_scalar(&report.central_charge), report.passed());

    let c = GeneratorTable::build(TableKind::CLevelMinusOne, 2)?;
    let sug = c.sugawara()?;
    println!("C_2 Sugawara vector has {} terms, c = {}", sug.len(), fmt_scalar(&central_charge(&sug)));

    for ell in 1..=3 {
        for check in virasoro_decompositions(ell)? {
            println!("l={ell} {:<40} {}", check.name, if check.all_passed() { "holds" } else { "FAILS" });
            assert!(check.all_passed());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> weylvoa::Result<()> {
    run_example()
}
