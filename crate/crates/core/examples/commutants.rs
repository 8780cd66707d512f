// Commutants of generator tables, compared with Heisenberg characters.

use weylvoa::commutant::{commutant_dims, compare_series, AmbientSpec, Coset};
use weylvoa::exact::{heisenberg_series, HalfInt};
use weylvoa::realization::{cartan_elements, GeneratorTable, TableKind};

pub fn run_example() -> weylvoa::Result<()> {
    let n = HalfInt::from_int(3);
    let c = GeneratorTable::build(TableKind::CLevelMinusOne, 2)?;
    let com = commutant_dims(&c, &AmbientSpec::full(4), n)?;
    println!("Com(C_2, M_4) graded dims: {com}");
    println!("vs free boson: {}", compare_series(&com.dims(), &heisenberg_series(1, n)));
    println!("H in the commutant: {}", com.contains(cartan_elements(2).total.vector()));

    for coset in Coset::ALL {
        let r = coset.run(2, n)?;
        println!("{:<8} in {:<40} dims {:?} -> {}", coset.name(), r.ambient, r.integer_dims(), r.comparison);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> weylvoa::Result<()> {
    run_example()
}
