// The vacuum span of the A_3 table splits under theta into the C_2 span and
// the C_2-module generated by e*.

use weylvoa::commutant::{subalgebra_span, theta_split};
use weylvoa::exact::HalfInt;
use weylvoa::realization::{estar, GeneratorTable, TableKind};
use weylvoa::weylfock::FockVector;

pub fn run_example() -> weylvoa::Result<()> {
    let n = HalfInt::from_int(2);
    let vac = [FockVector::vacuum()];
    let a = GeneratorTable::build(TableKind::ALevelMinusOne, 2)?;
    let c = GeneratorTable::build(TableKind::CLevelMinusOne, 2)?;

    let big = subalgebra_span(&a, &vac, n);
    let split = theta_split(&big, 2)?;
    let even = subalgebra_span(&c, &vac, n);
    let odd = subalgebra_span(&c, &[estar(2)?.into_vector()], n);
    println!("A_3 span {big}");
    println!("theta-even {} = C_2 span: {}", split.even, split.even == even);
    println!("theta-odd  {} = e* span: {}", split.odd, split.odd == odd);
    Ok(())
}

#[allow(dead_code)]
fn main() -> weylvoa::Result<()> {
    run_example()
}
