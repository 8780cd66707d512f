// The Delta_3 determinant and the highest weights it allows.

use weylvoa::exact::{fmt_scalar, int};
use weylvoa::realization::{classification_polys, classify_box, delta3_terms, delta3_vector};

pub fn run_example() -> weylvoa::Result<()> {
    for ell in [3, 4] {
        let terms = delta3_terms(ell)?;
        let sizes: Vec<usize> = terms.iter().map(|t| t.len()).collect();
        println!("l={ell}: products have {sizes:?} terms, Delta_3(-1) 1 = {}", delta3_vector(ell)?);
    }

    let values = classification_polys(&[int(0), int(1), int(0)])?;
    for v in &values {
        println!("h = (0,1,0): p{} = {}, q{} = {}, r{} = {}", v.i, fmt_scalar(&v.p), v.i, fmt_scalar(&v.q), v.i, fmt_scalar(&v.r));
    }

    let sols = classify_box(3, 8)?;
    println!("{} weights in [0,8]^3 survive: {sols:?}", sols.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> weylvoa::Result<()> {
    run_example()
}
