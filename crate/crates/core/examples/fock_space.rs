// Vectors of the Weyl Fock space, single-mode actions, the graded basis and
// the involution theta.

use weylvoa::exact::{fock_series, int, HalfInt};
use weylvoa::weylfock::{apply_mode, b_to_a, graded_basis, theta, FockMonomial, FockVector, Mode};

pub fn run_example() -> weylvoa::Result<()> {
    let v = FockVector::modes(int(1), "a1+(-1/2) a2-(-3/2)")?;
    println!("v = {v}, weight {}", v.homogeneous_weight().unwrap());

    // a1-(1/2) removes a1+(-1/2); a2+(3/2) removes a2-(-3/2) with a sign
    println!("a1-(1/2) v = {}", apply_mode(Mode::minus(1, 1), &v));
    println!("a2+(3/2) v = {}", apply_mode(Mode::plus(2, 3), &v));

    let top = HalfInt::from_int(2);
    let series = fock_series(2, top);
    for w in top.steps_up_to() {
        let n = graded_basis(2, w, None).len();
        println!("dim M_2 at weight {w}: {n} (character says {})", series.coeff(w));
        assert_eq!(series.coeff(w), (n as i64).into());
    }

    let t = theta(&v, 1)?;
    println!("theta(v) = {t}");
    assert_eq!(theta(&t, 1)?, v);

    let b = FockMonomial::from_modes([Mode::plus(1, -1), Mode::minus(2, -1)])?;
    let (a, scale) = b_to_a(&b, 1)?;
    println!("b1+ b2- in the a-basis: {a} (scaled by {scale})");
    Ok(())
}

#[allow(dead_code)]
fn main() -> weylvoa::Result<()> {
    run_example()
}
