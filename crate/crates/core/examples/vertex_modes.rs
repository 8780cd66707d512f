// Modes of quadratic currents: brackets, level pairings and the general
// normally ordered product.

use weylvoa::exact::{fmt_scalar, HalfInt};
use weylvoa::opcalc::{bracket, level_pairing, mode, mode_action, QuadraticElement};
use weylvoa::weylfock::FockVector;

pub fn run_example() -> weylvoa::Result<()> {
    // sl_2 at level -1/2 inside M_1
    let e = QuadraticElement::parse("[1/2] a1+(-1/2) a1+(-1/2) |0>")?;
    let f = QuadraticElement::parse("[-1/2] a1-(-1/2) a1-(-1/2) |0>")?;
    let h = QuadraticElement::parse("[-1] a1+(-1/2) a1-(-1/2) |0>")?;
    println!("[e, f] = {}", bracket(&e, &f));
    println!("[h, e] = {}", bracket(&h, &e));
    println!("<e, f> = {}", fmt_scalar(&level_pairing(&e, &f)));
    println!("<h, h> = {}", fmt_scalar(&level_pairing(&h, &h)));

    // e(-1) f(-1) 1 and the action of e(1) on it
    let ef = mode(e.vector(), -1, &mode_action(&f, -1, &FockVector::vacuum()));
    println!("e(-1) f(-1) 1 = {ef}");
    println!("weight {}", ef.homogeneous_weight().unwrap_or(HalfInt::ZERO));
    println!("e(1) e(-1) f(-1) 1 = {}", mode_action(&e, 1, &ef));
    Ok(())
}

#[allow(dead_code)]
fn main() -> weylvoa::Result<()> {
    run_example()
}
