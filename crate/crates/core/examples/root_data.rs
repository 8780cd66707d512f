// Weyl dimensions, characters, tensor products and the A_{2l-1} -> C_l
// branching.

use weylvoa::exact::{fmt_scalar, int};
use weylvoa::rootdata::{
    branch_a_to_c, dominant_character, lowest_conformal_weight, tensor_decompose, weyl_dim, RootSystem,
};

pub fn run_example() -> weylvoa::Result<()> {
    let c3 = RootSystem::c(3)?;
    let w2 = c3.parse_weight("w2")?;
    println!("dim V(w2) for C3 = {}", weyl_dim(&c3, &w2)?);
    for (mu, m) in dominant_character(&c3, &c3.parse_weight("2w1")?)? {
        println!("  mult of {} in V(2w1): {m}", c3.fmt_weight(&mu));
    }

    let parts: Vec<String> =
        tensor_decompose(&c3, &w2, &w2)?.iter().map(|(v, m)| format!("{m}x V({})", c3.fmt_weight(v))).collect();
    println!("V(w2) (x) V(w2) = {}", parts.join(" + "));

    let a5 = RootSystem::a(5)?;
    let adj = a5.parse_weight("w1+w5")?;
    let parts: Vec<String> = branch_a_to_c(3, &adj)?.iter().map(|(v, m)| format!("{m}x V({})", c3.fmt_weight(v))).collect();
    println!("sl_6 adjoint restricted to sp_6 = {}", parts.join(" + "));

    for w in ["2w1", "w2"] {
        let h = lowest_conformal_weight(&c3, &c3.parse_weight(w)?, &int(-1))?;
        println!("lowest conformal weight of -L0+{w} at level -1: {}", fmt_scalar(&h));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> weylvoa::Result<()> {
    run_example()
}
