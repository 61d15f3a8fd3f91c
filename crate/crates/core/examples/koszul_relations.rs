// Minimal Koszul relations, λ, and grade jumps with a random witness.

use std::error::Error;

use liaison::families::{make_i, make_l};
use liaison::linkage::{grade_jumps, lambda_count, minimal_generator_coordinates, minimal_koszul_pairs};
use liaison::parse::parse_polynomial;
use liaison::ring::Ring;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = Ring::standard();
    let l = make_l(&r, 4)?;
    println!("L(4) = ({l}), λ = {}", lambda_count(&l)?);
    for (f, g) in minimal_koszul_pairs(&l)? {
        println!("  minimal Koszul pair: {f}, {g}");
    }

    let i = make_i(&r, 4)?;
    let f = parse_polynomial(&r, "x^5")?;
    println!("coordinates of {f} in I/𝔪I: {:?}", minimal_generator_coordinates(&f, &i)?);

    let g = grade_jumps(&i, 1)?;
    println!("grade jumps {} with witness {} after {} draws", g.jumps, g.witness, g.attempts);
    assert!(g.jumps.total() as i64 > g.max_socle_shift);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
