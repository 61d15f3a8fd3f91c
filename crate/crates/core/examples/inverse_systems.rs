// Inverse systems: contraction, orthogonal complements, annihilators, and links by contraction.

use std::error::Error;

use liaison::families::{c_prime, make_i, make_jprime};
use liaison::inverse::{annihilate, contract, dual_socle_generator, inverse_system, link_dual_generators, DualElement};
use liaison::linkage::direct_link;
use liaison::parse::parse_polynomial;
use liaison::ring::Ring;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = Ring::standard();
    let g = DualElement::parse(&r, "X^3*Y^6")?;
    println!("x*y ∘ {g} = {}", contract(&parse_polynomial(&r, "x*y")?, &g));

    let i = make_i(&r, 4)?;
    let m = inverse_system(&i, None)?;
    let gens: Vec<String> = m.minimal_generators().iter().map(|g| g.to_string()).collect();
    println!("I(4)^-1 = <{}>", gens.join(", "));
    assert!(annihilate(&m)?.same_ideal(&i));

    let c = c_prime(&r, 4)?;
    println!("C^-1 = <{}>", dual_socle_generator(c.ideal())?);
    let jp = make_jprime(&r, 4)?;
    let by_contraction = link_dual_generators(&c, &jp)?;
    assert!(by_contraction.same_as(&inverse_system(&direct_link(&c, &jp)?, None)?));
    let gens: Vec<String> = by_contraction.minimal_generators().iter().map(|g| g.to_string()).collect();
    println!("(C : J')^-1 = <{}>", gens.join(", "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
