// A direct link, its Hilbert function identity, and the mapping cone that resolves it.

use std::error::Error;

use liaison::families::{j_ci, make_i};
use liaison::linkage::{direct_link, ferrand_cone, hf_link_identity};
use liaison::resolve::betti_table;
use liaison::ring::Ring;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = Ring::standard();
    let i = make_i(&r, 4)?;
    let c = j_ci(&r, 4)?;
    let j = direct_link(&c, &i)?.minimalized();
    println!("C = {c}\nC : I = ({j})");
    assert_eq!(hf_link_identity(&c, &i, &j), Some(true));
    assert!(direct_link(&c, &j)?.same_ideal(&i));

    let cone = ferrand_cone(&i, &c)?;
    println!("untrimmed cone:\n{}", cone.raw_table());
    println!("after trimming:\n{}", cone.betti_table());
    println!("{:?}", cone.trims);
    assert!(cone.lifts_commute() && cone.trims.consistent());
    assert!(cone.betti_table().same_entries(&betti_table(&j)?));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
