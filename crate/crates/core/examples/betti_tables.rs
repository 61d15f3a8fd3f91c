// Minimal free resolutions and Betti tables, checked against Koszul homology.

use std::error::Error;

use liaison::ideal::Ideal;
use liaison::resolve::{betti_table, free_resolution, koszul_betti_oracle};
use liaison::ring::Ring;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = Ring::standard();
    let i = Ideal::parse(&r, "x*z, y*z, z^12, x^4, y^7")?;
    let res = free_resolution(&i)?;
    println!("ranks {:?}, minimal: {}", res.ranks(), res.is_minimal());
    let t = betti_table(&i)?;
    print!("{t}");
    println!("deviation {}, type {}, largest last twist {}", t.deviation(), t.cm_type(), t.max_socle_shift());

    // an independent computation by linear algebra in each degree
    let o = koszul_betti_oracle(&i, None);
    assert!(o.complete && o.table.same_entries(&t));

    let json = t.to_json();
    assert!(liaison::resolve::BettiTable::from_json(&json)?.same_entries(&t));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
