// Hilbert functions, socles and the symmetry of Gorenstein quotients.

use std::error::Error;

use liaison::ideal::Ideal;
use liaison::ring::Ring;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = Ring::standard();
    let c = Ideal::parse(&r, "x^2, y^4*z, y^12 - z^12")?;
    let top = c.top_degree()?;
    let h = c.hilbert_function(top);
    println!("HF of R/C: {:?}", h.values);
    assert!((0..=top as i64).all(|i| h.at(i) == h.at(top as i64 - i)));

    let i = Ideal::parse(&r, "x*z, y*z, z^12, x^4, y^7")?;
    let socle = i.socle()?;
    println!("socle of R/I: {:?}", socle.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    println!("dim, grade = {:?}", i.dimension_and_grade());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
