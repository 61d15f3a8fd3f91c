// Parsing, Gröbner bases, normal forms with quotients, and colon ideals.

use std::error::Error;

use liaison::ideal::Ideal;
use liaison::parse::parse_polynomial;
use liaison::ring::Ring;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = Ring::standard();
    let i = Ideal::parse(&r, "x*z, y*z, z^12, x^4, y^7")?;
    println!("I = ({i})");
    println!("reduced Gröbner basis: {:?}", i.groebner_basis().iter().map(|g| g.to_string()).collect::<Vec<_>>());

    let f = parse_polynomial(&r, "x^4*y + y^2*z^3 + y^3")?;
    let (rem, quo) = i.normal_form(&f)?;
    println!("{f} = Σ q_i g_i + ({rem})");
    let back = quo.iter().zip(i.groebner_basis()).fold(rem.clone(), |acc, (q, g)| &acc + &(q * g));
    assert_eq!(back, f);

    // the colon by a complete intersection inside I
    let c = Ideal::parse(&r, "y*z, x^5, y^12 - z^12")?;
    let j = c.colon(&i)?.minimalized();
    println!("({c}) : I = ({j})");
    assert!(c.colon(&j)?.same_ideal(&i));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
