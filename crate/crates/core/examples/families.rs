// The ideal families, their Betti-table shapes, and a ghost double link.

use std::error::Error;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use liaison::families::{matches_pattern, satisfies_pattern, BettiPattern, Family};
use liaison::linkage::{ghost_bounds_hold, ghost_double_link, CIType};
use liaison::resolve::betti_table;
use liaison::ring::Ring;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = Ring::standard();
    let n = 4;
    for f in Family::ALL {
        let i = f.build(&r, n)?;
        let shape = match f.expected_pattern() {
            Some(p) => format!("{p:?}: {}", satisfies_pattern(&i, p, n)?.matched),
            None => "no named shape".to_string(),
        };
        println!("{f}({n}) = ({i})  [{shape}]");
    }

    let j = Family::J.build(&r, n)?;
    let ty = CIType::new(vec![2, 2 * n + 2, 2 * n + 6])?;
    let g = ghost_double_link(&j, &ty, &mut ChaCha8Rng::seed_from_u64(7))?;
    let (before, after) = (betti_table(&j)?, betti_table(&g.result)?);
    println!("ghost double link of type {ty}: bounds hold {}", ghost_bounds_hold(&before, &after, &ty));
    println!("{:?}", matches_pattern(&after, BettiPattern::StarStar, n));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
