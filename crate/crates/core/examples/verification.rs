// Runs the family checks that are quick at one `n` and prints the report.

use std::error::Error;

use liaison::ring::Ring;
use liaison::verify::Suite;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut suite = Suite::new(&Ring::standard(), 0);
    for n in [4, 5] {
        suite.criterion_1(n);
        suite.criterion_2(n);
        suite.criterion_4(n);
        suite.criterion_5(n);
        suite.criterion_6(n);
    }
    suite.criterion_8();
    suite.criterion_10_involution();
    print!("{}", suite.report);
    if !suite.report.all_passed() {
        return Err("some checks failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
