// Chains of links: an explicit sequentially bounded chain, and a greedy search.

use std::error::Error;

use liaison::families::{jprime_chain, make_i, make_jprime};
use liaison::linkage::{licci_greedy_search, verify_chain, ChainStepSpec, SearchPolicy};
use liaison::ring::Ring;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = Ring::standard();
    let start = make_jprime(&r, 4)?;
    let steps: Vec<ChainStepSpec> =
        jprime_chain(&r, 4)?.into_iter().map(|c| ChainStepSpec::Explicit(c.gens().to_vec())).collect();
    let (report, last) = verify_chain(&start, &steps, 0)?;
    for s in &report.steps {
        println!("type {} -> ({})", s.citype, s.link.join(", "));
    }
    println!("ends at ({last}); sequentially bounded: {}", report.sequentially_bounded);
    assert!(report.terminal_is_ci && report.hf_identities_hold());

    let out = licci_greedy_search(&make_i(&r, 4)?, 6, SearchPolicy::KoszulPairFirst, 0)?;
    let types: Vec<String> = out.report.steps.iter().map(|s| s.citype.to_string()).collect();
    println!("greedy search from I(4): {} (reached a complete intersection: {})", types.join(" -> "), out.reached_ci);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
