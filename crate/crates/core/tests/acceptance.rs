//! Every acceptance criterion, at the values of `n` it is stated for. All comparisons
//! are exact. Prints one line per criterion, then fails if any check failed.

use liaison::ring::Ring;
use liaison::verify::{Suite, CRITERIA};

#[test]
fn acceptance() {
    let mut s = Suite::new(&Ring::standard(), 2024);
    for n in 4..=6 {
        s.criterion_1(n);
        s.criterion_2(n);
        s.criterion_4(n);
        s.criterion_5(n);
        s.criterion_6(n);
    }
    for n in 4..=5 {
        s.criterion_3(n);
        s.criterion_7(n);
    }
    s.criterion_10_ghost(4, 10);
    s.criterion_11(4, 20);
    s.criterion_12(10);
    s.finish();
    let rep = &s.report;

    for c in rep.failures() {
        println!("failed: criterion {} {}: {}", c.criterion, c.label, c.detail);
    }
    for line in rep.summary_lines() {
        println!("{line}");
    }
    for k in 1..=CRITERIA {
        assert!(rep.criterion_passed(k).is_some(), "criterion {k} was not run");
    }
    assert!(rep.all_passed(), "{} checks failed", rep.failures().count());
}
