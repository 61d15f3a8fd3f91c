use liaison::families::{pattern_table, Family};
use liaison::resolve::{betti_table, BettiTable};
use liaison::ring::Ring;

fn golden(f: Family, n: u32) -> BettiTable {
    let path = format!("{}/tests/golden/{f}_n{n}.json", env!("CARGO_MANIFEST_DIR"));
    BettiTable::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

#[test]
fn golden_files_hold_the_expected_shapes() {
    for f in [Family::I, Family::J, Family::L] {
        for n in 4..=6 {
            let want = pattern_table(f.expected_pattern().unwrap(), n, 0, 0);
            assert!(golden(f, n).same_entries(&want), "{f}({n})");
        }
    }
}

#[test]
fn computed_tables_match_golden_files() {
    let r = Ring::standard();
    for f in [Family::I, Family::J, Family::L] {
        for n in 4..=6 {
            let t = betti_table(&f.build(&r, n).unwrap()).unwrap();
            let g = golden(f, n);
            assert!(t.same_entries(&g), "{f}({n}): {:?}", t.diff(&g));
            assert_eq!(t.to_json_value()["betti"], serde_json::to_value(g.to_json_value()["betti"].clone()).unwrap());
        }
    }
}
