mod groebner_and_colon {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/groebner_and_colon.rs"));
}

#[test]
fn groebner_and_colon_example_runs() {
    groebner_and_colon::run_example().expect("groebner_and_colon example should run");
}

mod betti_tables {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/betti_tables.rs"));
}

#[test]
fn betti_tables_example_runs() {
    betti_tables::run_example().expect("betti_tables example should run");
}

mod hilbert_functions {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/hilbert_functions.rs"));
}

#[test]
fn hilbert_functions_example_runs() {
    hilbert_functions::run_example().expect("hilbert_functions example should run");
}

mod direct_links {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/direct_links.rs"));
}

#[test]
fn direct_links_example_runs() {
    direct_links::run_example().expect("direct_links example should run");
}

mod koszul_relations {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/koszul_relations.rs"));
}

#[test]
fn koszul_relations_example_runs() {
    koszul_relations::run_example().expect("koszul_relations example should run");
}

mod chains {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/chains.rs"));
}

#[test]
fn chains_example_runs() {
    chains::run_example().expect("chains example should run");
}

mod inverse_systems {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/inverse_systems.rs"));
}

#[test]
fn inverse_systems_example_runs() {
    inverse_systems::run_example().expect("inverse_systems example should run");
}

mod families {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/families.rs"));
}

#[test]
fn families_example_runs() {
    families::run_example().expect("families example should run");
}

mod verification {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verification.rs"));
}

#[test]
fn verification_example_runs() {
    verification::run_example().expect("verification example should run");
}
