use liaison::families::{c_prime, make_i, make_jprime};
use liaison::ideal::Ideal;
use liaison::inverse::*;
use liaison::linkage::direct_link;
use liaison::ring::{Ring, RingRef};

fn system(r: &RingRef, gens: &[String]) -> InverseSystem {
    let g: Vec<DualElement> = gens.iter().map(|s| DualElement::parse(r, s).unwrap()).collect();
    InverseSystem::generated_by(r, &g).unwrap()
}

/// Degreewise dimensions of `M` against `HF_{R/I}`.
fn dims_match(m: &InverseSystem, i: &Ideal) -> bool {
    let top = i.top_degree().unwrap();
    let hf = i.hilbert_function(top + 1);
    (0..=top as i64 + 1).all(|j| m.dim(j) as u64 == hf.at(j))
}

#[test]
fn inverse_system_of_i() {
    let r = Ring::standard();
    for n in [4u32, 5] {
        let i = make_i(&r, n).unwrap();
        let computed = inverse_system(&i, None).unwrap();
        let expected = system(&r, &[format!("X^{}*Y^{}", n - 1, n + 2), format!("Z^{}", 2 * n + 3)]);
        assert!(computed.same_as(&expected), "n = {n}");
        assert_eq!(computed.num_generators(), 2);
        assert!(dims_match(&computed, &i));
        assert!(annihilate(&expected).unwrap().same_ideal(&i));
    }
}

#[test]
fn dual_generator_of_c_prime() {
    let r = Ring::standard();
    for n in [4u32, 5] {
        let c = c_prime(&r, n).unwrap();
        let g = DualElement::parse(&r, &format!("X*Y^{} + X*Y^{}*Z^{}", 3 * n + 3, n - 1, 2 * n + 4)).unwrap();
        let expected = InverseSystem::generated_by(&r, &[g]).unwrap();
        assert!(inverse_system(c.ideal(), None).unwrap().same_as(&expected), "n = {n}");
        assert!(annihilate(&expected).unwrap().same_ideal(c.ideal()));
        assert!(dims_match(&expected, c.ideal()));
    }
}

#[test]
fn link_of_jprime_by_c_prime() {
    let r = Ring::standard();
    for n in [4u32, 5] {
        let c = c_prime(&r, n).unwrap();
        let jp = make_jprime(&r, n).unwrap();
        let link = direct_link(&c, &jp).unwrap();
        let expected = system(
            &r,
            &[format!("Z^{}", 2 * n + 3), format!("Y^{}*Z^{}", n - 2, n + 3), format!("X*Y^{}", n + 2)],
        );
        let contracted = link_dual_generators(&c, &jp).unwrap();
        assert!(contracted.same_as(&expected), "n = {n}");
        assert!(inverse_system(&link, None).unwrap().same_as(&expected));
        assert!(annihilate(&expected).unwrap().same_ideal(&link));
        assert!(dims_match(&expected, &link));
    }
}

#[test]
fn linking_by_the_ci_itself_gives_zero() {
    let r = Ring::standard();
    let c = c_prime(&r, 4).unwrap();
    let m = link_dual_generators(&c, c.ideal()).unwrap();
    assert!(m.is_zero());
    assert!(annihilate(&m).unwrap().is_unit());
}
