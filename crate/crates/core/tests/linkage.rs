use liaison::families::*;
use liaison::ideal::Ideal;
use liaison::linkage::*;
use liaison::parse::parse_polynomial;
use liaison::resolve::betti_table;
use liaison::ring::Ring;

#[test]
fn families_are_artinian_of_grade_three() {
    let r = Ring::standard();
    for n in 4..=8 {
        for f in Family::ALL {
            let i = f.build(&r, n).unwrap();
            assert_eq!(i.dimension_and_grade(), (0, 3), "{f}({n})");
        }
    }
}

#[test]
fn standard_parameters_give_i() {
    let r = Ring::standard();
    for n in 4..=6 {
        let p = FamilyParams::standard(&r, n).unwrap();
        assert!(make_hmnu(&p).unwrap().same_ideal(&make_i(&r, n).unwrap()));
    }
}

#[test]
fn non_monomial_parameters_keep_the_shape() {
    let r = Ring::standard();
    let n = 4;
    let mut p = FamilyParams::standard(&r, n).unwrap();
    p.f[3] = parse_polynomial(&r, "z^11 + x^11 + x^3*y^8").unwrap();
    p.f[2] = parse_polynomial(&r, "y^7 + x^7").unwrap();
    let i = make_hmnu(&p).unwrap();
    assert!(satisfies_pattern(&i, BettiPattern::Hmnu, n).unwrap().matched, "{}", betti_table(&i).unwrap());
    assert_eq!(grade_jump_degrees(&i).unwrap().degrees(), &[2, n, 2 * n + 4]);
}

#[test]
fn l_is_not_star() {
    let r = Ring::standard();
    assert!(!satisfies_pattern(&make_l(&r, 4).unwrap(), BettiPattern::Star, 4).unwrap().matched);
}

#[test]
fn minimal_link_chain_from_l_is_not_sequentially_bounded() {
    let r = Ring::standard();
    for n in 4..=5 {
        let steps: Vec<ChainStepSpec> =
            hmnu_chain(&r, n).unwrap().into_iter().map(|c| ChainStepSpec::Explicit(c.gens().to_vec())).collect();
        let (rep, last) = verify_chain(&make_l(&r, n).unwrap(), &steps, 0).unwrap();
        assert!(rep.terminal_is_ci);
        assert!(!rep.sequentially_bounded);
        let i1 = FamilyParams::standard(&r, n).unwrap().i1().unwrap();
        assert!(last.same_ideal(&i1));
        assert!(rep.steps[0].link.len() == 5 && rep.hf_identities_hold());
    }
}

#[test]
fn non_minimal_ci_generator_forces_a_koszul_pair_in_the_link() {
    let r = Ring::standard();
    for n in 4..=6 {
        let (i, c) = (make_i(&r, n).unwrap(), j_ci(&r, n).unwrap());
        let x = &c.gens()[1];
        assert!(minimal_generator_coordinates(x, &i).unwrap().iter().all(|&v| v == 0));
        let j = direct_link(&c, &i).unwrap();
        assert!(is_minimal_koszul_pair(&j, &c.gens()[0], &c.gens()[2]).unwrap());
        assert_eq!(lambda_count(&j).unwrap(), 1);
    }
}

#[test]
fn greedy_search_from_i4() {
    let r = Ring::standard();
    for policy in [SearchPolicy::KoszulPairFirst, SearchPolicy::MinimalType] {
        let out = licci_greedy_search(&make_i(&r, 4).unwrap(), 6, policy, 0).unwrap();
        if out.reached_ci {
            assert!(out.report.terminal_is_ci && out.report.steps.len() <= 6);
        } else {
            assert!(out.is_inconclusive());
        }
    }
    let out = licci_greedy_search(&make_i(&r, 4).unwrap(), 6, SearchPolicy::KoszulPairFirst, 0).unwrap();
    assert!(out.reached_ci);
}

#[test]
fn minimal_type_link_of_j_has_one_koszul_relation() {
    let r = Ring::standard();
    for n in 4..=5 {
        let j = make_j(&r, n).unwrap();
        let c = generic_ci(&j, &CIType::new(vec![2, n + 1, 2 * n + 4]).unwrap(), 3).unwrap();
        let ip = direct_link(&c, &j).unwrap();
        assert_eq!(lambda_count(&ip).unwrap(), 1);
        assert_eq!(betti_table(&ip).unwrap().cm_type(), 2);
    }
}

#[test]
fn cone_trims_match_predictions_on_chain_links() {
    let r = Ring::standard();
    let mut cur = make_jprime(&r, 5).unwrap();
    for c in jprime_chain(&r, 5).unwrap() {
        let cone = ferrand_cone(&cur, &c).unwrap();
        let link = direct_link(&c, &cur).unwrap();
        assert!(cone.trims.consistent(), "{:?}", cone.trims);
        assert!(cone.betti_table().same_entries(&betti_table(&link).unwrap()));
        cur = link;
    }
}

#[test]
fn ghost_double_link_of_j4() {
    use rand_chacha::rand_core::SeedableRng;
    let r = Ring::standard();
    let j = make_j(&r, 4).unwrap();
    let ty = CIType::new(vec![2, 10, 14]).unwrap();
    let g = ghost_double_link(&j, &ty, &mut rand_chacha::ChaCha8Rng::seed_from_u64(5)).unwrap();
    let (before, after) = (betti_table(&j).unwrap(), betti_table(&g.result).unwrap());
    assert!(ghost_bounds_hold(&before, &after, &ty));
    assert!(matches_pattern(&after, BettiPattern::StarStar, 4).matched);
    assert_eq!(grade_jump_degrees(&g.middle).unwrap(), ty);
}

#[test]
fn types_that_do_not_fit_are_rejected() {
    let r = Ring::standard();
    let i = Ideal::parse(&r, "x^2, y^2, z^2").unwrap();
    let e = generic_ci(&i, &CIType::new(vec![1, 2, 2]).unwrap(), 0).unwrap_err();
    assert!(matches!(e, liaison::error::Error::Precondition(_)));
}
