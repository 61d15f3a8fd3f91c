use proptest::prelude::*;

use liaison::ideal::{groebner_basis, Ideal};
use liaison::inverse::{contract, DualElement};
use liaison::linkage::{
    direct_link, generic_ci, grade_jump_degrees, grade_jumps, hf_link_identity, is_complete_intersection, CIType,
    KoszulData,
};
use liaison::monomial::Monomial;
use liaison::poly::Polynomial;
use liaison::resolve::{betti_table, koszul_betti_oracle, BettiTable};
use liaison::ring::{Ring, RingRef};

type Exps = [u32; 3];

fn exps(max: u32) -> impl Strategy<Value = Exps> {
    [0..=max, 0..=max, 0..=max].prop_filter("nonconstant", |e| e.iter().sum::<u32>() > 0)
}

fn mono_ideal(r: &RingRef, gens: &[Exps]) -> Ideal {
    let m: Vec<Monomial> = gens.iter().map(|e| Monomial::new(*e)).collect();
    Ideal::from_monomials(r, &m)
}

/// `x^a, y^b, z^c` plus extra monomials: always 𝔪-primary.
fn artinian(max: u32) -> impl Strategy<Value = Vec<Exps>> {
    (1..=max, 1..=max, 1..=max, prop::collection::vec(exps(max), 0..4))
        .prop_map(|(a, b, c, mut rest)| {
            rest.extend([[a, 0, 0], [0, b, 0], [0, 0, c]]);
            rest
        })
}

fn divides(a: &Exps, b: &Exps) -> bool {
    (0..3).all(|k| a[k] <= b[k])
}

/// Membership of a monomial in a monomial ideal.
fn mono_in(gens: &[Exps], m: &Exps) -> bool {
    gens.iter().any(|g| divides(g, m))
}

fn all_monomials(d: u32) -> Vec<Exps> {
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            out.push([a, b, d - a - b]);
        }
    }
    out
}

/// Homogeneous polynomial from (exponents, coefficient) pairs, padded to degree `d` by powers of z.
fn homogeneous(r: &RingRef, d: u32, terms: &[(Exps, u32)]) -> Polynomial {
    let t = terms.iter().filter_map(|(e, c)| {
        let s = e[0] + e[1];
        (s <= d).then(|| (Monomial::new([e[0], e[1], d - s]), *c))
    });
    Polynomial::from_terms(r, t)
}

fn poly_strategy(max_deg: u32) -> impl Strategy<Value = (u32, Vec<(Exps, u32)>)> {
    (1..=max_deg, prop::collection::vec((exps(max_deg), 1u32..32003), 1..4))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// For monomial ideals the colon is decided monomial by monomial: m ∈ I:J iff m·g ∈ I for all g.
    #[test]
    fn colon_matches_monomial_membership(i in prop::collection::vec(exps(4), 1..5), j in prop::collection::vec(exps(3), 1..3)) {
        let r = Ring::standard();
        let q = mono_ideal(&r, &i).colon(&mono_ideal(&r, &j)).unwrap();
        for d in 0..=8 {
            for m in all_monomials(d) {
                let brute = j.iter().all(|g| mono_in(&i, &[m[0] + g[0], m[1] + g[1], m[2] + g[2]]));
                let p = Polynomial::monomial(&r, Monomial::new(m));
                prop_assert_eq!(q.contains(&p), brute, "monomial {:?}", m);
            }
        }
    }

    /// HF(I ∩ J) + HF(I + J) = HF(I) + HF(J).
    #[test]
    fn hilbert_function_is_additive(i in prop::collection::vec(exps(4), 1..4), j in prop::collection::vec(exps(4), 1..4)) {
        let r = Ring::standard();
        let (a, b) = (mono_ideal(&r, &i), mono_ideal(&r, &j));
        let (cap, sum) = (a.intersect(&b).unwrap(), a.sum(&b));
        let top = 10;
        let h = |x: &Ideal| x.hilbert_function(top);
        let (ha, hb, hc, hs) = (h(&a), h(&b), h(&cap), h(&sum));
        for d in 0..=top as i64 {
            prop_assert_eq!(hc.at(d) + hs.at(d), ha.at(d) + hb.at(d));
        }
    }

    /// The reduced Gröbner basis of a reduced Gröbner basis is itself.
    #[test]
    fn groebner_basis_is_idempotent(polys in prop::collection::vec(poly_strategy(4), 1..4)) {
        let r = Ring::standard();
        let gens: Vec<Polynomial> = polys.iter().map(|(d, t)| homogeneous(&r, *d, t)).filter(|p| !p.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let gb = groebner_basis(&gens, r.order()).unwrap();
        prop_assert_eq!(groebner_basis(&gb, r.order()).unwrap(), gb.clone());
        for g in &gens {
            prop_assert!(Ideal::new(&r, gb.clone()).unwrap().contains(g));
        }
    }

    /// f ∘ (g ∘ G) = (fg) ∘ G.
    #[test]
    fn contraction_is_a_module_action(f in poly_strategy(3), g in poly_strategy(3), big in poly_strategy(9)) {
        let r = Ring::standard();
        let (f, g) = (homogeneous(&r, f.0, &f.1), homogeneous(&r, g.0, &g.1));
        let big = DualElement::new(&r, &homogeneous(&r, big.0 + 3, &big.1));
        prop_assert_eq!(contract(&f, &contract(&g, &big)), contract(&(&f * &g), &big));
    }

    /// The Koszul-homology oracle agrees with the minimal resolution.
    #[test]
    fn oracle_agrees_with_resolution(gens in prop::collection::vec(exps(5), 1..6)) {
        let r = Ring::standard();
        let i = mono_ideal(&r, &gens);
        let o = koszul_betti_oracle(&i, None);
        prop_assert!(o.complete);
        prop_assert!(o.table.same_entries(&betti_table(&i).unwrap()));
    }

    /// Betti tables survive a JSON round trip.
    #[test]
    fn betti_json_round_trips(gens in artinian(4)) {
        let r = Ring::standard();
        let t = betti_table(&mono_ideal(&r, &gens)).unwrap();
        let back = BettiTable::from_json(&t.to_json()).unwrap();
        prop_assert!(back.same_entries(&t));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    /// R/C is symmetric about a = Σa_i - 3 and vanishes above it.
    #[test]
    fn gorenstein_hilbert_symmetry(a in 1u32..6, b in 1u32..6, c in 1u32..6, seed in any::<u64>()) {
        let r = Ring::standard();
        let ty = CIType::new(vec![a, b, c]).unwrap();
        let ci = generic_ci(&Ideal::maximal(&r), &ty, seed).unwrap();
        let top = ty.total() as i64 - 3;
        let h = ci.ideal().hilbert_function(top as u32 + 1);
        for i in 0..=top {
            prop_assert_eq!(h.at(i), h.at(top - i));
        }
        prop_assert_eq!(h.at(top + 1), 0);
    }

    /// For ℓ regular on R/I, each (ℓ, f_i) is a minimal Koszul pair in (I, ℓ).
    #[test]
    fn linear_form_gives_minimal_koszul_pairs(
        gens in prop::collection::vec((0u32..5, 0u32..5), 1..4),
        a in 0u32..32003,
        b in 0u32..32003,
    ) {
        let r = Ring::standard();
        // I is extended from k[x, y]; ℓ = z + ax + by is regular on R/I
        let mons: Vec<Exps> = gens.iter().filter(|(p, q)| p + q > 0).map(|&(p, q)| [p, q, 0]).collect();
        prop_assume!(!mons.is_empty());
        let i = mono_ideal(&r, &mons).minimalized();
        let ell = &Polynomial::var(&r, 2) + &(&Polynomial::var(&r, 0).scale(a) + &Polynomial::var(&r, 1).scale(b));
        let mut all = i.mingens().to_vec();
        all.push(ell.clone());
        let data = KoszulData::new(&Ideal::new(&r, all).unwrap()).unwrap();
        for f in i.mingens() {
            prop_assert!(data.is_minimal_koszul_pair(&ell, f).unwrap(), "{}", f);
        }
    }

    /// Grade jumps are non-decreasing and Σ g_i ≥ M, with equality only for complete intersections.
    #[test]
    fn socle_bound_for_witnesses(gens in artinian(5), seed in any::<u64>()) {
        let r = Ring::standard();
        let i = mono_ideal(&r, &gens).minimalized();
        let g = grade_jumps(&i, seed).unwrap();
        prop_assert!(g.jumps.degrees().windows(2).all(|w| w[0] <= w[1]));
        let total = g.witness.citype().total() as i64;
        prop_assert!(total >= g.max_socle_shift);
        prop_assert_eq!(total == g.max_socle_shift, is_complete_intersection(&i));
        prop_assert!(g.witness.gens().iter().all(|f| i.contains(f)));
    }

    /// Links of 𝔪-primary ideals satisfy the Hilbert-function identity and link back.
    #[test]
    fn links_satisfy_hf_identity_and_involution(gens in artinian(4), seed in any::<u64>()) {
        let r = Ring::standard();
        let i = mono_ideal(&r, &gens).minimalized();
        let ty = grade_jump_degrees(&i).unwrap();
        let c = generic_ci(&i, &ty, seed).unwrap();
        let j = direct_link(&c, &i).unwrap();
        prop_assume!(!j.is_unit());
        prop_assert_eq!(hf_link_identity(&c, &i, &j), Some(true));
        prop_assert!(direct_link(&c, &j).unwrap().same_ideal(&i));
    }
}
