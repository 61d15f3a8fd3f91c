//! Reproduction suite for the family computations: Betti tables, λ and types,
//! grade jumps, the explicit chain, inverse systems and the link identities.
//!
//! Every link made by a check is logged; the identities of criteria 8 to 10
//! are then checked on all of them.

use std::collections::HashMap;
use std::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::families::{
    c_prime, j_ci, jprime_chain, jprime_terminal, l_ci, make_i, make_j, make_jprime, make_l, matches_pattern,
    BettiPattern, Family,
};
use crate::ideal::Ideal;
use crate::inverse::{annihilate, inverse_system, link_dual_generators, DualElement, InverseSystem};
use crate::linkage::{
    direct_link, ferrand_cone, generic_ci_with, ghost_bounds_hold, ghost_double_link, grade_jumps, hf_link_identity,
    is_complete_intersection, lambda_count,
    verify_chain, CIType, ChainStepSpec, CompleteIntersection, KoszulData,
};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::resolve::{betti_table, koszul_betti_oracle, BettiTable};
use crate::ring::RingRef;

/// Number of criteria.
pub const CRITERIA: u8 = 12;

/// One verified statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub criterion: u8,
    pub label: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

/// All checks of a run, in the order they were made.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// `None` when nothing was checked for `criterion`.
    pub fn criterion_passed(&self, criterion: u8) -> Option<bool> {
        let mut it = self.checks.iter().filter(|c| c.criterion == criterion).peekable();
        it.peek()?;
        Some(it.all(|c| c.passed))
    }

    /// One `criterion k: pass|fail (m/n checks)` line per criterion that was run.
    pub fn summary_lines(&self) -> Vec<String> {
        (1..=CRITERIA)
            .filter_map(|k| {
                let ok = self.criterion_passed(k)?;
                let of: Vec<&Check> = self.checks.iter().filter(|c| c.criterion == k).collect();
                let good = of.iter().filter(|c| c.passed).count();
                Some(format!("criterion {k:>2}: {} ({good}/{} checks)", if ok { "pass" } else { "FAIL" }, of.len()))
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "[{}] {:>2} {}", if c.passed { " ok " } else { "FAIL" }, c.criterion, c.label)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        for l in self.summary_lines() {
            writeln!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A link made somewhere in the suite.
#[derive(Clone, Debug)]
struct LinkRecord {
    label: String,
    ci: CompleteIntersection,
    ideal: Ideal,
    link: Ideal,
}

/// A uniformly random monomial ideal with up to `max_gens` generators of degrees `1..=max_deg`.
pub fn random_monomial_ideal<R: Rng + ?Sized>(ring: &RingRef, max_gens: usize, max_deg: u32, rng: &mut R) -> Ideal {
    let k = rng.gen_range(1..=max_gens);
    let mons: Vec<Monomial> = (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=max_deg);
            let all = Monomial::all_of_degree(ring.nvars(), d);
            all[rng.gen_range(0..all.len())].clone()
        })
        .collect();
    Ideal::from_monomials(ring, &mons)
}

fn table_diff(a: &BettiTable, b: &BettiTable) -> String {
    a.diff(b).iter().map(|(i, j, x, y)| format!("β[{i},{j}] {x} vs {y}")).collect::<Vec<_>>().join(", ")
}

fn cone_check(l: &LinkRecord) -> Result<(bool, String)> {
    let cone = ferrand_cone(&l.ideal, &l.ci)?;
    let direct = betti_table(&l.link)?;
    let same = cone.betti_table().same_entries(&direct) && cone.link()?.same_ideal(&l.link);
    let t = &cone.trims;
    let detail = format!(
        "∂3 units {:?} vs shared {:?}, ∂2 units {:?} vs pairs {:?}",
        t.d3_unit_rows, t.shared_generators, t.d2_unit_rows, t.koszul_pairs
    );
    Ok((same && cone.lifts_commute() && t.consistent(), detail))
}

/// Runs the checks; each method records into the report and logs its links.
pub struct Suite {
    ring: RingRef,
    rng: ChaCha8Rng,
    links: Vec<LinkRecord>,
    /// Grade-jump witnesses with the ideal they lie in.
    witnesses: Vec<(CompleteIntersection, Ideal)>,
    // keyed by the printed generators
    tables: HashMap<String, BettiTable>,
    koszul: HashMap<String, KoszulData>,
    pub report: SuiteReport,
}

impl Suite {
    pub fn new(ring: &RingRef, seed: u64) -> Suite {
        Suite {
            ring: ring.clone(),
            rng: ChaCha8Rng::seed_from_u64(seed),
            links: Vec::new(),
            witnesses: Vec::new(),
            tables: HashMap::new(),
            koszul: HashMap::new(),
            report: SuiteReport::default(),
        }
    }

    fn table(&mut self, ideal: &Ideal) -> Result<BettiTable> {
        let key = ideal.to_string();
        if !self.tables.contains_key(&key) {
            self.tables.insert(key.clone(), betti_table(ideal)?);
        }
        Ok(self.tables[&key].clone())
    }

    fn koszul_data(&mut self, ideal: &Ideal) -> Result<&KoszulData> {
        let key = ideal.to_string();
        if !self.koszul.contains_key(&key) {
            self.koszul.insert(key.clone(), KoszulData::new(ideal)?);
        }
        Ok(&self.koszul[&key])
    }

    fn record(&mut self, criterion: u8, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.report.checks.push(Check { criterion, label: label.into(), passed, detail: detail.into() });
    }

    /// Records an error as a failed check instead of aborting the run.
    fn guard(&mut self, criterion: u8, label: &str, r: Result<()>) {
        if let Err(e) = r {
            self.record(criterion, label, false, format!("error: {e}"));
        }
    }

    fn link(&mut self, label: String, ci: &CompleteIntersection, ideal: &Ideal) -> Result<Ideal> {
        let link = direct_link(ci, ideal)?.minimalized();
        self.links.push(LinkRecord { label, ci: ci.clone(), ideal: ideal.clone(), link: link.clone() });
        Ok(link)
    }

    fn pattern_check(&mut self, criterion: u8, label: String, ideal: &Ideal, pattern: BettiPattern, n: u32) -> Result<()> {
        let table = betti_table(ideal)?;
        let want = crate::families::pattern_table(pattern, n, 0, 0);
        let m = matches_pattern(&table, pattern, n);
        let detail = if m.matched { String::new() } else { table_diff(&table, &want) };
        self.record(criterion, label, m.matched, detail);
        Ok(())
    }

    /// Betti table of `I(n)`.
    pub fn criterion_1(&mut self, n: u32) {
        let r = (|| {
            let i = make_i(&self.ring, n)?;
            self.pattern_check(1, format!("I({n}) has the expected table"), &i, BettiPattern::Hmnu, n)
        })();
        self.guard(1, "I(n) table", r);
    }

    /// Betti tables of `J(n)` and `L(n)`, made as links of `I(n)`.
    pub fn criterion_2(&mut self, n: u32) {
        let r = (|| {
            let i = make_i(&self.ring, n)?;
            let j = self.link(format!("J({n})"), &j_ci(&self.ring, n)?, &i)?;
            self.pattern_check(2, format!("J({n}) has the expected table"), &j, BettiPattern::Star, n)?;
            let l = self.link(format!("L({n})"), &l_ci(&self.ring, n)?, &i)?;
            self.pattern_check(2, format!("L({n}) has the expected table"), &l, BettiPattern::Diamond, n)?;
            let ok = j.same_ideal(&make_j(&self.ring, n)?) && l.same_ideal(&make_l(&self.ring, n)?);
            self.record(2, format!("links agree with the family constructors at n = {n}"), ok, "");
            Ok(())
        })();
        self.guard(2, "J(n), L(n) tables", r);
    }

    /// `λ = 1` and `r = 2` for `L(n)` and for a generic link `I'` of `J(n)` of type `(2, n+1, 2n+4)`.
    pub fn criterion_3(&mut self, n: u32) {
        let r = (|| {
            let l = make_l(&self.ring, n)?;
            let (lam, typ) = (lambda_count(&l)?, betti_table(&l)?.cm_type());
            self.record(3, format!("λ(L({n})) = 1, r = 2"), lam == 1 && typ == 2, format!("λ = {lam}, r = {typ}"));
            let j = make_j(&self.ring, n)?;
            let ty = CIType::new(vec![2, n + 1, 2 * n + 4])?;
            let (c, _) = generic_ci_with(&j, &ty, &mut self.rng, &mut |_| Ok(true))?;
            let ip = self.link(format!("I'({n})"), &c, &j)?;
            let (lam, typ) = (lambda_count(&ip)?, betti_table(&ip)?.cm_type());
            self.record(3, format!("λ(I'({n})) = 1, r = 2"), lam == 1 && typ == 2, format!("λ = {lam}, r = {typ}"));
            Ok(())
        })();
        self.guard(3, "λ and type", r);
    }

    /// Grade jumps of `I(n)` and `J(n)`.
    pub fn criterion_4(&mut self, n: u32) {
        let r = (|| {
            for (name, ideal, want) in [
                ("I", make_i(&self.ring, n)?, vec![2, n, 2 * n + 4]),
                ("J", make_j(&self.ring, n)?, vec![2, n + 1, 2 * n + 4]),
            ] {
                let g = grade_jumps(&ideal, self.rng.gen())?;
                let ok = g.jumps.degrees() == want.as_slice();
                self.record(4, format!("grade jumps of {name}({n})"), ok, format!("{}", g.jumps));
                self.witnesses.push((g.witness, ideal));
            }
            Ok(())
        })();
        self.guard(4, "grade jumps", r);
    }

    /// The explicit chain from `J'(n)` to `(x, y^{n-2}, z^n)`.
    pub fn criterion_5(&mut self, n: u32) {
        let r = (|| {
            let start = make_jprime(&self.ring, n)?;
            let cis = jprime_chain(&self.ring, n)?;
            let mut cur = start.clone();
            for (k, c) in cis.iter().enumerate() {
                cur = self.link(format!("J'({n}) chain step {}", k + 1), c, &cur)?;
            }
            let steps: Vec<ChainStepSpec> = cis.iter().map(|c| ChainStepSpec::Explicit(c.gens().to_vec())).collect();
            let (rep, last) = verify_chain(&start, &steps, 0)?;
            let terminal = jprime_terminal(&self.ring, n)?;
            let ok = rep.sequentially_bounded && rep.terminal_is_ci && last.same_ideal(terminal.ideal()) && last.same_ideal(&cur);
            let types: Vec<String> = rep.steps.iter().map(|s| s.citype.to_string()).collect();
            self.record(5, format!("J'({n}) chain ends at {terminal}, sequentially bounded"), ok, types.join(" → "));
            Ok(())
        })();
        self.guard(5, "chain", r);
    }

    /// `HF_{R/J(n)} = HF_{R/J'(n)}` in every degree.
    pub fn criterion_6(&mut self, n: u32) {
        let r = (|| {
            let (j, jp) = (make_j(&self.ring, n)?, make_jprime(&self.ring, n)?);
            let top = j.top_degree()?.max(jp.top_degree()?) + 1;
            let (a, b) = (j.hilbert_function(top), jp.hilbert_function(top));
            let ok = a.values == b.values && a.numerator == b.numerator;
            self.record(6, format!("HF(J({n})) = HF(J'({n}))"), ok, format!("{:?}", a.values));
            Ok(())
        })();
        self.guard(6, "Hilbert functions", r);
    }

    fn inverse_check(&mut self, label: String, computed: &InverseSystem, expected: &InverseSystem, ideal: &Ideal) -> Result<()> {
        let top = ideal.top_degree()?;
        let hf = ideal.hilbert_function(top + 1);
        let dims = (0..=top as i64 + 1).all(|j| computed.dim(j) as u64 == hf.at(j));
        let ok = computed.same_as(expected) && annihilate(expected)?.same_ideal(ideal) && dims;
        let gens: Vec<String> = computed.minimal_generators().iter().map(|g| g.to_string()).collect();
        self.record(7, label, ok, format!("⟨{}⟩", gens.join(", ")));
        Ok(())
    }

    /// Inverse systems of `I(n)`, `C'` and `C' : J'(n)`.
    pub fn criterion_7(&mut self, n: u32) {
        let r = (|| {
            let r = self.ring.clone();
            let dual = |gens: &[String]| -> Result<InverseSystem> {
                let g: Vec<DualElement> = gens.iter().map(|s| DualElement::parse(&r, s)).collect::<Result<_>>()?;
                InverseSystem::generated_by(&r, &g)
            };
            let i = make_i(&r, n)?;
            let want = dual(&[format!("X^{}*Y^{}", n - 1, n + 2), format!("Z^{}", 2 * n + 3)])?;
            self.inverse_check(format!("I({n})^-1"), &inverse_system(&i, None)?, &want, &i)?;

            let c = c_prime(&r, n)?;
            let want = dual(&[format!("X*Y^{} + X*Y^{}*Z^{}", 3 * n + 3, n - 1, 2 * n + 4)])?;
            self.inverse_check(format!("C'({n})^-1"), &inverse_system(c.ideal(), None)?, &want, c.ideal())?;

            let jp = make_jprime(&r, n)?;
            let link = self.link(format!("C'({n}) : J'({n})"), &c, &jp)?;
            let want = dual(&[format!("Z^{}", 2 * n + 3), format!("Y^{}*Z^{}", n - 2, n + 3), format!("X*Y^{}", n + 2)])?;
            let contracted = link_dual_generators(&c, &jp)?;
            self.inverse_check(format!("(C'({n}) : J'({n}))^-1 by contraction"), &contracted, &want, &link)?;
            self.inverse_check(format!("(C'({n}) : J'({n}))^-1 by orthogonal complement"), &inverse_system(&link, None)?, &want, &link)
        })();
        self.guard(7, "inverse systems", r);
    }

    /// The link identity on every logged link.
    pub fn criterion_8(&mut self) {
        let links = self.links.clone();
        let mut bad = Vec::new();
        let mut checked = 0;
        for l in &links {
            match hf_link_identity(&l.ci, &l.ideal, &l.link) {
                Some(true) => checked += 1,
                Some(false) => bad.push(l.label.clone()),
                None => {}
            }
        }
        self.record(8, format!("HF link identity on {checked} links"), bad.is_empty(), bad.join(", "));
    }

    /// Mapping cone against the direct colon, and its unit entries against the predictions.
    /// Cones are independent and built on all available cores; results keep link order.
    pub fn criterion_9(&mut self) {
        let links = self.links.clone();
        let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(links.len().max(1));
        let next = std::sync::atomic::AtomicUsize::new(0);
        let mut results: Vec<Option<Result<(bool, String)>>> = vec![None; links.len()];
        let done: Vec<Vec<(usize, Result<(bool, String)>)>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|_| {
                    scope.spawn(|| {
                        let mut out = Vec::new();
                        loop {
                            let k = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                            let Some(l) = links.get(k) else { break };
                            out.push((k, cone_check(l)));
                        }
                        out
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("cone worker panicked")).collect()
        });
        for (k, r) in done.into_iter().flatten() {
            results[k] = Some(r);
        }
        for (l, r) in links.iter().zip(results) {
            let label = format!("cone for {}", l.label);
            match r.expect("every link is checked") {
                Ok((ok, detail)) => self.record(9, label, ok, detail),
                Err(e) => self.record(9, label, false, format!("error: {e}")),
            }
        }
    }

    /// `C : (C : I) = I` on every logged link.
    pub fn criterion_10_involution(&mut self) {
        let links = self.links.clone();
        let mut bad = Vec::new();
        for l in &links {
            match direct_link(&l.ci, &l.link) {
                Ok(back) if back.same_ideal(&l.ideal) => {}
                _ => bad.push(l.label.clone()),
            }
        }
        self.record(10, format!("C : (C : I) = I on {} links", links.len()), bad.is_empty(), bad.join(", "));
    }

    /// Random ghost double links of `J(n)` of type `(2, 2n+2, 2n+6)`.
    pub fn criterion_10_ghost(&mut self, n: u32, count: usize) {
        let r = (|| {
            let j = make_j(&self.ring, n)?;
            let before = betti_table(&j)?;
            let ty = CIType::new(vec![2, 2 * n + 2, 2 * n + 6])?;
            for k in 0..count {
                let g = ghost_double_link(&j, &ty, &mut self.rng)?;
                self.links.push(LinkRecord { label: format!("ghost {k} first link"), ci: g.first.clone(), ideal: j.clone(), link: g.middle.clone() });
                self.links.push(LinkRecord { label: format!("ghost {k} second link"), ci: g.second.clone(), ideal: g.middle.clone(), link: g.result.clone() });
                let after = betti_table(&g.result)?;
                let m = matches_pattern(&after, BettiPattern::StarStar, n);
                let ok = ghost_bounds_hold(&before, &after, &ty) && m.matched;
                let detail = match m.params {
                    Some((s, t)) => format!("(s, t) = ({s}, {t})"),
                    None => table_diff(&before, &after),
                };
                self.record(10, format!("ghost double link {k} of J({n})"), ok, detail);
            }
            Ok(())
        })();
        self.guard(10, "ghost double links", r);
    }

    /// Koszul-homology oracle against the resolution on the families and random monomial ideals.
    pub fn criterion_11(&mut self, n: u32, random: usize) {
        let r = (|| {
            let mut cases: Vec<(String, Ideal)> = Vec::new();
            for f in Family::ALL {
                cases.push((format!("{f}({n})"), f.build(&self.ring, n)?));
            }
            for k in 0..random {
                let i = random_monomial_ideal(&self.ring, 6, 6, &mut self.rng);
                cases.push((format!("random monomial ideal {k}: {i}"), i));
            }
            for (label, i) in cases {
                let o = koszul_betti_oracle(&i, None);
                let b = betti_table(&i)?;
                let ok = o.complete && o.table.same_entries(&b);
                self.record(11, format!("oracle on {label}"), ok, if ok { String::new() } else { table_diff(&o.table, &b) });
            }
            Ok(())
        })();
        self.guard(11, "oracle", r);
    }

    /// Linear Koszul pairs, the Koszul pair forced by a non-minimal CI generator,
    /// Gorenstein symmetry, and the socle bound.
    pub fn criterion_12(&mut self, samples: usize) {
        let r = (|| {
            let ring = self.ring.clone();
            // (I, ℓ) with I extended from k[x, y] and ℓ = z + ax + by
            let mut bad = 0;
            for _ in 0..samples {
                let mut mons: Vec<Monomial> = (0..self.rng.gen_range(1..=4))
                    .map(|_| {
                        let d = self.rng.gen_range(1..=5);
                        let a = self.rng.gen_range(0..=d);
                        Monomial::new([a, d - a, 0])
                    })
                    .collect();
                mons.push(Monomial::new([self.rng.gen_range(1..=5), 0, 0]));
                let i = Ideal::from_monomials(&ring, &mons).minimalized();
                let p = ring.field().modulus();
                let ell = &Polynomial::var(&ring, 2)
                    + &(&Polynomial::var(&ring, 0).scale(self.rng.gen_range(0..p)) + &Polynomial::var(&ring, 1).scale(self.rng.gen_range(0..p)));
                let mut gens = i.mingens().to_vec();
                gens.push(ell.clone());
                let with = Ideal::new(&ring, gens)?;
                let data = KoszulData::new(&with)?;
                for f in i.mingens() {
                    if !data.is_minimal_koszul_pair(&ell, f)? {
                        bad += 1;
                    }
                }
            }
            self.record(12, format!("linear form pairs are minimal Koszul pairs ({samples} ideals)"), bad == 0, "");

            // a CI generator in 𝔪I forces a minimal Koszul pair in the link
            let links = self.links.clone();
            let mut seen = 0;
            let mut bad = Vec::new();
            for l in &links {
                let g = l.ci.gens();
                if g.len() != 3 {
                    continue;
                }
                let data = self.koszul_data(&l.ideal)?;
                let free: Vec<usize> = (0..3)
                    .map(|k| data.coordinates(&g[k]).map(|c| c.iter().all(|&x| x == 0)))
                    .collect::<Result<Vec<bool>>>()?
                    .into_iter()
                    .enumerate()
                    .filter_map(|(k, z)| z.then_some(k))
                    .collect();
                for k in free {
                    seen += 1;
                    let (a, b) = (&g[(k + 1) % 3], &g[(k + 2) % 3]);
                    if !self.koszul_data(&l.link)?.is_minimal_koszul_pair(a, b)? {
                        bad.push(l.label.clone());
                    }
                }
            }
            self.record(12, format!("CI generators in 𝔪I give Koszul pairs in the link ({seen} cases)"), bad.is_empty() && seen > 0, bad.join(", "));

            // R/C is symmetric about its socle degree
            let mut bad = Vec::new();
            let m = Ideal::maximal(&ring);
            for _ in 0..samples {
                let degs: Vec<u32> = (0..3).map(|_| self.rng.gen_range(1..=6)).collect();
                let ty = CIType::new(degs)?;
                let (c, _) = generic_ci_with(&m, &ty, &mut self.rng, &mut |_| Ok(true))?;
                let a = ty.total() as i64 - 3;
                let hf = c.ideal().hilbert_function(a as u32 + 1);
                if !(0..=a).all(|i| hf.at(i) == hf.at(a - i)) || hf.at(a + 1) != 0 {
                    bad.push(ty.to_string());
                }
            }
            self.record(12, format!("Gorenstein symmetry for {samples} random types"), bad.is_empty(), bad.join(", "));

            // Σ a_i ≥ M with equality exactly for complete intersections
            let mut all: Vec<(CompleteIntersection, Ideal)> = self.witnesses.clone();
            all.extend(links.iter().map(|l| (l.ci.clone(), l.ideal.clone())));
            let mut bad = Vec::new();
            for (c, i) in &all {
                let m = self.table(i)?.max_socle_shift();
                let s = c.citype().total() as i64;
                if s < m || (s == m) != is_complete_intersection(i) {
                    bad.push(format!("{} in {i}", c.citype()));
                }
            }
            self.record(12, format!("socle bound on {} complete intersections", all.len()), bad.is_empty(), bad.join("; "));
            Ok(())
        })();
        self.guard(12, "properties", r);
    }

    /// Criteria 8, 9 and the involution, over everything logged so far.
    pub fn finish(&mut self) -> &SuiteReport {
        self.criterion_8();
        self.criterion_9();
        self.criterion_10_involution();
        &self.report
    }
}

/// Options for [`verify_paper`].
#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub n: u32,
    pub seed: u64,
    pub ghost_links: usize,
    pub random_ideals: usize,
}

impl SuiteOptions {
    pub fn new(n: u32) -> SuiteOptions {
        SuiteOptions { n, seed: 0, ghost_links: 10, random_ideals: 20 }
    }
}

/// Every criterion at one `n`.
pub fn verify_paper(ring: &RingRef, opts: SuiteOptions) -> SuiteReport {
    let n = opts.n;
    let mut s = Suite::new(ring, opts.seed);
    s.criterion_1(n);
    s.criterion_2(n);
    s.criterion_3(n);
    s.criterion_4(n);
    s.criterion_5(n);
    s.criterion_6(n);
    s.criterion_7(n);
    s.criterion_10_ghost(n, opts.ghost_links);
    s.criterion_11(n, opts.random_ideals);
    s.criterion_12(10);
    s.finish();
    s.report
}
