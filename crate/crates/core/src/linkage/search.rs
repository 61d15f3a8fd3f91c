//! Greedy search for a chain of links ending at a complete intersection.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::chain::{finish, run_step, ChainReport};
use super::jumps::{generic_ci_with, grade_jump_degrees, random_element, MAX_RETRIES};
use super::koszul::KoszulData;
use super::{is_complete_intersection, CIType, CompleteIntersection};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchPolicy {
    /// Always link by a random complete intersection of the minimal type.
    MinimalType,
    /// Prefer a complete intersection through a minimal Koszul pair, then one made of
    /// minimal generators, then the minimal type.
    KoszulPairFirst,
}

impl std::str::FromStr for SearchPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<SearchPolicy> {
        match s {
            "minimal-type" => Ok(SearchPolicy::MinimalType),
            "koszul-pair-first" => Ok(SearchPolicy::KoszulPairFirst),
            _ => Err(Error::input(format!("unknown policy {s:?}"))),
        }
    }
}

/// The chain found; `reached_ci = false` means the budget ran out and nothing is claimed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub report: ChainReport,
    pub reached_ci: bool,
}

impl SearchOutcome {
    pub fn is_inconclusive(&self) -> bool {
        !self.reached_ci
    }
}

/// Completes `fixed` (forms of grade `fixed.len()`) to a full complete intersection
/// by random elements of the least possible degrees.
fn complete<R: Rng + ?Sized>(ideal: &Ideal, fixed: &[Polynomial], rng: &mut R) -> Result<Option<CompleteIntersection>> {
    let ring = ideal.ring();
    let n = ideal.grade() as usize;
    let mut gens = fixed.to_vec();
    if Ideal::new(ring, gens.clone())?.grade() < gens.len() as i64 {
        return Ok(None);
    }
    let mut degs = ideal.mingen_degrees();
    degs.dedup();
    while gens.len() < n {
        let want = gens.len() as i64 + 1;
        let mut found = None;
        'deg: for &d in &degs {
            let base = Ideal::new(ring, gens.clone())?.sum(&ideal.truncated(d));
            if base.grade() < want {
                continue;
            }
            for _ in 0..MAX_RETRIES {
                let f = random_element(ideal, d, rng);
                let mut g = gens.clone();
                g.push(f.clone());
                if !f.is_zero() && Ideal::new(ring, g)?.grade() == want {
                    found = Some(f);
                    break 'deg;
                }
            }
            return Err(Error::Genericity(format!("no regular element of degree {d} found")));
        }
        match found {
            Some(f) => gens.push(f),
            None => return Ok(None),
        }
    }
    Ok(Some(CompleteIntersection::new(ring, gens)?))
}

/// Complete intersections in the order the policy would try them.
fn candidates<R: Rng + ?Sized>(
    ideal: &Ideal,
    policy: SearchPolicy,
    rng: &mut R,
) -> Result<Vec<CompleteIntersection>> {
    let mut out = Vec::new();
    if policy == SearchPolicy::KoszulPairFirst {
        let data = KoszulData::new(ideal)?;
        let gens = data.generators().to_vec();
        for (i, j) in data.minimal_pairs()? {
            if let Some(c) = complete(ideal, &[gens[i].clone(), gens[j].clone()], rng)? {
                out.push(c);
            }
        }
        // regular sequences among the minimal generators, smallest degrees first
        let n = ideal.grade() as usize;
        if n == 3 && gens.len() > 3 {
            let mut triples = Vec::new();
            for a in 0..gens.len() {
                for b in a + 1..gens.len() {
                    for c in b + 1..gens.len() {
                        triples.push([a, b, c]);
                    }
                }
            }
            let deg = |k: usize| gens[k].degree().unwrap();
            triples.sort_by_key(|t| (t.iter().map(|&k| deg(k)).sum::<u32>(), *t));
            for t in triples {
                if let Ok(c) = CompleteIntersection::new(ideal.ring(), t.iter().map(|&k| gens[k].clone()).collect()) {
                    out.push(c);
                }
            }
        }
    }
    let ty: CIType = grade_jump_degrees(ideal)?;
    out.push(generic_ci_with(ideal, &ty, rng, &mut |_| Ok(true))?.0);
    Ok(out)
}

/// Links greedily until a complete intersection is reached or `max_steps` links were made.
/// Never revisits an ideal already seen in the chain.
pub fn licci_greedy_search(ideal: &Ideal, max_steps: usize, policy: SearchPolicy, seed: u64) -> Result<SearchOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = ideal.minimalized();
    let mut seen: Vec<Ideal> = vec![current.clone()];
    let mut steps = Vec::new();
    while !is_complete_intersection(&current) && steps.len() < max_steps {
        let k = steps.len();
        let wrap = |e: Error| Error::Step { step: k, source: Box::new(e) };
        let mut next = None;
        for c in candidates(&current, policy, &mut rng).map_err(wrap)? {
            if c.ideal().same_ideal(&current) {
                continue;
            }
            let (link, step) = run_step(&current, &c).map_err(wrap)?;
            if link.is_unit() || seen.iter().any(|s| s.same_ideal(&link)) {
                continue;
            }
            next = Some((link, step));
            break;
        }
        let Some((link, step)) = next else { break };
        seen.push(link.clone());
        steps.push(step);
        current = link;
    }
    let reached_ci = is_complete_intersection(&current);
    Ok(SearchOutcome { report: finish(ideal, steps, &current), reached_ci })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn ci_needs_no_steps() {
        let r = Ring::standard();
        let c = Ideal::parse(&r, "x^2, y^3, z^4").unwrap();
        let out = licci_greedy_search(&c, 5, SearchPolicy::KoszulPairFirst, 0).unwrap();
        assert!(out.reached_ci);
        assert!(out.report.steps.is_empty());
    }

    #[test]
    fn linear_form_ideal_reaches_ci() {
        let r = Ring::standard();
        let i = Ideal::parse(&r, "x, y^3, y^2*z^2, z^4").unwrap();
        let out = licci_greedy_search(&i, 6, SearchPolicy::KoszulPairFirst, 0).unwrap();
        assert!(out.reached_ci, "{}", out.report.to_json());
    }
}
