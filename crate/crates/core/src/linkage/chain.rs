//! Sequences of direct links and their reports.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::jumps::{generic_ci_with, grade_jump_degrees};
use super::koszul::lambda_count;
use super::{direct_link, is_complete_intersection, CIType, CompleteIntersection};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::parse::parse_generators;
use crate::poly::Polynomial;
use crate::resolve::{betti_table, BettiTable};

/// How a chain step picks its complete intersection.
#[derive(Clone, Debug)]
pub enum ChainStepSpec {
    /// A random complete intersection of this type inside the current ideal.
    Type(CIType),
    /// These generators, used verbatim.
    Explicit(Vec<Polynomial>),
}

impl ChainStepSpec {
    /// Parses `2,5,12` as a type and anything else as comma-separated generators.
    pub fn parse(ring: &crate::ring::RingRef, text: &str) -> Result<ChainStepSpec> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        if parts.iter().all(|p| !p.is_empty() && p.chars().all(|c| c.is_ascii_digit())) {
            let degs = parts.iter().map(|p| p.parse::<u32>().map_err(|e| Error::input(e.to_string()))).collect::<Result<_>>()?;
            return Ok(ChainStepSpec::Type(CIType::new(degs)?));
        }
        Ok(ChainStepSpec::Explicit(parse_generators(ring, text)?))
    }
}

/// One link of a chain.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainStep {
    #[serde(rename = "type")]
    pub citype: CIType,
    pub ci: Vec<String>,
    /// Minimal generators of the link.
    pub link: Vec<String>,
    #[serde(with = "betti_json")]
    pub betti: BettiTable,
    pub lambda: usize,
    pub grade_jumps: Vec<u32>,
    /// `HF_{R/(C:I)}(a-i) = HF_{R/C}(i) - HF_{R/I}(i)` for all `i`; absent when `I` is not 𝔪-primary.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hf_link_identity: Option<bool>,
}

/// Result of running a chain of links.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainReport {
    pub start: Vec<String>,
    pub steps: Vec<ChainStep>,
    /// Types are componentwise non-increasing along the chain.
    pub sequentially_bounded: bool,
    pub terminal_is_ci: bool,
}

mod betti_json {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::resolve::BettiTable;

    pub fn serialize<S: Serializer>(t: &BettiTable, s: S) -> Result<S::Ok, S::Error> {
        t.to_json_value().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BettiTable, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        BettiTable::from_json_value(&v).map_err(serde::de::Error::custom)
    }
}

impl ChainReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("chain reports serialize")
    }

    pub fn from_json(s: &str) -> Result<ChainReport> {
        serde_json::from_str(s).map_err(|e| Error::input(format!("bad chain report: {e}")))
    }

    /// Whether every step that could be checked satisfied the Hilbert-function link identity.
    pub fn hf_identities_hold(&self) -> bool {
        self.steps.iter().all(|s| s.hf_link_identity != Some(false))
    }
}

/// `HF_{R/(C:I)}(a-i) = HF_{R/C}(i) - HF_{R/I}(i)` with `a = Σ a_i - N`, for 𝔪-primary `I`.
pub fn hf_link_identity(ci: &CompleteIntersection, ideal: &Ideal, link: &Ideal) -> Option<bool> {
    if !ideal.is_m_primary() {
        return None;
    }
    let a = ci.citype().total() as i64 - ideal.ring().nvars() as i64;
    if a < 0 {
        return Some(false);
    }
    let top = a as u32;
    let (hc, hi, hl) = (ci.ideal().hilbert_function(top), ideal.hilbert_function(top), link.hilbert_function(top));
    // beyond a both sides vanish: R/C has socle degree a
    Some((0..=a).all(|i| hl.at(a - i) as i64 == hc.at(i) as i64 - hi.at(i) as i64))
}

/// Types are componentwise non-increasing.
pub fn is_sequentially_bounded(types: &[CIType]) -> bool {
    types.windows(2).all(|w| w[0].dominates(&w[1]))
}

fn strings(p: &[Polynomial]) -> Vec<String> {
    p.iter().map(|g| g.to_string()).collect()
}

/// Runs one link from `current` and records it.
pub(crate) fn run_step(current: &Ideal, ci: &CompleteIntersection) -> Result<(Ideal, ChainStep)> {
    if ci.ideal().same_ideal(current) {
        return Err(Error::precondition("the complete intersection equals the ideal being linked"));
    }
    let link = direct_link(ci, current)?.minimalized();
    let betti = betti_table(&link)?;
    let lambda = lambda_count(&link)?;
    let grade_jumps = grade_jump_degrees(&link)?.degrees().to_vec();
    let step = ChainStep {
        citype: ci.citype().clone(),
        ci: strings(ci.gens()),
        link: strings(link.gens()),
        betti,
        lambda,
        grade_jumps,
        hf_link_identity: hf_link_identity(ci, current, &link),
    };
    Ok((link, step))
}

pub(crate) fn finish(start: &Ideal, steps: Vec<ChainStep>, last: &Ideal) -> ChainReport {
    let types: Vec<CIType> = steps.iter().map(|s| s.citype.clone()).collect();
    ChainReport {
        start: strings(start.gens()),
        steps,
        sequentially_bounded: is_sequentially_bounded(&types),
        terminal_is_ci: is_complete_intersection(last),
    }
}

/// Links `start` successively; a failing step aborts with its index.
pub fn verify_chain(start: &Ideal, steps: &[ChainStepSpec], seed: u64) -> Result<(ChainReport, Ideal)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = start.clone();
    let mut out = Vec::new();
    for (k, spec) in steps.iter().enumerate() {
        let wrap = |e: Error| Error::Step { step: k, source: Box::new(e) };
        let ci = match spec {
            ChainStepSpec::Explicit(g) => CompleteIntersection::new(start.ring(), g.clone()).map_err(wrap)?,
            ChainStepSpec::Type(t) => generic_ci_with(&current, t, &mut rng, &mut |_| Ok(true)).map_err(wrap)?.0,
        };
        let (link, step) = run_step(&current, &ci).map_err(wrap)?;
        out.push(step);
        current = link;
    }
    Ok((finish(start, out, &current), current))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{jprime_chain, jprime_terminal, make_jprime};
    use crate::ring::Ring;

    #[test]
    fn jprime_chain_is_sequentially_bounded() {
        let r = Ring::standard();
        let steps: Vec<ChainStepSpec> =
            jprime_chain(&r, 4).unwrap().into_iter().map(|c| ChainStepSpec::Explicit(c.gens().to_vec())).collect();
        let (rep, last) = verify_chain(&make_jprime(&r, 4).unwrap(), &steps, 0).unwrap();
        assert!(rep.sequentially_bounded && rep.terminal_is_ci);
        assert!(last.same_ideal(jprime_terminal(&r, 4).unwrap().ideal()));
        assert!(rep.hf_identities_hold());
        assert_eq!(ChainReport::from_json(&rep.to_json()).unwrap(), rep);
    }

    #[test]
    fn c_colon_c_is_rejected() {
        let r = Ring::standard();
        let c = Ideal::parse(&r, "x^2, y^3, z^4").unwrap();
        let spec = ChainStepSpec::parse(&r, "x^2, y^3, z^4").unwrap();
        let e = verify_chain(&c, &[spec], 0).unwrap_err();
        assert!(matches!(e, Error::Step { step: 0, .. }));
    }

    #[test]
    fn step_specs_parse() {
        let r = Ring::standard();
        assert!(matches!(ChainStepSpec::parse(&r, "2, 5,12").unwrap(), ChainStepSpec::Type(_)));
        assert!(matches!(ChainStepSpec::parse(&r, "x^2, y^5, z").unwrap(), ChainStepSpec::Explicit(_)));
    }
}
