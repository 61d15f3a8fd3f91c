//! Direct links, Ferrand's mapping cone, minimal Koszul relations, grade jumps and chains.

mod chain;
mod ferrand;
mod ghost;
mod jumps;
mod koszul;
mod search;

pub use chain::{hf_link_identity, is_sequentially_bounded, verify_chain, ChainReport, ChainStep, ChainStepSpec};
pub use ferrand::{ferrand_cone, FerrandCone, TrimReport};
pub use ghost::{ghost_bounds_hold, ghost_double_link, GhostDoubleLink};
pub use jumps::{generic_ci, generic_ci_with, grade_jump_degrees, grade_jumps, random_element, GradeJumps, MAX_RETRIES};
pub use search::{licci_greedy_search, SearchOutcome, SearchPolicy};
pub use koszul::{
    is_minimal_koszul_pair, lambda_count, minimal_generator_coordinates, minimal_koszul_pairs, KoszulData,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::RingRef;

/// Non-decreasing tuple of generator degrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CIType(Vec<u32>);

impl CIType {
    pub fn new(mut degrees: Vec<u32>) -> Result<CIType> {
        if degrees.iter().any(|&d| d == 0) {
            return Err(Error::input("complete intersection degrees must be positive"));
        }
        degrees.sort_unstable();
        Ok(CIType(degrees))
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &CIType) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

impl fmt::Display for CIType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Ideal generated by a homogeneous regular sequence.
#[derive(Clone, Debug)]
pub struct CompleteIntersection {
    ideal: Ideal,
    citype: CIType,
}

impl CompleteIntersection {
    /// Checks that `gens` has full grade, i.e. is a regular sequence.
    pub fn new(ring: &RingRef, mut gens: Vec<Polynomial>) -> Result<CompleteIntersection> {
        gens.sort_by_key(|g| g.degree());
        let ideal = Ideal::new(ring, gens)?;
        let citype = CIType::new(ideal.degrees())?;
        if ideal.grade() != citype.len() as i64 {
            return Err(Error::precondition(format!(
                "({ideal}) has grade {}, not a regular sequence of length {}",
                ideal.grade(),
                citype.len()
            )));
        }
        Ok(CompleteIntersection { ideal, citype })
    }

    pub fn parse(ring: &RingRef, text: &str) -> Result<CompleteIntersection> {
        Self::new(ring, crate::parse::parse_generators(ring, text)?)
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn gens(&self) -> &[Polynomial] {
        self.ideal.gens()
    }

    pub fn citype(&self) -> &CIType {
        &self.citype
    }
}

impl fmt::Display for CompleteIntersection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.ideal)
    }
}

fn check_link(c: &CompleteIntersection, ideal: &Ideal) -> Result<()> {
    for g in c.gens() {
        if !ideal.contains(g) {
            return Err(Error::precondition(format!("{g} is not in the ideal being linked")));
        }
    }
    let (gc, gi) = (c.ideal().grade(), ideal.grade());
    if gc != gi {
        return Err(Error::precondition(format!(
            "complete intersection has grade {gc} but the ideal has grade {gi}"
        )));
    }
    Ok(())
}

/// `C : I`. Returns the unit ideal when `C = I`.
pub fn direct_link(c: &CompleteIntersection, ideal: &Ideal) -> Result<Ideal> {
    check_link(c, ideal)?;
    if c.ideal().contains_ideal(ideal) {
        return Ok(Ideal::unit(ideal.ring()));
    }
    c.ideal().colon(ideal)
}

/// The number of minimal generators equals the grade.
pub fn is_complete_intersection(ideal: &Ideal) -> bool {
    !ideal.is_unit() && ideal.mingens().len() as i64 == ideal.grade()
}
