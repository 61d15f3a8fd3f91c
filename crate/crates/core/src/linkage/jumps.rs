//! Grade jumps, the minimal complete-intersection type, and random complete
//! intersections of a prescribed type inside an ideal.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{is_complete_intersection, CIType, CompleteIntersection};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::resolve::betti_table;

/// Attempts before a random construction is declared non-generic.
pub const MAX_RETRIES: usize = 20;

/// The grade jumps with a complete intersection realizing them.
#[derive(Clone, Debug)]
pub struct GradeJumps {
    pub jumps: CIType,
    pub witness: CompleteIntersection,
    /// Random draws used for the witness.
    pub attempts: usize,
    /// `max {j : β_{n,j} ≠ 0}`.
    pub max_socle_shift: i64,
}

/// A random element of `I_d`: a combination of `m·g` over minimal generators `g`
/// and monomials `m` of complementary degree.
pub fn random_element<R: Rng + ?Sized>(ideal: &Ideal, d: u32, rng: &mut R) -> Polynomial {
    let ring = ideal.ring();
    let p = ring.field().modulus();
    let mut out = Polynomial::zero(ring);
    for g in ideal.mingens() {
        let e = g.degree().unwrap();
        if e > d {
            continue;
        }
        let coef = Polynomial::from_terms(
            ring,
            Monomial::all_of_degree(ring.nvars(), d - e).into_iter().map(|m| (m, rng.gen_range(1..p))),
        );
        out = &out + &(&coef * g);
    }
    out
}

/// `g_1 ≤ … ≤ g_n`: `g_1` is the least generator degree and `g_j` the least
/// `d ≥ g_{j-1}` with `grade(I_{≤d}) ≥ j`.
pub fn grade_jump_degrees(ideal: &Ideal) -> Result<CIType> {
    if ideal.is_unit() || ideal.is_zero() {
        return Err(Error::precondition("grade jumps need a nonzero proper ideal"));
    }
    let n = ideal.grade();
    let mut degs = ideal.mingen_degrees();
    degs.dedup();
    let mut out: Vec<u32> = Vec::new();
    let mut k = 0;
    for j in 1..=n {
        while ideal.truncated(degs[k]).grade() < j {
            k += 1;
        }
        out.push(degs[k]);
    }
    CIType::new(out)
}

/// Fails with a precondition error when no complete intersection of type `ty` lies in `ideal`.
fn check_type_exists(ideal: &Ideal, ty: &CIType) -> Result<()> {
    if ty.len() as i64 != ideal.grade() {
        return Err(Error::precondition(format!(
            "type {ty} has {} entries but the ideal has grade {}",
            ty.len(),
            ideal.grade()
        )));
    }
    for (j, &a) in ty.degrees().iter().enumerate() {
        if ideal.truncated(a).grade() < j as i64 + 1 {
            return Err(Error::precondition(format!("the ideal contains no complete intersection of type {ty}")));
        }
    }
    Ok(())
}

/// A random complete intersection of type `ty` inside `ideal`, and the number of draws it took.
pub fn generic_ci_with<R: Rng + ?Sized>(
    ideal: &Ideal,
    ty: &CIType,
    rng: &mut R,
    accept: &mut dyn FnMut(&CompleteIntersection) -> Result<bool>,
) -> Result<(CompleteIntersection, usize)> {
    check_type_exists(ideal, ty)?;
    let ring = ideal.ring();
    for attempt in 1..=MAX_RETRIES {
        let gens: Vec<Polynomial> = ty.degrees().iter().map(|&d| random_element(ideal, d, rng)).collect();
        if gens.iter().any(|g| g.is_zero()) {
            continue;
        }
        match CompleteIntersection::new(ring, gens) {
            Ok(c) if accept(&c)? => return Ok((c, attempt)),
            Ok(_) | Err(Error::Precondition(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Genericity(format!(
        "no complete intersection of type {ty} found in {MAX_RETRIES} random draws"
    )))
}

/// A random complete intersection of type `ty` inside `ideal`, seeded.
pub fn generic_ci(ideal: &Ideal, ty: &CIType, seed: u64) -> Result<CompleteIntersection> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(generic_ci_with(ideal, ty, &mut rng, &mut |_| Ok(true))?.0)
}

/// Grade jumps of a perfect ideal with a random witness of that type.
pub fn grade_jumps(ideal: &Ideal, seed: u64) -> Result<GradeJumps> {
    let jumps = grade_jump_degrees(ideal)?;
    let max_socle_shift = betti_table(ideal)?.max_socle_shift();
    let total = jumps.total() as i64;
    if total < max_socle_shift || (total == max_socle_shift) != is_complete_intersection(ideal) {
        return Err(Error::internal(format!(
            "type {jumps} violates the socle bound M = {max_socle_shift}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (witness, attempts) = generic_ci_with(ideal, &jumps, &mut rng, &mut |_| Ok(true))?;
    Ok(GradeJumps { jumps, witness, attempts, max_socle_shift })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_i, make_j};
    use crate::ring::Ring;

    #[test]
    fn jumps_of_families() {
        let r = Ring::standard();
        let c = Ideal::parse(&r, "x^2, y^5, z^12").unwrap();
        assert_eq!(grade_jump_degrees(&c).unwrap().degrees(), &[2, 5, 12]);
        let g = grade_jumps(&make_i(&r, 4).unwrap(), 7).unwrap();
        assert_eq!(g.jumps.degrees(), &[2, 4, 12]);
        assert_eq!(g.witness.citype(), &g.jumps);
        assert_eq!(grade_jump_degrees(&make_j(&r, 4).unwrap()).unwrap().degrees(), &[2, 5, 12]);
    }

    #[test]
    fn impossible_type_is_a_precondition_error() {
        let r = Ring::standard();
        let i = make_i(&r, 4).unwrap();
        let e = generic_ci(&i, &CIType::new(vec![2, 2, 12]).unwrap(), 1).unwrap_err();
        assert!(matches!(e, Error::Precondition(_)), "{e}");
    }

    #[test]
    fn witness_is_deterministic_in_the_seed() {
        let r = Ring::standard();
        let i = make_i(&r, 4).unwrap();
        let t = CIType::new(vec![2, 5, 12]).unwrap();
        let a = generic_ci(&i, &t, 3).unwrap();
        let b = generic_ci(&i, &t, 3).unwrap();
        assert_eq!(a.gens(), b.gens());
    }
}
