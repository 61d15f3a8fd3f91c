//! Double links through two complete intersections of the same type.

use rand::Rng;

use super::jumps::{generic_ci_with, grade_jump_degrees};
use super::{direct_link, CIType, CompleteIntersection};
use crate::error::Result;
use crate::ideal::Ideal;
use crate::resolve::{betti_table, BettiTable};

/// `I_1 = C : I` and `I_2 = D : I_1` with `type(C) = type(D)`.
#[derive(Clone, Debug)]
pub struct GhostDoubleLink {
    pub first: CompleteIntersection,
    pub middle: Ideal,
    pub second: CompleteIntersection,
    pub result: Ideal,
    /// Draws spent finding `C`.
    pub attempts: usize,
}

/// A random ghost double link of `ideal` with respect to `ty`: `C` is redrawn until
/// `d(C:I) = r(R/I)` and `ty` is the minimal type of `C:I`.
pub fn ghost_double_link<R: Rng + ?Sized>(ideal: &Ideal, ty: &CIType, rng: &mut R) -> Result<GhostDoubleLink> {
    let r = betti_table(ideal)?.cm_type() as i64;
    let mut middle = None;
    let (first, attempts) = generic_ci_with(ideal, ty, rng, &mut |c| {
        let i1 = direct_link(c, ideal)?;
        if i1.is_unit() {
            return Ok(false);
        }
        let ok = betti_table(&i1)?.deviation() == r && &grade_jump_degrees(&i1)? == ty;
        if ok {
            middle = Some(i1);
        }
        Ok(ok)
    })?;
    let middle = middle.expect("accepted draws record their link");
    let (second, _) = generic_ci_with(&middle, ty, rng, &mut |d| Ok(!d.ideal().same_ideal(&middle)))?;
    let result = direct_link(&second, &middle)?;
    Ok(GhostDoubleLink { first, middle, second, result, attempts })
}

/// `β_{i,a_j}(I) ≤ β_{i,a_j}(I_2) ≤ β_{i,a_j}(I) + 1` for `i = 1, 2`, and equal last columns.
/// The first two steps are what matter in grade 3.
pub fn ghost_bounds_hold(before: &BettiTable, after: &BettiTable, ty: &CIType) -> bool {
    let steps_agree = ty.degrees().iter().all(|&a| {
        (1..=2).all(|i| {
            let (b, c) = (before.get(i, a as i64), after.get(i, a as i64));
            b <= c && c <= b + 1
        })
    });
    let n = ty.len();
    let last = |t: &BettiTable| t.entries().iter().filter(|(k, _)| k.0 == n).map(|(k, v)| (k.1, *v)).collect::<Vec<_>>();
    steps_agree && last(before) == last(after)
}
