//! The explicit ideal families and the Betti-table classes they witness.
//!
//! All constructors work in a three-variable ring whose variables play the
//! roles of `x, y, z` in the order given.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::linkage::{direct_link, CompleteIntersection};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::resolve::{betti_table, BettiTable};
use crate::ring::RingRef;

pub const MIN_N: u32 = 4;

fn check_ring(ring: &RingRef) -> Result<()> {
    if ring.nvars() != 3 {
        return Err(Error::input(format!("the families live in 3 variables, ring has {}", ring.nvars())));
    }
    Ok(())
}

fn check_n(n: u32) -> Result<()> {
    if n < MIN_N {
        return Err(Error::input(format!("n must be at least {MIN_N}, got {n}")));
    }
    Ok(())
}

fn mono(ring: &RingRef, a: u32, b: u32, c: u32) -> Polynomial {
    Polynomial::monomial(ring, Monomial::new([a, b, c]))
}

/// Parameters of the non-minimally-licci construction `I = ℓ_2 (ℓ_1, f_1, f_4) + (f_2, f_3)`.
#[derive(Clone, Debug)]
pub struct FamilyParams {
    pub c: [u32; 4],
    pub l1: Polynomial,
    pub l2: Polynomial,
    /// `f_1, f_2, f_3, f_4` of degrees `c_1..c_4`.
    pub f: [Polynomial; 4],
}

impl FamilyParams {
    /// The monomial instance with `c = (1, n, n+3, 2n+3)`: `ℓ_1 = y`, `ℓ_2 = z`,
    /// `f = (x, x^n, y^{n+3}, z^{2n+3})`.
    pub fn standard(ring: &RingRef, n: u32) -> Result<FamilyParams> {
        check_ring(ring)?;
        check_n(n)?;
        Ok(FamilyParams {
            c: [1, n, n + 3, 2 * n + 3],
            l1: mono(ring, 0, 1, 0),
            l2: mono(ring, 0, 0, 1),
            f: [mono(ring, 1, 0, 0), mono(ring, n, 0, 0), mono(ring, 0, n + 3, 0), mono(ring, 0, 0, 2 * n + 3)],
        })
    }

    /// Checks the numerical and regularity hypotheses of the construction.
    pub fn validate(&self) -> Result<()> {
        let [c1, c2, c3, c4] = self.c;
        if !(4 <= c1 + 3 && c1 + 3 <= c2 && c2 < c3 && c3 < c4) {
            return Err(Error::input(format!("need 4 <= c1+3 <= c2 < c3 < c4, got c = {:?}", self.c)));
        }
        if c1 == 2 {
            return Err(Error::input("need c1 != 2"));
        }
        if c2 + c3 > c1.min(2) + c4 {
            return Err(Error::input(format!("need c2 + c3 <= min(2, c1) + c4, got {} > {}", c2 + c3, c1.min(2) + c4)));
        }
        for (name, p, d) in [("l1", &self.l1, 1), ("l2", &self.l2, 1)]
            .into_iter()
            .chain(self.f.iter().zip(["f1", "f2", "f3", "f4"]).zip(self.c).map(|((p, s), d)| (s, p, d)))
        {
            if p.is_zero() || !p.is_homogeneous() || p.degree() != Some(d) {
                return Err(Error::input(format!("{name} = {p} must be homogeneous of degree {d}")));
            }
        }
        let ring = self.l1.ring();
        let regular = |name: &str, ps: &[&Polynomial]| -> Result<()> {
            let id = Ideal::new(ring, ps.iter().map(|p| (*p).clone()).collect())?;
            if id.grade() != ps.len() as i64 {
                return Err(Error::input(format!("{name} is not a regular sequence")));
            }
            Ok(())
        };
        let [f1, f2, f3, f4] = &self.f;
        regular("f1, f4, l1", &[f1, f4, &self.l1])?;
        let i1 = self.i1()?;
        for (name, g) in [("f2", f2), ("f3", f3)] {
            if !i1.contains(g) {
                return Err(Error::input(format!("{name} is not in (l1, f1, f4)")));
            }
        }
        regular("f2, f3", &[f2, f3])?;
        regular("l1, f2", &[&self.l1, f2])?;
        regular("l2, f2, f3", &[&self.l2, f2, f3])
    }

    /// `(ℓ_1, f_1, f_4)`.
    pub fn i1(&self) -> Result<Ideal> {
        Ideal::new(self.l1.ring(), vec![self.l1.clone(), self.f[0].clone(), self.f[3].clone()])
    }

    /// The predicted minimal complete-intersection type `(2, c_2, c_4 + 1)`.
    pub fn minimal_type(&self) -> [u32; 3] {
        [2, self.c[1], self.c[3] + 1]
    }
}

/// `ℓ_2 (ℓ_1, f_1, f_4) + (f_2, f_3)`, after validating the hypotheses.
pub fn make_hmnu(params: &FamilyParams) -> Result<Ideal> {
    params.validate()?;
    let ring = params.l1.ring();
    let mut gens: Vec<Polynomial> = params.i1()?.gens().iter().map(|g| &params.l2 * g).collect();
    gens.push(params.f[1].clone());
    gens.push(params.f[2].clone());
    Ok(Ideal::new(ring, gens)?.minimalized())
}

/// `(xz, yz, z^{2n+4}, x^n, y^{n+3})`.
pub fn make_i(ring: &RingRef, n: u32) -> Result<Ideal> {
    check_ring(ring)?;
    check_n(n)?;
    Ideal::new(
        ring,
        vec![
            mono(ring, 1, 0, 1),
            mono(ring, 0, 1, 1),
            mono(ring, n, 0, 0),
            mono(ring, 0, n + 3, 0),
            mono(ring, 0, 0, 2 * n + 4),
        ],
    )
}

/// `(yz, x^e, y^{2n+4} - z^{2n+4})`.
fn yz_ci(ring: &RingRef, n: u32, e: u32) -> Result<CompleteIntersection> {
    let t = 2 * n + 4;
    CompleteIntersection::new(ring, vec![mono(ring, 0, 1, 1), mono(ring, e, 0, 0), mono(ring, 0, t, 0) - mono(ring, 0, 0, t)])
}

/// The complete intersection `(yz, x^{n+1}, y^{2n+4} - z^{2n+4})` of type `(2, n+1, 2n+4)` in `I(n)`.
pub fn j_ci(ring: &RingRef, n: u32) -> Result<CompleteIntersection> {
    check_n(n)?;
    yz_ci(ring, n, n + 1)
}

/// The complete intersection `(yz, x^n, y^{2n+4} - z^{2n+4})` of the minimal type `(2, n, 2n+4)` in `I(n)`.
pub fn l_ci(ring: &RingRef, n: u32) -> Result<CompleteIntersection> {
    check_n(n)?;
    yz_ci(ring, n, n)
}

/// `J(n) = (yz, x^{n+1}, y^{2n+4} - z^{2n+4}) : I(n)`.
pub fn make_j(ring: &RingRef, n: u32) -> Result<Ideal> {
    direct_link(&j_ci(ring, n)?, &make_i(ring, n)?)
}

/// `L(n) = (yz, x^n, y^{2n+4} - z^{2n+4}) : I(n)`, a minimal link of `I(n)`.
pub fn make_l(ring: &RingRef, n: u32) -> Result<Ideal> {
    direct_link(&l_ci(ring, n)?, &make_i(ring, n)?)
}

/// `J'(n) = (x^2, y^{2n+1}, z^{2n+4}, y^n z, x y^{n-1} z, x y z^{n+1})`.
pub fn make_jprime(ring: &RingRef, n: u32) -> Result<Ideal> {
    check_ring(ring)?;
    check_n(n)?;
    Ideal::new(
        ring,
        vec![
            mono(ring, 2, 0, 0),
            mono(ring, 0, n, 1),
            mono(ring, 1, n - 1, 1),
            mono(ring, 1, 1, n + 1),
            mono(ring, 0, 2 * n + 1, 0),
            mono(ring, 0, 0, 2 * n + 4),
        ],
    )
}

/// `C' = (x^2, y^n z, y^{2n+4} - z^{2n+4})`, a complete intersection inside `J'(n)`.
pub fn c_prime(ring: &RingRef, n: u32) -> Result<CompleteIntersection> {
    check_ring(ring)?;
    check_n(n)?;
    let t = 2 * n + 4;
    CompleteIntersection::new(ring, vec![mono(ring, 2, 0, 0), mono(ring, 0, n, 1), mono(ring, 0, t, 0) - mono(ring, 0, 0, t)])
}

/// The monomial chain from `J'(n)` to `(x, y^{n-2}, z^n)`.
pub fn jprime_chain(ring: &RingRef, n: u32) -> Result<Vec<CompleteIntersection>> {
    check_ring(ring)?;
    check_n(n)?;
    let m = |a, b, c| CompleteIntersection::new(ring, vec![mono(ring, a, 0, 0), mono(ring, 0, b, 0), mono(ring, 0, 0, c)]);
    Ok(vec![
        m(2, 2 * n + 1, 2 * n + 4)?,
        m(2, 2 * n, 2 * n + 3)?,
        m(2, n - 1, 2 * n + 3)?,
        m(1, n - 1, 2 * n + 3)?,
    ])
}

/// The complete intersection `(x, y^{n-2}, z^n)` the chain ends at.
pub fn jprime_terminal(ring: &RingRef, n: u32) -> Result<CompleteIntersection> {
    check_n(n)?;
    CompleteIntersection::new(ring, vec![mono(ring, 1, 0, 0), mono(ring, 0, n - 2, 0), mono(ring, 0, 0, n)])
}

/// Links from `L(n)` back through `I(n)` to `(x, y, z^{2n+3})`, with types
/// `(2, n, 2n+4)`, `(n, n+3, 2n+4)`, `(n, n+3, 2n+3)`.
pub fn hmnu_chain(ring: &RingRef, n: u32) -> Result<Vec<CompleteIntersection>> {
    check_ring(ring)?;
    check_n(n)?;
    let m = |a, b, c| CompleteIntersection::new(ring, vec![mono(ring, a, 0, 0), mono(ring, 0, b, 0), mono(ring, 0, 0, c)]);
    Ok(vec![l_ci(ring, n)?, m(n, n + 3, 2 * n + 4)?, m(n, n + 3, 2 * n + 3)?])
}

/// Named families, for the command line and reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    I,
    J,
    L,
    Jprime,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::I, Family::J, Family::L, Family::Jprime];

    pub fn build(self, ring: &RingRef, n: u32) -> Result<Ideal> {
        match self {
            Family::I => make_i(ring, n),
            Family::J => make_j(ring, n),
            Family::L => make_l(ring, n),
            Family::Jprime => make_jprime(ring, n),
        }
    }

    /// The resolution shape the family is known to have, if any.
    pub fn expected_pattern(self) -> Option<BettiPattern> {
        match self {
            Family::I => Some(BettiPattern::Hmnu),
            Family::J => Some(BettiPattern::Star),
            Family::L => Some(BettiPattern::Diamond),
            Family::Jprime => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::I => "I",
            Family::J => "J",
            Family::L => "L",
            Family::Jprime => "Jprime",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s {
            "I" | "i" => Ok(Family::I),
            "J" | "j" => Ok(Family::J),
            "L" | "l" => Ok(Family::L),
            "Jprime" | "jprime" | "J'" => Ok(Family::Jprime),
            _ => Err(Error::input(format!("unknown family {s:?}; expected I, J, L or Jprime"))),
        }
    }
}

/// Betti-table shapes. `Hmnu` is the table of `I(n)`; `Diamond`, `Star` and
/// `StarStar` are the classes of its minimal links, of `J(n)`, and of the
/// perturbation of `Star` with free entries at `2n+2` and `2n+5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BettiPattern {
    Hmnu,
    Diamond,
    Star,
    StarStar,
}

fn shifts(list: &[i64]) -> Vec<i64> {
    let mut v = list.to_vec();
    v.sort_unstable();
    v
}

/// The table of `pattern` at `n`; for `StarStar` the free entries are `s` at
/// twist `2n+2` and `t` at twist `2n+5`, in both steps 1 and 2.
pub fn pattern_table(pattern: BettiPattern, n: u32, s: u64, t: u64) -> BettiTable {
    let n = n as i64;
    let steps: [Vec<i64>; 3] = match pattern {
        BettiPattern::Hmnu => [
            shifts(&[2, 2, n, n + 3, 2 * n + 4]),
            shifts(&[3, n + 1, n + 4, 2 * n + 3, 2 * n + 5, 2 * n + 5]),
            shifts(&[2 * n + 4, 2 * n + 6]),
        ],
        BettiPattern::Diamond => [
            shifts(&[2, n, n, n + 2, 2 * n + 4]),
            shifts(&[n + 1, n + 1, n + 3, 2 * n + 2, 2 * n + 5, 3 * n + 3]),
            shifts(&[2 * n + 3, 3 * n + 4]),
        ],
        BettiPattern::Star | BettiPattern::StarStar => [
            shifts(&[2, n + 1, n + 1, n + 3, 2 * n + 4]),
            shifts(&[n + 2, n + 2, n + 4, 2 * n + 3, 2 * n + 6, 2 * n + 6, 3 * n + 4]),
            shifts(&[2 * n + 4, 2 * n + 7, 3 * n + 5]),
        ],
    };
    let mut table = BettiTable::from_shifts(3, crate::field::PrimeField::DEFAULT_MODULUS, 3, &steps);
    if pattern == BettiPattern::StarStar {
        for i in 1..=2 {
            table.set(i, 2 * n + 2, s);
            table.set(i, 2 * n + 5, t);
        }
    }
    table
}

/// Outcome of matching a table against a pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternMatch {
    pub matched: bool,
    /// The free entries `(s, t)` when matching `StarStar`.
    pub params: Option<(u64, u64)>,
}

/// Exact comparison of `table` against `pattern` at `n`, solving for `s, t` when needed.
pub fn matches_pattern(table: &BettiTable, pattern: BettiPattern, n: u32) -> PatternMatch {
    if pattern == BettiPattern::StarStar {
        let (a, b) = (2 * n as i64 + 2, 2 * n as i64 + 5);
        let (s, t) = (table.get(1, a), table.get(1, b));
        let ok = table.get(2, a) == s && table.get(2, b) == t && table.same_entries(&pattern_table(pattern, n, s, t));
        return PatternMatch { matched: ok, params: ok.then_some((s, t)) };
    }
    PatternMatch { matched: table.same_entries(&pattern_table(pattern, n, 0, 0)), params: None }
}

/// Computes the Betti table of a grade-3 ideal and matches it.
pub fn satisfies_pattern(ideal: &Ideal, pattern: BettiPattern, n: u32) -> Result<PatternMatch> {
    if ideal.grade() != 3 {
        return Ok(PatternMatch { matched: false, params: None });
    }
    Ok(matches_pattern(&betti_table(ideal)?, pattern, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn i4_generators() {
        let r = Ring::standard();
        assert_eq!(make_i(&r, 4).unwrap().to_string(), "x*z, y*z, x^4, y^7, z^12");
        assert!(make_i(&r, 3).is_err());
    }

    #[test]
    fn standard_params_reproduce_i() {
        let r = Ring::standard();
        let p = FamilyParams::standard(&r, 5).unwrap();
        assert!(make_hmnu(&p).unwrap().same_ideal(&make_i(&r, 5).unwrap()));
        assert_eq!(p.minimal_type(), [2, 5, 14]);
    }

    #[test]
    fn hypotheses_are_checked() {
        let r = Ring::standard();
        let mut p = FamilyParams::standard(&r, 4).unwrap();
        p.c[0] = 2;
        assert!(make_hmnu(&p).is_err());
        let mut p = FamilyParams::standard(&r, 4).unwrap();
        p.l1 = mono(&r, 1, 0, 0);
        let e = make_hmnu(&p).unwrap_err();
        assert!(e.to_string().contains("regular"), "{e}");
    }

    #[test]
    fn patterns_are_consistent() {
        for n in 4..=8 {
            for p in [BettiPattern::Hmnu, BettiPattern::Diamond, BettiPattern::Star] {
                let t = pattern_table(p, n, 0, 0);
                assert_eq!(t.euler_characteristic(), 0);
            }
            let star = pattern_table(BettiPattern::Star, n, 0, 0);
            assert!(!matches_pattern(&star, BettiPattern::Diamond, n).matched);
            assert_eq!(matches_pattern(&star, BettiPattern::StarStar, n).params, Some((0, 0)));
            let ss = pattern_table(BettiPattern::StarStar, n, 1, 2);
            assert_eq!(matches_pattern(&ss, BettiPattern::StarStar, n).params, Some((1, 2)));
            assert!(!matches_pattern(&ss, BettiPattern::Star, n).matched);
        }
    }
}
