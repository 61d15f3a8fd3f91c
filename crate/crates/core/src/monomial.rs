//! Monomials and graded monomial orders.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponents = SmallVec<[u32; 4]>;

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial {
    exps: Exponents,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars) }
    }

    pub fn new(exps: impl IntoIterator<Item = u32>) -> Self {
        Monomial { exps: exps.into_iter().collect() }
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = e;
        m
    }

    #[inline]
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// `self | other`
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect() })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect() }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// All monomials of total degree `d` in `nvars` variables, lexicographically descending.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; nvars];
        fn rec(i: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            let n = cur.len();
            if n == 0 {
                if rem == 0 {
                    out.push(Monomial::new([]));
                }
                return;
            }
            if i == n - 1 {
                cur[i] = rem;
                out.push(Monomial::new(cur.iter().copied()));
                return;
            }
            for e in (0..=rem).rev() {
                cur[i] = e;
                rec(i + 1, rem - e, cur, out);
            }
        }
        rec(0, d, &mut cur, &mut out);
        out
    }

    /// Number of monomials of degree `d` in `nvars` variables.
    pub fn count_of_degree(nvars: usize, d: u32) -> usize {
        if nvars == 0 {
            return usize::from(d == 0);
        }
        binomial(d as u64 + nvars as u64 - 1, nvars as u64 - 1) as usize
    }

    /// Position of `self` in [`Monomial::all_of_degree`] for its own degree.
    pub fn lex_rank(&self) -> usize {
        let n = self.exps.len();
        let mut rem = self.degree();
        let mut rank = 0u64;
        for i in 0..n.saturating_sub(1) {
            let e = self.exps[i];
            let k = (n - 1 - i) as u64;
            if rem > e {
                // monomials in the remaining k vars of degree <= rem - e - 1
                rank += binomial((rem - e - 1) as u64 + k, k);
            }
            rem -= e;
        }
        rank as usize
    }
}

/// Rank of `a * b` as in [`Monomial::lex_rank`], without building the product.
#[inline]
pub(crate) fn lex_rank_of_product(a: &Monomial, b: &Monomial) -> usize {
    let n = a.exps.len();
    let mut rem: u32 = a.degree() + b.degree();
    let mut rank = 0u64;
    for i in 0..n.saturating_sub(1) {
        let e = a.exps[i] + b.exps[i];
        let k = (n - 1 - i) as u64;
        if rem > e {
            rank += binomial((rem - e - 1) as u64 + k, k);
        }
        rem -= e;
    }
    rank as usize
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r = 1u64;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum OrderKind {
    #[default]
    Grevlex,
    Grlex,
}

/// A graded monomial order. `perm[k]` is the index of the k-th most significant variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    perm: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder { kind, perm: (0..nvars).collect() }
    }

    pub fn with_precedence(kind: OrderKind, perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || seen[p] {
                return Err(Error::input(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        Ok(MonomialOrder { kind, perm })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn precedence(&self) -> &[usize] {
        &self.perm
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (da, db) = (a.degree(), b.degree());
        if da != db {
            return da.cmp(&db);
        }
        match self.kind {
            OrderKind::Grlex => {
                for &v in &self.perm {
                    match a.exps[v].cmp(&b.exps[v]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Grevlex => {
                for &v in self.perm.iter().rev() {
                    match a.exps[v].cmp(&b.exps[v]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderKind::Grevlex => f.write_str("grevlex"),
            OrderKind::Grlex => f.write_str("grlex"),
        }
    }
}

impl std::str::FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grevlex" => Ok(OrderKind::Grevlex),
            "grlex" | "glex" => Ok(OrderKind::Grlex),
            _ => Err(Error::input(format!("unknown monomial order '{s}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    #[test]
    fn grevlex_breaks_ties_on_last_variable() {
        let o = MonomialOrder::new(OrderKind::Grevlex, 3);
        // x*z^2 < y^3 in grevlex, but x*z^2 > y^3 in grlex
        assert_eq!(o.cmp(&m(&[1, 0, 2]), &m(&[0, 3, 0])), Ordering::Less);
        let g = MonomialOrder::new(OrderKind::Grlex, 3);
        assert_eq!(g.cmp(&m(&[1, 0, 2]), &m(&[0, 3, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[1, 1, 0])), Ordering::Less);
    }

    #[test]
    fn lex_rank_matches_enumeration() {
        for n in 1..5 {
            for d in 0..7 {
                let all = Monomial::all_of_degree(n, d);
                assert_eq!(all.len(), Monomial::count_of_degree(n, d));
                for (i, mon) in all.iter().enumerate() {
                    assert_eq!(mon.lex_rank(), i);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative(a in prop::collection::vec(0u32..5, 3),
                                     b in prop::collection::vec(0u32..5, 3),
                                     c in prop::collection::vec(0u32..5, 3)) {
            let (a, b, c) = (m(&a), m(&b), m(&c));
            for kind in [OrderKind::Grevlex, OrderKind::Grlex] {
                let o = MonomialOrder::new(kind, 3);
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&c), &b.mul(&c)));
                // refines divisibility
                prop_assert_ne!(o.cmp(&a, &a.mul(&c)), Ordering::Greater);
            }
        }
    }
}
