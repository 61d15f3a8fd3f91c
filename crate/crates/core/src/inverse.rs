//! Macaulay inverse systems: the contraction action of `R` on the dual ring
//! `T = k[X_1..X_N]`, inverse systems of 𝔪-primary ideals, and annihilators.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::linalg::{self, Span};
use crate::linkage::CompleteIntersection;
use crate::monomial::Monomial;
use crate::parse::parse_polynomial;
use crate::poly::Polynomial;
use crate::ring::RingRef;

/// An element of the dual ring; its variables print in upper case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualElement {
    poly: Polynomial,
}

impl DualElement {
    /// `poly` is read with the variables of `ring`'s dual.
    pub fn new(ring: &RingRef, poly: &Polynomial) -> DualElement {
        DualElement { poly: poly.in_ring(&ring.dual()) }
    }

    pub fn parse(ring: &RingRef, text: &str) -> Result<DualElement> {
        Ok(DualElement { poly: parse_polynomial(&ring.dual(), text)? })
    }

    pub fn zero(ring: &RingRef) -> DualElement {
        DualElement { poly: Polynomial::zero(&ring.dual()) }
    }

    pub fn monomial(ring: &RingRef, m: Monomial) -> DualElement {
        DualElement { poly: Polynomial::monomial(&ring.dual(), m) }
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        self.poly.terms()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn degree(&self) -> Option<u32> {
        self.poly.degree()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.poly.is_homogeneous()
    }

    pub fn as_polynomial(&self) -> &Polynomial {
        &self.poly
    }

    pub fn scale(&self, c: u32) -> DualElement {
        DualElement { poly: self.poly.scale(c) }
    }

    pub fn add(&self, other: &DualElement) -> DualElement {
        DualElement { poly: &self.poly + &other.poly }
    }
}

impl fmt::Display for DualElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// `f ∘ G`: `x^a ∘ X^b = X^{b-a}` when `a ≤ b`, else 0, extended bilinearly.
pub fn contract(f: &Polynomial, g: &DualElement) -> DualElement {
    let field = f.ring().field();
    let dual = g.poly.ring();
    let mut terms = Vec::new();
    for (a, c) in f.terms() {
        for (b, d) in g.poly.terms() {
            if let Some(q) = b.div(a) {
                terms.push((q, field.mul(*c, *d)));
            }
        }
    }
    DualElement { poly: Polynomial::from_terms(dual, terms) }
}

fn coords(p: &Polynomial, d: u32) -> Vec<u32> {
    let n = p.ring().nvars();
    let mut v = vec![0u32; Monomial::count_of_degree(n, d)];
    for (m, c) in p.terms() {
        if m.degree() == d {
            v[m.lex_rank()] = *c;
        }
    }
    v
}

fn from_coords(ring: &RingRef, v: &[u32], d: u32) -> Polynomial {
    let mons = Monomial::all_of_degree(ring.nvars(), d);
    Polynomial::from_terms(ring, mons.into_iter().zip(v.iter().copied()).filter(|t| t.1 != 0))
}

fn check_characteristic(ring: &RingRef, top: u32) -> Result<()> {
    if ring.field().modulus() <= top {
        return Err(Error::input(format!(
            "characteristic {} is too small for contraction up to degree {top}",
            ring.field().modulus()
        )));
    }
    Ok(())
}

/// A graded `R`-submodule of `T`, stored as one span per degree `0..=top`.
#[derive(Clone, Debug)]
pub struct InverseSystem {
    ring: RingRef,
    pieces: Vec<Span>,
    /// Elements it was generated from, if it was built that way.
    given: Vec<DualElement>,
}

impl InverseSystem {
    /// The submodule generated by homogeneous `gens` under contraction.
    pub fn generated_by(ring: &RingRef, gens: &[DualElement]) -> Result<InverseSystem> {
        let gens: Vec<DualElement> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        if let Some(g) = gens.iter().find(|g| !g.is_homogeneous()) {
            return Err(Error::input(format!("{g} is not homogeneous")));
        }
        let top = gens.iter().filter_map(|g| g.degree()).max();
        let n = ring.nvars();
        let mut pieces: Vec<Span> = Vec::new();
        if let Some(top) = top {
            check_characteristic(ring, top)?;
            pieces = (0..=top).map(|j| Span::new(*ring.field(), Monomial::count_of_degree(n, j))).collect();
            for g in &gens {
                let e = g.degree().unwrap();
                for j in 0..=e {
                    for m in Monomial::all_of_degree(n, e - j) {
                        let h = contract(&Polynomial::monomial(ring, m), g);
                        if !h.is_zero() {
                            pieces[j as usize].insert(&coords(&h.poly, j));
                        }
                    }
                }
            }
            while pieces.last().is_some_and(|s| s.rank() == 0) {
                pieces.pop();
            }
        }
        Ok(InverseSystem { ring: ring.clone(), pieces, given: gens })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    /// Highest degree with a nonzero piece, or `None` for the zero module.
    pub fn top_degree(&self) -> Option<u32> {
        self.pieces.len().checked_sub(1).map(|d| d as u32)
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    /// `dim_k M_j`.
    pub fn dim(&self, j: i64) -> usize {
        if j < 0 {
            return 0;
        }
        self.pieces.get(j as usize).map_or(0, |s| s.rank())
    }

    /// A basis of `M_j`.
    pub fn basis(&self, j: u32) -> Vec<DualElement> {
        let dual = self.ring.dual();
        self.pieces
            .get(j as usize)
            .map(|s| s.basis().map(|v| DualElement { poly: from_coords(&dual, v, j) }).collect())
            .unwrap_or_default()
    }

    pub fn contains(&self, g: &DualElement) -> bool {
        if g.is_zero() {
            return true;
        }
        let Some(d) = g.degree() else { return false };
        g.is_homogeneous() && self.pieces.get(d as usize).is_some_and(|s| s.contains(&coords(&g.poly, d)))
    }

    /// Closed under contraction by each variable.
    pub fn is_closed(&self) -> bool {
        let n = self.ring.nvars();
        (1..self.pieces.len() as u32).all(|j| {
            self.basis(j).iter().all(|g| {
                (0..n).all(|i| self.contains(&contract(&Polynomial::var(&self.ring, i), g)))
            })
        })
    }

    /// Same graded pieces.
    pub fn same_as(&self, other: &InverseSystem) -> bool {
        self.pieces.len() == other.pieces.len()
            && (0..self.pieces.len() as u32)
                .all(|j| self.dim(j as i64) == other.dim(j as i64) && self.basis(j).iter().all(|g| other.contains(g)))
    }

    /// Minimal generators, found from the top degree down: elements of `M_j` outside the
    /// contractions of `M_{j+1}`. Given generators are preferred over basis vectors.
    pub fn minimal_generators(&self) -> Vec<DualElement> {
        let n = self.ring.nvars();
        let mut out = Vec::new();
        for j in (0..self.pieces.len() as u32).rev() {
            let mut span = Span::new(*self.ring.field(), Monomial::count_of_degree(n, j));
            for g in self.basis(j + 1) {
                for i in 0..n {
                    let h = contract(&Polynomial::var(&self.ring, i), &g);
                    span.insert(&coords(&h.poly, j));
                }
            }
            let candidates = self.given.iter().filter(|g| g.degree() == Some(j)).cloned().chain(self.basis(j));
            for g in candidates {
                if span.insert(&coords(&g.poly, j)) {
                    out.push(g);
                }
            }
        }
        out
    }

    /// Rank of a minimal generating set.
    pub fn num_generators(&self) -> usize {
        self.minimal_generators().len()
    }
}

/// Per-degree orthogonal complement of `I_j` for `j ≤ j_max`; for 𝔪-primary `I`
/// `j_max` defaults to the top nonzero degree of `R/I`.
pub fn inverse_system(ideal: &Ideal, j_max: Option<u32>) -> Result<InverseSystem> {
    let ring = ideal.ring();
    let top = match j_max {
        Some(j) => j,
        None if ideal.is_unit() => 0,
        None if ideal.is_m_primary() => ideal.top_degree()?,
        None => return Err(Error::input("the inverse system of a non-𝔪-primary ideal needs a degree bound")),
    };
    check_characteristic(ring, top)?;
    let n = ring.nvars();
    let mut pieces = Vec::new();
    if !ideal.is_unit() {
        for j in 0..=top {
            let size = Monomial::count_of_degree(n, j);
            let mut rows = Vec::new();
            for g in ideal.mingens() {
                let e = g.degree().unwrap();
                if e > j {
                    continue;
                }
                for m in Monomial::all_of_degree(n, j - e) {
                    rows.push(coords(&g.mul_term(&m, 1), j));
                }
            }
            let mut span = Span::new(*ring.field(), size);
            for v in linalg::kernel(ring.field(), &rows, size) {
                span.insert(&v);
            }
            pieces.push(span);
        }
        while pieces.last().is_some_and(|s: &Span| s.rank() == 0) {
            pieces.pop();
        }
    }
    Ok(InverseSystem { ring: ring.clone(), pieces, given: Vec::new() })
}

/// `ann_R(M)`: the complement of `M_j` in each degree up to the top, plus everything above it.
pub fn annihilate(m: &InverseSystem) -> Result<Ideal> {
    let ring = &m.ring;
    let n = ring.nvars();
    let Some(top) = m.top_degree() else {
        return Ok(Ideal::unit(ring));
    };
    let mut gens = Vec::new();
    for j in 0..=top {
        let size = Monomial::count_of_degree(n, j);
        let rows: Vec<Vec<u32>> = m.pieces[j as usize].basis().cloned().collect();
        for v in linalg::kernel(ring.field(), &rows, size) {
            gens.push(from_coords(ring, &v, j));
        }
    }
    for mono in Monomial::all_of_degree(n, top + 1) {
        gens.push(Polynomial::monomial(ring, mono));
    }
    Ok(Ideal::new(ring, gens)?.from_groebner_mingens())
}

/// The generator of the principal inverse system of a Gorenstein 𝔪-primary ideal.
pub fn dual_socle_generator(ideal: &Ideal) -> Result<DualElement> {
    let sys = inverse_system(ideal, None)?;
    let mut g = sys.minimal_generators();
    if g.len() != 1 {
        return Err(Error::precondition(format!("inverse system has {} generators, not 1", g.len())));
    }
    Ok(g.pop().unwrap())
}

/// `(C:I)^{-1} = ⟨f_1∘G, …, f_n∘G⟩` where `C^{-1} = ⟨G⟩`.
pub fn link_dual_generators_with(g: &DualElement, ci: &CompleteIntersection, ideal: &Ideal) -> Result<InverseSystem> {
    for c in ci.gens() {
        if !ideal.contains(c) {
            return Err(Error::precondition(format!("{c} is not in the ideal")));
        }
    }
    let images: Vec<DualElement> = ideal.gens().iter().map(|f| contract(f, g)).collect();
    InverseSystem::generated_by(ideal.ring(), &images)
}

/// As [`link_dual_generators_with`], computing `G` from `C`.
pub fn link_dual_generators(ci: &CompleteIntersection, ideal: &Ideal) -> Result<InverseSystem> {
    let g = dual_socle_generator(ci.ideal())?;
    link_dual_generators_with(&g, ci, ideal)
}

/// `dim_k M_j`.
pub fn dual_hilbert(m: &InverseSystem, j: i64) -> usize {
    m.dim(j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn contraction_rules() {
        let r = Ring::standard();
        let g = DualElement::parse(&r, "X^2*Y").unwrap();
        let x = Polynomial::var(&r, 0);
        assert_eq!(contract(&x, &g).to_string(), "X*Y");
        let xy = parse_polynomial(&r, "x^2").unwrap();
        assert!(contract(&xy, &DualElement::parse(&r, "X*Y").unwrap()).is_zero());
    }

    #[test]
    fn small_systems() {
        let r = Ring::standard();
        let m = Ideal::maximal(&r);
        let s = inverse_system(&m, None).unwrap();
        assert_eq!(s.minimal_generators(), vec![DualElement::parse(&r, "1").unwrap()]);
        assert!(annihilate(&s).unwrap().same_ideal(&m));
        let xy = InverseSystem::generated_by(&r, &[DualElement::parse(&r, "X*Y").unwrap()]).unwrap();
        assert!(annihilate(&xy).unwrap().same_ideal(&Ideal::parse(&r, "x^2, y^2, z").unwrap()));
        assert_eq!((0..4).map(|j| dual_hilbert(&xy, j)).collect::<Vec<_>>(), vec![1, 2, 1, 0]);
        assert!(xy.is_closed());
    }

    #[test]
    fn small_characteristic_is_rejected() {
        let r = Ring::with_vars(&["x", "y", "z"], crate::field::PrimeField::new(5).unwrap());
        let i = Ideal::parse(&r, "x^3, y^3, z^3").unwrap();
        assert!(inverse_system(&i, None).is_err());
    }
}
