//! Homogeneous ideals and the operations on them.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::gb::{FreeModule, Gb, GbOptions, VTerm, Vector};
use crate::hilbert;
use crate::linalg;
use crate::monomial::{Monomial, MonomialOrder};
use crate::parse::parse_generators;
use crate::poly::Polynomial;
use crate::ring::{Ring, RingRef};

struct GbCache {
    basis: Vec<Polynomial>,
    reducer: Gb,
}

/// An ideal given by homogeneous generators. The reduced Gröbner basis and a
/// minimal generating set are computed on demand and cached.
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    gb: OnceLock<Arc<GbCache>>,
    mingens: OnceLock<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let out = Ideal::raw(&self.ring, self.gens.clone());
        if let Some(g) = self.gb.get() {
            let _ = out.gb.set(g.clone());
        }
        if let Some(m) = self.mingens.get() {
            let _ = out.mingens.set(m.clone());
        }
        out
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({self})")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

fn rank_one(ring: &RingRef) -> FreeModule {
    FreeModule::new(ring, vec![0])
}

fn to_vec(m: &FreeModule, f: &Polynomial) -> Vector {
    m.from_polys(std::slice::from_ref(f))
}

impl Ideal {
    fn raw(ring: &RingRef, gens: Vec<Polynomial>) -> Ideal {
        Ideal { ring: ring.clone(), gens, gb: OnceLock::new(), mingens: OnceLock::new() }
    }

    /// Validates that generators are nonzero, homogeneous and live in `ring`.
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Result<Ideal> {
        for (i, g) in gens.iter().enumerate() {
            if g.is_zero() {
                return Err(Error::input(format!("generator {i} is zero")));
            }
            if g.ring().nvars() != ring.nvars() || g.ring().field() != ring.field() {
                return Err(Error::input(format!("generator {i} lives in a different ring")));
            }
            if !g.is_homogeneous() {
                return Err(Error::input(format!("generator {i} ('{g}') is not homogeneous")));
            }
        }
        let gens = gens
            .into_iter()
            .map(|g| if Arc::ptr_eq(g.ring(), ring) { g } else { g.in_ring(ring) })
            .collect();
        Ok(Ideal::raw(ring, gens))
    }

    pub fn parse(ring: &RingRef, text: &str) -> Result<Ideal> {
        Ideal::new(ring, parse_generators(ring, text)?)
    }

    pub fn zero(ring: &RingRef) -> Ideal {
        Ideal::raw(ring, Vec::new())
    }

    pub fn unit(ring: &RingRef) -> Ideal {
        Ideal::raw(ring, vec![Polynomial::one(ring)])
    }

    /// The homogeneous maximal ideal `(x_1, .., x_N)`.
    pub fn maximal(ring: &RingRef) -> Ideal {
        Ideal::raw(ring, (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect())
    }

    pub fn from_monomials(ring: &RingRef, mons: &[Monomial]) -> Ideal {
        Ideal::raw(ring, mons.iter().map(|m| Polynomial::monomial(ring, m.clone())).collect())
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.gens.iter().map(|g| g.degree().unwrap_or(0)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    fn cache(&self) -> &GbCache {
        self.gb.get_or_init(|| {
            let m = rank_one(&self.ring);
            let inputs: Vec<Vector> = self.gens.iter().map(|g| to_vec(&m, g)).collect();
            let gb = Gb::compute(&m, &inputs, None, GbOptions::default()).expect("validated generators");
            let red = gb.reduced_basis();
            let basis: Vec<Polynomial> = red.iter().map(|v| m.to_polys(v).swap_remove(0)).collect();
            let reducer = Gb::from_basis(&m, &red).expect("nonzero basis");
            Arc::new(GbCache { basis, reducer })
        })
    }

    /// The reduced Gröbner basis, monic and ascending by lead monomial.
    pub fn groebner_basis(&self) -> &[Polynomial] {
        &self.cache().basis
    }

    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.groebner_basis()
            .iter()
            .map(|g| g.lead_monomial().expect("nonzero").clone())
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().iter().any(|g| g.is_unit())
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.len() == 1)
    }

    /// Remainder modulo the reduced Gröbner basis together with quotients
    /// `q` such that `f = Σ q_i g_i + r` over `groebner_basis()`.
    pub fn normal_form(&self, f: &Polynomial) -> Result<(Polynomial, Vec<Polynomial>)> {
        let c = self.cache();
        let m = rank_one(&self.ring);
        let mut rem = Polynomial::zero(&self.ring);
        let mut quo = vec![Polynomial::zero(&self.ring); c.basis.len()];
        // split into homogeneous components; the reducer works degree by degree
        let mut degs: Vec<u32> = f.terms().iter().map(|t| t.0.degree()).collect();
        degs.sort_unstable();
        degs.dedup();
        for d in degs {
            let (r, q) = c.reducer.divide(&to_vec(&m, &f.component(d)))?;
            rem = &rem + &m.to_polys(&r)[0];
            for (acc, part) in quo.iter_mut().zip(c.reducer.source().to_polys(&q)) {
                *acc = &*acc + &part;
            }
        }
        Ok((rem, quo))
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        let c = self.cache();
        let m = rank_one(&self.ring);
        let mut rem = Polynomial::zero(&self.ring);
        let mut degs: Vec<u32> = f.terms().iter().map(|t| t.0.degree()).collect();
        degs.sort_unstable();
        degs.dedup();
        for d in degs {
            let r = c.reducer.normal_form(&to_vec(&m, &f.component(d))).expect("homogeneous component");
            rem = &rem + &m.to_polys(&r)[0];
        }
        rem
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Equality of ideals via reduced Gröbner bases.
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        self.groebner_basis() == other.groebner_basis()
    }

    /// A minimal homogeneous generating set chosen from the given generators.
    pub fn mingens(&self) -> &[Polynomial] {
        self.mingens.get_or_init(|| {
            let m = rank_one(&self.ring);
            let inputs: Vec<Vector> = self.gens.iter().map(|g| to_vec(&m, g)).collect();
            let gb = Gb::compute(&m, &inputs, None, GbOptions::default()).expect("validated generators");
            let mut idx = gb.minimal_inputs().to_vec();
            idx.sort_unstable();
            idx.into_iter().map(|i| self.gens[i].clone()).collect()
        })
    }

    /// Same ideal with generators replaced by a minimal set, sorted by degree.
    pub fn minimalized(&self) -> Ideal {
        let mut g = self.mingens().to_vec();
        let ord = self.ring.order();
        g.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| ord.cmp(b.lead_monomial().unwrap(), a.lead_monomial().unwrap()))
        });
        let out = Ideal::raw(&self.ring, g.clone());
        if let Some(c) = self.gb.get() {
            let _ = out.gb.set(c.clone());
        }
        let _ = out.mingens.set(g);
        out
    }

    /// Minimal generators picked from the reduced Gröbner basis. For monomial
    /// ideals these are monomials.
    pub fn from_groebner_mingens(&self) -> Ideal {
        let basis = Ideal::raw(&self.ring, self.groebner_basis().to_vec());
        if let Some(c) = self.gb.get() {
            let _ = basis.gb.set(c.clone());
        }
        basis.minimalized()
    }

    pub fn mingen_degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.mingens().iter().map(|g| g.degree().unwrap_or(0)).collect();
        d.sort_unstable();
        d
    }

    /// The ideal generated by the minimal generators of degree at most `d`.
    pub fn truncated(&self, d: u32) -> Ideal {
        let g: Vec<Polynomial> = self
            .mingens()
            .iter()
            .filter(|g| g.degree().unwrap_or(0) <= d)
            .cloned()
            .collect();
        Ideal::raw(&self.ring, g)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ideal::raw(&self.ring, g)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(a * b);
            }
        }
        Ideal::raw(&self.ring, g)
    }

    /// `I : J`, computed as the first coordinates of the syzygies of
    /// `[f_1..f_k]^T` and `g_i e_j` in `R^k`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        if other.is_zero() {
            return Err(Error::input("colon by the zero ideal"));
        }
        if self.is_unit() || self.contains_ideal(other) {
            return Ok(Ideal::unit(&self.ring));
        }
        let fs: Vec<&Polynomial> = other.mingens().iter().collect();
        let k = fs.len();
        let dmax = fs.iter().map(|f| f.degree().unwrap() as i64).max().unwrap();
        let target = FreeModule::new(&self.ring, fs.iter().map(|f| dmax - f.degree().unwrap() as i64).collect());
        let mut inputs = vec![target.vector(fs.iter().enumerate().flat_map(|(j, f)| {
            f.terms().iter().map(move |(m, c)| VTerm { comp: j, mon: m.clone(), coeff: *c })
        }))];
        let gens = if self.gens.is_empty() { Vec::new() } else { self.mingens().to_vec() };
        for j in 0..k {
            for g in &gens {
                let mut parts = vec![Polynomial::zero(&self.ring); k];
                parts[j] = g.clone();
                inputs.push(target.from_polys(&parts));
            }
        }
        let gb = Gb::compute(&target, &inputs, None, GbOptions { syzygies: true, max_degree: None })?;
        let mut out = Vec::new();
        for s in gb.syzygies() {
            let h = gb.source().to_polys(s).swap_remove(0);
            if !h.is_zero() {
                out.push(h);
            }
        }
        Ok(Ideal::raw(&self.ring, out).from_groebner_mingens())
    }

    /// `I ∩ J` via syzygies of `e_1 + e_2`, `a_i e_1`, `b_j e_2`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let target = FreeModule::new(&self.ring, vec![0, 0]);
        let one = Polynomial::one(&self.ring);
        let zero = Polynomial::zero(&self.ring);
        let mut inputs = vec![target.from_polys(&[one.clone(), one])];
        for a in self.mingens() {
            inputs.push(target.from_polys(&[a.clone(), zero.clone()]));
        }
        for b in other.mingens() {
            inputs.push(target.from_polys(&[zero.clone(), b.clone()]));
        }
        let gb = Gb::compute(&target, &inputs, None, GbOptions { syzygies: true, max_degree: None })?;
        let out: Vec<Polynomial> = gb
            .syzygies()
            .iter()
            .map(|s| gb.source().to_polys(s).swap_remove(0))
            .filter(|h| !h.is_zero())
            .collect();
        Ok(Ideal::raw(&self.ring, out).from_groebner_mingens())
    }

    /// `dim_k (R/I)_j` for `0 <= j <= j_max`.
    pub fn hilbert_function(&self, j_max: u32) -> HilbertFunction {
        let leads = hilbert::minimalize_monomials(&self.lead_monomials());
        let n = self.ring.nvars();
        let values = (0..=j_max).map(|d| hilbert::count_standard(n, &leads, d) as u64).collect();
        HilbertFunction { values, numerator: hilbert::series_numerator(n, &leads), nvars: n }
    }

    /// Numerator `K(t)` of the Hilbert series `K(t) / (1-t)^N`.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        hilbert::series_numerator(self.ring.nvars(), &self.lead_monomials())
    }

    /// Krull dimension of `R/I` (`-1` for the unit ideal).
    pub fn dimension(&self) -> i64 {
        hilbert::dimension(self.ring.nvars(), &self.lead_monomials())
    }

    /// `(dim R/I, grade I)`; the unit ideal gives `(-1, N + 1)`.
    pub fn dimension_and_grade(&self) -> (i64, i64) {
        let d = self.dimension();
        (d, self.ring.nvars() as i64 - d)
    }

    pub fn grade(&self) -> i64 {
        self.dimension_and_grade().1
    }

    pub fn is_m_primary(&self) -> bool {
        self.dimension() == 0
    }

    /// Largest `j` with `(R/I)_j != 0`, for `𝔪`-primary ideals.
    pub fn top_degree(&self) -> Result<u32> {
        if !self.is_m_primary() {
            return Err(Error::input("ideal is not 𝔪-primary"));
        }
        let k = self.hilbert_numerator();
        // for 𝔪-primary I, K(t) = (1-t)^N H(t) with H the (finite) Hilbert polynomial
        let h = divide_by_one_minus_t(&k, self.ring.nvars());
        Ok(h.iter().rposition(|&c| c != 0).unwrap_or(0) as u32)
    }

    /// Standard monomials of degree `d`, in a fixed order.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        let leads = hilbert::minimalize_monomials(&self.lead_monomials());
        hilbert::standard_monomials(self.ring.nvars(), &leads, d)
    }

    /// Coordinates of `f mod I` on the standard monomials of its degree.
    pub fn coordinates(&self, f: &Polynomial, basis: &HashMap<Monomial, usize>, len: usize) -> Vec<u32> {
        let r = self.reduce(f);
        let mut v = vec![0u32; len];
        for (m, c) in r.terms() {
            v[basis[m]] = *c;
        }
        v
    }

    /// Homogeneous polynomials whose classes form a basis of the socle `(I : 𝔪)/I`.
    pub fn socle(&self) -> Result<Vec<Polynomial>> {
        if !self.is_m_primary() {
            return Err(Error::input("socle requires an 𝔪-primary ideal"));
        }
        let top = self.top_degree()?;
        let f = *self.ring.field();
        let n = self.ring.nvars();
        let mut out = Vec::new();
        for j in 0..=top {
            let here = self.standard_monomials(j);
            let next = self.standard_monomials(j + 1);
            let idx: HashMap<Monomial, usize> = next.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
            // rows: (variable, next-basis coordinate); columns: standard monomials of degree j
            let mut rows: Vec<Vec<u32>> = vec![vec![0; here.len()]; n * next.len()];
            for (c, m) in here.iter().enumerate() {
                for v in 0..n {
                    let xm = Polynomial::monomial(&self.ring, m.mul(&Monomial::var(n, v, 1)));
                    for (r, val) in self.coordinates(&xm, &idx, next.len()).into_iter().enumerate() {
                        rows[v * next.len() + r][c] = val;
                    }
                }
            }
            for k in linalg::kernel(&f, &rows, here.len()) {
                out.push(Polynomial::from_terms(
                    &self.ring,
                    here.iter().cloned().zip(k).filter(|(_, c)| *c != 0),
                ));
            }
        }
        Ok(out)
    }

    /// Rewrites the ideal in a ring with another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ideal> {
        let ring = self.ring.with_order(order)?;
        Ideal::new(&ring, self.gens.iter().map(|g| g.in_ring(&ring)).collect())
    }
}

/// Reduced Gröbner basis of `gens` under `order`, returned in the reordered ring.
pub fn groebner_basis(gens: &[Polynomial], order: &MonomialOrder) -> Result<Vec<Polynomial>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let ring: RingRef = if first.ring().order() == order {
        first.ring().clone()
    } else {
        Ring::new(first.ring().names().to_vec(), *first.ring().field(), order.clone())?
    };
    for g in gens {
        if g.ring().nvars() != ring.nvars() {
            return Err(Error::input("generators have inconsistent variable counts"));
        }
    }
    let ideal = Ideal::new(&ring, gens.iter().map(|g| g.in_ring(&ring)).collect())?;
    Ok(ideal.groebner_basis().to_vec())
}

pub(crate) fn divide_by_one_minus_t(k: &[i64], times: usize) -> Vec<i64> {
    let mut h = k.to_vec();
    for _ in 0..times {
        let mut carry = 0;
        for c in h.iter_mut() {
            carry += *c;
            *c = carry;
        }
    }
    h
}

/// Values of `dim_k (R/I)_j` up to some degree, plus the Hilbert series numerator
/// which determines the tail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFunction {
    pub values: Vec<u64>,
    pub numerator: Vec<i64>,
    pub nvars: usize,
}

impl HilbertFunction {
    /// Value at any degree, computed from the series when beyond the stored range.
    pub fn at(&self, j: i64) -> u64 {
        if j < 0 {
            return 0;
        }
        if let Some(v) = self.values.get(j as usize) {
            return *v;
        }
        let mut s = self.numerator.clone();
        s.resize(j as usize + 1, 0);
        divide_by_one_minus_t(&s, self.nvars)[j as usize] as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(s: &str) -> Ideal {
        Ideal::parse(&Ring::standard(), s).unwrap()
    }

    #[test]
    fn monomial_colon() {
        let i = ideal("x^2, y^2");
        let j = ideal("x");
        assert_eq!(i.colon(&j).unwrap().to_string(), "x, y^2");
        let i4 = ideal("x*z, y*z, z^12, x^4, y^7");
        assert_eq!(i4.colon(&ideal("z")).unwrap().to_string(), "x, y, z^11");
        assert!(i4.colon(&i4).unwrap().is_unit());
    }

    #[test]
    fn normal_form_certificate() {
        let i = ideal("y*z, x^5, y^12 - z^12");
        let r = i.ring().clone();
        let f = crate::parse::parse_polynomial(&r, "z^13 + x^6*y").unwrap();
        let (rem, q) = i.normal_form(&f).unwrap();
        assert_eq!(rem.to_string(), "0");
        let back = q.iter().zip(i.groebner_basis()).fold(rem, |acc, (a, g)| &acc + &(a * g));
        assert_eq!(back, f);
        assert!(!ideal("y*z, x^5, y^12 - z^12").mingens().is_empty());
        let (rem, _) = ideal("x").normal_form(&crate::parse::parse_polynomial(&r, "y^2").unwrap()).unwrap();
        assert_eq!(rem.to_string(), "y^2");
    }

    #[test]
    fn grades() {
        assert_eq!(ideal("x, y").dimension_and_grade(), (1, 2));
        assert_eq!(ideal("x*z, y*z").dimension_and_grade(), (2, 1));
        assert_eq!(ideal("x^2, y^9, z^12, y^4*z, x*y^3*z, x*y*z^5").dimension_and_grade(), (0, 3));
        assert_eq!(ideal("x*z, y*z, x^4").grade(), 2);
        assert_eq!(Ideal::unit(&Ring::standard()).dimension(), -1);
    }

    #[test]
    fn socles() {
        assert_eq!(ideal("x, y, z").socle().unwrap().len(), 1);
        let s = ideal("x^2, y^2, z^2").socle().unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].to_string(), "x*y*z");
        assert_eq!(ideal("x*z, y*z, z^12, x^4, y^7").socle().unwrap().len(), 2);
        assert!(ideal("x, y").socle().is_err());
    }

    #[test]
    fn truncation_and_hf() {
        let i = ideal("x, y^2");
        assert_eq!(i.truncated(1).to_string(), "x");
        let hf = Ideal::zero(&Ring::standard()).hilbert_function(4);
        assert_eq!(hf.values, vec![1, 3, 6, 10, 15]);
        assert_eq!(hf.at(10), 66);
        let ci = ideal("x^2, y^5, z^12").hilbert_function(20);
        assert_eq!(ci.at(16), 1);
        assert_eq!(ci.at(17), 0);
        assert_eq!(ideal("x^2, y^5, z^12").top_degree().unwrap(), 16);
    }
}
