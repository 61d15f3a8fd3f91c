//! Gröbner bases of graded submodules of free modules.
//!
//! Everything is homogeneous, so reduction runs on a dense accumulator that
//! holds one graded piece of the ambient module. Terms are ordered by total
//! degree, then by the ring's monomial order, then by component (lower index
//! is larger).
//!
//! A run can track cofactors: every basis element remembers how it is
//! written in terms of the inputs. The zero reductions then give generators of
//! the syzygy module of the inputs.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::monomial::{lex_rank_of_product, Monomial};
use crate::poly::Polynomial;
use crate::ring::RingRef;

/// A graded free module `⊕ R(-shift_c)`.
#[derive(Clone, Debug)]
pub struct FreeModule {
    pub ring: RingRef,
    pub shifts: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VTerm {
    pub comp: usize,
    pub mon: Monomial,
    pub coeff: u32,
}

/// Element of a free module; terms strictly descending in the module order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Vector {
    pub terms: Vec<VTerm>,
}

impl FreeModule {
    pub fn new(ring: &RingRef, shifts: Vec<i64>) -> Self {
        FreeModule { ring: ring.clone(), shifts }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn term_degree(&self, comp: usize, mon: &Monomial) -> i64 {
        mon.degree() as i64 + self.shifts[comp]
    }

    pub fn cmp_terms(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        let da = self.term_degree(a.0, a.1);
        let db = self.term_degree(b.0, b.1);
        da.cmp(&db)
            .then_with(|| self.ring.order().cmp(a.1, b.1))
            .then_with(|| b.0.cmp(&a.0))
    }

    /// Sorts and merges arbitrary terms.
    pub fn vector(&self, terms: impl IntoIterator<Item = VTerm>) -> Vector {
        let f = self.ring.field();
        let mut t: Vec<VTerm> = terms.into_iter().collect();
        t.sort_by(|a, b| self.cmp_terms((b.comp, &b.mon), (a.comp, &a.mon)));
        let mut out: Vec<VTerm> = Vec::with_capacity(t.len());
        for x in t {
            match out.last_mut() {
                Some(l) if l.comp == x.comp && l.mon == x.mon => l.coeff = f.add(l.coeff, x.coeff),
                _ => out.push(x),
            }
        }
        out.retain(|x| x.coeff != 0);
        Vector { terms: out }
    }

    /// Vector whose `c`-th coordinate is `polys[c]`.
    pub fn from_polys(&self, polys: &[Polynomial]) -> Vector {
        self.vector(polys.iter().enumerate().flat_map(|(c, p)| {
            p.terms().iter().map(move |(m, a)| VTerm { comp: c, mon: m.clone(), coeff: *a })
        }))
    }

    pub fn to_polys(&self, v: &Vector) -> Vec<Polynomial> {
        let mut parts: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); self.rank()];
        for t in &v.terms {
            parts[t.comp].push((t.mon.clone(), t.coeff));
        }
        parts.into_iter().map(|p| Polynomial::from_terms(&self.ring, p)).collect()
    }

    /// Standard basis vector `e_c`.
    pub fn basis_vector(&self, c: usize) -> Vector {
        Vector {
            terms: vec![VTerm { comp: c, mon: Monomial::one(self.ring.nvars()), coeff: 1 }],
        }
    }

    /// Degree of a homogeneous vector; `None` for zero or inhomogeneous input.
    pub fn degree_of(&self, v: &Vector) -> Option<i64> {
        let d = self.term_degree(v.terms.first()?.comp, &v.terms[0].mon);
        v.terms.iter().all(|t| self.term_degree(t.comp, &t.mon) == d).then_some(d)
    }

    pub fn add_scaled(&self, a: &Vector, b: &Vector, c: u32) -> Vector {
        let f = self.ring.field();
        self.vector(a.terms.iter().cloned().chain(
            b.terms.iter().map(|t| VTerm { comp: t.comp, mon: t.mon.clone(), coeff: f.mul(t.coeff, c) }),
        ))
    }

    pub fn scale(&self, a: &Vector, c: u32) -> Vector {
        let f = self.ring.field();
        if c == 0 {
            return Vector::default();
        }
        Vector {
            terms: a
                .terms
                .iter()
                .map(|t| VTerm { comp: t.comp, mon: t.mon.clone(), coeff: f.mul(t.coeff, c) })
                .collect(),
        }
    }

    pub fn mul_poly(&self, a: &Vector, p: &Polynomial) -> Vector {
        let f = self.ring.field();
        self.vector(a.terms.iter().flat_map(|t| {
            p.terms().iter().map(move |(m, c)| VTerm {
                comp: t.comp,
                mon: t.mon.mul(m),
                coeff: f.mul(t.coeff, *c),
            })
        }))
    }
}

impl Vector {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&VTerm> {
        self.terms.first()
    }
}

/// Dense index of one graded piece of a free module.
#[derive(Debug)]
struct Table {
    offsets: Vec<Option<usize>>,
    size: usize,
    /// Dense positions in descending term order.
    desc: Vec<usize>,
    /// `(comp, mon)` at each dense position.
    terms: Vec<(usize, Monomial)>,
}

impl Table {
    fn build(module: &FreeModule, deg: i64) -> Table {
        let n = module.ring.nvars();
        let mut offsets = vec![None; module.rank()];
        let mut terms = Vec::new();
        for (c, &s) in module.shifts.iter().enumerate() {
            let d = deg - s;
            if d < 0 {
                continue;
            }
            offsets[c] = Some(terms.len());
            terms.extend(Monomial::all_of_degree(n, d as u32).into_iter().map(|m| (c, m)));
        }
        let mut desc: Vec<usize> = (0..terms.len()).collect();
        desc.sort_by(|&a, &b| {
            let (ta, tb) = (&terms[a], &terms[b]);
            module.cmp_terms((tb.0, &tb.1), (ta.0, &ta.1))
        });
        Table { offsets, size: terms.len(), desc, terms }
    }

    #[inline]
    fn index(&self, comp: usize, mon: &Monomial) -> usize {
        self.offsets[comp].expect("term in table") + mon.lex_rank()
    }

    #[inline]
    fn index_of_product(&self, comp: usize, t: &Monomial, mon: &Monomial) -> usize {
        self.offsets[comp].expect("term in table") + lex_rank_of_product(t, mon)
    }

    fn to_vector(&self, acc: &[u32]) -> Vector {
        Vector {
            terms: self
                .desc
                .iter()
                .filter(|&&i| acc[i] != 0)
                .map(|&i| VTerm { comp: self.terms[i].0, mon: self.terms[i].1.clone(), coeff: acc[i] })
                .collect(),
        }
    }
}

#[derive(Default)]
struct TableCache {
    target: HashMap<i64, Arc<Table>>,
    source: HashMap<i64, Arc<Table>>,
}

#[derive(Clone, Debug)]
struct Elem {
    v: Vector,
    cof: Option<Vector>,
    deg: i64,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct GbOptions {
    /// Track cofactors and collect syzygies of the inputs.
    pub syzygies: bool,
    /// Stop after this degree; the result is then a truncated basis.
    pub max_degree: Option<i64>,
}

/// Result of a Buchberger run.
pub struct Gb {
    target: FreeModule,
    source: FreeModule,
    elems: Vec<Elem>,
    /// Per component, `(lead monomial, elem index)` in insertion order.
    reducers: Vec<Vec<(Monomial, usize)>>,
    minimal_inputs: Vec<usize>,
    syzygies: Vec<Vector>,
    tracked: bool,
    max_degree: Option<i64>,
    cache: Mutex<TableCache>,
}

#[derive(PartialEq, Eq, PartialOrd, Ord, Clone, Copy, Debug)]
struct Pair {
    deg: i64,
    j: usize,
    i: usize,
}

impl Gb {
    /// Runs Buchberger's algorithm degree by degree on homogeneous `inputs`.
    ///
    /// `source_shifts[k]` is the degree of `inputs[k]`; it is needed for zero inputs.
    pub fn compute(
        target: &FreeModule,
        inputs: &[Vector],
        source_shifts: Option<Vec<i64>>,
        opts: GbOptions,
    ) -> Result<Gb> {
        let shifts = match source_shifts {
            Some(s) => {
                if s.len() != inputs.len() {
                    return Err(Error::input("source shift count differs from input count"));
                }
                s
            }
            None => inputs
                .iter()
                .map(|v| target.degree_of(v).unwrap_or(0))
                .collect(),
        };
        for (k, v) in inputs.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if v.terms.iter().any(|t| t.comp >= target.rank() || t.mon.nvars() != target.ring.nvars()) {
                return Err(Error::input("vector does not live in the target module"));
            }
            match target.degree_of(v) {
                Some(d) if d == shifts[k] => {}
                Some(d) => {
                    return Err(Error::input(format!(
                        "input {k} has degree {d}, expected {}",
                        shifts[k]
                    )))
                }
                None => return Err(Error::input(format!("input {k} is not homogeneous"))),
            }
        }
        let mut gb = Gb {
            target: target.clone(),
            source: FreeModule::new(&target.ring, shifts),
            elems: Vec::new(),
            reducers: vec![Vec::new(); target.rank()],
            minimal_inputs: Vec::new(),
            syzygies: Vec::new(),
            tracked: opts.syzygies,
            max_degree: opts.max_degree,
            cache: Mutex::new(TableCache::default()),
        };
        gb.run(inputs)?;
        Ok(gb)
    }

    /// Wraps an existing basis without completing it, with `e_k` as the cofactor of element `k`.
    /// Used to read off quotients when the caller already has a Gröbner basis.
    pub fn from_basis(target: &FreeModule, basis: &[Vector]) -> Result<Gb> {
        let shifts: Vec<i64> = basis
            .iter()
            .map(|v| target.degree_of(v).ok_or_else(|| Error::input("basis element not homogeneous")))
            .collect::<Result<_>>()?;
        let mut gb = Gb {
            target: target.clone(),
            source: FreeModule::new(&target.ring, shifts),
            elems: Vec::new(),
            reducers: vec![Vec::new(); target.rank()],
            minimal_inputs: Vec::new(),
            syzygies: Vec::new(),
            tracked: true,
            max_degree: None,
            cache: Mutex::new(TableCache::default()),
        };
        let f = *target.ring.field();
        for (k, v) in basis.iter().enumerate() {
            let lc = v.lead().map(|t| t.coeff).ok_or_else(|| Error::input("zero basis element"))?;
            let inv = f.inv(lc);
            let cof = gb.source.scale(&gb.source.basis_vector(k), inv);
            gb.push_elem(target.scale(v, inv), Some(cof), gb.source.shifts[k]);
        }
        Ok(gb)
    }

    pub fn target(&self) -> &FreeModule {
        &self.target
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }

    /// Indices of the inputs that were not in the span of earlier data: a minimal generating set.
    pub fn minimal_inputs(&self) -> &[usize] {
        &self.minimal_inputs
    }

    /// Generators of the syzygy module of the inputs (not minimal).
    pub fn syzygies(&self) -> &[Vector] {
        &self.syzygies
    }

    /// Leading terms of all computed elements.
    pub fn lead_terms(&self) -> Vec<(usize, Monomial)> {
        self.elems
            .iter()
            .map(|e| (e.v.terms[0].comp, e.v.terms[0].mon.clone()))
            .collect()
    }

    fn table(&self, source: bool, deg: i64) -> Arc<Table> {
        let mut cache = self.cache.lock().expect("table cache poisoned");
        let (map, module) = if source {
            (&mut cache.source, &self.source)
        } else {
            (&mut cache.target, &self.target)
        };
        map.entry(deg)
            .or_insert_with(|| Arc::new(Table::build(module, deg)))
            .clone()
    }

    fn densify(&self, table: &Table, v: &Vector) -> Vec<u32> {
        let mut acc = vec![0u32; table.size];
        for t in &v.terms {
            acc[table.index(t.comp, &t.mon)] = t.coeff;
        }
        acc
    }

    fn push_elem(&mut self, v: Vector, cof: Option<Vector>, deg: i64) -> usize {
        let k = self.elems.len();
        let lead = v.terms[0].clone();
        self.reducers[lead.comp].push((lead.mon, k));
        self.elems.push(Elem { v, cof, deg });
        k
    }

    /// Reduces the dense pair `(acc, cof)` of degree `deg` in place.
    /// `full` also reduces non-leading terms. Only elements allowed by `use_elem` act as reducers.
    #[allow(clippy::too_many_arguments)]
    fn reduce_dense(
        &self,
        table: &Table,
        acc: &mut [u32],
        mut cof: Option<(&Table, &mut [u32])>,
        full: bool,
        skip_lead: bool,
        use_elem: &dyn Fn(usize) -> bool,
    ) {
        let f = *self.target.ring.field();
        let p = f.modulus() as u64;
        let mut first = true;
        for &pos in &table.desc {
            let c = acc[pos];
            if c == 0 {
                continue;
            }
            if first && skip_lead {
                first = false;
                continue;
            }
            first = false;
            let (comp, mon) = &table.terms[pos];
            let found = self.reducers[*comp]
                .iter()
                .find(|(lm, k)| use_elem(*k) && lm.divides(mon));
            let Some((lm, k)) = found else {
                if full {
                    continue;
                }
                return;
            };
            let t = mon.div(lm).expect("divides");
            let neg = p as u32 - c;
            let e = &self.elems[*k];
            for term in &e.v.terms {
                let i = table.index_of_product(term.comp, &t, &term.mon);
                acc[i] = ((acc[i] as u64 + neg as u64 * term.coeff as u64) % p) as u32;
            }
            debug_assert_eq!(acc[pos], 0);
            if let Some((ct, ca)) = cof.as_mut() {
                if let Some(ec) = &e.cof {
                    for term in &ec.terms {
                        let i = ct.index_of_product(term.comp, &t, &term.mon);
                        ca[i] = ((ca[i] as u64 + neg as u64 * term.coeff as u64) % p) as u32;
                    }
                }
            }
        }
    }

    fn run(&mut self, inputs: &[Vector]) -> Result<()> {
        let f = *self.target.ring.field();
        let mut order: Vec<usize> = (0..inputs.len()).collect();
        order.sort_by_key(|&k| self.source.shifts[k]);
        let mut next_input = 0;
        let mut queue: BTreeSet<Pair> = BTreeSet::new();
        let mut pending: HashSet<(usize, usize)> = HashSet::new();
        let rank_one = self.target.rank() == 1;

        loop {
            let dp = queue.first().map(|p| p.deg);
            let di = order.get(next_input).map(|&k| self.source.shifts[k]);
            let deg = match (dp, di) {
                (None, None) => break,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (Some(a), Some(b)) => a.min(b),
            };
            if self.max_degree.is_some_and(|m| deg > m) {
                break;
            }
            let table = self.table(false, deg);
            let ctable = if self.tracked { Some(self.table(true, deg)) } else { None };

            // S-pairs first, then inputs of this degree.
            let mut new_elems = Vec::new();
            while let Some(&pair) = queue.first() {
                if pair.deg != deg {
                    break;
                }
                queue.pop_first();
                pending.remove(&(pair.i, pair.j));
                let (i, j) = (pair.i, pair.j);
                let li = &self.elems[i].v.terms[0];
                let lj = &self.elems[j].v.terms[0];
                let l = li.mon.lcm(&lj.mon);
                let chain = self.reducers[li.comp].iter().any(|(lk, k)| {
                    *k != i
                        && *k != j
                        && lk.divides(&l)
                        && !pending.contains(&(i.min(*k), i.max(*k)))
                        && !pending.contains(&(j.min(*k), j.max(*k)))
                });
                if chain {
                    continue;
                }
                let ti = l.div(&li.mon).expect("lcm");
                let tj = l.div(&lj.mon).expect("lcm");
                let mut acc = vec![0u32; table.size];
                for t in &self.elems[i].v.terms {
                    let x = table.index_of_product(t.comp, &ti, &t.mon);
                    acc[x] = f.add(acc[x], t.coeff);
                }
                for t in &self.elems[j].v.terms {
                    let x = table.index_of_product(t.comp, &tj, &t.mon);
                    acc[x] = f.sub(acc[x], t.coeff);
                }
                let mut cacc = ctable.as_ref().map(|ct| {
                    let mut ca = vec![0u32; ct.size];
                    for (e, tt, sign) in [(i, &ti, false), (j, &tj, true)] {
                        for t in &self.elems[e].cof.as_ref().expect("tracked").terms {
                            let x = ct.index_of_product(t.comp, tt, &t.mon);
                            ca[x] = if sign { f.sub(ca[x], t.coeff) } else { f.add(ca[x], t.coeff) };
                        }
                    }
                    ca
                });
                self.reduce_dense(
                    &table,
                    &mut acc,
                    ctable.as_deref().zip(cacc.as_deref_mut()),
                    true,
                    false,
                    &|_| true,
                );
                if let Some(k) = self.absorb(&table, ctable.as_deref(), &acc, cacc.as_deref(), deg) {
                    new_elems.push(k);
                }
            }

            while next_input < order.len() && self.source.shifts[order[next_input]] == deg {
                let k = order[next_input];
                next_input += 1;
                let mut acc = self.densify(&table, &inputs[k]);
                let mut cacc = ctable.as_ref().map(|ct| {
                    let mut ca = vec![0u32; ct.size];
                    ca[ct.index(k, &Monomial::one(self.target.ring.nvars()))] = 1;
                    ca
                });
                self.reduce_dense(
                    &table,
                    &mut acc,
                    ctable.as_deref().zip(cacc.as_deref_mut()),
                    true,
                    false,
                    &|_| true,
                );
                if let Some(e) = self.absorb(&table, ctable.as_deref(), &acc, cacc.as_deref(), deg) {
                    self.minimal_inputs.push(k);
                    new_elems.push(e);
                }
            }

            // New pairs; all have degree > deg because new leads are reduced.
            for &k in &new_elems {
                let (ck, lk) = {
                    let t = &self.elems[k].v.terms[0];
                    (t.comp, t.mon.clone())
                };
                for idx in 0..self.reducers[ck].len() {
                    let (li, i) = self.reducers[ck][idx].clone();
                    if i == k {
                        break;
                    }
                    if rank_one && li.is_coprime(&lk) {
                        if self.tracked {
                            self.koszul_syzygy(i, k);
                        }
                        continue;
                    }
                    let l = li.lcm(&lk);
                    let pd = self.target.term_degree(ck, &l);
                    queue.insert(Pair { deg: pd, j: k, i });
                    pending.insert((i, k));
                }
            }
        }
        Ok(())
    }

    /// Stores a reduced vector as a new element, or its cofactor as a syzygy when it is zero.
    fn absorb(
        &mut self,
        table: &Table,
        ctable: Option<&Table>,
        acc: &[u32],
        cacc: Option<&[u32]>,
        deg: i64,
    ) -> Option<usize> {
        let f = *self.target.ring.field();
        let v = table.to_vector(acc);
        let cof = ctable.zip(cacc).map(|(ct, ca)| ct.to_vector(ca));
        if v.is_zero() {
            if let Some(c) = cof {
                if !c.is_zero() {
                    self.syzygies.push(c);
                }
            }
            return None;
        }
        let inv = f.inv(v.terms[0].coeff);
        let v = self.target.scale(&v, inv);
        let cof = cof.map(|c| self.source.scale(&c, inv));
        Some(self.push_elem(v, cof, deg))
    }

    /// `g_k C_i - g_i C_k` for coprime leads in rank one.
    fn koszul_syzygy(&mut self, i: usize, k: usize) {
        let src = &self.source;
        let gi = self.target.to_polys(&self.elems[i].v).swap_remove(0);
        let gk = self.target.to_polys(&self.elems[k].v).swap_remove(0);
        let ci = self.elems[i].cof.as_ref().expect("tracked");
        let ck = self.elems[k].cof.as_ref().expect("tracked");
        let a = src.mul_poly(ci, &gk);
        let b = src.mul_poly(ck, &gi);
        let s = src.add_scaled(&a, &b, self.target.ring.field().neg(1));
        if !s.is_zero() {
            self.syzygies.push(s);
        }
    }

    fn check_degree(&self, v: &Vector) -> Result<Option<i64>> {
        if v.is_zero() {
            return Ok(None);
        }
        let d = self
            .target
            .degree_of(v)
            .ok_or_else(|| Error::input("vector is not homogeneous"))?;
        if let Some(m) = self.max_degree {
            if d > m {
                return Err(Error::internal(format!(
                    "degree {d} exceeds the truncation degree {m} of this basis"
                )));
            }
        }
        Ok(Some(d))
    }

    /// Fully reduced remainder of `v`.
    pub fn normal_form(&self, v: &Vector) -> Result<Vector> {
        let Some(d) = self.check_degree(v)? else {
            return Ok(Vector::default());
        };
        let table = self.table(false, d);
        let mut acc = self.densify(&table, v);
        self.reduce_dense(&table, &mut acc, None, true, false, &|_| true);
        Ok(table.to_vector(&acc))
    }

    /// Remainder and quotient: `v = q · inputs + r`.
    pub fn divide(&self, v: &Vector) -> Result<(Vector, Vector)> {
        if !self.tracked {
            return Err(Error::internal("quotients need a cofactor-tracking basis"));
        }
        let Some(d) = self.check_degree(v)? else {
            return Ok((Vector::default(), Vector::default()));
        };
        let table = self.table(false, d);
        let ctable = self.table(true, d);
        let mut acc = self.densify(&table, v);
        let mut cacc = vec![0u32; ctable.size];
        self.reduce_dense(&table, &mut acc, Some((&ctable, &mut cacc)), true, false, &|_| true);
        let q = ctable.to_vector(&cacc);
        Ok((table.to_vector(&acc), self.source.scale(&q, self.target.ring.field().neg(1))))
    }

    /// `q` with `v = q · inputs`, or `None` when `v` is not in the submodule.
    pub fn lift(&self, v: &Vector) -> Result<Option<Vector>> {
        let (r, q) = self.divide(v)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    /// The reduced Gröbner basis: minimal leads, interreduced, monic, ascending by lead.
    pub fn reduced_basis(&self) -> Vec<Vector> {
        let mut keep = vec![true; self.elems.len()];
        for (k, e) in self.elems.iter().enumerate() {
            let lt = &e.v.terms[0];
            for (lm, o) in &self.reducers[lt.comp] {
                if *o != k && keep[*o] && lm.divides(&lt.mon) && (lm != &lt.mon || *o < k) {
                    keep[k] = false;
                    break;
                }
            }
        }
        let mut out: Vec<Vector> = Vec::new();
        for (k, e) in self.elems.iter().enumerate() {
            if !keep[k] {
                continue;
            }
            let table = self.table(false, e.deg);
            let mut acc = self.densify(&table, &e.v);
            self.reduce_dense(&table, &mut acc, None, true, true, &|o| keep[o] && o != k);
            out.push(table.to_vector(&acc));
        }
        out.sort_by(|a, b| {
            let (x, y) = (&a.terms[0], &b.terms[0]);
            self.target.cmp_terms((x.comp, &x.mon), (y.comp, &y.mon))
        });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::Ring;

    fn polys(r: &RingRef, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|t| parse_polynomial(r, t).unwrap()).collect()
    }

    fn rank1(r: &RingRef, gens: &[Polynomial]) -> (FreeModule, Vec<Vector>) {
        let m = FreeModule::new(r, vec![0]);
        let v = gens.iter().map(|g| m.from_polys(std::slice::from_ref(g))).collect();
        (m, v)
    }

    #[test]
    fn binomial_example_gains_z13() {
        let r = Ring::standard();
        let g = polys(&r, &["y*z", "x^5", "y^12 - z^12"]);
        let (m, v) = rank1(&r, &g);
        let gb = Gb::compute(&m, &v, None, GbOptions::default()).unwrap();
        let red: Vec<String> = gb.reduced_basis().iter().map(|v| m.to_polys(v)[0].to_string()).collect();
        assert_eq!(red, vec!["y*z", "x^5", "y^12 - z^12", "z^13"]);
    }

    #[test]
    fn syzygies_of_koszul_pair() {
        let r = Ring::standard();
        let g = polys(&r, &["x", "y"]);
        let (m, v) = rank1(&r, &g);
        let gb = Gb::compute(&m, &v, None, GbOptions { syzygies: true, ..Default::default() }).unwrap();
        assert_eq!(gb.syzygies().len(), 1);
        let s = gb.source().to_polys(&gb.syzygies()[0]);
        let check = &(&s[0] * &g[0]) + &(&s[1] * &g[1]);
        assert!(check.is_zero());
    }

    #[test]
    fn lift_recovers_quotients() {
        let r = Ring::standard();
        let g = polys(&r, &["x^2 - y*z", "x*y", "z^3"]);
        let (m, v) = rank1(&r, &g);
        let gb = Gb::compute(&m, &v, None, GbOptions { syzygies: true, ..Default::default() }).unwrap();
        let target = parse_polynomial(&r, "x^2*y^2 - y^3*z + x^2*y*z + x*z^3").unwrap();
        let q = gb.lift(&m.from_polys(&[target.clone()])).unwrap().expect("member");
        let q = gb.source().to_polys(&q);
        let sum = q.iter().zip(&g).fold(Polynomial::zero(&r), |acc, (a, b)| &acc + &(a * b));
        assert_eq!(sum, target);
        let outside = parse_polynomial(&r, "y^3").unwrap();
        assert!(gb.lift(&m.from_polys(&[outside])).unwrap().is_none());
    }

    #[test]
    fn minimal_inputs_skip_redundant() {
        let r = Ring::standard();
        let g = polys(&r, &["x^2", "x*y", "x^2*y", "x^2 + x*y", "y^3"]);
        let (m, v) = rank1(&r, &g);
        let gb = Gb::compute(&m, &v, None, GbOptions::default()).unwrap();
        assert_eq!(gb.minimal_inputs(), &[0, 1, 4]);
    }
}
