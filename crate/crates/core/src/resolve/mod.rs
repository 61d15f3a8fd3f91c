//! Graded free resolutions and Betti tables.

mod betti;
mod oracle;

pub use betti::{BettiEntry, BettiTable};
pub use oracle::{koszul_betti_oracle, OracleTable};

use crate::error::{Error, Result};
use crate::gb::{FreeModule, Gb, GbOptions, Vector};
use crate::ideal::Ideal;
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::ring::RingRef;

/// Indices of a minimal generating subset of homogeneous `vectors` in `target`.
pub fn minimal_subset(target: &FreeModule, vectors: &[Vector], degs: &[i64]) -> Result<Vec<usize>> {
    let gb = Gb::compute(target, vectors, Some(degs.to_vec()), GbOptions::default())?;
    Ok(gb.minimal_inputs().to_vec())
}

/// Minimal generators of the kernel of `m`, as the columns of a matrix out of `m`'s source.
pub fn syzygies(m: &PolyMatrix) -> Result<PolyMatrix> {
    let target = m.target();
    let gb = Gb::compute(
        &target,
        &m.column_vectors(),
        Some(m.col_degs().to_vec()),
        GbOptions { syzygies: true, max_degree: None },
    )?;
    let source = m.source();
    let raw = gb.syzygies();
    let degs: Vec<i64> = raw
        .iter()
        .map(|v| source.degree_of(v).ok_or_else(|| Error::internal("inhomogeneous syzygy")))
        .collect::<Result<_>>()?;
    let keep = minimal_subset(&source, raw, &degs)?;
    let vecs: Vec<Vector> = keep.iter().map(|&k| raw[k].clone()).collect();
    PolyMatrix::from_vectors(&source, &vecs, keep.iter().map(|&k| degs[k]).collect())
}

/// A complex of graded free modules `F_L → … → F_1 → F_0 = R`.
#[derive(Clone, Debug)]
pub struct GradedResolution {
    ring: RingRef,
    /// `maps[i]` is `d_{i+1}: F_{i+1} → F_i`.
    maps: Vec<PolyMatrix>,
    minimal: bool,
}

impl GradedResolution {
    /// Assembles a complex from its differentials `d_1, d_2, …`.
    pub fn from_maps(ring: &RingRef, maps: Vec<PolyMatrix>) -> Result<GradedResolution> {
        for w in maps.windows(2) {
            if w[0].col_degs() != w[1].row_degs() {
                return Err(Error::input("consecutive differentials do not compose"));
            }
        }
        if let Some(d1) = maps.first() {
            if d1.row_degs() != [0] {
                return Err(Error::input("F_0 must be R"));
            }
        }
        let minimal = maps.iter().all(|m| m.find_unit().is_none());
        Ok(GradedResolution { ring: ring.clone(), maps, minimal })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    /// `d_i` for `1 <= i <= length`.
    pub fn differential(&self, i: usize) -> &PolyMatrix {
        &self.maps[i - 1]
    }

    pub fn differentials(&self) -> &[PolyMatrix] {
        &self.maps
    }

    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// Twists `j` of `F_i = ⊕ R(-j)`.
    pub fn shifts(&self, i: usize) -> Vec<i64> {
        if i == 0 {
            vec![0]
        } else if i <= self.maps.len() {
            self.maps[i - 1].col_degs().to_vec()
        } else {
            Vec::new()
        }
    }

    pub fn ranks(&self) -> Vec<usize> {
        (0..=self.length()).map(|i| self.shifts(i).len()).collect()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// `d_{i-1} d_i = 0` for all `i`.
    pub fn is_complex(&self) -> bool {
        self.maps
            .windows(2)
            .all(|w| w[0].mul(&w[1]).map(|p| p.is_zero()).unwrap_or(false))
    }

    /// Ranks of the modules, recorded as a Betti table (minimal only if the complex is).
    pub fn betti_table(&self, grade: i64) -> BettiTable {
        let mut t = BettiTable::new(self.ring.nvars(), self.ring.field().modulus(), grade);
        for i in 0..=self.length() {
            for j in self.shifts(i) {
                t.add(i, j, 1);
            }
        }
        t
    }

    /// Cancels unit entries until none remain, scanning from the highest differential down.
    pub fn minimalize(&self) -> GradedResolution {
        let f = *self.ring.field();
        let mut maps = self.maps.clone();
        loop {
            let mut changed = false;
            for i in (0..maps.len()).rev() {
                while let Some((r, c)) = maps[i].find_unit() {
                    let d = &maps[i];
                    let u_inv = f.inv(d.entry(r, c).constant_coeff());
                    let mut next = d.clone();
                    // d' = α - β γ / u on the remaining rows and columns
                    for cc in 0..d.ncols() {
                        if cc == c || d.entry(r, cc).is_zero() {
                            continue;
                        }
                        let g = d.entry(r, cc).scale(u_inv);
                        for rr in 0..d.nrows() {
                            if rr == r || d.entry(rr, c).is_zero() {
                                continue;
                            }
                            let e = d.entry(rr, cc) - &(d.entry(rr, c) * &g);
                            next.set(rr, cc, e);
                        }
                    }
                    next.remove_row(r);
                    next.remove_col(c);
                    maps[i] = next;
                    if i + 1 < maps.len() {
                        maps[i + 1].remove_row(c);
                    }
                    if i > 0 {
                        maps[i - 1].remove_col(r);
                    }
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        while maps.last().is_some_and(|m| m.ncols() == 0) {
            maps.pop();
        }
        GradedResolution { ring: self.ring.clone(), maps, minimal: true }
    }
}

/// Minimal graded free resolution of `R/I`.
pub fn free_resolution(ideal: &Ideal) -> Result<GradedResolution> {
    if ideal.is_unit() {
        return Err(Error::precondition("the unit ideal has R/I = 0"));
    }
    let ring = ideal.ring();
    let gens: Vec<Polynomial> = ideal.minimalized().gens().to_vec();
    if gens.is_empty() {
        return GradedResolution::from_maps(ring, Vec::new());
    }
    let mut maps = vec![PolyMatrix::row(ring, &gens)?];
    loop {
        let s = syzygies(maps.last().unwrap())?;
        if s.ncols() == 0 {
            break;
        }
        maps.push(s);
        if maps.len() > ring.nvars() + 1 {
            return Err(Error::internal("resolution longer than the number of variables"));
        }
    }
    let res = GradedResolution::from_maps(ring, maps)?;
    debug_assert!(res.is_minimal());
    Ok(res)
}

/// Graded Betti numbers of `R/I`.
pub fn betti_table(ideal: &Ideal) -> Result<BettiTable> {
    let res = free_resolution(ideal)?;
    Ok(res.betti_table(ideal.grade()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn ideal(s: &str) -> Ideal {
        Ideal::parse(&Ring::standard(), s).unwrap()
    }

    #[test]
    fn koszul_syzygy_of_two_variables() {
        let r = Ring::standard();
        let m = PolyMatrix::row(&r, &[Polynomial::var(&r, 0), Polynomial::var(&r, 1)]).unwrap();
        let s = syzygies(&m).unwrap();
        assert_eq!(s.ncols(), 1);
        assert_eq!(s.col_degs(), &[2]);
        assert!(m.mul(&s).unwrap().is_zero());
        let x2 = Polynomial::var(&r, 0).pow(2);
        let xy = &Polynomial::var(&r, 0) * &Polynomial::var(&r, 1);
        let s = syzygies(&PolyMatrix::row(&r, &[x2, xy]).unwrap()).unwrap();
        assert_eq!(s.col_degs(), &[3]);
    }

    #[test]
    fn complete_intersection_betti() {
        let t = betti_table(&ideal("x^2, y^5, z^12")).unwrap();
        assert_eq!(t.shifts(1), vec![2, 5, 12]);
        assert_eq!(t.shifts(2), vec![7, 14, 17]);
        assert_eq!(t.shifts(3), vec![19]);
    }

    #[test]
    fn principal_ideal() {
        let res = free_resolution(&ideal("x")).unwrap();
        assert_eq!(res.length(), 1);
        assert_eq!(res.shifts(1), vec![1]);
    }

    #[test]
    fn minimalize_removes_trivial_summands() {
        let r = Ring::standard();
        let res = free_resolution(&ideal("x*y, y*z, x*z")).unwrap();
        // pad with R(-2) → R(-2) in steps 1 and 2
        let d1 = res.differential(1);
        let d2 = res.differential(2);
        let p = |s| crate::parse::parse_polynomial(&r, s).unwrap();
        let mut c1: Vec<Vec<Polynomial>> = (0..d1.ncols()).map(|c| d1.column(c).to_vec()).collect();
        c1.push(vec![&d1.entry(0, 0).clone() + d1.entry(0, 1)]);
        let mut rd = d1.col_degs().to_vec();
        rd.push(2);
        let nd1 = PolyMatrix::new(&r, vec![0], rd.clone(), c1).unwrap();
        let mut c2: Vec<Vec<Polynomial>> = (0..d2.ncols())
            .map(|c| {
                let mut col = d2.column(c).to_vec();
                col.push(Polynomial::zero(&r));
                col
            })
            .collect();
        c2.push(vec![p("1"), p("1"), Polynomial::zero(&r), p("-1")]);
        let mut cd = d2.col_degs().to_vec();
        cd.push(2);
        let nd2 = PolyMatrix::new(&r, rd, cd, c2).unwrap();
        let padded = GradedResolution::from_maps(&r, vec![nd1, nd2]).unwrap();
        assert!(padded.is_complex());
        assert!(!padded.is_minimal());
        let m = padded.minimalize();
        assert!(m.is_complex());
        assert_eq!(m.ranks(), res.ranks());
        assert_eq!(m.betti_table(2).entries(), res.betti_table(2).entries());
    }
}
