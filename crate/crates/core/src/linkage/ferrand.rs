//! Ferrand's mapping cone: a resolution of `R/(C:I)` built from a minimal
//! resolution of `R/I`, the Koszul complex of `C` and a comparison map between them.

use serde::{Deserialize, Serialize};

use super::koszul::KoszulData;
use super::{check_link, CompleteIntersection};
use crate::error::{Error, Result};
use crate::gb::{Gb, GbOptions, Vector};
use crate::ideal::Ideal;
use crate::linalg;
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::resolve::{free_resolution, BettiTable, GradedResolution};
use crate::ring::RingRef;

/// Where the cone differentials have unit entries, and what predicts them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrimReport {
    /// Rows of `∂_3` holding a unit; they index the generators of `C`.
    pub d3_unit_rows: Vec<usize>,
    /// Rows of `∂_2` holding a unit; the first three index the pairs `(1,2), (1,3), (2,3)`.
    pub d2_unit_rows: Vec<usize>,
    /// Generators of `C` with nonzero class in `I/𝔪I`.
    pub shared_generators: Vec<usize>,
    /// Rank of those classes: the size of the largest part of `C` extendable to minimal generators of `I`.
    pub shared_rank: usize,
    /// Pairs of generators of `C` whose Koszul relation is minimal in `I`.
    pub koszul_pairs: Vec<(usize, usize)>,
}

impl TrimReport {
    /// Unit rows of `∂_3` match the shared generators and unit rows of `∂_2` match the Koszul pairs.
    pub fn consistent(&self) -> bool {
        self.d3_unit_rows == self.shared_generators
            && self.d2_unit_rows
                == self
                    .koszul_pairs
                    .iter()
                    .map(|p| PAIRS.iter().position(|q| q == p).unwrap_or(usize::MAX))
                    .collect::<Vec<_>>()
    }
}

/// The comparison data and both the raw and trimmed cone.
#[derive(Clone, Debug)]
pub struct FerrandCone {
    pub ci: CompleteIntersection,
    /// Minimal resolution of `R/I`.
    pub source: GradedResolution,
    /// Koszul complex of `C`.
    pub koszul: GradedResolution,
    /// `u_1, u_2, u_3` with `d_i u_i = u_{i-1} δ_i`.
    pub lifts: [PolyMatrix; 3],
    /// `∂_1, ∂_2, ∂_3`.
    pub cone: GradedResolution,
    pub minimal: GradedResolution,
    pub trims: TrimReport,
}

/// Pairs in the order used for `K_2`: `(0,1), (0,2), (1,2)`.
const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// Koszul complex of three forms: `δ_2(e_i∧e_j) = c_i e_j - c_j e_i`,
/// `δ_3 = c_1 e_{23} - c_2 e_{13} + c_3 e_{12}`.
pub(crate) fn koszul_complex(ring: &RingRef, c: &[Polynomial]) -> Result<GradedResolution> {
    let deg: Vec<i64> = c.iter().map(|f| f.degree().unwrap() as i64).collect();
    let d1 = PolyMatrix::row(ring, c)?;
    let mut d2 = PolyMatrix::zeros(ring, deg.clone(), PAIRS.iter().map(|&(i, j)| deg[i] + deg[j]).collect());
    for (k, &(i, j)) in PAIRS.iter().enumerate() {
        d2.set(j, k, c[i].clone());
        d2.set(i, k, -&c[j]);
    }
    let top = deg.iter().sum();
    let col = vec![c[2].clone(), -&c[1], c[0].clone()];
    let d3 = PolyMatrix::new(ring, d2.col_degs().to_vec(), vec![top], vec![col])?;
    GradedResolution::from_maps(ring, vec![d1, d2, d3])
}

/// Solves `d · X = rhs` column by column through a cofactor-tracking basis of `d`'s columns.
fn lift_through(d: &PolyMatrix, rhs: &PolyMatrix, what: &str) -> Result<PolyMatrix> {
    let gb = Gb::compute(
        &d.target(),
        &d.column_vectors(),
        Some(d.col_degs().to_vec()),
        GbOptions { syzygies: true, max_degree: None },
    )?;
    let mut cols: Vec<Vector> = Vec::new();
    for v in rhs.column_vectors() {
        let q = gb
            .lift(&v)?
            .ok_or_else(|| Error::internal(format!("comparison map {what} does not lift")))?;
        cols.push(q);
    }
    PolyMatrix::from_vectors(&d.source(), &cols, rhs.col_degs().to_vec())
}

fn unit_rows(m: &PolyMatrix, rows: std::ops::Range<usize>) -> Vec<usize> {
    m.unit_rows().into_iter().filter(|r| rows.contains(r)).collect()
}

/// Builds the reduced mapping cone for `C : I`, with `I` perfect of grade 3 in 3 variables.
pub fn ferrand_cone(ideal: &Ideal, ci: &CompleteIntersection) -> Result<FerrandCone> {
    check_link(ci, ideal)?;
    if ci.gens().len() != 3 {
        return Err(Error::precondition("the mapping cone is implemented for grade 3"));
    }
    if ci.ideal().contains_ideal(ideal) {
        return Err(Error::precondition("C = I, the link is the unit ideal"));
    }
    let ring = ideal.ring();
    let source = free_resolution(ideal)?;
    if source.length() != 3 {
        return Err(Error::precondition(format!(
            "R/I has projective dimension {}, not 3",
            source.length()
        )));
    }
    let koszul = koszul_complex(ring, ci.gens())?;
    let (d, delta) = (source.differentials(), koszul.differentials());

    // u_1 expresses C in the generators of I; u_i lifts u_{i-1} δ_i through d_i.
    let u1 = lift_through(&d[0], &delta[0], "u_1")?;
    let u2 = lift_through(&d[1], &u1.mul(&delta[1])?, "u_2")?;
    let u3 = lift_through(&d[2], &u2.mul(&delta[2])?, "u_3")?;

    let a: i64 = ci.citype().total() as i64;
    let zero = PolyMatrix::zeros(ring, d[2].dual(a).row_degs().to_vec(), delta[1].dual(a).col_degs().to_vec());
    let p1 = PolyMatrix::block(ring, &[vec![&delta[2].dual(a).neg(), &u3.dual(a)]])?;
    let p2 = PolyMatrix::block(
        ring,
        &[vec![&delta[1].dual(a).neg(), &u2.dual(a)], vec![&zero, &d[2].dual(a)]],
    )?;
    let p3 = PolyMatrix::block(ring, &[vec![&u1.dual(a)], vec![&d[1].dual(a)]])?;
    let cone = GradedResolution::from_maps(ring, vec![p1, p2.clone(), p3.clone()])?;
    if !cone.is_complex() {
        return Err(Error::internal("mapping cone differentials do not compose to zero"));
    }
    let minimal = cone.minimalize();

    let data = KoszulData::new(ideal)?;
    let coords: Vec<Vec<u32>> = ci.gens().iter().map(|c| data.coordinates(c)).collect::<Result<_>>()?;
    let shared_generators: Vec<usize> = (0..3).filter(|&k| coords[k].iter().any(|&c| c != 0)).collect();
    let shared_rank = linalg::rank(ring.field(), &coords, data.generators().len());
    let mut koszul_pairs = Vec::new();
    for (i, j) in PAIRS {
        if data.is_minimal_koszul_pair(&ci.gens()[i], &ci.gens()[j])? {
            koszul_pairs.push((i, j));
        }
    }
    let trims = TrimReport {
        d3_unit_rows: unit_rows(&p3, 0..3),
        d2_unit_rows: unit_rows(&p2, 0..p2.nrows()),
        shared_generators,
        shared_rank,
        koszul_pairs,
    };
    Ok(FerrandCone { ci: ci.clone(), source, koszul, lifts: [u1, u2, u3], cone, minimal, trims })
}

impl FerrandCone {
    /// `d_i u_i = u_{i-1} δ_i` with `u_0 = id`.
    pub fn lifts_commute(&self) -> bool {
        let (d, delta) = (self.source.differentials(), self.koszul.differentials());
        let eq = |a: Result<PolyMatrix>, b: Result<PolyMatrix>| match (a, b) {
            (Ok(a), Ok(b)) => a.row_degs() == b.row_degs() && (0..a.nrows()).all(|r| (0..a.ncols()).all(|c| a.entry(r, c) == b.entry(r, c))),
            _ => false,
        };
        eq(d[0].mul(&self.lifts[0]), Ok(delta[0].clone()))
            && eq(d[1].mul(&self.lifts[1]), self.lifts[0].mul(&delta[1]))
            && eq(d[2].mul(&self.lifts[2]), self.lifts[1].mul(&delta[2]))
    }

    /// `u_3` has no unit entries.
    pub fn u3_has_no_units(&self) -> bool {
        self.lifts[2].find_unit().is_none()
    }

    /// Betti table of the trimmed cone.
    pub fn betti_table(&self) -> BettiTable {
        self.minimal.betti_table(3)
    }

    /// Ranks of the untrimmed cone.
    pub fn raw_table(&self) -> BettiTable {
        self.cone.betti_table(3)
    }

    /// The link `C : I` generated by the image of the trimmed `∂_1`.
    pub fn link(&self) -> Result<Ideal> {
        let ring = self.cone.ring();
        let d1 = self.minimal.differential(1);
        let gens: Vec<Polynomial> = (0..d1.ncols()).map(|c| d1.entry(0, c).clone()).filter(|p| !p.is_zero()).collect();
        Ideal::new(ring, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{j_ci, make_i, make_j, BettiPattern, matches_pattern};
    use crate::resolve::betti_table;
    use crate::ring::Ring;

    #[test]
    fn cone_for_j4() {
        let r = Ring::standard();
        let i = make_i(&r, 4).unwrap();
        let c = j_ci(&r, 4).unwrap();
        let cone = ferrand_cone(&i, &c).unwrap();
        assert!(cone.lifts_commute());
        assert!(cone.u3_has_no_units());
        assert!(matches_pattern(&cone.betti_table(), BettiPattern::Star, 4).matched);
        assert!(cone.betti_table().same_entries(&betti_table(&make_j(&r, 4).unwrap()).unwrap()));
        assert!(cone.link().unwrap().same_ideal(&make_j(&r, 4).unwrap()));
        assert!(cone.trims.consistent(), "{:?}", cone.trims);
        // yz is a minimal generator of I, x^5 lies in 𝔪I
        assert_eq!(cone.trims.shared_generators, vec![0, 2]);
    }

    #[test]
    fn ci_from_minimal_generators_trims_three_rows() {
        let r = Ring::standard();
        let i = make_i(&r, 4).unwrap();
        let c = CompleteIntersection::parse(&r, "x^4, y^7, z^12").unwrap();
        let cone = ferrand_cone(&i, &c).unwrap();
        assert_eq!(cone.trims.d3_unit_rows, vec![0, 1, 2]);
        assert!(cone.trims.consistent(), "{:?}", cone.trims);
    }

    #[test]
    fn c_equal_to_i_is_rejected() {
        let r = Ring::standard();
        let c = CompleteIntersection::parse(&r, "x^2, y^3, z^4").unwrap();
        assert!(ferrand_cone(c.ideal(), &c).is_err());
    }
}
