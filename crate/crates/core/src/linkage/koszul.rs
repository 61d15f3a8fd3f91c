//! Classes of elements in `I/𝔪I` and of Koszul syzygies in `Syz_1/𝔪 Syz_1`.

use crate::error::{Error, Result};
use crate::gb::{FreeModule, Gb, GbOptions, Vector};
use crate::ideal::Ideal;
use crate::linalg;
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::resolve::syzygies;

/// Minimal generators and minimal first syzygies of an ideal, with the Gröbner
/// data needed to express elements and syzygies in terms of them.
pub struct KoszulData {
    gens: Vec<Polynomial>,
    d2: PolyMatrix,
    gen_gb: Gb,
    syz_gb: Gb,
}

/// Constant parts of a quotient vector, at the components whose degree matches `deg`.
fn unit_part(source: &FreeModule, q: &Vector, deg: i64) -> Vec<u32> {
    let mut out = vec![0u32; source.rank()];
    for t in &q.terms {
        if t.mon.is_one() && source.shifts[t.comp] == deg {
            out[t.comp] = t.coeff;
        }
    }
    out
}

impl KoszulData {
    pub fn new(ideal: &Ideal) -> Result<KoszulData> {
        if ideal.is_unit() || ideal.is_zero() {
            return Err(Error::precondition("need a nonzero proper ideal"));
        }
        let ring = ideal.ring();
        let gens = ideal.minimalized().gens().to_vec();
        let d1 = PolyMatrix::row(ring, &gens)?;
        let d2 = syzygies(&d1)?;
        let tracked = GbOptions { syzygies: true, max_degree: None };
        let gen_gb = Gb::compute(&d1.target(), &d1.column_vectors(), Some(d1.col_degs().to_vec()), tracked)?;
        let syz_gb = Gb::compute(&d2.target(), &d2.column_vectors(), Some(d2.col_degs().to_vec()), tracked)?;
        Ok(KoszulData { gens, d2, gen_gb, syz_gb })
    }

    /// The minimal generators used as the basis of `F_1`.
    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Minimal first syzygies as the columns of `d_2`.
    pub fn syzygy_matrix(&self) -> &PolyMatrix {
        &self.d2
    }

    fn check_member(&self, f: &Polynomial) -> Result<i64> {
        if f.is_zero() || !f.is_homogeneous() {
            return Err(Error::input(format!("{f} must be a nonzero form")));
        }
        Ok(f.degree().unwrap() as i64)
    }

    /// `q` with `f = Σ q_i g_i` over the minimal generators.
    pub fn lift_element(&self, f: &Polynomial) -> Result<Vector> {
        self.check_member(f)?;
        let v = self.gen_gb.target().from_polys(std::slice::from_ref(f));
        self.gen_gb
            .lift(&v)?
            .ok_or_else(|| Error::precondition(format!("{f} is not in the ideal")))
    }

    /// Coordinates of the class of `f` in `I/𝔪I`, one entry per minimal generator
    /// (zero at generators of other degrees).
    pub fn coordinates(&self, f: &Polynomial) -> Result<Vec<u32>> {
        let d = self.check_member(f)?;
        let q = self.lift_element(f)?;
        Ok(unit_part(self.gen_gb.source(), &q, d))
    }

    /// The Koszul syzygy `g·A(f) - f·A(g)` in `F_1`, where `A` expresses an element in the generators.
    pub fn koszul_syzygy(&self, f: &Polynomial, g: &Polynomial) -> Result<Vector> {
        let src = self.gen_gb.source();
        let a = src.mul_poly(&self.lift_element(f)?, g);
        let b = src.mul_poly(&self.lift_element(g)?, f);
        Ok(src.add_scaled(&a, &b, f.ring().field().neg(1)))
    }

    /// Class of a homogeneous syzygy in `Syz_1/𝔪 Syz_1`, one entry per minimal syzygy.
    pub fn syzygy_class(&self, s: &Vector) -> Result<Vec<u32>> {
        let src = self.syz_gb.source();
        if s.is_zero() {
            return Ok(vec![0; src.rank()]);
        }
        let deg = self
            .gen_gb
            .source()
            .degree_of(s)
            .ok_or_else(|| Error::internal("inhomogeneous syzygy"))?;
        let q = self
            .syz_gb
            .lift(s)?
            .ok_or_else(|| Error::internal("vector is not a syzygy of the generators"))?;
        Ok(unit_part(src, &q, deg))
    }

    pub fn koszul_class(&self, f: &Polynomial, g: &Polynomial) -> Result<Vec<u32>> {
        self.syzygy_class(&self.koszul_syzygy(f, g)?)
    }

    /// Whether the Koszul relation of `f, g ∈ I` is a minimal first syzygy.
    pub fn is_minimal_koszul_pair(&self, f: &Polynomial, g: &Polynomial) -> Result<bool> {
        Ok(self.koszul_class(f, g)?.iter().any(|&c| c != 0))
    }

    /// Index pairs of minimal generators whose Koszul relation is minimal,
    /// ordered by degree sum, then by index.
    pub fn minimal_pairs(&self) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for i in 0..self.gens.len() {
            for j in i + 1..self.gens.len() {
                if self.is_minimal_koszul_pair(&self.gens[i], &self.gens[j])? {
                    out.push((i, j));
                }
            }
        }
        let deg = |k: usize| self.gens[k].degree().unwrap();
        out.sort_by_key(|&(i, j)| (deg(i) + deg(j), i, j));
        Ok(out)
    }

    /// `λ(I)`: the dimension of the span of all Koszul classes.
    pub fn lambda(&self) -> Result<usize> {
        let mut rows = Vec::new();
        for i in 0..self.gens.len() {
            for j in i + 1..self.gens.len() {
                rows.push(self.koszul_class(&self.gens[i], &self.gens[j])?);
            }
        }
        Ok(linalg::rank(self.gens[0].ring().field(), &rows, self.d2.ncols()))
    }
}

/// Number of independent minimal Koszul relations among minimal generators.
pub fn lambda_count(ideal: &Ideal) -> Result<usize> {
    KoszulData::new(ideal)?.lambda()
}

/// Coordinates of `f ∈ I` in `(I/𝔪I)_{deg f}` with respect to the minimal
/// generators of that degree (in the order of `ideal.minimalized()`).
pub fn minimal_generator_coordinates(f: &Polynomial, ideal: &Ideal) -> Result<Vec<u32>> {
    let data = KoszulData::new(ideal)?;
    let all = data.coordinates(f)?;
    let d = f.degree();
    Ok(data
        .generators()
        .iter()
        .zip(all)
        .filter(|(g, _)| g.degree() == d)
        .map(|(_, c)| c)
        .collect())
}

pub fn is_minimal_koszul_pair(ideal: &Ideal, f: &Polynomial, g: &Polynomial) -> Result<bool> {
    KoszulData::new(ideal)?.is_minimal_koszul_pair(f, g)
}

/// Pairs of minimal generators with minimal Koszul relations.
pub fn minimal_koszul_pairs(ideal: &Ideal) -> Result<Vec<(Polynomial, Polynomial)>> {
    let data = KoszulData::new(ideal)?;
    Ok(data
        .minimal_pairs()?
        .into_iter()
        .map(|(i, j)| (data.gens[i].clone(), data.gens[j].clone()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_i, make_l};
    use crate::parse::parse_polynomial;
    use crate::ring::Ring;

    #[test]
    fn complete_intersection_has_all_pairs() {
        let r = Ring::standard();
        let c = Ideal::parse(&r, "x^2, y^3, z^4").unwrap();
        assert_eq!(lambda_count(&c).unwrap(), 3);
    }

    #[test]
    fn hmnu_instances() {
        let r = Ring::standard();
        let i = make_i(&r, 4).unwrap();
        // x^4 and y^7 yield the minimal Koszul relation
        let pairs = minimal_koszul_pairs(&i).unwrap();
        assert!(pairs.iter().any(|(f, g)| f.to_string() == "x^4" && g.to_string() == "y^7"), "{pairs:?}");
        assert_eq!(lambda_count(&make_l(&r, 4).unwrap()).unwrap(), 1);
    }

    #[test]
    fn coordinates() {
        let r = Ring::standard();
        let i = make_i(&r, 4).unwrap();
        let p = |s| parse_polynomial(&r, s).unwrap();
        assert_eq!(minimal_generator_coordinates(&p("x*z"), &i).unwrap(), vec![1, 0]);
        assert_eq!(minimal_generator_coordinates(&p("x*z - 3*y*z"), &i).unwrap(), vec![1, 32000]);
        assert_eq!(minimal_generator_coordinates(&p("x^5"), &i).unwrap(), Vec::<u32>::new());
        assert_eq!(minimal_generator_coordinates(&p("x^4 + x^3*z"), &i).unwrap(), vec![1]);
        assert!(minimal_generator_coordinates(&p("x^3"), &i).is_err());
    }
}
