//! Graded matrices of homogeneous polynomials, i.e. maps of graded free modules.

use std::fmt;

use crate::error::{Error, Result};
use crate::gb::{FreeModule, Vector};
use crate::poly::Polynomial;
use crate::ring::RingRef;

/// A degree-zero map `⊕ R(-col_degs) → ⊕ R(-row_degs)`. Entry `(r, c)` is zero or
/// homogeneous of degree `col_degs[c] - row_degs[r]`.
#[derive(Clone, Debug)]
pub struct PolyMatrix {
    ring: RingRef,
    row_degs: Vec<i64>,
    col_degs: Vec<i64>,
    /// `cols[c][r]`
    cols: Vec<Vec<Polynomial>>,
}

impl PartialEq for PolyMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.row_degs == other.row_degs && self.col_degs == other.col_degs && self.cols == other.cols
    }
}

impl PolyMatrix {
    pub fn new(
        ring: &RingRef,
        row_degs: Vec<i64>,
        col_degs: Vec<i64>,
        cols: Vec<Vec<Polynomial>>,
    ) -> Result<PolyMatrix> {
        if cols.len() != col_degs.len() {
            return Err(Error::input("column count differs from column degrees"));
        }
        for (c, col) in cols.iter().enumerate() {
            if col.len() != row_degs.len() {
                return Err(Error::input(format!("column {c} has the wrong length")));
            }
            for (r, e) in col.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                let want = col_degs[c] - row_degs[r];
                if !e.is_homogeneous() || e.degree().map(|d| d as i64) != Some(want) {
                    return Err(Error::input(format!(
                        "entry ({r}, {c}) = {e} is not homogeneous of degree {want}"
                    )));
                }
            }
        }
        Ok(PolyMatrix { ring: ring.clone(), row_degs, col_degs, cols })
    }

    pub fn zeros(ring: &RingRef, row_degs: Vec<i64>, col_degs: Vec<i64>) -> PolyMatrix {
        let cols = vec![vec![Polynomial::zero(ring); row_degs.len()]; col_degs.len()];
        PolyMatrix { ring: ring.clone(), row_degs, col_degs, cols }
    }

    pub fn identity(ring: &RingRef, degs: Vec<i64>) -> PolyMatrix {
        let mut m = Self::zeros(ring, degs.clone(), degs);
        for i in 0..m.ncols() {
            m.cols[i][i] = Polynomial::one(ring);
        }
        m
    }

    /// One-row matrix `[f_1 .. f_k]` out of `R`.
    pub fn row(ring: &RingRef, entries: &[Polynomial]) -> Result<PolyMatrix> {
        let degs = entries.iter().map(|f| f.degree().unwrap_or(0) as i64).collect();
        Self::new(ring, vec![0], degs, entries.iter().map(|f| vec![f.clone()]).collect())
    }

    /// Columns given as vectors in `target`, with their degrees.
    pub fn from_vectors(target: &FreeModule, vectors: &[Vector], col_degs: Vec<i64>) -> Result<PolyMatrix> {
        let cols = vectors.iter().map(|v| target.to_polys(v)).collect();
        Self::new(&target.ring, target.shifts.clone(), col_degs, cols)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.row_degs.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_degs.len()
    }

    pub fn row_degs(&self) -> &[i64] {
        &self.row_degs
    }

    pub fn col_degs(&self) -> &[i64] {
        &self.col_degs
    }

    pub fn entry(&self, r: usize, c: usize) -> &Polynomial {
        &self.cols[c][r]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial) {
        self.cols[c][r] = p;
    }

    pub fn column(&self, c: usize) -> &[Polynomial] {
        &self.cols[c]
    }

    pub fn target(&self) -> FreeModule {
        FreeModule::new(&self.ring, self.row_degs.clone())
    }

    pub fn source(&self) -> FreeModule {
        FreeModule::new(&self.ring, self.col_degs.clone())
    }

    pub fn column_vector(&self, c: usize) -> Vector {
        self.target().from_polys(&self.cols[c])
    }

    pub fn column_vectors(&self) -> Vec<Vector> {
        let t = self.target();
        self.cols.iter().map(|c| t.from_polys(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().flatten().all(|e| e.is_zero())
    }

    /// Product `self · other`; the column degrees of `other` are kept.
    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.ncols() != other.nrows() {
            return Err(Error::input(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.ncols(),
                other.nrows(),
                other.ncols()
            )));
        }
        let mut out = Self::zeros(&self.ring, self.row_degs.clone(), other.col_degs.clone());
        for c in 0..other.ncols() {
            for k in 0..self.ncols() {
                let b = &other.cols[c][k];
                if b.is_zero() {
                    continue;
                }
                for r in 0..self.nrows() {
                    let a = &self.cols[k][r];
                    if !a.is_zero() {
                        out.cols[c][r] = &out.cols[c][r] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> PolyMatrix {
        let mut out = self.clone();
        for e in out.cols.iter_mut().flatten() {
            *e = -&*e;
        }
        out
    }

    /// Transpose with explicitly chosen grading (row and column degrees of the result).
    pub fn transpose_with(&self, row_degs: Vec<i64>, col_degs: Vec<i64>) -> Result<PolyMatrix> {
        let cols = (0..self.nrows())
            .map(|r| (0..self.ncols()).map(|c| self.cols[c][r].clone()).collect())
            .collect();
        Self::new(&self.ring, row_degs, col_degs, cols)
    }

    /// Dual map `Hom(-, R(-a))`: rows become `a - col_degs`, columns `a - row_degs`.
    pub fn dual(&self, a: i64) -> PolyMatrix {
        let rows = self.col_degs.iter().map(|d| a - d).collect();
        let cols = self.row_degs.iter().map(|d| a - d).collect();
        self.transpose_with(rows, cols).expect("dual of a graded matrix is graded")
    }

    /// Block matrix from a grid; block rows must agree in row degrees and block columns in column degrees.
    pub fn block(ring: &RingRef, grid: &[Vec<&PolyMatrix>]) -> Result<PolyMatrix> {
        let mut row_degs = Vec::new();
        for br in grid {
            row_degs.extend_from_slice(&br[0].row_degs);
        }
        let mut col_degs = Vec::new();
        for b in &grid[0] {
            col_degs.extend_from_slice(&b.col_degs);
        }
        let mut out = Self::zeros(ring, row_degs, col_degs);
        let mut r0 = 0;
        for br in grid {
            let mut c0 = 0;
            for (bi, b) in br.iter().enumerate() {
                if b.nrows() != br[0].nrows() || b.ncols() != grid[0][bi].ncols() {
                    return Err(Error::internal("block sizes do not line up"));
                }
                for c in 0..b.ncols() {
                    for r in 0..b.nrows() {
                        out.cols[c0 + c][r0 + r] = b.cols[c][r].clone();
                    }
                }
                c0 += b.ncols();
            }
            r0 += br[0].nrows();
        }
        for c in 0..out.ncols() {
            for r in 0..out.nrows() {
                let e = &out.cols[c][r];
                if !e.is_zero() && e.degree().map(|d| d as i64) != Some(out.col_degs[c] - out.row_degs[r]) {
                    return Err(Error::internal(format!("block entry ({r}, {c}) has the wrong degree")));
                }
            }
        }
        Ok(out)
    }

    pub fn remove_row(&mut self, r: usize) {
        self.row_degs.remove(r);
        for col in self.cols.iter_mut() {
            col.remove(r);
        }
    }

    pub fn remove_col(&mut self, c: usize) {
        self.col_degs.remove(c);
        self.cols.remove(c);
    }

    /// First `(row, col)` holding a nonzero constant, scanning column by column.
    pub fn find_unit(&self) -> Option<(usize, usize)> {
        for (c, col) in self.cols.iter().enumerate() {
            for (r, e) in col.iter().enumerate() {
                if e.is_unit() {
                    return Some((r, c));
                }
            }
        }
        None
    }

    /// Rows containing at least one unit entry.
    pub fn unit_rows(&self) -> Vec<usize> {
        (0..self.nrows())
            .filter(|&r| self.cols.iter().any(|col| col[r].is_unit()))
            .collect()
    }

    /// Rank over `k` of the matrix of constant terms.
    pub fn constant_rank(&self) -> usize {
        let f = self.ring.field();
        let rows: Vec<Vec<u32>> = (0..self.nrows())
            .map(|r| (0..self.ncols()).map(|c| self.cols[c][r].constant_coeff()).collect())
            .collect();
        crate::linalg::rank(f, &rows, self.ncols())
    }

    /// Sub-matrix of the given rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        PolyMatrix {
            ring: self.ring.clone(),
            row_degs: rows.iter().map(|&r| self.row_degs[r]).collect(),
            col_degs: cols.iter().map(|&c| self.col_degs[c]).collect(),
            cols: cols.iter().map(|&c| rows.iter().map(|&r| self.cols[c][r].clone()).collect()).collect(),
        }
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.nrows())
            .map(|r| (0..self.ncols()).map(|c| self.cols[c][r].to_string()).collect())
            .collect();
        let widths: Vec<usize> = (0..self.ncols())
            .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(1))
            .collect();
        for row in &cells {
            f.write_str("|")?;
            for (c, cell) in row.iter().enumerate() {
                write!(f, " {cell:>w$}", w = widths[c])?;
            }
            f.write_str(" |\n")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::Ring;

    #[test]
    fn grading_is_checked() {
        let r = Ring::standard();
        let x = parse_polynomial(&r, "x").unwrap();
        let y2 = parse_polynomial(&r, "y^2").unwrap();
        assert!(PolyMatrix::row(&r, &[x.clone(), y2.clone()]).is_ok());
        assert!(PolyMatrix::new(&r, vec![0], vec![1, 1], vec![vec![x], vec![y2]]).is_err());
    }

    #[test]
    fn product_and_dual() {
        let r = Ring::standard();
        let p = |s| parse_polynomial(&r, s).unwrap();
        let d1 = PolyMatrix::row(&r, &[p("x"), p("y")]).unwrap();
        let d2 = PolyMatrix::new(&r, vec![1, 1], vec![2], vec![vec![p("-y"), p("x")]]).unwrap();
        assert!(d1.mul(&d2).unwrap().is_zero());
        let t = d2.dual(2);
        assert_eq!(t.row_degs(), &[0]);
        assert_eq!(t.col_degs(), &[1, 1]);
    }
}
