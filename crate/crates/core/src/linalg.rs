//! Dense linear algebra over `F_p`.

use crate::field::PrimeField;

/// Row-reduces `rows` in place to reduced row echelon form, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub fn rref(f: &PrimeField, rows: &mut Vec<Vec<u32>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(rows[r][c]);
        for x in rows[r][c..].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = std::mem::take(&mut rows[r]);
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let m = f.neg(row[c]);
            axpy(f, row, &pivot_row, m, c);
        }
        rows[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// `y += a * x`, touching columns from `start` on.
#[inline]
pub fn axpy(f: &PrimeField, y: &mut [u32], x: &[u32], a: u32, start: usize) {
    if a == 0 {
        return;
    }
    let p = f.modulus() as u64;
    for (yi, xi) in y[start..].iter_mut().zip(&x[start..]) {
        if *xi != 0 {
            *yi = ((*yi as u64 + a as u64 * *xi as u64) % p) as u32;
        }
    }
}

pub fn rank(f: &PrimeField, rows: &[Vec<u32>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(f, &mut m, ncols).len()
}

/// Basis of `{v : A v = 0}` where `A` is given by its rows.
pub fn kernel(f: &PrimeField, rows: &[Vec<u32>], ncols: usize) -> Vec<Vec<u32>> {
    let mut m = rows.to_vec();
    let pivots = rref(f, &mut m, ncols);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u32; ncols];
        v[free] = 1;
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = f.neg(row[free]);
        }
        out.push(v);
    }
    out
}

/// Transpose of a dense matrix with `ncols` columns.
pub fn transpose(rows: &[Vec<u32>], ncols: usize) -> Vec<Vec<u32>> {
    (0..ncols).map(|c| rows.iter().map(|r| r[c]).collect()).collect()
}

/// Incrementally maintained echelon basis of a subspace of `F_p^n`.
#[derive(Clone, Debug)]
pub struct Span {
    field: PrimeField,
    dim: usize,
    // (pivot column, row normalized to 1 at pivot, zero at every other stored pivot)
    rows: Vec<(usize, Vec<u32>)>,
}

impl Span {
    pub fn new(field: PrimeField, dim: usize) -> Self {
        Span { field, dim, rows: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after eliminating stored pivots.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (pc, row) in &self.rows {
            let c = v[*pc];
            if c != 0 {
                axpy(f, &mut v, row, f.neg(c), 0);
            }
        }
        v
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let f = self.field;
        let mut v = self.reduce(v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[pc]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                axpy(&f, row, &v, f.neg(c), 0);
            }
        }
        self.rows.push((pc, v));
        true
    }

    /// Stored basis vectors.
    pub fn basis(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.rows.iter().map(|(_, r)| r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mat_vec(f: &PrimeField, rows: &[Vec<u32>], v: &[u32]) -> Vec<u32> {
        rows.iter()
            .map(|r| r.iter().zip(v).fold(0, |acc, (a, b)| f.add(acc, f.mul(*a, *b))))
            .collect()
    }

    #[test]
    fn small_kernel() {
        let f = PrimeField::new(7).unwrap();
        let a = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let k = kernel(&f, &a, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(mat_vec(&f, &a, v).iter().all(|&x| x == 0));
        }
    }

    proptest! {
        #[test]
        fn rank_nullity(rows in prop::collection::vec(prop::collection::vec(0u32..5, 6), 0..6)) {
            let f = PrimeField::new(5).unwrap();
            let r = rank(&f, &rows, 6);
            let k = kernel(&f, &rows, 6);
            prop_assert_eq!(r + k.len(), 6);
            for v in &k {
                prop_assert!(mat_vec(&f, &rows, v).iter().all(|&x| x == 0));
            }
            let mut s = Span::new(f, 6);
            for row in &rows {
                s.insert(row);
            }
            prop_assert_eq!(s.rank(), r);
            for row in &rows {
                prop_assert!(s.contains(row));
            }
        }
    }
}
