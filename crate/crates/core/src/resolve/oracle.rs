//! Betti numbers as Koszul homology `Tor_i(R/I, k)_j`, by dense linear algebra only.

use std::collections::HashMap;

use super::BettiTable;
use crate::ideal::Ideal;
use crate::linalg::{self, Span};
use crate::monomial::Monomial;

/// Oracle output; `complete` means every nonzero `β_{i,j}` has `j <= j_max`.
#[derive(Clone, Debug)]
pub struct OracleTable {
    pub table: BettiTable,
    pub j_max: u32,
    pub complete: bool,
}

/// One graded piece of `R/I`, from the row-reduced Macaulay matrix of `I_d`.
struct Piece {
    index: HashMap<Monomial, usize>,
    span: Span,
    /// Position in the quotient basis of each non-pivot column.
    basis_pos: Vec<Option<usize>>,
    basis: Vec<Monomial>,
}

impl Piece {
    /// Coordinates of `m mod I` on the standard monomials of this degree.
    fn coords(&self, m: &Monomial) -> Vec<u32> {
        let col = self.index[m];
        let mut unit = vec![0u32; self.index.len()];
        unit[col] = 1;
        let r = self.span.reduce(&unit);
        let mut out = vec![0u32; self.basis.len()];
        for (c, v) in r.iter().enumerate() {
            if *v != 0 {
                out[self.basis_pos[c].expect("remainder lives on non-pivot columns")] = *v;
            }
        }
        out
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in start..n {
            cur.push(s);
            rec(s + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// For monomial ideals, `deg lcm` of the minimal generators: the Taylor complex
/// has no twist beyond it.
fn taylor_bound(ideal: &Ideal) -> Option<u32> {
    if !ideal.is_monomial() || ideal.is_zero() {
        return None;
    }
    let lcm = ideal.gens().iter().filter_map(|g| g.lead_monomial()).fold(Monomial::one(ideal.ring().nvars()), |a, m| a.lcm(m));
    Some(lcm.degree())
}

/// Default degree cap: the Taylor bound for monomial ideals, otherwise the three
/// largest generator degrees plus `N`.
pub fn default_j_max(ideal: &Ideal) -> u32 {
    if let Some(b) = taylor_bound(ideal) {
        return b;
    }
    let mut d = ideal.degrees();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d.iter().take(3).sum::<u32>() + ideal.ring().nvars() as u32
}

/// `β_{i,j}(R/I)` for `j <= j_max`, from the homology of the Koszul complex on the variables.
pub fn koszul_betti_oracle(ideal: &Ideal, j_max: Option<u32>) -> OracleTable {
    let ring = ideal.ring();
    let n = ring.nvars();
    let f = *ring.field();
    let j_max = j_max.unwrap_or_else(|| default_j_max(ideal));
    let ord = ring.order();

    // graded pieces of R/I in degrees 0..=j_max
    let mut pieces: Vec<Piece> = Vec::new();
    let mut vanished_at: Option<u32> = None;
    for d in 0..=j_max {
        let mut mons = Monomial::all_of_degree(n, d);
        mons.sort_by(|a, b| ord.cmp(b, a));
        let index: HashMap<Monomial, usize> = mons.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut span = Span::new(f, mons.len());
        if let Some(prev) = pieces.last() {
            let prev_mons: Vec<&Monomial> = {
                let mut v: Vec<(&Monomial, &usize)> = prev.index.iter().collect();
                v.sort_by_key(|(_, i)| **i);
                v.into_iter().map(|(m, _)| m).collect()
            };
            let rows: Vec<Vec<u32>> = prev.span.basis().cloned().collect();
            for row in &rows {
                for v in 0..n {
                    let x = Monomial::var(n, v, 1);
                    let mut shifted = vec![0u32; mons.len()];
                    for (c, val) in row.iter().enumerate() {
                        if *val != 0 {
                            shifted[index[&prev_mons[c].mul(&x)]] = *val;
                        }
                    }
                    span.insert(&shifted);
                    if span.rank() == mons.len() {
                        break;
                    }
                }
            }
        }
        for g in ideal.gens() {
            if g.degree() == Some(d) {
                let mut row = vec![0u32; mons.len()];
                for (m, c) in g.terms() {
                    row[index[m]] = *c;
                }
                span.insert(&row);
            }
        }
        let mut is_pivot = vec![false; mons.len()];
        for r in span.basis() {
            if let Some(p) = r.iter().position(|&x| x != 0) {
                is_pivot[p] = true;
            }
        }
        let mut basis_pos = vec![None; mons.len()];
        let mut basis = Vec::new();
        for (c, m) in mons.iter().enumerate() {
            if !is_pivot[c] {
                basis_pos[c] = Some(basis.len());
                basis.push(m.clone());
            }
        }
        let empty = basis.is_empty();
        pieces.push(Piece { index, span, basis_pos, basis });
        if empty {
            vanished_at = Some(d);
            break;
        }
    }
    let dim = |d: i64| -> usize {
        if d < 0 {
            return 0;
        }
        pieces.get(d as usize).map(|p| p.basis.len()).unwrap_or(0)
    };

    let wedge: Vec<Vec<Vec<usize>>> = (0..=n).map(|k| subsets(n, k)).collect();
    // rank of ∂_i: K_{i,j} → K_{i-1,j}
    let rank_d = |i: usize, j: i64| -> usize {
        if i == 0 || i > n {
            return 0;
        }
        let d = j - i as i64;
        let (src, tgt) = (dim(d), dim(d + 1));
        if src == 0 || tgt == 0 {
            return 0;
        }
        let src_piece = &pieces[d as usize];
        let tgt_piece = &pieces[(d + 1) as usize];
        let tgt_sets = &wedge[i - 1];
        let tgt_idx: HashMap<&Vec<usize>, usize> = tgt_sets.iter().enumerate().map(|(k, s)| (s, k)).collect();
        let ncols = wedge[i].len() * src;
        let nrows = tgt_sets.len() * tgt;
        let mut rows = vec![vec![0u32; ncols]; nrows];
        for (si, s) in wedge[i].iter().enumerate() {
            for (mi, m) in src_piece.basis.iter().enumerate() {
                let col = si * src + mi;
                for (k, &v) in s.iter().enumerate() {
                    let mut rest = s.clone();
                    rest.remove(k);
                    let ti = tgt_idx[&rest];
                    let sign = if k % 2 == 0 { 1 } else { f.neg(1) };
                    let xm = m.mul(&Monomial::var(n, v, 1));
                    for (r, c) in tgt_piece.coords(&xm).into_iter().enumerate() {
                        if c != 0 {
                            rows[ti * tgt + r][col] = f.add(rows[ti * tgt + r][col], f.mul(c, sign));
                        }
                    }
                }
            }
        }
        linalg::rank(&f, &rows, ncols)
    };

    let mut table = BettiTable::new(n, f.modulus(), ideal.grade());
    for j in 0..=j_max as i64 {
        for i in 0..=n {
            let d = j - i as i64;
            let k = wedge[i].len() * dim(d);
            if k == 0 {
                continue;
            }
            let b = k - rank_d(i, j) - rank_d(i + 1, j);
            table.add(i, j, b as u64);
        }
    }
    let complete = vanished_at.is_some_and(|d0| j_max as i64 >= d0 as i64 + n as i64 - 1)
        || taylor_bound(ideal).is_some_and(|b| j_max >= b);
    OracleTable { table, j_max, complete }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn residue_field() {
        let m = Ideal::maximal(&Ring::standard());
        let o = koszul_betti_oracle(&m, None);
        assert!(o.complete);
        for (i, b) in [1, 3, 3, 1].iter().enumerate() {
            assert_eq!(o.table.get(i, i as i64), *b);
        }
        assert_eq!(o.table.total(), vec![1, 3, 3, 1]);
    }

    #[test]
    fn agrees_with_resolution_on_small_ideal() {
        let i = Ideal::parse(&Ring::standard(), "x^2, x*y, y^3, z^2 - x*z").unwrap();
        let o = koszul_betti_oracle(&i, None);
        let t = crate::resolve::betti_table(&i).unwrap();
        assert!(o.table.same_entries(&t.truncated(o.j_max as i64)), "{}\nvs\n{}", o.table, t);
    }
}
