//! Hilbert functions and series of monomial ideals.

use crate::monomial::Monomial;

/// Drops generators divisible by others (and duplicates).
pub fn minimalize_monomials(gens: &[Monomial]) -> Vec<Monomial> {
    let mut g: Vec<Monomial> = gens.to_vec();
    g.sort_by_key(|m| m.degree());
    g.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in g {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Number of degree-`d` monomials outside the ideal generated by `gens`.
pub fn count_standard(nvars: usize, gens: &[Monomial], d: u32) -> usize {
    Monomial::all_of_degree(nvars, d)
        .iter()
        .filter(|m| !gens.iter().any(|g| g.divides(m)))
        .count()
}

/// Degree-`d` monomials outside the ideal, descending lexicographically.
pub fn standard_monomials(nvars: usize, gens: &[Monomial], d: u32) -> Vec<Monomial> {
    Monomial::all_of_degree(nvars, d)
        .into_iter()
        .filter(|m| !gens.iter().any(|g| g.divides(m)))
        .collect()
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, y) in b.iter().enumerate() {
        a[i + shift] += y;
    }
}

fn trim(mut a: Vec<i64>) -> Vec<i64> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    a
}

/// Numerator `K(t)` of the Hilbert series `K(t) / (1-t)^N` of `R / (gens)`.
pub fn series_numerator(nvars: usize, gens: &[Monomial]) -> Vec<i64> {
    let g = minimalize_monomials(gens);
    trim(numerator_rec(nvars, g))
}

fn numerator_rec(nvars: usize, g: Vec<Monomial>) -> Vec<i64> {
    let pairwise_coprime = g
        .iter()
        .enumerate()
        .all(|(i, a)| g[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let mut acc = vec![1i64];
        for m in &g {
            let d = m.degree() as usize;
            let mut f = vec![0i64; d + 1];
            f[0] += 1;
            f[d] -= 1;
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    // Pivot on a variable of a generator that shares support with another one.
    let (i, _) = g
        .iter()
        .enumerate()
        .find(|(i, a)| g.iter().enumerate().any(|(j, b)| j != *i && !a.is_coprime(b)))
        .expect("some overlap");
    let v = g[i]
        .exps()
        .iter()
        .enumerate()
        .filter(|(_, e)| **e > 0)
        .find(|(k, _)| g.iter().enumerate().any(|(j, b)| j != i && b.exps()[*k] > 0))
        .map(|(k, _)| k)
        .expect("shared variable");
    let x = Monomial::var(nvars, v, 1);
    let mut plus: Vec<Monomial> = g.iter().filter(|m| m.exps()[v] == 0).cloned().collect();
    plus.push(x.clone());
    let colon: Vec<Monomial> = g
        .iter()
        .map(|m| m.div(&x).unwrap_or_else(|| m.clone()))
        .collect();
    let mut out = numerator_rec(nvars, minimalize_monomials(&plus));
    let c = numerator_rec(nvars, minimalize_monomials(&colon));
    poly_add(&mut out, &c, 1);
    out
}

/// Krull dimension of `R / (gens)`; `-1` for the unit ideal.
pub fn dimension(nvars: usize, gens: &[Monomial]) -> i64 {
    let mut k = series_numerator(nvars, gens);
    if k.iter().all(|&c| c == 0) {
        return -1;
    }
    let mut mult = 0;
    // divide by (1 - t) while K(1) = 0
    while k.iter().sum::<i64>() == 0 {
        let mut q = vec![0i64; k.len() - 1];
        let mut carry = 0;
        for i in 0..q.len() {
            carry += k[i];
            q[i] = carry;
        }
        k = q;
        mult += 1;
    }
    nvars as i64 - mult
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.iter().copied())
    }

    #[test]
    fn complete_intersection_numerator() {
        let g = [m(&[2, 0, 0]), m(&[0, 3, 0]), m(&[0, 0, 4])];
        let k = series_numerator(3, &g);
        // (1-t^2)(1-t^3)(1-t^4)
        assert_eq!(k, vec![1, 0, -1, -1, -1, 1, 1, 1, 0, -1]);
        assert_eq!(dimension(3, &g), 0);
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(3, &[m(&[1, 0, 1]), m(&[0, 1, 1])]), 2);
        assert_eq!(dimension(3, &[m(&[1, 0, 0]), m(&[0, 1, 0])]), 1);
        assert_eq!(dimension(3, &[]), 3);
        assert_eq!(dimension(3, &[m(&[0, 0, 0])]), -1);
    }

    proptest! {
        #[test]
        fn series_matches_counts(gens in prop::collection::vec(prop::collection::vec(0u32..4, 3), 1..5)) {
            let gens: Vec<Monomial> = gens.iter().map(|e| m(e)).collect();
            let k = series_numerator(3, &gens);
            // expand K(t) / (1-t)^3 up to degree 12 and compare with direct counts
            let mut s = k.clone();
            s.resize(13, 0);
            for _ in 0..3 {
                for i in 1..s.len() {
                    s[i] += s[i - 1];
                }
            }
            for d in 0..13u32 {
                prop_assert_eq!(s[d as usize], count_standard(3, &gens, d) as i64);
            }
        }
    }
}
