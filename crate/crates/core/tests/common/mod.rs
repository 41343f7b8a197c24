//! Shared helpers for the integration tests: random polynomial strategies and
//! an ideal-membership oracle by exact linear algebra.

#![allow(dead_code)]

use coflag::poly::{Coeff, Monomial, MonomialOrder, Polynomial};
use num_traits::{One, Zero};
use proptest::prelude::*;

pub fn p(s: &str, n: usize) -> Polynomial {
    Polynomial::parse(s, n).unwrap()
}

/// All exponent vectors of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, d: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() + 1 == n {
            cur.push(d);
            out.push(Monomial::new(cur.clone()));
            cur.pop();
            return;
        }
        for e in (0..=d).rev() {
            cur.push(e);
            go(n, d - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::new(vec![]));
        }
        return out;
    }
    go(n, d, &mut Vec::new(), &mut out);
    out
}

/// Small nonzero rationals.
pub fn coeff() -> impl Strategy<Value = Coeff> {
    (-5i64..=5, 1i64..=3)
        .prop_filter("nonzero", |(a, _)| *a != 0)
        .prop_map(|(a, b)| Coeff::new(a.into(), b.into()))
}

/// Polynomials in `n` variables with up to `terms` terms, exponents below `max_exp`.
pub fn poly(n: usize, terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((coeff(), prop::collection::vec(0..max_exp, n)), 0..=terms).prop_map(move |ts| {
        Polynomial::from_terms(
            MonomialOrder::lex(n),
            ts.into_iter().map(|(c, e)| (c, Monomial::new(e))),
        )
        .unwrap()
    })
}

pub fn nonzero_poly(n: usize, terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    poly(n, terms, max_exp).prop_filter("nonzero", |f| !f.is_zero())
}

/// A nonzero homogeneous polynomial of degree `d` in `n` variables.
pub fn homogeneous(n: usize, d: u32, terms: usize) -> impl Strategy<Value = Polynomial> {
    let monos = monomials_of_degree(n, d);
    let k = monos.len();
    prop::collection::vec((coeff(), 0..k), 1..=terms)
        .prop_map(move |ts| {
            Polynomial::from_terms(
                MonomialOrder::lex(n),
                ts.into_iter().map(|(c, i)| (c, monos[i].clone())),
            )
            .unwrap()
        })
        .prop_filter("nonzero", |f| !f.is_zero())
}

/// Homogeneous generators of degrees 1..=3 (at most `count` of them).
pub fn homogeneous_ideal(n: usize, count: usize) -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec((1u32..=3).prop_flat_map(move |d| homogeneous(n, d, 4)), 1..=count)
}

/// Rank of a list of rows over the rationals (rows are consumed).
fn rank(mut rows: Vec<Vec<Coeff>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = Coeff::one() / &rows[r][c];
        let pivot: Vec<Coeff> = rows[r].iter().map(|x| x * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

/// Whether the homogeneous `f` lies in the ideal of the homogeneous `gens`:
/// `f` must be a linear combination of `m * g` over monomials `m` with
/// `deg(m * g) = deg f`. Exact for homogeneous ideals.
pub fn in_ideal_by_linear_algebra(f: &Polynomial, gens: &[Polynomial]) -> bool {
    if f.is_zero() {
        return true;
    }
    let n = f.arity();
    let d = f.total_degree().unwrap();
    let basis = monomials_of_degree(n, d);
    let index = |m: &Monomial| basis.iter().position(|b| b == m).expect("degree d monomial");
    let to_row = |g: &Polynomial| {
        let mut row = vec![Coeff::zero(); basis.len()];
        for t in g.terms() {
            row[index(&t.mono)] = t.coeff.clone();
        }
        row
    };
    let mut rows = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let dg = g.total_degree().unwrap();
        if dg > d {
            continue;
        }
        for m in monomials_of_degree(n, d - dg) {
            rows.push(to_row(&g.mul_monomial(&m)));
        }
    }
    let without = rank(rows.clone());
    rows.push(to_row(f));
    rank(rows) == without
}
