//! Buchberger's algorithm, normal forms, and ideal membership.

use std::collections::HashSet;

use thiserror::Error;

use crate::poly::{self, Monomial, MonomialOrder, PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("empty generator list")]
    Empty,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Reduced Groebner basis: monic, interreduced, sorted by descending leading
/// monomial. Equal ideals under the same order give equal values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    arity: usize,
    generators: Vec<Polynomial>,
    order: MonomialOrder,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.generators
            .iter()
            .map(|g| g.leading_monomial().expect("basis elements are nonzero"))
            .collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_unit()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, GroebnerError> {
        normal_form(f, self)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, GroebnerError> {
        is_in_ideal(f, self)
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Builder {
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    sugar: Vec<u32>,
    pending: Vec<Pair>,
    pending_keys: HashSet<(usize, usize)>,
}

impl Builder {
    fn lm(&self, i: usize) -> &Monomial {
        self.basis[i].leading_monomial().expect("basis elements are nonzero")
    }

    fn insert(&mut self, h: Polynomial, sugar: u32) {
        let t = self.basis.len();
        self.basis.push(h);
        self.sugar.push(sugar);
        for i in 0..t {
            let (li, lt) = (self.lm(i), self.lm(t));
            let lcm = li.lcm(lt);
            let s = (self.sugar[i] + lcm.degree() - li.degree()).max(self.sugar[t] + lcm.degree() - lt.degree());
            self.pending.push(Pair { i, j: t, lcm, sugar: s });
            self.pending_keys.insert((i, t));
        }
    }

    /// Normal strategy with sugar tiebreak: lowest sugar, then smallest lcm.
    fn select(&mut self) -> Option<Pair> {
        let order = &self.order;
        let best = (0..self.pending.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pending[a], &self.pending[b]);
            pa.sugar
                .cmp(&pb.sugar)
                .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
                .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
        })?;
        let pair = self.pending.swap_remove(best);
        self.pending_keys.remove(&(pair.i, pair.j));
        Some(pair)
    }

    fn is_pending(&self, a: usize, b: usize) -> bool {
        self.pending_keys.contains(&(a.min(b), a.max(b)))
    }

    /// Chain criterion: some third element's leading monomial divides the lcm
    /// and both of its pairs with `i` and `j` are already treated.
    fn chain_criterion(&self, pair: &Pair) -> bool {
        (0..self.basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && self.lm(k).divides(&pair.lcm)
                && !self.is_pending(pair.i, k)
                && !self.is_pending(pair.j, k)
        })
    }
}

/// Reduced Groebner basis of the ideal generated by `gens` under `order`.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
    let first = gens.first().ok_or(GroebnerError::Empty)?;
    let arity = first.arity();
    if order.arity() != arity {
        return Err(PolyError::ArityMismatch(arity, order.arity()).into());
    }
    let mut inputs = Vec::with_capacity(gens.len());
    for g in gens {
        if g.arity() != arity {
            return Err(PolyError::ArityMismatch(arity, g.arity()).into());
        }
        if g.is_unit() {
            return Ok(unit_basis(order));
        }
        if !g.is_zero() {
            inputs.push(g.reorder(order)?.monic());
        }
    }

    let mut b = Builder {
        order: order.clone(),
        basis: Vec::new(),
        sugar: Vec::new(),
        pending: Vec::new(),
        pending_keys: HashSet::new(),
    };
    for g in inputs {
        let s = g.total_degree().expect("nonzero");
        b.insert(g, s);
    }

    while let Some(pair) = b.select() {
        if b.lm(pair.i).is_coprime(b.lm(pair.j)) || b.chain_criterion(&pair) {
            continue;
        }
        let s = poly::division::spoly_sorted(&b.basis[pair.i], &b.basis[pair.j]);
        let h = poly::division::run(s, &b.basis, order, |_, _, _| {});
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return Ok(unit_basis(order));
        }
        b.insert(h.monic(), pair.sugar);
    }

    Ok(GroebnerBasis {
        arity,
        generators: interreduce(b.basis, order),
        order: order.clone(),
    })
}

fn unit_basis(order: &MonomialOrder) -> GroebnerBasis {
    GroebnerBasis {
        arity: order.arity(),
        generators: vec![Polynomial::one(order.arity()).reorder(order).expect("same arity")],
        order: order.clone(),
    }
}

/// Minimalizes and tail-reduces a Groebner basis, then sorts it.
fn interreduce(basis: Vec<Polynomial>, order: &MonomialOrder) -> Vec<Polynomial> {
    let lms: Vec<&Monomial> = basis.iter().map(|g| g.leading_monomial().expect("nonzero")).collect();
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| !(0..basis.len()).any(|j| j != i && lms[j].divides(lms[i]) && (lms[j] != lms[i] || j < i)))
        .collect();
    let minimal: Vec<Polynomial> = keep.iter().map(|&i| basis[i].clone()).collect();
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            poly::division::run(minimal[i].clone(), &others, order, |_, _, _| {}).monic()
        })
        .collect();
    reduced.sort_by(|a, b| {
        let (la, lb) = (
            a.leading_monomial().expect("nonzero"),
            b.leading_monomial().expect("nonzero"),
        );
        order.cmp(lb, la)
    });
    reduced
}

/// Canonical representative of `f` modulo the ideal of `gb`.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial, GroebnerError> {
    if f.arity() != gb.arity {
        return Err(PolyError::ArityMismatch(gb.arity, f.arity()).into());
    }
    let f = f.reorder(&gb.order)?;
    Ok(poly::division::run(f, &gb.generators, &gb.order, |_, _, _| {}))
}

pub fn is_in_ideal(f: &Polynomial, gb: &GroebnerBasis) -> Result<bool, GroebnerError> {
    Ok(normal_form(f, gb)?.is_zero())
}

/// Whether every S-polynomial of `gens` reduces to zero modulo `gens`.
pub fn is_groebner_basis(gens: &[Polynomial], order: &MonomialOrder) -> Result<bool, GroebnerError> {
    Ok(first_nonreducing_pair(gens, order)?.is_none())
}

/// The first pair `(i, j)` whose S-polynomial leaves a nonzero remainder,
/// together with that remainder.
pub fn first_nonreducing_pair(
    gens: &[Polynomial],
    order: &MonomialOrder,
) -> Result<Option<(usize, usize, Polynomial)>, GroebnerError> {
    let mut sorted = Vec::with_capacity(gens.len());
    for g in gens {
        if g.arity() != order.arity() {
            return Err(PolyError::ArityMismatch(order.arity(), g.arity()).into());
        }
        if g.is_zero() {
            return Err(PolyError::ZeroPolynomial.into());
        }
        sorted.push(g.reorder(order)?);
    }
    for j in 0..sorted.len() {
        for i in 0..j {
            let s = poly::division::spoly_sorted(&sorted[i], &sorted[j]);
            let r = poly::division::run(s, &sorted, order, |_, _, _| {});
            if !r.is_zero() {
                return Ok(Some((i, j, r)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests;
