//! Symmetric-polynomial constructors over subsets of the ring variables.

use itertools::Itertools;
use num_traits::One;
use thiserror::Error;

use crate::poly::{Coeff, Monomial, MonomialOrder, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymFunError {
    #[error("variable index {index} out of range for {arity} variables")]
    OutOfRange { index: usize, arity: usize },
    #[error("variable x{} listed twice", .0 + 1)]
    Duplicate(usize),
    #[error("degree {k} out of range for {size} variables")]
    DegreeOutOfRange { k: usize, size: usize },
    #[error("empty variable subset")]
    Empty,
}

/// A sorted set of variable indices inside a ring of `arity` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableSubset {
    arity: usize,
    indices: Vec<usize>,
}

impl VariableSubset {
    pub fn new(arity: usize, mut indices: Vec<usize>) -> Result<Self, SymFunError> {
        indices.sort_unstable();
        for w in indices.windows(2) {
            if w[0] == w[1] {
                return Err(SymFunError::Duplicate(w[0]));
            }
        }
        if let Some(&index) = indices.iter().find(|&&i| i >= arity) {
            return Err(SymFunError::OutOfRange { index, arity });
        }
        Ok(VariableSubset { arity, indices })
    }

    /// Variables `x_{start+1} .. x_{end}` (0-based half-open range).
    pub fn range(arity: usize, range: std::ops::Range<usize>) -> Result<Self, SymFunError> {
        Self::new(arity, range.collect())
    }

    pub fn all(arity: usize) -> Self {
        VariableSubset {
            arity,
            indices: (0..arity).collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    fn without_first(&self) -> VariableSubset {
        VariableSubset {
            arity: self.arity,
            indices: self.indices[1..].to_vec(),
        }
    }
}

fn sum_of_monomials(arity: usize, monos: impl IntoIterator<Item = Monomial>) -> Polynomial {
    Polynomial::from_terms(MonomialOrder::lex(arity), monos.into_iter().map(|m| (Coeff::one(), m)))
        .expect("monomials built with the subset's arity")
}

/// `sigma_k` over `vars`, each variable raised to `power`.
fn elementary_powered(k: usize, vars: &VariableSubset, power: u32) -> Result<Polynomial, SymFunError> {
    if k == 0 || k > vars.len() {
        return Err(SymFunError::DegreeOutOfRange { k, size: vars.len() });
    }
    let monos = vars.indices.iter().combinations(k).map(|c| {
        let mut e = vec![0; vars.arity];
        for &i in c {
            e[i] = power;
        }
        Monomial::new(e)
    });
    Ok(sum_of_monomials(vars.arity, monos))
}

/// Elementary symmetric polynomial `sigma_k` (1 <= k <= |vars|).
pub fn elementary_sigma(k: usize, vars: &VariableSubset) -> Result<Polynomial, SymFunError> {
    elementary_powered(k, vars, 1)
}

/// `sigma_k(x_i^2 : i in vars)`.
pub fn squared_sigma(k: usize, vars: &VariableSubset) -> Result<Polynomial, SymFunError> {
    elementary_powered(k, vars, 2)
}

/// Sum of all monomials of degree `k` in `vars` (the complete homogeneous
/// symmetric polynomial); `s_0 = 1`.
///
/// Built with `s_m(S) = x_j s_{m-1}(S) + s_m(S \ {x_j})`, peeling the
/// smallest-index variable `x_j`.
pub fn monomial_sum(k: usize, vars: &VariableSubset) -> Polynomial {
    let arity = vars.arity;
    if vars.is_empty() {
        return if k == 0 {
            Polynomial::one(arity)
        } else {
            Polynomial::zero(arity)
        };
    }
    // level[m] = s_m over the current suffix of `vars`, grown from the back.
    let mut level: Vec<Polynomial> = (0..=k)
        .map(|m| {
            Polynomial::monomial(
                Coeff::one(),
                Monomial::var_power(arity, *vars.indices.last().expect("nonempty"), m as u32),
            )
        })
        .collect();
    for &j in vars.indices.iter().rev().skip(1) {
        let xj = Monomial::var_power(arity, j, 1);
        let mut next: Vec<Polynomial> = Vec::with_capacity(k + 1);
        next.push(Polynomial::one(arity));
        for m in 1..=k {
            let s = level[m].add_scaled(&Coeff::one(), &xj, &next[m - 1]);
            next.push(s);
        }
        level = next;
    }
    level.swap_remove(k)
}

/// Sum of all degree-`k` monomials in the squares of `vars`.
pub fn monomial_sum_of_squares(k: usize, vars: &VariableSubset) -> Polynomial {
    let h = monomial_sum(k, vars);
    let terms = h.terms().iter().map(|t| {
        let e = t.mono.exponents().iter().map(|e| 2 * e).collect();
        (t.coeff.clone(), Monomial::new(e))
    });
    Polynomial::from_terms(MonomialOrder::lex(vars.arity), terms).expect("same arity")
}

/// Product of all variables in `vars`.
pub fn top_product(vars: &VariableSubset) -> Result<Polynomial, SymFunError> {
    if vars.is_empty() {
        return Err(SymFunError::Empty);
    }
    let mut e = vec![0; vars.arity];
    for &i in &vars.indices {
        e[i] = 1;
    }
    Ok(Polynomial::monomial(Coeff::one(), Monomial::new(e)))
}

/// One step of the recursion used by [`monomial_sum`], exposed for checking:
/// returns `(s_m(S), x_j * s_{m-1}(S) + s_m(S \ {x_j}))`.
pub fn newton_step(m: usize, vars: &VariableSubset) -> (Polynomial, Polynomial) {
    let lhs = monomial_sum(m, vars);
    if vars.is_empty() || m == 0 {
        return (lhs.clone(), lhs);
    }
    let xj = Monomial::var_power(vars.arity, vars.indices[0], 1);
    let rhs = monomial_sum(m, &vars.without_first()).add_scaled(&Coeff::one(), &xj, &monomial_sum(m - 1, vars));
    (lhs, rhs)
}
