//! Quotient rings `Q[x1..xn] / I` of zero-dimensional ideals: standard
//! monomials, graded dimensions, multiplication of cosets, top classes.

mod series;

pub use series::PoincarePolynomial;

use thiserror::Error;

use crate::groebner::{normal_form, GroebnerBasis, GroebnerError};
use crate::poly::{Monomial, PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("quotient is infinite-dimensional (no pure power of x{} among leading monomials)", .0 + 1)]
    InfiniteDimensional(usize),
    #[error("expected {expected} variable weights, got {got}")]
    WeightArity { expected: usize, got: usize },
    #[error("variable weights must be positive")]
    ZeroWeight,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

impl From<PolyError> for QuotientError {
    fn from(e: PolyError) -> Self {
        QuotientError::Groebner(e.into())
    }
}

/// Every variable sits in cohomological degree 2 unless weights say otherwise.
pub const DEFAULT_WEIGHT: u32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRing {
    gb: GroebnerBasis,
    weights: Vec<u32>,
}

impl QuotientRing {
    pub fn new(gb: GroebnerBasis) -> Self {
        let weights = vec![DEFAULT_WEIGHT; gb.arity()];
        QuotientRing { gb, weights }
    }

    pub fn with_weights(gb: GroebnerBasis, weights: Vec<u32>) -> Result<Self, QuotientError> {
        if weights.len() != gb.arity() {
            return Err(QuotientError::WeightArity {
                expected: gb.arity(),
                got: weights.len(),
            });
        }
        if weights.contains(&0) {
            return Err(QuotientError::ZeroWeight);
        }
        Ok(QuotientRing { gb, weights })
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn arity(&self) -> usize {
        self.gb.arity()
    }

    /// For each variable, the smallest pure power among leading monomials.
    fn power_bounds(&self) -> Result<Vec<u32>, QuotientError> {
        let mut bounds: Vec<Option<u32>> = vec![None; self.arity()];
        if self.gb.is_unit_ideal() {
            return Ok(vec![0; self.arity()]);
        }
        for lm in self.gb.leading_monomials() {
            if let Some((i, e)) = lm.as_pure_power() {
                bounds[i] = Some(bounds[i].map_or(e, |b| b.min(e)));
            }
        }
        bounds
            .into_iter()
            .enumerate()
            .map(|(i, b)| b.ok_or(QuotientError::InfiniteDimensional(i)))
            .collect()
    }

    pub fn is_zero_dimensional(&self) -> bool {
        self.power_bounds().is_ok()
    }

    /// Monomials not divisible by any leading monomial of the basis, sorted by
    /// degree and then ascending in the basis order.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>, QuotientError> {
        let bounds = self.power_bounds()?;
        let lms: Vec<&Monomial> = self.gb.leading_monomials();
        let n = self.arity();
        let mut out = Vec::new();
        if self.gb.is_unit_ideal() {
            return Ok(out);
        }
        let mut exps = vec![0u32; n];
        // Depth-first over variables; once a partial monomial lies in the
        // leading ideal, larger exponents of the current variable do too.
        fn walk(var: usize, exps: &mut Vec<u32>, bounds: &[u32], lms: &[&Monomial], out: &mut Vec<Monomial>) {
            if var == exps.len() {
                out.push(Monomial::new(exps.clone()));
                return;
            }
            for e in 0..bounds[var] {
                exps[var] = e;
                let m = Monomial::new(exps.clone());
                if lms.iter().any(|lm| lm.divides(&m)) {
                    break;
                }
                walk(var + 1, exps, bounds, lms, out);
            }
            exps[var] = 0;
        }
        walk(0, &mut exps, &bounds, &lms, &mut out);
        let order = self.gb.order();
        out.sort_by(|a, b| {
            a.weighted_degree(&self.weights)
                .cmp(&b.weighted_degree(&self.weights))
                .then_with(|| order.cmp(a, b))
        });
        Ok(out)
    }

    /// Vector-space dimension of the quotient.
    pub fn dimension(&self) -> Result<usize, QuotientError> {
        Ok(self.standard_monomials()?.len())
    }

    pub fn poincare_polynomial(&self) -> Result<PoincarePolynomial, QuotientError> {
        let mut coeffs: Vec<u64> = Vec::new();
        for m in self.standard_monomials()? {
            let d = m.weighted_degree(&self.weights) as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, 0);
            }
            coeffs[d] += 1;
        }
        Ok(PoincarePolynomial::new(coeffs))
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial, QuotientError> {
        Ok(normal_form(f, &self.gb)?)
    }

    /// Product of two cosets, as the normal form of `f * g`.
    pub fn coset_mul(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial, QuotientError> {
        let prod = f.try_mul(g)?;
        self.normal_form(&prod)
    }

    /// Highest cohomological degree with a standard monomial, and the
    /// standard monomials in that degree.
    pub fn top_class(&self) -> Result<(u32, Vec<Monomial>), QuotientError> {
        let sm = self.standard_monomials()?;
        let top = sm.iter().map(|m| m.weighted_degree(&self.weights)).max().unwrap_or(0);
        let ms = sm
            .into_iter()
            .filter(|m| m.weighted_degree(&self.weights) == top)
            .collect();
        Ok((top, ms))
    }

    /// Cohomological degree of a monomial.
    pub fn degree_of(&self, m: &Monomial) -> u32 {
        m.weighted_degree(&self.weights)
    }
}

pub fn standard_monomials(q: &QuotientRing) -> Result<Vec<Monomial>, QuotientError> {
    q.standard_monomials()
}

pub fn poincare_polynomial(q: &QuotientRing) -> Result<PoincarePolynomial, QuotientError> {
    q.poincare_polynomial()
}

pub fn coset_mul(f: &Polynomial, g: &Polynomial, q: &QuotientRing) -> Result<Polynomial, QuotientError> {
    q.coset_mul(f, g)
}

pub fn top_class(q: &QuotientRing) -> Result<(u32, Vec<Monomial>), QuotientError> {
    q.top_class()
}
