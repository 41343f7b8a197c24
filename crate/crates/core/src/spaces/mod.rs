//! Presentations of the cohomology rings of flag manifolds and generalised
//! symmetric spaces, with the bookkeeping that ties them to invariant degrees.

mod degrees;
pub mod file;
mod relations;

pub use degrees::{
    cartan_model_poincare, cartan_type_check, fibration_factorization_check, poincare_from_invariant_degrees,
    CartanModel, InvariantDegrees, RestrictionData,
};
pub use relations::{
    expected_basis, g2_relations, relation_family, relation_formula, relation_set, Relation, RelationKind,
    G2_RELATION_DISPLAYS,
};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groebner::{buchberger, GroebnerBasis, GroebnerError};
use crate::poly::{default_names, MonomialOrder, PolyError, Polynomial};
use crate::quotient::{QuotientError, QuotientRing};
use crate::symfun::{elementary_sigma, squared_sigma, top_product, VariableSubset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("rank {rank} is not valid for family {family}")]
    InvalidRank { family: Family, rank: usize },
    #[error("relation kind {kind} does not apply to family {family}")]
    IncompatibleKind { kind: RelationKind, family: Family },
    #[error("relation index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("presentation '{0}' has no expected basis pattern")]
    NoBasisPattern(String),
    #[error("invalid degree data: {0}")]
    InvalidDegrees(String),
    #[error("degree quotient is not a polynomial with non-negative coefficients: {0}")]
    NonPolynomialSeries(String),
    #[error("split rank {split_rank} out of range for {images} images")]
    InvalidSplitRank { split_rank: usize, images: usize },
    #[error("unknown family '{0}'")]
    UnknownFamily(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    #[serde(rename = "custom")]
    Custom,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G2 => "G2",
            Family::Custom => "custom",
        })
    }
}

impl FromStr for Family {
    type Err = SpaceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "G2" | "g2" => Ok(Family::G2),
            "custom" => Ok(Family::Custom),
            other => Err(SpaceError::UnknownFamily(other.to_string())),
        }
    }
}

impl Family {
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    pub fn min_rank(self) -> usize {
        match self {
            Family::D | Family::G2 => 2,
            _ => 1,
        }
    }
}

/// Per-variable exponent bounds (inclusive) describing a monomial basis,
/// optionally with the type-D rule: if `a_i` reaches its bound `2i-1`
/// (for `i < n`) then the product `a_{i+1} ... a_n` must vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisPattern {
    pub bounds: Vec<u32>,
    pub d_side_condition: bool,
}

impl BasisPattern {
    pub fn admits(&self, exps: &[u32]) -> bool {
        if exps.len() != self.bounds.len() || exps.iter().zip(&self.bounds).any(|(e, b)| e > b) {
            return false;
        }
        if self.d_side_condition {
            let n = exps.len();
            for i in 0..n.saturating_sub(1) {
                if exps[i] == self.bounds[i] && exps[i + 1..].iter().all(|&e| e > 0) {
                    return false;
                }
            }
        }
        true
    }
}

/// The data of one space: a polynomial ring with generators of the defining
/// ideal, plus invariant degrees of `G` and `H` and the odd degrees of the
/// exterior part.
#[derive(Clone, Debug, PartialEq)]
pub struct SpacePresentation {
    pub name: String,
    pub family: Family,
    pub rank: usize,
    pub variables: Vec<String>,
    pub ideal_generators: Vec<Polynomial>,
    pub order: MonomialOrder,
    pub pattern: Option<BasisPattern>,
    pub degrees: InvariantDegrees,
}

impl SpacePresentation {
    /// Checks arities and degree bookkeeping.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        family: Family,
        rank: usize,
        variables: Vec<String>,
        ideal_generators: Vec<Polynomial>,
        order: MonomialOrder,
        pattern: Option<BasisPattern>,
        degrees: InvariantDegrees,
    ) -> Result<Self, SpaceError> {
        let arity = variables.len();
        if order.arity() != arity {
            return Err(PolyError::ArityMismatch(arity, order.arity()).into());
        }
        if let Some(g) = ideal_generators.iter().find(|g| g.arity() != arity) {
            return Err(PolyError::ArityMismatch(arity, g.arity()).into());
        }
        if let Some(p) = &pattern {
            if p.bounds.len() != arity {
                return Err(PolyError::ArityMismatch(arity, p.bounds.len()).into());
            }
        }
        degrees.validate()?;
        Ok(SpacePresentation {
            name: name.into(),
            family,
            rank,
            variables,
            ideal_generators,
            order,
            pattern,
            degrees,
        })
    }

    pub fn arity(&self) -> usize {
        self.variables.len()
    }

    pub fn manifold_dimension(&self) -> u32 {
        self.degrees.manifold_dimension()
    }

    pub fn is_equal_rank(&self) -> bool {
        self.degrees.exterior_degrees().is_empty()
    }

    pub fn groebner_basis(&self) -> Result<GroebnerBasis, SpaceError> {
        Ok(buchberger(&self.ideal_generators, &self.order)?)
    }

    pub fn quotient(&self) -> Result<QuotientRing, SpaceError> {
        Ok(QuotientRing::new(self.groebner_basis()?))
    }

    /// Same presentation under another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<SpacePresentation, SpaceError> {
        if order.arity() != self.arity() {
            return Err(PolyError::ArityMismatch(self.arity(), order.arity()).into());
        }
        let mut out = self.clone();
        out.ideal_generators = self
            .ideal_generators
            .iter()
            .map(|g| g.reorder(&order))
            .collect::<Result<_, _>>()?;
        out.order = order;
        Ok(out)
    }

    pub fn format_poly(&self, f: &Polynomial) -> String {
        f.to_string_with(&self.variables)
    }
}

fn flag_name(family: Family, n: usize) -> String {
    match family {
        Family::A => format!("SU({})/T^{n}", n + 1),
        Family::B => format!("Spin({})/T^{n}", 2 * n + 1),
        Family::C => format!("Sp({n})/T^{n}"),
        Family::D => format!("Spin({})/T^{n}", 2 * n),
        Family::G2 => "G2/T^2".to_string(),
        Family::Custom => "custom".to_string(),
    }
}

/// Invariant degrees of the simple group of the given classical type and rank.
pub fn group_invariant_degrees(family: Family, n: usize) -> Vec<u32> {
    let n32 = n as u32;
    match family {
        Family::A => (2..=n32 + 1).collect(),
        Family::B | Family::C => (1..=n32).map(|j| 2 * j).collect(),
        Family::D => {
            let mut d: Vec<u32> = (1..n32).map(|j| 2 * j).collect();
            d.push(n32);
            d
        }
        Family::G2 => vec![2, 6],
        Family::Custom => Vec::new(),
    }
}

/// Exponent bounds of the expected monomial basis of each flag manifold.
pub fn basis_pattern(family: Family, n: usize) -> Option<BasisPattern> {
    let n32 = n as u32;
    match family {
        Family::A => Some(BasisPattern {
            bounds: (1..=n32).collect(),
            d_side_condition: false,
        }),
        Family::B | Family::C => Some(BasisPattern {
            bounds: (1..=n32).map(|i| 2 * i - 1).collect(),
            d_side_condition: false,
        }),
        Family::D => {
            let mut bounds: Vec<u32> = (1..n32).map(|i| 2 * i - 1).collect();
            bounds.push(2 * n32 - 2);
            Some(BasisPattern {
                bounds,
                d_side_condition: true,
            })
        }
        Family::G2 => Some(BasisPattern {
            bounds: vec![1, 5],
            d_side_condition: false,
        }),
        Family::Custom => None,
    }
}

/// Generators of the A-type ideal in the `n + 1` variables `x0..xn`:
/// `sigma_j(x0, ..., xn)` for `j = 1..n+1`. Variable `x0` has index 0.
pub fn a_type_unreduced_generators(n: usize) -> Result<Vec<Polynomial>, SpaceError> {
    let all = VariableSubset::all(n + 1);
    (1..=n + 1)
        .map(|j| {
            elementary_sigma(j, &all).map_err(|_| SpaceError::InvalidRank {
                family: Family::A,
                rank: n,
            })
        })
        .collect()
}

/// Flag manifold `G/T` of a classical group, canonical lex order `x1 > ... > xn`.
pub fn flag_presentation(family: Family, n: usize) -> Result<SpacePresentation, SpaceError> {
    if !family.is_classical() || n < family.min_rank() {
        return Err(SpaceError::InvalidRank { family, rank: n });
    }
    let all = VariableSubset::all(n);
    let sq = |j: usize| squared_sigma(j, &all).expect("1 <= j <= n");
    let generators: Vec<Polynomial> = match family {
        Family::A => {
            // x0 -> -(x1 + ... + xn); the image of sigma_1 vanishes.
            let mut minus_sum = Polynomial::zero(n + 1);
            for i in 1..=n {
                minus_sum = &minus_sum - &Polynomial::var(n + 1, i);
            }
            a_type_unreduced_generators(n)?
                .into_iter()
                .skip(1)
                .map(|g| g.substitute(0, &minus_sum)?.remove_variable(0))
                .collect::<Result<_, _>>()?
        }
        Family::B | Family::C => (1..=n).map(sq).collect(),
        Family::D => {
            let mut g: Vec<Polynomial> = (1..n).map(sq).collect();
            g.push(top_product(&all).expect("n >= 2"));
            g
        }
        _ => unreachable!("classical families only"),
    };
    let degrees = InvariantDegrees::new(group_invariant_degrees(family, n), vec![1; n], Vec::new())?;
    SpacePresentation::new(
        flag_name(family, n),
        family,
        n,
        default_names(n),
        generators,
        MonomialOrder::lex(n),
        basis_pattern(family, n),
        degrees,
    )
}

/// `G2/T^2` with generators `x, y` and ideal `<x^2 + 3xy + 3y^2, x^6>`.
pub fn g2_flag_presentation() -> SpacePresentation {
    let names = vec!["x".to_string(), "y".to_string()];
    let order = MonomialOrder::lex(2);
    let gens = ["x^2 + 3*x*y + 3*y^2", "x^6"]
        .iter()
        .map(|s| Polynomial::parse_with(s, &names, &order).expect("literal parses"))
        .collect();
    let degrees = InvariantDegrees::new(vec![2, 6], vec![1, 1], Vec::new()).expect("valid literal data");
    SpacePresentation::new(
        flag_name(Family::G2, 2),
        Family::G2,
        2,
        names,
        gens,
        order,
        basis_pattern(Family::G2, 2),
        degrees,
    )
    .expect("valid literal data")
}

/// Presentation for `family` and `rank`; `G2` ignores the rank beyond
/// requiring it to be 2.
pub fn presentation(family: Family, rank: usize) -> Result<SpacePresentation, SpaceError> {
    match family {
        Family::G2 if rank == 2 => Ok(g2_flag_presentation()),
        Family::G2 | Family::Custom => Err(SpaceError::InvalidRank { family, rank }),
        _ => flag_presentation(family, rank),
    }
}

/// Order of the Weyl group: `(n+1)!`, `2^n n!`, `2^(n-1) n!`, 12.
pub fn weyl_group_order(family: Family, n: usize) -> Option<u64> {
    let fact = |k: usize| (1..=k as u64).product::<u64>();
    match family {
        Family::A => Some(fact(n + 1)),
        Family::B | Family::C => Some((1u64 << n) * fact(n)),
        Family::D if n >= 2 => Some((1u64 << (n - 1)) * fact(n)),
        Family::G2 => Some(12),
        _ => None,
    }
}
