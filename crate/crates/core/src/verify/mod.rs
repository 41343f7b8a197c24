//! Pass/fail checks of the explicit algebraic statements about each space.
//!
//! Every check becomes a [`Claim`] with a stable id. Failures carry a
//! [`Witness`]: the offending remainder, the monomial-set difference, or the
//! two disagreeing counts or series.

mod checks;

pub use checks::{
    designated_top_monomial, full_suite, perturb_coefficient, verify_all, verify_basis, verify_fibration,
    verify_gss2_model, verify_poincare_consistency, verify_relation_claims, verify_relation_formulas,
    verify_relations_are_groebner, verify_relations_are_groebner_with, verify_relations_in_ideal,
    verify_relations_in_ideal_with, verify_top_class, verify_vanishing_identities, SuiteOptions,
};

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::poly::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A polynomial that should have been zero (or the zero that should not have been).
    Polynomial {
        value: String,
    },
    MonomialDiff {
        missing: Vec<String>,
        unexpected: Vec<String>,
    },
    Count {
        expected: u64,
        found: u64,
    },
    Series {
        expected: String,
        found: String,
    },
    /// The check could not be carried out.
    Error {
        message: String,
    },
}

impl Witness {
    pub fn polynomial(value: impl fmt::Display) -> Self {
        Witness::Polynomial {
            value: value.to_string(),
        }
    }

    pub fn error(message: impl fmt::Display) -> Self {
        Witness::Error {
            message: message.to_string(),
        }
    }

    /// Whether a polynomial witness is a nonzero polynomial.
    pub fn is_nonzero_polynomial(&self) -> bool {
        matches!(self, Witness::Polynomial { value } if value != "0")
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Polynomial { value } => write!(f, "{value}"),
            Witness::MonomialDiff { missing, unexpected } => {
                write!(
                    f,
                    "missing {{{}}}, unexpected {{{}}}",
                    missing.join(", "),
                    unexpected.join(", ")
                )
            }
            Witness::Count { expected, found } => write!(f, "expected {expected}, found {found}"),
            Witness::Series { expected, found } => write!(f, "expected {expected}, found {found}"),
            Witness::Error { message } => write!(f, "error: {message}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub id: String,
    /// Plain statement of what was checked.
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Claim {
    pub fn pass(id: impl Into<String>, anchor: impl Into<String>) -> Self {
        Claim {
            id: id.into(),
            anchor: anchor.into(),
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn fail(id: impl Into<String>, anchor: impl Into<String>, witness: Witness) -> Self {
        Claim {
            id: id.into(),
            anchor: anchor.into(),
            status: Status::Fail,
            witness: Some(witness),
        }
    }

    /// `Ok(None)` passes, `Ok(Some(w))` fails with `w`, `Err(e)` fails with an error witness.
    pub fn from_outcome<E: fmt::Display>(
        id: impl Into<String>,
        anchor: impl Into<String>,
        outcome: Result<Option<Witness>, E>,
    ) -> Self {
        match outcome {
            Ok(None) => Claim::pass(id, anchor),
            Ok(Some(w)) => Claim::fail(id, anchor, w),
            Err(e) => Claim::fail(id, anchor, Witness::error(e)),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Claims sorted by id; ids are unique.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    claims: Vec<Claim>,
}

impl VerificationReport {
    /// Panics on duplicate ids, which would mean two checks were given the same name.
    pub fn new(mut claims: Vec<Claim>) -> Self {
        claims.sort_by(|a, b| a.id.cmp(&b.id));
        for w in claims.windows(2) {
            assert!(w[0].id != w[1].id, "duplicate claim id {}", w[0].id);
        }
        VerificationReport { claims }
    }

    pub fn merge(reports: impl IntoIterator<Item = VerificationReport>) -> Self {
        Self::new(reports.into_iter().flat_map(|r| r.claims).collect())
    }

    pub fn claims(&self) -> &[Claim] {
        &self.claims
    }

    pub fn len(&self) -> usize {
        self.claims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.claims.is_empty()
    }

    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(Claim::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, id: &str) -> Option<&Claim> {
        self.claims
            .binary_search_by(|c| c.id.as_str().cmp(id))
            .ok()
            .map(|i| &self.claims[i])
    }
}

pub(crate) fn monomial_diff(
    expected: &BTreeSet<Monomial>,
    found: &BTreeSet<Monomial>,
    names: &[String],
) -> Option<Witness> {
    if expected == found {
        return None;
    }
    Some(Witness::MonomialDiff {
        missing: expected.difference(found).map(|m| m.to_string_with(names)).collect(),
        unexpected: found.difference(expected).map(|m| m.to_string_with(names)).collect(),
    })
}
