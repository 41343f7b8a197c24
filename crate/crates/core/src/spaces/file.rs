//! JSON document describing a presentation or restriction data.
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "name": "SU(3)/T^2",
//!   "family": "A",
//!   "rank": 2,
//!   "variables": ["x1", "x2"],
//!   "generators": ["-x1^2 - x1*x2 - x2^2", "..."],
//!   "order": "lex",
//!   "degrees_G": [2, 3],
//!   "degrees_H": [1, 1],
//!   "exterior_degrees": [],
//!   "split_rank": null
//! }
//! ```
//!
//! `order` is one of `lex`, `grlex`, `grevlex`; an optional
//! `order_precedence` lists variable indices from largest to smallest.
//! `split_rank` is only meaningful for restriction data, where `generators`
//! are the restricted invariants.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{basis_pattern, Family, InvariantDegrees, RestrictionData, SpaceError, SpacePresentation};
use crate::poly::{MonomialOrder, OrderKind, Polynomial};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("generators[{index}]: {source}")]
    Generator {
        index: usize,
        source: crate::poly::PolyError,
    },
    #[error("unsupported schema_version {0}")]
    Version(u32),
    #[error("missing field '{0}'")]
    Missing(&'static str),
    #[error(transparent)]
    Space(#[from] SpaceError),
}

fn schema_version() -> u32 {
    SCHEMA_VERSION
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    #[serde(default = "schema_version")]
    pub schema_version: u32,
    pub name: String,
    pub family: Family,
    pub rank: usize,
    pub variables: Vec<String>,
    pub generators: Vec<String>,
    #[serde(default = "default_order")]
    pub order: OrderKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order_precedence: Option<Vec<usize>>,
    #[serde(rename = "degrees_G", default)]
    pub degrees_g: Vec<u32>,
    #[serde(rename = "degrees_H", default)]
    pub degrees_h: Vec<u32>,
    #[serde(default)]
    pub exterior_degrees: Vec<u32>,
    #[serde(default)]
    pub split_rank: Option<usize>,
}

fn default_order() -> OrderKind {
    OrderKind::Lex
}

impl PresentationFile {
    pub fn from_json(src: &str) -> Result<Self, FileError> {
        let f: PresentationFile = serde_json::from_str(src)?;
        if f.schema_version != SCHEMA_VERSION {
            return Err(FileError::Version(f.schema_version));
        }
        Ok(f)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_presentation(p: &SpacePresentation) -> Self {
        PresentationFile {
            schema_version: SCHEMA_VERSION,
            name: p.name.clone(),
            family: p.family,
            rank: p.rank,
            variables: p.variables.clone(),
            generators: p.ideal_generators.iter().map(|g| p.format_poly(g)).collect(),
            order: p.order.kind(),
            order_precedence: (!p.order.is_identity_precedence()).then(|| p.order.precedence().to_vec()),
            degrees_g: p.degrees.group().to_vec(),
            degrees_h: p.degrees.subgroup().to_vec(),
            exterior_degrees: p.degrees.exterior_degrees().to_vec(),
            split_rank: None,
        }
    }

    fn monomial_order(&self) -> Result<MonomialOrder, FileError> {
        Ok(match &self.order_precedence {
            None => MonomialOrder::new(self.order, self.variables.len()),
            Some(prec) => MonomialOrder::with_precedence(self.order, prec.clone()).map_err(SpaceError::from)?,
        })
    }

    fn polynomials(&self, order: &MonomialOrder) -> Result<Vec<Polynomial>, FileError> {
        self.generators
            .iter()
            .enumerate()
            .map(|(index, s)| {
                Polynomial::parse_with(s, &self.variables, order)
                    .map_err(|source| FileError::Generator { index, source })
            })
            .collect()
    }

    pub fn to_presentation(&self) -> Result<SpacePresentation, FileError> {
        let order = self.monomial_order()?;
        let gens = self.polynomials(&order)?;
        let degrees = InvariantDegrees::new(
            self.degrees_g.clone(),
            self.degrees_h.clone(),
            self.exterior_degrees.clone(),
        )?;
        let pattern = if self.family == Family::Custom || self.variables.len() != self.rank {
            None
        } else {
            basis_pattern(self.family, self.rank)
        };
        Ok(SpacePresentation::new(
            self.name.clone(),
            self.family,
            self.rank,
            self.variables.clone(),
            gens,
            order,
            pattern,
            degrees,
        )?)
    }

    pub fn to_restriction(&self) -> Result<(RestrictionData, MonomialOrder), FileError> {
        let order = self.monomial_order()?;
        let images = self.polynomials(&order)?;
        let k = self.split_rank.ok_or(FileError::Missing("split_rank"))?;
        Ok((RestrictionData::new(images, k)?, order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{flag_presentation, g2_flag_presentation};

    #[test]
    fn presentation_round_trip() {
        for p in [flag_presentation(Family::D, 3).unwrap(), g2_flag_presentation()] {
            let doc = PresentationFile::from_presentation(&p);
            let text = doc.to_json();
            let back = PresentationFile::from_json(&text).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.to_presentation().unwrap(), p);
            assert_eq!(
                PresentationFile::from_presentation(&back.to_presentation().unwrap()).to_json(),
                text
            );
        }
    }

    #[test]
    fn restriction_documents() {
        let src = r#"{"name": "toy", "family": "custom", "rank": 1, "variables": ["u"],
                      "generators": ["u^2", "u^4"], "split_rank": 1}"#;
        let doc = PresentationFile::from_json(src).unwrap();
        let (r, order) = doc.to_restriction().unwrap();
        assert_eq!(r.split_rank(), 1);
        assert!(crate::spaces::cartan_type_check(&r, &order).unwrap());
    }

    #[test]
    fn errors_name_their_location() {
        let bad_json = "{\"name\": \"x\",\n \"family\": }";
        let e = PresentationFile::from_json(bad_json).unwrap_err().to_string();
        assert!(e.contains("line 2"), "{e}");

        let src = r#"{"name": "toy", "family": "custom", "rank": 1, "variables": ["u"], "generators": ["u^2", "v"]}"#;
        let e = PresentationFile::from_json(src)
            .unwrap()
            .to_presentation()
            .unwrap_err()
            .to_string();
        assert!(e.starts_with("generators[1]"), "{e}");

        let src = r#"{"schema_version": 7, "name": "toy", "family": "custom", "rank": 1, "variables": ["u"], "generators": []}"#;
        assert!(matches!(PresentationFile::from_json(src), Err(FileError::Version(7))));

        let src = r#"{"name": "toy", "family": "custom", "rank": 1, "variables": ["u"], "generators": ["u"]}"#;
        let doc = PresentationFile::from_json(src).unwrap();
        assert!(matches!(doc.to_restriction(), Err(FileError::Missing("split_rank"))));
    }
}
