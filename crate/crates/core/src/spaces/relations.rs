use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{Family, SpaceError, SpacePresentation};
use crate::poly::{Coeff, Monomial, MonomialOrder, Polynomial};
use crate::symfun::{monomial_sum, monomial_sum_of_squares, top_product, VariableSubset};

/// The explicit relation families of the classical flag manifolds, plus the
/// two stated relations of `G2/T^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationKind {
    /// Type A: complete homogeneous sums in a suffix of the variables.
    Rel,
    /// Types B/C: complete homogeneous sums in squares.
    Rel1,
    /// Type D: same shape as `Rel1`.
    Rel2,
    /// Type D: odd-power sums.
    Rel3,
    G2,
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationKind::Rel => "rel",
            RelationKind::Rel1 => "rel1",
            RelationKind::Rel2 => "rel2",
            RelationKind::Rel3 => "rel3",
            RelationKind::G2 => "g2rel",
        })
    }
}

impl RelationKind {
    fn applies_to(self, family: Family) -> bool {
        matches!(
            (self, family),
            (RelationKind::Rel, Family::A)
                | (RelationKind::Rel1, Family::B | Family::C)
                | (RelationKind::Rel2 | RelationKind::Rel3, Family::D)
                | (RelationKind::G2, Family::G2)
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub kind: RelationKind,
    /// The summation parameter `p`, `1..=n`.
    pub index: usize,
    pub poly: Polynomial,
}

impl Relation {
    pub fn id(&self) -> String {
        format!("{}.p{}", self.kind, self.index)
    }
}

/// All compositions of `total` into `parts` parts, each at least `min`.
fn compositions(total: usize, parts: usize, min: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, parts: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in min..=rest {
            if rest - v < min * (parts - 1) {
                break;
            }
            cur.push(v);
            go(rest - v, parts - 1, min, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, min, &mut Vec::new(), &mut out);
    out
}

/// The displayed sum for index `p`: over `i_1 + ... + i_p = N`, the product
/// of powers of `x_{n-p+1}, ..., x_n`, with `N` and the exponent map chosen
/// by `kind`.
pub fn relation_family(p: &SpacePresentation, index: usize, kind: RelationKind) -> Result<Polynomial, SpaceError> {
    if !kind.applies_to(p.family) || kind == RelationKind::G2 {
        return Err(SpaceError::IncompatibleKind { kind, family: p.family });
    }
    let n = p.rank;
    if index == 0 || index > n {
        return Err(SpaceError::IndexOutOfRange { index, rank: n });
    }
    let (total, min, exponent): (usize, usize, fn(usize) -> u32) = match kind {
        RelationKind::Rel => (n - index + 2, 0, |i| i as u32),
        RelationKind::Rel1 | RelationKind::Rel2 => (n - index + 1, 0, |i| 2 * i as u32),
        RelationKind::Rel3 => (n, 1, |i| 2 * i as u32 - 1),
        RelationKind::G2 => unreachable!(),
    };
    let first = n - index;
    let monos = compositions(total, index, min).into_iter().map(|parts| {
        let mut e = vec![0; n];
        for (slot, &i) in parts.iter().enumerate() {
            e[first + slot] = exponent(i);
        }
        (Coeff::one(), Monomial::new(e))
    });
    Ok(Polynomial::from_terms(MonomialOrder::lex(n), monos)?.into_order(&p.order))
}

/// The same relation built from symmetric-function identities instead of the
/// displayed sum: `s_{n-p+2}` of the suffix (rel), `s_{n-p+1}` of squares
/// (rel1, rel2), and the suffix product times `s_{n-p}` of squares (rel3).
pub fn relation_formula(n: usize, index: usize, kind: RelationKind) -> Result<Polynomial, SpaceError> {
    if index == 0 || index > n {
        return Err(SpaceError::IndexOutOfRange { index, rank: n });
    }
    let vars = VariableSubset::range(n, n - index..n).expect("suffix range is valid");
    Ok(match kind {
        RelationKind::Rel => monomial_sum(n - index + 2, &vars),
        RelationKind::Rel1 | RelationKind::Rel2 => monomial_sum_of_squares(n - index + 1, &vars),
        RelationKind::Rel3 => {
            &top_product(&vars).expect("nonempty suffix") * &monomial_sum_of_squares(n - index, &vars)
        }
        RelationKind::G2 => {
            return Err(SpaceError::IncompatibleKind {
                kind,
                family: Family::Custom,
            })
        }
    })
}

/// The stated relations of `G2/T^2`.
pub const G2_RELATION_DISPLAYS: [&str; 3] = ["x^2 + 3*x*y + 3*y^2", "x^6", "y^6"];

/// [`G2_RELATION_DISPLAYS`] in the variables and order of `p`.
pub fn g2_relations(p: &SpacePresentation) -> Vec<Relation> {
    G2_RELATION_DISPLAYS
        .iter()
        .enumerate()
        .map(|(i, s)| Relation {
            kind: RelationKind::G2,
            index: i + 1,
            poly: Polynomial::parse_with(s, &["x".to_string(), "y".to_string()], &p.order).expect("literal parses"),
        })
        .collect()
}

/// Every relation stated for the presentation's family: rel (A), rel1 (B, C),
/// rel2 followed by rel3 (D), or the G2 relations.
pub fn relation_set(p: &SpacePresentation) -> Result<Vec<Relation>, SpaceError> {
    let kinds: &[RelationKind] = match p.family {
        Family::A => &[RelationKind::Rel],
        Family::B | Family::C => &[RelationKind::Rel1],
        Family::D => &[RelationKind::Rel2, RelationKind::Rel3],
        Family::G2 => return Ok(g2_relations(p)),
        Family::Custom => return Ok(Vec::new()),
    };
    let mut out = Vec::new();
    for &kind in kinds {
        for index in 1..=p.rank {
            out.push(Relation {
                kind,
                index,
                poly: relation_family(p, index, kind)?,
            });
        }
    }
    Ok(out)
}

/// Monomials admitted by the presentation's basis pattern, sorted like
/// standard monomials (degree, then ascending in the presentation order).
pub fn expected_basis(p: &SpacePresentation) -> Result<Vec<Monomial>, SpaceError> {
    let pattern = p
        .pattern
        .as_ref()
        .ok_or_else(|| SpaceError::NoBasisPattern(p.name.clone()))?;
    let n = pattern.bounds.len();
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    loop {
        if pattern.admits(&exps) {
            out.push(Monomial::new(exps.clone()));
        }
        // odometer over the bounding box
        let mut i = 0;
        loop {
            if i == n {
                out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| p.order.cmp(a, b)));
                return Ok(out);
            }
            if exps[i] < pattern.bounds[i] {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}
