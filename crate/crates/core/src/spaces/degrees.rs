use serde::{Deserialize, Serialize};

use super::{flag_presentation, g2_flag_presentation, Family, SpaceError, SpacePresentation};
use crate::groebner::buchberger;
use crate::poly::{MonomialOrder, PolyError, Polynomial};
use crate::quotient::PoincarePolynomial;

/// Invariant degrees of `G` and `H`, and the odd degrees of the exterior
/// generators. An exterior generator of degree `d` comes from a group
/// invariant of degree `(d + 1) / 2` that is not matched with `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantDegrees {
    group: Vec<u32>,
    subgroup: Vec<u32>,
    exterior: Vec<u32>,
}

fn remove_submultiset(from: &[u32], sub: &[u32]) -> Option<Vec<u32>> {
    let mut rest = from.to_vec();
    for d in sub {
        let i = rest.iter().position(|x| x == d)?;
        rest.remove(i);
    }
    Some(rest)
}

impl InvariantDegrees {
    pub fn new(group: Vec<u32>, subgroup: Vec<u32>, exterior: Vec<u32>) -> Result<Self, SpaceError> {
        let d = InvariantDegrees {
            group,
            subgroup,
            exterior,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn group(&self) -> &[u32] {
        &self.group
    }

    pub fn subgroup(&self) -> &[u32] {
        &self.subgroup
    }

    pub fn exterior_degrees(&self) -> &[u32] {
        &self.exterior
    }

    pub fn exterior_sources(&self) -> Vec<u32> {
        self.exterior.iter().map(|d| d.div_ceil(2)).collect()
    }

    /// Group degrees paired with the subgroup.
    pub fn matched_group(&self) -> Vec<u32> {
        remove_submultiset(&self.group, &self.exterior_sources()).expect("validated")
    }

    pub(crate) fn validate(&self) -> Result<(), SpaceError> {
        let bad = |m: String| Err(SpaceError::InvalidDegrees(m));
        if self.group.contains(&0) || self.subgroup.contains(&0) {
            return bad("degrees must be positive".into());
        }
        if let Some(d) = self.exterior.iter().find(|d| *d % 2 == 0) {
            return bad(format!("exterior degree {d} is even"));
        }
        let Some(matched) = remove_submultiset(&self.group, &self.exterior_sources()) else {
            return bad(format!(
                "exterior degrees {:?} do not come from group degrees {:?}",
                self.exterior, self.group
            ));
        };
        if matched.len() != self.subgroup.len() {
            return bad(format!(
                "{} matched group degrees against {} subgroup degrees",
                matched.len(),
                self.subgroup.len()
            ));
        }
        if matched.iter().sum::<u32>() < self.subgroup.iter().sum::<u32>() {
            return bad("subgroup degrees exceed group degrees".into());
        }
        Ok(())
    }

    /// `sum (2k_i - 2l_i) + sum of exterior degrees`.
    pub fn manifold_dimension(&self) -> u32 {
        2 * self.matched_group().iter().sum::<u32>() - 2 * self.subgroup.iter().sum::<u32>()
            + self.exterior.iter().sum::<u32>()
    }

    pub fn poincare(&self) -> Result<PoincarePolynomial, SpaceError> {
        poincare_from_invariant_degrees(&self.group, &self.subgroup, &self.exterior_sources())
    }
}

fn mul_binomial(p: &[i128], d: usize, sign: i128) -> Vec<i128> {
    // p * (1 + sign * t^d)
    let mut out = vec![0i128; p.len() + d];
    for (i, c) in p.iter().enumerate() {
        out[i] += c;
        out[i + d] += sign * c;
    }
    out
}

/// Exact quotient `p / (1 - t^d)`, if it is a polynomial.
fn div_one_minus(p: &[i128], d: usize) -> Option<Vec<i128>> {
    if p.len() <= d {
        return None;
    }
    let n = p.len() - d;
    let mut q = vec![0i128; n];
    for i in 0..n {
        q[i] = p[i] + if i >= d { q[i - d] } else { 0 };
    }
    (mul_binomial(&q, d, -1) == p).then_some(q)
}

/// `prod (1 - t^{2k}) / prod (1 - t^{2l}) * prod (1 + t^{2k'-1})`, where `k`
/// runs over `group_degrees` minus `exterior_source`, `l` over
/// `subgroup_degrees`, and `k'` over `exterior_source`.
///
/// The division is exact multiset division; a non-polynomial or
/// negative-coefficient result is an error.
pub fn poincare_from_invariant_degrees(
    group_degrees: &[u32],
    subgroup_degrees: &[u32],
    exterior_source: &[u32],
) -> Result<PoincarePolynomial, SpaceError> {
    if subgroup_degrees.len() > group_degrees.len() {
        return Err(SpaceError::InvalidDegrees(format!(
            "{} subgroup degrees exceed {} group degrees",
            subgroup_degrees.len(),
            group_degrees.len()
        )));
    }
    let matched = remove_submultiset(group_degrees, exterior_source)
        .ok_or_else(|| SpaceError::InvalidDegrees(format!("{exterior_source:?} is not part of {group_degrees:?}")))?;
    if matched.len() != subgroup_degrees.len() {
        return Err(SpaceError::InvalidDegrees(format!(
            "{} matched group degrees against {} subgroup degrees",
            matched.len(),
            subgroup_degrees.len()
        )));
    }
    let mut p = vec![1i128];
    for &k in &matched {
        p = mul_binomial(&p, 2 * k as usize, -1);
    }
    for &l in subgroup_degrees {
        p = div_one_minus(&p, 2 * l as usize).ok_or_else(|| {
            SpaceError::NonPolynomialSeries(format!("(1 - t^{}) does not divide the numerator", 2 * l))
        })?;
    }
    for &k in exterior_source {
        p = mul_binomial(&p, 2 * k as usize - 1, 1);
    }
    let coeffs = p
        .iter()
        .map(|&c| u64::try_from(c))
        .collect::<Result<Vec<u64>, _>>()
        .map_err(|_| SpaceError::NonPolynomialSeries(format!("negative coefficient in {p:?}")))?;
    Ok(PoincarePolynomial::new(coeffs))
}

/// Restrictions of the group invariants to the subgroup; the first
/// `split_rank` images generate the polynomial part.
#[derive(Clone, Debug, PartialEq)]
pub struct RestrictionData {
    images: Vec<Polynomial>,
    split_rank: usize,
}

impl RestrictionData {
    pub fn new(images: Vec<Polynomial>, split_rank: usize) -> Result<Self, SpaceError> {
        if split_rank == 0 || split_rank > images.len() {
            return Err(SpaceError::InvalidSplitRank {
                split_rank,
                images: images.len(),
            });
        }
        let arity = images[0].arity();
        if let Some(g) = images.iter().find(|g| g.arity() != arity) {
            return Err(PolyError::ArityMismatch(arity, g.arity()).into());
        }
        Ok(RestrictionData { images, split_rank })
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn split_rank(&self) -> usize {
        self.split_rank
    }

    pub fn arity(&self) -> usize {
        self.images[0].arity()
    }
}

/// Whether every image past the split rank lies in the ideal of the first
/// `split_rank` images.
pub fn cartan_type_check(r: &RestrictionData, order: &MonomialOrder) -> Result<bool, SpaceError> {
    let gb = buchberger(&r.images[..r.split_rank], order)?;
    for f in &r.images[r.split_rank..] {
        if !gb.contains(f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Polynomial part tensored with an exterior algebra on odd generators.
#[derive(Clone, Debug, PartialEq)]
pub struct CartanModel {
    pub name: String,
    pub polynomial_part: SpacePresentation,
    pub exterior_degrees: Vec<u32>,
    /// Degree data of the pair `(G, H)` this model belongs to.
    pub degrees: InvariantDegrees,
}

impl CartanModel {
    pub fn new(
        name: impl Into<String>,
        polynomial_part: SpacePresentation,
        exterior_degrees: Vec<u32>,
        degrees: InvariantDegrees,
    ) -> Result<Self, SpaceError> {
        if let Some(d) = exterior_degrees.iter().find(|d| *d % 2 == 0) {
            return Err(SpaceError::InvalidDegrees(format!("exterior degree {d} is even")));
        }
        Ok(CartanModel {
            name: name.into(),
            polynomial_part,
            exterior_degrees,
            degrees,
        })
    }

    pub fn manifold_dimension(&self) -> u32 {
        self.degrees.manifold_dimension()
    }

    /// `SU(2n+1)/T^n`: polynomial part of type B, exterior `z_3, z_5, ..., z_{2n+1}`.
    pub fn su_odd_torus(n: usize) -> Result<Self, SpaceError> {
        if n < 1 {
            return Err(SpaceError::InvalidRank {
                family: Family::B,
                rank: n,
            });
        }
        let n32 = n as u32;
        let ext: Vec<u32> = (1..=n32).map(|j| 2 * (2 * j + 1) - 1).collect();
        let degrees = InvariantDegrees::new((2..=2 * n32 + 1).collect(), vec![1; n], ext.clone())?;
        Self::new(
            format!("SU({})/T^{n}", 2 * n + 1),
            flag_presentation(Family::B, n)?,
            ext,
            degrees,
        )
    }

    /// `SU(2n)/T^n` for `n >= 3`: polynomial part of type C, exterior `z_3, ..., z_{2n-1}`.
    pub fn su_even_torus(n: usize) -> Result<Self, SpaceError> {
        if n < 3 {
            return Err(SpaceError::InvalidRank {
                family: Family::C,
                rank: n,
            });
        }
        let n32 = n as u32;
        let ext: Vec<u32> = (1..n32).map(|j| 2 * (2 * j + 1) - 1).collect();
        let degrees = InvariantDegrees::new((2..=2 * n32).collect(), vec![1; n], ext.clone())?;
        Self::new(
            format!("SU({})/T^{n}", 2 * n),
            flag_presentation(Family::C, n)?,
            ext,
            degrees,
        )
    }

    /// `Spin(2n+2)/T^n` for `n >= 2`: polynomial part of type B, exterior
    /// generator from the Pfaffian.
    pub fn spin_even_torus(n: usize) -> Result<Self, SpaceError> {
        if n < 2 {
            return Err(SpaceError::InvalidRank {
                family: Family::B,
                rank: n,
            });
        }
        let n32 = n as u32;
        let mut group: Vec<u32> = (1..=n32).map(|j| 2 * j).collect();
        group.push(n32 + 1);
        let ext = vec![2 * n32 + 1];
        let degrees = InvariantDegrees::new(group, vec![1; n], ext.clone())?;
        Self::new(
            format!("Spin({})/T^{n}", 2 * n + 2),
            flag_presentation(Family::B, n)?,
            ext,
            degrees,
        )
    }

    /// `Spin(8)/T^2`: polynomial part that of `G2/T^2`, exterior part that of `S^7 x S^7`.
    pub fn spin8_torus2() -> Self {
        let degrees = InvariantDegrees::new(vec![2, 4, 4, 6], vec![1, 1], vec![7, 7]).expect("valid literal data");
        Self::new("Spin(8)/T^2", g2_flag_presentation(), vec![7, 7], degrees).expect("valid literal data")
    }
}

/// Series of the polynomial part times `prod (1 + t^d)` over exterior degrees.
pub fn cartan_model_poincare(m: &CartanModel) -> Result<PoincarePolynomial, SpaceError> {
    let mut p = m.polynomial_part.quotient()?.poincare_polynomial()?;
    for &d in &m.exterior_degrees {
        p = p.mul(&PoincarePolynomial::sphere(d));
    }
    Ok(p)
}

/// `total == base * fiber` exactly.
pub fn fibration_factorization_check(
    total: &PoincarePolynomial,
    base: &PoincarePolynomial,
    fiber: &PoincarePolynomial,
) -> bool {
    *total == base.mul(fiber)
}
