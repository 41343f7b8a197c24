use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{default_names, Monomial, MonomialOrder, PolyError};

pub type Coeff = BigRational;

pub fn rat(n: i64) -> Coeff {
    BigRational::from_integer(n.into())
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coeff,
    pub mono: Monomial,
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*{}", self.coeff, self.mono)
    }
}

/// Sparse polynomial over the rationals.
///
/// Terms are kept strictly descending under `order`, with no zero
/// coefficients; the zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial {
    arity: usize,
    order: MonomialOrder,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(arity: usize) -> Self {
        Self::zero_in(MonomialOrder::lex(arity))
    }

    pub fn zero_in(order: MonomialOrder) -> Self {
        Polynomial {
            arity: order.arity(),
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(arity: usize, c: Coeff) -> Self {
        Self::from_terms(MonomialOrder::lex(arity), [(c, Monomial::one(arity))]).expect("arity is consistent")
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Coeff::one())
    }

    /// The variable `x_{index+1}` under lex.
    pub fn var(arity: usize, index: usize) -> Self {
        Self::monomial(Coeff::one(), Monomial::var_power(arity, index, 1))
    }

    pub fn monomial(coeff: Coeff, mono: Monomial) -> Self {
        let order = MonomialOrder::lex(mono.arity());
        Self::from_terms(order, [(coeff, mono)]).expect("arity is consistent")
    }

    /// Builds a normalized polynomial from arbitrary terms: like monomials are
    /// merged, zero coefficients dropped, and the result sorted under `order`.
    pub fn from_terms<I>(order: MonomialOrder, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Coeff, Monomial)>,
    {
        let arity = order.arity();
        let mut raw: Vec<Term> = Vec::new();
        for (coeff, mono) in terms {
            if mono.arity() != arity {
                return Err(PolyError::ArityMismatch(arity, mono.arity()));
            }
            raw.push(Term { coeff, mono });
        }
        raw.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff += t.coeff,
                _ => terms.push(t),
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        Ok(Polynomial { arity, order, terms })
    }

    /// Assumes `terms` is already strictly descending under `order` with nonzero coefficients.
    pub(crate) fn from_sorted(order: MonomialOrder, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| order.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial {
            arity: order.arity(),
            order,
            terms,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn coeff_of(&self, mono: &Monomial) -> Coeff {
        self.terms
            .binary_search_by(|t| self.order.cmp(mono, &t.mono))
            .map(|i| self.terms[i].coeff.clone())
            .unwrap_or_else(|_| Coeff::zero())
    }

    /// Maximum total degree; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.mono.degree();
                self.terms.iter().all(|s| s.mono.degree() == d)
            }
        }
    }

    /// Same polynomial, terms re-sorted under `order`.
    pub fn reorder(&self, order: &MonomialOrder) -> Result<Polynomial, PolyError> {
        if order.arity() != self.arity {
            return Err(PolyError::ArityMismatch(self.arity, order.arity()));
        }
        if *order == self.order {
            return Ok(self.clone());
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Ok(Polynomial::from_sorted(order.clone(), terms))
    }

    pub(crate) fn into_order(self, order: &MonomialOrder) -> Polynomial {
        if *order == self.order {
            return self;
        }
        let mut terms = self.terms;
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial::from_sorted(order.clone(), terms)
    }

    fn check_arity(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.arity != other.arity {
            Err(PolyError::ArityMismatch(self.arity, other.arity))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_arity(other)?;
        Ok(self.add_scaled(&Coeff::one(), &Monomial::one(self.arity), other))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_arity(other)?;
        Ok(self.add_scaled(&-Coeff::one(), &Monomial::one(self.arity), other))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_arity(other)?;
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero_in(self.order.clone());
        for t in &small.terms {
            acc = acc.add_scaled(&t.coeff, &t.mono, large);
        }
        Ok(acc)
    }

    /// `self + c * m * g`, merged in `self`'s order.
    pub fn add_scaled(&self, c: &Coeff, m: &Monomial, g: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.arity, g.arity);
        if c.is_zero() || g.is_zero() {
            return self.clone();
        }
        let scaled: Vec<Term> = g
            .terms
            .iter()
            .map(|t| Term {
                coeff: c * &t.coeff,
                mono: &t.mono * m,
            })
            .collect();
        let scaled = if g.order == self.order {
            scaled
        } else {
            let mut s = scaled;
            s.sort_by(|a, b| self.order.cmp(&b.mono, &a.mono));
            s
        };
        Polynomial::from_sorted(self.order.clone(), merge(&self.order, &self.terms, scaled))
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero_in(self.order.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: &t.coeff * c,
                mono: t.mono.clone(),
            })
            .collect();
        Polynomial::from_sorted(self.order.clone(), terms)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.clone(),
                mono: &t.mono * m,
            })
            .collect();
        Polynomial::from_sorted(self.order.clone(), terms)
    }

    /// Scaled so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.arity).into_order(&self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces `x_{index+1}` by `value` everywhere.
    pub fn substitute(&self, index: usize, value: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_arity(value)?;
        let max_pow = self.terms.iter().map(|t| t.mono.exponent(index)).max().unwrap_or(0);
        let mut powers = vec![Polynomial::one(self.arity).into_order(&self.order)];
        for k in 1..=max_pow as usize {
            let next = &powers[k - 1] * value;
            powers.push(next);
        }
        let mut acc = Polynomial::zero_in(self.order.clone());
        for t in &self.terms {
            let e = t.mono.exponent(index);
            let mut rest = t.mono.exponents().to_vec();
            rest[index] = 0;
            acc = acc.add_scaled(&t.coeff, &Monomial::new(rest), &powers[e as usize]);
        }
        Ok(acc)
    }

    /// Re-embeds into a ring of `new_arity` variables, sending variable `i` to
    /// `mapping[i]`. The result is sorted under lex of the new arity.
    pub fn embed(&self, new_arity: usize, mapping: &[usize]) -> Result<Polynomial, PolyError> {
        if mapping.len() != self.arity || mapping.iter().any(|&m| m >= new_arity) {
            return Err(PolyError::InvalidPermutation(mapping.to_vec()));
        }
        let terms = self.terms.iter().map(|t| {
            let mut exps = vec![0; new_arity];
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                exps[mapping[i]] += e;
            }
            (t.coeff.clone(), Monomial::new(exps))
        });
        Polynomial::from_terms(MonomialOrder::lex(new_arity), terms)
    }

    /// Drops variable `index`, which must not occur.
    pub fn remove_variable(&self, index: usize) -> Result<Polynomial, PolyError> {
        if index >= self.arity {
            return Err(PolyError::VariableOutOfRange(index, self.arity));
        }
        if self.terms.iter().any(|t| t.mono.exponent(index) != 0) {
            return Err(PolyError::VariableOccurs(index));
        }
        let terms = self.terms.iter().map(|t| {
            let mut exps = t.mono.exponents().to_vec();
            exps.remove(index);
            (t.coeff.clone(), Monomial::new(exps))
        });
        Polynomial::from_terms(MonomialOrder::lex(self.arity - 1), terms)
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        let mut s = String::new();
        if self.terms.is_empty() {
            return "0".to_string();
        }
        for (i, t) in self.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            let abs = t.coeff.abs();
            if i == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            if t.mono.is_one() {
                s.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    s.push_str(&abs.to_string());
                    s.push('*');
                }
                t.mono.write_with_names(&mut s, names).expect("writing to a String");
            }
        }
        s
    }
}

/// Merge of two descending term lists, summing coefficients of equal monomials.
fn merge(order: &MonomialOrder, a: &[Term], b: Vec<Term>) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ia = a.iter().peekable();
    let mut ib = b.into_iter().peekable();
    loop {
        let ord = match (ia.peek(), ib.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some(x), Some(y)) => order.cmp(&x.mono, &y.mono),
        };
        match ord {
            Ordering::Greater => out.push(ia.next().expect("peeked").clone()),
            Ordering::Less => out.push(ib.next().expect("peeked")),
            Ordering::Equal => {
                let x = ia.next().expect("peeked");
                let mut y = ib.next().expect("peeked");
                y.coeff += &x.coeff;
                if !y.coeff.is_zero() {
                    out.push(y);
                }
            }
        }
    }
    out
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.arity != other.arity || self.terms.len() != other.terms.len() {
            return false;
        }
        if self.order == other.order {
            return self.terms == other.terms;
        }
        match other.reorder(&self.order) {
            Ok(o) => self.terms == o.terms,
            Err(_) => false,
        }
    }
}

impl Eq for Polynomial {}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&default_names(self.arity)))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// Operator forms panic on arity mismatch; use the `try_*` methods for fallible use.
impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial arity mismatch")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial arity mismatch")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial arity mismatch")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Coeff::one())
    }
}

impl std::ops::Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl std::ops::Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl std::ops::Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}
