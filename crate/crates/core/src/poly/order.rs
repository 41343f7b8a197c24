use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Monomial, PolyError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    Grlex,
    Grevlex,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Lex => "lex",
            OrderKind::Grlex => "grlex",
            OrderKind::Grevlex => "grevlex",
        })
    }
}

impl FromStr for OrderKind {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "grlex" | "deglex" => Ok(OrderKind::Grlex),
            "grevlex" | "degrevlex" => Ok(OrderKind::Grevlex),
            other => Err(PolyError::UnknownOrder(other.to_string())),
        }
    }
}

/// A monomial order together with a variable precedence.
///
/// `precedence[0]` is the index of the largest variable, `precedence[1]` the
/// next one, and so on. The identity precedence gives `x1 > x2 > ... > xn`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Arc<[usize]>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, arity: usize) -> Self {
        MonomialOrder {
            kind,
            precedence: (0..arity).collect(),
        }
    }

    pub fn lex(arity: usize) -> Self {
        Self::new(OrderKind::Lex, arity)
    }

    pub fn grlex(arity: usize) -> Self {
        Self::new(OrderKind::Grlex, arity)
    }

    pub fn grevlex(arity: usize) -> Self {
        Self::new(OrderKind::Grevlex, arity)
    }

    pub fn with_precedence(kind: OrderKind, precedence: Vec<usize>) -> Result<Self, PolyError> {
        let mut seen = vec![false; precedence.len()];
        for &v in &precedence {
            if v >= precedence.len() || seen[v] {
                return Err(PolyError::InvalidPermutation(precedence));
            }
            seen[v] = true;
        }
        Ok(MonomialOrder {
            kind,
            precedence: precedence.into(),
        })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn arity(&self) -> usize {
        self.precedence.len()
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn is_identity_precedence(&self) -> bool {
        self.precedence.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `Greater` means `a` is the larger monomial.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self.kind {
            OrderKind::Lex => self.lex_cmp(ea, eb),
            OrderKind::Grlex => a.degree().cmp(&b.degree()).then_with(|| self.lex_cmp(ea, eb)),
            OrderKind::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                for &v in self.precedence.iter().rev() {
                    match ea[v].cmp(&eb[v]) {
                        Ordering::Equal => continue,
                        ord => return ord.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }

    fn lex_cmp(&self, ea: &[u32], eb: &[u32]) -> Ordering {
        for &v in self.precedence.iter() {
            match ea[v].cmp(&eb[v]) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if !self.is_identity_precedence() {
            let p: Vec<String> = self.precedence.iter().map(|v| format!("x{}", v + 1)).collect();
            write!(f, " ({})", p.join(" > "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_compares_first_variable_first() {
        let o = MonomialOrder::lex(3);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 2, 0]), &m(&[1, 1, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 2, 3]), &m(&[1, 2, 3])), Ordering::Equal);
    }

    #[test]
    fn graded_orders() {
        let gl = MonomialOrder::grlex(3);
        let grl = MonomialOrder::grevlex(3);
        // x1*x3^2 vs x2^3: grlex says x1 x3^2 bigger, grevlex also (smaller x3 loses)
        assert_eq!(gl.cmp(&m(&[1, 0, 2]), &m(&[0, 3, 0])), Ordering::Greater);
        assert_eq!(grl.cmp(&m(&[1, 0, 2]), &m(&[0, 3, 0])), Ordering::Less);
        // x1 x2 x3 vs x1^2 x3 : grevlex compares x3 first, tie, then x2
        assert_eq!(grl.cmp(&m(&[1, 1, 1]), &m(&[2, 0, 1])), Ordering::Less);
        assert_eq!(gl.cmp(&m(&[0, 0, 1]), &m(&[1, 1, 0])), Ordering::Less);
    }

    #[test]
    fn precedence_permutes_variables() {
        let o = MonomialOrder::with_precedence(OrderKind::Lex, vec![1, 0]).unwrap();
        assert_eq!(o.cmp(&m(&[0, 1]), &m(&[5, 0])), Ordering::Greater);
        assert!(MonomialOrder::with_precedence(OrderKind::Lex, vec![0, 0]).is_err());
        assert!(MonomialOrder::with_precedence(OrderKind::Lex, vec![0, 2]).is_err());
    }
}
