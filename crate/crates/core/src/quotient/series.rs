use std::fmt;

use serde::{Deserialize, Serialize};

use crate::poly::{MonomialOrder, Polynomial};

/// Graded dimension series `sum_d b_d t^d` with non-negative integer
/// coefficients, indexed by cohomological degree. Trailing zeros are trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PoincarePolynomial {
    coeffs: Vec<u64>,
}

impl PoincarePolynomial {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PoincarePolynomial { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![1])
    }

    /// `1 + t^d`.
    pub fn sphere(d: u32) -> Self {
        let mut c = vec![0; d as usize + 1];
        c[0] += 1;
        c[d as usize] += 1;
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> u64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Top degree; `None` for the zero series.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `t = 1`.
    pub fn total_dimension(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// `b_d = b_{top-d}` for all `d`.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn mul(&self, other: &PoincarePolynomial) -> PoincarePolynomial {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Parses `1 + 2t^2 + t^4` (a `*` before `t` is optional).
    pub fn parse(src: &str) -> Result<PoincarePolynomial, String> {
        let mut normalized = String::with_capacity(src.len() + 8);
        let mut prev_digit = false;
        for c in src.chars() {
            if c == 't' && prev_digit {
                normalized.push('*');
            }
            prev_digit = c.is_ascii_digit();
            normalized.push(c);
        }
        let names = vec!["t".to_string()];
        let f = Polynomial::parse_with(&normalized, &names, &MonomialOrder::lex(1)).map_err(|e| e.to_string())?;
        let deg = f.total_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![0u64; deg + 1];
        for t in f.terms() {
            if !t.coeff.is_integer() {
                return Err(format!("non-integer coefficient {}", t.coeff));
            }
            let c: u64 = t
                .coeff
                .to_integer()
                .try_into()
                .map_err(|_| format!("coefficient {} is not a non-negative integer", t.coeff))?;
            coeffs[t.mono.exponent(0) as usize] = c;
        }
        Ok(Self::new(coeffs))
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (d, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("t")?,
                (1, c) => write!(f, "{c}t")?,
                (d, 1) => write!(f, "t^{d}")?,
                (d, c) => write!(f, "{c}t^{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
