//! Text form of polynomials.
//!
//! The printer emits the canonical form (`x1^2 + x1*x2 + x2^2`): terms in
//! descending order, `*` between factors, `^` for powers, rational
//! coefficients as `p/q`. The parser accepts that form and, more generally,
//! sums, products, integer powers, parentheses, and division by nonzero
//! constants.

use num_bigint::BigInt;

use super::{default_names, Coeff, Monomial, MonomialOrder, PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '/' => out.push((start, Tok::Slash)),
            '^' => out.push((start, Tok::Caret)),
            '(' => out.push((start, Tok::LParen)),
            ')' => out.push((start, Tok::RParen)),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = src[start..i].parse().expect("ascii digits");
                out.push((start, Tok::Num(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
                continue;
            }
            other => {
                return Err(PolyError::Parse {
                    pos: start,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    names: &'a [String],
    order: MonomialOrder,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.offset();
                    let d = self.factor()?;
                    if !d.is_unit() {
                        return Err(PolyError::Parse {
                            pos: at,
                            msg: "division only by a nonzero constant".into(),
                        });
                    }
                    let c = d.leading_coeff().expect("unit is nonzero").recip();
                    acc = acc.scale(&c);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-&self.factor()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.factor()
            }
            _ => {
                let base = self.primary()?;
                if let Some(Tok::Caret) = self.peek() {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Num(n)) => {
                            self.pos += 1;
                            let e: u32 = n.try_into().or_else(|_| self.err("exponent too large"))?;
                            Ok(base.pow(e))
                        }
                        _ => self.err("expected a non-negative integer exponent"),
                    }
                } else {
                    Ok(base)
                }
            }
        }
    }

    fn primary(&mut self) -> Result<Polynomial, PolyError> {
        let arity = self.names.len();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Polynomial::constant(arity, Coeff::from_integer(n)).into_order(&self.order))
            }
            Some(Tok::Ident(name)) => match self.names.iter().position(|v| *v == name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Polynomial::var(arity, i).into_order(&self.order))
                }
                None => self.err(format!("unknown variable '{name}'")),
            },
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected ')'"),
                }
            }
            Some(_) => self.err("unexpected token"),
            None => self.err("unexpected end of input"),
        }
    }
}

impl Polynomial {
    /// Parses with variables named `x1..x{arity}`, sorted under lex.
    pub fn parse(src: &str, arity: usize) -> Result<Polynomial, PolyError> {
        Self::parse_with(src, &default_names(arity), &MonomialOrder::lex(arity))
    }

    pub fn parse_with(src: &str, names: &[String], order: &MonomialOrder) -> Result<Polynomial, PolyError> {
        if order.arity() != names.len() {
            return Err(PolyError::ArityMismatch(names.len(), order.arity()));
        }
        let toks = tokenize(src)?;
        if toks.is_empty() {
            return Err(PolyError::Parse {
                pos: 0,
                msg: "empty polynomial".into(),
            });
        }
        let mut p = Parser {
            toks,
            pos: 0,
            end: src.len(),
            names,
            order: order.clone(),
        };
        let f = p.expr()?;
        if p.pos != p.toks.len() {
            return p.err("trailing input");
        }
        Ok(f)
    }
}

/// Parses a monomial such as `x1*x2^3` or `1`.
pub fn parse_monomial(src: &str, names: &[String]) -> Result<Monomial, PolyError> {
    let f = Polynomial::parse_with(src, names, &MonomialOrder::lex(names.len()))?;
    match f.terms() {
        [t] if t.coeff == Coeff::from_integer(1.into()) => Ok(t.mono.clone()),
        _ => Err(PolyError::Parse {
            pos: 0,
            msg: format!("'{src}' is not a monomial"),
        }),
    }
}
