use super::{Coeff, Monomial, MonomialOrder, PolyError, Polynomial, Term};

/// Result of multivariate division: `f = sum(quotients[i] * divisors[i]) + remainder`.
#[derive(Clone, Debug, PartialEq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

fn prepare(f: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Result<Vec<Polynomial>, PolyError> {
    if order.arity() != f.arity() {
        return Err(PolyError::ArityMismatch(f.arity(), order.arity()));
    }
    divisors
        .iter()
        .map(|d| {
            if d.arity() != f.arity() {
                Err(PolyError::ArityMismatch(f.arity(), d.arity()))
            } else if d.is_zero() {
                Err(PolyError::ZeroPolynomial)
            } else {
                d.reorder(order)
            }
        })
        .collect()
}

/// Multivariate division with remainder under `order`.
///
/// At each step the leading term of the running dividend is cancelled by the
/// first divisor (in list order) whose leading monomial divides it; if none
/// does, it moves to the remainder. No remainder monomial is divisible by any
/// divisor's leading monomial.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Result<Division, PolyError> {
    let ds = prepare(f, divisors, order)?;
    let mut quotients: Vec<Vec<(Coeff, Monomial)>> = vec![Vec::new(); ds.len()];
    let remainder = run(f.reorder(order)?, &ds, order, |i, c, m| quotients[i].push((c, m)));
    let quotients = quotients
        .into_iter()
        .map(|q| Polynomial::from_terms(order.clone(), q))
        .collect::<Result<_, _>>()?;
    Ok(Division { quotients, remainder })
}

/// Remainder of [`divide`] without tracking quotients.
pub fn reduce(f: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial, PolyError> {
    let ds = prepare(f, divisors, order)?;
    Ok(run(f.reorder(order)?, &ds, order, |_, _, _| {}))
}

/// Core loop; `divisors` must already be sorted under `order` and nonzero.
pub(crate) fn run(
    mut p: Polynomial,
    divisors: &[Polynomial],
    order: &MonomialOrder,
    mut record: impl FnMut(usize, Coeff, Monomial),
) -> Polynomial {
    let mut rem: Vec<Term> = Vec::new();
    while let Some(lt) = p.leading_term() {
        let hit = divisors.iter().enumerate().find_map(|(i, d)| {
            let lm = d.leading_monomial().expect("divisor is nonzero");
            lt.mono.checked_div(lm).map(|m| (i, m))
        });
        match hit {
            Some((i, m)) => {
                let d = &divisors[i];
                let c = &lt.coeff / d.leading_coeff().expect("divisor is nonzero");
                p = p.add_scaled(&-&c, &m, d);
                record(i, c, m);
            }
            None => {
                let mut terms = p.into_terms();
                rem.push(terms.remove(0));
                p = Polynomial::from_sorted(order.clone(), terms);
            }
        }
    }
    Polynomial::from_sorted(order.clone(), rem)
}

/// S-polynomial `(L / LT(f)) f - (L / LT(g)) g` with `L = lcm(LM(f), LM(g))`.
pub fn spoly(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Result<Polynomial, PolyError> {
    if f.arity() != g.arity() {
        return Err(PolyError::ArityMismatch(f.arity(), g.arity()));
    }
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let f = f.reorder(order)?;
    let g = g.reorder(order)?;
    Ok(spoly_sorted(&f, &g))
}

pub(crate) fn spoly_sorted(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (tf, tg) = (f.leading_term().expect("nonzero"), g.leading_term().expect("nonzero"));
    let l = tf.mono.lcm(&tg.mono);
    let mf = l.checked_div(&tf.mono).expect("lcm is a multiple");
    let mg = l.checked_div(&tg.mono).expect("lcm is a multiple");
    let a = Polynomial::zero_in(f.order().clone()).add_scaled(&tf.coeff.recip(), &mf, f);
    a.add_scaled(&-tg.coeff.recip(), &mg, g)
}
