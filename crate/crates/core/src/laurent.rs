//! Sparse Laurent polynomials with exact rational coefficients.
//!
//! Terms are kept in a map from exponent vector to coefficient; zero
//! coefficients are never stored, so structural equality is semantic
//! equality. Evaluation is exact and rejects zero values raised to negative
//! exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exponent::{ExponentVector, Var};
use crate::rational::{pow_rational, rat, Rational};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<ExponentVector, Rational>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(ExponentVector::new(), rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(ExponentVector::new(), c)
    }

    pub fn monomial(ev: ExponentVector, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(ev, coeff);
        }
        Self { terms }
    }

    pub fn variable(v: Var) -> Self {
        Self::monomial(ExponentVector::of(v, 1), rat(1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, ev: &ExponentVector) -> Rational {
        self.terms.get(ev).cloned().unwrap_or_else(|| rat(0))
    }

    fn insert_term(&mut self, ev: ExponentVector, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(ev) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign_term(&mut self, ev: ExponentVector, coeff: Rational) {
        self.insert_term(ev, coeff);
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(ev, k)| (ev.clone(), k.clone() * c.clone()))
                .collect(),
        }
    }

    /// Exact evaluation. Every variable occurring in the polynomial must have
    /// an assignment; zero assignments are fine unless the variable occurs
    /// with a negative exponent somewhere.
    pub fn eval(&self, values: &BTreeMap<Var, Rational>) -> Result<Rational> {
        let mut total = rat(0);
        for (ev, coeff) in &self.terms {
            let mut m = coeff.clone();
            for (v, e) in ev.iter() {
                let val = values
                    .get(&v)
                    .ok_or_else(|| Error::MissingAssignment(v.to_string()))?;
                if val.is_zero() && e < 0 {
                    return Err(Error::ZeroAtNegativeExponent(v.to_string()));
                }
                m *= pow_rational(val, e)?;
            }
            total += m;
        }
        Ok(total)
    }

    /// Applies a map to every exponent vector (e.g. a monomial substitution),
    /// merging terms that collide.
    pub fn map_exponents<F: Fn(&ExponentVector) -> Result<ExponentVector>>(
        &self,
        f: F,
    ) -> Result<Self> {
        let mut out = Self::zero();
        for (ev, coeff) in &self.terms {
            out.insert_term(f(ev)?, coeff.clone());
        }
        Ok(out)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (ev, c) in &rhs.terms {
            out.insert_term(ev.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (ev, c) in &rhs.terms {
            out.insert_term(ev.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.insert_term(ea.add(eb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(ev, c)| (ev.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Collect the variables in play, then sort monomials by descending
        // exponent tuple so output reads like a conventional polynomial.
        let mut vars: Vec<Var> = Vec::new();
        for ev in self.terms.keys() {
            for (v, _) in ev.iter() {
                if !vars.contains(&v) {
                    vars.push(v);
                }
            }
        }
        vars.sort();
        let mut rows: Vec<(Vec<i64>, &ExponentVector, &Rational)> = self
            .terms
            .iter()
            .map(|(ev, c)| (vars.iter().map(|v| ev.get(*v)).collect(), ev, c))
            .collect();
        rows.sort_by(|a, b| b.0.cmp(&a.0));

        let one = rat(1);
        let minus_one = rat(-1);
        for (idx, (_, ev, coeff)) in rows.iter().enumerate() {
            let (sign, mag) = if *coeff < &rat(0) {
                ("-", -(*coeff).clone())
            } else {
                ("+", (*coeff).clone())
            };
            if idx == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if ev.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == one || mag == minus_one {
                write!(f, "{ev}")?;
            } else {
                write!(f, "{mag}*{ev}")?;
            }
        }
        Ok(())
    }
}
