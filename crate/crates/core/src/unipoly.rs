//! Univariate polynomials and rational functions over the rationals.
//!
//! These carry the one-parameter substitution s used when specializing
//! integer-point transforms: every generating-function term becomes a
//! rational function of s, the terms are summed exactly, and the value of
//! interest is the sum at s = 1 after full cancellation.
//!
//! Invariants mirrored from the constructors:
//! - `UniPoly` stores dense coefficients with a nonzero leading entry
//!   (the zero polynomial is the empty vector);
//! - `UniRational` keeps numerator and denominator coprime with a monic
//!   denominator, so a vanishing denominator at a point is a genuine pole.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * s^deg`
    pub fn monomial(c: Rational, deg: usize) -> Self {
        let mut coeffs = vec![rat(0); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn eval(&self, s: &Rational) -> Rational {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * s.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![rat(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a.clone() * b.clone();
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|k| k.clone() * c.clone()).collect(),
        }
    }

    /// Multiplies by `s^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![rat(0); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&(rat(1) / l.clone())),
        }
    }

    /// Exact Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn divrem(&self, div: &Self) -> Result<(Self, Self)> {
        if div.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let dd = div.degree().unwrap();
        let lead = div.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut q = vec![rat(0); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap().clone() / lead.clone();
            let shift = rd - dd;
            q[shift] = factor.clone();
            rem = rem.sub(&div.scale(&factor).shift(shift));
        }
        Ok((Self::from_coeffs(q), rem))
    }

    /// Monic gcd via the Euclidean algorithm, run over the integers with
    /// content normalization (primitive remainder sequence) to keep
    /// coefficient growth in check.
    pub fn gcd(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.monic();
        }
        if rhs.is_zero() {
            return self.monic();
        }
        if self.degree() == Some(0) || rhs.degree() == Some(0) {
            return Self::one();
        }
        let mut a = primitive_int_coeffs(self);
        let mut b = primitive_int_coeffs(rhs);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            if b.len() == 1 {
                return Self::one();
            }
            let r = pseudo_rem(&a, &b);
            a = b;
            b = primitive_part(r);
        }
        Self::from_coeffs(a.iter().map(|c| Rational::from(c.clone())).collect()).monic()
    }
}

/// Integer coefficients of `p` cleared of denominators and content, with a
/// positive leading coefficient. `p` must be nonzero.
fn primitive_int_coeffs(p: &UniPoly) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in &p.coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    primitive_part(ints)
}

/// Divides out the integer content and fixes the sign of the leading
/// coefficient; the zero polynomial is the empty vector.
fn primitive_part(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if v.last().unwrap().is_negative() {
        content = -content;
    }
    for c in &mut v {
        *c /= &content;
    }
    v
}

/// Remainder of `lead(b)^(deg a − deg b + 1) · a` divided by `b`, which
/// stays integral throughout. Requires `deg a ≥ deg b ≥ 1`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let lead = b.last().unwrap();
    let mut rem = a.to_vec();
    while rem.len() >= b.len() {
        let coef = rem.pop().unwrap();
        if coef.is_zero() {
            continue;
        }
        let shift = rem.len() + 1 - b.len();
        for c in &mut rem {
            *c *= lead;
        }
        for (k, bc) in b[..b.len() - 1].iter().enumerate() {
            rem[shift + k] -= &coef * bc;
        }
    }
    rem
}

/// Reduced rational function in one variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniRational {
    num: UniPoly,
    den: UniPoly,
}

impl UniRational {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return Self {
                num: UniPoly::zero(),
                den: UniPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            let (num, r1) = num.divrem(&g).expect("gcd divides");
            let (den, r2) = den.divrem(&g).expect("gcd divides");
            debug_assert!(r1.is_zero() && r2.is_zero());
            (num, den)
        };
        let lead = den.leading().expect("nonzero").clone();
        Self {
            num: num.scale(&(rat(1) / lead.clone())),
            den: den.scale(&(rat(1) / lead)),
        }
    }

    pub fn zero() -> Self {
        Self {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        Self {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        Self::reduced(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::reduced(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn eval(&self, s: &Rational) -> Result<Rational> {
        let d = self.den.eval(s);
        if d.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        Ok(self.num.eval(s) / d)
    }

    /// Value at s = 1. Since the fraction is fully reduced, a vanishing
    /// denominator here is a genuine pole, which signals an inconsistent
    /// decomposition upstream.
    pub fn eval_at_one(&self) -> Result<Rational> {
        let d = self.den.eval(&rat(1));
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(self.num.eval(&rat(1)) / d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use proptest::prelude::*;

    fn poly(cs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn divrem_roundtrip() {
        let a = poly(&[2, 0, -3, 1]); // s^3 - 3 s^2 + 2
        let b = poly(&[-1, 1]); // s - 1
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert_eq!(r, UniPoly::zero()); // s = 1 is a root
    }

    #[test]
    fn gcd_cancels_common_roots() {
        let a = poly(&[-1, 0, 1]); // (s-1)(s+1)
        let b = poly(&[-1, 1]); // s - 1
        assert_eq!(a.gcd(&b), b.monic());
    }

    #[test]
    fn removable_singularity_evaluates_at_one() {
        // (1 - s^2) / (1 - s) reduces to 1 + s, value 2 at s = 1.
        let f = UniRational::new(poly(&[1, 0, -1]), poly(&[1, -1])).unwrap();
        assert_eq!(f.eval_at_one().unwrap(), rat(2));
    }

    #[test]
    fn genuine_pole_is_an_error() {
        let f = UniRational::new(poly(&[1]), poly(&[-1, 1])).unwrap();
        assert!(matches!(f.eval_at_one(), Err(Error::PoleAtOne)));
    }

    #[test]
    fn telescoping_identity() {
        // 1/(1-s) + s/(s-1) = 1
        let a = UniRational::new(poly(&[1]), poly(&[1, -1])).unwrap();
        let b = UniRational::new(poly(&[0, 1]), poly(&[-1, 1])).unwrap();
        let sum = a.add(&b);
        assert_eq!(sum, UniRational::from_poly(UniPoly::one()));
    }

    fn arb_poly() -> impl Strategy<Value = UniPoly> {
        proptest::collection::vec((-4i64..5, 1i64..4), 0..5)
            .prop_map(|cs| UniPoly::from_coeffs(cs.into_iter().map(|(n, d)| ratio(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn divrem_is_exact(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&b).unwrap();
            prop_assert_eq!(q.mul(&b).add(&r), a);
            if let (Some(rd), Some(bd)) = (r.degree(), b.degree()) {
                prop_assert!(rd < bd);
            }
        }

        #[test]
        fn gcd_divides_both(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() || !b.is_zero());
            let g = a.gcd(&b);
            prop_assert!(!g.is_zero());
            let (_, r1) = a.divrem(&g).unwrap();
            let (_, r2) = b.divrem(&g).unwrap();
            prop_assert!(r1.is_zero());
            prop_assert!(r2.is_zero());
        }

        #[test]
        fn rational_sum_matches_pointwise(a in arb_poly(), b in arb_poly(), c in arb_poly(), d in arb_poly()) {
            prop_assume!(!b.is_zero() && !d.is_zero());
            let f = UniRational::new(a, b).unwrap();
            let g = UniRational::new(c, d).unwrap();
            let sum = f.add(&g);
            let s = ratio(3, 7);
            if let (Ok(fv), Ok(gv), Ok(sv)) = (f.eval(&s), g.eval(&s), sum.eval(&s)) {
                prop_assert_eq!(fv + gv, sv);
            }
        }
    }
}
