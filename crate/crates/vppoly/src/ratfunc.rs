//! Normalized rational functions in `t`, the form every displayed formula
//! takes before it is certified to be a polynomial.
//!
//! The canonical form keeps `gcd(num, den) = 1` with a monic denominator, so
//! equality of rational functions is plain componentwise equality. On top of
//! the field arithmetic this module provides the three certification tools
//! the identity checks rely on: exact conversion to a polynomial, limits at
//! finite points (an exact stand-in for l'Hopital), and truncated power
//! series expansion.

use crate::polyring::{Coeff, Polynomial};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use thiserror::Error;

/// The expression kept a nontrivial denominator after full cancellation, so
/// it is genuinely not a polynomial at these parameters.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a polynomial: denominator {denominator} survives cancellation")]
pub struct NotPolynomial {
    pub denominator: Polynomial,
}

/// The function has an actual pole at the requested point.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("pole at t = {point}")]
pub struct PoleError {
    pub point: Coeff,
}

/// Power-series expansion requested at a pole (denominator vanishes at 0).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot expand: denominator vanishes at t = 0")]
pub struct ExpansionAtPole;

/// Division by the zero rational function.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("division by the zero rational function")]
pub struct ZeroDivision;

/// A quotient of polynomials in canonical form: `gcd(num, den) = 1` and the
/// denominator is monic. The zero function is `0/1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    a
}

impl RationalFunction {
    /// Builds `num/den` and normalizes. Panics when `den` is zero.
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut rf = RationalFunction { num, den };
        rf.normalize();
        rf
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunction {
            num: Polynomial::one(),
            den: Polynomial::one(),
        }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Coeff) -> Self {
        RationalFunction::from_polynomial(Polynomial::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Polynomial::one();
            return;
        }
        let g = poly_gcd(&self.num, &self.den);
        if g.degree().map_or(false, |d| d > 0) {
            self.num = self.num.exact_div(&g).expect("gcd divides numerator");
            self.den = self.den.exact_div(&g).expect("gcd divides denominator");
        }
        let lead = self.den.leading_coeff().expect("nonzero denominator").clone();
        if !lead.is_one() {
            let inv = lead.recip();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    /// Checked division; `Err` on a zero divisor.
    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<RationalFunction, ZeroDivision> {
        if rhs.is_zero() {
            return Err(ZeroDivision);
        }
        Ok(RationalFunction::new(
            &self.num * &rhs.den,
            &self.den * &rhs.num,
        ))
    }

    /// `self^n` with `r^0 = 1`.
    pub fn pow(&self, n: u32) -> RationalFunction {
        RationalFunction {
            num: self.num.pow(n),
            den: self.den.pow(n),
        }
    }

    /// Returns the underlying polynomial when the denominator reduced to 1,
    /// otherwise the surviving denominator as a [`NotPolynomial`] witness.
    pub fn to_polynomial(&self) -> Result<Polynomial, NotPolynomial> {
        if self.den.is_one() {
            Ok(self.num.clone())
        } else {
            Err(NotPolynomial {
                denominator: self.den.clone(),
            })
        }
    }

    /// Exact limit as `t -> a`: cancels the maximal common power of `(t - a)`
    /// and evaluates, reporting a [`PoleError`] when a pole remains. This is
    /// l'Hopital's rule done entirely in exact arithmetic.
    pub fn limit_at(&self, a: &Coeff) -> Result<Coeff, PoleError> {
        let linear = Polynomial::from_coeffs(vec![-a.clone(), Coeff::one()]);
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        loop {
            let dv = den.eval_at(a);
            if !dv.is_zero() {
                return Ok(num.eval_at(a) / dv);
            }
            if !num.eval_at(a).is_zero() {
                return Err(PoleError { point: a.clone() });
            }
            num = num.exact_div(&linear).expect("root of numerator");
            den = den.exact_div(&linear).expect("root of denominator");
        }
    }

    /// Truncated power-series expansion around 0, through degree `order`
    /// inclusive. Requires the denominator not to vanish at 0.
    pub fn series(&self, order: usize) -> Result<Polynomial, ExpansionAtPole> {
        let d0 = self.den.coeff_at(0);
        if d0.is_zero() {
            return Err(ExpansionAtPole);
        }
        let inv_d0 = d0.recip();
        let mut coeffs: Vec<Coeff> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.num.coeff_at(k);
            for i in 1..=k {
                let di = self.den.coeff_at(i);
                if !di.is_zero() {
                    acc = acc - di * &coeffs[k - i];
                }
            }
            coeffs.push(acc * &inv_d0);
        }
        Ok(Polynomial::from_coeffs(coeffs))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<'a, 'b> Add<&'b RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &'b RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a, 'b> Sub<&'b RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &'b RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a, 'b> Mul<&'b RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &'b RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a, 'b> Div<&'b RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &'b RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl<'a> Neg for &'a RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &'a RationalFunction) -> RationalFunction {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<RationalFunction> for &'a RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::coeff_int;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_int_coeffs(coeffs)
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(p(num), p(den))
    }

    #[test]
    fn add_common_denominator() {
        // 1/(1-t^2) + 1/(1+t) = (2-t)/(1-t^2), monic-denominator form
        let a = rf(&[1], &[1, 0, -1]);
        let b = rf(&[1], &[1, 1]);
        let sum = &a + &b;
        // (2-t)/(1-t^2) = (t-2)/(t^2-1) after making the denominator monic
        assert_eq!(sum.numerator(), &p(&[-2, 1]));
        assert_eq!(sum.denominator(), &p(&[-1, 0, 1]));
        // and it is the same value as (2-t)/(1-t^2)
        assert_eq!(sum, rf(&[2, -1], &[1, 0, -1]));
    }

    #[test]
    fn sub_self_is_zero() {
        let a = rf(&[1, 2, 3], &[1, -1, 0, 4]);
        assert!((&a - &a).is_zero());
        assert_eq!(&a - &a, RationalFunction::zero());
    }

    #[test]
    fn full_cancellation() {
        let a = rf(&[1, 0, 0, 0, -1], &[1, 0, -1]);
        assert_eq!(a.numerator(), &p(&[1, 0, 1]));
        assert!(a.denominator().is_one());
        assert_eq!(a.to_polynomial().unwrap(), p(&[1, 0, 1]));
    }

    #[test]
    fn not_polynomial_witness() {
        let a = rf(&[1], &[1, -1]);
        let err = a.to_polynomial().unwrap_err();
        // monic normalization turns 1-t into t-1
        assert_eq!(err.denominator, p(&[-1, 1]));
    }

    #[test]
    fn limit_single_cancellation() {
        let a = rf(&[1, 0, -1], &[1, -1]);
        assert_eq!(a.limit_at(&coeff_int(1)).unwrap(), coeff_int(2));
    }

    #[test]
    fn limit_at_actual_pole() {
        let a = rf(&[1], &[1, -1]);
        assert_eq!(
            a.limit_at(&coeff_int(1)).unwrap_err(),
            PoleError { point: coeff_int(1) }
        );
    }

    #[test]
    fn limit_of_zero() {
        assert_eq!(RationalFunction::zero().limit_at(&coeff_int(1)).unwrap(), coeff_int(0));
    }

    #[test]
    fn geometric_series() {
        let a = rf(&[1], &[1, -1]);
        assert_eq!(a.series(3).unwrap(), p(&[1, 1, 1, 1]));
    }

    #[test]
    fn series_at_pole_is_error() {
        let a = rf(&[1], &[0, 1]);
        assert_eq!(a.series(2).unwrap_err(), ExpansionAtPole);
    }

    #[test]
    fn series_of_polynomial_truncates() {
        let a = RationalFunction::from_polynomial(p(&[1, 2, 3, 4]));
        assert_eq!(a.series(2).unwrap(), p(&[1, 2, 3]));
        assert_eq!(a.series(7).unwrap(), p(&[1, 2, 3, 4]));
    }

    #[test]
    fn division_by_zero_is_checked() {
        let a = rf(&[1], &[1, 1]);
        assert_eq!(a.checked_div(&RationalFunction::zero()).unwrap_err(), ZeroDivision);
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-9i64..=9, 0..5).prop_map(|v| Polynomial::from_int_coeffs(&v))
    }

    proptest! {
        #[test]
        fn normalization_idempotent(n in arb_poly(), d in arb_poly()) {
            prop_assume!(!d.is_zero());
            let a = RationalFunction::new(n, d);
            let again = RationalFunction::new(a.numerator().clone(), a.denominator().clone());
            prop_assert_eq!(a, again);
        }

        #[test]
        fn field_identities(n1 in arb_poly(), d1 in arb_poly(), n2 in arb_poly(), d2 in arb_poly()) {
            prop_assume!(!d1.is_zero() && !d2.is_zero());
            let a = RationalFunction::new(n1, d1);
            let b = RationalFunction::new(n2, d2);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!(&(&a * &b) / &b, a);
            }
        }

        #[test]
        fn limit_matches_eval_for_polynomials(q in arb_poly(), x in -5i64..=5) {
            let a = RationalFunction::from_polynomial(q.clone());
            let x = coeff_int(x);
            prop_assert_eq!(a.limit_at(&x).unwrap(), q.eval_at(&x));
        }

        #[test]
        fn series_inverts_denominator(d in arb_poly(), order in 0usize..12) {
            prop_assume!(!d.coeff_at(0).is_zero());
            // den * series(1/den) == 1 through the truncation order
            let inv = RationalFunction::new(Polynomial::one(), d.clone()).series(order).unwrap();
            let product = &d * &inv;
            prop_assert!(product.coeff_at(0).is_one());
            for k in 1..=order {
                prop_assert!(product.coeff_at(k).is_zero());
            }
        }
    }
}
