//! Exact univariate polynomial arithmetic in the variable `t` over the
//! rationals with unbounded precision.
//!
//! Coefficients are [`Coeff`] (arbitrary-precision rationals, always in lowest
//! terms with positive denominator), so no operation ever rounds. Polynomials
//! are stored densely in ascending degree; this is the workhorse value for
//! every Poincare polynomial computed by the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Exact scalar: an arbitrary-precision rational number.
///
/// `BigRational` keeps values in lowest terms with a positive denominator,
/// which is exactly the invariant the coefficient field needs.
pub type Coeff = BigRational;

/// Integer coefficient `n/1`.
pub fn coeff_int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational coefficient `num/den`, reduced. Panics when `den == 0`.
pub fn coeff_ratio(num: i64, den: i64) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact power of two as a coefficient, `2^exp`.
pub fn coeff_pow2(exp: u32) -> Coeff {
    BigRational::from_integer(BigInt::one() << exp)
}

/// Signals that a polynomial division left a nonzero remainder.
///
/// In this crate a `DivisionFailure` means either a transcription bug in a
/// formula or an expression that is genuinely not polynomial at the chosen
/// parameters.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("polynomial division left nonzero remainder {remainder}")]
pub struct DivisionFailure {
    /// The nonzero Euclidean remainder.
    pub remainder: Polynomial,
}

/// A dense univariate polynomial in `t` with exact rational coefficients.
///
/// Invariants: the coefficient vector is indexed by ascending degree and its
/// last entry is nonzero; the zero polynomial is the empty vector, so
/// `degree()` returns `None` for it instead of a fake `-inf` value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    coeffs: Vec<Coeff>,
}

impl Polynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Polynomial::constant(Coeff::one())
    }

    /// The variable `t`.
    pub fn var() -> Self {
        Polynomial {
            coeffs: vec![Coeff::zero(), Coeff::one()],
        }
    }

    /// Constant polynomial `c`.
    pub fn constant(c: Coeff) -> Self {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { coeffs: vec![c] }
        }
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: Coeff, k: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Coeff::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    /// Build from ascending-degree coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Build from ascending-degree integer coefficients.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&n| coeff_int(n)).collect())
    }

    /// `1 + t` raised to nothing; handy base for the many `(1+t)^k` factors.
    pub fn one_plus_t() -> Self {
        Polynomial::from_int_coeffs(&[1, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending-degree coefficient slice (empty for zero).
    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; zero beyond the degree.
    pub fn coeff_at(&self, k: usize) -> Coeff {
        self.coeffs.get(k).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Leading coefficient, or `None` for zero.
    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.coeffs.last()
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Coeff::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// `self^n` by binary exponentiation; `p^0 = 1` including `0^0`.
    pub fn pow(&self, n: u32) -> Self {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Euclidean division: `(quotient, remainder)` with
    /// `self = quotient * den + remainder` and `deg(remainder) < deg(den)`.
    /// Panics when `den` is zero.
    pub fn div_rem(&self, den: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!den.is_zero(), "division by the zero polynomial");
        let dd = den.coeffs.len() - 1;
        if self.coeffs.len() <= dd && !(dd == 0) {
            return (Polynomial::zero(), self.clone());
        }
        let lead_inv = den.coeffs.last().expect("nonzero").recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Coeff::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd || (dd == 0 && !rem.is_empty()) {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().expect("nonempty") * &lead_inv;
            for (i, dc) in den.coeffs.iter().enumerate() {
                let v = &rem[k + i] - &(dc * &factor);
                rem[k + i] = v;
            }
            // the leading term cancels exactly
            debug_assert!(rem.last().expect("nonempty").is_zero());
            rem.pop();
            while rem.last().map_or(false, Zero::is_zero) {
                rem.pop();
            }
            quot[k] = factor;
            if rem.len() <= dd {
                break;
            }
        }
        (Polynomial::from_coeffs(quot), Polynomial { coeffs: rem })
    }

    /// Exact division: the quotient when the remainder is zero, otherwise a
    /// [`DivisionFailure`] carrying the nonzero remainder.
    pub fn exact_div(&self, den: &Polynomial) -> Result<Polynomial, DivisionFailure> {
        let (q, r) = self.div_rem(den);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(DivisionFailure { remainder: r })
        }
    }

    /// Substitute `t = s(t)` and expand exactly (Horner in the subring).
    pub fn substitute(&self, s: &Polynomial) -> Polynomial {
        let mut result = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            result = &(&result * s) + &Polynomial::constant(c.clone());
        }
        result
    }

    /// The substitution `t -> -t^2`, the twist used by the Z/2 splitting.
    pub fn twist(&self) -> Polynomial {
        let mut coeffs = vec![Coeff::zero(); self.coeffs.len().saturating_mul(2)];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            coeffs[2 * k] = if k % 2 == 0 { c.clone() } else { -c.clone() };
        }
        Polynomial::from_coeffs(coeffs)
    }

    /// Exact evaluation at a rational point.
    pub fn eval_at(&self, x: &Coeff) -> Coeff {
        let mut acc = Coeff::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sum of the coefficients, i.e. the value at `t = 1`.
    pub fn eval_at_one(&self) -> Coeff {
        self.coeffs.iter().fold(Coeff::zero(), |acc, c| acc + c)
    }

    /// Whether the coefficient list reads the same in both directions.
    /// Poincare duality makes this hold for smooth projective spaces.
    /// Panics on the zero polynomial, which has no degree to mirror about.
    pub fn is_palindromic(&self) -> bool {
        assert!(!self.is_zero(), "palindromicity is undefined for 0");
        let n = self.coeffs.len();
        (0..n / 2).all(|k| self.coeffs[k] == self.coeffs[n - 1 - k])
    }

    /// True when every coefficient has denominator 1.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// The non-integer parts of the coefficients, as a polynomial. Zero
    /// exactly when all coefficients are integers; used as a failure witness.
    pub fn fractional_part(&self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| c.fract()).collect())
    }

    /// Coefficients as canonical strings (`"5"` or `"-1/2"`), ascending.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Canonical plain-text rendering, e.g. `1 + 2*t + t^2`; see [`fmt::Display`].
    pub fn render_plain(&self) -> String {
        self.render(RenderStyle::Plain)
    }

    /// LaTeX rendering with braced exponents, e.g. `1 + t^{2} + t^{4}`.
    pub fn render_latex(&self) -> String {
        self.render(RenderStyle::Latex)
    }

    fn render(&self, style: RenderStyle) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            let coeff_is_one = mag.is_one();
            if k == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !coeff_is_one {
                    out.push_str(&mag.to_string());
                    out.push_str(style.times());
                }
                out.push_str(&style.power(k));
            }
        }
        out
    }
}

#[derive(Clone, Copy)]
enum RenderStyle {
    Plain,
    Latex,
}

impl RenderStyle {
    fn times(self) -> &'static str {
        match self {
            RenderStyle::Plain => "*",
            RenderStyle::Latex => " ",
        }
    }

    fn power(self, k: usize) -> String {
        match (self, k) {
            (_, 1) => "t".to_string(),
            (RenderStyle::Plain, _) => format!("t^{}", k),
            (RenderStyle::Latex, _) => format!("t^{{{}}}", k),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_plain())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl<'a, 'b> Add<&'b Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &'b Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            coeffs.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl<'a, 'b> Sub<&'b Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &'b Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            coeffs.push(match (a, b) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl<'a, 'b> Mul<&'b Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &'b Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Coeff::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let v = &coeffs[i + j] + &(a * b);
                coeffs[i + j] = v;
            }
        }
        // leading coefficients are nonzero over a field, but from_coeffs
        // keeps the invariant honest anyway
        Polynomial::from_coeffs(coeffs)
    }
}

impl<'a> Neg for &'a Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_int_coeffs(coeffs)
    }

    #[test]
    fn binomial_square() {
        let one_plus_t = p(&[1, 1]);
        assert_eq!(&one_plus_t * &one_plus_t, p(&[1, 2, 1]));
    }

    #[test]
    fn additive_identity() {
        let q = p(&[3, 0, -2, 7]);
        assert_eq!(&q + &Polynomial::zero(), q);
    }

    #[test]
    fn geometric_telescoping() {
        assert_eq!(&p(&[1, -1]) * &p(&[1, 1, 1, 1]), p(&[1, 0, 0, 0, -1]));
    }

    #[test]
    fn pow_binomial() {
        assert_eq!(p(&[1, 1]).pow(4), p(&[1, 4, 6, 4, 1]));
    }

    #[test]
    fn pow_zero_is_one() {
        assert_eq!(p(&[2, 5, 1]).pow(0), Polynomial::one());
        assert_eq!(Polynomial::zero().pow(0), Polynomial::one());
    }

    #[test]
    fn pow_difference_factors() {
        // (1-t+t^2)^4 - t^4 = (1-t)^2 (1+t^2) (1-2t+4t^2-2t^3+t^4),
        // both sides expanded independently
        let lhs = &p(&[1, -1, 1]).pow(4) - &p(&[0, 0, 0, 0, 1]);
        let rhs = &(&p(&[1, -1]).pow(2) * &p(&[1, 0, 1])) * &p(&[1, -2, 4, -2, 1]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn exact_div_difference_of_squares() {
        let num = p(&[1, 0, 0, 0, -1]);
        let den = p(&[1, 0, -1]);
        assert_eq!(num.exact_div(&den).unwrap(), p(&[1, 0, 1]));
    }

    #[test]
    fn exact_div_failure_carries_remainder() {
        let num = p(&[1, 0, 0, -1]);
        let den = p(&[1, 0, -1]);
        let err = num.exact_div(&den).unwrap_err();
        assert_eq!(err.remainder, p(&[1, -1]));
    }

    #[test]
    fn exact_div_s2_quotient() {
        let num = &p(&[1, -1, 1]).pow(4) - &p(&[0, 0, 0, 0, 1]);
        let den = &p(&[1, -1]).pow(2) * &p(&[1, 0, 1]);
        assert_eq!(num.exact_div(&den).unwrap(), p(&[1, -2, 4, -2, 1]));
    }

    #[test]
    fn substitute_minus_t_squared() {
        // (1+t)^2 at t -> -t^2 gives (1-t^2)^2
        let q = p(&[1, 1]).pow(2);
        let s = p(&[0, 0, -1]);
        assert_eq!(q.substitute(&s), p(&[1, 0, -2, 0, 1]));
        assert_eq!(q.twist(), p(&[1, 0, -2, 0, 1]));
    }

    #[test]
    fn substitute_identity() {
        let q = p(&[2, -3, 0, 5]);
        assert_eq!(q.substitute(&Polynomial::var()), q);
    }

    #[test]
    fn substitute_even_ignores_sign() {
        assert_eq!(p(&[1, 0, 1]).substitute(&p(&[0, 0, -1])), p(&[1, 0, 0, 0, 1]));
    }

    #[test]
    fn coeff_at_cases() {
        let q = p(&[1, 4, 6, 4, 1]);
        assert_eq!(q.coeff_at(2), coeff_int(6));
        assert_eq!(q.coeff_at(q.degree().unwrap() + 5), coeff_int(0));
    }

    #[test]
    fn eval_at_point() {
        assert_eq!(p(&[1, 0, 1]).eval_at(&coeff_int(1)), coeff_int(2));
        assert_eq!(p(&[1, 2, 3]).eval_at(&coeff_ratio(1, 2)), coeff_ratio(11, 4));
    }

    #[test]
    fn palindromic_cases() {
        assert!(p(&[1, 0, 1, 4, 1, 0, 1]).is_palindromic());
        assert!(!p(&[1, 2]).is_palindromic());
        assert!(Polynomial::one().is_palindromic());
    }

    #[test]
    fn rendering_canonical() {
        assert_eq!(p(&[1, 2, 1]).to_string(), "1 + 2*t + t^2");
        assert_eq!(p(&[1, 0, -1]).to_string(), "1 - t^2");
        assert_eq!(p(&[-2, 1]).to_string(), "-2 + t");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(
            Polynomial::from_coeffs(vec![coeff_ratio(1, 2), coeff_int(0), coeff_int(3)]).to_string(),
            "1/2 + 3*t^2"
        );
        assert_eq!(p(&[1, 0, 1, 0, 1, 0, 1]).render_latex(), "1 + t^{2} + t^{4} + t^{6}");
        assert_eq!(p(&[0, 2]).render_latex(), "2 t");
    }

    fn arb_coeff() -> impl Strategy<Value = Coeff> {
        // numerators up to 2^128 in magnitude, denominators up to 2^64
        (any::<[u8; 16]>(), any::<bool>(), any::<[u8; 8]>()).prop_map(|(num, neg, den)| {
            let mut n = BigInt::from_bytes_le(num_bigint::Sign::Plus, &num);
            if neg {
                n = -n;
            }
            let mut d = BigInt::from_bytes_le(num_bigint::Sign::Plus, &den);
            if d.is_zero() {
                d = BigInt::one();
            }
            BigRational::new(n, d)
        })
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(arb_coeff(), 0..7).prop_map(Polynomial::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn exact_div_round_trip(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }

        #[test]
        fn mul_degree_law(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!(
                (&a * &b).degree().unwrap(),
                a.degree().unwrap() + b.degree().unwrap()
            );
        }

        #[test]
        fn substitute_degree_law(a in arb_poly(), s in arb_poly()) {
            prop_assume!(!a.is_zero());
            prop_assume!(s.degree().map_or(false, |d| d >= 1));
            prop_assert_eq!(
                a.substitute(&s).degree().unwrap(),
                a.degree().unwrap() * s.degree().unwrap()
            );
        }

        #[test]
        fn eval_at_one_is_coeff_sum(a in arb_poly()) {
            let sum = a.coeffs().iter().fold(Coeff::zero(), |acc, c| acc + c);
            prop_assert_eq!(a.eval_at(&coeff_int(1)), sum.clone());
            prop_assert_eq!(a.eval_at_one(), sum);
        }
    }
}
