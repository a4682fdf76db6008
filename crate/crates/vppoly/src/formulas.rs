//! The formula catalog: virtual Poincare polynomials of the moduli spaces and
//! auxiliary varieties, as pure constructors from integer genus parameters.
//!
//! Conventions used throughout:
//!
//! * `C_g` ([`newstead_odd`]) is the rank-2 odd-degree moduli polynomial,
//!   `D_g` ([`even_degree`]) the even-degree one, and `S_g`, `U_g` their
//!   cofactors after splitting off Jacobian factors `(1+t)^k`.
//! * Every formula is first assembled in [`RationalFunction`] arithmetic,
//!   mirroring the displayed quotients term by term, and only certified to be
//!   a polynomial at the end. A `NotPolynomial` error out of one of these
//!   constructors means a transcription bug, and the verification suite
//!   treats it as a failed claim rather than a crash.
//! * Empty spaces contribute zero: an empty projective space or Grassmannian
//!   has virtual Poincare polynomial 0. This matters only at the lowest
//!   admissible genus, e.g. `Gr(3,2)` inside [`d1_tilde`] at `g = 2`.

use crate::polyring::{coeff_int, coeff_ratio, Coeff, Polynomial};
use crate::ratfunc::{NotPolynomial, RationalFunction};
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

/// `t^k`.
fn tk(k: u32) -> Polynomial {
    Polynomial::monomial(Coeff::one(), k as usize)
}

/// `1 - t^k`.
fn one_minus_tk(k: u32) -> Polynomial {
    &Polynomial::one() - &tk(k)
}

/// `(1 + t)^k`.
fn one_plus_t_pow(k: u32) -> Polynomial {
    Polynomial::from_int_coeffs(&[1, 1]).pow(k)
}

/// `(1 - t)^k`.
fn one_minus_t_pow(k: u32) -> Polynomial {
    Polynomial::from_int_coeffs(&[1, -1]).pow(k)
}

/// `(1 + t^3)^k`.
fn one_plus_t3_pow(k: u32) -> Polynomial {
    Polynomial::from_int_coeffs(&[1, 0, 0, 1]).pow(k)
}

/// `(1 - t^2)^k`.
fn one_minus_t2_pow(k: u32) -> Polynomial {
    Polynomial::from_int_coeffs(&[1, 0, -1]).pow(k)
}

fn rf(p: Polynomial) -> RationalFunction {
    RationalFunction::from_polynomial(p)
}

fn quot(num: Polynomial, den: Polynomial) -> RationalFunction {
    RationalFunction::new(num, den)
}

fn half() -> Coeff {
    coeff_ratio(1, 2)
}

/// `P(P^n) = 1 + t^2 + ... + t^{2n}`.
pub fn proj_space(n: u32) -> Polynomial {
    let mut coeffs = vec![Coeff::zero(); 2 * n as usize + 1];
    for i in 0..=n as usize {
        coeffs[2 * i] = Coeff::one();
    }
    Polynomial::from_coeffs(coeffs)
}

/// `P(D) = 1 + 2g t + t^2` for a smooth projective curve of genus `g >= 1`.
pub fn curve_pp(g: u32) -> Polynomial {
    assert!(g >= 1, "curve genus must be >= 1");
    Polynomial::from_int_coeffs(&[1, 2 * g as i64, 1])
}

/// `P(A) = (1+t)^{2g}` for an abelian variety of dimension `g`; in particular
/// the Jacobian of a genus-`g` curve.
pub fn abelian_pp(g: u32) -> Polynomial {
    one_plus_t_pow(2 * g)
}

/// The Gaussian binomial in `t^2`: `P(Gr(k,n)) = prod_{i=1}^{k}
/// (1 - t^{2(n-i+1)}) / (1 - t^{2i})`, always a polynomial.
///
/// An empty Grassmannian (`k > n`) contributes zero.
pub fn grassmannian_pp(k: u32, n: u32) -> RationalFunction {
    if k > n {
        return RationalFunction::zero();
    }
    let mut num = Polynomial::one();
    let mut den = Polynomial::one();
    for i in 1..=k {
        num = &num * &one_minus_tk(2 * (n - i + 1));
        den = &den * &one_minus_tk(2 * i);
    }
    quot(num, den)
}

/// `C_g` as the displayed quotient:
/// `(1+t)^{2g} ((1+t^3)^{2g} - t^{2g}(1+t)^{2g}) / ((1-t^2)(1-t^4))`.
pub fn newstead_odd_rf(g: u32) -> RationalFunction {
    assert!(g >= 1, "genus must be >= 1");
    let num = &one_plus_t_pow(2 * g)
        * &(&one_plus_t3_pow(2 * g) - &(&tk(2 * g) * &one_plus_t_pow(2 * g)));
    let den = &one_minus_tk(2) * &one_minus_tk(4);
    quot(num, den)
}

/// `C_g`, the Newstead polynomial of the rank-2 moduli space of odd degree,
/// certified polynomial. Degree `8g - 6`.
pub fn newstead_odd(g: u32) -> Result<Polynomial, NotPolynomial> {
    newstead_odd_rf(g).to_polynomial()
}

/// `D_g` as the displayed two-term expression:
/// the `C_g`-like quotient with `t^{2g+2}` minus
/// `(t^2/2) ((1+t)^{4g}/(1-t^2) - (1-t^2)^{2g}/(1+t^2))`.
pub fn even_degree_rf(g: u32) -> RationalFunction {
    assert!(g >= 1, "genus must be >= 1");
    let first = quot(
        &one_plus_t_pow(2 * g)
            * &(&one_plus_t3_pow(2 * g) - &(&tk(2 * g + 2) * &one_plus_t_pow(2 * g))),
        &one_minus_tk(2) * &one_minus_tk(4),
    );
    let correction = rf(Polynomial::monomial(half(), 2))
        * (quot(one_plus_t_pow(4 * g), one_minus_tk(2))
            - quot(one_minus_t2_pow(2 * g), Polynomial::from_int_coeffs(&[1, 0, 1])));
    first - correction
}

/// `D_g`, the rank-2 even-degree moduli polynomial, certified polynomial.
/// Degree `8g - 6` for `g >= 2`.
pub fn even_degree(g: u32) -> Result<Polynomial, NotPolynomial> {
    even_degree_rf(g).to_polynomial()
}

/// `S_g = ((1-t+t^2)^{2g} - t^{2g}) / ((1-t)^2 (1+t^2))`.
pub fn s_poly_rf(g: u32) -> RationalFunction {
    assert!(g >= 1, "genus must be >= 1");
    let num = &Polynomial::from_int_coeffs(&[1, -1, 1]).pow(2 * g) - &tk(2 * g);
    let den = &one_minus_t_pow(2) * &Polynomial::from_int_coeffs(&[1, 0, 1]);
    quot(num, den)
}

/// `S_g`, certified polynomial with integer coefficients.
pub fn s_poly(g: u32) -> Result<Polynomial, NotPolynomial> {
    s_poly_rf(g).to_polynomial()
}

/// `U_g = (2(1+t)^{2g-2}((1-t+t^2)^{2g} - t^{2g+2})
///         - t^2((1+t)^{2g-2}(1-t^4) - (1-t)^{2g+2})) / (2(1-t)^2(1+t^2))`.
pub fn u_poly_rf(g: u32) -> RationalFunction {
    assert!(g >= 1, "genus must be >= 1");
    let lead = &Polynomial::constant(coeff_int(2))
        * &(&one_plus_t_pow(2 * g - 2)
            * &(&Polynomial::from_int_coeffs(&[1, -1, 1]).pow(2 * g) - &tk(2 * g + 2)));
    let twist = &tk(2)
        * &(&(&one_plus_t_pow(2 * g - 2) * &one_minus_tk(4)) - &one_minus_t_pow(2 * g + 2));
    let den = &Polynomial::constant(coeff_int(2))
        * &(&one_minus_t_pow(2) * &Polynomial::from_int_coeffs(&[1, 0, 1]));
    quot(&lead - &twist, den)
}

/// `U_g`, certified polynomial with integer coefficients.
pub fn u_poly(g: u32) -> Result<Polynomial, NotPolynomial> {
    u_poly_rf(g).to_polynomial()
}

/// `P(M_2)` for the Kirwan partial desingularization of the even-degree
/// moduli space, transcribed line by line from the displayed formula.
/// Requires `g >= 2`.
pub fn kirwan_m2_rf(g: u32) -> RationalFunction {
    assert!(g >= 2, "Kirwan desingularization formula needs g >= 2");
    let prefactor = quot(one_plus_t_pow(2 * g), one_minus_tk(2));
    let line1 = quot(
        &one_plus_t3_pow(2 * g) - &(&tk(2 * g + 2) * &one_plus_t_pow(2 * g)),
        one_minus_tk(4),
    ) + quot(&tk(2) * &one_minus_tk(6 * g - 2), one_minus_tk(4))
        - quot(&tk(4 * g - 2) * &one_minus_tk(2 * g), one_minus_tk(2));
    let invariant_sum = rf(&one_plus_t_pow(2 * g)
        .scale(&half())
        * &Polynomial::from_int_coeffs(&[1, 0, 1]))
        + rf(&one_minus_t_pow(2 * g).scale(&half()) * &one_minus_tk(2))
        + quot(&tk(2) * &one_minus_tk(2 * g - 2), one_minus_tk(2));
    let line2 = quot(&tk(2) * &one_minus_tk(4 * g - 6), one_minus_tk(4)) * invariant_sum;
    let ruled = rf(one_plus_t_pow(2 * g))
        + quot(&tk(2) * &one_minus_tk(2 * g - 2), one_minus_tk(2));
    let line3 = quot(&tk(2 * g - 2) * &one_minus_tk(2 * g - 2), one_minus_tk(2)) * ruled;
    prefactor * (line1 + line2 - line3)
}

/// `P(M_2)`, certified polynomial. Requires `g >= 2`.
pub fn kirwan_m2(g: u32) -> Result<Polynomial, NotPolynomial> {
    kirwan_m2_rf(g).to_polynomial()
}

/// `P(D~_1)`: the complete-conics bundle over `Gr(3,g)` over the Jacobian,
/// assembled from its displayed factors
/// `(P(P^5) + P(P^2)^2 - P(P^2)) * P(Gr(3,g)) * P(J)`.
///
/// At `g = 2` the Grassmannian `Gr(3,2)` is empty and the whole divisor
/// vanishes. Requires `g >= 2`.
pub fn d1_tilde(g: u32) -> Result<Polynomial, NotPolynomial> {
    assert!(g >= 2, "exceptional divisor formula needs g >= 2");
    let blown_p5 = &(&proj_space(5) + &(&proj_space(2) * &proj_space(2))) - &proj_space(2);
    (rf(blown_p5) * grassmannian_pp(3, g) * rf(abelian_pp(g))).to_polynomial()
}

/// `P(D_1)` as the displayed closed form
/// `(1+t)^{2g}(1-t^{2g})(1-t^{2g-2}) ((1+t^{2g+4}) - (t^2+t^{2g+2}))
///  / ((1-t^2)^3 (1-t^4))`.
/// Requires `g >= 2`.
pub fn d1(g: u32) -> Result<Polynomial, NotPolynomial> {
    assert!(g >= 2, "exceptional divisor formula needs g >= 2");
    let num = &(&(&one_plus_t_pow(2 * g) * &one_minus_tk(2 * g)) * &one_minus_tk(2 * g - 2))
        * &(&(&Polynomial::one() + &tk(2 * g + 4)) - &(&tk(2) + &tk(2 * g + 2)));
    let den = &one_minus_t2_pow(3) * &one_minus_tk(4);
    quot(num, den).to_polynomial()
}

/// The center of the blow-up `D~_1 -> D_1`:
/// `P(P(S^2 S_2)) * P(J) = P(P^2) * P(Gr(2,g)) * P(J)`.
fn d1_blowup_center(g: u32) -> Polynomial {
    (rf(proj_space(2)) * grassmannian_pp(2, g) * rf(abelian_pp(g)))
        .to_polynomial()
        .expect("Gaussian binomial products are polynomial")
}

/// `P(D~_1)` reconstructed through the blowing-up formula from `P(D_1)` and
/// the center `P(P^2) * P(Gr(2,g)) * P(J)` in codimension `g - 2`; the
/// independent route the consistency checks compare against [`d1_tilde`].
/// Requires `g >= 3` so the codimension is positive.
pub fn blowup_d1_route(g: u32) -> Result<Polynomial, NotPolynomial> {
    assert!(g >= 3, "the blow-up of D_1 needs codimension g - 2 >= 1");
    Ok(blowup_pp(&d1(g)?, &d1_blowup_center(g), g - 2))
}

/// `P(D_2 \ D_1)` as the displayed closed form: the invariant Gaussian factor
/// times `(P(JxJ)^+ - P(J))` plus the anti-invariant factor times `P(JxJ)^-`.
/// Requires `g >= 2`.
pub fn d2_minus_d1(g: u32) -> Result<Polynomial, NotPolynomial> {
    assert!(g >= 2, "exceptional divisor formula needs g >= 2");
    let jj_plus = &one_plus_t_pow(4 * g).scale(&half()) + &one_minus_t2_pow(2 * g).scale(&half());
    let jj_minus = &one_plus_t_pow(4 * g).scale(&half()) - &one_minus_t2_pow(2 * g).scale(&half());
    let invariant = quot(
        &one_minus_tk(2 * g) * &one_minus_tk(2 * g - 2),
        &one_minus_tk(2) * &one_minus_tk(4),
    ) * rf(&jj_plus - &abelian_pp(g));
    let anti = quot(
        &(&tk(2) * &one_minus_tk(2 * g - 2)) * &one_minus_tk(2 * g - 4),
        &one_minus_tk(2) * &one_minus_tk(4),
    ) * rf(jj_minus);
    (invariant + anti).to_polynomial()
}

/// `P((J x J)/Z_2) = (1/2) P_t(J)^2 + (1/2) P_{-t^2}(J)`, computed as the
/// invariant part of the square of the Jacobian polynomial.
pub fn jj_quotient(g: u32) -> Polynomial {
    assert!(g >= 1, "genus must be >= 1");
    sym_plus(&abelian_pp(g))
}

/// Invariant part of a symmetric square: `(p(t)^2 + p(-t^2)) / 2`.
pub fn sym_plus(p: &Polynomial) -> Polynomial {
    (&(p * p) + &p.twist()).scale(&half())
}

/// Anti-invariant part of a symmetric square: `(p(t)^2 - p(-t^2)) / 2`.
pub fn sym_minus(p: &Polynomial) -> Polynomial {
    (&(p * p) - &p.twist()).scale(&half())
}

/// The displayed closed form of `P(P^{g-2} x P^{g-2})^+`:
/// `(1-t^{2g})(1-t^{2g-2}) / ((1-t^2)(1-t^4))`. Requires `g >= 2`.
pub fn sym_plus_closed(g: u32) -> Result<Polynomial, NotPolynomial> {
    assert!(g >= 2, "closed form needs g >= 2");
    quot(
        &one_minus_tk(2 * g) * &one_minus_tk(2 * g - 2),
        &one_minus_tk(2) * &one_minus_tk(4),
    )
    .to_polynomial()
}

/// The displayed closed form of `P(P^{g-2} x P^{g-2})^-`:
/// `t^2 (1-t^{2g-2})(1-t^{2g-4}) / ((1-t^2)(1-t^4))`. Requires `g >= 2`.
pub fn sym_minus_closed(g: u32) -> Result<Polynomial, NotPolynomial> {
    assert!(g >= 2, "closed form needs g >= 2");
    quot(
        &(&tk(2) * &one_minus_tk(2 * g - 2)) * &one_minus_tk(2 * g - 4),
        &one_minus_tk(2) * &one_minus_tk(4),
    )
    .to_polynomial()
}

/// The blowing-up formula: `P(X~) = P(X) + P(Z) (P(P^{c-1}) - 1)` for a
/// blow-up along a center `Z` of codimension `c >= 1`.
pub fn blowup_pp(p_x: &Polynomial, p_z: &Polynomial, c: u32) -> Polynomial {
    assert!(c >= 1, "codimension must be >= 1");
    p_x + &(p_z * &(&proj_space(c - 1) - &Polynomial::one()))
}

/// Dimension of the moduli space of semistable rank-`r` degree-`d` bundles
/// on a genus-`g` curve: `r^2(g-1) + 1` for `g >= 2`, `gcd(r,d)` for `g = 1`.
pub fn moduli_dim(r: u32, d: i64, g: u32) -> i64 {
    assert!(r >= 1, "rank must be >= 1");
    assert!(g >= 1, "genus must be >= 1");
    if g >= 2 {
        (r as i64) * (r as i64) * (g as i64 - 1) + 1
    } else {
        gcd_i64(r as i64, d)
    }
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `P(U_C(w,2,0))` for the reducible curve with component genera
/// `(g1, g2)`, in the product form
/// `C_{g1} C_{g2} (-t^2 + t^6) + D_{g1} D_{g2}`.
pub fn uc_main(g1: u32, g2: u32) -> Result<Polynomial, NotPolynomial> {
    assert!(g1 >= 1 && g2 >= 1, "component genera must be >= 1");
    let bundle_factor = Polynomial::from_int_coeffs(&[0, 0, -1, 0, 0, 0, 1]);
    Ok(
        &(&(&newstead_odd(g1)? * &newstead_odd(g2)?) * &bundle_factor)
            + &(&even_degree(g1)? * &even_degree(g2)?),
    )
}

/// `P(U_C(w,2,0))` in the factored form
/// `(1+t)^{2g} ((1+t)^{2g-4} S_{g1} S_{g2} (-t^2 + t^6) + U_{g1} U_{g2})`;
/// equality with [`uc_main`] is one of the verified claims.
pub fn uc_via_su(g1: u32, g2: u32) -> Result<Polynomial, NotPolynomial> {
    assert!(g1 >= 1 && g2 >= 1, "component genera must be >= 1");
    let g = g1 + g2;
    let bundle_factor = Polynomial::from_int_coeffs(&[0, 0, -1, 0, 0, 0, 1]);
    let inner = &(&(&(&s_poly(g1)? * &s_poly(g2)?) * &bundle_factor) * &one_plus_t_pow(2 * g - 4))
        + &(&u_poly(g1)? * &u_poly(g2)?);
    Ok(&abelian_pp(g) * &inner)
}

/// `F = C_{g1} C_{g2} (-t^2+t^6) + D_{g1} D_{g2} - D_{g1+g2}`: the difference
/// between the reducible-curve moduli polynomial and the smooth-curve one.
pub fn f_diff(g1: u32, g2: u32) -> Result<Polynomial, NotPolynomial> {
    Ok(&uc_main(g1, g2)? - &even_degree(g1 + g2)?)
}

/// Integer parameters a formula is instantiated at.
///
/// Genus parameters are positive; `g` always equals `g1 + g2` when all three
/// appear, and [`ParamBinding::genus`] derives `g` from the pair when only
/// the pair is given.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ParamBinding {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g1: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g2: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
}

impl ParamBinding {
    pub fn genus(g: u32) -> Self {
        ParamBinding {
            g: Some(g as i64),
            ..Default::default()
        }
    }

    pub fn pair(g1: u32, g2: u32) -> Self {
        ParamBinding {
            g1: Some(g1 as i64),
            g2: Some(g2 as i64),
            ..Default::default()
        }
    }

    /// The genus: `g` when bound, otherwise `g1 + g2` when the pair is bound.
    pub fn genus_value(&self) -> Option<i64> {
        self.g.or(match (self.g1, self.g2) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        })
    }

    /// Human-readable `key=value` list in a fixed order.
    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        for (name, v) in [
            ("g", self.g),
            ("g1", self.g1),
            ("g2", self.g2),
            ("n", self.n),
            ("k", self.k),
            ("r", self.r),
            ("d", self.d),
        ] {
            if let Some(v) = v {
                parts.push(format!("{}={}", name, v));
            }
        }
        if parts.is_empty() {
            "-".to_string()
        } else {
            parts.join(" ")
        }
    }
}

/// A formula that was asked for with missing or out-of-domain parameters, or
/// that failed polynomiality certification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("missing parameter --{name}")]
    MissingParam { name: &'static str },
    #[error("parameter out of domain: {message}")]
    Domain { message: String },
    #[error(transparent)]
    NotPolynomial(#[from] NotPolynomial),
}

/// Identifiers for every formula in the catalog, used by the command line
/// and the expression catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormulaId {
    ProjSpace,
    Curve,
    Abelian,
    Grassmannian,
    Jacobian,
    NewsteadOdd,
    EvenDegree,
    SPoly,
    UPoly,
    KirwanM2,
    D1Tilde,
    D1,
    D2MinusD1,
    JjQuotient,
    SymPlus,
    SymMinus,
    BlowUp,
    ModuliDim,
    UcMain,
    UcViaSu,
    FDiff,
}

impl FormulaId {
    pub const ALL: [FormulaId; 21] = [
        FormulaId::ProjSpace,
        FormulaId::Curve,
        FormulaId::Abelian,
        FormulaId::Grassmannian,
        FormulaId::Jacobian,
        FormulaId::NewsteadOdd,
        FormulaId::EvenDegree,
        FormulaId::SPoly,
        FormulaId::UPoly,
        FormulaId::KirwanM2,
        FormulaId::D1Tilde,
        FormulaId::D1,
        FormulaId::D2MinusD1,
        FormulaId::JjQuotient,
        FormulaId::SymPlus,
        FormulaId::SymMinus,
        FormulaId::BlowUp,
        FormulaId::ModuliDim,
        FormulaId::UcMain,
        FormulaId::UcViaSu,
        FormulaId::FDiff,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::ProjSpace => "proj-space",
            FormulaId::Curve => "curve",
            FormulaId::Abelian => "abelian",
            FormulaId::Grassmannian => "grassmannian",
            FormulaId::Jacobian => "jacobian",
            FormulaId::NewsteadOdd => "newstead-odd",
            FormulaId::EvenDegree => "even-degree",
            FormulaId::SPoly => "s-poly",
            FormulaId::UPoly => "u-poly",
            FormulaId::KirwanM2 => "kirwan-m2",
            FormulaId::D1Tilde => "d1-tilde",
            FormulaId::D1 => "d1",
            FormulaId::D2MinusD1 => "d2-minus-d1",
            FormulaId::JjQuotient => "jj-quotient",
            FormulaId::SymPlus => "sym-plus",
            FormulaId::SymMinus => "sym-minus",
            FormulaId::BlowUp => "blowup",
            FormulaId::ModuliDim => "moduli-dim",
            FormulaId::UcMain => "uc-main",
            FormulaId::UcViaSu => "uc-via-su",
            FormulaId::FDiff => "f-diff",
        }
    }

    pub fn from_name(name: &str) -> Option<FormulaId> {
        FormulaId::ALL.iter().copied().find(|id| id.name() == name)
    }

    /// Whether the formula takes the `(g1, g2)` component pair rather than a
    /// single genus.
    pub fn takes_pair(self) -> bool {
        matches!(self, FormulaId::UcMain | FormulaId::UcViaSu | FormulaId::FDiff)
    }

    /// Smallest admissible genus for the single-genus formulas.
    pub fn min_genus(self) -> u32 {
        match self {
            FormulaId::KirwanM2
            | FormulaId::D1Tilde
            | FormulaId::D1
            | FormulaId::D2MinusD1
            | FormulaId::SymPlus
            | FormulaId::SymMinus => 2,
            FormulaId::BlowUp => 3,
            _ => 1,
        }
    }
}

fn require(p: Option<i64>, name: &'static str) -> Result<i64, FormulaError> {
    p.ok_or(FormulaError::MissingParam { name })
}

fn genus_param(p: Option<i64>, name: &'static str, min: u32) -> Result<u32, FormulaError> {
    let v = require(p, name)?;
    if v < min as i64 {
        return Err(FormulaError::Domain {
            message: format!("{} >= {} required, got {}", name, min, v),
        });
    }
    Ok(v as u32)
}

/// Evaluates a formula at a parameter binding. This is the single dispatch
/// point behind the command line: parameter validation happens here and the
/// typed constructors above do the mathematics.
pub fn compute(id: FormulaId, params: &ParamBinding) -> Result<Polynomial, FormulaError> {
    match id {
        FormulaId::ProjSpace => {
            let n = require(params.n, "n")?;
            if n < 0 {
                return Err(FormulaError::Domain {
                    message: format!("n >= 0 required, got {}", n),
                });
            }
            Ok(proj_space(n as u32))
        }
        FormulaId::Curve => Ok(curve_pp(genus_param(params.g, "g", 1)?)),
        FormulaId::Abelian | FormulaId::Jacobian => {
            Ok(abelian_pp(genus_param(params.g, "g", 1)?))
        }
        FormulaId::Grassmannian => {
            let k = require(params.k, "k")?;
            let n = require(params.n, "n")?;
            if k < 0 || n < 0 || k > n {
                return Err(FormulaError::Domain {
                    message: format!("0 <= k <= n required, got k={} n={}", k, n),
                });
            }
            Ok(grassmannian_pp(k as u32, n as u32)
                .to_polynomial()
                .expect("Gaussian binomials are polynomial"))
        }
        FormulaId::NewsteadOdd => Ok(newstead_odd(genus_param(params.g, "g", 1)?)?),
        FormulaId::EvenDegree => Ok(even_degree(genus_param(params.g, "g", 1)?)?),
        FormulaId::SPoly => Ok(s_poly(genus_param(params.g, "g", 1)?)?),
        FormulaId::UPoly => Ok(u_poly(genus_param(params.g, "g", 1)?)?),
        FormulaId::KirwanM2 => Ok(kirwan_m2(genus_param(params.g, "g", 2)?)?),
        FormulaId::D1Tilde => Ok(d1_tilde(genus_param(params.g, "g", 2)?)?),
        FormulaId::D1 => Ok(d1(genus_param(params.g, "g", 2)?)?),
        FormulaId::D2MinusD1 => Ok(d2_minus_d1(genus_param(params.g, "g", 2)?)?),
        FormulaId::JjQuotient => Ok(jj_quotient(genus_param(params.g, "g", 1)?)),
        FormulaId::SymPlus => {
            let g = genus_param(params.g, "g", 2)?;
            Ok(sym_plus(&proj_space(g - 2)))
        }
        FormulaId::SymMinus => {
            let g = genus_param(params.g, "g", 2)?;
            Ok(sym_minus(&proj_space(g - 2)))
        }
        FormulaId::BlowUp => Ok(blowup_d1_route(genus_param(params.g, "g", 3)?)?),
        FormulaId::ModuliDim => {
            let r = require(params.r, "r")?;
            let d = require(params.d, "d")?;
            let g = genus_param(params.g, "g", 1)?;
            if r < 1 {
                return Err(FormulaError::Domain {
                    message: format!("r >= 1 required, got {}", r),
                });
            }
            Ok(Polynomial::constant(coeff_int(moduli_dim(r as u32, d, g))))
        }
        FormulaId::UcMain => {
            let g1 = genus_param(params.g1, "g1", 1)?;
            let g2 = genus_param(params.g2, "g2", 1)?;
            Ok(uc_main(g1, g2)?)
        }
        FormulaId::UcViaSu => {
            let g1 = genus_param(params.g1, "g1", 1)?;
            let g2 = genus_param(params.g2, "g2", 1)?;
            Ok(uc_via_su(g1, g2)?)
        }
        FormulaId::FDiff => {
            let g1 = genus_param(params.g1, "g1", 1)?;
            let g2 = genus_param(params.g2, "g2", 1)?;
            Ok(f_diff(g1, g2)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::coeff_pow2;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_int_coeffs(coeffs)
    }

    #[test]
    fn proj_space_values() {
        assert_eq!(proj_space(3), p(&[1, 0, 1, 0, 1, 0, 1]));
        assert_eq!(proj_space(0), Polynomial::one());
        assert_eq!(proj_space(1), p(&[1, 0, 1]));
    }

    #[test]
    fn curve_values() {
        assert_eq!(curve_pp(2), p(&[1, 4, 1]));
        assert_eq!(curve_pp(1), p(&[1, 2, 1]));
        assert_eq!(curve_pp(3), p(&[1, 6, 1]));
        assert_eq!(curve_pp(1), abelian_pp(1));
    }

    #[test]
    fn abelian_values() {
        assert_eq!(abelian_pp(0), Polynomial::one());
        assert_eq!(abelian_pp(2), p(&[1, 1]).pow(4));
    }

    #[test]
    fn grassmannian_values() {
        assert!(grassmannian_pp(3, 3).to_polynomial().unwrap().is_one());
        assert_eq!(grassmannian_pp(1, 4).to_polynomial().unwrap(), proj_space(3));
        // duality Gr(3,4) = Gr(1,4)
        assert_eq!(grassmannian_pp(3, 4).to_polynomial().unwrap(), proj_space(3));
        assert!(grassmannian_pp(3, 2).is_zero());
        assert_eq!(
            grassmannian_pp(2, 2).to_polynomial().unwrap(),
            Polynomial::one()
        );
    }

    #[test]
    fn newstead_odd_small_genus() {
        // C_1 collapses to the elliptic curve itself
        assert_eq!(newstead_odd(1).unwrap(), p(&[1, 2, 1]));
        // C_2 = (1+t)^4 (1 + t^2 + 4t^3 + t^4 + t^6), expanded independently
        let expected = &p(&[1, 1]).pow(4) * &p(&[1, 0, 1, 4, 1, 0, 1]);
        assert_eq!(newstead_odd(2).unwrap(), expected);
        assert_eq!(newstead_odd(2).unwrap().coeff_at(4), coeff_int(24));
    }

    #[test]
    fn even_degree_small_genus() {
        assert_eq!(even_degree(1).unwrap(), &p(&[1, 2, 1]) * &p(&[1, 0, 1]));
        let expected = &p(&[1, 1]).pow(4) * &p(&[1, 0, 1, 0, 1, 0, 1]);
        assert_eq!(even_degree(2).unwrap(), expected);
        // D_4(1) = 2^14 (3 - 4)
        assert_eq!(
            even_degree(4).unwrap().eval_at_one(),
            -coeff_pow2(14)
        );
    }

    #[test]
    fn s_u_small_genus() {
        assert_eq!(s_poly(2).unwrap(), p(&[1, -2, 4, -2, 1]));
        assert_eq!(s_poly(1).unwrap(), Polynomial::one());
        assert_eq!(u_poly(1).unwrap(), p(&[1, 0, 1]));
        assert_eq!(
            &p(&[1, 1]).pow(2) * &s_poly(2).unwrap(),
            p(&[1, 0, 1, 4, 1, 0, 1])
        );
    }

    #[test]
    fn kirwan_small_genus() {
        // additive decomposition with hand-expanded pieces at g = 2:
        // P(M_2) = D_2 + P(D_1) + P(D_2\D_1) - P((JxJ)/Z_2)
        //        = (1+t)^4 (1 + 2t^2 + 2t^4 + t^6)
        let expected = &p(&[1, 1]).pow(4) * &p(&[1, 0, 2, 0, 2, 0, 1]);
        assert_eq!(kirwan_m2(2).unwrap(), expected);
        for g in 2..=8 {
            assert_eq!(kirwan_m2(g).unwrap().coeff_at(0), coeff_int(1));
        }
    }

    #[test]
    fn divisor_edge_cases() {
        assert!(d1_tilde(2).unwrap().is_zero());
        // d1(2) = (1+t)^4 (1 + t^2 + t^4): the closed form degenerates cleanly
        assert_eq!(d1(2).unwrap(), &p(&[1, 1]).pow(4) * &p(&[1, 0, 1, 0, 1]));
        assert_eq!(jj_quotient(1), p(&[1, 2, 2, 2, 1]));
        for g in 1..=6 {
            assert_eq!(jj_quotient(g).coeff_at(0), coeff_int(1));
        }
    }

    #[test]
    fn sym_parts() {
        assert_eq!(sym_plus(&p(&[1, 0, 1])), p(&[1, 0, 1, 0, 1]));
        assert_eq!(sym_minus(&p(&[1, 0, 1])), p(&[0, 0, 1]));
        // defining identity on an arbitrary input
        let q = p(&[3, -1, 2, 7]);
        assert_eq!(&sym_plus(&q) + &sym_minus(&q), &q * &q);
    }

    #[test]
    fn blowup_formula() {
        // blow-up of P^2 at a point is the Hirzebruch surface F_1
        assert_eq!(
            blowup_pp(&proj_space(2), &Polynomial::one(), 2),
            p(&[1, 0, 2, 0, 1])
        );
        let x = p(&[1, 5, 3]);
        assert_eq!(blowup_pp(&x, &p(&[1, 1]), 1), x);
        assert_eq!(blowup_pp(&x, &Polynomial::zero(), 3), x);
    }

    #[test]
    fn moduli_dim_cases() {
        assert_eq!(moduli_dim(2, 0, 2), 5);
        assert_eq!(moduli_dim(2, 1, 1), 1);
        assert_eq!(moduli_dim(2, 0, 1), 2);
        assert_eq!(moduli_dim(3, 0, 4), 28);
    }

    #[test]
    fn uc_main_headline() {
        let expected = &p(&[1, 2, 1]).pow(2) * &p(&[1, 0, 1, 0, 1, 0, 1]);
        assert_eq!(uc_main(1, 1).unwrap(), expected);
        assert_eq!(uc_main(2, 2).unwrap().degree(), Some(26));
        for g1 in 1..=3u32 {
            for g2 in 1..=3u32 {
                assert_eq!(uc_main(g1, g2).unwrap().coeff_at(0), coeff_int(1));
            }
        }
    }

    #[test]
    fn f_diff_values() {
        assert!(f_diff(1, 1).unwrap().is_zero());
        // coefficient of t^5 at (2,2): 4 g1 g2 (g-1) - 2g = 40
        assert_eq!(f_diff(2, 2).unwrap().coeff_at(5), coeff_int(40));
    }

    #[test]
    fn dispatch_and_names() {
        for id in FormulaId::ALL {
            assert_eq!(FormulaId::from_name(id.name()), Some(id));
        }
        assert_eq!(FormulaId::from_name("no-such"), None);

        let out = compute(FormulaId::UcMain, &ParamBinding::pair(1, 1)).unwrap();
        assert_eq!(out, uc_main(1, 1).unwrap());
        assert!(matches!(
            compute(FormulaId::NewsteadOdd, &ParamBinding::genus(0)),
            Err(FormulaError::Domain { .. })
        ));
        assert!(matches!(
            compute(FormulaId::NewsteadOdd, &ParamBinding::default()),
            Err(FormulaError::MissingParam { name: "g" })
        ));
        let dim = compute(
            FormulaId::ModuliDim,
            &ParamBinding {
                r: Some(2),
                d: Some(0),
                g: Some(2),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(dim, Polynomial::constant(coeff_int(5)));
    }
}
