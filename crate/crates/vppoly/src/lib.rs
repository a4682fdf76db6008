//! Exact computation and machine verification of virtual Poincare
//! polynomials for moduli spaces of rank-2 semistable sheaves on curves,
//! including the reducible nodal case of two smooth components glued at a
//! point.
//!
//! The crate is organized in layers:
//!
//! * [`polyring`] -- dense univariate polynomials over arbitrary-precision
//!   rationals; every computation in the crate is exact.
//! * [`ratfunc`] -- normalized rational functions with polynomiality
//!   certification, exact limits, and truncated power series.
//! * [`formulas`] -- the catalog of closed formulas (Newstead's odd-degree
//!   polynomial, the even-degree one, Kirwan desingularization pieces, the
//!   reducible-curve moduli polynomial and its cofactor forms).
//! * [`verify`] -- a registry of quantitative identities between the
//!   formulas, each checkable exactly over genus ranges.
//! * [`exprdsl`] -- a small expression language used to keep a second,
//!   textual transcription of the catalog and cross-check it against the
//!   programmatic builders.

pub mod exprdsl;
pub mod formulas;
pub mod polyring;
pub mod ratfunc;
pub mod verify;

pub use formulas::{FormulaId, ParamBinding};
pub use polyring::{Coeff, Polynomial};
pub use ratfunc::RationalFunction;
