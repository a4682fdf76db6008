//! Exact evaluation of parsed expressions under a parameter binding.

use super::{Expr, ExprAst, GenusParam, IntExpr, IntNode, SourceSpan};
use crate::formulas::ParamBinding;
use crate::polyring::{coeff_int, Polynomial};
use crate::ratfunc::RationalFunction;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound parameter `{param}` at {span}")]
    UnboundParam { param: GenusParam, span: SourceSpan },
    #[error("exponent evaluates to the negative value {value} at {span}")]
    NegativeExponent { value: i64, span: SourceSpan },
    #[error("division by zero at {span}")]
    DivisionByZero { span: SourceSpan },
    #[error("integer overflow in exponent at {span}")]
    ExponentOverflow { span: SourceSpan },
}

fn lookup(param: GenusParam, binding: &ParamBinding, span: SourceSpan) -> Result<i64, EvalError> {
    let value = match param {
        GenusParam::G => binding.genus_value(),
        GenusParam::G1 => binding.g1,
        GenusParam::G2 => binding.g2,
    };
    value.ok_or(EvalError::UnboundParam { param, span })
}

fn eval_int(ie: &IntExpr, binding: &ParamBinding) -> Result<i64, EvalError> {
    let overflow = |span| EvalError::ExponentOverflow { span };
    match &ie.node {
        IntNode::Int(n) => Ok(*n),
        IntNode::Param(p) => lookup(*p, binding, ie.span),
        IntNode::Neg(inner) => eval_int(inner, binding)?
            .checked_neg()
            .ok_or(overflow(ie.span)),
        IntNode::Add(a, b) => eval_int(a, binding)?
            .checked_add(eval_int(b, binding)?)
            .ok_or(overflow(ie.span)),
        IntNode::Sub(a, b) => eval_int(a, binding)?
            .checked_sub(eval_int(b, binding)?)
            .ok_or(overflow(ie.span)),
        IntNode::Mul(a, b) => eval_int(a, binding)?
            .checked_mul(eval_int(b, binding)?)
            .ok_or(overflow(ie.span)),
    }
}

/// Evaluates an expression to an exact rational function. Every parameter
/// appearing in the expression must be bound, and every exponent must come
/// out nonnegative under the binding.
pub fn eval(ast: &ExprAst, binding: &ParamBinding) -> Result<RationalFunction, EvalError> {
    match &ast.node {
        Expr::Int(n) => Ok(RationalFunction::constant(coeff_int(*n))),
        Expr::Var => Ok(RationalFunction::from_polynomial(Polynomial::var())),
        Expr::Param(p) => {
            let v = lookup(*p, binding, ast.span)?;
            Ok(RationalFunction::constant(coeff_int(v)))
        }
        Expr::Neg(inner) => Ok(-eval(inner, binding)?),
        Expr::Add(a, b) => Ok(eval(a, binding)? + eval(b, binding)?),
        Expr::Sub(a, b) => Ok(eval(a, binding)? - eval(b, binding)?),
        Expr::Mul(a, b) => Ok(eval(a, binding)? * eval(b, binding)?),
        Expr::Div(a, b) => {
            let num = eval(a, binding)?;
            let den = eval(b, binding)?;
            num.checked_div(&den)
                .map_err(|_| EvalError::DivisionByZero { span: b.span })
        }
        Expr::Pow(base, exponent) => {
            let e = eval_int(exponent, binding)?;
            if e < 0 {
                return Err(EvalError::NegativeExponent {
                    value: e,
                    span: exponent.span,
                });
            }
            if e > u32::MAX as i64 {
                return Err(EvalError::ExponentOverflow {
                    span: exponent.span,
                });
            }
            Ok(eval(base, binding)?.pow(e as u32))
        }
    }
}
