//! A small expression language for rational functions in `t` with integer
//! genus parameters `g`, `g1`, `g2`.
//!
//! The language exists to keep a second, purely textual transcription of the
//! formula catalog ([`catalog`]) and cross-check it against the programmatic
//! builders in [`crate::formulas`], so a transcription slip in either place
//! is caught mechanically.
//!
//! Grammar (whitespace-insensitive, no implicit multiplication):
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := "-" unary | power
//! power  := atom ("^" iatom)?
//! atom   := INT | "t" | "g" | "g1" | "g2" | "(" expr ")"
//! iatom  := INT | "g" | "g1" | "g2" | "(" intexpr ")" | "-" iatom
//! intexpr:= iterm (("+" | "-") iterm)* ;  iterm := iatom ("*" iatom)*
//! ```
//!
//! Exponents live in a separate integer-valued grammar: `t` may never appear
//! inside one (rejected at parse time), and a compound exponent must be
//! parenthesized, as in `(1+t)^(2*g-4)`. `^` binds tighter than unary minus,
//! so `-t^2` is `-(t^2)`.

mod catalog;
mod eval;
mod lexer;
mod parser;

pub use catalog::{
    catalog_crosscheck, exponent_mutations, Catalog, CatalogEntry, CatalogError,
    CrosscheckMismatch, CrosscheckReport, MutatedFormula, DEFAULT_CATALOG_TEXT,
};
pub use eval::{eval, EvalError};
pub use parser::parse;

use std::fmt;
use thiserror::Error;

/// Byte range into the source text, attached to every node for error
/// reporting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

impl SourceSpan {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(start <= end);
        SourceSpan { start, end }
    }

    fn join(self, other: SourceSpan) -> SourceSpan {
        SourceSpan {
            start: self.start.min(other.start),
            end: self.end.max(other.end),
        }
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

/// A genus parameter name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenusParam {
    G,
    G1,
    G2,
}

impl GenusParam {
    pub fn name(self) -> &'static str {
        match self {
            GenusParam::G => "g",
            GenusParam::G1 => "g1",
            GenusParam::G2 => "g2",
        }
    }
}

impl fmt::Display for GenusParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Expression node with its source span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprAst {
    pub node: Expr,
    pub span: SourceSpan,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Var,
    Param(GenusParam),
    Neg(Box<ExprAst>),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Div(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, IntExpr),
}

/// Integer-expression node used for exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntExpr {
    pub node: IntNode,
    pub span: SourceSpan,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntNode {
    Int(i64),
    Param(GenusParam),
    Neg(Box<IntExpr>),
    Add(Box<IntExpr>, Box<IntExpr>),
    Sub(Box<IntExpr>, Box<IntExpr>),
    Mul(Box<IntExpr>, Box<IntExpr>),
}

/// A syntax error with the byte span it occurred at.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("parse error at {span}: {message}")]
pub struct ParseError {
    pub span: SourceSpan,
    pub message: String,
}

// ---------------------------------------------------------------------------
// canonical rendering
// ---------------------------------------------------------------------------

fn expr_prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Neg(..) => 3,
        Expr::Pow(..) => 4,
        Expr::Int(..) | Expr::Var | Expr::Param(..) => 5,
    }
}

fn render_child(child: &ExprAst, min_prec: u8, out: &mut String) {
    if expr_prec(&child.node) < min_prec {
        out.push('(');
        render_into(child, out);
        out.push(')');
    } else {
        render_into(child, out);
    }
}

fn render_into(ast: &ExprAst, out: &mut String) {
    match &ast.node {
        Expr::Int(n) => out.push_str(&n.to_string()),
        Expr::Var => out.push('t'),
        Expr::Param(p) => out.push_str(p.name()),
        Expr::Neg(inner) => {
            out.push('-');
            render_child(inner, 3, out);
        }
        Expr::Add(a, b) => {
            render_child(a, 1, out);
            out.push_str(" + ");
            render_child(b, 2, out);
        }
        Expr::Sub(a, b) => {
            render_child(a, 1, out);
            out.push_str(" - ");
            render_child(b, 2, out);
        }
        Expr::Mul(a, b) => {
            render_child(a, 2, out);
            out.push('*');
            render_child(b, 3, out);
        }
        Expr::Div(a, b) => {
            render_child(a, 2, out);
            out.push('/');
            render_child(b, 3, out);
        }
        Expr::Pow(base, exp) => {
            render_child(base, 5, out);
            out.push('^');
            match &exp.node {
                IntNode::Int(n) if *n >= 0 => out.push_str(&n.to_string()),
                IntNode::Param(p) => out.push_str(p.name()),
                _ => {
                    out.push('(');
                    render_int_into(exp, out);
                    out.push(')');
                }
            }
        }
    }
}

fn int_prec(e: &IntNode) -> u8 {
    match e {
        IntNode::Add(..) | IntNode::Sub(..) => 1,
        IntNode::Mul(..) => 2,
        IntNode::Neg(..) => 3,
        IntNode::Int(..) | IntNode::Param(..) => 4,
    }
}

fn render_int_child(child: &IntExpr, min_prec: u8, out: &mut String) {
    if int_prec(&child.node) < min_prec {
        out.push('(');
        render_int_into(child, out);
        out.push(')');
    } else {
        render_int_into(child, out);
    }
}

fn render_int_into(ie: &IntExpr, out: &mut String) {
    match &ie.node {
        IntNode::Int(n) => out.push_str(&n.to_string()),
        IntNode::Param(p) => out.push_str(p.name()),
        IntNode::Neg(inner) => {
            out.push('-');
            render_int_child(inner, 3, out);
        }
        IntNode::Add(a, b) => {
            render_int_child(a, 1, out);
            out.push_str(" + ");
            render_int_child(b, 2, out);
        }
        IntNode::Sub(a, b) => {
            render_int_child(a, 1, out);
            out.push_str(" - ");
            render_int_child(b, 2, out);
        }
        IntNode::Mul(a, b) => {
            render_int_child(a, 2, out);
            out.push('*');
            render_int_child(b, 3, out);
        }
    }
}

/// Canonical rendering with minimal parentheses; reparsing the result yields
/// an expression with identical evaluation.
pub fn render(ast: &ExprAst) -> String {
    let mut out = String::new();
    render_into(ast, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::ParamBinding;
    use crate::polyring::Polynomial;
    use crate::ratfunc::RationalFunction;
    use proptest::prelude::*;

    #[test]
    fn parse_structure() {
        let ast = parse("(1+t)^(2*g)").unwrap();
        match ast.node {
            Expr::Pow(base, exp) => {
                assert!(matches!(base.node, Expr::Add(..)));
                assert!(matches!(exp.node, IntNode::Mul(..)));
            }
            other => panic!("unexpected node {:?}", other),
        }
    }

    #[test]
    fn parse_errors() {
        // unclosed parenthesis reported at the opening paren
        let err = parse("t^(g").unwrap_err();
        assert_eq!(err.span, SourceSpan::new(2, 3));

        assert!(parse("").unwrap_err().message.contains("empty"));
        assert!(parse("t^(2*t)").unwrap_err().message.contains("exponent"));
        assert!(parse("x + 1").unwrap_err().message.contains("unknown identifier"));
        assert!(parse("1 + ").is_err());
        assert!(parse("(1+t))").is_err());
    }

    #[test]
    fn precedence() {
        let binding = ParamBinding::genus(3);
        let poly = |src: &str| {
            eval(&parse(src).unwrap(), &binding)
                .unwrap()
                .to_polynomial()
                .unwrap()
        };
        // ^ binds tighter than * and unary -
        assert_eq!(poly("2*t^3"), Polynomial::from_int_coeffs(&[0, 0, 0, 2]));
        assert_eq!(poly("-t^2"), Polynomial::from_int_coeffs(&[0, 0, -1]));
        assert_eq!(poly("t^2+1"), Polynomial::from_int_coeffs(&[1, 0, 1]));
        // left associativity of - and /
        assert_eq!(poly("3 - 2 - 1"), Polynomial::zero());
        assert_eq!(
            eval(&parse("8/4/2").unwrap(), &binding).unwrap(),
            RationalFunction::constant(crate::polyring::coeff_int(1))
        );
        // g is usable as an ordinary factor
        assert_eq!(poly("2*g*t"), Polynomial::from_int_coeffs(&[0, 6]));
    }

    #[test]
    fn eval_examples() {
        let b2 = ParamBinding::genus(2);
        let p = eval(&parse("(1+t)^(2*g)").unwrap(), &b2)
            .unwrap()
            .to_polynomial()
            .unwrap();
        assert_eq!(p, Polynomial::from_int_coeffs(&[1, 1]).pow(4));

        // negative exponent after binding
        let err = eval(&parse("t^(g-2)").unwrap(), &ParamBinding::genus(1)).unwrap_err();
        assert!(matches!(err, EvalError::NegativeExponent { value: -1, .. }));

        // unbound parameter
        let err = eval(&parse("g1 + 1").unwrap(), &b2).unwrap_err();
        assert!(matches!(err, EvalError::UnboundParam { .. }));

        // g resolves to g1 + g2 under a pair binding
        let pair = ParamBinding::pair(1, 3);
        let p = eval(&parse("t^(2*g)").unwrap(), &pair).unwrap().to_polynomial().unwrap();
        assert_eq!(p.degree(), Some(8));

        // division by an expression evaluating to zero
        let err = eval(&parse("1/(g-2)").unwrap(), &b2).unwrap_err();
        assert!(matches!(err, EvalError::DivisionByZero { .. }));
    }

    #[test]
    fn render_round_trips_catalog_style_text() {
        for src in [
            "(1+t)^(2*g)",
            "(1+t^3)^(2*g) - t^(2*g)*(1+t)^(2*g)",
            "1/2*(1+t)^(4*g) + 1/2*(1-t^2)^(2*g)",
            "-t^2",
            "t^(-2)",
            "1 - (2 - t)",
        ] {
            let ast = parse(src).unwrap();
            let rendered = render(&ast);
            let reparsed = parse(&rendered)
                .unwrap_or_else(|e| panic!("rendering of `{src}` (`{rendered}`) fails: {e}"));
            let binding = ParamBinding::pair(2, 3);
            let lhs = eval(&ast, &binding);
            let rhs = eval(&reparsed, &binding);
            match (lhs, rhs) {
                (Ok(a), Ok(b)) => assert_eq!(a, b, "on `{src}`"),
                (Err(_), Err(_)) => {}
                other => panic!("round trip changed eval outcome on `{src}`: {other:?}"),
            }
        }
    }

    // random ASTs for the homomorphism and round-trip properties
    fn arb_ast() -> impl Strategy<Value = ExprAst> {
        let span = SourceSpan::new(0, 0);
        let leaf = prop_oneof![
            (0i64..20).prop_map(move |n| ExprAst { node: Expr::Int(n), span }),
            Just(ExprAst { node: Expr::Var, span }),
            Just(ExprAst {
                node: Expr::Param(GenusParam::G1),
                span
            }),
            Just(ExprAst {
                node: Expr::Param(GenusParam::G2),
                span
            }),
        ];
        leaf.prop_recursive(3, 24, 2, move |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(move |(a, b)| ExprAst {
                    node: Expr::Add(Box::new(a), Box::new(b)),
                    span
                }),
                (inner.clone(), inner.clone()).prop_map(move |(a, b)| ExprAst {
                    node: Expr::Sub(Box::new(a), Box::new(b)),
                    span
                }),
                (inner.clone(), inner.clone()).prop_map(move |(a, b)| ExprAst {
                    node: Expr::Mul(Box::new(a), Box::new(b)),
                    span
                }),
                (inner.clone(), inner.clone()).prop_map(move |(a, b)| ExprAst {
                    node: Expr::Div(Box::new(a), Box::new(b)),
                    span
                }),
                inner.clone().prop_map(move |a| ExprAst {
                    node: Expr::Neg(Box::new(a)),
                    span
                }),
                (inner, 0i64..5).prop_map(move |(a, e)| ExprAst {
                    node: Expr::Pow(
                        Box::new(a),
                        IntExpr {
                            node: IntNode::Int(e),
                            span
                        }
                    ),
                    span
                }),
            ]
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn eval_is_a_homomorphism(a in arb_ast(), b in arb_ast()) {
            let binding = ParamBinding::pair(2, 1);
            let span = SourceSpan::new(0, 0);
            let ea = eval(&a, &binding);
            let eb = eval(&b, &binding);
            if let (Ok(ra), Ok(rb)) = (ea, eb) {
                let combos: [(Expr, fn(&RationalFunction, &RationalFunction) -> RationalFunction); 3] = [
                    (Expr::Add(Box::new(a.clone()), Box::new(b.clone())), |x, y| x + y),
                    (Expr::Sub(Box::new(a.clone()), Box::new(b.clone())), |x, y| x - y),
                    (Expr::Mul(Box::new(a.clone()), Box::new(b.clone())), |x, y| x * y),
                ];
                for (node, direct) in combos {
                    let combined = eval(&ExprAst { node, span }, &binding).unwrap();
                    prop_assert_eq!(combined, direct(&ra, &rb));
                }
                let div_node = ExprAst { node: Expr::Div(Box::new(a.clone()), Box::new(b.clone())), span };
                match eval(&div_node, &binding) {
                    Ok(q) => prop_assert_eq!(q, ra.checked_div(&rb).unwrap()),
                    Err(EvalError::DivisionByZero { .. }) => prop_assert!(rb.is_zero()),
                    Err(other) => prop_assert!(false, "unexpected error {:?}", other),
                }
            }
        }

        #[test]
        fn render_reparse_evaluates_identically(a in arb_ast()) {
            let binding = ParamBinding::pair(2, 1);
            let rendered = render(&a);
            let reparsed = parse(&rendered);
            prop_assert!(reparsed.is_ok(), "rendering `{}` does not reparse", rendered);
            let reparsed = reparsed.unwrap();
            match (eval(&a, &binding), eval(&reparsed, &binding)) {
                (Ok(x), Ok(y)) => prop_assert_eq!(x, y, "on `{}`", rendered),
                (Err(_), Err(_)) => {}
                other => prop_assert!(false, "eval outcome changed on `{}`: {:?}", rendered, other),
            }
        }
    }
}
