//! Recursive-descent parser: one token of lookahead, no backtracking.

use super::lexer::{tokenize, Token, TokenKind};
use super::{Expr, ExprAst, GenusParam, IntExpr, IntNode, ParseError, SourceSpan};

/// Parses a complete expression.
pub fn parse(src: &str) -> Result<ExprAst, ParseError> {
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err(ParseError {
            span: SourceSpan::new(0, 0),
            message: "empty expression".to_string(),
        });
    }
    let mut parser = Parser {
        tokens: &tokens,
        pos: 0,
        src_len: src.len(),
    };
    let ast = parser.expr()?;
    if let Some(tok) = parser.peek() {
        return Err(ParseError {
            span: tok.span,
            message: "unexpected trailing input".to_string(),
        });
    }
    Ok(ast)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    src_len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Token> {
        self.tokens.get(self.pos)
    }

    fn advance(&mut self) -> Option<&'a Token> {
        let tok = self.tokens.get(self.pos);
        self.pos += 1;
        tok
    }

    fn eof_span(&self) -> SourceSpan {
        SourceSpan::new(self.src_len, self.src_len)
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.term()?;
        while let Some(tok) = self.peek() {
            let make: fn(Box<ExprAst>, Box<ExprAst>) -> Expr = match tok.kind {
                TokenKind::Plus => Expr::Add,
                TokenKind::Minus => Expr::Sub,
                _ => break,
            };
            self.advance();
            let rhs = self.term()?;
            let span = lhs.span.join(rhs.span);
            lhs = ExprAst {
                node: make(Box::new(lhs), Box::new(rhs)),
                span,
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.unary()?;
        while let Some(tok) = self.peek() {
            let make: fn(Box<ExprAst>, Box<ExprAst>) -> Expr = match tok.kind {
                TokenKind::Star => Expr::Mul,
                TokenKind::Slash => Expr::Div,
                _ => break,
            };
            self.advance();
            let rhs = self.unary()?;
            let span = lhs.span.join(rhs.span);
            lhs = ExprAst {
                node: make(Box::new(lhs), Box::new(rhs)),
                span,
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<ExprAst, ParseError> {
        if let Some(tok) = self.peek() {
            if tok.kind == TokenKind::Minus {
                let minus_span = tok.span;
                self.advance();
                let inner = self.unary()?;
                let span = minus_span.join(inner.span);
                return Ok(ExprAst {
                    node: Expr::Neg(Box::new(inner)),
                    span,
                });
            }
        }
        self.power()
    }

    fn power(&mut self) -> Result<ExprAst, ParseError> {
        let base = self.atom()?;
        if let Some(tok) = self.peek() {
            if tok.kind == TokenKind::Caret {
                self.advance();
                let exponent = self.int_atom()?;
                let span = base.span.join(exponent.span);
                return Ok(ExprAst {
                    node: Expr::Pow(Box::new(base), exponent),
                    span,
                });
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ExprAst, ParseError> {
        let tok = self.advance().ok_or_else(|| ParseError {
            span: self.eof_span(),
            message: "expected a value, found end of input".to_string(),
        })?;
        match &tok.kind {
            TokenKind::Int(n) => Ok(ExprAst {
                node: Expr::Int(*n),
                span: tok.span,
            }),
            TokenKind::Ident(name) => {
                let node = match name.as_str() {
                    "t" => Expr::Var,
                    "g" => Expr::Param(GenusParam::G),
                    "g1" => Expr::Param(GenusParam::G1),
                    "g2" => Expr::Param(GenusParam::G2),
                    other => {
                        return Err(ParseError {
                            span: tok.span,
                            message: format!("unknown identifier `{}`", other),
                        })
                    }
                };
                Ok(ExprAst {
                    node,
                    span: tok.span,
                })
            }
            TokenKind::LParen => {
                let open_span = tok.span;
                let inner = self.expr()?;
                let close = self.expect_rparen(open_span)?;
                Ok(ExprAst {
                    node: inner.node,
                    span: open_span.join(close),
                })
            }
            _ => Err(ParseError {
                span: tok.span,
                message: "expected a value".to_string(),
            }),
        }
    }

    fn expect_rparen(&mut self, open_span: SourceSpan) -> Result<SourceSpan, ParseError> {
        match self.advance() {
            Some(tok) if tok.kind == TokenKind::RParen => Ok(tok.span),
            Some(tok) => Err(ParseError {
                span: tok.span,
                message: "expected `)`".to_string(),
            }),
            None => Err(ParseError {
                span: open_span,
                message: "unclosed parenthesis".to_string(),
            }),
        }
    }

    // exponent grammar ------------------------------------------------------

    fn int_expr(&mut self) -> Result<IntExpr, ParseError> {
        let mut lhs = self.int_term()?;
        while let Some(tok) = self.peek() {
            let make: fn(Box<IntExpr>, Box<IntExpr>) -> IntNode = match tok.kind {
                TokenKind::Plus => IntNode::Add,
                TokenKind::Minus => IntNode::Sub,
                _ => break,
            };
            self.advance();
            let rhs = self.int_term()?;
            let span = lhs.span.join(rhs.span);
            lhs = IntExpr {
                node: make(Box::new(lhs), Box::new(rhs)),
                span,
            };
        }
        Ok(lhs)
    }

    fn int_term(&mut self) -> Result<IntExpr, ParseError> {
        let mut lhs = self.int_atom()?;
        while let Some(tok) = self.peek() {
            if tok.kind != TokenKind::Star {
                break;
            }
            self.advance();
            let rhs = self.int_atom()?;
            let span = lhs.span.join(rhs.span);
            lhs = IntExpr {
                node: IntNode::Mul(Box::new(lhs), Box::new(rhs)),
                span,
            };
        }
        Ok(lhs)
    }

    fn int_atom(&mut self) -> Result<IntExpr, ParseError> {
        let tok = self.advance().ok_or_else(|| ParseError {
            span: self.eof_span(),
            message: "expected an exponent, found end of input".to_string(),
        })?;
        match &tok.kind {
            TokenKind::Int(n) => Ok(IntExpr {
                node: IntNode::Int(*n),
                span: tok.span,
            }),
            TokenKind::Ident(name) => {
                let node = match name.as_str() {
                    "g" => IntNode::Param(GenusParam::G),
                    "g1" => IntNode::Param(GenusParam::G1),
                    "g2" => IntNode::Param(GenusParam::G2),
                    "t" => {
                        return Err(ParseError {
                            span: tok.span,
                            message: "the variable t cannot appear in an exponent".to_string(),
                        })
                    }
                    other => {
                        return Err(ParseError {
                            span: tok.span,
                            message: format!("unknown identifier `{}` in exponent", other),
                        })
                    }
                };
                Ok(IntExpr {
                    node,
                    span: tok.span,
                })
            }
            TokenKind::Minus => {
                let minus_span = tok.span;
                let inner = self.int_atom()?;
                let span = minus_span.join(inner.span);
                Ok(IntExpr {
                    node: IntNode::Neg(Box::new(inner)),
                    span,
                })
            }
            TokenKind::LParen => {
                let open_span = tok.span;
                let inner = self.int_expr()?;
                let close = self.expect_rparen(open_span)?;
                Ok(IntExpr {
                    node: inner.node,
                    span: open_span.join(close),
                })
            }
            _ => Err(ParseError {
                span: tok.span,
                message: "expected an exponent".to_string(),
            }),
        }
    }
}
