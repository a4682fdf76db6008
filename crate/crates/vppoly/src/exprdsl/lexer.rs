//! Tokenizer for the expression language.

use super::{ParseError, SourceSpan};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: SourceSpan,
}

pub fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let start = i;
        let c = bytes[i];
        let kind = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'+' => {
                i += 1;
                TokenKind::Plus
            }
            b'-' => {
                i += 1;
                TokenKind::Minus
            }
            b'*' => {
                i += 1;
                TokenKind::Star
            }
            b'/' => {
                i += 1;
                TokenKind::Slash
            }
            b'^' => {
                i += 1;
                TokenKind::Caret
            }
            b'(' => {
                i += 1;
                TokenKind::LParen
            }
            b')' => {
                i += 1;
                TokenKind::RParen
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &src[start..i];
                let value = text.parse::<i64>().map_err(|_| ParseError {
                    span: SourceSpan::new(start, i),
                    message: format!("integer literal `{}` is too large", text),
                })?;
                TokenKind::Int(value)
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                TokenKind::Ident(src[start..i].to_string())
            }
            other => {
                return Err(ParseError {
                    span: SourceSpan::new(start, start + 1),
                    message: format!("unexpected character `{}`", other as char),
                })
            }
        };
        tokens.push(Token {
            kind,
            span: SourceSpan::new(start, i),
        });
    }
    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_with_spans() {
        let toks = tokenize("(1+t)^2").unwrap();
        let kinds: Vec<_> = toks.iter().map(|t| t.kind.clone()).collect();
        assert_eq!(
            kinds,
            vec![
                TokenKind::LParen,
                TokenKind::Int(1),
                TokenKind::Plus,
                TokenKind::Ident("t".into()),
                TokenKind::RParen,
                TokenKind::Caret,
                TokenKind::Int(2),
            ]
        );
        assert_eq!(toks[1].span, SourceSpan::new(1, 2));
        assert_eq!(toks[6].span, SourceSpan::new(6, 7));
    }

    #[test]
    fn whitespace_insensitive() {
        assert_eq!(
            tokenize("1 +  t").unwrap().len(),
            tokenize("1+t").unwrap().len()
        );
    }

    #[test]
    fn rejects_stray_characters() {
        assert!(tokenize("1 ? 2").is_err());
    }

    #[test]
    fn rejects_oversized_literal() {
        assert!(tokenize("99999999999999999999").is_err());
    }
}
