//! Text syntax shared by polynomials and presentation documents.
//!
//! Polynomials are written in decreasing monomial order as
//! `u11*u11 + 3/2*u12*u21 - 1`; a coefficient of `±1` is elided and the
//! unit word is `1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::{Alphabet, Polynomial, Rational, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        line: usize,
        column: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("{line}:{column}: undeclared symbol `{name}`")]
    Undeclared { line: usize, column: usize, name: String },
    #[error("{line}:{column}: {message}")]
    Invalid { line: usize, column: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    Number(String),
    Plus,
    Minus,
    Star,
    Slash,
    Semi,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Eof,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Ident(s) => write!(f, "`{s}`"),
            TokenKind::Number(s) => write!(f, "`{s}`"),
            TokenKind::Plus => write!(f, "`+`"),
            TokenKind::Minus => write!(f, "`-`"),
            TokenKind::Star => write!(f, "`*`"),
            TokenKind::Slash => write!(f, "`/`"),
            TokenKind::Semi => write!(f, "`;`"),
            TokenKind::Comma => write!(f, "`,`"),
            TokenKind::LParen => write!(f, "`(`"),
            TokenKind::RParen => write!(f, "`)`"),
            TokenKind::LBracket => write!(f, "`[`"),
            TokenKind::RBracket => write!(f, "`]`"),
            TokenKind::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub line: usize,
    pub column: usize,
}

impl Token {
    pub fn syntax_error(&self, expected: &[&str]) -> ParseError {
        ParseError::Syntax {
            line: self.line,
            column: self.column,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.kind.to_string(),
        }
    }

    pub fn invalid(&self, message: impl Into<String>) -> ParseError {
        ParseError::Invalid { line: self.line, column: self.column, message: message.into() }
    }
}

/// Splits text into tokens. `#` starts a comment running to end of line.
pub struct Lexer;

impl Lexer {
    pub fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
        let mut tokens = Vec::new();
        let mut chars = text.chars().peekable();
        let (mut line, mut column) = (1usize, 1usize);
        while let Some(&c) = chars.peek() {
            let (start_line, start_col) = (line, column);
            let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars<'_>>| {
                let c = chars.next();
                if c == Some('\n') {
                    line += 1;
                    column = 1;
                } else {
                    column += 1;
                }
                c
            };
            let kind = match c {
                c if c.is_whitespace() => {
                    bump(&mut chars);
                    continue;
                }
                '#' => {
                    while let Some(&c) = chars.peek() {
                        if c == '\n' {
                            break;
                        }
                        bump(&mut chars);
                    }
                    continue;
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let mut s = String::new();
                    while let Some(&c) = chars.peek() {
                        if c.is_ascii_alphanumeric() || c == '_' {
                            s.push(c);
                            bump(&mut chars);
                        } else {
                            break;
                        }
                    }
                    TokenKind::Ident(s)
                }
                c if c.is_ascii_digit() => {
                    let mut s = String::new();
                    while let Some(&c) = chars.peek() {
                        if c.is_ascii_digit() {
                            s.push(c);
                            bump(&mut chars);
                        } else {
                            break;
                        }
                    }
                    TokenKind::Number(s)
                }
                _ => {
                    bump(&mut chars);
                    match c {
                        '+' => TokenKind::Plus,
                        '-' => TokenKind::Minus,
                        '*' => TokenKind::Star,
                        '/' => TokenKind::Slash,
                        ';' => TokenKind::Semi,
                        ',' => TokenKind::Comma,
                        '(' => TokenKind::LParen,
                        ')' => TokenKind::RParen,
                        '[' => TokenKind::LBracket,
                        ']' => TokenKind::RBracket,
                        other => {
                            return Err(ParseError::Invalid {
                                line: start_line,
                                column: start_col,
                                message: format!("unexpected character `{other}`"),
                            })
                        }
                    }
                }
            };
            tokens.push(Token { kind, line: start_line, column: start_col });
        }
        tokens.push(Token { kind: TokenKind::Eof, line, column });
        Ok(tokens)
    }
}

/// Recursive-descent parser for the polynomial grammar
///
/// ```text
/// poly   := ['+' | '-'] term (('+' | '-') term)*
/// term   := coeff ['*' factor ('*' factor)*] | factor ('*' factor)*
/// coeff  := NUMBER ['/' NUMBER]
/// factor := IDENT | '1'
/// ```
///
/// It stops before the first token that cannot continue the polynomial.
pub struct PolyParser<'a> {
    tokens: &'a [Token],
    pos: usize,
    alphabet: &'a Alphabet,
}

impl<'a> PolyParser<'a> {
    pub fn new(tokens: &'a [Token], pos: usize, alphabet: &'a Alphabet) -> Self {
        PolyParser { tokens, pos, alphabet }
    }

    pub fn position(&self) -> usize {
        self.pos
    }

    fn peek(&self) -> &'a Token {
        &self.tokens[self.pos.min(self.tokens.len() - 1)]
    }

    fn advance(&mut self) -> &'a Token {
        let t = self.peek();
        if self.pos < self.tokens.len() - 1 {
            self.pos += 1;
        }
        t
    }

    pub fn parse(&mut self) -> Result<Polynomial, ParseError> {
        let mut poly = Polynomial::zero();
        let mut sign = match self.peek().kind {
            TokenKind::Minus => {
                self.advance();
                -Rational::one()
            }
            TokenKind::Plus => {
                self.advance();
                Rational::one()
            }
            _ => Rational::one(),
        };
        loop {
            let (c, w) = self.term()?;
            poly.add_term(w, sign * c);
            sign = match self.peek().kind {
                TokenKind::Plus => Rational::one(),
                TokenKind::Minus => -Rational::one(),
                _ => return Ok(poly),
            };
            self.advance();
        }
    }

    fn term(&mut self) -> Result<(Rational, Word), ParseError> {
        let first = self.peek();
        let mut word = Word::one();
        let coeff = match &first.kind {
            TokenKind::Number(digits) => {
                self.advance();
                let mut c = Rational::from_integer(digits.parse::<BigInt>().expect("digits"));
                if self.peek().kind == TokenKind::Slash {
                    self.advance();
                    let t = self.advance();
                    match &t.kind {
                        TokenKind::Number(d) => {
                            let d: BigInt = d.parse().expect("digits");
                            if d.is_zero() {
                                return Err(t.invalid("zero denominator"));
                            }
                            c /= Rational::from_integer(d);
                        }
                        _ => return Err(t.syntax_error(&["number"])),
                    }
                }
                if self.peek().kind != TokenKind::Star {
                    return Ok((c, word));
                }
                self.advance();
                self.factor(&mut word)?;
                c
            }
            TokenKind::Ident(_) => {
                self.factor(&mut word)?;
                Rational::one()
            }
            _ => return Err(first.syntax_error(&["number", "identifier"])),
        };
        while self.peek().kind == TokenKind::Star {
            self.advance();
            self.factor(&mut word)?;
        }
        Ok((coeff, word))
    }

    fn factor(&mut self, word: &mut Word) -> Result<(), ParseError> {
        let t = self.advance();
        match &t.kind {
            TokenKind::Ident(name) => match self.alphabet.lookup(name) {
                Some(g) => {
                    word.push(g);
                    Ok(())
                }
                None => Err(ParseError::Undeclared {
                    line: t.line,
                    column: t.column,
                    name: name.clone(),
                }),
            },
            TokenKind::Number(d) if d == "1" => Ok(()),
            _ => Err(t.syntax_error(&["identifier", "`1`"])),
        }
    }
}

impl Polynomial {
    /// Parses a complete polynomial in canonical syntax.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Polynomial, ParseError> {
        let tokens = Lexer::tokenize(text)?;
        let mut parser = PolyParser::new(&tokens, 0, alphabet);
        let p = parser.parse()?;
        let rest = &tokens[parser.position()];
        if rest.kind != TokenKind::Eof {
            return Err(rest.syntax_error(&["`+`", "`-`", "`*`", "end of input"]));
        }
        Ok(p)
    }
}

/// Canonical rational string: `p` for integers, `p/q` otherwise.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let r = Rational::from_str(s.trim()).ok()?;
    // reject non-canonical spellings such as "2/4" or "3/1"
    (format_rational(&r) == s.trim()).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_roundtrip() {
        let a = Alphabet::matrix(2);
        let p = Polynomial::parse("u11*u11 + u12*u12 - 1", &a).unwrap();
        assert_eq!(p.display(&a).to_string(), "u12*u12 + u11*u11 - 1");
        let q = Polynomial::parse("-3/2*u21 + 2 - u11*1*u22", &a).unwrap();
        assert_eq!(q.display(&a).to_string(), "-u11*u22 - 3/2*u21 + 2");
        assert_eq!(Polynomial::parse("0", &a).unwrap(), Polynomial::zero());
    }

    #[test]
    fn positioned_errors() {
        let a = Alphabet::matrix(2);
        let err = Polynomial::parse("u11 + \n  u33", &a).unwrap_err();
        assert_eq!(err, ParseError::Undeclared { line: 2, column: 3, name: "u33".into() });
        let err = Polynomial::parse("u11 + + u12", &a).unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 1, column: 7, .. }), "{err}");
        assert!(matches!(Polynomial::parse("1/0", &a), Err(ParseError::Invalid { .. })));
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/4"), Some(Rational::new((-3).into(), 4.into())));
        assert_eq!(parse_rational("2/4"), None);
        assert_eq!(format_rational(&Rational::from_integer(5.into())), "5");
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(terms in prop::collection::vec(
            (prop::collection::vec(0usize..4, 0..4), -5i64..=5, 1i64..4), 0..5)) {
            let a = Alphabet::matrix(2);
            let gens: Vec<_> = a.generators().collect();
            let p = Polynomial::from_terms(terms.into_iter().map(|(w, num, den)| (
                Word::from_letters(w.into_iter().map(|i| gens[i]).collect::<Vec<_>>()),
                Rational::new(num.into(), den.into()),
            )));
            let text = p.display(&a).to_string();
            prop_assert_eq!(Polynomial::parse(&text, &a).unwrap(), p);
        }
    }
}
