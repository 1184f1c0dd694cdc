use std::fmt;

use crate::algebra::{Alphabet, Lexer, ParseError, PolyParser, Polynomial, Token, TokenKind};
use crate::rewriting::ao_relations;

/// Declared generators of a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generators {
    /// `gens u[n][n];`
    Matrix(usize),
    /// `gens a, b, c;`
    Symbols(Vec<String>),
}

/// A finitely presented algebra in text form:
///
/// ```text
/// gens u[2][2];          # or: gens a, b, c;
/// rel u11*u11 + u12*u12 - 1;
/// preset ao(2);          # declares u[2][2] and adds the A_o(2) relations
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationDoc {
    pub generators: Option<Generators>,
    pub preset: Option<usize>,
    /// Explicit `rel` lines, in order.
    pub relations: Vec<Polynomial>,
    alphabet: Alphabet,
}

impl PresentationDoc {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Preset relations followed by the explicit ones.
    pub fn all_relations(&self) -> Vec<Polynomial> {
        let mut out = Vec::new();
        if self.preset.is_some() {
            out.extend(ao_relations(&self.alphabet).expect("preset dimension").into_iter().map(|r| r.poly));
        }
        out.extend(self.relations.iter().cloned());
        out
    }

    pub fn generator_count(&self) -> usize {
        self.alphabet.len()
    }
}

impl fmt::Display for PresentationDoc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.preset {
            writeln!(f, "preset ao({n});")?;
        } else {
            match &self.generators {
                Some(Generators::Matrix(n)) => writeln!(f, "gens u[{n}][{n}];")?,
                Some(Generators::Symbols(names)) => writeln!(f, "gens {};", names.join(", "))?,
                None => {}
            }
        }
        for rel in &self.relations {
            writeln!(f, "rel {};", rel.display(&self.alphabet))?;
        }
        Ok(())
    }
}

struct DocParser {
    tokens: Vec<Token>,
    pos: usize,
}

impl DocParser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.kind != TokenKind::Eof {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, kind: TokenKind, label: &str) -> Result<Token, ParseError> {
        let t = self.next();
        if t.kind == kind {
            Ok(t)
        } else {
            Err(t.syntax_error(&[label]))
        }
    }

    fn ident(&mut self) -> Result<(Token, String), ParseError> {
        let t = self.next();
        match &t.kind {
            TokenKind::Ident(s) => {
                let s = s.clone();
                Ok((t, s))
            }
            _ => Err(t.syntax_error(&["identifier"])),
        }
    }

    fn number(&mut self) -> Result<(Token, usize), ParseError> {
        let t = self.next();
        match &t.kind {
            TokenKind::Number(s) => {
                let v = s.parse().map_err(|_| t.invalid("number out of range"))?;
                Ok((t, v))
            }
            _ => Err(t.syntax_error(&["number"])),
        }
    }

    fn dimension(&mut self) -> Result<usize, ParseError> {
        let (t, n) = self.number()?;
        if n == 0 || n > 255 {
            return Err(t.invalid("matrix dimension must be between 1 and 255"));
        }
        Ok(n)
    }
}

/// Parses a presentation document; errors carry line and column.
pub fn parse_presentation(text: &str) -> Result<PresentationDoc, ParseError> {
    let mut p = DocParser { tokens: Lexer::tokenize(text)?, pos: 0 };
    let mut doc = PresentationDoc {
        generators: None,
        preset: None,
        relations: Vec::new(),
        alphabet: Alphabet::new(Vec::<String>::new()),
    };
    loop {
        let t = p.peek().clone();
        let keyword = match &t.kind {
            TokenKind::Eof => break,
            TokenKind::Ident(s) => s.clone(),
            _ => return Err(t.syntax_error(&["`gens`", "`rel`", "`preset`"])),
        };
        p.next();
        match keyword.as_str() {
            "gens" | "preset" if doc.generators.is_some() => {
                return Err(t.invalid("generators are already declared"));
            }
            "gens" => {
                let (first_tok, first) = p.ident()?;
                if p.peek().kind == TokenKind::LBracket {
                    if first != "u" {
                        return Err(first_tok.invalid("matrix generators must be named `u`"));
                    }
                    p.next();
                    let rows = p.dimension()?;
                    p.expect(TokenKind::RBracket, "`]`")?;
                    let open = p.expect(TokenKind::LBracket, "`[`")?;
                    let cols = p.dimension()?;
                    p.expect(TokenKind::RBracket, "`]`")?;
                    if rows != cols {
                        return Err(open.invalid("matrix generators must be square"));
                    }
                    doc.generators = Some(Generators::Matrix(rows));
                    doc.alphabet = Alphabet::matrix(rows);
                } else {
                    let mut names = Vec::new();
                    let (mut tok, mut name) = (first_tok, first);
                    loop {
                        if is_keyword(&name) {
                            return Err(tok.invalid(format!("`{name}` is a keyword")));
                        }
                        if names.contains(&name) {
                            return Err(tok.invalid(format!("generator `{name}` declared twice")));
                        }
                        names.push(name);
                        if p.peek().kind != TokenKind::Comma {
                            break;
                        }
                        p.next();
                        (tok, name) = p.ident()?;
                    }
                    doc.alphabet = Alphabet::new(names.clone());
                    doc.generators = Some(Generators::Symbols(names));
                }
            }
            "preset" => {
                let (name_tok, name) = p.ident()?;
                if name != "ao" {
                    return Err(name_tok.invalid(format!("unknown preset `{name}`")));
                }
                p.expect(TokenKind::LParen, "`(`")?;
                let n = p.dimension()?;
                p.expect(TokenKind::RParen, "`)`")?;
                doc.preset = Some(n);
                doc.generators = Some(Generators::Matrix(n));
                doc.alphabet = Alphabet::matrix(n);
            }
            "rel" => {
                let mut poly = PolyParser::new(&p.tokens, p.pos, &doc.alphabet);
                let rel = poly.parse()?;
                p.pos = poly.position();
                doc.relations.push(rel);
            }
            _ => return Err(t.syntax_error(&["`gens`", "`rel`", "`preset`"])),
        }
        p.expect(TokenKind::Semi, "`;`")?;
    }
    Ok(doc)
}

fn is_keyword(s: &str) -> bool {
    matches!(s, "gens" | "rel" | "preset")
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    #[test]
    fn examples() {
        let doc = parse_presentation("preset ao(2);").unwrap();
        assert_eq!(doc.generator_count(), 4);
        assert_eq!(doc.all_relations().len(), 8);

        let doc = parse_presentation("gens a; rel a*a - 1;").unwrap();
        assert_eq!(doc.generator_count(), 1);
        assert_eq!(doc.relations.len(), 1);

        let err = parse_presentation("rel a*a - 1;").unwrap_err();
        assert_eq!(err, ParseError::Undeclared { line: 1, column: 5, name: "a".into() });
    }

    #[test]
    fn matrix_generators() {
        let doc = parse_presentation("gens u[2][2];\nrel u11*u22 - u22*u11;").unwrap();
        assert_eq!(doc.generators, Some(Generators::Matrix(2)));
        assert_eq!(doc.to_string(), "gens u[2][2];\nrel -u22*u11 + u11*u22;\n");
    }

    #[test]
    fn positioned_errors() {
        match parse_presentation("gens a, b;\nrel a*b\n").unwrap_err() {
            ParseError::Syntax { line, column, expected, .. } => {
                assert_eq!((line, column), (3, 1));
                assert!(expected.contains(&"`;`".to_string()), "{expected:?}");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_presentation("gens u[2][3];"), Err(ParseError::Invalid { line: 1, .. })));
        assert!(matches!(parse_presentation("gens a, a;"), Err(ParseError::Invalid { .. })));
        assert!(matches!(parse_presentation("preset so(2);"), Err(ParseError::Invalid { .. })));
        assert!(matches!(parse_presentation("gens a; gens b;"), Err(ParseError::Invalid { line: 1, column: 9, .. })));
        assert!(matches!(parse_presentation("frob;"), Err(ParseError::Syntax { .. })));
    }

    fn document() -> impl Strategy<Value = String> {
        let gens = prop::sample::subsequence(vec!["a", "b", "c", "x1", "y_2"], 1..=5);
        gens.prop_flat_map(|names| {
            let k = names.len();
            let term = (prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]), 1i64..=3, prop::collection::vec(0..k, 0..4));
            let rel = prop::collection::vec(term, 1..4);
            (Just(names), prop::collection::vec(rel, 0..4))
        })
        .prop_map(|(names, rels)| {
            let mut s = format!("gens {};\n", names.join(", "));
            for rel in rels {
                let terms: Vec<String> = rel
                    .iter()
                    .map(|(num, den, letters)| {
                        let mut t = crate::algebra::format_rational(&crate::algebra::Rational::new((*num).into(), (*den).into()));
                        for &l in letters {
                            t.push('*');
                            t.push_str(names[l]);
                        }
                        t
                    })
                    .collect();
                s.push_str(&format!("rel {};\n", terms.join(" + ").replace("+ -", "- ")));
            }
            s
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(text in document()) {
            let doc = parse_presentation(&text).unwrap();
            let printed = doc.to_string();
            let again = parse_presentation(&printed).unwrap();
            prop_assert_eq!(&again, &doc);
            prop_assert_eq!(again.to_string(), printed);
        }

        #[test]
        fn preset_round_trip(n in 1usize..4) {
            let doc = parse_presentation(&format!("preset ao({n});")).unwrap();
            prop_assert_eq!(parse_presentation(&doc.to_string()).unwrap(), doc);
        }
    }
}
