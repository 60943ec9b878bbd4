//! Text form of ring constructions.
//!
//! Grammar (whitespace-insensitive, keywords case-insensitive):
//!
//! ```text
//! spec := atom ('x' atom)*
//! atom := 'Z' int
//!       | 'M' int '(' spec ')' ['@' ('transpose' | 'id')]
//! ```
//!
//! Products associate to the right; the default matrix involution is the
//! transpose, residue rings always carry the identity involution, and
//! products act componentwise.

use crate::ring::{MatrixInvolution, RingSpec};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn expect_char(&mut self, want: char) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{want}', found '{c}'"))),
            None => Err(self.error(format!("expected '{want}', found end of input"))),
        }
    }

    fn integer(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| ParseError {
                position: start,
                message: "integer out of range".to_string(),
            })
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric()) {
            self.bump();
        }
        self.text[start..self.pos].to_ascii_lowercase()
    }

    fn atom(&mut self) -> Result<RingSpec, ParseError> {
        self.skip_ws();
        match self.peek().map(|c| c.to_ascii_lowercase()) {
            Some('z') => {
                self.bump();
                let n = self.integer()?;
                Ok(RingSpec::Zmod(n))
            }
            Some('m') => {
                self.bump();
                let dim = self.integer()?;
                self.expect_char('(')?;
                let base = self.spec()?;
                self.expect_char(')')?;
                self.skip_ws();
                let involution = if self.peek() == Some('@') {
                    self.bump();
                    let at = self.pos;
                    let word = self.ident();
                    word.parse::<MatrixInvolution>().map_err(|_| ParseError {
                        position: at,
                        message: format!(
                            "unknown involution tag '{word}' (expected 'transpose' or 'id')"
                        ),
                    })?
                } else {
                    MatrixInvolution::Transpose
                };
                Ok(RingSpec::Matrix {
                    dim,
                    base: Box::new(base),
                    involution,
                })
            }
            Some(c) => Err(self.error(format!("expected 'Z' or 'M', found '{c}'"))),
            None => Err(self.error("expected a ring atom, found end of input")),
        }
    }

    fn spec(&mut self) -> Result<RingSpec, ParseError> {
        let mut atoms = vec![self.atom()?];
        loop {
            self.skip_ws();
            match self.peek().map(|c| c.to_ascii_lowercase()) {
                Some('x') => {
                    self.bump();
                    atoms.push(self.atom()?);
                }
                _ => break,
            }
        }
        // right-associated product
        let mut spec = atoms.pop().expect("at least one atom");
        while let Some(left) = atoms.pop() {
            spec = RingSpec::Product(Box::new(left), Box::new(spec));
        }
        Ok(spec)
    }
}

pub fn parse_ring_spec(text: &str) -> Result<RingSpec, ParseError> {
    let mut cur = Cursor::new(text);
    let spec = cur.spec()?;
    cur.skip_ws();
    if let Some(c) = cur.peek() {
        return Err(cur.error(format!("unexpected trailing input starting at '{c}'")));
    }
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atoms() {
        assert_eq!(parse_ring_spec("Z6").unwrap(), RingSpec::Zmod(6));
        assert_eq!(parse_ring_spec("  z17 ").unwrap(), RingSpec::Zmod(17));
    }

    #[test]
    fn matrix_with_tags() {
        assert_eq!(
            parse_ring_spec("M2(Z6)@id").unwrap(),
            RingSpec::Matrix {
                dim: 2,
                base: Box::new(RingSpec::Zmod(6)),
                involution: MatrixInvolution::Identity,
            }
        );
        assert_eq!(
            parse_ring_spec("m2 ( z6 ) @ TRANSPOSE").unwrap(),
            RingSpec::Matrix {
                dim: 2,
                base: Box::new(RingSpec::Zmod(6)),
                involution: MatrixInvolution::Transpose,
            }
        );
        // transpose is the default
        assert_eq!(
            parse_ring_spec("M2(Z4)").unwrap(),
            RingSpec::Matrix {
                dim: 2,
                base: Box::new(RingSpec::Zmod(4)),
                involution: MatrixInvolution::Transpose,
            }
        );
    }

    #[test]
    fn products_associate_right() {
        assert_eq!(
            parse_ring_spec("Z2 x Z2 x Z2").unwrap(),
            RingSpec::Product(
                Box::new(RingSpec::Zmod(2)),
                Box::new(RingSpec::Product(
                    Box::new(RingSpec::Zmod(2)),
                    Box::new(RingSpec::Zmod(2)),
                )),
            )
        );
        assert_eq!(
            parse_ring_spec("Z2xM2(Z3)").unwrap().canonical_text(),
            "Z2 x M2(Z3)@transpose"
        );
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_ring_spec("Z6 y Z2").unwrap_err();
        assert_eq!(err.position, 3);
        let err = parse_ring_spec("M2(Z6)@flip").unwrap_err();
        assert!(err.message.contains("flip"));
        let err = parse_ring_spec("Q8").unwrap_err();
        assert!(err.message.contains("expected 'Z' or 'M'"));
        assert!(parse_ring_spec("Z").is_err());
        assert!(parse_ring_spec("M2(Z6").is_err());
        assert!(parse_ring_spec("").is_err());
    }

    #[test]
    fn canonical_text_round_trips() {
        for text in ["Z6", "Z2 x Z4", "M2(Z6)@id", "Z2 x Z2 x Z3", "M2(Z2 x Z3)@transpose"] {
            let spec = parse_ring_spec(text).unwrap();
            assert_eq!(parse_ring_spec(&spec.canonical_text()).unwrap(), spec);
        }
    }
}
