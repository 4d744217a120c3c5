//! Parser for the expression language used by the command-line tool.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr      = [ "-" ] term { ("+" | "-") term } ;
//! term      = factor { "*" factor } ;
//! factor    = atom [ "^" [ "-" ] integer ] ;
//! atom      = generator | alias | scalar | "(" expr ")"
//!           | "comm" "(" expr "," expr ";" expr ")" ;
//! generator = "B-1" | "B0" | "B1" | "Dd" | "D1" ;
//! alias     = "X" | "Y" | "Z" | "W" | "K" ;
//! scalar    = integer | "[" [ "-" ] integer "]" | "q" | "i" | "mu" ;
//! integer   = digit { digit } ;
//! ```
//!
//! `[n]` is the quantum integer, `K` is the Cartan-like unit `Dd*D1^-1`,
//! and `comm(A,B;p)` is the p-commutator `A*B - p*B*A` (the third argument
//! must evaluate to a scalar). Negative exponents are only accepted on
//! invertible atoms: `Dd`, `D1`, `K`, `q`, `i`, `mu`, and nonzero scalars.
//! In particular the generator spellings `Dd^-1`, `D1^-1`, `K^-1` parse as
//! ordinary powers.

use crate::element::{alias_expand, Alias, Element, Generator};
use qfield::{qint, Scalar};

/// Parse failure with a byte position and message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Gen(Generator),
    Alias(Alias),
    Int(i64),
    Q,
    I,
    Mu,
    Comm,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut pos = 0;
    // Longest-match keywords; "B-1" must precede "B0"/"B1" only in the sense
    // of being tried as a unit so that the '-' is not read as subtraction.
    const KEYWORDS: &[(&str, Tok)] = &[
        ("comm", Tok::Comm),
        ("B-1", Tok::Gen(Generator::Bminus1)),
        ("B0", Tok::Gen(Generator::B0)),
        ("B1", Tok::Gen(Generator::B1)),
        ("Dd", Tok::Gen(Generator::Dd)),
        ("D1", Tok::Gen(Generator::D1)),
        ("X", Tok::Alias(Alias::X)),
        ("Y", Tok::Alias(Alias::Y)),
        ("Z", Tok::Alias(Alias::Z)),
        ("W", Tok::Alias(Alias::W)),
        ("K", Tok::Alias(Alias::Khat)),
        ("mu", Tok::Mu),
        ("q", Tok::Q),
        ("i", Tok::I),
    ];
    'outer: while pos < bytes.len() {
        let c = bytes[pos];
        if c.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        for (kw, tok) in KEYWORDS {
            if input[pos..].starts_with(kw) {
                toks.push((pos, tok.clone()));
                pos += kw.len();
                continue 'outer;
            }
        }
        if c.is_ascii_digit() {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let n: i64 = input[start..pos].parse().map_err(|_| ParseError {
                pos: start,
                msg: "integer literal out of range".into(),
            })?;
            toks.push((start, Tok::Int(n)));
            continue;
        }
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b',' => Tok::Comma,
            b';' => Tok::Semi,
            _ => {
                return Err(ParseError {
                    pos,
                    msg: format!("unexpected character {:?}", c as char),
                })
            }
        };
        toks.push((pos, tok));
        pos += 1;
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            got => Err(ParseError {
                pos,
                msg: format!("expected {want:?}, found {got:?}"),
            }),
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Element, ParseError> {
        let mut acc = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Element, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Element, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let n = match self.bump() {
            Some(Tok::Int(n)) => n,
            _ => return self.err("expected integer exponent"),
        };
        if !neg {
            if n > u32::MAX as i64 {
                return self.err("exponent too large");
            }
            return Ok(base.pow(n as u32));
        }
        match invert(&base) {
            Some(inv) => {
                if n > u32::MAX as i64 {
                    return self.err("exponent too large");
                }
                Ok(inv.pow(n as u32))
            }
            None => self.err("negative exponent on a non-invertible expression"),
        }
    }

    fn atom(&mut self) -> Result<Element, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Gen(g)) => Ok(Element::gen(g)),
            Some(Tok::Alias(a)) => Ok(alias_expand(a)),
            Some(Tok::Int(n)) => Ok(Element::scalar(Scalar::from_int(n))),
            Some(Tok::Q) => Ok(Element::scalar(Scalar::q())),
            Some(Tok::I) => Ok(Element::scalar(Scalar::i())),
            Some(Tok::Mu) => Ok(Element::scalar(Scalar::mu())),
            Some(Tok::LBracket) => {
                let neg = if self.peek() == Some(&Tok::Minus) {
                    self.bump();
                    true
                } else {
                    false
                };
                let n = match self.bump() {
                    Some(Tok::Int(n)) => n,
                    _ => return self.err("expected integer inside [..]"),
                };
                self.expect(Tok::RBracket)?;
                Ok(Element::scalar(qint(if neg { -n } else { n })))
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::Comm) => {
                self.expect(Tok::LParen)?;
                let a = self.expr()?;
                self.expect(Tok::Comma)?;
                let b = self.expr()?;
                self.expect(Tok::Semi)?;
                let p_el = self.expr()?;
                self.expect(Tok::RParen)?;
                let Some(p) = as_scalar(&p_el) else {
                    return Err(ParseError {
                        pos,
                        msg: "third argument of comm(..) must be a scalar".into(),
                    });
                };
                Ok(a.comm(&b, &p))
            }
            got => Err(ParseError {
                pos,
                msg: format!("expected an expression, found {got:?}"),
            }),
        }
    }
}

/// Extracts the scalar value of an element that is a multiple of the empty
/// word, `None` otherwise.
pub fn as_scalar(el: &Element) -> Option<Scalar> {
    if el.is_zero() {
        return Some(Scalar::zero());
    }
    let mut it = el.iter();
    let (w, c) = it.next().unwrap();
    if it.next().is_none() && w.is_empty() {
        Some(c.clone())
    } else {
        None
    }
}

/// Inverts scalars and words of invertible generators; `None` for anything
/// else.
fn invert(el: &Element) -> Option<Element> {
    if let Some(s) = as_scalar(el) {
        return s.try_inv().map(Element::scalar);
    }
    let mut it = el.iter();
    let (w, c) = it.next().unwrap();
    if it.next().is_some() {
        return None;
    }
    let mut inv_word = Vec::with_capacity(w.len());
    for &g in w.iter().rev() {
        let gi = match g {
            Generator::Dd => Generator::DdInv,
            Generator::DdInv => Generator::Dd,
            Generator::D1 => Generator::D1Inv,
            Generator::D1Inv => Generator::D1,
            _ => return None,
        };
        inv_word.push(gi);
    }
    Some(Element::from_word(inv_word).scale(&c.try_inv()?))
}

/// Parses an expression in the grammar above into an [`Element`].
pub fn parse(input: &str) -> Result<Element, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: input.len(),
    };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}
