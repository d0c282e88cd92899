//! Parser for textual 1-form and polynomial expressions.
//!
//! Grammar (the repository's canonical input format):
//!   expr    := term (('+' | '-') term)*
//!   term    := '-'* product
//!   product := factor ('*' factor)*
//!   factor  := primary ('^' nonneg-integer)?
//!   primary := rational | 'i' | var | 'conj' '(' var ')'
//!            | 'dx' | 'dy' | 'd' '(' ['conj' '('] var [')'] ')'
//!            | '(' expr ')'
//!   var     := 'x' | 'y' | 'z1' | 'z2'
//! Precedence is ^ > * > unary − > binary ±. Rational literals are `a` or
//! `a/b` with integer digits; the imaginary unit is spelled `i`. Exactly one
//! differential symbol may occur per product term.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::ParseError;
use crate::forms::{HoloOneForm, RealPForm};
use crate::poly::{Poly, Poly2, Poly4};
use crate::scalar::GaussianRational;

/// Result of parsing a 1-form: holomorphic when no conjugated symbols occur.
#[derive(Clone, Debug, PartialEq)]
pub enum ParsedForm {
    Holo(HoloOneForm<GaussianRational>),
    Real(RealPForm),
}

impl ParsedForm {
    pub fn to_real(&self) -> RealPForm {
        match self {
            ParsedForm::Holo(h) => crate::forms::embed_holo(h),
            ParsedForm::Real(r) => r.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                let num: BigInt = digits.parse().expect("digits");
                out.push(Spanned {
                    tok: Tok::Num(BigRational::from_integer(num)),
                    line: tline,
                    col: tcol,
                });
            }
            c if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() {
                        name.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push(Spanned {
                    tok: Tok::Ident(name),
                    line: tline,
                    col: tcol,
                });
            }
            '+' | '-' | '*' | '^' | '(' | ')' | '/' => {
                chars.next();
                col += 1;
                let tok = match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '/' => {
                        // '/' only joins two integer literals into a rational
                        let prev = out.pop().ok_or_else(|| {
                            ParseError::new(tline, tcol, "'/' needs an integer numerator")
                        })?;
                        let numer = match prev.tok {
                            Tok::Num(n) => n,
                            _ => {
                                return Err(ParseError::new(
                                    tline,
                                    tcol,
                                    "'/' is only allowed inside rational literals",
                                ))
                            }
                        };
                        let mut digits = String::new();
                        while let Some(&d) = chars.peek() {
                            if d.is_ascii_digit() {
                                digits.push(d);
                                chars.next();
                                col += 1;
                            } else {
                                break;
                            }
                        }
                        if digits.is_empty() {
                            return Err(ParseError::new(
                                tline,
                                col,
                                "'/' needs an integer denominator",
                            ));
                        }
                        let den: BigInt = digits.parse().expect("digits");
                        if den == BigInt::from(0) {
                            return Err(ParseError::new(tline, tcol, "zero denominator"));
                        }
                        out.push(Spanned {
                            tok: Tok::Num(numer / BigRational::from_integer(den)),
                            line: prev.line,
                            col: prev.col,
                        });
                        continue;
                    }
                    _ => unreachable!(),
                };
                out.push(Spanned {
                    tok,
                    line: tline,
                    col: tcol,
                });
            }
            other => {
                return Err(ParseError::new(
                    line,
                    col,
                    format!("unexpected character '{}'", other),
                ))
            }
        }
    }
    Ok(out)
}

/// A parsed value: a 0-form (polynomial) or a 1-form, in the real frame.
#[derive(Clone, Debug)]
struct Value {
    form: RealPForm,
}

impl Value {
    fn scalar(p: Poly4) -> Self {
        Value {
            form: RealPForm::function(p),
        }
    }

}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> (usize, usize) {
        match self.toks.get(self.pos).or_else(|| self.toks.last()) {
            Some(s) => (s.line, s.col),
            None => (1, 1),
        }
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError::new(line, col, msg)
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        match self.next() {
            Some(s) if s.tok == tok => Ok(()),
            Some(s) => Err(ParseError::new(
                s.line,
                s.col,
                format!("expected {}", what),
            )),
            None => Err(self.err(format!("expected {}, found end of input", what))),
        }
    }

    fn parse_expr(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.parse_term()?;
        while let Some(s) = self.peek() {
            match s.tok {
                Tok::Plus => {
                    self.pos += 1;
                    let rhs = self.parse_term()?;
                    acc = self.add(acc, rhs)?;
                }
                Tok::Minus => {
                    self.pos += 1;
                    let rhs = self.parse_term()?;
                    let rhs = Value {
                        form: rhs.form.neg(),
                    };
                    acc = self.add(acc, rhs)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn add(&self, a: Value, b: Value) -> Result<Value, ParseError> {
        if a.form.degree() != b.form.degree() {
            return Err(self.err("cannot add a polynomial to a 1-form"));
        }
        Ok(Value {
            form: a.form.add(&b.form),
        })
    }

    fn parse_term(&mut self) -> Result<Value, ParseError> {
        let mut negate = false;
        while matches!(self.peek().map(|s| &s.tok), Some(Tok::Minus)) {
            self.pos += 1;
            negate = !negate;
        }
        let v = self.parse_product()?;
        Ok(if negate {
            Value { form: v.form.neg() }
        } else {
            v
        })
    }

    fn parse_product(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.parse_factor()?;
        while matches!(self.peek().map(|s| &s.tok), Some(Tok::Star)) {
            self.pos += 1;
            let rhs = self.parse_factor()?;
            acc = self.mul(acc, rhs)?;
        }
        Ok(acc)
    }

    fn mul(&self, a: Value, b: Value) -> Result<Value, ParseError> {
        match (a.form.degree(), b.form.degree()) {
            (0, 0) => {
                let pa = a.form.coeff(0).cloned().unwrap_or_else(Poly::zero);
                let pb = b.form.coeff(0).cloned().unwrap_or_else(Poly::zero);
                Ok(Value::scalar(pa.mul(&pb)))
            }
            (0, 1) => {
                let pa = a.form.coeff(0).cloned().unwrap_or_else(Poly::zero);
                Ok(Value {
                    form: b.form.mul_poly(&pa),
                })
            }
            (1, 0) => {
                let pb = b.form.coeff(0).cloned().unwrap_or_else(Poly::zero);
                Ok(Value {
                    form: a.form.mul_poly(&pb),
                })
            }
            _ => Err(self.err("a product may contain at most one differential")),
        }
    }

    fn parse_factor(&mut self) -> Result<Value, ParseError> {
        let base = self.parse_primary()?;
        if matches!(self.peek().map(|s| &s.tok), Some(Tok::Caret)) {
            self.pos += 1;
            let exp = match self.next() {
                Some(Spanned {
                    tok: Tok::Num(n),
                    line,
                    col,
                }) => {
                    if !n.is_integer() {
                        return Err(ParseError::new(line, col, "non-integer exponent"));
                    }
                    let v = n.to_integer();
                    if v < BigInt::from(0) {
                        return Err(ParseError::new(line, col, "negative exponent"));
                    }
                    u32::try_from(v.iter_u64_digits().next().unwrap_or(0))
                        .map_err(|_| ParseError::new(line, col, "exponent too large"))?
                }
                _ => return Err(self.err("non-integer exponent")),
            };
            if base.form.degree() != 0 {
                return Err(self.err("cannot raise a differential to a power"));
            }
            let p = base.form.coeff(0).cloned().unwrap_or_else(Poly::zero);
            return Ok(Value::scalar(p.pow(exp)));
        }
        Ok(base)
    }

    fn parse_primary(&mut self) -> Result<Value, ParseError> {
        let s = match self.next() {
            Some(s) => s,
            None => return Err(self.err("unexpected end of input")),
        };
        match s.tok {
            Tok::Num(n) => Ok(Value::scalar(Poly::constant(GaussianRational::from_rational(
                n,
            )))),
            Tok::LParen => {
                let v = self.parse_expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(v)
            }
            Tok::Ident(name) => self.parse_ident(&name, s.line, s.col),
            other => Err(ParseError::new(
                s.line,
                s.col,
                format!("unexpected token {:?}", other),
            )),
        }
    }

    fn parse_ident(&mut self, name: &str, line: usize, col: usize) -> Result<Value, ParseError> {
        match name {
            "i" => Ok(Value::scalar(Poly::constant(GaussianRational::i()))),
            "x" | "z1" => Ok(Value::scalar(Poly::var(0, GaussianRational::one()))),
            "y" | "z2" => Ok(Value::scalar(Poly::var(2, GaussianRational::one()))),
            "dx" => Ok(diff_value(0)),
            "dy" => Ok(diff_value(2)),
            "conj" => {
                self.expect(Tok::LParen, "'(' after conj")?;
                let var = self.parse_var_name()?;
                self.expect(Tok::RParen, "')'")?;
                let idx = match var.as_str() {
                    "x" | "z1" => 1,
                    "y" | "z2" => 3,
                    _ => unreachable!(),
                };
                Ok(Value::scalar(Poly::var(idx, GaussianRational::one())))
            }
            "d" => {
                self.expect(Tok::LParen, "'(' after d")?;
                let inner = match self.next() {
                    Some(Spanned {
                        tok: Tok::Ident(n), ..
                    }) => n,
                    _ => return Err(self.err("expected conj(x), conj(y), x or y inside d(...)")),
                };
                let idx = match inner.as_str() {
                    "conj" => {
                        self.expect(Tok::LParen, "'(' after conj")?;
                        let var = self.parse_var_name()?;
                        self.expect(Tok::RParen, "')'")?;
                        match var.as_str() {
                            "x" | "z1" => 1,
                            "y" | "z2" => 3,
                            _ => unreachable!(),
                        }
                    }
                    "x" | "z1" => 0,
                    "y" | "z2" => 2,
                    "dx" | "dy" => {
                        return Err(ParseError::new(
                            line,
                            col,
                            "differential inside differential",
                        ))
                    }
                    other => {
                        return Err(self.err(format!("cannot differentiate '{}' here", other)))
                    }
                };
                self.expect(Tok::RParen, "')'")?;
                Ok(diff_value(idx))
            }
            other => Err(ParseError::new(
                line,
                col,
                format!("unknown identifier '{}'", other),
            )),
        }
    }

    fn parse_var_name(&mut self) -> Result<String, ParseError> {
        match self.next() {
            Some(Spanned {
                tok: Tok::Ident(n), ..
            }) if matches!(n.as_str(), "x" | "y" | "z1" | "z2") => Ok(n),
            _ => Err(self.err("expected a variable name x, y, z1 or z2")),
        }
    }
}

fn diff_value(frame_index: usize) -> Value {
    Value {
        form: RealPForm::from_terms(
            1,
            vec![(1u8 << frame_index, Poly::constant(GaussianRational::one()))],
        ),
    }
}

fn parse_value(src: &str) -> Result<Value, ParseError> {
    if src.trim().is_empty() {
        return Err(ParseError::new(1, 1, "empty input"));
    }
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0 };
    let v = p.parse_expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input after expression"));
    }
    Ok(v)
}

/// Parse a 1-form. Returns the holomorphic variant when no conjugated
/// symbols occur, otherwise the real variant.
pub fn parse_oneform(src: &str) -> Result<ParsedForm, ParseError> {
    let v = parse_value(src)?;
    if v.form.degree() != 1 {
        return Err(ParseError::new(1, 1, "expression is not a 1-form"));
    }
    // holomorphic iff only dx/dy blades with coefficients free of x̄, ȳ
    let mut holomorphic = true;
    for (blade, coeff) in v.form.terms() {
        if *blade & 0b1010 != 0 {
            holomorphic = false;
            break;
        }
        for (e, _) in coeff.terms() {
            if e.0[1] != 0 || e.0[3] != 0 {
                holomorphic = false;
                break;
            }
        }
    }
    if holomorphic {
        let project = |p: Option<&Poly4>| -> Poly2<GaussianRational> {
            let mut out = Poly::zero();
            if let Some(p) = p {
                for (e, c) in p.terms() {
                    out = out.add(&Poly::monomial(c.clone(), [e.0[0], e.0[2]]));
                }
            }
            out
        };
        let a = project(v.form.coeff(1));
        let b = project(v.form.coeff(4));
        match HoloOneForm::new(a, b) {
            Ok(h) => Ok(ParsedForm::Holo(h)),
            Err(_) => Err(ParseError::new(1, 1, "the zero form is not a 1-form")),
        }
    } else {
        Ok(ParsedForm::Real(v.form))
    }
}

/// Parse a holomorphic polynomial in x, y (no differentials, no conjugation).
pub fn parse_poly(src: &str) -> Result<Poly2<GaussianRational>, ParseError> {
    let v = parse_value(src)?;
    if v.form.degree() != 0 {
        return Err(ParseError::new(1, 1, "expected a polynomial, found a 1-form"));
    }
    let p4 = v.form.coeff(0).cloned().unwrap_or_else(Poly::zero);
    let mut out = Poly::zero();
    for (e, c) in p4.terms() {
        if e.0[1] != 0 || e.0[3] != 0 {
            return Err(ParseError::new(
                1,
                1,
                "conjugated variables are not allowed in a polynomial input",
            ));
        }
        out = out.add(&Poly::monomial(c.clone(), [e.0[0], e.0[2]]));
    }
    Ok(out)
}

/// Canonical text for a parsed form (inverse of `parse_oneform` on canonical
/// output).
pub fn pretty_print(form: &ParsedForm) -> String {
    match form {
        ParsedForm::Holo(h) => h.to_string(),
        ParsedForm::Real(r) => r.to_string(),
    }
}
