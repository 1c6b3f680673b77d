//! Text syntax for symbols, e.g. `(0.5+0.1i)*z^3*zbar^1*r^2.5 - 2*r^(1/2)`.
//!
//! `z` and `zbar` take nonnegative integer powers, `r` (meaning |z|) takes a
//! nonnegative rational power. Literals are parsed exactly.

use num_complex::Complex;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{Monomial, RadialSymbol};
use crate::error::{Error, Result};
use crate::scalar::{cx, cx_real, parse_decimal, Rational, Scalar};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Imag(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    pos: usize,
    text: String,
}

fn err(pos: usize, token: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        position: pos,
        token: token.to_string(),
        message: message.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            i += 1;
            out.push(Token {
                tok,
                pos: start,
                text: c.to_string(),
            });
            continue;
        }
        if c.is_ascii_digit() || c == '.' {
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                i += 1;
            }
            let text = &src[start..i];
            let value = parse_decimal(text).ok_or_else(|| err(start, text, "malformed number"))?;
            let imaginary = i < bytes.len()
                && bytes[i] == b'i'
                && !(i + 1 < bytes.len()
                    && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_'));
            if imaginary {
                i += 1;
                out.push(Token {
                    tok: Tok::Imag(value),
                    pos: start,
                    text: src[start..i].to_string(),
                });
            } else {
                out.push(Token {
                    tok: Tok::Num(value),
                    pos: start,
                    text: text.to_string(),
                });
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let text = &src[start..i];
            out.push(Token {
                tok: Tok::Ident(text.to_string()),
                pos: start,
                text: text.to_string(),
            });
            continue;
        }
        let ch = src[start..].chars().next().unwrap();
        return Err(err(start, &ch.to_string(), "unexpected character"));
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    idx: usize,
    end: usize,
    param: Option<(&'a str, Complex<Rational>)>,
}

type Sym = RadialSymbol<Rational>;

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.idx).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, String) {
        match self.tokens.get(self.idx) {
            Some(t) => (t.pos, t.text.clone()),
            None => (self.end, "<end>".to_string()),
        }
    }

    fn fail<T>(&self, message: &str) -> Result<T> {
        let (pos, text) = self.here();
        Err(err(pos, &text, message))
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.idx).cloned();
        self.idx += 1;
        t
    }

    fn expr(&mut self) -> Result<Sym> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => {
                self.bump();
            }
            Some(Tok::Minus) => {
                self.bump();
                negate = true;
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate {
            first.scale(&cx_real(Rational::from_int(-1)))
        } else {
            first
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t.scale(&cx_real(Rational::from_int(-1))));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Sym> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.power()?;
                    acc = acc.mul(&rhs);
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let (pos, text) = self.here();
                    let rhs = self.power()?;
                    let c = rhs
                        .as_constant()
                        .ok_or_else(|| err(pos, &text, "can only divide by a constant"))?;
                    if c.norm_sqr().is_zero() {
                        return Err(err(pos, &text, "division by zero"));
                    }
                    acc = acc.scale(&(cx_real(Rational::from_int(1)) / c));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Sym> {
        let (pos, text) = self.here();
        let (base, is_radial) = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let (epos, etext) = self.here();
        let exponent = self.exponent()?;
        if exponent.is_negative() {
            return Err(err(epos, &etext, "negative exponents are not allowed"));
        }
        if is_radial {
            return Sym::monomial(cx_real(Rational::from_int(1)), 0, 0, exponent)
                .map(|s| s.normalize())
                .map_err(|e| err(pos, &text, e.to_string()));
        }
        if !exponent.is_integer() {
            return Err(err(epos, &etext, "only r accepts non-integer exponents"));
        }
        let k = exponent
            .to_integer()
            .to_u32()
            .filter(|k| *k <= 10_000)
            .ok_or_else(|| err(epos, &etext, "exponent too large"))?;
        let mut acc = Sym::constant(cx_real(Rational::from_int(1)));
        for _ in 0..k {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<Rational> {
        match self.bump().map(|t| (t.tok, t.pos, t.text)) {
            Some((Tok::Num(v), _, _)) => Ok(v),
            Some((Tok::LParen, _, _)) => {
                let num = match self.bump().map(|t| t.tok) {
                    Some(Tok::Num(v)) => v,
                    _ => {
                        self.idx -= 1;
                        return self.fail("expected a number in the exponent");
                    }
                };
                let value = if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    match self.bump().map(|t| t.tok) {
                        Some(Tok::Num(d)) if !d.is_zero() => num / d,
                        _ => {
                            self.idx -= 1;
                            return self.fail("expected a nonzero denominator");
                        }
                    }
                } else {
                    num
                };
                match self.bump().map(|t| t.tok) {
                    Some(Tok::RParen) => Ok(value),
                    _ => {
                        self.idx -= 1;
                        self.fail("expected `)`")
                    }
                }
            }
            Some((_, pos, text)) => Err(err(pos, &text, "expected an exponent")),
            None => Err(err(self.end, "<end>", "expected an exponent")),
        }
    }

    fn atom(&mut self) -> Result<(Sym, bool)> {
        let Some(token) = self.bump() else {
            return Err(err(self.end, "<end>", "unexpected end of input"));
        };
        let one = || cx_real(Rational::from_int(1));
        match token.tok {
            Tok::Num(v) => Ok((Sym::constant(cx_real(v)), false)),
            Tok::Imag(v) => Ok((Sym::constant(cx(Rational::from_int(0), v)), false)),
            Tok::LParen => {
                let inner = self.expr()?;
                match self.bump().map(|t| t.tok) {
                    Some(Tok::RParen) => Ok((inner, false)),
                    _ => {
                        self.idx -= 1;
                        self.fail("expected `)`")
                    }
                }
            }
            Tok::Ident(name) => match name.as_str() {
                "z" => Ok((Sym::new(vec![Monomial::analytic(one(), 1)]), false)),
                "zbar" => Ok((Sym::monomial(one(), 0, 1, Rational::from_int(0))?, false)),
                "r" => Ok((Sym::monomial(one(), 0, 0, Rational::from_int(1))?, true)),
                "i" => Ok((
                    Sym::constant(cx(Rational::from_int(0), Rational::from_int(1))),
                    false,
                )),
                other => match &self.param {
                    Some((p, value)) if *p == other => Ok((Sym::constant(value.clone()), false)),
                    _ => Err(err(token.pos, &token.text, "unknown identifier")),
                },
            },
            _ => Err(err(token.pos, &token.text, "unexpected token")),
        }
    }
}

fn run(text: &str, param: Option<(&str, Complex<Rational>)>) -> Result<Sym> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(err(0, "<end>", "empty symbol"));
    }
    let mut parser = Parser {
        tokens,
        idx: 0,
        end: text.len(),
        param,
    };
    let sym = parser.expr()?;
    if parser.idx < parser.tokens.len() {
        return parser.fail("unexpected trailing input");
    }
    Ok(sym.normalize())
}

/// Parses a symbol; the result is normalized.
pub fn parse_symbol(text: &str) -> Result<RadialSymbol<Rational>> {
    run(text, None)
}

/// Parses a symbol template in which the identifier `name` stands for `value`.
pub fn parse_symbol_with_param(
    text: &str,
    name: &str,
    value: Complex<Rational>,
) -> Result<RadialSymbol<Rational>> {
    run(text, Some((name, value)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::ratio(p, d)
    }

    #[test]
    fn parses_documented_example() {
        let phi = parse_symbol("(0.5+0.1i)*z^3*zbar^1*r^2.5").unwrap();
        assert_eq!(phi.len(), 1);
        let m = &phi.terms()[0];
        assert_eq!(m.coeff(), &cx(q(1, 2), q(1, 10)));
        // z^3 zbar folds to z^2 |z|^2
        assert_eq!((m.holo(), m.anti()), (2, 0));
        assert_eq!(m.radial(), &q(9, 2));
    }

    #[test]
    fn rational_exponent_forms_agree() {
        assert_eq!(
            parse_symbol("r^2.5").unwrap(),
            parse_symbol("r^(5/2)").unwrap()
        );
    }

    #[test]
    fn sums_and_differences() {
        let phi = parse_symbol("z + 0.6*r^2 - z").unwrap();
        assert_eq!(phi, parse_symbol("3/5*r^2").unwrap());
        let psi = parse_symbol("-z + 2*z").unwrap();
        assert_eq!(psi, parse_symbol("z").unwrap());
    }

    #[test]
    fn products_distribute() {
        let phi = parse_symbol("r^3*(z^2 + 2*zbar^2)").unwrap();
        assert_eq!(phi, parse_symbol("z^2*r^3 + 2*zbar^2*r^3").unwrap());
    }

    #[test]
    fn parameter_substitution() {
        let phi = parse_symbol_with_param("z^2*r + a*z", "a", cx(q(5, 2), q(0, 1))).unwrap();
        assert_eq!(phi, parse_symbol("z^2*r + 2.5*z").unwrap());
        // `a` inside `zbar` is not the parameter
        assert!(parse_symbol_with_param("zbar", "a", cx(q(1, 1), q(0, 1))).is_ok());
    }

    #[test]
    fn errors_report_position_and_token() {
        match parse_symbol("z + w") {
            Err(Error::Parse {
                position, token, ..
            }) => {
                assert_eq!(position, 4);
                assert_eq!(token, "w");
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_symbol("z^1.5") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_symbol("z*(1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_symbol("z/zbar"), Err(Error::Parse { .. })));
        assert!(matches!(parse_symbol("z/0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_symbol(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_symbol("z $"),
            Err(Error::Parse { position: 2, .. })
        ));
    }
}
