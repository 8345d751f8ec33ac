//! Text form of polynomials.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := ("-" | "+") unary | power
//! power  := atom ("^" uint)?
//! atom   := uint | var | "zeta" | "(" expr ")"
//! var    := ("x" | "y" | "z" | "w") uint
//! ```
//!
//! `zeta` is ζₙ; a bare `z` with no subscript is accepted as a synonym.
//! Division is only allowed by nonzero constants, so `1/2*x0` and
//! `x0/(zeta - 1)` are fine but `1/x0` is not.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::cyclotomic::{format_coords, CycField};
use crate::error::{Error, Result};
use crate::multipoly::{Basis, ExpVec, Poly, SparsePoly};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(char, usize),
    Zeta,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: BigInt = text[start..i].parse().expect("digits");
                out.push((start, Tok::Num(v)));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                let word = &text[start..i];
                let dstart = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[dstart..i];
                let tok = match (word, digits.is_empty()) {
                    ("zeta" | "z", true) => Tok::Zeta,
                    ("x" | "y" | "z" | "w", false) => {
                        let idx = digits
                            .parse::<usize>()
                            .map_err(|_| syntax(dstart, format!("subscript too large in `{word}{digits}`")))?;
                        Tok::Var(word.as_bytes()[0] as char, idx)
                    }
                    ("x" | "y" | "w", true) => {
                        return Err(syntax(start, format!("variable `{word}` needs a numeric subscript")))
                    }
                    _ => return Err(syntax(start, format!("unknown identifier `{word}{digits}`"))),
                };
                out.push((start, tok));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(syntax(start, format!("unexpected character `{ch}`")));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

/// Maps a variable token (family letter, subscript, position) to a variable slot.
pub type Resolver<'a> = dyn Fn(char, usize, usize) -> Result<usize> + 'a;

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    field: Arc<CycField>,
    nvars: usize,
    resolve: &'a Resolver<'a>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn constant(&self, c: Vec<Rational>) -> SparsePoly {
        SparsePoly::constant(self.field.clone(), self.nvars, c)
    }

    fn expr(&mut self) -> Result<SparsePoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<SparsePoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc.mul(&self.unary()?);
                }
                Tok::Slash => {
                    self.bump();
                    let pos = self.pos();
                    let d = self.unary()?;
                    let c = constant_value(&d).ok_or_else(|| syntax(pos, "divisor must be a constant"))?;
                    let inv = self.field.inv(&c).ok_or(Error::DivisionByZero)?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<SparsePoly> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<SparsePoly> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Tok::Num(k) => {
                let e = u32::try_from(k).map_err(|_| syntax(pos, "exponent too large"))?;
                Ok(base.pow(e))
            }
            _ => Err(syntax(pos, "expected a nonnegative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<SparsePoly> {
        let pos = self.pos();
        match self.bump() {
            Tok::Num(v) => Ok(self.constant(self.field.rational_coords(Rational::from_bigint(v)))),
            Tok::Zeta => Ok(self.constant(self.field.zeta_coords(1))),
            Tok::Var(fam, idx) => {
                let slot = (self.resolve)(fam, idx, pos)?;
                Ok(SparsePoly::var(self.field.clone(), self.nvars, slot))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.pos();
                match self.bump() {
                    Tok::RParen => Ok(inner),
                    _ => Err(syntax(close, "expected `)`")),
                }
            }
            Tok::End => Err(syntax(pos, "unexpected end of input")),
            t => Err(syntax(pos, format!("unexpected {}", describe(&t)))),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "`+`",
        Tok::Minus => "`-`",
        Tok::Star => "`*`",
        Tok::Slash => "`/`",
        Tok::Caret => "`^`",
        Tok::RParen => "`)`",
        Tok::LParen => "`(`",
        _ => "token",
    }
}

fn constant_value(p: &SparsePoly) -> Option<Vec<Rational>> {
    match p.len() {
        0 => Some(p.field().zero_coords()),
        1 => {
            let (e, c) = p.terms().next()?;
            e.is_zero().then(|| c.to_vec())
        }
        _ => None,
    }
}

/// Parses `text` into a polynomial in `nvars` variables, mapping each
/// variable token through `resolve`.
pub fn parse_sparse(text: &str, field: Arc<CycField>, nvars: usize, resolve: &Resolver<'_>) -> Result<SparsePoly> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, field, nvars, resolve };
    let out = p.expr()?;
    match p.peek() {
        Tok::End => Ok(out),
        t => {
            let msg = format!("unexpected {} after expression", describe(&t.clone()));
            Err(syntax(p.pos(), msg))
        }
    }
}

/// Parses a polynomial in x₀..x_{n−1} or y₀..y_{n−1}.
pub fn parse_poly(text: &str, n: usize, basis: Basis) -> Result<Poly> {
    let field = crate::cyclotomic::field(n)?;
    let want = basis.name().chars().next().unwrap();
    let resolve = |fam: char, idx: usize, pos: usize| -> Result<usize> {
        if fam != want {
            return Err(syntax(pos, format!("variable `{fam}{idx}` is not allowed here; expected {want}-variables")));
        }
        if idx >= n {
            return Err(Error::IndexOutOfRange { name: format!("{fam}{idx}"), pos, limit: n });
        }
        Ok(idx)
    };
    Ok(Poly::from_sparse(basis, parse_sparse(text, field, n, &resolve)?))
}

/// Parses a polynomial whose basis is inferred from the variables used:
/// y-variables select y-space, anything else x-space. Mixing is an error.
pub fn parse_poly_auto(text: &str, n: usize) -> Result<Poly> {
    let toks = lex(text)?;
    let has = |c: char| toks.iter().any(|(_, t)| matches!(t, Tok::Var(f, _) if *f == c));
    let basis = if has('y') && !has('x') { Basis::Y } else { Basis::X };
    parse_poly(text, n, basis)
}

/// Writes a monomial as `x0^2*x3`, or the empty string for the unit monomial.
pub fn format_monomial(exp: &ExpVec, name: &dyn Fn(usize) -> String) -> String {
    let mut parts = Vec::new();
    for (i, &a) in exp.entries().iter().enumerate() {
        match a {
            0 => {}
            1 => parts.push(name(i)),
            _ => parts.push(format!("{}^{a}", name(i))),
        }
    }
    parts.join("*")
}

/// Canonical text of a polynomial, terms in descending graded-lex order.
pub fn print_sparse(p: &SparsePoly, name: &dyn Fn(usize) -> String) -> String {
    let mut out = String::new();
    for (e, c) in p.sorted_terms() {
        let mono = format_monomial(e, name);
        let nonzero: Vec<usize> = (0..c.len()).filter(|&k| !c[k].is_zero()).collect();
        let (neg, coeff) = if nonzero.len() == 1 {
            // a single power of zeta: pull the sign out front
            let k = nonzero[0];
            let mut abs = vec![Rational::ZERO; c.len()];
            abs[k] = c[k].abs();
            (c[k].is_negative(), format_coords(&abs))
        } else {
            (false, format!("({})", format_coords(c)))
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let body = match (mono.is_empty(), coeff.as_str()) {
            (true, _) => coeff,
            (false, "1") => mono,
            (false, _) => format!("{coeff}*{mono}"),
        };
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn print_poly(f: &Poly) -> String {
    let v = f.basis().name();
    print_sparse(f.sparse(), &|i| format!("{v}{i}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{zeta_power, CycElement};
    use proptest::prelude::*;

    fn px(s: &str, n: usize) -> Poly {
        parse_poly(s, n, Basis::X).unwrap()
    }

    #[test]
    fn spec_examples() {
        let a = px("x0^2 - x1^2", 2);
        let b = px("(x0+x1)*(x0-x1)", 2);
        assert_eq!(a, b);
        assert_eq!(a.len(), 2);
        let z = parse_poly("zeta*y0", 4, Basis::Y).unwrap();
        let expected = Poly::monomial(Basis::Y, ExpVec::unit(4, 0), &zeta_power(4, 1).unwrap()).unwrap();
        assert_eq!(z, expected);
        assert_eq!(parse_poly("z*y0", 4, Basis::Y).unwrap(), expected);
    }

    #[test]
    fn printing() {
        assert_eq!(print_poly(&px("x0^2 - x1^2", 2)), "x0^2 - x1^2");
        assert_eq!(print_poly(&px("(zeta - 1)*x0^2 - 3/2*x0*x1 + 2", 6)), "(zeta - 1)*x0^2 - 3/2*x0*x1 + 2");
        assert_eq!(print_poly(&px("-zeta^2*x1", 5)), "-zeta^2*x1");
        assert_eq!(print_poly(&px("x0 - x0", 3)), "0");
        assert_eq!(print_poly(&px("-7/3", 3)), "-7/3");
        // zeta_3^2 = -zeta - 1
        assert_eq!(print_poly(&px("zeta^2", 3)), "(-zeta - 1)");
    }

    #[test]
    fn precedence() {
        assert_eq!(px("-x0^2", 2), px("-(x0^2)", 2));
        assert_eq!(px("2*x0^3/4", 2), px("1/2*x0^3", 2));
        assert_eq!(px("x0/(zeta - 1)", 3), px("x0*(zeta - 1)^2/(zeta^2 - 2*zeta + 1)/(zeta - 1)", 3));
        assert_eq!(px("x0 - x1 - x0", 2), px("-x1", 2));
        assert_eq!(px("  x0\t*\nx1 ", 2), px("x0*x1", 2));
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_poly("x0 + x2", 2, Basis::X),
            Err(Error::IndexOutOfRange { name: "x2".into(), pos: 5, limit: 2 })
        );
        assert!(matches!(parse_poly("x0 +", 2, Basis::X), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse_poly("x0 ) ", 2, Basis::X), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_poly("(x0", 2, Basis::X), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_poly("x0^-1", 2, Basis::X), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_poly("1/x0", 2, Basis::X), Err(Error::Syntax { pos: 2, .. })));
        assert_eq!(parse_poly("1/(zeta - zeta)", 2, Basis::X), Err(Error::DivisionByZero));
        assert!(matches!(parse_poly("x0 % 2", 2, Basis::X), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_poly("foo", 2, Basis::X), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_poly("y0", 2, Basis::X), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_poly("x0 x1", 2, Basis::X), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_poly("", 2, Basis::X), Err(Error::Syntax { pos: 0, .. })));
    }

    #[test]
    fn auto_basis() {
        assert_eq!(parse_poly_auto("y0*y1", 3).unwrap().basis(), Basis::Y);
        assert_eq!(parse_poly_auto("x0", 3).unwrap().basis(), Basis::X);
        assert_eq!(parse_poly_auto("5", 3).unwrap().basis(), Basis::X);
        assert!(parse_poly_auto("x0*y1", 3).is_err());
    }

    #[test]
    fn big_literals() {
        let f = px("123456789012345678901234567890*x0", 1);
        let c = f.coeff(&ExpVec::unit(1, 0));
        assert_eq!(c, CycElement::from_rational(1, "123456789012345678901234567890".parse().unwrap()).unwrap());
        assert_eq!(print_poly(&f), "123456789012345678901234567890*x0");
    }

    type ArbTerm = (Vec<i64>, Vec<(i64, i64)>);

    fn arb_poly() -> impl Strategy<Value = (usize, Vec<ArbTerm>)> {
        (1usize..=7).prop_flat_map(|n| {
            let deg = crate::cyclotomic::euler_phi(n);
            let term = (proptest::collection::vec(0i64..3, n), proptest::collection::vec((-5i64..=5, 1i64..=4), deg));
            (Just(n), proptest::collection::vec(term, 0..6))
        })
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity((n, terms) in arb_poly(), ybasis in any::<bool>()) {
            let basis = if ybasis { Basis::Y } else { Basis::X };
            let field = crate::cyclotomic::field(n).unwrap();
            let mut p = SparsePoly::zero(field, n);
            for (e, cs) in terms {
                let c: Vec<Rational> = cs.into_iter().map(|(a, b)| Rational::new(a, b).unwrap()).collect();
                p.add_term(ExpVec::new(e), &c);
            }
            let f = Poly::from_sparse(basis, p);
            let text = print_poly(&f);
            let g = parse_poly(&text, n, basis).unwrap();
            prop_assert_eq!(&g, &f);
            prop_assert_eq!(print_poly(&g), text);
        }
    }
}
