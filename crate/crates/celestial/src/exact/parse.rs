//! Recursive-descent parser for the catalog expression grammar.
//!
//! Grammar (UTF-8): integer and rational literals (`3`, `5/2`), declared
//! variables, operators `+ - * ^` (with `^` only to nonnegative integer
//! literals), parentheses, and the literals `i` and `sqrt(m)`. Implicit
//! multiplication is not allowed.

use super::element::{Domain, FieldElement};
use super::poly::{Mono, MultiPoly};
use super::{ExactError, ExactResult};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next(&mut self) -> ExactResult<(usize, Tok)> {
        self.skip_ws();
        let start = self.pos;
        if self.pos >= self.src.len() {
            return Ok((start, Tok::End));
        }
        let b = self.src[self.pos];
        let tok = match b {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let mut end = self.pos;
                while end < self.src.len() && self.src[end].is_ascii_digit() {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                self.pos = end;
                return Ok((start, Tok::Int(text.parse::<BigInt>().unwrap())));
            }
            b if b.is_ascii_alphabetic() => {
                let mut end = self.pos;
                while end < self.src.len() && self.src[end].is_ascii_alphanumeric() {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap().to_string();
                self.pos = end;
                return Ok((start, Tok::Ident(text)));
            }
            other => {
                return Err(ExactError::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{}`", other as char),
                })
            }
        };
        self.pos += 1;
        Ok((start, tok))
    }
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    vars: &'a [String],
    dom: Domain,
    /// Largest domain actually required by literals seen so far.
    needed: Domain,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.idx].1
    }

    fn peek_pos(&self) -> usize {
        self.toks[self.idx].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.idx].clone();
        if self.idx + 1 < self.toks.len() {
            self.idx += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> ExactResult<usize> {
        let (pos, got) = self.bump();
        if got == want {
            Ok(pos)
        } else {
            Err(ExactError::Syntax { pos, msg: format!("expected {what}, found {got:?}") })
        }
    }

    fn need(&mut self, dom: Domain, pos: usize) -> ExactResult<()> {
        let joined = self.needed.join(dom)?;
        self.needed = joined;
        if !self.dom.contains(joined) {
            return Err(ExactError::DomainTooSmall { required: joined, found: self.dom });
        }
        let _ = pos;
        Ok(())
    }

    fn zero(&self) -> MultiPoly {
        MultiPoly::zero_named(self.vars.to_vec(), self.dom)
    }

    fn constant(&self, v: FieldElement) -> MultiPoly {
        let mut p = self.zero();
        p.add_term(Mono(vec![0; self.vars.len()]), v);
        p
    }

    fn expr(&mut self) -> ExactResult<MultiPoly> {
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

    fn term(&mut self) -> ExactResult<MultiPoly> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Tok::Star) {
            self.bump();
            acc = acc.mul(&self.factor()?);
        }
        // Adjacent operands without an operator are a grammar violation.
        if matches!(self.peek(), Tok::Int(_) | Tok::Ident(_) | Tok::LParen) {
            return Err(ExactError::Syntax {
                pos: self.peek_pos(),
                msg: "implicit multiplication is not allowed (insert `*`)".into(),
            });
        }
        Ok(acc)
    }

    fn factor(&mut self) -> ExactResult<MultiPoly> {
        if matches!(self.peek(), Tok::Minus) {
            self.bump();
            return Ok(self.factor()?.neg());
        }
        let base = self.primary()?;
        if matches!(self.peek(), Tok::Caret) {
            self.bump();
            let (pos, t) = self.bump();
            match t {
                Tok::Int(n) => {
                    let e: u32 = n.try_into().map_err(|_| ExactError::Syntax {
                        pos,
                        msg: "exponent out of range".into(),
                    })?;
                    return Ok(base.pow(e));
                }
                other => {
                    return Err(ExactError::Syntax {
                        pos,
                        msg: format!("`^` requires a nonnegative integer literal, found {other:?}"),
                    })
                }
            }
        }
        Ok(base)
    }

    fn int_literal(&mut self) -> ExactResult<(usize, BigInt)> {
        let neg = if matches!(self.peek(), Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let (pos, t) = self.bump();
        match t {
            Tok::Int(n) => Ok((pos, if neg { -n } else { n })),
            other => Err(ExactError::Syntax { pos, msg: format!("expected integer, found {other:?}") }),
        }
    }

    fn primary(&mut self) -> ExactResult<MultiPoly> {
        let (pos, t) = self.bump();
        match t {
            Tok::Int(n) => {
                // Optional `/ denominator` forms a rational literal.
                if matches!(self.peek(), Tok::Slash) {
                    self.bump();
                    let (dpos, d) = self.int_literal()?;
                    if d.is_zero() {
                        return Err(ExactError::Syntax { pos: dpos, msg: "zero denominator".into() });
                    }
                    return Ok(self.constant(FieldElement::from_rational(BigRational::new(n, d))));
                }
                Ok(self.constant(FieldElement::from_rational(BigRational::from_integer(n))))
            }
            Tok::Ident(name) if name == "i" => {
                self.need(Domain::Gaussian, pos)?;
                Ok(self.constant(FieldElement::i()))
            }
            Tok::Ident(name) if name == "sqrt" => {
                self.expect(Tok::LParen, "`(` after sqrt")?;
                let (mpos, m) = self.int_literal()?;
                self.expect(Tok::RParen, "`)` closing sqrt")?;
                let m: i64 = m.try_into().map_err(|_| ExactError::Syntax {
                    pos: mpos,
                    msg: "sqrt argument out of range".into(),
                })?;
                let dom = Domain::quad(m)?;
                self.need(dom, pos)?;
                Ok(self.constant(FieldElement::sqrt(m).expect("validated radicand")))
            }
            Tok::Ident(name) => {
                if self.vars.iter().any(|v| v == &name) {
                    MultiPoly::var(
                        &self.vars.iter().map(String::as_str).collect::<Vec<_>>(),
                        &name,
                        self.dom,
                    )
                } else {
                    Err(ExactError::UnknownVariable { pos, name })
                }
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "closing `)`")?;
                Ok(inner)
            }
            other => Err(ExactError::Syntax { pos, msg: format!("unexpected token {other:?}") }),
        }
    }
}

/// Parse `text` to a polynomial over the declared variables in the given
/// coefficient domain. Literals demanding a larger domain are rejected.
pub fn parse_expression(text: &str, vars: &[&str], dom: Domain) -> ExactResult<MultiPoly> {
    let mut lx = Lexer::new(text);
    let mut toks = Vec::new();
    loop {
        let t = lx.next()?;
        let end = matches!(t.1, Tok::End);
        toks.push(t);
        if end {
            break;
        }
    }
    let var_names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    let mut p = Parser { toks, idx: 0, vars: &var_names, dom, needed: Domain::Rational };
    let poly = p.expr()?;
    let (pos, t) = p.bump();
    if !matches!(t, Tok::End) {
        return Err(ExactError::Syntax { pos, msg: format!("trailing input {t:?}") });
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    const XYZW: [&str; 4] = ["x", "y", "z", "w"];

    #[test]
    fn parses_quadric() {
        let p = parse_expression("x^2+y^2+z^2-w^2", &XYZW, Domain::Rational).unwrap();
        assert_eq!(p.num_terms(), 4);
        assert!(p.is_homogeneous());
        assert_eq!(p.total_degree(), 2);
    }

    #[test]
    fn parses_blum_family_form() {
        let p = parse_expression(
            "(y+3*z+w)+t*(x-(-sqrt(6)+4)*z)",
            &["x", "y", "z", "w", "t"],
            Domain::Quad(6),
        )
        .unwrap();
        assert_eq!(p.total_degree(), 2); // t * linear
    }

    #[test]
    fn rejects_implicit_multiplication() {
        let err = parse_expression("2 x", &XYZW, Domain::Rational).unwrap_err();
        assert!(matches!(err, ExactError::Syntax { .. }), "{err}");
    }

    #[test]
    fn rejects_i_under_rational() {
        let err = parse_expression("i*x", &XYZW, Domain::Rational).unwrap_err();
        assert!(matches!(err, ExactError::DomainTooSmall { .. }), "{err}");
    }

    #[test]
    fn rejects_non_squarefree_radicand() {
        let err = parse_expression("sqrt(8)", &XYZW, Domain::Quad(2)).unwrap_err();
        assert!(matches!(err, ExactError::BadRadicand { m: 8 }), "{err}");
    }

    #[test]
    fn rejects_mixed_radicals() {
        let err = parse_expression("sqrt(2)+sqrt(3)", &XYZW, Domain::Quad(2)).unwrap_err();
        assert!(matches!(err, ExactError::MixedRadicals { .. }), "{err}");
    }

    #[test]
    fn print_parse_round_trip() {
        let srcs = [
            "x^2 - 2*x*y + 5/2*w^2",
            "(1/2+3*i)*x^2 - y*z",
            "(4-sqrt(6))*x + (1+2*sqrt(6))*z",
            "x^4 - 4*x^2*w^2 + w^4",
        ];
        for s in srcs {
            let dom = Domain::Quad(6);
            let p = parse_expression(s, &XYZW, dom).unwrap();
            let printed = p.to_string();
            let q = parse_expression(&printed, &XYZW, dom).unwrap();
            assert_eq!(p, q, "round trip failed for `{s}` -> `{printed}`");
        }
    }
}
