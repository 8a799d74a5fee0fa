//! Recursive-descent reader for the coefficient expressions used in input
//! files: integers, the variables, `+ - * / ^`, parentheses, and implicit
//! multiplication such as `2A` or `3(A+B)`.

use num_bigint::BigInt;

use super::poly::{Var, VarSet};
use super::AlgebraError;
use crate::{QPoly, QRatFunc, Rat};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, AlgebraError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, ch) = chars[i];
        match ch {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().map(|(_, c)| c).collect();
                out.push((pos, Tok::Num(text.parse().expect("digits"))));
                continue;
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                let text: String = chars[start..i].iter().map(|(_, c)| c).collect();
                out.push((pos, Tok::Ident(text)));
                continue;
            }
            '+' => out.push((pos, Tok::Plus)),
            '-' | '\u{2212}' => out.push((pos, Tok::Minus)),
            '*' | '\u{b7}' => out.push((pos, Tok::Star)),
            '/' => out.push((pos, Tok::Slash)),
            '^' => out.push((pos, Tok::Caret)),
            '(' => out.push((pos, Tok::LParen)),
            ')' => out.push((pos, Tok::RParen)),
            other => {
                return Err(AlgebraError::Parse {
                    pos,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    resolve: &'a dyn Fn(&str) -> Option<Var>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, AlgebraError> {
        Err(AlgebraError::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<QRatFunc, AlgebraError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<QRatFunc, AlgebraError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.at += 1;
                    let pos = self.pos();
                    let d = self.unary()?;
                    if d.is_zero() {
                        return Err(AlgebraError::Parse {
                            pos,
                            msg: "division by zero".into(),
                        });
                    }
                    acc = &acc / &d;
                }
                Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<QRatFunc, AlgebraError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.at += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<QRatFunc, AlgebraError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.at += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.at += 1;
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| AlgebraError::Parse {
                            pos: self.pos(),
                            msg: "exponent too large".into(),
                        })?;
                    if e > 64 {
                        return self.err("exponent too large");
                    }
                    Ok(base.pow(e))
                }
                _ => self.err("expected a nonnegative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<QRatFunc, AlgebraError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(QRatFunc::constant(Rat::from_integer(n)))
            }
            Some(Tok::Ident(name)) => match (self.resolve)(&name) {
                Some(v) => {
                    self.at += 1;
                    Ok(QRatFunc::var(v))
                }
                None => self.err(format!("unknown variable '{name}'")),
            },
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.at += 1;
                Ok(inner)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse a rational-function expression with a custom variable resolver.
pub fn parse_with(
    src: &str,
    resolve: &dyn Fn(&str) -> Option<Var>,
) -> Result<QRatFunc, AlgebraError> {
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(AlgebraError::Parse {
            pos: 0,
            msg: "empty expression".into(),
        });
    }
    let mut p = Parser {
        toks,
        at: 0,
        end: src.len(),
        resolve,
    };
    let out = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parse a polynomial whose variables must lie in `allowed`; division is
/// only permitted by nonzero constants.
pub fn parse_poly(src: &str, allowed: VarSet) -> Result<QPoly, AlgebraError> {
    let resolve = |name: &str| Var::from_name(name).filter(|v| allowed.contains(*v));
    let r = parse_with(src, &resolve)?;
    r.as_poly().cloned().ok_or_else(|| AlgebraError::Parse {
        pos: 0,
        msg: format!("'{src}' is not a polynomial"),
    })
}

/// Parse a polynomial in the family parameters `A`, `B`.
pub fn parse_param_poly(src: &str) -> Result<QPoly, AlgebraError> {
    parse_poly(src, VarSet::PARAMS)
}

/// Parse a map `g(tau)` of the parameter line. The parameter may be written
/// `t`, `tau` or `τ`; it is stored as the variable `s`.
pub fn parse_tau_function(src: &str) -> Result<QRatFunc, AlgebraError> {
    let resolve = |name: &str| matches!(name, "t" | "tau" | "τ").then_some(Var::S);
    parse_with(src, &resolve)
}

/// Parse an exact rational such as `-1/2`.
pub fn parse_rational(src: &str) -> Result<Rat, AlgebraError> {
    let r = parse_with(src, &|_| None)?;
    r.as_constant().ok_or_else(|| AlgebraError::Parse {
        pos: 0,
        msg: format!("'{src}' is not a rational constant"),
    })
}
