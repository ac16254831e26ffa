//! Parser for the plain-text system format.
//!
//! ```text
//! # comments run from '#' to end of line
//! vars: z1 z2
//! F1 = z1^2 - 1/3*z2
//! F2 = (z1 + z2)*z2 - 1
//! ```
//!
//! The first non-empty line declares the variables; every later non-empty
//! line is `<name> = <expr>`. Expressions use `+ - * ^` with non-negative
//! integer exponents and rational literals `a` or `a/b`; there is no implicit
//! multiplication. A unary minus is allowed in front of any factor.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{Exponent, MultiPoly, PolyError, PolyMap};

/// A parsed input system: the map plus the declared names.
#[derive(Clone, Debug)]
pub struct ParsedSystem {
    pub map: PolyMap,
    pub var_names: Vec<String>,
    pub poly_names: Vec<String>,
}

/// Parses a whole system file.
pub fn parse_system(text: &str) -> Result<ParsedSystem, PolyError> {
    let mut var_names: Option<Vec<String>> = None;
    let mut poly_names = Vec::new();
    let mut components = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let body = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if body.trim().is_empty() {
            continue;
        }
        match &var_names {
            None => var_names = Some(parse_header(body, line_no)?),
            Some(vars) => {
                let toks = lex(body, line_no)?;
                let name = match toks.first() {
                    Some((Tok::Ident(s), _)) => s.clone(),
                    Some((t, col)) => {
                        return Err(PolyError::Syntax {
                            line: line_no,
                            col: *col,
                            msg: format!("expected a polynomial name, found {}", describe(t)),
                        })
                    }
                    None => unreachable!("non-empty line lexes to at least one token"),
                };
                match toks.get(1) {
                    Some((Tok::Equals, _)) => {}
                    _ => {
                        return Err(PolyError::Syntax {
                            line: line_no,
                            col: toks.first().map(|t| t.1 + name.len()).unwrap_or(1),
                            msg: "expected '=' after the polynomial name".into(),
                        })
                    }
                }
                let mut p = Parser { toks: &toks[2..], pos: 0, line: line_no, vars };
                let poly = p.expr()?;
                if p.pos != p.toks.len() {
                    return Err(p.err("unexpected trailing input"));
                }
                poly_names.push(name);
                components.push(poly);
            }
        }
    }

    let vars = var_names.ok_or(PolyError::Syntax {
        line: 1,
        col: 1,
        msg: "missing 'vars:' header".into(),
    })?;
    if components.len() != vars.len() {
        return Err(PolyError::ComponentCount { vars: vars.len(), polys: components.len() });
    }
    let map = PolyMap::new(components)?;
    Ok(ParsedSystem { map, var_names: vars, poly_names })
}

/// Parses a single polynomial expression in the given variables.
pub fn parse_poly<S: AsRef<str>>(src: &str, vars: &[S]) -> Result<MultiPoly, PolyError> {
    let names: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
    let toks = lex(src, 1)?;
    let mut p = Parser { toks: &toks, pos: 0, line: 1, vars: &names };
    let poly = p.expr()?;
    if p.pos != toks.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

fn parse_header(body: &str, line_no: usize) -> Result<Vec<String>, PolyError> {
    let chars: Vec<char> = body.chars().collect();
    let lead = chars.iter().take_while(|c| c.is_whitespace()).count();
    let rest: String = chars[lead..].iter().collect();
    if !rest.starts_with("vars:") {
        return Err(PolyError::Syntax {
            line: line_no,
            col: lead + 1,
            msg: "expected 'vars:' header".into(),
        });
    }
    let idents = &rest["vars:".len()..];
    let col0 = lead + "vars:".len() + 1;
    let mut names: Vec<String> = Vec::new();
    let ichars: Vec<char> = idents.chars().collect();
    let mut i = 0;
    while i < ichars.len() {
        if ichars[i].is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        while i < ichars.len() && !ichars[i].is_whitespace() {
            i += 1;
        }
        let w: String = ichars[start..i].iter().collect();
        let col = col0 + start;
        let mut cs = w.chars();
        let ok = cs.next().map(|c| c.is_ascii_alphabetic()).unwrap_or(false)
            && cs.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(PolyError::Syntax {
                line: line_no,
                col,
                msg: format!("invalid identifier '{w}'"),
            });
        }
        if names.contains(&w) {
            return Err(PolyError::Syntax {
                line: line_no,
                col,
                msg: format!("duplicate variable '{w}'"),
            });
        }
        names.push(w);
    }
    if names.is_empty() {
        return Err(PolyError::Syntax {
            line: line_no,
            col: col0,
            msg: "no variables declared".into(),
        });
    }
    Ok(names)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Uint(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Equals,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("identifier '{s}'"),
        Tok::Uint(n) => format!("number {n}"),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Caret => "'^'".into(),
        Tok::Slash => "'/'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::Equals => "'='".into(),
    }
}

/// Tokens paired with their 1-based column.
fn lex(line: &str, line_no: usize) -> Result<Vec<(Tok, usize)>, PolyError> {
    let chars: Vec<char> = line.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            '#' => break,
            _ if c.is_whitespace() => i += 1,
            '+' | '-' | '*' | '^' | '/' | '(' | ')' | '=' => {
                let tok = match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '/' => Tok::Slash,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    _ => Tok::Equals,
                };
                toks.push((tok, col));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let n = digits.parse::<BigInt>().expect("digit run parses");
                toks.push((Tok::Uint(n), col));
            }
            _ if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
            }
            other => {
                return Err(PolyError::Syntax {
                    line: line_no,
                    col,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    line: usize,
    vars: &'a [String],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col_here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|t| t.1)
            .unwrap_or_else(|| self.toks.last().map(|t| t.1 + 1).unwrap_or(1))
    }

    fn err(&self, msg: impl Into<String>) -> PolyError {
        PolyError::Syntax { line: self.line, col: self.col_here(), msg: msg.into() }
    }

    fn expr(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, PolyError> {
        let arity = self.vars.len();
        let Some((tok, col)) = self.toks.get(self.pos).cloned() else {
            return Err(self.err("unexpected end of expression"));
        };
        match tok {
            Tok::Minus => {
                self.pos += 1;
                let f = self.factor()?;
                Ok(-&f)
            }
            Tok::Uint(numer) => {
                self.pos += 1;
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.pos += 1;
                    match self.toks.get(self.pos).cloned() {
                        Some((Tok::Uint(denom), dcol)) => {
                            self.pos += 1;
                            if denom.is_zero() {
                                return Err(PolyError::Syntax {
                                    line: self.line,
                                    col: dcol,
                                    msg: "zero denominator".into(),
                                });
                            }
                            Ok(MultiPoly::constant(arity, BigRational::new(numer, denom)))
                        }
                        _ => Err(self.err("expected an integer denominator after '/'")),
                    }
                } else {
                    Ok(MultiPoly::constant(arity, BigRational::from_integer(numer)))
                }
            }
            Tok::Ident(name) => {
                self.pos += 1;
                let Some(i) = self.vars.iter().position(|v| *v == name) else {
                    return Err(PolyError::Syntax {
                        line: self.line,
                        col,
                        msg: format!("unknown variable '{name}'"),
                    });
                };
                let k = if matches!(self.peek(), Some(Tok::Caret)) {
                    self.pos += 1;
                    match self.toks.get(self.pos).cloned() {
                        Some((Tok::Uint(e), ecol)) => {
                            self.pos += 1;
                            e.to_u32().ok_or(PolyError::Syntax {
                                line: self.line,
                                col: ecol,
                                msg: "exponent too large".into(),
                            })?
                        }
                        _ => return Err(self.err("expected an integer exponent after '^'")),
                    }
                } else {
                    1
                };
                Ok(MultiPoly::monomial(Exponent::axis(arity, i, k), BigRational::one()))
            }
            Tok::LParen => {
                self.pos += 1;
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => Err(self.err("expected ')'")),
                }
            }
            other => Err(PolyError::Syntax {
                line: self.line,
                col,
                msg: format!("expected a factor, found {}", describe(&other)),
            }),
        }
    }
}
