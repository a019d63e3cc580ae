//! The problem file format.
//!
//! ```text
//! field 7
//! vars x,y,z
//! order grevlex
//! polys:
//! x^2 - 1        # comments run to the end of the line
//! x*y - 1
//! ```
//!
//! `order` may be omitted (grevlex). Variables take precedence in
//! declaration order. Expressions use integers, variables, `+`, `-`, `*`,
//! `^` with positive integer exponents, and parentheses, one polynomial per
//! line.

use std::fmt;

use siggb_core::{Polynomial, PrimeField, Ring, TermOrder, TermOrderKind};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemFile {
    pub field: PrimeField,
    pub vars: Vec<String>,
    pub order: TermOrderKind,
    pub polys: Vec<Polynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("duplicate `{0}` section")]
    DuplicateSection(&'static str),
    #[error("missing `{0}` section")]
    MissingSection(&'static str),
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    err(line, ParseErrorKind::Syntax(msg.into()))
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl ProblemFile {
    pub fn ring(&self) -> Ring {
        Ring::new(self.field, self.vars.len(), TermOrder::new(self.order))
    }

    pub fn var_names(&self) -> Vec<&str> {
        self.vars.iter().map(String::as_str).collect()
    }
}

impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = self.ring();
        let names = self.var_names();
        writeln!(f, "field {}", self.field.modulus())?;
        writeln!(f, "vars {}", self.vars.join(","))?;
        writeln!(f, "order {}", self.order.name())?;
        writeln!(f, "polys:")?;
        for p in &self.polys {
            writeln!(f, "{}", ring.render(p, &names))?;
        }
        Ok(())
    }
}

pub fn parse_problem(text: &str) -> Result<ProblemFile, ParseError> {
    let mut field: Option<PrimeField> = None;
    let mut vars: Option<Vec<String>> = None;
    let mut order: Option<TermOrderKind> = None;
    let mut in_polys = false;
    let mut ring: Option<Ring> = None;
    let mut polys = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if in_polys {
            let ring = ring.as_ref().expect("ring built before polys");
            polys.push(parse_expr(
                content,
                ring,
                vars.as_deref().unwrap_or_default(),
                line,
            )?);
            continue;
        }
        let (key, rest) = content
            .split_once(char::is_whitespace)
            .unwrap_or((content, ""));
        let rest = rest.trim();
        match key {
            "field" => {
                if field.is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateSection("field")));
                }
                let p: u64 = rest.parse().map_err(|_| {
                    syntax(
                        line,
                        format!("expected a prime after `field`, found `{rest}`"),
                    )
                })?;
                field =
                    Some(PrimeField::new(p).map_err(|_| err(line, ParseErrorKind::NotPrime(p)))?);
            }
            "vars" => {
                if vars.is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateSection("vars")));
                }
                let names: Vec<String> = rest.split(',').map(|s| s.trim().to_string()).collect();
                for (i, n) in names.iter().enumerate() {
                    if !is_ident(n) {
                        return Err(syntax(line, format!("invalid variable name `{n}`")));
                    }
                    if names[..i].contains(n) {
                        return Err(syntax(line, format!("variable `{n}` declared twice")));
                    }
                }
                vars = Some(names);
            }
            "order" => {
                if order.is_some() {
                    return Err(err(line, ParseErrorKind::DuplicateSection("order")));
                }
                order = Some(
                    TermOrderKind::from_name(rest)
                        .ok_or_else(|| syntax(line, format!("unknown term order `{rest}`")))?,
                );
            }
            "polys:" | "polys" if rest.is_empty() || rest == ":" => {
                let f = field.ok_or(err(line, ParseErrorKind::MissingSection("field")))?;
                let v = vars
                    .as_ref()
                    .ok_or(err(line, ParseErrorKind::MissingSection("vars")))?;
                ring = Some(Ring::new(
                    f,
                    v.len(),
                    TermOrder::new(order.unwrap_or(TermOrderKind::Grevlex)),
                ));
                in_polys = true;
            }
            _ => return Err(syntax(line, format!("unexpected `{key}`"))),
        }
    }
    let last = text.lines().count().max(1);
    if !in_polys {
        return Err(err(last, ParseErrorKind::MissingSection("polys")));
    }
    Ok(ProblemFile {
        field: field.expect("checked at polys"),
        vars: vars.expect("checked at polys"),
        order: order.unwrap_or(TermOrderKind::Grevlex),
        polys,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str, line: usize) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '+' | '-' | '*' | '^' | '(' | ')' => {
                chars.next();
                out.push(match c {
                    '+' => Token::Plus,
                    '-' => Token::Minus,
                    '*' => Token::Star,
                    '^' => Token::Caret,
                    '(' => Token::LParen,
                    _ => Token::RParen,
                });
            }
            c if c.is_ascii_digit() => {
                let mut n = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    n.push(d);
                    chars.next();
                }
                out.push(Token::Int(n));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut n = String::new();
                while let Some(&d) = chars
                    .peek()
                    .filter(|d| d.is_ascii_alphanumeric() || **d == '_')
                {
                    n.push(d);
                    chars.next();
                }
                out.push(Token::Ident(n));
            }
            other => return Err(syntax(line, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct ExprParser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ring: &'a Ring,
    vars: &'a [String],
    line: usize,
}

impl ExprParser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        while let Some(op) = self.peek() {
            let minus = match op {
                Token::Plus => false,
                Token::Minus => true,
                _ => break,
            };
            self.bump();
            let rhs = self.term()?;
            acc = if minus {
                self.ring.sub(&acc, &rhs)
            } else {
                self.ring.add(&acc, &rhs)
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.bump();
            let rhs = self.factor()?;
            acc = self.ring.mul(&acc, &rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                Ok(self.ring.neg(&self.factor()?))
            }
            Some(Token::Plus) => {
                self.bump();
                self.factor()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.bump();
        let e = match self.bump() {
            Some(Token::Int(n)) => n
                .parse::<u32>()
                .ok()
                .filter(|&e| e > 0)
                .ok_or_else(|| syntax(self.line, format!("invalid exponent `{n}`")))?,
            _ => {
                return Err(syntax(
                    self.line,
                    "expected a positive integer exponent after `^`",
                ))
            }
        };
        let mut acc = self.ring.constant(siggb_core::FieldElement::ONE);
        for _ in 0..e {
            acc = self.ring.mul(&acc, &base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.bump() {
            Some(Token::Int(n)) => {
                let f = self.ring.field();
                let p = f.modulus();
                let v = n.bytes().fold(0u64, |acc, d| {
                    ((acc as u128 * 10 + (d - b'0') as u128) % p as u128) as u64
                });
                Ok(self.ring.constant(f.element(v)))
            }
            Some(Token::Ident(name)) => {
                let i =
                    self.vars.iter().position(|v| *v == name).ok_or_else(|| {
                        err(self.line, ParseErrorKind::UnknownVariable(name.clone()))
                    })?;
                Ok(self.ring.var(i))
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(syntax(self.line, "expected `)`")),
                }
            }
            Some(t) => Err(syntax(self.line, format!("unexpected {t:?}"))),
            None => Err(syntax(self.line, "unexpected end of expression")),
        }
    }
}

/// Parses one polynomial expression over `vars`.
pub fn parse_expr(
    s: &str,
    ring: &Ring,
    vars: &[String],
    line: usize,
) -> Result<Polynomial, ParseError> {
    let tokens = tokenize(s, line)?;
    if tokens.is_empty() {
        return Err(syntax(line, "empty expression"));
    }
    let mut p = ExprParser {
        tokens,
        pos: 0,
        ring,
        vars,
        line,
    };
    let out = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(syntax(line, format!("unexpected {t:?} after expression")));
    }
    Ok(out)
}

/// Assembles a problem from already-built polynomials.
pub fn from_parts(
    field: PrimeField,
    vars: Vec<String>,
    order: TermOrderKind,
    polys: Vec<Polynomial>,
) -> ProblemFile {
    debug_assert!(polys
        .iter()
        .flat_map(|p| p.terms())
        .all(|t| t.mono.nvars() == vars.len()));
    ProblemFile {
        field,
        vars,
        order,
        polys,
    }
}
