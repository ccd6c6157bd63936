//! Parsers for the textual element, polynomial, point and matrix formats.
//!
//! Polynomials are `+`/`-` separated monomials built from `*` products and
//! `^` powers of integers, the extension generator `t`, variables
//! `X0..X{n+1}` and parenthesized subexpressions.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::forms::HomogeneousForm;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(u64),
    T,
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' => {
                out.push(Token::Star);
                i += 1
            }
            '^' => {
                out.push(Token::Caret);
                i += 1
            }
            '(' => {
                out.push(Token::LParen);
                i += 1
            }
            ')' => {
                out.push(Token::RParen);
                i += 1
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let v = s.parse().map_err(|_| Error::Syntax(format!("integer `{s}` out of range")))?;
                out.push(Token::Int(v));
            }
            't' => {
                out.push(Token::T);
                i += 1
            }
            'X' | 'x' => {
                let start = i;
                i += 1;
                let ds = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if ds == i {
                    let name: String = chars[start..(i + 1).min(chars.len())].iter().collect();
                    return Err(Error::UnknownVariable(name));
                }
                let s: String = chars[ds..i].iter().collect();
                let v = s.parse().map_err(|_| Error::UnknownVariable(format!("X{s}")))?;
                out.push(Token::Var(v));
            }
            c if c.is_alphabetic() => {
                let start = i;
                while i < chars.len() && chars[i].is_alphanumeric() {
                    i += 1;
                }
                return Err(Error::UnknownVariable(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Syntax(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

/// Monomial as sorted `(variable, exponent)` pairs.
type Mono = Vec<(usize, u32)>;
type Sparse = BTreeMap<Mono, Elem>;

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let mut out: BTreeMap<usize, u32> = a.iter().copied().collect();
    for &(v, e) in b {
        *out.entry(v).or_insert(0) += e;
    }
    out.into_iter().collect()
}

fn sp_add(f: &FieldSpec, a: &mut Sparse, b: &Sparse, sign: Elem) {
    for (m, &c) in b {
        let entry = a.entry(m.clone()).or_insert(Elem::ZERO);
        *entry = f.add(*entry, f.mul(c, sign));
    }
    a.retain(|_, c| !c.is_zero());
}

fn sp_mul(f: &FieldSpec, a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (ma, &ca) in a {
        for (mb, &cb) in b {
            let m = mono_mul(ma, mb);
            let entry = out.entry(m).or_insert(Elem::ZERO);
            *entry = f.add(*entry, f.mul(ca, cb));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn sp_const(c: Elem) -> Sparse {
    let mut s = Sparse::new();
    if !c.is_zero() {
        s.insert(Vec::new(), c);
    }
    s
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    field: &'a FieldSpec,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Sparse> {
        let f = self.field;
        let mut sign = Elem::ONE;
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                sign = f.neg(Elem::ONE);
            }
            Some(Token::Plus) => self.pos += 1,
            _ => {}
        }
        let mut acc = Sparse::new();
        let first = self.term()?;
        sp_add(f, &mut acc, &first, sign);
        loop {
            let sign = match self.peek() {
                Some(Token::Plus) => Elem::ONE,
                Some(Token::Minus) => f.neg(Elem::ONE),
                _ => break,
            };
            self.pos += 1;
            let t = self.term()?;
            sp_add(f, &mut acc, &t, sign);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Sparse> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = sp_mul(self.field, &acc, &rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Sparse> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let e = match self.next() {
                Some(Token::Int(e)) => e,
                other => return Err(Error::Syntax(format!("expected exponent, found {other:?}"))),
            };
            let mut acc = sp_const(Elem::ONE);
            for _ in 0..e {
                acc = sp_mul(self.field, &acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Sparse> {
        let f = self.field;
        match self.next() {
            Some(Token::Int(n)) => Ok(sp_const(f.scalar(n))),
            Some(Token::T) => match f.gen_t() {
                Some(t) => Ok(sp_const(t)),
                None => Err(Error::UnknownVariable("t".into())),
            },
            Some(Token::Var(v)) => {
                let mut s = Sparse::new();
                s.insert(vec![(v, 1)], Elem::ONE);
                Ok(s)
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    other => Err(Error::Syntax(format!("expected `)`, found {other:?}"))),
                }
            }
            other => Err(Error::Syntax(format!("unexpected token {other:?}"))),
        }
    }
}

fn parse_sparse(text: &str, field: &FieldSpec) -> Result<Sparse> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Syntax("empty expression".into()));
    }
    let mut parser = Parser { tokens, pos: 0, field };
    let out = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Syntax(format!("trailing input at token {}", parser.pos)));
    }
    Ok(out)
}

/// Parses a field element (`2`, `t`, `2*t+1`, ...).
pub fn parse_element(text: &str, field: &FieldSpec) -> Result<Elem> {
    let sp = parse_sparse(text, field)?;
    if sp.keys().any(|m| !m.is_empty()) {
        return Err(Error::Syntax(format!("`{text}` is not a field element")));
    }
    Ok(sp.get(&Vec::new()).copied().unwrap_or(Elem::ZERO))
}

/// Parses a homogeneous form. `nvars` defaults to one more than the largest
/// variable index that occurs.
pub fn parse_form(text: &str, field: &FieldSpec, nvars: Option<usize>) -> Result<HomogeneousForm> {
    let sp = parse_sparse(text, field)?;
    let max_var = sp.keys().flat_map(|m| m.iter().map(|&(v, _)| v)).max();
    let nvars = match (nvars, max_var) {
        (Some(n), Some(v)) if v >= n => return Err(Error::UnknownVariable(format!("X{v}"))),
        (Some(n), _) => n,
        (None, Some(v)) => v + 1,
        (None, None) => 1,
    };
    let mut degree = None;
    let mut terms = Vec::new();
    for (m, c) in sp {
        let d: u32 = m.iter().map(|&(_, e)| e).sum();
        if *degree.get_or_insert(d) != d {
            return Err(Error::NotHomogeneous);
        }
        let mut exps = vec![0u16; nvars];
        for (v, e) in m {
            exps[v] = u16::try_from(e).map_err(|_| Error::Syntax("exponent too large".into()))?;
        }
        terms.push((exps, c));
    }
    Ok(HomogeneousForm::from_terms(field.clone(), nvars, degree.unwrap_or(0), terms))
}

/// Comma-separated coordinates.
pub fn parse_point(text: &str, field: &FieldSpec) -> Result<Vec<Elem>> {
    text.split(',').map(|s| parse_element(s.trim(), field)).collect()
}

/// Rows separated by `;`, entries by `,`.
pub fn parse_rows(text: &str, field: &FieldSpec) -> Result<Vec<Vec<Elem>>> {
    text.split(';').map(|row| parse_point(row, field)).collect()
}
