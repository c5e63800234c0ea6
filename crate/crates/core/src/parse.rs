//! Text syntax for fields, field elements, forms and maps.
//!
//! Polynomials accept sums, products, integer powers, parentheses and
//! rational constants such as `1/2`. Variables are `x, y, z, w` or `x0..x9`;
//! over an extension field `t` denotes the generator of the field.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::algebra::{Field, FieldValue};
use crate::error::{Error, Result};
use crate::poly::{HomogeneousPolynomial, Monomial, RationalMap};

const MAX_VARIABLES: usize = 10;
const MAX_EXPONENT: u32 = 256;

/// `Q`, `F<p>` or `F<p>^<k>[,modulus=<c_0>,<c_1>,...,<c_k>]` with modulus
/// coefficients listed from the constant term up.
pub fn parse_field(text: &str) -> Result<Field> {
    let text = text.trim();
    if text == "Q" {
        return Ok(Field::rationals());
    }
    let bad = |message: &str| Error::Parse { position: 0, message: format!("{message} in field `{text}`") };
    let rest = text.strip_prefix('F').ok_or_else(|| bad("expected Q or F<p>"))?;
    let (head, modulus) = match rest.split_once(',') {
        Some((head, tail)) => {
            let list = tail.trim().strip_prefix("modulus=").ok_or_else(|| bad("expected modulus="))?;
            let coeffs = list
                .split(',')
                .map(|c| c.trim().parse::<u64>().map_err(|_| bad("bad modulus coefficient")))
                .collect::<Result<Vec<u64>>>()?;
            (head, Some(coeffs))
        }
        None => (rest, None),
    };
    let (p, k) = match head.split_once('^') {
        Some((p, k)) => (p, k.parse::<usize>().map_err(|_| bad("bad extension degree"))?),
        None => (head, 1),
    };
    let p = p.parse::<u64>().map_err(|_| bad("bad characteristic"))?;
    match modulus {
        Some(m) => {
            if m.len() != k + 1 {
                return Err(Error::InvalidModulus(format!("expected {} coefficients, found {}", k + 1, m.len())));
            }
            Field::extension(p, m)
        }
        None if k == 1 => Field::prime(p),
        None => Field::galois(p, k),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(BigInt),
    Ident(String),
    Symbol(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Token::Number(text[start..i].parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((start, Token::Ident(text[start..i].to_string())));
        } else if "+-*/^()[],".contains(c) {
            out.push((i, Token::Symbol(c)));
            i += 1;
        } else {
            let ch = text[i..].chars().next().unwrap();
            return Err(Error::Parse { position: i, message: format!("unexpected character `{ch}`") });
        }
    }
    Ok(out)
}

/// Sparse polynomial in up to ten variables.
type Sparse = BTreeMap<[u32; MAX_VARIABLES], FieldValue>;

fn sparse_constant(c: FieldValue) -> Sparse {
    let mut p = Sparse::new();
    if !c.is_zero() {
        p.insert([0; MAX_VARIABLES], c);
    }
    p
}

fn sparse_add(a: &Sparse, b: &Sparse, sign: bool) -> Sparse {
    let mut out = a.clone();
    for (m, c) in b {
        let c = if sign { c.clone() } else { -c };
        let sum = match out.get(m) {
            Some(x) => x + &c,
            None => c,
        };
        if sum.is_zero() {
            out.remove(m);
        } else {
            out.insert(*m, sum);
        }
    }
    out
}

fn sparse_mul(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let mut m = *ma;
            for (x, y) in m.iter_mut().zip(mb) {
                *x += y;
            }
            let c = match out.remove(&m) {
                Some(x) => &x + &(ca * cb),
                None => ca * cb,
            };
            if !c.is_zero() {
                out.insert(m, c);
            }
        }
    }
    out
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    field: Field,
    /// Allow `t` for the extension generator.
    generator: Option<FieldValue>,
    /// Allow polynomial variables at all.
    variables: bool,
    /// First position each variable index was seen.
    seen: BTreeMap<usize, (usize, String)>,
}

impl Parser {
    fn new(text: &str, field: Field, variables: bool) -> Result<Self> {
        Ok(Parser {
            tokens: tokenize(text)?,
            pos: 0,
            end: text.len(),
            field,
            generator: field.generator(),
            variables,
            seen: BTreeMap::new(),
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.position(), message: message.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Token::Symbol(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected `{c}`"))
        }
    }

    fn at_end(&self) -> bool {
        self.pos == self.tokens.len()
    }

    fn expression(&mut self) -> Result<Sparse> {
        let mut acc = if self.eat('-') {
            let t = self.term()?;
            sparse_add(&Sparse::new(), &t, false)
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = sparse_add(&acc, &t, true);
            } else if self.eat('-') {
                let t = self.term()?;
                acc = sparse_add(&acc, &t, false);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Token::Number(_) | Token::Ident(_) | Token::Symbol('(')))
    }

    fn term(&mut self) -> Result<Sparse> {
        let mut acc = self.power()?;
        loop {
            // implicit multiplication when no '*'
            if !self.eat('*') && !self.starts_atom() {
                return Ok(acc);
            }
            let f = self.power()?;
            acc = sparse_mul(&acc, &f);
        }
    }

    fn power(&mut self) -> Result<Sparse> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = match self.peek() {
            Some(Token::Number(n)) => n.to_u32().filter(|&e| e <= MAX_EXPONENT),
            _ => return self.error("expected a natural exponent"),
        };
        let Some(e) = e else { return self.error(format!("exponent above {MAX_EXPONENT}")) };
        self.pos += 1;
        let mut acc = sparse_constant(self.field.one());
        for _ in 0..e {
            acc = sparse_mul(&acc, &base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Sparse> {
        let position = self.position();
        match self.peek().cloned() {
            Some(Token::Number(n)) => {
                self.pos += 1;
                if self.eat('/') {
                    let Some(Token::Number(d)) = self.peek().cloned() else {
                        return self.error("expected an integer denominator");
                    };
                    self.pos += 1;
                    let value = self.field.from_ratio(&n, &d).map_err(|_| Error::Parse {
                        position,
                        message: format!("{n}/{d} is not defined in {}", self.field.descriptor()),
                    })?;
                    Ok(sparse_constant(value))
                } else {
                    Ok(sparse_constant(self.field.from_bigint(&n)))
                }
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                if name == "t" {
                    return match &self.generator {
                        Some(g) => Ok(sparse_constant(g.clone())),
                        None => Err(Error::UnknownVariable { name, position }),
                    };
                }
                let index = variable_index(&name).filter(|_| self.variables);
                let Some(index) = index else { return Err(Error::UnknownVariable { name, position }) };
                self.seen.entry(index).or_insert((position, name));
                let mut m = [0; MAX_VARIABLES];
                m[index] = 1;
                Ok(BTreeMap::from([(m, self.field.one())]))
            }
            Some(Token::Symbol('(')) => {
                self.pos += 1;
                let inner = self.expression()?;
                self.expect(')')?;
                Ok(inner)
            }
            _ => self.error("expected a number, variable or `(`"),
        }
    }

    fn check_variables(&self, nvars: usize) -> Result<()> {
        match self.seen.range(nvars..).next() {
            Some((_, (position, name))) => Err(Error::UnknownVariable { name: name.clone(), position: *position }),
            None => Ok(()),
        }
    }
}

fn variable_index(name: &str) -> Option<usize> {
    match name {
        "x" => Some(0),
        "y" => Some(1),
        "z" => Some(2),
        "w" => Some(3),
        _ => {
            let digits = name.strip_prefix('x')?;
            if digits.len() == 1 {
                digits.parse().ok()
            } else {
                None
            }
        }
    }
}

/// Degree of a nonzero sparse polynomial, if homogeneous.
fn homogeneous_degree(p: &Sparse) -> Option<Option<u32>> {
    let mut degrees = p.keys().map(|m| m.iter().sum::<u32>());
    let Some(first) = degrees.next() else { return Some(None) };
    degrees.all(|d| d == first).then_some(Some(first))
}

fn to_form(field: Field, nvars: usize, degree: u32, p: &Sparse) -> Result<HomogeneousPolynomial> {
    HomogeneousPolynomial::from_terms(
        field,
        nvars,
        degree,
        p.iter().map(|(m, c)| (Monomial::new(m[..nvars].to_vec()), c.clone())),
    )
}

/// `[q_0, ..., q_n]` with `n + 1` homogeneous components of one degree.
pub fn parse_map(text: &str, field: Field) -> Result<RationalMap> {
    let mut parser = Parser::new(text, field, true)?;
    parser.expect('[')?;
    let mut components = vec![parser.expression()?];
    while parser.eat(',') {
        components.push(parser.expression()?);
    }
    parser.expect(']')?;
    if !parser.at_end() {
        return parser.error("trailing input");
    }
    if components.len() < 2 {
        return Err(Error::InvalidMap("a map needs at least two components".into()));
    }
    let nvars = components.len();
    if nvars > MAX_VARIABLES {
        return Err(Error::Unsupported(format!("at most {MAX_VARIABLES} components")));
    }
    parser.check_variables(nvars)?;
    let mut degree = None;
    for (component, p) in components.iter().enumerate() {
        match homogeneous_degree(p) {
            None => return Err(Error::InhomogeneousComponent { component }),
            Some(None) => {}
            Some(Some(d)) => match degree {
                None => degree = Some(d),
                Some(e) if e != d => return Err(Error::MixedDegrees),
                _ => {}
            },
        }
    }
    let degree = degree.ok_or(Error::AllZeroComponentVector)?;
    let forms = components.iter().map(|p| to_form(field, nvars, degree, p)).collect::<Result<Vec<_>>>()?;
    RationalMap::new(forms)
}

/// A homogeneous form in `nvars` variables.
pub fn parse_form(text: &str, field: Field, nvars: usize) -> Result<HomogeneousPolynomial> {
    let mut parser = Parser::new(text, field, true)?;
    let p = parser.expression()?;
    if !parser.at_end() {
        return parser.error("trailing input");
    }
    parser.check_variables(nvars)?;
    match homogeneous_degree(&p) {
        None => Err(Error::InhomogeneousComponent { component: 0 }),
        Some(None) => Ok(HomogeneousPolynomial::zero(field, nvars, 0)),
        Some(Some(d)) => to_form(field, nvars, d, &p),
    }
}

/// A field element: a rational constant, or a polynomial in `t` over an
/// extension field.
pub fn parse_element(text: &str, field: Field) -> Result<FieldValue> {
    let mut parser = Parser::new(text, field, false)?;
    let p = parser.expression()?;
    if !parser.at_end() {
        return parser.error("trailing input");
    }
    Ok(p.values().next().cloned().unwrap_or_else(|| field.zero()))
}

/// Inverse of [`parse_map`] on any map.
pub fn print_map(phi: &RationalMap) -> String {
    phi.to_string()
}
