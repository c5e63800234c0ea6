//! Exact scalars over Q, F_p and F_{p^k}.
//!
//! A [`Field`] is an interned, `Copy` handle: two handles compare equal exactly
//! when their descriptors do. Finite-field elements are stored as integers
//! `c_0 + c_1 p + ... + c_{k-1} p^{k-1}` encoding the residue
//! `c_0 + c_1 t + ... + c_{k-1} t^{k-1}` modulo the defining polynomial; for a
//! prime field this is just the residue in `[0, p)`.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::fp_poly;
use crate::error::{Error, Result};

/// Fields with at most this many elements get exp/log tables.
const TABLE_LIMIT: u64 = 1 << 16;

/// Which field a value lives in.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldDescriptor {
    Rationals,
    PrimeField { p: u64 },
    /// `modulus` lists the coefficients of a monic degree-k polynomial,
    /// constant term first, leading 1 last.
    ExtensionField { p: u64, modulus: Vec<u64> },
}

impl FieldDescriptor {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::PrimeField { p } | FieldDescriptor::ExtensionField { p, .. } => *p,
        }
    }

    /// Extension degree over the prime field (1 for Q and F_p).
    pub fn degree(&self) -> usize {
        match self {
            FieldDescriptor::ExtensionField { modulus, .. } => modulus.len() - 1,
            _ => 1,
        }
    }

    pub fn size(&self) -> Option<u128> {
        match self {
            FieldDescriptor::Rationals => None,
            FieldDescriptor::PrimeField { p } => Some(*p as u128),
            FieldDescriptor::ExtensionField { p, modulus } => {
                (*p as u128).checked_pow((modulus.len() - 1) as u32)
            }
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            FieldDescriptor::Rationals => Ok(()),
            FieldDescriptor::PrimeField { p } => {
                if !is_prime(*p) {
                    return Err(Error::NotPrime(*p));
                }
                if *p >= 1 << 62 {
                    return Err(Error::Unsupported("primes above 2^62".into()));
                }
                Ok(())
            }
            FieldDescriptor::ExtensionField { p, modulus } => {
                if !is_prime(*p) {
                    return Err(Error::NotPrime(*p));
                }
                if modulus.len() < 2 {
                    return Err(Error::InvalidModulus("degree must be at least 1".into()));
                }
                if modulus.last() != Some(&1) {
                    return Err(Error::InvalidModulus("modulus must be monic".into()));
                }
                if modulus.iter().any(|&c| c >= *p) {
                    return Err(Error::InvalidModulus("coefficients must lie in [0, p)".into()));
                }
                match self.size() {
                    Some(q) if q < (1u128 << 62) => {}
                    _ => return Err(Error::Unsupported("fields with 2^62 or more elements".into())),
                }
                if !fp_poly::is_irreducible(modulus, *p) {
                    return Err(Error::InvalidModulus(format!(
                        "{} is reducible over F_{p}",
                        format_modulus(modulus)
                    )));
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::PrimeField { p } => write!(f, "F{p}"),
            FieldDescriptor::ExtensionField { p, modulus } => {
                let k = modulus.len() - 1;
                let coeffs: Vec<String> = modulus.iter().map(u64::to_string).collect();
                write!(f, "F{p}^{k},modulus={}", coeffs.join(","))
            }
        }
    }
}

fn format_modulus(modulus: &[u64]) -> String {
    let terms: Vec<String> = modulus
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "t".into(),
            (1, c) => format!("{c}*t"),
            (i, 1) => format!("t^{i}"),
            (i, c) => format!("{c}*t^{i}"),
        })
        .collect();
    terms.join("+")
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors by trial division.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

struct Tables {
    exp: Vec<u64>,
    log: Vec<u32>,
}

struct Finite {
    p: u64,
    k: usize,
    q: u64,
    modulus: Vec<u64>,
    tables: Option<Tables>,
    primitive: OnceLock<u64>,
}

impl Finite {
    fn digits(&self, mut a: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.k);
        for _ in 0..self.k {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    fn undigits(&self, d: &[u64]) -> u64 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            let s = (a % self.p + b % self.p) % self.p;
            out += s * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    fn neg(&self, a: u64) -> u64 {
        if self.k == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        if self.p == 2 {
            return a;
        }
        let d: Vec<u64> = self.digits(a).into_iter().map(|c| (self.p - c) % self.p).collect();
        self.undigits(&d)
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            return fp_poly::mul_mod(a, b, self.p);
        }
        let prod = fp_poly::mul(&self.digits(a), &self.digits(b), self.p);
        let mut r = fp_poly::rem(&prod, &self.modulus, self.p);
        r.resize(self.k, 0);
        self.undigits(&r)
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.k == 1 {
            return fp_poly::mul_mod(a, b, self.p);
        }
        match &self.tables {
            Some(t) => {
                let n = self.q - 1;
                let e = (t.log[a as usize] as u64 + t.log[b as usize] as u64) % n;
                t.exp[e as usize]
            }
            None => self.mul_slow(a, b),
        }
    }

    fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        match &self.tables {
            Some(t) => {
                let n = self.q - 1;
                t.exp[((n - t.log[a as usize] as u64) % n) as usize]
            }
            None => self.pow(a, self.q - 2),
        }
    }

    fn order_is_full(&self, g: u64, factors: &[u64]) -> bool {
        g != 0 && factors.iter().all(|&l| self.pow(g, (self.q - 1) / l) != 1)
    }

    fn find_primitive(&self) -> u64 {
        let factors = prime_factors(self.q - 1);
        (1..self.q)
            .find(|&g| self.order_is_full(g, &factors))
            .expect("multiplicative group of a finite field is cyclic")
    }

    fn build(p: u64, modulus: Vec<u64>) -> Finite {
        let k = modulus.len() - 1;
        let q = p.pow(k as u32);
        let mut f = Finite { p, k, q, modulus, tables: None, primitive: OnceLock::new() };
        if q <= TABLE_LIMIT {
            let g = f.find_primitive();
            let mut exp = Vec::with_capacity((q - 1) as usize);
            let mut log = vec![0u32; q as usize];
            let mut x = 1u64;
            for i in 0..q - 1 {
                exp.push(x);
                log[x as usize] = i as u32;
                x = f.mul_slow(x, g);
            }
            f.tables = Some(Tables { exp, log });
            let _ = f.primitive.set(g);
        }
        f
    }
}

struct FieldData {
    descriptor: FieldDescriptor,
    finite: Option<Finite>,
}

/// Interned handle to a field.
#[derive(Clone, Copy)]
pub struct Field(&'static FieldData);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.0, other.0)
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        (self.0 as *const FieldData).hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.descriptor)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.descriptor)
    }
}

fn registry() -> &'static Mutex<HashMap<FieldDescriptor, &'static FieldData>> {
    static REGISTRY: OnceLock<Mutex<HashMap<FieldDescriptor, &'static FieldData>>> = OnceLock::new();
    REGISTRY.get_or_init(|| Mutex::new(HashMap::new()))
}

impl Field {
    pub fn new(descriptor: FieldDescriptor) -> Result<Field> {
        if let Some(data) = registry().lock().unwrap().get(&descriptor) {
            return Ok(Field(data));
        }
        descriptor.validate()?;
        let finite = match &descriptor {
            FieldDescriptor::Rationals => None,
            FieldDescriptor::PrimeField { p } => Some(Finite::build(*p, vec![0, 1])),
            FieldDescriptor::ExtensionField { p, modulus } => Some(Finite::build(*p, modulus.clone())),
        };
        let mut reg = registry().lock().unwrap();
        let data = reg
            .entry(descriptor.clone())
            .or_insert_with(|| Box::leak(Box::new(FieldData { descriptor, finite })));
        Ok(Field(data))
    }

    pub fn rationals() -> Field {
        Field::new(FieldDescriptor::Rationals).expect("Q is always valid")
    }

    pub fn prime(p: u64) -> Result<Field> {
        Field::new(FieldDescriptor::PrimeField { p })
    }

    pub fn extension(p: u64, modulus: Vec<u64>) -> Result<Field> {
        Field::new(FieldDescriptor::ExtensionField { p, modulus })
    }

    /// F_{p^k} with the default modulus; `k = 1` gives the prime field.
    pub fn galois(p: u64, k: usize) -> Result<Field> {
        if k == 0 {
            return Err(Error::BadParameter("extension degree must be positive".into()));
        }
        if k == 1 {
            return Field::prime(p);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Field::extension(p, fp_poly::first_irreducible(p, k))
    }

    pub fn descriptor(&self) -> &'static FieldDescriptor {
        &self.0.descriptor
    }

    pub fn characteristic(&self) -> u64 {
        self.0.descriptor.characteristic()
    }

    pub fn is_finite(&self) -> bool {
        self.0.finite.is_some()
    }

    pub fn is_rationals(&self) -> bool {
        self.0.finite.is_none()
    }

    /// Number of elements, `None` for Q.
    pub fn size(&self) -> Option<u64> {
        self.0.finite.as_ref().map(|f| f.q)
    }

    /// Extension degree over the prime field.
    pub fn degree(&self) -> usize {
        self.0.finite.as_ref().map_or(1, |f| f.k)
    }

    fn fin(&self) -> Result<&'static Finite> {
        self.0.finite.as_ref().ok_or(Error::InfiniteField)
    }

    pub fn zero(&self) -> FieldValue {
        match self.0.finite {
            Some(_) => FieldValue::fin(*self, 0),
            None => FieldValue::rat(*self, BigRational::zero()),
        }
    }

    pub fn one(&self) -> FieldValue {
        match self.0.finite {
            Some(_) => FieldValue::fin(*self, 1),
            None => FieldValue::rat(*self, BigRational::one()),
        }
    }

    pub fn from_i64(&self, n: i64) -> FieldValue {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldValue {
        match &self.0.finite {
            Some(f) => {
                let r = n.mod_floor(&BigInt::from(f.p));
                FieldValue::fin(*self, r.to_u64().expect("residue fits"))
            }
            None => FieldValue::rat(*self, BigRational::from_integer(n.clone())),
        }
    }

    /// `num / den` coerced into the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<FieldValue> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self.0.finite {
            Some(_) => self.from_bigint(num).checked_div(&self.from_bigint(den)),
            None => Ok(FieldValue::rat(*self, BigRational::new(num.clone(), den.clone()))),
        }
    }

    pub fn from_rational(&self, r: &BigRational) -> Result<FieldValue> {
        self.from_ratio(r.numer(), r.denom())
    }

    /// Finite-field element from its integer encoding.
    pub fn element(&self, index: u64) -> Result<FieldValue> {
        let f = self.fin()?;
        if index >= f.q {
            return Err(Error::BadParameter(format!("element index {index} out of range")));
        }
        Ok(FieldValue::fin(*self, index))
    }

    /// The class of `t` in an extension field (`None` for Q and F_p).
    pub fn generator(&self) -> Option<FieldValue> {
        let f = self.0.finite.as_ref()?;
        if f.k < 2 {
            return None;
        }
        Some(FieldValue::fin(*self, f.p))
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> Result<FieldValue> {
        let f = self.fin()?;
        let g = *f.primitive.get_or_init(|| f.find_primitive());
        Ok(FieldValue::fin(*self, g))
    }

    /// Order of the group of roots of unity: `q - 1`, or 2 for Q.
    pub fn roots_of_unity_count(&self) -> u64 {
        self.0.finite.as_ref().map_or(2, |f| f.q - 1)
    }

    /// A primitive `s`-th root of unity, if the field has one.
    pub fn root_of_unity(&self, s: u64) -> Option<FieldValue> {
        if s == 0 {
            return None;
        }
        match &self.0.finite {
            None => match s {
                1 => Some(self.one()),
                2 => Some(-self.one()),
                _ => None,
            },
            Some(f) => {
                if (f.q - 1) % s != 0 {
                    return None;
                }
                let g = self.primitive_element().ok()?;
                Some(g.pow((f.q - 1) / s))
            }
        }
    }

    /// All elements: 0, 1, then the remaining encodings in increasing order.
    pub fn enumerate(&self) -> Result<Vec<FieldValue>> {
        let f = self.fin()?;
        Ok((0..f.q).map(|i| FieldValue::fin(*self, i)).collect())
    }

    /// The degree-`m` extension F_{q^m} with its default modulus.
    pub fn extension_of_degree(&self, m: usize) -> Result<Field> {
        let f = self.fin()?;
        if m == 1 {
            return Ok(*self);
        }
        Field::galois(f.p, f.k * m)
    }

    /// Field embedding from `self` into `target`.
    pub fn embedding_into(&self, target: Field) -> Result<Embedding> {
        if *self == target {
            return Ok(Embedding { source: *self, target, image_of_t: None });
        }
        let src = self.fin()?;
        let dst = target.fin()?;
        if src.p != dst.p || dst.k % src.k != 0 {
            return Err(Error::DescriptorMismatch);
        }
        if src.k == 1 {
            return Ok(Embedding { source: *self, target, image_of_t: None });
        }
        if dst.q > TABLE_LIMIT {
            return Err(Error::Unsupported("embedding into fields above 2^16 elements".into()));
        }
        // A root of the source modulus in the target field is the image of t.
        let modulus: Vec<FieldValue> = src.modulus.iter().map(|&c| target.element(c)).collect::<Result<_>>()?;
        let root = (0..dst.q)
            .map(|i| FieldValue::fin(target, i))
            .find(|x| {
                modulus
                    .iter()
                    .rev()
                    .fold(target.zero(), |acc, c| &(&acc * x) + c)
                    .is_zero()
            })
            .ok_or(Error::DescriptorMismatch)?;
        Ok(Embedding { source: *self, target, image_of_t: Some(root) })
    }
}

/// A field homomorphism between finite fields of the same characteristic.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: Field,
    target: Field,
    image_of_t: Option<FieldValue>,
}

impl Embedding {
    pub fn target(&self) -> Field {
        self.target
    }

    pub fn apply(&self, x: &FieldValue) -> FieldValue {
        assert_eq!(x.field, self.source, "embedding applied to a foreign value");
        if self.source == self.target {
            return x.clone();
        }
        let idx = x.index().expect("finite source");
        match &self.image_of_t {
            None => FieldValue::fin(self.target, idx),
            Some(t) => {
                let src = self.source.fin().expect("finite source");
                let mut acc = self.target.zero();
                for &c in src.digits(idx).iter().rev() {
                    acc = &(&acc * t) + &FieldValue::fin(self.target, c);
                }
                acc
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Finite(u64),
}

/// An element of a [`Field`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldValue {
    field: Field,
    repr: Repr,
}

/// Binary operation selector for [`field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked arithmetic on two values of the same field.
pub fn field_arith(a: &FieldValue, b: &FieldValue, op: ArithOp) -> Result<FieldValue> {
    if a.field != b.field {
        return Err(Error::DescriptorMismatch);
    }
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

/// All elements of a finite field, zero first and one second.
pub fn enumerate_field(field: Field) -> Result<Vec<FieldValue>> {
    field.enumerate()
}

impl FieldValue {
    fn fin(field: Field, v: u64) -> FieldValue {
        FieldValue { field, repr: Repr::Finite(v) }
    }

    fn rat(field: Field, r: BigRational) -> FieldValue {
        FieldValue { field, repr: Repr::Rational(r) }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rational(r) => r.is_zero(),
            Repr::Finite(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rational(r) => r.is_one(),
            Repr::Finite(v) => *v == 1,
        }
    }

    /// Integer encoding of a finite-field element.
    pub fn index(&self) -> Option<u64> {
        match self.repr {
            Repr::Finite(v) => Some(v),
            Repr::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rational(r) => Some(r),
            Repr::Finite(_) => None,
        }
    }

    pub fn inv(&self) -> Result<FieldValue> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.repr {
            Repr::Rational(r) => FieldValue::rat(self.field, r.recip()),
            Repr::Finite(v) => FieldValue::fin(self.field, self.field.fin().unwrap().inv(*v)),
        })
    }

    pub fn checked_div(&self, rhs: &FieldValue) -> Result<FieldValue> {
        if self.field != rhs.field {
            return Err(Error::DescriptorMismatch);
        }
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u64) -> FieldValue {
        match &self.repr {
            Repr::Rational(r) => {
                let e = i32::try_from(e).expect("exponent fits in i32");
                FieldValue::rat(self.field, r.pow(e))
            }
            Repr::Finite(v) => FieldValue::fin(self.field, self.field.fin().unwrap().pow(*v, e)),
        }
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow_i64(&self, e: i64) -> Result<FieldValue> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// Some `x` with `x^k = self`, or `None` when no such element exists.
    pub fn nth_root(&self, k: u64) -> Result<Option<FieldValue>> {
        if k == 0 {
            return Err(Error::BadParameter("0th root".into()));
        }
        if self.is_zero() || k == 1 {
            return Ok(Some(self.clone()));
        }
        match &self.repr {
            Repr::Rational(r) => Ok(rational_root(r, k).map(|x| FieldValue::rat(self.field, x))),
            Repr::Finite(v) => {
                let f = self.field.fin()?;
                let n = f.q - 1;
                let g = n.gcd(&k);
                if g == 1 {
                    let inv = modinv(k % n, n);
                    return Ok(Some(FieldValue::fin(self.field, f.pow(*v, inv))));
                }
                let Some(t) = &f.tables else {
                    return Err(Error::Unsupported("k-th roots in large fields".into()));
                };
                let e = t.log[*v as usize] as u64;
                if e % g != 0 {
                    return Ok(None);
                }
                let m = n / g;
                let x = if m == 1 { 0 } else { ((e / g) as u128 * modinv((k / g) % m, m) as u128 % m as u128) as u64 };
                Ok(Some(FieldValue::fin(self.field, t.exp[x as usize])))
            }
        }
    }

    /// Map a rational into a finite field (or copy within the same field).
    pub fn coerce_into(&self, target: Field) -> Result<FieldValue> {
        if self.field == target {
            return Ok(self.clone());
        }
        match &self.repr {
            Repr::Rational(r) => target.from_rational(r),
            Repr::Finite(_) => self.field.embedding_into(target).map(|e| e.apply(self)),
        }
    }
}

fn modinv(a: u64, m: u64) -> u64 {
    let e = BigInt::from(a).extended_gcd(&BigInt::from(m));
    e.x.mod_floor(&BigInt::from(m)).to_u64().unwrap()
}

fn rational_root(r: &BigRational, k: u64) -> Option<BigRational> {
    let k32 = u32::try_from(k).ok()?;
    let negative = r.is_negative();
    if negative && k % 2 == 0 {
        return None;
    }
    let root = |n: &BigInt| -> Option<BigInt> {
        let c = n.abs().nth_root(k32);
        (c.pow(k32) == n.abs()).then_some(c)
    };
    let num = root(r.numer())?;
    let den = root(r.denom())?;
    let x = BigRational::new(num, den);
    Some(if negative { -x } else { x })
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a> $tr<&'a FieldValue> for &'a FieldValue {
            type Output = FieldValue;
            fn $method(self, rhs: &'a FieldValue) -> FieldValue {
                assert!(self.field == rhs.field, "field mismatch: {:?} vs {:?}", self.field, rhs.field);
                let f: fn(&FieldValue, &FieldValue) -> FieldValue = $body;
                f(self, rhs)
            }
        }
        impl $tr<FieldValue> for FieldValue {
            type Output = FieldValue;
            fn $method(self, rhs: FieldValue) -> FieldValue {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| match (&a.repr, &b.repr) {
    (Repr::Rational(x), Repr::Rational(y)) => FieldValue::rat(a.field, x + y),
    (Repr::Finite(x), Repr::Finite(y)) => FieldValue::fin(a.field, a.field.fin().unwrap().add(*x, *y)),
    _ => unreachable!(),
});

binop!(Sub, sub, |a, b| match (&a.repr, &b.repr) {
    (Repr::Rational(x), Repr::Rational(y)) => FieldValue::rat(a.field, x - y),
    (Repr::Finite(x), Repr::Finite(y)) => {
        let f = a.field.fin().unwrap();
        FieldValue::fin(a.field, f.add(*x, f.neg(*y)))
    }
    _ => unreachable!(),
});

binop!(Mul, mul, |a, b| match (&a.repr, &b.repr) {
    (Repr::Rational(x), Repr::Rational(y)) => FieldValue::rat(a.field, x * y),
    (Repr::Finite(x), Repr::Finite(y)) => FieldValue::fin(a.field, a.field.fin().unwrap().mul(*x, *y)),
    _ => unreachable!(),
});

impl Neg for &FieldValue {
    type Output = FieldValue;
    fn neg(self) -> FieldValue {
        match &self.repr {
            Repr::Rational(x) => FieldValue::rat(self.field, -x),
            Repr::Finite(x) => FieldValue::fin(self.field, self.field.fin().unwrap().neg(*x)),
        }
    }
}

impl Neg for FieldValue {
    type Output = FieldValue;
    fn neg(self) -> FieldValue {
        -&self
    }
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Repr::Finite(v) => {
                let fin = self.field.fin().unwrap();
                if fin.k == 1 {
                    return write!(f, "{v}");
                }
                if *v == 0 {
                    return write!(f, "0");
                }
                let mut digits = fin.digits(*v);
                digits.push(0);
                let s = format_modulus(&digits[..fin.k]);
                write!(f, "{s}")
            }
        }
    }
}

impl fmt::Debug for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sign of a rational value; `None` in positive characteristic.
pub fn rational_sign(x: &FieldValue) -> Option<Sign> {
    x.as_rational().map(|r| r.numer().sign())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> FieldValue {
        Field::rationals().from_ratio(&n.into(), &d.into()).unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
        assert_eq!(q(2, 4).to_string(), "1/2");
        assert_eq!(q(3, -6).to_string(), "-1/2");
    }

    #[test]
    fn prime_field_division() {
        let f7 = Field::prime(7).unwrap();
        let r = field_arith(&f7.one(), &f7.from_i64(3), ArithOp::Div).unwrap();
        assert_eq!(r, f7.from_i64(5));
        assert_eq!(
            field_arith(&f7.one(), &f7.zero(), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn f4_multiplication() {
        let f4 = Field::extension(2, vec![1, 1, 1]).unwrap();
        let t = f4.generator().unwrap();
        let t1 = &t + &f4.one();
        assert_eq!(&t * &t1, f4.one());
        assert_eq!(t1.to_string(), "t+1");
    }

    #[test]
    fn mismatch_is_reported() {
        let a = Field::prime(5).unwrap().one();
        let b = Field::prime(7).unwrap().one();
        assert_eq!(field_arith(&a, &b, ArithOp::Add), Err(Error::DescriptorMismatch));
    }

    #[test]
    fn enumeration() {
        let f2 = Field::prime(2).unwrap();
        let els = enumerate_field(f2).unwrap();
        assert_eq!(els, vec![f2.zero(), f2.one()]);
        let f4 = Field::galois(2, 2).unwrap();
        let els = f4.enumerate().unwrap();
        assert_eq!(els.len(), 4);
        assert!(els[0].is_zero() && els[1].is_one());
        assert_eq!(enumerate_field(Field::rationals()), Err(Error::InfiniteField));
    }

    #[test]
    fn bad_descriptors() {
        assert_eq!(Field::prime(9), Err(Error::NotPrime(9)).map(|_: ()| unreachable!()));
        assert!(matches!(Field::extension(2, vec![1, 0, 1]), Err(Error::InvalidModulus(_))));
        assert!(matches!(Field::extension(3, vec![1, 0, 2]), Err(Error::InvalidModulus(_))));
    }

    #[test]
    fn interning() {
        assert_eq!(Field::galois(3, 2).unwrap(), Field::extension(3, vec![1, 0, 1]).unwrap());
        assert_ne!(Field::prime(3).unwrap(), Field::galois(3, 2).unwrap());
    }

    #[test]
    fn roots() {
        let f13 = Field::prime(13).unwrap();
        let z = f13.root_of_unity(4).unwrap();
        assert!(z.pow(4).is_one() && !z.pow(2).is_one());
        assert!(f13.root_of_unity(5).is_none());
        let x = f13.from_i64(10).nth_root(2).unwrap().unwrap();
        assert_eq!(x.pow(2), f13.from_i64(10));
        assert_eq!(f13.from_i64(2).nth_root(2).unwrap(), None);
        assert_eq!(q(-8, 27).nth_root(3).unwrap(), Some(q(-2, 3)));
        assert_eq!(q(2, 1).nth_root(2).unwrap(), None);
        assert_eq!(Field::rationals().root_of_unity(2), Some(q(-1, 1)));
    }

    #[test]
    fn embedding_f4_into_f16() {
        let f4 = Field::galois(2, 2).unwrap();
        let f16 = f4.extension_of_degree(2).unwrap();
        let emb = f4.embedding_into(f16).unwrap();
        for a in f4.enumerate().unwrap() {
            for b in f4.enumerate().unwrap() {
                assert_eq!(emb.apply(&(&a * &b)), &emb.apply(&a) * &emb.apply(&b));
                assert_eq!(emb.apply(&(&a + &b)), &emb.apply(&a) + &emb.apply(&b));
            }
        }
    }

    #[test]
    fn large_prime_without_tables() {
        let p = 1_000_003;
        let f = Field::prime(p).unwrap();
        let a = f.from_i64(123_456);
        assert!((&a * &a.inv().unwrap()).is_one());
        assert!(f.primitive_element().is_ok());
    }
}
