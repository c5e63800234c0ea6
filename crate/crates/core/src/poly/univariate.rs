//! Dense univariate polynomials over a [`Field`], coefficients low to high.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::algebra::{Field, FieldValue};
use crate::error::{Error, Result};

pub fn trim(mut f: Vec<FieldValue>) -> Vec<FieldValue> {
    while f.last().is_some_and(FieldValue::is_zero) {
        f.pop();
    }
    f
}

pub fn degree(f: &[FieldValue]) -> Option<usize> {
    f.iter().rposition(|c| !c.is_zero())
}

pub fn eval(f: &[FieldValue], x: &FieldValue) -> FieldValue {
    f.iter().rev().fold(x.field().zero(), |acc, c| &(&acc * x) + c)
}

pub fn monic(f: Vec<FieldValue>) -> Vec<FieldValue> {
    let f = trim(f);
    match f.last() {
        None => f,
        Some(lead) => {
            let inv = lead.inv().expect("nonzero leading coefficient");
            f.iter().map(|c| c * &inv).collect()
        }
    }
}

pub fn mul(f: &[FieldValue], g: &[FieldValue], field: Field) -> Vec<FieldValue> {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            out[i + j] = &out[i + j] + &(a * b);
        }
    }
    trim(out)
}

/// `(quotient, remainder)`; `g` must be nonzero.
pub fn div_rem(f: &[FieldValue], g: &[FieldValue], field: Field) -> (Vec<FieldValue>, Vec<FieldValue>) {
    let dg = degree(g).expect("division by the zero polynomial");
    let lead_inv = g[dg].inv().unwrap();
    let mut rem = trim(f.to_vec());
    let mut quot = vec![field.zero(); rem.len().saturating_sub(dg).max(1)];
    while let Some(dr) = degree(&rem) {
        if dr < dg {
            break;
        }
        let c = &rem[dr] * &lead_inv;
        let shift = dr - dg;
        for (j, b) in g.iter().enumerate().take(dg + 1) {
            rem[shift + j] = &rem[shift + j] - &(&c * b);
        }
        quot[shift] = c;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

/// Monic gcd (empty when both inputs are zero).
pub fn gcd(f: &[FieldValue], g: &[FieldValue], field: Field) -> Vec<FieldValue> {
    let mut a = trim(f.to_vec());
    let mut b = trim(g.to_vec());
    while !b.is_empty() {
        let r = div_rem(&a, &b, field).1;
        a = b;
        b = r;
    }
    monic(a)
}

/// Distinct roots lying in the coefficient field.
///
/// Finite fields are scanned exhaustively; over Q the rational root theorem
/// is applied to the integer-scaled polynomial.
pub fn roots(f: &[FieldValue], field: Field) -> Result<Vec<FieldValue>> {
    let f = trim(f.to_vec());
    if f.is_empty() {
        return Err(Error::BadParameter("roots of the zero polynomial".into()));
    }
    if field.is_finite() {
        return Ok(field.enumerate()?.into_iter().filter(|x| eval(&f, x).is_zero()).collect());
    }
    let mut out = Vec::new();
    let mut f = f;
    if f[0].is_zero() {
        out.push(field.zero());
        let low = f.iter().position(|c| !c.is_zero()).unwrap();
        f.drain(..low);
    }
    if f.len() == 1 {
        return Ok(out);
    }
    let ints = integer_coefficients(&f);
    let lead = ints.last().unwrap().abs();
    let constant = ints[0].abs();
    let nums = divisors(&constant)?;
    let dens = divisors(&lead)?;
    let mut seen = std::collections::BTreeSet::new();
    for p in &nums {
        for q in &dens {
            if !p.gcd(q).is_one() {
                continue;
            }
            for s in [p.clone(), -p.clone()] {
                let x = field.from_ratio(&s, q)?;
                if eval(&f, &x).is_zero() && seen.insert((s.clone(), q.clone())) {
                    out.push(x);
                }
            }
        }
    }
    Ok(out)
}

fn integer_coefficients(f: &[FieldValue]) -> Vec<BigInt> {
    let l = f
        .iter()
        .map(|c| c.as_rational().unwrap().denom().clone())
        .fold(BigInt::one(), |acc, d| acc.lcm(&d));
    f.iter()
        .map(|c| {
            let r = c.as_rational().unwrap();
            r.numer() * (&l / r.denom())
        })
        .collect()
}

/// Positive divisors by trial division; guarded against huge inputs.
fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.to_u64().filter(|&n| n <= 1 << 40).ok_or_else(|| {
        Error::Unsupported("rational roots of polynomials with very large coefficients".into())
    })?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}
