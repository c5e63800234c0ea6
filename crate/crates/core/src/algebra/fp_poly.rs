//! Dense univariate polynomials over a prime field, coefficients low to high.
//!
//! Only what the extension-field machinery needs: reduction, products,
//! division with remainder, gcd, and the irreducibility test.

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

pub(crate) fn trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub(crate) fn degree(f: &[u64]) -> Option<usize> {
    f.iter().rposition(|&c| c != 0)
}

pub(crate) fn sub(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let len = f.len().max(g.len());
    let out = (0..len)
        .map(|i| {
            let a = f.get(i).copied().unwrap_or(0);
            let b = g.get(i).copied().unwrap_or(0);
            (a + p - b) % p
        })
        .collect();
    trim(out)
}

pub(crate) fn mul(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
        }
    }
    trim(out)
}

/// Returns `(quotient, remainder)`; `g` must be nonzero.
pub(crate) fn div_rem(f: &[u64], g: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let dg = degree(g).expect("division by zero polynomial");
    let lead_inv = inv_mod(g[dg], p);
    let mut rem = trim(f.to_vec());
    let mut quot = vec![0u64; rem.len().saturating_sub(dg).max(1)];
    while let Some(dr) = degree(&rem) {
        if dr < dg {
            break;
        }
        let c = mul_mod(rem[dr], lead_inv, p);
        let shift = dr - dg;
        quot[shift] = c;
        for (j, &b) in g.iter().enumerate().take(dg + 1) {
            rem[shift + j] = (rem[shift + j] + p - mul_mod(c, b, p)) % p;
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

pub(crate) fn rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    div_rem(f, g, p).1
}

pub(crate) fn gcd(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(f.to_vec());
    let mut b = trim(g.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// `base^exp mod modulus`.
pub(crate) fn pow_rem(base: &[u64], mut exp: u64, modulus: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = rem(base, modulus, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), modulus, p);
        }
        b = rem(&mul(&b, &b, p), modulus, p);
        exp >>= 1;
    }
    acc
}

/// Irreducibility of a monic `f` of degree `k` over F_p: no root for `k <= 3`,
/// otherwise `gcd(f, x^(p^j) - x) = 1` for every `1 <= j < k`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let Some(k) = degree(f) else { return false };
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    if k <= 3 {
        return (0..p).all(|x| eval(f, x, p) != 0);
    }
    let x = vec![0u64, 1];
    let mut frob = x.clone();
    for _ in 1..k {
        frob = pow_rem(&frob, p, f, p);
        let g = gcd(f, &sub(&frob, &x, p), p);
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

pub(crate) fn eval(f: &[u64], x: u64, p: u64) -> u64 {
    f.iter().rev().fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
}

/// First monic irreducible polynomial of degree `k`, ordered by the integer
/// encoding `c_0 + c_1 p + ... + c_{k-1} p^{k-1}` of its lower coefficients.
pub(crate) fn first_irreducible(p: u64, k: usize) -> Vec<u64> {
    let total = (p as u128).pow(k as u32);
    for code in 0..total {
        let mut f = Vec::with_capacity(k + 1);
        let mut c = code;
        for _ in 0..k {
            f.push((c % p as u128) as u64);
            c /= p as u128;
        }
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_irreducibles() {
        assert_eq!(first_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(first_irreducible(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(first_irreducible(3, 2), vec![1, 0, 1]);
        assert!(!is_irreducible(&[1, 0, 1], 2)); // (x+1)^2
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2)); // x^4 + x + 1
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2)); // (x^2+x+1)^2
    }

    #[test]
    fn division_reconstructs() {
        let p = 7;
        let f = vec![3, 0, 5, 1, 6];
        let g = vec![2, 1, 1];
        let (q, r) = div_rem(&f, &g, p);
        let back = sub(&mul(&q, &g, p), &[0], p);
        let back = trim(
            (0..f.len())
                .map(|i| (back.get(i).copied().unwrap_or(0) + r.get(i).copied().unwrap_or(0)) % p)
                .collect(),
        );
        assert_eq!(back, f);
    }
}
