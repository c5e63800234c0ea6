use std::cmp::Ordering;
use std::fmt;

/// Exponent vector `(d_0, ..., d_n)`.
///
/// Ordered graded-lexicographically: higher degree first, then by comparing
/// exponents left to right, so `x_0^d` is the largest monomial of degree `d`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exponents: vec![0; nvars] }
    }

    /// `x_i^d`.
    pub fn pure_power(nvars: usize, i: usize, d: u32) -> Self {
        let mut exponents = vec![0; nvars];
        exponents[i] = d;
        Monomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect() }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial {
            exponents: other.exponents.iter().zip(&self.exponents).map(|(a, b)| a - b).collect(),
        })
    }

    /// Permute variables: the exponent of `x_k` moves to `x_{sigma(k)}`.
    pub fn permuted(&self, sigma: &[usize]) -> Monomial {
        let mut exponents = vec![0; self.exponents.len()];
        for (k, &e) in self.exponents.iter().enumerate() {
            exponents[sigma[k]] = e;
        }
        Monomial { exponents }
    }

    /// All monomials of degree `d` in `nvars` variables, largest first.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current = vec![0u32; nvars];
        fill(&mut out, &mut current, 0, d);
        out
    }

    /// Number of monomials of degree `d` in `nvars` variables.
    pub fn count(nvars: usize, d: u32) -> usize {
        binomial(nvars as u64 - 1 + d as u64, d as u64) as usize
    }
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, pos: usize, remaining: u32) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(Monomial { exponents: current.clone() });
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill(out, current, pos + 1, remaining - e);
    }
    current[pos] = 0;
}

pub fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n.saturating_sub(k));
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Variable names: `x, y, z, w` for up to four variables, else `x0, x1, ...`.
pub fn variable_name(nvars: usize, i: usize) -> String {
    const SHORT: [&str; 4] = ["x", "y", "z", "w"];
    if nvars <= SHORT.len() {
        SHORT[i].to_string()
    } else {
        format!("x{i}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.exponents.len();
        let parts: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                let v = variable_name(n, i);
                if e == 1 {
                    v
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
