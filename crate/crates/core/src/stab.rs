//! Stabilizers of rational maps under conjugation.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::{smith_normal_form, Field, FieldValue, IntegerMatrix};
use crate::error::{Error, Result};
use crate::git::character;
use crate::poly::{proj_equal, Monomial, ProjectiveMatrix, ProjectivePoint, RationalMap};
use crate::resultant::is_morphism;

/// Largest `|PGL(n+1, q)|` the exhaustive searches accept.
pub const SEARCH_LIMIT: u128 = 10_000_000;

/// Groups above this size skip the quadratic closure check.
const CLOSURE_CHECK_LIMIT: usize = 1000;

/// A finite group of projective matrices, listed without repetition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSubgroup {
    elements: Vec<ProjectiveMatrix>,
    abelian_invariants: Option<Vec<u64>>,
}

impl FiniteSubgroup {
    /// Checks identity, inverses and (for small groups) closure.
    pub fn from_elements(elements: Vec<ProjectiveMatrix>) -> Result<Self> {
        let first = elements.first().ok_or_else(|| Error::BadParameter("empty group".into()))?;
        let identity = ProjectiveMatrix::identity(first.field(), first.size());
        let set: HashSet<&ProjectiveMatrix> = elements.iter().collect();
        if set.len() != elements.len() {
            return Err(Error::BadParameter("repeated group elements".into()));
        }
        if !set.contains(&identity) {
            return Err(Error::BadParameter("group lacks the identity".into()));
        }
        if elements.iter().any(|g| !set.contains(&g.inverse())) {
            return Err(Error::BadParameter("group is not closed under inverses".into()));
        }
        if elements.len() <= CLOSURE_CHECK_LIMIT {
            for a in &elements {
                for b in &elements {
                    if !set.contains(&a.mul(b)) {
                        return Err(Error::BadParameter("group is not closed under products".into()));
                    }
                }
            }
        }
        let abelian_invariants = abelian_invariants(&elements);
        Ok(FiniteSubgroup { elements, abelian_invariants })
    }

    /// Closure of a generating set under multiplication.
    pub fn generated_by(field: Field, size: usize, generators: &[ProjectiveMatrix]) -> Result<Self> {
        let identity = ProjectiveMatrix::identity(field, size);
        let mut seen: HashSet<ProjectiveMatrix> = HashSet::from([identity.clone()]);
        let mut elements = vec![identity.clone()];
        let mut queue = VecDeque::from([identity]);
        while let Some(g) = queue.pop_front() {
            for h in generators {
                let p = g.mul(h);
                if seen.insert(p.clone()) {
                    if seen.len() as u128 > SEARCH_LIMIT {
                        return Err(Error::SearchSpaceTooLarge { size: seen.len() as u128, limit: SEARCH_LIMIT });
                    }
                    elements.push(p.clone());
                    queue.push_back(p);
                }
            }
        }
        Self::from_elements(elements)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[ProjectiveMatrix] {
        &self.elements
    }

    /// Invariant factors when the group is abelian.
    pub fn abelian_invariants(&self) -> Option<&[u64]> {
        self.abelian_invariants.as_deref()
    }

    pub fn contains(&self, m: &ProjectiveMatrix) -> bool {
        self.elements.contains(m)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }
}

fn element_order(g: &ProjectiveMatrix) -> u64 {
    let mut k = 1;
    let mut p = g.clone();
    while !p.is_identity() {
        p = p.mul(g);
        k += 1;
    }
    k
}

fn power(g: &ProjectiveMatrix, mut e: u64) -> ProjectiveMatrix {
    let mut acc = ProjectiveMatrix::identity(g.field(), g.size());
    let mut base = g.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base);
        }
        base = base.mul(&base);
        e >>= 1;
    }
    acc
}

/// Invariant factors `n_1 | n_2 | ...` of an abelian group, from counts of
/// elements killed by each prime power.
fn abelian_invariants(elements: &[ProjectiveMatrix]) -> Option<Vec<u64>> {
    if elements.len() > CLOSURE_CHECK_LIMIT {
        return None;
    }
    for a in elements {
        for b in elements {
            if a.mul(b) != b.mul(a) {
                return None;
            }
        }
    }
    let order = elements.len() as u64;
    let orders: Vec<u64> = elements.iter().map(element_order).collect();
    // Exponents of each prime, as a partition read off from |G[p^k]|.
    let mut cyclic_parts: Vec<Vec<u64>> = Vec::new();
    for p in crate::algebra::field::prime_factors(order) {
        let mut counts = vec![1u64];
        let mut pk = 1u64;
        loop {
            pk *= p;
            let c = orders.iter().filter(|&&o| pk % o == 0).count() as u64;
            if c == *counts.last().unwrap() {
                break;
            }
            counts.push(c);
        }
        // Number of cyclic factors of order >= p^k is log_p(c_k / c_{k-1}).
        let at_least: Vec<u32> = counts.windows(2).map(|w| (w[1] / w[0]).ilog(p)).collect();
        let factors = at_least.first().copied().unwrap_or(0) as usize;
        let mut parts = vec![1u64; factors];
        for (k, &cnt) in at_least.iter().enumerate() {
            for part in parts.iter_mut().take(cnt as usize) {
                *part = p.pow(k as u32 + 1);
            }
        }
        cyclic_parts.push(parts);
    }
    let len = cyclic_parts.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![1u64; len];
    for parts in cyclic_parts {
        // Largest prime powers go to the last invariant factor.
        for (slot, part) in out.iter_mut().rev().zip(parts) {
            *slot *= part;
        }
    }
    Some(out)
}

/// `A phi A^{-1}` is proportional to `phi`, tested as `A phi ∝ phi A`.
pub fn stabilizes(a: &ProjectiveMatrix, phi: &RationalMap) -> Result<bool> {
    let left = phi.apply_on_left(a)?;
    let right = phi.substitute(a)?;
    Ok(proj_equal(&left, &right))
}

/// Diagonal symmetries of a map, modulo scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalStabilizer {
    pub invariant_factors: Vec<BigInt>,
    /// `None` when the group is infinite.
    pub order_over_closure: Option<BigInt>,
    /// Order with all factors of the characteristic removed (equals the
    /// closure order in characteristic 0).
    pub order_prime_to_p: Option<BigInt>,
    /// Generators of the part realizable over the map's field.
    pub generators: Vec<ProjectiveMatrix>,
}

impl DiagonalStabilizer {
    pub fn is_finite(&self) -> bool {
        self.order_over_closure.is_some()
    }
}

/// Character differences `w_k - w_0` over the support.
fn difference_matrix(phi: &RationalMap) -> Result<(Vec<(Monomial, usize)>, IntegerMatrix)> {
    let support: Vec<(Monomial, usize)> = phi.coefficient_support().into_iter().collect();
    let Some((m0, i0)) = support.first() else { return Err(Error::EmptySupport) };
    let base = character(m0, *i0);
    let mut rows: Vec<Vec<i64>> = support[1..]
        .iter()
        .map(|(m, i)| character(m, *i).iter().zip(&base).map(|(a, b)| a - b).collect())
        .collect();
    if rows.is_empty() {
        rows.push(vec![0; phi.n() + 1]);
    }
    Ok((support, IntegerMatrix::from_rows(&rows)))
}

fn strip_prime(mut s: BigInt, p: u64) -> BigInt {
    if p == 0 || s.is_zero() {
        return s;
    }
    let p = BigInt::from(p);
    while s.is_multiple_of(&p) {
        s /= &p;
    }
    s
}

/// `t_j = prod_i u_i^(V[j][i])`.
fn diagonal_from_lattice(field: Field, v: &IntegerMatrix, u: &[FieldValue]) -> Result<Vec<FieldValue>> {
    (0..v.rows())
        .map(|j| {
            let mut t = field.one();
            for (i, ui) in u.iter().enumerate() {
                let e = v[(j, i)].to_i64().ok_or(Error::Overflow)?;
                t = &t * &ui.pow_i64(e)?;
            }
            Ok(t)
        })
        .collect()
}

/// Kernel of the character map via Smith normal form.
pub fn diagonal_stabilizer(phi: &RationalMap) -> Result<DiagonalStabilizer> {
    let field = phi.field();
    let (_, diff) = difference_matrix(phi)?;
    let snf = smith_normal_form(&diff);
    let nonzero: Vec<BigInt> = snf.invariant_factors.iter().filter(|s| !s.is_zero()).cloned().collect();
    if snf.rank() < phi.n() {
        return Ok(DiagonalStabilizer {
            invariant_factors: snf.invariant_factors,
            order_over_closure: None,
            order_prime_to_p: None,
            generators: Vec::new(),
        });
    }
    let order: BigInt = nonzero.iter().product();
    let p = field.characteristic();
    let prime_to_p: BigInt = nonzero.iter().map(|s| strip_prime(s.clone(), p)).product();
    let unit_count = BigInt::from(field.roots_of_unity_count());
    let mut generators = Vec::new();
    for (i, s) in nonzero.iter().enumerate() {
        let g = s.gcd(&unit_count).to_u64().ok_or(Error::Overflow)?;
        if g <= 1 {
            continue;
        }
        let zeta = field.root_of_unity(g).expect("root of unity of order dividing the unit count");
        let mut u = vec![field.one(); phi.n() + 1];
        u[i] = zeta;
        let t = diagonal_from_lattice(field, &snf.v, &u)?;
        let m = ProjectiveMatrix::diagonal(field, &t)?;
        if !m.is_identity() {
            generators.push(m);
        }
    }
    Ok(DiagonalStabilizer {
        invariant_factors: snf.invariant_factors,
        order_over_closure: Some(order),
        order_prime_to_p: Some(prime_to_p),
        generators,
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Diagonal `D` with `D phi D^{-1} ∝ psi`, if one exists over the field.
fn diagonal_transport(phi: &RationalMap, psi: &RationalMap) -> Result<Option<Vec<FieldValue>>> {
    let field = phi.field();
    let support: Vec<(Monomial, usize)> = phi.coefficient_support().into_iter().collect();
    if psi.coefficient_support().into_iter().collect::<Vec<_>>() != support {
        return Ok(None);
    }
    // Conjugation by diag(t) multiplies c_d(i) by t^(e_i - d); need
    // t^(w_k - w_0) = rho_k / rho_0 with rho_k = psi_k / phi_k.
    let rho: Vec<FieldValue> = support
        .iter()
        .map(|(m, i)| psi.coefficient(m, *i).checked_div(&phi.coefficient(m, *i)))
        .collect::<Result<_>>()?;
    let (_, diff) = difference_matrix(phi)?;
    let targets: Vec<FieldValue> = if support.len() == 1 {
        vec![field.one()]
    } else {
        rho[1..].iter().map(|r| r.checked_div(&rho[0])).collect::<Result<_>>()?
    };
    let snf = smith_normal_form(&diff);
    let mut u = vec![field.one(); phi.n() + 1];
    for l in 0..diff.rows() {
        let mut sigma = field.one();
        for (k, target) in targets.iter().enumerate() {
            let e = snf.u[(l, k)].to_i64().ok_or(Error::Overflow)?;
            sigma = &sigma * &target.pow_i64(e)?;
        }
        let s = snf.invariant_factors.get(l).cloned().unwrap_or_default();
        if s.is_zero() {
            if !sigma.is_one() {
                return Ok(None);
            }
            continue;
        }
        let s = s.to_u64().ok_or(Error::Overflow)?;
        match sigma.nth_root(s)? {
            Some(root) => u[l] = root,
            None => return Ok(None),
        }
    }
    diagonal_from_lattice(field, &snf.v, &u).map(Some)
}

/// Stabilizer elements of the form (permutation matrix) x (diagonal) that are
/// defined over the map's field.
pub fn monomial_stabilizer(phi: &RationalMap) -> Result<FiniteSubgroup> {
    let field = phi.field();
    let size = phi.n() + 1;
    let diag = diagonal_stabilizer(phi)?;
    if !diag.is_finite() {
        return Err(Error::InfiniteDiagonalPart);
    }
    let mut generators = diag.generators.clone();
    for sigma in permutations(size) {
        let perm = ProjectiveMatrix::permutation(field, &sigma);
        // P D stabilizes phi iff D phi D^{-1} ∝ P^{-1} phi P.
        let psi = phi.conjugate(&perm.inverse())?;
        let Some(t) = diagonal_transport(phi, &psi)? else { continue };
        let candidate = perm.mul(&ProjectiveMatrix::diagonal(field, &t)?);
        if !stabilizes(&candidate, phi)? {
            return Err(Error::InvalidMap("diagonal transport failed verification".into()));
        }
        if !candidate.is_identity() {
            generators.push(candidate);
        }
    }
    let group = FiniteSubgroup::generated_by(field, size, &generators)?;
    debug_assert!(group.elements().iter().all(|g| stabilizes(g, phi).unwrap_or(false)));
    Ok(group)
}

/// `|PGL(m, q)| = q^(m(m-1)/2) prod_{i=2}^{m} (q^i - 1)`, saturating.
pub fn pgl_order(m: usize, q: u64) -> u128 {
    let q = q as u128;
    let mut order = q.saturating_pow((m * (m - 1) / 2) as u32);
    for i in 2..=m as u32 {
        order = order.saturating_mul(q.saturating_pow(i).saturating_sub(1));
    }
    order
}

/// Every normalized invertible matrix over a finite field satisfying
/// `keep`, in a fixed enumeration order. Work is split across `jobs` threads.
pub(crate) fn search_pgl<F>(field: Field, size: usize, jobs: usize, keep: F) -> Result<Vec<ProjectiveMatrix>>
where
    F: Fn(&ProjectiveMatrix) -> bool + Sync,
{
    let q = field.size().ok_or(Error::InfiniteField)?;
    let group_size = pgl_order(size, q);
    if group_size > SEARCH_LIMIT {
        return Err(Error::SearchSpaceTooLarge { size: group_size, limit: SEARCH_LIMIT });
    }
    let cells = size * size;
    let total = (q as u128).pow(cells as u32) as u64;
    let elements = field.enumerate()?;
    let jobs = jobs.clamp(1, 64) as u64;
    let chunk = total.div_ceil(jobs);
    let scan = |start: u64, end: u64| -> Vec<ProjectiveMatrix> {
        let mut found = Vec::new();
        for index in start..end {
            // Digits of `index` are the row-major entries; keep only
            // matrices whose first nonzero entry is 1.
            let mut digits = Vec::with_capacity(cells);
            let mut rest = index;
            for _ in 0..cells {
                digits.push(rest % q);
                rest /= q;
            }
            if digits.iter().find(|&&x| x != 0) != Some(&1) {
                continue;
            }
            let entries = (0..size)
                .map(|i| (0..size).map(|j| elements[digits[i * size + j] as usize].clone()).collect())
                .collect();
            if let Ok(m) = ProjectiveMatrix::new(field, entries) {
                if keep(&m) {
                    found.push(m);
                }
            }
        }
        found
    };
    if jobs == 1 {
        return Ok(scan(0, total));
    }
    let parts: Vec<Vec<ProjectiveMatrix>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..jobs)
            .map(|k| {
                let start = (k * chunk).min(total);
                let end = ((k + 1) * chunk).min(total);
                let scan = &scan;
                s.spawn(move || scan(start, end))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
    });
    Ok(parts.into_iter().flatten().collect())
}

/// Cheap necessary condition: `phi(A P) ∝ A phi(P)` at sample points.
struct SampleFilter {
    samples: Vec<(Vec<FieldValue>, Vec<FieldValue>)>,
}

impl SampleFilter {
    fn new(phi: &RationalMap) -> Result<Self> {
        let points = ProjectivePoint::enumerate(phi.field(), phi.n())?;
        let samples = points
            .into_iter()
            .filter_map(|p| {
                let image = phi.evaluate(p.coords()).ok()?;
                image.iter().any(|x| !x.is_zero()).then(|| (p.coords().to_vec(), image))
            })
            .take(4)
            .collect();
        Ok(SampleFilter { samples })
    }

    fn passes(&self, phi: &RationalMap, a: &ProjectiveMatrix) -> bool {
        self.samples.iter().all(|(p, image)| {
            let Ok(u) = phi.evaluate(&a.apply(p)) else { return false };
            let v = a.apply(image);
            proportional(&u, &v)
        })
    }
}

pub(crate) fn proportional(u: &[FieldValue], v: &[FieldValue]) -> bool {
    let uz = u.iter().all(FieldValue::is_zero);
    let vz = v.iter().all(FieldValue::is_zero);
    if uz || vz {
        return uz == vz;
    }
    (0..u.len()).all(|i| (i + 1..u.len()).all(|j| &u[i] * &v[j] == &u[j] * &v[i]))
}

/// The full stabilizer over `F_{q^k}` by exhaustive search of `PGL(n+1)`.
pub fn brute_force_stabilizer(phi: &RationalMap, ext_degree: usize, jobs: usize) -> Result<FiniteSubgroup> {
    let base = phi.field();
    if !base.is_finite() {
        return Err(Error::InfiniteField);
    }
    let field = base.extension_of_degree(ext_degree)?;
    let size = pgl_order(phi.n() + 1, field.size().unwrap());
    if size > SEARCH_LIMIT {
        return Err(Error::SearchSpaceTooLarge { size, limit: SEARCH_LIMIT });
    }
    let lifted = phi.coerce_into(field)?;
    let filter = SampleFilter::new(&lifted)?;
    let elements = search_pgl(field, phi.n() + 1, jobs, |a| {
        filter.passes(&lifted, a) && stabilizes(a, &lifted).unwrap_or(false)
    })?;
    FiniteSubgroup::from_elements(elements)
}

/// Reduction of a rational map modulo `p`, rejecting primes of bad reduction.
pub fn reduce_mod_p(phi: &RationalMap, p: u64) -> Result<RationalMap> {
    let fp = Field::prime(p)?;
    let reduced = phi
        .coerce_into(fp)
        .map_err(|_| Error::BadReductionPrime { p, reason: "a coefficient denominator is divisible by p" })?;
    if !is_morphism(&reduced) {
        return Err(Error::BadReductionPrime { p, reason: "the resultant vanishes mod p" });
    }
    Ok(reduced)
}

/// gcd over good primes of `|Stab(phi mod p)|`; the rational stabilizer
/// order divides it.
pub fn stabilizer_order_bound_mod_p(phi: &RationalMap, primes: &[u64], jobs: usize) -> Result<u64> {
    if !phi.field().is_rationals() {
        return Err(Error::BadParameter("mod-p bounds need a map over Q".into()));
    }
    if primes.is_empty() {
        return Err(Error::BadParameter("no primes given".into()));
    }
    let mut bound = 0u64;
    for &p in primes {
        let reduced = reduce_mod_p(phi, p)?;
        let order = brute_force_stabilizer(&reduced, 1, jobs)?.order() as u64;
        bound = bound.gcd(&order);
    }
    Ok(bound)
}

/// Characteristic `p`, `d = p^l`, and `phi = B (x_0^d, ..., x_n^d)` with `B`
/// invertible.
pub fn is_purely_inseparable(phi: &RationalMap) -> bool {
    let p = phi.field().characteristic();
    let d = phi.degree() as u64;
    if p == 0 || d < p {
        return false;
    }
    let mut e = d;
    while e % p == 0 {
        e /= p;
    }
    if e != 1 {
        return false;
    }
    let size = phi.n() + 1;
    let powers: Vec<Monomial> = (0..size).map(|j| Monomial::pure_power(size, j, phi.degree())).collect();
    let mut b = Vec::with_capacity(size);
    for q in phi.components() {
        if q.terms().any(|(m, _)| !powers.contains(m)) {
            return false;
        }
        b.push(powers.iter().map(|m| q.coefficient(m)).collect::<Vec<_>>());
    }
    !crate::algebra::linalg::determinant(phi.field(), &b).is_zero()
}

/// Element orders by frequency, for summaries.
pub fn order_statistics(group: &FiniteSubgroup) -> HashMap<u64, usize> {
    let mut out = HashMap::new();
    for g in group.elements() {
        *out.entry(element_order(g)).or_insert(0) += 1;
    }
    out
}

/// `g^e`, exposed for callers checking group relations.
pub fn matrix_power(g: &ProjectiveMatrix, e: u64) -> ProjectiveMatrix {
    power(g, e)
}
