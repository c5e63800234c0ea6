//! Hilbert–Mumford weights, diagonal destabilizers, stability verdicts and
//! the support profiles cut out by one-parameter subgroups.
//!
//! A weight vector `a` with `sum(a) = 0` scales the coefficient `c_d(i)` by
//! `t^(a_i - a·d)`. The map is non-stable for `a` when every coefficient with
//! `a·d > a_i` vanishes, and unstable when every coefficient with `a·d >= a_i`
//! vanishes.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use crate::algebra::{homogeneous_cone_feasibility, ConeProblem, Field};
use crate::error::{Error, Result};
use crate::poly::{binary_gcd, binary_roots, Monomial, ProjectiveMatrix, ProjectivePoint, RationalMap};
use crate::resultant::is_morphism;

/// Integer one-parameter-subgroup weights: zero sum, not all zero, coprime.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn new(a: Vec<i64>) -> Result<Self> {
        if a.iter().all(|&x| x == 0) {
            return Err(Error::BadParameter("weight vector is zero".into()));
        }
        if a.iter().map(|&x| x as i128).sum::<i128>() != 0 {
            return Err(Error::BadParameter("weights must sum to zero".into()));
        }
        if a.iter().fold(0i64, |g, &x| g.gcd(&x)) != 1 {
            return Err(Error::BadParameter("weights must be coprime".into()));
        }
        Ok(WeightVector(a))
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }
}

impl std::ops::Deref for WeightVector {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

/// `a_i - a·d`.
fn weight_of(a: &[i64], m: &Monomial, i: usize) -> i64 {
    a[i] - m.exponents().iter().zip(a).map(|(&e, &x)| e as i64 * x).sum::<i64>()
}

/// Character `e_i - d` of the coefficient `c_d(i)`.
pub fn character(m: &Monomial, i: usize) -> Vec<i64> {
    m.exponents()
        .iter()
        .enumerate()
        .map(|(j, &e)| i64::from(j == i) - e as i64)
        .collect()
}

/// Minimum of `a_i - a·d` over the support.
pub fn hm_weight(phi: &RationalMap, a: &[i64]) -> Result<i64> {
    if a.len() != phi.n() + 1 {
        return Err(Error::DimensionMismatch { expected: phi.n() + 1, found: a.len() });
    }
    phi.coefficient_support()
        .iter()
        .map(|(m, i)| weight_of(a, m, *i))
        .min()
        .ok_or(Error::EmptySupport)
}

/// A weight vector with `hm_weight >= 0` (`> 0` when `strict`), searched over
/// all weights at once.
pub fn diagonal_destabilizer(phi: &RationalMap, strict: bool) -> Result<Option<WeightVector>> {
    let support = phi.coefficient_support();
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    let rows = support.iter().map(|(m, i)| character(m, *i)).collect();
    let problem = ConeProblem::new(phi.n() + 1, rows, strict)?;
    match homogeneous_cone_feasibility(&problem, true)? {
        None => Ok(None),
        Some(a) => {
            let mu = hm_weight(phi, &a)?;
            debug_assert!(if strict { mu > 0 } else { mu >= 0 });
            Ok(Some(WeightVector::new(a)?))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StabilityStatus {
    StableCertified,
    UnstableWithWitness,
    NonStableWithWitness,
    NoDiagonalDestabilizerFound,
}

impl StabilityStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            StabilityStatus::StableCertified => "StableCertified",
            StabilityStatus::UnstableWithWitness => "UnstableWithWitness",
            StabilityStatus::NonStableWithWitness => "NonStableWithWitness",
            StabilityStatus::NoDiagonalDestabilizerFound => "NoDiagonalDestabilizerFound",
        }
    }

    fn strength(&self) -> u8 {
        match self {
            StabilityStatus::UnstableWithWitness => 2,
            StabilityStatus::NonStableWithWitness => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for StabilityStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of [`classify`]. The witness applies to `B phi B^{-1}` where `B`
/// is `frame`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityVerdict {
    pub status: StabilityStatus,
    pub witness: Option<WeightVector>,
    pub frame: ProjectiveMatrix,
}

/// Morphisms of degree at least 2 are certified stable; otherwise diagonal
/// destabilizers are searched in the identity frame and, for `n = 1`, in frames
/// moving roots of `gcd(p, q)` to `(1:0)` and roots of `p q` to `(0:1)`.
pub fn classify(phi: &RationalMap) -> Result<StabilityVerdict> {
    let field = phi.field();
    let identity = ProjectiveMatrix::identity(field, phi.n() + 1);
    if phi.degree() >= 2 && is_morphism(phi) {
        return Ok(StabilityVerdict { status: StabilityStatus::StableCertified, witness: None, frame: identity });
    }
    let mut frames = vec![identity.clone()];
    if phi.n() == 1 {
        frames.extend(root_frames(phi)?);
    }
    let mut best = StabilityVerdict { status: StabilityStatus::NoDiagonalDestabilizerFound, witness: None, frame: identity };
    for frame in frames {
        let psi = if frame.is_identity() { phi.clone() } else { phi.conjugate(&frame)? };
        let verdict = if let Some(a) = diagonal_destabilizer(&psi, true)? {
            (StabilityStatus::UnstableWithWitness, a)
        } else if let Some(a) = diagonal_destabilizer(&psi, false)? {
            (StabilityStatus::NonStableWithWitness, a)
        } else {
            continue;
        };
        if verdict.0.strength() > best.status.strength() {
            best = StabilityVerdict { status: verdict.0, witness: Some(verdict.1), frame };
            if best.status == StabilityStatus::UnstableWithWitness {
                break;
            }
        }
    }
    Ok(best)
}

/// Matrices `B` with `B r = (1:0)` and `B s = (0:1)`.
fn root_frames(phi: &RationalMap) -> Result<Vec<ProjectiveMatrix>> {
    let field = phi.field();
    let (p, q) = (phi.component(0), phi.component(1));
    let g = binary_gcd(p, q)?;
    if g.degree() == 0 {
        return Ok(Vec::new());
    }
    let common = binary_roots(&g)?;
    let product = p.mul(q);
    let mut targets = if product.is_zero() { Vec::new() } else { binary_roots(&product)? };
    for s in [[1, 0], [0, 1], [1, 1]] {
        targets.push(ProjectivePoint::new(vec![field.from_i64(s[0]), field.from_i64(s[1])])?);
    }
    let mut frames = Vec::new();
    for r in &common {
        for s in &targets {
            let (r0, r1) = (&r.coords()[0], &r.coords()[1]);
            let (s0, s1) = (&s.coords()[0], &s.coords()[1]);
            let inverse = ProjectiveMatrix::new(field, vec![vec![r0.clone(), s0.clone()], vec![r1.clone(), s1.clone()]]);
            if let Ok(b) = inverse {
                let frame = b.inverse();
                if !frames.contains(&frame) {
                    frames.push(frame);
                }
            }
        }
    }
    Ok(frames)
}

/// The coefficient positions a weight vector forces to vanish.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SupportProfile {
    /// Sorted in descending order.
    pub representative: Vec<i64>,
    /// Positions with `a·d > a_i`.
    pub nonstable: BTreeSet<(Monomial, usize)>,
    /// Positions with `a·d >= a_i`.
    pub unstable: BTreeSet<(Monomial, usize)>,
}

impl SupportProfile {
    /// Profile of an arbitrary weight vector, after sorting it descending.
    pub fn from_weights(n: usize, d: u32, a: &[i64]) -> Self {
        let mut rep = a.to_vec();
        rep.sort_unstable_by(|x, y| y.cmp(x));
        let mut nonstable = BTreeSet::new();
        let mut unstable = BTreeSet::new();
        for (m, i) in RationalMap::positions(n, d) {
            let w = weight_of(&rep, &m, i);
            if w < 0 {
                nonstable.insert((m.clone(), i));
            }
            if w <= 0 {
                unstable.insert((m, i));
            }
        }
        SupportProfile { representative: rep, nonstable, unstable }
    }
}

/// One profile per ray and open sector of the weight fan in the plane
/// `sum(a) = 0`, deduplicated up to coordinate permutation.
pub fn enumerate_chambers(n: usize, d: u32) -> Result<Vec<SupportProfile>> {
    let reps: Vec<Vec<i64>> = match n {
        1 => vec![vec![1, -1], vec![-1, 1]],
        2 => plane_representatives(d),
        _ => return Err(Error::UnsupportedDimension { n, reason: "chamber enumeration needs n <= 2" }),
    };
    let mut out: Vec<SupportProfile> = Vec::new();
    for a in reps {
        let profile = SupportProfile::from_weights(n, d, &a);
        if !out.iter().any(|p| p.nonstable == profile.nonstable && p.unstable == profile.unstable) {
            out.push(profile);
        }
    }
    Ok(out)
}

/// Weights on every ray of the arrangement `{a_i = a·d}` and inside every
/// sector, using coordinates `a = s (1,-1,0) + t (0,1,-1)`.
fn plane_representatives(d: u32) -> Vec<Vec<i64>> {
    let mut rays: Vec<(i64, i64)> = Vec::new();
    for (m, i) in RationalMap::positions(2, d) {
        let w = character(&m, i);
        let (x, y) = (w[0] - w[1], w[1] - w[2]);
        if x == 0 && y == 0 {
            continue;
        }
        let g = x.gcd(&y);
        for r in [(-y / g, x / g), (y / g, -x / g)] {
            if !rays.contains(&r) {
                rays.push(r);
            }
        }
    }
    rays.sort_by(|a, b| angular_cmp(*a, *b));
    let mut points = Vec::new();
    for k in 0..rays.len() {
        let r1 = rays[k];
        let r2 = rays[(k + 1) % rays.len()];
        points.push(r1);
        let mid = (r1.0 + r2.0, r1.1 + r2.1);
        points.push(if mid == (0, 0) { (-r1.1, r1.0) } else { mid });
    }
    points
        .into_iter()
        .map(|(s, t)| {
            let a = [s, t - s, -t];
            let g = a.iter().fold(0i64, |g, &x| g.gcd(&x));
            a.iter().map(|x| x / g).collect()
        })
        .collect()
}

/// Counterclockwise order of directions starting from the positive x-axis.
fn angular_cmp(a: (i64, i64), b: (i64, i64)) -> Ordering {
    let half = |p: (i64, i64)| if p.1 > 0 || (p.1 == 0 && p.0 > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128;
        0.cmp(&cross)
    })
}

/// Map with coefficient 1 exactly where `d_0 - d_n <= a_i` for
/// `a = (1, 0, ..., 0, -1)`: semistable but not stable for its diagonal torus.
pub fn witness_semistable_not_stable(field: Field, n: usize, d: u32) -> Result<RationalMap> {
    if n < 2 {
        return Err(Error::UnsupportedDimension { n, reason: "the witness needs n >= 2" });
    }
    if d < 2 {
        return Err(Error::BadParameter("the witness needs d >= 2".into()));
    }
    let mut a = vec![0i64; n + 1];
    a[0] = 1;
    a[n] = -1;
    let coefficients = RationalMap::positions(n, d)
        .into_iter()
        .filter(|(m, i)| {
            let e = m.exponents();
            e[0] as i64 - e[n] as i64 <= a[*i]
        })
        .map(|pos| (pos, field.one()));
    RationalMap::from_coefficients(field, n, d, coefficients)
}

/// Smallest number of vanishing conditions among non-stable profiles,
/// against the bound `n(n+1)/2 + 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodimensionReport {
    pub min_conditions: usize,
    pub bound: usize,
}

impl CodimensionReport {
    pub fn holds(&self) -> bool {
        self.min_conditions >= self.bound
    }
}

pub fn codimension_report(n: usize, d: u32) -> Result<CodimensionReport> {
    let profiles = enumerate_chambers(n, d)?;
    let min_conditions = profiles.iter().map(|p| p.nonstable.len()).min().unwrap_or(0);
    Ok(CodimensionReport { min_conditions, bound: n * (n + 1) / 2 + 2 })
}
