//! Fixed-point divisors of self-maps of `P^1` and the fibers of `Fix`.

use crate::algebra::linalg::{self, Matrix};
use crate::algebra::{Field, FieldValue};
use crate::error::{Error, Result};
use crate::poly::{HomogeneousPolynomial, Monomial, ProjectiveMatrix, RationalMap};
use crate::stab::{proportional, search_pgl, FiniteSubgroup};

/// `r = p y - q x`, a nonzero binary form of degree `d + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedDivisor {
    form: HomogeneousPolynomial,
}

impl FixedDivisor {
    pub fn new(form: HomogeneousPolynomial) -> Result<Self> {
        if form.nvars() != 2 {
            return Err(Error::DimensionMismatch { expected: 2, found: form.nvars() });
        }
        if form.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if form.degree() < 2 {
            return Err(Error::BadParameter("a fixed divisor has degree at least 2".into()));
        }
        Ok(FixedDivisor { form })
    }

    pub fn form(&self) -> &HomogeneousPolynomial {
        &self.form
    }

    pub fn field(&self) -> Field {
        self.form.field()
    }

    /// Degree `d` of the maps in the fiber.
    pub fn map_degree(&self) -> u32 {
        self.form.degree() - 1
    }

    pub fn is_proportional_to(&self, other: &HomogeneousPolynomial) -> bool {
        forms_proportional(&self.form, other)
    }
}

/// `f = c g` for some nonzero scalar `c`.
pub fn forms_proportional(f: &HomogeneousPolynomial, g: &HomogeneousPolynomial) -> bool {
    if f.nvars() != g.nvars() || f.degree() != g.degree() || f.is_zero() || g.is_zero() {
        return false;
    }
    proportional(&f.dense_coefficients(), &g.dense_coefficients())
}

fn x(field: Field) -> HomogeneousPolynomial {
    HomogeneousPolynomial::variable(field, 2, 0)
}

fn y(field: Field) -> HomogeneousPolynomial {
    HomogeneousPolynomial::variable(field, 2, 1)
}

fn divisor_of(p: &HomogeneousPolynomial, q: &HomogeneousPolynomial) -> HomogeneousPolynomial {
    let field = p.field();
    p.mul(&y(field)).sub(&q.mul(&x(field)))
}

pub fn fixed_divisor(phi: &RationalMap) -> Result<FixedDivisor> {
    if phi.n() != 1 {
        return Err(Error::UnsupportedDimension { n: phi.n(), reason: "fixed divisors are defined on P^1" });
    }
    let r = divisor_of(phi.component(0), phi.component(1));
    if r.is_zero() {
        return Err(Error::DegenerateFixedDivisor);
    }
    FixedDivisor::new(r)
}

/// A point `(p, q, t)` of the cone `p y - q x = t r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberVector {
    pub p: HomogeneousPolynomial,
    pub q: HomogeneousPolynomial,
    pub t: FieldValue,
}

impl FiberVector {
    /// Dense `p` coefficients, dense `q` coefficients, then `t`.
    pub fn coordinates(&self) -> Vec<FieldValue> {
        let mut out = self.p.dense_coefficients();
        out.extend(self.q.dense_coefficients());
        out.push(self.t.clone());
        out
    }

    fn from_coordinates(field: Field, d: u32, coords: &[FieldValue]) -> Self {
        let monomials = Monomial::all_of_degree(2, d);
        let k = monomials.len();
        let form = |slice: &[FieldValue]| {
            HomogeneousPolynomial::from_terms(field, 2, d, monomials.iter().cloned().zip(slice.iter().cloned()))
                .expect("degree-d monomials")
        };
        FiberVector { p: form(&coords[..k]), q: form(&coords[k..2 * k]), t: coords[2 * k].clone() }
    }

    pub fn to_map(&self) -> Result<RationalMap> {
        RationalMap::new(vec![self.p.clone(), self.q.clone()])
    }

    /// `a_i`: the coefficient of `x^i y^(d-i)` in `p`.
    pub fn a(&self, i: u32) -> FieldValue {
        self.p.coefficient(&Monomial::new(vec![i, self.p.degree() - i]))
    }

    /// `b_i`: the coefficient of `x^i y^(d-i)` in `q`.
    pub fn b(&self, i: u32) -> FieldValue {
        self.q.coefficient(&Monomial::new(vec![i, self.q.degree() - i]))
    }
}

/// Basis of the `d + 1`-dimensional solution space of `p y - q x = t r`.
#[derive(Clone, Debug)]
pub struct FiberBasis {
    divisor: FixedDivisor,
    vectors: Vec<FiberVector>,
}

impl FiberBasis {
    pub fn divisor(&self) -> &FixedDivisor {
        &self.divisor
    }

    pub fn vectors(&self) -> &[FiberVector] {
        &self.vectors
    }

    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    /// `sum_j c_j v_j`.
    pub fn combine(&self, coefficients: &[FieldValue]) -> Result<FiberVector> {
        if coefficients.len() != self.vectors.len() {
            return Err(Error::DimensionMismatch { expected: self.vectors.len(), found: coefficients.len() });
        }
        let field = self.divisor.field();
        let d = self.divisor.map_degree();
        let mut coords = vec![field.zero(); 2 * (d as usize + 1) + 1];
        for (c, v) in coefficients.iter().zip(&self.vectors) {
            for (acc, x) in coords.iter_mut().zip(v.coordinates()) {
                *acc = &*acc + &(c * &x);
            }
        }
        Ok(FiberVector::from_coordinates(field, d, &coords))
    }

    /// Coordinates of a fiber vector in this basis.
    pub fn express(&self, v: &FiberVector) -> Option<Vec<FieldValue>> {
        let columns: Vec<Vec<FieldValue>> = self.vectors.iter().map(FiberVector::coordinates).collect();
        let rows = columns[0].len();
        let m: Matrix = (0..rows).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
        let target = v.coordinates();
        let solution = linalg::solve(self.divisor.field(), &m, &target)?;
        Some(solution)
    }

    /// Matrix of `v -> conjugate(v, A)` in this basis; column `j` is the
    /// image of basis vector `j`.
    pub fn action_matrix(&self, a: &ProjectiveMatrix) -> Result<Matrix> {
        if !stabilizes_divisor(a, &self.divisor)? {
            return Err(Error::NotAConfigurationSymmetry);
        }
        let images: Vec<Vec<FieldValue>> = self
            .vectors
            .iter()
            .map(|v| {
                let w = conjugate_fiber_vector(v, a, &self.divisor)?;
                self.express(&w).ok_or(Error::NotAConfigurationSymmetry)
            })
            .collect::<Result<_>>()?;
        let k = images.len();
        Ok((0..k).map(|i| (0..k).map(|j| images[j][i].clone()).collect()).collect())
    }
}

pub fn fiber_basis(r: &FixedDivisor) -> Result<FiberBasis> {
    let field = r.field();
    let d = r.map_degree();
    let map_monomials = Monomial::all_of_degree(2, d);
    let targets = Monomial::all_of_degree(2, d + 1);
    let row_of = |m: &Monomial| targets.iter().position(|t| t == m).expect("degree d+1 monomial");
    let k = map_monomials.len();
    let cols = 2 * k + 1;
    let mut m = linalg::zero_matrix(field, targets.len(), cols);
    let (ex, ey) = (Monomial::new(vec![1, 0]), Monomial::new(vec![0, 1]));
    for (j, mono) in map_monomials.iter().enumerate() {
        m[row_of(&mono.mul(&ey))][j] = field.one();
        m[row_of(&mono.mul(&ex))][k + j] = -field.one();
    }
    for (row, t) in targets.iter().enumerate() {
        m[row][2 * k] = -r.form().coefficient(t);
    }
    let vectors: Vec<FiberVector> = linalg::nullspace(field, &m, cols)
        .iter()
        .map(|v| FiberVector::from_coordinates(field, d, v))
        .collect();
    debug_assert_eq!(vectors.len(), d as usize + 1);
    Ok(FiberBasis { divisor: r.clone(), vectors })
}

/// `q = -x^d`, `p = (r + q x) / y` after scaling `r` to have `x^(d+1)`
/// coefficient 1.
pub fn section_from_divisor(r: &FixedDivisor) -> Result<RationalMap> {
    let field = r.field();
    let d = r.map_degree();
    let top = r.form().coefficient(&Monomial::pure_power(2, 0, d + 1));
    let bottom = r.form().coefficient(&Monomial::pure_power(2, 1, d + 1));
    if top.is_zero() || bottom.is_zero() {
        return Err(Error::RootAtZeroOrInfinity);
    }
    let r = r.form().scale(&top.inv()?);
    let q = HomogeneousPolynomial::from_terms(field, 2, d, [(Monomial::pure_power(2, 0, d), -field.one())])?;
    let p = r.add(&q.mul(&x(field))).divide(&y(field)).expect("y divides r - x^(d+1)");
    RationalMap::new(vec![p, q])
}

/// `r(A x) ∝ r`; the set of such `A` is a group, so this agrees with
/// testing `r(A^{-1} x)`.
pub fn stabilizes_divisor(a: &ProjectiveMatrix, r: &FixedDivisor) -> Result<bool> {
    if a.size() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: a.size() });
    }
    if a.field() != r.field() {
        return Err(Error::DescriptorMismatch);
    }
    Ok(forms_proportional(&r.form().substitute(a.entries())?, r.form()))
}

/// All `A` in `PGL(2, F_{q^k})` preserving the divisor.
pub fn configuration_stabilizer(r: &FixedDivisor, ext_degree: usize, jobs: usize) -> Result<FiniteSubgroup> {
    let base = r.field();
    if !base.is_finite() {
        return Err(Error::InfiniteField);
    }
    let field = base.extension_of_degree(ext_degree)?;
    let form = r.form().coerce_into(field)?;
    let lifted = FixedDivisor::new(form)?;
    let elements = search_pgl(field, 2, jobs, |a| stabilizes_divisor(a, &lifted).unwrap_or(false))?;
    FiniteSubgroup::from_elements(elements)
}

/// `A (p, q)(A^{-1} x)` with the matching `t`.
pub fn conjugate_fiber_vector(v: &FiberVector, a: &ProjectiveMatrix, r: &FixedDivisor) -> Result<FiberVector> {
    let inv = a.inverse();
    let p = v.p.substitute(inv.entries())?;
    let q = v.q.substitute(inv.entries())?;
    let new_p = p.scale(a.entry(0, 0)).add(&q.scale(a.entry(0, 1)));
    let new_q = p.scale(a.entry(1, 0)).add(&q.scale(a.entry(1, 1)));
    let s = divisor_of(&new_p, &new_q);
    let field = r.field();
    let t = if s.is_zero() {
        field.zero()
    } else if forms_proportional(&s, r.form()) {
        let (m, c) = r.form().leading_term().unwrap();
        s.coefficient(m).checked_div(c)?
    } else {
        return Err(Error::NotAConfigurationSymmetry);
    };
    Ok(FiberVector { p: new_p, q: new_q, t })
}

pub fn fiber_action_matrix(r: &FixedDivisor, a: &ProjectiveMatrix) -> Result<Matrix> {
    fiber_basis(r)?.action_matrix(a)
}

/// A linear form in the coefficients `a_0..a_d, b_0..b_d`.
#[derive(Clone, Debug)]
struct CoefficientForm(Vec<FieldValue>);

impl CoefficientForm {
    fn zero(field: Field, d: u32) -> Self {
        CoefficientForm(vec![field.zero(); 2 * (d as usize + 1)])
    }

    fn a(field: Field, d: u32, i: u32) -> Self {
        let mut f = Self::zero(field, d);
        f.0[i as usize] = field.one();
        f
    }

    fn b(field: Field, d: u32, i: u32) -> Self {
        let mut f = Self::zero(field, d);
        f.0[(d + 1 + i) as usize] = field.one();
        f
    }

    fn plus(&self, other: &Self) -> Self {
        CoefficientForm(self.0.iter().zip(&other.0).map(|(u, v)| u + v).collect())
    }

    fn times(&self, c: &FieldValue) -> Self {
        CoefficientForm(self.0.iter().map(|u| u * c).collect())
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.times(&-other.0[0].field().one()))
    }

    fn value(&self, v: &FiberVector) -> FieldValue {
        let d = v.p.degree();
        let field = v.t.field();
        (0..=d).fold(field.zero(), |acc, i| {
            &(&acc + &(&self.0[i as usize] * &v.a(i))) + &(&self.0[(d + 1 + i) as usize] * &v.b(i))
        })
    }

    /// Values on the fiber basis.
    fn restrict(&self, basis: &FiberBasis) -> Vec<FieldValue> {
        basis.vectors().iter().map(|v| self.value(v)).collect()
    }
}

/// `l o conj_A`, as values on the basis.
fn pull_back(restricted: &[FieldValue], action: &Matrix) -> Vec<FieldValue> {
    let k = restricted.len();
    (0..k)
        .map(|j| (0..k).fold(restricted[0].field().zero(), |acc, i| &acc + &(&restricted[i] * &action[i][j])))
        .collect()
}

fn nonzero_proportional(u: &[FieldValue], v: &[FieldValue]) -> bool {
    u.iter().any(|x| !x.is_zero()) && proportional(u, v)
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoetherCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoetherReport {
    pub d: u32,
    pub field: String,
    pub lambda: Option<String>,
    pub checks: Vec<NoetherCheck>,
}

impl NoetherReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

struct Checker {
    checks: Vec<NoetherCheck>,
}

impl Checker {
    fn record(&mut self, name: &str, passed: bool) {
        self.checks.push(NoetherCheck { name: name.to_string(), passed });
    }
}

/// Each generator sends each orbit form to a multiple of an orbit form,
/// bijectively.
fn permutes(orbit: &[Vec<FieldValue>], action: &Matrix) -> bool {
    let mut hit = vec![false; orbit.len()];
    for form in orbit {
        let image = pull_back(form, action);
        match orbit.iter().position(|o| nonzero_proportional(&image, o)) {
            Some(k) if !hit[k] => hit[k] = true,
            _ => return false,
        }
    }
    true
}

fn spans(orbit: &[Vec<FieldValue>], dimension: usize) -> bool {
    linalg::rank(orbit) == dimension
}

/// Images of several forms agree with targets up to one common scalar.
fn images_match(sources: &[CoefficientForm], targets: &[CoefficientForm], basis: &FiberBasis, action: &Matrix) -> bool {
    let image: Vec<FieldValue> = sources.iter().flat_map(|f| pull_back(&f.restrict(basis), action)).collect();
    let target: Vec<FieldValue> = targets.iter().flat_map(|f| f.restrict(basis)).collect();
    nonzero_proportional(&image, &target)
}

fn divisor_through(field: Field, roots: &[FieldValue], with_infinity: bool) -> Result<FixedDivisor> {
    let mut r = HomogeneousPolynomial::constant(field, 2, field.one());
    for root in roots {
        r = r.mul(&HomogeneousPolynomial::linear(field, &[field.one(), -root]));
    }
    if with_infinity {
        r = r.mul(&y(field));
    }
    FixedDivisor::new(r)
}

/// Checks the coordinate actions and orbit computations for the fibers of
/// `Fix` at `{0, 1, inf}` (`d = 2`) and `{0, 1, lambda, inf}` (`d = 3`).
pub fn verify_noether_orbits(field: Field, d: u32, lambda: Option<&FieldValue>) -> Result<NoetherReport> {
    let mut checker = Checker { checks: Vec::new() };
    let lambda_text = match d {
        2 => {
            verify_quadratic(field, &mut checker)?;
            None
        }
        3 => {
            let lambda = lambda.ok_or_else(|| Error::BadParameter("d = 3 needs lambda".into()))?;
            if lambda.field() != field {
                return Err(Error::DescriptorMismatch);
            }
            let one = field.one();
            if lambda.is_zero() || lambda.is_one() || (lambda + &one).is_zero() {
                return Err(Error::BadParameter("lambda must avoid 0, 1 and -1".into()));
            }
            verify_cubic(field, lambda, &mut checker)?;
            Some(lambda.to_string())
        }
        _ => return Err(Error::BadParameter(format!("orbit verification covers d = 2 and d = 3, not {d}"))),
    };
    Ok(NoetherReport { d, field: field.descriptor().to_string(), lambda: lambda_text, checks: checker.checks })
}

fn verify_quadratic(field: Field, checker: &mut Checker) -> Result<()> {
    let d = 2;
    let zero = field.zero();
    let r = divisor_through(field, &[zero, field.one()], true)?;
    let basis = fiber_basis(&r)?;
    checker.record("fiber has dimension 3", basis.dimension() == 3);
    let a = |i| CoefficientForm::a(field, d, i);
    let b = |i| CoefficientForm::b(field, d, i);
    let conditions = [a(0), b(2), a(0).plus(&a(1)).plus(&a(2)).minus(&b(0)).minus(&b(1)).minus(&b(2))];
    checker.record(
        "fiber satisfies a0 = 0, b2 = 0, a0 + a1 + a2 = b0 + b1 + b2",
        conditions.iter().all(|c| c.restrict(&basis).iter().all(FieldValue::is_zero)),
    );

    let inversion = ProjectiveMatrix::swap(field);
    let reflection = ProjectiveMatrix::from_integers(field, &[vec![-1, 1], vec![0, 1]])?;
    let inv_action = basis.action_matrix(&inversion)?;
    let refl_action = basis.action_matrix(&reflection)?;
    let coords = [a(2), a(1), b(0)];
    checker.record(
        "1/x sends (a2, a1, b0) to (b0, a2 + a1 - b0, a2)",
        images_match(&coords, &[b(0), a(2).plus(&a(1)).minus(&b(0)), a(2)], &basis, &inv_action),
    );
    checker.record(
        "1 - x sends (a2, a1, b0) to (-a2, a2 + b0, a2 + a1)",
        images_match(
            &coords,
            &[a(2).times(&-field.one()), a(2).plus(&b(0)), a(2).plus(&a(1))],
            &basis,
            &refl_action,
        ),
    );

    let orbit: Vec<CoefficientForm> = if field.characteristic() == 2 {
        vec![a(2), b(0), a(2).plus(&a(1))]
    } else {
        vec![a(2).plus(&b(0)), a(1), a(2).plus(&a(1)).minus(&b(0))]
    };
    let restricted: Vec<Vec<FieldValue>> = orbit.iter().map(|f| f.restrict(&basis)).collect();
    checker.record("orbit permuted by 1/x", permutes(&restricted, &inv_action));
    checker.record("orbit permuted by 1 - x", permutes(&restricted, &refl_action));
    checker.record("orbit spans the fiber coordinates", spans(&restricted, 3));
    Ok(())
}

fn verify_cubic(field: Field, lambda: &FieldValue, checker: &mut Checker) -> Result<()> {
    let d = 3;
    let one = field.one();
    let r = divisor_through(field, &[field.zero(), one.clone(), lambda.clone()], true)?;
    let basis = fiber_basis(&r)?;
    checker.record("fiber has dimension 4", basis.dimension() == 4);
    let a = |i| CoefficientForm::a(field, d, i);
    let b = |i| CoefficientForm::b(field, d, i);
    let lambda_plus_one_inv = (lambda + &one).inv()?;
    let b_sum = b(2).plus(&b(1)).plus(&b(0));

    let b2_identity = b(2).minus(&a(3)).minus(&a(2).minus(&b(1)).times(&lambda_plus_one_inv));
    checker.record(
        "b2 = a3 + (a2 - b1)/(lambda + 1) on the fiber",
        b2_identity.restrict(&basis).iter().all(FieldValue::is_zero),
    );

    // (x - lambda)/(x - 1) and lambda/x.
    let moebius = ProjectiveMatrix::new(field, vec![vec![one.clone(), -lambda], vec![one.clone(), -&one]])?;
    let involution = ProjectiveMatrix::new(field, vec![vec![field.zero(), lambda.clone()], vec![one.clone(), field.zero()]])?;
    let moebius_action = basis.action_matrix(&moebius)?;
    let involution_action = basis.action_matrix(&involution)?;

    let displayed = a(3).plus(&a(2)).plus(&a(1)).minus(&b_sum.times(lambda));
    let simplified = b_sum.times(&(&one - lambda));
    checker.record(
        "a3 + a2 + a1 - lambda (b2 + b1 + b0) = (1 - lambda)(b2 + b1 + b0) on the fiber",
        displayed.restrict(&basis) == simplified.restrict(&basis),
    );
    checker.record(
        "(x - lambda)/(x - 1) sends a3 to (1 - lambda)(b2 + b1 + b0)",
        images_match(&[a(3)], std::slice::from_ref(&simplified), &basis, &moebius_action),
    );
    checker.record(
        "lambda/x sends (a3, a2, b1, b0) to (b0, lambda b1, lambda a2, lambda^2 a3)",
        images_match(
            &[a(3), a(2), b(1), b(0)],
            &[b(0), b(1).times(lambda), a(2).times(lambda), a(3).times(&lambda.pow(2))],
            &basis,
            &involution_action,
        ),
    );

    let third = a(3).plus(&b(0)).plus(&a(2).plus(&b(1).times(lambda)).times(&lambda_plus_one_inv));
    let fourth = b(0)
        .times(&lambda.inv()?)
        .plus(&a(3).times(lambda))
        .plus(&b(1).plus(&a(2).times(lambda)).times(&lambda_plus_one_inv));
    let orbit = [a(3), b(0), third, fourth];
    let restricted: Vec<Vec<FieldValue>> = orbit.iter().map(|f| f.restrict(&basis)).collect();
    checker.record("orbit permuted by lambda/x", permutes(&restricted, &involution_action));
    checker.record("orbit permuted by (x - lambda)/(x - 1)", permutes(&restricted, &moebius_action));
    checker.record("orbit spans the fiber coordinates", spans(&restricted, 4));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(field: Field, terms: &[(i64, [u32; 2])]) -> HomogeneousPolynomial {
        let d = terms[0].1.iter().sum();
        HomogeneousPolynomial::from_terms(
            field,
            2,
            d,
            terms.iter().map(|(c, e)| (Monomial::new(e.to_vec()), field.from_i64(*c))),
        )
        .unwrap()
    }

    fn map(field: Field, p: &[(i64, [u32; 2])], q: &[(i64, [u32; 2])]) -> RationalMap {
        RationalMap::new(vec![form(field, p), form(field, q)]).unwrap()
    }

    #[test]
    fn divisor_examples() {
        let q = Field::rationals();
        let squares = map(q, &[(1, [2, 0])], &[(1, [0, 2])]);
        assert_eq!(fixed_divisor(&squares).unwrap().form(), &form(q, &[(1, [2, 1]), (-1, [1, 2])]));
        let swapped = map(q, &[(1, [0, 2])], &[(1, [2, 0])]);
        assert_eq!(fixed_divisor(&swapped).unwrap().form(), &form(q, &[(-1, [3, 0]), (1, [0, 3])]));
        let degenerate = map(q, &[(1, [2, 0])], &[(1, [1, 1])]);
        assert_eq!(fixed_divisor(&degenerate), Err(Error::DegenerateFixedDivisor));
    }

    #[test]
    fn fiber_dimension_and_conditions() {
        let q = Field::rationals();
        let r = FixedDivisor::new(form(q, &[(1, [2, 1]), (-1, [1, 2])])).unwrap();
        let basis = fiber_basis(&r).unwrap();
        assert_eq!(basis.dimension(), 3);
        for v in basis.vectors() {
            assert!(v.a(0).is_zero());
            assert!(v.b(2).is_zero());
            assert_eq!(&v.a(2) + &v.a(1), &v.b(1) + &v.b(0));
        }
        let cube = FixedDivisor::new(form(q, &[(1, [3, 0]), (-1, [0, 3])])).unwrap();
        let basis = fiber_basis(&cube).unwrap();
        let target = FiberVector { p: form(q, &[(-1, [0, 2])]), q: form(q, &[(-1, [2, 0])]), t: q.one() };
        assert!(basis.express(&target).is_some());
        let double = FixedDivisor::new(form(q, &[(1, [4, 0])])).unwrap();
        assert_eq!(fiber_basis(&double).unwrap().dimension(), 4);
    }

    #[test]
    fn sections() {
        let q = Field::rationals();
        let cube = FixedDivisor::new(form(q, &[(1, [3, 0]), (-1, [0, 3])])).unwrap();
        let phi = section_from_divisor(&cube).unwrap();
        assert!(proj_equal_maps(&phi, &map(q, &[(1, [0, 2])], &[(1, [2, 0])])));
        assert!(cube.is_proportional_to(fixed_divisor(&phi).unwrap().form()));
        let r = FixedDivisor::new(form(q, &[(1, [2, 1]), (-1, [1, 2])])).unwrap();
        assert_eq!(section_from_divisor(&r), Err(Error::RootAtZeroOrInfinity));
    }

    fn proj_equal_maps(a: &RationalMap, b: &RationalMap) -> bool {
        crate::poly::proj_equal(a, b)
    }

    #[test]
    fn configuration_symmetries() {
        let f5 = Field::prime(5).unwrap();
        let r = FixedDivisor::new(form(f5, &[(1, [2, 1]), (-1, [1, 2])])).unwrap();
        assert_eq!(configuration_stabilizer(&r, 1, 1).unwrap().order(), 6);
        let f11 = Field::prime(11).unwrap();
        let r = FixedDivisor::new(form(f11, &[(1, [3, 1]), (-4, [2, 2]), (3, [1, 3])])).unwrap();
        let g = configuration_stabilizer(&r, 1, 2).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.abelian_invariants(), Some(&[2u64, 2][..]));
    }

    #[test]
    fn action_matrices() {
        let q = Field::rationals();
        let r = FixedDivisor::new(form(q, &[(1, [2, 1]), (-1, [1, 2])])).unwrap();
        let identity = ProjectiveMatrix::identity(q, 2);
        assert_eq!(fiber_action_matrix(&r, &identity).unwrap(), linalg::identity(q, 3));
        let stretch = ProjectiveMatrix::from_integers(q, &[vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(fiber_action_matrix(&r, &stretch), Err(Error::NotAConfigurationSymmetry));
    }

    #[test]
    fn noether_checks() {
        let q = Field::rationals();
        let report = verify_noether_orbits(q, 2, None).unwrap();
        assert!(report.passed(), "{report:?}");
        let f2 = Field::prime(2).unwrap();
        let report = verify_noether_orbits(f2, 2, None).unwrap();
        assert!(report.passed(), "{report:?}");
        let two = q.from_i64(2);
        let report = verify_noether_orbits(q, 3, Some(&two)).unwrap();
        assert!(report.passed(), "{report:?}");
        assert!(verify_noether_orbits(q, 3, Some(&q.from_i64(-1))).is_err());
        assert!(verify_noether_orbits(q, 4, None).is_err());
    }
}
