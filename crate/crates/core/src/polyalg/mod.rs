//! Exact multivariate polynomials over the rationals in the variables
//! `x`, `α` and `β`, together with determinants of polynomial matrices
//! and exact linear solving.
//!
//! Polynomials are stored sparsely as a map from exponent triples
//! `(deg_x, deg_α, deg_β)` to nonzero [`BigRational`] coefficients. Zero
//! coefficients are never stored, so structural equality is polynomial
//! equality.

mod format;
mod linear;
mod matrix;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use format::ParsePolyError;
pub(crate) use linear::rational_str;
pub use linear::{solve_linear, InfeasibilityCertificate, LinearSolution};
pub use matrix::PolyMatrix;
pub use num_rational::BigRational;

/// Exponents of `(x, α, β)`.
pub type Exponent = [u32; 3];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("matrix is {rows}x{cols}, determinant needs a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
}

/// The three variables a polynomial may depend on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Alpha,
    Beta,
}

impl Var {
    fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Alpha => 1,
            Var::Beta => 2,
        }
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn mul_coeffs(a: &BigRational, b: &BigRational) -> BigRational {
    // Integer coefficients are the common case; skip the gcd work Ratio does.
    if a.denom().is_one() && b.denom().is_one() {
        BigRational::from_integer(a.numer() * b.numer())
    } else {
        a * b
    }
}

fn add_coeffs(a: &BigRational, b: &BigRational) -> BigRational {
    if a.denom().is_one() && b.denom().is_one() {
        BigRational::from_integer(a.numer() + b.numer())
    } else {
        a + b
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: BTreeMap<Exponent, BigRational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        MPoly::monomial([0, 0, 0], c)
    }

    pub fn from_int(n: i64) -> Self {
        MPoly::constant(rat(n))
    }

    pub fn monomial(exp: Exponent, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        MPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        let mut exp = [0; 3];
        exp[v.index()] = 1;
        MPoly::monomial(exp, BigRational::one())
    }

    pub fn x() -> Self {
        MPoly::var(Var::X)
    }

    pub fn alpha() -> Self {
        MPoly::var(Var::Alpha)
    }

    pub fn beta() -> Self {
        MPoly::var(Var::Beta)
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and
    /// dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, BigRational)>,
    {
        let mut p = MPoly::zero();
        for (exp, c) in terms {
            p.add_term(exp, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&[0, 0, 0])
                .is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &Exponent) -> BigRational {
        self.terms.get(exp).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Returns the constant coefficient if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&[0, 0, 0]).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, exp: Exponent, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = add_coeffs(e.get(), c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &MPoly, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        for (exp, v) in &other.terms {
            self.add_term(*exp, &mul_coeffs(v, c));
        }
    }

    pub fn scale(&self, c: &BigRational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e, mul_coeffs(v, c)))
                .collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> MPoly {
        self.scale(&rat(n))
    }

    pub fn div_scalar(&self, c: &BigRational) -> Result<MPoly, PolyError> {
        if c.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(self.scale(&c.recip()))
    }

    pub fn pow(&self, mut e: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Degree in `x`; `None` stands for the degree of the zero polynomial
    /// (minus infinity).
    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|e| e[0]).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|e| e[v.index()]).max()
    }

    /// Coefficient of the highest power of `x`, as a polynomial in `α`, `β`.
    pub fn leading_coeff_x(&self) -> MPoly {
        let Some(d) = self.degree_x() else {
            return MPoly::zero();
        };
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[0] == d)
                .map(|(e, c)| ([0, e[1], e[2]], c.clone()))
                .collect(),
        }
    }

    /// Monic in `x`: the leading `x` coefficient is exactly `1`.
    pub fn is_monic_x(&self) -> bool {
        self.leading_coeff_x().is_one()
    }

    /// All coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn derivative_x(&self) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[0] > 0)
                .map(|(e, c)| ([e[0] - 1, e[1], e[2]], c * rat(i64::from(e[0]))))
                .collect(),
        }
    }

    pub fn nth_derivative_x(&self, n: u32) -> MPoly {
        (0..n).fold(self.clone(), |p, _| p.derivative_x())
    }

    /// Replaces `v` by `value` everywhere.
    pub fn substitute(&self, v: Var, value: &MPoly) -> MPoly {
        let idx = v.index();
        let max = self.degree_in(v).unwrap_or(0) as usize;
        let mut powers = Vec::with_capacity(max + 1);
        powers.push(MPoly::one());
        for k in 1..=max {
            let next = &powers[k - 1] * value;
            powers.push(next);
        }
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            let mut rest = *e;
            rest[idx] = 0;
            let shifted = powers[e[idx] as usize].shift(rest);
            out.add_scaled(&shifted, c);
        }
        out
    }

    /// Substitutes a rational value for `v`.
    pub fn eval(&self, v: Var, value: &BigRational) -> MPoly {
        self.substitute(v, &MPoly::constant(value.clone()))
    }

    /// Multiplies by the monomial with exponent `by`.
    fn shift(&self, by: Exponent) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ([e[0] + by[0], e[1] + by[1], e[2] + by[2]], c.clone()))
                .collect(),
        }
    }

    /// Coefficients of `x^0, x^1, ...` as polynomials in `α`, `β`.
    pub fn x_coefficients(&self) -> Vec<MPoly> {
        let n = self.degree_x().map_or(0, |d| d as usize + 1);
        let mut out = vec![MPoly::zero(); n];
        for (e, c) in &self.terms {
            out[e[0] as usize]
                .terms
                .insert([0, e[1], e[2]], c.clone());
        }
        out
    }

    /// Coefficient of `x^k` for a polynomial that only depends on `x`.
    pub fn x_coeff(&self, k: u32) -> BigRational {
        self.coeff(&[k, 0, 0])
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl<'a> Add<&'a MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'a MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: MPoly) -> MPoly {
        self += &rhs;
        self
    }
}

impl<'a> AddAssign<&'a MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &'a MPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl<'a> SubAssign<&'a MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &'a MPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, &-c);
        }
    }
}

impl<'a> Sub<&'a MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'a MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(mut self, rhs: MPoly) -> MPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl<'a> Mul<&'a MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'a MPoly) -> MPoly {
        let mut out = MPoly::zero();
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                out.add_term(e, &mul_coeffs(ca, cb));
            }
        }
        out
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl From<BigRational> for MPoly {
    fn from(c: BigRational) -> Self {
        MPoly::constant(c)
    }
}

impl From<i64> for MPoly {
    fn from(n: i64) -> Self {
        MPoly::from_int(n)
    }
}

/// Exact rational `n!`.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x_plus_a() -> MPoly {
        &MPoly::x() + &MPoly::alpha()
    }

    #[test]
    fn additive_identity() {
        assert_eq!(&x_plus_a() + &MPoly::zero(), x_plus_a());
    }

    #[test]
    fn square_expands() {
        let sq = &x_plus_a() * &x_plus_a();
        let expected = MPoly::from_terms([
            ([2, 0, 0], rat(1)),
            ([1, 1, 0], rat(2)),
            ([0, 2, 0], rat(1)),
        ]);
        assert_eq!(sq, expected);
        assert_eq!(x_plus_a().pow(2), expected);
    }

    #[test]
    fn scale_by_half() {
        let p = MPoly::x().scale(&ratio(1, 2));
        assert_eq!(p.coeff(&[1, 0, 0]), ratio(1, 2));
        assert_eq!(p.num_terms(), 1);
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = &x_plus_a() - &x_plus_a();
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
        assert_eq!(p.degree_x(), None);
    }

    #[test]
    fn derivative_of_second_modified_laguerre() {
        // x^2 + 2αx + α^2 - α
        let l2 = MPoly::from_terms([
            ([2, 0, 0], rat(1)),
            ([1, 1, 0], rat(2)),
            ([0, 2, 0], rat(1)),
            ([0, 1, 0], rat(-1)),
        ]);
        assert_eq!(l2.derivative_x(), x_plus_a().scale_int(2));
        assert!(MPoly::alpha().pow(3).derivative_x().is_zero());
        assert_eq!(MPoly::x().derivative_x(), MPoly::one());
    }

    #[test]
    fn substitute_sign_flip() {
        let p = &(&-MPoly::x() + &MPoly::alpha()) + &MPoly::one();
        let flipped = p.substitute(Var::X, &-MPoly::x());
        assert_eq!(flipped, &(&MPoly::x() + &MPoly::alpha()) + &MPoly::one());
    }

    #[test]
    fn substitute_alpha_zero_erases_alpha() {
        let p = &x_plus_a() * &x_plus_a();
        let q = p.eval(Var::Alpha, &rat(0));
        assert_eq!(q, MPoly::x().pow(2));
        assert_eq!(q.degree_in(Var::Alpha), Some(0));
    }

    #[test]
    fn leading_coefficient_and_monic() {
        let p = &MPoly::x().pow(3).scale_int(2) + &MPoly::alpha();
        assert_eq!(p.degree_x(), Some(3));
        assert_eq!(p.leading_coeff_x(), MPoly::from_int(2));
        assert!(!p.is_monic_x());
        assert!(x_plus_a().is_monic_x());
    }

    #[test]
    fn div_scalar_rejects_zero() {
        assert_eq!(
            MPoly::x().div_scalar(&rat(0)),
            Err(PolyError::DivisionByZero)
        );
    }
}
