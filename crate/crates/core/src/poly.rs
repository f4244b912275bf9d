//! Sparse univariate polynomials with exact rational coefficients.
//!
//! [`Poly`] is generic over its exponent type: [`SparsePoly`] uses `u32`
//! degrees, [`LaurentPoly`] allows negative degrees and is only used as an
//! intermediate while applying operators that divide by `x^r`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::params::Rational;

pub trait Exponent:
    Copy + Ord + fmt::Debug + fmt::Display + Add<Output = Self> + Send + Sync + 'static
{
    const ZERO: Self;
    fn to_i64(self) -> i64;
}

impl Exponent for u32 {
    const ZERO: Self = 0;
    fn to_i64(self) -> i64 {
        i64::from(self)
    }
}

impl Exponent for i32 {
    const ZERO: Self = 0;
    fn to_i64(self) -> i64 {
        i64::from(self)
    }
}

/// Map from degree to a nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E: Exponent> {
    terms: BTreeMap<E, Rational>,
}

pub type SparsePoly = Poly<u32>;
pub type LaurentPoly = Poly<i32>;

impl<E: Exponent> Default for Poly<E> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<E: Exponent> Poly<E> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(E::ZERO, c)
    }

    pub fn monomial(degree: E, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(degree, coeff);
        }
        Self { terms }
    }

    /// `x^degree` with unit coefficient.
    pub fn x_pow(degree: E) -> Self {
        Self::monomial(degree, Rational::one())
    }

    /// Builds a polynomial from `(degree, coeff)` pairs, summing repeated degrees.
    pub fn from_terms<I: IntoIterator<Item = (E, Rational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (degree, coeff) in terms {
            out.add_term(degree, coeff);
        }
        out
    }

    pub fn add_term(&mut self, degree: E, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(degree).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&degree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<E> {
        self.terms.keys().next_back().copied()
    }

    pub fn lowest_degree(&self) -> Option<E> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    pub fn coeff(&self, degree: E) -> Rational {
        self.terms
            .get(&degree)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending degree order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (E, &Rational)> + '_ {
        self.terms.iter().map(|(d, c)| (*d, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(d, v)| (*d, v * c)).collect(),
        }
    }

    /// Multiplies each coefficient by `f(degree)`, dropping terms that become zero.
    pub fn map_coeffs<F: FnMut(E, &Rational) -> Rational>(&self, mut f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(d, c)| (*d, f(*d, c))))
    }

    /// Keeps the terms whose degree satisfies `keep`.
    pub fn filter_degrees<F: FnMut(E) -> bool>(&self, mut keep: F) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(d, _)| keep(**d))
                .map(|(d, c)| (*d, c.clone()))
                .collect(),
        }
    }

    /// Coefficients as `f64`, ascending by degree.
    pub fn coeffs_f64(&self) -> Vec<(E, f64)> {
        self.terms
            .iter()
            .map(|(d, c)| (*d, rational_to_f64(c)))
            .collect()
    }

    /// Horner evaluation over the sparse degrees. Negative degrees require `z != 0`.
    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        let Some(low) = self.lowest_degree() else {
            return Ok(Complex64::zero());
        };
        let low = low.to_i64();
        if low < 0 && z == Complex64::zero() {
            return Err(Error::Domain(
                "cannot evaluate a negative-degree term at z = 0".into(),
            ));
        }
        let mut acc = Complex64::zero();
        let mut prev: Option<i64> = None;
        for (degree, coeff) in self.terms.iter().rev() {
            let degree = degree.to_i64();
            if let Some(p) = prev {
                acc *= complex_pow(z, p - degree);
            }
            acc += Complex64::new(rational_to_f64(coeff), 0.0);
            prev = Some(degree);
        }
        Ok(acc * complex_pow(z, low))
    }
}

fn complex_pow(z: Complex64, k: i64) -> Complex64 {
    let k = i32::try_from(k).expect("polynomial degree fits in i32");
    if k >= 0 {
        z.powi(k)
    } else {
        z.inv().powi(-k)
    }
}

/// Nearest `f64`, falling back to numerator/denominator division for huge values.
pub fn rational_to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or_else(|| {
        let n = value.numer().to_f64().unwrap_or(f64::NAN);
        let d = value.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl SparsePoly {
    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (i32::try_from(*d).expect("degree fits in i32"), c.clone()))
                .collect(),
        }
    }

    /// `p(x) * x^shift`.
    pub fn mul_x_pow(&self, shift: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (d + shift, c.clone()))
                .collect(),
        }
    }

    /// `p(x^k)`.
    pub fn substitute_power(&self, k: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(d, c)| (d * k, c.clone())).collect(),
        }
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        self.map_coeffs(|d, c| if d % 2 == 1 { -c.clone() } else { c.clone() })
    }

    /// Ordinary derivative.
    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(d, _)| **d > 0)
                .map(|(d, c)| (d - 1, c * Rational::from_integer((*d).into()))),
        )
    }

    /// Exact division by `x^k`; `None` if some term has degree below `k`.
    pub fn div_x_pow(&self, k: u32) -> Option<Self> {
        if self.lowest_degree().is_some_and(|low| low < k) {
            return None;
        }
        Some(Self {
            terms: self.terms.iter().map(|(d, c)| (d - k, c.clone())).collect(),
        })
    }
}

impl LaurentPoly {
    /// `p(x) * x^shift`, `shift` may be negative.
    pub fn shift(&self, shift: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (d + shift, c.clone()))
                .collect(),
        }
    }

    /// Converts back to an ordinary polynomial if no negative degree survives.
    pub fn to_sparse(&self) -> Option<SparsePoly> {
        if self.lowest_degree().is_some_and(|low| low < 0) {
            return None;
        }
        Some(SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (u32::try_from(*d).expect("nonnegative"), c.clone()))
                .collect(),
        })
    }
}

impl<E: Exponent> Add for &Poly<E> {
    type Output = Poly<E>;
    fn add(self, rhs: &Poly<E>) -> Poly<E> {
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(*d, c.clone());
        }
        out
    }
}

impl<E: Exponent> Sub for &Poly<E> {
    type Output = Poly<E>;
    fn sub(self, rhs: &Poly<E>) -> Poly<E> {
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(*d, -c.clone());
        }
        out
    }
}

impl<E: Exponent> Mul for &Poly<E> {
    type Output = Poly<E>;
    fn mul(self, rhs: &Poly<E>) -> Poly<E> {
        let mut out = Poly::zero();
        for (da, ca) in &self.terms {
            for (db, cb) in &rhs.terms {
                out.add_term(*da + *db, ca * cb);
            }
        }
        out
    }
}

impl<E: Exponent> Neg for &Poly<E> {
    type Output = Poly<E>;
    fn neg(self) -> Poly<E> {
        Poly {
            terms: self.terms.iter().map(|(d, c)| (*d, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $method:ident),*) => {$(
        impl<E: Exponent> $tr for Poly<E> {
            type Output = Poly<E>;
            fn $method(self, rhs: Poly<E>) -> Poly<E> {
                (&self).$method(&rhs)
            }
        }
        impl<E: Exponent> $tr<&Poly<E>> for Poly<E> {
            type Output = Poly<E>;
            fn $method(self, rhs: &Poly<E>) -> Poly<E> {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<E: Exponent> Neg for Poly<E> {
    type Output = Poly<E>;
    fn neg(self) -> Poly<E> {
        -&self
    }
}

impl<E: Exponent> fmt::Display for Poly<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (degree, coeff)) in self.terms.iter().rev().enumerate() {
            let magnitude = coeff.abs();
            let sign = if coeff.is_negative() { "-" } else { "+" };
            match (i, coeff.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                _ => write!(f, " {sign} ")?,
            }
            let deg = degree.to_i64();
            let unit = magnitude.is_one();
            if deg == 0 {
                write!(f, "{magnitude}")?;
                continue;
            }
            if !unit {
                if magnitude.is_integer() {
                    write!(f, "{magnitude}")?;
                } else {
                    write!(f, "({magnitude})")?;
                }
            }
            if deg == 1 {
                write!(f, "x")?;
            } else {
                write!(f, "x^{deg}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{int, rational};
    use proptest::prelude::*;

    fn poly(terms: &[(u32, i64)]) -> SparsePoly {
        SparsePoly::from_terms(terms.iter().map(|(d, c)| (*d, int(*c))))
    }

    #[test]
    fn ring_arithmetic() {
        let a = poly(&[(1, 1), (0, 1)]);
        let b = poly(&[(1, 1), (0, -1)]);
        assert_eq!(&a * &b, poly(&[(2, 1), (0, -1)]));
        assert_eq!(poly(&[(3, 2)]).scale(&rational(1, 2)), SparsePoly::x_pow(3));
        assert_eq!(&a + &SparsePoly::zero(), a);
        assert!((&a - &a).is_zero());
        assert_eq!(SparsePoly::zero().degree(), None);
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[(6, 4), (0, -2)]).to_string(), "4x^6 - 2");
        assert_eq!(SparsePoly::zero().to_string(), "0");
        let p = SparsePoly::from_terms([(1, rational(-5, 3)), (0, int(1))]);
        assert_eq!(p.to_string(), "-(5/3)x + 1");
    }

    #[test]
    fn evaluation() {
        let i = Complex64::new(0.0, 1.0);
        assert_eq!(
            SparsePoly::one().evaluate(i).unwrap(),
            Complex64::new(1.0, 0.0)
        );
        let sq = SparsePoly::x_pow(2).evaluate(i).unwrap();
        assert!((sq - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
        let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        let v = poly(&[(3, 2)]).evaluate(w).unwrap();
        assert!((v - Complex64::new(2.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn laurent_evaluation_domain() {
        let p = LaurentPoly::from_terms([(-2, int(1)), (1, int(3))]);
        assert!(matches!(
            p.evaluate(Complex64::zero()),
            Err(Error::Domain(_))
        ));
        let v = p.evaluate(Complex64::new(2.0, 0.0)).unwrap();
        assert!((v.re - 6.25).abs() < 1e-15);
        assert!(p.to_sparse().is_none());
        assert_eq!(p.shift(2).to_sparse().unwrap(), poly(&[(0, 1), (3, 3)]));
    }

    #[test]
    fn float_evaluation_accuracy() {
        // degree-64 polynomial with mixed coefficients at |z| = 10
        let p = SparsePoly::from_terms((0..=64u32).map(|k| (k, rational(k as i64 % 7 + 1, 3))));
        let z = Complex64::from_polar(10.0, 0.7);
        let horner = p.evaluate(z).unwrap();
        let mut naive = Complex64::zero();
        for (d, c) in p.coeffs_f64() {
            naive += c * z.powi(d as i32);
        }
        assert!((horner - naive).norm() / naive.norm() < 1e-13);
    }

    proptest! {
        #[test]
        fn multiplication_distributes(
            a in prop::collection::vec((0u32..12, -9i64..9), 0..6),
            b in prop::collection::vec((0u32..12, -9i64..9), 0..6),
            c in prop::collection::vec((0u32..12, -9i64..9), 0..6),
        ) {
            let (a, b, c) = (poly(&a), poly(&b), poly(&c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!(!(&a + &b).terms().any(|(_, c)| c.is_zero()));
        }

        #[test]
        fn evaluation_is_a_ring_homomorphism(
            a in prop::collection::vec((0u32..10, -9i64..9), 0..6),
            b in prop::collection::vec((0u32..10, -9i64..9), 0..6),
            re in -1.5f64..1.5, im in -1.5f64..1.5,
        ) {
            let (a, b) = (poly(&a), poly(&b));
            let z = Complex64::new(re, im);
            let lhs = (&a * &b).evaluate(z).unwrap();
            let rhs = a.evaluate(z).unwrap() * b.evaluate(z).unwrap();
            prop_assert!((lhs - rhs).norm() <= 1e-9 * (1.0 + rhs.norm()));
        }
    }
}
