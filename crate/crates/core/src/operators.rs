//! Dunkl-type operator algebra acting exactly on polynomials.
//!
//! Primitive operators are the degree-residue projections `Pi_i(m)`, the
//! grading reflection `R_r`, the derivative `d/dx^r`, multiplication by `x^r`
//! and the Dunkl-type operator `Y`. [`Operator`] composes them into finite
//! expression trees so that commutators and Hamiltonians can be written down
//! directly and evaluated term by term.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use crate::error::{Error, Result};
use crate::params::{int, ModelParams, Rational};
use crate::poly::{Exponent, LaurentPoly, Poly, SparsePoly};

/// `Pi_i(m)`: keeps the terms with degree congruent to `i` modulo `m`.
pub fn project<E: Exponent>(p: &Poly<E>, index: u32, modulus: u32) -> Result<Poly<E>> {
    if modulus == 0 || index >= modulus {
        return Err(Error::Argument(format!(
            "projection index {index} must lie in 0..{modulus}"
        )));
    }
    let m = i64::from(modulus);
    let i = i64::from(index);
    Ok(p.filter_degrees(|d| d.to_i64().rem_euclid(m) == i))
}

/// `R_r = sum_s (Pi_s(2r) - Pi_{r+s}(2r))`: `+1` on residues `0..r`, `-1` on `r..2r`.
pub fn reflect_rr<E: Exponent>(p: &Poly<E>, params: &ModelParams) -> Poly<E> {
    let r = i64::from(params.r());
    p.map_coeffs(|d, c| {
        if d.to_i64().rem_euclid(2 * r) < r {
            c.clone()
        } else {
            -c.clone()
        }
    })
}

/// `d/dx^r = (1/(r x^(r-1))) d/dx`, i.e. `x^k -> (k/r) x^(k-r)`.
pub fn deriv_dxr(p: &LaurentPoly, params: &ModelParams) -> LaurentPoly {
    let r = params.r() as i32;
    LaurentPoly::from_terms(p.terms().map(|(k, c)| {
        (
            k - r,
            c * Rational::new(i64::from(k).into(), i64::from(r).into()),
        )
    }))
}

pub fn mul_xr(p: &LaurentPoly, params: &ModelParams) -> LaurentPoly {
    p.shift(params.r() as i32)
}

/// `Y = d/dx^r + (1/(r x^r)) sum_s [(2nu+1+s-r) Pi_{r+s}(2r) - s Pi_s(2r)]`
/// applied literally on the Laurent representation.
pub fn dunkl_y_laurent(p: &LaurentPoly, params: &ModelParams) -> LaurentPoly {
    let r = params.r();
    let mut difference = LaurentPoly::zero();
    for s in 0..r {
        let odd_weight = int(2) * params.nu() + int(1 + i64::from(s) - i64::from(r));
        let odd = project(p, r + s, 2 * r).expect("valid residue");
        let even = project(p, s, 2 * r).expect("valid residue");
        difference = &difference + &odd.scale(&odd_weight);
        difference = &difference - &even.scale(&int(i64::from(s)));
    }
    let divided = difference
        .shift(-(r as i32))
        .scale(&Rational::new(1.into(), i64::from(r).into()));
    &deriv_dxr(p, params) + &divided
}

/// `Y` on an ordinary polynomial. Negative powers produced by the Laurent
/// intermediate must cancel; if one survives an [`Error::Invariant`] is returned.
pub fn dunkl_y(p: &SparsePoly, params: &ModelParams) -> Result<SparsePoly> {
    dunkl_y_laurent(&p.to_laurent(), params)
        .to_sparse()
        .ok_or_else(|| Error::Invariant(format!("Y({p}) left a negative power of x")))
}

/// Closed description of an operator as a finite expression tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Operator {
    Identity,
    Projection {
        index: u32,
        modulus: u32,
    },
    ReflectR,
    DerivDxr,
    DunklY,
    MulXr,
    Scaled(Rational, Box<Operator>),
    /// Product `A_0 A_1 ... A_k`; the rightmost factor acts first.
    Compose(Vec<Operator>),
    Sum(Vec<Operator>),
}

impl Operator {
    pub fn projection(index: u32, modulus: u32) -> Self {
        Operator::Projection { index, modulus }
    }

    pub fn scaled(self, c: Rational) -> Self {
        Operator::Scaled(c, Box::new(self))
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(a: &Operator, b: &Operator) -> Self {
        a.clone() * b.clone() - b.clone() * a.clone()
    }

    /// `{a, b} = ab + ba`.
    pub fn anticommutator(a: &Operator, b: &Operator) -> Self {
        a.clone() * b.clone() + b.clone() * a.clone()
    }

    pub fn apply(&self, p: &LaurentPoly, params: &ModelParams) -> Result<LaurentPoly> {
        Ok(match self {
            Operator::Identity => p.clone(),
            Operator::Projection { index, modulus } => project(p, *index, *modulus)?,
            Operator::ReflectR => reflect_rr(p, params),
            Operator::DerivDxr => deriv_dxr(p, params),
            Operator::DunklY => dunkl_y_laurent(p, params),
            Operator::MulXr => mul_xr(p, params),
            Operator::Scaled(c, inner) => inner.apply(p, params)?.scale(c),
            Operator::Compose(factors) => {
                let mut acc = p.clone();
                for factor in factors.iter().rev() {
                    acc = factor.apply(&acc, params)?;
                }
                acc
            }
            Operator::Sum(parts) => {
                let mut acc = LaurentPoly::zero();
                for part in parts {
                    acc = &acc + &part.apply(p, params)?;
                }
                acc
            }
        })
    }
}

/// Applies `op` to a polynomial; fails with [`Error::Domain`] if the result
/// is not a polynomial (e.g. `d/dx^r` alone applied to `x`).
pub fn apply_operator(op: &Operator, p: &SparsePoly, params: &ModelParams) -> Result<SparsePoly> {
    op.apply(&p.to_laurent(), params)?
        .to_sparse()
        .ok_or_else(|| Error::Domain(format!("{op:?} applied to {p} is not a polynomial")))
}

impl Mul for Operator {
    type Output = Operator;
    fn mul(self, rhs: Operator) -> Operator {
        let mut factors = Vec::new();
        for op in [self, rhs] {
            match op {
                Operator::Compose(inner) => factors.extend(inner),
                other => factors.push(other),
            }
        }
        Operator::Compose(factors)
    }
}

impl Add for Operator {
    type Output = Operator;
    fn add(self, rhs: Operator) -> Operator {
        let mut parts = Vec::new();
        for op in [self, rhs] {
            match op {
                Operator::Sum(inner) => parts.extend(inner),
                other => parts.push(other),
            }
        }
        Operator::Sum(parts)
    }
}

impl Neg for Operator {
    type Output = Operator;
    fn neg(self) -> Operator {
        self.scaled(-Rational::one())
    }
}

impl Sub for Operator {
    type Output = Operator;
    fn sub(self, rhs: Operator) -> Operator {
        self + (-rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::rational;
    use proptest::prelude::*;

    fn params(r: u32, n: i64, d: i64) -> ModelParams {
        ModelParams::from_ratio(r, n, d).unwrap()
    }

    fn mono(d: u32) -> SparsePoly {
        SparsePoly::x_pow(d)
    }

    fn arb_poly(max_degree: u32) -> impl Strategy<Value = SparsePoly> {
        prop::collection::vec((0..=max_degree, -20i64..20, 1i64..5), 0..8).prop_map(|terms| {
            SparsePoly::from_terms(terms.into_iter().map(|(d, n, q)| (d, rational(n, q))))
        })
    }

    #[test]
    fn projection_examples() {
        assert_eq!(project(&mono(2), 0, 2).unwrap(), mono(2));
        assert!(project(&mono(2), 1, 2).unwrap().is_zero());
        assert_eq!(project(&mono(8), 2, 6).unwrap(), mono(8));
        assert!(matches!(project(&mono(8), 6, 6), Err(Error::Argument(_))));
        let laurent = LaurentPoly::x_pow(-1);
        assert_eq!(project(&laurent, 5, 6).unwrap(), laurent);
    }

    #[test]
    fn reflection_examples() {
        let p3 = params(3, 1, 1);
        assert_eq!(reflect_rr(&mono(2), &p3), mono(2));
        assert_eq!(reflect_rr(&mono(4), &p3), -mono(4));
        let p1 = params(1, 1, 2);
        let p = SparsePoly::from_terms([(0, int(1)), (1, int(2)), (2, int(3)), (5, int(-1))]);
        assert_eq!(reflect_rr(&p, &p1), p.reflect());
    }

    #[test]
    fn derivative_examples() {
        let p3 = params(3, 1, 1);
        assert_eq!(
            deriv_dxr(&LaurentPoly::x_pow(7), &p3),
            LaurentPoly::monomial(4, rational(7, 3))
        );
        assert!(deriv_dxr(&LaurentPoly::one(), &p3).is_zero());
        let p1 = params(1, 0, 1);
        let p = SparsePoly::from_terms([(0, int(4)), (3, int(2)), (5, int(-1))]);
        assert_eq!(
            deriv_dxr(&p.to_laurent(), &p1).to_sparse().unwrap(),
            p.derivative()
        );
    }

    #[test]
    fn dunkl_monomial_examples() {
        let p3 = params(3, 1, 1);
        for s in 0..3 {
            assert!(dunkl_y(&mono(s), &p3).unwrap().is_zero());
        }
        assert_eq!(
            dunkl_y(&mono(7), &p3).unwrap(),
            SparsePoly::monomial(4, int(2))
        );
        assert_eq!(
            dunkl_y(&mono(4), &p3).unwrap(),
            SparsePoly::monomial(1, rational(5, 3))
        );
    }

    #[test]
    fn dunkl_monomial_action_is_deformed_number() {
        for r in [1u32, 3, 5] {
            for (n, d) in [(0, 1), (1, 2), (1, 1), (7, 3)] {
                let params = params(r, n, d);
                for degree in 0..=60 {
                    let expected = if degree < r {
                        SparsePoly::zero()
                    } else {
                        SparsePoly::monomial(degree - r, params.deformed_number(degree))
                    };
                    assert_eq!(dunkl_y(&mono(degree), &params).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn commutator_tag_on_monomials() {
        let params = params(5, 7, 3);
        let comm = Operator::commutator(&Operator::DunklY, &Operator::MulXr);
        for degree in 0..=30 {
            let gap = params.deformed_number(degree + 5) - params.deformed_number(degree);
            assert_eq!(
                apply_operator(&comm, &mono(degree), &params).unwrap(),
                SparsePoly::monomial(degree, gap)
            );
        }
    }

    #[test]
    fn non_polynomial_result_is_reported() {
        let params = params(3, 1, 1);
        let err = apply_operator(&Operator::DerivDxr, &mono(1), &params).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }

    proptest! {
        #[test]
        fn reflection_anticommutes(p in arb_poly(30), r_idx in 0usize..3) {
            let params = params([1, 3, 5][r_idx], 7, 3);
            let y_anti = Operator::anticommutator(&Operator::DunklY, &Operator::ReflectR);
            let x_anti = Operator::anticommutator(&Operator::MulXr, &Operator::ReflectR);
            prop_assert!(apply_operator(&y_anti, &p, &params).unwrap().is_zero());
            prop_assert!(apply_operator(&x_anti, &p, &params).unwrap().is_zero());
            let twice = Operator::ReflectR * Operator::ReflectR;
            prop_assert_eq!(apply_operator(&twice, &p, &params).unwrap(), p);
        }

        #[test]
        fn projections_resolve_identity(p in arb_poly(40), m in 1u32..8) {
            let mut total = SparsePoly::zero();
            for i in 0..m {
                let pi = project(&p, i, m).unwrap();
                prop_assert_eq!(project(&pi, i, m).unwrap(), pi.clone());
                for j in 0..m {
                    if j != i {
                        prop_assert!(project(&pi, j, m).unwrap().is_zero());
                    }
                }
                total = &total + &pi;
            }
            prop_assert_eq!(total, p);
        }
    }
}
