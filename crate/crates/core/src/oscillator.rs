//! Hermite functions on the radial lines and the oscillator built on `Y`.
//!
//! A [`WeightedFunction`] stands for `scale * e^(-x^(2r)/2) * poly(x)`. The
//! Gaussian is never expanded: since `(d/dx^r) e^(-x^(2r)/2) = -x^r e^(-x^(2r)/2)`
//! and the Gaussian sits in residue class 0 mod `2r`, `Y` acts on the
//! polynomial part as `Y - x^r` while `R_r`, the projections and `x^r` act
//! unchanged. All exact work uses the unnormalized operators
//!
//! * `A  = sqrt(2) a      -> Y`
//! * `A+ = sqrt(2) a^dag  -> 2x^r - Y`
//! * `S  = sqrt(2) Q      -> (Y - x^r) R_r + x^r`
//!
//! so polynomial parts keep rational coefficients; `sqrt(2)` and the norms
//! only ever enter the `f64` scale.

use num_complex::Complex64;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hermite::{radial_hermite, radial_hermite_family, Method};
use crate::inner_product::{norm_sq, Pairing};
use crate::operators::{apply_operator, Operator};
use crate::params::{int, rational, ModelParams, Parity, Rational};
use crate::poly::{rational_to_f64, SparsePoly};

/// `scale * e^(-x^(2r)/2) * poly(x)`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedFunction {
    pub params: ModelParams,
    pub scale: f64,
    pub poly: SparsePoly,
}

impl WeightedFunction {
    pub fn new(params: &ModelParams, poly: SparsePoly) -> Self {
        Self {
            params: params.clone(),
            scale: 1.0,
            poly,
        }
    }

    fn with(&self, scale: f64, poly: SparsePoly) -> Self {
        Self {
            params: self.params.clone(),
            scale,
            poly,
        }
    }

    /// Coefficients of the polynomial part including the scale.
    pub fn coeffs_f64(&self) -> Vec<(u32, f64)> {
        self.poly
            .coeffs_f64()
            .into_iter()
            .map(|(d, c)| (d, c * self.scale))
            .collect()
    }

    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        let envelope = (-z.powi(2 * self.params.r() as i32) / 2.0).exp();
        Ok(self.poly.evaluate(z)? * envelope * self.scale)
    }

    /// Whether the float views agree coefficient-wise to `rel_tol` of the largest coefficient.
    pub fn approx_eq(&self, other: &WeightedFunction, rel_tol: f64) -> bool {
        let lhs = self.coeffs_f64();
        let rhs = other.coeffs_f64();
        let scale = lhs
            .iter()
            .chain(rhs.iter())
            .map(|(_, c)| c.abs())
            .fold(0.0, f64::max);
        if scale == 0.0 {
            return true;
        }
        let mut degrees: Vec<u32> = lhs.iter().chain(rhs.iter()).map(|(d, _)| *d).collect();
        degrees.sort_unstable();
        degrees.dedup();
        let coeff =
            |v: &[(u32, f64)], d: u32| v.iter().find(|(k, _)| *k == d).map_or(0.0, |(_, c)| *c);
        degrees
            .into_iter()
            .all(|d| (coeff(&lhs, d) - coeff(&rhs, d)).abs() <= rel_tol * scale)
    }
}

/// `A`: the lowering operator on polynomial parts.
pub fn lowering_op() -> Operator {
    Operator::DunklY
}

/// `A+`: the raising operator on polynomial parts.
pub fn raising_op() -> Operator {
    Operator::MulXr.scaled(int(2)) - Operator::DunklY
}

/// `Y` conjugated through the Gaussian.
pub fn conjugated_y_op() -> Operator {
    Operator::DunklY - Operator::MulXr
}

/// `S = (Y - x^r) R_r + x^r`.
pub fn supercharge_op() -> Operator {
    conjugated_y_op() * Operator::ReflectR + Operator::MulXr
}

/// `H0 = (A A+ + A+ A) / 4`.
pub fn h0_op() -> Operator {
    Operator::anticommutator(&lowering_op(), &raising_op()).scaled(rational(1, 4))
}

/// `H = S^2 / 2`.
pub fn h_susy_square_op() -> Operator {
    (supercharge_op() * supercharge_op()).scaled(rational(1, 2))
}

/// `H = H0 - (1/2) [Y, x^r] R_r`.
pub fn h_susy_split_op() -> Operator {
    let comm = Operator::commutator(&Operator::DunklY, &Operator::MulXr);
    h0_op() - (comm * Operator::ReflectR).scaled(rational(1, 2))
}

/// `h_N = zeta_N^(-1/2) e^(-x^(2r)/2) H_N`.
pub fn hermite_function(params: &ModelParams, degree: u32) -> WeightedFunction {
    let poly = radial_hermite(params, degree, Method::Recurrence);
    WeightedFunction {
        params: params.clone(),
        scale: norm_sq(params, degree).to_f64().sqrt().recip(),
        poly,
    }
}

/// `a = A / sqrt(2)`.
pub fn lower_a(w: &WeightedFunction) -> Result<WeightedFunction> {
    let poly = apply_operator(&lowering_op(), &w.poly, &w.params)?;
    Ok(w.with(w.scale / std::f64::consts::SQRT_2, poly))
}

/// `a^dag = A+ / sqrt(2)`.
pub fn raise_adag(w: &WeightedFunction) -> Result<WeightedFunction> {
    let poly = apply_operator(&raising_op(), &w.poly, &w.params)?;
    Ok(w.with(w.scale / std::f64::consts::SQRT_2, poly))
}

pub fn apply_h0(w: &WeightedFunction) -> Result<WeightedFunction> {
    let poly = apply_operator(&h0_op(), &w.poly, &w.params)?;
    Ok(w.with(w.scale, poly))
}

/// `Q = S / sqrt(2)`.
pub fn apply_q(w: &WeightedFunction) -> Result<WeightedFunction> {
    let poly = apply_operator(&supercharge_op(), &w.poly, &w.params)?;
    Ok(w.with(w.scale / std::f64::consts::SQRT_2, poly))
}

/// `H = Q^2`, evaluated as `S^2/2` and as `H0 - [Y, x^r] R_r / 2`; the two
/// must agree exactly.
pub fn apply_h_susy(w: &WeightedFunction) -> Result<WeightedFunction> {
    let squared = apply_operator(&h_susy_square_op(), &w.poly, &w.params)?;
    let split = apply_operator(&h_susy_split_op(), &w.poly, &w.params)?;
    if squared != split {
        return Err(Error::Invariant(format!(
            "S^2/2 and H0 - [Y,x^r]R/2 disagree on {}: {squared} vs {split}",
            w.poly
        )));
    }
    Ok(w.with(w.scale, squared))
}

/// `lambda` with `image = lambda * input`, if such a scalar exists.
pub fn eigenvalue(input: &SparsePoly, image: &SparsePoly) -> Option<Rational> {
    let (degree, lead) = input.terms().next_back()?;
    let lambda = image.coeff(degree) / lead;
    (input.scale(&lambda) == *image).then_some(lambda)
}

/// `E_H0(N) = ([N] + [N+r]) / 2`.
pub fn h0_energy(params: &ModelParams, degree: u32) -> Rational {
    (params.deformed_number(degree) + params.deformed_number(degree + params.r())) / int(2)
}

/// `E(N) = floor(N/r)` on the even class, `floor(N/r) + 1` on the odd class.
pub fn susy_energy(params: &ModelParams, degree: u32) -> u32 {
    let class = params.class_of(degree);
    match class.parity {
        Parity::Even => class.n,
        Parity::Odd => class.n + 1,
    }
}

/// Number of `N` (over all degrees) with `susy_energy(N) == energy`.
pub fn susy_degeneracy(params: &ModelParams, energy: u32) -> u32 {
    // susy_energy(N) >= floor(N/r), so only N < (energy + 1) r can contribute
    (0..(energy + 1) * params.r())
        .filter(|&n| susy_energy(params, n) == energy)
        .count() as u32
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumRow {
    pub degree: u32,
    pub class: Parity,
    pub deformed_number: Rational,
    pub e_h0: Rational,
    pub e_susy: u32,
    pub degeneracy: u32,
    pub zeta: f64,
}

/// Spectrum of `H0` and `H = Q^2` on `h_0 .. h_{n_max}`, obtained by applying
/// the operators to `H_N` and reading off the eigenvalue.
pub fn spectrum_table(params: &ModelParams, n_max: u32) -> Result<Vec<SpectrumRow>> {
    let family = radial_hermite_family(params, n_max);
    family
        .par_iter()
        .enumerate()
        .map(|(degree, h)| {
            let degree = degree as u32;
            let w = WeightedFunction::new(params, h.clone());
            let e_h0 = eigenvalue(h, &apply_h0(&w)?.poly).ok_or_else(|| {
                Error::Invariant(format!("H_{degree} is not an eigenvector of H0"))
            })?;
            let e_susy = eigenvalue(h, &apply_h_susy(&w)?.poly).ok_or_else(|| {
                Error::Invariant(format!("H_{degree} is not an eigenvector of Q^2"))
            })?;
            if !e_susy.is_integer() || e_susy < Rational::zero() {
                return Err(Error::Invariant(format!(
                    "SUSY eigenvalue {e_susy} at N={degree} is not a nonnegative integer"
                )));
            }
            let e_susy: u32 = e_susy.to_integer().try_into().expect("small energy");
            Ok(SpectrumRow {
                degree,
                class: params.class_of(degree).parity,
                deformed_number: params.deformed_number(degree),
                e_h0,
                e_susy,
                degeneracy: susy_degeneracy(params, e_susy),
                zeta: norm_sq(params, degree).to_f64(),
            })
        })
        .collect()
}

/// `<F, G>` for weighted functions: the Gaussian factors combine into the weight.
pub fn weighted_pairing(f: &WeightedFunction, g: &WeightedFunction) -> Result<f64> {
    let max = f.poly.degree().unwrap_or(0) + g.poly.degree().unwrap_or(0);
    let pairing = Pairing::new(&f.params, max)?;
    Ok(f.scale * g.scale * pairing.pair(&f.poly, &g.poly)?.to_f64())
}

/// One sample of `h_N` on ray `j`: the value at `omega_r^j t`.
#[derive(Clone, Debug, PartialEq)]
pub struct RaySample {
    pub ray: u32,
    pub t: f64,
    pub value: Complex64,
}

/// Samples `h_N(omega_r^j t)` for each ray `j` and each `t` in `ts`.
pub fn sample_on_rays(params: &ModelParams, degree: u32, ts: &[f64]) -> Result<Vec<RaySample>> {
    let h = hermite_function(params, degree);
    let r = params.r();
    let mut out = Vec::with_capacity(ts.len() * r as usize);
    for ray in 0..r {
        let omega = Complex64::from_polar(
            1.0,
            2.0 * std::f64::consts::PI * f64::from(ray) / f64::from(r),
        );
        for &t in ts {
            out.push(RaySample {
                ray,
                t,
                value: h.evaluate(omega * t)?,
            });
        }
    }
    Ok(out)
}

/// The exact `[N]` as `f64`, for float-view ladder checks.
pub fn deformed_number_f64(params: &ModelParams, degree: u32) -> f64 {
    rational_to_f64(&params.deformed_number(degree))
}

/// `Q` annihilates `x^s e^(-x^(2r)/2)` for every `s < r`.
pub fn ground_states(params: &ModelParams) -> Vec<WeightedFunction> {
    (0..params.r())
        .map(|s| WeightedFunction::new(params, SparsePoly::x_pow(s)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::parse_rational;

    fn params(r: u32, nu: &str) -> ModelParams {
        ModelParams::new(r, parse_rational(nu).unwrap()).unwrap()
    }

    fn h(p: &ModelParams, n: u32) -> SparsePoly {
        radial_hermite(p, n, Method::Recurrence)
    }

    #[test]
    fn hermite_function_examples() {
        let p = params(3, "1");
        let h0 = hermite_function(&p, 0);
        assert!((h0.scale - std::f64::consts::PI.powf(-0.25)).abs() < 1e-15);
        assert_eq!(h0.poly, SparsePoly::one());
        let h3 = hermite_function(&p, 3);
        let expected = (2.0 * std::f64::consts::PI.sqrt()).powf(-0.5);
        assert!((h3.scale - expected).abs() < 1e-15);
        assert_eq!(h3.poly, SparsePoly::monomial(3, int(2)));
        for n in 0..8 {
            let hn = hermite_function(&p, n);
            assert!((weighted_pairing(&hn, &hn).unwrap() - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn ladder_examples() {
        let p = params(3, "1");
        for s in 0..3 {
            let w = WeightedFunction::new(&p, SparsePoly::x_pow(s));
            assert!(lower_a(&w).unwrap().poly.is_zero());
        }
        let a6 = apply_operator(&lowering_op(), &h(&p, 6), &p).unwrap();
        assert_eq!(a6, SparsePoly::monomial(3, int(8)));
        assert_eq!(a6, h(&p, 3).scale(&(int(2) * p.deformed_number(6))));
        let up0 = apply_operator(&raising_op(), &SparsePoly::one(), &p).unwrap();
        assert_eq!(up0, SparsePoly::monomial(3, int(2)));
        let up3 = apply_operator(&raising_op(), &h(&p, 3), &p).unwrap();
        assert_eq!(up3, SparsePoly::from_terms([(6, int(4)), (0, int(-2))]));
    }

    #[test]
    fn h0_examples() {
        let p = params(3, "1");
        let w3 = WeightedFunction::new(&p, h(&p, 3));
        assert_eq!(
            eigenvalue(&w3.poly, &apply_h0(&w3).unwrap().poly),
            Some(rational(3, 2))
        );
        let w0 = WeightedFunction::new(&p, SparsePoly::one());
        assert_eq!(
            eigenvalue(&w0.poly, &apply_h0(&w0).unwrap().poly),
            Some(rational(1, 2))
        );
        let line = params(1, "7/3");
        for n in 0..10u32 {
            let w = WeightedFunction::new(&line, h(&line, n));
            let lambda = eigenvalue(&w.poly, &apply_h0(&w).unwrap().poly).unwrap();
            assert_eq!(lambda, int(i64::from(n)) + line.nu() + rational(1, 2));
        }
    }

    #[test]
    fn supercharge_kills_ground_states() {
        for r in [1, 3, 5] {
            let p = params(r, "1/2");
            for g in ground_states(&p) {
                assert!(apply_q(&g).unwrap().poly.is_zero());
            }
        }
    }

    #[test]
    fn susy_examples() {
        let line = params(1, "0");
        let energies: Vec<u32> = (0..5)
            .map(|n| {
                let w = WeightedFunction::new(&line, h(&line, n));
                let l = eigenvalue(&w.poly, &apply_h_susy(&w).unwrap().poly).unwrap();
                l.to_integer().try_into().unwrap()
            })
            .collect();
        assert_eq!(energies, vec![0, 2, 2, 4, 4]);
        let p = params(3, "1");
        for (n, e) in [(6u32, 2i64), (3, 2)] {
            let w = WeightedFunction::new(&p, h(&p, n));
            let out = apply_h_susy(&w).unwrap();
            assert_eq!(out.poly, w.poly.scale(&int(e)));
        }
    }

    #[test]
    fn spectrum_examples() {
        let line = spectrum_table(&params(1, "0"), 4).unwrap();
        let e_h0: Vec<Rational> = line.iter().map(|row| row.e_h0.clone()).collect();
        assert_eq!(
            e_h0,
            vec![
                rational(1, 2),
                rational(3, 2),
                rational(5, 2),
                rational(7, 2),
                rational(9, 2)
            ]
        );
        let table = spectrum_table(&params(3, "1"), 5).unwrap();
        let e: Vec<u32> = table.iter().map(|row| row.e_susy).collect();
        assert_eq!(e, vec![0, 0, 0, 2, 2, 2]);
        assert_eq!(table[0].degeneracy, 3);
        assert_eq!(table[3].degeneracy, 6);
        for row in &table {
            assert_eq!(row.e_susy, susy_energy(&params(3, "1"), row.degree));
            assert!(row.e_susy % 2 == 0);
        }
    }

    #[test]
    fn ray_samples_cover_every_ray() {
        let p = params(3, "1");
        let samples = sample_on_rays(&p, 3, &[-1.0, 0.0, 0.5]).unwrap();
        assert_eq!(samples.len(), 9);
        // h_3 = c x^3 e^(-x^6/2) takes the same value on every ray since omega^3 = 1
        for j in 1..3 {
            assert!((samples[3 * j + 2].value - samples[2].value).norm() < 1e-14);
        }
    }
}
