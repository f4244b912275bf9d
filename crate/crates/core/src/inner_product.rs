//! Moments of the weight `|x|^(2nu) e^(-x^(2r))`, the ray inner product and
//! Gram matrices, all carried exactly as rational multiples of `Gamma(beta)`.
//!
//! On the `r` lines `omega^j R` a pair of monomials integrates to
//! `<x^a, x^b> = r [a = b mod r] M_{a+b}`, where
//! `M_k = int_R x^k |x|^(2nu) e^(-x^(2r)) dx` is `0` for odd `k` and
//! `Gamma((2nu+k+1)/(2r)) / r` for even `k`. Gamma arguments are reduced into
//! `(0, 1]` with `Gamma(z+1) = z Gamma(z)`, so two moments with the same
//! reduced base compare by their rational coefficients alone.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gamma::gamma_value;
use crate::hermite::radial_hermite_family;
use crate::params::{int, rational, ModelParams, Rational};
use crate::poly::{rational_to_f64, SparsePoly};

/// `coeff * Gamma(base)` with `base` in `(0, 1]`. Zero is stored with base 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolicMoment {
    coeff: Rational,
    base: Rational,
}

impl SymbolicMoment {
    pub fn zero() -> Self {
        Self {
            coeff: Rational::zero(),
            base: Rational::one(),
        }
    }

    /// `Gamma(arg)` for rational `arg > 0`, reduced to its base.
    pub fn gamma_at(arg: &Rational) -> Result<Self> {
        if !arg.is_positive() {
            return Err(Error::Domain(format!(
                "Gamma argument {arg} is not positive"
            )));
        }
        // arg = base + shift with base in (0, 1]
        let shift = arg.ceil() - Rational::one();
        let base = arg - &shift;
        let mut coeff = Rational::one();
        let mut factor = base.clone();
        let steps = shift.to_integer();
        let mut i = num_bigint::BigInt::zero();
        while i < steps {
            coeff *= &factor;
            factor += Rational::one();
            i += 1;
        }
        Ok(Self { coeff, base })
    }

    pub fn scaled(mut self, c: &Rational) -> Self {
        self.coeff *= c;
        if self.coeff.is_zero() {
            return Self::zero();
        }
        self
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn base(&self) -> &Rational {
        &self.base
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        rational_to_f64(&self.coeff) * gamma_value(rational_to_f64(&self.base)).expect("base > 0")
    }
}

impl fmt::Display for SymbolicMoment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}*Gamma({})", self.coeff, self.base)
        }
    }
}

/// A finite sum `sum_beta c_beta Gamma(beta)`, keyed by reduced base.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GammaSum {
    terms: BTreeMap<Rational, Rational>,
}

impl GammaSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_moment(&mut self, m: &SymbolicMoment, weight: &Rational) {
        if m.is_zero() || weight.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(m.base.clone())
            .or_insert_with(Rational::zero);
        *slot += &m.coeff * weight;
        if slot.is_zero() {
            self.terms.remove(&m.base);
        }
    }

    pub fn add(&mut self, other: &GammaSum, weight: &Rational) {
        for (base, coeff) in &other.terms {
            let m = SymbolicMoment {
                coeff: coeff.clone(),
                base: base.clone(),
            };
            self.add_moment(&m, weight);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(base, coeff)` pairs in ascending base order.
    pub fn terms(&self) -> impl Iterator<Item = SymbolicMoment> + '_ {
        self.terms.iter().map(|(b, c)| SymbolicMoment {
            coeff: c.clone(),
            base: b.clone(),
        })
    }

    /// The single term, if the sum lives in one Gamma class (or is zero).
    pub fn as_single(&self) -> Option<SymbolicMoment> {
        match self.terms.len() {
            0 => Some(SymbolicMoment::zero()),
            1 => self.terms().next(),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms().map(|m| m.to_f64()).sum()
    }
}

impl From<&SymbolicMoment> for GammaSum {
    fn from(m: &SymbolicMoment) -> Self {
        let mut out = GammaSum::zero();
        out.add_moment(m, &Rational::one());
        out
    }
}

impl fmt::Display for GammaSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, m) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// `M_k = int_R x^k |x|^(2nu) e^(-x^(2r)) dx`.
pub fn moment(params: &ModelParams, k: u32) -> Result<SymbolicMoment> {
    let two_r = i64::from(2 * params.r());
    let numer = int(2) * params.nu() + int(i64::from(k) + 1);
    if !numer.is_positive() {
        return Err(Error::Domain(format!(
            "moment {k} diverges for {params}: 2nu + k + 1 = {numer}"
        )));
    }
    if k.is_odd() {
        return Ok(SymbolicMoment::zero());
    }
    Ok(
        SymbolicMoment::gamma_at(&(numer / int(two_r)))?
            .scaled(&rational(1, i64::from(params.r()))),
    )
}

/// Floating-point `M_k`, evaluating Gamma at the unreduced argument.
pub fn moment_f64(params: &ModelParams, k: u32) -> Result<f64> {
    if k.is_odd() {
        return Ok(0.0);
    }
    let r = f64::from(params.r());
    let arg = (2.0 * rational_to_f64(params.nu()) + f64::from(k) + 1.0) / (2.0 * r);
    Ok(gamma_value(arg)? / r)
}

/// Cached moments for repeated pairings at fixed parameters.
#[derive(Clone, Debug)]
pub struct Pairing {
    params: ModelParams,
    moments: Vec<SymbolicMoment>,
}

impl Pairing {
    /// Prepares moments `M_0 .. M_max_degree`.
    pub fn new(params: &ModelParams, max_degree: u32) -> Result<Self> {
        let moments = (0..=max_degree)
            .map(|k| moment(params, k))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            params: params.clone(),
            moments,
        })
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    fn moment(&self, k: u32) -> Result<SymbolicMoment> {
        match self.moments.get(k as usize) {
            Some(m) => Ok(m.clone()),
            None => moment(&self.params, k),
        }
    }

    /// `(f, g) = sum_j int_R f(w^j x) conj(g(w^j x)) |x|^(2nu) e^(-x^(2r)) dx`.
    pub fn pair(&self, f: &SparsePoly, g: &SparsePoly) -> Result<GammaSum> {
        let r = self.params.r();
        let r_q = int(i64::from(r));
        let mut out = GammaSum::zero();
        for (a, fa) in f.terms() {
            for (b, gb) in g.terms() {
                // odd r: a = b mod r and a + b even forces a = b mod 2r
                if a % (2 * r) != b % (2 * r) {
                    continue;
                }
                let m = self.moment(a + b)?;
                out.add_moment(&m, &(fa * gb * &r_q));
            }
        }
        Ok(out)
    }
}

pub fn inner_product(f: &SparsePoly, g: &SparsePoly, params: &ModelParams) -> Result<GammaSum> {
    let max = f.degree().unwrap_or(0) + g.degree().unwrap_or(0);
    Pairing::new(params, max)?.pair(f, g)
}

/// The same pairing accumulated in `f64`, term by term, with no symbolic reduction.
pub fn inner_product_f64(f: &SparsePoly, g: &SparsePoly, params: &ModelParams) -> Result<f64> {
    let r = params.r();
    let mut acc = 0.0;
    for (a, fa) in f.coeffs_f64() {
        for (b, gb) in g.coeffs_f64() {
            if a % r == b % r && (a + b) % 2 == 0 {
                acc += fa * gb * f64::from(r) * moment_f64(params, a + b)?;
            }
        }
    }
    Ok(acc)
}

/// Gram matrix of `H_0 .. H_{n_max}` under the ray inner product.
#[derive(Clone, Debug)]
pub struct GramMatrix {
    pub params: ModelParams,
    pub n_max: u32,
    pub entries: Vec<Vec<GammaSum>>,
    pub values: Vec<Vec<f64>>,
}

impl GramMatrix {
    pub fn entry(&self, n: u32, m: u32) -> &GammaSum {
        &self.entries[n as usize][m as usize]
    }

    pub fn off_diagonal_nonzero(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if i != j && !e.is_zero() {
                    out.push((i as u32, j as u32));
                }
            }
        }
        out
    }

    /// Largest `|G_nm| / sqrt(G_nn G_mm)` over `n != m` in the float view.
    pub fn max_off_diagonal_ratio(&self) -> f64 {
        off_diagonal_ratio(&self.values)
    }
}

pub(crate) fn off_diagonal_ratio(values: &[Vec<f64>]) -> f64 {
    let mut worst = 0.0f64;
    for (i, row) in values.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if i != j {
                let scale = (values[i][i] * values[j][j]).sqrt();
                worst = worst.max(v.abs() / scale);
            }
        }
    }
    worst
}

pub fn gram_matrix(params: &ModelParams, n_max: u32) -> Result<GramMatrix> {
    let family = radial_hermite_family(params, n_max);
    let pairing = Pairing::new(params, 2 * n_max)?;
    let entries = (0..=n_max as usize)
        .into_par_iter()
        .map(|i| {
            family
                .iter()
                .map(|hj| pairing.pair(&family[i], hj))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let values = entries
        .iter()
        .map(|row| row.iter().map(GammaSum::to_f64).collect())
        .collect();
    Ok(GramMatrix {
        params: params.clone(),
        n_max,
        entries,
        values,
    })
}

/// `zeta_N = 4^n floor(n/2)! Gamma(floor((n+1)/2) + nu_s + 1/2)` with `N = n r + s`.
pub fn norm_sq(params: &ModelParams, degree: u32) -> SymbolicMoment {
    let class = params.class_of(degree);
    let n = class.n;
    let mut prefactor = Rational::from_integer(num_bigint::BigInt::from(4u8).pow(n));
    for j in 1..=n / 2 {
        prefactor *= int(i64::from(j));
    }
    let arg = int(i64::from(n.div_ceil(2))) + params.nu_s_unchecked(class.s) + rational(1, 2);
    SymbolicMoment::gamma_at(&arg)
        .expect("nu_s + 1/2 > 0 for admissible nu")
        .scaled(&prefactor)
}

/// `zeta_N = 2^n [N]! Gamma(nu_s + 1/2)`, the telescoped form of [`norm_sq`].
pub fn norm_sq_telescoped(params: &ModelParams, degree: u32) -> SymbolicMoment {
    let class = params.class_of(degree);
    let prefactor = Rational::from_integer(num_bigint::BigInt::from(2u8).pow(class.n))
        * params.deformed_factorial(degree);
    let arg = params.nu_s_unchecked(class.s) + rational(1, 2);
    SymbolicMoment::gamma_at(&arg)
        .expect("nu_s + 1/2 > 0 for admissible nu")
        .scaled(&prefactor)
}
