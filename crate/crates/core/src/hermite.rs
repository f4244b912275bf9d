//! Laguerre, generalized Hermite and radial Hermite polynomials.
//!
//! Every family is built two independent ways (three-term recurrence and a
//! closed form) so the two constructions can be checked against each other.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::params::{int, rational, ModelParams, Rational};
use crate::poly::SparsePoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Recurrence,
    ClosedForm,
}

/// Laguerre polynomial `L_n^alpha` from
/// `(k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}`.
pub fn laguerre(n: u32, alpha: &Rational) -> SparsePoly {
    let mut prev = SparsePoly::zero();
    let mut cur = SparsePoly::one();
    for k in 0..n {
        let k_r = int(i64::from(k));
        let linear =
            SparsePoly::from_terms([(0, int(2) * &k_r + int(1) + alpha), (1, -Rational::one())]);
        let next = (&(&linear * &cur) - &prev.scale(&(k_r.clone() + alpha)))
            .scale(&(Rational::one() / (k_r + int(1))));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Laguerre polynomial from its explicit series, used as an independent check.
pub fn laguerre_series(n: u32, alpha: &Rational) -> SparsePoly {
    // L_n^a(x) = sum_k (-1)^k binom(n+a, n-k) x^k / k!
    // binom(n+a, n-k) = prod_{j=1..n-k} (a + k + j) / (n-k)!
    SparsePoly::from_terms((0..=n).map(|k| {
        let mut c = Rational::one();
        for j in 1..=(n - k) {
            c *= alpha + int(i64::from(k + j));
            c /= int(i64::from(j));
        }
        for j in 1..=k {
            c /= int(i64::from(j));
        }
        if k % 2 == 1 {
            c = -c;
        }
        (k, c)
    }))
}

fn check_nu(nu: &Rational) -> Result<()> {
    if *nu <= rational(-1, 2) {
        return Err(Error::InvalidParams(format!(
            "generalized Hermite needs nu > -1/2, got {nu}"
        )));
    }
    Ok(())
}

/// Generalized Hermite polynomial `H_n^(nu)`, orthogonal for `|x|^(2nu) e^(-x^2)`.
pub fn gen_hermite(n: u32, nu: &Rational, method: Method) -> Result<SparsePoly> {
    check_nu(nu)?;
    Ok(match method {
        Method::Recurrence => gen_hermite_sequence(n, nu).pop().expect("nonempty"),
        Method::ClosedForm => gen_hermite_closed(n, nu),
    })
}

/// `H_0 .. H_n` from `H_{k+1} = 2x H_k - 2(k + theta_k) H_{k-1}`.
fn gen_hermite_sequence(n: u32, nu: &Rational) -> Vec<SparsePoly> {
    let two_x = SparsePoly::monomial(1, int(2));
    let mut out = vec![SparsePoly::one()];
    for k in 0..n {
        let theta = if k % 2 == 1 {
            int(2) * nu
        } else {
            Rational::zero()
        };
        let mut next = &two_x * &out[k as usize];
        if k > 0 {
            let c = int(2) * (int(i64::from(k)) + theta);
            next = &next - &out[k as usize - 1].scale(&c);
        }
        out.push(next);
    }
    out
}

fn gen_hermite_closed(n: u32, nu: &Rational) -> SparsePoly {
    let m = n / 2;
    let mut prefactor = int(if m.is_multiple_of(2) { 1 } else { -1 });
    for j in 1..=m {
        prefactor *= int(i64::from(j));
    }
    prefactor *= Rational::from_integer(num_bigint::BigInt::from(2u8).pow(n));
    let half = rational(1, 2);
    if n.is_multiple_of(2) {
        laguerre(m, &(nu - half))
            .substitute_power(2)
            .scale(&prefactor)
    } else {
        laguerre(m, &(nu + half))
            .substitute_power(2)
            .mul_x_pow(1)
            .scale(&prefactor)
    }
}

/// Radial Hermite polynomial `H_N^(r,nu)` with leading coefficient `2^floor(N/r)`.
///
/// The recurrence is `H_{N+r} = 2 x^r H_N - 2 [N] H_{N-r}` with `H_N = x^N` for
/// `N < r`; the closed form is `x^s H_n^(nu_s)(x^r)` for `N = n r + s`.
pub fn radial_hermite(params: &ModelParams, degree: u32, method: Method) -> SparsePoly {
    let class = params.class_of(degree);
    match method {
        Method::Recurrence => class_sequence(params, class.s, class.n)
            .pop()
            .expect("nonempty"),
        Method::ClosedForm => {
            let nu_s = params.nu_s_unchecked(class.s);
            gen_hermite_closed(class.n, &nu_s)
                .substitute_power(params.r())
                .mul_x_pow(class.s)
        }
    }
}

/// `H_s, H_{s+r}, ..., H_{s+n r}` by the radial recurrence.
fn class_sequence(params: &ModelParams, s: u32, n: u32) -> Vec<SparsePoly> {
    let r = params.r();
    let two_xr = SparsePoly::monomial(r, int(2));
    let mut out = vec![SparsePoly::x_pow(s)];
    for k in 0..n {
        let degree = s + k * r;
        let mut next = &two_xr * &out[k as usize];
        if k > 0 {
            let c = int(2) * params.deformed_number(degree);
            next = &next - &out[k as usize - 1].scale(&c);
        }
        out.push(next);
    }
    out
}

/// `H_0 .. H_{n_max}` by the recurrence, indexed by degree.
pub fn radial_hermite_family(params: &ModelParams, n_max: u32) -> Vec<SparsePoly> {
    let r = params.r();
    let mut slots: Vec<Option<SparsePoly>> = vec![None; n_max as usize + 1];
    for s in 0..r.min(n_max + 1) {
        let n = (n_max - s) / r;
        for (k, p) in class_sequence(params, s, n).into_iter().enumerate() {
            slots[(s + k as u32 * r) as usize] = Some(p);
        }
    }
    slots
        .into_iter()
        .map(|p| p.expect("every degree filled"))
        .collect()
}
