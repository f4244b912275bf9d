//! Model parameters `(r, nu)` and the deformed-number combinatorics built on them.
//!
//! A degree `N` is split as `N = n*r + s` with `0 <= s < r`. The degree is in the
//! *even class* when `n` is even (`N = 2mr + s`) and in the *odd class* otherwise
//! (`N = 2mr + r + s`). Every operator in this crate maps classes to classes, and
//! the deformed number `[N]` is the scalar by which the Dunkl-type operator lowers
//! `x^N` to `x^(N-r)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used for coefficients and for `nu`.
pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let trimmed = input.trim();
    let err = |reason: &str| Error::ParseRational {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| err("numerator is not an integer"))?;
    let den = BigInt::from_str(den).map_err(|_| err("denominator is not an integer"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// The pair `(r, nu)`: `r` odd lines through the origin, weight `|x|^(2nu) e^(-x^(2r))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModelParams {
    r: u32,
    nu: Rational,
}

impl ModelParams {
    pub fn new(r: u32, nu: Rational) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidParams(
                "r must be a positive odd integer, got 0".into(),
            ));
        }
        if r.is_multiple_of(2) {
            return Err(Error::InvalidParams(format!("r must be odd, got {r}")));
        }
        if nu <= rational(-1, 2) {
            return Err(Error::InvalidParams(format!(
                "nu must exceed -1/2 for the weight to be integrable, got {nu}"
            )));
        }
        Ok(Self { r, nu })
    }

    /// Convenience constructor from a small rational `numer/denom`.
    pub fn from_ratio(r: u32, numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::InvalidParams("zero denominator in nu".into()));
        }
        Self::new(r, rational(numer, denom))
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn nu(&self) -> &Rational {
        &self.nu
    }

    /// Whether `nu > (r-1)/2`, the range on which the operator statements are usually made.
    pub fn operator_domain_ok(&self) -> bool {
        self.nu > rational(i64::from(self.r) - 1, 2)
    }

    pub fn class_of(&self, degree: u32) -> DegreeClass {
        DegreeClass::new(degree, self.r)
    }

    /// `nu_s = (2nu + 2s + 1 - r) / (2r)`.
    pub fn nu_s(&self, s: u32) -> Result<Rational> {
        if s >= self.r {
            return Err(Error::Argument(format!(
                "s = {s} must be below r = {}",
                self.r
            )));
        }
        Ok(self.nu_s_unchecked(s))
    }

    pub(crate) fn nu_s_unchecked(&self, s: u32) -> Rational {
        let r = i64::from(self.r);
        (int(2) * &self.nu + int(2 * i64::from(s) + 1 - r)) / int(2 * r)
    }

    /// `0` on the even class, `2 nu_s` on the odd class.
    pub fn vartheta(&self, degree: u32) -> Rational {
        let class = self.class_of(degree);
        match class.parity {
            Parity::Even => Rational::zero(),
            Parity::Odd => int(2) * self.nu_s_unchecked(class.s),
        }
    }

    /// `[N] = floor(N/r) + vartheta(N)`.
    pub fn deformed_number(&self, degree: u32) -> Rational {
        int(i64::from(degree / self.r)) + self.vartheta(degree)
    }

    /// `[N]! = prod_{k=1..floor(N/r)} [k r + s]` with `s = N mod r`; the empty product is 1.
    pub fn deformed_factorial(&self, degree: u32) -> Rational {
        let class = self.class_of(degree);
        (1..=class.n).fold(Rational::one(), |acc, k| {
            acc * self.deformed_number(k * self.r + class.s)
        })
    }

    /// `[N + r] - [N]`: `1 + 2 nu_s` on the even class, `1 - 2 nu_s` on the odd class.
    pub fn deformed_gap(&self, degree: u32) -> Rational {
        let class = self.class_of(degree);
        let two_nu_s = int(2) * self.nu_s_unchecked(class.s);
        match class.parity {
            Parity::Even => Rational::one() + two_nu_s,
            Parity::Odd => Rational::one() - two_nu_s,
        }
    }
}

impl fmt::Display for ModelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={}, nu={}", self.r, self.nu)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// `N = n r + s`, with the class decided by the parity of `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DegreeClass {
    pub degree: u32,
    pub n: u32,
    pub s: u32,
    pub parity: Parity,
}

impl DegreeClass {
    pub fn new(degree: u32, r: u32) -> Self {
        let n = degree / r;
        Self {
            degree,
            n,
            s: degree % r,
            parity: if n.is_multiple_of(2) {
                Parity::Even
            } else {
                Parity::Odd
            },
        }
    }
}

/// `nu_s + 1/2 > 0` for all `s`, which is what makes every class weight integrable.
pub fn class_weights_integrable(params: &ModelParams) -> bool {
    (0..params.r()).all(|s| (params.nu_s_unchecked(s) + rational(1, 2)).is_positive())
}
