//! Real Gamma function for positive arguments.

use crate::error::{Error, Result};

pub fn gamma_value(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 || x.is_infinite() {
        return Err(Error::Domain(format!(
            "Gamma is only evaluated for x > 0, got {x}"
        )));
    }
    Ok(statrs::function::gamma::gamma(x))
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn half_integer_and_integer_values() {
        let sqrt_pi = PI.sqrt();
        assert!(rel(gamma_value(0.5).unwrap(), sqrt_pi) < 1e-14);
        assert!(rel(gamma_value(1.0).unwrap(), 1.0) < 1e-14);
        assert!(rel(gamma_value(1.5).unwrap(), sqrt_pi / 2.0) < 1e-14);
        let mut fact = 1.0f64;
        for n in 1..=49 {
            assert!(rel(gamma_value(n as f64).unwrap(), fact) < 1e-12, "n={n}");
            fact *= n as f64;
        }
    }

    #[test]
    fn reference_values() {
        // high-precision references
        assert!(rel(gamma_value(1.0 / 3.0).unwrap(), 2.678_938_534_707_747_6) < 1e-13);
        assert!(rel(gamma_value(0.1).unwrap(), 9.513_507_698_668_732) < 1e-13);
        assert!(rel(gamma_value(2.0 / 3.0).unwrap(), 1.354_117_939_426_400_4) < 1e-13);
        assert!(rel(gamma_value(42.5).unwrap(), 2.161_528_954_754_577e50) < 1e-12);
    }

    #[test]
    fn functional_equation() {
        let mut x = 0.013;
        while x < 49.0 {
            let lhs = gamma_value(x + 1.0).unwrap();
            let rhs = x * gamma_value(x).unwrap();
            assert!(rel(lhs, rhs) < 1e-12, "x={x}");
            x += 0.37;
        }
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(gamma_value(0.0).is_err());
        assert!(gamma_value(-1.5).is_err());
        assert!(gamma_value(f64::NAN).is_err());
    }
}
