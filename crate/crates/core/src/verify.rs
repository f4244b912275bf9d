//! Named invariant checks over one parameter point, as run by `radial-hermite verify`.

use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::Result;
use crate::hermite::{gen_hermite, laguerre, radial_hermite, radial_hermite_family, Method};
use crate::inner_product::{gram_matrix, norm_sq, norm_sq_telescoped, GammaSum, Pairing};
use crate::operators::{apply_operator, dunkl_y, project, Operator};
use crate::oscillator::{
    apply_q, conjugated_y_op, deformed_number_f64, eigenvalue, ground_states, h0_energy, h0_op,
    h_susy_split_op, h_susy_square_op, hermite_function, lower_a, lowering_op, raise_adag,
    raising_op, susy_degeneracy, susy_energy, weighted_pairing,
};
use crate::params::{int, rational, ModelParams, Parity, Rational};
use crate::poly::SparsePoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Highest monomial degree used by the monomial-level operator checks.
pub const MONOMIAL_DEGREE: u32 = 60;
const SEED: u64 = 0x5eed_2a11;

struct Ctx {
    params: ModelParams,
    n_max: u32,
    /// `H_0 .. H_{n_max + r}`
    family: Vec<SparsePoly>,
}

impl Ctx {
    fn r(&self) -> u32 {
        self.params.r()
    }

    fn h(&self, n: u32) -> &SparsePoly {
        &self.family[n as usize]
    }

    fn rng(&self, salt: u64) -> StdRng {
        StdRng::seed_from_u64(SEED ^ salt ^ (u64::from(self.r()) << 32))
    }
}

/// A polynomial with up to six terms of degree `<= max_degree` and small rational coefficients.
pub fn random_poly<R: Rng>(rng: &mut R, max_degree: u32) -> SparsePoly {
    let count = rng.gen_range(1..=6);
    SparsePoly::from_terms((0..count).map(|_| {
        let d = rng.gen_range(0..=max_degree);
        (d, rational(rng.gen_range(-12..=12), rng.gen_range(1..=5)))
    }))
}

type Check = fn(&Ctx) -> Result<(bool, String)>;

const CHECKS: &[(&str, Check)] = &[
    ("params.deformed-gap", deformed_gap),
    ("params.factorial-recursion", factorial_recursion),
    ("params.line-theta", line_theta),
    ("poly.method-equivalence", method_equivalence),
    ("poly.leading-coefficient-and-support", leading_and_support),
    ("poly.rotation-symmetry", rotation_symmetry),
    ("poly.laguerre-identities", laguerre_identities),
    ("poly.line-reduction", line_reduction),
    ("ops.monomial-action", monomial_action),
    ("ops.hermite-lowering", hermite_lowering),
    ("ops.reflection-anticommutes", reflection_anticommutes),
    ("ops.graded-intertwining", graded_intertwining),
    ("ops.no-polynomial-eigenfunctions", no_eigenfunctions),
    ("ops.commutator", commutator_formula),
    ("ops.yang-dunkl", yang_dunkl_check),
    ("inner.gram-orthogonality", gram_orthogonality),
    ("inner.norm-closed-form", norm_closed_form),
    ("inner.norm-telescoping", norm_telescoping),
    ("inner.projection-self-adjoint", projection_self_adjoint),
    ("inner.y-antisymmetry", y_antisymmetry),
    ("osc.ladder-exact", ladder_exact),
    ("osc.ladder-normalized", ladder_normalized),
    ("osc.h0-spectrum", h0_spectrum),
    ("osc.susy-two-routes", susy_two_routes),
    ("osc.susy-spectrum", susy_spectrum),
    ("osc.ground-states", ground_state_check),
    ("osc.factorized-hamiltonian", factorized),
    ("osc.ladder-commutator", ladder_commutator),
    ("osc.decomposition", decomposition),
    ("osc.orthonormal-functions", orthonormal),
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(name, _)| *name).collect()
}

pub fn run_suite(params: &ModelParams, n_max: u32) -> Vec<CheckOutcome> {
    let ctx = Ctx {
        params: params.clone(),
        n_max,
        family: radial_hermite_family(params, n_max + params.r()),
    };
    CHECKS
        .iter()
        .map(|(name, check)| match check(&ctx) {
            Ok((passed, detail)) => CheckOutcome {
                name,
                passed,
                detail,
            },
            Err(e) => CheckOutcome {
                name,
                passed: false,
                detail: format!("error: {e}"),
            },
        })
        .collect()
}

fn first_failure<I: IntoIterator<Item = (bool, String)>>(items: I, ok: String) -> (bool, String) {
    for (passed, detail) in items {
        if !passed {
            return (false, detail);
        }
    }
    (true, ok)
}

fn deformed_gap(c: &Ctx) -> Result<(bool, String)> {
    let p = &c.params;
    Ok(first_failure(
        (0..=200u32).map(|n| {
            let class = p.class_of(n);
            let two_nu_s = int(2) * p.nu_s_unchecked(class.s);
            let expected = match class.parity {
                Parity::Even => Rational::one() + two_nu_s,
                Parity::Odd => Rational::one() - two_nu_s,
            };
            let gap = p.deformed_number(n + p.r()) - p.deformed_number(n);
            (
                gap == expected,
                format!("N={n}: [N+r]-[N] = {gap}, expected {expected}"),
            )
        }),
        "N <= 200".into(),
    ))
}

fn factorial_recursion(c: &Ctx) -> Result<(bool, String)> {
    let p = &c.params;
    Ok(first_failure(
        (p.r()..=200u32).map(|n| {
            let ok =
                p.deformed_factorial(n) == p.deformed_factorial(n - p.r()) * p.deformed_number(n);
            (ok, format!("N={n}"))
        }),
        "N <= 200".into(),
    ))
}

fn line_theta(c: &Ctx) -> Result<(bool, String)> {
    if c.r() != 1 {
        return Ok((true, "not applicable for r != 1".into()));
    }
    let p = &c.params;
    Ok(first_failure(
        (0..=200u32).map(|n| {
            let theta = if n % 2 == 1 {
                int(2) * p.nu()
            } else {
                Rational::zero()
            };
            (
                p.deformed_number(n) == int(i64::from(n)) + theta,
                format!("n={n}"),
            )
        }),
        "n <= 200".into(),
    ))
}

fn method_equivalence(c: &Ctx) -> Result<(bool, String)> {
    Ok(first_failure(
        (0..=c.n_max).map(|n| {
            let closed = radial_hermite(&c.params, n, Method::ClosedForm);
            (
                closed == *c.h(n),
                format!("N={n}: recurrence {} vs closed form {closed}", c.h(n)),
            )
        }),
        format!("N <= {}", c.n_max),
    ))
}

fn leading_and_support(c: &Ctx) -> Result<(bool, String)> {
    let r = c.r();
    Ok(first_failure(
        (0..=c.n_max).map(|n| {
            let h = c.h(n);
            let lead = Rational::from_integer(num_bigint::BigInt::from(2u8).pow(n / r));
            let ok = h.degree() == Some(n)
                && h.leading_coeff() == Some(&lead)
                && h.terms().all(|(d, _)| (n - d) % (2 * r) == 0);
            (ok, format!("N={n}: {h}"))
        }),
        format!("N <= {}", c.n_max),
    ))
}

/// Evaluation at `omega z` versus `omega^N` times evaluation at `z`, relative
/// to `sum |c_k| |z|^k` (the floating-point conditioning of the sum).
pub fn rotation_defect(h: &SparsePoly, degree: u32, r: u32, z: Complex64) -> Result<f64> {
    let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / f64::from(r));
    let lhs = h.evaluate(omega * z)?;
    let rhs = omega.powu(degree % r) * h.evaluate(z)?;
    let scale: f64 = h
        .coeffs_f64()
        .iter()
        .map(|(d, c)| c.abs() * z.norm().powi(*d as i32))
        .sum();
    Ok((lhs - rhs).norm() / scale)
}

fn rotation_symmetry(c: &Ctx) -> Result<(bool, String)> {
    let mut rng = c.rng(1);
    let points: Vec<Complex64> = (0..20)
        .map(|_| {
            Complex64::from_polar(
                rng.gen_range(0.2..2.0),
                rng.gen_range(0.0..std::f64::consts::TAU),
            )
        })
        .collect();
    let mut worst = 0.0f64;
    for n in 0..=c.n_max {
        for z in &points {
            worst = worst.max(rotation_defect(c.h(n), n, c.r(), *z)?);
        }
    }
    Ok((
        worst <= 1e-12,
        format!("max relative defect {worst:.3e} over 20 points"),
    ))
}

/// `(La1)`-`(La4)` as exact polynomial identities.
pub fn laguerre_identities_hold(n: u32, alpha: &Rational) -> bool {
    let x = SparsePoly::x_pow(1);
    let l = |k: u32, a: &Rational| laguerre(k, a);
    let prev = |a: &Rational| {
        if n == 0 {
            SparsePoly::zero()
        } else {
            l(n - 1, a)
        }
    };
    let one = Rational::one();
    let n_q = int(i64::from(n));
    let x_dl = &x * &l(n, alpha).derivative();
    let la1 = x_dl == &l(n, alpha).scale(&n_q) - &prev(alpha).scale(&(n_q.clone() + alpha));
    let la2 = l(n, &(alpha - &one)) == &l(n, alpha) - &prev(alpha);
    let la3 = l(n, alpha).derivative() == -prev(&(alpha + &one));
    let la4 = x_dl == &l(n, &(alpha - &one)).scale(&(n_q + alpha)) - &l(n, alpha).scale(alpha);
    la1 && la2 && la3 && la4
}

fn laguerre_identities(_: &Ctx) -> Result<(bool, String)> {
    let alphas = [rational(-1, 3), rational(1, 2), int(1), rational(7, 3)];
    Ok(first_failure(
        alphas.iter().flat_map(|a| {
            (0..=20u32).map(move |n| (laguerre_identities_hold(n, a), format!("n={n}, alpha={a}")))
        }),
        "n <= 20, alpha in {-1/3, 1/2, 1, 7/3}".into(),
    ))
}

fn line_reduction(c: &Ctx) -> Result<(bool, String)> {
    if c.r() != 1 {
        return Ok((true, "not applicable for r != 1".into()));
    }
    let mut items = Vec::new();
    for n in 0..=c.n_max {
        let g = gen_hermite(n, c.params.nu(), Method::Recurrence)?;
        items.push((g == *c.h(n), format!("n={n}")));
    }
    Ok(first_failure(items, format!("n <= {}", c.n_max)))
}

fn monomial_action(c: &Ctx) -> Result<(bool, String)> {
    let p = &c.params;
    let mut items = Vec::new();
    for n in 0..=MONOMIAL_DEGREE {
        let got = dunkl_y(&SparsePoly::x_pow(n), p)?;
        let expected = if n < p.r() {
            SparsePoly::zero()
        } else {
            SparsePoly::monomial(n - p.r(), p.deformed_number(n))
        };
        items.push((
            got == expected,
            format!("Y x^{n} = {got}, expected {expected}"),
        ));
    }
    Ok(first_failure(items, format!("N <= {MONOMIAL_DEGREE}")))
}

fn hermite_lowering(c: &Ctx) -> Result<(bool, String)> {
    let p = &c.params;
    let mut items = Vec::new();
    for n in 0..=c.n_max {
        let got = dunkl_y(c.h(n), p)?;
        let expected = if n < p.r() {
            SparsePoly::zero()
        } else {
            c.h(n - p.r()).scale(&(int(2) * p.deformed_number(n)))
        };
        items.push((got == expected, format!("N={n}")));
    }
    Ok(first_failure(
        items,
        format!("Y H_N = 2[N] H_(N-r), N <= {}", c.n_max),
    ))
}

fn reflection_anticommutes(c: &Ctx) -> Result<(bool, String)> {
    let mut rng = c.rng(2);
    let y_anti = Operator::anticommutator(&Operator::DunklY, &Operator::ReflectR);
    let x_anti = Operator::anticommutator(&Operator::MulXr, &Operator::ReflectR);
    let square = Operator::ReflectR * Operator::ReflectR;
    let mut items = Vec::new();
    for _ in 0..30 {
        let f = random_poly(&mut rng, 40);
        let ok = apply_operator(&y_anti, &f, &c.params)?.is_zero()
            && apply_operator(&x_anti, &f, &c.params)?.is_zero()
            && apply_operator(&square, &f, &c.params)? == f;
        items.push((ok, format!("p = {f}")));
    }
    Ok(first_failure(items, "30 random polynomials".into()))
}

fn graded_intertwining(c: &Ctx) -> Result<(bool, String)> {
    let r = c.r();
    let mut items = Vec::new();
    for s in 0..2 * r {
        let lhs = Operator::DunklY * Operator::projection(s, 2 * r);
        let rhs = Operator::projection((s + r) % (2 * r), 2 * r) * Operator::DunklY;
        for n in 0..=MONOMIAL_DEGREE {
            let m = SparsePoly::x_pow(n);
            let ok = apply_operator(&lhs, &m, &c.params)? == apply_operator(&rhs, &m, &c.params)?;
            items.push((ok, format!("s={s}, x^{n}")));
        }
    }
    Ok(first_failure(
        items,
        format!("Y Pi_s = Pi_(s+r) Y on x^0..x^{MONOMIAL_DEGREE}"),
    ))
}

fn no_eigenfunctions(c: &Ctx) -> Result<(bool, String)> {
    let mut rng = c.rng(3);
    let r = c.r();
    let mut items = Vec::new();
    for _ in 0..40 {
        let mut f = random_poly(&mut rng, 30);
        let top = rng.gen_range(r..=30);
        f.add_term(top + 1, Rational::one());
        let deg = f.degree().expect("nonzero");
        let image = dunkl_y(&f, &c.params)?;
        let ok = deg < r || (image.degree() == Some(deg - r) && eigenvalue(&f, &image).is_none());
        items.push((ok, format!("p = {f}")));
    }
    Ok(first_failure(
        items,
        "degree drops by exactly r on 40 random polynomials".into(),
    ))
}

/// `1 + (1/r) sum_s (2nu + 2s + 1 - r)(Pi_s(2r) - Pi_{r+s}(2r))`.
pub fn commutator_rhs(params: &ModelParams) -> Operator {
    let r = params.r();
    let mut op = Operator::Identity;
    for s in 0..r {
        let c =
            (int(2) * params.nu() + int(2 * i64::from(s) + 1 - i64::from(r))) / int(i64::from(r));
        op = op + (Operator::projection(s, 2 * r) - Operator::projection(r + s, 2 * r)).scaled(c);
    }
    op
}

fn commutator_formula(c: &Ctx) -> Result<(bool, String)> {
    let lhs = Operator::commutator(&Operator::DunklY, &Operator::MulXr);
    let rhs = commutator_rhs(&c.params);
    let mut items = Vec::new();
    for n in 0..=MONOMIAL_DEGREE {
        let m = SparsePoly::x_pow(n);
        let got = apply_operator(&lhs, &m, &c.params)?;
        let ok = got == apply_operator(&rhs, &m, &c.params)?
            && got == m.scale(&c.params.deformed_gap(n));
        items.push((ok, format!("x^{n}")));
    }
    Ok(first_failure(items, format!("N <= {MONOMIAL_DEGREE}")))
}

/// `D p = p' + (nu/x)(p(x) - p(-x))`, computed without the projection machinery.
pub fn yang_dunkl(p: &SparsePoly, nu: &Rational) -> SparsePoly {
    let odd_part = (p - &p.reflect())
        .div_x_pow(1)
        .expect("odd part vanishes at 0");
    &p.derivative() + &odd_part.scale(nu)
}

fn yang_dunkl_check(c: &Ctx) -> Result<(bool, String)> {
    if c.r() != 1 {
        return Ok((true, "not applicable for r != 1".into()));
    }
    let mut items = Vec::new();
    for n in 0..=MONOMIAL_DEGREE {
        let m = SparsePoly::x_pow(n);
        items.push((
            dunkl_y(&m, &c.params)? == yang_dunkl(&m, c.params.nu()),
            format!("x^{n}"),
        ));
    }
    Ok(first_failure(items, format!("N <= {MONOMIAL_DEGREE}")))
}

fn gram_orthogonality(c: &Ctx) -> Result<(bool, String)> {
    let gram = gram_matrix(&c.params, c.n_max)?;
    let nonzero = gram.off_diagonal_nonzero();
    let ratio = gram.max_off_diagonal_ratio();
    Ok((
        nonzero.is_empty() && ratio < 1e-10,
        format!(
            "{} nonzero symbolic off-diagonals, float max ratio {ratio:.3e}",
            nonzero.len()
        ),
    ))
}

fn norm_closed_form(c: &Ctx) -> Result<(bool, String)> {
    let pairing = Pairing::new(&c.params, 2 * c.n_max)?;
    let mut items = Vec::new();
    for n in 0..=c.n_max {
        let diag = pairing.pair(c.h(n), c.h(n))?;
        items.push((
            diag == GammaSum::from(&norm_sq(&c.params, n)),
            format!("N={n}: {diag}"),
        ));
    }
    Ok(first_failure(items, format!("N <= {}", c.n_max)))
}

fn norm_telescoping(c: &Ctx) -> Result<(bool, String)> {
    let p = &c.params;
    let top = c.n_max.max(40);
    Ok(first_failure(
        (0..=top).map(|n| {
            let z = norm_sq(p, n);
            let mut ok = z == norm_sq_telescoped(p, n);
            if n >= p.r() {
                ok &= z == norm_sq(p, n - p.r()).scaled(&(int(2) * p.deformed_number(n)));
            }
            (ok, format!("N={n}"))
        }),
        format!("N <= {top}"),
    ))
}

fn projection_self_adjoint(c: &Ctx) -> Result<(bool, String)> {
    let mut rng = c.rng(4);
    let r = c.r();
    let pairing = Pairing::new(&c.params, 40)?;
    let mut items = Vec::new();
    for _ in 0..30 {
        let f = random_poly(&mut rng, 20);
        let g = random_poly(&mut rng, 20);
        for m in [r, 2 * r] {
            for j in 0..m {
                let lhs = pairing.pair(&project(&f, j, m)?, &g)?;
                let rhs = pairing.pair(&f, &project(&g, j, m)?)?;
                items.push((lhs == rhs, format!("Pi_{j}({m}), f = {f}, g = {g}")));
            }
        }
    }
    Ok(first_failure(items, "30 random pairs".into()))
}

/// `<Y F, G> + <F, Y G>` for `F = e^(-x^(2r)/2) f`, `G = e^(-x^(2r)/2) g`.
pub fn antisymmetry_defect(
    params: &ModelParams,
    pairing: &Pairing,
    f: &SparsePoly,
    g: &SparsePoly,
) -> Result<GammaSum> {
    let cy = conjugated_y_op();
    let mut total = pairing.pair(&apply_operator(&cy, f, params)?, g)?;
    total.add(
        &pairing.pair(f, &apply_operator(&cy, g, params)?)?,
        &Rational::one(),
    );
    Ok(total)
}

fn y_antisymmetry(c: &Ctx) -> Result<(bool, String)> {
    let mut rng = c.rng(5);
    let pairing = Pairing::new(&c.params, 40 + 2 * c.r())?;
    let mut items = Vec::new();
    for _ in 0..50 {
        let f = random_poly(&mut rng, 20);
        let g = random_poly(&mut rng, 20);
        let defect = antisymmetry_defect(&c.params, &pairing, &f, &g)?;
        items.push((
            defect.is_zero(),
            format!("f = {f}, g = {g}: defect {defect}"),
        ));
    }
    Ok(first_failure(items, "50 random weighted pairs".into()))
}

fn ladder_exact(c: &Ctx) -> Result<(bool, String)> {
    let p = &c.params;
    let r = c.r();
    let mut items = Vec::new();
    for n in 0..=c.n_max {
        let up = apply_operator(&raising_op(), c.h(n), p)?;
        let down = apply_operator(&lowering_op(), c.h(n), p)?;
        let expected_down = if n < r {
            SparsePoly::zero()
        } else {
            c.h(n - r).scale(&(int(2) * p.deformed_number(n)))
        };
        items.push((up == *c.h(n + r) && down == expected_down, format!("N={n}")));
    }
    Ok(first_failure(
        items,
        format!("A+ H_N = H_(N+r), A H_N = 2[N] H_(N-r), N <= {}", c.n_max),
    ))
}

fn ladder_normalized(c: &Ctx) -> Result<(bool, String)> {
    let p = &c.params;
    let r = c.r();
    let mut items = Vec::new();
    for n in 0..=c.n_max {
        let h = hermite_function(p, n);
        let down = lower_a(&h)?;
        let down_ok = if n < r {
            down.poly.is_zero()
        } else {
            let mut expected = hermite_function(p, n - r);
            expected.scale *= deformed_number_f64(p, n).sqrt();
            down.approx_eq(&expected, 1e-12)
        };
        let mut expected_up = hermite_function(p, n + r);
        expected_up.scale *= deformed_number_f64(p, n + r).sqrt();
        let up_ok = raise_adag(&h)?.approx_eq(&expected_up, 1e-12);
        items.push((down_ok && up_ok, format!("N={n}")));
    }
    Ok(first_failure(
        items,
        format!("a h_N, a^dag h_N to 1e-12, N <= {}", c.n_max),
    ))
}

fn h0_spectrum(c: &Ctx) -> Result<(bool, String)> {
    let p = &c.params;
    let op = h0_op();
    let mut items = Vec::new();
    for n in 0..=c.n_max {
        let image = apply_operator(&op, c.h(n), p)?;
        let lambda = eigenvalue(c.h(n), &image);
        let mut ok = lambda.as_ref() == Some(&h0_energy(p, n));
        if c.r() == 1 {
            ok &= lambda == Some(int(i64::from(n)) + p.nu() + rational(1, 2));
        }
        items.push((ok, format!("N={n}: eigenvalue {lambda:?}")));
    }
    Ok(first_failure(items, format!("N <= {}", c.n_max)))
}

fn susy_two_routes(c: &Ctx) -> Result<(bool, String)> {
    let p = &c.params;
    let square = h_susy_square_op();
    let split = h_susy_split_op();
    let mut items = Vec::new();
    let monomials = (0..=MONOMIAL_DEGREE).map(SparsePoly::x_pow);
    let hermites = (0..=c.n_max).map(|n| c.h(n).clone());
    for f in monomials.chain(hermites) {
        let ok = apply_operator(&square, &f, p)? == apply_operator(&split, &f, p)?;
        items.push((ok, format!("{f}")));
    }
    Ok(first_failure(
        items,
        format!("monomials <= {MONOMIAL_DEGREE} and H_N, N <= {}", c.n_max),
    ))
}

fn susy_spectrum(c: &Ctx) -> Result<(bool, String)> {
    let p = &c.params;
    let op = h_susy_square_op();
    let mut items = Vec::new();
    for n in 0..=c.n_max {
        let lambda = eigenvalue(c.h(n), &apply_operator(&op, c.h(n), p)?);
        let class = p.class_of(n);
        let formula = i64::from(class.n) + if class.n % 2 == 1 { 1 } else { 0 };
        let ok = lambda == Some(int(formula))
            && i64::from(susy_energy(p, n)) == formula
            && formula % 2 == 0;
        items.push((
            ok,
            format!("N={n}: eigenvalue {lambda:?}, formula {formula}"),
        ));
    }
    Ok(first_failure(
        items,
        format!("E_N = [N/r] + (1-(-1)^[N/r])/2, N <= {}", c.n_max),
    ))
}

fn ground_state_check(c: &Ctx) -> Result<(bool, String)> {
    let mut ok = true;
    for g in ground_states(&c.params) {
        ok &= apply_q(&g)?.poly.is_zero();
    }
    // nothing else at energy zero among the first few levels
    let zero_count = (0..=c.n_max.max(4 * c.r()))
        .filter(|&n| susy_energy(&c.params, n) == 0)
        .count() as u32;
    let degeneracy = susy_degeneracy(&c.params, 0);
    ok &= zero_count == c.r() && degeneracy == c.r();
    ok &= (1..=5).all(|e| susy_degeneracy(&c.params, 2 * e) == 2 * c.r());
    Ok((
        ok,
        format!("ground level degeneracy {degeneracy}, r = {}", c.r()),
    ))
}

fn factorized(c: &Ctx) -> Result<(bool, String)> {
    let p = &c.params;
    let op = raising_op() * lowering_op();
    let mut items = Vec::new();
    for n in 0..=c.n_max {
        let got = apply_operator(&op, c.h(n), p)?;
        let expected = c.h(n).scale(&(int(2) * p.deformed_number(n)));
        items.push((got == expected, format!("N={n}")));
    }
    Ok(first_failure(
        items,
        format!("A+ A H_N = 2[N] H_N, N <= {}", c.n_max),
    ))
}

fn ladder_commutator(c: &Ctx) -> Result<(bool, String)> {
    let p = &c.params;
    let op = Operator::commutator(&lowering_op(), &raising_op());
    let mut items = Vec::new();
    for n in 0..=MONOMIAL_DEGREE {
        let m = SparsePoly::x_pow(n);
        let got = apply_operator(&op, &m, p)?;
        items.push((
            got == m.scale(&(int(2) * p.deformed_gap(n))),
            format!("x^{n}"),
        ));
    }
    Ok(first_failure(items, format!("N <= {MONOMIAL_DEGREE}")))
}

fn decomposition(c: &Ctx) -> Result<(bool, String)> {
    let mut rng = c.rng(6);
    let r = c.r();
    let mut items = Vec::new();
    for _ in 0..30 {
        let f = random_poly(&mut rng, 30);
        let mut total = SparsePoly::zero();
        for j in 0..r {
            total = &total + &project(&f, j, r)?;
        }
        items.push((total == f, format!("p = {f}")));
    }
    Ok(first_failure(items, "30 random polynomials".into()))
}

fn orthonormal(c: &Ctx) -> Result<(bool, String)> {
    let p = &c.params;
    let top = c.n_max.min(16);
    let mut worst = 0.0f64;
    for n in 0..=top {
        for m in 0..=top {
            let v = weighted_pairing(&hermite_function(p, n), &hermite_function(p, m))?;
            let target = if n == m { 1.0 } else { 0.0 };
            worst = worst.max((v - target).abs());
        }
    }
    Ok((
        worst < 1e-10,
        format!("max |<h_N,h_M> - delta| = {worst:.3e}, N, M <= {top}"),
    ))
}
