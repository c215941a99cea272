//! Seeded numeric checks: closed forms against the ODE oracle, kernel
//! associativity, and agreement with the truncated symbolic coproduct.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Float;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ode::{ode_oracle, OdeTarget};
use super::{g_log, j_map, k_inverse, k_map, q_log, star_kernel, StarError, StarParams};
use crate::hopf::{build_twist, twisted_coproduct, Family};
use crate::ncalg::ops::eval_momentum;
use crate::ncalg::{Coefficient, Config};
use crate::report::Report;

const INITIAL_STEPS: usize = 16;
const MAX_ATTEMPTS_PER_SAMPLE: usize = 100;
const ROUNDING_FLOOR: f64 = 1e-13;

fn f64_of<T: Float>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `base`, or a few thousand ulps of `T` when that is coarser.
fn tolerance<T: Float>(base: f64) -> f64 {
    base.max(f64_of(T::epsilon()) * 4096.0)
}

/// `max |a - b| / max(|a|, |b|)`, zero when both vanish.
fn rel<T: Float>(a: &[T], b: &[T]) -> f64 {
    let diff = a.iter().zip(b).fold(0.0f64, |m, (&x, &y)| m.max(f64_of((x - y).abs())));
    let scale = a.iter().chain(b).fold(0.0f64, |m, &x| m.max(f64_of(x.abs())));
    if diff == 0.0 {
        0.0
    } else {
        diff / scale
    }
}

/// A momentum with components uniform in `[-|kappa|/4, |kappa|/4]`.
pub fn sample_momenta<T: Float, R: Rng>(p: &StarParams<T>, rng: &mut R) -> Vec<T> {
    let bound = f64_of(p.kappa.abs()) / 4.0;
    (0..p.dim()).map(|_| T::from(rng.gen_range(-bound..=bound)).expect("finite")).collect()
}

/// Draws `count` momenta per sample and retries samples that hit a domain
/// guard; `f` returns the residuals it wants recorded.
fn sampled<T: Float>(
    mut rep: Report,
    p: &StarParams<T>,
    samples: usize,
    seed: u64,
    count: usize,
    tol: f64,
    f: impl Fn(&[Vec<T>]) -> Result<Vec<f64>, StarError>,
) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut accepted = 0;
    let mut attempts = 0;
    while accepted < samples {
        if attempts >= samples * MAX_ATTEMPTS_PER_SAMPLE {
            return rep.expect(false).with_detail(format!("only {accepted} of {samples} samples inside the domain"));
        }
        attempts += 1;
        let momenta: Vec<Vec<T>> = (0..count).map(|_| sample_momenta(p, &mut rng)).collect();
        match f(&momenta) {
            Ok(residuals) => {
                accepted += 1;
                for r in residuals {
                    rep = rep.expect_close(r, tol);
                }
            }
            Err(StarError::Domain(_)) => continue,
            Err(e) => return rep.expect(false).with_detail(e.to_string()),
        }
    }
    rep.with_detail(format!("{samples} samples, seed {seed}, {} rejected", attempts - accepted))
}

/// Closed forms against RK4: `K`, `J`, `gLog`, `qLog` to `tol` relative,
/// plus `K^-1(K(k)) = k` and `K(k) = J(k, 0)` to `1e-12`.
pub fn check_ode_oracles<T: Float>(p: &StarParams<T>, samples: usize, seed: u64, tol: f64) -> Vec<Report> {
    let u = f64_of(p.u);
    let oracle = sampled(Report::numeric("ode-oracle", "R", u), p, samples, seed, 2, tolerance::<T>(tol), |m| {
        let (k, q) = (&m[0], &m[1]);
        let ode = |which| ode_oracle(p, which, k, q, INITIAL_STEPS);
        Ok(vec![
            rel(&k_map(p, k)?, &ode(OdeTarget::K)?),
            rel(&j_map(p, k, q)?, &ode(OdeTarget::J)?),
            rel(&[g_log(p, k)?], &ode(OdeTarget::G)?),
            rel(&[q_log(p, k, q)?], &ode(OdeTarget::Q)?),
        ])
    });
    let identities = sampled(
        Report::numeric("k-identities", "R", u),
        p,
        samples,
        seed ^ 0x9e37_79b9,
        1,
        tolerance::<T>(1e-12),
        |m| {
            let k = &m[0];
            let kk = k_map(p, k)?;
            let zero = vec![T::zero(); p.dim()];
            Ok(vec![rel(&k_inverse(p, &kk)?, k), rel(&kk, &j_map(p, k, &zero)?)])
        },
    );
    vec![oracle, identities]
}

/// Kernel properties on random triples `(k, q, r)`: associativity of `D`,
/// the `gLog` cocycle, the unit identities, `D(k,q) = J(K^-1(k), q)` and
/// `G(k,q) = Q(K^-1(k), q) - Q(K^-1(k), 0)`.
pub fn check_star_properties<T: Float>(p: &StarParams<T>, samples: usize, seed: u64, tol: f64) -> Report {
    let u = f64_of(p.u);
    let rep = Report::numeric("star-properties", "R", u);
    sampled(rep, p, samples, seed, 3, tolerance::<T>(tol), |m| {
        let (k, q, r) = (&m[0], &m[1], &m[2]);
        let zero = vec![T::zero(); p.dim()];
        let kernel = |a: &[T], b: &[T]| star_kernel(p, a, b, Family::R);
        let kq = kernel(k, q)?;
        let qr = kernel(q, r)?;
        let left = kernel(&kq.dvec, r)?;
        let right = kernel(k, &qr.dvec)?;
        let cocycle = [kq.g_log + left.g_log, qr.g_log + right.g_log];

        let kinv = k_inverse(p, k)?;
        let via_j = j_map(p, &kinv, q)?;
        let via_q = q_log(p, &kinv, q)? - q_log(p, &kinv, &zero)?;

        Ok(vec![
            rel(&left.dvec, &right.dvec),
            rel(&cocycle[..1], &cocycle[1..]),
            rel(&kernel(k, &zero)?.dvec, k),
            rel(&kernel(&zero, q)?.dvec, q),
            f64_of(kernel(k, &zero)?.g_log.abs() + kernel(&zero, q)?.g_log.abs()),
            rel(&kq.dvec, &via_j),
            rel(&[kq.g_log], &[via_q]),
        ])
    })
}

fn to_rational(x: f64, what: &str) -> Result<BigRational, String> {
    BigRational::from_float(x).ok_or_else(|| format!("{what} is not finite"))
}

/// Evaluates the truncated twisted coproduct `Delta^F(P_mu)` at `(k, q)` and
/// compares it with `D(k, q)` at `kappa` and `2 kappa`; the residual ratio
/// must be `2^(N+1)` within 20%. Residuals at rounding level mean the
/// truncated series is exact and pass without a ratio.
pub fn coproduct_consistency(p: &StarParams<f64>, family: Family, k: &[f64], q: &[f64], order: u32) -> Report {
    let u = match family {
        Family::F0 => 0.0,
        Family::F1 => 1.0,
        _ => p.u,
    };
    let mut rep = Report::numeric("coproduct-consistency", family.name(), u);
    rep.order = Some(order);
    match consistency_ratio(p, family, u, k, q, order) {
        Ok((r1, r2)) if r1.max(r2) <= ROUNDING_FLOOR => {
            rep.max_residual = Some(r1);
            rep.with_detail(format!("residual {r1:.1e} at rounding level, the series terminates"))
        }
        Ok((r1, r2)) => {
            let expected = 2f64.powi(order as i32 + 1);
            let ratio = r1 / r2;
            rep.max_residual = Some(r1);
            rep.expect(ratio.is_finite() && (ratio / expected - 1.0).abs() <= 0.2)
                .with_detail(format!("residual ratio {ratio:.2}, expected {expected}"))
        }
        Err(e) => rep.expect(false).with_detail(e),
    }
}

fn consistency_ratio(p: &StarParams<f64>, family: Family, u: f64, k: &[f64], q: &[f64], order: u32) -> Result<(f64, f64), String> {
    let v = p.v.iter().map(|&x| to_rational(x, "v")).collect::<Result<Vec<_>, _>>()?;
    let cfg = Config::new(p.dim(), order, v).map_err(|e| e.to_string())?;
    let u_rat = to_rational(u, "u")?;
    let f = build_twist(family, family.is_parametric().then_some(&u_rat), &cfg).map_err(|e| e.to_string())?;
    let coproducts: Vec<_> = (0..p.dim())
        .map(|mu| twisted_coproduct(&f, &cfg.momentum(mu)).map_coeffs(Coefficient::to_complex64))
        .collect();
    let kc: Vec<Complex64> = k.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let qc: Vec<Complex64> = q.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let residual = |kappa: f64| -> Result<f64, String> {
        let params = StarParams::new(u, kappa, p.v.clone()).map_err(|e| e.to_string())?;
        let exact = star_kernel(&params, k, q, Family::L).map_err(|e| e.to_string())?.dvec;
        let kinv = Complex64::new(1.0 / kappa, 0.0);
        let mut worst: f64 = 0.0;
        for (mu, t) in coproducts.iter().enumerate() {
            let value = eval_momentum(t, [&kc, &qc], &kinv).map_err(|e| e.to_string())?;
            worst = worst.max((value - exact[mu]).norm());
        }
        Ok(worst)
    };
    Ok((residual(p.kappa)?, residual(2.0 * p.kappa)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relative_error_of_equal_zero_vectors() {
        assert_eq!(rel(&[0.0f64, 0.0], &[0.0, 0.0]), 0.0);
        assert!((rel(&[1.0f64], &[1.5]) - 1.0 / 3.0).abs() < 1e-15);
    }
}
