//! RK4 integration of `dJ/dlambda` and `dqLog/dlambda` along `lambda k`.

use num_traits::Float;
use serde::Serialize;

use super::{c, dot, StarError, StarParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OdeTarget {
    K,
    J,
    G,
    Q,
}

/// `J(k, q)` and `qLog(k, q)` at `lambda = 1`, with the step count that
/// met the tolerance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OdeSolution<T> {
    pub j: Vec<T>,
    pub q_log: T,
    pub steps: usize,
}

const MAX_STEPS: usize = 1 << 20;

/// `dJ_a/dlambda = (k_a - (1-u)/kappa (v.k) J_a)(1 + u (v.J)/kappa)` and
/// `dqLog/dlambda = u(1-u)/kappa^2 (v.k)(v.J)`; the state is `(J, qLog)`.
fn rhs<T: Float>(p: &StarParams<T>, k: &[T], vk: T, y: &[T], out: &mut [T]) {
    let n = k.len();
    let vj = dot(&p.v, &y[..n]);
    let w = T::one() - p.u;
    let grow = T::one() + p.u * vj / p.kappa;
    for a in 0..n {
        out[a] = (k[a] - w * vk * y[a] / p.kappa) * grow;
    }
    out[n] = p.u * w * vk * vj / (p.kappa * p.kappa);
}

fn rk4<T: Float>(p: &StarParams<T>, k: &[T], y0: &[T], steps: usize) -> Vec<T> {
    let vk = dot(&p.v, k);
    let h = T::one() / c(steps as f64);
    let half = c::<T>(0.5);
    let m = y0.len();
    let mut y = y0.to_vec();
    let (mut k1, mut k2, mut k3, mut k4) = (vec![T::zero(); m], vec![T::zero(); m], vec![T::zero(); m], vec![T::zero(); m]);
    let mut tmp = vec![T::zero(); m];
    for _ in 0..steps {
        rhs(p, k, vk, &y, &mut k1);
        for i in 0..m {
            tmp[i] = y[i] + half * h * k1[i];
        }
        rhs(p, k, vk, &tmp, &mut k2);
        for i in 0..m {
            tmp[i] = y[i] + half * h * k2[i];
        }
        rhs(p, k, vk, &tmp, &mut k3);
        for i in 0..m {
            tmp[i] = y[i] + h * k3[i];
        }
        rhs(p, k, vk, &tmp, &mut k4);
        for i in 0..m {
            y[i] = y[i] + h / c(6.0) * (k1[i] + c::<T>(2.0) * (k2[i] + k3[i]) + k4[i]);
        }
    }
    y
}

/// Integrates from `J(0) = q`, `qLog(0) = 0`, doubling the step count until
/// two successive results agree to `1e-11` relative in every component
/// (or a few ulps for types coarser than that), then returns the
/// Richardson-extrapolated value.
pub fn integrate<T: Float>(p: &StarParams<T>, k: &[T], q: &[T], initial_steps: usize) -> Result<OdeSolution<T>, StarError> {
    if k.len() != p.dim() || q.len() != p.dim() {
        return Err(StarError::InvalidParams(format!("momenta must have {} components", p.dim())));
    }
    let tol = c::<T>(1e-11).max(T::epsilon() * c(64.0));
    let mut y0 = q.to_vec();
    y0.push(T::zero());
    let mut steps = initial_steps.max(1);
    let mut coarse = rk4(p, k, &y0, steps);
    while steps < MAX_STEPS {
        steps *= 2;
        let fine = rk4(p, k, &y0, steps);
        if fine.iter().any(|x| !x.is_finite()) {
            return Err(StarError::Domain("ODE solution (blew up during integration)"));
        }
        let scale = fine.iter().fold(T::zero(), |m, x| m.max(x.abs()));
        let floor = scale * c(1e-6);
        let converged = fine
            .iter()
            .zip(&coarse)
            .all(|(&f, &g)| (f - g).abs() <= tol * f.abs().max(floor));
        if converged {
            let extrapolated: Vec<T> = fine.iter().zip(&coarse).map(|(&f, &g)| f + (f - g) / c(15.0)).collect();
            let n = p.dim();
            return Ok(OdeSolution { j: extrapolated[..n].to_vec(), q_log: extrapolated[n], steps });
        }
        coarse = fine;
    }
    Err(StarError::NonConvergence { steps })
}

/// The ODE value of one closed-form function: `K(k) = J(k, 0)`,
/// `gLog(k) = qLog(k, 0)`; vectors for `K` and `J`, a single entry for
/// `g` and `Q`.
pub fn ode_oracle<T: Float>(
    p: &StarParams<T>,
    which: OdeTarget,
    k: &[T],
    q: &[T],
    initial_steps: usize,
) -> Result<Vec<T>, StarError> {
    let zero = vec![T::zero(); p.dim()];
    let q = match which {
        OdeTarget::K | OdeTarget::G => &zero[..],
        OdeTarget::J | OdeTarget::Q => q,
    };
    let sol = integrate(p, k, q, initial_steps)?;
    Ok(match which {
        OdeTarget::K | OdeTarget::J => sol.j,
        OdeTarget::G | OdeTarget::Q => vec![sol.q_log],
    })
}
