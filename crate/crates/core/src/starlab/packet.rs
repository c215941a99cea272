//! Star products of Gaussian wave packets by tensor-product Gauss-Hermite
//! quadrature over both momenta.

use std::f64::consts::{PI, SQRT_2};
use std::num::NonZeroUsize;

use gauss_quad::GaussHermite;
use num_complex::Complex64;
use statrs::function::erf::erfc;

use super::{dot, star_kernel, StarError, StarParams};
use crate::hopf::Family;

/// `f(x) = integral fhat(k) e^{i k.x} dk` with
/// `fhat(k) = prod_mu N(k_mu; center_mu, width_mu^2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianPacket {
    pub center: Vec<f64>,
    pub width: Vec<f64>,
}

impl GaussianPacket {
    pub fn new(center: Vec<f64>, width: Vec<f64>) -> Result<Self, StarError> {
        if center.len() != width.len() || width.iter().any(|&w| !(w > 0.0 && w.is_finite())) {
            return Err(StarError::InvalidParams("packet widths must be positive, one per center".into()));
        }
        Ok(GaussianPacket { center, width })
    }

    /// `e^{i c.x} e^{-sum sigma_mu^2 x_mu^2 / 2}`.
    pub fn value(&self, x: &[f64]) -> Complex64 {
        let decay: f64 = self.width.iter().zip(x).map(|(s, y)| s * s * y * y).sum();
        Complex64::from_polar((-decay / 2.0).exp(), dot(&self.center, x))
    }

    fn spread_along(&self, v: &[f64]) -> f64 {
        v.iter().zip(&self.width).map(|(a, s)| a.abs() * s).sum()
    }
}

const TAIL_LIMIT: f64 = 1e-6;

/// Largest `z` such that both packets' `z`-sigma boxes keep
/// `1 + u(1-u) a b` positive, and the Gaussian mass outside those boxes.
fn tail_mass(p: &StarParams<f64>, f: &GaussianPacket, g: &GaussianPacket) -> f64 {
    let w = p.u * (1.0 - p.u);
    let (a0, sa) = (p.along(&f.center), f.spread_along(&p.v) / p.kappa.abs());
    let (b0, sb) = (p.along(&g.center), g.spread_along(&p.v) / p.kappa.abs());
    let inside = |z: f64| {
        let corners = [(a0 - z * sa, b0 - z * sb), (a0 - z * sa, b0 + z * sb), (a0 + z * sa, b0 - z * sb), (a0 + z * sa, b0 + z * sb)];
        corners.iter().all(|(a, b)| 1.0 + w * a * b > 0.0)
    };
    if !inside(0.0) {
        return 1.0;
    }
    let (mut lo, mut hi) = (0.0f64, 40.0f64);
    if inside(hi) {
        lo = hi;
    } else {
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if inside(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }
    let dims = (f.center.len() + g.center.len()) as f64;
    (dims * erfc(lo / SQRT_2)).min(1.0)
}

/// `(f * g)(x) = integral fhat(k) ghat(q) e^{i D(k,q).x} e^{-gLog(k,q)} dk dq`
/// with `nodes` Gauss-Hermite points per momentum component.
pub fn wave_packet_star(
    p: &StarParams<f64>,
    family: Family,
    f: &GaussianPacket,
    g: &GaussianPacket,
    x: &[f64],
    nodes: usize,
) -> Result<Complex64, StarError> {
    let n = p.dim();
    if f.center.len() != n || g.center.len() != n || x.len() != n {
        return Err(StarError::InvalidParams(format!("packets and x must have {n} components")));
    }
    let mass = tail_mass(p, f, g);
    if mass > TAIL_LIMIT {
        return Err(StarError::TailMass { mass });
    }
    let rule = GaussHermite::new(NonZeroUsize::new(nodes).ok_or(StarError::InvalidParams("need at least one node".into()))?);
    let pairs: Vec<(f64, f64)> = rule.nodes().copied().zip(rule.weights().copied()).collect();
    let centers: Vec<f64> = f.center.iter().chain(&g.center).copied().collect();
    let widths: Vec<f64> = f.width.iter().chain(&g.width).copied().collect();
    let dims = 2 * n;

    let mut index = vec![0usize; dims];
    let mut point = vec![0.0; dims];
    let mut total = Complex64::new(0.0, 0.0);
    loop {
        let mut weight = 1.0;
        for d in 0..dims {
            let (t, w) = pairs[index[d]];
            point[d] = centers[d] + SQRT_2 * widths[d] * t;
            weight *= w;
        }
        let kernel = star_kernel(p, &point[..n], &point[n..], family)?;
        total += Complex64::from_polar(weight * kernel.amplitude, dot(&kernel.dvec, x));

        let mut d = 0;
        while d < dims {
            index[d] += 1;
            if index[d] < nodes {
                break;
            }
            index[d] = 0;
            d += 1;
        }
        if d == dims {
            break;
        }
    }
    Ok(total / PI.powi(dims as i32).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_limit_is_the_pointwise_product() {
        let p = StarParams::timelike(0.5, 1e6, 2).unwrap();
        let f = GaussianPacket::new(vec![0.3, -0.2], vec![1.0, 0.5]).unwrap();
        let g = GaussianPacket::new(vec![-0.1, 0.4], vec![0.7, 1.2]).unwrap();
        let x = [0.4, -0.3];
        let star = wave_packet_star(&p, Family::R, &f, &g, &x, 16).unwrap();
        let pointwise = f.value(&x) * g.value(&x);
        assert!((star - pointwise).norm() / pointwise.norm() < 1e-6);
    }

    #[test]
    fn wide_packets_near_the_guard_are_rejected() {
        let p = StarParams::timelike(0.5, 1.0, 1).unwrap();
        let f = GaussianPacket::new(vec![0.0], vec![1.0]).unwrap();
        let err = wave_packet_star(&p, Family::R, &f, &f, &[0.0], 8).unwrap_err();
        assert!(matches!(err, StarError::TailMass { .. }));
    }
}
