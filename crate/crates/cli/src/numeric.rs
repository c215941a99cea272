use anyhow::{bail, Result};
use jordanian::hopf::Family;
use jordanian::starlab::{k_inverse, ode_oracle, star_kernel, OdeTarget, PlaneWaveProduct, StarParams};
use serde_json::json;

use crate::{parse_vector, to_f64, Common, Format};

const ODE_STEPS: usize = 16;

fn vector(s: Option<&str>, what: &str, dim: usize) -> Result<Vec<f64>> {
    let Some(s) = s else { bail!("--{what} is required") };
    let v: Vec<f64> = parse_vector(s).iter().map(to_f64).collect();
    if v.len() != dim {
        bail!("--{what} has {} components, expected {dim}", v.len());
    }
    Ok(v)
}

fn rel(a: &[f64], b: &[f64]) -> f64 {
    let diff = a.iter().zip(b).fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
    let scale = a.iter().chain(b).fold(0.0f64, |m, x| m.max(x.abs()));
    if diff == 0.0 {
        0.0
    } else {
        diff / scale
    }
}

/// `D(k, q)` against `J(K^-1 k, q)` and `gLog` against the difference of
/// the integrated phases.
fn residuals(p: &StarParams<f64>, k: &[f64], q: &[f64], out: &PlaneWaveProduct<f64>) -> Result<(f64, f64)> {
    let kinv = k_inverse(p, k)?;
    let zero = vec![0.0; p.dim()];
    let j = ode_oracle(p, OdeTarget::J, &kinv, q, ODE_STEPS)?;
    let with_q = ode_oracle(p, OdeTarget::Q, &kinv, q, ODE_STEPS)?[0];
    let without = ode_oracle(p, OdeTarget::Q, &kinv, &zero, ODE_STEPS)?[0];
    Ok((rel(&out.dvec, &j), (out.g_log - (with_q - without)).abs()))
}

pub fn star(common: &Common) -> Result<bool> {
    let v: Vec<f64> = common.v().iter().map(to_f64).collect();
    let dim = v.len();
    let u = common.single_u().map_or(0.5, |u| to_f64(&u));
    let family = match common.family.as_slice() {
        [] => Family::R,
        [f] => f.parse()?,
        _ => bail!("give exactly one --family"),
    };
    let p = StarParams::new(u, common.kappa(), v.clone())?;
    let k = vector(common.k.as_deref(), "k", dim)?;
    let q = vector(common.q.as_deref(), "q", dim)?;
    let out = star_kernel(&p, &k, &q, family)?;
    let res = match family {
        Family::R => residuals(&p, &k, &q, &out)
            .map_err(|e| eprintln!("note: no ODE residuals, {e}"))
            .ok(),
        _ => None,
    };
    let ok = res.is_none_or(|(d, g)| d <= common.tol && g <= common.tol);

    match common.format {
        Format::Json => {
            let value = json!({
                "op": "star",
                "params": { "u": u, "kappa": p.kappa, "v": v, "n": dim, "family": family.name() },
                "inputs": { "k": k, "q": q },
                "outputs": { "dvec": out.dvec, "g_log": out.g_log, "amplitude": out.amplitude },
                "residuals": res.map(|(d, g)| json!({ "dvec_vs_ode": d, "g_log_vs_ode": g })),
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        Format::Csv => {
            let names = |prefix: &str| (0..dim).map(|i| format!("{prefix}{i}")).collect::<Vec<_>>();
            let header = [names("k"), names("q"), names("D"), vec!["amplitude".into()]].concat();
            println!("{}", header.join(","));
            let row: Vec<String> =
                k.iter().chain(&q).chain(&out.dvec).chain([&out.amplitude]).map(|x| format!("{x:e}")).collect();
            println!("{}", row.join(","));
        }
        Format::Text => {
            println!("D         = {:?}", out.dvec);
            println!("g_log     = {:e}", out.g_log);
            println!("amplitude = {}", out.amplitude);
            if let Some((d, g)) = res {
                println!("residuals: D vs ODE {d:.3e}, g_log vs ODE {g:.3e}");
            }
        }
    }
    Ok(ok)
}
