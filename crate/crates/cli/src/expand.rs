use std::fmt::Display;

use anyhow::{bail, Result};
use jordanian::hopf::{build_twist, r_matrix, twisted_antipode, twisted_coproduct, Family, Generator};
use serde_json::json;

use crate::{Common, Format};

enum Expr {
    Twist(Family),
    RMatrix,
    Coproduct(Generator),
    Antipode(Generator),
}

fn parse_expr(s: &str) -> Result<Expr> {
    if let Some(g) = s.strip_prefix("coproduct:") {
        return Ok(Expr::Coproduct(g.parse()?));
    }
    if let Some(g) = s.strip_prefix("antipode:") {
        return Ok(Expr::Antipode(g.parse()?));
    }
    if s.eq_ignore_ascii_case("rmatrix") {
        return Ok(Expr::RMatrix);
    }
    match s.parse() {
        Ok(f) => Ok(Expr::Twist(f)),
        Err(_) => bail!("unknown expression `{s}`; expected F0, F1, FL, FR, FLR, rmatrix, coproduct:<gen> or antipode:<gen>"),
    }
}

fn terms_json(text: &str) -> serde_json::Value {
    let terms: Vec<_> = text
        .lines()
        .filter(|l| *l != "0")
        .map(|line| {
            let mut parts = line.splitn(3, " * ");
            let c = parts.next().unwrap_or_default();
            let g = parts.next().and_then(|g| g.strip_prefix("kappa^-")).and_then(|g| g.parse::<u32>().ok());
            json!({ "coefficient": c, "kappa_pow": g, "term": parts.next().unwrap_or_default() })
        })
        .collect();
    json!(terms)
}

/// Prints a series; `--order 0` builds at order 1 and keeps grade 0.
pub fn run(expr: &str, common: &Common) -> Result<()> {
    let expr = parse_expr(expr)?;
    let cfg = common.config_at(common.order.max(1));
    let order = common.order;
    let family = match &expr {
        Expr::Twist(f) => *f,
        _ if common.family.is_empty() => Family::F0,
        _ => match common.families().as_slice() {
            [f] => *f,
            _ => bail!("give exactly one --family"),
        },
    };
    let u = common.single_u();
    if family.is_parametric() && u.is_none() {
        bail!("family {family} needs --u");
    }
    let f = build_twist(family, u.as_ref(), &cfg)?;
    let dim_ok = |g: &Generator| match g {
        Generator::Momentum(mu) => *mu < cfg.dim,
        Generator::Dilatation => true,
    };
    let text = match &expr {
        Expr::Twist(_) => f.element.truncated(order).to_string(),
        Expr::RMatrix => r_matrix(&f).element.truncated(order).to_string(),
        Expr::Coproduct(g) | Expr::Antipode(g) if !dim_ok(g) => bail!("generator {g} needs --dim > {}", cfg.dim - 1),
        Expr::Coproduct(g) => twisted_coproduct(&f, &g.element(&cfg)).truncated(order).to_string(),
        Expr::Antipode(g) => twisted_antipode(&f, &g.element(&cfg)).truncated(order).to_string(),
    };
    match common.format {
        Format::Json => {
            let value = json!({
                "family": family.name(),
                "u": u.as_ref().map(ToString::to_string),
                "N": order,
                "n": cfg.dim,
                "terms": terms_json(&text),
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        Format::Csv => {
            println!("coefficient,kappa_pow,term");
            for t in terms_json(&text).as_array().into_iter().flatten() {
                println!("{},{},{}", csv(&t["coefficient"]), t["kappa_pow"], csv(&t["term"]));
            }
        }
        Format::Text => print!("{text}"),
    }
    Ok(())
}

fn csv(v: &impl Display) -> String {
    let s = v.to_string();
    let s = s.trim_matches('"');
    if s.contains(',') {
        format!("\"{s}\"")
    } else {
        s.to_string()
    }
}
