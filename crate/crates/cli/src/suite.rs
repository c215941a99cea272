use num_rational::BigRational;
use rayon::prelude::*;

use jordanian::hopf::checks::{
    check_closed_forms, check_cocycle, check_family_relation, check_gauge_equivalence, check_hopf_axioms,
    check_inverse, check_left_right, check_normalization, check_r_symmetry,
};
use jordanian::hopf::rmatrix::{check_classical_part, check_cybe, check_qybe, check_r_relations, r_matrix};
use jordanian::hopf::star::{
    check_majid, check_majid_dagger, check_majid_kappa_flip, check_majid_selectivity, check_star_structures,
    check_unitary,
};
use jordanian::hopf::{build_twist, Family, Twist};
use jordanian::ordexp::{
    check_ordered_exp_1d, check_ordered_exp, check_q_boundary, interpolating_phi, random_cubics,
    PolynomialRealization,
};
use jordanian::starlab::{check_ode_oracles, check_star_properties, coproduct_consistency, StarParams};
use jordanian::weyl::{
    check_commutators, check_coordinate_closure, check_jacobi, check_left_right_realizations, check_realization,
    commutator_parameter, xhats_from_twist, Realization,
};
use jordanian::{Config, Report};

use crate::{to_f64, Common};

/// Selectable check groups, in the order `--help` lists them.
pub const CHECKS: [&str; 22] = [
    "twist",
    "closed-form-hopf",
    "hopf-axioms",
    "lr-coproducts",
    "family-relation",
    "r-relations",
    "gauge-equivalence",
    "r-matrix",
    "r-symmetry",
    "unitarity",
    "star-structures",
    "majid",
    "majid-selectivity",
    "majid-kappa-flip",
    "majid-dagger",
    "xhat",
    "xhat-l-r",
    "ode-oracle",
    "star-properties",
    "coproduct-consistency",
    "ordered-exp-1d",
    "ordered-exp",
];

pub enum Selection {
    Default,
    Named(Vec<String>),
}

impl Selection {
    pub fn from_args(checks: &[String]) -> Self {
        if checks.is_empty() {
            Selection::Default
        } else {
            Selection::Named(checks.to_vec())
        }
    }

    fn wants(&self, name: &str) -> bool {
        match self {
            Selection::Default => true,
            Selection::Named(names) => names.iter().any(|n| n == name),
        }
    }
}

type Task = Box<dyn FnOnce() -> Vec<Report> + Send>;

struct Plan {
    cfg: Config,
    us: Vec<BigRational>,
    families: Vec<Family>,
    kappa: f64,
    seed: u64,
    samples: usize,
    tol: f64,
    k: Vec<f64>,
    q: Vec<f64>,
}

impl Plan {
    fn points(&self, fam: Family) -> Vec<Option<BigRational>> {
        if fam.is_parametric() {
            self.us.iter().cloned().map(Some).collect()
        } else {
            vec![None]
        }
    }

    fn has(&self, fam: Family) -> bool {
        self.families.contains(&fam)
    }

    fn twist(&self, fam: Family, u: Option<&BigRational>) -> Twist {
        build_twist(fam, u, &self.cfg).expect("validated configuration")
    }

    fn star_params(&self, u: &BigRational) -> Option<StarParams<f64>> {
        StarParams::new(to_f64(u), self.kappa, self.cfg.v.iter().map(to_f64).collect()).ok()
    }
}

fn small_momentum(dim: usize, base: [f64; 4]) -> Vec<f64> {
    (0..dim).map(|i| base[i % 4]).collect()
}

fn parse_f64_vector(s: &str, dim: usize, what: &str) -> Vec<f64> {
    let v: Vec<f64> = crate::parse_vector(s).iter().map(to_f64).collect();
    if v.len() != dim {
        crate::usage_error(format!("--{what} has {} components but --dim is {dim}", v.len()));
    }
    v
}

fn plan(common: &Common) -> Plan {
    let cfg = common.config();
    let dim = cfg.dim;
    Plan {
        us: common.us(),
        families: common.families(),
        kappa: common.kappa(),
        seed: common.seed,
        samples: common.samples,
        tol: common.tol,
        k: common.k.as_deref().map_or_else(|| small_momentum(dim, [0.11, -0.07, 0.05, -0.03]), |s| {
            parse_f64_vector(s, dim, "k")
        }),
        q: common.q.as_deref().map_or_else(|| small_momentum(dim, [-0.09, 0.05, 0.04, -0.02]), |s| {
            parse_f64_vector(s, dim, "q")
        }),
        cfg,
    }
}

fn is_half(u: &BigRational) -> bool {
    *u == BigRational::new(1.into(), 2.into())
}

macro_rules! task {
    ($tasks:ident, $plan:ident, |$p:ident| $body:expr) => {{
        let $p = std::sync::Arc::clone(&$plan);
        $tasks.push(Box::new(move || $body));
    }};
}

fn tasks(plan: Plan, sel: &Selection) -> Vec<Task> {
    let plan = std::sync::Arc::new(plan);
    let mut tasks: Vec<Task> = vec![];
    let all_families: Vec<Family> = plan.families.clone();
    let pairs: Vec<(Family, Option<BigRational>)> =
        all_families.iter().flat_map(|&f| plan.points(f).into_iter().map(move |u| (f, u))).collect();
    let lr_families: Vec<Family> =
        [Family::L, Family::R].into_iter().filter(|f| plan.has(*f)).collect();
    let default = matches!(sel, Selection::Default);

    for (fam, u) in pairs.iter().cloned() {
        if sel.wants("twist") {
            let u = u.clone();
            task!(tasks, plan, |p| {
                let f = p.twist(fam, u.as_ref());
                vec![check_inverse(&f), check_normalization(&f), check_cocycle(&f, p.cfg.triple_order)]
            });
        }
        if sel.wants("closed-form-hopf") {
            let u = u.clone();
            task!(tasks, plan, |p| vec![check_closed_forms(fam, u.as_ref(), &p.cfg)]);
        }
        if sel.wants("hopf-axioms") {
            let u = u.clone();
            task!(tasks, plan, |p| check_hopf_axioms(&p.twist(fam, u.as_ref()), &p.cfg));
        }
        if fam.is_parametric() {
            if sel.wants("r-matrix") {
                let u = u.clone();
                task!(tasks, plan, |p| {
                    let r = r_matrix(&p.twist(fam, u.as_ref()));
                    let triple = p.cfg.triple_order.min(3);
                    vec![
                        check_qybe(&r, triple, fam.name(), u.as_ref()),
                        check_classical_part(&r, &p.cfg, fam.name(), u.as_ref()),
                        check_cybe(&r.classical_part, fam.name(), u.as_ref()),
                    ]
                });
            }
            if sel.wants("r-symmetry") {
                let u = u.clone();
                task!(tasks, plan, |p| vec![check_r_symmetry(&p.twist(fam, u.as_ref()))]);
            }
            if sel.wants("gauge-equivalence") {
                let u = u.clone().expect("parametric");
                task!(tasks, plan, |p| vec![check_gauge_equivalence(fam, &u, &p.cfg)]);
            }
        }
        if sel.wants("unitarity") && matches!(fam, Family::F0 | Family::F1 | Family::LR) {
            let u = u.clone();
            task!(tasks, plan, |p| vec![check_unitary(&p.twist(fam, u.as_ref()), &p.cfg)]);
        }
        if fam != Family::LR && sel.wants("xhat") {
            let u = u.clone();
            task!(tasks, plan, |p| {
                let mut out = vec![check_realization(fam, u.as_ref(), &p.cfg)];
                let f = p.twist(fam, u.as_ref());
                match xhats_from_twist(&f, &p.cfg) {
                    Ok(xhat) => {
                        out.push(check_coordinate_closure(&xhat, &p.cfg, fam.name(), f.u()));
                        out.push(check_jacobi(&xhat, &p.cfg, fam.name(), f.u()));
                        let c = commutator_parameter(&f).expect("family twist");
                        out.extend(check_commutators(&xhat, &c, &p.cfg, fam.name()));
                    }
                    Err(e) => out.push(
                        Report::new("xhat-kappa-minkowski", fam.name(), f.u(), p.cfg.order)
                            .expect(false)
                            .with_detail(e.to_string()),
                    ),
                }
                out
            });
        }
        if fam == Family::LR && sel.wants("xhat") {
            let u = u.clone();
            task!(tasks, plan, |p| {
                let f = p.twist(fam, u.as_ref());
                match xhats_from_twist(&f, &p.cfg) {
                    Ok(xhat) => vec![
                        check_coordinate_closure(&xhat, &p.cfg, fam.name(), f.u()),
                        check_jacobi(&xhat, &p.cfg, fam.name(), f.u()),
                    ],
                    Err(e) => vec![Report::new("xhat-kappa-minkowski", fam.name(), f.u(), p.cfg.order)
                        .expect(false)
                        .with_detail(e.to_string())],
                }
            });
        }
        if matches!(fam, Family::L | Family::R) {
            let u = u.clone().expect("parametric");
            let raw = if default { is_half(&u) } else { sel.wants("majid") };
            if raw {
                let u = u.clone();
                task!(tasks, plan, |p| vec![check_majid(&p.twist(fam, Some(&u)), &p.cfg)]);
            }
            if sel.wants("majid-selectivity") {
                let u = u.clone();
                task!(tasks, plan, |p| vec![check_majid_selectivity(&p.twist(fam, Some(&u)), &p.cfg)]);
            }
            if sel.wants("majid-kappa-flip") {
                let u = u.clone();
                task!(tasks, plan, |p| vec![check_majid_kappa_flip(&p.twist(fam, Some(&u)), &p.cfg)]);
            }
            if sel.wants("majid-dagger") && (is_half(&u) || !default) {
                let u = u.clone();
                task!(tasks, plan, |p| vec![check_majid_dagger(&p.twist(fam, Some(&u)), &p.cfg, 3)]);
            }
        }
        if sel.wants("coproduct-consistency") && fam != Family::LR {
            let u = u.clone();
            task!(tasks, plan, |p| {
                let at = u.clone().unwrap_or_else(|| BigRational::from_integer(i64::from(fam == Family::F1).into()));
                match p.star_params(&at) {
                    Some(sp) => vec![coproduct_consistency(&sp, fam, &p.k, &p.q, p.cfg.order)],
                    None => vec![Report::numeric("coproduct-consistency", fam.name(), to_f64(&at))
                        .expect(false)
                        .with_detail("invalid numeric parameters")],
                }
            });
        }
    }

    let both_lr = lr_families.len() == 2;
    for u in plan.us.clone() {
        if both_lr && sel.wants("lr-coproducts") {
            let u = u.clone();
            task!(tasks, plan, |p| check_left_right(&u, &p.cfg));
        }
        if both_lr && sel.wants("family-relation") {
            let u = u.clone();
            task!(tasks, plan, |p| check_family_relation(&u, &p.cfg));
        }
        if both_lr && sel.wants("r-relations") {
            let u = u.clone();
            task!(tasks, plan, |p| vec![check_r_relations(&u, &p.cfg)]);
        }
        if both_lr && sel.wants("star-structures") {
            let u = u.clone();
            task!(tasks, plan, |p| check_star_structures(&u, &p.cfg));
        }
        if both_lr && sel.wants("xhat-l-r") {
            let u = u.clone();
            task!(tasks, plan, |p| match check_left_right_realizations(&u, &p.cfg) {
                Ok(r) => r,
                Err(e) => vec![Report::new("xhat-chi-difference", "L/R", Some(&u), p.cfg.order)
                    .expect(false)
                    .with_detail(e.to_string())],
            });
        }
        if sel.wants("ode-oracle") || sel.wants("star-properties") {
            let u = u.clone();
            let (ode, props) = (sel.wants("ode-oracle"), sel.wants("star-properties"));
            task!(tasks, plan, |p| {
                let Some(sp) = p.star_params(&u) else {
                    return vec![Report::numeric("ode-oracle", "R", to_f64(&u))
                        .expect(false)
                        .with_detail("invalid numeric parameters")];
                };
                let mut out = vec![];
                if ode {
                    out.extend(check_ode_oracles(&sp, p.samples, p.seed, p.tol));
                }
                if props {
                    out.push(check_star_properties(&sp, p.samples, p.seed, p.tol));
                }
                out
            });
        }
        if sel.wants("ordered-exp-1d") {
            let u = u.clone();
            task!(tasks, plan, |p| vec![check_ordered_exp_1d(&interpolating_phi(&u), p.cfg.order)]);
        }
        if sel.wants("ordered-exp") && plan.has(Family::R) {
            let u = u.clone();
            task!(tasks, plan, |p| {
                let kappa = BigRational::from_float(p.kappa).expect("finite kappa");
                let real = Realization::closed_form(Family::R, Some(&u), &p.cfg).expect("valid configuration");
                let poly = PolynomialRealization::from_realization(&real, &kappa, p.cfg.order);
                vec![check_ordered_exp(&poly, "R", Some(&u)), check_q_boundary(&poly, &u, &p.cfg.v, &kappa)]
            });
        }
    }
    if sel.wants("ordered-exp-1d") {
        task!(tasks, plan, |p| random_cubics(10, p.seed)
            .iter()
            .map(|phi| check_ordered_exp_1d(phi, p.cfg.order))
            .collect());
    }
    tasks
}

/// Runs the selected checks in parallel; reports come back sorted by check
/// name, ties kept in planning order.
pub fn run(common: &Common, sel: Selection) -> Vec<Report> {
    let tasks = tasks(plan(common), &sel);
    let mut reports: Vec<Report> = tasks.into_par_iter().map(|t| t()).collect::<Vec<_>>().concat();
    reports.sort_by(|a, b| a.check.cmp(&b.check));
    reports
}
