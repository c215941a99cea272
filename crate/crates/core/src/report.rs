//! Check outcomes shared by every verification routine.

use std::fmt;

use num_rational::BigRational;
use serde::Serialize;

use crate::ncalg::{Basis, Coefficient, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// One verification outcome. `first_residual_order` is the lowest power of
/// `1/kappa` at which the two sides differ, if they do.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub family: String,
    pub u: Option<String>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
    pub status: Status,
    pub first_residual_order: Option<u32>,
    pub max_terms: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Report {
    pub fn new(check: impl Into<String>, family: impl Into<String>, u: Option<&BigRational>, order: u32) -> Self {
        Report {
            check: check.into(),
            family: family.into(),
            u: u.map(ToString::to_string),
            order: Some(order),
            status: Status::Pass,
            first_residual_order: None,
            max_terms: 0,
            max_residual: None,
            detail: None,
        }
    }

    /// A floating-point check, with `u` printed as a decimal.
    pub fn numeric(check: impl Into<String>, family: impl Into<String>, u: f64) -> Self {
        Report {
            check: check.into(),
            family: family.into(),
            u: Some(u.to_string()),
            order: None,
            status: Status::Pass,
            first_residual_order: None,
            max_terms: 0,
            max_residual: None,
            detail: None,
        }
    }

    /// Records a residual, failing when it exceeds `tol` or is not finite.
    pub fn expect_close(mut self, residual: f64, tol: f64) -> Self {
        self.max_residual = Some(match self.max_residual {
            Some(r) if r.is_nan() || residual <= r => r,
            _ => residual,
        });
        if residual.is_nan() || residual > tol {
            self.status = Status::Fail;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Records `lhs = rhs`; fails at the first differing grade.
    pub fn expect_equal<C: Coefficient, K: Basis>(mut self, lhs: &Series<C, K>, rhs: &Series<C, K>) -> Self {
        let diff = lhs.first_difference_order(rhs);
        self.max_terms = self.max_terms.max(lhs.len()).max(rhs.len());
        self.first_residual_order = min_opt(self.first_residual_order, diff);
        if diff.is_some() {
            self.status = Status::Fail;
        }
        self
    }

    /// Records `lhs != rhs` as expected; passes when a difference exists and
    /// keeps its order.
    pub fn expect_different<C: Coefficient, K: Basis>(mut self, lhs: &Series<C, K>, rhs: &Series<C, K>) -> Self {
        let diff = lhs.first_difference_order(rhs);
        self.max_terms = self.max_terms.max(lhs.len()).max(rhs.len());
        self.first_residual_order = min_opt(self.first_residual_order, diff);
        if diff.is_none() {
            self.status = Status::Fail;
        }
        self
    }

    pub fn expect(mut self, ok: bool) -> Self {
        if !ok {
            self.status = Status::Fail;
        }
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    /// Folds several sub-reports into one record under this name.
    pub fn merge(mut self, parts: impl IntoIterator<Item = Report>) -> Self {
        for part in parts {
            if !part.passed() {
                self.status = Status::Fail;
            }
            self.first_residual_order = min_opt(self.first_residual_order, part.first_residual_order);
            self.max_terms = self.max_terms.max(part.max_terms);
            if let Some(r) = part.max_residual {
                self.max_residual = Some(self.max_residual.map_or(r, |m| m.max(r)));
            }
        }
        self
    }
}

fn min_opt(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<4} {:<28} family={:<4}", self.status, self.check, self.family)?;
        if let Some(u) = &self.u {
            write!(f, " u={u}")?;
        }
        if let Some(n) = self.order {
            write!(f, " N={n}")?;
        }
        if self.max_terms > 0 {
            write!(f, " terms={}", self.max_terms)?;
        }
        if let Some(o) = self.first_residual_order {
            write!(f, " first_residual_order={o}")?;
        }
        if let Some(r) = self.max_residual {
            write!(f, " max_residual={r:.3e}")?;
        }
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        Ok(())
    }
}
