//! Topological complexity of configuration spaces of surfaces: closed-form
//! values, zcl lower bounds from the model algebras, and upper bounds from
//! homotopy-dimension and product facts.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldKind;
use crate::models::{
    b_algebra, punctured_plane_algebra, so3_mod2_presentation, sphere_mod2_model, surface_cohomology,
    torus_reduced_algebra, Coordinates,
};
use crate::presentation::{quotient_with, QuotientOptions};
use crate::zcl::{genus_certificate, punctured_plane_certificate, sphere_certificate, torus_certificate, zcl_exact, BoundReport, ZclOptions};

/// A known value used in an upper-bound chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TcFact {
    pub description: String,
    pub value: usize,
    /// Why the value holds.
    pub basis: String,
}

fn fact(description: impl Into<String>, value: usize, basis: impl Into<String>) -> TcFact {
    TcFact { description: description.into(), value, basis: basis.into() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Tight,
    Gap,
    Unverified,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Tight => "tight",
            Status::Gap => "gap",
            Status::Unverified => "unverified",
        })
    }
}

/// How the zcl lower bound is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LowerMethod {
    /// Power iteration on the model algebra.
    Exact,
    /// Explicit certificate where one exists, power iteration otherwise.
    Certificate,
}

impl FromStr for LowerMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(LowerMethod::Exact),
            "certificate" => Ok(LowerMethod::Certificate),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBound {
    /// zcl + 1.
    pub value: usize,
    pub zcl: BoundReport,
    pub field: FieldKind,
    /// How the model algebra relates to the cohomology of the space.
    pub model_note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperBound {
    pub value: usize,
    pub chain: Vec<TcFact>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TcReport {
    pub g: u32,
    pub n: u32,
    pub m: u32,
    pub lower: Option<LowerBound>,
    pub upper: UpperBound,
    pub theorem: usize,
    /// tc of the n-fold product of the closed surface, for comparison.
    pub product_tc: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

/// The closed-form value of tc(F(Σ_g ∖ Q_m, n)).
pub fn tc_theorem(g: u32, n: u32, m: u32) -> Result<usize> {
    if n == 0 {
        return Err(Error::Rejected("n must be at least 1".into()));
    }
    let n = n as usize;
    Ok(match (g, m) {
        (0, 0) if n <= 2 => 3,
        (0, 0) => 2 * n - 2,
        (1, 0) => 2 * n + 1,
        (_, 0) => 2 * n + 3,
        (0, 1) if n == 1 => 1,
        (0, 1) => 2 * n - 2,
        (0, 2) => 2 * n,
        (0, _) => 2 * n + 1,
        (_, _) => 2 * n + 1,
    })
}

/// tc of (Σ_g)^{×n}.
pub fn product_tc(g: u32, n: u32) -> usize {
    if g <= 1 {
        2 * n as usize + 1
    } else {
        4 * n as usize + 1
    }
}

fn dimension_fact(space: &str, dim: usize) -> TcFact {
    fact(
        format!("tc({space}) ≤ 2·{dim} + 1"),
        2 * dim + 1,
        format!("{space} has the homotopy type of a CW complex of dimension {dim}"),
    )
}

fn product_fact(x: &TcFact, y: &TcFact) -> TcFact {
    fact(
        "tc(X × Y) ≤ tc(X) + tc(Y) − 1",
        x.value + y.value - 1,
        format!("product inequality with {} and {}", x.description, y.description),
    )
}

/// tc(F(ℝ² ∖ Q₂, k)) for k ≥ 0.
fn twice_punctured_plane(k: usize) -> TcFact {
    if k == 0 {
        return fact("tc(point) = 1", 1, "a point is contractible");
    }
    fact(
        format!("tc(F(R2-Q2,{k})) = {}", 2 * k + 1),
        2 * k + 1,
        "configuration spaces of the twice-punctured plane",
    )
}

pub fn upper_bound(g: u32, n: u32, m: u32) -> Result<UpperBound> {
    if n == 0 {
        return Err(Error::Rejected("n must be at least 1".into()));
    }
    let n = n as usize;
    let chain = match (g, m) {
        (0, 0) if n <= 2 => vec![fact("tc(S2) = 3", 3, "F(S2,1) = S2 and F(S2,2) ≃ S2; even-dimensional sphere")],
        (0, 0) => {
            let so3 = fact("tc(SO(3)) = 4", 4, "tc(SO(3)) = cat(SO(3)) = 4");
            if n == 3 {
                vec![fact("tc(F(S2,3)) = 4", 4, "F(S2,3) ≅ PSL(2,C) ≃ SO(3)"), so3]
            } else {
                let p = twice_punctured_plane(n - 3);
                let total = product_fact(&so3, &p);
                vec![total, so3, p]
            }
        }
        (1, 0) => {
            let t = fact("tc(T) = 3", 3, "torus, a product of two circles");
            if n == 1 {
                vec![t]
            } else {
                let d = dimension_fact(&format!("F(T-Q1,{})", n - 1), n - 1);
                vec![product_fact(&t, &d), t, d]
            }
        }
        (_, 0) => vec![dimension_fact(&format!("F(Σ{g},{n})"), n + 1)],
        (0, _) if n == 1 => {
            let v = match m {
                1 => fact("tc(R2) = 1", 1, "contractible"),
                2 => fact("tc(S1) = 2", 2, "R2 minus a point ≃ S1"),
                _ => fact("tc(∨S1) = 3", 3, "a wedge of at least two circles"),
            };
            vec![v]
        }
        (0, 1) => {
            let s1 = fact("tc(S1) = 2", 2, "circle factor of F(R2,n) ≅ C × C* × F(C-Q2,n−2)");
            let p = twice_punctured_plane(n - 2);
            vec![product_fact(&s1, &p), s1, p]
        }
        (0, 2) => {
            let s1 = fact("tc(S1) = 2", 2, "circle factor of F(C-Q1,n) ≅ C* × F(C-Q2,n−1)");
            let p = twice_punctured_plane(n - 1);
            vec![product_fact(&s1, &p), s1, p]
        }
        (_, _) => vec![dimension_fact(&format!("F(Σ{g}-Q{m},{n})"), n)],
    };
    Ok(UpperBound { value: chain[0].value, chain })
}

/// Size limits for the algebra computations behind a report.
#[derive(Clone, Copy, Debug, Default)]
pub struct TcOptions {
    pub quotient: QuotientOptions,
    pub zcl: ZclOptions,
}

fn lower_bound(g: u32, n: u32, m: u32, method: LowerMethod, opts: &TcOptions) -> Result<Option<LowerBound>> {
    let nn = n as usize;
    let exact_q = |a: &std::sync::Arc<crate::algebra::GradedAlgebra<crate::Rational>>| zcl_exact(a, opts.zcl);
    let certify = method == LowerMethod::Certificate;
    let (zcl, field, note): (BoundReport, FieldKind, String) = match (g, m) {
        (0, 0) if n <= 2 => {
            let q = quotient_with(&surface_cohomology::<crate::Rational>(0)?, opts.quotient)?;
            (exact_q(q.algebra())?, FieldKind::Rational, "H*(S2) is the cohomology of F(S2,n) for n ≤ 2".into())
        }
        (0, 0) => {
            let report = if certify {
                sphere_certificate(nn, opts.quotient)?.report()
            } else {
                zcl_exact(sphere_mod2_model(nn, opts.quotient)?.algebra(), opts.zcl)?
            };
            (report, FieldKind::Gf2, "mod-2 cohomology of F(S2,n)".into())
        }
        (1, 0) => {
            let report =
                if certify { torus_certificate(nn, opts.quotient)?.report() } else { exact_q(torus_reduced_algebra(nn, opts.quotient)?.algebra())? };
            (report, FieldKind::Rational, "A_T is a subalgebra of H*(F(T,n))".into())
        }
        (_, 0) => {
            let report = if certify {
                genus_certificate(g, nn, opts.quotient)?.report()
            } else {
                exact_q(b_algebra(g, nn, Coordinates::Reduced, opts.quotient)?.quotient.algebra())?
            };
            (report, FieldKind::Rational, "B is an epimorphic image of the Totaro model, a subalgebra of H*(F(Σ,n))".into())
        }
        (0, 1) => {
            let q = quotient_with(&crate::models::arnold_algebra::<crate::Rational>(nn)?, opts.quotient)?;
            (exact_q(q.algebra())?, FieldKind::Rational, "Arnold algebra = H*(F(R2,n))".into())
        }
        (0, 2) => {
            let q = quotient_with(&punctured_plane_algebra::<crate::Rational>(nn, 1)?, opts.quotient)?;
            (exact_q(q.algebra())?, FieldKind::Rational, "H*(F(R2-Q1,n))".into())
        }
        (0, _) => {
            let report = if certify {
                punctured_plane_certificate(nn, opts.quotient)?.report()
            } else {
                exact_q(quotient_with(&punctured_plane_algebra::<crate::Rational>(nn, 2)?, opts.quotient)?.algebra())?
            };
            let note = if m == 3 {
                "H*(F(R2-Q2,n)) = H*(F(S2-Q3,n))".to_string()
            } else {
                format!("H*(F(R2-Q2,n)) is a subalgebra of H*(F(S2-Q{m},n))")
            };
            (report, FieldKind::Rational, note)
        }
        (_, _) => return Ok(None),
    };
    Ok(Some(LowerBound { value: zcl.value + 1, zcl, field, model_note: note }))
}

pub fn tc_report(g: u32, n: u32, m: u32, method: LowerMethod, opts: &TcOptions) -> Result<TcReport> {
    let theorem = tc_theorem(g, n, m)?;
    let upper = upper_bound(g, n, m)?;
    let lower = match lower_bound(g, n, m, method, opts) {
        Ok(l) => l,
        Err(Error::Resource { what, size, limit, .. }) => {
            return Err(Error::Resource { what: format!("{what} (tc report g={g} n={n} m={m})"), size, limit, partial: None })
        }
        Err(e) => return Err(e),
    };
    let status = match &lower {
        None => Status::Unverified,
        Some(l) if l.value == theorem && upper.value == theorem => Status::Tight,
        Some(_) => Status::Gap,
    };
    let note = lower.is_none().then(|| "no model algebra for punctured surfaces of positive genus; lower bound unverified".to_string());
    Ok(TcReport { g, n, m, lower, upper, theorem, product_tc: product_tc(g, n), status, note })
}

/// One row of a sweep: a report, or the reason none could be produced.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepRow {
    pub g: u32,
    pub n: u32,
    pub m: u32,
    pub lower: Option<usize>,
    pub upper: Option<usize>,
    pub theorem: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

impl SweepRow {
    /// Whether the row was computed and fell short of tightness.
    pub fn failed(&self) -> bool {
        self.error.is_none() && self.status == Status::Gap
    }
}

pub fn sweep(gmax: u32, nmax: u32, mmax: u32, method: LowerMethod, opts: &TcOptions) -> Result<Vec<SweepRow>> {
    let specs: Vec<(u32, u32, u32)> =
        (0..=gmax).flat_map(|g| (1..=nmax).flat_map(move |n| (0..=mmax).map(move |m| (g, n, m)))).collect();
    specs
        .into_par_iter()
        .map(|(g, n, m)| {
            let theorem = tc_theorem(g, n, m)?;
            Ok(match tc_report(g, n, m, method, opts) {
                Ok(r) => SweepRow {
                    g,
                    n,
                    m,
                    lower: r.lower.as_ref().map(|l| l.value),
                    upper: Some(r.upper.value),
                    theorem,
                    status: r.status,
                    error: None,
                },
                Err(e @ Error::Resource { .. }) => SweepRow {
                    g,
                    n,
                    m,
                    lower: None,
                    upper: upper_bound(g, n, m).ok().map(|u| u.value),
                    theorem,
                    status: Status::Unverified,
                    error: Some(e.to_string()),
                },
                Err(e) => return Err(e),
            })
        })
        .collect()
}

/// The tc(SO(3)) lower bound from ℤ₂[α]/(α⁴).
pub fn so3_lower_bound(opts: &TcOptions) -> Result<usize> {
    let q = quotient_with(&so3_mod2_presentation()?, opts.quotient)?;
    Ok(zcl_exact(q.algebra(), opts.zcl)?.value + 1)
}
