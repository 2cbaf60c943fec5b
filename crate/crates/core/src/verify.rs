//! Mechanical checks of the structural theorems on concrete instances.
//!
//! A verdict is one of: the check passed, the instance lies outside the
//! hypothesis of the statement, or the statement failed. The last outcome can
//! only come from a defect in this crate, since every checked statement is a
//! theorem.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::conformal::{
    conformal_residual, conformal_space, trace_identity, ConformalSolutionSpace,
};
use crate::error::Result;
use crate::exact::{format_vec, int, Rational};
use crate::lie::LieAlgebra;
use crate::metric::PseudoMetric;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// Unimodular algebras carry no non-Killing left-invariant conformal field.
    Unimodular,
    /// `dim C(g) ≤ min(p,q)` and `dim [g,g] ≥ n − min(p,q)`.
    Bounds,
    /// Non-Killing conformal fields are lightlike.
    Lightlike,
    /// The metric restricted to `[g,g]` is degenerate.
    Degenerate,
    /// Left-invariant Yamabe solitons on unimodular groups are trivial.
    Corollary,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::Unimodular,
        Check::Bounds,
        Check::Lightlike,
        Check::Degenerate,
        Check::Corollary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Unimodular => "unimodular",
            Check::Bounds => "bounds",
            Check::Lightlike => "lightlike",
            Check::Degenerate => "degenerate",
            Check::Corollary => "corollary",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    HypothesisNotMet {
        reason: String,
    },
    TheoremViolated {
        reason: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        counterexample: Option<Vec<String>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub check: Check,
    #[serde(flatten)]
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
}

impl VerdictReport {
    fn pass(check: Check, details: Vec<String>) -> Self {
        Self {
            check,
            verdict: Verdict::Pass,
            details,
        }
    }

    fn not_met(check: Check, reason: impl Into<String>) -> Self {
        Self {
            check,
            verdict: Verdict::HypothesisNotMet {
                reason: reason.into(),
            },
            details: Vec::new(),
        }
    }

    fn violated(check: Check, reason: impl Into<String>, cx: Option<&[Rational]>) -> Self {
        Self {
            check,
            verdict: Verdict::TheoremViolated {
                reason: reason.into(),
                counterexample: cx.map(format_vec),
            },
            details: Vec::new(),
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self.verdict, Verdict::Pass)
    }

    pub fn is_violation(&self) -> bool {
        matches!(self.verdict, Verdict::TheoremViolated { .. })
    }

    pub fn is_not_met(&self) -> bool {
        matches!(self.verdict, Verdict::HypothesisNotMet { .. })
    }
}

/// No non-Killing conformal field exists on a unimodular algebra; every
/// solution also satisfies `−nρ = tr(ad_X) = Σ ⟨ad_X f_i, f_i⟩/⟨f_i, f_i⟩`.
pub fn verify_theorem_unimodular(g: &LieAlgebra, m: &PseudoMetric) -> Result<VerdictReport> {
    let check = Check::Unimodular;
    if !g.is_unimodular() {
        return Ok(VerdictReport::not_met(
            check,
            format!("algebra is not unimodular: tr ad = ({})", format_vec(&g.trace_form()).join(", ")),
        ));
    }
    let c = conformal_space(g, m)?;
    for v in c.space().basis() {
        let (x, rho) = ConformalSolutionSpace::split(v);
        if !rho.is_zero() {
            return Ok(VerdictReport::violated(
                check,
                "conformal solution with nonzero rho on a unimodular algebra",
                Some(v),
            ));
        }
        let t = trace_identity(g, m, x, rho)?;
        if !t.holds() || !t.trace_ad.is_zero() {
            return Ok(VerdictReport::violated(
                check,
                format!(
                    "trace identity fails: -n rho = {}, tr ad_X = {}, orthogonal sum = {}",
                    t.minus_n_rho, t.trace_ad, t.orthogonal_sum
                ),
                Some(v),
            ));
        }
    }
    Ok(VerdictReport::pass(
        check,
        vec![format!("conformal space dim {} is entirely Killing", c.dim())],
    ))
}

/// Dimension bounds on the center and the commutator ideal when a non-Killing
/// conformal field exists.
pub fn verify_bounds_nonunimodular(g: &LieAlgebra, m: &PseudoMetric) -> Result<VerdictReport> {
    let check = Check::Bounds;
    let c = conformal_space(g, m)?;
    if !c.nonkilling_exists() {
        return Ok(VerdictReport::not_met(check, "no non-Killing conformal field"));
    }
    let n = g.dim();
    let k = m.signature().min_pq();
    let center = g.center().dim();
    let derived = g.commutator_ideal().dim();
    let details = vec![
        format!("dim C = {center} <= min(p,q) = {k}"),
        format!("dim [g,g] = {derived} >= n - min(p,q) = {}", n - k),
    ];
    if center > k {
        return Ok(VerdictReport::violated(check, details[0].replace("<=", ">"), None));
    }
    if derived + k < n {
        return Ok(VerdictReport::violated(check, details[1].replace(">=", "<"), None));
    }
    Ok(VerdictReport::pass(check, details))
}

/// Samples random combinations of the solution space with `ρ ≠ 0` and checks
/// `⟨X, X⟩ = 0`. Passes vacuously when every solution is Killing.
pub fn verify_lightlike(
    g: &LieAlgebra,
    m: &PseudoMetric,
    c: &ConformalSolutionSpace,
    samples: usize,
    seed: u64,
) -> Result<VerdictReport> {
    let check = Check::Lightlike;
    if !c.nonkilling_exists() {
        return Ok(VerdictReport::pass(
            check,
            vec!["vacuous: no non-Killing conformal field".into()],
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<Vec<Rational>> = c
        .space()
        .basis()
        .iter()
        .filter(|v| !v[c.algebra_dim()].is_zero())
        .cloned()
        .collect();
    let mut drawn = 0;
    while drawn < samples {
        let coeffs: Vec<Rational> = (0..c.dim())
            .map(|_| Rational::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=4).into()))
            .collect();
        let v = c.space().combine(&coeffs);
        if v[c.algebra_dim()].is_zero() {
            continue;
        }
        candidates.push(v);
        drawn += 1;
    }
    for v in &candidates {
        let (x, rho) = ConformalSolutionSpace::split(v);
        if !conformal_residual(g, m, x, rho)?.is_zero() {
            return Ok(VerdictReport::violated(
                check,
                "sampled vector does not solve the conformal system",
                Some(v),
            ));
        }
        let norm = m.inner(x, x)?;
        if !norm.is_zero() {
            return Ok(VerdictReport::violated(
                check,
                format!("non-Killing conformal field with <X,X> = {norm}"),
                Some(v),
            ));
        }
    }
    Ok(VerdictReport::pass(
        check,
        vec![format!("{} non-Killing fields checked", candidates.len())],
    ))
}

/// Degeneracy of the metric on `[g,g]` for a non-unimodular algebra with a
/// non-Killing conformal field.
pub fn verify_degenerate_restriction(g: &LieAlgebra, m: &PseudoMetric) -> Result<VerdictReport> {
    let check = Check::Degenerate;
    if g.is_unimodular() {
        return Ok(VerdictReport::not_met(check, "algebra is unimodular"));
    }
    let c = conformal_space(g, m)?;
    if !c.nonkilling_exists() {
        return Ok(VerdictReport::not_met(check, "no non-Killing conformal field"));
    }
    let derived = g.commutator_ideal();
    let restricted = m.restricted_gram(&derived)?;
    let det = restricted.det()?;
    if !det.is_zero() {
        return Ok(VerdictReport::violated(
            check,
            format!("restriction to [g,g] has determinant {det}"),
            None,
        ));
    }
    Ok(VerdictReport::pass(
        check,
        vec![format!("restricted Gram on [g,g] (dim {}) is singular", derived.dim())],
    ))
}

/// Runs one check with default sampling parameters where needed.
pub fn run_check(
    check: Check,
    g: &LieAlgebra,
    m: &PseudoMetric,
    samples: usize,
    seed: u64,
) -> Result<VerdictReport> {
    match check {
        Check::Unimodular => verify_theorem_unimodular(g, m),
        Check::Bounds => verify_bounds_nonunimodular(g, m),
        Check::Lightlike => {
            let c = conformal_space(g, m)?;
            verify_lightlike(g, m, &c, samples, seed)
        }
        Check::Degenerate => verify_degenerate_restriction(g, m),
        Check::Corollary => crate::yamabe::verify_corollary_unimodular(g, m),
    }
}

/// `n·ρ + tr(ad_X)` for a solution; zero for every conformal solution.
pub fn trace_defect(g: &LieAlgebra, x: &[Rational], rho: &Rational) -> Result<Rational> {
    Ok(int(g.dim() as i64) * rho + g.ad_trace(x)?)
}
