//! Full analysis of one instance as a serializable, deterministic report.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::catalog::Instance;
use crate::conformal::conformal_space;
use crate::error::Result;
use crate::exact::{format_rational, format_vec, Subspace};
use crate::geometry::{curvature, CurvatureSummary};
use crate::metric::CausalCharacter;
use crate::verify::{run_check, Check, VerdictReport};
use crate::yamabe::{soliton_with_scalar, SolitonReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubspaceReport {
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
}

impl From<&Subspace> for SubspaceReport {
    fn from(s: &Subspace) -> Self {
        Self {
            dim: s.dim(),
            basis: s.basis().iter().map(|v| format_vec(v)).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceSummary {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub params: BTreeMap<String, String>,
    pub dim: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SignatureReport {
    pub p: usize,
    pub q: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConformalReport {
    pub coordinates: Vec<String>,
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolutionReport {
    pub causal_character: CausalCharacter,
    #[serde(flatten)]
    pub soliton: SolitonReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub instance: InstanceSummary,
    pub unimodular: bool,
    pub trace_form: Vec<String>,
    pub solvable: bool,
    pub nilpotent: bool,
    pub center: SubspaceReport,
    pub commutator_ideal: SubspaceReport,
    pub signature: SignatureReport,
    pub conformal_space: ConformalReport,
    pub killing_space: SubspaceReport,
    pub nonkilling_exists: bool,
    pub curvature: CurvatureSummary,
    pub solitons: Vec<SolutionReport>,
    pub verdicts: Vec<VerdictReport>,
    pub seed: u64,
    pub samples: usize,
}

pub fn analyze(inst: &Instance, seed: u64, samples: usize) -> Result<AnalysisReport> {
    let g = &inst.algebra;
    let m = &inst.metric;
    let n = g.dim();
    let c = conformal_space(g, m)?;
    let curv = curvature(g, m)?;
    let solitons = c
        .solutions()
        .map(|(x, rho)| {
            Ok(SolutionReport {
                causal_character: m.causal_character(x)?,
                soliton: soliton_with_scalar(g, m, &curv.scalar, x, rho)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let verdicts = Check::ALL
        .iter()
        .map(|&check| run_check(check, g, m, samples, seed))
        .collect::<Result<Vec<_>>>()?;
    let mut coordinates: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    coordinates.push("rho".into());
    Ok(AnalysisReport {
        instance: InstanceSummary {
            name: inst.name.clone(),
            family: inst.family.clone(),
            params: inst
                .params
                .iter()
                .map(|(k, v)| (k.clone(), format_rational(v)))
                .collect(),
            dim: n,
        },
        unimodular: g.is_unimodular(),
        trace_form: format_vec(&g.trace_form()),
        solvable: g.is_solvable(),
        nilpotent: g.is_nilpotent(),
        center: (&g.center()).into(),
        commutator_ideal: (&g.commutator_ideal()).into(),
        signature: SignatureReport { p: m.p(), q: m.q() },
        conformal_space: ConformalReport {
            coordinates,
            dim: c.dim(),
            basis: c.space().basis().iter().map(|v| format_vec(v)).collect(),
        },
        killing_space: (&c.killing_space()).into(),
        nonkilling_exists: c.nonkilling_exists(),
        curvature: curv.summary(),
        solitons,
        verdicts,
        seed,
        samples,
    })
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable rendering; the JSON form is the stable contract.
    pub fn to_table(&self) -> String {
        use std::fmt::Write;
        let vecs = |b: &[Vec<String>]| -> String {
            if b.is_empty() {
                return "{0}".into();
            }
            b.iter()
                .map(|v| format!("({})", v.join(", ")))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut out = String::new();
        let i = &self.instance;
        let params: Vec<String> = i.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "instance          {} [{}] dim {}", i.name, params.join(", "), i.dim);
        let _ = writeln!(out, "signature         ({}, {})", self.signature.p, self.signature.q);
        let _ = writeln!(out, "unimodular        {}", self.unimodular);
        let _ = writeln!(out, "center            dim {}  {}", self.center.dim, vecs(&self.center.basis));
        let _ = writeln!(
            out,
            "[g,g]             dim {}  {}",
            self.commutator_ideal.dim,
            vecs(&self.commutator_ideal.basis)
        );
        let _ = writeln!(
            out,
            "conformal (x,rho) dim {}  {}",
            self.conformal_space.dim,
            vecs(&self.conformal_space.basis)
        );
        let _ = writeln!(
            out,
            "killing           dim {}  {}",
            self.killing_space.dim,
            vecs(&self.killing_space.basis)
        );
        let _ = writeln!(out, "non-Killing       {}", self.nonkilling_exists);
        let _ = writeln!(out, "scalar curvature  {}", format_rational(&self.curvature.scalar));
        for s in &self.solitons {
            let _ = writeln!(
                out,
                "soliton           X=({}) rho={} lambda={} {:?}{} {:?}",
                s.soliton.field.join(", "),
                format_rational(&s.soliton.rho),
                format_rational(&s.soliton.lambda),
                s.soliton.class,
                if s.soliton.trivial { " trivial" } else { " non-trivial" },
                s.causal_character,
            );
        }
        for v in &self.verdicts {
            let status = match &v.verdict {
                crate::verify::Verdict::Pass => "pass".to_string(),
                crate::verify::Verdict::HypothesisNotMet { reason } => format!("n/a ({reason})"),
                crate::verify::Verdict::TheoremViolated { reason, .. } => format!("VIOLATED ({reason})"),
            };
            let _ = writeln!(out, "verify {:<10} {status}", v.check.name());
        }
        out
    }
}
