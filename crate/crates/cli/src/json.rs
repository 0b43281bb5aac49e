//! JSON forms of reports and certificates.

use std::collections::BTreeMap;

use anyhow::{bail, Context};
use edgereg_core::constructor::CertificateStep;
use edgereg_core::oracle::VerifyReport;
use edgereg_core::{
    Certificate, Graph, IntegerPolynomial, InvariantReport, SuspensionKind, SuspensionStep,
    VertexSet,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::io::GraphFile;

/// Coefficients as JSON numbers, falling back to decimal strings past 64 bits.
pub fn coefficients(p: &IntegerPolynomial) -> Vec<Value> {
    p.coeffs()
        .iter()
        .map(|c| match i64::try_from(c) {
            Ok(x) => Value::from(x),
            Err(_) => Value::String(c.to_string()),
        })
        .collect()
}

pub fn parse_coefficients(values: &[Value]) -> anyhow::Result<IntegerPolynomial> {
    let coeffs = values
        .iter()
        .map(|v| match v {
            Value::Number(n) => n
                .as_i64()
                .map(BigInt::from)
                .context("coefficient is not an integer"),
            Value::String(s) => s.parse::<BigInt>().context("bad coefficient string"),
            _ => bail!("coefficient must be a number or a string"),
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(IntegerPolynomial::new(coeffs))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub n: usize,
    pub connected: bool,
    pub im: usize,
    pub m: usize,
    pub reg: usize,
    pub dim: usize,
    pub h: Vec<Value>,
    pub s: usize,
    pub field: String,
}

impl From<&InvariantReport> for ReportJson {
    fn from(r: &InvariantReport) -> Self {
        ReportJson {
            n: r.n,
            connected: r.connected,
            im: r.im,
            m: r.m,
            reg: r.reg,
            dim: r.dim,
            h: coefficients(&r.h),
            s: r.s,
            field: r.field.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TargetJson {
    pub a: usize,
    pub r: usize,
    pub s: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BaseJson {
    /// Graphs whose disjoint union, in this order, starts the construction.
    pub parts: Vec<GraphFile>,
    pub provenance: Vec<String>,
    pub graph: GraphFile,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StepJson {
    pub kind: String,
    pub phase: String,
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge: Option<[usize; 2]>,
    pub new_vertex: usize,
    pub predicted_h: Vec<Value>,
    pub computed_h: Vec<Value>,
    pub dpow: usize,
}

impl From<&CertificateStep> for StepJson {
    fn from(st: &CertificateStep) -> Self {
        StepJson {
            kind: st.step.kind.as_str().into(),
            phase: st.phase.as_str().into(),
            s: st.step.s.to_vec(),
            edge: st.step.edge.map(|(u, v)| [u, v]),
            new_vertex: st.step.new_vertex,
            predicted_h: coefficients(st.predicted.numerator()),
            computed_h: coefficients(st.computed.numerator()),
            dpow: st.computed.dpow(),
        }
    }
}

impl StepJson {
    pub fn to_step(&self) -> anyhow::Result<SuspensionStep> {
        let kind = match self.kind.as_str() {
            "S" => SuspensionKind::S,
            "edgeS" => SuspensionKind::EdgeS,
            other => bail!("unknown step kind {other:?}"),
        };
        Ok(SuspensionStep {
            kind,
            s: VertexSet::try_from_vertices(&self.s)?,
            edge: self.edge.map(|[u, v]| (u, v)),
            new_vertex: self.new_vertex,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub target: TargetJson,
    pub base: BaseJson,
    pub steps: Vec<StepJson>,
    pub result: GraphFile,
    pub report: ReportJson,
    pub field: String,
    pub seed: u64,
}

impl CertificateJson {
    pub fn new(c: &Certificate) -> anyhow::Result<Self> {
        let (a, r, s) = c.target;
        Ok(CertificateJson {
            target: TargetJson { a, r, s },
            base: BaseJson {
                parts: c.base_parts.iter().map(GraphFile::from_graph).collect(),
                provenance: c.base_provenance.clone(),
                graph: GraphFile::from_graph(&c.base()?),
            },
            steps: c.steps.iter().map(StepJson::from).collect(),
            result: GraphFile::from_graph(&c.result),
            report: ReportJson::from(&c.report),
            field: c.field.to_string(),
            seed: c.seed,
        })
    }

    /// Rebuilds the result from the base parts and the recorded steps, and
    /// checks it against the recorded base and result graphs.
    pub fn replay(&self) -> anyhow::Result<Graph> {
        let parts = self
            .base
            .parts
            .iter()
            .map(GraphFile::to_graph)
            .collect::<Result<Vec<_>, _>>()?;
        let mut g = Graph::disjoint_union(&parts)?;
        if g != self.base.graph.to_graph()? {
            bail!("base parts do not make up the recorded base graph");
        }
        for (i, st) in self.steps.iter().enumerate() {
            g = st
                .to_step()?
                .apply(&g)
                .with_context(|| format!("step {i} does not apply"))?;
        }
        if g != self.result.to_graph()? {
            bail!("replayed graph differs from the recorded result");
        }
        Ok(g)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FailureJson {
    pub descriptor: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReportJson {
    pub trials: usize,
    pub seed: u64,
    pub nmax: usize,
    pub field: String,
    pub passed: bool,
    pub checks: BTreeMap<String, u64>,
    pub failures: Vec<FailureJson>,
    pub notes: Vec<String>,
}

impl From<&VerifyReport> for VerifyReportJson {
    fn from(r: &VerifyReport) -> Self {
        VerifyReportJson {
            trials: r.trials,
            seed: r.seed,
            nmax: r.nmax,
            field: r.field.to_string(),
            passed: r.passed(),
            checks: r.checks.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            failures: r
                .failures
                .iter()
                .map(|f| FailureJson {
                    descriptor: f.descriptor.clone(),
                    expected: f.expected.clone(),
                    got: f.got.clone(),
                })
                .collect(),
            notes: r.notes.clone(),
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}
