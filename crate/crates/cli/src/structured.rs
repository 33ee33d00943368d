//! Machine-readable JSON documents. Field names are stable; see
//! `docs/FORMAT.md` at the repository root.

use decant_core::verify::{AgreementSweep, GcdSweep};
use decant_core::{
    classify_edge, DiscrepancyReport, Distribution, Jug, ModelGraph, Pour, Quadruple, SolveResult,
    SuccessorSource,
};
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadrupleDoc {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl From<&Quadruple> for QuadrupleDoc {
    fn from(q: &Quadruple) -> Self {
        Self {
            a: q.a(),
            b: q.b(),
            c: q.c(),
            d: q.d(),
        }
    }
}

impl TryFrom<QuadrupleDoc> for Quadruple {
    type Error = decant_core::Error;

    fn try_from(doc: QuadrupleDoc) -> Result<Self, Self::Error> {
        Quadruple::new(doc.a, doc.b, doc.c, doc.d)
    }
}

/// A state as the pair `[i, j]`.
pub type Pair = [u32; 2];

fn pair(v: Distribution) -> Pair {
    [v.i, v.j]
}

fn state(p: Pair) -> Distribution {
    Distribution::new(p[0], p[1])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Solvable,
    Unsolvable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PourDoc {
    pub source: String,
    pub destination: String,
    pub amount: u32,
}

impl From<&Pour> for PourDoc {
    fn from(p: &Pour) -> Self {
        Self {
            source: p.source.to_string(),
            destination: p.destination.to_string(),
            amount: p.amount,
        }
    }
}

impl PourDoc {
    pub fn jugs(&self) -> Option<(Jug, Jug)> {
        let jug = |s: &str| match s {
            "A" => Some(Jug::A),
            "B" => Some(Jug::B),
            "C" => Some(Jug::C),
            _ => None,
        };
        Some((jug(&self.source)?, jug(&self.destination)?))
    }
}

fn successors_name(s: SuccessorSource) -> &'static str {
    match s {
        SuccessorSource::Model => "model",
        SuccessorSource::Oracle => "oracle",
    }
}

/// Output of `solve` and `check`. `path`, `pours` and `pour_count` are only
/// present for a solvable `solve`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveDoc {
    pub document: String,
    pub format_version: u32,
    pub quadruple: QuadrupleDoc,
    pub start: Pair,
    pub target: Pair,
    pub successors: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pour_count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<Vec<Pair>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pours: Option<Vec<PourDoc>>,
}

impl SolveDoc {
    pub fn new(result: &SolveResult, successors: SuccessorSource, with_path: bool) -> Self {
        let p = &result.instance;
        let solution = result.solution.as_ref().filter(|_| with_path);
        Self {
            document: if with_path { "solve" } else { "check" }.into(),
            format_version: FORMAT_VERSION,
            quadruple: p.quadruple().into(),
            start: pair(p.start()),
            target: pair(p.target()),
            successors: successors_name(successors).into(),
            verdict: if result.is_solvable() {
                Verdict::Solvable
            } else {
                Verdict::Unsolvable
            },
            pour_count: solution.map(|s| s.pours.len()),
            path: solution.map(|s| s.path.iter().copied().map(pair).collect()),
            pours: solution.map(|s| s.pours.iter().map(PourDoc::from).collect()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub state: Pair,
    pub valid: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub from: Pair,
    pub to: Pair,
    pub kind: String,
}

/// Output of `graph --format structured`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub document: String,
    pub format_version: u32,
    pub quadruple: QuadrupleDoc,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
}

impl GraphDoc {
    pub fn new(graph: &ModelGraph, hide_isolated: bool) -> Self {
        let q = graph.quadruple();
        let isolated = graph.isolated();
        Self {
            document: "graph".into(),
            format_version: FORMAT_VERSION,
            quadruple: q.into(),
            vertices: graph
                .vertices()
                .filter(|&v| !(hide_isolated && isolated[q.index_of(v)]))
                .map(|v| VertexDoc {
                    state: pair(v),
                    valid: decant_core::is_valid_state(q, v).expect("grid vertex"),
                })
                .collect(),
            edges: graph
                .edges()
                .map(|(from, to)| EdgeDoc {
                    from: pair(from),
                    to: pair(to),
                    kind: classify_edge(q, from, to).expect("graph edge").to_string(),
                })
                .collect(),
        }
    }

    /// Rebuilds the graph described by this document.
    pub fn to_graph(&self) -> Result<ModelGraph, decant_core::Error> {
        let q = Quadruple::try_from(self.quadruple)?;
        ModelGraph::from_edges(q, self.edges.iter().map(|e| (state(e.from), state(e.to))))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyDoc {
    pub quadruple: QuadrupleDoc,
    pub missing_in_model: Vec<[Pair; 2]>,
    pub extra_in_model: Vec<[Pair; 2]>,
}

impl From<&DiscrepancyReport> for DiscrepancyDoc {
    fn from(r: &DiscrepancyReport) -> Self {
        let edges = |list: &[(Distribution, Distribution)]| {
            list.iter().map(|&(f, t)| [pair(f), pair(t)]).collect()
        };
        Self {
            quadruple: (&r.quadruple).into(),
            missing_in_model: edges(&r.missing_in_model),
            extra_in_model: edges(&r.extra_in_model),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckDoc {
    pub checked: usize,
    pub mismatches: Vec<QuadrupleDoc>,
}

/// Output of `verify --format structured`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub document: String,
    pub format_version: u32,
    pub max_a: u32,
    pub quadruples_checked: usize,
    pub discrepancies: Vec<DiscrepancyDoc>,
    pub gcd_criterion: CrossCheckDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solver_agreement: Option<CrossCheckDoc>,
}

impl VerifyDoc {
    pub fn new(
        max_a: u32,
        quadruples_checked: usize,
        reports: &[DiscrepancyReport],
        gcd: &GcdSweep,
        agreement: Option<&AgreementSweep>,
    ) -> Self {
        Self {
            document: "verify".into(),
            format_version: FORMAT_VERSION,
            max_a,
            quadruples_checked,
            discrepancies: reports.iter().map(DiscrepancyDoc::from).collect(),
            gcd_criterion: CrossCheckDoc {
                checked: gcd.checked,
                mismatches: gcd
                    .mismatches
                    .iter()
                    .map(|m| (&m.quadruple).into())
                    .collect(),
            },
            solver_agreement: agreement.map(|s| CrossCheckDoc {
                checked: s.checked,
                mismatches: s
                    .mismatches
                    .iter()
                    .map(|m| m.instance.quadruple().into())
                    .collect(),
            }),
        }
    }
}

pub fn to_string<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string(doc).expect("documents serialize");
    s.push('\n');
    s
}
