//! Machine-readable analysis reports and the end-to-end pipeline.
//!
//! Reports are schema-versioned and byte-stable: exact scalars are
//! serialized as canonical strings, every numeric evidence entry carries its
//! tolerance and seed parameters, and all collections are emitted in
//! deterministic order.

use num_complex::Complex64;
use serde::Serialize;

use crate::blowup::{seidenberg_reduce, CenterKind, Germ, ReductionTree, DEFAULT_MAX_DEPTH};
use crate::classify::NormalForm;
use crate::error::{BlowupError, ParseError};
use crate::forms::HoloOneForm;
use crate::holonomy::{
    orbit_classify, resonant_holonomy, saddle_node_strong_holonomy,
    weak_holonomy_linear_coefficient, DynamicClass,
};
use crate::parser::{parse_oneform, pretty_print, ParsedForm};
use crate::rolle::{
    first_integral_conservation, integrate_leaf_samples, rolle_verdict, FirstIntegral, Verdict,
    VerdictOutcome,
};
use crate::scalar::GaussianRational;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub input: InputEcho,
    pub configuration: ConfigSnapshot,
    pub reduction: ReductionSummary,
    pub verdict: VerdictBlock,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evidence: Option<Vec<EvidenceEntry>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputEcho {
    pub source: String,
    pub canonical: String,
    pub kind: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigSnapshot {
    pub max_depth: usize,
    pub ode_rtol: f64,
    pub ode_atol: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    pub evidence: bool,
}

impl Default for ConfigSnapshot {
    fn default() -> Self {
        ConfigSnapshot {
            max_depth: DEFAULT_MAX_DEPTH,
            ode_rtol: 1e-10,
            ode_atol: 1e-12,
            radius: None,
            evidence: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NodeSummary {
    pub id: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parent: Option<usize>,
    pub depth: usize,
    pub center: String,
    pub class: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplier_exact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplier_min_poly: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplier_box: Option<[f64; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub camacho_sad_x_axis: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub camacho_sad_y_axis: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normal_form: Option<String>,
    pub expanded: bool,
    pub components_through: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentSummary {
    pub id: usize,
    pub invariant: bool,
    pub created_by_node: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionSummary {
    pub nodes: Vec<NodeSummary>,
    pub components: Vec<ComponentSummary>,
    pub adjacency: Vec<[usize; 2]>,
    pub dicritical: bool,
    pub max_depth_reached: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FindingOut {
    pub node: usize,
    pub rule: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct LeafOut {
    pub node: usize,
    pub class: String,
    pub status: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictBlock {
    pub outcome: String,
    pub reasons: Vec<FindingOut>,
    pub unknowns: Vec<FindingOut>,
    pub leaves: Vec<LeafOut>,
    pub dicritical: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dicritical_note: Option<String>,
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct EvidenceEntry {
    pub node: usize,
    pub kind: String,
    pub parameters: String,
    pub value: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Exit status of the analyze pipeline, mirroring the CLI contract.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnalysisStatus {
    Compatible,
    Incompatible,
    Inconclusive,
}

impl AnalysisStatus {
    pub fn exit_code(self) -> i32 {
        match self {
            AnalysisStatus::Compatible => 0,
            AnalysisStatus::Incompatible => 2,
            AnalysisStatus::Inconclusive => 3,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("reduction failed: {0}")]
    Reduction(String),
    #[error("{0}")]
    Other(String),
}

/// Run the full pipeline: parse, reduce, classify, decide, optionally attach
/// numerical evidence.
pub fn analyze_source(
    source: &str,
    config: &ConfigSnapshot,
) -> Result<(AnalysisReport, AnalysisStatus), PipelineError> {
    let parsed = parse_oneform(source)?;
    let form = match &parsed {
        ParsedForm::Holo(h) => h.clone(),
        ParsedForm::Real(_) => {
            return Err(PipelineError::Other(
                "the analyze pipeline expects a holomorphic 1-form; conjugated \
                 inputs define real forms handled by the Levi identity checks"
                    .into(),
            ))
        }
    };
    analyze_form(&form, source, &pretty_print(&parsed), config)
}

pub fn analyze_form(
    form: &HoloOneForm<GaussianRational>,
    source: &str,
    canonical: &str,
    config: &ConfigSnapshot,
) -> Result<(AnalysisReport, AnalysisStatus), PipelineError> {
    let tree = seidenberg_reduce(form, config.max_depth).map_err(|e| match e {
        BlowupError::DepthExceeded { max_depth, .. } => {
            PipelineError::Reduction(format!("depth bound {} exceeded", max_depth))
        }
        other => PipelineError::Reduction(other.to_string()),
    })?;
    let verdict = rolle_verdict(&tree).map_err(|e| PipelineError::Other(e.to_string()))?;
    let status = match &verdict.outcome {
        VerdictOutcome::Compatible => AnalysisStatus::Compatible,
        VerdictOutcome::Incompatible(_) => AnalysisStatus::Incompatible,
        VerdictOutcome::Inconclusive(_) => AnalysisStatus::Inconclusive,
    };
    let evidence = if config.evidence {
        Some(collect_evidence(&tree, config))
    } else {
        None
    };
    let report = AnalysisReport {
        schema_version: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        input: InputEcho {
            source: source.to_string(),
            canonical: canonical.to_string(),
            kind: "holomorphic".into(),
        },
        configuration: config.clone(),
        reduction: summarize_tree(&tree),
        verdict: verdict_block(&verdict),
        evidence,
    };
    Ok((report, status))
}

fn summarize_tree(tree: &ReductionTree) -> ReductionSummary {
    let nodes = tree
        .nodes
        .iter()
        .map(|n| {
            let center = match &n.center {
                CenterKind::Root => "origin".to_string(),
                CenterKind::ChartPoint { param, .. } => {
                    format!("chart 1 divisor point t = {}", param)
                }
                CenterKind::ChartCorner { .. } => "chart 2 corner (s, y) = (0, 0)".to_string(),
            };
            let (mult_exact, mult_poly, mult_box) = match &n.class.multiplier {
                Some(m) => (
                    m.exact.as_ref().map(|e| e.to_string()),
                    Some(m.min_poly.to_string()),
                    Some({
                        let (a, b) = m.isolating_box.re.to_f64_pair();
                        let (c, d) = m.isolating_box.im.to_f64_pair();
                        [a, b, c, d]
                    }),
                ),
                None => (None, None, None),
            };
            NodeSummary {
                id: n.id,
                parent: n.parent,
                depth: n.depth,
                center,
                class: n.class.tag.label(),
                multiplier_exact: mult_exact,
                multiplier_min_poly: mult_poly,
                multiplier_box: mult_box,
                camacho_sad_x_axis: n.class.cs_x_axis.as_ref().map(|c| c.to_string()),
                camacho_sad_y_axis: n.class.cs_y_axis.as_ref().map(|c| c.to_string()),
                normal_form: n.class.normal_form.as_ref().map(|nf| match nf {
                    NormalForm::Linear => "linear".to_string(),
                    NormalForm::SaddleNode { k, mu, .. } => {
                        format!("saddle-node normal form (k={}, mu={})", k, mu)
                    }
                    NormalForm::Resonant { p, q, k, mu } => {
                        format!("resonant normal form (p={}, q={}, k={}, mu={})", p, q, k, mu)
                    }
                }),
                expanded: n.expanded,
                components_through: n.on_components.iter().map(|(c, _)| *c).collect(),
            }
        })
        .collect();
    let components = tree
        .components
        .iter()
        .map(|c| ComponentSummary {
            id: c.id,
            invariant: c.invariant,
            created_by_node: c.created_by_node,
        })
        .collect();
    let mut adjacency: Vec<[usize; 2]> = tree.adjacency.iter().map(|&(a, b)| [a, b]).collect();
    adjacency.sort_unstable();
    adjacency.dedup();
    ReductionSummary {
        nodes,
        components,
        adjacency,
        dicritical: tree.is_dicritical(),
        max_depth_reached: tree.max_depth_reached,
    }
}

fn verdict_block(v: &Verdict) -> VerdictBlock {
    let (reasons, unknowns) = match &v.outcome {
        VerdictOutcome::Compatible => (Vec::new(), Vec::new()),
        VerdictOutcome::Incompatible(r) => (
            r.iter()
                .map(|f| FindingOut {
                    node: f.node,
                    rule: f.rule.clone(),
                    detail: f.detail.clone(),
                })
                .collect(),
            Vec::new(),
        ),
        VerdictOutcome::Inconclusive(u) => (
            Vec::new(),
            u.iter()
                .map(|f| FindingOut {
                    node: f.node,
                    rule: f.rule.clone(),
                    detail: f.detail.clone(),
                })
                .collect(),
        ),
    };
    VerdictBlock {
        outcome: v.outcome.label().to_string(),
        reasons,
        unknowns,
        leaves: v
            .leaves
            .iter()
            .map(|l| LeafOut {
                node: l.node,
                class: l.class_label.clone(),
                status: l.status.clone(),
            })
            .collect(),
        dicritical: v.dicritical,
        dicritical_note: v.dicritical_note.clone(),
        note: "numerical entries are evidence, not proof; the verdict itself uses only \
               exact data, and the per-point conditions checked here are necessary \
               conditions: the global Rolle property of a foliation is not certified"
            .to_string(),
    }
}

/// Numeric evidence per leaf whose normal form is recognized: holonomy orbit
/// classes, first-integral drifts and weak linear coefficients.
fn collect_evidence(tree: &ReductionTree, config: &ConfigSnapshot) -> Vec<EvidenceEntry> {
    let tune = |mut h: crate::holonomy::HolonomyMap| {
        h.tol.rtol = config.ode_rtol;
        h.tol.atol = config.ode_atol;
        if let Some(r) = config.radius {
            h.field.radius_of_validity = r;
        }
        h
    };
    let mut out = Vec::new();
    for node in tree.leaves() {
        match &node.class.normal_form {
            Some(NormalForm::SaddleNode { k, mu, .. }) => {
                if let Ok(h) = saddle_node_strong_holonomy(*k, mu.clone()).map(&tune) {
                    let seed = Complex64::new(h.radius() * 0.5, 0.0);
                    if let Ok(orbit) = orbit_classify(&h, seed, 200) {
                        out.push(EvidenceEntry {
                            node: node.id,
                            kind: "strong-holonomy-orbit-class".into(),
                            parameters: format!(
                                "k={}, mu={}, seed={:+.6e}{:+.6e}i, iters=200",
                                k, mu, seed.re, seed.im
                            ),
                            value: match orbit.class {
                                DynamicClass::Flower => 1.0,
                                _ => 0.0,
                            },
                            tolerance: 0.0,
                            pass: orbit.class == DynamicClass::Flower,
                        });
                    }
                }
                let coeff = weak_holonomy_linear_coefficient(mu);
                out.push(EvidenceEntry {
                    node: node.id,
                    kind: "weak-holonomy-linear-coefficient-modulus".into(),
                    parameters: format!("mu={}", mu),
                    value: coeff.value.norm(),
                    tolerance: 1e-9,
                    pass: if mu.is_real() {
                        (coeff.value.norm() - 1.0).abs() < 1e-9
                    } else {
                        true
                    },
                });
                if mu.is_real() {
                    if let Germ::Base(f) = &node.germ {
                        let start = (Complex64::new(1.0, 0.0), Complex64::new(0.35, 0.1));
                        if let Ok(samples) =
                            integrate_leaf_samples(f, start, &[0.0, 1.9], 0.15, 10)
                        {
                            let fi = FirstIntegral::SaddleNodeF {
                                mu: mu.clone(),
                                k: *k,
                            };
                            if let Ok(drift) = first_integral_conservation(&fi, &samples) {
                                out.push(EvidenceEntry {
                                    node: node.id,
                                    kind: "first-integral-conservation".into(),
                                    parameters: format!(
                                        "F(mu={}, k={}), start=(1, 0.35+0.1i), arcs=[0, 1.9] of 0.15",
                                        mu, k
                                    ),
                                    value: drift,
                                    tolerance: 1e-6,
                                    pass: drift < 1e-6,
                                });
                            }
                        }
                    }
                }
            }
            Some(NormalForm::Resonant { p, q, k, mu })
                if mu.is_real() => {
                    if let Ok(h) = resonant_holonomy(*p, *q, *k, mu.clone()) {
                        let fi = FirstIntegral::ResonantSmallF {
                            mu: mu.clone(),
                            q: *q,
                            k: *k,
                        };
                        let one = Complex64::new(1.0, 0.0);
                        let mut worst: f64 = 0.0;
                        let mut ok = true;
                        for j in 0..6 {
                            let angle = std::f64::consts::TAU * j as f64 / 6.0;
                            let y = Complex64::from_polar(h.radius() * 0.5, angle);
                            match (h.eval(y), fi.eval(one, y)) {
                                (Ok(hy), Ok(before)) => {
                                    if let Ok(after) = fi.eval(one, hy) {
                                        worst = worst.max((after - before).abs());
                                    } else {
                                        ok = false;
                                    }
                                }
                                _ => ok = false,
                            }
                        }
                        out.push(EvidenceEntry {
                            node: node.id,
                            kind: "section-integral-holonomy-invariance".into(),
                            parameters: format!(
                                "p={}, q={}, k={}, mu={}, samples=6 on |y|={:.3e}",
                                p,
                                q,
                                k,
                                mu,
                                h.radius() * 0.5
                            ),
                            value: worst,
                            tolerance: 1e-6,
                            pass: ok && worst < 1e-6,
                        });
                    }
                }
            _ => {}
        }
    }
    out
}

/// Serialize a report to canonical JSON (two-space indentation).
pub fn to_json(report: &AnalysisReport) -> String {
    serde_json::to_string_pretty(report).expect("report serialization cannot fail")
}
