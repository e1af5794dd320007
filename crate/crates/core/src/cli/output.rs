//! Versioned JSON documents produced by the command line.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::ratlinalg::{serde_rat, ConeH, QVector, Rat};
use crate::rootsys::Weight;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Envelope {
    pub schema_version: u32,
    pub type_spec: String,
    #[serde(flatten)]
    pub output: Output,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", content = "result", rename_all = "snake_case")]
pub enum Output {
    Wst(WstOut),
    Fan(FanOut),
    Picard(PicardOut),
    Path(PathOut),
    Saturated(SaturatedOut),
    Codim(CodimOut),
    Mu(MuOut),
    Lemma110(LemmaOut),
}

/// A Weyl group element; `word` uses one-based simple reflection indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementOut {
    pub index: usize,
    pub word: Vec<usize>,
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WstOut {
    pub chi: Weight,
    pub wst: Vec<ElementOut>,
    pub unstable_codim: usize,
    /// `sigma_chi` in fundamental coordinates.
    pub sigma: ConeH,
    pub lemma_1_10_applicable: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CodimOut {
    pub chi: Weight,
    pub unstable_codim: usize,
    pub max_unstable_length: usize,
    pub positive_roots: usize,
    pub lemma_1_10_applicable: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FanConeOut {
    pub normals: Vec<QVector>,
    pub sample: Weight,
    pub fingerprint: Vec<usize>,
    pub chambers: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValidationOut {
    pub passed: bool,
    pub grid_points: usize,
    pub face_pairs: usize,
    pub samples_per_cone: usize,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FanOut {
    /// Wall normals in fundamental coordinates.
    pub walls: Vec<QVector>,
    pub cones: Vec<FanConeOut>,
    pub arrangement_chambers: usize,
    pub merged: bool,
    pub validation: Option<ValidationOut>,
    pub svg: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProfileOut {
    pub word: Vec<usize>,
    pub span: Vec<Weight>,
    pub complement: Vec<Weight>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PicardOut {
    pub chi: Weight,
    pub rank: usize,
    pub an_caveat: bool,
    /// Rows act on `(mu_0, mu_1)` in simple-root coordinates.
    pub constraints: Vec<QVector>,
    pub raw_rows: usize,
    pub nullspace: Vec<QVector>,
    pub profiles: Vec<ProfileOut>,
    pub open_cell: Vec<Weight>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StepOut {
    pub m: Weight,
    pub system: String,
    pub beta: Option<Weight>,
    #[serde(with = "serde_rat")]
    pub k: Rat,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PathOut {
    pub chi: Weight,
    pub word: Vec<usize>,
    pub subsystem: usize,
    pub subsystem_label: String,
    pub end: Weight,
    pub steps: Vec<StepOut>,
    pub scale: String,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubsystemOut {
    pub index: usize,
    pub label: String,
    pub dim: usize,
    pub positive_roots: Vec<Weight>,
    pub highest_roots: Vec<Weight>,
    pub contains_w0_chi: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SaturatedOut {
    pub count: usize,
    pub subsystems: Vec<SubsystemOut>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MuOut {
    pub chi: Weight,
    pub word: Vec<usize>,
    pub lambda: Weight,
    #[serde(with = "serde_rat")]
    pub value: Rat,
    pub semistable: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LemmaEntry {
    pub simple_root: usize,
    #[serde(with = "serde_rat")]
    pub value: Rat,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LemmaOut {
    pub applicable: bool,
    pub all_nonnegative: bool,
    pub values: Vec<LemmaEntry>,
}

fn vec_text(v: &QVector) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn word_text(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
}

impl Envelope {
    /// Short human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "type {}", self.type_spec);
        match &self.output {
            Output::Wst(o) => {
                let _ = writeln!(s, "chi = {} [{}]", vec_text(&o.chi.coords), o.chi.basis);
                let _ = writeln!(s, "|W^st| = {}", o.wst.len());
                for e in &o.wst {
                    let _ = writeln!(s, "  #{:<5} {}", e.index, word_text(&e.word));
                }
                let _ = writeln!(s, "unstable codimension = {}", o.unstable_codim);
            }
            Output::Codim(o) => {
                let _ = writeln!(s, "unstable codimension = {}", o.unstable_codim);
            }
            Output::Fan(o) => {
                let _ = writeln!(s, "{} walls, {} maximal cones", o.walls.len(), o.cones.len());
                for (k, c) in o.cones.iter().enumerate() {
                    let _ = writeln!(s, "  cone {k}: sample {}, |W^st| = {}", vec_text(&c.sample.coords), c.fingerprint.len());
                }
                if let Some(v) = &o.validation {
                    let _ = writeln!(s, "validation passed: {}", v.passed);
                }
            }
            Output::Picard(o) => {
                let _ = writeln!(s, "Picard rank = {}", o.rank);
                let _ = writeln!(s, "constraint rows = {}", o.constraints.len());
                if o.an_caveat {
                    let _ = writeln!(s, "note: type A factor present; the rank formula is not guaranteed");
                }
            }
            Output::Path(o) => {
                let _ = writeln!(s, "w = {}, subsystem {} ({})", word_text(&o.word), o.subsystem, o.subsystem_label);
                for (i, st) in o.steps.iter().enumerate() {
                    let beta = st.beta.as_ref().map_or("-".into(), |b| vec_text(&b.coords));
                    let _ = writeln!(s, "  M_{i} = {}  beta = {beta}  k = {}  [{}]", vec_text(&st.m.coords), st.k, st.system);
                }
                let _ = writeln!(s, "  end = {}  N = {}", vec_text(&o.end.coords), o.scale);
            }
            Output::Saturated(o) => {
                let _ = writeln!(s, "{} saturated subsystems", o.count);
                for sub in &o.subsystems {
                    let mark = if sub.contains_w0_chi == Some(true) { " *" } else { "" };
                    let _ = writeln!(s, "  #{:<4} dim {} {}{mark}", sub.index, sub.dim, sub.label);
                }
            }
            Output::Mu(o) => {
                let _ = writeln!(s, "mu = {}", o.value);
            }
            Output::Lemma110(o) => {
                for e in &o.values {
                    let _ = writeln!(s, "  alpha_{}: {}", e.simple_root, e.value);
                }
            }
        }
        s
    }
}
