//! Piecewise-linear path from `0` to `w w0 chi` along highest roots.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{qualifies, target_point, SaturatedSubsystem};
use crate::error::{Error, Result};
use crate::ratlinalg::{cone_member, denominator_lcm, int, AffCone, QVector, RayHit, Rat};
use crate::rootsys::RootSystem;
use crate::weyl::WeylElement;

/// One segment `M_{i+1} = M_i - k_i beta_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathStep {
    /// `M_i`.
    pub start: QVector,
    /// Positive roots (indices) of the current subsystem.
    pub system: Vec<usize>,
    /// Component highest roots of the current subsystem.
    pub highest: Vec<usize>,
    /// Root index of `beta_i`; `None` for a zero-length step that only
    /// moves to a smaller face.
    pub beta: Option<usize>,
    #[serde(with = "crate::ratlinalg::serde_rat")]
    pub k: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Path {
    #[serde(skip)]
    pub w: WeylElement,
    pub chi: QVector,
    /// `w w0 chi`.
    pub end: QVector,
    pub steps: Vec<PathStep>,
    /// `N`: every `N M_i` and `N k_i` is integral.
    #[serde(serialize_with = "crate::ratlinalg::serde_rat::bigint")]
    pub scale: BigInt,
}

impl Path {
    /// The points `M_0, ..., M_n = w w0 chi`.
    pub fn points(&self) -> Vec<QVector> {
        let mut out: Vec<QVector> = self.steps.iter().map(|s| s.start.clone()).collect();
        out.push(self.end.clone());
        out
    }
}

/// Runs the construction for a qualifying pair `(sat, w)`.
///
/// At each step the ray from `M_i` in direction `-beta` is followed to the
/// boundary of `w w0 chi + Q+ Δ̃_i+`, where `beta` is the first component
/// highest root in `wΔ+` giving positive progress. The face hit defines the
/// next subsystem. When no highest root moves, a zero-length step passes to
/// the minimal face through `M_i`.
pub fn build_path(rs: &RootSystem, sat: &SaturatedSubsystem, w: &WeylElement, chi: &QVector) -> Result<Path> {
    rs.check_strictly_dominant(chi)?;
    if !qualifies(rs, sat, w, chi) {
        return Err(Error::Precondition(format!(
            "subsystem {} does not qualify for {w}",
            sat.label()
        )));
    }
    let end = target_point(rs, w, chi);
    let w_inv = w.inverse(rs);
    let limit = (sat.positive.len() * rs.rank()).max(1);
    let mut current = sat.clone();
    let mut m = QVector::zeros(rs.rank());
    let mut steps = Vec::new();
    while m != end {
        if steps.len() >= limit {
            return Err(Error::PathGuard { limit });
        }
        let cone = AffCone::new(end.clone(), current.positive_roots(rs));
        let mut chosen = None;
        for &b in &current.highest_roots() {
            if !w_inv.maps_to_positive(rs.root(b)) {
                continue;
            }
            if let RayHit::Boundary { t, point, face_generators, .. } = cone.ray_hit_boundary(&m, &-rs.root(b))? {
                if t.is_positive() {
                    chosen = Some((b, t, point, face_generators));
                    break;
                }
            }
        }
        let (beta, k, next, face) = match chosen {
            Some((b, t, point, face)) => (Some(b), t, point, face),
            None => {
                let h = cone.recession_h()?;
                let face: Vec<QVector> = cone
                    .minimal_face(&h, &m)
                    .into_iter()
                    .map(|i| cone.generators[i].clone())
                    .collect();
                if face.len() == cone.generators.len() {
                    return Err(Error::Precondition(format!(
                        "no admissible highest root in {} at step {}",
                        current.label(),
                        steps.len()
                    )));
                }
                (None, Rat::zero(), m.clone(), face)
            }
        };
        steps.push(PathStep {
            start: m,
            system: current.positive.clone(),
            highest: current.highest_roots(),
            beta,
            k,
        });
        m = next;
        current = SaturatedSubsystem::from_roots(rs, &face);
    }
    let scale = denominator_lcm(
        steps
            .iter()
            .flat_map(|s| s.start.iter().chain(std::iter::once(&s.k)))
            .chain(end.iter()),
    );
    Ok(Path {
        w: w.clone(),
        chi: chi.clone(),
        end,
        steps,
        scale,
    })
}

/// Checks every invariant of a path and returns the violations found.
pub fn verify_path(rs: &RootSystem, path: &Path) -> Vec<String> {
    let mut bad = Vec::new();
    let w_inv = path.w.inverse(rs);
    let end = target_point(rs, &path.w, &path.chi);
    if path.end != end {
        bad.push("endpoint differs from w w0 chi".to_string());
    }
    if path.steps.first().is_some_and(|s| !s.start.is_zero()) {
        bad.push("path does not start at 0".into());
    }
    let points = path.points();
    let n = int(0) + Rat::from_integer(path.scale.clone());
    for (i, step) in path.steps.iter().enumerate() {
        let expected = match step.beta {
            Some(b) => step.start.add_scaled(&-step.k.clone(), rs.root(b)),
            None => step.start.clone(),
        };
        if expected != points[i + 1] {
            bad.push(format!("step {i}: M_(i+1) != M_i - k_i beta_i"));
        }
        if step.k.is_negative() {
            bad.push(format!("step {i}: negative k"));
        }
        if let Some(b) = step.beta {
            if !step.highest.contains(&b) {
                bad.push(format!("step {i}: beta is not a component highest root"));
            }
            if !step.system.contains(&b) || !w_inv.maps_to_positive(rs.root(b)) {
                bad.push(format!("step {i}: beta not in the subsystem and in w Delta+"));
            }
        }
        let next_system: &[usize] = path.steps.get(i + 1).map_or(&[], |s| &s.system);
        if !next_system.iter().all(|b| step.system.contains(b)) {
            bad.push(format!("step {i}: subsystems are not nested"));
        }
        let gens: Vec<QVector> = step.system.iter().map(|&b| rs.root(b).clone()).collect();
        if !cone_member(&(&step.start - &end), &gens).is_member() {
            bad.push(format!("step {i}: M_i outside w w0 chi + Q+ subsystem"));
        }
        let sub = SaturatedSubsystem::from_roots(rs, &gens);
        if sub.simple.iter().any(|&s| rs.form(&step.start, rs.root(s)).is_positive()) {
            bad.push(format!("step {i}: M_i outside the negative subsystem chamber"));
        }
        if sub.positive != step.system {
            bad.push(format!("step {i}: subsystem is not saturated"));
        }
        let scaled_k = &step.k * &n;
        if !step.start.scale(&n).is_integral() || !scaled_k.is_integer() {
            bad.push(format!("step {i}: N M_i or N k_i not integral"));
        }
    }
    if !end.scale(&n).is_integral() {
        bad.push("N w w0 chi not integral".into());
    }
    bad
}
