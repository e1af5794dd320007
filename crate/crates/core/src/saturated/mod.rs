//! Saturated root subsystems `Δ ∩ span(S)`, the zero-in-cone qualification
//! and the highest-root path construction.

mod path;

pub use path::{build_path, verify_path, Path, PathStep};

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ratlinalg::{cone_member, ConeMembership, QVector, Rat, Subspace};
use crate::rootsys::RootSystem;
use crate::stability::is_semistable;
use crate::weyl::{longest_element, WeylElement};

/// Rank limit for enumerating saturated subsystems.
pub const SATURATED_RANK_LIMIT: usize = 6;

/// An irreducible component of a subsystem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    /// Root indices of the component's base.
    pub simple: Vec<usize>,
    pub positive: Vec<usize>,
    pub highest: usize,
    /// Cartan type such as `A3`.
    pub label: String,
}

/// A saturated subsystem. All index lists refer to `RootSystem::roots`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturatedSubsystem {
    pub span: Subspace,
    pub roots: Vec<usize>,
    pub positive: Vec<usize>,
    pub simple: Vec<usize>,
    pub components: Vec<Component>,
}

impl SaturatedSubsystem {
    /// `Δ ∩ span`, with its base and components.
    pub fn from_span(rs: &RootSystem, span: &Subspace) -> Self {
        let roots: Vec<usize> = (0..rs.roots().len())
            .filter(|&i| span.contains(rs.root(i)))
            .collect();
        // The span of the roots found may be smaller than the given one.
        let span = Subspace::span(rs.rank(), roots.iter().map(|&i| rs.root(i)));
        let positive: Vec<usize> = roots
            .iter()
            .copied()
            .filter(|&i| rs.is_positive_index(i))
            .collect();
        let pos_set: BTreeSet<usize> = positive.iter().copied().collect();
        let simple: Vec<usize> = positive
            .iter()
            .copied()
            .filter(|&b| {
                !positive.iter().any(|&g| {
                    g != b
                        && rs
                            .root_index(&(rs.root(b) - rs.root(g)))
                            .is_some_and(|d| pos_set.contains(&d))
                })
            })
            .collect();
        let components = components(rs, &simple, &positive);
        SaturatedSubsystem {
            span,
            roots,
            positive,
            simple,
            components,
        }
    }

    pub fn from_roots<'a>(rs: &RootSystem, roots: impl IntoIterator<Item = &'a QVector>) -> Self {
        SaturatedSubsystem::from_span(rs, &Subspace::span(rs.rank(), roots))
    }

    pub fn full(rs: &RootSystem) -> Self {
        SaturatedSubsystem::from_span(rs, &Subspace::full(rs.rank()))
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.span.dim()
    }

    /// Type label such as `A1+A2`, smaller factors first; `0` for the empty
    /// subsystem.
    pub fn label(&self) -> String {
        if self.components.is_empty() {
            return "0".into();
        }
        let mut parts: Vec<&Component> = self.components.iter().collect();
        parts.sort_by_key(|c| (c.simple.len(), c.label.clone()));
        parts
            .iter()
            .map(|c| c.label.as_str())
            .collect::<Vec<_>>()
            .join("+")
    }

    pub fn positive_roots(&self, rs: &RootSystem) -> Vec<QVector> {
        self.positive.iter().map(|&i| rs.root(i).clone()).collect()
    }

    pub fn highest_roots(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.highest).collect()
    }
}

fn components(rs: &RootSystem, simple: &[usize], positive: &[usize]) -> Vec<Component> {
    let n = simple.len();
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp[start] = count;
        while let Some(a) = stack.pop() {
            for b in 0..n {
                if comp[b] == usize::MAX && !rs.form(rs.root(simple[a]), rs.root(simple[b])).is_zero() {
                    comp[b] = count;
                    stack.push(b);
                }
            }
        }
        count += 1;
    }
    (0..count)
        .map(|c| {
            let simple_c: Vec<usize> = (0..n).filter(|&i| comp[i] == c).map(|i| simple[i]).collect();
            let positive_c: Vec<usize> = positive
                .iter()
                .copied()
                .filter(|&b| simple_c.iter().any(|&s| !rs.form(rs.root(b), rs.root(s)).is_zero()))
                .collect();
            let height = |i: &usize| rs.root(*i).iter().sum::<Rat>();
            let highest = *positive_c.iter().max_by_key(|i| height(i)).expect("nonempty component");
            let label = type_label(rs, &simple_c, positive_c.len());
            Component {
                simple: simple_c,
                positive: positive_c,
                highest,
                label,
            }
        })
        .collect()
}

fn type_label(rs: &RootSystem, simple: &[usize], npos: usize) -> String {
    let n = simple.len();
    let norms: Vec<Rat> = simple.iter().map(|&i| rs.form(rs.root(i), rs.root(i))).collect();
    let longest = norms.iter().max().cloned().unwrap_or_default();
    let short = norms.iter().filter(|x| **x != longest).count();
    let family = if short == 0 {
        match npos {
            p if p == n * (n + 1) / 2 => 'A',
            p if n >= 4 && p == n * (n - 1) => 'D',
            _ => 'E',
        }
    } else if n == 2 && npos == 6 {
        'G'
    } else if n == 4 && npos == 24 {
        'F'
    } else if short == 1 {
        'B'
    } else {
        'C'
    };
    format!("{family}{n}")
}

fn check_rank(rs: &RootSystem) -> Result<()> {
    if rs.rank() > SATURATED_RANK_LIMIT {
        return Err(Error::ScaleGuard {
            what: "saturated subsystems".into(),
            rank: rs.rank(),
            limit: SATURATED_RANK_LIMIT,
        });
    }
    Ok(())
}

/// All saturated subsystems, from the empty one to `Δ`, ordered by
/// dimension and then by the canonical basis of the span.
///
/// Built by closure: from each saturated system add one more positive root
/// and saturate. This reaches the span of every set of positive roots.
pub fn enumerate_saturated(rs: &RootSystem) -> Result<Vec<SaturatedSubsystem>> {
    check_rank(rs)?;
    let r = rs.rank();
    let mut seen: BTreeSet<Subspace> = BTreeSet::new();
    let mut frontier = vec![Subspace::zero(r)];
    seen.insert(Subspace::zero(r));
    while !frontier.is_empty() {
        let next: Vec<Subspace> = frontier
            .par_iter()
            .flat_map_iter(|s| {
                rs.positive_roots()
                    .iter()
                    .filter(|a| !s.contains(a))
                    .map(|a| Subspace::span(r, s.vectors().iter().chain(std::iter::once(a))))
                    .collect::<Vec<_>>()
            })
            .collect();
        frontier = next.into_iter().filter(|s| seen.insert(s.clone())).collect();
    }
    Ok(seen
        .into_par_iter()
        .map(|s| SaturatedSubsystem::from_span(rs, &s))
        .collect())
}

/// Indices of the subsystems whose span contains `v`.
pub fn spans_containing(v: &QVector, sats: &[SaturatedSubsystem]) -> Vec<usize> {
    (0..sats.len()).filter(|&i| sats[i].span.contains(v)).collect()
}

/// `w w0 chi`.
pub fn target_point(rs: &RootSystem, w: &WeylElement, chi: &QVector) -> QVector {
    w.act(&longest_element(rs).act(chi))
}

/// Roots of `Δ̃+ ∩ wΔ+`.
pub fn positive_in_both(rs: &RootSystem, sat: &SaturatedSubsystem, w_inv: &WeylElement) -> Vec<QVector> {
    sat.positive
        .iter()
        .map(|&i| rs.root(i))
        .filter(|a| w_inv.maps_to_positive(a))
        .cloned()
        .collect()
}

/// The LP behind [`qualifies`]; `None` when the span test already fails.
pub fn qualification_certificate(
    rs: &RootSystem,
    sat: &SaturatedSubsystem,
    w: &WeylElement,
    chi: &QVector,
) -> Option<(Vec<QVector>, ConeMembership)> {
    let p = target_point(rs, w, chi);
    if !sat.span.contains(&p) {
        return None;
    }
    let gens = positive_in_both(rs, sat, &w.inverse(rs));
    let cert = cone_member(&-p, &gens);
    Some((gens, cert))
}

/// `0 ∈ w w0 chi + Σ Q+ α` over `α ∈ Δ̃+ ∩ wΔ+`.
pub fn qualifies(rs: &RootSystem, sat: &SaturatedSubsystem, w: &WeylElement, chi: &QVector) -> bool {
    qualification_certificate(rs, sat, w, chi).is_some_and(|(_, c)| c.is_member())
}

fn qualifies_fast(rs: &RootSystem, sat: &SaturatedSubsystem, p: &QVector, w_inv: &WeylElement) -> bool {
    sat.span.contains(p) && cone_member(&-p, &positive_in_both(rs, sat, w_inv)).is_member()
}

/// The two conditions `0 ∈ ww0χ + Q+Δ+` and `0 ∈ ww0χ + Q+(Δ+ ∩ wΔ+)`.
pub fn corollary_2_6_check(rs: &RootSystem, w: &WeylElement, chi: &QVector) -> (bool, bool) {
    let p = target_point(rs, w, chi);
    let all = cone_member(&-&p, rs.positive_roots()).is_member();
    let w_inv = w.inverse(rs);
    let both: Vec<QVector> = rs
        .positive_roots()
        .iter()
        .filter(|a| w_inv.maps_to_positive(a))
        .cloned()
        .collect();
    (all, cone_member(&-&p, &both).is_member())
}

/// `L_w`: intersection of the spans of all qualifying subsystems.
pub fn span_profile(
    rs: &RootSystem,
    w: &WeylElement,
    chi: &QVector,
    sats: &[SaturatedSubsystem],
) -> Result<Subspace> {
    rs.check_strictly_dominant(chi)?;
    let w0 = longest_element(rs);
    if !is_semistable(chi, &w.compose(rs, &w0)) {
        return Err(Error::Precondition(format!("{w} w0 is not in W^st")));
    }
    let p = w.act(&w0.act(chi));
    let w_inv = w.inverse(rs);
    let qualifying: Vec<&Subspace> = sats
        .par_iter()
        .filter(|s| qualifies_fast(rs, s, &p, &w_inv))
        .map(|s| &s.span)
        .collect();
    qualifying
        .into_iter()
        .try_fold(Subspace::full(rs.rank()), |acc, s| acc.intersect(s))
}

/// Subsystem lookup by span.
pub fn index_by_span(sats: &[SaturatedSubsystem]) -> BTreeMap<Subspace, usize> {
    sats.iter().enumerate().map(|(i, s)| (s.span.clone(), i)).collect()
}
