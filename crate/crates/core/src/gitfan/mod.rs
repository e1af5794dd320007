//! The GIT fan of the Weyl chamber: the cones `sigma_chi` for strictly
//! dominant `chi`, computed from the arrangement of walls `(w pi_i)^perp`.
//!
//! Everything here is in fundamental-weight coordinates, where the chamber
//! `C` is the positive orthant.

mod svg;

pub use svg::fan_svg;

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ratlinalg::{int, relative_interior_point, strict_feasible_point, ConeH, QVector};
use crate::rootsys::RootSystem;
use crate::stability::{fundamental_functional, git_cone, wst_unchecked};
use crate::weyl::WeylGroup;

/// Default rank limit for fan computations.
pub const FAN_RANK_LIMIT: usize = 4;
/// Rank limit with the override flag.
pub const FAN_RANK_LIMIT_LARGE: usize = 6;

/// One maximal cone of the fan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanCone {
    pub cone: ConeH,
    /// Primitive integral point of the interior, fundamental coordinates.
    pub sample: QVector,
    /// `W^st` of the sample, as indices into the group enumeration.
    pub fingerprint: Vec<usize>,
    /// How many arrangement chambers were merged into this cone.
    pub chambers: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GitFan {
    pub type_spec: String,
    pub rank: usize,
    /// Hyperplane normals meeting the open chamber, sign-normalized.
    pub walls: Vec<QVector>,
    pub cones: Vec<FanCone>,
    /// Number of full-dimensional chambers of the wall arrangement.
    pub arrangement_chambers: usize,
}

impl GitFan {
    /// True when some cone was assembled from more than one chamber.
    pub fn merged(&self) -> bool {
        self.cones.iter().any(|c| c.chambers > 1)
    }
}

#[derive(Clone, Debug)]
struct Chamber {
    normals: Vec<QVector>,
    point: QVector,
}

/// Walls `(w pi_i)^perp` that cut the open chamber, deduplicated and sorted.
pub fn candidate_walls(rs: &RootSystem, group: &WeylGroup) -> Vec<QVector> {
    let mut walls: Vec<QVector> = group
        .elements()
        .par_iter()
        .flat_map_iter(|w| {
            rs.fundamental_weights()
                .iter()
                .map(|p| fundamental_functional(rs, &w.act(p)))
                .filter(|f| f.iter().any(|c| c.is_positive()) && f.iter().any(|c| c.is_negative()))
                .map(|f| f.canonical_line())
                .collect::<Vec<_>>()
        })
        .collect();
    walls.sort();
    walls.dedup();
    walls
}

fn check_scale(rs: &RootSystem, allow_large: bool) -> Result<()> {
    let limit = if allow_large {
        FAN_RANK_LIMIT_LARGE
    } else {
        FAN_RANK_LIMIT
    };
    if rs.rank() > limit {
        return Err(Error::ScaleGuard {
            what: "fan".into(),
            rank: rs.rank(),
            limit,
        });
    }
    Ok(())
}

fn split(ch: &Chamber, wall: &QVector) -> Vec<Chamber> {
    let side = |f: QVector| -> Option<Chamber> {
        let mut normals = ch.normals.clone();
        normals.push(f);
        let point = strict_feasible_point(&normals, ch.point.dim())?;
        Some(Chamber { normals, point })
    };
    let s = wall.dot(&ch.point);
    if s.is_positive() {
        match side(-wall) {
            Some(neg) => vec![
                Chamber {
                    normals: [ch.normals.clone(), vec![wall.clone()]].concat(),
                    point: ch.point.clone(),
                },
                neg,
            ],
            None => vec![ch.clone()],
        }
    } else if s.is_negative() {
        match side(wall.clone()) {
            Some(pos) => vec![
                pos,
                Chamber {
                    normals: [ch.normals.clone(), vec![-wall]].concat(),
                    point: ch.point.clone(),
                },
            ],
            None => vec![ch.clone()],
        }
    } else {
        // A point on the wall cannot lie in the open chamber, so both sides
        // are nonempty and the wall separates.
        side(wall.clone())
            .into_iter()
            .chain(side(-wall))
            .collect()
    }
}

/// Computes the fan: chambers of the wall arrangement inside `C`, grouped by
/// `W^st` fingerprint, each group realized as `sigma_chi` of a sample.
pub fn compute_fan(rs: &RootSystem, group: &WeylGroup, allow_large: bool) -> Result<GitFan> {
    check_scale(rs, allow_large)?;
    let r = rs.rank();
    let walls = candidate_walls(rs, group);
    let mut chambers = vec![Chamber {
        normals: (0..r).map(|i| QVector::unit(r, i)).collect(),
        point: (0..r).map(|_| int(1)).collect(),
    }];
    for wall in &walls {
        chambers = chambers
            .par_iter()
            .flat_map_iter(|ch| split(ch, wall))
            .collect();
    }
    let arrangement_chambers = chambers.len();

    let fingerprints: Vec<Vec<usize>> = chambers
        .par_iter()
        .map(|ch| wst_unchecked(group, &rs.from_fundamental(&ch.point)))
        .collect();
    let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (i, fp) in fingerprints.into_iter().enumerate() {
        groups.entry(fp).or_default().push(i);
    }

    let mut cones: Vec<FanCone> = groups
        .into_par_iter()
        .map(|(fingerprint, members)| -> Result<FanCone> {
            let rep = rs.from_fundamental(&chambers[members[0]].point);
            let cone = git_cone(rs, group, &rep)?;
            let sample = relative_interior_point(&cone)?.primitive();
            Ok(FanCone {
                cone,
                sample,
                fingerprint,
                chambers: members.len(),
            })
        })
        .collect::<Result<_>>()?;
    cones.sort_by(|a, b| a.cone.normals.cmp(&b.cone.normals));
    Ok(GitFan {
        type_spec: rs.type_spec().to_string(),
        rank: r,
        walls,
        cones,
        arrangement_chambers,
    })
}

/// Where a weight sits in the fan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Location {
    /// Interior of the maximal cone with this index.
    Interior { cone: usize },
    /// On walls; the listed maximal cones all contain the point.
    Face { cones: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub location: Location,
    pub wst: Vec<usize>,
}

/// Locates a strictly dominant weight (simple-root coordinates).
pub fn classify(rs: &RootSystem, group: &WeylGroup, fan: &GitFan, chi: &QVector) -> Result<Classification> {
    rs.check_strictly_dominant(chi)?;
    let a = rs.to_fundamental(chi);
    let wst = wst_unchecked(group, chi);
    let location = match fan.cones.iter().position(|c| c.cone.strictly_contains(&a)) {
        Some(cone) => Location::Interior { cone },
        None => Location::Face {
            cones: (0..fan.cones.len())
                .filter(|&i| fan.cones[i].cone.contains(&a))
                .collect(),
        },
    };
    Ok(Classification { location, wst })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: String,
    pub detail: String,
    pub witness: Option<QVector>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FanReport {
    pub grid_points: usize,
    pub face_pairs: usize,
    pub samples_per_cone: usize,
    pub violations: Vec<Violation>,
}

impl FanReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Options for [`validate_fan`].
#[derive(Clone, Debug)]
pub struct ValidateOptions {
    /// Grid points per axis for the support check.
    pub grid: usize,
    pub samples_per_cone: usize,
    pub seed: u64,
}

impl Default for ValidateOptions {
    fn default() -> Self {
        ValidateOptions {
            grid: 8,
            samples_per_cone: 100,
            seed: 0,
        }
    }
}

fn grid_points(r: usize, n: usize) -> Vec<QVector> {
    let mut out = vec![QVector(Vec::new())];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|p| {
                (1..=n as i64).map(move |k| {
                    let mut q = p.clone();
                    q.0.push(int(k));
                    q
                })
            })
            .collect();
    }
    out
}

/// Checks support, the face property, constancy of `W^st` on random
/// interior samples, distinct fingerprints, and that `sigma` of every sample
/// reproduces the stored cone.
pub fn validate_fan(rs: &RootSystem, group: &WeylGroup, fan: &GitFan, opts: &ValidateOptions) -> Result<FanReport> {
    let r = rs.rank();
    let mut violations = Vec::new();
    let fail = |check: &str, detail: String, witness: Option<QVector>| Violation {
        check: check.to_string(),
        detail,
        witness,
    };

    // Support: every grid point is interior to exactly one cone, or lies on
    // a wall and in some cone.
    let grid = grid_points(r, opts.grid);
    for p in &grid {
        let interior = fan.cones.iter().filter(|c| c.cone.strictly_contains(p)).count();
        let on_wall = fan.walls.iter().any(|w| w.dot(p).is_zero());
        let covered = fan.cones.iter().any(|c| c.cone.contains(p));
        let ok = interior == 1 || (interior == 0 && on_wall && covered);
        if !ok {
            violations.push(fail(
                "support",
                format!("{interior} cone interiors contain the point"),
                Some(p.clone()),
            ));
        }
    }

    // Face property for every pair.
    let gens: Vec<_> = fan
        .cones
        .iter()
        .map(|c| c.cone.generators())
        .collect::<Result<_>>()?;
    let mut face_pairs = 0;
    for i in 0..fan.cones.len() {
        for j in i + 1..fan.cones.len() {
            face_pairs += 1;
            let meet = fan.cones[i].cone.intersect(&fan.cones[j].cone);
            let p = relative_interior_point(&meet)?;
            for (k, other) in [(i, j), (j, i)] {
                let cone = &fan.cones[k].cone;
                let face_rays = gens[k]
                    .rays
                    .iter()
                    .filter(|g| cone.normals.iter().all(|n| !n.dot(&p).is_zero() || n.dot(g).is_zero()));
                for g in face_rays {
                    if !fan.cones[other].cone.contains(g) {
                        violations.push(fail(
                            "face",
                            format!("intersection of cones {i} and {j} is not a face of cone {k}"),
                            Some(g.clone()),
                        ));
                    }
                }
            }
        }
    }

    // Random interior samples: positive combinations of the extreme rays.
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let samples: Vec<Vec<QVector>> = gens
        .iter()
        .map(|g| {
            (0..opts.samples_per_cone)
                .map(|_| {
                    g.rays.iter().fold(QVector::zeros(r), |acc, ray| {
                        acc.add_scaled(&int(rng.gen_range(1..=1000)), ray)
                    })
                })
                .collect()
        })
        .collect();
    let sample_violations: Vec<Violation> = fan
        .cones
        .par_iter()
        .zip(samples.par_iter())
        .enumerate()
        .flat_map_iter(|(k, (cone, pts))| {
            let mut out = Vec::new();
            for p in pts {
                let x = rs.from_fundamental(p);
                if wst_unchecked(group, &x) != cone.fingerprint {
                    out.push(fail("fingerprint", format!("W^st changes inside cone {k}"), Some(p.clone())));
                }
            }
            for p in pts.iter().take(10).chain(std::iter::once(&cone.sample)) {
                let x = rs.from_fundamental(p);
                match git_cone(rs, group, &x) {
                    Ok(c) if c == cone.cone => {}
                    _ => out.push(fail("sigma", format!("sigma of a sample differs from cone {k}"), Some(p.clone()))),
                }
            }
            out
        })
        .collect();
    violations.extend(sample_violations);

    for i in 0..fan.cones.len() {
        for j in i + 1..fan.cones.len() {
            if fan.cones[i].fingerprint == fan.cones[j].fingerprint {
                violations.push(fail("distinct", format!("cones {i} and {j} share a fingerprint"), None));
            }
        }
    }
    let total: usize = fan.cones.iter().map(|c| c.chambers).sum();
    if total != fan.arrangement_chambers {
        violations.push(fail("chambers", "chamber bookkeeping mismatch".into(), None));
    }
    if fan.cones.iter().any(|c| c.sample.iter().any(|x| !x.is_positive()) || !c.cone.strictly_contains(&c.sample)) {
        violations.push(fail("sample", "a stored sample is not interior".into(), None));
    }
    debug_assert!(fan.cones.iter().all(|c| c.sample.iter().all(|x| x.denom().is_one())));

    Ok(FanReport {
        grid_points: grid.len(),
        face_pairs,
        samples_per_cone: opts.samples_per_cone,
        violations,
    })
}
