//! Polyhedral cones: inequality and generator descriptions, conversion
//! between them by the double description method, and ray shooting.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{cone_member, QMatrix, QVector, Rat};
use crate::error::{Error, Result};

/// Largest ambient dimension accepted by the double description routines.
pub const MAX_CONE_DIM: usize = 8;

/// Cone given by inequalities: `{x : n . x >= 0 for every normal n}`.
///
/// Normals are kept as primitive integer vectors (positive rescaling only),
/// deduplicated and sorted, so syntactically equal descriptions compare
/// equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConeH {
    pub dim: usize,
    pub normals: Vec<QVector>,
}

/// Generator description: `cone(rays) + span(lineality)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeGenerators {
    pub dim: usize,
    pub rays: Vec<QVector>,
    pub lineality: Vec<QVector>,
}

impl ConeGenerators {
    /// Rays followed by both signs of each lineality vector; the plain
    /// list of generators of the cone.
    pub fn all_generators(&self) -> Vec<QVector> {
        let mut out = self.rays.clone();
        for l in &self.lineality {
            out.push(l.clone());
            out.push(-l);
        }
        out
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }
}

fn guard(dim: usize) -> Result<()> {
    if dim > MAX_CONE_DIM {
        return Err(Error::DimensionGuard {
            dim,
            max: MAX_CONE_DIM,
        });
    }
    Ok(())
}

fn canonical_set(vs: impl IntoIterator<Item = QVector>) -> Vec<QVector> {
    vs.into_iter()
        .filter(|v| !v.is_zero())
        .map(|v| v.primitive())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

impl ConeH {
    pub fn new(dim: usize, normals: impl IntoIterator<Item = QVector>) -> Self {
        ConeH {
            dim,
            normals: canonical_set(normals),
        }
    }

    /// The whole space.
    pub fn full(dim: usize) -> Self {
        ConeH {
            dim,
            normals: Vec::new(),
        }
    }

    pub fn contains(&self, x: &QVector) -> bool {
        self.normals.iter().all(|n| !n.dot(x).is_negative())
    }

    /// Strictly positive on every normal. For a full-dimensional cone this is
    /// exactly the interior.
    pub fn strictly_contains(&self, x: &QVector) -> bool {
        self.normals.iter().all(|n| n.dot(x).is_positive())
    }

    pub fn intersect(&self, other: &ConeH) -> ConeH {
        ConeH::new(
            self.dim,
            self.normals.iter().chain(&other.normals).cloned(),
        )
    }

    /// Generator description via double description.
    pub fn generators(&self) -> Result<ConeGenerators> {
        guard(self.dim)?;
        Ok(double_description(self.dim, &self.normals))
    }

    /// Drops redundant normals by a round trip through the generators. For
    /// full-dimensional cones the result is the unique facet description.
    pub fn irredundant(&self) -> Result<ConeH> {
        let g = self.generators()?;
        dual_description(self.dim, &g.all_generators())
    }

    /// Dimension of the linear span of the cone.
    pub fn cone_dim(&self) -> Result<usize> {
        let g = self.generators()?;
        Ok(QMatrix::from_rows(self.dim, g.all_generators()).rank())
    }
}

/// Inequality description of `sum_i Q+ g_i`.
///
/// The normals are the generators of the dual cone. When the cone is not
/// full-dimensional, both signs of a basis of its orthogonal complement are
/// included, so the description stays exact.
pub fn dual_description(dim: usize, generators: &[QVector]) -> Result<ConeH> {
    guard(dim)?;
    for g in generators {
        if g.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: g.dim(),
            });
        }
    }
    let nonzero: Vec<QVector> = generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    let dual = double_description(dim, &nonzero);
    Ok(ConeH::new(dim, dual.all_generators()))
}

/// Double description: generators of `{x : a . x >= 0 for all a}`.
fn double_description(dim: usize, normals: &[QVector]) -> ConeGenerators {
    let mut lineality: Vec<QVector> = (0..dim).map(|i| QVector::unit(dim, i)).collect();
    let mut rays: Vec<QVector> = Vec::new();
    let mut processed: Vec<QVector> = Vec::new();

    for a in normals.iter().filter(|a| !a.is_zero()) {
        if let Some(k) = lineality.iter().position(|l| !a.dot(l).is_zero()) {
            let mut l0 = lineality.remove(k);
            let mut al0 = a.dot(&l0);
            if al0.is_negative() {
                l0 = -l0;
                al0 = -al0;
            }
            for l in lineality.iter_mut() {
                let c = a.dot(l) / &al0;
                if !c.is_zero() {
                    *l = l.add_scaled(&-c, &l0);
                }
            }
            for r in rays.iter_mut() {
                let c = a.dot(r) / &al0;
                if !c.is_zero() {
                    *r = r.add_scaled(&-c, &l0).primitive();
                }
            }
            rays.push(l0.primitive());
            processed.push(a.clone());
            continue;
        }

        let values: Vec<Rat> = rays.iter().map(|r| a.dot(r)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        let mut next: Vec<QVector> = (0..rays.len())
            .filter(|&i| !values[i].is_negative())
            .map(|i| rays[i].clone())
            .collect();

        if !neg.is_empty() && !pos.is_empty() {
            let target_rank = dim - lineality.len();
            let zero_sets: Vec<Vec<usize>> = rays
                .iter()
                .map(|r| {
                    (0..processed.len())
                        .filter(|&k| processed[k].dot(r).is_zero())
                        .collect()
                })
                .collect();
            for &p in &pos {
                for &n in &neg {
                    let common: Vec<usize> = zero_sets[p]
                        .iter()
                        .filter(|k| zero_sets[n].contains(k))
                        .copied()
                        .collect();
                    // Combinatorial pre-check, then the algebraic adjacency test.
                    if common.len() + 2 < target_rank {
                        continue;
                    }
                    let rank = QMatrix::from_rows(
                        dim,
                        common.iter().map(|&k| processed[k].clone()).collect(),
                    )
                    .rank();
                    if rank + 2 != target_rank {
                        continue;
                    }
                    let combo = rays[n]
                        .scale(&values[p])
                        .add_scaled(&-values[n].clone(), &rays[p]);
                    next.push(combo.primitive());
                }
            }
        }
        rays = canonical_set(next);
        processed.push(a.clone());
    }

    ConeGenerators {
        dim,
        rays: canonical_set(rays),
        lineality,
    }
}

/// A point in the relative interior: the sum of the extreme rays (the
/// origin for a linear subspace or the zero cone).
pub fn relative_interior_point(cone: &ConeH) -> Result<QVector> {
    let g = cone.generators()?;
    Ok(g.rays
        .iter()
        .fold(QVector::zeros(cone.dim), |acc, r| &acc + r))
}

/// Affine cone `vertex + sum_i Q+ generators[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffCone {
    pub vertex: QVector,
    pub generators: Vec<QVector>,
}

/// Result of shooting a ray through an affine cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RayHit {
    Unbounded,
    Boundary {
        t: Rat,
        point: QVector,
        /// Indices into the cone's generator list spanning the minimal face
        /// that contains the hit point.
        face: Vec<usize>,
        face_generators: Vec<QVector>,
    },
}

impl AffCone {
    pub fn new(vertex: QVector, generators: Vec<QVector>) -> Self {
        let mut seen = BTreeSet::new();
        let generators = generators
            .into_iter()
            .filter(|g| seen.insert(g.clone()))
            .collect();
        AffCone { vertex, generators }
    }

    pub fn dim(&self) -> usize {
        self.vertex.dim()
    }

    pub fn contains(&self, x: &QVector) -> bool {
        cone_member(&(x - &self.vertex), &self.generators).is_member()
    }

    /// Inequality description of the recession cone.
    pub fn recession_h(&self) -> Result<ConeH> {
        dual_description(self.dim(), &self.generators)
    }

    /// Indices of generators lying in the minimal face through `x`.
    pub fn minimal_face(&self, h: &ConeH, x: &QVector) -> Vec<usize> {
        let rel = x - &self.vertex;
        let tight: Vec<&QVector> = h.normals.iter().filter(|n| n.dot(&rel).is_zero()).collect();
        (0..self.generators.len())
            .filter(|&i| tight.iter().all(|n| n.dot(&self.generators[i]).is_zero()))
            .collect()
    }

    /// Largest `t >= 0` with `start + t * direction` in the cone, together
    /// with the minimal face containing the exit point.
    pub fn ray_hit_boundary(&self, start: &QVector, direction: &QVector) -> Result<RayHit> {
        if start.dim() != self.dim() || direction.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: start.dim().max(direction.dim()),
            });
        }
        let h = self.recession_h()?;
        let rel = start - &self.vertex;
        if !h.contains(&rel) {
            return Err(Error::StartNotInCone);
        }
        let mut best: Option<Rat> = None;
        for n in &h.normals {
            let slope = n.dot(direction);
            if !slope.is_negative() {
                continue;
            }
            let t = n.dot(&rel) / -slope;
            if best.as_ref().is_none_or(|b| &t < b) {
                best = Some(t);
            }
        }
        let Some(t) = best else {
            return Ok(RayHit::Unbounded);
        };
        let point = start.add_scaled(&t, direction);
        let face = self.minimal_face(&h, &point);
        let face_generators = face.iter().map(|&i| self.generators[i].clone()).collect();
        Ok(RayHit::Boundary {
            t,
            point,
            face,
            face_generators,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlinalg::int;

    fn v(xs: &[i64]) -> QVector {
        QVector::from_ints(xs)
    }

    #[test]
    fn orthant_normals() {
        let h = dual_description(2, &[v(&[1, 0]), v(&[0, 1])]).unwrap();
        assert_eq!(h.normals, vec![v(&[0, 1]), v(&[1, 0])]);
    }

    #[test]
    fn single_ray_normals() {
        let h = dual_description(2, &[v(&[1, 0])]).unwrap();
        assert_eq!(h.normals, vec![v(&[0, -1]), v(&[0, 1]), v(&[1, 0])]);
        assert!(h.contains(&v(&[5, 0])));
        assert!(!h.contains(&v(&[5, 1])));
        assert!(!h.contains(&v(&[-1, 0])));
    }

    #[test]
    fn zero_cone() {
        let h = dual_description(3, &[]).unwrap();
        assert_eq!(h.normals.len(), 6);
        let g = h.generators().unwrap();
        assert!(g.rays.is_empty() && g.lineality.is_empty());
        assert!(relative_interior_point(&h).unwrap().is_zero());
    }

    #[test]
    fn full_space_has_lineality() {
        let g = ConeH::full(2).generators().unwrap();
        assert_eq!(g.lineality.len(), 2);
        assert!(g.rays.is_empty());
    }

    #[test]
    fn round_trip_square_cone() {
        let gens = vec![v(&[1, 0, 1]), v(&[0, 1, 1]), v(&[-1, 0, 1]), v(&[0, -1, 1])];
        let h = dual_description(3, &gens).unwrap();
        assert_eq!(h.normals.len(), 4);
        let back = h.generators().unwrap();
        assert_eq!(back.rays, canonical_set(gens));
        assert!(back.is_pointed());
    }

    #[test]
    fn orthant_interior_point() {
        let h = dual_description(2, &[v(&[1, 0]), v(&[0, 1])]).unwrap();
        let p = relative_interior_point(&h).unwrap();
        assert!(h.strictly_contains(&p));
    }

    #[test]
    fn ray_from_vertex_along_generator_is_unbounded() {
        let c = AffCone::new(v(&[1, 1]), vec![v(&[1, 0]), v(&[1, 1])]);
        assert_eq!(c.ray_hit_boundary(&v(&[1, 1]), &v(&[1, 0])).unwrap(), RayHit::Unbounded);
    }

    #[test]
    fn ray_against_all_generators_stops_at_vertex() {
        let c = AffCone::new(v(&[1, 1]), vec![v(&[1, 0]), v(&[1, 1])]);
        match c.ray_hit_boundary(&v(&[1, 1]), &v(&[-2, -1])).unwrap() {
            RayHit::Boundary { t, point, face, .. } => {
                assert_eq!(t, int(0));
                assert_eq!(point, v(&[1, 1]));
                assert!(face.is_empty());
            }
            RayHit::Unbounded => panic!("expected a boundary hit"),
        }
    }

    #[test]
    fn start_outside_is_rejected() {
        let c = AffCone::new(v(&[0, 0]), vec![v(&[1, 0]), v(&[0, 1])]);
        assert_eq!(
            c.ray_hit_boundary(&v(&[-1, 0]), &v(&[1, 0])),
            Err(Error::StartNotInCone)
        );
    }

    #[test]
    fn guard_rejects_large_dimension() {
        assert!(matches!(
            dual_description(9, &[]),
            Err(Error::DimensionGuard { dim: 9, .. })
        ));
    }
}
