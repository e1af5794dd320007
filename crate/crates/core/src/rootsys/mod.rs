//! Root systems of types A–G and their products.
//!
//! Internal coordinates are simple-root coordinates: a vector `c` stands for
//! `sum_i c_i alpha_i`, and the invariant form is `c^T G d` with `G` the Gram
//! matrix of the simple roots. Long roots have squared length 2 in every
//! irreducible factor.

mod cartan;

pub use cartan::{parse_type_spec, weyl_order, CartanType};

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratlinalg::{cone_member, int, QMatrix, QVector, Rat};
use crate::weyl::WeylElement;

/// Coordinate basis of a [`Weight`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    SimpleRoot,
    Fundamental,
    Epsilon,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::SimpleRoot => "simple_root",
            Basis::Fundamental => "fundamental",
            Basis::Epsilon => "epsilon",
        })
    }
}

/// A rational weight with its coordinate basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub basis: Basis,
    pub coords: QVector,
}

impl Weight {
    pub fn new(basis: Basis, coords: QVector) -> Self {
        Weight { basis, coords }
    }

    pub fn fundamental(coords: QVector) -> Self {
        Weight::new(Basis::Fundamental, coords)
    }

    pub fn simple_root(coords: QVector) -> Self {
        Weight::new(Basis::SimpleRoot, coords)
    }
}

#[derive(Clone, Debug)]
struct EpsilonFrame {
    /// Rows: simple roots in epsilon coordinates.
    simple: QMatrix,
}

/// A finite crystallographic root system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    type_spec: String,
    factors: Vec<CartanType>,
    /// Offset of each factor's simple roots.
    offsets: Vec<usize>,
    rank: usize,
    gram: QMatrix,
    cartan: Vec<Vec<i64>>,
    /// Half squared lengths of the simple roots.
    half_norms: Vec<Rat>,
    /// Positive roots first, ordered by height; then their negatives in the
    /// same order.
    roots: Vec<QVector>,
    root_index: HashMap<QVector, usize>,
    fundamental: Vec<QVector>,
    /// Row i holds pi_i in simple-root coordinates.
    fundamental_matrix: QMatrix,
    epsilon: Option<EpsilonFrame>,
}

impl RootSystem {
    /// Builds the root system for a type spec such as `"B4"` or `"A2xG2"`.
    pub fn build(type_spec: &str) -> Result<RootSystem> {
        let factors = parse_type_spec(type_spec)?;
        let rank: usize = factors.iter().map(|t| t.rank).sum();
        let mut gram = QMatrix::zeros(rank, rank);
        let mut offsets = Vec::with_capacity(factors.len());
        let mut off = 0;
        for t in &factors {
            let g = cartan::gram_matrix(*t);
            for i in 0..t.rank {
                for j in 0..t.rank {
                    gram.rows[off + i][off + j] = g.get(i, j).clone();
                }
            }
            offsets.push(off);
            off += t.rank;
        }
        let half_norms: Vec<Rat> = (0..rank).map(|i| gram.get(i, i) / int(2)).collect();
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let c = gram.get(i, j) / &half_norms[j];
                        assert!(c.is_integer(), "Cartan entries are integers");
                        i64::try_from(c.to_integer()).expect("small Cartan entry")
                    })
                    .collect()
            })
            .collect();

        let gram_inv = gram.inverse().expect("Gram matrix is nondegenerate");
        let fundamental: Vec<QVector> = (0..rank)
            .map(|i| gram_inv.rows[i].scale(&half_norms[i]))
            .collect();
        let fundamental_matrix = QMatrix::from_rows(rank, fundamental.clone());

        let epsilon = match factors.as_slice() {
            [t] => cartan::epsilon_frame(*t).map(|(simple, _)| EpsilonFrame { simple }),
            _ => None,
        };

        let type_spec = factors
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join("x");

        let mut rs = RootSystem {
            type_spec,
            factors,
            offsets,
            rank,
            gram,
            cartan,
            half_norms,
            roots: Vec::new(),
            root_index: HashMap::new(),
            fundamental,
            fundamental_matrix,
            epsilon,
        };
        rs.generate_roots();
        Ok(rs)
    }

    fn generate_roots(&mut self) {
        let r = self.rank;
        let mut seen: BTreeSet<QVector> = BTreeSet::new();
        let mut queue: VecDeque<QVector> = (0..r).map(|i| QVector::unit(r, i)).collect();
        while let Some(v) = queue.pop_front() {
            if !seen.insert(v.clone()) {
                continue;
            }
            for i in 0..r {
                let s = self.reflect(i, &v);
                if !seen.contains(&s) {
                    queue.push_back(s);
                }
            }
        }
        let mut positive: Vec<QVector> = seen
            .into_iter()
            .filter(|v| v.iter().all(|x| !x.is_negative()))
            .collect();
        positive.sort_by(|a, b| {
            let ha: Rat = a.iter().sum();
            let hb: Rat = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let negative: Vec<QVector> = positive.iter().map(|v| -v).collect();
        self.roots = positive.into_iter().chain(negative).collect();
        self.root_index = self
            .roots
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
    }

    pub fn type_spec(&self) -> &str {
        &self.type_spec
    }

    pub fn factors(&self) -> &[CartanType] {
        &self.factors
    }

    /// Simple-root index range of each irreducible factor.
    pub fn factor_ranges(&self) -> Vec<std::ops::Range<usize>> {
        self.factors
            .iter()
            .zip(&self.offsets)
            .map(|(t, &o)| o..o + t.rank)
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gram(&self) -> &QMatrix {
        &self.gram
    }

    /// `cartan()[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Whether some irreducible factor has type A.
    pub fn has_type_a_factor(&self) -> bool {
        self.factors.iter().any(|t| t.family == 'A')
    }

    pub fn roots(&self) -> &[QVector] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &QVector {
        &self.roots[i]
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn positive_roots(&self) -> &[QVector] {
        &self.roots[..self.num_positive()]
    }

    pub fn is_positive_index(&self, i: usize) -> bool {
        i < self.num_positive()
    }

    pub fn root_index(&self, v: &QVector) -> Option<usize> {
        self.root_index.get(v).copied()
    }

    /// Index of `-root(i)`.
    pub fn negate_index(&self, i: usize) -> usize {
        let p = self.num_positive();
        if i < p {
            i + p
        } else {
            i - p
        }
    }

    pub fn simple_root(&self, i: usize) -> QVector {
        QVector::unit(self.rank, i)
    }

    pub fn simple_roots(&self) -> Vec<QVector> {
        (0..self.rank).map(|i| self.simple_root(i)).collect()
    }

    /// Highest root of each irreducible factor, in factor order.
    pub fn highest_roots(&self) -> Vec<QVector> {
        self.factor_ranges()
            .into_iter()
            .map(|range| {
                self.positive_roots()
                    .iter()
                    .filter(|v| (0..self.rank).all(|k| range.contains(&k) || v[k].is_zero()))
                    .max_by_key(|v| v.iter().sum::<Rat>())
                    .cloned()
                    .expect("every factor has roots")
            })
            .collect()
    }

    pub fn fundamental_weights(&self) -> &[QVector] {
        &self.fundamental
    }

    /// The invariant form on internal coordinates.
    pub fn form(&self, u: &QVector, v: &QVector) -> Rat {
        self.gram.vec_mul(u).dot(v)
    }

    /// Linear functional (for the dot product) equal to `x -> (u, x)`.
    pub fn functional(&self, u: &QVector) -> QVector {
        self.gram.vec_mul(u)
    }

    /// `2 (v, alpha_i) / (alpha_i, alpha_i)`.
    pub fn coroot_pairing(&self, v: &QVector, i: usize) -> Rat {
        self.gram.rows[i].dot(v) / &self.half_norms[i]
    }

    /// `(alpha_i, alpha_i) / 2`.
    pub fn half_norm(&self, i: usize) -> &Rat {
        &self.half_norms[i]
    }

    pub fn reflect(&self, i: usize, v: &QVector) -> QVector {
        let c = self.coroot_pairing(v, i);
        let mut out = v.clone();
        out[i] -= c;
        out
    }

    /// Coordinates in the fundamental-weight basis.
    pub fn to_fundamental(&self, v: &QVector) -> QVector {
        (0..self.rank).map(|i| self.coroot_pairing(v, i)).collect()
    }

    /// Internal coordinates of `sum_i a_i pi_i`.
    pub fn from_fundamental(&self, a: &QVector) -> QVector {
        self.fundamental_matrix.vec_mul(a)
    }

    pub fn has_epsilon_basis(&self) -> bool {
        self.epsilon.is_some()
    }

    pub fn to_epsilon(&self, v: &QVector) -> Result<QVector> {
        let frame = self
            .epsilon
            .as_ref()
            .ok_or_else(|| Error::BasisUnavailable(format!("epsilon for {}", self.type_spec)))?;
        Ok(frame.simple.vec_mul(v))
    }

    /// Epsilon coordinates to internal ones. For type A the input is first
    /// projected onto the sum-zero hyperplane.
    pub fn from_epsilon(&self, x: &QVector) -> Result<QVector> {
        let frame = self
            .epsilon
            .as_ref()
            .ok_or_else(|| Error::BasisUnavailable(format!("epsilon for {}", self.type_spec)))?;
        if x.dim() != frame.simple.cols {
            return Err(Error::DimensionMismatch {
                expected: frame.simple.cols,
                got: x.dim(),
            });
        }
        let mut target = x.clone();
        if self.factors[0].family == 'A' {
            let mean: Rat = x.iter().sum::<Rat>() / int(x.dim() as i64);
            target = x.iter().map(|c| c - &mean).collect();
        }
        frame
            .simple
            .transpose()
            .solve(&target)
            .ok_or_else(|| Error::invalid("weight", "not in the span of the roots"))
    }

    /// Internal coordinates of a weight in any supported basis.
    pub fn to_internal(&self, w: &Weight) -> Result<QVector> {
        let expect = |d: usize| {
            if w.coords.dim() == d {
                Ok(())
            } else {
                Err(Error::DimensionMismatch {
                    expected: d,
                    got: w.coords.dim(),
                })
            }
        };
        match w.basis {
            Basis::SimpleRoot => {
                expect(self.rank)?;
                Ok(w.coords.clone())
            }
            Basis::Fundamental => {
                expect(self.rank)?;
                Ok(self.from_fundamental(&w.coords))
            }
            Basis::Epsilon => self.from_epsilon(&w.coords),
        }
    }

    pub fn express(&self, v: &QVector, basis: Basis) -> Result<Weight> {
        let coords = match basis {
            Basis::SimpleRoot => v.clone(),
            Basis::Fundamental => self.to_fundamental(v),
            Basis::Epsilon => self.to_epsilon(v)?,
        };
        Ok(Weight::new(basis, coords))
    }

    /// The invariant form on weights given in any bases.
    pub fn inner(&self, u: &Weight, v: &Weight) -> Result<Rat> {
        Ok(self.form(&self.to_internal(u)?, &self.to_internal(v)?))
    }

    /// Conjugates `v` into the closed dominant chamber by repeatedly
    /// reflecting in a simple root with negative pairing. Returns `v+` and
    /// the element `w` with `w v = v+`.
    pub fn dominant_conjugate(&self, v: &QVector) -> (QVector, WeylElement) {
        let mut cur = v.clone();
        let mut word = Vec::new();
        while let Some(i) = (0..self.rank).find(|&i| self.coroot_pairing(&cur, i).is_negative()) {
            cur = self.reflect(i, &cur);
            word.push(i);
        }
        word.reverse();
        (cur, WeylElement::from_word(self, &word))
    }

    /// Whether `lambda` lies in the convex hull of the orbit `W chi`:
    /// `chi - dominant(lambda)` must be a nonnegative combination of simple
    /// roots.
    pub fn weight_polytope_contains(&self, chi: &QVector, lambda: &QVector) -> bool {
        let (plus, _) = self.dominant_conjugate(lambda);
        cone_member(&(chi - &plus), &self.simple_roots()).is_member()
    }

    /// Fails unless every fundamental coordinate is strictly positive.
    pub fn check_strictly_dominant(&self, chi: &QVector) -> Result<()> {
        let a = self.to_fundamental(chi);
        if let Some(i) = (0..self.rank).find(|&i| a[i].is_negative()) {
            return Err(Error::NotDominant { index: i });
        }
        if let Some(i) = (0..self.rank).find(|&i| a[i].is_zero()) {
            return Err(Error::OnChamberWall { index: i });
        }
        Ok(())
    }

    /// Whether `v` lies in the closed chamber `C`.
    pub fn is_dominant(&self, v: &QVector) -> bool {
        (0..self.rank).all(|i| !self.coroot_pairing(v, i).is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlinalg::rat;

    fn eps(xs: &[Rat]) -> QVector {
        QVector(xs.to_vec())
    }

    #[test]
    fn root_counts() {
        for (spec, n) in [
            ("A1", 2),
            ("A2", 6),
            ("A3", 12),
            ("B2", 8),
            ("B3", 18),
            ("B4", 32),
            ("C3", 18),
            ("D4", 24),
            ("G2", 12),
            ("F4", 48),
            ("E6", 72),
            ("A2xG2", 18),
        ] {
            let rs = RootSystem::build(spec).unwrap();
            assert_eq!(rs.roots().len(), n, "{spec}");
            assert_eq!(rs.num_positive() * 2, n);
        }
    }

    #[test]
    fn b4_fundamental_weights_in_epsilon_coordinates() {
        let rs = RootSystem::build("B4").unwrap();
        let got: Vec<QVector> = rs
            .fundamental_weights()
            .iter()
            .map(|p| rs.to_epsilon(p).unwrap())
            .collect();
        let h = rat(1, 2);
        assert_eq!(got[0], QVector::from_ints(&[1, 0, 0, 0]));
        assert_eq!(got[1], QVector::from_ints(&[1, 1, 0, 0]));
        assert_eq!(got[2], QVector::from_ints(&[1, 1, 1, 0]));
        assert_eq!(got[3], eps(&[h.clone(), h.clone(), h.clone(), h]));
    }

    #[test]
    fn inner_products() {
        let a2 = RootSystem::build("A2").unwrap();
        let pi1 = Weight::fundamental(QVector::from_ints(&[1, 0]));
        assert_eq!(a2.inner(&pi1, &pi1).unwrap(), rat(2, 3));
        for r in a2.roots() {
            assert_eq!(a2.form(r, r), int(2));
        }
        let b4 = RootSystem::build("B4").unwrap();
        let a4 = Weight::simple_root(QVector::unit(4, 3));
        assert_eq!(b4.to_epsilon(&a4.coords).unwrap(), QVector::from_ints(&[0, 0, 0, 1]));
        assert_eq!(b4.inner(&a4, &a4).unwrap(), int(1));
    }

    #[test]
    fn epsilon_round_trip() {
        let b4 = RootSystem::build("B4").unwrap();
        let chi = Weight::fundamental(QVector::from_ints(&[10, 1, 8, 2]));
        let x = b4.to_internal(&chi).unwrap();
        assert_eq!(b4.to_epsilon(&x).unwrap(), QVector::from_ints(&[20, 10, 9, 1]));
        let back = b4
            .to_internal(&Weight::new(Basis::Epsilon, QVector::from_ints(&[20, 10, 9, 1])))
            .unwrap();
        assert_eq!(back, x);
        let a2 = RootSystem::build("A2").unwrap();
        // pi_1 = e1 up to the trace part.
        let p = a2
            .to_internal(&Weight::new(Basis::Epsilon, QVector::from_ints(&[1, 0, 0])))
            .unwrap();
        assert_eq!(p, a2.fundamental_weights()[0]);
        assert!(RootSystem::build("G2").unwrap().to_epsilon(&QVector::zeros(2)).is_err());
    }

    #[test]
    fn dominant_conjugates() {
        let a2 = RootSystem::build("A2").unwrap();
        let (plus, w) = a2.dominant_conjugate(&QVector::from_ints(&[1, 0]));
        assert_eq!(plus, QVector::from_ints(&[1, 1]));
        assert_eq!(w.act(&QVector::from_ints(&[1, 0])), plus);
        assert_eq!(w.word(), &[1]);
        let chi = a2.from_fundamental(&QVector::from_ints(&[2, 1]));
        let (same, id) = a2.dominant_conjugate(&chi);
        assert_eq!(same, chi);
        assert_eq!(id.length(), 0);
    }

    #[test]
    fn polytope_membership() {
        let b2 = RootSystem::build("B2").unwrap();
        let chi = b2.from_fundamental(&QVector::from_ints(&[1, 1]));
        assert!(b2.weight_polytope_contains(&chi, &chi));
        assert!(b2.weight_polytope_contains(&chi, &QVector::zeros(2)));
        assert!(!b2.weight_polytope_contains(&chi, &chi.scale(&int(2))));
        assert!(b2.weight_polytope_contains(&chi, &-&chi));
    }

    #[test]
    fn strict_dominance() {
        let b2 = RootSystem::build("B2").unwrap();
        let wall = b2.from_fundamental(&QVector::from_ints(&[0, 1]));
        assert_eq!(b2.check_strictly_dominant(&wall), Err(Error::OnChamberWall { index: 0 }));
        let neg = b2.from_fundamental(&QVector::from_ints(&[1, -1]));
        assert_eq!(b2.check_strictly_dominant(&neg), Err(Error::NotDominant { index: 1 }));
    }

    #[test]
    fn highest_roots_per_factor() {
        let rs = RootSystem::build("B2xA1").unwrap();
        assert_eq!(
            rs.highest_roots(),
            vec![QVector::from_ints(&[1, 2, 0]), QVector::from_ints(&[0, 0, 1])]
        );
    }
}
