use serde::{Deserialize, Serialize};

use super::{QMatrix, QVector, Rat};
use crate::error::{Error, Result};

/// A linear subspace of `Q^n`, stored as the nonzero rows of a reduced
/// row-echelon basis. The representation is canonical: equal subspaces have
/// identical bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subspace {
    basis: QMatrix,
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    /// Dimension first, then the canonical basis rows.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.ambient(), self.dim(), &self.basis.rows).cmp(&(
            other.ambient(),
            other.dim(),
            &other.basis.rows,
        ))
    }
}

impl Subspace {
    pub fn span<'a>(ambient: usize, vectors: impl IntoIterator<Item = &'a QVector>) -> Self {
        let rows: Vec<QVector> = vectors.into_iter().cloned().collect();
        let (red, rank, _) = QMatrix::from_rows(ambient, rows).rref();
        Subspace {
            basis: QMatrix::from_rows(ambient, red.rows.into_iter().take(rank).collect()),
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            basis: QMatrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            basis: QMatrix::identity(ambient),
        }
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient()
    }

    pub fn contains(&self, v: &QVector) -> bool {
        self.coordinates(v).is_some()
    }

    /// Coefficients of `v` in the canonical basis, if `v` lies in the space.
    pub fn coordinates(&self, v: &QVector) -> Option<Vec<Rat>> {
        // In RREF the coefficient of row i is the entry of v at pivot i.
        let mut rest = v.clone();
        let mut coeffs = Vec::with_capacity(self.dim());
        for row in &self.basis.rows {
            let p = row
                .iter()
                .position(|x| !num_traits::Zero::is_zero(x))
                .expect("basis rows are nonzero");
            let c = v[p].clone();
            rest = rest.add_scaled(&-c.clone(), row);
            coeffs.push(c);
        }
        rest.is_zero().then_some(coeffs)
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient() != other.ambient() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient(),
                got: other.ambient(),
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(Subspace::span(
            self.ambient(),
            self.basis.rows.iter().chain(&other.basis.rows),
        ))
    }

    /// `{x : v . x = 0 for all v in self}` under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.ambient());
        }
        Subspace::span(self.ambient(), &self.basis.nullspace())
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// Orthogonal complement with respect to the symmetric form `gram`.
    pub fn complement_wrt(&self, gram: &QMatrix) -> Subspace {
        let functionals: Vec<QVector> = self.basis.rows.iter().map(|b| gram.vec_mul(b)).collect();
        Subspace::span(self.ambient(), &functionals).annihilator()
    }

    pub fn vectors(&self) -> &[QVector] {
        &self.basis.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(vs: &[&[i64]]) -> Subspace {
        let vs: Vec<QVector> = vs.iter().map(|v| QVector::from_ints(v)).collect();
        Subspace::span(vs[0].dim(), &vs)
    }

    #[test]
    fn equal_spaces_intersect_to_themselves() {
        let a = sp(&[&[1, 2, 0], &[0, 1, 1]]);
        assert_eq!(a.intersect(&a).unwrap(), a);
    }

    #[test]
    fn complementary_spaces_meet_in_zero() {
        let a = sp(&[&[1, 0, 0], &[0, 1, 0]]);
        let b = sp(&[&[0, 0, 1]]);
        assert_eq!(a.intersect(&b).unwrap(), Subspace::zero(3));
    }

    #[test]
    fn canonical_basis() {
        let a = sp(&[&[1, 1], &[1, -1]]);
        assert_eq!(a, Subspace::full(2));
        assert_eq!(sp(&[&[2, 4]]), sp(&[&[-1, -2]]));
    }

    #[test]
    fn dimension_mismatch() {
        assert!(Subspace::full(2).intersect(&Subspace::full(3)).is_err());
    }

    #[test]
    fn coordinates_in_basis() {
        let a = sp(&[&[1, 0, 2], &[0, 1, 1]]);
        let v = QVector::from_ints(&[3, -1, 5]);
        let c = a.coordinates(&v).unwrap();
        assert_eq!(c, vec![crate::ratlinalg::int(3), crate::ratlinalg::int(-1)]);
        assert!(!a.contains(&QVector::from_ints(&[0, 0, 1])));
    }
}
