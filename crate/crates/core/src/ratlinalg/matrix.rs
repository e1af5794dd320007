use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{QVector, Rat};

/// Dense rectangular matrix of rationals, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QMatrix {
    pub cols: usize,
    pub rows: Vec<QVector>,
}

impl QMatrix {
    pub fn from_rows(cols: usize, rows: Vec<QVector>) -> Self {
        debug_assert!(rows.iter().all(|r| r.dim() == cols));
        QMatrix { cols, rows }
    }

    pub fn zeros(nrows: usize, cols: usize) -> Self {
        QMatrix {
            cols,
            rows: vec![QVector::zeros(cols); nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        QMatrix {
            cols: n,
            rows: (0..n).map(|i| QVector::unit(n, i)).collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.rows[i][j]
    }

    pub fn column(&self, j: usize) -> QVector {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix {
            cols: self.nrows(),
            rows: (0..self.cols).map(|j| self.column(j)).collect(),
        }
    }

    pub fn mul_vec(&self, v: &QVector) -> QVector {
        self.rows.iter().map(|r| r.dot(v)).collect()
    }

    /// Row vector times matrix: `v^T M`.
    pub fn vec_mul(&self, v: &QVector) -> QVector {
        let mut out = QVector::zeros(self.cols);
        for (coef, row) in v.iter().zip(&self.rows) {
            if coef.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                out[j] += coef * &row[j];
            }
        }
        out
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        QMatrix {
            cols: other.cols,
            rows: self.rows.iter().map(|r| other.vec_mul(r)).collect(),
        }
    }

    /// Reduced row-echelon form, its rank, and the pivot columns.
    pub fn rref(&self) -> (QMatrix, usize, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = Rat::one() / &rows[r][c];
            rows[r] = rows[r].scale(&inv);
            for i in 0..rows.len() {
                if i != r && !rows[i][c].is_zero() {
                    let f = -rows[i][c].clone();
                    rows[i] = rows[i].add_scaled(&f, &rows[r]);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (
            QMatrix {
                cols: self.cols,
                rows,
            },
            r,
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Basis of `{x : M x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<QVector> {
        let (red, rank, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = QVector::zeros(self.cols);
                v[f] = Rat::one();
                for (i, &p) in pivots.iter().enumerate().take(rank) {
                    v[p] = -red.rows[i][f].clone();
                }
                v
            })
            .collect()
    }

    /// Some solution of `M x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &QVector) -> Option<QVector> {
        let aug = QMatrix {
            cols: self.cols + 1,
            rows: self
                .rows
                .iter()
                .zip(b.iter())
                .map(|(r, bi)| {
                    let mut v = r.0.clone();
                    v.push(bi.clone());
                    QVector(v)
                })
                .collect(),
        };
        let (red, rank, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = QVector::zeros(self.cols);
        for (i, &p) in pivots.iter().enumerate().take(rank) {
            x[p] = red.rows[i][self.cols].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        let n = self.cols;
        if self.nrows() != n {
            return None;
        }
        let aug = QMatrix {
            cols: 2 * n,
            rows: self
                .rows
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    let mut v = r.0.clone();
                    v.extend(QVector::unit(n, i).0);
                    QVector(v)
                })
                .collect(),
        };
        let (red, _, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(QMatrix {
            cols: n,
            rows: red
                .rows
                .into_iter()
                .map(|r| QVector(r.0[n..].to_vec()))
                .collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlinalg::{int, rat};

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(
            rows[0].len(),
            rows.iter().map(|r| QVector::from_ints(r)).collect(),
        )
    }

    #[test]
    fn rref_identity() {
        let id = QMatrix::identity(3);
        let (red, rank, _) = id.rref();
        assert_eq!(red, id);
        assert_eq!(rank, 3);
    }

    #[test]
    fn rref_zero() {
        let z = QMatrix::zeros(2, 4);
        let (red, rank, _) = z.rref();
        assert_eq!(red, z);
        assert_eq!(rank, 0);
    }

    #[test]
    fn rref_dependent_rows() {
        assert_eq!(m(&[&[1, 1], &[2, 2]]).rank(), 1);
    }

    #[test]
    fn nullspace_and_inverse() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(a.mul_vec(v).is_zero());
        }
        let b = m(&[&[2, 1], &[1, 1]]);
        let inv = b.inverse().unwrap();
        assert_eq!(b.mul(&inv), QMatrix::identity(2));
        assert_eq!(inv.rows[0], QVector(vec![int(1), int(-1)]));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let c = QMatrix::from_rows(1, vec![QVector(vec![rat(1, 3)])]);
        assert_eq!(c.inverse().unwrap().rows[0][0], int(3));
    }
}
