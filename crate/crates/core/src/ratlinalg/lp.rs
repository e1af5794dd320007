//! Exact phase-one simplex for cone membership, with Farkas certificates.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{QVector, Rat};

/// Outcome of a cone-membership test. Both variants carry a certificate
/// that [`ConeMembership::verify`] checks exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ConeMembership {
    /// `target = sum_i c_i g_i` with every `c_i >= 0`.
    Member {
        #[serde(with = "super::serde_rat::vec")]
        coefficients: Vec<Rat>,
    },
    /// `n . g_i >= 0` for all generators and `n . target < 0`.
    Separated { functional: QVector },
}

impl ConeMembership {
    pub fn is_member(&self) -> bool {
        matches!(self, ConeMembership::Member { .. })
    }

    pub fn coefficients(&self) -> Option<&[Rat]> {
        match self {
            ConeMembership::Member { coefficients } => Some(coefficients),
            ConeMembership::Separated { .. } => None,
        }
    }

    /// Checks the certificate against the original data.
    pub fn verify(&self, target: &QVector, generators: &[QVector]) -> bool {
        match self {
            ConeMembership::Member { coefficients } => {
                coefficients.len() == generators.len()
                    && coefficients.iter().all(|c| !c.is_negative())
                    && generators
                        .iter()
                        .zip(coefficients)
                        .fold(QVector::zeros(target.dim()), |acc, (g, c)| {
                            acc.add_scaled(c, g)
                        })
                        == *target
            }
            ConeMembership::Separated { functional } => {
                generators.iter().all(|g| !functional.dot(g).is_negative())
                    && functional.dot(target).is_negative()
            }
        }
    }
}

/// Decides whether `target` lies in the cone `sum_i Q+ g_i`.
///
/// Runs phase one of the simplex method on `G c = target, c >= 0` with
/// Bland's pivoting rule, so results are deterministic. An empty generator
/// list yields membership exactly when the target is zero.
pub fn cone_member(target: &QVector, generators: &[QVector]) -> ConeMembership {
    let m = target.dim();
    let n = generators.len();
    if target.is_zero() {
        return ConeMembership::Member {
            coefficients: vec![Rat::zero(); n],
        };
    }
    if n == 0 {
        return ConeMembership::Separated {
            functional: -target,
        };
    }

    // Row i: sign_i * (sum_j g_j[i] c_j) + a_i = sign_i * target[i], rhs >= 0.
    let width = n + m;
    let mut signs = Vec::with_capacity(m);
    let mut tab: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rat> = Vec::with_capacity(m);
    for i in 0..m {
        let s = if target[i].is_negative() { -Rat::one() } else { Rat::one() };
        let mut row = vec![Rat::zero(); width];
        for (j, g) in generators.iter().enumerate() {
            row[j] = &s * &g[i];
        }
        row[n + i] = Rat::one();
        rhs.push(&s * &target[i]);
        tab.push(row);
        signs.push(s);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Reduced costs for minimising the sum of artificials.
    let mut cost = vec![Rat::zero(); width];
    for j in 0..n {
        cost[j] = -tab.iter().fold(Rat::zero(), |acc, row| acc + &row[j]);
    }

    while let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..m {
            if !tab[i][enter].is_positive() {
                continue;
            }
            let ratio = &rhs[i] / &tab[i][enter];
            leave = match leave {
                None => Some((i, ratio)),
                Some((li, lr)) => {
                    if ratio < lr || (ratio == lr && basis[i] < basis[li]) {
                        Some((i, ratio))
                    } else {
                        Some((li, lr))
                    }
                }
            };
        }
        // Phase one is bounded below by zero, so a leaving row always exists.
        let (r, _) = leave.expect("phase-one objective is bounded");
        let piv = tab[r][enter].clone();
        for x in tab[r].iter_mut() {
            *x /= &piv;
        }
        rhs[r] /= &piv;
        let prow = tab[r].clone();
        let prhs = rhs[r].clone();
        for i in 0..m {
            if i == r || tab[i][enter].is_zero() {
                continue;
            }
            let f = tab[i][enter].clone();
            for (x, p) in tab[i].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
            rhs[i] -= &f * &prhs;
        }
        let f = cost[enter].clone();
        for (x, p) in cost.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x -= &f * p;
            }
        }
        basis[r] = enter;
    }

    let infeasibility: Rat = (0..m)
        .filter(|&i| basis[i] >= n)
        .map(|i| rhs[i].clone())
        .sum();
    if infeasibility.is_zero() {
        let mut coefficients = vec![Rat::zero(); n];
        for (i, &b) in basis.iter().enumerate() {
            if b < n {
                coefficients[b] = rhs[i].clone();
            }
        }
        ConeMembership::Member { coefficients }
    } else {
        // Duals u_i = 1 - reduced cost of artificial i; the functional is -u
        // mapped back through the row sign flips.
        let functional = (0..m)
            .map(|i| -(Rat::one() - &cost[n + i]) * &signs[i])
            .collect();
        ConeMembership::Separated { functional }
    }
}

/// Finds `x` with `n . x >= 1` for every normal, i.e. a point strictly inside
/// the open cone `{x : n . x > 0}`, or `None` when that cone is empty.
pub fn strict_feasible_point(normals: &[QVector], dim: usize) -> Option<QVector> {
    if normals.is_empty() {
        return Some(QVector::zeros(dim));
    }
    // x = x+ - x-, with slack: N x+ - N x- - s = 1.
    let k = normals.len();
    let mut columns = Vec::with_capacity(2 * dim + k);
    for j in 0..dim {
        columns.push(normals.iter().map(|n| n[j].clone()).collect::<QVector>());
    }
    for j in 0..dim {
        columns.push(normals.iter().map(|n| -n[j].clone()).collect::<QVector>());
    }
    for i in 0..k {
        columns.push(-QVector::unit(k, i));
    }
    let target: QVector = (0..k).map(|_| Rat::one()).collect();
    let coeffs = cone_member(&target, &columns).coefficients()?.to_vec();
    Some((0..dim).map(|j| &coeffs[j] - &coeffs[dim + j]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlinalg::{int, rat};

    #[test]
    fn zero_target_is_member() {
        let gens = vec![QVector::from_ints(&[1, 0]), QVector::from_ints(&[1, 1])];
        let r = cone_member(&QVector::zeros(2), &gens);
        assert_eq!(r.coefficients().unwrap(), &[int(0), int(0)]);
    }

    #[test]
    fn sum_of_generators() {
        let gens = vec![QVector::from_ints(&[1, 2]), QVector::from_ints(&[0, 1])];
        let t = &gens[0] + &gens[1];
        let r = cone_member(&t, &gens);
        assert_eq!(r.coefficients().unwrap(), &[int(1), int(1)]);
        assert!(r.verify(&t, &gens));
    }

    #[test]
    fn separation_certificate() {
        let gens = vec![QVector::from_ints(&[1, 0]), QVector::from_ints(&[1, 1])];
        let t = QVector::from_ints(&[0, 1]);
        let r = cone_member(&t, &gens);
        assert!(!r.is_member());
        assert!(r.verify(&t, &gens));
    }

    #[test]
    fn empty_generators() {
        let t = QVector(vec![rat(1, 2), int(0)]);
        let r = cone_member(&t, &[]);
        assert!(!r.is_member());
        assert!(r.verify(&t, &[]));
    }

    #[test]
    fn strict_point() {
        let normals = vec![QVector::from_ints(&[1, -1]), QVector::from_ints(&[0, 1])];
        let x = strict_feasible_point(&normals, 2).unwrap();
        assert!(normals.iter().all(|n| n.dot(&x) >= int(1)));
        let empty = vec![QVector::from_ints(&[1, 0]), QVector::from_ints(&[-1, 0])];
        assert!(strict_feasible_point(&empty, 2).is_none());
    }
}
