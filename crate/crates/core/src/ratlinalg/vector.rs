use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{denominator_lcm, format_rat, int, Rat};

/// A coordinate vector of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QVector(#[serde(with = "super::serde_rat::vec")] pub Vec<Rat>);

impl QVector {
    pub fn zeros(dim: usize) -> Self {
        QVector(vec![Rat::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = int(1);
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        QVector(xs.iter().map(|&x| int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.0.iter()
    }

    pub fn dot(&self, other: &QVector) -> Rat {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, c: &Rat) -> QVector {
        QVector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self + c * other`
    pub fn add_scaled(&self, c: &Rat, other: &QVector) -> QVector {
        QVector(self.0.iter().zip(&other.0).map(|(a, b)| a + c * b).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    /// Positive rescaling to a primitive integer vector. The zero vector is
    /// returned unchanged.
    pub fn primitive(&self) -> QVector {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = Rat::from_integer(denominator_lcm(&self.0));
        let ints: Vec<BigInt> = self.0.iter().map(|x| (x * &lcm).to_integer()).collect();
        let g = ints
            .iter()
            .fold(BigInt::zero(), |acc, x| acc.gcd(x))
            .abs();
        QVector(
            ints.into_iter()
                .map(|x| Rat::from_integer(x / &g))
                .collect(),
        )
    }

    /// Primitive integer representative whose first nonzero entry is
    /// positive. Suitable for hyperplanes, where the sign carries no meaning.
    pub fn canonical_line(&self) -> QVector {
        let p = self.primitive();
        match p.0.iter().find(|x| !x.is_zero()) {
            Some(first) if first.is_negative() => -p,
            _ => p,
        }
    }

    /// Whether `self = c * other` for some `c > 0`.
    pub fn positively_parallel(&self, other: &QVector) -> bool {
        !self.is_zero() && !other.is_zero() && self.primitive() == other.primitive()
    }
}

impl Index<usize> for QVector {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl IndexMut<usize> for QVector {
    fn index_mut(&mut self, i: usize) -> &mut Rat {
        &mut self.0[i]
    }
}

impl Add for &QVector {
    type Output = QVector;
    fn add(self, rhs: &QVector) -> QVector {
        QVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &QVector {
    type Output = QVector;
    fn sub(self, rhs: &QVector) -> QVector {
        QVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &QVector {
    type Output = QVector;
    fn neg(self) -> QVector {
        QVector(self.0.iter().map(|a| -a).collect())
    }
}

impl Neg for QVector {
    type Output = QVector;
    fn neg(self) -> QVector {
        -&self
    }
}

impl FromIterator<Rat> for QVector {
    fn from_iter<I: IntoIterator<Item = Rat>>(iter: I) -> Self {
        QVector(iter.into_iter().collect())
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if x.is_integer() {
                write!(f, "{}", x.numer())?;
            } else {
                write!(f, "{}", format_rat(x))?;
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlinalg::rat;

    #[test]
    fn primitive_keeps_direction() {
        let v = QVector(vec![rat(-2, 3), rat(4, 3), int(0)]);
        assert_eq!(v.primitive(), QVector::from_ints(&[-1, 2, 0]));
        assert_eq!(v.canonical_line(), QVector::from_ints(&[1, -2, 0]));
        assert!(QVector::zeros(3).primitive().is_zero());
    }

    #[test]
    fn positively_parallel() {
        let a = QVector::from_ints(&[2, 4]);
        assert!(a.positively_parallel(&QVector::from_ints(&[1, 2])));
        assert!(!a.positively_parallel(&QVector::from_ints(&[-1, -2])));
    }
}
