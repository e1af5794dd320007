//! Weyl group elements as integer matrices in simple-root coordinates.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::ratlinalg::{int, QMatrix, QVector};
use crate::rootsys::RootSystem;

/// Default bound on the number of enumerated elements.
pub const DEFAULT_WEYL_CAP: u128 = 2_000_000;

/// An element `w` of the Weyl group. Column `j` of the matrix holds the
/// simple-root coordinates of `w(alpha_j)`. The cached word is a reduced
/// expression `w = s_{word[0]} s_{word[1]} ...`, so its length is `l(w)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    rank: usize,
    matrix: Vec<i64>,
    word: Vec<usize>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut matrix = vec![0; rank * rank];
        for i in 0..rank {
            matrix[i * rank + i] = 1;
        }
        WeylElement {
            rank,
            matrix,
            word: Vec::new(),
        }
    }

    pub fn simple(rs: &RootSystem, i: usize) -> Self {
        WeylElement::from_word(rs, &[i])
    }

    /// The product `s_{word[0]} s_{word[1]} ...`; the stored word is reduced.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Self {
        let mut w = WeylElement::identity(rs.rank());
        for &i in word {
            w.right_multiply_simple(rs, i);
        }
        w.reduce(rs);
        w
    }

    fn right_multiply_simple(&mut self, rs: &RootSystem, i: usize) {
        // (M s_i)[:, j] = M[:, j] - c_ji M[:, i] with c_ji = <alpha_j, alpha_i^v>.
        let r = self.rank;
        let cartan = rs.cartan();
        for (j, row) in cartan.iter().enumerate() {
            let c = row[i];
            if j == i || c == 0 {
                continue;
            }
            for k in 0..r {
                self.matrix[k * r + j] -= c * self.matrix[k * r + i];
            }
        }
        for k in 0..r {
            self.matrix[k * r + i] = -self.matrix[k * r + i];
        }
    }

    fn column_negative(&self, j: usize) -> bool {
        let r = self.rank;
        (0..r)
            .map(|k| self.matrix[k * r + j])
            .find(|&x| x != 0)
            .is_some_and(|x| x < 0)
    }

    /// Recomputes a reduced word by peeling right descents, smallest index
    /// first.
    fn reduce(&mut self, rs: &RootSystem) {
        let mut cur = self.clone();
        let mut rev = Vec::new();
        while let Some(i) = (0..self.rank).find(|&i| cur.column_negative(i)) {
            cur.right_multiply_simple(rs, i);
            rev.push(i);
        }
        rev.reverse();
        self.word = rev;
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `l(w)`, the number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// A reduced word, zero-based.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i * self.rank + j]
    }

    pub fn matrix(&self) -> QMatrix {
        let r = self.rank;
        QMatrix::from_rows(
            r,
            (0..r)
                .map(|i| (0..r).map(|j| int(self.entry(i, j))).collect())
                .collect(),
        )
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn act(&self, v: &QVector) -> QVector {
        let r = self.rank;
        (0..r)
            .map(|i| {
                (0..r)
                    .filter(|&j| self.matrix[i * r + j] != 0)
                    .map(|j| int(self.matrix[i * r + j]) * &v[j])
                    .sum()
            })
            .collect()
    }

    /// `self * other`.
    pub fn compose(&self, rs: &RootSystem, other: &WeylElement) -> WeylElement {
        let r = self.rank;
        let mut matrix = vec![0; r * r];
        for i in 0..r {
            for k in 0..r {
                let a = self.matrix[i * r + k];
                if a == 0 {
                    continue;
                }
                for j in 0..r {
                    matrix[i * r + j] += a * other.matrix[k * r + j];
                }
            }
        }
        let mut w = WeylElement {
            rank: r,
            matrix,
            word: Vec::new(),
        };
        w.reduce(rs);
        w
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        let rev: Vec<usize> = self.word.iter().rev().copied().collect();
        WeylElement::from_word(rs, &rev)
    }

    /// Whether `w(alpha)` is a positive root, for `alpha` a root.
    pub fn maps_to_positive(&self, alpha: &QVector) -> bool {
        let img = self.act(alpha);
        img.iter()
            .find(|x| *x != &int(0))
            .is_some_and(|x| x > &int(0))
    }

    /// Reduced word with one-based indices, e.g. `s3 s4`.
    pub fn display_word(&self) -> String {
        if self.word.is_empty() {
            return "e".to_string();
        }
        self.word
            .iter()
            .map(|i| format!("s{}", i + 1))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_word())
    }
}

/// Longest element, built by right-multiplying by simple reflections while
/// that increases length.
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    let mut w = WeylElement::identity(rs.rank());
    while let Some(i) = (0..rs.rank()).find(|&i| !w.column_negative(i)) {
        w.right_multiply_simple(rs, i);
    }
    w.reduce(rs);
    w
}

/// Order of the Weyl group, from the type classification.
pub fn group_order(rs: &RootSystem) -> u128 {
    rs.factors()
        .iter()
        .map(|t| crate::rootsys::weyl_order(*t))
        .product()
}

/// The full Weyl group in a fixed order: by length, then lexicographically
/// by matrix entries within each length.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    index: HashMap<Vec<i64>, usize>,
    longest: usize,
}

impl WeylGroup {
    pub fn enumerate(rs: &RootSystem) -> Result<WeylGroup> {
        WeylGroup::enumerate_with_cap(rs, DEFAULT_WEYL_CAP)
    }

    pub fn enumerate_with_cap(rs: &RootSystem, cap: u128) -> Result<WeylGroup> {
        let size = group_order(rs);
        if size > cap {
            return Err(Error::WeylCapExceeded { size, cap });
        }
        let r = rs.rank();
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut elements = Vec::with_capacity(size as usize);
        let id = WeylElement::identity(r);
        index.insert(id.matrix.clone(), 0);
        elements.push(id);
        let mut layer_start = 0;
        while layer_start < elements.len() {
            let layer_end = elements.len();
            let mut next: Vec<WeylElement> = Vec::new();
            let mut seen: HashSet<Vec<i64>> = HashSet::new();
            for w in &elements[layer_start..layer_end] {
                for i in 0..r {
                    if w.column_negative(i) {
                        continue;
                    }
                    let mut v = w.clone();
                    v.right_multiply_simple(rs, i);
                    if seen.insert(v.matrix.clone()) {
                        v.word.push(i);
                        next.push(v);
                    }
                }
            }
            next.sort_by(|a, b| a.matrix.cmp(&b.matrix));
            for mut v in next {
                v.reduce(rs);
                index.insert(v.matrix.clone(), elements.len());
                elements.push(v);
            }
            layer_start = layer_end;
        }
        debug_assert_eq!(elements.len() as u128, size);
        let longest = elements.len() - 1;
        Ok(WeylGroup {
            elements,
            index,
            longest,
        })
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }

    pub fn position(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(&w.matrix).copied()
    }

    pub fn longest_index(&self) -> usize {
        self.longest
    }

    pub fn longest(&self) -> &WeylElement {
        &self.elements[self.longest]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        for (spec, n) in [("A2", 6), ("B4", 384), ("G2", 12), ("A1", 2), ("B2xA1", 16)] {
            let rs = RootSystem::build(spec).unwrap();
            let g = WeylGroup::enumerate(&rs).unwrap();
            assert_eq!(g.len(), n, "{spec}");
            assert_eq!(g.longest().length(), rs.num_positive());
        }
    }

    #[test]
    fn cap_is_checked_up_front() {
        let rs = RootSystem::build("E8").unwrap();
        assert!(matches!(
            WeylGroup::enumerate(&rs),
            Err(Error::WeylCapExceeded { .. })
        ));
    }

    #[test]
    fn reflection_of_fundamental_weight() {
        let rs = RootSystem::build("G2").unwrap();
        for i in 0..2 {
            let pi = &rs.fundamental_weights()[i];
            let s = WeylElement::simple(&rs, i);
            assert_eq!(s.act(pi), pi - &rs.simple_root(i));
        }
    }

    #[test]
    fn longest_elements() {
        let b4 = RootSystem::build("B4").unwrap();
        let w0 = longest_element(&b4);
        assert_eq!(w0.matrix(), {
            let mut m = QMatrix::identity(4);
            for row in m.rows.iter_mut() {
                *row = -row.clone();
            }
            m
        });
        let a2 = RootSystem::build("A2").unwrap();
        let w0 = longest_element(&a2);
        assert_eq!(w0.length(), 3);
        let pi = a2.fundamental_weights();
        assert_eq!(w0.act(&pi[0]), -&pi[1]);
    }

    #[test]
    fn lengths_and_inverses() {
        let rs = RootSystem::build("B3").unwrap();
        let g = WeylGroup::enumerate(&rs).unwrap();
        let w0 = g.longest();
        for w in g.elements() {
            let negs = rs
                .positive_roots()
                .iter()
                .filter(|a| !w.maps_to_positive(a))
                .count();
            assert_eq!(negs, w.length());
            assert_eq!(w.compose(&rs, w0).length(), w0.length() - w.length());
            let inv = w.inverse(&rs);
            assert!(w.compose(&rs, &inv).is_identity());
            assert_eq!(g.position(&inv).map(|i| g.get(i)), Some(&inv));
        }
    }

    #[test]
    fn closure_and_form() {
        let rs = RootSystem::build("A2").unwrap();
        let g = WeylGroup::enumerate(&rs).unwrap();
        let u = QVector::from_ints(&[3, -1]);
        let v = QVector::from_ints(&[1, 2]);
        for a in g.elements() {
            assert_eq!(rs.form(&a.act(&u), &a.act(&v)), rs.form(&u, &v));
            for b in g.elements() {
                assert!(g.position(&a.compose(&rs, b)).is_some());
            }
        }
    }
}
