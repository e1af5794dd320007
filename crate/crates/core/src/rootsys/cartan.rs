//! Type specs and the invariant form on simple roots for each Cartan type.

use crate::error::{Error, Result};
use crate::ratlinalg::{int, rat, QMatrix, QVector, Rat};

/// One irreducible factor, e.g. `B4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: char,
    pub rank: usize,
}

impl std::fmt::Display for CartanType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Parses `TYPE RANK (x TYPE RANK)*`, case-insensitively; whitespace is
/// ignored.
pub fn parse_type_spec(spec: &str) -> Result<Vec<CartanType>> {
    let fail = |reason: &str| Error::TypeSpec {
        spec: spec.to_string(),
        reason: reason.to_string(),
    };
    let compact: String = spec
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .to_ascii_uppercase();
    if compact.is_empty() {
        return Err(fail("empty"));
    }
    compact
        .split('X')
        .map(|part| {
            let mut chars = part.chars();
            let family = chars.next().ok_or_else(|| fail("empty factor"))?;
            if !('A'..='G').contains(&family) {
                return Err(fail(&format!("unknown family {family:?}")));
            }
            let digits: String = chars.collect();
            let rank: usize = digits
                .parse()
                .map_err(|_| fail(&format!("bad rank {digits:?}")))?;
            let ok = match family {
                'A' => rank >= 1,
                'B' => rank >= 2,
                'C' => rank >= 3,
                'D' => rank >= 4,
                'E' => (6..=8).contains(&rank),
                'F' => rank == 4,
                'G' => rank == 2,
                _ => unreachable!(),
            };
            if !ok {
                return Err(Error::UnsupportedRank { family, rank });
            }
            Ok(CartanType { family, rank })
        })
        .collect()
}

/// Gram matrix of the simple roots (Bourbaki numbering), long roots of
/// squared length 2.
pub fn gram_matrix(t: CartanType) -> QMatrix {
    let n = t.rank;
    let mut g = vec![vec![Rat::from_integer(0.into()); n]; n];
    let mut set = |i: usize, j: usize, v: Rat| {
        g[i][j] = v.clone();
        g[j][i] = v;
    };
    match t.family {
        'A' => {
            for i in 0..n {
                set(i, i, int(2));
                if i + 1 < n {
                    set(i, i + 1, int(-1));
                }
            }
        }
        'B' => {
            for i in 0..n {
                set(i, i, if i + 1 == n { int(1) } else { int(2) });
                if i + 1 < n {
                    set(i, i + 1, int(-1));
                }
            }
        }
        'C' => {
            for i in 0..n {
                set(i, i, if i + 1 == n { int(2) } else { int(1) });
            }
            for i in 0..n - 1 {
                set(i, i + 1, if i + 2 == n { int(-1) } else { rat(-1, 2) });
            }
        }
        'D' => {
            for i in 0..n {
                set(i, i, int(2));
            }
            for i in 0..n - 2 {
                set(i, i + 1, int(-1));
            }
            set(n - 3, n - 1, int(-1));
        }
        'E' => {
            for i in 0..n {
                set(i, i, int(2));
            }
            // 1-3-4-5-6(-7-8) with 2 attached to 4, zero-based.
            set(0, 2, int(-1));
            set(1, 3, int(-1));
            for i in 2..n - 1 {
                set(i, i + 1, int(-1));
            }
        }
        'F' => {
            set(0, 0, int(2));
            set(1, 1, int(2));
            set(2, 2, int(1));
            set(3, 3, int(1));
            set(0, 1, int(-1));
            set(1, 2, int(-1));
            set(2, 3, rat(-1, 2));
        }
        'G' => {
            set(0, 0, rat(2, 3));
            set(1, 1, int(2));
            set(0, 1, int(-1));
        }
        _ => unreachable!("validated by the parser"),
    }
    QMatrix::from_rows(n, g.into_iter().map(QVector).collect())
}

/// Simple roots in epsilon coordinates for the classical families, together
/// with the scale of the form relative to the standard dot product.
pub fn epsilon_frame(t: CartanType) -> Option<(QMatrix, Rat)> {
    let n = t.rank;
    let (ambient, scale) = match t.family {
        'A' => (n + 1, int(1)),
        'B' | 'D' => (n, int(1)),
        'C' => (n, rat(1, 2)),
        _ => return None,
    };
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut v = QVector::zeros(ambient);
        let last = i + 1 == n;
        match (t.family, last) {
            ('B', true) => v[i] = int(1),
            ('C', true) => v[i] = int(2),
            ('D', true) => {
                v[n - 2] = int(1);
                v[n - 1] = int(1);
            }
            _ => {
                v[i] = int(1);
                v[i + 1] = int(-1);
            }
        }
        rows.push(v);
    }
    Some((QMatrix::from_rows(ambient, rows), scale))
}

/// Order of the Weyl group of one factor.
pub fn weyl_order(t: CartanType) -> u128 {
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    match t.family {
        'A' => fact(t.rank + 1),
        'B' | 'C' => (1u128 << t.rank) * fact(t.rank),
        'D' => (1u128 << (t.rank - 1)) * fact(t.rank),
        'E' => match t.rank {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        'F' => 1152,
        'G' => 12,
        _ => unreachable!(),
    }
}
