//! Linear constraints on `(mu_0, mu_1)` and the rank of
//! `Pic(X^ss // T)` over `Q`.
//!
//! The unknown `(mu_0, mu_1)` has `2r` simple-root coordinates. For each `w`
//! with `w w0` semistable, `w w0 mu_0 + mu_1` must lie in `L_w`, the
//! intersection of the spans of the qualifying saturated subsystems.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::ratlinalg::{QMatrix, QVector, Subspace};
use crate::rootsys::{RootSystem, Weight};
use crate::saturated::{span_profile, spans_containing, SaturatedSubsystem};
use crate::stability::wst;
use crate::weyl::{WeylElement, WeylGroup};

/// `L_w` for one Weyl element and the normals it contributes.
#[derive(Clone, Debug, Serialize)]
pub struct Profile {
    #[serde(skip)]
    pub w: WeylElement,
    /// Reduced word of `w`, zero-based.
    pub word: Vec<usize>,
    pub span: Subspace,
    /// Basis of the complement of `L_w` for the invariant form.
    pub complement: Vec<QVector>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PicardCertificate {
    pub chi: Weight,
    /// Rows are functionals on `(mu_0, mu_1)`, deduplicated up to scaling.
    pub constraints: QMatrix,
    /// Number of rows before deduplication.
    pub raw_rows: usize,
    /// Only elements with a proper `L_w`.
    pub profiles: Vec<Profile>,
    pub nullspace: Vec<QVector>,
    pub rank: usize,
    /// Set when some simple factor has type A.
    pub an_caveat: bool,
}

/// Rows `mu -> (n, w w0 mu_0) + (n, mu_1)` for every complement vector `n`.
pub fn constraint_rows(rs: &RootSystem, ww0: &WeylElement, complement: &[QVector]) -> Vec<QVector> {
    let m = ww0.matrix();
    complement
        .iter()
        .map(|n| {
            let f = rs.functional(n);
            let mut row = m.vec_mul(&f).0;
            row.extend(f.0);
            QVector(row)
        })
        .collect()
}

/// Builds the constraint system and its rank.
pub fn picard_certificate(
    rs: &RootSystem,
    group: &WeylGroup,
    sats: &[SaturatedSubsystem],
    chi: &QVector,
) -> Result<PicardCertificate> {
    let r = rs.rank();
    let semistable = wst(rs, group, chi)?;
    let w0 = group.longest();
    let profiles: Vec<Profile> = semistable
        .par_iter()
        .map(|&v| -> Result<Option<Profile>> {
            let w = group.get(v).compose(rs, w0);
            let span = span_profile(rs, &w, chi, sats)?;
            if span.is_full() {
                return Ok(None);
            }
            let complement = span.complement_wrt(rs.gram()).vectors().to_vec();
            Ok(Some(Profile {
                word: w.word().to_vec(),
                w,
                span,
                complement,
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    let mut raw_rows = 0;
    let mut rows = BTreeSet::new();
    for p in &profiles {
        let ww0 = p.w.compose(rs, w0);
        for row in constraint_rows(rs, &ww0, &p.complement) {
            raw_rows += 1;
            rows.insert(row.canonical_line());
        }
    }
    let constraints = QMatrix::from_rows(2 * r, rows.into_iter().collect());
    let nullspace = if constraints.nrows() == 0 {
        (0..2 * r).map(|i| QVector::unit(2 * r, i)).collect()
    } else {
        constraints.nullspace()
    };
    Ok(PicardCertificate {
        chi: Weight::fundamental(rs.to_fundamental(chi)),
        rank: 2 * r - constraints.rank(),
        constraints,
        raw_rows,
        profiles,
        nullspace,
        an_caveat: rs.has_type_a_factor(),
    })
}

pub fn picard_rank(rs: &RootSystem, group: &WeylGroup, sats: &[SaturatedSubsystem], chi: &QVector) -> Result<usize> {
    Ok(picard_certificate(rs, group, sats, chi)?.rank)
}

/// Intersection of the spans that contain `w0 chi`; the open-cell view of
/// the constraint on `w0 mu_0 + mu_1`.
pub fn open_cell_constraints(rs: &RootSystem, group: &WeylGroup, sats: &[SaturatedSubsystem], chi: &QVector) -> Result<Subspace> {
    rs.check_strictly_dominant(chi)?;
    let w0chi = group.longest().act(chi);
    spans_containing(&w0chi, sats)
        .into_iter()
        .try_fold(Subspace::full(rs.rank()), |acc, i| acc.intersect(&sats[i].span))
}

/// Splits a vector of the `2r`-dimensional unknown into `(mu_0, mu_1)`.
pub fn split_mu(v: &QVector) -> (QVector, QVector) {
    let r = v.dim() / 2;
    (QVector(v.0[..r].to_vec()), QVector(v.0[r..].to_vec()))
}
