//! Seshadri's numerical function, the semistable Weyl set `W^st_chi`, the
//! GIT cone of a weight and the codimension of the unstable locus.
//!
//! Weights are passed in simple-root coordinates. Cones of weights
//! ([`git_cone`]) live in fundamental-weight coordinates, where the Weyl
//! chamber is the positive orthant.

use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ratlinalg::{cone_member, ConeH, ConeMembership, QVector, Rat};
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::{WeylElement, WeylGroup};

/// `mu(x, lambda) = (w chi, lambda)` for a point `x` in the cell of `w`.
pub fn mu(rs: &RootSystem, chi: &QVector, w: &WeylElement, lambda: &QVector) -> Result<Rat> {
    rs.check_strictly_dominant(chi)?;
    let a = rs.to_fundamental(lambda);
    if let Some(index) = (0..rs.rank()).find(|&i| a[i].is_negative()) {
        return Err(Error::LambdaOutsideChamber { index });
    }
    Ok(rs.form(&w.act(chi), lambda))
}

/// `w` is semistable for `chi` iff `-w chi` is a nonnegative combination of
/// simple roots. In simple-root coordinates this is a sign test.
pub fn is_semistable(chi: &QVector, w: &WeylElement) -> bool {
    w.act(chi).iter().all(|c| !c.is_positive())
}

/// The same test as [`is_semistable`], run through the cone LP so that the
/// answer carries a certificate.
pub fn semistability_certificate(rs: &RootSystem, chi: &QVector, w: &WeylElement) -> ConeMembership {
    cone_member(&-w.act(chi), &rs.simple_roots())
}

/// Independent form of the definition: `(w chi, pi_j) <= 0` for every
/// fundamental weight, the generators of the chamber.
pub fn is_semistable_by_chamber(rs: &RootSystem, chi: &QVector, w: &WeylElement) -> bool {
    let wchi = w.act(chi);
    rs.fundamental_weights()
        .iter()
        .all(|p| !rs.form(&wchi, p).is_positive())
}

/// Indices (in the group's enumeration order) of the elements of `W^st_chi`.
pub fn wst(rs: &RootSystem, group: &WeylGroup, chi: &QVector) -> Result<Vec<usize>> {
    rs.check_strictly_dominant(chi)?;
    Ok(wst_unchecked(group, chi))
}

pub(crate) fn wst_unchecked(group: &WeylGroup, chi: &QVector) -> Vec<usize> {
    group
        .elements()
        .par_iter()
        .enumerate()
        .filter(|(_, w)| is_semistable(chi, w))
        .map(|(i, _)| i)
        .collect()
}

/// `|Delta+| - max { l(w) : w not in W^st_chi }`, the codimension of the
/// unstable locus in `G/B`.
pub fn unstable_codimension(rs: &RootSystem, group: &WeylGroup, chi: &QVector) -> Result<usize> {
    rs.check_strictly_dominant(chi)?;
    let max_unstable = group
        .elements()
        .par_iter()
        .filter(|w| !is_semistable(chi, w))
        .map(|w| w.length())
        .max()
        .expect("the identity is never semistable");
    Ok(rs.num_positive() - max_unstable)
}

/// Inequality description, in fundamental coordinates, of the cone
/// `sigma_chi = C ∩ ⋂ { wA : chi in wA }` with `A` the cone of the positive
/// roots. Redundant inequalities are removed.
pub fn git_cone(rs: &RootSystem, group: &WeylGroup, chi: &QVector) -> Result<ConeH> {
    rs.check_strictly_dominant(chi)?;
    let r = rs.rank();
    let pis = rs.fundamental_weights();
    // x in wA iff (w pi_k, x) >= 0 for all k.
    let mut normals: Vec<QVector> = (0..r).map(|i| QVector::unit(r, i)).collect();
    let extra: Vec<Vec<QVector>> = group
        .elements()
        .par_iter()
        .filter_map(|w| {
            let images: Vec<QVector> = pis.iter().map(|p| w.act(p)).collect();
            if images.iter().any(|u| rs.form(u, chi).is_negative()) {
                return None;
            }
            Some(images.iter().map(|u| fundamental_functional(rs, u)).collect())
        })
        .collect();
    normals.extend(extra.into_iter().flatten());
    ConeH::new(r, normals).irredundant()
}

/// Coefficients of `a -> (u, sum_i a_i pi_i)`.
pub(crate) fn fundamental_functional(rs: &RootSystem, u: &QVector) -> QVector {
    rs.fundamental_weights().iter().map(|p| rs.form(p, u)).collect()
}

/// `(pi_i, pi_i) - (alpha_i, alpha_i) / 2` for each simple root.
pub fn lemma_1_10_values(rs: &RootSystem) -> Vec<Rat> {
    rs.fundamental_weights()
        .iter()
        .enumerate()
        .map(|(i, p)| rs.form(p, p) - rs.half_norm(i))
        .collect()
}

/// Everything the `wst` command reports for one weight.
#[derive(Clone, Debug, Serialize)]
pub struct StabilityReport {
    pub chi: Weight,
    /// Indices into the Weyl group enumeration.
    pub wst: Vec<usize>,
    pub unstable_codim: usize,
    /// `sigma_chi` in fundamental coordinates.
    pub sigma: ConeH,
    /// No simple factor of type A.
    pub lemma_1_10_applicable: bool,
}

pub fn analyze(rs: &RootSystem, group: &WeylGroup, chi: &QVector) -> Result<StabilityReport> {
    Ok(StabilityReport {
        chi: Weight::fundamental(rs.to_fundamental(chi)),
        wst: wst(rs, group, chi)?,
        unstable_codim: unstable_codimension(rs, group, chi)?,
        sigma: git_cone(rs, group, chi)?,
        lemma_1_10_applicable: !rs.has_type_a_factor(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlinalg::{int, rat, relative_interior_point};

    fn setup(spec: &str) -> (RootSystem, WeylGroup) {
        let rs = RootSystem::build(spec).unwrap();
        let g = WeylGroup::enumerate(&rs).unwrap();
        (rs, g)
    }

    fn fund(rs: &RootSystem, a: &[i64]) -> QVector {
        rs.from_fundamental(&QVector::from_ints(a))
    }

    #[test]
    fn a2_counterexample() {
        let (rs, g) = setup("A2");
        let chi = fund(&rs, &[2, 1]);
        let w0 = g.longest();
        let s2w0 = WeylElement::simple(&rs, 1).compose(&rs, w0);
        assert!(!is_semistable(&chi, &s2w0));
        let pi2 = rs.fundamental_weights()[1].clone();
        assert_eq!(mu(&rs, &chi, &s2w0, &pi2).unwrap(), rat(1, 3));
        assert_eq!(unstable_codimension(&rs, &g, &chi).unwrap(), 1);
        let s1w0 = WeylElement::simple(&rs, 0).compose(&rs, w0);
        assert!(is_semistable(&chi, &s1w0));
    }

    #[test]
    fn identity_and_longest() {
        let (rs, g) = setup("B2");
        let chi = fund(&rs, &[1, 1]);
        let set = wst(&rs, &g, &chi).unwrap();
        assert!(set.contains(&g.longest_index()));
        assert!(!set.contains(&0));
        let cert = semistability_certificate(&rs, &chi, g.longest());
        assert!(cert.is_member());
        assert!(cert.verify(&-g.longest().act(&chi), &rs.simple_roots()));
        assert!(mu(&rs, &chi, g.get(0), &chi).unwrap() > int(0));
        assert!(mu(&rs, &chi, g.longest(), &fund(&rs, &[3, 1])).unwrap() <= int(0));
    }

    #[test]
    fn b2_semistable_set_and_codimension() {
        let (rs, g) = setup("B2");
        let chi = fund(&rs, &[1, 1]);
        let set = wst(&rs, &g, &chi).unwrap();
        let words: Vec<String> = set.iter().map(|&i| g.get(i).display_word()).collect();
        // Brute-force signs of w chi over all eight elements.
        let brute: Vec<String> = g
            .elements()
            .iter()
            .filter(|w| w.act(&chi).iter().all(|c| c <= &int(0)))
            .map(|w| w.display_word())
            .collect();
        assert_eq!(words, brute);
        assert_eq!(words.len(), 3);
        assert_eq!(unstable_codimension(&rs, &g, &chi).unwrap(), 2);
    }

    #[test]
    fn lambda_outside_chamber() {
        let (rs, g) = setup("A2");
        let chi = fund(&rs, &[2, 1]);
        let lam = fund(&rs, &[1, -1]);
        assert_eq!(mu(&rs, &chi, g.get(0), &lam), Err(Error::LambdaOutsideChamber { index: 1 }));
    }

    #[test]
    fn lemma_values() {
        let b2 = RootSystem::build("B2").unwrap();
        assert_eq!(lemma_1_10_values(&b2), vec![int(0), int(0)]);
        let a2 = RootSystem::build("A2").unwrap();
        assert_eq!(lemma_1_10_values(&a2), vec![rat(-1, 3), rat(-1, 3)]);
        let g2 = RootSystem::build("G2").unwrap();
        assert!(lemma_1_10_values(&g2).iter().all(|v| v >= &int(0)));
    }

    #[test]
    fn git_cone_of_a2() {
        let (rs, g) = setup("A2");
        let c1 = git_cone(&rs, &g, &fund(&rs, &[2, 1])).unwrap();
        let c2 = git_cone(&rs, &g, &fund(&rs, &[3, 1])).unwrap();
        assert_eq!(c1, c2);
        assert_eq!(
            wst(&rs, &g, &fund(&rs, &[2, 1])).unwrap(),
            wst(&rs, &g, &fund(&rs, &[3, 1])).unwrap()
        );
        let p = relative_interior_point(&c1).unwrap();
        let x = rs.from_fundamental(&p);
        assert_eq!(wst(&rs, &g, &x).unwrap(), wst(&rs, &g, &fund(&rs, &[2, 1])).unwrap());
        assert!(c1.strictly_contains(&QVector::from_ints(&[2, 1])));
        let other = git_cone(&rs, &g, &fund(&rs, &[1, 2])).unwrap();
        assert_ne!(other, c1);
        assert_eq!(
            git_cone(&rs, &g, &fund(&rs, &[0, 1])),
            Err(Error::OnChamberWall { index: 0 })
        );
    }

    #[test]
    fn chamber_test_agrees() {
        for spec in ["A2", "B2", "G2", "B3"] {
            let (rs, g) = setup(spec);
            let chi = rs.from_fundamental(&(0..rs.rank()).map(|i| int(i as i64 + 2)).collect());
            for w in g.elements() {
                assert_eq!(is_semistable(&chi, w), is_semistable_by_chamber(&rs, &chi, w));
            }
        }
    }
}
