//! Exact cone tools: membership with certificates, both cone descriptions
//! and a ray shot through an affine cone.
//!
//! Run: `cargo run --example cone_lp`

use flagstab::ratlinalg::{cone_member, dual_description, AffCone, ConeMembership, QVector, RayHit};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let gens = vec![
        QVector::from_ints(&[1, 0, 0]),
        QVector::from_ints(&[1, 1, 0]),
        QVector::from_ints(&[1, 1, 1]),
    ];
    for target in [QVector::from_ints(&[3, 2, 1]), QVector::from_ints(&[1, 2, 0])] {
        match cone_member(&target, &gens) {
            ConeMembership::Member { coefficients } => {
                let c: Vec<String> = coefficients.iter().map(|c| c.to_string()).collect();
                println!("{target} = combination with coefficients ({})", c.join(", "));
            }
            ConeMembership::Separated { functional } => {
                println!("{target} separated by {functional}");
            }
        }
    }

    let h = dual_description(3, &gens)?;
    for n in &h.normals {
        println!("facet normal {n}");
    }
    for r in h.generators()?.rays {
        println!("ray {r}");
    }

    // (1, 0, -1) is the vertex plus the sum of the generators, an interior point.
    let cone = AffCone::new(QVector::from_ints(&[-2, -2, -2]), gens);
    let start = QVector::from_ints(&[1, 0, -1]);
    if let RayHit::Boundary { t, point, face, .. } = cone.ray_hit_boundary(&start, &QVector::from_ints(&[-1, 0, 0]))? {
        println!("ray leaves at t = {t}, point {point}, face generators {face:?}");
    }
    Ok(())
}
