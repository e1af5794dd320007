//! On A2 with chi = 2 pi_1 + pi_2 the element s2 w0 is unstable and the
//! unstable locus has codimension one.
//!
//! Run: `cargo run --example a2_counterexample`

use flagstab::ratlinalg::QVector;
use flagstab::rootsys::RootSystem;
use flagstab::stability::{analyze, is_semistable, lemma_1_10_values, mu};
use flagstab::weyl::{WeylElement, WeylGroup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rs = RootSystem::build("A2")?;
    let group = WeylGroup::enumerate(&rs)?;
    let chi = rs.from_fundamental(&QVector::from_ints(&[2, 1]));

    let report = analyze(&rs, &group, &chi)?;
    println!("W^st:");
    for &i in &report.wst {
        println!("  {}", group.get(i));
    }
    println!("unstable codimension {}", report.unstable_codim);

    let s2w0 = WeylElement::simple(&rs, 1).compose(&rs, group.longest());
    let lambda = rs.from_fundamental(&QVector::from_ints(&[1, 1]));
    println!(
        "s2 w0 = {s2w0}: semistable {}, (s2 w0 chi, rho) = {}",
        is_semistable(&chi, &s2w0),
        mu(&rs, &chi, &s2w0, &lambda)?
    );
    let values: Vec<String> = lemma_1_10_values(&rs).iter().map(|v| v.to_string()).collect();
    println!("(pi_i, pi_i) - (alpha_i, alpha_i)/2 = {}", values.join(", "));
    Ok(())
}
