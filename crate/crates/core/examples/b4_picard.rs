//! Picard rank of the quotient for B4 and chi = 10 pi_1 + pi_2 + 8 pi_3 + 2 pi_4.
//!
//! Run: `cargo run --release --example b4_picard`

use flagstab::picard::{open_cell_constraints, picard_certificate, split_mu};
use flagstab::ratlinalg::QVector;
use flagstab::rootsys::RootSystem;
use flagstab::saturated::{enumerate_saturated, spans_containing};
use flagstab::weyl::WeylGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let start = std::time::Instant::now();
    let rs = RootSystem::build("B4")?;
    let group = WeylGroup::enumerate(&rs)?;
    let sats = enumerate_saturated(&rs)?;
    let chi = rs.from_fundamental(&QVector::from_ints(&[10, 1, 8, 2]));

    let w0chi = group.longest().act(&chi);
    let labels: Vec<String> = spans_containing(&w0chi, &sats).into_iter().map(|i| sats[i].label()).collect();
    println!("saturated spans through w0 chi: {}", labels.join(", "));
    let open = open_cell_constraints(&rs, &group, &sats, &chi)?;
    for v in open.vectors() {
        println!("  open cell direction {} (eps {})", v, rs.to_epsilon(v)?);
    }

    let cert = picard_certificate(&rs, &group, &sats, &chi)?;
    println!(
        "{} constrained elements, {} rows ({} before dedup)",
        cert.profiles.len(),
        cert.constraints.nrows(),
        cert.raw_rows
    );
    for v in &cert.nullspace {
        let (mu0, mu1) = split_mu(v);
        println!("  kernel vector mu0 = {mu0}, mu1 = {mu1}");
    }
    println!("Picard rank {} ({:.2?})", cert.rank, start.elapsed());
    Ok(())
}
