//! Highest-root paths from 0 to w w0 chi for every qualifying pair on B2.
//!
//! Run: `cargo run --example highest_root_path -- [TYPE]`

use flagstab::ratlinalg::{int, QVector};
use flagstab::rootsys::RootSystem;
use flagstab::saturated::{build_path, enumerate_saturated, qualifies, verify_path};
use flagstab::weyl::WeylGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "B2".into());
    let rs = RootSystem::build(&spec)?;
    let group = WeylGroup::enumerate(&rs)?;
    let sats = enumerate_saturated(&rs)?;
    let chi = rs.from_fundamental(&(0..rs.rank()).map(|_| int(1)).collect::<QVector>());
    for w in group.elements() {
        for sat in sats.iter().filter(|s| !s.is_empty() && qualifies(&rs, s, w, &chi)) {
            let path = build_path(&rs, sat, w, &chi)?;
            println!("w = {w}, subsystem {}, N = {}", sat.label(), path.scale);
            for step in &path.steps {
                let beta = step.beta.map_or("-".to_string(), |b| rs.root(b).to_string());
                println!("  M = {}  beta = {beta}  k = {}", step.start, step.k);
            }
            println!("  end = {}  violations {}", path.end, verify_path(&rs, &path).len());
        }
    }
    Ok(())
}
