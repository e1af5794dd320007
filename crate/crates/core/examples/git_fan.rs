//! GIT fans of small root systems, validated, with an SVG for one rank-2 case.
//!
//! Run: `cargo run --release --example git_fan -- [TYPE ...]`

use flagstab::gitfan::{compute_fan, fan_svg, validate_fan, ValidateOptions};
use flagstab::rootsys::RootSystem;
use flagstab::weyl::WeylGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut specs: Vec<String> = std::env::args().skip(1).collect();
    if specs.is_empty() {
        specs = ["A2", "B2", "G2", "A3"].map(String::from).to_vec();
    }
    for spec in &specs {
        let rs = RootSystem::build(spec)?;
        let group = WeylGroup::enumerate(&rs)?;
        let start = std::time::Instant::now();
        let fan = compute_fan(&rs, &group, false)?;
        let report = validate_fan(&rs, &group, &fan, &ValidateOptions::default())?;
        println!(
            "{spec}: {} walls, {} chambers, {} maximal cones, valid = {} ({:.2?})",
            fan.walls.len(),
            fan.arrangement_chambers,
            fan.cones.len(),
            report.passed(),
            start.elapsed()
        );
        for (k, cone) in fan.cones.iter().enumerate() {
            let sample: Vec<String> = cone.sample.iter().map(|c| c.to_string()).collect();
            println!("  cone {k}: sample ({}), |W^st| = {}", sample.join(", "), cone.fingerprint.len());
        }
        if rs.rank() == 2 && spec == "G2" {
            let path = std::env::temp_dir().join("flagstab_g2_fan.svg");
            std::fs::write(&path, fan_svg(&rs, &fan)?)?;
            println!("  wrote {}", path.display());
        }
    }
    Ok(())
}
