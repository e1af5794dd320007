//! Saturated root subsystems of a root system, by type and dimension.
//!
//! Run: `cargo run --example saturated -- [TYPE]`

use flagstab::rootsys::RootSystem;
use flagstab::saturated::enumerate_saturated;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "B3".into());
    let rs = RootSystem::build(&spec)?;
    let sats = enumerate_saturated(&rs)?;
    println!("{spec}: {} saturated subsystems", sats.len());
    for (i, s) in sats.iter().enumerate() {
        let highest: Vec<String> = s.highest_roots().iter().map(|&h| rs.root(h).to_string()).collect();
        println!(
            "  #{i:<3} dim {} {:<8} {} positive roots, highest {}",
            s.span.dim(),
            s.label(),
            s.positive.len(),
            highest.join(" ")
        );
    }
    Ok(())
}
