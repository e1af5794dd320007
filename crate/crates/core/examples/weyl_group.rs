//! Weyl group enumeration with reduced words and the longest element.
//!
//! Run: `cargo run --example weyl_group -- [TYPE]`

use flagstab::rootsys::RootSystem;
use flagstab::weyl::WeylGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "B2".into());
    let rs = RootSystem::build(&spec)?;
    let group = WeylGroup::enumerate(&rs)?;
    println!("W({spec}) has {} elements", group.len());
    for (i, w) in group.elements().iter().enumerate() {
        println!("  #{i:<3} length {}  {w}", w.length());
    }
    let w0 = group.longest();
    println!("w0 = {w0}, length {} = number of positive roots", w0.length());
    Ok(())
}
