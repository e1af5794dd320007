//! Root data for a few types: Gram matrix, roots, highest roots and the
//! fundamental weights in epsilon coordinates where available.
//!
//! Run: `cargo run --example root_systems -- [TYPE ...]`

use flagstab::rootsys::RootSystem;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut specs: Vec<String> = std::env::args().skip(1).collect();
    if specs.is_empty() {
        specs = ["A2", "B2", "G2", "B4", "A1xB2"].map(String::from).to_vec();
    }
    for spec in &specs {
        let rs = RootSystem::build(spec)?;
        println!("{spec}: rank {}, {} positive roots", rs.rank(), rs.num_positive());
        let gram: Vec<String> = (0..rs.rank()).map(|i| rs.gram().column(i).to_string()).collect();
        println!("  Gram matrix {}", gram.join(" "));
        for h in rs.highest_roots() {
            println!("  highest root {h}");
        }
        for (i, p) in rs.fundamental_weights().iter().enumerate() {
            let eps = if rs.has_epsilon_basis() { format!("  eps {}", rs.to_epsilon(p)?) } else { String::new() };
            println!("  pi_{} = {p}{eps}", i + 1);
        }
    }
    Ok(())
}
