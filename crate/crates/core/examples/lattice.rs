//! The inclusion lattice of automorphism groups in a given genus.
//!
//! `cargo run --example lattice -- 4`, pipe through `dot` with `--dot`.

use hyperloci::classify::Options;
use hyperloci::lattice::build_lattice;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let g: u32 = args.iter().find_map(|s| s.parse().ok()).unwrap_or(4);
    let lat = build_lattice(g, &Options::default()).unwrap();
    if args.iter().any(|a| a == "--dot") {
        print!("{}", lat.to_dot());
        return;
    }
    for (delta, ids) in lat.levels().iter().rev() {
        let names: Vec<&str> = ids.iter().map(|&i| lat.nodes[i].name.as_str()).collect();
        println!("dimension {delta}: {}", names.join(", "));
    }
    for (a, b) in lat.edge_names() {
        println!("{a} < {b}");
    }
}
