//! Lists the automorphism-group loci in a given genus.
//!
//! `cargo run --example classify -- 4`

use hyperloci::classify::{enumerate_loci, markdown_table};

fn main() {
    let g: u32 = std::env::args().nth(1).map_or(4, |s| s.parse().expect("genus"));
    let rows = enumerate_loci(g).unwrap();
    print!("{}", markdown_table(&rows));
    let top = rows.iter().max_by_key(|r| r.order).unwrap();
    println!("\n{} loci; largest group {} of order {}", rows.len(), top.group_display(), top.order);
}
