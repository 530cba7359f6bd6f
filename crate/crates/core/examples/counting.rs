//! Counting formulas for cyclic and dihedral loci beside the enumerated counts.
//!
//! `cargo run --example counting`

use hyperloci::classify::count_formulas;

fn main() {
    println!("g    n1  Z   n2  D   A4 S4 A5");
    for g in 2..=20 {
        let r = count_formulas(g).unwrap();
        let c: Vec<usize> = r.enumerated.iter().map(|(_, c)| *c).collect();
        println!("{g:<4} {:<3} {:<3} {:<3} {:<3} {:<2} {:<2} {}", r.n1_formula, c[0], r.n2_formula, c[1], c[2], c[3], c[4]);
    }
}
