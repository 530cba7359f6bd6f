//! Exact arithmetic in cyclotomic fields.
//!
//! `cargo run --example cyclotomic`

use hyperloci::exactnum::{rat, CycNum};
use hyperloci::text::parse_constant;

fn main() {
    let zeta5 = CycNum::zeta(5, 1);
    // 1 + 2(ζ + ζ⁴) = √5
    let s = &CycNum::one() + &(&(&zeta5 + &zeta5.pow(4)) * &CycNum::from_int(2));
    println!("1 + 2(z5 + z5^4) = {s}");
    println!("equals sqrt5: {}", s == CycNum::sqrt5());

    let phi = &(&CycNum::one() + &CycNum::sqrt5()) * &CycNum::from_frac(1, 2);
    println!("phi = {phi}, phi^2 - phi - 1 = {}", &(&phi.pow(2) - &phi) - &CycNum::one());
    println!("1/phi = {}", phi.inv().unwrap());

    let w = parse_constant("6*I*sqrt3").unwrap();
    println!("w = {w}, conductor {}, minimal conductor {}", w.conductor(), w.minimal().conductor());
    println!("w * conj(w) = {}, norm {}", &w * &w.conj(), w.norm());
    println!("galois(-1) of w = {}", w.galois(-1));
    println!("w in Q(zeta_60) = {}", w.embed(60).unwrap());

    println!("w ~ {}", w.approx(10).unwrap());
    println!("7/3 is rational: {}", CycNum::from_rat(rat(7, 3)).is_rational());
}
