//! Builds the parametric equation of a locus, specializes it and checks the
//! group action on random members.
//!
//! `cargo run --example equations -- 5 10` for genus 5, case 10.

use hyperloci::classify::{row_for, Options};
use hyperloci::equations::{build_family, expand, specialize_ints, verify_family, EXPAND_CAP};

fn main() {
    let args: Vec<u32> = std::env::args().skip(1).map(|s| s.parse().expect("integer")).collect();
    let (g, id, n) = (args.first().copied().unwrap_or(5), args.get(1).copied().unwrap_or(10), args.get(2).copied());
    let row = row_for(id, n, g, &Options::default()).unwrap();
    let fam = build_family(&row).unwrap();
    println!("genus {g}, case {id}: {} with {} parameters", row.group_display(), fam.params);
    println!("{}", fam.render());
    if let Some(roots) = fam.render_roots_form() {
        println!("{roots}");
    }
    if let Ok(e) = expand(&fam, EXPAND_CAP) {
        println!("{}", e.render());
    }

    let values: Vec<i64> = (0..fam.params as i64).map(|k| 7 + 3 * k).collect();
    match specialize_ints(&fam, &values) {
        Ok(f) => println!("at {values:?}: y^2 = {}", f.render("x")),
        Err(e) => println!("at {values:?}: {e}"),
    }
    let report = verify_family(&fam, 20, 1).unwrap();
    println!("{} random members checked against {} generators", report.trials, report.generators);
}
