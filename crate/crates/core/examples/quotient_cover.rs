//! Quotient maps of the finite Möbius groups, with branch points and fibers.
//!
//! `cargo run --example quotient_cover -- D 5`, or `A4`, `S4`, `A5`, `Z 7`.

use hyperloci::moebius::{cover_data, ReducedGroup};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let label = args.first().map_or("D", String::as_str);
    let group = match label {
        "Z" => ReducedGroup::Cyclic,
        "D" => ReducedGroup::Dihedral,
        "A4" => ReducedGroup::A4,
        "S4" => ReducedGroup::S4,
        "A5" => ReducedGroup::A5,
        other => panic!("unknown group {other}"),
    };
    let n = group.is_parametric().then(|| args.get(1).map_or(5, |s| s.parse().expect("n")));

    let cover = cover_data(group, n).unwrap();
    println!("{}: phi(x) = {}", group.display(n), cover.map);
    for (q, f) in cover.branch_points.iter().zip(&cover.fibers) {
        let inf = if f.contains_infinity { " and infinity" } else { "" };
        println!("over {q}: ramification {}, {} points: {}{inf}", f.index, f.size(), f.poly.render("x"));
    }
}
