//! Resultants, discriminants, squarefree decomposition and roots.
//!
//! `cargo run --example polynomials`

use hyperloci::polyalg::{discriminant, is_squarefree, numeric_roots, resultant, roots_in_field, squarefree_decomposition};
use hyperloci::text::parse_poly;

fn main() {
    let a = parse_poly("x^3 - 2*x + 1", "x").unwrap();
    let b = parse_poly("x^2 + 3", "x").unwrap();
    println!("Res({}, {}) = {}", a.render("x"), b.render("x"), resultant(&a, &b));
    println!("disc({}) = {}", a.render("x"), discriminant(&a));

    let f = parse_poly("(x - 1)^3*(x^2 + 1)^2*(x + 2)", "x").unwrap();
    println!("f = {}", f.render("x"));
    println!("squarefree: {}", is_squarefree(&f));
    for (k, p) in &squarefree_decomposition(&f).parts {
        println!("  multiplicity {k}: {}", p.render("x"));
    }

    let q = parse_poly("x^2 + 108", "x").unwrap();
    let roots = roots_in_field(&q, 12).unwrap();
    println!("roots of {}: {}", q.render("x"), roots.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(", "));
    for z in numeric_roots(&parse_poly("x^5 - x - 1", "x").unwrap()) {
        println!("  x^5 - x - 1 root ~ {:.6} {:+.6}i", z.re, z.im);
    }
}
