//! Computes a generator of the fixed field of each finite Möbius group from its
//! elements and matches it against the standard quotient map.
//!
//! `cargo run --example fixed_field`

use hyperloci::moebius::{
    fixed_field_generator, is_moebius_equivalent, lemma2_map, standard_embedding, verify_invariant, ReducedGroup,
};

fn main() {
    let groups = [
        (ReducedGroup::Cyclic, Some(4)),
        (ReducedGroup::Dihedral, Some(3)),
        (ReducedGroup::A4, None),
        (ReducedGroup::S4, None),
        (ReducedGroup::A5, None),
    ];
    for (g, n) in groups {
        let h = standard_embedding(g, n).unwrap();
        let gens: Vec<String> = h.generators().iter().map(|m| m.to_string()).collect();
        println!("{} (order {}), generated by {}", g.display(n), h.order(), gens.join(", "));
        println!("  element orders: {:?}", h.order_statistics());
        let generated = fixed_field_generator(&h).unwrap();
        let standard = lemma2_map(g, n).unwrap();
        assert!(verify_invariant(&generated, &h));
        if generated.degree() <= 12 {
            println!("  fixed field generator: {generated}");
        }
        match is_moebius_equivalent(&generated, &standard) {
            Some(m) => println!("  standard map = {m} applied to the generator"),
            None => println!("  not Moebius equivalent to the standard map"),
        }
    }
}
