//! Finite groups from presentations and their isomorphism and embedding tests.
//!
//! `cargo run --example groups`

use hyperloci::grouptheory::{
    coset_enumerate, construct, find_monomorphism, is_isomorphic, presentation, printed_presentation, Family, COSET_CAP,
};

fn main() {
    for (f, n) in [(Family::V, Some(4)), (Family::H, Some(3)), (Family::G, Some(4)), (Family::U, Some(6)), (Family::W2, None)] {
        let p = presentation(f, n).unwrap();
        let g = coset_enumerate(&p, COSET_CAP).unwrap();
        println!("{p}: order {}", g.order());
    }

    // the relators as usually printed define smaller groups
    let printed = printed_presentation(Family::W3, None).unwrap();
    let w3 = coset_enumerate(&printed, COSET_CAP).unwrap();
    println!("{printed}: order {}, isomorphic to S4: {}", w3.order(), is_isomorphic(&w3, &construct(Family::Symmetric, Some(4)).unwrap()));

    let g4 = construct(Family::G, Some(4)).unwrap();
    let q16 = construct(Family::Quaternion, Some(16)).unwrap();
    let h4 = construct(Family::H, Some(4)).unwrap();
    println!("G4 ~ Q16: {}", is_isomorphic(&g4, &q16));
    println!("H4 ~ G4: {}", is_isomorphic(&h4, &g4));

    let d8 = construct(Family::Dihedral, Some(4)).unwrap();
    let v10 = construct(Family::V, Some(10)).unwrap();
    match find_monomorphism(&d8, &v10) {
        Some(images) => println!("D8 embeds in V10, generators map to elements {images:?}"),
        None => println!("D8 does not embed in V10"),
    }
    let sl23 = construct(Family::SL23, None).unwrap();
    println!("SL2(3) order {}, fingerprint {:?}", sl23.order(), sl23.fingerprint());
}
