use std::collections::BTreeSet;

use hyperloci::classify::Options;
use hyperloci::grouptheory::{construct, find_monomorphism, Family};
use hyperloci::lattice::{build_lattice, Incidence, LatticeError};

fn cell(csv: &str, row: &str, col: &str) -> String {
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let j = header.iter().position(|h| *h == col).unwrap();
    let line = lines.find(|l| l.split(',').next() == Some(row)).unwrap();
    line.split(',').nth(j).unwrap().to_string()
}

#[test]
fn genus_four() {
    let lat = build_lattice(4, &Options::default()).unwrap();
    assert_eq!(lat.nodes.len(), 12);
    assert!(lat.undetermined().is_empty());
    let levels: Vec<usize> = lat.levels().iter().map(|(d, _)| *d).collect();
    assert_eq!(levels, vec![0, 1, 2, 3, 4, 7]);
    let top = lat.levels().last().unwrap().1.clone();
    assert_eq!(top.len(), 1);
    assert_eq!(lat.nodes[top[0]].name, "Z2");
    for j in 0..lat.nodes.len() {
        assert_eq!(lat.incidence[top[0]][j], Some(Incidence::Embeds));
    }
    let csv = lat.to_csv();
    assert_eq!(cell(&csv, "Z4", "G2"), "1");
    assert_eq!(cell(&csv, "Z18", "SL2(3)"), "0");
    assert_eq!(cell(&csv, "SL2(3)", "Z18"), "");
    assert_eq!(cell(&csv, "Z6", "Z18"), "1");
    assert_eq!(cell(&csv, "G2", "V10"), "0");
}

#[test]
fn genus_four_edges_contain_the_figure() {
    let lat = build_lattice(4, &Options::default()).unwrap();
    let edges: BTreeSet<(String, String)> = lat.edge_names().into_iter().collect();
    let figure = [
        ("Z2", "Z2xZ2"),
        ("Z2", "Z4"),
        ("Z2", "Z6"),
        ("Z2xZ2", "Z2xD[ord=10]"),
        ("Z2xZ2", "V2"),
        ("Z4", "V2"),
        ("Z4", "G2"),
        ("Z6", "Z18"),
        ("Z6", "SL2(3)"),
        ("V2", "D[ord=16]"),
        ("G2", "SL2(3)"),
        ("G2", "U8"),
        ("D[ord=16]", "U8"),
        ("Z2xD[ord=10]", "V10"),
    ];
    for (a, b) in figure {
        assert!(edges.contains(&(a.to_string(), b.to_string())), "{a} -> {b}");
    }
    // D8 sits inside V10 as well, which adds one covering relation
    assert_eq!(edges.len(), figure.len() + 1);
    assert!(edges.contains(&("V2".to_string(), "V10".to_string())));
    let d8 = construct(Family::Dihedral, Some(4)).unwrap();
    assert!(find_monomorphism(&d8, &construct(Family::V, Some(10)).unwrap()).is_some());
}

#[test]
fn hasse_edges_are_covering_relations() {
    for g in 2..=10 {
        let lat = build_lattice(g, &Options::default()).unwrap();
        let k = lat.nodes.len();
        let emb = |i: usize, j: usize| lat.incidence[i][j] == Some(Incidence::Embeds);
        for &(i, j) in &lat.edges {
            assert!(i < j && emb(i, j));
            assert!(lat.nodes[j].order.is_multiple_of(lat.nodes[i].order));
            assert!(!(i + 1..j).any(|m| emb(i, m) && emb(m, j)));
        }
        // transitivity of the computed incidence
        for a in 0..k {
            for b in a..k {
                for c in b..k {
                    if emb(a, b) && emb(b, c) {
                        assert!(emb(a, c), "g = {g}");
                    }
                }
            }
        }
    }
}

#[test]
fn outputs() {
    let lat = build_lattice(3, &Options::default()).unwrap();
    let dot = lat.to_dot();
    assert!(dot.starts_with("digraph genus_3 {"));
    assert_eq!(dot.matches("rank=same").count(), lat.levels().len());
    let json = serde_json::to_value(&lat).unwrap();
    assert_eq!(json["nodes"].as_array().unwrap().len(), lat.nodes.len());
    assert!(matches!(build_lattice(31, &Options::default()), Err(LatticeError::GenusCap(31))));
    let tiny = Options { budget: 0, ..Options::default() };
    match build_lattice(4, &tiny) {
        Ok(lat) => assert!(!lat.undetermined().is_empty()),
        Err(e) => assert!(matches!(e, LatticeError::Classify(_) | LatticeError::Undetermined(..))),
    }
}
