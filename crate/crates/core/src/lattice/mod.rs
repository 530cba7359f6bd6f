//! Inclusion lattice of the automorphism groups occurring in one genus.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::classify::{enumerate_loci_with, ClassifyError, Options};
use crate::grouptheory::{construct, find_monomorphism_budget, is_isomorphic_budget, FiniteGroup, GroupError, Search};

/// Largest genus accepted by [`build_lattice`].
pub const LATTICE_GENUS_CAP: u32 = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("genus {0} exceeds the lattice cap {LATTICE_GENUS_CAP}")]
    GenusCap(u32),
    #[error("isomorphism test between {0} and {1} ran out of budget")]
    Undetermined(String, String),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// One isomorphism class of full automorphism groups, with the cases realising it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeNode {
    pub name: String,
    pub family: String,
    pub n: Option<u32>,
    pub order: usize,
    /// Largest locus dimension among the rows with this group.
    pub delta: usize,
    pub cases: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Incidence {
    Embeds,
    NotEmbeds,
    Undetermined,
}

impl Incidence {
    pub fn symbol(self) -> &'static str {
        match self {
            Incidence::Embeds => "1",
            Incidence::NotEmbeds => "0",
            Incidence::Undetermined => "?",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Lattice {
    pub genus: u32,
    /// Sorted by (order, family name, n).
    pub nodes: Vec<LatticeNode>,
    /// incidence[i][j]: does node i embed in node j. Pairs with i > j are not searched.
    pub incidence: Vec<Vec<Option<Incidence>>>,
    /// Covering relations (i, j) of the embedding order.
    pub edges: Vec<(usize, usize)>,
}

impl Lattice {
    pub fn undetermined(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.incidence.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if *c == Some(Incidence::Undetermined) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Node indices grouped by δ, in increasing δ.
    pub fn levels(&self) -> Vec<(usize, Vec<usize>)> {
        let mut deltas: Vec<usize> = self.nodes.iter().map(|n| n.delta).collect();
        deltas.sort_unstable();
        deltas.dedup();
        deltas
            .into_iter()
            .map(|d| (d, (0..self.nodes.len()).filter(|&i| self.nodes[i].delta == d).collect()))
            .collect()
    }

    pub fn edge_names(&self) -> Vec<(String, String)> {
        self.edges.iter().map(|&(i, j)| (self.nodes[i].name.clone(), self.nodes[j].name.clone())).collect()
    }

    pub fn to_dot(&self) -> String {
        let mut s = format!("digraph genus_{} {{\n  rankdir=TB;\n", self.genus);
        for node in &self.nodes {
            let cases: Vec<String> = node.cases.iter().map(u32::to_string).collect();
            let _ = writeln!(
                s,
                "  \"{}\" [label=\"{}\\norder {}, delta {}\\ncases {}\"];",
                node.name,
                node.name,
                node.order,
                node.delta,
                cases.join(",")
            );
        }
        for level in self.levels().iter().rev() {
            let names: Vec<String> = level.1.iter().map(|&i| format!("\"{}\"", self.nodes[i].name)).collect();
            let _ = writeln!(s, "  {{ rank=same; {} }}", names.join("; "));
        }
        for (a, b) in self.edge_names() {
            let _ = writeln!(s, "  \"{a}\" -> \"{b}\";");
        }
        for (i, j) in self.undetermined() {
            let _ = writeln!(s, "  \"{}\" -> \"{}\" [style=dashed, label=\"?\"];", self.nodes[i].name, self.nodes[j].name);
        }
        s.push_str("}\n");
        s
    }

    /// Incidence matrix with a header row; cells are 1, 0, ? or empty for pairs not searched.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("subgroup");
        for node in &self.nodes {
            s.push(',');
            s.push_str(&node.name);
        }
        s.push('\n');
        for (i, node) in self.nodes.iter().enumerate() {
            s.push_str(&node.name);
            for j in 0..self.nodes.len() {
                s.push(',');
                if let Some(c) = self.incidence[i][j] {
                    s.push_str(c.symbol());
                }
            }
            s.push('\n');
        }
        s
    }
}

/// Groups of all loci in genus g, merged up to isomorphism, with embeddings decided by
/// search within `budget` nodes each.
pub fn build_lattice(g: u32, opts: &Options) -> Result<Lattice, LatticeError> {
    if g > LATTICE_GENUS_CAP {
        return Err(LatticeError::GenusCap(g));
    }
    let rows = enumerate_loci_with(g, opts)?;
    let mut nodes: Vec<LatticeNode> = Vec::new();
    let mut groups: Vec<FiniteGroup> = Vec::new();
    for row in &rows {
        let group = construct(row.family, row.family_n)?;
        let mut merged = false;
        for (node, other) in nodes.iter_mut().zip(&groups) {
            if node.order != row.order {
                continue;
            }
            let same = (node.family.as_str(), node.n) == (row.family.name(), row.family_n);
            let iso = same
                || match is_isomorphic_budget(other, &group, opts.budget) {
                    Search::Found { .. } => true,
                    Search::NotFound => false,
                    Search::Exhausted => return Err(LatticeError::Undetermined(node.name.clone(), row.group_display())),
                };
            if iso {
                node.cases.push(row.case);
                node.delta = node.delta.max(row.delta);
                merged = true;
                break;
            }
        }
        if !merged {
            nodes.push(LatticeNode {
                name: row.group_display(),
                family: row.family.name().to_string(),
                n: row.family_n,
                order: row.order,
                delta: row.delta,
                cases: vec![row.case],
            });
            groups.push(group);
        }
    }
    let mut idx: Vec<usize> = (0..nodes.len()).collect();
    idx.sort_by(|&a, &b| (nodes[a].order, &nodes[a].family, nodes[a].n).cmp(&(nodes[b].order, &nodes[b].family, nodes[b].n)));
    let nodes: Vec<LatticeNode> = idx.iter().map(|&i| nodes[i].clone()).collect();
    let groups: Vec<&FiniteGroup> = idx.iter().map(|&i| &groups[i]).collect();
    let k = nodes.len();
    let mut incidence = vec![vec![None; k]; k];
    for i in 0..k {
        incidence[i][i] = Some(Incidence::Embeds);
        for j in i + 1..k {
            let c = if nodes[i].order >= nodes[j].order {
                Incidence::NotEmbeds
            } else {
                match find_monomorphism_budget(groups[i], groups[j], opts.budget) {
                    Search::Found { .. } => Incidence::Embeds,
                    Search::NotFound => Incidence::NotEmbeds,
                    Search::Exhausted => Incidence::Undetermined,
                }
            };
            incidence[i][j] = Some(c);
        }
    }
    let embeds = |i: usize, j: usize| incidence[i][j] == Some(Incidence::Embeds);
    debug_assert!((0..k).all(|i| (i..k).all(|j| !embeds(i, j) || nodes[j].order.is_multiple_of(nodes[i].order))));
    debug_assert!((0..k).all(|i| (i..k).all(|j| (j..k).all(|m| !(embeds(i, j) && embeds(j, m)) || embeds(i, m)))));
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if embeds(i, j) && !(i + 1..j).any(|m| embeds(i, m) && embeds(m, j)) {
                edges.push((i, j));
            }
        }
    }
    Ok(Lattice { genus: g, nodes, incidence, edges })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_two() {
        let lat = build_lattice(2, &Options::default()).unwrap();
        let names: Vec<&str> = lat.nodes.iter().map(|n| n.name.as_str()).collect();
        assert_eq!(names, vec!["Z2", "Z2xZ2", "V2", "Z10", "Z2xD[ord=6]", "V6", "GL2(3)"]);
        let edges = lat.edge_names();
        assert!(edges.contains(&("Z2".into(), "Z2xZ2".into())));
        assert!(edges.contains(&("V2".into(), "GL2(3)".into())));
        assert!(!edges.contains(&("V6".into(), "GL2(3)".into())));
        assert!(!edges.contains(&("Z2".into(), "V2".into())));
        assert!(lat.undetermined().is_empty());
        assert!(lat.to_dot().contains("\"Z2\" -> \"Z10\";"));
        assert_eq!(lat.to_csv().lines().count(), 8);
        assert!(matches!(build_lattice(31, &Options::default()), Err(LatticeError::GenusCap(31))));
    }
}
