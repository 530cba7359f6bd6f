//! Isomorphism and embedding search between finite groups by generator-image backtracking.

use super::FiniteGroup;

/// Default number of search nodes before a search gives up.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

/// Outcome of a budgeted search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search {
    /// Images of the source's search generators, as element indices of the target.
    Found { generators: Vec<usize>, images: Vec<usize> },
    NotFound,
    Exhausted,
}

impl Search {
    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found { .. })
    }
}

/// True iff the two groups are isomorphic.
pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    is_isomorphic_budget(g, h, DEFAULT_BUDGET).is_found()
}

pub fn is_isomorphic_budget(g: &FiniteGroup, h: &FiniteGroup, budget: u64) -> Search {
    if g.fingerprint() != h.fingerprint() {
        return Search::NotFound;
    }
    search(g, h, budget)
}

/// Some injective homomorphism H → G, given by the images of a generating set of H.
pub fn find_monomorphism(h: &FiniteGroup, g: &FiniteGroup) -> Option<Vec<usize>> {
    match find_monomorphism_budget(h, g, DEFAULT_BUDGET) {
        Search::Found { images, .. } => Some(images),
        _ => None,
    }
}

pub fn find_monomorphism_budget(h: &FiniteGroup, g: &FiniteGroup, budget: u64) -> Search {
    if !g.order().is_multiple_of(h.order()) {
        return Search::NotFound;
    }
    // Each element order must occur in G at least as often as in H.
    let gs = g.order_statistics();
    for (k, count) in h.order_statistics() {
        let available = gs.iter().find(|(o, _)| *o == k).map_or(0, |(_, c)| *c);
        if available < count {
            return Search::NotFound;
        }
    }
    search(h, g, budget)
}

struct SearchState<'a> {
    src: &'a FiniteGroup,
    dst: &'a FiniteGroup,
    gens: Vec<usize>,
    // Spanning tree of src over `gens`: element = parent · gens[k], in BFS order.
    tree: Vec<(usize, usize, usize)>,
    budget: u64,
    exhausted: bool,
}

/// Backtracking over images of a small generating set of `src`, pruned by element orders
/// of generators and their pairwise products; complete assignments are checked as homomorphisms.
fn search(src: &FiniteGroup, dst: &FiniteGroup, budget: u64) -> Search {
    let gens = src.small_generating_set();
    if gens.is_empty() {
        return Search::Found { generators: vec![], images: vec![] };
    }
    let tree = spanning_tree(src, &gens);
    let mut st = SearchState { src, dst, gens, tree, budget, exhausted: false };
    let mut images = Vec::new();
    let found = extend(&mut st, &mut images);
    match found {
        true => Search::Found { generators: st.gens.clone(), images },
        false if st.exhausted => Search::Exhausted,
        false => Search::NotFound,
    }
}

fn spanning_tree(g: &FiniteGroup, gens: &[usize]) -> Vec<(usize, usize, usize)> {
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut order = vec![0usize];
    let mut tree = Vec::new();
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        for (k, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            if !seen[y] {
                seen[y] = true;
                order.push(y);
                tree.push((y, x, k));
            }
        }
        i += 1;
    }
    tree
}

fn extend(st: &mut SearchState, images: &mut Vec<usize>) -> bool {
    if st.budget == 0 {
        st.exhausted = true;
        return false;
    }
    st.budget -= 1;
    let k = images.len();
    if k == st.gens.len() {
        return check_hom(st, images);
    }
    let s = st.gens[k];
    let want = st.src.element_order(s);
    let candidates: Vec<usize> = if k == 0 {
        // Conjugating an embedding gives another one: the first image is a class representative.
        st.dst.conjugacy_class_reps()
    } else {
        (0..st.dst.order()).collect()
    };
    for c in candidates {
        if st.dst.element_order(c) != want {
            continue;
        }
        let consistent = (0..k).all(|j| {
            let a = st.src.mul(st.gens[j], s);
            let b = st.src.mul(st.src.inv(st.gens[j]), s);
            st.dst.element_order(st.dst.mul(images[j], c)) == st.src.element_order(a)
                && st.dst.element_order(st.dst.mul(st.dst.inv(images[j]), c)) == st.src.element_order(b)
        });
        if !consistent {
            continue;
        }
        images.push(c);
        if extend(st, images) {
            return true;
        }
        images.pop();
        if st.exhausted {
            return false;
        }
    }
    false
}

/// Extends the generator images along the spanning tree and verifies φ(x·s) = φ(x)·φ(s)
/// for every element and generator, plus injectivity.
fn check_hom(st: &SearchState, images: &[usize]) -> bool {
    let (src, dst) = (st.src, st.dst);
    let mut phi = vec![usize::MAX; src.order()];
    phi[0] = 0;
    for &(y, x, k) in &st.tree {
        phi[y] = dst.mul(phi[x], images[k]);
    }
    for x in 0..src.order() {
        for (k, &s) in st.gens.iter().enumerate() {
            if phi[src.mul(x, s)] != dst.mul(phi[x], images[k]) {
                return false;
            }
        }
    }
    let mut hit = vec![false; dst.order()];
    phi.iter().all(|&y| !std::mem::replace(&mut hit[y], true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouptheory::{construct, Family};

    fn z(n: u32) -> FiniteGroup {
        construct(Family::Cyclic, Some(n)).unwrap()
    }

    #[test]
    fn cyclic_vs_klein() {
        let klein = construct(Family::Dihedral, Some(2)).unwrap();
        assert!(!is_isomorphic(&z(4), &klein));
        assert!(is_isomorphic(&klein, &construct(Family::Z2xZ, Some(2)).unwrap()));
    }

    #[test]
    fn embeddings() {
        let q8 = construct(Family::Quaternion, Some(8)).unwrap();
        assert!(find_monomorphism(&z(4), &q8).is_some());
        assert!(find_monomorphism(&z(6), &z(18)).is_some());
        let klein = construct(Family::Z2xZ, Some(2)).unwrap();
        assert!(find_monomorphism(&klein, &z(18)).is_none());
        assert!(find_monomorphism(&klein, &q8).is_none());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let a5 = construct(Family::Z2xA5, None).unwrap();
        let s = is_isomorphic_budget(&a5, &a5, 1);
        assert_eq!(s, Search::Exhausted);
    }
}
