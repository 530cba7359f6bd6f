//! Permutations and concrete finite groups with a full multiplication table.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use super::{Family, GroupError};

/// A permutation of {0, …, degree − 1}, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn new(images: Vec<u32>) -> Result<Perm, GroupError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen.get_mut(i as usize).ok_or_else(|| GroupError::NotAPermutation(images.clone()))?;
            if std::mem::replace(slot, true) {
                return Err(GroupError::NotAPermutation(images));
            }
        }
        Ok(Perm(images))
    }

    pub fn identity(degree: usize) -> Perm {
        Perm((0..degree as u32).collect())
    }

    /// Builds a permutation from a total map on {0, …, degree − 1}.
    pub fn from_fn(degree: usize, f: impl Fn(usize) -> usize) -> Result<Perm, GroupError> {
        Perm::new((0..degree).map(|i| f(i) as u32).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Disjoint union action: `self` on the first points, `other` shifted after them.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let shift = self.degree() as u32;
        Perm(self.0.iter().copied().chain(other.0.iter().map(|&j| j + shift)).collect())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut done = vec![false; self.0.len()];
        let mut any = false;
        for start in 0..self.0.len() {
            if done[start] || self.0[start] as usize == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !done[i] {
                done[i] = true;
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.0[i] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

/// A finite group given by permutation generators, closed into its element list.
///
/// Elements are indexed from 0 (the identity) and products are read off a Cayley table.
#[derive(Clone)]
pub struct FiniteGroup {
    family: Family,
    n: Option<u32>,
    generator_perms: Vec<Perm>,
    generators: Vec<usize>,
    elements: Vec<Perm>,
    table: Vec<u32>,
    inverses: Vec<u32>,
    orders: Vec<u32>,
}

/// Default bound on the number of elements produced by a closure.
pub const ELEMENT_CAP: usize = 4096;

impl FiniteGroup {
    pub fn from_generators(family: Family, n: Option<u32>, gens: Vec<Perm>, cap: usize) -> Result<FiniteGroup, GroupError> {
        let degree = gens.first().map_or(1, Perm::degree);
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch);
        }
        let id = Perm::identity(degree);
        let mut index: HashMap<Perm, usize> = HashMap::from([(id.clone(), 0)]);
        let mut elements = vec![id];
        // parent[j] = (p, k) with elements[j] = elements[p] · gens[k]
        let mut parent = vec![(0usize, 0usize)];
        let mut right: Vec<Vec<u32>> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let mut row = Vec::with_capacity(gens.len());
            for (k, g) in gens.iter().enumerate() {
                let y = elements[x].then(g);
                let j = match index.get(&y) {
                    Some(&j) => j,
                    None => {
                        if elements.len() >= cap {
                            return Err(GroupError::ElementCap { cap });
                        }
                        let j = elements.len();
                        index.insert(y.clone(), j);
                        elements.push(y);
                        parent.push((x, k));
                        queue.push_back(j);
                        j
                    }
                };
                row.push(j as u32);
            }
            right.push(row);
        }
        let order = elements.len();
        let mut table = vec![0u32; order * order];
        for i in 0..order {
            table[i * order] = i as u32;
            for j in 1..order {
                let (p, k) = parent[j];
                let ip = table[i * order + p] as usize;
                table[i * order + j] = right[ip][k];
            }
        }
        let mut inverses = vec![0u32; order];
        for i in 0..order {
            let row = &table[i * order..(i + 1) * order];
            inverses[i] = row.iter().position(|&v| v == 0).expect("finite group") as u32;
        }
        let mut orders = vec![1u32; order];
        for (i, o) in orders.iter_mut().enumerate().skip(1) {
            let mut acc = i;
            let mut k = 1;
            while acc != 0 {
                acc = table[acc * order + i] as usize;
                k += 1;
            }
            *o = k;
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        Ok(FiniteGroup { family, n, generator_perms: gens, generators, elements, table, inverses, orders })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> Option<u32> {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_perms(&self) -> &[Perm] {
        &self.generator_perms
    }

    pub fn display(&self) -> String {
        self.family.display(self.n)
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order() + j] as usize
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverses[i] as usize
    }

    pub fn element_order(&self, i: usize) -> usize {
        self.orders[i] as usize
    }

    pub fn commutes(&self, i: usize, j: usize) -> bool {
        self.mul(i, j) == self.mul(j, i)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| self.generators.iter().all(|&b| self.commutes(a, b)))
    }

    pub fn center_order(&self) -> usize {
        (0..self.order()).filter(|&z| self.generators.iter().all(|&g| self.commutes(z, g))).count()
    }

    /// Sorted (element order, count) pairs.
    pub fn order_statistics(&self) -> Vec<(usize, usize)> {
        let mut counts = BTreeMap::new();
        for &o in &self.orders {
            *counts.entry(o as usize).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }

    /// Indices of the subgroup generated by the given elements, sorted.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut list = vec![0];
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    list.push(y);
                }
            }
            i += 1;
        }
        list.sort_unstable();
        list
    }

    /// A short generating set, chosen greedily by decreasing element order.
    pub fn small_generating_set(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = (1..self.order()).collect();
        by_order.sort_by_key(|&i| (std::cmp::Reverse(self.orders[i]), i));
        let mut gens: Vec<usize> = Vec::new();
        let mut inside = vec![false; self.order()];
        inside[0] = true;
        let mut size = 1;
        while size < self.order() {
            // Prefer the element that enlarges the subgroup the most.
            let best = by_order
                .iter()
                .enumerate()
                .filter(|&(_, &c)| !inside[c])
                .map(|(rank, &c)| {
                    let mut trial = gens.clone();
                    trial.push(c);
                    (self.subgroup(&trial).len(), std::cmp::Reverse(rank), c)
                })
                .max()
                .expect("proper subgroup misses some element");
            gens.push(best.2);
            let sub = self.subgroup(&gens);
            size = sub.len();
            for s in sub {
                inside[s] = true;
            }
        }
        gens
    }

    /// One representative (the smallest index) per conjugacy class.
    pub fn conjugacy_class_reps(&self) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        let mut reps = Vec::new();
        for x in 0..self.order() {
            if seen[x] {
                continue;
            }
            reps.push(x);
            for g in 0..self.order() {
                seen[self.mul(self.mul(self.inv(g), x), g)] = true;
            }
        }
        reps
    }

    /// Commutator subgroup.
    pub fn derived_subgroup(&self) -> Vec<usize> {
        let mut comms = Vec::new();
        let mut seen = vec![false; self.order()];
        for a in 0..self.order() {
            for b in 0..self.order() {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                if !seen[c] {
                    seen[c] = true;
                    comms.push(c);
                }
            }
        }
        self.subgroup(&comms)
    }

    /// Invariant factors d₁ | d₂ | … of the abelianization; empty for perfect groups.
    pub fn abelian_invariants(&self) -> Vec<usize> {
        let derived = self.derived_subgroup();
        let mut in_derived = vec![false; self.order()];
        for &d in &derived {
            in_derived[d] = true;
        }
        // Orders of the cosets of G/G'.
        let mut coset_of = vec![usize::MAX; self.order()];
        let mut quotient_orders = Vec::new();
        for x in 0..self.order() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let id = quotient_orders.len();
            for &d in &derived {
                coset_of[self.mul(x, d)] = id;
            }
            let mut k = 1;
            let mut acc = x;
            while !in_derived[acc] {
                acc = self.mul(acc, x);
                k += 1;
            }
            quotient_orders.push(k);
        }
        abelian_invariants_from_orders(&quotient_orders)
    }

    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint {
            order: self.order(),
            abelian_invariants: self.abelian_invariants(),
            order_statistics: self.order_statistics(),
            center_order: self.center_order(),
        }
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.display(), self.order())
    }
}

/// Isomorphism invariants used to reject non-isomorphic pairs quickly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian_invariants: Vec<usize>,
    pub order_statistics: Vec<(usize, usize)>,
    pub center_order: usize,
}

/// Invariant factors of a finite abelian group from the multiset of its element orders.
fn abelian_invariants_from_orders(orders: &[usize]) -> Vec<usize> {
    let total = orders.len();
    let mut primes = Vec::new();
    let mut m = total;
    let mut p = 2;
    while m > 1 {
        if m.is_multiple_of(p) {
            primes.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    // For each prime, the exponents e_i of the cyclic p-parts: |{x : x^(p^k) = 1}| = p^Σmin(e_i, k).
    let mut prime_parts: Vec<Vec<usize>> = Vec::new();
    for &p in &primes {
        let mut log_counts = vec![0usize];
        let mut pk = 1;
        loop {
            pk *= p;
            let count = orders.iter().filter(|&&o| pk % o == 0).count();
            let log = ilog(count, p);
            if log == *log_counts.last().unwrap() {
                break;
            }
            log_counts.push(log);
        }
        // Number of cyclic factors with exponent ≥ k is log_counts[k] − log_counts[k−1].
        let at_least: Vec<usize> = log_counts.windows(2).map(|w| w[1] - w[0]).collect();
        let mut exps = Vec::new();
        for (k, &cnt) in at_least.iter().enumerate() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..cnt - next {
                exps.push(k + 1);
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        prime_parts.push(exps.into_iter().map(|e| p.pow(e as u32)).collect());
    }
    let len = prime_parts.iter().map(Vec::len).max().unwrap_or(0);
    let mut factors: Vec<usize> =
        (0..len).map(|i| prime_parts.iter().map(|part| part.get(i).copied().unwrap_or(1)).product()).collect();
    factors.reverse();
    factors
}

fn ilog(mut count: usize, p: usize) -> usize {
    let mut k = 0;
    while count > 1 {
        count /= p;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> Perm {
        Perm::from_fn(n, |i| (i + 1) % n).unwrap()
    }

    #[test]
    fn perm_basics() {
        let p = Perm::new(vec![1, 2, 0]).unwrap();
        assert_eq!(p.to_string(), "(1,2,3)");
        assert!(p.then(&p.inverse()).is_identity());
        assert!(Perm::new(vec![0, 0]).is_err());
    }

    #[test]
    fn cyclic_group_table() {
        let g = FiniteGroup::from_generators(Family::Cyclic, Some(6), vec![cyclic(6)], ELEMENT_CAP).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
        assert_eq!(g.order_statistics(), vec![(1, 1), (2, 1), (3, 2), (6, 2)]);
        assert_eq!(g.abelian_invariants(), vec![6]);
        assert_eq!(g.small_generating_set().len(), 1);
    }

    #[test]
    fn klein_and_z2_z4_invariants() {
        let a = cyclic(2).direct_sum(&Perm::identity(4));
        let b = Perm::identity(2).direct_sum(&cyclic(4));
        let g = FiniteGroup::from_generators(Family::Cyclic, None, vec![a, b], ELEMENT_CAP).unwrap();
        assert_eq!(g.abelian_invariants(), vec![2, 4]);
        assert_eq!(g.center_order(), 8);
    }

    #[test]
    fn s3_is_nonabelian() {
        let s = Perm::new(vec![1, 0, 2]).unwrap();
        let g = FiniteGroup::from_generators(Family::Dihedral, Some(3), vec![cyclic(3), s], ELEMENT_CAP).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.center_order(), 1);
        assert_eq!(g.abelian_invariants(), vec![2]);
        assert_eq!(g.derived_subgroup().len(), 3);
        assert_eq!(g.conjugacy_class_reps().len(), 3);
        for i in 0..6 {
            assert_eq!(g.mul(i, g.inv(i)), 0);
        }
    }
}
