//! Finitely presented groups and Todd–Coxeter coset enumeration over the trivial subgroup.

use std::fmt;

use super::{Family, FiniteGroup, GroupError, Perm};

/// A letter is a generator index with a sign: `(g, true)` is g, `(g, false)` is g⁻¹.
pub type Letter = (usize, bool);

/// Generators named by single lowercase letters and relators as words in them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    names: Vec<char>,
    relators: Vec<Vec<Letter>>,
}

/// Default coset cap.
pub const COSET_CAP: usize = 4096;

impl Presentation {
    /// Parses relators such as `x^4`, `(x^-1*y)^2`, `y*x^2*y^-1*x^2` over the given generators.
    pub fn parse(names: &str, relators: &[&str]) -> Result<Presentation, GroupError> {
        let names: Vec<char> = names.chars().collect();
        if names.is_empty() {
            return Err(GroupError::Parse("no generators".into()));
        }
        let relators = relators.iter().map(|r| parse_word(&names, r)).collect::<Result<Vec<_>, _>>()?;
        Ok(Presentation { names, relators })
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn relators(&self) -> &[Vec<Letter>] {
        &self.relators
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.names.iter().map(char::to_string).collect();
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|w| {
                w.iter()
                    .map(|&(g, pos)| if pos { self.names[g].to_string() } else { format!("{}^-1", self.names[g]) })
                    .collect::<Vec<_>>()
                    .join("*")
            })
            .collect();
        write!(f, "< {} | {} >", gens.join(", "), rels.join(", "))
    }
}

fn parse_word(names: &[char], s: &str) -> Result<Vec<Letter>, GroupError> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let word = parse_product(names, &chars, &mut pos)?;
    if pos != chars.len() {
        return Err(GroupError::Parse(format!("trailing input in relator '{s}'")));
    }
    if word.is_empty() {
        return Err(GroupError::Parse(format!("empty relator '{s}'")));
    }
    Ok(word)
}

fn parse_product(names: &[char], c: &[char], pos: &mut usize) -> Result<Vec<Letter>, GroupError> {
    let mut word = Vec::new();
    loop {
        let base = match c.get(*pos) {
            Some('(') => {
                *pos += 1;
                let inner = parse_product(names, c, pos)?;
                if c.get(*pos) != Some(&')') {
                    return Err(GroupError::Parse("missing ')'".into()));
                }
                *pos += 1;
                inner
            }
            Some(ch) => {
                let g = names.iter().position(|n| n == ch).ok_or_else(|| GroupError::Parse(format!("unknown generator '{ch}'")))?;
                *pos += 1;
                vec![(g, true)]
            }
            None => return Err(GroupError::Parse("unexpected end of relator".into())),
        };
        let mut exp: i64 = 1;
        if c.get(*pos) == Some(&'^') {
            *pos += 1;
            let start = *pos;
            if c.get(*pos) == Some(&'-') {
                *pos += 1;
            }
            while c.get(*pos).is_some_and(char::is_ascii_digit) {
                *pos += 1;
            }
            let text: String = c[start..*pos].iter().collect();
            exp = text.parse().map_err(|_| GroupError::Parse(format!("bad exponent '{text}'")))?;
        }
        let unit: Vec<Letter> =
            if exp < 0 { base.iter().rev().map(|&(g, p)| (g, !p)).collect() } else { base };
        for _ in 0..exp.unsigned_abs() {
            word.extend_from_slice(&unit);
        }
        match c.get(*pos) {
            Some('*') => *pos += 1,
            Some(')') | None => return Ok(word),
            Some(_) => {}
        }
    }
}

/// Coset table with coincidence handling (HLT strategy).
struct CosetTable {
    cols: usize,
    table: Vec<Vec<Option<usize>>>,
    forward: Vec<usize>,
    live: usize,
}

impl CosetTable {
    fn new(gens: usize) -> CosetTable {
        CosetTable { cols: 2 * gens, table: vec![vec![None; 2 * gens]], forward: vec![0], live: 1 }
    }

    fn col(letter: Letter) -> usize {
        2 * letter.0 + usize::from(!letter.1)
    }

    fn inv(col: usize) -> usize {
        col ^ 1
    }

    fn is_live(&self, c: usize) -> bool {
        self.forward[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> usize {
        let d = self.table.len();
        self.table.push(vec![None; self.cols]);
        self.forward.push(d);
        self.live += 1;
        self.table[c][x] = Some(d);
        self.table[d][CosetTable::inv(x)] = Some(c);
        d
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.forward[r] != r {
            r = self.forward[r];
        }
        let mut c = c;
        while self.forward[c] != r {
            let next = self.forward[c];
            self.forward[c] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.forward[hi] = lo;
            self.live -= 1;
            queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.cols {
                let Some(f) = self.table[e][x] else { continue };
                let xi = CosetTable::inv(x);
                if self.table[f][xi] == Some(e) {
                    self.table[f][xi] = None;
                }
                let (e1, f1) = (self.rep(e), self.rep(f));
                if let Some(t) = self.table[e1][x] {
                    self.merge(f1, t, &mut queue);
                } else if let Some(t) = self.table[f1][xi] {
                    self.merge(e1, t, &mut queue);
                } else {
                    self.table[e1][x] = Some(f1);
                    self.table[f1][xi] = Some(e1);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize]) {
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j {
                match self.table[f][w[i]] {
                    Some(next) => {
                        f = next;
                        i += 1;
                    }
                    None => break,
                }
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return;
            }
            while j >= i as isize {
                match self.table[b][CosetTable::inv(w[j as usize])] {
                    Some(next) => {
                        b = next;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j < i as isize {
                self.coincidence(f, b);
                return;
            }
            if j == i as isize {
                self.table[f][w[i]] = Some(b);
                self.table[b][CosetTable::inv(w[i])] = Some(f);
                return;
            }
            self.define(f, w[i]);
        }
    }
}

/// Enumerates the cosets of the trivial subgroup, returning the regular permutation
/// representation. Fails when more than `cap` live cosets are needed.
pub fn coset_enumerate(p: &Presentation, cap: usize) -> Result<FiniteGroup, GroupError> {
    coset_enumerate_as(p, cap, Family::Presented, None)
}

pub(crate) fn coset_enumerate_as(p: &Presentation, cap: usize, family: Family, n: Option<u32>) -> Result<FiniteGroup, GroupError> {
    let rels: Vec<Vec<usize>> = p.relators.iter().map(|w| w.iter().map(|&l| CosetTable::col(l)).collect()).collect();
    let mut t = CosetTable::new(p.generator_count());
    let hard_limit = cap.saturating_mul(64);
    let mut c = 0;
    while c < t.table.len() {
        if t.is_live(c) {
            for w in &rels {
                t.scan_and_fill(c, w);
                if !t.is_live(c) {
                    break;
                }
            }
            for x in 0..t.cols {
                if !t.is_live(c) {
                    break;
                }
                if t.table[c][x].is_none() {
                    t.define(c, x);
                }
            }
        }
        if t.live > cap || t.table.len() > hard_limit {
            return Err(GroupError::CosetCap { cap });
        }
        c += 1;
    }
    let live: Vec<usize> = (0..t.table.len()).filter(|&c| t.is_live(c)).collect();
    let mut number = vec![usize::MAX; t.table.len()];
    for (k, &c) in live.iter().enumerate() {
        number[c] = k;
    }
    let mut gens = Vec::new();
    for g in 0..p.generator_count() {
        let images = live
            .iter()
            .map(|&c| {
                let target = t.table[c][2 * g].expect("complete coset table");
                number[t.rep(target)] as u32
            })
            .collect();
        gens.push(Perm::new(images)?);
    }
    let group = FiniteGroup::from_generators(family, n, gens, cap.max(live.len()))?;
    if group.order() != live.len() {
        return Err(GroupError::Internal(format!(
            "regular representation has {} elements on {} cosets",
            group.order(),
            live.len()
        )));
    }
    Ok(group)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_relators() {
        let p = Presentation::parse("xy", &["x^4", "(x^-1*y)^2", "y*x^2*y^-1"]).unwrap();
        assert_eq!(p.relators()[0], vec![(0, true); 4]);
        assert_eq!(p.relators()[1], vec![(0, false), (1, true), (0, false), (1, true)]);
        assert_eq!(p.relators()[2], vec![(1, true), (0, true), (0, true), (1, false)]);
        assert!(Presentation::parse("xy", &["z^2"]).is_err());
    }

    #[test]
    fn small_groups() {
        let cyclic = Presentation::parse("a", &["a^7"]).unwrap();
        assert_eq!(coset_enumerate(&cyclic, COSET_CAP).unwrap().order(), 7);
        let s3 = Presentation::parse("ab", &["a^3", "b^2", "(a*b)^2"]).unwrap();
        assert_eq!(coset_enumerate(&s3, COSET_CAP).unwrap().order(), 6);
        let a5 = Presentation::parse("ab", &["a^2", "b^3", "(a*b)^5"]).unwrap();
        assert_eq!(coset_enumerate(&a5, COSET_CAP).unwrap().order(), 60);
        let trivial = Presentation::parse("ab", &["a", "b"]).unwrap();
        assert_eq!(coset_enumerate(&trivial, COSET_CAP).unwrap().order(), 1);
    }

    #[test]
    fn infinite_presentation_hits_cap() {
        let free = Presentation::parse("ab", &["a*b*a^-1*b^-1"]).unwrap();
        assert!(matches!(coset_enumerate(&free, 200), Err(GroupError::CosetCap { .. })));
    }
}
