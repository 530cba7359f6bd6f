//! Locus rows: admissibility, signatures, Riemann–Hurwitz and deduplication.

use std::collections::HashMap;
use std::fmt;

use num_traits::Signed;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use super::table::{as_nonnegative_int, case, cases, reduced_branching, CaseSpec, Constraint, GroupParam};
use super::{ClassifyError, Inadmissible};
use crate::exactnum::render_rat;
use crate::grouptheory::{construct, is_isomorphic_budget, Family, FiniteGroup, Search, DEFAULT_BUDGET};
use crate::moebius::ReducedGroup;

/// `cycle_count` disjoint cycles of length `cycle_length` in the regular representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignatureClass {
    pub cycle_length: usize,
    pub cycle_count: usize,
}

impl SignatureClass {
    pub fn new(cycle_length: usize, cycle_count: usize) -> SignatureClass {
        SignatureClass { cycle_length, cycle_count }
    }
}

impl fmt::Display for SignatureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.cycle_length, self.cycle_count)
    }
}

impl Serialize for SignatureClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.cycle_length, self.cycle_count].serialize(s)
    }
}

/// A listed prefix followed by `tail_count` copies of the tail class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub prefix: Vec<SignatureClass>,
    pub tail: SignatureClass,
    pub tail_count: usize,
}

impl Signature {
    pub fn entries(&self) -> Vec<SignatureClass> {
        let mut v = self.prefix.clone();
        v.extend(std::iter::repeat_n(self.tail, self.tail_count));
        v
    }

    /// Number of branch points r.
    pub fn len(&self) -> usize {
        self.prefix.len() + self.tail_count
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Entries as a sorted multiset.
    pub fn multiset(&self) -> Vec<SignatureClass> {
        let mut v = self.entries();
        v.sort();
        v
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.prefix.iter().map(ToString::to_string).collect();
        match self.tail_count {
            0 => {}
            1 => parts.push(self.tail.to_string()),
            k => parts.push(format!("{} x{k}", self.tail)),
        }
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for Signature {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.entries().serialize(s)
    }
}

/// One locus: a full automorphism group with its signature and dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocusRow {
    /// Case id 1 to 31, or 0 for the generic Z₂ locus.
    pub case: u32,
    pub genus: u32,
    pub reduced: ReducedGroup,
    pub reduced_n: Option<u32>,
    pub family: Family,
    pub family_n: Option<u32>,
    pub order: usize,
    pub delta: usize,
    pub signature: Signature,
}

impl LocusRow {
    pub fn is_root(&self) -> bool {
        self.case == 0
    }

    pub fn r(&self) -> usize {
        self.signature.len()
    }

    pub fn group_display(&self) -> String {
        self.family.display(self.family_n)
    }

    pub fn reduced_display(&self) -> String {
        match self.reduced_n {
            Some(1) => "1".to_string(),
            n => self.reduced.display(n),
        }
    }

    pub fn group(&self) -> Result<FiniteGroup, ClassifyError> {
        Ok(construct(self.family, self.family_n)?)
    }
}

struct NamedGroup<'a>(&'a LocusRow);

impl Serialize for NamedGroup<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let row = self.0;
        let mut m = s.serialize_map(Some(4))?;
        m.serialize_entry("family", row.family.name())?;
        m.serialize_entry("n", &row.family_n)?;
        m.serialize_entry("order", &row.order)?;
        m.serialize_entry("display", &row.group_display())?;
        m.end()
    }
}

struct Reduced<'a>(&'a LocusRow);

impl Serialize for Reduced<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("name", self.0.reduced.label())?;
        m.serialize_entry("n", &self.0.reduced_n)?;
        m.end()
    }
}

impl Serialize for LocusRow {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("LocusRow", 6)?;
        st.serialize_field("case", &self.case)?;
        st.serialize_field("reduced", &Reduced(self))?;
        st.serialize_field("group", &NamedGroup(self))?;
        st.serialize_field("delta", &self.delta)?;
        st.serialize_field("r", &self.r())?;
        st.serialize_field("signature", &self.signature)?;
        st.end()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    /// Also require n even in case 4.
    pub strict_parity: bool,
    /// Node budget for each isomorphism test during deduplication.
    pub budget: u64,
}

impl Default for Options {
    fn default() -> Options {
        Options { strict_parity: false, budget: DEFAULT_BUDGET }
    }
}

fn lookup(id: u32) -> Result<CaseSpec, ClassifyError> {
    case(id).ok_or(ClassifyError::UnknownCase(id))
}

/// δ for an admissible (case, n, g), or the reason it is not admissible.
pub fn admissible_delta(spec: &CaseSpec, n: Option<u32>, g: u32, opts: &Options) -> Result<usize, Inadmissible> {
    let parametric = spec.param != GroupParam::Fixed;
    match (parametric, n) {
        (true, None) => return Err(Inadmissible::MissingN),
        (true, Some(k)) if k < 2 => return Err(Inadmissible::SmallN),
        (false, Some(_)) => return Err(Inadmissible::UnexpectedN),
        _ => {}
    }
    let q = spec.delta.eval(g, n).ok_or(Inadmissible::MissingN)?;
    if q.is_negative() {
        if q.denom() != &1.into() {
            return Err(Inadmissible::DeltaNotIntegral(render_rat(&q)));
        }
        return Err(Inadmissible::DeltaNegative(render_rat(&q)));
    }
    let delta = as_nonnegative_int(&q).ok_or_else(|| Inadmissible::DeltaNotIntegral(render_rat(&q)))?;
    let k = n.unwrap_or(0);
    let ok = match spec.constraint {
        Constraint::None => true,
        Constraint::NLessGPlus1 => k < g + 1,
        Constraint::NLessG => k < g,
        Constraint::GNot2 => g != 2,
        Constraint::DeltaNonZero => delta != 0,
    };
    if !ok {
        return Err(Inadmissible::Constraint(spec.constraint.describe()));
    }
    if (spec.even_n || (opts.strict_parity && spec.id == 4)) && k % 2 == 1 {
        return Err(Inadmissible::Parity);
    }
    Ok(delta)
}

fn inadmissible(id: u32, n: Option<u32>, g: u32, reason: Inadmissible) -> ClassifyError {
    ClassifyError::Inadmissible { case: id, n, g, reason }
}

fn check_genus(g: u32) -> Result<(), ClassifyError> {
    if g < 2 {
        return Err(ClassifyError::Genus(g));
    }
    Ok(())
}

fn printed_signature(spec: &CaseSpec, n: Option<u32>, delta: usize) -> Signature {
    let k = n.unwrap_or(0) as usize;
    let prefix: Vec<SignatureClass> =
        spec.prefix.iter().map(|(l, c)| SignatureClass::new(l.eval(k), c.eval(k))).collect();
    let tail = SignatureClass::new(spec.tail.0.eval(k), spec.tail.1.eval(k));
    let tail_count = delta + 3 - prefix.len();
    Signature { prefix, tail, tail_count }
}

/// The signature as listed for the case, with tail count r − |prefix| where r = δ + 3.
/// Fails if the case is not admissible or the signature violates Riemann–Hurwitz.
pub fn signature(id: u32, n: Option<u32>, g: u32) -> Result<Signature, ClassifyError> {
    check_genus(g)?;
    let spec = lookup(id)?;
    let delta = admissible_delta(&spec, n, g, &Options::default()).map_err(|r| inadmissible(id, n, g, r))?;
    let sig = printed_signature(&spec, n, delta);
    rh_check(id, g, spec.group_order(n), &sig)?;
    Ok(sig)
}

/// The signature rebuilt from which branch fibers of the reduced cover consist of
/// Weierstrass points: a fiber of ramification index e contributes (2e)^{|G|/2e} if it
/// does and e^{|G|/e} otherwise, and each moving fiber contributes 2^{|G|/2}.
pub fn derived_signature(id: u32, n: Option<u32>, g: u32) -> Result<Vec<SignatureClass>, ClassifyError> {
    check_genus(g)?;
    let spec = lookup(id)?;
    let delta = admissible_delta(&spec, n, g, &Options::default()).map_err(|r| inadmissible(id, n, g, r))?;
    let order = spec.group_order(n);
    let k = n.unwrap_or(0) as usize;
    let mut out = Vec::new();
    for (b, e, _) in reduced_branching(spec.reduced, k) {
        let e = if spec.doubled.contains(&b) { 2 * e } else { e };
        out.push(SignatureClass::new(e, order / e));
    }
    let moving = if spec.reduced == ReducedGroup::Cyclic { delta + 1 } else { delta };
    out.extend(std::iter::repeat_n(SignatureClass::new(2, order / 2), moving));
    out.sort();
    Ok(out)
}

fn rh_check(id: u32, g: u32, order: usize, sig: &Signature) -> Result<(), ClassifyError> {
    let lhs = 2 * i64::from(g) - 2;
    let mut rhs = -2 * order as i64;
    let mut consistent = true;
    for c in sig.entries() {
        consistent &= c.cycle_length * c.cycle_count == order;
        rhs += (order - c.cycle_count) as i64;
    }
    if lhs != rhs || !consistent {
        return Err(ClassifyError::RiemannHurwitz { case: id, g, lhs, rhs });
    }
    Ok(())
}

/// Checks 2g − 2 = −2|G| + Σ (|G| − cycle_count) over the signature.
pub fn rh_verify(row: &LocusRow) -> Result<(), ClassifyError> {
    rh_check(row.case, row.genus, row.order, &row.signature)
}

/// The generic locus: full group Z₂, trivial reduced group, 2g + 2 Weierstrass points.
pub fn root_row(g: u32) -> Result<LocusRow, ClassifyError> {
    check_genus(g)?;
    let signature = Signature { prefix: vec![], tail: SignatureClass::new(2, 1), tail_count: 2 * g as usize + 2 };
    Ok(LocusRow {
        case: 0,
        genus: g,
        reduced: ReducedGroup::Cyclic,
        reduced_n: Some(1),
        family: Family::Cyclic,
        family_n: Some(2),
        order: 2,
        delta: 2 * g as usize - 1,
        signature,
    })
}

/// The row for one admissible (case, n, g). The listed signature is checked against
/// Riemann–Hurwitz and against the signature derived from the branching data.
pub fn row_for(id: u32, n: Option<u32>, g: u32, opts: &Options) -> Result<LocusRow, ClassifyError> {
    check_genus(g)?;
    let spec = lookup(id)?;
    let delta = admissible_delta(&spec, n, g, opts).map_err(|r| inadmissible(id, n, g, r))?;
    let sig = printed_signature(&spec, n, delta);
    let order = spec.group_order(n);
    rh_check(id, g, order, &sig)?;
    let derived = derived_signature(id, n, g)?;
    if derived != sig.multiset() {
        let show = |v: &[SignatureClass]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        return Err(ClassifyError::SignatureMismatch { case: id, printed: show(&sig.multiset()), derived: show(&derived) });
    }
    Ok(LocusRow {
        case: id,
        genus: g,
        reduced: spec.reduced,
        reduced_n: n,
        family: spec.family,
        family_n: spec.group_param(n),
        order,
        delta,
        signature: sig,
    })
}

pub fn enumerate_loci(g: u32) -> Result<Vec<LocusRow>, ClassifyError> {
    enumerate_loci_with(g, &Options::default())
}

/// All loci in genus g: the Z₂ row, then every admissible case in order of case id and n.
/// Rows with isomorphic groups and equal signatures are merged into the lowest case id.
pub fn enumerate_loci_with(g: u32, opts: &Options) -> Result<Vec<LocusRow>, ClassifyError> {
    check_genus(g)?;
    let mut candidates = vec![root_row(g)?];
    for spec in cases() {
        let ns: Vec<Option<u32>> =
            if spec.param == GroupParam::Fixed { vec![None] } else { (2..=2 * g + 2).map(Some).collect() };
        for n in ns {
            if admissible_delta(&spec, n, g, opts).is_ok() {
                candidates.push(row_for(spec.id, n, g, opts)?);
            }
        }
    }
    let mut groups: HashMap<(Family, Option<u32>), FiniteGroup> = HashMap::new();
    let mut kept: Vec<LocusRow> = Vec::new();
    for row in candidates {
        let mut duplicate = false;
        for k in &kept {
            if k.order != row.order || k.signature.multiset() != row.signature.multiset() {
                continue;
            }
            if (k.family, k.family_n) == (row.family, row.family_n) {
                duplicate = true;
                break;
            }
            for r in [k, &row] {
                if let std::collections::hash_map::Entry::Vacant(e) = groups.entry((r.family, r.family_n)) {
                    e.insert(r.group()?);
                }
            }
            let (a, b) = (&groups[&(k.family, k.family_n)], &groups[&(row.family, row.family_n)]);
            match is_isomorphic_budget(a, b, opts.budget) {
                Search::Found { .. } => {
                    duplicate = true;
                    break;
                }
                Search::NotFound => {}
                Search::Exhausted => return Err(ClassifyError::Undetermined(k.group_display(), row.group_display())),
            }
        }
        if !duplicate {
            kept.push(row);
        }
    }
    Ok(kept)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(l: usize, c: usize) -> SignatureClass {
        SignatureClass::new(l, c)
    }

    #[test]
    fn listed_signatures() {
        let s = signature(1, Some(2), 4).unwrap();
        assert_eq!(s.prefix, vec![sc(2, 2), sc(2, 2)]);
        assert_eq!((s.tail, s.tail_count), (sc(2, 2), 5));
        let s = signature(6, Some(2), 2).unwrap();
        assert_eq!(s.entries(), vec![sc(4, 2), sc(2, 4), sc(2, 4), sc(2, 4)]);
        let s = signature(24, None, 29).unwrap();
        assert_eq!(s.entries(), vec![sc(3, 40), sc(5, 24), sc(2, 60), sc(2, 60)]);
    }

    #[test]
    fn inadmissible_triples() {
        let err = signature(13, None, 4).unwrap_err();
        assert!(matches!(err, ClassifyError::Inadmissible { reason: Inadmissible::DeltaNotIntegral(_), .. }));
        let err = signature(8, Some(4), 2).unwrap_err();
        assert!(matches!(err, ClassifyError::Inadmissible { reason: Inadmissible::Constraint(_), .. }));
        let err = signature(5, Some(3), 4).unwrap_err();
        assert!(matches!(err, ClassifyError::Inadmissible { .. }));
        assert!(matches!(signature(12, None, 3), Err(ClassifyError::Inadmissible { .. })));
        assert!(matches!(signature(40, None, 3), Err(ClassifyError::UnknownCase(40))));
    }

    #[test]
    fn genus_four_rows() {
        let rows = enumerate_loci(4).unwrap();
        let got: Vec<(u32, String, usize)> = rows.iter().map(|r| (r.case, r.group_display(), r.delta)).collect();
        let want = [
            (0, "Z2", 7),
            (1, "Z2xZ2", 4),
            (2, "Z6", 2),
            (2, "Z18", 0),
            (3, "Z4", 3),
            (4, "Z2xD[ord=10]", 1),
            (5, "V2", 2),
            (5, "V10", 0),
            (6, "D[ord=16]", 1),
            (8, "U8", 0),
            (9, "G2", 1),
            (14, "SL2(3)", 0),
        ];
        let want: Vec<(u32, String, usize)> = want.iter().map(|(c, s, d)| (*c, s.to_string(), *d)).collect();
        assert_eq!(got, want);
        for r in &rows {
            rh_verify(r).unwrap();
        }
    }

    #[test]
    fn strict_parity_drops_odd_case_four() {
        let strict = Options { strict_parity: true, ..Options::default() };
        let rows = enumerate_loci_with(4, &strict).unwrap();
        assert!(rows.iter().all(|r| r.case != 4));
    }

    #[test]
    fn json_shape() {
        let row = row_for(6, Some(2), 4, &Options::default()).unwrap();
        let v = serde_json::to_value(&row).unwrap();
        assert_eq!(v["group"]["order"], 8);
        assert_eq!(v["reduced"]["name"], "D");
        assert_eq!(v["signature"][0], serde_json::json!([4, 2]));
        assert_eq!(v["r"], 5);
    }
}
