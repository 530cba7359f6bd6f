use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use hyperloci::classify::{case, count_formulas, enumerate_loci, row_for, GroupParam, LocusRow, Options};
use hyperloci::equations::{build_family, verify_family};
use hyperloci::grouptheory::{coset_enumerate, construct, is_isomorphic, presentation, Family, COSET_CAP};
use hyperloci::lattice::build_lattice;
use hyperloci::moebius::{
    cover_data, fixed_field_generator, is_moebius_equivalent, lemma2_map, standard_embedding, verify_invariant, ProjPoint,
    ReducedGroup,
};
use hyperloci::text::parse_constant;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn point_set(points: &[ProjPoint]) -> BTreeSet<String> {
    points.iter().map(|p| p.to_string()).collect()
}

fn expected_points(list: &[&str]) -> BTreeSet<String> {
    list.iter()
        .map(|s| if *s == "inf" { ProjPoint::Infinity } else { ProjPoint::Finite(parse_constant(s).unwrap()) })
        .map(|p| p.to_string())
        .collect()
}

fn branch_points() -> Outcome {
    let check = |g: ReducedGroup, n: Option<u32>, want: &[&str]| -> Result<(), String> {
        let c = cover_data(g, n).map_err(|e| e.to_string())?;
        ensure(point_set(&c.branch_points) == expected_points(want), format!("{}: {:?}", g.display(n), point_set(&c.branch_points)))
    };
    for n in 2..=12 {
        check(ReducedGroup::Cyclic, Some(n), &["0", "inf"])?;
        check(ReducedGroup::Dihedral, Some(n), &["2", "-2", "inf"])?;
    }
    check(ReducedGroup::A4, None, &["6*I*sqrt3", "-6*I*sqrt3", "inf"])?;
    check(ReducedGroup::S4, None, &["0", "1", "inf"])?;
    check(ReducedGroup::A5, None, &["0", "1728", "inf"])?;
    Ok("Z_n, D_n (n = 2..12), A4, S4, A5".into())
}

fn moebius_equivalence() -> Outcome {
    let mut groups: Vec<(ReducedGroup, Option<u32>)> = Vec::new();
    for n in 2..=12 {
        groups.push((ReducedGroup::Cyclic, Some(n)));
        groups.push((ReducedGroup::Dihedral, Some(n)));
    }
    groups.extend([(ReducedGroup::A4, None), (ReducedGroup::S4, None), (ReducedGroup::A5, None)]);
    for &(g, n) in &groups {
        let h = standard_embedding(g, n).map_err(|e| e.to_string())?;
        let generated = fixed_field_generator(&h).map_err(|e| e.to_string())?;
        let printed = lemma2_map(g, n).map_err(|e| e.to_string())?;
        ensure(generated.degree() == h.order(), format!("{}: degree", g.display(n)))?;
        ensure(verify_invariant(&printed, &h), format!("{}: printed map not invariant", g.display(n)))?;
        let m = is_moebius_equivalent(&generated, &printed).ok_or(format!("{}: not equivalent", g.display(n)))?;
        let composed = generated.post_compose(m.entries()).map_err(|e| e.to_string())?;
        ensure(composed == printed, format!("{}: composition mismatch", g.display(n)))?;
    }
    Ok(format!("{} groups", groups.len()))
}

fn table_consistency() -> Outcome {
    let mut rows_seen = 0;
    for g in 2..=30 {
        for row in enumerate_loci(g).map_err(|e| e.to_string())? {
            let sum: i64 = row.signature.entries().iter().map(|c| (c.cycle_count * (c.cycle_length - 1)) as i64).sum();
            ensure(2 * i64::from(g) - 2 == -2 * row.order as i64 + sum, format!("g = {g} case {}: RH", row.case))?;
            ensure(row.delta + 3 == row.r(), format!("g = {g} case {}: delta", row.case))?;
            let fam = build_family(&row).map_err(|e| format!("g = {g} case {}: {e}", row.case))?;
            let d = fam.degree();
            ensure(d == 2 * g as usize + 1 || d == 2 * g as usize + 2, format!("g = {g} case {}: degree {d}", row.case))?;
            ensure(fam.params == row.delta, format!("g = {g} case {}: params", row.case))?;
            rows_seen += 1;
        }
    }
    Ok(format!("{rows_seen} rows"))
}

fn genus_four_lattice() -> Outcome {
    let lat = build_lattice(4, &Options::default()).map_err(|e| e.to_string())?;
    ensure(lat.nodes.len() == 12, format!("{} loci", lat.nodes.len()))?;
    let rows = enumerate_loci(4).map_err(|e| e.to_string())?;
    let mut hist = BTreeMap::new();
    for r in &rows {
        *hist.entry(r.delta).or_insert(0usize) += 1;
    }
    let want_hist: BTreeMap<usize, usize> = [(7, 1), (4, 1), (3, 1), (2, 2), (1, 3), (0, 4)].into_iter().collect();
    ensure(hist == want_hist, format!("histogram {hist:?}"))?;
    let names: BTreeSet<&str> = lat.nodes.iter().map(|n| n.name.as_str()).collect();
    let want_names: BTreeSet<&str> =
        ["Z2", "Z4", "Z2xZ2", "Z6", "G2", "V2", "D[ord=16]", "Z18", "Z2xD[ord=10]", "SL2(3)", "U8", "V10"].into();
    ensure(names == want_names, format!("groups {names:?}"))?;
    let figure: BTreeSet<(String, String)> = [
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
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    let edges: BTreeSet<(String, String)> = lat.edge_names().into_iter().collect();
    let extra: Vec<_> = edges.difference(&figure).collect();
    let missing: Vec<_> = figure.difference(&edges).collect();
    ensure(extra.is_empty() && missing.is_empty(), format!("edges differ: extra {extra:?}, missing {missing:?}"))?;
    Ok("12 loci, histogram, groups and edges".into())
}

fn enumerated_order(f: Family, n: Option<u32>) -> Result<usize, String> {
    let p = presentation(f, n).map_err(|e| e.to_string())?;
    Ok(coset_enumerate(&p, COSET_CAP).map_err(|e| e.to_string())?.order())
}

fn group_orders() -> Outcome {
    let mut wrong = Vec::new();
    for n in 2..=8u32 {
        for f in [Family::V, Family::H, Family::G, Family::U] {
            let ord = enumerated_order(f, Some(n))?;
            if ord != 4 * n as usize {
                wrong.push(format!("|{f}{n}| = {ord}"));
            }
        }
    }
    for (f, want) in [(Family::W2, 48), (Family::W3, 48)] {
        let ord = enumerated_order(f, None)?;
        if ord != want {
            wrong.push(format!("|{f}| = {ord}"));
        }
    }
    for (f, want) in [(Family::SL23, 24), (Family::GL23, 48), (Family::SL25, 120)] {
        let ord = construct(f, None).map_err(|e| e.to_string())?.order();
        if ord != want {
            wrong.push(format!("|{f}| = {ord}"));
        }
    }
    ensure(wrong.is_empty(), wrong.join(", "))?;
    Ok("all orders".into())
}

fn group_isomorphisms() -> Outcome {
    let g = |f: Family, n: Option<u32>| construct(f, n).map_err(|e| e.to_string());
    let pairs = [
        ("H2 ~ U2", (Family::H, Some(2)), (Family::U, Some(2))),
        ("H2 ~ Z2xZ4", (Family::H, Some(2)), (Family::Z2xZ, Some(4))),
        ("V2 ~ D8", (Family::V, Some(2)), (Family::Dihedral, Some(4))),
        ("G2 ~ Q8", (Family::G, Some(2)), (Family::Quaternion, Some(8))),
        ("H4 ~ G4", (Family::H, Some(4)), (Family::G, Some(4))),
        ("H12 ~ G12", (Family::H, Some(12)), (Family::G, Some(12))),
        ("G4 ~ Q16", (Family::G, Some(4)), (Family::Quaternion, Some(16))),
        ("G8 ~ Q32", (Family::G, Some(8)), (Family::Quaternion, Some(32))),
    ];
    let mut wrong = Vec::new();
    for (label, (fa, na), (fb, nb)) in pairs {
        if !is_isomorphic(&g(fa, na)?, &g(fb, nb)?) {
            wrong.push(label);
        }
    }
    ensure(wrong.is_empty(), format!("not isomorphic: {}", wrong.join(", ")))?;
    Ok(format!("{} pairs", pairs.len()))
}

fn smallest_row(id: u32) -> Option<LocusRow> {
    let opts = Options::default();
    let parametric = case(id)?.param != GroupParam::Fixed;
    for g in 2..=200 {
        let ns: Vec<Option<u32>> = if parametric { (2..=2 * g + 2).map(Some).collect() } else { vec![None] };
        for n in ns {
            if let Ok(row) = row_for(id, n, g, &opts) {
                return Some(row);
            }
        }
    }
    None
}

fn family_verification() -> Outcome {
    for id in 1..=31 {
        let row = smallest_row(id).ok_or(format!("case {id} never admissible"))?;
        let fam = build_family(&row).map_err(|e| format!("case {id}: {e}"))?;
        let report = verify_family(&fam, 100, u64::from(id)).map_err(|e| format!("case {id} g = {}: {e}", row.genus))?;
        ensure(report.trials == 100, format!("case {id}: {} trials", report.trials))?;
    }
    Ok("31 cases x 100 trials".into())
}

fn counting() -> Outcome {
    let r = count_formulas(4).map_err(|e| e.to_string())?;
    ensure(r.n1_formula == 8, format!("g = 4: n1 = {}", r.n1_formula))?;
    let mut report = Vec::new();
    for g in 2..=30 {
        let r = count_formulas(g).map_err(|e| e.to_string())?;
        let total: usize = r.enumerated.iter().map(|(_, c)| c).sum();
        ensure(total == enumerate_loci(g).map_err(|e| e.to_string())?.len(), format!("g = {g}: enumeration total"))?;
        if g % 7 == 4 {
            report.push(format!("g={g} n1={} n2={} enum={:?}", r.n1_formula, r.n2_formula, r.enumerated));
        }
    }
    Ok(report.join("; "))
}

fn main() {
    let criteria: [Criterion; 8] = [
        (1, "branch points", Duration::from_secs(10), branch_points),
        (2, "fixed-field generators", Duration::from_secs(60), moebius_equivalence),
        (3, "table consistency g = 2..30", Duration::from_secs(120), table_consistency),
        (4, "genus 4 lattice", Duration::from_secs(60), genus_four_lattice),
        (5, "group orders", Duration::from_secs(120), group_orders),
        (6, "isomorphisms", Duration::from_secs(120), group_isomorphisms),
        (7, "family verification", Duration::from_secs(300), family_verification),
        (8, "counting formulas", Duration::from_secs(60), counting),
    ];
    let mut failed = 0;
    for (k, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > limit => Err(format!("{detail}; took {elapsed:.1?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("ACCEPTANCE {k}: PASS: {name}: {detail} ({elapsed:.2?})"),
            Err(detail) => {
                failed += 1;
                println!("ACCEPTANCE {k}: FAIL: {name}: {detail} ({elapsed:.2?})");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
