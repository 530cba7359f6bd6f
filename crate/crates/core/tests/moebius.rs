use hyperloci::exactnum::CycNum;
use hyperloci::moebius::{
    branch_points, cover_data, fiber_poly, fixed_field_generator, is_moebius_equivalent, lemma2_map, quotient_map,
    standard_embedding, verify_invariant, MoebiusElt, ProjPoint, ReducedGroup,
};
use hyperloci::polyalg::{power_decompose, squarefree_decomposition, Poly, RationalMap};
use hyperloci::text::{parse_constant, parse_poly};

fn finite(s: &str) -> ProjPoint {
    ProjPoint::Finite(parse_constant(s).unwrap())
}

fn same_set(mut a: Vec<ProjPoint>, mut b: Vec<ProjPoint>) -> bool {
    let key = |p: &ProjPoint| p.to_string();
    a.sort_by_key(key);
    b.sort_by_key(key);
    a == b
}

#[test]
fn branch_point_lists() {
    for n in 2..=12 {
        let z = cover_data(ReducedGroup::Cyclic, Some(n)).unwrap();
        assert!(same_set(z.branch_points, vec![finite("0"), ProjPoint::Infinity]), "Z{n}");
        let d = cover_data(ReducedGroup::Dihedral, Some(n)).unwrap();
        assert!(same_set(d.branch_points, vec![finite("-2"), finite("2"), ProjPoint::Infinity]), "D{n}");
    }
    let a4 = cover_data(ReducedGroup::A4, None).unwrap();
    assert!(same_set(a4.branch_points, vec![ProjPoint::Infinity, finite("6*I*sqrt3"), finite("-6*I*sqrt3")]));
    let s4 = cover_data(ReducedGroup::S4, None).unwrap();
    assert!(same_set(s4.branch_points, vec![finite("0"), finite("1"), ProjPoint::Infinity]));
    let a5 = cover_data(ReducedGroup::A5, None).unwrap();
    assert!(same_set(a5.branch_points, vec![finite("0"), finite("1728"), ProjPoint::Infinity]));
}

#[test]
fn branching_indices() {
    let profile = |g, n| {
        let c = cover_data(g, n).unwrap();
        let mut v: Vec<(usize, usize)> = c.fibers.iter().map(|f| (f.index, f.size())).collect();
        v.sort_unstable();
        v
    };
    assert_eq!(profile(ReducedGroup::Cyclic, Some(7)), vec![(7, 1), (7, 1)]);
    assert_eq!(profile(ReducedGroup::Dihedral, Some(5)), vec![(2, 5), (2, 5), (5, 2)]);
    assert_eq!(profile(ReducedGroup::A4, None), vec![(2, 6), (3, 4), (3, 4)]);
    assert_eq!(profile(ReducedGroup::S4, None), vec![(2, 12), (3, 8), (4, 6)]);
    assert_eq!(profile(ReducedGroup::A5, None), vec![(2, 30), (3, 20), (5, 12)]);
}

#[test]
fn dihedral_discriminant_points() {
    // x^n + 1/x^n ramifies over ±2 and ∞ only
    let m = RationalMap::new(Poly::from_terms(&[(8, 1), (0, 1)]), Poly::from_terms(&[(4, 1)])).unwrap();
    let pts = branch_points(&m, 8).unwrap();
    assert!(same_set(pts, vec![finite("2"), finite("-2"), ProjPoint::Infinity]));
}

fn check_generator(g: ReducedGroup, n: Option<u32>) {
    let h = standard_embedding(g, n).unwrap();
    let generated = fixed_field_generator(&h).unwrap();
    let printed = lemma2_map(g, n).unwrap();
    assert_eq!(generated.degree(), h.order());
    assert!(verify_invariant(&generated, &h));
    assert!(verify_invariant(&printed, &h));
    let m = is_moebius_equivalent(&generated, &printed).unwrap_or_else(|| panic!("{}", g.display(n)));
    assert_eq!(generated.post_compose(m.entries()).unwrap(), printed);
}

#[test]
fn fixed_field_generators_match_printed_maps() {
    for n in 2..=8 {
        check_generator(ReducedGroup::Cyclic, Some(n));
        check_generator(ReducedGroup::Dihedral, Some(n));
    }
    check_generator(ReducedGroup::A4, None);
    check_generator(ReducedGroup::S4, None);
    check_generator(ReducedGroup::A5, None);
}

#[test]
fn inequivalent_maps() {
    let cube = RationalMap::power(3);
    let other = RationalMap::polynomial(Poly::from_ints(&[0, 1, 0, 1]));
    assert!(is_moebius_equivalent(&cube, &other).is_none());
    assert!(is_moebius_equivalent(&cube, &RationalMap::power(4)).is_none());
    let flipped = cube.pre_compose([&CycNum::zero(), &CycNum::one(), &CycNum::one(), &CycNum::zero()]).unwrap();
    assert!(is_moebius_equivalent(&cube, &flipped).is_some());
}

#[test]
fn a5_group() {
    let h = standard_embedding(ReducedGroup::A5, None).unwrap();
    assert_eq!(h.order(), 60);
    assert_eq!(h.order_statistics(), vec![(1, 1), (2, 15), (3, 20), (5, 24)]);
    let m = quotient_map(ReducedGroup::A5, None).unwrap();
    assert_eq!(m.degree(), 60);
    assert!(verify_invariant(&m, &h));
    let over_1728 = fiber_poly(&m, &finite("1728")).unwrap();
    assert_eq!((over_1728.index, over_1728.size()), (2, 30));
    let p = m.nf() - &m.df().scale(&CycNum::from_int(1728));
    assert_eq!(squarefree_decomposition(&p).profile(), vec![(2, 30)]);
}

#[test]
fn group_orders() {
    let order = |g, n| standard_embedding(g, n).unwrap().order();
    assert_eq!(order(ReducedGroup::Cyclic, Some(9)), 9);
    assert_eq!(order(ReducedGroup::Dihedral, Some(6)), 12);
    assert_eq!(order(ReducedGroup::A4, None), 12);
    assert_eq!(order(ReducedGroup::S4, None), 24);
}

#[test]
fn a4_fibers_are_cubes_of_quartics() {
    let m = quotient_map(ReducedGroup::A4, None).unwrap();
    let q = parse_poly("x^4 + 2*I*sqrt3*x^2 + 1", "x").unwrap();
    let f = fiber_poly(&m, &finite("-6*I*sqrt3")).unwrap();
    assert_eq!(f.index, 3);
    assert_eq!(f.poly, q);
    let conj = fiber_poly(&m, &finite("6*I*sqrt3")).unwrap();
    assert_eq!(conj.poly, q.galois(-1));
    assert_eq!(&f.poly * &conj.poly, Poly::from_terms(&[(8, 1), (4, 14), (0, 1)]));
    let full = m.nf() - &m.df().scale(&parse_constant("-6*I*sqrt3").unwrap());
    assert_eq!(full.monic(), q.pow(3));
}

#[test]
fn s4_map_is_a_fourth_power_composite() {
    let m = lemma2_map(ReducedGroup::S4, None).unwrap();
    let (s, g) = power_decompose(&m);
    assert_eq!(s, 4);
    assert_eq!(g.degree(), 6);
    assert_eq!(g.inflate(4), m);
}

#[test]
fn moebius_elements() {
    let a = MoebiusElt::from_ints(0, -1, 1, 0).unwrap();
    assert_eq!(a.order(12), Some(2));
    let b = MoebiusElt::from_ints(1, 1, -1, 1).unwrap();
    assert_eq!(b.order(12), Some(4));
    assert!(a.compose(&a.inverse()).is_identity());
    assert!(MoebiusElt::from_ints(1, 2, 2, 4).is_err());
}
