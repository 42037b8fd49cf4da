use std::collections::BTreeMap;

use supersolve::{data, parallel};
use supersolve_core::generators::reflection_arrangement;
use supersolve_core::*;

/// (number of r-fold points on the line) for each line, tallied.
fn line_profiles(a: &Arrangement) -> BTreeMap<Vec<(usize, usize)>, usize> {
    let mut out = BTreeMap::new();
    for l in a.lines() {
        let mut on: BTreeMap<usize, usize> = BTreeMap::new();
        for p in a.points_on_line(l, 2).unwrap() {
            *on.entry(a.singular_locus().multiplicity(&p)).or_default() += 1;
        }
        *out.entry(on.into_iter().collect()).or_default() += 1;
    }
    out
}

fn cost_table(a: &Arrangement) -> BTreeMap<(usize, usize), usize> {
    let mut out = BTreeMap::new();
    for (p, ls) in a.singular_locus().iter() {
        *out.entry((ls.len(), cone_cost(a, p).cost)).or_default() += 1;
    }
    out
}

#[test]
fn klein_arrangement() {
    let k = data::klein();
    assert_eq!(k.group_order, 168);
    assert_eq!(k.reflection_classes, 21);
    let a = &k.arrangement;
    assert_eq!(a.len(), 21);
    assert_eq!(
        a.weak_combinatorics().counts().collect::<Vec<_>>(),
        [(3, 28), (4, 21)]
    );
    assert_eq!(
        line_profiles(a),
        BTreeMap::from([(vec![(3, 4), (4, 4)], 21)])
    );
    // free with exponents (1, 9, 11)
    assert_eq!(
        poincare(&a.weak_combinatorics()).split_exponents(),
        Some(ExponentTriple::new(9, 11))
    );
    assert!(is_supersolvable(a).is_none());
}

#[test]
fn klein_cones() {
    let a = data::klein().arrangement;
    // every quadruple point sees the 20 remaining singular points along 12 lines
    assert_eq!(
        cost_table(&a),
        BTreeMap::from([((3, 21), 28), ((4, 12), 21)])
    );
    let ub = extss_upper_bound(&a);
    assert_eq!(ub.k, 12);
    assert_eq!(a.singular_locus().multiplicity(&ub.apex), 4);
    let report = validate_chain(&cone_extension(&a, &ub.apex)).unwrap();
    let w = report.final_arrangement.weak_combinatorics();
    assert_eq!(w.lines(), 33);
    assert_eq!(
        w.counts().collect::<Vec<_>>(),
        [(2, 136), (3, 16), (4, 24), (5, 8), (16, 1)]
    );
    assert_eq!(
        poincare(&w).split_exponents(),
        Some(ExponentTriple::new(15, 17))
    );
}

#[test]
fn wiman_arrangement_and_cones() {
    let r = data::wiman();
    assert_eq!(r.group_order, 360);
    assert_eq!(r.reflection_classes, 45);
    let a = &r.arrangement;
    assert_eq!(
        a.weak_combinatorics().counts().collect::<Vec<_>>(),
        [(3, 120), (4, 45), (5, 36)]
    );
    assert_eq!(
        line_profiles(a),
        BTreeMap::from([(vec![(3, 8), (4, 4), (5, 4)], 45)])
    );
    assert_eq!(
        cost_table(a),
        BTreeMap::from([((3, 113), 120), ((4, 64), 45), ((5, 85), 36)])
    );
    let quintuple = a
        .singular_locus()
        .iter()
        .find(|(_, ls)| ls.len() == 5)
        .unwrap()
        .0
        .clone();
    let report = validate_chain(&cone_extension(a, &quintuple)).unwrap();
    let w = report.final_arrangement.weak_combinatorics();
    assert_eq!(w.lines(), 130);
    assert_eq!(
        w.counts().collect::<Vec<_>>(),
        [(2, 2960), (3, 40), (4, 100), (5, 40), (6, 20), (90, 1)]
    );
    assert_eq!(
        poincare(&w).split_exponents(),
        Some(ExponentTriple::new(40, 89))
    );
    assert_eq!(parallel::extss_upper_bound(a, 4).k, 64);
}

#[test]
fn closure_bound_stops_infinite_groups() {
    // diag(1, 2, 1) has infinite order
    let data = generators::ReflectionGroupData {
        name: "bad".into(),
        conductor: 3,
        generators: vec![Matrix3::from_ints([[1, 0, 0], [0, 2, 0], [0, 0, 1]])],
    };
    assert!(matches!(
        reflection_arrangement(&data),
        Err(Error::ClosureTooLarge { .. })
    ));
}
