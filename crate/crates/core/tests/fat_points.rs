mod common;

use proptest::prelude::*;
use supersolve_core::generators::*;
use supersolve_core::unexpected::*;
use supersolve_core::*;

fn triple_points(n: u32) -> (Arrangement, FatPointScheme) {
    let b = boroczky(n).unwrap();
    let t: Vec<ProjPoint> = b
        .singular_locus()
        .iter()
        .filter(|(_, ls)| ls.len() == 3)
        .map(|(p, _)| p.clone())
        .collect();
    (b, FatPointScheme::uniform(t, 3).unwrap())
}

fn product_of_lines(a: &Arrangement) -> TernaryForm {
    a.lines()
        .iter()
        .fold(TernaryForm::constant(Scalar::one()), |f, l| {
            f.mul(&TernaryForm::linear(l))
        })
}

fn lies_in(f: &TernaryForm, x: &FatPointScheme, deg: usize) -> bool {
    let monos = monomials(deg as u32);
    let dense: Vec<Scalar> = monos
        .iter()
        .map(|m| {
            f.terms()
                .find(|(e, _)| *e == m)
                .map(|(_, c)| c.clone())
                .unwrap_or_default()
        })
        .collect();
    x.conditions(deg as u32).iter().all(|row| {
        row.iter()
            .zip(&dense)
            .fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b))
            .is_zero()
    })
}

#[test]
fn no_triple_curves_below_degree_n() {
    // vanishing in degree n − 1 forces vanishing below (multiply by a linear form)
    for n in 8..=14u32 {
        let (_, x) = triple_points(n);
        assert_eq!(ideal_dimension(&x, n as usize - 1), 0, "T{n}");
    }
}

#[test]
fn degree_n_curves_through_triple_points() {
    // 3, 3, 1 are the exact ranks; the float SVD oracle agrees
    for (n, dim) in [(8u32, 3usize), (9, 3), (10, 1)] {
        let (b, x) = triple_points(n);
        let deg = n as usize;
        assert_eq!(ideal_dimension(&x, deg), dim, "T{n}");
        assert!(lies_in(&product_of_lines(&b), &x, deg));
    }
}

#[test]
fn unique_decic_is_the_line_product() {
    let (b, x) = triple_points(10);
    let basis = ideal_basis(&x, 10);
    assert_eq!(basis.len(), 1);
    let mut f = basis[0].clone();
    for l in b.lines() {
        f = f
            .divide_by_line(l)
            .unwrap_or_else(|| panic!("{l} does not divide"));
    }
    assert!(f.terms().all(|(e, _)| *e == [0, 0, 0]));
    assert!(!f.is_zero());
}

#[test]
fn line_division() {
    let l = ProjLine::from_ints(1, -2, 3);
    let m = ProjLine::from_ints(0, 1, 1);
    let f = TernaryForm::linear(&l).mul(&TernaryForm::linear(&m));
    assert_eq!(f.divide_by_line(&m), Some(TernaryForm::linear(&l)));
    assert!(f.divide_by_line(&ProjLine::from_ints(1, 1, 1)).is_none());
}

#[test]
fn unexpected_curve_on_extended_fermat_dual() {
    let e = fermat_extended(3).unwrap();
    let z = DualPoints::of(&e);
    let rows = unexpected_scan(&z, 2..e.len(), 3, 7).unwrap();
    let hits: Vec<usize> = rows
        .iter()
        .filter(|r| r.unexpected)
        .map(|r| r.degree)
        .collect();
    assert_eq!(hits, [5]);
    assert!(supersolvable_criterion(&e).unwrap());
}

#[test]
fn no_unexpected_curve_on_b6_dual() {
    let b = boroczky(6).unwrap();
    let z = DualPoints::of(&b);
    let rows = unexpected_scan(&z, 2..b.len(), 3, 7).unwrap();
    assert!(rows.iter().all(|r| !r.unexpected));
    assert!(!supersolvable_criterion(&b).unwrap());
}

#[test]
fn criterion_agrees_with_scan_on_supersolvable_duals() {
    let cases = [
        fermat_extended(2).unwrap(),
        fermat_extended(3).unwrap(),
        near_pencil(5).unwrap(),
        near_pencil(7).unwrap(),
        boroczky(6).unwrap(),
    ];
    for a in cases {
        let z = DualPoints::of(&a);
        let scan = unexpected_scan(&z, 2..a.len(), 3, 1)
            .unwrap()
            .iter()
            .any(|r| r.unexpected);
        assert_eq!(
            scan,
            supersolvable_criterion(&a).unwrap(),
            "{} lines",
            a.len()
        );
    }
    assert!(matches!(
        supersolvable_criterion(&paper_l()),
        Err(Error::NotSupersolvable)
    ));
}

#[test]
fn actual_dimension_dominates_expected() {
    for n in [6u32, 7, 8] {
        let (_, x) = triple_points(n);
        for deg in 2..=n as usize {
            assert!(ideal_dimension(&x, deg) >= expected_dimension(&x, deg));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn ideal_dimension_is_projectively_invariant(m in common::invertible_matrix()) {
        let pts: Vec<ProjPoint> = pappus_p().singular_locus().points().cloned().collect();
        let moved: Vec<ProjPoint> = pts.iter().map(|p| m.apply_point(p).unwrap()).collect();
        let (x, y) = (FatPointScheme::uniform(pts, 2).unwrap(), FatPointScheme::uniform(moved, 2).unwrap());
        for deg in [4, 5, 6] {
            prop_assert_eq!(ideal_dimension(&x, deg), ideal_dimension(&y, deg));
        }
    }
}
