mod common;

use proptest::prelude::*;
use supersolve_core::generators::*;
use supersolve_core::*;

fn coords() -> impl Strategy<Value = [i64; 3]> {
    prop::array::uniform3(-9i64..=9).prop_filter("zero vector", |c| c.iter().any(|&x| x != 0))
}

proptest! {
    #[test]
    fn canonical_form_ignores_scaling(c in coords(), s in (-7i64..=7).prop_filter("zero", |&s| s != 0)) {
        let p = ProjPoint::from_ints(c[0], c[1], c[2]);
        let q = ProjPoint::from_ints(s * c[0], s * c[1], s * c[2]);
        prop_assert_eq!(&p, &q);
        prop_assert!(p.coords().iter().find(|x| !x.is_zero()).unwrap().is_one());
    }

    #[test]
    fn join_and_meet_are_incident(a in coords(), b in coords()) {
        let p = ProjPoint::from_ints(a[0], a[1], a[2]);
        let q = ProjPoint::from_ints(b[0], b[1], b[2]);
        prop_assume!(p != q);
        let l = join(&p, &q).unwrap();
        prop_assert!(incident(&p, &l) && incident(&q, &l));
        let (m, n) = (p.dual(), q.dual());
        let x = meet(&m, &n).unwrap();
        prop_assert!(incident(&x, &m) && incident(&x, &n));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn t_vectors_and_extss_are_projective_invariants(m in common::invertible_matrix()) {
        for a in [paper_l(), pappus_p(), generic_arrangement(5, 3).unwrap(), boroczky(7).unwrap()] {
            let b = a.transformed(&m).unwrap();
            prop_assert_eq!(a.weak_combinatorics(), b.weak_combinatorics());
            let ka = extss_exact(&a, DEFAULT_CANDIDATE_BUDGET).unwrap().k;
            let kb = extss_exact(&b, DEFAULT_CANDIDATE_BUDGET).unwrap().k;
            prop_assert_eq!(ka, kb);
        }
    }

    #[test]
    fn singular_points_move_with_the_transform(m in common::invertible_matrix()) {
        let a = pappus_p();
        let b = a.transformed(&m).unwrap();
        for (p, lines) in a.singular_locus().iter() {
            let q = m.apply_point(p).unwrap();
            prop_assert_eq!(b.singular_locus().multiplicity(&q), lines.len());
        }
    }
}

#[test]
fn count_identity_holds_for_every_generator() {
    let mut all = common::small_fixtures();
    for n in 3..=5 {
        all.push((format!("fermat({n})"), fermat(n).unwrap()));
        all.push((format!("fermat_extended({n})"), fermat_extended(n).unwrap()));
    }
    for n in 9..=16 {
        all.push((format!("B{n}"), boroczky(n).unwrap()));
    }
    for d in 7..=10 {
        all.push((format!("generic({d})"), generic_arrangement(d, 11).unwrap()));
    }
    for (name, a) in all {
        assert!(a.weak_combinatorics().satisfies_count_identity(), "{name}");
    }
}

#[test]
fn generic_arrangements_are_deterministic_and_simple() {
    for d in 3..=8 {
        let a = generic_arrangement(d, 42).unwrap();
        assert_eq!(a, generic_arrangement(d, 42).unwrap());
        let w = a.weak_combinatorics();
        assert_eq!(w.t(2), d * (d - 1) / 2);
        assert_eq!(w.singular_points(), w.t(2));
    }
    assert_ne!(
        generic_arrangement(6, 1).unwrap(),
        generic_arrangement(6, 2).unwrap()
    );
}

#[test]
fn points_on_line_respects_multiplicity() {
    let f = fermat_extended(3).unwrap();
    let x = ProjLine::from_ints(1, 0, 0);
    let all = f.points_on_line(&x, 2).unwrap();
    let high = f.points_on_line(&x, 4).unwrap();
    assert!(high.len() < all.len());
    assert!(high.iter().all(|p| f.singular_locus().multiplicity(p) >= 4));
    assert!(f.points_on_line(&ProjLine::from_ints(1, 2, 3), 2).is_err());
}
