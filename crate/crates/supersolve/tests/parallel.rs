use supersolve::parallel;
use supersolve_core::generators::{
    boroczky, fermat, generic_arrangement, near_pencil, paper_l, pappus_p,
};
use supersolve_core::{extss_exact, extss_upper_bound, Arrangement, DEFAULT_CANDIDATE_BUDGET};

fn fixtures() -> Vec<Arrangement> {
    vec![
        paper_l(),
        pappus_p(),
        fermat(3).unwrap(),
        boroczky(9).unwrap(),
        near_pencil(6).unwrap(),
        generic_arrangement(6, 2).unwrap(),
    ]
}

#[test]
fn parallel_solver_matches_sequential() {
    for a in fixtures() {
        let seq = extss_exact(&a, DEFAULT_CANDIDATE_BUDGET).unwrap();
        let upper = extss_upper_bound(&a);
        for threads in [1, 2, 4, 8] {
            assert_eq!(
                parallel::extss_exact(&a, DEFAULT_CANDIDATE_BUDGET, threads).unwrap(),
                seq
            );
            assert_eq!(parallel::extss_upper_bound(&a, threads), upper);
        }
    }
}

#[test]
fn parallel_budget_is_enforced() {
    assert!(parallel::extss_exact(&boroczky(12).unwrap(), 50, 4).is_err());
}
