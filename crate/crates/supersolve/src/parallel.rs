//! Thread-pool versions of the solver loops. Reductions use the same canonical
//! tie-break as the sequential code, so results do not depend on the schedule.

use rayon::prelude::*;
use supersolve_core::solver::Augmentation;
use supersolve_core::{cone_cost, Arrangement, CandidateSet, ExtSsMode, ExtSsResult, Result};

fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
}

/// Exact extSS with candidate construction and evaluation spread over `threads` workers.
pub fn extss_exact(a: &Arrangement, budget: u64, threads: usize) -> Result<ExtSsResult> {
    pool(threads).install(|| {
        let aug = Augmentation::new(a, budget)?;
        let meets: Vec<_> = (0..aug.len())
            .into_par_iter()
            .flat_map_iter(|i| aug.meets_from(i))
            .collect();
        let set = CandidateSet::assemble(aug, meets);
        let best = (0..set.len())
            .into_par_iter()
            .map(|i| set.cost_at(i))
            .reduce_with(|x, y| CandidateSet::best_of([x, y]).expect("two candidates"))
            .expect("candidate set is never empty");
        Ok(set.finish(a, best))
    })
}

/// Singular-points-only bound, evaluated in parallel.
pub fn extss_upper_bound(a: &Arrangement, threads: usize) -> ExtSsResult {
    let points: Vec<_> = a.singular_locus().points().cloned().collect();
    let best = pool(threads).install(|| {
        points
            .par_iter()
            .map(|p| cone_cost(a, p))
            .reduce_with(|x, y| {
                if (y.cost, &y.apex) < (x.cost, &x.apex) {
                    y
                } else {
                    x
                }
            })
            .expect("an arrangement has singular points")
    });
    ExtSsResult {
        mode: ExtSsMode::SingularOnly,
        k: best.cost,
        apex: best.apex,
        lines: best.missing_lines,
    }
}
