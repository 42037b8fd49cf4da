//! Supersolvability of line arrangements via modular points.
//!
//! For an arrangement in the projective plane the intersection lattice is
//! supersolvable exactly when some singular point `M` is modular: every
//! other singular point lies on an arrangement line through `M`
//! (Stanley, "Supersolvable lattices", Algebra Universalis 2 (1972); for
//! rank-3 lattices the modular elements of rank 2 are exactly such points).

use crate::arrangement::Arrangement;
use crate::projective::{join, ProjPoint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularWitness {
    pub point: ProjPoint,
    pub multiplicity: usize,
}

fn shares_line(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Whether `m` is a singular point joined by arrangement lines to every other singular point.
pub fn is_modular(a: &Arrangement, m: &ProjPoint) -> bool {
    let locus = a.singular_locus();
    let Some(through_m) = locus.lines_through(m) else {
        return false;
    };
    locus
        .iter()
        .all(|(q, through_q)| q == m || shares_line(through_m, through_q))
}

/// The canonically least modular point, or `None` if the arrangement is not supersolvable.
pub fn is_supersolvable(a: &Arrangement) -> Option<ModularWitness> {
    a.singular_locus()
        .iter()
        .find(|(p, _)| is_modular(a, p))
        .map(|(p, ls)| ModularWitness {
            point: p.clone(),
            multiplicity: ls.len(),
        })
}

/// Geometric re-check of a witness: each join to another singular point is an arrangement line.
pub fn verify_witness(a: &Arrangement, w: &ModularWitness) -> bool {
    a.singular_locus().multiplicity(&w.point) == w.multiplicity
        && w.multiplicity >= 2
        && a.singular_locus()
            .points()
            .all(|q| q == &w.point || join(&w.point, q).is_ok_and(|l| a.contains(&l)))
}
