//! Supersolvable resolutions built as cone extensions, and chain validation.

use alloc::format;
use alloc::vec::Vec;

use crate::arrangement::{Arrangement, WeakCombinatorics};
use crate::error::{Error, Result};
use crate::projective::{ProjLine, ProjPoint};
use crate::solver::cone_cost;
use crate::supersolvable::{is_modular, ModularWitness};

/// `Y_0 = base ⊆ Y_1 ⊆ … ⊆ Y_k`, where `Y_i` adds the first `i` lines of `added`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionChain {
    pub base: Arrangement,
    pub added: Vec<ProjLine>,
    pub apex: ProjPoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    /// Weak combinatorics of `Y_0, …, Y_k`.
    pub steps: Vec<WeakCombinatorics>,
    pub witness: ModularWitness,
    pub final_arrangement: Arrangement,
}

impl ResolutionChain {
    pub fn len(&self) -> usize {
        self.added.len()
    }

    pub fn is_empty(&self) -> bool {
        self.added.is_empty()
    }

    /// `Y_i`.
    pub fn prefix(&self, i: usize) -> Result<Arrangement> {
        self.base.with_lines(self.added[..i].iter().cloned())
    }

    pub fn final_arrangement(&self) -> Result<Arrangement> {
        self.prefix(self.added.len())
    }
}

/// Add every missing join from `apex` to the singular points, in canonical order.
pub fn cone_extension(a: &Arrangement, apex: &ProjPoint) -> ResolutionChain {
    let cost = cone_cost(a, apex);
    ResolutionChain {
        base: a.clone(),
        added: cost.missing_lines,
        apex: apex.clone(),
    }
}

/// Check growth by one new line per step and that the apex is modular at the end.
pub fn validate_chain(chain: &ResolutionChain) -> Result<ChainReport> {
    let mut current = chain.base.clone();
    let mut steps = Vec::with_capacity(chain.added.len() + 1);
    steps.push(current.weak_combinatorics());
    for (i, l) in chain.added.iter().enumerate() {
        let step = i + 1;
        if current.contains(l) {
            return Err(Error::InvalidChain {
                step,
                reason: format!("line {l} is already present"),
            });
        }
        current = current
            .with_lines([l.clone()])
            .map_err(|e| Error::InvalidChain {
                step,
                reason: format!("{e}"),
            })?;
        debug_assert_eq!(current.len(), chain.base.len() + step);
        steps.push(current.weak_combinatorics());
    }
    if !is_modular(&current, &chain.apex) {
        return Err(Error::InvalidChain {
            step: chain.added.len(),
            reason: format!(
                "apex {} is not a modular point of the final arrangement",
                chain.apex
            ),
        });
    }
    Ok(ChainReport {
        steps,
        witness: ModularWitness {
            multiplicity: current.singular_locus().multiplicity(&chain.apex),
            point: chain.apex.clone(),
        },
        final_arrangement: current,
    })
}

/// Least triple point `O` of `B_{6k}` whose three lines each carry exactly `3k` singular
/// points, three of which (over all three lines) are double points.
///
/// Cone costs differ between triple points of `B_{6k}`; only this class gives `6k² − 6k`.
pub fn recipe_apex(a: &Arrangement, k: usize) -> Option<ProjPoint> {
    let locus = a.singular_locus();
    locus
        .iter()
        .filter(|(_, ls)| ls.len() == 3)
        .find_map(|(o, ls)| {
            let mut doubles = 0;
            for &i in ls {
                let pts = a.points_on_line(&a.lines()[i], 2).ok()?;
                if pts.len() != 3 * k {
                    return None;
                }
                doubles += pts.iter().filter(|q| locus.multiplicity(q) == 2).count();
            }
            (doubles == 3).then(|| o.clone())
        })
}
