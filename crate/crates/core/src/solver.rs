//! Extension-to-supersolvability numbers.
//!
//! If `Y ⊇ A` is supersolvable with modular point `M`, every singular point
//! of `A` is singular in `Y` and must be joined to `M` by a line of `Y`. So
//! `|Y| − |A|` is at least [`cone_cost`]`(A, M)`, and the cone over `M`
//! attains it. extSS(A) is therefore the minimum of the cone cost over the
//! whole plane.
//!
//! The cone cost of a point depends only on which *augmented* lines pass
//! through it, the augmented lines being the lines of `A` together with
//! every line spanned by two singular points. It is constant on each
//! stratum of the augmented arrangement, so the minimum is attained on a
//! finite [`CandidateSet`]: all vertices, one interior point per augmented
//! line, and one point off every augmented line.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::projective::{incident, join, meet, ProjLine, ProjPoint};

/// Default ceiling on the number of candidate points for the exact search.
pub const DEFAULT_CANDIDATE_BUDGET: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeCost {
    pub apex: ProjPoint,
    /// Joins from the apex to singular points that are not lines of `A`, in canonical order.
    pub missing_lines: Vec<ProjLine>,
    pub cost: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtSsMode {
    Exact,
    /// Minimum over singular apexes only; an upper bound.
    SingularOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtSsResult {
    pub mode: ExtSsMode,
    pub k: usize,
    pub apex: ProjPoint,
    pub lines: Vec<ProjLine>,
}

/// Lines that must be added so that `m` becomes a modular point.
pub fn cone_cost(a: &Arrangement, m: &ProjPoint) -> ConeCost {
    let locus = a.singular_locus();
    let through_m = a.lines_through(m);
    let mut missing = BTreeSet::new();
    for (q, through_q) in locus.iter() {
        if q == m || through_q.iter().any(|i| through_m.binary_search(i).is_ok()) {
            continue;
        }
        let l = join(m, q).expect("q differs from m");
        if !a.contains(&l) {
            missing.insert(l);
        }
    }
    let missing_lines: Vec<ProjLine> = missing.into_iter().collect();
    ConeCost {
        apex: m.clone(),
        cost: missing_lines.len(),
        missing_lines,
    }
}

/// C(d − 2, 2): the cone over a double point of d general lines.
pub fn generic_bound(d: usize) -> usize {
    assert!(d >= 3, "need at least 3 lines");
    (d - 2) * (d - 3) / 2
}

/// Upper bound for extSS from cones over singular points only.
pub fn extss_upper_bound(a: &Arrangement) -> ExtSsResult {
    let best = a
        .singular_locus()
        .points()
        .map(|p| cone_cost(a, p))
        .min_by(|x, y| x.cost.cmp(&y.cost).then_with(|| x.apex.cmp(&y.apex)))
        .expect("an arrangement of at least 3 lines has singular points");
    ExtSsResult {
        mode: ExtSsMode::SingularOnly,
        k: best.cost,
        apex: best.apex,
        lines: best.missing_lines,
    }
}

/// Exact extSS by minimizing the cone cost over the candidate set.
pub fn extss_exact(a: &Arrangement, budget: u64) -> Result<ExtSsResult> {
    Ok(CandidateSet::build(a, budget)?.solve(a))
}

#[derive(Clone, Debug)]
pub struct AugmentedLine {
    pub line: ProjLine,
    pub in_arrangement: bool,
    /// Indices into [`Augmentation::singular`] of the singular points on this line.
    pub singular: Vec<usize>,
}

/// Lines of `A` plus every span of two singular points.
#[derive(Clone, Debug)]
pub struct Augmentation {
    singular: Vec<ProjPoint>,
    lines: Vec<AugmentedLine>,
}

fn candidate_count(m: usize) -> u64 {
    let m = m as u64;
    m * m.saturating_sub(1) / 2 + m + 1
}

impl Augmentation {
    /// Fails with [`Error::BudgetExceeded`] as soon as the candidate count would pass `budget`.
    pub fn new(a: &Arrangement, budget: u64) -> Result<Self> {
        let locus = a.singular_locus();
        let singular: Vec<ProjPoint> = locus.points().cloned().collect();
        let through: Vec<&[usize]> = locus.iter().map(|(_, ls)| ls).collect();
        let mut on_line: Vec<Vec<usize>> = vec![Vec::new(); a.len()];
        for (k, ls) in through.iter().enumerate() {
            for &i in *ls {
                on_line[i].push(k);
            }
        }
        let mut spans: BTreeMap<ProjLine, BTreeSet<usize>> = BTreeMap::new();
        let check = |m: usize| {
            let needed = candidate_count(m);
            if needed > budget {
                Err(Error::BudgetExceeded { needed, budget })
            } else {
                Ok(())
            }
        };
        check(a.len())?;
        for i in 0..singular.len() {
            for j in i + 1..singular.len() {
                if through[i]
                    .iter()
                    .any(|l| through[j].binary_search(l).is_ok())
                {
                    continue;
                }
                let l = join(&singular[i], &singular[j]).expect("distinct points");
                let entry = spans.entry(l).or_default();
                let fresh = entry.is_empty();
                entry.insert(i);
                entry.insert(j);
                if fresh {
                    check(a.len() + spans.len())?;
                }
            }
        }
        let mut lines: Vec<AugmentedLine> = a
            .lines()
            .iter()
            .zip(on_line)
            .map(|(l, s)| AugmentedLine {
                line: l.clone(),
                in_arrangement: true,
                singular: s,
            })
            .collect();
        lines.extend(spans.into_iter().map(|(l, s)| AugmentedLine {
            line: l,
            in_arrangement: false,
            singular: s.into_iter().collect(),
        }));
        Ok(Self { singular, lines })
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn lines(&self) -> &[AugmentedLine] {
        &self.lines
    }

    pub fn singular(&self) -> &[ProjPoint] {
        &self.singular
    }

    pub fn candidate_count(&self) -> u64 {
        candidate_count(self.len())
    }

    /// Meets of line `i` with every later augmented line, tagged with both indices.
    pub fn meets_from(&self, i: usize) -> Vec<(ProjPoint, usize, usize)> {
        (i + 1..self.len())
            .map(|j| {
                let p = meet(&self.lines[i].line, &self.lines[j].line).expect("distinct lines");
                (p, i, j)
            })
            .collect()
    }

    /// Cone cost of a point lying on exactly the augmented lines `through`.
    fn cost(&self, through: &[usize]) -> usize {
        let mut covered = vec![false; self.singular.len()];
        let mut cost = 0;
        for &l in through {
            let line = &self.lines[l];
            if !line.in_arrangement {
                cost += 1;
            }
            for &q in &line.singular {
                covered[q] = true;
            }
        }
        cost + covered.iter().filter(|c| !**c).count()
    }

    fn off_all_lines(&self, p: &ProjPoint, except: Option<usize>) -> bool {
        self.lines
            .iter()
            .enumerate()
            .all(|(k, l)| Some(k) == except || !incident(p, &l.line))
    }
}

/// Two distinct points spanning `l`.
fn points_on(l: &ProjLine) -> (ProjPoint, ProjPoint) {
    let axes = [
        ProjLine::from_ints(1, 0, 0),
        ProjLine::from_ints(0, 1, 0),
        ProjLine::from_ints(0, 0, 1),
    ];
    let mut pts = axes
        .iter()
        .filter(|e| *e != l)
        .map(|e| meet(l, e).expect("distinct"));
    let p = pts.next().expect("at least two axes differ from l");
    let q = pts
        .find(|q| *q != p)
        .expect("meets with two axes span the line");
    (p, q)
}

/// Integers 0, 1, −1, 2, −2, …
fn small_integers() -> impl Iterator<Item = i64> {
    (0i64..).flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub point: ProjPoint,
    pub cost: usize,
}

/// Finite set of points on which the minimum cone cost is attained.
#[derive(Clone, Debug)]
pub struct CandidateSet {
    aug: Augmentation,
    vertices: Vec<(ProjPoint, Vec<usize>)>,
    line_samples: Vec<ProjPoint>,
    generic: ProjPoint,
}

impl CandidateSet {
    pub fn build(a: &Arrangement, budget: u64) -> Result<Self> {
        let aug = Augmentation::new(a, budget)?;
        let meets: Vec<_> = (0..aug.len()).flat_map(|i| aug.meets_from(i)).collect();
        Ok(Self::assemble(aug, meets))
    }

    /// Group precomputed meets into vertices. The result does not depend on the order of `meets`.
    pub fn assemble(
        aug: Augmentation,
        meets: impl IntoIterator<Item = (ProjPoint, usize, usize)>,
    ) -> Self {
        let mut grouped: BTreeMap<ProjPoint, BTreeSet<usize>> = BTreeMap::new();
        for (p, i, j) in meets {
            let e = grouped.entry(p).or_default();
            e.insert(i);
            e.insert(j);
        }
        let vertices = grouped
            .into_iter()
            .map(|(p, s)| (p, s.into_iter().collect()))
            .collect();
        let line_samples = (0..aug.len())
            .map(|k| {
                let (p, q) = points_on(&aug.lines[k].line);
                small_integers()
                    .map(|t| {
                        let [p0, p1, p2] = p.coords();
                        let [q0, q1, q2] = q.coords();
                        let t = Scalar::from_int(t);
                        ProjPoint::new(p0 + &(&t * q0), p1 + &(&t * q1), p2 + &(&t * q2))
                            .expect("p and q are independent")
                    })
                    .find(|s| aug.off_all_lines(s, Some(k)))
                    .expect("a line has finitely many vertices")
            })
            .collect();
        let generic = (1i64..)
            .map(|t| ProjPoint::from_ints(1, t, t * t))
            .find(|p| aug.off_all_lines(p, None))
            .expect("each line meets the conic in at most two points");
        Self {
            aug,
            vertices,
            line_samples,
            generic,
        }
    }

    pub fn augmentation(&self) -> &Augmentation {
        &self.aug
    }

    pub fn vertices(&self) -> impl Iterator<Item = (&ProjPoint, &[usize])> {
        self.vertices.iter().map(|(p, s)| (p, s.as_slice()))
    }

    pub fn line_samples(&self) -> &[ProjPoint] {
        &self.line_samples
    }

    pub fn generic_point(&self) -> &ProjPoint {
        &self.generic
    }

    pub fn len(&self) -> usize {
        self.vertices.len() + self.line_samples.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Every candidate with its cone cost: vertices, then line samples, then the generic point.
    pub fn candidates(&self) -> impl Iterator<Item = Candidate> + '_ {
        let vertices = self.vertices.iter().map(|(p, s)| Candidate {
            point: p.clone(),
            cost: self.aug.cost(s),
        });
        let samples = self
            .line_samples
            .iter()
            .enumerate()
            .map(|(k, p)| Candidate {
                point: p.clone(),
                cost: self.aug.cost(&[k]),
            });
        let generic = core::iter::once(Candidate {
            point: self.generic.clone(),
            cost: self.aug.singular.len(),
        });
        vertices.chain(samples).chain(generic)
    }

    /// Cost of the `idx`-th candidate in [`Self::candidates`] order.
    pub fn cost_at(&self, idx: usize) -> Candidate {
        let nv = self.vertices.len();
        let ns = self.line_samples.len();
        if idx < nv {
            let (p, s) = &self.vertices[idx];
            Candidate {
                point: p.clone(),
                cost: self.aug.cost(s),
            }
        } else if idx < nv + ns {
            Candidate {
                point: self.line_samples[idx - nv].clone(),
                cost: self.aug.cost(&[idx - nv]),
            }
        } else {
            Candidate {
                point: self.generic.clone(),
                cost: self.aug.singular.len(),
            }
        }
    }

    /// Minimum by cost, ties broken by canonical order of the point.
    pub fn best_of(candidates: impl IntoIterator<Item = Candidate>) -> Option<Candidate> {
        candidates
            .into_iter()
            .min_by(|x, y| x.cost.cmp(&y.cost).then_with(|| x.point.cmp(&y.point)))
    }

    /// Exact result; the winning apex is re-evaluated geometrically.
    pub fn solve(&self, a: &Arrangement) -> ExtSsResult {
        let best = Self::best_of(self.candidates()).expect("candidate set is never empty");
        self.finish(a, best)
    }

    pub fn finish(&self, a: &Arrangement, best: Candidate) -> ExtSsResult {
        let geometric = cone_cost(a, &best.point);
        assert_eq!(
            geometric.cost, best.cost,
            "stratum cost disagrees with cone cost"
        );
        ExtSsResult {
            mode: ExtSsMode::Exact,
            k: geometric.cost,
            apex: geometric.apex,
            lines: geometric.missing_lines,
        }
    }
}
