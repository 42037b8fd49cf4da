//! Line arrangements, their singular loci and weak combinatorics.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{CyclotomicField, FieldKind};
use crate::projective::{incident, meet, Matrix3, ProjLine, ProjPoint};

/// Singular points with the indices of the arrangement lines through each.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SingularLocus {
    points: BTreeMap<ProjPoint, Vec<usize>>,
}

impl SingularLocus {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points in canonical order with their (sorted) line indices.
    pub fn iter(&self) -> impl Iterator<Item = (&ProjPoint, &[usize])> {
        self.points.iter().map(|(p, l)| (p, l.as_slice()))
    }

    pub fn points(&self) -> impl Iterator<Item = &ProjPoint> {
        self.points.keys()
    }

    pub fn lines_through(&self, p: &ProjPoint) -> Option<&[usize]> {
        self.points.get(p).map(Vec::as_slice)
    }

    /// Number of arrangement lines through `p`, 0 if `p` is not singular.
    pub fn multiplicity(&self, p: &ProjPoint) -> usize {
        self.points.get(p).map_or(0, Vec::len)
    }

    fn insert_pair(&mut self, p: ProjPoint, i: usize, j: usize) {
        let entry = self.points.entry(p).or_default();
        for k in [i, j] {
            if let Err(pos) = entry.binary_search(&k) {
                entry.insert(pos, k);
            }
        }
    }
}

/// The vector (t_r) of r-fold point counts together with the line count d.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeakCombinatorics {
    lines: usize,
    counts: BTreeMap<usize, usize>,
}

impl WeakCombinatorics {
    /// From `(r, t_r)` pairs; zero counts are dropped.
    pub fn new(lines: usize, counts: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut map = BTreeMap::new();
        for (r, t) in counts {
            if t > 0 {
                *map.entry(r).or_insert(0) += t;
            }
        }
        Self { lines, counts: map }
    }

    pub fn lines(&self) -> usize {
        self.lines
    }

    pub fn t(&self, r: usize) -> usize {
        self.counts.get(&r).copied().unwrap_or(0)
    }

    /// Nonzero `(r, t_r)` pairs in increasing r.
    pub fn counts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&r, &t)| (r, t))
    }

    pub fn singular_points(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn max_multiplicity(&self) -> usize {
        self.counts.keys().next_back().copied().unwrap_or(0)
    }

    /// Σ t_r C(r,2) = C(d,2): every pair of lines meets in exactly one point.
    pub fn satisfies_count_identity(&self) -> bool {
        let pairs: usize = self.counts().map(|(r, t)| t * r * (r - 1) / 2).sum();
        pairs == self.lines * (self.lines - 1) / 2 && self.max_multiplicity() <= self.lines
    }
}

/// A finite set of distinct lines over one field, with its singular locus
/// computed once at construction.
#[derive(Clone, Debug)]
pub struct Arrangement {
    field: FieldKind,
    lines: Vec<ProjLine>,
    index: BTreeMap<ProjLine, usize>,
    locus: SingularLocus,
}

impl PartialEq for Arrangement {
    fn eq(&self, other: &Self) -> bool {
        self.lines == other.lines
    }
}

impl Eq for Arrangement {}

impl Arrangement {
    /// Field inferred from the coordinates; rational lines are lifted into it.
    pub fn new(lines: Vec<ProjLine>) -> Result<Self> {
        let field = lines
            .iter()
            .try_fold(FieldKind::Rational, |f, l| f.join(l.field()))?;
        Self::with_field(field, lines)
    }

    pub fn with_field(field: FieldKind, lines: Vec<ProjLine>) -> Result<Self> {
        if lines.len() < 3 {
            return Err(Error::TooFewLines { found: lines.len() });
        }
        let lines = lift(field, lines)?;
        let mut index = BTreeMap::new();
        for (i, l) in lines.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLine { index: i });
            }
        }
        let mut locus = SingularLocus::default();
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                let p = meet(&lines[i], &lines[j]).expect("distinct lines meet in a point");
                locus.insert_pair(p, i, j);
            }
        }
        Ok(Self {
            field,
            lines,
            index,
            locus,
        })
    }

    /// A new arrangement with `extra` appended; the locus is updated incrementally.
    pub fn with_lines(&self, extra: impl IntoIterator<Item = ProjLine>) -> Result<Self> {
        let mut out = self.clone();
        for l in extra {
            let field = out.field.join(l.field())?;
            if field != out.field {
                // the ground field widened; rebuild everything in the new field
                let mut all = out.lines.clone();
                all.push(l);
                out = Self::with_field(field, all)?;
                continue;
            }
            let l = lift(field, alloc::vec![l])?.pop().expect("one line");
            let d = out.lines.len();
            if out.index.contains_key(&l) {
                return Err(Error::DuplicateLine { index: d });
            }
            for i in 0..d {
                let p = meet(&out.lines[i], &l).expect("distinct lines meet in a point");
                out.locus.insert_pair(p, i, d);
            }
            out.index.insert(l.clone(), d);
            out.lines.push(l);
        }
        Ok(out)
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn lines(&self) -> &[ProjLine] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn contains(&self, l: &ProjLine) -> bool {
        self.index.contains_key(l)
    }

    pub fn index_of(&self, l: &ProjLine) -> Option<usize> {
        self.index.get(l).copied()
    }

    pub fn singular_locus(&self) -> &SingularLocus {
        &self.locus
    }

    pub fn weak_combinatorics(&self) -> WeakCombinatorics {
        let mut counts = BTreeMap::new();
        for (_, ls) in self.locus.iter() {
            *counts.entry(ls.len()).or_insert(0) += 1;
        }
        let w = WeakCombinatorics {
            lines: self.len(),
            counts,
        };
        assert!(
            w.satisfies_count_identity(),
            "count identity violated: kernel bug"
        );
        w
    }

    pub fn same_weak_combinatorics(&self, other: &Self) -> bool {
        self.weak_combinatorics() == other.weak_combinatorics()
    }

    /// Singular points on `l` of multiplicity at least `min_mult`, in canonical order.
    pub fn points_on_line(&self, l: &ProjLine, min_mult: usize) -> Result<Vec<ProjPoint>> {
        let idx = self.index_of(l).ok_or(Error::LineNotInArrangement)?;
        Ok(self
            .locus
            .iter()
            .filter(|(_, ls)| ls.len() >= min_mult && ls.binary_search(&idx).is_ok())
            .map(|(p, _)| p.clone())
            .collect())
    }

    /// Indices of the lines through an arbitrary point of the plane.
    pub fn lines_through(&self, p: &ProjPoint) -> Vec<usize> {
        if let Some(ls) = self.locus.lines_through(p) {
            return ls.to_vec();
        }
        (0..self.len())
            .filter(|&i| incident(p, &self.lines[i]))
            .collect()
    }

    /// Image under the projectivity `p ↦ M p`.
    pub fn transformed(&self, m: &Matrix3) -> Result<Self> {
        let lines = self
            .lines
            .iter()
            .map(|l| m.apply_line(l))
            .collect::<Result<Vec<_>>>()?;
        Self::new(lines)
    }
}

fn lift(field: FieldKind, lines: Vec<ProjLine>) -> Result<Vec<ProjLine>> {
    match field {
        FieldKind::Rational => {
            if let Some(l) = lines.iter().find(|l| l.field() != FieldKind::Rational) {
                return Err(Error::ConductorMismatch {
                    left: 1,
                    right: l.field().conductor(),
                });
            }
            Ok(lines)
        }
        FieldKind::Cyclotomic(n) => {
            let f: Arc<CyclotomicField> = CyclotomicField::new(n);
            lines.iter().map(|l| l.embed(&f)).collect()
        }
    }
}
