//! Brute-force extSS that shares none of the kernel's candidate generation.

use supersolve_core::{Arrangement, Scalar};

pub type V = [Scalar; 3];

pub fn cross(a: &V, b: &V) -> V {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

pub fn dot(a: &V, b: &V) -> Scalar {
    &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2])
}

pub fn is_null(v: &V) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn same(a: &V, b: &V) -> bool {
    is_null(&cross(a, b))
}

pub fn push_unique(set: &mut Vec<V>, v: V) {
    if !is_null(&v) && !set.iter().any(|w| same(w, &v)) {
        set.push(v);
    }
}

pub struct Naive {
    lines: Vec<V>,
    singular: Vec<V>,
}

impl Naive {
    pub fn new(a: &Arrangement) -> Self {
        let lines: Vec<V> = a.lines().iter().map(|l| l.coords().clone()).collect();
        let mut singular = Vec::new();
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                push_unique(&mut singular, cross(&lines[i], &lines[j]));
            }
        }
        Self { lines, singular }
    }

    /// Number of distinct lines through `m` and a singular point that are not in the arrangement.
    pub fn cost(&self, m: &V) -> usize {
        let mut directions: Vec<V> = Vec::new();
        for q in &self.singular {
            if same(q, m) {
                continue;
            }
            let l = cross(m, q);
            if self.lines.iter().any(|a| same(a, &l)) {
                continue;
            }
            push_unique(&mut directions, l);
        }
        directions.len()
    }

    pub fn minimum(&self) -> usize {
        let mut aug = self.lines.clone();
        for i in 0..self.singular.len() {
            for j in i + 1..self.singular.len() {
                push_unique(&mut aug, cross(&self.singular[i], &self.singular[j]));
            }
        }
        let mut pts: Vec<V> = Vec::new();
        for i in 0..aug.len() {
            for j in i + 1..aug.len() {
                push_unique(&mut pts, cross(&aug[i], &aug[j]));
            }
        }
        let mut best = pts.iter().map(|p| self.cost(p)).min().unwrap_or(usize::MAX);
        // an interior point of each augmented line: walk along p + t q
        for l in &aug {
            let basis: Vec<V> = [[1i64, 0, 0], [0, 1, 0], [0, 0, 1]]
                .iter()
                .map(|e| cross(l, &e.map(Scalar::from)))
                .filter(|v| !is_null(v))
                .collect();
            let (p, q) = (
                &basis[0],
                basis.iter().find(|v| !same(v, &basis[0])).unwrap(),
            );
            let sample = (1i64..)
                .map(|t| {
                    let t = Scalar::from(t);
                    [0, 1, 2].map(|k| &p[k] + &(&t * &q[k]))
                })
                .find(|s| aug.iter().all(|m| same(m, l) || !dot(m, s).is_zero()))
                .unwrap();
            best = best.min(self.cost(&sample));
        }
        // a point off every augmented line sees each singular point on its own line
        best.min(self.singular.len())
    }
}
