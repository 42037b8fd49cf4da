//! Homogeneous points and lines of the projective plane, stored canonically.

use core::fmt;

use alloc::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{CyclotomicField, FieldKind, Scalar};

type Triple = [Scalar; 3];

fn field_of(v: &Triple) -> Result<FieldKind> {
    v.iter()
        .try_fold(FieldKind::Rational, |f, s| f.join(s.field()))
}

/// Scale so that the first nonzero coordinate is 1.
fn canonicalize(v: Triple) -> Result<Triple> {
    field_of(&v)?;
    let lead = v
        .iter()
        .position(|c| !c.is_zero())
        .ok_or(Error::ZeroVector)?;
    if v[lead].is_one() {
        return Ok(v);
    }
    let inv = v[lead].inv()?;
    let [a, b, c] = v;
    Ok([&a * &inv, &b * &inv, &c * &inv])
}

fn cross(a: &Triple, b: &Triple) -> Triple {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

fn dot(a: &Triple, b: &Triple) -> Scalar {
    &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2])
}

fn embed(v: &Triple, field: &Arc<CyclotomicField>) -> Result<Triple> {
    Ok([v[0].embed(field)?, v[1].embed(field)?, v[2].embed(field)?])
}

macro_rules! homogeneous {
    ($name:ident, $open:literal, $sep:literal, $close:literal) => {
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
        pub struct $name {
            coords: Triple,
        }

        impl $name {
            /// Canonicalized; fails on the zero vector or mixed conductors.
            pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Result<Self> {
                Self::from_coords([a, b, c])
            }

            pub fn from_coords(coords: [Scalar; 3]) -> Result<Self> {
                Ok(Self {
                    coords: canonicalize(coords)?,
                })
            }

            /// Integer coordinates; panics on the zero vector.
            pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
                Self::new(a.into(), b.into(), c.into()).expect("nonzero integer triple")
            }

            pub fn coords(&self) -> &[Scalar; 3] {
                &self.coords
            }

            pub fn into_coords(self) -> [Scalar; 3] {
                self.coords
            }

            pub fn field(&self) -> FieldKind {
                field_of(&self.coords).expect("canonical coordinates share a field")
            }

            /// The same object with every coordinate moved into `field`.
            pub fn embed(&self, field: &Arc<CyclotomicField>) -> Result<Self> {
                Ok(Self {
                    coords: embed(&self.coords, field)?,
                })
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(self, f)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let [a, b, c] = &self.coords;
                write!(
                    f,
                    concat!($open, "{}", $sep, "{}", $sep, "{}", $close),
                    a, b, c
                )
            }
        }
    };
}

homogeneous!(ProjPoint, "(", " : ", ")");
homogeneous!(ProjLine, "[", ", ", "]");

impl ProjPoint {
    /// The line whose coordinates are this point's coordinates.
    pub fn dual(&self) -> ProjLine {
        ProjLine {
            coords: self.coords.clone(),
        }
    }
}

impl ProjLine {
    /// The point whose coordinates are this line's coordinates.
    pub fn dual(&self) -> ProjPoint {
        ProjPoint {
            coords: self.coords.clone(),
        }
    }
}

/// The line through two distinct points.
pub fn join(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine> {
    if p == q {
        return Err(Error::IdenticalInputs);
    }
    ProjLine::from_coords(cross(&p.coords, &q.coords))
}

/// The intersection point of two distinct lines.
pub fn meet(l: &ProjLine, m: &ProjLine) -> Result<ProjPoint> {
    if l == m {
        return Err(Error::IdenticalInputs);
    }
    ProjPoint::from_coords(cross(&l.coords, &m.coords))
}

pub fn incident(p: &ProjPoint, l: &ProjLine) -> bool {
    dot(&p.coords, &l.coords).is_zero()
}

/// Value of the linear form `l` at the representative of `p`.
pub fn evaluate(l: &ProjLine, p: &ProjPoint) -> Scalar {
    dot(&p.coords, &l.coords)
}

/// Whether three points lie on a common line.
pub fn collinear(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> bool {
    dot(&cross(&p.coords, &q.coords), &r.coords).is_zero()
}

/// A 3×3 matrix over the scalars; acts on points by `p ↦ M p`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Matrix3 {
    rows: [Triple; 3],
}

impl Matrix3 {
    pub fn from_rows(rows: [[Scalar; 3]; 3]) -> Result<Self> {
        for r in &rows {
            field_of(r)?;
        }
        Ok(Self { rows })
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        Self {
            rows: rows.map(|r| r.map(Scalar::from_int)),
        }
    }

    pub fn identity() -> Self {
        Self::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn rows(&self) -> &[[Scalar; 3]; 3] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.rows[i][j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let rows = core::array::from_fn(|i| {
            core::array::from_fn(|j| {
                let mut acc = &self.rows[i][0] * &other.rows[0][j];
                for k in 1..3 {
                    acc = &acc + &(&self.rows[i][k] * &other.rows[k][j]);
                }
                acc
            })
        });
        Self { rows }
    }

    pub fn apply(&self, v: &[Scalar; 3]) -> [Scalar; 3] {
        core::array::from_fn(|i| dot(&self.rows[i], v))
    }

    pub fn transpose(&self) -> Self {
        Self {
            rows: core::array::from_fn(|i| core::array::from_fn(|j| self.rows[j][i].clone())),
        }
    }

    fn minor(&self, r: [usize; 2], c: [usize; 2]) -> Scalar {
        let m = &self.rows;
        &(&m[r[0]][c[0]] * &m[r[1]][c[1]]) - &(&m[r[0]][c[1]] * &m[r[1]][c[0]])
    }

    pub fn determinant(&self) -> Scalar {
        dot(&self.rows[0], &cross(&self.rows[1], &self.rows[2]))
    }

    /// Cofactor matrix, equal to `det(M) · M^{-T}`. It carries lines along
    /// with points: if `p` lies on `l` then `M p` lies on `cof(M) l`.
    pub fn cofactor(&self) -> Self {
        let others = |i: usize| -> [usize; 2] {
            match i {
                0 => [1, 2],
                1 => [0, 2],
                _ => [0, 1],
            }
        };
        let rows = core::array::from_fn(|i| {
            core::array::from_fn(|j| {
                let m = self.minor(others(i), others(j));
                if (i + j) % 2 == 1 {
                    -m
                } else {
                    m
                }
            })
        });
        Self { rows }
    }

    pub fn inverse(&self) -> Result<Self> {
        let det = self.determinant();
        let inv_det = det.inv()?;
        let adj = self.cofactor().transpose();
        Ok(Self {
            rows: adj.rows.map(|r| r.map(|x| &x * &inv_det)),
        })
    }

    pub fn rank(&self) -> usize {
        if self.rows.iter().flatten().all(Scalar::is_zero) {
            return 0;
        }
        if !self.determinant().is_zero() {
            return 3;
        }
        let pairs = [[0, 1], [0, 2], [1, 2]];
        let rank_two = pairs
            .iter()
            .any(|&r| pairs.iter().any(|&c| !self.minor(r, c).is_zero()));
        if rank_two {
            2
        } else {
            1
        }
    }

    /// `M - λ I`.
    pub fn minus_scalar(&self, lambda: &Scalar) -> Self {
        let mut out = self.clone();
        for i in 0..3 {
            out.rows[i][i] = &out.rows[i][i] - lambda;
        }
        out
    }

    /// Representative of the projective class: first nonzero entry scaled to 1.
    pub fn projective_canonical(&self) -> Result<Self> {
        let lead = self
            .rows
            .iter()
            .flatten()
            .find(|x| !x.is_zero())
            .ok_or(Error::ZeroVector)?;
        if lead.is_one() {
            return Ok(self.clone());
        }
        let inv = lead.inv()?;
        Ok(Self {
            rows: self.rows.clone().map(|r| r.map(|x| &x * &inv)),
        })
    }

    pub fn apply_point(&self, p: &ProjPoint) -> Result<ProjPoint> {
        ProjPoint::from_coords(self.apply(p.coords()))
    }

    /// Image of a line under the point map `p ↦ M p`.
    pub fn apply_line(&self, l: &ProjLine) -> Result<ProjLine> {
        ProjLine::from_coords(self.cofactor().apply(l.coords()))
    }
}

impl fmt::Debug for Matrix3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows.iter()).finish()
    }
}
