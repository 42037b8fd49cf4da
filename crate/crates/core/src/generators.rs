//! Exact constructions of the arrangement families studied here.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::field::{CyclotomicField, CyclotomicNumber, FieldKind, Scalar};
use crate::projective::{incident, join, meet, Matrix3, ProjLine, ProjPoint};

/// Retry bound for [`generic_arrangement`].
pub const GENERIC_MAX_ATTEMPTS: usize = 10_000;

/// Safety bound for reflection-group closures.
pub const CLOSURE_BOUND: usize = 20_000;

/// d rational lines in general position (only double points), sampled from a seeded stream.
pub fn generic_arrangement(d: usize, seed: u64) -> Result<Arrangement> {
    if d < 3 {
        return Err(Error::InvalidParameter(format!("need d >= 3, got {d}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let range = 10 + 2 * d as i64;
    let mut lines: Vec<ProjLine> = Vec::with_capacity(d);
    let mut points: Vec<ProjPoint> = Vec::new();
    let mut attempts = 0;
    while lines.len() < d {
        attempts += 1;
        if attempts > GENERIC_MAX_ATTEMPTS {
            return Err(Error::GenerationFailed {
                attempts: GENERIC_MAX_ATTEMPTS,
            });
        }
        let c: [i64; 3] = core::array::from_fn(|_| rng.gen_range(-range..=range));
        let Ok(l) = ProjLine::new(c[0].into(), c[1].into(), c[2].into()) else {
            continue;
        };
        if lines.contains(&l) || points.iter().any(|p| incident(p, &l)) {
            continue;
        }
        points.extend(lines.iter().map(|m| meet(m, &l).expect("distinct lines")));
        lines.push(l);
    }
    Arrangement::new(lines)
}

/// The six lines `x − y + 2z, x − y − 2z, x + y − 2z, x + y + 2z, 9x − y + 9z, 9x + y − 9z`.
pub fn paper_l() -> Arrangement {
    Arrangement::new(
        [
            [1, -1, 2],
            [1, -1, -2],
            [1, 1, -2],
            [1, 1, 2],
            [9, -1, 9],
            [9, 1, -9],
        ]
        .map(|[a, b, c]| ProjLine::from_ints(a, b, c))
        .to_vec(),
    )
    .expect("six distinct lines")
}

/// Six lines joining the collinear triples (8,1), (12,1), (14,1) and
/// (9,−4), (12,−4), (13,−4) crosswise; the three Pappus points become double
/// points on the extra line `x + 5y − z`.
pub fn pappus_p() -> Arrangement {
    Arrangement::new(
        [
            [5, 4, -44],
            [1, 1, -9],
            [5, -3, -57],
            [5, 1, -61],
            [5, -2, -68],
            [1, -1, -13],
        ]
        .map(|[a, b, c]| ProjLine::from_ints(a, b, c))
        .to_vec(),
    )
    .expect("six distinct lines")
}

/// d − 1 concurrent lines through (0:0:1) and one line avoiding their common point.
pub fn near_pencil(d: usize) -> Result<Arrangement> {
    if d < 3 {
        return Err(Error::InvalidParameter(format!("need d >= 3, got {d}")));
    }
    let mut lines: Vec<ProjLine> = (0..d as i64 - 1)
        .map(|k| ProjLine::from_ints(1, k, 0))
        .collect();
    lines.push(ProjLine::from_ints(0, 0, 1));
    Arrangement::new(lines)
}

fn zeta(field: &Arc<CyclotomicField>, k: i64) -> Scalar {
    CyclotomicNumber::zeta_power(field, k).into()
}

/// Linear factors of (x^n − y^n)(y^n − z^n)(z^n − x^n) over Q(ζ_n).
pub fn fermat(n: u32) -> Result<Arrangement> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("need n >= 2, got {n}")));
    }
    let f = CyclotomicField::new(n);
    let mut lines = Vec::with_capacity(3 * n as usize);
    for k in 0..i64::from(n) {
        let z = zeta(&f, k);
        lines.push(ProjLine::new(Scalar::one(), -&z, Scalar::zero())?);
        lines.push(ProjLine::new(Scalar::zero(), Scalar::one(), -&z)?);
        lines.push(ProjLine::new(-&z, Scalar::zero(), Scalar::one())?);
    }
    Arrangement::with_field(FieldKind::Cyclotomic(n), lines)
}

/// The Fermat arrangement together with the lines x = 0 and y = 0.
pub fn fermat_extended(n: u32) -> Result<Arrangement> {
    fermat(n)?.with_lines([ProjLine::from_ints(1, 0, 0), ProjLine::from_ints(0, 1, 0)])
}

/// The Böröczky arrangement with n lines over Q(ζ_{2n}).
///
/// The vertex of the regular 2n-gon at angle jπ/n is taken in the chart
/// `(x : i·y : z)`, i.e. `(ζ^j + ζ^{-j} : ζ^j − ζ^{-j} : 2)` with ζ = ζ_{2n},
/// where the unit circle becomes the conic `x² − y² − z² = 0`. Line k joins
/// the vertices at angles α = 2kπ/n and π − 2α, or is the tangent at α when
/// the two coincide.
pub fn boroczky(n: u32) -> Result<Arrangement> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("need n >= 3, got {n}")));
    }
    let f = CyclotomicField::new(2 * n);
    let two_n = 2 * i64::from(n);
    let vertex = |j: i64| -> ProjPoint {
        let (zp, zm) = (zeta(&f, j), zeta(&f, -j));
        ProjPoint::new(&zp + &zm, &zp - &zm, Scalar::from_int(2)).expect("z-coordinate is 2")
    };
    let mut lines = Vec::with_capacity(n as usize);
    let mut seen = BTreeSet::new();
    for k in 0..i64::from(n) {
        let a = (2 * k).rem_euclid(two_n);
        let b = (i64::from(n) - 4 * k).rem_euclid(two_n);
        let v = vertex(a);
        let line = if a == b {
            let [x, y, z] = v.coords();
            ProjLine::new(x.clone(), -y, -z)?
        } else {
            join(&v, &vertex(b))?
        };
        if !seen.insert(line.clone()) {
            return Err(Error::InvalidParameter(format!(
                "Böröczky construction produced a repeated line at k = {k}"
            )));
        }
        lines.push(line);
    }
    Arrangement::with_field(FieldKind::Cyclotomic(2 * n), lines)
}

/// Generators of a finite complex reflection group acting on the plane.
#[derive(Clone, Debug)]
pub struct ReflectionGroupData {
    pub name: String,
    pub conductor: u32,
    pub generators: Vec<Matrix3>,
}

#[derive(Clone, Debug)]
pub struct ReflectionArrangement {
    pub arrangement: Arrangement,
    /// Number of elements of the collineation group (matrices up to scalars).
    pub group_order: usize,
    /// Number of group elements acting as reflections (up to scalars).
    pub reflection_classes: usize,
}

/// λ with rank(g − λI) = 1, if any.
fn reflection_eigenvalue(g: &Matrix3) -> Option<Scalar> {
    const TRIPLES: [(usize, usize, usize); 6] = [
        (0, 1, 2),
        (0, 2, 1),
        (1, 0, 2),
        (1, 2, 0),
        (2, 0, 1),
        (2, 1, 0),
    ];
    let e = |i, j| g.entry(i, j);
    if let Some(&(i, j, k)) = TRIPLES.iter().find(|&&(_, j, k)| !e(j, k).is_zero()) {
        // rank one forces (g_ii − λ) g_jk = g_ik g_ji
        let lambda = e(i, i) - &(&(e(i, k) * e(j, i)) / e(j, k));
        return (g.minus_scalar(&lambda).rank() == 1).then_some(lambda);
    }
    let d = [e(0, 0), e(1, 1), e(2, 2)];
    match (d[0] == d[1], d[0] == d[2], d[1] == d[2]) {
        (true, false, false) | (false, true, false) => Some(d[0].clone()),
        (false, false, true) => Some(d[1].clone()),
        _ => None,
    }
}

/// Mirror lines of all reflections in the group generated by `data`.
pub fn reflection_arrangement(data: &ReflectionGroupData) -> Result<ReflectionArrangement> {
    let field = CyclotomicField::new(data.conductor);
    let embed = |m: &Matrix3| -> Result<Matrix3> {
        let rows = m.rows();
        let mut out: [[Scalar; 3]; 3] = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = rows[i][j].embed(&field)?;
            }
        }
        Matrix3::from_rows(out)?.projective_canonical()
    };
    let gens = data
        .generators
        .iter()
        .map(embed)
        .collect::<Result<Vec<_>>>()?;
    let identity = embed(&Matrix3::identity())?;
    let mut elements = BTreeSet::new();
    elements.insert(identity.clone());
    let mut queue = VecDeque::from([identity]);
    while let Some(g) = queue.pop_front() {
        for h in &gens {
            let p = g.mul(h).projective_canonical()?;
            if elements.insert(p.clone()) {
                if elements.len() > CLOSURE_BOUND {
                    return Err(Error::ClosureTooLarge {
                        bound: CLOSURE_BOUND,
                    });
                }
                queue.push_back(p);
            }
        }
    }
    let mut mirrors = BTreeSet::new();
    let mut reflection_classes = 0;
    for g in &elements {
        if let Some(lambda) = reflection_eigenvalue(g) {
            reflection_classes += 1;
            let n = g.minus_scalar(&lambda);
            let row = n
                .rows()
                .iter()
                .find(|r| r.iter().any(|x| !x.is_zero()))
                .expect("rank one");
            mirrors.insert(ProjLine::from_coords(row.clone())?);
        }
    }
    let arrangement = Arrangement::with_field(
        FieldKind::Cyclotomic(data.conductor),
        mirrors.into_iter().collect(),
    )?;
    Ok(ReflectionArrangement {
        arrangement,
        group_order: elements.len(),
        reflection_classes,
    })
}

/// Family tag plus parameters; `build` produces the arrangement.
#[derive(Clone, Debug)]
pub enum GeneratorSpec {
    Generic { d: usize, seed: u64 },
    PaperL,
    Pappus,
    NearPencil { d: usize },
    Fermat { n: u32 },
    FermatExtended { n: u32 },
    Boroczky { n: u32 },
    ReflectionGroup(ReflectionGroupData),
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<Arrangement> {
        match self {
            Self::Generic { d, seed } => generic_arrangement(*d, *seed),
            Self::PaperL => Ok(paper_l()),
            Self::Pappus => Ok(pappus_p()),
            Self::NearPencil { d } => near_pencil(*d),
            Self::Fermat { n } if *n >= 2 => fermat(*n),
            Self::FermatExtended { n } if *n >= 2 => fermat_extended(*n),
            Self::Boroczky { n } if *n >= 6 => boroczky(*n),
            Self::ReflectionGroup(data) => Ok(reflection_arrangement(data)?.arrangement),
            other => Err(Error::InvalidParameter(format!(
                "parameters out of range: {other:?}"
            ))),
        }
    }
}
