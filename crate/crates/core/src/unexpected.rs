//! Fat-point ideals, their exact Hilbert function values, and unexpected curves.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::field::{FieldKind, Scalar};
use crate::linalg;
use crate::projective::{ProjLine, ProjPoint};
use crate::supersolvable::is_supersolvable;

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Number of monomials of degree `deg` in three variables.
pub fn forms_dimension(deg: usize) -> usize {
    binom2(deg + 2)
}

/// Exponent vectors of degree `deg`, lexicographically decreasing.
pub fn monomials(deg: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::with_capacity(forms_dimension(deg as usize));
    for i in (0..=deg).rev() {
        for j in (0..=deg - i).rev() {
            out.push([i, j, deg - i - j]);
        }
    }
    out
}

/// X = m_1 P_1 + … + m_s P_s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatPointScheme {
    points: Vec<ProjPoint>,
    multiplicities: Vec<usize>,
}

impl FatPointScheme {
    pub fn new(points: Vec<ProjPoint>, multiplicities: Vec<usize>) -> Result<Self> {
        if points.len() != multiplicities.len() {
            return Err(Error::InvalidParameter("one multiplicity per point".into()));
        }
        if multiplicities.contains(&0) {
            return Err(Error::InvalidParameter(
                "multiplicities must be positive".into(),
            ));
        }
        points
            .iter()
            .try_fold(FieldKind::Rational, |f, p| f.join(p.field()))?;
        let mut sorted: Vec<&ProjPoint> = points.iter().collect();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter("points must be distinct".into()));
        }
        Ok(Self {
            points,
            multiplicities,
        })
    }

    /// Every point with the same multiplicity.
    pub fn uniform(points: Vec<ProjPoint>, m: usize) -> Result<Self> {
        let n = points.len();
        Self::new(points, vec![m; n])
    }

    pub fn empty() -> Self {
        Self {
            points: Vec::new(),
            multiplicities: Vec::new(),
        }
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// This scheme plus one more fat point.
    pub fn with_point(&self, p: ProjPoint, m: usize) -> Result<Self> {
        let mut points = self.points.clone();
        let mut mults = self.multiplicities.clone();
        points.push(p);
        mults.push(m);
        Self::new(points, mults)
    }

    /// Linear conditions on the coefficients of a degree-`deg` form (one row per condition).
    ///
    /// Vanishing to order m at P is imposed through the partial derivatives of
    /// order exactly m − 1; by Euler's relation these force the lower-order
    /// ones in characteristic zero.
    pub fn conditions(&self, deg: u32) -> Vec<Vec<Scalar>> {
        let monos = monomials(deg);
        let mut rows = Vec::new();
        for (p, &m) in self.points.iter().zip(&self.multiplicities) {
            let order = m as u32 - 1;
            if order > deg {
                // only the zero form vanishes to order above its degree
                for k in 0..monos.len() {
                    let mut row = vec![Scalar::zero(); monos.len()];
                    row[k] = Scalar::one();
                    rows.push(row);
                }
                continue;
            }
            let powers: Vec<Vec<Scalar>> = p
                .coords()
                .iter()
                .map(|c| {
                    let mut v = Vec::with_capacity(deg as usize + 1);
                    v.push(Scalar::one());
                    for e in 1..=deg as usize {
                        v.push(&v[e - 1] * c);
                    }
                    v
                })
                .collect();
            for der in monomials(order) {
                let row = monos
                    .iter()
                    .map(|mono| {
                        let mut coeff: u64 = 1;
                        for t in 0..3 {
                            if mono[t] < der[t] {
                                return Scalar::zero();
                            }
                            coeff *= falling(mono[t], der[t]);
                        }
                        let mut v = Scalar::from_int(coeff as i64);
                        for t in 0..3 {
                            v = &v * &powers[t][(mono[t] - der[t]) as usize];
                        }
                        v
                    })
                    .collect();
                rows.push(row);
            }
        }
        rows
    }
}

fn falling(n: u32, k: u32) -> u64 {
    (0..k).map(|i| u64::from(n - i)).product()
}

/// max{ C(deg+2, 2) − Σ C(m_i + 1, 2), 0 }.
pub fn expected_dimension(x: &FatPointScheme, deg: usize) -> usize {
    let conditions: usize = x.multiplicities.iter().map(|&m| binom2(m + 1)).sum();
    forms_dimension(deg).saturating_sub(conditions)
}

/// dim I(X)_deg computed by exact elimination.
pub fn ideal_dimension(x: &FatPointScheme, deg: usize) -> usize {
    let cols = forms_dimension(deg);
    cols - linalg::rank(x.conditions(deg as u32), cols)
}

/// A basis of I(X)_deg as ternary forms.
pub fn ideal_basis(x: &FatPointScheme, deg: usize) -> Vec<TernaryForm> {
    let monos = monomials(deg as u32);
    linalg::kernel(x.conditions(deg as u32), monos.len())
        .into_iter()
        .map(|v| TernaryForm::from_dense(&monos, v))
        .collect()
}

/// A homogeneous polynomial in x, y, z.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryForm {
    terms: BTreeMap<[u32; 3], Scalar>,
}

impl TernaryForm {
    pub fn from_dense(monos: &[[u32; 3]], coeffs: Vec<Scalar>) -> Self {
        let terms = monos
            .iter()
            .copied()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Self { terms }
    }

    pub fn linear(l: &ProjLine) -> Self {
        let [a, b, c] = l.coords().clone();
        Self::from_dense(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]], vec![a, b, c])
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_dense(&[[0, 0, 0]], vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &Scalar)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: [u32; 3], c: Scalar) {
        let entry = self.terms.entry(e).or_insert_with(Scalar::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self {
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            for (f, d) in &other.terms {
                out.add_term([e[0] + f[0], e[1] + f[1], e[2] + f[2]], c * d);
            }
        }
        out
    }

    pub fn evaluate(&self, p: &ProjPoint) -> Scalar {
        let x = p.coords();
        self.terms.iter().fold(Scalar::zero(), |acc, (e, c)| {
            let mut t = c.clone();
            for k in 0..3 {
                for _ in 0..e[k] {
                    t = &t * &x[k];
                }
            }
            &acc + &t
        })
    }

    /// Exact quotient by the linear form of `l`, or `None` if `l` does not divide.
    pub fn divide_by_line(&self, l: &ProjLine) -> Option<Self> {
        let coords = l.coords();
        // canonical lines lead with coefficient 1
        let v = coords.iter().position(|c| !c.is_zero())?;
        let mut rem = self.clone();
        let mut quot = Self {
            terms: BTreeMap::new(),
        };
        loop {
            let top = rem
                .terms
                .iter()
                .filter(|(e, _)| e[v] > 0)
                .max_by_key(|(e, _)| e[v])
                .map(|(e, c)| (*e, c.clone()));
            let Some((e, c)) = top else { break };
            let mut base = e;
            base[v] -= 1;
            quot.add_term(base, c.clone());
            for (w, a) in coords.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let mut m = base;
                m[w] += 1;
                rem.add_term(m, -&(&c * a));
            }
        }
        rem.is_zero().then_some(quot)
    }
}

/// Points dual to the lines of an arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPoints {
    points: Vec<ProjPoint>,
}

impl DualPoints {
    pub fn of(a: &Arrangement) -> Self {
        Self {
            points: a.lines().iter().map(ProjLine::dual).collect(),
        }
    }

    pub fn from_points(points: Vec<ProjPoint>) -> Self {
        Self { points }
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn to_lines(&self) -> Vec<ProjLine> {
        self.points.iter().map(ProjPoint::dual).collect()
    }

    pub fn scheme(&self) -> FatPointScheme {
        FatPointScheme::uniform(self.points.clone(), 1).expect("distinct points")
    }
}

/// One row of the unexpected-curve table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnexpectedRow {
    pub degree: usize,
    /// Naive expected dimension of I(Z + (deg − 1)P)_deg.
    pub expected: usize,
    pub dim_without_point: usize,
    pub dim_with_point: usize,
    /// max{ dim I(Z)_deg − C(deg, 2), 0 }.
    pub threshold: usize,
    pub unexpected: bool,
}

fn random_point(rng: &mut ChaCha8Rng, avoid: &[ProjPoint]) -> ProjPoint {
    loop {
        let c: [i64; 3] = core::array::from_fn(|_| rng.gen_range(-1000..=1000));
        if let Ok(p) = ProjPoint::new(c[0].into(), c[1].into(), c[2].into()) {
            if !avoid.contains(&p) {
                return p;
            }
        }
    }
}

/// Evaluate the unexpectedness inequality in degree `deg` at `trials` seeded random points.
pub fn unexpected_row(
    z: &DualPoints,
    deg: usize,
    trials: usize,
    seed: u64,
) -> Result<UnexpectedRow> {
    if deg < 2 {
        return Err(Error::InvalidParameter("degree must be at least 2".into()));
    }
    if trials == 0 {
        return Err(Error::InvalidParameter("need at least one trial".into()));
    }
    let base = z.scheme();
    let dim_without_point = ideal_dimension(&base, deg);
    let threshold = dim_without_point.saturating_sub(binom2(deg));
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((deg as u64) << 32));
    let mut dims = Vec::with_capacity(trials);
    for _ in 0..trials {
        let p = random_point(&mut rng, z.points());
        let x = base.with_point(p, deg - 1)?;
        dims.push(ideal_dimension(&x, deg));
    }
    if dims.iter().any(|&d| d != dims[0]) {
        return Err(Error::TrialsDisagree { degree: deg });
    }
    let expected = expected_dimension(
        &base.with_point(random_point(&mut rng, z.points()), deg - 1)?,
        deg,
    );
    Ok(UnexpectedRow {
        degree: deg,
        expected,
        dim_without_point,
        dim_with_point: dims[0],
        threshold,
        unexpected: dims[0] > threshold,
    })
}

pub fn admits_unexpected_curve(
    z: &DualPoints,
    deg: usize,
    trials: usize,
    seed: u64,
) -> Result<bool> {
    unexpected_row(z, deg, trials, seed).map(|r| r.unexpected)
}

/// Table over `degrees`; the default range elsewhere is 2..=d−1.
pub fn unexpected_scan(
    z: &DualPoints,
    degrees: impl IntoIterator<Item = usize>,
    trials: usize,
    seed: u64,
) -> Result<Vec<UnexpectedRow>> {
    degrees
        .into_iter()
        .map(|d| unexpected_row(z, d, trials, seed))
        .collect()
}

/// d > 2m for a supersolvable arrangement with maximal multiplicity m.
pub fn supersolvable_criterion(a: &Arrangement) -> Result<bool> {
    is_supersolvable(a).ok_or(Error::NotSupersolvable)?;
    let m = a.weak_combinatorics().max_multiplicity();
    Ok(a.len() > 2 * m)
}
