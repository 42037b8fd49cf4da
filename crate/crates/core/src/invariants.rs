//! Poincaré polynomial of a line arrangement and its integer splitting.

use crate::arrangement::WeakCombinatorics;
use crate::error::{Error, Result};
use alloc::format;
use num_integer::Roots;

/// π(A, t) = 1 + d t + S t² + (S + 1 − d) t³ with S = Σ_r (r − 1) t_r.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PoincarePolynomial {
    coeffs: [i64; 4],
}

/// Exponents (1, d2, d3) with d2 ≤ d3, read off an integer splitting
/// π(A, t) = (1 + t)(1 + d2 t)(1 + d3 t).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentTriple {
    pub d1: u64,
    pub d2: u64,
    pub d3: u64,
}

impl ExponentTriple {
    pub fn new(d2: u64, d3: u64) -> Self {
        let (d2, d3) = if d2 <= d3 { (d2, d3) } else { (d3, d2) };
        Self { d1: 1, d2, d3 }
    }

    pub fn as_array(&self) -> [u64; 3] {
        [self.d1, self.d2, self.d3]
    }

    pub fn sum(&self) -> u64 {
        self.d1 + self.d2 + self.d3
    }
}

impl PoincarePolynomial {
    pub fn from_coeffs(coeffs: [i64; 4]) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> [i64; 4] {
        self.coeffs
    }

    /// Coefficients of q(t) in π(t) = (1 + t) q(t); exact whenever the
    /// polynomial comes from an arrangement.
    pub fn quadratic_cofactor(&self) -> [i64; 3] {
        [1, self.coeffs[1] - 1, self.coeffs[3]]
    }

    /// Exponents if the polynomial factors into integer linear factors, `None` otherwise.
    pub fn split_exponents(&self) -> Option<ExponentTriple> {
        let [c0, c1, c2, c3] = self.coeffs;
        if c0 != 1 {
            return None;
        }
        // (1 + t)(1 + a t + b t²)
        let (a, b) = (c1 - 1, c3);
        if a + b != c2 {
            return None;
        }
        let disc = a.checked_mul(a)?.checked_sub(4 * b)?;
        if disc < 0 {
            return None;
        }
        let s = disc.sqrt();
        if s * s != disc || (a - s) % 2 != 0 {
            return None;
        }
        let (d2, d3) = ((a - s) / 2, (a + s) / 2);
        if d2 < 0 {
            return None;
        }
        Some(ExponentTriple::new(d2 as u64, d3 as u64))
    }
}

pub fn poincare(w: &WeakCombinatorics) -> PoincarePolynomial {
    let d = w.lines() as i64;
    let s: i64 = w.counts().map(|(r, t)| (r as i64 - 1) * t as i64).sum();
    PoincarePolynomial {
        coeffs: [1, d, s, s + 1 - d],
    }
}

pub fn split_exponents(p: &PoincarePolynomial) -> Option<ExponentTriple> {
    p.split_exponents()
}

/// Exponents of a cone extension with `lines` lines whose apex lies on `apex_multiplicity` of them.
pub fn cone_exponents(lines: u64, apex_multiplicity: u64) -> ExponentTriple {
    ExponentTriple::new(lines - apex_multiplicity, apex_multiplicity - 1)
}

/// Closed-form weak combinatorics and exponents of the cone resolution of
/// the Böröczky arrangement with 6k lines over one of its triple points.
pub fn b6k_rs_closed_form(k: u64) -> Result<(WeakCombinatorics, ExponentTriple)> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "k must be at least 2, got {k}"
        )));
    }
    let apex = 3 + 6 * k * k - 6 * k;
    let t4 = 6 * (k - 1) * (k - 1);
    let t3 = 15 * k - 12;
    let t2 = 36 * k * k * k + 42 * k - 72 * k * k - 3;
    let d = 6 * k * k;
    let w = WeakCombinatorics::new(
        d as usize,
        [
            (apex as usize, 1),
            (4, t4 as usize),
            (3, t3 as usize),
            (2, t2 as usize),
        ],
    );
    Ok((w, ExponentTriple::new(6 * k - 3, 6 * k * k - 6 * k + 2)))
}
