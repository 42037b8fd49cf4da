use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{cyclotomic_polynomial, IntPoly};
use super::Rational;

/// The field Q(ζ_n), presented as Q[x] / Φ_n(x).
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    conductor: u32,
    modulus: IntPoly,
}

impl CyclotomicField {
    pub fn new(conductor: u32) -> Arc<Self> {
        assert!(conductor >= 1, "conductor must be positive");
        Arc::new(Self {
            conductor,
            modulus: cyclotomic_polynomial(conductor),
        })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// φ(n), the length of every coefficient vector.
    pub fn degree(&self) -> usize {
        self.modulus.degree()
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }

    /// Reduce a polynomial (lowest degree first) modulo Φ_n in place and truncate it.
    fn reduce(&self, p: &mut Vec<BigInt>) {
        let deg = self.degree();
        let phi = self.modulus.coeffs();
        if p.len() > deg {
            for k in (deg..p.len()).rev() {
                if p[k].is_zero() {
                    continue;
                }
                let c = core::mem::take(&mut p[k]);
                for (i, &m) in phi[..deg].iter().enumerate() {
                    if m != 0 {
                        p[k - deg + i] -= &c * m;
                    }
                }
            }
        }
        p.resize(deg, BigInt::zero());
    }
}

/// An element of Q(ζ_n) stored as `num / den` with an integer coefficient
/// vector in the power basis 1, ζ, …, ζ^(φ(n)-1).
///
/// Invariants: `num.len() == φ(n)`, `den > 0`, the content of `num` is
/// coprime to `den`, and zero is `0 / 1`. Equal values therefore have equal
/// representations.
#[derive(Clone)]
pub struct CyclotomicNumber {
    field: Arc<CyclotomicField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CyclotomicNumber {
    fn from_parts(field: Arc<CyclotomicField>, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut out = Self { field, num, den };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if self.den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Self {
            field: field.clone(),
            num: vec![BigInt::zero(); field.degree()],
            den: BigInt::one(),
        }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_rational(field, &Rational::one())
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, q: &Rational) -> Self {
        let mut num = vec![BigInt::zero(); field.degree()];
        if let Some(c) = num.first_mut() {
            c.clone_from(q.numer());
        }
        Self::from_parts(field.clone(), num, q.denom().clone())
    }

    /// ζ_n^k for any integer k.
    pub fn zeta_power(field: &Arc<CyclotomicField>, k: i64) -> Self {
        let n = i64::from(field.conductor());
        let e = k.rem_euclid(n) as usize;
        let mut p = vec![BigInt::zero(); e + 1];
        p[e] = BigInt::one();
        field.reduce(&mut p);
        Self::from_parts(field.clone(), p, BigInt::one())
    }

    /// Σ c_k ζ^k for an arbitrary-length list of rational coefficients.
    pub fn from_coeffs(field: &Arc<CyclotomicField>, coeffs: &[Rational]) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut p: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        field.reduce(&mut p);
        Self::from_parts(field.clone(), p, den)
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        Rational::new(self.num[i].clone(), self.den.clone())
    }

    /// Reduced coefficient vector of length φ(n).
    pub fn coeffs(&self) -> Vec<Rational> {
        (0..self.num.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one()
            && self.num.first().is_some_and(One::is_one)
            && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if this number lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        self.num[1..].iter().all(Zero::is_zero).then(|| {
            Rational::new(
                self.num.first().cloned().unwrap_or_default(),
                self.den.clone(),
            )
        })
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.conductor(),
            other.conductor(),
            "cyclotomic operands from different fields"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        if self.den == other.den {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| a + b)
                .collect();
            return Self::from_parts(self.field.clone(), num, self.den.clone());
        }
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| a * &other.den + b * &self.den)
            .collect();
        Self::from_parts(self.field.clone(), num, &self.den * &other.den)
    }

    pub fn neg(&self) -> Self {
        Self {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        let n = self.num.len();
        let mut prod = vec![BigInt::zero(); 2 * n - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        self.field.reduce(&mut prod);
        Self::from_parts(self.field.clone(), prod, &self.den * &other.den)
    }

    pub fn mul_rational(&self, q: &Rational) -> Self {
        let num = self.num.iter().map(|c| c * q.numer()).collect();
        Self::from_parts(self.field.clone(), num, &self.den * q.denom())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let nonzero: Vec<usize> = (0..self.num.len())
            .filter(|&i| !self.num[i].is_zero())
            .collect();
        if let [k] = nonzero[..] {
            // c ζ^k  ->  ζ^(-k) / c
            let z = Self::zeta_power(&self.field, -(k as i64));
            return Some(z.mul_rational(&Rational::new(self.den.clone(), self.num[k].clone())));
        }
        let inv_num = self.invert_numerator();
        Some(inv_num.mul_rational(&Rational::from_integer(self.den.clone())))
    }

    /// Inverse of the integer polynomial `num` by solving the multiplication-by-num system.
    fn invert_numerator(&self) -> Self {
        let n = self.num.len();
        // column j holds num * x^j mod Φ
        let mut cols: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        let mut v = self.num.clone();
        for _ in 0..n {
            cols.push(v.clone());
            v.insert(0, BigInt::zero());
            self.field.reduce(&mut v);
        }
        let mut m: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                let mut row: Vec<Rational> = (0..n)
                    .map(|c| Rational::from_integer(cols[c][r].clone()))
                    .collect();
                row.push(if r == 0 {
                    Rational::one()
                } else {
                    Rational::zero()
                });
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .expect("multiplication by a nonzero element is invertible");
            m.swap(col, piv);
            let inv = m[col][col].recip();
            for x in &mut m[col][col..] {
                *x = &*x * &inv;
            }
            let pivot_row = m[col].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                        *x -= p * &f;
                    }
                }
            }
        }
        let sol: Vec<Rational> = m.into_iter().map(|mut row| row.pop().unwrap()).collect();
        Self::from_coeffs(&self.field, &sol)
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|inv| self.mul(&inv))
    }

    /// Lexicographic order on the reduced coefficient vectors.
    pub fn cmp_coeffs(&self, other: &Self) -> Ordering {
        if self.den == other.den {
            return self.num.cmp(&other.num);
        }
        for (a, b) in self.num.iter().zip(&other.num) {
            let ord = (a * &other.den).cmp(&(b * &self.den));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.num.len().cmp(&other.num.len())
    }

    /// Compare against a rational embedded as `q + 0ζ + …`.
    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        let first = (self.num[0].clone() * q.denom()).cmp(&(q.numer() * &self.den));
        if first != Ordering::Equal {
            return first;
        }
        for c in &self.num[1..] {
            match c.sign() {
                num_bigint::Sign::Plus => return Ordering::Greater,
                num_bigint::Sign::Minus => return Ordering::Less,
                num_bigint::Sign::NoSign => {}
            }
        }
        Ordering::Equal
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.conductor() == other.conductor() && self.den == other.den && self.num == other.num
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.conductor();
        let mut first = true;
        for (k, c) in self.coeffs().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, a) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            match k {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => write!(f, "z{n}^{k}")?,
                _ => write!(f, "{a}*z{n}^{k}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
