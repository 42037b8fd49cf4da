use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Dense integer polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(Vec::new());
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Quotient by a monic divisor, `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.degree();
        if self.coeffs.len() < divisor.coeffs.len() {
            return if self.coeffs.is_empty() {
                Some(self.clone())
            } else {
                None
            };
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0i64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd];
            quot[k] = c;
            if c != 0 {
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= c * d;
                }
            }
        }
        rem.iter().all(|&c| c == 0).then(|| Self::new(quot))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{a}x")?,
                (_, 1) => write!(f, "x^{k}")?,
                _ => write!(f, "{a}x^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// The n-th cyclotomic polynomial, obtained by dividing `x^n - 1` by the
/// cyclotomic polynomials of all proper divisors of `n`.
pub fn cyclotomic_polynomial(n: u32) -> IntPoly {
    assert!(n >= 1, "conductor must be positive");
    let mut memo = BTreeMap::new();
    cyclotomic_memo(n, &mut memo)
}

fn cyclotomic_memo(n: u32, memo: &mut BTreeMap<u32, IntPoly>) -> IntPoly {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut xn1 = vec![0i64; n as usize + 1];
    xn1[0] = -1;
    xn1[n as usize] = 1;
    let mut acc = IntPoly::new(xn1);
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_memo(d, memo);
            acc = acc
                .div_exact(&phi_d)
                .expect("proper divisor polynomial divides x^n - 1");
        }
    }
    memo.insert(n, acc.clone());
    acc
}
