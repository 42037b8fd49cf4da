use alloc::sync::Arc;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{CyclotomicField, CyclotomicNumber, Rational};
use crate::error::{Error, Result};

/// Descriptor of the ground field of an arrangement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldKind {
    Rational,
    Cyclotomic(u32),
}

impl FieldKind {
    /// The wider of two fields; rationals embed into every cyclotomic field.
    pub fn join(self, other: Self) -> Result<Self> {
        match (self, other) {
            (Self::Rational, f) | (f, Self::Rational) => Ok(f),
            (Self::Cyclotomic(a), Self::Cyclotomic(b)) if a == b => Ok(self),
            (Self::Cyclotomic(a), Self::Cyclotomic(b)) => {
                Err(Error::ConductorMismatch { left: a, right: b })
            }
        }
    }

    pub fn conductor(self) -> u32 {
        match self {
            Self::Rational => 1,
            Self::Cyclotomic(n) => n,
        }
    }
}

/// An exact field element: a rational, or a cyclotomic number with a fixed conductor.
///
/// Arithmetic between a rational and a cyclotomic number embeds the rational.
/// Cyclotomic numbers of different conductors are never combined: the
/// `try_*` methods report [`Error::ConductorMismatch`] and the operator
/// impls panic.
#[derive(Clone)]
pub enum Scalar {
    Rational(Rational),
    Cyclotomic(CyclotomicNumber),
}

impl Scalar {
    pub fn zero() -> Self {
        Self::Rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::Rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::Rational(Rational::from_integer(n.into()))
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self::Rational(Rational::new(p.into(), q.into()))
    }

    pub fn field(&self) -> FieldKind {
        match self {
            Self::Rational(_) => FieldKind::Rational,
            Self::Cyclotomic(c) => FieldKind::Cyclotomic(c.conductor()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Self::Rational(q) => q.is_zero(),
            Self::Cyclotomic(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Self::Rational(q) => q.is_one(),
            Self::Cyclotomic(c) => c.is_one(),
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Self::Rational(q) => Some(q.clone()),
            Self::Cyclotomic(c) => c.as_rational(),
        }
    }

    /// Move into the given cyclotomic field (rationals embed, same-conductor values pass through).
    pub fn embed(&self, field: &Arc<CyclotomicField>) -> Result<Self> {
        match self {
            Self::Rational(q) => Ok(Self::Cyclotomic(CyclotomicNumber::from_rational(field, q))),
            Self::Cyclotomic(c) if c.conductor() == field.conductor() => Ok(self.clone()),
            Self::Cyclotomic(c) => Err(Error::ConductorMismatch {
                left: c.conductor(),
                right: field.conductor(),
            }),
        }
    }

    fn binary(
        &self,
        other: &Self,
        rat: impl Fn(&Rational, &Rational) -> Rational,
        cyc: impl Fn(&CyclotomicNumber, &CyclotomicNumber) -> CyclotomicNumber,
    ) -> Result<Self> {
        Ok(match (self, other) {
            (Self::Rational(a), Self::Rational(b)) => Self::Rational(rat(a, b)),
            (Self::Cyclotomic(a), Self::Cyclotomic(b)) => {
                if a.conductor() != b.conductor() {
                    return Err(Error::ConductorMismatch {
                        left: a.conductor(),
                        right: b.conductor(),
                    });
                }
                Self::Cyclotomic(cyc(a, b))
            }
            (Self::Rational(a), Self::Cyclotomic(b)) => {
                Self::Cyclotomic(cyc(&CyclotomicNumber::from_rational(b.field(), a), b))
            }
            (Self::Cyclotomic(a), Self::Rational(b)) => {
                Self::Cyclotomic(cyc(a, &CyclotomicNumber::from_rational(a.field(), b)))
            }
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.binary(other, |a, b| a + b, CyclotomicNumber::add)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.binary(other, |a, b| a - b, CyclotomicNumber::sub)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (Self::Rational(a), Self::Cyclotomic(b)) | (Self::Cyclotomic(b), Self::Rational(a)) => {
                Ok(Self::Cyclotomic(b.mul_rational(a)))
            }
            _ => self.binary(other, |a, b| a * b, CyclotomicNumber::mul),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Self::Rational(q) => Self::Rational(q.recip()),
            Self::Cyclotomic(c) => Self::Cyclotomic(c.inv().ok_or(Error::DivisionByZero)?),
        })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inv()?)
    }

    /// Coefficient of ζ^i in the power basis (rationals have only i = 0).
    pub fn coeff(&self, i: usize) -> Rational {
        match self {
            Self::Rational(q) if i == 0 => q.clone(),
            Self::Rational(_) => Rational::zero(),
            Self::Cyclotomic(c) if i < c.field().degree() => c.coeff(i),
            Self::Cyclotomic(_) => Rational::zero(),
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on power-basis coefficients; a rational compares as `q + 0ζ + …`.
/// Cyclotomic numbers of different conductors order by conductor first.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Self::Rational(a), Self::Rational(b)) => a.cmp(b),
            (Self::Cyclotomic(a), Self::Cyclotomic(b)) => a
                .conductor()
                .cmp(&b.conductor())
                .then_with(|| a.cmp_coeffs(b)),
            (Self::Cyclotomic(a), Self::Rational(b)) => a.cmp_rational(b),
            (Self::Rational(a), Self::Cyclotomic(b)) => b.cmp_rational(a).reverse(),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rational(q) => write!(f, "{q}"),
            Self::Cyclotomic(c) => write!(f, "{c}"),
        }
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Self::Rational(q)
    }
}

impl From<CyclotomicNumber> for Scalar {
    fn from(c: CyclotomicNumber) -> Self {
        Self::Cyclotomic(c)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs)
                    .expect(concat!("scalar ", stringify!($method)))
            }
        }

        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);
forward_op!(Div, div, try_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Cyclotomic(c) => Scalar::Cyclotomic(c.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
