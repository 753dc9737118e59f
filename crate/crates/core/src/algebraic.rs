//! Exact arithmetic in the ring `Q(i, √3)`.
//!
//! Elements are stored in the basis `{1, √3, i, i√3}`. Coordinates in that
//! basis are unique, so structural equality is ring equality once the
//! coordinates themselves are canonical (as `BigRational` always is).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::ExactField;
use crate::Rational;

/// `a + b·√3 + c·i + d·i√3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadI3<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: ExactField> QuadI3<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Self { a, b, c, d }
    }

    /// Embeds a scalar as `a + 0·√3 + 0·i + 0·i√3`.
    pub fn from_scalar(a: T) -> Self {
        Self::new(a, T::zero(), T::zero(), T::zero())
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_scalar(T::from_int(v))
    }

    pub fn sqrt3() -> Self {
        Self::new(T::zero(), T::one(), T::zero(), T::zero())
    }

    pub fn i() -> Self {
        Self::new(T::zero(), T::zero(), T::one(), T::zero())
    }

    pub fn i_sqrt3() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    /// Complex conjugation `i → −i`.
    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), self.b.clone(), -self.c.clone(), -self.d.clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(
            self.a.clone() * k.clone(),
            self.b.clone() * k.clone(),
            self.c.clone() * k.clone(),
            self.d.clone() * k.clone(),
        )
    }

    /// `self^k` by binary exponentiation; `x^0 = 1` for every `x`.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// True when the element lies in the rational subfield.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
}

impl QuadI3<Rational> {
    /// Extracts the integer value of an element that must be a rational
    /// integer. Any irrational or fractional residue is reported as
    /// [`Error::NotRationalInteger`].
    pub fn to_integer(&self) -> Result<BigInt> {
        if self.is_rational() && self.a.is_integer() {
            Ok(self.a.to_integer())
        } else {
            Err(Error::NotRationalInteger(self.to_string()))
        }
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Self::from_scalar(Rational::from_integer(v))
    }
}

impl From<QuadI3<BigInt>> for QuadI3<Rational> {
    fn from(x: QuadI3<BigInt>) -> Self {
        let lift = Rational::from_integer;
        QuadI3::new(lift(x.a), lift(x.b), lift(x.c), lift(x.d))
    }
}

impl<T: ExactField> Zero for QuadI3<T> {
    fn zero() -> Self {
        Self::from_scalar(T::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.is_rational()
    }
}

impl<T: ExactField> One for QuadI3<T> {
    fn one() -> Self {
        Self::from_scalar(T::one())
    }
}

impl<T: ExactField> Add for &QuadI3<T> {
    type Output = QuadI3<T>;

    fn add(self, rhs: Self) -> QuadI3<T> {
        QuadI3::new(
            self.a.clone() + rhs.a.clone(),
            self.b.clone() + rhs.b.clone(),
            self.c.clone() + rhs.c.clone(),
            self.d.clone() + rhs.d.clone(),
        )
    }
}

impl<T: ExactField> Sub for &QuadI3<T> {
    type Output = QuadI3<T>;

    fn sub(self, rhs: Self) -> QuadI3<T> {
        QuadI3::new(
            self.a.clone() - rhs.a.clone(),
            self.b.clone() - rhs.b.clone(),
            self.c.clone() - rhs.c.clone(),
            self.d.clone() - rhs.d.clone(),
        )
    }
}

impl<T: ExactField> Mul for &QuadI3<T> {
    type Output = QuadI3<T>;

    // √3·√3 = 3, i·i = −1, √3·i = i√3, (i√3)·(i√3) = −3, √3·i√3 = 3i, i·i√3 = −√3
    fn mul(self, rhs: Self) -> QuadI3<T> {
        let three = T::from_int(3);
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        let (e, f, g, h) = (&rhs.a, &rhs.b, &rhs.c, &rhs.d);
        let p = |x: &T, y: &T| x.clone() * y.clone();

        let one = p(a, e) + three.clone() * p(b, f) - p(c, g) - three.clone() * p(d, h);
        let sqrt3 = p(a, f) + p(b, e) - p(c, h) - p(d, g);
        let i = p(a, g) + p(c, e) + three.clone() * p(b, h) + three * p(d, f);
        let i_sqrt3 = p(a, h) + p(d, e) + p(b, g) + p(c, f);
        QuadI3::new(one, sqrt3, i, i_sqrt3)
    }
}

impl<T: ExactField> Neg for &QuadI3<T> {
    type Output = QuadI3<T>;

    fn neg(self) -> QuadI3<T> {
        QuadI3::new(-self.a.clone(), -self.b.clone(), -self.c.clone(), -self.d.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<T: ExactField> $tr for QuadI3<T> {
            type Output = QuadI3<T>;

            fn $method(self, rhs: Self) -> QuadI3<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: ExactField> Neg for QuadI3<T> {
    type Output = QuadI3<T>;

    fn neg(self) -> QuadI3<T> {
        -&self
    }
}

impl<T: fmt::Display> fmt::Display for QuadI3<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})√3 + ({})i + ({})i√3", self.a, self.b, self.c, self.d)
    }
}

/// `3^(e/2)` as an element of the ring, for `e ≥ 0`. Odd `e` contributes a
/// factor of `√3`.
pub fn pow3_half<T: ExactField>(e: u64) -> QuadI3<T> {
    let whole = QuadI3::<T>::from_int(3).pow(e / 2);
    if e % 2 == 1 {
        &whole * &QuadI3::sqrt3()
    } else {
        whole
    }
}
