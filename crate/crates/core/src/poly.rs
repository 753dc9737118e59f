//! Dense univariate polynomials, lowest degree first.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Num, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Debug + Num> Polynomial<T> {
    /// Builds a polynomial from `coeffs[k]` = coefficient of `x^k`, dropping
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i32]) -> Self
    where
        T: From<i32>,
    {
        Self::new(coeffs.iter().map(|&c| T::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }
}

fn zip_with<T: Clone + Debug + Num>(
    x: &Polynomial<T>,
    y: &Polynomial<T>,
    f: impl Fn(T, T) -> T,
) -> Polynomial<T> {
    let len = x.coeffs.len().max(y.coeffs.len());
    Polynomial::new((0..len).map(|k| f(x.coeff(k), y.coeff(k))).collect())
}

impl<T: Clone + Debug + Num> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl<T: Clone + Debug + Num> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl<T: Clone + Debug + Num> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + x.clone() * y.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Clone + Debug + Num> Mul for Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        &self * &rhs
    }
}

impl<T: Clone + Debug + Num + Neg<Output = T>> Neg for Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}
