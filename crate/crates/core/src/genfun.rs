//! Rational generating functions `g(x) = Σ C(n) xⁿ` and their Taylor
//! coefficients.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_traits::{Num, One};

use crate::classes::ClassLabel;
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// `numerator / denominator` as a formal power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGf<T> {
    pub numerator: Polynomial<T>,
    pub denominator: Polynomial<T>,
}

impl<T: Clone + Debug + Num + PartialOrd + Neg<Output = T>> RationalGf<T> {
    /// Fails when the denominator vanishes at `x = 0`.
    pub fn new(numerator: Polynomial<T>, denominator: Polynomial<T>) -> Result<Self> {
        if denominator.coeff(0).is_zero() {
            return Err(Error::InvalidArgument(
                "denominator constant term must be nonzero".into(),
            ));
        }
        Ok(Self { numerator, denominator })
    }

    /// Flips the sign of numerator and denominator so that the denominator's
    /// constant term is positive.
    pub fn normalized(self) -> Self {
        if self.denominator.coeff(0) < T::zero() {
            Self { numerator: -self.numerator, denominator: -self.denominator }
        } else {
            self
        }
    }

    /// Coefficients `c_0 ..= c_max_n` of the power series, using
    /// `c_n = (p_n − Σ_{j≥1} q_j c_{n−j}) / q_0`.
    ///
    /// Requires `q_0 = ±1` so that the coefficients stay integral.
    pub fn coefficients(&self, max_n: usize) -> Result<Vec<T>> {
        let q0 = self.denominator.coeff(0);
        let unit = if q0 == T::one() {
            T::one()
        } else if q0 == -T::one() {
            -T::one()
        } else {
            return Err(Error::NonUnitConstantTerm(format!("{q0:?}")));
        };
        let q = self.denominator.coeffs();
        let mut out: Vec<T> = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut acc = self.numerator.coeff(n);
            for (j, qj) in q.iter().enumerate().skip(1).take(n) {
                if !qj.is_zero() {
                    acc = acc - qj.clone() * out[n - j].clone();
                }
            }
            out.push(acc * unit.clone());
        }
        Ok(out)
    }
}

/// Generating function of one class, with the denominator expanded from its
/// factored form and normalized to constant term `+1`.
pub fn gf_for_class(label: ClassLabel) -> RationalGf<BigInt> {
    let p = Polynomial::<BigInt>::from_ints;
    // (27x − 1)(27x² + 1) for A and B; (1 − 27x)(1 + 27x²) for C
    let shared = &p(&[-1, 27]) * &p(&[1, 0, 27]);
    let (numerator, denominator) = match label {
        ClassLabel::A => (p(&[-1, 24, -9, 162]), shared),
        ClassLabel::B => (&p(&[0, 6]) * &p(&[-1, 12, 27]), shared),
        ClassLabel::C => (&p(&[0, 0, 18]) * &p(&[5, -9]), &p(&[1, -27]) * &p(&[1, 0, 27])),
        ClassLabel::D => (p(&[0, 18]), p(&[1, -27])),
    };
    RationalGf::new(numerator, denominator).expect("denominators are nonzero at 0").normalized()
}

pub fn gf_coefficients(gf: &RationalGf<BigInt>, max_n: usize) -> Result<Vec<BigInt>> {
    gf.coefficients(max_n)
}

/// `1 / (1 − 27x)`, the generating function of all words.
pub fn all_words_gf() -> RationalGf<BigInt> {
    RationalGf {
        numerator: Polynomial::new(vec![BigInt::one()]),
        denominator: Polynomial::from_ints(&[1, -27]),
    }
}
