//! Closed forms for `n ≥ 1`, three ways.
//!
//! * [`closed_form`] evaluates the oscillating-term formulas in `Q(i, √3)`.
//! * [`root_basis`] writes each class as a rational combination of powers of
//!   the characteristic roots `27` and `±3^{3/2} i`.
//! * [`case_mod4`] splits on `n mod 4` so that only integer powers of 3
//!   appear.
//!
//! None of them is defined at `n = 0`, where the root-basis expression for
//! class A evaluates to `7/9`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebraic::pow3_half;
use crate::classes::ClassLabel;
use crate::error::{Error, Result};
use crate::{AlgebraicQ3i, QuadI3, Rational};

fn r(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

fn pow3(e: u64) -> BigInt {
    num_traits::pow(BigInt::from(3), e as usize)
}

fn require_positive(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument("closed forms are defined for n >= 1".into()))
    } else {
        Ok(())
    }
}

/// The characteristic roots of `x³ − 27(x² − x + 27)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSet {
    pub x1: BigInt,
    pub x2: AlgebraicQ3i,
    pub x3: AlgebraicQ3i,
}

impl RootSet {
    pub fn new() -> Self {
        // 3^{3/2} i = 3 · i√3
        let x2 = AlgebraicQ3i::i_sqrt3().scale(&r(3, 1));
        let x3 = x2.conj();
        Self { x1: BigInt::from(27), x2, x3 }
    }

    pub fn roots(&self) -> [AlgebraicQ3i; 3] {
        [AlgebraicQ3i::from_bigint(self.x1.clone()), self.x2.clone(), self.x3.clone()]
    }
}

impl Default for RootSet {
    fn default() -> Self {
        Self::new()
    }
}

/// `C_label(n)` from the oscillating closed forms, `n ≥ 1`.
///
/// The oscillating amplitude is `3^{(3n−2)/2}` for every class; for odd `n`
/// it carries a `√3` that cancels against the `i√3` coefficient.
pub fn closed_form(label: ClassLabel, n: u64) -> Result<BigInt> {
    require_positive(n)?;
    if label == ClassLabel::D {
        return Ok(pow3(3 * n - 1) * 2);
    }

    let main = AlgebraicQ3i::from_bigint(pow3(3 * n - 2));
    let amplitude: AlgebraicQ3i = pow3_half::<BigInt>(3 * n - 2).into();
    let i_pow = AlgebraicQ3i::i().pow(n % 4);
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let even_part = AlgebraicQ3i::from_int(1 + sign);
    let odd_part = AlgebraicQ3i::i_sqrt3().scale(&r(1 - sign, 1));

    let value = match label {
        ClassLabel::A => &main + &(&(&even_part * &i_pow) * &amplitude),
        ClassLabel::B | ClassLabel::C => {
            let factor = if label == ClassLabel::B {
                &even_part + &odd_part
            } else {
                &even_part - &odd_part
            };
            let half = i_pow.scale(&r(1, 2));
            &main - &(&(&factor * &half) * &amplitude)
        }
        ClassLabel::D => unreachable!(),
    };
    value.to_integer()
}

/// `C_label(n)` as a combination of `n`-th powers of the characteristic
/// roots, `n ≥ 1`.
pub fn root_basis(label: ClassLabel, n: u64) -> Result<BigInt> {
    require_positive(n)?;
    // powers stay in Z[i, √3]; only the final combination needs rationals
    let x2_int = QuadI3::<BigInt>::new(BigInt::zero(), BigInt::zero(), BigInt::zero(), 3.into());
    let x2: AlgebraicQ3i = x2_int.pow(n).into();
    let x3 = x2.conj();
    let x1 = AlgebraicQ3i::from_bigint(num_traits::pow(BigInt::from(27), n as usize));

    let coeff = |a: i64, b: i64, den: i64| {
        AlgebraicQ3i::new(r(a, den), Rational::zero(), Rational::zero(), r(b, den))
    };
    let (k1, k2, k3) = match label {
        ClassLabel::A => (r(1, 9), coeff(1, 0, 3), coeff(1, 0, 3)),
        ClassLabel::B => (r(1, 9), coeff(-1, -1, 6), coeff(-1, 1, 6)),
        ClassLabel::C => (r(1, 9), coeff(-1, 1, 6), coeff(-1, -1, 6)),
        ClassLabel::D => {
            return x1.scale(&r(2, 3)).to_integer();
        }
    };
    let value = &(&x1.scale(&k1) + &(&k2 * &x2)) + &(&k3 * &x3);
    value.to_integer()
}

/// `C_label(n)` from integer-only formulas selected by `n mod 4`, `n ≥ 1`.
pub fn case_mod4(label: ClassLabel, n: u64) -> Result<BigInt> {
    require_positive(n)?;
    let main = pow3(3 * n - 2);
    let value = match (label, n % 2 == 0) {
        (ClassLabel::D, _) => pow3(3 * n - 1) * 2,
        (ClassLabel::A, false) => main,
        (_, true) => {
            let osc = pow3((3 * n - 2) / 2);
            let osc = if (n / 2) % 2 == 0 { osc } else { -osc };
            match label {
                ClassLabel::A => main + osc * 2,
                _ => main - osc,
            }
        }
        (ClassLabel::B | ClassLabel::C, false) => {
            let osc = pow3((3 * n - 1) / 2);
            let plus = (n % 4 == 1) == (label == ClassLabel::B);
            if plus {
                main + osc
            } else {
                main - osc
            }
        }
    };
    Ok(value)
}

/// `3^{3n−1}`, the combined size of classes A, B and C for `n ≥ 1`.
pub fn abc_total(n: u64) -> BigInt {
    if n == 0 {
        BigInt::one()
    } else {
        pow3(3 * n - 1)
    }
}
