//! Ground-truth counters: trinomial coefficients, the literal class sums, and
//! two brute-force oracles (word enumeration and composition summation).

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::classes::ClassLabel;
use crate::error::{Error, Result};
use crate::ClassVector;

/// Largest `n` accepted by [`brute_force_words`] (`3^15` words).
pub const BRUTE_FORCE_LIMIT: u64 = 5;

/// Letter counts `(n1, n2, n3)` of a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Composition {
    pub n1: u64,
    pub n2: u64,
    pub n3: u64,
}

impl Composition {
    pub fn new(n1: u64, n2: u64, n3: u64) -> Self {
        Self { n1, n2, n3 }
    }

    pub fn total(&self) -> u64 {
        self.n1 + self.n2 + self.n3
    }
}

/// `C(n, k)` by multiplicative accumulation.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Number of words of length `total` with letter counts `(n1, n2, n3)`,
/// i.e. `total! / (n1! n2! n3!)`.
///
/// Any negative argument yields zero. Nonnegative counts that do not add up
/// to `total` are an [`Error::ArityMismatch`].
pub fn trinomial(total: i64, n1: i64, n2: i64, n3: i64) -> Result<BigInt> {
    if total < 0 || n1 < 0 || n2 < 0 || n3 < 0 {
        return Ok(BigInt::zero());
    }
    if n1 + n2 + n3 != total {
        return Err(Error::ArityMismatch { total, n1, n2, n3 });
    }
    let (total, n1, n2) = (total as u64, n1 as u64, n2 as u64);
    Ok(binomial(total, n1) * binomial(total - n1, n2))
}

pub fn classify(c: Composition) -> Result<ClassLabel> {
    ClassLabel::from_residues(c.n1, c.n2, c.n3).ok_or(Error::NotDivisibleBy3(c.total()))
}

/// `C_label(n)` as the literal sum of trinomial coefficients over
/// `k1 + k2 + k3 = m` with the class offsets applied to `3k1, 3k2, 3k3`.
///
/// Class D keeps one ordered offset pattern `(0, 1, 2)` and multiplies by the
/// six orderings.
pub fn direct_sum(label: ClassLabel, n: u64) -> BigInt {
    let (shift, offsets, factor): (u64, [i64; 3], u32) = match label {
        ClassLabel::A => (0, [0, 0, 0], 1),
        ClassLabel::B => (1, [1, 1, 1], 1),
        ClassLabel::C => (2, [2, 2, 2], 1),
        ClassLabel::D => (1, [0, 1, 2], 6),
    };
    let Some(m) = n.checked_sub(shift) else {
        return BigInt::zero();
    };
    let total = 3 * n as i64;
    let mut sum = BigInt::zero();
    for k1 in 0..=m {
        for k2 in 0..=m - k1 {
            let k3 = m - k1 - k2;
            let parts = [k1, k2, k3].map(|k| 3 * k as i64);
            sum += trinomial(
                total,
                parts[0] + offsets[0],
                parts[1] + offsets[1],
                parts[2] + offsets[2],
            )
            .expect("offset parts always sum to 3n");
        }
    }
    sum * factor
}

/// Classifies every one of the `3^(3n)` words of length `3n` and tallies the
/// classes.
///
/// The word space is split on a fixed-length prefix and each block is walked
/// with a base-3 odometer, so the tallies do not depend on scheduling.
pub fn brute_force_words(n: u64) -> Result<ClassVector> {
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge { n, limit: BRUTE_FORCE_LIMIT });
    }
    let len = 3 * n as usize;
    let prefix_len = len.min(3);
    let blocks = 3usize.pow(prefix_len as u32);

    let tally = (0..blocks)
        .into_par_iter()
        .map(|block| {
            let mut counts = [0u64; 3];
            let mut rest = block;
            for _ in 0..prefix_len {
                counts[rest % 3] += 1;
                rest /= 3;
            }
            tally_suffixes(counts, len - prefix_len)
        })
        .reduce(|| [0u64; 4], |x, y| [x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]]);

    Ok(ClassVector::new(
        n as usize,
        tally[0].into(),
        tally[1].into(),
        tally[2].into(),
        tally[3].into(),
    ))
}

fn tally_suffixes(mut counts: [u64; 3], len: usize) -> [u64; 4] {
    let mut tally = [0u64; 4];
    let mut digits = vec![0u8; len];
    counts[0] += len as u64;
    loop {
        let label = ClassLabel::from_residues(counts[0], counts[1], counts[2])
            .expect("word length is a multiple of 3");
        tally[label.index()] += 1;

        let mut pos = 0;
        loop {
            if pos == len {
                return tally;
            }
            let d = digits[pos] as usize;
            counts[d] -= 1;
            if d < 2 {
                digits[pos] += 1;
                counts[d + 1] += 1;
                break;
            }
            digits[pos] = 0;
            counts[0] += 1;
            pos += 1;
        }
    }
}

/// Sums `trinomial(3n; n1, n2, n3)` over every composition of `3n` into the
/// bucket of its class.
///
/// Within a fixed `n1`, the class only depends on `n2 mod 3`, so the row is
/// summed per residue of `n2` and multiplied by `C(3n, n1)` once per residue.
/// Binomials are advanced incrementally along rows and columns.
pub fn composition_sum(n: u64) -> ClassVector {
    let total = 3 * n;
    let mut buckets = [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()];
    let mut row_binomial = BigInt::one();
    for n1 in 0..=total {
        let rest = total - n1;
        let mut by_residue = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
        let mut col_binomial = BigInt::one();
        for n2 in 0..=rest {
            by_residue[(n2 % 3) as usize] += &col_binomial;
            col_binomial *= rest - n2;
            col_binomial /= n2 + 1;
        }
        for (r2, partial) in by_residue.iter().enumerate() {
            if partial.is_zero() {
                continue;
            }
            let r2 = r2 as u64;
            let r3 = (rest + 3 - r2 % 3) % 3;
            let label = ClassLabel::from_residues(n1, r2, r3).expect("residues sum to 0 mod 3");
            buckets[label.index()] += &row_binomial * partial;
        }
        row_binomial *= total - n1;
        row_binomial /= n1 + 1;
    }
    let [a, b, c, d] = buckets;
    ClassVector::new(n as usize, a, b, c, d)
}
