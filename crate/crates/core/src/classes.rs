use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::ExactInt;

/// Residue class of a letter-count triple `(n1, n2, n3)` with `3 | n1+n2+n3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    /// Every count `≡ 0 (mod 3)`.
    A,
    /// Every count `≡ 1 (mod 3)`.
    B,
    /// Every count `≡ 2 (mod 3)`.
    C,
    /// Residues are a permutation of `(0, 1, 2)`.
    D,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 4] = [ClassLabel::A, ClassLabel::B, ClassLabel::C, ClassLabel::D];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Label for three residues mod 3 whose sum is `≡ 0 (mod 3)`.
    ///
    /// Residues summing to `0 mod 3` are either all equal or all distinct, so
    /// the mapping is total on that domain.
    pub fn from_residues(r1: u64, r2: u64, r3: u64) -> Option<ClassLabel> {
        let (r1, r2, r3) = (r1 % 3, r2 % 3, r3 % 3);
        if (r1 + r2 + r3) % 3 != 0 {
            return None;
        }
        if r1 == r2 && r2 == r3 {
            Some(match r1 {
                0 => ClassLabel::A,
                1 => ClassLabel::B,
                _ => ClassLabel::C,
            })
        } else {
            Some(ClassLabel::D)
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassLabel::A => "A",
            ClassLabel::B => "B",
            ClassLabel::C => "C",
            ClassLabel::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for ClassLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(ClassLabel::A),
            "B" | "b" => Ok(ClassLabel::B),
            "C" | "c" => Ok(ClassLabel::C),
            "D" | "d" => Ok(ClassLabel::D),
            other => Err(Error::InvalidArgument(format!("unknown class `{other}`"))),
        }
    }
}

/// The four class counts at word length `3n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassCounts<T> {
    pub n: usize,
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: ExactInt> ClassCounts<T> {
    pub fn new(n: usize, a: T, b: T, c: T, d: T) -> Self {
        Self { n, a, b, c, d }
    }

    /// Counts at `n = 0`: the empty word is the only word, and it is in class A.
    pub fn seed() -> Self {
        Self::new(0, T::one(), T::zero(), T::zero(), T::zero())
    }

    pub fn get(&self, label: ClassLabel) -> &T {
        match label {
            ClassLabel::A => &self.a,
            ClassLabel::B => &self.b,
            ClassLabel::C => &self.c,
            ClassLabel::D => &self.d,
        }
    }

    pub fn get_mut(&mut self, label: ClassLabel) -> &mut T {
        match label {
            ClassLabel::A => &mut self.a,
            ClassLabel::B => &mut self.b,
            ClassLabel::C => &mut self.c,
            ClassLabel::D => &mut self.d,
        }
    }

    pub fn total(&self) -> T {
        self.a.clone() + self.b.clone() + self.c.clone() + self.d.clone()
    }

    pub fn values(&self) -> [&T; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}
