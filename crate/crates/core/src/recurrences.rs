//! Recurrence engines for the class counts.
//!
//! Appending three letters to a word of length `3n` moves it between
//! classes according to a fixed 4×4 integer matrix (the coupled engine).
//! Eliminating three of the four sequences leaves one third-order
//! recurrence shared by A, B and C, a geometric recurrence for D, and a
//! quartic recurrence for C whose characteristic polynomial carries an
//! extra `(x + 1)` factor.

use std::collections::VecDeque;

use num_bigint::BigInt;

use crate::classes::{ClassCounts, ClassLabel};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::ExactInt;

/// Coupled transition `v(n+1) = M · v(n)`, rows and columns ordered A, B, C, D.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    pub rows: [[i32; 4]; 4],
}

impl TransitionMatrix {
    /// Rows follow where the three appended letters send each class:
    /// three equal letters keep the class (weight 3), three distinct letters
    /// rotate A→B→C→A (weight 6), and a missing letter sends A, B, C to D
    /// (weight 3) while D spreads to every class (weight 18).
    pub const COUPLED: TransitionMatrix = TransitionMatrix {
        rows: [[3, 0, 6, 3], [6, 3, 0, 3], [0, 6, 3, 3], [18, 18, 18, 18]],
    };

    pub fn column_sums(&self) -> [i32; 4] {
        let mut sums = [0; 4];
        for row in &self.rows {
            for (s, v) in sums.iter_mut().zip(row) {
                *s += v;
            }
        }
        sums
    }

    pub fn apply<T: ExactInt>(&self, v: &ClassCounts<T>) -> ClassCounts<T> {
        let input = v.values();
        let row = |r: &[i32; 4]| {
            r.iter()
                .zip(input)
                .filter(|(w, _)| **w != 0)
                .fold(T::zero(), |acc, (w, x)| acc + T::from(*w) * x.clone())
        };
        let [a, b, c, d] = self.rows.each_ref().map(row);
        ClassCounts::new(v.n + 1, a, b, c, d)
    }
}

impl Default for TransitionMatrix {
    fn default() -> Self {
        Self::COUPLED
    }
}

pub fn coupled_step<T: ExactInt>(v: &ClassCounts<T>) -> ClassCounts<T> {
    TransitionMatrix::COUPLED.apply(v)
}

/// Class vectors for `n = 0..=max_n`, starting from the empty word.
pub fn coupled_sequence<T: ExactInt>(max_n: usize) -> Vec<ClassCounts<T>> {
    let mut out = Vec::with_capacity(max_n + 1);
    let mut v = ClassCounts::seed();
    for _ in 0..max_n {
        let next = coupled_step(&v);
        out.push(std::mem::replace(&mut v, next));
    }
    out.push(v);
    out
}

/// Class vector at a single `n`, keeping only the current state.
pub fn coupled_at<T: ExactInt>(n: usize) -> ClassCounts<T> {
    let mut v = ClassCounts::seed();
    for _ in 0..n {
        v = coupled_step(&v);
    }
    v
}

/// Terms of `x(n) = Σ_j coeffs[j] · x(n − 1 − j)` after an explicit prefix.
///
/// The prefix may be longer than the recurrence order: the recurrence only
/// kicks in once the prefix is exhausted, which lets a sequence start with
/// values the recurrence would not reproduce.
#[derive(Clone, Debug)]
pub struct LinearRecurrence<T> {
    coeffs: Vec<T>,
    prefix: Vec<T>,
    window: VecDeque<T>,
    next_index: usize,
}

impl<T: ExactInt> LinearRecurrence<T> {
    pub fn new(coeffs: &[i32], prefix: &[i32]) -> Self {
        assert!(prefix.len() >= coeffs.len(), "prefix shorter than recurrence order");
        Self {
            coeffs: coeffs.iter().map(|&c| T::from(c)).collect(),
            prefix: prefix.iter().map(|&v| T::from(v)).collect(),
            window: VecDeque::with_capacity(coeffs.len() + 1),
            next_index: 0,
        }
    }

    /// Value at index `n`, consuming a fresh iterator.
    pub fn nth_term(mut self, n: usize) -> T {
        self.nth(n).expect("recurrence is infinite")
    }
}

impl<T: ExactInt> Iterator for LinearRecurrence<T> {
    type Item = T;

    fn next(&mut self) -> Option<T> {
        let value = match self.prefix.get(self.next_index) {
            Some(v) => v.clone(),
            None => self
                .coeffs
                .iter()
                .zip(self.window.iter().rev())
                .fold(T::zero(), |acc, (c, x)| acc + c.clone() * x.clone()),
        };
        self.window.push_back(value.clone());
        if self.window.len() > self.coeffs.len() {
            self.window.pop_front();
        }
        self.next_index += 1;
        Some(value)
    }
}

/// `x(n) = 27 (x(n−1) − x(n−2) + 27 x(n−3))`.
pub const THIRD_ORDER_COEFFS: [i32; 3] = [27, -27, 729];

/// `C_C(n) = 26 C_C(n−1) + 702 C_C(n−3) + 729 C_C(n−4)`.
pub const QUARTIC_COEFFS: [i32; 4] = [26, 0, 702, 729];

/// Values at `n = 0..=3`; the shared recurrence is only valid from `n = 4`
/// because the closed forms are not integral at `n = 0`.
pub fn third_order_prefix(label: ClassLabel) -> Option<[i32; 4]> {
    match label {
        ClassLabel::A => Some([1, 3, 63, 2187]),
        ClassLabel::B => Some([0, 6, 90, 2106]),
        ClassLabel::C => Some([0, 0, 90, 2268]),
        ClassLabel::D => None,
    }
}

/// Terms of the decoupled recurrence for one class, from `n = 0`.
pub fn decoupled_terms<T: ExactInt>(label: ClassLabel) -> LinearRecurrence<T> {
    match third_order_prefix(label) {
        Some(prefix) => LinearRecurrence::new(&THIRD_ORDER_COEFFS, &prefix),
        None => LinearRecurrence::new(&[27], &[0, 18]),
    }
}

pub fn decoupled_third_order<T: ExactInt>(label: ClassLabel, n: usize) -> Result<T> {
    if label == ClassLabel::D {
        return Err(Error::InvalidArgument(
            "the third-order recurrence covers classes A, B and C".into(),
        ));
    }
    Ok(decoupled_terms(label).nth_term(n))
}

/// `C_D(n) = 27 C_D(n−1)` with `C_D(0) = 0`, `C_D(1) = 18`.
pub fn decoupled_d<T: ExactInt>(n: usize) -> T {
    decoupled_terms(ClassLabel::D).nth_term(n)
}

/// Any class via its decoupled recurrence.
pub fn decoupled<T: ExactInt>(label: ClassLabel, n: usize) -> T {
    decoupled_terms(label).nth_term(n)
}

/// All four classes at `n` via the decoupled recurrences.
pub fn decoupled_vector<T: ExactInt>(n: usize) -> ClassCounts<T> {
    let [a, b, c, d] = ClassLabel::ALL.map(|l| decoupled(l, n));
    ClassCounts::new(n, a, b, c, d)
}

/// Terms of the quartic recurrence for class C.
///
/// The factor `(x + 1)` of the quartic's characteristic polynomial admits a
/// `(−1)^n` component, so the integer values at `n = 0, 1` do not determine
/// the sequence; the prefix runs through `n = 4` and the quartic applies from
/// `n = 5`.
pub fn quartic_terms<T: ExactInt>() -> LinearRecurrence<T> {
    LinearRecurrence::new(&QUARTIC_COEFFS, &[0, 0, 90, 2268, 58806])
}

pub fn quartic_c<T: ExactInt>(n: usize) -> T {
    quartic_terms().nth_term(n)
}

/// `x³ − 27(x² − x + 27)`, shared by the A, B and C recurrences.
pub fn shared_char_poly() -> Polynomial<BigInt> {
    Polynomial::from_ints(&[-729, 27, -27, 1])
}

/// `x⁴ − 26x³ − 702x − 729`.
pub fn quartic_char_poly() -> Polynomial<BigInt> {
    Polynomial::from_ints(&[-729, -702, 0, -26, 1])
}

/// Checks `x⁴ − 26x³ − 702x − 729 = (x + 1)(x³ − 27(x² − x + 27))` by
/// expanding the product.
pub fn char_poly_check() -> bool {
    let x_plus_one = Polynomial::from_ints(&[1, 1]);
    let cube = Polynomial::from_ints(&[0, 0, 0, 1]);
    let inner = &cube - &Polynomial::from_ints(&[27, -1, 1]).scale(&27.into());
    &x_plus_one * &inner == quartic_char_poly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counters::composition_sum;
    use crate::ClassVector;
    use num_traits::Zero;

    fn vector(n: usize, v: [i64; 4]) -> ClassVector {
        ClassVector::new(n, v[0].into(), v[1].into(), v[2].into(), v[3].into())
    }

    #[test]
    fn matrix_columns_sum_to_27() {
        assert_eq!(TransitionMatrix::COUPLED.column_sums(), [27; 4]);
    }

    #[test]
    fn appended_letter_transitions() {
        let m = TransitionMatrix::COUPLED.rows;
        // same three letters: diagonal weight 3 on A, B, C
        assert_eq!([m[0][0], m[1][1], m[2][2]], [3, 3, 3]);
        // three distinct letters: A→B, B→C, C→A, weight 6
        assert_eq!([m[1][0], m[2][1], m[0][2]], [6, 6, 6]);
        // one letter absent: A, B, C → D and D → everything
        assert_eq!([m[3][0], m[3][1], m[3][2]], [18, 18, 18]);
        assert_eq!([m[0][3], m[1][3], m[2][3], m[3][3]], [3, 3, 3, 18]);
    }

    #[test]
    fn coupled_step_examples() {
        let one = coupled_step(&ClassVector::seed());
        assert_eq!(one, vector(1, [3, 6, 0, 18]));
        let two = coupled_step(&one);
        assert_eq!(two, vector(2, [63, 90, 90, 486]));
        assert_eq!(two.total(), one.total() * 27);
    }

    #[test]
    fn coupled_sequence_examples() {
        assert_eq!(coupled_sequence::<BigInt>(0), vec![ClassVector::seed()]);
        assert_eq!(coupled_sequence::<BigInt>(3)[3].c, 2268.into());
        let seq = coupled_sequence::<BigInt>(4);
        assert_eq!(seq.len(), 5);
        assert_eq!(seq[4].b, 58806.into());
        assert_eq!(coupled_at::<BigInt>(4), seq[4]);
    }

    #[test]
    fn decoupled_examples() {
        assert_eq!(decoupled_third_order::<BigInt>(ClassLabel::A, 4).unwrap(), 59535.into());
        assert_eq!(decoupled_third_order::<BigInt>(ClassLabel::B, 3).unwrap(), 2106.into());
        assert_eq!(decoupled_third_order::<BigInt>(ClassLabel::C, 4).unwrap(), 58806.into());
        assert_eq!(decoupled_third_order::<BigInt>(ClassLabel::A, 0).unwrap(), 1.into());
        assert!(decoupled_third_order::<BigInt>(ClassLabel::D, 2).is_err());
        assert_eq!(decoupled_d::<BigInt>(0), BigInt::zero());
        assert_eq!(decoupled_d::<BigInt>(1), 18.into());
        assert_eq!(decoupled_d::<BigInt>(2), 486.into());
    }

    #[test]
    fn quartic_examples() {
        assert_eq!(quartic_c::<BigInt>(3), 2268.into());
        assert_eq!(quartic_c::<BigInt>(4), 58806.into());
        let oracle = composition_sum(5).c;
        assert_eq!(quartic_c::<BigInt>(5), oracle);
        assert_eq!(decoupled_third_order::<BigInt>(ClassLabel::C, 5).unwrap(), oracle);
    }

    #[test]
    fn quartic_from_zero_seed_diverges() {
        // seeding the quartic at n = 0..3 with integer values misses C_C(4)
        let naive: Vec<BigInt> = LinearRecurrence::new(&QUARTIC_COEFFS, &[0, 0, 90, 2268]).take(5).collect();
        assert_eq!(naive[4], 58968.into());
        assert_ne!(naive[4], BigInt::from(58806));
    }

    #[test]
    fn characteristic_polynomials() {
        assert!(char_poly_check());
        assert_eq!(quartic_char_poly().eval(&(-1).into()), BigInt::zero());
        assert_eq!(shared_char_poly().eval(&27.into()), BigInt::zero());
    }

    #[test]
    fn engines_match_oracle() {
        let coupled = coupled_sequence::<BigInt>(40);
        let mut terms = ClassLabel::ALL.map(decoupled_terms::<BigInt>);
        let quartic: Vec<BigInt> = quartic_terms().take(41).collect();
        for (n, v) in coupled.iter().enumerate() {
            assert_eq!(v, &composition_sum(n as u64), "n = {n}");
            for (label, it) in ClassLabel::ALL.iter().zip(terms.iter_mut()) {
                assert_eq!(&it.next().unwrap(), v.get(*label), "{label} n = {n}");
            }
            assert_eq!(quartic[n], v.c);
        }
    }

    #[test]
    fn primitive_integers_agree_with_bigint() {
        let small = coupled_sequence::<i128>(20);
        let big = coupled_sequence::<BigInt>(20);
        for (s, b) in small.iter().zip(&big) {
            for label in ClassLabel::ALL {
                assert_eq!(BigInt::from(*s.get(label)), *b.get(label));
            }
        }
        for n in 0..=12 {
            for label in ClassLabel::ALL {
                assert_eq!(BigInt::from(decoupled::<i64>(label, n)), decoupled::<BigInt>(label, n));
            }
        }
    }
}
