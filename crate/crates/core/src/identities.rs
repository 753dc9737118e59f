//! Numeric checks of every relation used to get from the coupled recurrence
//! to the decoupled ones.
//!
//! Each identity is checked at every index where all referenced terms exist
//! and the relation is meant to hold. Identities that divide (the two
//! elimination steps solving for `C_D(n−1)` and `C_C(n)`) also require the
//! division to be exact.

use std::fmt;

use num_bigint::BigInt;

use crate::classes::ClassCounts;
use crate::error::{Error, Result};
use crate::recurrences::coupled_sequence;
use crate::scalar::ExactInt;

/// Smallest `N` accepted by [`identity_suite`].
pub const MIN_SUITE_N: usize = 4;

struct View<'a, T> {
    seq: &'a [ClassCounts<T>],
    n: usize,
}

impl<T: ExactInt> View<'_, T> {
    fn at(&self, offset: isize) -> &ClassCounts<T> {
        &self.seq[(self.n as isize + offset) as usize]
    }
    fn a(&self, o: isize) -> T {
        self.at(o).a.clone()
    }
    fn b(&self, o: isize) -> T {
        self.at(o).b.clone()
    }
    fn c(&self, o: isize) -> T {
        self.at(o).c.clone()
    }
    fn d(&self, o: isize) -> T {
        self.at(o).d.clone()
    }
}

fn k<T: ExactInt>(v: i32) -> T {
    T::from(v)
}

/// `lhs == rhs / divisor` with `divisor | rhs`.
fn divides_to<T: ExactInt>(lhs: T, rhs: T, divisor: i32) -> bool {
    let divisor = k::<T>(divisor);
    (rhs.clone() % divisor.clone()).is_zero() && rhs / divisor == lhs
}

/// One relation between class counts at neighbouring indices.
pub struct Identity<T> {
    pub formula: &'static str,
    /// First index at which the relation holds.
    pub min_n: usize,
    /// Largest forward offset referenced, e.g. 2 for a term at `n + 2`.
    pub lookahead: usize,
    check: fn(&View<'_, T>) -> bool,
}

impl<T> fmt::Debug for Identity<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Identity")
            .field("formula", &self.formula)
            .field("min_n", &self.min_n)
            .field("lookahead", &self.lookahead)
            .finish()
    }
}

macro_rules! identity {
    ($formula:literal, $min:expr, $ahead:expr, |$v:ident| $body:expr) => {
        Identity { formula: $formula, min_n: $min, lookahead: $ahead, check: |$v| $body }
    };
}

/// The coupled recurrence rows, every elimination step, and the decoupled
/// recurrences they lead to.
pub fn identities<T: ExactInt>() -> Vec<Identity<T>> {
    vec![
        identity!("C_A(n) = 3 C_A(n-1) + 6 C_C(n-1) + 3 C_D(n-1)", 1, 0, |v| {
            v.a(0) == k::<T>(3) * v.a(-1) + k::<T>(6) * v.c(-1) + k::<T>(3) * v.d(-1)
        }),
        identity!("C_B(n) = 3 C_B(n-1) + 6 C_A(n-1) + 3 C_D(n-1)", 1, 0, |v| {
            v.b(0) == k::<T>(3) * v.b(-1) + k::<T>(6) * v.a(-1) + k::<T>(3) * v.d(-1)
        }),
        identity!("C_C(n) = 3 C_C(n-1) + 6 C_B(n-1) + 3 C_D(n-1)", 1, 0, |v| {
            v.c(0) == k::<T>(3) * v.c(-1) + k::<T>(6) * v.b(-1) + k::<T>(3) * v.d(-1)
        }),
        identity!("C_D(n) = 18 (C_D(n-1) + C_A(n-1) + C_B(n-1) + C_C(n-1))", 1, 0, |v| {
            v.d(0) == k::<T>(18) * (v.d(-1) + v.a(-1) + v.b(-1) + v.c(-1))
        }),
        identity!("C_D(n-1) = (C_B(n) - 3 C_B(n-1) - 6 C_A(n-1)) / 3", 1, 0, |v| {
            divides_to(v.d(-1), v.b(0) - k::<T>(3) * v.b(-1) - k::<T>(6) * v.a(-1), 3)
        }),
        identity!(
            "C_C(n) = (-6 C_A(n+1) + 54 C_A(n) - 21 C_B(n+1) + C_B(n+2)) / 54",
            0,
            2,
            |v| {
                divides_to(
                    v.c(0),
                    k::<T>(-6) * v.a(1) + k::<T>(54) * v.a(0) - k::<T>(21) * v.b(1) + v.b(2),
                    54,
                )
            }
        ),
        identity!("6 C_A(n-1) - C_B(n) - 3 C_B(n-1) + C_C(n) - 3 C_C(n-1) = 0", 1, 0, |v| {
            (k::<T>(6) * v.a(-1) - v.b(0) - k::<T>(3) * v.b(-1) + v.c(0) - k::<T>(3) * v.c(-1))
                .is_zero()
        }),
        identity!(
            "6 C_A(n+1) - 72 C_A(n) - 162 C_A(n-1) - C_B(n+2) + 24 C_B(n+1) - 9 C_B(n) + 162 C_B(n-1) = 0",
            1,
            2,
            |v| {
                (k::<T>(6) * v.a(1) - k::<T>(72) * v.a(0) - k::<T>(162) * v.a(-1) - v.b(2)
                    + k::<T>(24) * v.b(1)
                    - k::<T>(9) * v.b(0)
                    + k::<T>(162) * v.b(-1))
                .is_zero()
            }
        ),
        identity!("C_A(n) + 3 C_A(n-1) - C_B(n) + 3 C_B(n-1) - 6 C_C(n-1) = 0", 1, 0, |v| {
            (v.a(0) + k::<T>(3) * v.a(-1) - v.b(0) + k::<T>(3) * v.b(-1) - k::<T>(6) * v.c(-1))
                .is_zero()
        }),
        identity!(
            "15 C_A(n) - 27 C_A(n-1) - C_B(n+1) + 12 C_B(n) + 27 C_B(n-1) = 0",
            1,
            1,
            |v| {
                (k::<T>(15) * v.a(0) - k::<T>(27) * v.a(-1) - v.b(1) + k::<T>(12) * v.b(0)
                    + k::<T>(27) * v.b(-1))
                .is_zero()
            }
        ),
        identity!("C_D(n) - 3 C_C(n) = 9 (2 C_A(n-1) + C_C(n-1) + C_D(n-1))", 1, 0, |v| {
            v.d(0) - k::<T>(3) * v.c(0) == k::<T>(9) * (k::<T>(2) * v.a(-1) + v.c(-1) + v.d(-1))
        }),
        identity!(
            "3 C_C(n+1) + 81 C_C(n-1) - C_D(n+1) + 12 C_D(n) + 27 C_D(n-1) = 0",
            1,
            1,
            |v| {
                (k::<T>(3) * v.c(1) + k::<T>(81) * v.c(-1) - v.d(1) + k::<T>(12) * v.d(0)
                    + k::<T>(27) * v.d(-1))
                .is_zero()
            }
        ),
        identity!("C_C(n+1) + 27 C_C(n-1) - 5 C_D(n) + 9 C_D(n-1) = 0", 1, 1, |v| {
            (v.c(1) + k::<T>(27) * v.c(-1) - k::<T>(5) * v.d(0) + k::<T>(9) * v.d(-1)).is_zero()
        }),
        identity!("C_A(n) = 27 (C_A(n-1) - C_A(n-2) + 27 C_A(n-3))", 4, 0, |v| {
            v.a(0) == k::<T>(27) * (v.a(-1) - v.a(-2) + k::<T>(27) * v.a(-3))
        }),
        identity!("C_B(n) = 27 (C_B(n-1) - C_B(n-2) + 27 C_B(n-3))", 4, 0, |v| {
            v.b(0) == k::<T>(27) * (v.b(-1) - v.b(-2) + k::<T>(27) * v.b(-3))
        }),
        identity!("C_C(n) = 27 (C_C(n-1) - C_C(n-2) + 27 C_C(n-3))", 4, 0, |v| {
            v.c(0) == k::<T>(27) * (v.c(-1) - v.c(-2) + k::<T>(27) * v.c(-3))
        }),
        identity!("C_D(n) = 27 C_D(n-1)", 2, 0, |v| v.d(0) == k::<T>(27) * v.d(-1)),
        identity!("C_C(n) = 26 C_C(n-1) + 702 C_C(n-3) + 729 C_C(n-4)", 5, 0, |v| {
            v.c(0)
                == k::<T>(26) * v.c(-1) + k::<T>(702) * v.c(-3) + k::<T>(729) * v.c(-4)
        }),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub formula: &'static str,
    /// Indices checked, `first..=last`; empty when the sequence is too short.
    pub range: Option<(usize, usize)>,
    pub first_failure: Option<usize>,
}

impl IdentityOutcome {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub outcomes: Vec<IdentityOutcome>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(IdentityOutcome::passed)
    }

    /// The first violated identity, in suite order.
    pub fn first_violation(&self) -> Option<Error> {
        self.outcomes.iter().find_map(|o| {
            o.first_failure.map(|n| Error::IdentityViolation { identity: o.formula.to_string(), n })
        })
    }

    pub fn into_result(self) -> Result<Self> {
        match self.first_violation() {
            Some(err) => Err(err),
            None => Ok(self),
        }
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            let range = match o.range {
                Some((lo, hi)) => format!("n={lo}..{hi}"),
                None => "no indices".to_string(),
            };
            match o.first_failure {
                None => writeln!(f, "identity {} [{range}] PASS", o.formula)?,
                Some(n) => writeln!(f, "identity {} [{range}] FAIL at n={n}", o.formula)?,
            }
        }
        Ok(())
    }
}

/// Checks every identity on `seq`, where `seq[n]` holds the counts at `n`.
pub fn check_identities<T: ExactInt>(seq: &[ClassCounts<T>]) -> IdentityReport {
    let outcomes = identities::<T>()
        .into_iter()
        .map(|id| {
            let last = seq.len().checked_sub(1 + id.lookahead);
            let range = last.filter(|&hi| hi >= id.min_n).map(|hi| (id.min_n, hi));
            let first_failure = range.and_then(|(lo, hi)| {
                (lo..=hi).find(|&n| !(id.check)(&View { seq, n }))
            });
            IdentityOutcome { formula: id.formula, range, first_failure }
        })
        .collect();
    IdentityReport { outcomes }
}

/// Runs [`check_identities`] on the coupled sequence up to `max_n`.
pub fn identity_suite(max_n: usize) -> Result<IdentityReport> {
    if max_n < MIN_SUITE_N {
        return Err(Error::InvalidArgument(format!(
            "identity suite needs N >= {MIN_SUITE_N}, got {max_n}"
        )));
    }
    check_identities(&coupled_sequence::<BigInt>(max_n)).into_result()
}
