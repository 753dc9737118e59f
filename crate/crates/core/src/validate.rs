//! Cross-engine validation: every engine against the coupled recurrence, the
//! total-count identity, the characteristic polynomial factorization and the
//! identity suite.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::classes::ClassLabel;
use crate::counters::BRUTE_FORCE_LIMIT;
use crate::engine::EngineId;
use crate::error::{Error, Result};
use crate::identities::{check_identities, MIN_SUITE_N};
use crate::recurrences::{char_poly_check, coupled_sequence};
use crate::ClassVector;

/// Composition summation is quadratic per index; cap it in validation runs.
pub const COMPSUM_LIMIT: u64 = 300;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub index: Option<u64>,
    pub detail: String,
    pub passed: bool,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        match self.index {
            Some(n) => write!(f, "{} n={}: {} {}", self.name, n, self.detail, verdict),
            None => write!(f, "{}: {} {}", self.name, self.detail, verdict),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Range of `n` each engine is compared over when validating up to `max_n`.
pub fn engine_range(engine: EngineId, max_n: u64) -> (u64, u64) {
    let lo = match engine {
        EngineId::Closed | EngineId::RootBasis | EngineId::Mod4 => 1,
        _ => 0,
    };
    let hi = match engine {
        EngineId::Brute => max_n.min(BRUTE_FORCE_LIMIT),
        EngineId::CompSum => max_n.min(COMPSUM_LIMIT),
        _ => max_n,
    };
    (lo, hi)
}

fn labels_for(engine: EngineId) -> &'static [ClassLabel] {
    match engine {
        EngineId::QuarticC => &[ClassLabel::C],
        _ => &ClassLabel::ALL,
    }
}

/// First `(n, label)` where `engine` disagrees with `reference`.
pub fn compare_engine(
    engine: EngineId,
    reference: &[ClassVector],
    lo: u64,
    hi: u64,
) -> Result<Option<(u64, ClassLabel)>> {
    if matches!(engine, EngineId::Decoupled | EngineId::GenFun | EngineId::QuarticC) {
        let mut first: Option<(u64, ClassLabel)> = None;
        for &label in labels_for(engine) {
            let column = engine.column(label, hi)?;
            let hit = (lo..=hi).find(|&n| &column[n as usize] != reference[n as usize].get(label));
            if let Some(n) = hit {
                if first.is_none_or(|(m, _)| n < m) {
                    first = Some((n, label));
                }
            }
        }
        return Ok(first);
    }
    let mismatches: Vec<Option<(u64, ClassLabel)>> = (lo..=hi)
        .into_par_iter()
        .map(|n| -> Result<Option<(u64, ClassLabel)>> {
            let expected = &reference[n as usize];
            let got = engine.vector(n)?;
            Ok(ClassLabel::ALL.into_iter().find(|&l| got.get(l) != expected.get(l)).map(|l| (n, l)))
        })
        .collect::<Result<_>>()?;
    Ok(mismatches.into_iter().flatten().next())
}

fn sum_identity(v: &ClassVector) -> CheckResult {
    let total = v.total();
    let expected = num_traits::pow(BigInt::from(3), 3 * v.n);
    CheckResult {
        name: "sum identity".into(),
        index: Some(v.n as u64),
        detail: format!("{}+{}+{}+{} = {} = 3^{}", v.a, v.b, v.c, v.d, total, 3 * v.n),
        passed: total == expected,
    }
}

/// Runs every check up to `max_n` (at least 4) and returns them sorted by
/// check name, then index.
pub fn validate(max_n: u64) -> Result<ValidationReport> {
    if max_n < MIN_SUITE_N as u64 {
        return Err(Error::InvalidArgument(format!(
            "validation needs --max-n >= {MIN_SUITE_N}, got {max_n}"
        )));
    }
    let reference = coupled_sequence::<BigInt>(max_n as usize);

    let mut checks: Vec<CheckResult> = EngineId::ALL
        .par_iter()
        .filter(|&&e| e != EngineId::Coupled)
        .map(|&engine| -> Result<CheckResult> {
            let (lo, hi) = engine_range(engine, max_n);
            let mismatch = compare_engine(engine, &reference, lo, hi)?;
            let detail = match mismatch {
                None => format!("matches coupled for n={lo}..{hi}"),
                Some((n, label)) => format!("differs from coupled at n={n}, class {label}"),
            };
            Ok(CheckResult {
                name: format!("engine {engine}"),
                index: None,
                detail,
                passed: mismatch.is_none(),
            })
        })
        .collect::<Result<_>>()?;

    checks.extend(reference.iter().map(sum_identity));

    let poly_ok = char_poly_check();
    checks.push(CheckResult {
        name: "characteristic polynomial".into(),
        index: None,
        detail: "x^4 - 26x^3 - 702x - 729 = (x + 1)(x^3 - 27(x^2 - x + 27))".into(),
        passed: poly_ok,
    });

    let identities = check_identities(&reference);
    checks.extend(identities.outcomes.iter().map(|o| {
        let range = o.range.map_or("no indices".to_string(), |(lo, hi)| format!("n={lo}..{hi}"));
        CheckResult {
            name: format!("identity {}", o.formula),
            index: None,
            detail: match o.first_failure {
                None => range,
                Some(n) => format!("{range}, first failure at n={n}"),
            },
            passed: o.passed(),
        }
    }));

    checks.sort_by(|x, y| x.name.cmp(&y.name).then(x.index.cmp(&y.index)));
    Ok(ValidationReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let report = validate(10).unwrap();
        assert!(report.all_passed(), "{report}");
        assert_eq!(report.checks.iter().filter(|c| c.name == "sum identity").count(), 11);
    }

    #[test]
    fn sum_identity_line() {
        let report = validate(4).unwrap();
        let text = report.to_string();
        assert!(text.contains("sum identity n=4: 59535+58806+58806+354294 = 531441 = 3^12 PASS"), "{text}");
    }

    #[test]
    fn rejects_small_max_n() {
        assert!(matches!(validate(3), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn ordering_is_deterministic() {
        let a = validate(6).unwrap();
        let b = validate(6).unwrap();
        assert_eq!(a, b);
        let keys: Vec<_> = a.checks.iter().map(|c| (c.name.clone(), c.index)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn corrupted_reference_is_reported() {
        let mut reference = coupled_sequence::<BigInt>(5);
        reference[3].b += 1;
        let hit = compare_engine(EngineId::Decoupled, &reference, 0, 5).unwrap();
        assert_eq!(hit, Some((3, ClassLabel::B)));
    }
}
