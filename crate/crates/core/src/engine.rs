//! Uniform access to every engine by name.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::classes::ClassLabel;
use crate::closed_forms::{case_mod4, closed_form, root_basis};
use crate::counters::{brute_force_words, composition_sum, BRUTE_FORCE_LIMIT};
use crate::error::{Error, Result};
use crate::genfun::{gf_coefficients, gf_for_class};
use crate::recurrences::{coupled_at, coupled_sequence, decoupled, decoupled_terms, quartic_c, quartic_terms};
use crate::ClassVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EngineId {
    /// Enumerate every word.
    Brute,
    /// Sum trinomials over all compositions.
    CompSum,
    /// Iterate the 4×4 coupled recurrence.
    Coupled,
    /// Third-order recurrence (A, B, C) and geometric recurrence (D).
    Decoupled,
    /// Quartic recurrence, class C only.
    QuarticC,
    /// Closed form in `Q(i, √3)`.
    Closed,
    /// Powers of the characteristic roots.
    RootBasis,
    /// Integer formulas by `n mod 4`.
    Mod4,
    /// Taylor coefficients of the generating function.
    GenFun,
}

impl EngineId {
    pub const ALL: [EngineId; 9] = [
        EngineId::Brute,
        EngineId::CompSum,
        EngineId::Coupled,
        EngineId::Decoupled,
        EngineId::QuarticC,
        EngineId::Closed,
        EngineId::RootBasis,
        EngineId::Mod4,
        EngineId::GenFun,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EngineId::Brute => "brute",
            EngineId::CompSum => "compsum",
            EngineId::Coupled => "coupled",
            EngineId::Decoupled => "decoupled",
            EngineId::QuarticC => "quartic-c",
            EngineId::Closed => "closed",
            EngineId::RootBasis => "rootbasis",
            EngineId::Mod4 => "mod4",
            EngineId::GenFun => "genfun",
        }
    }

    pub fn supports(self, label: ClassLabel, n: u64) -> bool {
        match self {
            EngineId::Brute => n <= BRUTE_FORCE_LIMIT,
            EngineId::QuarticC => label == ClassLabel::C,
            EngineId::Closed | EngineId::RootBasis | EngineId::Mod4 => n >= 1,
            _ => true,
        }
    }

    pub fn check(self, label: ClassLabel, n: u64) -> Result<()> {
        if self.supports(label, n) {
            Ok(())
        } else {
            Err(Error::OutOfDomain { engine: self, label, n })
        }
    }

    /// `C_label(n)` computed by this engine.
    pub fn value(self, label: ClassLabel, n: u64) -> Result<BigInt> {
        self.check(label, n)?;
        let idx = n as usize;
        match self {
            EngineId::Brute => Ok(brute_force_words(n)?.get(label).clone()),
            EngineId::CompSum => Ok(composition_sum(n).get(label).clone()),
            EngineId::Coupled => Ok(coupled_at::<BigInt>(idx).get(label).clone()),
            EngineId::Decoupled => Ok(decoupled(label, idx)),
            EngineId::QuarticC => Ok(quartic_c(idx)),
            EngineId::Closed => closed_form(label, n),
            EngineId::RootBasis => root_basis(label, n),
            EngineId::Mod4 => case_mod4(label, n),
            EngineId::GenFun => {
                let coeffs = gf_coefficients(&gf_for_class(label), idx)?;
                Ok(coeffs.into_iter().next_back().expect("at least one coefficient"))
            }
        }
    }

    /// All four classes at `n`.
    pub fn vector(self, n: u64) -> Result<ClassVector> {
        match self {
            EngineId::Brute => brute_force_words(n),
            EngineId::CompSum => Ok(composition_sum(n)),
            EngineId::Coupled => Ok(coupled_at(n as usize)),
            _ => {
                let [a, b, c, d] = ClassLabel::ALL.map(|l| self.value(l, n));
                Ok(ClassVector::new(n as usize, a?, b?, c?, d?))
            }
        }
    }

    /// Rows `n = 0..=max_n`, produced in one pass where the engine allows it.
    pub fn table(self, max_n: u64) -> Result<Vec<ClassVector>> {
        let len = max_n as usize + 1;
        match self {
            EngineId::Coupled => Ok(coupled_sequence(max_n as usize)),
            EngineId::Decoupled => {
                let mut streams = ClassLabel::ALL.map(|l| decoupled_terms::<BigInt>(l).take(len));
                Ok((0..len)
                    .map(|n| {
                        let [a, b, c, d] = streams.each_mut().map(|s| s.next().expect("len terms"));
                        ClassVector::new(n, a, b, c, d)
                    })
                    .collect())
            }
            EngineId::GenFun => {
                let mut streams = Vec::with_capacity(4);
                for label in ClassLabel::ALL {
                    streams.push(gf_coefficients(&gf_for_class(label), max_n as usize)?);
                }
                Ok((0..len)
                    .map(|n| {
                        let [a, b, c, d] = [0, 1, 2, 3].map(|k| streams[k][n].clone());
                        ClassVector::new(n, a, b, c, d)
                    })
                    .collect())
            }
            EngineId::QuarticC => Err(Error::OutOfDomain {
                engine: self,
                label: ClassLabel::A,
                n: 0,
            }),
            _ => (0..=max_n).map(|n| self.vector(n)).collect(),
        }
    }

    /// Values of one class for `n = 0..=max_n`.
    pub fn column(self, label: ClassLabel, max_n: u64) -> Result<Vec<BigInt>> {
        let len = max_n as usize + 1;
        match self {
            EngineId::QuarticC => {
                self.check(label, max_n)?;
                Ok(quartic_terms().take(len).collect())
            }
            EngineId::Decoupled => Ok(decoupled_terms(label).take(len).collect()),
            EngineId::GenFun => gf_coefficients(&gf_for_class(label), max_n as usize),
            EngineId::Coupled => {
                Ok(coupled_sequence::<BigInt>(max_n as usize).iter().map(|v| v.get(label).clone()).collect())
            }
            _ => (0..=max_n).map(|n| self.value(label, n)).collect(),
        }
    }
}

impl fmt::Display for EngineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EngineId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        EngineId::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown engine `{s}`")))
    }
}
