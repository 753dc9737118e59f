//! Acceptance suite. Each test prints one PASS/FAIL line for its criterion
//! and enforces the criterion's wall-clock bound.
//!
//! Run with `cargo test -p ternary-words --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use ternary_words::algebraic::QuadI3;
use ternary_words::closed_forms::{case_mod4, closed_form, root_basis, RootSet};
use ternary_words::counters::{brute_force_words, composition_sum, direct_sum, trinomial};
use ternary_words::genfun::{gf_coefficients, gf_for_class};
use ternary_words::identities::check_identities;
use ternary_words::recurrences::{
    char_poly_check, coupled_sequence, decoupled, decoupled_terms, quartic_terms,
};
use ternary_words::{AlgebraicQ3i, ClassLabel, ClassVector, EngineId, Rational};

use ClassLabel::{A, B, C, D};

fn pow3(e: u64) -> BigInt {
    num_traits::pow(BigInt::from(3), e as usize)
}

/// Runs `body`, prints the verdict line, then fails the test on a wrong
/// result or an exceeded time bound.
fn criterion(id: &str, title: &str, limit: Duration, body: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let outcome = outcome.and_then(|()| {
        if elapsed <= limit {
            Ok(())
        } else {
            Err(format!("took {elapsed:?}, limit {limit:?}"))
        }
    });
    match &outcome {
        Ok(()) => println!("criterion {id} [{title}]: PASS ({elapsed:.2?})"),
        Err(why) => println!("criterion {id} [{title}]: FAIL ({elapsed:.2?}): {why}"),
    }
    if let Err(why) = outcome {
        panic!("criterion {id} failed: {why}");
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

#[test]
fn c1_published_values() {
    let expected: [(ClassLabel, &[u64]); 4] = [
        (A, &[3, 63, 2187, 59535]),
        (B, &[6, 90, 2106, 58806]),
        (C, &[0, 90, 2268, 58806]),
        (D, &[18, 486]),
    ];
    criterion("1", "published values, every engine", Duration::from_secs(1), || {
        for (label, values) in expected {
            for (i, &v) in values.iter().enumerate() {
                let n = i as u64 + 1;
                let want = BigInt::from(v);
                ensure(direct_sum(label, n) == want, || format!("direct sum {label}({n})"))?;
                for engine in EngineId::ALL {
                    if !engine.supports(label, n) {
                        continue;
                    }
                    let got = engine.value(label, n).map_err(|e| e.to_string())?;
                    ensure(got == want, || format!("{engine} {label}({n}) = {got}, want {v}"))?;
                }
            }
        }
        Ok(())
    });
}

#[test]
fn c2_oracle_equivalence() {
    criterion("2", "brute = compsum = coupled, n=0..5", Duration::from_secs(60), || {
        let coupled = coupled_sequence::<BigInt>(5);
        for n in 0..=5u64 {
            let brute = brute_force_words(n).map_err(|e| e.to_string())?;
            let sum = composition_sum(n);
            ensure(brute == sum, || format!("brute != compsum at n={n}"))?;
            ensure(sum == coupled[n as usize], || format!("compsum != coupled at n={n}"))?;
        }
        Ok(())
    });
}

#[test]
fn c3_engine_agreement() {
    const MAX: u64 = 300;
    criterion("3", "all engines agree, n=1..300", Duration::from_secs(60), || {
        let coupled = coupled_sequence::<BigInt>(MAX as usize);

        let compsum: Vec<ClassVector> = (1..=MAX).into_par_iter().map(composition_sum).collect();
        for v in &compsum {
            ensure(v == &coupled[v.n], || format!("compsum differs at n={}", v.n))?;
        }

        for label in ClassLabel::ALL {
            let want: Vec<&BigInt> = coupled.iter().map(|v| v.get(label)).collect();
            let dec: Vec<BigInt> = decoupled_terms(label).take(MAX as usize + 1).collect();
            let gf = gf_coefficients(&gf_for_class(label), MAX as usize).map_err(|e| e.to_string())?;
            for n in 1..=MAX as usize {
                ensure(&dec[n] == want[n], || format!("decoupled {label}({n})"))?;
                ensure(&gf[n] == want[n], || format!("genfun {label}({n})"))?;
            }
        }

        let quartic: Vec<BigInt> = quartic_terms().take(MAX as usize + 1).collect();
        for n in 1..=MAX as usize {
            ensure(quartic[n] == coupled[n].c, || format!("quartic C({n})"))?;
        }

        (1..=MAX).into_par_iter().try_for_each(|n| {
            for label in ClassLabel::ALL {
                let want = coupled[n as usize].get(label);
                for (name, value) in [
                    ("closed", closed_form(label, n)),
                    ("rootbasis", root_basis(label, n)),
                    ("mod4", case_mod4(label, n)),
                ] {
                    let got = value.map_err(|e| format!("{name} {label}({n}): {e}"))?;
                    ensure(&got == want, || format!("{name} {label}({n})"))?;
                }
            }
            Ok(())
        })
    });
}

#[test]
fn c4_sum_identity() {
    criterion("4", "C_A+C_B+C_C+C_D = 3^(3n), n=0..2000", Duration::from_secs(60), || {
        let seq = coupled_sequence::<BigInt>(2000);
        let mut power = BigInt::from(1);
        for v in &seq {
            ensure(v.total() == power, || format!("sum identity fails at n={}", v.n))?;
            power *= 27;
        }
        Ok(())
    });
}

#[test]
fn c5_identity_suite() {
    criterion("5", "elimination identities n<=200, char poly", Duration::from_secs(10), || {
        ensure(char_poly_check(), || "characteristic polynomial factorization".into())?;
        let report = check_identities(&coupled_sequence::<BigInt>(200));
        for o in &report.outcomes {
            ensure(o.range.is_some(), || format!("`{}` was never checked", o.formula))?;
        }
        match report.first_violation() {
            None => Ok(()),
            Some(err) => Err(err.to_string()),
        }
    });
}

#[test]
fn c6_structural_properties() {
    criterion("6", "Pascal rule x1000, ring axioms, conjugate roots", Duration::from_secs(10), || {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..1000 {
            let p: i64 = rng.gen_range(1..=60);
            let a = rng.gen_range(0..=p);
            let b = rng.gen_range(0..=p - a);
            let c = p - a - b;
            let t = |x, y, z, w| trinomial(x, y, z, w).unwrap();
            ensure(
                t(p, a, b, c) == t(p - 1, a - 1, b, c) + t(p - 1, a, b - 1, c) + t(p - 1, a, b, c - 1),
                || format!("Pascal rule at ({p}; {a}, {b}, {c})"),
            )?;
        }

        let coord = |rng: &mut rand_chacha::ChaCha8Rng| {
            Rational::new(rng.gen_range(-30i64..=30).into(), rng.gen_range(1i64..=7).into())
        };
        for _ in 0..300 {
            let mut el = || AlgebraicQ3i::new(coord(&mut rng), coord(&mut rng), coord(&mut rng), coord(&mut rng));
            let (x, y, z) = (el(), el(), el());
            ensure(&x * &y == &y * &x, || "commutativity".into())?;
            ensure(&x + &y == &y + &x, || "additive commutativity".into())?;
            ensure(&(&x * &y) * &z == &x * &(&y * &z), || "associativity".into())?;
            ensure(&(&x + &y) + &z == &x + &(&y + &z), || "additive associativity".into())?;
            ensure(&x * &(&y + &z) == &(&x * &y) + &(&x * &z), || "distributivity".into())?;
            ensure((&x * &y).conj() == &x.conj() * &y.conj(), || "conjugation".into())?;
        }

        let roots = RootSet::new();
        ensure(roots.x3 == roots.x2.conj(), || "x3 is not the conjugate of x2".into())?;
        let k = |v: i64| QuadI3::<Rational>::from_int(v);
        for x in roots.roots() {
            let val = &x.pow(3) - &(&k(27) * &(&(&x.pow(2) - &x) + &k(27)));
            ensure(num_traits::Zero::is_zero(&val), || format!("{x} is not a root"))?;
        }
        Ok(())
    });
}

#[test]
fn c7_performance() {
    const N: usize = 10_000;
    criterion("7", "decoupled engine, all classes at n=10000", Duration::from_secs(60), || {
        let values: Vec<BigInt> = ClassLabel::ALL.iter().map(|&l| decoupled(l, N)).collect();
        let digits = values[0].to_string().len();
        ensure((14_300..14_320).contains(&digits), || format!("C_A(10000) has {digits} digits"))?;
        let total: BigInt = values.iter().sum();
        ensure(total == pow3(3 * N as u64), || "values do not sum to 3^(3n)".into())?;
        ensure(values[3] == pow3(3 * N as u64 - 1) * 2, || "C_D(10000) != 2·3^(3n−1)".into())
    });
}

/// Checks `relation` against composition summation for `n = 1..=10`, then
/// against the coupled engine for `n = 1..=300`.
fn derived_relation(relation: impl Fn(u64, &ClassVector) -> bool) -> Result<(), String> {
    for n in 1..=10u64 {
        ensure(relation(n, &composition_sum(n)), || {
            format!("relation fails against composition summation at n={n}")
        })?;
    }
    let seq = coupled_sequence::<BigInt>(300);
    for n in 1..=300u64 {
        ensure(relation(n, &seq[n as usize]), || format!("relation fails at n={n}"))?;
    }
    Ok(())
}

#[test]
fn c8a_b_equals_c_for_even_n() {
    criterion("8a", "C_B(n) = C_C(n) for even n", Duration::from_secs(60), || {
        derived_relation(|n, v| n % 2 == 1 || v.b == v.c)
    });
}

#[test]
fn c8b_b_plus_c() {
    criterion("8b", "C_B(n) + C_C(n) = 2·3^(3n−2), n>=1", Duration::from_secs(60), || {
        derived_relation(|n, v| &v.b + &v.c == pow3(3 * n - 2) * 2)
    });
}

#[test]
fn c8c_abc_sum() {
    criterion("8c", "C_A + C_B + C_C = 3^(3n−1)", Duration::from_secs(60), || {
        derived_relation(|n, v| &v.a + &v.b + &v.c == pow3(3 * n - 1))
    });
}

#[test]
fn c8d_d_is_twice_abc() {
    criterion("8d", "C_D = 2(C_A + C_B + C_C), n>=1", Duration::from_secs(60), || {
        derived_relation(|_, v| v.d == (&v.a + &v.b + &v.c) * 2)
    });
}
