use num_bigint::BigInt;
use proptest::prelude::*;

use ternary_words::closed_forms::{case_mod4, closed_form, root_basis};
use ternary_words::counters::composition_sum;
use ternary_words::recurrences::{coupled_at, decoupled, quartic_c};
use ternary_words::{ClassLabel, EngineId};

fn pow3(e: u64) -> BigInt {
    num_traits::pow(BigInt::from(3), e as usize)
}

#[test]
fn b_plus_c_by_parity_against_oracle() {
    for n in 1..=12u64 {
        let v = composition_sum(n);
        let sum = &v.b + &v.c;
        if n % 2 == 1 {
            assert_eq!(sum, pow3(3 * n - 2) * 2, "n={n}");
        } else {
            let osc: BigInt = pow3((3 * n - 2) / 2) * 2;
            let signed = if (n / 2) % 2 == 0 { osc } else { -osc };
            assert_eq!(sum, pow3(3 * n - 2) * 2 - signed, "n={n}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recurrence_and_closed_forms_agree(n in 1u64..=300) {
        let v = coupled_at::<BigInt>(n as usize);
        for label in ClassLabel::ALL {
            let want = v.get(label);
            prop_assert_eq!(&decoupled::<BigInt>(label, n as usize), want);
            prop_assert_eq!(&closed_form(label, n).unwrap(), want);
            prop_assert_eq!(&root_basis(label, n).unwrap(), want);
            prop_assert_eq!(&case_mod4(label, n).unwrap(), want);
        }
        prop_assert_eq!(&quartic_c::<BigInt>(n as usize), &v.c);
    }

    #[test]
    fn b_plus_c_for_odd_n(k in 0u64..=150) {
        let n = 2 * k + 1;
        let v = coupled_at::<BigInt>(n as usize);
        prop_assert_eq!(&v.b + &v.c, pow3(3 * n - 2) * 2);
    }

    #[test]
    fn engines_print_identical_values(n in 0u64..=40, label_idx in 0usize..4) {
        let label = ClassLabel::ALL[label_idx];
        let reference = EngineId::Coupled.value(label, n).unwrap();
        for engine in EngineId::ALL {
            if engine.supports(label, n) {
                prop_assert_eq!(engine.value(label, n).unwrap().to_string(), reference.to_string());
            }
        }
    }
}
