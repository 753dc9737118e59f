//! OEIS b-files for the class A, B and C sequences.

use std::fmt::Write;

use crate::classes::ClassLabel;
use crate::engine::EngineId;
use crate::error::{Error, Result};

pub const SEQUENCES: [(&str, ClassLabel); 3] =
    [("A391468", ClassLabel::A), ("A391469", ClassLabel::B), ("A391470", ClassLabel::C)];

/// Index of the first emitted term unless overridden.
pub const DEFAULT_OFFSET: u64 = 1;

pub fn class_for_sequence(id: &str) -> Result<ClassLabel> {
    SEQUENCES
        .iter()
        .find(|(name, _)| name.eq_ignore_ascii_case(id.trim()))
        .map(|&(_, label)| label)
        .ok_or_else(|| Error::UnknownSequence(id.to_string()))
}

/// `"n value\n"` lines for `n = offset..=max_n`, values from `engine`.
pub fn bfile(label: ClassLabel, offset: u64, max_n: u64, engine: EngineId) -> Result<String> {
    if max_n < offset {
        return Err(Error::InvalidArgument(format!("--max-n {max_n} is below the offset {offset}")));
    }
    let values = engine.column(label, max_n)?;
    let mut out = String::new();
    for (n, v) in values.iter().enumerate().skip(offset as usize) {
        writeln!(out, "{n} {v}").expect("writing to a String");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_sequences() {
        let b = |id, max| bfile(class_for_sequence(id).unwrap(), DEFAULT_OFFSET, max, EngineId::Decoupled).unwrap();
        assert_eq!(b("A391468", 3), "1 3\n2 63\n3 2187\n");
        assert_eq!(b("A391470", 2), "1 0\n2 90\n");
        assert_eq!(b("A391469", 1), "1 6\n");
    }

    #[test]
    fn offset_zero_includes_empty_word() {
        assert_eq!(bfile(ClassLabel::A, 0, 1, EngineId::Decoupled).unwrap(), "0 1\n1 3\n");
    }

    #[test]
    fn unknown_sequence() {
        assert_eq!(class_for_sequence("A000045"), Err(Error::UnknownSequence("A000045".into())));
        assert!(bfile(ClassLabel::A, 1, 0, EngineId::Decoupled).is_err());
    }
}
