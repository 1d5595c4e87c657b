use std::fmt::Write as _;

use num_bigint::BigInt;

use super::{ANumber, HarnessError, SequenceRecord};

/// Parse OEIS b-file text: `index value` per line, `#` comments and blank
/// lines skipped, LF or CRLF. Indices must run consecutively; the first
/// one becomes the offset.
pub fn parse_bfile(text: &str, a_number: ANumber) -> Result<SequenceRecord, HarnessError> {
    let mut offset = None;
    let mut previous = 0i64;
    let mut terms = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = || HarnessError::Malformed { line: i + 1, text: raw.to_string() };
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed());
        };
        let index: i64 = index.parse().map_err(|_| malformed())?;
        let value: BigInt = value.parse().map_err(|_| malformed())?;
        match offset {
            None => offset = Some(index),
            Some(_) if index != previous + 1 => {
                return Err(HarnessError::NonConsecutive { line: i + 1, previous, found: index })
            }
            Some(_) => {}
        }
        previous = index;
        terms.push(value);
    }
    let offset = offset.ok_or(HarnessError::EmptyBFile)?;
    Ok(SequenceRecord { a_number, offset, terms })
}

/// b-file text for `record`: LF line ends, one space, no comments.
pub fn to_bfile(record: &SequenceRecord) -> String {
    let mut out = String::new();
    for (i, t) in record.terms.iter().enumerate() {
        writeln!(out, "{} {}", record.offset + i as i64, t).expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> ANumber {
        "A051003".parse().unwrap()
    }

    #[test]
    fn parses() {
        let r = parse_bfile("1 666\n2 1666\n", a()).unwrap();
        assert_eq!((r.offset, r.terms.clone()), (1, vec![BigInt::from(666), BigInt::from(1666)]));
        let r = parse_bfile("# comment\n0 2\n1 3\n", a()).unwrap();
        assert_eq!((r.offset, r.terms), (0, vec![BigInt::from(2), BigInt::from(3)]));
        let r = parse_bfile("\r\n5\t-1\r\n6   24547284284866560000000000\r\n\r\n", a()).unwrap();
        assert_eq!(r.terms[1].to_string(), "24547284284866560000000000");
        assert_eq!(r.terms[0], BigInt::from(-1));
    }

    #[test]
    fn rejects() {
        assert!(matches!(
            parse_bfile("1 666\n3 2666\n", a()),
            Err(HarnessError::NonConsecutive { line: 2, previous: 1, found: 3 })
        ));
        assert!(matches!(parse_bfile("1 666 7\n", a()), Err(HarnessError::Malformed { line: 1, .. })));
        assert!(matches!(parse_bfile("1\n", a()), Err(HarnessError::Malformed { .. })));
        assert!(matches!(parse_bfile("x 1\n", a()), Err(HarnessError::Malformed { .. })));
        assert!(matches!(parse_bfile("1 6e3\n", a()), Err(HarnessError::Malformed { .. })));
        assert!(matches!(parse_bfile("# only\n\n", a()), Err(HarnessError::EmptyBFile)));
    }

    #[test]
    fn serializes() {
        let r = parse_bfile("# x\n-1 5\n0 7\n", a()).unwrap();
        assert_eq!(to_bfile(&r), "-1 5\n0 7\n");
    }
}
