//! OEIS b-files: parsing, emission and prefix comparison.

pub mod fixtures;

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct BFile {
    pub id: Option<String>,
    pub entries: Vec<(i64, i128)>,
}

impl BFile {
    pub fn from_values<T: Copy + Into<i128>>(seq: &[T], start: i64) -> Self {
        BFile {
            id: None,
            entries: seq
                .iter()
                .zip(start..)
                .map(|(&v, i)| (i, v.into()))
                .collect(),
        }
    }

    pub fn values(&self) -> Vec<i128> {
        self.entries.iter().map(|&(_, v)| v).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn looks_like_id(s: &str) -> bool {
    s.len() == 7 && s.starts_with('A') && s[1..].bytes().all(|c| c.is_ascii_digit())
}

/// Parses `index value` lines. `#` starts a comment; a comment whose first
/// word is an A-number sets the id.
pub fn parse_bfile(text: &str) -> Result<BFile> {
    let mut out = BFile::default();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if out.id.is_none() {
                if let Some(word) = comment
                    .split_whitespace()
                    .next()
                    .filter(|w| looks_like_id(w))
                {
                    out.id = Some(word.to_string());
                }
            }
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(idx), Some(val), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected \"index value\", got {line:?}"),
            });
        };
        let idx: i64 = idx.parse().map_err(|e| Error::Parse {
            line: line_no,
            message: format!("index {idx:?}: {e}"),
        })?;
        let val: i128 = val.parse().map_err(|e| Error::Parse {
            line: line_no,
            message: format!("value {val:?}: {e}"),
        })?;
        if let Some(&(prev, _)) = out.entries.last() {
            if idx <= prev {
                return Err(Error::Format {
                    line: line_no,
                    message: format!("index {idx} does not follow {prev}"),
                });
            }
        }
        out.entries.push((idx, val));
    }
    Ok(out)
}

pub fn emit_bfile<T: Copy + Into<i128>>(seq: &[T], start: i64) -> String {
    format_bfile(&BFile::from_values(seq, start))
}

/// Canonical text: an optional `# id` line, then one `index value` line per entry.
pub fn format_bfile(b: &BFile) -> String {
    let mut s = String::new();
    if let Some(id) = &b.id {
        let _ = writeln!(s, "# {id}");
    }
    for (i, v) in &b.entries {
        let _ = writeln!(s, "{i} {v}");
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    /// Reference index where the values differ.
    pub index: i64,
    pub expected: i128,
    pub actual: i128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub id: Option<String>,
    pub match_length: usize,
    /// Number of reference entries that had a counterpart in `seq`.
    pub compared: usize,
    pub mismatch: Option<Mismatch>,
}

impl Comparison {
    /// True when every overlapping term agrees and at least one was compared.
    pub fn matches(&self) -> bool {
        self.mismatch.is_none() && self.compared > 0
    }
}

/// Aligns `seq[0]` with reference index `offset` and walks the reference in
/// order. Reference entries before `offset` or past the end of `seq` are
/// skipped.
pub fn compare<T: Copy + Into<i128>>(seq: &[T], reference: &BFile, offset: i64) -> Comparison {
    let mut c = Comparison {
        id: reference.id.clone(),
        match_length: 0,
        compared: 0,
        mismatch: None,
    };
    for &(idx, expected) in &reference.entries {
        let Some(pos) = idx
            .checked_sub(offset)
            .filter(|&p| p >= 0)
            .map(|p| p as usize)
        else {
            continue;
        };
        let Some(&actual) = seq.get(pos) else { break };
        let actual = actual.into();
        c.compared += 1;
        if actual != expected {
            c.mismatch = Some(Mismatch {
                index: idx,
                expected,
                actual,
            });
            break;
        }
        c.match_length += 1;
    }
    c
}

/// CSV with columns `id, match_length, first_mismatch_index, expected, actual`.
pub fn comparisons_csv(rows: &[Comparison]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "id",
        "match_length",
        "first_mismatch_index",
        "expected",
        "actual",
    ])
    .map_err(|e| Error::Format {
        line: 0,
        message: e.to_string(),
    })?;
    for r in rows {
        let opt = |f: fn(&Mismatch) -> String| r.mismatch.as_ref().map(f).unwrap_or_default();
        w.write_record([
            r.id.clone().unwrap_or_default(),
            r.match_length.to_string(),
            opt(|m| m.index.to_string()),
            opt(|m| m.expected.to_string()),
            opt(|m| m.actual.to_string()),
        ])
        .map_err(|e| Error::Format {
            line: 0,
            message: e.to_string(),
        })?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Format {
        line: 0,
        message: e.to_string(),
    })?;
    String::from_utf8(bytes).map_err(|e| Error::Format {
        line: 0,
        message: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_simple() {
        let b = parse_bfile("1 2\n2 3\n3 5\n").unwrap();
        assert_eq!(b.entries, vec![(1, 2), (2, 3), (3, 5)]);
        let b = parse_bfile("# comment\n\n1 1\n").unwrap();
        assert_eq!(b.entries, vec![(1, 1)]);
        assert_eq!(b.id, None);
        assert_eq!(
            parse_bfile("# A000201 lower Wythoff\n1 1\n")
                .unwrap()
                .id
                .as_deref(),
            Some("A000201")
        );
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(
            parse_bfile("1 2\n1 3\n"),
            Err(Error::Format { line: 2, .. })
        ));
        assert!(matches!(
            parse_bfile("1 2\n\nx 3\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_bfile("1 2 3\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_bfile("7\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn emit() {
        assert_eq!(emit_bfile(&[2u64, 3, 5], 1), "1 2\n2 3\n3 5\n");
        assert_eq!(emit_bfile::<u64>(&[], 1), "");
    }

    #[test]
    fn big_values() {
        let b = parse_bfile("0 -170141183460469231731687303715884105728\n").unwrap();
        assert_eq!(b.entries[0].1, i128::MIN);
    }

    #[test]
    fn compare_reports_first_mismatch() {
        let r = parse_bfile("1 2\n2 3\n3 5\n4 7\n").unwrap();
        let c = compare(&[2u64, 3, 5, 6, 8], &r, 1);
        assert_eq!(c.match_length, 3);
        assert_eq!(
            c.mismatch,
            Some(Mismatch {
                index: 4,
                expected: 7,
                actual: 6
            })
        );
        let c = compare(&[3u64, 5], &r, 2);
        assert!(c.matches());
        assert_eq!(c.match_length, 2);
        assert!(!compare::<u64>(&[], &r, 1).matches());
    }

    #[test]
    fn csv_report() {
        let r = parse_bfile("# A000001\n1 2\n2 4\n").unwrap();
        let rows = [compare(&[2u64, 4], &r, 1), compare(&[2u64, 5], &r, 1)];
        assert_eq!(
            comparisons_csv(&rows).unwrap(),
            "id,match_length,first_mismatch_index,expected,actual\nA000001,2,,,\nA000001,1,2,4,5\n"
        );
    }

    proptest! {
        #[test]
        fn round_trip(start in -5i64..5, vals in proptest::collection::vec(any::<i64>(), 0..40)) {
            let text = emit_bfile(&vals, start);
            let b = parse_bfile(&text).unwrap();
            prop_assert_eq!(format_bfile(&b), text);
            prop_assert_eq!(b.values(), vals.iter().map(|&v| v as i128).collect::<Vec<_>>());
        }
    }
}
