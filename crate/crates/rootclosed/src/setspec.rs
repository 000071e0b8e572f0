//! Textual root-set notation: comma-separated linear combinations of the
//! simple roots, e.g. `a1+2a2+2a3, -a3`. Used by the command line and by
//! the table-driven tests.

use crate::closed::RootSet;
use crate::root_system::RootSystem;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    Empty,
    BadTerm { entry: String },
    IndexOutOfRange { entry: String, index: usize },
    NotARoot { entry: String },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Empty => write!(f, "empty root expression"),
            ParseError::BadTerm { entry } => write!(f, "cannot parse term in '{}'", entry),
            ParseError::IndexOutOfRange { entry, index } => {
                write!(f, "simple-root index {} out of range in '{}'", index, entry)
            }
            ParseError::NotARoot { entry } => {
                write!(f, "'{}' is not a root of this system", entry)
            }
        }
    }
}

impl std::error::Error for ParseError {}

/// Parses one linear combination like `2a1+a2-a3` into coordinates.
fn parse_combo(rank: usize, entry: &str) -> Result<Vec<i64>, ParseError> {
    let s: String = entry.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(ParseError::Empty);
    }
    let bad = || ParseError::BadTerm {
        entry: entry.to_string(),
    };
    let mut coords = vec![0i64; rank];
    let bytes = s.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = 1i64;
        match bytes[pos] {
            b'+' => pos += 1,
            b'-' => {
                sign = -1;
                pos += 1;
            }
            _ => {
                if pos > 0 {
                    return Err(bad());
                }
            }
        }
        let digits_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let coeff: i64 = if pos > digits_start {
            s[digits_start..pos].parse().map_err(|_| bad())?
        } else {
            1
        };
        if pos >= bytes.len() || bytes[pos] != b'a' {
            return Err(bad());
        }
        pos += 1;
        let idx_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if pos == idx_start {
            return Err(bad());
        }
        let index: usize = s[idx_start..pos].parse().map_err(|_| bad())?;
        if index == 0 || index > rank {
            return Err(ParseError::IndexOutOfRange {
                entry: entry.to_string(),
                index,
            });
        }
        coords[index - 1] += sign * coeff;
    }
    Ok(coords)
}

/// Parses one root expression to its index.
pub fn parse_root(rs: &RootSystem, entry: &str) -> Result<usize, ParseError> {
    let coords = parse_combo(rs.rank(), entry)?;
    rs.index_of(&coords).ok_or_else(|| ParseError::NotARoot {
        entry: entry.to_string(),
    })
}

/// Parses a comma-separated list of root expressions.
pub fn parse_set(rs: &RootSystem, spec: &str) -> Result<RootSet, ParseError> {
    let mut out = RootSet::EMPTY;
    let trimmed = spec.trim();
    if trimmed.is_empty() {
        return Ok(out);
    }
    for entry in trimmed.split(',') {
        out.insert(parse_root(rs, entry)?);
    }
    Ok(out)
}

/// Formats a root in the same notation (`-a2-2a3` style).
pub fn format_root(rs: &RootSystem, i: usize) -> String {
    let mut s = String::new();
    for (j, &k) in rs.root(i).iter().enumerate() {
        if k == 0 {
            continue;
        }
        if k > 0 && !s.is_empty() {
            s.push('+');
        }
        if k == -1 {
            s.push('-');
        } else if k != 1 {
            s.push_str(&k.to_string());
        }
        s.push('a');
        s.push_str(&(j + 1).to_string());
    }
    s
}

pub fn format_set(rs: &RootSystem, set: RootSet) -> String {
    set.indices()
        .map(|i| format_root(rs, i))
        .collect::<Vec<_>>()
        .join(",")
}
