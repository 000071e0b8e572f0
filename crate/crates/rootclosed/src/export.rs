//! Machine-readable exports: JSON Lines for full class records, CSV for
//! count summaries. Records round-trip losslessly, and the byte output is
//! a pure function of the classification, independent of thread count.

use crate::closed::RootSet;
use crate::enumerate::{ClassKind, ClassRecord, ClassificationResult, Counts};
use crate::root_system::RootSystem;
use std::fmt;
use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExportKey {
    pub sigma: Vec<i64>,
    pub delta: Vec<i64>,
    pub gram: Vec<Vec<i64>>,
}

/// One classified conjugacy class in export form: roots appear as
/// simple-root coordinate vectors rather than internal indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExportRecord {
    pub rtype: String,
    pub id: u64,
    pub kind: String,
    pub roots: Vec<Vec<i64>>,
    pub sym_part: Vec<Vec<i64>>,
    pub spec_part: Vec<Vec<i64>>,
    pub stabilizer_gens: Vec<Vec<usize>>,
    pub stabilizer_order: String,
    pub invariant_key: ExportKey,
}

fn coords_of(rs: &RootSystem, set: RootSet) -> Vec<Vec<i64>> {
    set.indices().map(|i| rs.root(i).to_vec()).collect()
}

fn record_to_export(rs: &RootSystem, rec: &ClassRecord, id: u64) -> ExportRecord {
    ExportRecord {
        rtype: rs.rtype().to_string(),
        id,
        kind: rec.kind.as_str().to_string(),
        roots: coords_of(rs, rec.rep),
        sym_part: coords_of(rs, rec.sym_part),
        spec_part: coords_of(rs, rec.spec_part),
        stabilizer_gens: rec.stab_gens.iter().map(|g| g.images()).collect(),
        stabilizer_order: rec.stab_order.to_string(),
        invariant_key: ExportKey {
            sigma: rec.key.sigma.0.clone(),
            delta: rec.key.delta.0.clone(),
            gram: rec.key.gram.clone(),
        },
    }
}

/// Flattens a classification into export records: special, then mixed,
/// then symmetric, ids sequential.
pub fn to_export_records(
    rs: &RootSystem,
    result: &ClassificationResult,
    kinds: &[ClassKind],
) -> Vec<ExportRecord> {
    let mut out = Vec::new();
    let mut id = 0u64;
    for kind in [ClassKind::Special, ClassKind::Mixed, ClassKind::Symmetric] {
        if !kinds.contains(&kind) {
            continue;
        }
        let list = match kind {
            ClassKind::Special => &result.special,
            ClassKind::Mixed => &result.mixed,
            ClassKind::Symmetric => &result.symmetric,
        };
        for rec in list {
            out.push(record_to_export(rs, rec, id));
            id += 1;
        }
    }
    out
}

fn write_int_array(out: &mut String, xs: &[i64]) {
    out.push('[');
    for (k, x) in xs.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        let _ = write!(out, "{}", x);
    }
    out.push(']');
}

fn write_int_matrix(out: &mut String, m: &[Vec<i64>]) {
    out.push('[');
    for (k, row) in m.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        write_int_array(out, row);
    }
    out.push(']');
}

/// One record as a single JSON line.
pub fn record_to_json(rec: &ExportRecord) -> String {
    let mut s = String::new();
    let _ = write!(
        s,
        "{{\"type\":\"{}\",\"id\":{},\"kind\":\"{}\"",
        rec.rtype, rec.id, rec.kind
    );
    s.push_str(",\"roots\":");
    write_int_matrix(&mut s, &rec.roots);
    s.push_str(",\"sym_part\":");
    write_int_matrix(&mut s, &rec.sym_part);
    s.push_str(",\"spec_part\":");
    write_int_matrix(&mut s, &rec.spec_part);
    s.push_str(",\"stabilizer_gens\":[");
    for (k, g) in rec.stabilizer_gens.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        let imgs: Vec<i64> = g.iter().map(|&x| x as i64).collect();
        write_int_array(&mut s, &imgs);
    }
    let _ = write!(s, "],\"stabilizer_order\":\"{}\"", rec.stabilizer_order);
    s.push_str(",\"invariant_key\":{\"sigma\":");
    write_int_array(&mut s, &rec.invariant_key.sigma);
    s.push_str(",\"delta\":");
    write_int_array(&mut s, &rec.invariant_key.delta);
    s.push_str(",\"gram\":");
    write_int_matrix(&mut s, &rec.invariant_key.gram);
    s.push_str("}}");
    s
}

pub fn write_jsonl(records: &[ExportRecord]) -> String {
    let mut out = String::new();
    for rec in records {
        out.push_str(&record_to_json(rec));
        out.push('\n');
    }
    out
}

/// CSV count summary; deliberately excludes wall-clock time so repeated
/// runs are byte-identical.
pub fn write_counts_csv(rtype: &str, counts: &Counts) -> String {
    format!(
        "type,special,mixed,symmetric,total\n{},{},{},{},{}\n",
        rtype, counts.special, counts.mixed, counts.symmetric, counts.total
    )
}

// ---------------------------------------------------------------------
// import: a minimal JSON reader for the schema above

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ImportError {
    Syntax { line: usize, what: String },
    Schema { line: usize, what: String },
}

impl fmt::Display for ImportError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImportError::Syntax { line, what } => write!(f, "line {}: {}", line, what),
            ImportError::Schema { line, what } => write!(f, "line {}: {}", line, what),
        }
    }
}

impl std::error::Error for ImportError {}

#[derive(Debug, Clone, PartialEq)]
enum Json {
    Num(i128),
    Str(String),
    Arr(Vec<Json>),
    Obj(Vec<(String, Json)>),
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn new(s: &'a str) -> Reader<'a> {
        Reader {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), String> {
        self.skip_ws();
        if self.pos < self.bytes.len() && self.bytes[self.pos] == c {
            self.pos += 1;
            Ok(())
        } else {
            Err(format!("expected '{}' at offset {}", c as char, self.pos))
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn value(&mut self) -> Result<Json, String> {
        match self.peek() {
            Some(b'{') => self.object(),
            Some(b'[') => self.array(),
            Some(b'"') => Ok(Json::Str(self.string()?)),
            Some(c) if c == b'-' || c.is_ascii_digit() => self.number(),
            other => Err(format!(
                "unexpected input {:?} at offset {}",
                other.map(|c| c as char),
                self.pos
            )),
        }
    }

    fn object(&mut self) -> Result<Json, String> {
        self.expect(b'{')?;
        let mut fields = Vec::new();
        if self.peek() == Some(b'}') {
            self.pos += 1;
            return Ok(Json::Obj(fields));
        }
        loop {
            let key = self.string()?;
            self.expect(b':')?;
            let val = self.value()?;
            fields.push((key, val));
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                }
                Some(b'}') => {
                    self.pos += 1;
                    return Ok(Json::Obj(fields));
                }
                _ => return Err(format!("expected ',' or '}}' at offset {}", self.pos)),
            }
        }
    }

    fn array(&mut self) -> Result<Json, String> {
        self.expect(b'[')?;
        let mut items = Vec::new();
        if self.peek() == Some(b']') {
            self.pos += 1;
            return Ok(Json::Arr(items));
        }
        loop {
            items.push(self.value()?);
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                }
                Some(b']') => {
                    self.pos += 1;
                    return Ok(Json::Arr(items));
                }
                _ => return Err(format!("expected ',' or ']' at offset {}", self.pos)),
            }
        }
    }

    fn string(&mut self) -> Result<String, String> {
        self.expect(b'"')?;
        let mut out = String::new();
        while self.pos < self.bytes.len() {
            let c = self.bytes[self.pos];
            self.pos += 1;
            match c {
                b'"' => return Ok(out),
                b'\\' => {
                    let esc = *self
                        .bytes
                        .get(self.pos)
                        .ok_or_else(|| "truncated escape".to_string())?;
                    self.pos += 1;
                    match esc {
                        b'"' => out.push('"'),
                        b'\\' => out.push('\\'),
                        b'/' => out.push('/'),
                        b'n' => out.push('\n'),
                        b't' => out.push('\t'),
                        other => return Err(format!("unsupported escape '\\{}'", other as char)),
                    }
                }
                _ => out.push(c as char),
            }
        }
        Err("unterminated string".to_string())
    }

    fn number(&mut self) -> Result<Json, String> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .map(Json::Num)
            .ok_or_else(|| format!("bad number at offset {}", start))
    }
}

fn get<'j>(obj: &'j [(String, Json)], key: &str) -> Option<&'j Json> {
    obj.iter().find(|(k, _)| k == key).map(|(_, v)| v)
}

fn as_int_array(v: &Json) -> Option<Vec<i64>> {
    match v {
        Json::Arr(items) => items
            .iter()
            .map(|x| match x {
                Json::Num(n) => i64::try_from(*n).ok(),
                _ => None,
            })
            .collect(),
        _ => None,
    }
}

fn as_int_matrix(v: &Json) -> Option<Vec<Vec<i64>>> {
    match v {
        Json::Arr(items) => items.iter().map(as_int_array).collect(),
        _ => None,
    }
}

fn record_from_json(line_no: usize, line: &str) -> Result<ExportRecord, ImportError> {
    let syntax = |what: String| ImportError::Syntax {
        line: line_no,
        what,
    };
    let schema = |what: &str| ImportError::Schema {
        line: line_no,
        what: what.to_string(),
    };
    let mut reader = Reader::new(line);
    let value = reader.value().map_err(syntax)?;
    let Json::Obj(obj) = value else {
        return Err(schema("record is not an object"));
    };
    let str_field = |key: &str| -> Result<String, ImportError> {
        match get(&obj, key) {
            Some(Json::Str(s)) => Ok(s.clone()),
            _ => Err(schema(&format!("missing string field '{}'", key))),
        }
    };
    let matrix_field = |key: &str| -> Result<Vec<Vec<i64>>, ImportError> {
        get(&obj, key)
            .and_then(as_int_matrix)
            .ok_or_else(|| schema(&format!("missing matrix field '{}'", key)))
    };
    let id = match get(&obj, "id") {
        Some(Json::Num(n)) => u64::try_from(*n).map_err(|_| schema("negative id"))?,
        _ => return Err(schema("missing numeric field 'id'")),
    };
    let key_obj = match get(&obj, "invariant_key") {
        Some(Json::Obj(o)) => o.clone(),
        _ => return Err(schema("missing object field 'invariant_key'")),
    };
    let key_vec = |key: &str| -> Result<Vec<i64>, ImportError> {
        get(&key_obj, key)
            .and_then(as_int_array)
            .ok_or_else(|| schema(&format!("missing invariant field '{}'", key)))
    };
    let gens = matrix_field("stabilizer_gens")?
        .into_iter()
        .map(|g| g.into_iter().map(|x| x as usize).collect())
        .collect();
    Ok(ExportRecord {
        rtype: str_field("type")?,
        id,
        kind: str_field("kind")?,
        roots: matrix_field("roots")?,
        sym_part: matrix_field("sym_part")?,
        spec_part: matrix_field("spec_part")?,
        stabilizer_gens: gens,
        stabilizer_order: str_field("stabilizer_order")?,
        invariant_key: ExportKey {
            sigma: key_vec("sigma")?,
            delta: key_vec("delta")?,
            gram: get(&key_obj, "gram")
                .and_then(as_int_matrix)
                .ok_or_else(|| schema("missing invariant field 'gram'"))?,
        },
    })
}

/// Parses JSON Lines produced by [`write_jsonl`].
pub fn parse_jsonl(text: &str) -> Result<Vec<ExportRecord>, ImportError> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(k, line)| record_from_json(k + 1, line))
        .collect()
}
