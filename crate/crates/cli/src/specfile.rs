//! The line-oriented algebra spec format.
//!
//! ```text
//! # linear A3 with one zero relation
//! field: GF(32003)
//! vertices: [1, 2, 3]
//! arrows: [a1: 1 -> 2, a2: 2 -> 3]
//! relations: [a1*a2]
//! meta.family: example
//! ```
//!
//! `vertices`, `arrows` and `relations` may repeat and then append. Comments
//! are whole lines starting with `#`. A metadata value is the rest of its line.

use std::collections::{HashMap, HashSet};
use std::fmt;

use npreproj_core::families::QuiverSpec;
use npreproj_core::field::{FieldSpec, PrimeField};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecFile {
    /// `None` when the file has no `field:` line.
    pub field: Option<FieldSpec>,
    pub spec: QuiverSpec,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParseErrorKind {
    Syntax,
    UnknownVertex,
    UnknownArrow,
    NonComposable,
    Duplicate,
}

/// 1-based line and column (in characters) of the offending token.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    column: usize,
}

impl Pos {
    fn at(self, offset: usize) -> Pos {
        Pos { line: self.line, column: self.column + offset }
    }

    fn err(self, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, column: self.column, kind, message: message.into() }
    }
}

fn syntax(p: Pos, message: impl Into<String>) -> ParseError {
    p.err(ParseErrorKind::Syntax, message)
}

fn is_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// `s` with its leading-whitespace width in characters.
fn trim_pos(s: &str, p: Pos) -> (&str, Pos) {
    let lead = s.chars().take_while(|c| c.is_whitespace()).count();
    (s.trim(), p.at(lead))
}

fn name(s: &str, p: Pos, what: &str) -> Result<(String, Pos), ParseError> {
    let (t, p) = trim_pos(s, p);
    if is_name(t) {
        Ok((t.to_string(), p))
    } else {
        Err(syntax(p, format!("expected {what} name, found `{t}`")))
    }
}

/// Split `[x, y, z]` into trimmed items with their positions.
fn list(value: &str, p: Pos) -> Result<Vec<(&str, Pos)>, ParseError> {
    let (v, p) = trim_pos(value, p);
    let inner = v
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| syntax(p, "expected a bracketed list"))?;
    let p = p.at(1);
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for item in inner.split(',') {
        let (t, q) = trim_pos(item, p.at(offset));
        if t.is_empty() {
            return Err(syntax(q, "empty list item"));
        }
        if t.contains(['[', ']']) {
            return Err(syntax(q, "nested brackets"));
        }
        out.push((t, q));
        offset += item.chars().count() + 1;
    }
    Ok(out)
}

fn field_spec(value: &str, p: Pos) -> Result<FieldSpec, ParseError> {
    let (v, p) = trim_pos(value, p);
    if v == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    let digits = v
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| syntax(p, format!("expected `Q` or `GF(p)`, found `{v}`")))?;
    let prime: u64 = digits.parse().map_err(|_| syntax(p.at(3), format!("bad modulus `{digits}`")))?;
    PrimeField::new(prime).map_err(|_| syntax(p.at(3), format!("{prime} is not prime")))?;
    Ok(FieldSpec::PrimeField { p: prime })
}

/// Parse `--field` style text.
pub fn parse_field(text: &str) -> Result<FieldSpec, ParseError> {
    field_spec(text, Pos { line: 1, column: 1 })
}

struct Raw {
    field: Option<FieldSpec>,
    vertices: Vec<(String, Pos)>,
    arrows: Vec<((String, Pos), (String, Pos), (String, Pos))>,
    relations: Vec<(String, Pos)>,
    metadata: Vec<(String, String)>,
}

pub fn parse_spec(text: &str) -> Result<SpecFile, ParseError> {
    let mut raw = Raw { field: None, vertices: Vec::new(), arrows: Vec::new(), relations: Vec::new(), metadata: Vec::new() };
    for (i, line) in text.lines().enumerate() {
        let (line, p) = trim_pos(line, Pos { line: i + 1, column: 1 });
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once(':').ok_or_else(|| syntax(p, "expected `key: value`"))?;
        let vp = p.at(key.chars().count() + 1);
        match key.trim_end() {
            "field" => {
                if raw.field.is_some() {
                    return Err(p.err(ParseErrorKind::Duplicate, "field given twice"));
                }
                raw.field = Some(field_spec(value, vp)?);
            }
            "vertices" => {
                for (t, q) in list(value, vp)? {
                    raw.vertices.push(name(t, q, "vertex")?);
                }
            }
            "arrows" => {
                for (t, q) in list(value, vp)? {
                    raw.arrows.push(arrow_item(t, q)?);
                }
            }
            "relations" => raw.relations.extend(list(value, vp)?.into_iter().map(|(t, q)| (t.to_string(), q))),
            k => match k.strip_prefix("meta.") {
                Some(m) if is_name(m) => {
                    if raw.metadata.iter().any(|(x, _)| x == m) {
                        return Err(p.err(ParseErrorKind::Duplicate, format!("metadata `{m}` given twice")));
                    }
                    raw.metadata.push((m.to_string(), value.trim().to_string()));
                }
                _ => return Err(syntax(p, format!("unknown key `{k}`"))),
            },
        }
    }
    validate(raw)
}

fn arrow_item(t: &str, p: Pos) -> Result<((String, Pos), (String, Pos), (String, Pos)), ParseError> {
    let (label, ends) = t.split_once(':').ok_or_else(|| syntax(p, format!("expected `name: source -> target`, found `{t}`")))?;
    let q = p.at(label.chars().count() + 1);
    let (s, e) = ends.split_once("->").ok_or_else(|| syntax(q, "expected `source -> target`"))?;
    Ok((name(label, p, "arrow")?, name(s, q, "vertex")?, name(e, q.at(s.chars().count() + 2), "vertex")?))
}

fn validate(raw: Raw) -> Result<SpecFile, ParseError> {
    let mut vindex = HashSet::new();
    for (v, p) in &raw.vertices {
        if !vindex.insert(v.as_str()) {
            return Err(p.err(ParseErrorKind::Duplicate, format!("vertex `{v}` given twice")));
        }
    }
    let mut ends: HashMap<&str, (&str, &str)> = HashMap::new();
    for ((a, p), (s, sp), (t, tp)) in &raw.arrows {
        for (v, q) in [(s, sp), (t, tp)] {
            if !vindex.contains(v.as_str()) {
                return Err(q.err(ParseErrorKind::UnknownVertex, format!("unknown vertex `{v}`")));
            }
        }
        if ends.insert(a.as_str(), (s.as_str(), t.as_str())).is_some() {
            return Err(p.err(ParseErrorKind::Duplicate, format!("arrow `{a}` given twice")));
        }
    }
    for (r, p) in &raw.relations {
        check_relation(r, *p, &ends)?;
    }
    Ok(SpecFile {
        field: raw.field,
        spec: QuiverSpec {
            vertices: raw.vertices.into_iter().map(|x| x.0).collect(),
            arrows: raw.arrows.into_iter().map(|(a, s, t)| (a.0, s.0, t.0)).collect(),
            relations: raw.relations.into_iter().map(|x| x.0).collect(),
            metadata: raw.metadata,
        },
    })
}

fn is_coefficient(t: &str) -> bool {
    let (n, d) = t.split_once('/').unwrap_or((t, "1"));
    !n.is_empty() && !d.is_empty() && n.chars().all(|c| c.is_ascii_digit()) && d.chars().all(|c| c.is_ascii_digit())
}

/// Terms are `[coefficient*]arrow*arrow*...`, joined by `+` or `-`; each
/// arrow must start where the previous one ends.
fn check_relation(text: &str, p: Pos, ends: &HashMap<&str, (&str, &str)>) -> Result<(), ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut terms: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for (i, &c) in chars.iter().enumerate() {
        if c == '+' || c == '-' {
            terms.push((start, i));
            start = i + 1;
        }
    }
    terms.push((start, chars.len()));
    let mut nonempty = 0;
    for (k, &(lo, hi)) in terms.iter().enumerate() {
        let term: String = chars[lo..hi].iter().collect();
        if term.trim().is_empty() {
            // a leading sign is allowed, doubled or trailing signs are not
            if k == 0 {
                continue;
            }
            return Err(syntax(p.at(lo), "empty term"));
        }
        nonempty += 1;
        let mut prev: Option<&str> = None;
        let mut offset = lo;
        for (j, factor) in term.split('*').enumerate() {
            let (t, q) = trim_pos(factor, p.at(offset));
            offset += factor.chars().count() + 1;
            if t.is_empty() {
                return Err(syntax(q, "empty factor"));
            }
            if j == 0 && !ends.contains_key(t) && is_coefficient(t) {
                continue;
            }
            if !is_name(t) {
                return Err(syntax(q, format!("expected an arrow or coefficient, found `{t}`")));
            }
            let &(s, e) = ends.get(t).ok_or_else(|| q.err(ParseErrorKind::UnknownArrow, format!("unknown arrow `{t}`")))?;
            if let Some(before) = prev {
                if before != s {
                    return Err(q.err(
                        ParseErrorKind::NonComposable,
                        format!("arrow `{t}` starts at `{s}` but the path so far ends at `{before}`"),
                    ));
                }
            }
            prev = Some(e);
        }
        if prev.is_none() {
            return Err(syntax(p.at(lo), "term has no path"));
        }
    }
    if nonempty == 0 {
        return Err(syntax(p, "empty relation"));
    }
    Ok(())
}

/// Canonical text: `parse_spec(&to_text(s)) == Ok(s)` for every parsed `s`.
pub fn to_text(file: &SpecFile) -> String {
    let s = &file.spec;
    let mut out = String::new();
    if let Some(f) = file.field {
        out.push_str(&format!("field: {f}\n"));
    }
    out.push_str(&format!("vertices: [{}]\n", s.vertices.join(", ")));
    let arrows: Vec<String> = s.arrows.iter().map(|(a, x, y)| format!("{a}: {x} -> {y}")).collect();
    out.push_str(&format!("arrows: [{}]\n", arrows.join(", ")));
    out.push_str(&format!("relations: [{}]\n", s.relations.join(", ")));
    for (k, v) in &s.metadata {
        out.push_str(&format!("meta.{k}: {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const A3: &str = "vertices: [1, 2, 3]\narrows: [a1: 1 -> 2, a2: 2 -> 3]\n";

    #[test]
    fn minimal_a2() {
        let s = parse_spec("# A2\nvertices: [1, 2]\narrows: [a: 1 -> 2]\n").unwrap();
        assert_eq!(s.spec.arrows.len(), 1);
        assert_eq!(s.field, None);
    }

    #[test]
    fn composable_relation() {
        let s = parse_spec(&format!("{A3}relations: [a1*a2]\n")).unwrap();
        assert_eq!(s.spec.relations, vec!["a1*a2"]);
    }

    #[test]
    fn non_composable_relation() {
        let e = parse_spec(&format!("{A3}relations: [a2*a1]\n")).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::NonComposable);
        assert_eq!((e.line, e.column), (3, 16));
    }

    #[test]
    fn positions_of_unknown_names() {
        let e = parse_spec("vertices: [1, 2]\narrows: [a: 1 -> 3]\n").unwrap_err();
        assert_eq!((e.kind, e.line, e.column), (ParseErrorKind::UnknownVertex, 2, 18));
        let e = parse_spec(&format!("{A3}relations: [a1*a2, 2*a1*b]\n")).unwrap_err();
        assert_eq!((e.kind, e.line, e.column), (ParseErrorKind::UnknownArrow, 3, 25));
    }

    #[test]
    fn syntax_errors() {
        let dangling = format!("{A3}relations: [a1*a2 -]");
        for bad in ["vertices 1, 2", "vertices: [1,, 2]", "field: GF(32004)", "colour: red", &dangling] {
            let e = parse_spec(bad).unwrap_err();
            assert_eq!(e.kind, ParseErrorKind::Syntax, "{bad}: {e}");
        }
        let e = parse_spec("vertices: [1, 1]").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Duplicate);
        // only the first factor may be a coefficient; later digits are names
        let e = parse_spec(&format!("{A3}relations: [2*3*a1*a2]")).unwrap_err();
        assert_eq!((e.kind, e.column), (ParseErrorKind::UnknownArrow, 15));
    }

    #[test]
    fn repeated_keys_append() {
        let s = parse_spec("vertices: [1]\nvertices: [2]\narrows: [a: 1 -> 2]").unwrap();
        assert_eq!(s.spec.vertices, vec!["1", "2"]);
    }

    #[test]
    fn signed_fractional_relations() {
        let text = "vertices: [s, m1, m2, w]\narrows: [x1: s -> m1, y1: m1 -> w, x2: s -> m2, y2: m2 -> w]\nrelations: [-x1*y1 + 3/2*x2*y2]\n";
        assert!(parse_spec(text).is_ok());
    }

    #[test]
    fn canonical_round_trip() {
        let text = "# c\nfield:Q\nvertices: [ 1,2 ,3]\narrows: [a1:1->2]\narrows: [a2 : 2 -> 3]\nrelations: [a1*a2]\nmeta.note: x, y: z\n";
        let s = parse_spec(text).unwrap();
        let canon = to_text(&s);
        assert_eq!(canon, "field: Q\nvertices: [1, 2, 3]\narrows: [a1: 1 -> 2, a2: 2 -> 3]\nrelations: [a1*a2]\nmeta.note: x, y: z\n");
        assert_eq!(parse_spec(&canon).unwrap(), s);
        assert_eq!(to_text(&parse_spec(&canon).unwrap()), canon);
    }
}
