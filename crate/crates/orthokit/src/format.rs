//! The canonical text format for structures on disk.
//!
//! A document is UTF-8 text; `#` starts a comment running to the end of
//! the line, and blank lines are skipped. The first significant line must
//! be the header `%orthokit v1`, followed by `kind`, `elements`, and
//! `involution` directives in any order, then a `table` section (groupoid)
//! or a `pairs` section (relational system) running to the end of file:
//!
//! ```text
//! %orthokit v1
//! kind groupoid
//! elements 0 1 a a'
//! involution 1 0 a' a
//! table
//! 0 1 a a'
//! 1 1 1 1
//! a' 1 a' 1   # row = left operand, in elements order
//! a 1 1 a
//! ```
//!
//! Element order in `elements` defines the indices every other line uses;
//! the element named `1` is the top. `involution` lists the image of each
//! element, in elements order. `pairs` lines hold one `x y` pair each,
//! meaning (x, y) is related.

use std::fmt;

use orthokit_core::{Carrier, Groupoid, Involution, Relation, RelationalSystem};

/// Either kind of structure the format can hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Groupoid(Groupoid),
    System(RelationalSystem),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based; errors discovered at end of input use the last line.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Groupoid,
    System,
}

enum Section {
    Table,
    Pairs,
}

pub fn parse(text: &str) -> Result<Document, ParseError> {
    let mut header_seen = false;
    let mut kind: Option<Kind> = None;
    let mut elements: Option<(Vec<String>, usize)> = None;
    let mut involution: Option<(Vec<String>, usize)> = None;
    let mut section: Option<(Section, usize)> = None;
    let mut rows: Vec<(Vec<String>, usize)> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if !header_seen {
            if tokens != ["%orthokit", "v1"] {
                return Err(ParseError::new(line, "expected header `%orthokit v1`"));
            }
            header_seen = true;
            continue;
        }
        if section.is_some() {
            rows.push((tokens.iter().map(|t| t.to_string()).collect(), line));
            continue;
        }
        match tokens[0] {
            "kind" => {
                if kind.is_some() {
                    return Err(ParseError::new(line, "duplicate `kind` directive"));
                }
                kind = Some(match &tokens[1..] {
                    ["groupoid"] => Kind::Groupoid,
                    ["relsys"] => Kind::System,
                    _ => {
                        return Err(ParseError::new(
                            line,
                            "`kind` takes exactly one of: groupoid, relsys",
                        ))
                    }
                });
            }
            "elements" => {
                if elements.is_some() {
                    return Err(ParseError::new(line, "duplicate `elements` directive"));
                }
                if tokens.len() < 2 {
                    return Err(ParseError::new(line, "`elements` needs at least one name"));
                }
                elements = Some((tokens[1..].iter().map(|t| t.to_string()).collect(), line));
            }
            "involution" => {
                if involution.is_some() {
                    return Err(ParseError::new(line, "duplicate `involution` directive"));
                }
                involution =
                    Some((tokens[1..].iter().map(|t| t.to_string()).collect(), line));
            }
            "table" => {
                if tokens.len() > 1 {
                    return Err(ParseError::new(line, "`table` takes no arguments"));
                }
                if kind != Some(Kind::Groupoid) {
                    return Err(ParseError::new(
                        line,
                        "`table` section requires `kind groupoid`",
                    ));
                }
                section = Some((Section::Table, line));
            }
            "pairs" => {
                if tokens.len() > 1 {
                    return Err(ParseError::new(line, "`pairs` takes no arguments"));
                }
                if kind != Some(Kind::System) {
                    return Err(ParseError::new(
                        line,
                        "`pairs` section requires `kind relsys`",
                    ));
                }
                section = Some((Section::Pairs, line));
            }
            other => {
                return Err(ParseError::new(line, format!("unknown directive `{other}`")));
            }
        }
    }

    if !header_seen {
        return Err(ParseError::new(1, "empty input, expected `%orthokit v1`"));
    }
    let kind = kind.ok_or_else(|| ParseError::new(last_line, "missing `kind` directive"))?;
    let (names, elements_line) =
        elements.ok_or_else(|| ParseError::new(last_line, "missing `elements` directive"))?;
    let (inv_names, involution_line) = involution
        .ok_or_else(|| ParseError::new(last_line, "missing `involution` directive"))?;
    let (section, section_line) = section.ok_or_else(|| {
        ParseError::new(
            last_line,
            match kind {
                Kind::Groupoid => "missing `table` section",
                Kind::System => "missing `pairs` section",
            },
        )
    })?;

    let carrier = Carrier::new(names.clone())
        .map_err(|e| ParseError::new(elements_line, e.to_string()))?;
    let n = carrier.len();

    if inv_names.len() != n {
        return Err(ParseError::new(
            involution_line,
            format!("`involution` lists {} images for {} elements", inv_names.len(), n),
        ));
    }
    let index_of = |name: &str, line: usize| {
        carrier
            .index_of(name)
            .ok_or_else(|| ParseError::new(line, format!("unknown element `{name}`")))
    };
    let image: Vec<usize> = inv_names
        .iter()
        .map(|t| index_of(t, involution_line))
        .collect::<Result<_, _>>()?;
    let inv = Involution::new(image)
        .map_err(|e| ParseError::new(involution_line, e.to_string()))?;

    match section {
        Section::Table => {
            if rows.len() != n {
                let at = rows.last().map(|r| r.1).unwrap_or(section_line);
                return Err(ParseError::new(
                    at,
                    format!("`table` has {} rows, carrier has {} elements", rows.len(), n),
                ));
            }
            let mut table = Vec::with_capacity(n * n);
            for (row, line) in &rows {
                if row.len() != n {
                    return Err(ParseError::new(
                        *line,
                        format!("row has {} entries, expected {}", row.len(), n),
                    ));
                }
                for value in row {
                    table.push(index_of(value, *line)? as u8);
                }
            }
            let g = Groupoid::new(carrier, inv, table)
                .map_err(|e| ParseError::new(section_line, e.to_string()))?;
            Ok(Document::Groupoid(g))
        }
        Section::Pairs => {
            let mut rel = Relation::empty(n);
            for (row, line) in &rows {
                if row.len() != 2 {
                    return Err(ParseError::new(
                        *line,
                        format!("pair has {} entries, expected `x y`", row.len()),
                    ));
                }
                rel.insert(index_of(&row[0], *line)?, index_of(&row[1], *line)?);
            }
            let s = RelationalSystem::new(carrier, inv, rel)
                .map_err(|e| ParseError::new(section_line, e.to_string()))?;
            Ok(Document::System(s))
        }
    }
}

pub fn serialize(doc: &Document) -> String {
    match doc {
        Document::Groupoid(g) => serialize_groupoid(g),
        Document::System(s) => serialize_system(s),
    }
}

pub fn serialize_groupoid(g: &Groupoid) -> String {
    let n = g.size();
    let mut out = String::from("%orthokit v1\nkind groupoid\n");
    push_tokens(&mut out, "elements", (0..n).map(|i| g.name(i)));
    push_tokens(&mut out, "involution", (0..n).map(|i| g.name(g.prime(i))));
    out.push_str("table\n");
    for x in 0..n {
        push_row(&mut out, (0..n).map(|y| g.name(g.plus(x, y))));
    }
    out
}

pub fn serialize_system(s: &RelationalSystem) -> String {
    let n = s.size();
    let mut out = String::from("%orthokit v1\nkind relsys\n");
    push_tokens(&mut out, "elements", (0..n).map(|i| s.name(i)));
    push_tokens(&mut out, "involution", (0..n).map(|i| s.name(s.prime(i))));
    out.push_str("pairs\n");
    for x in 0..n {
        for y in 0..n {
            if s.related(x, y) {
                push_row(&mut out, [s.name(x), s.name(y)]);
            }
        }
    }
    out
}

fn push_tokens<'a>(out: &mut String, directive: &str, tokens: impl Iterator<Item = &'a str>) {
    out.push_str(directive);
    for t in tokens {
        out.push(' ');
        out.push_str(t);
    }
    out.push('\n');
}

fn push_row<'a>(out: &mut String, tokens: impl IntoIterator<Item = &'a str>) {
    let mut first = true;
    for t in tokens {
        if !first {
            out.push(' ');
        }
        first = false;
        out.push_str(t);
    }
    out.push('\n');
}
