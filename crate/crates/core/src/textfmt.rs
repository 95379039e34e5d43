//! Plain-text file format for finite structures, one construct per file.
//!
//! ```text
//! # a comment
//! semiring
//! order 5
//! elements 0 1 a b c
//! zero 0
//! one 1
//! add
//! <n lines of n space-separated element labels>
//! mul
//! <n lines of n space-separated element labels>
//! ```
//!
//! A `magma` variant has a single `table` section and accepts optional
//! `zero`, `one` and `generators` lines; a `group` variant has a `table`
//! section and an optional `identity` line (deduced when absent).
//! Whitespace-tolerant; `#` starts a comment that runs to end of line.

use thiserror::Error;

use crate::groups::{validate_group, FiniteGroup, GroupError};
use crate::tables::{FiniteMagma, FiniteSemiring, OpTable, TableError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    At { line: usize, msg: String },
    #[error("unexpected end of file: {0}")]
    UnexpectedEof(String),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("invalid group: {0}")]
    Group(#[from] GroupError),
}

fn err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::At { line, msg: msg.into() }
}

/// Any of the three parsable constructs.
#[derive(Debug, Clone)]
pub enum Construct {
    Semiring(FiniteSemiring),
    Magma(FiniteMagma),
    Group(FiniteGroup),
}

impl Construct {
    pub fn kind(&self) -> &'static str {
        match self {
            Construct::Semiring(_) => "semiring",
            Construct::Magma(_) => "magma",
            Construct::Group(_) => "group",
        }
    }
}

struct Lines<'a> {
    // (line number, content with comments stripped)
    items: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .map(|(i, l)| {
                let body = match l.find('#') {
                    Some(h) => &l[..h],
                    None => l,
                };
                (i + 1, body.trim())
            })
            .filter(|(_, body)| !body.is_empty())
            .collect();
        Lines { items, pos: 0 }
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let item = self.items.get(self.pos).copied();
        if item.is_some() {
            self.pos += 1;
        }
        item
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str), ParseError> {
        self.next().ok_or_else(|| ParseError::UnexpectedEof(format!("expected {what}")))
    }
}

/// Parse a file in the text format into whatever construct it declares.
pub fn parse(text: &str) -> Result<Construct, ParseError> {
    let mut lines = Lines::new(text);
    let (hline, header) = lines.expect("a header line (semiring, magma, or group)")?;
    match header {
        "semiring" => parse_semiring(&mut lines).map(Construct::Semiring),
        "magma" => parse_magma(&mut lines).map(Construct::Magma),
        "group" => parse_group(&mut lines).map(Construct::Group),
        other => Err(err(hline, format!("unknown header {other:?}"))),
    }
}

struct Head {
    order: usize,
    labels: Vec<String>,
}

fn parse_head(lines: &mut Lines) -> Result<Head, ParseError> {
    let (oline, order_line) = lines.expect("an `order` line")?;
    let order: usize = match order_line.strip_prefix("order") {
        Some(rest) => rest
            .trim()
            .parse()
            .map_err(|_| err(oline, format!("cannot parse order from {order_line:?}")))?,
        None => return Err(err(oline, format!("expected `order <n>`, got {order_line:?}"))),
    };
    if order == 0 {
        return Err(err(oline, "order must be positive"));
    }
    let (eline, elements_line) = lines.expect("an `elements` line")?;
    let labels: Vec<String> = match elements_line.strip_prefix("elements") {
        Some(rest) => rest.split_whitespace().map(String::from).collect(),
        None => return Err(err(eline, format!("expected `elements ...`, got {elements_line:?}"))),
    };
    if labels.len() != order {
        return Err(err(eline, format!("expected {order} element labels, got {}", labels.len())));
    }
    Ok(Head { order, labels })
}

fn label_index(head: &Head, label: &str, line: usize) -> Result<usize, ParseError> {
    head.labels
        .iter()
        .position(|l| l == label)
        .ok_or_else(|| err(line, format!("unknown element label {label:?}")))
}

/// Reads `n` rows of `n` labels each; rows must not be split or merged
/// across lines, so misalignment is reported at its exact line.
fn parse_table(lines: &mut Lines, head: &Head, section: &str) -> Result<OpTable, ParseError> {
    let n = head.order;
    let mut entries = Vec::with_capacity(n * n);
    for row in 0..n {
        let (line, body) = lines
            .next()
            .ok_or_else(|| ParseError::UnexpectedEof(format!("row {row} of `{section}`")))?;
        let cells: Vec<&str> = body.split_whitespace().collect();
        if cells.len() != n {
            return Err(err(
                line,
                format!("row {row} of `{section}` has {} entries, expected {n}", cells.len()),
            ));
        }
        for cell in cells {
            entries.push(label_index(head, cell, line)?);
        }
    }
    Ok(OpTable::new(n, entries)?)
}

fn take_keyword_line(
    lines: &mut Lines,
    keyword: &str,
) -> Result<Option<(usize, String)>, ParseError> {
    if let Some(&(line, body)) = lines.items.get(lines.pos) {
        if let Some(rest) = body.strip_prefix(keyword) {
            if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                lines.pos += 1;
                return Ok(Some((line, rest.trim().to_string())));
            }
        }
    }
    Ok(None)
}

fn parse_semiring(lines: &mut Lines) -> Result<FiniteSemiring, ParseError> {
    let head = parse_head(lines)?;
    let (zline, zero_label) = match take_keyword_line(lines, "zero")? {
        Some(v) => v,
        None => return Err(ParseError::UnexpectedEof("a `zero` line".into())),
    };
    let (oline, one_label) = match take_keyword_line(lines, "one")? {
        Some(v) => v,
        None => return Err(ParseError::UnexpectedEof("a `one` line".into())),
    };
    let zero = label_index(&head, &zero_label, zline)?;
    let one = label_index(&head, &one_label, oline)?;
    let (aline, add_kw) = lines.expect("an `add` section")?;
    if add_kw != "add" {
        return Err(err(aline, format!("expected `add`, got {add_kw:?}")));
    }
    let add = parse_table(lines, &head, "add")?;
    let (mline, mul_kw) = lines.expect("a `mul` section")?;
    if mul_kw != "mul" {
        return Err(err(mline, format!("expected `mul`, got {mul_kw:?}")));
    }
    let mul = parse_table(lines, &head, "mul")?;
    Ok(FiniteSemiring::new(head.labels, add, mul, zero, one)?)
}

fn parse_magma(lines: &mut Lines) -> Result<FiniteMagma, ParseError> {
    let head = parse_head(lines)?;
    let zero = match take_keyword_line(lines, "zero")? {
        Some((line, label)) => Some(label_index(&head, &label, line)?),
        None => None,
    };
    let one = match take_keyword_line(lines, "one")? {
        Some((line, label)) => Some(label_index(&head, &label, line)?),
        None => None,
    };
    let (tline, table_kw) = lines.expect("a `table` section")?;
    if table_kw != "table" {
        return Err(err(tline, format!("expected `table`, got {table_kw:?}")));
    }
    let table = parse_table(lines, &head, "table")?;
    let generators = match take_keyword_line(lines, "generators")? {
        Some((line, rest)) => {
            let mut gens = Vec::new();
            for label in rest.split_whitespace() {
                gens.push(label_index(&head, label, line)?);
            }
            Some(gens)
        }
        None => None,
    };
    let mut magma = FiniteMagma::new(head.labels, table)?;
    magma.zero = zero;
    magma.one = one;
    magma.generators = generators;
    Ok(magma)
}

fn parse_group(lines: &mut Lines) -> Result<FiniteGroup, ParseError> {
    let head = parse_head(lines)?;
    let identity = match take_keyword_line(lines, "identity")? {
        Some((line, label)) => Some(label_index(&head, &label, line)?),
        None => None,
    };
    let (tline, table_kw) = lines.expect("a `table` section")?;
    if table_kw != "table" {
        return Err(err(tline, format!("expected `table`, got {table_kw:?}")));
    }
    let table = parse_table(lines, &head, "table")?;
    let identity = match identity {
        Some(e) => e,
        None => {
            let magma = FiniteMagma::new(head.labels.clone(), table.clone())?;
            magma.find_identity().ok_or_else(|| err(tline, "table has no two-sided identity"))?
        }
    };
    let group = FiniteGroup::new(head.labels, table, identity)?;
    validate_group(&group)?;
    Ok(group)
}

fn render_table(out: &mut String, labels: &[String], table: &OpTable, section: &str) {
    out.push_str(section);
    out.push('\n');
    for row in table.rows() {
        let cells: Vec<&str> = row.iter().map(|&v| labels[v as usize].as_str()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
}

/// Canonical rendering of a semiring in the text format.
pub fn render_semiring(s: &FiniteSemiring) -> String {
    let mut out = String::new();
    out.push_str("semiring\n");
    out.push_str(&format!("order {}\n", s.order()));
    out.push_str(&format!("elements {}\n", s.labels.join(" ")));
    out.push_str(&format!("zero {}\n", s.labels[s.zero]));
    out.push_str(&format!("one {}\n", s.labels[s.one]));
    render_table(&mut out, &s.labels, &s.add, "add");
    render_table(&mut out, &s.labels, &s.mul, "mul");
    out
}

/// Canonical rendering of a magma in the text format.
pub fn render_magma(m: &FiniteMagma) -> String {
    let mut out = String::new();
    out.push_str("magma\n");
    out.push_str(&format!("order {}\n", m.order()));
    out.push_str(&format!("elements {}\n", m.labels.join(" ")));
    if let Some(z) = m.zero {
        out.push_str(&format!("zero {}\n", m.labels[z]));
    }
    if let Some(o) = m.one {
        out.push_str(&format!("one {}\n", m.labels[o]));
    }
    render_table(&mut out, &m.labels, &m.table, "table");
    if let Some(gens) = &m.generators {
        let cells: Vec<&str> = gens.iter().map(|&g| m.labels[g].as_str()).collect();
        out.push_str(&format!("generators {}\n", cells.join(" ")));
    }
    out
}

/// Canonical rendering of a group in the text format.
pub fn render_group(g: &FiniteGroup) -> String {
    let mut out = String::new();
    out.push_str("group\n");
    out.push_str(&format!("order {}\n", g.order()));
    out.push_str(&format!("elements {}\n", g.labels.join(" ")));
    out.push_str(&format!("identity {}\n", g.labels[g.identity]));
    render_table(&mut out, &g.labels, &g.cayley, "table");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::{validate_semiring, zmod_semiring};

    #[test]
    fn semiring_round_trip() {
        let z6 = zmod_semiring(6);
        let text = render_semiring(&z6);
        let back = match parse(&text).unwrap() {
            Construct::Semiring(s) => s,
            other => panic!("expected semiring, got {}", other.kind()),
        };
        assert_eq!(z6, back);
        assert!(validate_semiring(&back).is_valid());
    }

    #[test]
    fn comments_and_whitespace_tolerated() {
        let text = "\n# header comment\nsemiring\norder 2   # inline\nelements 0 1\nzero 0\none 1\nadd\n0 1\n1 0\nmul\n0 0\n0 1\n";
        let c = parse(text).unwrap();
        assert_eq!(c.kind(), "semiring");
    }

    #[test]
    fn misaligned_row_reports_line_number() {
        let text = "semiring\norder 2\nelements 0 1\nzero 0\none 1\nadd\n0 1\n1\nmul\n0 0\n0 1\n";
        match parse(text) {
            Err(ParseError::At { line, msg }) => {
                assert_eq!(line, 8);
                assert!(msg.contains("expected 2"), "{msg}");
            }
            other => panic!("expected a positioned error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_label_reports_line_number() {
        let text = "semiring\norder 2\nelements 0 1\nzero 0\none 1\nadd\n0 1\n1 q\nmul\n0 0\n0 1\n";
        match parse(text) {
            Err(ParseError::At { line, msg }) => {
                assert_eq!(line, 8);
                assert!(msg.contains("unknown element label"), "{msg}");
            }
            other => panic!("expected a positioned error, got {other:?}"),
        }
    }

    #[test]
    fn magma_with_generators_round_trips() {
        let text = "magma\norder 2\nelements e x\nzero e\ntable\ne e\ne x\ngenerators x\n";
        let m = match parse(text).unwrap() {
            Construct::Magma(m) => m,
            other => panic!("expected magma, got {}", other.kind()),
        };
        assert_eq!(m.generators, Some(vec![1]));
        assert_eq!(m.zero, Some(0));
        let again = parse(&render_magma(&m)).unwrap();
        match again {
            Construct::Magma(m2) => assert_eq!(m, m2),
            other => panic!("expected magma, got {}", other.kind()),
        }
    }

    #[test]
    fn group_identity_is_deduced() {
        let text = "group\norder 2\nelements e g\ntable\ne g\ng e\n";
        let g = match parse(text).unwrap() {
            Construct::Group(g) => g,
            other => panic!("expected group, got {}", other.kind()),
        };
        assert_eq!(g.identity, 0);
        let again = parse(&render_group(&g)).unwrap();
        assert_eq!(again.kind(), "group");
    }
}
