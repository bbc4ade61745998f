//! Plain-text poset files.
//!
//! ```text
//! # comment
//! elements: 0 a b c d 1
//! covers: 0<a 0<b a<c a<d b<c b<d c<1 d<1
//! complement: 0:1 1:0 a:a' ...
//! ```
//!
//! Each non-blank line is `section: tokens`. Sections may repeat, in which
//! case their tokens are appended. `complement` is optional and lists the
//! image of every element. Optional `bottom:` and `top:` lines are checked
//! against the detected bounds. Any other section is an error.

use std::fmt::Write as _;

use thiserror::Error;

use crate::complement::{ComplementError, ComplementedPoset, Structure};
use crate::poset::{Poset, PosetError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("missing `elements:` section")]
    MissingElements,
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Complement(#[from] ComplementError),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(s: &str, offset: usize) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices() {
        if ch.is_whitespace() {
            if let Some(b) = start.take() {
                out.push((offset + s[..b].chars().count() + 1, &s[b..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(b) = start {
        out.push((offset + s[..b].chars().count() + 1, &s[b..]));
    }
    out.into_iter()
}

pub fn parse(src: &str) -> Result<Structure, FormatError> {
    let mut elements: Vec<String> = Vec::new();
    let mut covers: Vec<(String, String)> = Vec::new();
    let mut complement: Option<Vec<(String, String)>> = None;
    let mut bottom = None;
    let mut top = None;
    let mut saw_elements = false;

    for (ln, raw) in src.lines().enumerate() {
        let line_no = ln + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let Some(colon) = line.find(':') else {
            return Err(syntax(line_no, 1, "expected `section: ...`"));
        };
        let section = line[..colon].trim();
        let rest = &line[colon + 1..];
        let offset = line[..colon + 1].chars().count();
        match section {
            "elements" => {
                saw_elements = true;
                for (col, tok) in tokens(rest, offset) {
                    if tok.contains('<') || tok.contains(':') {
                        return Err(syntax(
                            line_no,
                            col,
                            format!("label `{tok}` may not contain `<` or `:`"),
                        ));
                    }
                    elements.push(tok.to_string());
                }
            }
            "covers" => {
                for (col, tok) in tokens(rest, offset) {
                    let Some((lo, hi)) = tok.split_once('<') else {
                        return Err(syntax(
                            line_no,
                            col,
                            format!("expected `lower<upper`, found `{tok}`"),
                        ));
                    };
                    if lo.is_empty() || hi.is_empty() || hi.contains('<') {
                        return Err(syntax(line_no, col, format!("malformed cover `{tok}`")));
                    }
                    covers.push((lo.to_string(), hi.to_string()));
                }
            }
            "complement" => {
                let pairs = complement.get_or_insert_with(Vec::new);
                for (col, tok) in tokens(rest, offset) {
                    let Some((x, y)) = tok.split_once(':') else {
                        return Err(syntax(
                            line_no,
                            col,
                            format!("expected `x:y`, found `{tok}`"),
                        ));
                    };
                    if x.is_empty() || y.is_empty() {
                        return Err(syntax(
                            line_no,
                            col,
                            format!("malformed complement pair `{tok}`"),
                        ));
                    }
                    pairs.push((x.to_string(), y.to_string()));
                }
            }
            "bottom" | "top" => {
                let toks: Vec<_> = tokens(rest, offset).collect();
                let [(_, label)] = toks.as_slice() else {
                    return Err(syntax(
                        line_no,
                        offset + 1,
                        format!("`{section}` takes exactly one label"),
                    ));
                };
                if section == "bottom" {
                    bottom = Some(label.to_string());
                } else {
                    top = Some(label.to_string());
                }
            }
            other => {
                let col = line
                    .find(other)
                    .map_or(1, |b| line[..b].chars().count() + 1);
                return Err(syntax(line_no, col, format!("unknown section `{other}`")));
            }
        }
    }
    if !saw_elements {
        return Err(FormatError::MissingElements);
    }
    let poset = Poset::from_covers(&elements, &covers)?;
    poset.check_declared_bounds(bottom.as_deref(), top.as_deref())?;
    Ok(match complement {
        None => Structure::Plain(poset),
        Some(pairs) => Structure::Complemented(ComplementedPoset::attach(poset, &pairs)?),
    })
}

/// Canonical text: elements in index order, Hasse covers, complement map.
pub fn render(s: &Structure) -> String {
    let p = s.poset();
    let mut out = String::new();
    let _ = writeln!(out, "elements: {}", p.names().join(" "));
    let covers: Vec<String> = p
        .covers()
        .into_iter()
        .map(|(x, y)| format!("{}<{}", p.label(x), p.label(y)))
        .collect();
    let _ = writeln!(out, "covers: {}", covers.join(" "));
    if let Some(cp) = s.complemented() {
        let pairs: Vec<String> = (0..p.len())
            .map(|x| format!("{}:{}", p.label(x), p.label(cp.comp(x))))
            .collect();
        let _ = writeln!(out, "complement: {}", pairs.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_p6() {
        let s = parse("elements: 0 a b c d 1\ncovers: 0<a 0<b a<c a<d b<c b<d c<1 d<1\n").unwrap();
        assert!(s.complemented().is_none());
        assert_eq!(s.poset().len(), 6);
        assert_eq!(s.poset().top(), Some(5));
    }

    #[test]
    fn repeated_sections_append_and_comments_are_skipped() {
        let s = parse("# two-chain\nelements: 0\nelements: 1 # top\ncovers: 0<1\ncomplement: 0:1\ncomplement: 1:0\n")
            .unwrap();
        assert_eq!(s.poset().names(), ["0", "1"]);
        assert!(s.complemented().is_some());
    }

    #[test]
    fn unknown_section_is_rejected_with_position() {
        let err = parse("elements: 0 1\n  colors: red\n").unwrap_err();
        assert_eq!(
            err,
            FormatError::Syntax {
                line: 2,
                column: 3,
                message: "unknown section `colors`".into()
            }
        );
    }

    #[test]
    fn malformed_tokens() {
        assert!(matches!(
            parse("elements: 0 1\ncovers: 0<1 1").unwrap_err(),
            FormatError::Syntax {
                line: 2,
                column: 13,
                ..
            }
        ));
        assert!(matches!(
            parse("elements: 0 1\ncovers: 0<1<2").unwrap_err(),
            FormatError::Syntax { line: 2, .. }
        ));
        assert!(matches!(
            parse("covers: 0<1").unwrap_err(),
            FormatError::MissingElements
        ));
        assert!(matches!(
            parse("elements: 0 1\ncovers: 1<0 0<1").unwrap_err(),
            FormatError::Poset(PosetError::Cycle(..))
        ));
        assert!(matches!(
            parse("elements: 0 1\ncovers: 0<1\ntop: 0").unwrap_err(),
            FormatError::Poset(PosetError::BoundMismatch { .. })
        ));
    }

    #[test]
    fn render_reparses() {
        let src = "elements: 0 a b 1\ncovers: 0<a 0<b a<1 b<1\ncomplement: 0:1 a:b b:a 1:0\n";
        let s = parse(src).unwrap();
        assert_eq!(render(&s), src);
        assert_eq!(parse(&render(&s)).unwrap(), s);
    }
}
