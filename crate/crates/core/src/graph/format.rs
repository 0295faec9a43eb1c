//! Plain-text digraph files.
//!
//! ```text
//! # optional comment lines
//! n m
//! u v      (m lines, 0-indexed)
//! ```
//!
//! Comment lines start with `#` and may appear anywhere; they are kept and
//! written back at the top of the file. Blank lines are ignored.

use std::fmt::Write as _;

use super::{Digraph, GraphError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigraphFile {
    /// Comment lines without the leading `#` and one optional space.
    pub comments: Vec<String>,
    pub digraph: Digraph,
}

impl DigraphFile {
    pub fn new(digraph: Digraph) -> Self {
        DigraphFile {
            comments: Vec::new(),
            digraph,
        }
    }

    pub fn with_comment(mut self, line: impl Into<String>) -> Self {
        self.comments.push(line.into());
        self
    }
}

pub fn parse_digraph(text: &str) -> Result<DigraphFile, GraphError> {
    let mut comments = Vec::new();
    let mut header: Option<(usize, usize)> = None;
    let mut arcs: Vec<(Vertex, Vertex)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix('#') {
            comments.push(rest.strip_prefix(' ').unwrap_or(rest).to_string());
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let fields = parse_pair(line, line_no)?;
        if header.is_none() {
            header = Some(fields);
        } else {
            arcs.push(fields);
        }
    }
    let (n, m) = header.ok_or(GraphError::Parse {
        line: 0,
        message: "missing `n m` header".into(),
    })?;
    if arcs.len() != m {
        return Err(GraphError::Parse {
            line: 1,
            message: format!("header announces {m} arcs, found {}", arcs.len()),
        });
    }
    let mut digraph = Digraph::empty(n);
    for (u, v) in arcs {
        if !digraph.add_arc(u, v)? {
            return Err(GraphError::DuplicateArc(u, v));
        }
    }
    Ok(DigraphFile { comments, digraph })
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize), GraphError> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| GraphError::Parse {
            line: line_no,
            message: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| GraphError::Parse {
            line: line_no,
            message: format!("not a non-negative integer: {tok:?}"),
        })
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(GraphError::Parse {
            line: line_no,
            message: "trailing tokens".into(),
        });
    }
    Ok((a, b))
}

pub fn write_digraph(file: &DigraphFile) -> String {
    let mut out = String::new();
    for c in &file.comments {
        if c.is_empty() {
            out.push_str("#\n");
        } else {
            let _ = writeln!(out, "# {c}");
        }
    }
    let d = &file.digraph;
    let _ = writeln!(out, "{} {}", d.n(), d.arc_count());
    for (u, v) in d.arcs() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let f = parse_digraph("# hello\n3 2\n0 1\n# mid\n1 2\n").unwrap();
        assert_eq!(f.comments, vec!["hello", "mid"]);
        assert_eq!(f.digraph.arc_count(), 2);
    }

    #[test]
    fn rejects_duplicates_and_bad_counts() {
        assert_eq!(
            parse_digraph("2 2\n0 1\n0 1\n").unwrap_err(),
            GraphError::DuplicateArc(0, 1)
        );
        assert!(matches!(
            parse_digraph("2 2\n0 1\n"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            parse_digraph("2 1\n0 x\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert_eq!(parse_digraph("2 1\n1 1\n").unwrap_err(), GraphError::SelfLoop(1));
    }

    #[test]
    fn writes_sorted_arcs() {
        let d = Digraph::from_arcs(3, [(2, 0), (0, 1)]).unwrap();
        let text = write_digraph(&DigraphFile::new(d).with_comment("x"));
        assert_eq!(text, "# x\n3 2\n0 1\n2 0\n");
        assert_eq!(write_digraph(&parse_digraph(&text).unwrap()), text);
    }
}
