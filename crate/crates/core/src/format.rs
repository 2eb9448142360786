//! Line-based instance file format.
//!
//! ```text
//! # comment
//! GRAPH 3
//! ROT 0: 1 2
//! ROT 1: 2 0
//! ROT 2: 0 1
//! OUTER 1 0
//! LIST 0: 1
//! LIST 1: 2
//! LIST 2: 1 2 3
//! PATH 0 1
//! ```
//!
//! `ROT` lists original neighbors counterclockwise (a crossed edge is listed
//! as its far endpoint). `OUTER u v` names one dart of an outer face and may
//! repeat for disconnected graphs. `CROSS a b c d` says edge `ab` crosses
//! `cd`; at the crossing the edges appear in the order `a, c, b, d`. Missing
//! `ROT` or `LIST` lines mean an empty rotation or list. `NSET` takes any
//! number of vertices, `MSET u v` names one edge and may repeat.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::drawing::{planarize, DrawingError, DrawingSpec};
use crate::instance::{Instance, InstanceError};
use crate::lists::{Color, ColorSet, ListAssignment};
use crate::plane::{Vertex, Walk};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{}{message}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Semantic { line: Option<usize>, message: String },
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

fn numbers<T: std::str::FromStr>(line: usize, tokens: &[&str]) -> Result<Vec<T>, FormatError> {
    tokens
        .iter()
        .map(|t| t.parse::<T>().map_err(|_| syntax(line, format!("expected a non-negative integer, found `{t}`"))))
        .collect()
}

/// Splits `v: rest` into the vertex id and the remaining tokens.
fn keyed<'a>(line: usize, rest: &'a str) -> Result<(Vertex, Vec<&'a str>), FormatError> {
    let (head, tail) = rest.split_once(':').ok_or_else(|| syntax(line, "expected `<vertex>: ...`"))?;
    let v = head.trim().parse().map_err(|_| syntax(line, format!("expected a vertex id, found `{}`", head.trim())))?;
    Ok((v, tail.split_whitespace().collect()))
}

pub fn parse_instance(text: &str) -> Result<Instance, FormatError> {
    let mut n: Option<usize> = None;
    let mut rot: Vec<Option<Vec<Vertex>>> = Vec::new();
    let mut lists: Vec<Option<ColorSet>> = Vec::new();
    let mut outer = Vec::new();
    let mut crossings = Vec::new();
    let mut path: Option<(usize, Vec<Vertex>)> = None;
    let mut n_set = BTreeSet::new();
    let mut n_line = None;
    let mut m_set = BTreeSet::new();
    let mut m_line = None;
    let mut cross_line = None;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let (kw, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest = rest.trim();
        if kw != "GRAPH" && n.is_none() {
            return Err(syntax(line, "the first statement must be `GRAPH <n>`"));
        }
        let check_vertex = |v: Vertex| match n {
            Some(n) if v < n => Ok(v),
            _ => Err(syntax(line, format!("vertex {v} is out of range"))),
        };
        match kw {
            "GRAPH" => {
                if n.is_some() {
                    return Err(syntax(line, "duplicate GRAPH statement"));
                }
                let v: Vec<usize> = numbers(line, &rest.split_whitespace().collect::<Vec<_>>())?;
                let [count] = v[..] else { return Err(syntax(line, "expected `GRAPH <n>`")) };
                n = Some(count);
                rot = vec![None; count];
                lists = vec![None; count];
            }
            "ROT" => {
                let (v, toks) = keyed(line, rest)?;
                check_vertex(v)?;
                let nbrs: Vec<Vertex> = numbers(line, &toks)?;
                for &w in &nbrs {
                    check_vertex(w)?;
                }
                if rot[v].replace(nbrs).is_some() {
                    return Err(syntax(line, format!("duplicate ROT for vertex {v}")));
                }
            }
            "LIST" => {
                let (v, toks) = keyed(line, rest)?;
                check_vertex(v)?;
                let colors: Vec<Color> = numbers(line, &toks)?;
                if lists[v].replace(colors.into_iter().collect()).is_some() {
                    return Err(syntax(line, format!("duplicate LIST for vertex {v}")));
                }
            }
            "OUTER" => {
                let v: Vec<Vertex> = numbers(line, &rest.split_whitespace().collect::<Vec<_>>())?;
                let [a, b] = v[..] else { return Err(syntax(line, "expected `OUTER <u> <v>`")) };
                outer.push((check_vertex(a)?, check_vertex(b)?));
            }
            "CROSS" => {
                let v: Vec<Vertex> = numbers(line, &rest.split_whitespace().collect::<Vec<_>>())?;
                let [a, b, c, d] = v[..] else { return Err(syntax(line, "expected `CROSS <a> <b> <c> <d>`")) };
                for x in [a, b, c, d] {
                    check_vertex(x)?;
                }
                cross_line.get_or_insert(line);
                crossings.push(([a, b, c, d], line));
            }
            "PATH" => {
                if path.is_some() {
                    return Err(syntax(line, "duplicate PATH statement"));
                }
                let v: Vec<Vertex> = numbers(line, &rest.split_whitespace().collect::<Vec<_>>())?;
                for &x in &v {
                    check_vertex(x)?;
                }
                path = Some((line, v));
            }
            "NSET" => {
                let v: Vec<Vertex> = numbers(line, &rest.split_whitespace().collect::<Vec<_>>())?;
                for &x in &v {
                    check_vertex(x)?;
                }
                n_line.get_or_insert(line);
                n_set.extend(v);
            }
            "MSET" => {
                let v: Vec<Vertex> = numbers(line, &rest.split_whitespace().collect::<Vec<_>>())?;
                let [a, b] = v[..] else { return Err(syntax(line, "expected `MSET <u> <v>`")) };
                m_line.get_or_insert(line);
                m_set.insert((check_vertex(a)?, check_vertex(b)?));
            }
            other => return Err(syntax(line, format!("unknown statement `{other}`"))),
        }
    }
    if n.is_none() {
        return Err(syntax(1, "missing `GRAPH <n>` statement"));
    }

    let spec = DrawingSpec {
        rot: rot.into_iter().map(Option::unwrap_or_default).collect(),
        crossings: crossings.iter().map(|c| c.0).collect(),
        outer,
    };
    let drawing = planarize(&spec).map_err(|e| {
        let line = match &e {
            DrawingError::NotAnEdge(i, ..) | DrawingError::SelfCrossing(i) | DrawingError::SharedEndpoint(i, ..) => {
                Some(crossings[*i].1)
            }
            DrawingError::CrossedTwice(..) => cross_line,
            _ => None,
        };
        FormatError::Semantic { line, message: e.to_string() }
    })?;
    let lists = ListAssignment::new(lists.into_iter().map(Option::unwrap_or_default).collect());
    let (p_line, p) = path.map(|(l, p)| (Some(l), p)).unwrap_or((None, Vec::new()));
    Instance::new(drawing, Walk::path(p), n_set, m_set, lists).map_err(|e| {
        let line = match e {
            InstanceError::NVertex(_) => n_line,
            InstanceError::MEdge(..) => m_line,
            InstanceError::ListCount { .. } => None,
            _ => p_line,
        };
        FormatError::Semantic { line, message: e.to_string() }
    })
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Canonical text form. `parse_instance(&serialize_instance(x)) == x`.
pub fn serialize_instance(inst: &Instance) -> String {
    let spec = inst.drawing.unplanarize();
    let mut out = String::new();
    let n = inst.n();
    writeln!(out, "GRAPH {n}").unwrap();
    for (v, r) in spec.rot.iter().enumerate() {
        if r.is_empty() {
            writeln!(out, "ROT {v}:").unwrap();
        } else {
            writeln!(out, "ROT {v}: {}", join(r)).unwrap();
        }
    }
    for (u, v) in &spec.outer {
        writeln!(out, "OUTER {u} {v}").unwrap();
    }
    for c in &spec.crossings {
        writeln!(out, "CROSS {}", join(c)).unwrap();
    }
    for (v, l) in inst.lists.iter() {
        if !l.is_empty() {
            writeln!(out, "LIST {v}: {}", join(l)).unwrap();
        }
    }
    if !inst.p.vertices.is_empty() {
        writeln!(out, "PATH {}", join(&inst.p.vertices)).unwrap();
    }
    if !inst.n_set.is_empty() {
        writeln!(out, "NSET {}", join(&inst.n_set)).unwrap();
    }
    for (u, v) in &inst.m_set {
        writeln!(out, "MSET {u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE: &str = "GRAPH 3\nROT 0: 1 2\nROT 1: 2 0\nROT 2: 0 1\nOUTER 0 2\nLIST 0: 1\nLIST 1: 2\nLIST 2: 1 2 3\nPATH 0 1\n";

    #[test]
    fn triangle_round_trip() {
        let inst = parse_instance(TRIANGLE).unwrap();
        assert_eq!(serialize_instance(&inst), TRIANGLE);
        assert_eq!(parse_instance(&serialize_instance(&inst)).unwrap(), inst);
        // Any dart of the outer face is accepted; the canonical form names
        // the least one.
        let other = parse_instance(&TRIANGLE.replace("OUTER 0 2", "OUTER 1 0")).unwrap();
        assert_eq!(other, inst);
    }

    #[test]
    fn lists_are_deduplicated_and_comments_ignored() {
        let text = "# a triangle\nGRAPH 3\nROT 0: 1 2\nROT 1: 2 0  # trailing\nROT 2: 0 1\nOUTER 1 0\nLIST 2: 3 1 1 2\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.lists.get(2).iter().copied().collect::<Vec<_>>(), vec![1, 2, 3]);
        assert!(inst.lists.get(0).is_empty());
        assert!(serialize_instance(&inst).contains("LIST 2: 1 2 3\n"));
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let err = parse_instance("GRAPH 3\nROT 0: 1 x\n").unwrap_err();
        assert_eq!(err, FormatError::Syntax { line: 2, message: "expected a non-negative integer, found `x`".into() });
        let err = parse_instance("ROT 0: 1\n").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 1, .. }));
        let err = parse_instance("GRAPH 2\nROT 0: 5\n").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 2, .. }));
        let err = parse_instance("GRAPH 2\nFOO\n").unwrap_err();
        assert!(err.to_string().contains("unknown statement `FOO`"));
    }

    #[test]
    fn asymmetric_rotation_is_semantic() {
        let err = parse_instance("GRAPH 2\nROT 0: 1\nROT 1:\nOUTER 0 1\n").unwrap_err();
        assert!(matches!(err, FormatError::Semantic { .. }), "{err}");
    }

    #[test]
    fn crossed_path_edge_is_rejected_with_its_line() {
        // K4 drawn with the diagonals 0-2 and 1-3 crossing inside the square.
        let text = "GRAPH 4\nROT 0: 1 2 3\nROT 1: 2 3 0\nROT 2: 3 0 1\nROT 3: 0 1 2\nOUTER 1 0\nCROSS 0 2 1 3\nPATH 0 2\n";
        let err = parse_instance(text).unwrap_err();
        assert_eq!(err.to_string(), "line 8: no edge of the precolored path may be crossed, but 0-2 is");
        let ok = parse_instance(&text.replace("PATH 0 2", "PATH 0 1")).unwrap();
        assert_eq!(ok.drawing.crossing_count(), 1);
        assert_eq!(parse_instance(&serialize_instance(&ok)).unwrap(), ok);
    }
}
