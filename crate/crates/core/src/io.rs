//! Plain-text edge lists and Graphviz export.
//!
//! Edge-list format: an `n m` header, then `m` lines `u v` with 0-based ids.
//! Lines starting with `#` are comments; `# label <name> <id>` names a
//! vertex. Blank lines are ignored.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph, Path};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListDocument {
    pub graph: Graph,
    pub labels: BTreeMap<String, usize>,
}

fn parse_pair(line: &str, lineno: usize, what: &str) -> Result<(usize, usize)> {
    let err = |msg: String| Error::Parse { line: lineno, msg };
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| err(format!("expected two integers in {what}")))?;
        tok.parse()
            .map_err(|_| err(format!("invalid integer '{tok}' in {what}")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(err(format!("trailing data in {what}")));
    }
    Ok(pair)
}

pub fn parse_document(text: &str) -> Result<EdgeListDocument> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut labels = BTreeMap::new();
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        last = lineno;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let parts: Vec<&str> = comment.split_whitespace().collect();
            if parts.first() == Some(&"label") {
                let [_, name, id] = parts[..] else {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "expected '# label <name> <id>'".into(),
                    });
                };
                let id = id.parse().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("invalid label id '{id}'"),
                })?;
                labels.insert(name.to_string(), id);
            }
            continue;
        }
        match header {
            None => header = Some(parse_pair(line, lineno, "header")?),
            Some((_, m)) => {
                if edges.len() == m {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("more than {m} edge lines"),
                    });
                }
                edges.push(parse_pair(line, lineno, "edge")?);
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(Error::Parse {
            line: last.max(1),
            msg: "missing 'n m' header".into(),
        });
    };
    if edges.len() != m {
        return Err(Error::Parse {
            line: last.max(1),
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    for (name, &id) in &labels {
        if id >= n {
            return Err(Error::InvalidParameter(format!(
                "label {name} refers to missing vertex {id}"
            )));
        }
    }
    let graph = build_graph(n, &edges)?;
    Ok(EdgeListDocument { graph, labels })
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    parse_document(text).map(|d| d.graph)
}

/// Canonical form: label comments sorted by name, header, then edges with
/// `u < v` in ascending order.
pub fn write_edge_list(g: &Graph, labels: &BTreeMap<String, usize>) -> String {
    let mut out = String::new();
    for (name, id) in labels {
        writeln!(out, "# label {name} {id}").unwrap();
    }
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_dot(g: &Graph, highlights: &[(Path, &str)]) -> Result<String> {
    write_dot_labeled(g, &BTreeMap::new(), highlights)
}

/// DOT text for `g`. Edges of highlighted paths are drawn thick in the given
/// colour; the first highlight covering an edge wins.
pub fn write_dot_labeled(
    g: &Graph,
    labels: &BTreeMap<String, usize>,
    highlights: &[(Path, &str)],
) -> Result<String> {
    let mut style: BTreeMap<(usize, usize), &str> = BTreeMap::new();
    for (p, color) in highlights {
        if !color.chars().all(|c| c.is_ascii_alphanumeric() || c == '#') {
            return Err(Error::InvalidParameter(format!("bad colour '{color}'")));
        }
        if let Some(&v) = p.vertices().iter().find(|&&v| v >= g.n()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        for w in p.vertices().windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::InvalidPath(format!(
                    "{} and {} are not adjacent",
                    w[0], w[1]
                )));
            }
            style
                .entry((w[0].min(w[1]), w[0].max(w[1])))
                .or_insert(color);
        }
    }
    let mut name = vec![None; g.n()];
    for (label, &id) in labels {
        if id < g.n() && name[id].is_none() {
            name[id] = Some(label.as_str());
        }
    }
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for (v, label) in name.iter().enumerate() {
        match label {
            Some(l) => writeln!(out, "  {v} [label=\"{l}\"];").unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        match style.get(&(u, v)) {
            Some(c) => writeln!(out, "  {u} -- {v} [color=\"{c}\", penwidth=3];").unwrap(),
            None => writeln!(out, "  {u} -- {v};").unwrap(),
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_fig1;

    #[test]
    fn parse_examples() {
        let k2 = parse_edge_list("2 1\n0 1\n").unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));
        assert_eq!(
            parse_edge_list("3 1\n0 1\n"),
            Err(Error::Disconnected { unreached: 2 })
        );
        assert!(matches!(
            parse_edge_list("2 1\n0 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("2 2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("2 1\n0 1\n1 0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("# nothing\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("1 0 5\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn fig1_round_trip() {
        let inst = gen_fig1();
        let text = write_edge_list(&inst.graph, &inst.labels);
        let doc = parse_document(&text).unwrap();
        assert_eq!(doc.graph, inst.graph);
        assert_eq!(doc.labels, inst.labels);
        assert_eq!(write_edge_list(&doc.graph, &doc.labels), text);
    }

    #[test]
    fn dot_output() {
        let k2 = parse_edge_list("2 1\n0 1\n").unwrap();
        let dot = write_dot(&k2, &[]).unwrap();
        assert_eq!(
            dot,
            "graph G {\n  node [shape=circle];\n  0;\n  1;\n  0 -- 1;\n}\n"
        );

        let inst = gen_fig1();
        let thick = inst.path("thick");
        let dot = write_dot(&inst.graph, &[(thick.clone(), "black")]).unwrap();
        let mut marked: Vec<(usize, usize)> = dot
            .lines()
            .filter(|l| l.contains("penwidth"))
            .map(|l| {
                let t: Vec<&str> = l.split_whitespace().collect();
                (t[0].parse().unwrap(), t[2].parse().unwrap())
            })
            .collect();
        marked.sort();
        let l = |s: &str| inst.label(s);
        let mut expected: Vec<_> = [
            ("x", "c"),
            ("c", "e"),
            ("e", "v5"),
            ("v5", "v6"),
            ("v6", "y"),
        ]
        .iter()
        .map(|&(a, b)| (l(a).min(l(b)), l(a).max(l(b))))
        .collect();
        expected.sort();
        assert_eq!(marked, expected);
        assert_eq!(dot, write_dot(&inst.graph, &[(thick, "black")]).unwrap());
        assert!(write_dot(&k2, &[(inst.path("mesp"), "red")]).is_err());
    }
}
