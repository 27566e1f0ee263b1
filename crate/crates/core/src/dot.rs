//! Minimal Graphviz DOT writer.

use std::fmt::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Kind {
    Undirected,
    Directed,
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// `nodes` are `(id, label)` pairs; `edges` refer to node ids.
pub(crate) fn render(
    kind: Kind,
    name: &str,
    nodes: &[(String, String)],
    edges: &[(String, String)],
) -> String {
    let (keyword, arrow) = match kind {
        Kind::Undirected => ("graph", "--"),
        Kind::Directed => ("digraph", "->"),
    };
    let mut out = format!("{keyword} {name} {{\n");
    for (id, label) in nodes {
        if id == label {
            writeln!(out, "  {};", quote(id)).unwrap();
        } else {
            writeln!(out, "  {} [label={}];", quote(id), quote(label)).unwrap();
        }
    }
    for (a, b) in edges {
        writeln!(out, "  {} {arrow} {};", quote(a), quote(b)).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_labels_and_arrows() {
        let nodes = vec![("a".to_string(), "A \"x\"".to_string()), ("b".into(), "b".into())];
        let edges = vec![("a".to_string(), "b".to_string())];
        let out = render(Kind::Directed, "D", &nodes, &edges);
        assert_eq!(
            out,
            "digraph D {\n  \"a\" [label=\"A \\\"x\\\"\"];\n  \"b\";\n  \"a\" -> \"b\";\n}\n"
        );
    }
}
