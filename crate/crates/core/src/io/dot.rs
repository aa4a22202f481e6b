use std::fmt::Write as _;

use crate::coloring::Coloring;
use crate::graph::Graph;

/// Fill colors, indexed by `(color - 1) % 12`.
pub const FILL_PALETTE: [&str; 12] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5", "#d9d9d9",
    "#bc80bd", "#ccebc5", "#ffed6f",
];

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Undirected DOT text. With a coloring, nodes are filled and labeled
/// `v:color`; role labels become tooltips.
pub fn export_dot(g: &Graph, c: Option<&Coloring>) -> String {
    let mut out = String::from("graph G {\n");
    if c.is_some() {
        out.push_str("  node [style=filled];\n");
    }
    for v in g.vertices() {
        let mut attrs = Vec::new();
        match c {
            Some(c) => {
                let color = c.color(v);
                attrs.push(format!("label=\"{v}:{color}\""));
                let fill = FILL_PALETTE[(color as usize + FILL_PALETTE.len() - 1) % FILL_PALETTE.len()];
                attrs.push(format!("fillcolor=\"{fill}\""));
            }
            None => attrs.push(format!("label=\"{v}\"")),
        }
        if let Some(role) = g.label(v) {
            attrs.push(format!("tooltip=\"{}\"", escape(role)));
        }
        writeln!(out, "  {v} [{}];", attrs.join(", ")).unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn plain_path() {
        let dot = export_dot(&Graph::path(3), None);
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("0 -- 1;"));
        assert!(dot.contains("1 -- 2;"));
        assert!(!dot.contains("->"));
    }

    #[test]
    fn fills_cycle() {
        let c = Coloring::rainbow(14);
        let dot = export_dot(&Graph::path(14), Some(&c));
        assert!(dot.contains("label=\"13:14\""));
        let fills: HashSet<&str> = dot
            .lines()
            .filter_map(|l| l.split("fillcolor=\"").nth(1))
            .map(|s| &s[..7])
            .collect();
        assert_eq!(fills.len(), 12);
        assert!(dot.contains(&format!("12 [label=\"12:13\", fillcolor=\"{}\"]", FILL_PALETTE[0])));
    }
}
