//! Graph export formats: DOT, JSON, and plain edge lists.
//!
//! Output is deterministic: vertices ascend by element id, edges are
//! lexicographic in that order.

use starring_core::graph::Graph;

fn quoted(label: &str) -> String {
    if label.contains(char::is_whitespace) {
        format!("\"{label}\"")
    } else {
        label.to_string()
    }
}

/// One "u v" pair per line; isolated vertices carry no lines.
pub fn edgelist(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&quoted(&g.ring().label(u)));
        out.push(' ');
        out.push_str(&quoted(&g.ring().label(v)));
        out.push('\n');
    }
    out
}

pub fn dot(g: &Graph, name: &str) -> String {
    let ring = g.ring();
    let mut out = format!("graph \"{name}\" {{\n");
    for &v in g.vertices() {
        out.push_str(&format!("  \"{}\";\n", ring.label(v)));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!(
            "  \"{}\" -- \"{}\";\n",
            ring.label(u),
            ring.label(v)
        ));
    }
    out.push_str("}\n");
    out
}

pub fn json(g: &Graph, spec_text: &str) -> String {
    let ring = g.ring();
    let vertices: Vec<String> = g.vertices().iter().map(|&v| ring.label(v)).collect();
    let edges: Vec<[String; 2]> = g
        .edges()
        .map(|(u, v)| [ring.label(u), ring.label(v)])
        .collect();
    let value = serde_json::json!({
        "spec": spec_text,
        "kind": g.kind().to_string(),
        "vertices": vertices,
        "edges": edges,
    });
    let mut text = serde_json::to_string_pretty(&value).expect("graph export serializes");
    text.push('\n');
    text
}
