//! DOT (Graphviz) export. Render-only: documents are the source of truth,
//! DOT is never read back.

use std::fmt::Write as _;

use prime_labeling::{Graph, Labeling};

/// Renders the graph in DOT format. Node names are the labels when a
/// labeling is supplied, vertex ids otherwise; node statements come first,
/// then the edges in canonical (sorted) order.
pub fn export_dot(graph: &Graph, labeling: Option<&Labeling>) -> String {
    let name = |v: u32| -> u64 {
        match labeling {
            Some(l) => l.label(v),
            None => v as u64,
        }
    };
    let mut out = String::from("graph {\n");
    for v in 0..graph.vertex_count() {
        writeln!(out, "    {};", name(v)).unwrap();
    }
    for &(u, v) in graph.edges() {
        writeln!(out, "    {} -- {};", name(u), name(v)).unwrap();
    }
    out.push('}');
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use prime_labeling::graph::{cycle, star};
    use prime_labeling::{build_family, label_family, FamilyParams};

    #[test]
    fn star_has_five_nodes_and_four_edges() {
        let dot = export_dot(&star(4).unwrap(), None);
        assert_eq!(dot.lines().filter(|l| l.ends_with(';') && !l.contains("--")).count(), 5);
        assert_eq!(dot.lines().filter(|l| l.contains("--")).count(), 4);
        assert!(dot.starts_with("graph {"));
        assert!(dot.ends_with("}\n"));
    }

    #[test]
    fn labeled_triangle_uses_labels_as_names() {
        let g = cycle(3).unwrap();
        let dot = export_dot(&g, Some(&Labeling::new(vec![1, 2, 3])));
        assert!(dot.contains("    1 -- 2;"));
        assert!(dot.contains("    2 -- 3;"));
        assert!(dot.contains("    1 -- 3;"));
    }

    #[test]
    fn labeled_book_names_cover_one_through_order() {
        let inst = build_family(&FamilyParams::Book { n: 6, m: 3 }).unwrap();
        let labeling = label_family(&inst).unwrap();
        let dot = export_dot(inst.graph(), Some(&labeling));
        for label in 1..=21 {
            assert!(
                dot.contains(&format!("    {label};\n")),
                "missing node {label}"
            );
        }
    }
}
