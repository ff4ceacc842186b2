//! DOT exports: Hasse diagrams of lattices and specialization preorders of
//! finite spaces.

use crate::lattice::Lattice;
use crate::topology::FiniteTopology;
use std::fmt::Write;

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram: one edge per cover, bottom ranked lowest.
pub fn lattice_hasse(l: &Lattice) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=\"BT\";\n  node [shape=plaintext];\n");
    for label in l.labels() {
        let _ = writeln!(out, "  \"{}\";", escape(label));
    }
    for (a, b) in l.covers() {
        let _ = writeln!(out, "  \"{}\" -> \"{}\";", escape(l.label(a)), escape(l.label(b)));
    }
    out.push_str("}\n");
    out
}

/// Specialization preorder: an edge `p -> q` when `q` lies in the minimal
/// open of `p` (and `p != q`), transitively reduced.
pub fn specialization(t: &FiniteTopology, labels: &[String]) -> String {
    let m = t.len();
    let mut out =
        String::from("digraph specialization {\n  rankdir=\"BT\";\n  node [shape=plaintext];\n");
    for label in labels.iter().take(m) {
        let _ = writeln!(out, "  \"{}\";", escape(label));
    }
    for p in 0..m {
        for q in t.min_open(p).ones() {
            if q == p {
                continue;
            }
            // drop the edge when a strictly intermediate r witnesses it
            let redundant = t.min_open(p).ones().any(|r| {
                r != p
                    && r != q
                    && t.min_open(r).contains(q)
                    && t.min_open(r) != t.min_open(p)
                    && t.min_open(r) != t.min_open(q)
            });
            if !redundant {
                let _ = writeln!(
                    out,
                    "  \"{}\" -> \"{}\";",
                    escape(&labels[p]),
                    escape(&labels[q])
                );
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::spectrum::{Orientation, SpectrumContext};
    use crate::Caps;

    #[test]
    fn hasse_of_a_chain() {
        let l = gen::chain(3, &Caps::default()).unwrap();
        let dot = lattice_hasse(&l);
        assert!(dot.contains("\"c0\" -> \"c1\""));
        assert!(dot.contains("\"c1\" -> \"c2\""));
        assert!(!dot.contains("\"c0\" -> \"c2\""), "transitive edge leaked");
    }

    #[test]
    fn specialization_of_a_chain_context() {
        let l = gen::chain(4, &Caps::default()).unwrap();
        let ctx = SpectrumContext::new(l, vec![1, 2], Orientation::Primal).unwrap();
        let t = FiniteTopology::classical_zariski(&ctx);
        let labels: Vec<String> = ctx
            .points()
            .iter()
            .map(|&p| ctx.lattice().label(p).to_string())
            .collect();
        let dot = specialization(&t, &labels);
        // c2's minimal open contains c1
        assert!(dot.contains("\"c2\" -> \"c1\""));
    }
}
