use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::SubgroupLattice;
use crate::group::FiniteGroup;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LatticeEntry {
    pub index: usize,
    pub order: usize,
    pub generators: Vec<String>,
    pub members: Vec<usize>,
    pub normal: bool,
    pub conjugacy_class: usize,
}

/// JSON form of a subgroup lattice: member lists, covering edges and
/// normality flags.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LatticeDocument {
    pub format: String,
    pub group_order: usize,
    pub subgroups: Vec<LatticeEntry>,
    pub inclusion: Vec<(usize, usize)>,
    pub conjugacy_classes: Vec<Vec<usize>>,
}

impl SubgroupLattice {
    pub fn to_document(&self, g: &FiniteGroup) -> LatticeDocument {
        LatticeDocument {
            format: "lattice-v1".to_string(),
            group_order: g.order(),
            subgroups: self
                .subgroups
                .iter()
                .enumerate()
                .map(|(i, s)| LatticeEntry {
                    index: i,
                    order: s.order(),
                    generators: s.generators().iter().map(|&x| g.label(x).to_string()).collect(),
                    members: s.members().to_vec(),
                    normal: self.is_normal(i),
                    conjugacy_class: self.class_of(i),
                })
                .collect(),
            inclusion: self.covers.clone(),
            conjugacy_classes: self.conjugacy_classes.clone(),
        }
    }

    /// Graphviz source for the Hasse diagram of the covering relation, drawn
    /// bottom-up. Normal subgroups get a double border.
    pub fn to_dot(&self, g: &FiniteGroup) -> String {
        let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, s) in self.subgroups.iter().enumerate() {
            let label = if s.is_trivial() {
                "1".to_string()
            } else if s.order() == g.order() {
                "G".to_string()
            } else {
                s.describe(g)
            };
            let style = if self.is_normal(i) { ", peripheries=2" } else { "" };
            let _ = writeln!(
                out,
                "  s{i} [label=\"{} | {}\"{style}];",
                escape(&label),
                s.order()
            );
        }
        for &(i, j) in &self.covers {
            let _ = writeln!(out, "  s{i} -> s{j};");
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_has_one_node_per_subgroup_and_one_edge_per_cover() {
        let g = FiniteGroup::cyclic(6).unwrap();
        let lat = SubgroupLattice::build(&g).unwrap();
        let dot = lat.to_dot(&g);
        assert!(dot.starts_with("digraph lattice {"));
        assert_eq!(dot.matches(" [label=").count(), lat.len());
        assert_eq!(dot.matches(" -> ").count(), lat.covers().len());
    }

    #[test]
    fn document_flags_normality() {
        let g = FiniteGroup::from_generators(&[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        let lat = SubgroupLattice::build(&g).unwrap();
        let doc = lat.to_document(&g);
        let normal: Vec<bool> = doc.subgroups.iter().map(|s| s.normal).collect();
        assert_eq!(normal, vec![true, false, false, false, true, true]);
        let back: LatticeDocument =
            serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(back, doc);
    }
}
