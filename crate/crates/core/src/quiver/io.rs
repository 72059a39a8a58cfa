//! JSON and DOT serialization. Both sort vertices and arrows by id in
//! natural order so output bytes do not depend on construction order.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{natural_cmp, Arrow, Quiver, Vertex};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverJson {
    pub vertices: Vec<Vertex>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn to_json(&self) -> QuiverJson {
        let mut vertices = self.vertices().to_vec();
        vertices.sort_by(|a, b| natural_cmp(&a.id, &b.id));
        let mut arrows = self.arrows().to_vec();
        arrows.sort_by(|a, b| natural_cmp(&a.id, &b.id));
        QuiverJson { vertices, arrows }
    }

    pub fn from_json(j: &QuiverJson) -> Result<Quiver> {
        Quiver::new(j.vertices.clone(), j.arrows.clone())
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("quiver json") + "\n"
    }

    pub fn from_json_str(s: &str) -> Result<Quiver> {
        Quiver::from_json(&serde_json::from_str(s)?)
    }

    pub fn to_dot(&self) -> String {
        let j = self.to_json();
        let mut out = String::from("digraph {\n");
        for v in &j.vertices {
            writeln!(out, "  {} [label={}];", quote(&v.id), quote(&v.label)).unwrap();
        }
        for a in &j.arrows {
            writeln!(out, "  {} -> {} [label={}];", quote(&a.src), quote(&a.dst), quote(&a.label)).unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::gen::{almost_tree, debruijn};
    use crate::quiver::Orientation;

    #[test]
    fn json_round_trip_and_order() {
        let d = debruijn(&["0", "1"], 2);
        let back = Quiver::from_json_str(&d.to_json_string()).unwrap();
        assert_eq!(back.to_json(), d.to_json());
        let ids: Vec<_> = Quiver::from_labels(vec!["v10".into(), "v9".into()], vec![]).to_json().vertices;
        assert_eq!(ids[0].id, "v9");
    }

    #[test]
    fn dot_output() {
        assert_eq!(Quiver::default().to_dot(), "digraph {\n}\n");
        let t = almost_tree(2, 1, Orientation::Forward).unwrap();
        assert_eq!(
            t.to_dot(),
            "digraph {\n  \"0\" [label=\"0\"];\n  \"1\" [label=\"1\"];\n  \"0\" -> \"0\" [label=\"0\"];\n  \"1\" -> \"0\" [label=\"1\"];\n}\n"
        );
    }
}
