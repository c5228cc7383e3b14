use serde::{Deserialize, Serialize};

use super::graph::{Edge, Vertex, WeightedPlanarGraph};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphOp {
    Delete(u32),
    Contract(u32),
    AddFullTwists(u32),
}

pub fn transform(g: &WeightedPlanarGraph, op: GraphOp) -> Result<WeightedPlanarGraph> {
    match op {
        GraphOp::Delete(e) => delete_edge(g, e),
        GraphOp::Contract(e) => contract_edge(g, e),
        GraphOp::AddFullTwists(m) => Ok(add_full_twists(g, m)),
    }
}

pub fn delete_edge(g: &WeightedPlanarGraph, e: u32) -> Result<WeightedPlanarGraph> {
    g.edge(e)
        .ok_or_else(|| Error::Argument(format!("no edge with id {e}")))?;
    let edges: Vec<Edge> = g.edges.iter().filter(|x| x.id != e).cloned().collect();
    let vertices = g
        .vertices
        .iter()
        .map(|v| Vertex {
            id: v.id,
            rotation: v.rotation.iter().filter(|h| h.0 != e).copied().collect(),
        })
        .collect();
    WeightedPlanarGraph::new(vertices, edges)
}

/// Merges the endpoints of `e` into `ends[0]`, splicing the two rotations at `e`.
pub fn contract_edge(g: &WeightedPlanarGraph, e: u32) -> Result<WeightedPlanarGraph> {
    let edge = g
        .edge(e)
        .ok_or_else(|| Error::Argument(format!("no edge with id {e}")))?;
    let [u, w] = edge.ends;
    if u == w {
        return Err(Error::Argument(format!(
            "edge {e} is a self-loop and cannot be contracted"
        )));
    }
    let after = |vid: u32, end: u8| -> Vec<(u32, u8)> {
        let rot = &g.vertex(vid).unwrap().rotation;
        let pos = rot.iter().position(|&h| h == (e, end)).unwrap();
        (1..rot.len()).map(|k| rot[(pos + k) % rot.len()]).collect()
    };
    let mut merged = after(u, 0);
    merged.extend(after(w, 1));
    let vertices = g
        .vertices
        .iter()
        .filter(|v| v.id != w)
        .map(|v| Vertex {
            id: v.id,
            rotation: if v.id == u {
                merged.clone()
            } else {
                v.rotation.clone()
            },
        })
        .collect();
    let edges = g
        .edges
        .iter()
        .filter(|x| x.id != e)
        .map(|x| Edge {
            id: x.id,
            ends: x.ends.map(|v| if v == w { u } else { v }),
            weight: x.weight,
        })
        .collect();
    WeightedPlanarGraph::new(vertices, edges)
}

/// Adds `m` full twists to every positive twist region.
pub fn add_full_twists(g: &WeightedPlanarGraph, m: u32) -> WeightedPlanarGraph {
    g.map_weights(|w| if w > 0 { w + 2 * m as i64 } else { w })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphmodel::graph::validate;

    #[test]
    fn contract_negative_edge_of_pretzel() {
        let g = WeightedPlanarGraph::pretzel(&[-2, 7, 7, 7]);
        let c = contract_edge(&g, 0).unwrap();
        assert_eq!(c.num_vertices(), 1);
        assert_eq!(c.self_loops(), vec![1, 2, 3]);
        assert!(validate(&c).unwrap().planar);
        let d = delete_edge(&g, 0).unwrap();
        assert_eq!(d.num_edges(), 3);
        assert!(validate(&d).unwrap().two_connected);
    }

    #[test]
    fn self_loop_contraction_fails() {
        let g = WeightedPlanarGraph::pretzel(&[-2, 7, 7, 7]);
        let c = contract_edge(&g, 0).unwrap();
        assert!(contract_edge(&c, 1).is_err());
    }

    #[test]
    fn full_twists() {
        let g = WeightedPlanarGraph::pretzel(&[-2, 7, 7, 7]);
        assert_eq!(add_full_twists(&g, 0), g);
        let h = add_full_twists(&g, 3);
        assert_eq!(h.edge(1).unwrap().weight, 13);
        assert_eq!(h.edge(0).unwrap().weight, -2);
    }
}
