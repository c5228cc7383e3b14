use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Half-edge reference: (edge id, end index 0 or 1).
pub type HalfEdge = (u32, u8);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: u32,
    /// Counterclockwise cyclic order of incident half-edges.
    pub rotation: Vec<HalfEdge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: u32,
    pub ends: [u32; 2],
    pub weight: i64,
}

/// Integer-weighted graph with a rotation system describing its embedding in the sphere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedPlanarGraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

impl WeightedPlanarGraph {
    /// Sorts records by id and checks that the rotation system pairs every half-edge once.
    pub fn new(mut vertices: Vec<Vertex>, mut edges: Vec<Edge>) -> Result<Self> {
        vertices.sort_by_key(|v| v.id);
        edges.sort_by_key(|e| e.id);
        let g = WeightedPlanarGraph { vertices, edges };
        g.check_structure()?;
        Ok(g)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: WeightedPlanarGraph = serde_json::from_str(s)?;
        Self::new(raw.vertices, raw.edges)
    }

    pub fn from_json_file(path: &Path) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serializes")
    }

    /// Two vertices joined by parallel edges with the given weights, in fan order.
    pub fn pretzel(weights: &[i64]) -> Self {
        let k = weights.len() as u32;
        let edges = weights
            .iter()
            .enumerate()
            .map(|(i, &w)| Edge {
                id: i as u32,
                ends: [0, 1],
                weight: w,
            })
            .collect();
        let vertices = vec![
            Vertex {
                id: 0,
                rotation: (0..k).map(|e| (e, 0)).collect(),
            },
            Vertex {
                id: 1,
                rotation: (0..k).rev().map(|e| (e, 1)).collect(),
            },
        ];
        WeightedPlanarGraph { vertices, edges }
    }

    fn check_structure(&self) -> Result<()> {
        let mut seen_v = BTreeSet::new();
        for v in &self.vertices {
            if !seen_v.insert(v.id) {
                return Err(Error::Structural(format!("duplicate vertex id {}", v.id)));
            }
        }
        let mut seen_e = BTreeSet::new();
        for e in &self.edges {
            if !seen_e.insert(e.id) {
                return Err(Error::Structural(format!("duplicate edge id {}", e.id)));
            }
            for end in e.ends {
                if !seen_v.contains(&end) {
                    return Err(Error::Structural(format!(
                        "edge {} references unknown vertex {end}",
                        e.id
                    )));
                }
            }
        }
        let mut placed: HashMap<HalfEdge, u32> = HashMap::new();
        for v in &self.vertices {
            for &(eid, end) in &v.rotation {
                let e = self.edge(eid).ok_or_else(|| {
                    Error::Structural(format!("vertex {} rotation names unknown edge {eid}", v.id))
                })?;
                if end > 1 {
                    return Err(Error::Structural(format!(
                        "edge end index {end} is not 0 or 1"
                    )));
                }
                if e.ends[end as usize] != v.id {
                    return Err(Error::Structural(format!(
                        "half-edge ({eid},{end}) listed at vertex {} but edge end is vertex {}",
                        v.id, e.ends[end as usize]
                    )));
                }
                if placed.insert((eid, end), v.id).is_some() {
                    return Err(Error::Structural(format!(
                        "half-edge ({eid},{end}) appears twice in rotations"
                    )));
                }
            }
        }
        if placed.len() != 2 * self.edges.len() {
            return Err(Error::Structural(
                "some half-edges are missing from the rotation system".into(),
            ));
        }
        Ok(())
    }

    pub fn edge(&self, id: u32) -> Option<&Edge> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .ok()
            .map(|i| &self.edges[i])
    }

    pub fn vertex(&self, id: u32) -> Option<&Vertex> {
        self.vertices
            .binary_search_by_key(&id, |v| v.id)
            .ok()
            .map(|i| &self.vertices[i])
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn negative_edges(&self) -> Vec<u32> {
        self.edges
            .iter()
            .filter(|e| e.weight < 0)
            .map(|e| e.id)
            .collect()
    }

    pub fn self_loops(&self) -> Vec<u32> {
        self.edges
            .iter()
            .filter(|e| e.ends[0] == e.ends[1])
            .map(|e| e.id)
            .collect()
    }

    /// Faces of the embedding, each as a cyclic list of half-edges (the dart leaving along it).
    pub fn faces(&self) -> Vec<Vec<HalfEdge>> {
        let mut next_in_rotation: HashMap<HalfEdge, HalfEdge> = HashMap::new();
        for v in &self.vertices {
            let k = v.rotation.len();
            for i in 0..k {
                next_in_rotation.insert(v.rotation[i], v.rotation[(i + 1) % k]);
            }
        }
        let mut seen: BTreeSet<HalfEdge> = BTreeSet::new();
        let mut faces = Vec::new();
        for e in &self.edges {
            for end in 0..2u8 {
                let start = (e.id, end);
                if seen.contains(&start) {
                    continue;
                }
                let mut face = Vec::new();
                let mut d = start;
                loop {
                    seen.insert(d);
                    face.push(d);
                    let rev = (d.0, 1 - d.1);
                    d = next_in_rotation[&rev];
                    if d == start {
                        break;
                    }
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Face count of the embedding, counting one face for each edgeless component.
    pub fn num_faces(&self) -> usize {
        let isolated = self
            .vertices
            .iter()
            .filter(|v| v.rotation.is_empty())
            .count();
        self.faces().len() + isolated
    }

    pub fn adjacency(&self) -> BTreeMap<u32, Vec<(u32, u32)>> {
        let mut adj: BTreeMap<u32, Vec<(u32, u32)>> =
            self.vertices.iter().map(|v| (v.id, Vec::new())).collect();
        for e in &self.edges {
            adj.get_mut(&e.ends[0]).unwrap().push((e.ends[1], e.id));
            if e.ends[0] != e.ends[1] {
                adj.get_mut(&e.ends[1]).unwrap().push((e.ends[0], e.id));
            }
        }
        adj
    }

    /// Connected components as sets of vertex ids, skipping `removed_vertex`.
    pub fn components_without(&self, removed_vertex: Option<u32>) -> Vec<BTreeSet<u32>> {
        let adj = self.adjacency();
        let mut seen = BTreeSet::new();
        let mut comps = Vec::new();
        for v in &self.vertices {
            if Some(v.id) == removed_vertex || seen.contains(&v.id) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([v.id]);
            seen.insert(v.id);
            while let Some(x) = queue.pop_front() {
                comp.insert(x);
                for &(y, _) in &adj[&x] {
                    if Some(y) != removed_vertex && seen.insert(y) {
                        queue.push_back(y);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components_without(None).len() <= 1
    }

    pub fn cut_vertices(&self) -> Vec<u32> {
        let base = self.components_without(None).len();
        self.vertices
            .iter()
            .filter(|v| self.components_without(Some(v.id)).len() > base)
            .map(|v| v.id)
            .collect()
    }

    /// Connected with at least two vertices and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        self.vertices.len() >= 2 && self.is_connected() && self.cut_vertices().is_empty()
    }

    /// Negative-edge components: connected components of the subgraph of negative edges.
    pub fn negative_components(&self) -> Vec<Vec<u32>> {
        let neg: Vec<&Edge> = self.edges.iter().filter(|e| e.weight < 0).collect();
        let mut parent: Vec<usize> = (0..neg.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for i in 0..neg.len() {
            for j in 0..i {
                let shared = neg[i].ends.iter().any(|v| neg[j].ends.contains(v));
                if shared {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for (i, e) in neg.iter().enumerate() {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(e.id);
        }
        let mut out: Vec<Vec<u32>> = groups.into_values().collect();
        out.sort();
        out
    }

    pub fn map_weights(&self, f: impl Fn(i64) -> i64) -> Self {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.weight = f(e.weight);
        }
        g
    }

    /// Replaces the weights in edge order.
    pub fn map_weights_by_id(&self, weights: &[i64]) -> Self {
        let mut g = self.clone();
        for (e, &w) in g.edges.iter_mut().zip(weights) {
            e.weight = w;
        }
        g
    }

    pub fn total_crossings(&self) -> u64 {
        self.edges.iter().map(|e| e.weight.unsigned_abs()).sum()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub connected: bool,
    /// V - E + F = 2 for the embedding.
    pub planar: bool,
    pub two_connected: bool,
    pub cut_vertices: Vec<u32>,
    pub self_loops: Vec<u32>,
    pub zero_weight_edges: Vec<u32>,
    pub negative_edges: Vec<u32>,
    /// Each component of the negative-edge subgraph is a single edge.
    pub negative_components_single: bool,
}

pub fn validate(g: &WeightedPlanarGraph) -> Result<ValidationReport> {
    g.check_structure()?;
    let faces = g.num_faces();
    let connected = g.is_connected();
    let euler = g.vertices.len() as i64 - g.edges.len() as i64 + faces as i64;
    Ok(ValidationReport {
        vertices: g.num_vertices(),
        edges: g.num_edges(),
        faces,
        connected,
        planar: connected && euler == 2,
        two_connected: g.is_two_connected(),
        cut_vertices: g.cut_vertices(),
        self_loops: g.self_loops(),
        zero_weight_edges: g
            .edges
            .iter()
            .filter(|e| e.weight == 0)
            .map(|e| e.id)
            .collect(),
        negative_edges: g.negative_edges(),
        negative_components_single: g.negative_components().iter().all(|c| c.len() == 1),
    })
}
