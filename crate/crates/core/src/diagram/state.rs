use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::pd::{LinkDiagram, Topology};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Smoothing {
    A,
    B,
}

/// A choice of smoothing at every crossing, indexed like the diagram's crossings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KauffmanState {
    pub choice: Vec<Smoothing>,
}

impl KauffmanState {
    pub fn all(n: usize, s: Smoothing) -> Self {
        KauffmanState { choice: vec![s; n] }
    }

    pub fn from_bits(n: usize, bits: u64) -> Self {
        KauffmanState {
            choice: (0..n)
                .map(|i| {
                    if bits >> i & 1 == 1 {
                        Smoothing::B
                    } else {
                        Smoothing::A
                    }
                })
                .collect(),
        }
    }

    pub fn count(&self, s: Smoothing) -> usize {
        self.choice.iter().filter(|&&c| c == s).count()
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    /// Returns false when already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Slot pairs joined by each smoothing.
pub(crate) fn smoothing_pairs(s: Smoothing) -> [(usize, usize); 2] {
    match s {
        Smoothing::A => [(0, 1), (2, 3)],
        Smoothing::B => [(0, 3), (1, 2)],
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StateGraphSummary {
    pub circles: usize,
    /// One edge per crossing, between circle ids.
    pub edges: Vec<(usize, usize)>,
    pub reduced_edges: usize,
    pub components: usize,
    /// First Betti number of the reduced graph, `e' - v + k`.
    pub betti1: i64,
    /// Crossings whose segment joins a circle to itself.
    pub one_edged_loops: Vec<usize>,
    /// Circle id of each arc label.
    pub arc_circle: BTreeMap<u32, usize>,
}

impl StateGraphSummary {
    pub fn reduced_edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect()
    }

    /// Edges incident to a circle.
    pub fn degree(&self, circle: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == circle) + usize::from(b == circle))
            .sum()
    }

    pub fn loops_at(&self, circle: usize) -> Vec<usize> {
        self.one_edged_loops
            .iter()
            .copied()
            .filter(|&x| self.edges[x].0 == circle)
            .collect()
    }
}

/// Smooths every crossing per `state` and summarizes the resulting state graph.
pub fn resolve(d: &LinkDiagram, state: &KauffmanState) -> StateGraphSummary {
    assert_eq!(state.choice.len(), d.num_crossings(), "state must be total");
    let topo = d.topo();
    resolve_topology(&topo, d.free_loops() as usize, state)
}

pub(crate) fn resolve_topology(
    topo: &Topology,
    free_loops: usize,
    state: &KauffmanState,
) -> StateGraphSummary {
    let n_arcs = topo.num_arcs();
    let mut uf = UnionFind::new(n_arcs);
    for (x, &s) in state.choice.iter().enumerate() {
        for (p, q) in smoothing_pairs(s) {
            uf.union(topo.slot_arc[x][p], topo.slot_arc[x][q]);
        }
    }
    let mut circle_of_root: BTreeMap<usize, usize> = BTreeMap::new();
    let mut arc_circle = BTreeMap::new();
    for a in 0..n_arcs {
        let r = uf.find(a);
        let next = circle_of_root.len();
        let c = *circle_of_root.entry(r).or_insert(next);
        arc_circle.insert(topo.labels[a], c);
    }
    let circles = circle_of_root.len() + free_loops;
    let mut edges = Vec::with_capacity(state.choice.len());
    let mut one_edged_loops = Vec::new();
    for x in 0..state.choice.len() {
        let a = circle_of_root[&uf.find(topo.slot_arc[x][0])];
        let b = circle_of_root[&uf.find(topo.slot_arc[x][2])];
        if a == b {
            one_edged_loops.push(x);
        }
        edges.push((a, b));
    }
    let reduced: BTreeSet<(usize, usize)> =
        edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    let mut guf = UnionFind::new(circles);
    let mut components = circles;
    for &(a, b) in &reduced {
        if guf.union(a, b) {
            components -= 1;
        }
    }
    StateGraphSummary {
        circles,
        reduced_edges: reduced.len(),
        betti1: reduced.len() as i64 - circles as i64 + components as i64,
        components,
        edges,
        one_edged_loops,
        arc_circle,
    }
}

pub fn circle_count(d: &LinkDiagram, s: Smoothing) -> usize {
    resolve(d, &KauffmanState::all(d.num_crossings(), s)).circles
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Adequacy {
    pub a_adequate: bool,
    pub b_adequate: bool,
}

impl Adequacy {
    pub fn both(&self) -> bool {
        self.a_adequate && self.b_adequate
    }
}

pub fn adequacy(d: &LinkDiagram) -> Adequacy {
    let n = d.num_crossings();
    Adequacy {
        a_adequate: resolve(d, &KauffmanState::all(n, Smoothing::A))
            .one_edged_loops
            .is_empty(),
        b_adequate: resolve(d, &KauffmanState::all(n, Smoothing::B))
            .one_edged_loops
            .is_empty(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> LinkDiagram {
        LinkDiagram::parse_pd("Xp[1,5,2,4]\nXp[3,1,4,6]\nXp[5,3,6,2]\n").unwrap()
    }

    #[test]
    fn trefoil_states() {
        let d = trefoil();
        let a = resolve(&d, &KauffmanState::all(3, Smoothing::A));
        assert_eq!(a.circles, 2);
        assert_eq!(a.edges.len(), 3);
        assert_eq!(a.reduced_edges, 1);
        assert_eq!(a.betti1, 0);
        let b = resolve(&d, &KauffmanState::all(3, Smoothing::B));
        assert_eq!(b.circles, 3);
        assert!(adequacy(&d).both());
    }

    #[test]
    fn unknot_state() {
        let d = LinkDiagram::unknot();
        let s = resolve(&d, &KauffmanState::all(0, Smoothing::A));
        assert_eq!(s.circles, 1);
        assert!(s.edges.is_empty());
    }

    #[test]
    fn kink_breaks_a_adequacy() {
        let d = LinkDiagram::parse_pd("Xn[1,2,2,1]").unwrap();
        let ad = adequacy(&d);
        assert!(!ad.a_adequate);
        assert!(ad.b_adequate);
        let other = adequacy(&LinkDiagram::parse_pd("Xp[1,1,2,2]").unwrap());
        assert!(other.a_adequate && !other.b_adequate);
    }
}
