use std::collections::BTreeMap;

use super::pd::LinkDiagram;
use super::state::{KauffmanState, Smoothing, UnionFind};
use crate::error::{Error, Result};
use crate::graphmodel::WeightedPlanarGraph;

// Corners of a crossing inside a vertical band running from end 0 (bottom) to end 1 (top).
const SW: usize = 0;
const SE: usize = 1;
const NE: usize = 2;
const NW: usize = 3;

/// Where each edge's crossings sit in the output diagram.
#[derive(Clone, Debug)]
pub struct BandLayout {
    /// Crossing indices of each edge, from end 0 to end 1.
    pub edge_crossings: BTreeMap<u32, Vec<usize>>,
}

/// The diagram `D = ∂F_G`: a disk per vertex and a twisted band of `|w|` crossings per edge.
pub fn build_diagram(g: &WeightedPlanarGraph) -> Result<LinkDiagram> {
    build_diagram_with_layout(g).map(|(d, _)| d)
}

pub fn build_diagram_with_layout(g: &WeightedPlanarGraph) -> Result<(LinkDiagram, BandLayout)> {
    if let Some(e) = g.edges.iter().find(|e| e.weight == 0) {
        return Err(Error::Argument(format!("edge {} has weight 0", e.id)));
    }
    let mut edge_crossings = BTreeMap::new();
    let mut next = 0usize;
    for e in &g.edges {
        let k = e.weight.unsigned_abs() as usize;
        edge_crossings.insert(e.id, (next..next + k).collect::<Vec<_>>());
        next += k;
    }
    let n = next;
    let corner = |x: usize, c: usize| 4 * x + c;
    let mut links: Vec<(usize, usize)> = Vec::new();
    for xs in edge_crossings.values() {
        for w in xs.windows(2) {
            links.push((corner(w[0], NW), corner(w[1], SW)));
            links.push((corner(w[0], NE), corner(w[1], SE)));
        }
    }
    let first = |(eid, end): (u32, u8)| {
        let xs = &edge_crossings[&eid];
        if end == 0 {
            corner(xs[0], SE)
        } else {
            corner(*xs.last().unwrap(), NW)
        }
    };
    let second = |(eid, end): (u32, u8)| {
        let xs = &edge_crossings[&eid];
        if end == 0 {
            corner(xs[0], SW)
        } else {
            corner(*xs.last().unwrap(), NE)
        }
    };
    let mut free_loops = 0;
    for v in &g.vertices {
        let rot = &v.rotation;
        if rot.is_empty() {
            free_loops += 1;
            continue;
        }
        for i in 0..rot.len() {
            links.push((second(rot[i]), first(rot[(i + 1) % rot.len()])));
        }
    }
    let mut uf = UnionFind::new(4 * n);
    for &(p, q) in &links {
        uf.union(p, q);
    }
    let mut label: BTreeMap<usize, u32> = BTreeMap::new();
    let mut raw = Vec::with_capacity(n);
    let mut weight_of = vec![0i64; n];
    for e in &g.edges {
        for &x in &edge_crossings[&e.id] {
            weight_of[x] = e.weight;
        }
    }
    for (x, &w) in weight_of.iter().enumerate() {
        let order = if w > 0 {
            [SW, SE, NE, NW]
        } else {
            [SE, NE, NW, SW]
        };
        let arcs = order.map(|c| {
            let root = uf.find(corner(x, c));
            let next = label.len() as u32 + 1;
            *label.entry(root).or_insert(next)
        });
        raw.push(arcs);
    }
    let d = LinkDiagram::from_unoriented(&raw, free_loops, &[])?.relabeled();
    Ok((d, BandLayout { edge_crossings }))
}

/// B on the crossings of every negative edge, A elsewhere.
pub fn pretzel_state(d: &LinkDiagram, g: &WeightedPlanarGraph) -> Result<KauffmanState> {
    let (built, layout) = build_diagram_with_layout(g)?;
    if built.num_crossings() != d.num_crossings() {
        return Err(Error::Argument(
            "diagram was not built from this graph (crossing counts differ)".into(),
        ));
    }
    let mut state = KauffmanState::all(d.num_crossings(), Smoothing::A);
    for e in g.edges.iter().filter(|e| e.weight < 0) {
        for &x in &layout.edge_crossings[&e.id] {
            state.choice[x] = Smoothing::B;
        }
    }
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::state::{adequacy, circle_count};
    use crate::diagram::twist::{counts, is_alternating};

    #[test]
    fn positive_trefoil_from_three_unit_edges() {
        let d = build_diagram(&WeightedPlanarGraph::pretzel(&[1, 1, 1])).unwrap();
        assert_eq!(d.num_crossings(), 3);
        assert_eq!(d.writhe(), 3);
        assert_eq!(d.num_components(), 1);
        assert_eq!(circle_count(&d, Smoothing::A), 2);
        assert_eq!(counts(&d).tw, 1);
    }

    #[test]
    fn pretzel_two_two_two() {
        let d = build_diagram(&WeightedPlanarGraph::pretzel(&[2, 2, 2])).unwrap();
        assert_eq!(d.num_crossings(), 6);
        assert!(is_alternating(&d));
        assert!(adequacy(&d).both());
    }

    #[test]
    fn near_alternating_pretzel_is_a_knot() {
        let d = build_diagram(&WeightedPlanarGraph::pretzel(&[-2, 7, 7, 7])).unwrap();
        assert_eq!(d.num_crossings(), 23);
        assert_eq!(d.num_components(), 1);
        let c = counts(&d);
        assert_eq!(c.tw, 4);
        let mut sizes: Vec<usize> = c.regions.iter().map(|r| r.size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 7, 7, 7]);
        assert!(adequacy(&d).b_adequate);
    }

    #[test]
    fn two_bridge_five_crossings() {
        let d = build_diagram(&WeightedPlanarGraph::pretzel(&[3, 2])).unwrap();
        assert_eq!(d.num_crossings(), 5);
        assert!(is_alternating(&d));
    }

    #[test]
    fn pretzel_state_marks_negative_band() {
        let g = WeightedPlanarGraph::pretzel(&[-2, 7, 7, 7]);
        let d = build_diagram(&g).unwrap();
        let s = pretzel_state(&d, &g).unwrap();
        assert_eq!(s.count(Smoothing::B), 2);
        let pos = WeightedPlanarGraph::pretzel(&[3, 3, 3]);
        let dp = build_diagram(&pos).unwrap();
        assert_eq!(pretzel_state(&dp, &pos).unwrap().count(Smoothing::B), 0);
    }

    #[test]
    fn zero_weight_rejected() {
        assert!(build_diagram(&WeightedPlanarGraph::pretzel(&[0, 3])).is_err());
    }
}
