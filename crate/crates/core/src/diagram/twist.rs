use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::pd::{LinkDiagram, Sign, Topology};
use super::state::UnionFind;
use crate::graphmodel::SimpleMultigraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistRegion {
    pub crossings: Vec<usize>,
    pub sign: Sign,
    pub size: usize,
    pub uniform_sign: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagramCounts {
    pub c: usize,
    pub c_plus: usize,
    pub c_minus: usize,
    pub writhe: i64,
    pub tw: usize,
    pub regions: Vec<TwistRegion>,
}

/// Faces with exactly two corners at distinct crossings whose two sides each pass over at one
/// crossing and under at the other.
fn alternating_bigons(topo: &Topology) -> Vec<(usize, usize)> {
    topo.faces()
        .into_iter()
        .filter_map(|f| {
            if f.len() != 2 {
                return None;
            }
            let ((x, k), (y, l)) = (f[0], f[1]);
            if x == y {
                return None;
            }
            ((k + 1) % 2 != l % 2).then_some((x, y))
        })
        .collect()
}

pub fn twist_regions(d: &LinkDiagram) -> Vec<TwistRegion> {
    let n = d.num_crossings();
    if n == 0 {
        return Vec::new();
    }
    let topo = d.topo();
    let mut uf = UnionFind::new(n);
    for (x, y) in alternating_bigons(&topo) {
        uf.union(x, y);
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..n {
        groups.entry(uf.find(x)).or_default().push(x);
    }
    let mut regions: Vec<TwistRegion> = groups
        .into_values()
        .map(|crossings| {
            let sign = d.crossings()[crossings[0]].sign;
            TwistRegion {
                uniform_sign: crossings.iter().all(|&x| d.crossings()[x].sign == sign),
                size: crossings.len(),
                crossings,
                sign,
            }
        })
        .collect();
    regions.sort_by_key(|r| r.crossings[0]);
    regions
}

pub fn counts(d: &LinkDiagram) -> DiagramCounts {
    let regions = twist_regions(d);
    DiagramCounts {
        c: d.num_crossings(),
        c_plus: d.positive_count(),
        c_minus: d.negative_count(),
        writhe: d.writhe(),
        tw: regions.len(),
        regions,
    }
}

/// Pairs of same-sign twist regions that share two faces touching no other region; such a
/// pair usually means one twist region split in two, so the diagram is not twist-reduced.
pub fn twist_reduced_warnings(d: &LinkDiagram) -> Vec<(usize, usize)> {
    let regions = twist_regions(d);
    let mut region_of = vec![0; d.num_crossings()];
    for (i, r) in regions.iter().enumerate() {
        for &x in &r.crossings {
            region_of[x] = i;
        }
    }
    let topo = d.topo();
    let mut shared: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for f in topo.faces() {
        let touched: BTreeSet<usize> = f.iter().map(|&(x, _)| region_of[x]).collect();
        if touched.len() == 2 {
            let v: Vec<usize> = touched.into_iter().collect();
            *shared.entry((v[0], v[1])).or_default() += 1;
        }
    }
    shared
        .into_iter()
        .filter(|&((a, b), k)| k >= 2 && regions[a].sign == regions[b].sign)
        .map(|(p, _)| p)
        .collect()
}

/// Every arc runs from an over-slot to an under-slot.
pub fn is_alternating(d: &LinkDiagram) -> bool {
    let topo = d.topo();
    topo.arc_ends.iter().all(|[p, q]| p.1 % 2 != q.1 % 2)
}

/// Crossings that some face meets at two different corners.
pub fn nugatory_crossings(d: &LinkDiagram) -> Vec<usize> {
    let topo = d.topo();
    let mut out = BTreeSet::new();
    for f in topo.faces() {
        let mut seen = BTreeSet::new();
        for &(x, _) in &f {
            if !seen.insert(x) {
                out.insert(x);
            }
        }
    }
    out.into_iter().collect()
}

pub fn is_reduced(d: &LinkDiagram) -> bool {
    nugatory_crossings(d).is_empty()
}

/// Checkerboard graph on one color class of faces: the class holding the corner between
/// slots 0 and 1 of the first crossing, which for an alternating diagram is every such corner.
pub fn tait_graph(d: &LinkDiagram) -> SimpleMultigraph {
    let topo = d.topo();
    let faces = topo.faces();
    let mut face_of = vec![[usize::MAX; 4]; d.num_crossings()];
    for (i, f) in faces.iter().enumerate() {
        for &(x, k) in f {
            face_of[x][k] = i;
        }
    }
    // faces meeting at neighbouring corners of a crossing get opposite colors
    let mut adj = vec![Vec::new(); faces.len()];
    for corners in &face_of {
        for k in 0..4 {
            adj[corners[k]].push(corners[(k + 1) % 4]);
        }
    }
    let mut color = vec![None; faces.len()];
    for start in 0..faces.len() {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut stack = vec![start];
        while let Some(f) = stack.pop() {
            let c = color[f].unwrap();
            for &g in &adj[f] {
                if color[g].is_none() {
                    color[g] = Some(!c);
                    stack.push(g);
                }
            }
        }
    }
    let Some(first) = face_of.first() else {
        return SimpleMultigraph { n: 0, edges: Vec::new() };
    };
    let black = color[first[0]];
    let mut index: BTreeMap<usize, usize> = BTreeMap::new();
    let mut edges = Vec::new();
    for corners in &face_of {
        let mut id = |f: usize| {
            let next = index.len();
            *index.entry(f).or_insert(next)
        };
        let (a, b) = if color[corners[0]] == black {
            (corners[0], corners[2])
        } else {
            (corners[1], corners[3])
        };
        let (a, b) = (id(a), id(b));
        edges.push((a, b));
    }
    SimpleMultigraph {
        n: index.len(),
        edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_is_one_twist_region() {
        let d = LinkDiagram::parse_pd("Xp[1,5,2,4]\nXp[3,1,4,6]\nXp[5,3,6,2]\n").unwrap();
        let c = counts(&d);
        assert_eq!((c.c, c.writhe, c.tw), (3, 3, 1));
        assert!(is_alternating(&d));
        assert!(is_reduced(&d));
        let t = tait_graph(&d);
        assert_eq!(t.edges.len(), 3);
    }

    #[test]
    fn kink_is_nugatory() {
        let d = LinkDiagram::parse_pd("Xp[1,1,2,2]").unwrap();
        assert_eq!(nugatory_crossings(&d), vec![0]);
    }
}
