//! Deterministic test corpus: every diagram `∂F_G` of at most 10 crossings from a connected
//! loopless graph with at most 4 edges, plus seeded random braid closures.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::diagram::{build_diagram, Crossing, LinkDiagram, Sign};
use crate::error::Result;
use crate::graphmodel::{Edge, Vertex, WeightedPlanarGraph};

pub const CORPUS_SEED: u64 = 20_180_517;
pub const MAX_EDGES: usize = 4;
pub const MAX_CROSSINGS: usize = 10;
pub const RANDOM_BRAIDS: usize = 100;

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "source", rename_all = "snake_case")]
pub enum Origin {
    Graph { graph: WeightedPlanarGraph },
    Braid { strands: u32, word: Vec<i32> },
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusEntry {
    pub origin: Origin,
    pub diagram: LinkDiagram,
}

#[derive(Clone, Debug, Serialize)]
pub struct Corpus {
    pub seed: u64,
    pub graph_entries: usize,
    pub braid_entries: usize,
    pub entries: Vec<CorpusEntry>,
}

/// Edge lists on `nv` vertices, connected, up to relabelling of vertices.
fn graph_shapes(nv: usize, ne: usize) -> Vec<Vec<(u32, u32)>> {
    let pairs: Vec<(u32, u32)> = (0..nv as u32)
        .flat_map(|i| (i + 1..nv as u32).map(move |j| (i, j)))
        .collect();
    let perms = permutations(nv);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut pick = vec![0usize; ne];
    // multisets of pairs as non-decreasing index sequences
    fn rec(
        k: usize,
        start: usize,
        pick: &mut Vec<usize>,
        pairs: &[(u32, u32)],
        f: &mut dyn FnMut(&[usize]),
    ) {
        if k == pick.len() {
            f(pick);
            return;
        }
        for i in start..pairs.len() {
            pick[k] = i;
            rec(k + 1, i, pick, pairs, f);
        }
    }
    let mut visit = |p: &[usize]| {
        let edges: Vec<(u32, u32)> = p.iter().map(|&i| pairs[i]).collect();
        if !connected(nv, &edges) {
            return;
        }
        let canon = perms
            .iter()
            .map(|perm| {
                let mut e: Vec<(u32, u32)> = edges
                    .iter()
                    .map(|&(a, b)| {
                        let (x, y) = (perm[a as usize], perm[b as usize]);
                        (x.min(y), x.max(y))
                    })
                    .collect();
                e.sort_unstable();
                e
            })
            .min()
            .unwrap();
        if seen.insert(canon.clone()) {
            out.push(canon);
        }
    };
    rec(0, 0, &mut pick, &pairs, &mut visit);
    out
}

fn connected(nv: usize, edges: &[(u32, u32)]) -> bool {
    let mut reach = vec![false; nv];
    reach[0] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for &(a, b) in edges {
            let (a, b) = (a as usize, b as usize);
            if reach[a] != reach[b] {
                reach[a] = true;
                reach[b] = true;
                changed = true;
            }
        }
    }
    reach.iter().all(|&r| r)
}

fn permutations(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (0..n as u32).collect();
    heap_permute(n, &mut cur, &mut out);
    out
}

fn heap_permute(k: usize, a: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, a, out);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        a.swap(j, k - 1);
    }
}

/// Every cyclic order at every vertex, keeping those that embed in the sphere.
fn planar_rotations(nv: usize, edges: &[(u32, u32)]) -> Vec<WeightedPlanarGraph> {
    let mut incident: Vec<Vec<(u32, u8)>> = vec![Vec::new(); nv];
    for (id, &(a, b)) in edges.iter().enumerate() {
        incident[a as usize].push((id as u32, 0));
        incident[b as usize].push((id as u32, 1));
    }
    let choices: Vec<Vec<Vec<(u32, u8)>>> = incident
        .iter()
        .map(|hs| {
            if hs.len() <= 2 {
                return vec![hs.clone()];
            }
            permutations(hs.len() - 1)
                .into_iter()
                .map(|p| {
                    let mut r = vec![hs[0]];
                    r.extend(p.iter().map(|&i| hs[i as usize + 1]));
                    r
                })
                .collect()
        })
        .collect();
    let edge_list: Vec<Edge> = edges
        .iter()
        .enumerate()
        .map(|(id, &(a, b))| Edge {
            id: id as u32,
            ends: [a, b],
            weight: 1,
        })
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; nv];
    loop {
        let vertices = (0..nv)
            .map(|v| Vertex {
                id: v as u32,
                rotation: choices[v][idx[v]].clone(),
            })
            .collect();
        if let Ok(g) = WeightedPlanarGraph::new(vertices, edge_list.clone()) {
            if nv as i64 - edges.len() as i64 + g.num_faces() as i64 == 2 {
                out.push(g);
            }
        }
        let mut k = 0;
        while k < nv {
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == nv {
            break;
        }
    }
    out
}

/// Nonzero weight vectors of length `ne` with `sum |w| <= budget`.
fn weight_vectors(ne: usize, budget: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(ne);
    fn rec(ne: usize, budget: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == ne {
            out.push(cur.clone());
            return;
        }
        let left = ne - cur.len() - 1;
        for m in 1..=budget - left as i64 {
            for w in [m, -m] {
                cur.push(w);
                rec(ne, budget - m, cur, out);
                cur.pop();
            }
        }
    }
    rec(ne, budget, &mut cur, &mut out);
    out
}

/// Diagrams from graphs, deduplicated by canonical code; the first graph found is kept.
pub fn graph_corpus(max_edges: usize, max_crossings: usize) -> Result<Vec<CorpusEntry>> {
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut out = Vec::new();
    let unknot = WeightedPlanarGraph::new(
        vec![Vertex {
            id: 0,
            rotation: vec![],
        }],
        vec![],
    )?;
    seen.insert(LinkDiagram::unknot().canonical_code());
    out.push(CorpusEntry {
        origin: Origin::Graph { graph: unknot },
        diagram: LinkDiagram::unknot(),
    });
    for ne in 1..=max_edges {
        let weights = weight_vectors(ne, max_crossings as i64);
        for nv in 2..=ne + 1 {
            for shape in graph_shapes(nv, ne) {
                let mut maps_seen = BTreeSet::new();
                for base in planar_rotations(nv, &shape) {
                    // all-ones diagram identifies the embedding up to the symmetries we can see
                    let probe: Vec<i64> = (1..=ne as i64).collect();
                    let key = build_diagram(&base.map_weights_by_id(&probe))?.canonical_code();
                    if !maps_seen.insert(key) {
                        continue;
                    }
                    for w in &weights {
                        let g = base.map_weights_by_id(w);
                        let d = build_diagram(&g)?;
                        if seen.insert(d.canonical_code()) {
                            out.push(CorpusEntry {
                                origin: Origin::Graph { graph: g },
                                diagram: d,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Closure of a braid word on `strands` strands; generator `±i` crosses strands `i`, `i+1`.
pub fn braid_closure(strands: u32, word: &[i32]) -> Result<LinkDiagram> {
    let k = strands as usize;
    let mut next = k as u32 + 1;
    let start: Vec<u32> = (1..=k as u32).collect();
    let mut cur = start.clone();
    let mut raw: Vec<(Sign, [u32; 4])> = Vec::new();
    for &g in word {
        let i = g.unsigned_abs() as usize - 1;
        let (a_in, b_in) = (cur[i], cur[i + 1]);
        let (a_out, b_out) = (next, next + 1);
        next += 2;
        // a runs SW to NE, b runs SE to NW
        let x = if g > 0 {
            (Sign::Pos, [b_in, a_out, b_out, a_in])
        } else {
            (Sign::Neg, [a_in, b_in, a_out, b_out])
        };
        raw.push(x);
        cur[i] = b_out;
        cur[i + 1] = a_out;
    }
    let closing: BTreeMap<u32, u32> = cur.iter().zip(&start).map(|(&e, &s)| (e, s)).collect();
    let crossings: Vec<Crossing> = raw
        .into_iter()
        .map(|(sign, arcs)| Crossing {
            sign,
            arcs: arcs.map(|l| *closing.get(&l).unwrap_or(&l)),
        })
        .collect();
    let used: BTreeSet<u32> = crossings.iter().flat_map(|c| c.arcs).collect();
    let free = start.iter().filter(|s| !used.contains(s)).count() as u32;
    Ok(LinkDiagram::new(crossings, free)?.relabeled())
}

/// `count` random braid closures on 2 to 4 strands with 1 to `max_len` letters.
pub fn random_braids(seed: u64, count: usize, max_len: usize) -> Result<Vec<CorpusEntry>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let strands: u32 = rng.gen_range(2..=4);
        let len = rng.gen_range(1..=max_len);
        let word: Vec<i32> = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..strands) as i32;
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        let diagram = braid_closure(strands, &word)?;
        out.push(CorpusEntry {
            origin: Origin::Braid { strands, word },
            diagram,
        });
    }
    Ok(out)
}

pub fn generate(seed: u64) -> Result<Corpus> {
    let graphs = graph_corpus(MAX_EDGES, MAX_CROSSINGS)?;
    let braids = random_braids(seed, RANDOM_BRAIDS, MAX_CROSSINGS)?;
    let (graph_entries, braid_entries) = (graphs.len(), braids.len());
    let mut entries = graphs;
    entries.extend(braids);
    Ok(Corpus {
        seed,
        graph_entries,
        braid_entries,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_are_counted_up_to_isomorphism() {
        // two vertices: one multigraph per edge count
        assert_eq!(graph_shapes(2, 3).len(), 1);
        // three vertices, two edges: only the path
        assert_eq!(graph_shapes(3, 2).len(), 1);
        // three vertices, three edges: triangle, doubled edge plus pendant
        assert_eq!(graph_shapes(3, 3).len(), 2);
    }

    #[test]
    fn parallel_edge_rotations() {
        let g = planar_rotations(2, &[(0, 1), (0, 1), (0, 1)]);
        assert_eq!(g.len(), 2);
        assert!(planar_rotations(2, &[(0, 1), (0, 1), (0, 1), (0, 1)]).len() == 6);
    }

    #[test]
    fn weights_respect_budget() {
        let w = weight_vectors(2, 3);
        // (1,1), (1,2), (2,1) with four sign choices each
        assert_eq!(w.len(), 12);
    }

    #[test]
    fn braid_closures() {
        let trefoil = braid_closure(2, &[1, 1, 1]).unwrap();
        assert_eq!(trefoil.num_crossings(), 3);
        assert_eq!(trefoil.writhe(), 3);
        assert_eq!(trefoil.num_components(), 1);
        let hopf = braid_closure(2, &[-1, -1]).unwrap();
        assert_eq!(hopf.num_components(), 2);
        assert_eq!(hopf.writhe(), -2);
        let split = braid_closure(3, &[1]).unwrap();
        assert_eq!(split.free_loops(), 1);
    }

    #[test]
    fn random_braids_are_deterministic() {
        let a = random_braids(7, 5, 10).unwrap();
        let b = random_braids(7, 5, 10).unwrap();
        let code = |v: &[CorpusEntry]| {
            v.iter()
                .map(|e| e.diagram.canonical_code())
                .collect::<Vec<_>>()
        };
        assert_eq!(code(&a), code(&b));
    }
}
