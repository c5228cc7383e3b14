use num_rational::BigRational;
use serde::Serialize;

use super::graph::WeightedPlanarGraph;
use crate::error::{Error, Result};

pub const DEFAULT_PATH_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LengthMode {
    /// `2 + sum(|w| - 2)` over all edges of the path.
    Standard,
    /// Same sum restricted to positive edges.
    PositiveOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphPath {
    pub vertices: Vec<u32>,
    pub edges: Vec<u32>,
    pub length: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct PathProfile {
    pub source: u32,
    pub target: u32,
    pub deleted_edge: u32,
    pub mode: LengthMode,
    pub t: usize,
    /// Minimum path length; `None` when no path exists.
    pub omega: Option<i64>,
    pub paths: Vec<GraphPath>,
}

pub fn path_length(g: &WeightedPlanarGraph, edges: &[u32], mode: LengthMode) -> i64 {
    2 + edges
        .iter()
        .map(|&e| g.edge(e).unwrap().weight)
        .filter(|&w| mode == LengthMode::Standard || w > 0)
        .map(|w| w.abs() - 2)
        .sum::<i64>()
}

/// All simple paths between the endpoints of `e` in the graph with `e` removed.
///
/// Parallel edges give distinct paths.
pub fn path_profile(
    g: &WeightedPlanarGraph,
    e: u32,
    mode: LengthMode,
    cap: usize,
) -> Result<PathProfile> {
    let edge = g
        .edge(e)
        .ok_or_else(|| Error::Argument(format!("no edge with id {e}")))?;
    let [source, target] = edge.ends;
    let adj = g.adjacency();
    let mut paths = Vec::new();
    let mut vstack = vec![source];
    let mut estack: Vec<u32> = Vec::new();
    let mut on_path = std::collections::BTreeSet::from([source]);

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        g: &WeightedPlanarGraph,
        adj: &std::collections::BTreeMap<u32, Vec<(u32, u32)>>,
        skip: u32,
        target: u32,
        mode: LengthMode,
        cap: usize,
        vstack: &mut Vec<u32>,
        estack: &mut Vec<u32>,
        on_path: &mut std::collections::BTreeSet<u32>,
        out: &mut Vec<GraphPath>,
    ) -> Result<()> {
        let here = *vstack.last().unwrap();
        if here == target && !estack.is_empty() {
            if out.len() >= cap {
                return Err(Error::Capacity {
                    what: "simple path enumeration".into(),
                    limit: cap,
                    actual: cap + 1,
                });
            }
            out.push(GraphPath {
                vertices: vstack.clone(),
                edges: estack.clone(),
                length: path_length(g, estack, mode),
            });
            return Ok(());
        }
        for &(next, eid) in &adj[&here] {
            if eid == skip || on_path.contains(&next) {
                continue;
            }
            vstack.push(next);
            estack.push(eid);
            on_path.insert(next);
            dfs(
                g, adj, skip, target, mode, cap, vstack, estack, on_path, out,
            )?;
            on_path.remove(&next);
            vstack.pop();
            estack.pop();
        }
        Ok(())
    }

    if source != target {
        dfs(
            g,
            &adj,
            e,
            target,
            mode,
            cap,
            &mut vstack,
            &mut estack,
            &mut on_path,
            &mut paths,
        )?;
    }
    Ok(PathProfile {
        source,
        target,
        deleted_edge: e,
        mode,
        t: paths.len(),
        omega: paths.iter().map(|p| p.length).min(),
        paths,
    })
}

/// `omega / t > bound`, decided exactly.
pub fn ratio_exceeds(omega: i64, t: usize, bound: i64) -> bool {
    t > 0
        && BigRational::new(omega.into(), (t as i64).into())
            > BigRational::from_integer(bound.into())
}

#[derive(Clone, Debug, Serialize)]
pub struct NegativeEdgeProfile {
    pub edge: u32,
    pub r_i: i64,
    pub t_i: usize,
    pub omega_i: Option<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiTwistProfile {
    #[serde(rename = "R")]
    pub big_r: usize,
    /// Most negative weight among negative edges.
    pub r: i64,
    pub abs_r: i64,
    pub sum_r: i64,
    pub t: usize,
    pub omega: Option<i64>,
    pub per_edge: Vec<NegativeEdgeProfile>,
    /// `omega / t > |r| R`.
    pub predicate: bool,
    /// The printed reading `omega / t > r R` with `r` negative.
    pub literal_predicate: bool,
}

pub fn multi_twist_profile(g: &WeightedPlanarGraph, cap: usize) -> Result<MultiTwistProfile> {
    for comp in g.negative_components() {
        if comp.len() > 1 {
            return Err(Error::Hypothesis(format!(
                "negative edges {comp:?} form one component of the negative subgraph"
            )));
        }
    }
    let mut per_edge = Vec::new();
    for e in g.negative_edges() {
        let prof = path_profile(g, e, LengthMode::PositiveOnly, cap)?;
        per_edge.push(NegativeEdgeProfile {
            edge: e,
            r_i: g.edge(e).unwrap().weight,
            t_i: prof.t,
            omega_i: prof.omega,
        });
    }
    let big_r = per_edge.len();
    let r = per_edge.iter().map(|p| p.r_i).min().unwrap_or(0);
    let sum_r = per_edge.iter().map(|p| p.r_i).sum();
    let t = per_edge.iter().map(|p| p.t_i).max().unwrap_or(0);
    let omega = per_edge.iter().filter_map(|p| p.omega_i).min();
    let (predicate, literal_predicate) = match omega {
        Some(w) if per_edge.iter().all(|p| p.omega_i.is_some()) => {
            let lit = t > 0
                && BigRational::new(w.into(), (t as i64).into())
                    > BigRational::from_integer((r * big_r as i64).into());
            (ratio_exceeds(w, t, r.abs() * big_r as i64), lit)
        }
        _ => (false, false),
    };
    Ok(MultiTwistProfile {
        big_r,
        r,
        abs_r: r.abs(),
        sum_r,
        t,
        omega,
        per_edge,
        predicate,
        literal_predicate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphmodel::graph::{Edge, Vertex};

    #[test]
    fn pretzel_profile() {
        let g = WeightedPlanarGraph::pretzel(&[-2, 7, 7, 7]);
        let p = path_profile(&g, 0, LengthMode::Standard, DEFAULT_PATH_CAP).unwrap();
        assert_eq!(p.t, 3);
        assert_eq!(p.omega, Some(7));
        assert!(ratio_exceeds(7, 3, 2));
        assert!(!ratio_exceeds(5, 3, 2));
        assert!(!ratio_exceeds(6, 3, 2));
    }

    #[test]
    fn two_edge_path_length() {
        let g = WeightedPlanarGraph::new(
            vec![
                Vertex {
                    id: 0,
                    rotation: vec![(0, 0), (2, 0)],
                },
                Vertex {
                    id: 1,
                    rotation: vec![(0, 1), (1, 0)],
                },
                Vertex {
                    id: 2,
                    rotation: vec![(2, 1), (1, 1)],
                },
            ],
            vec![
                Edge {
                    id: 0,
                    ends: [0, 1],
                    weight: 5,
                },
                Edge {
                    id: 1,
                    ends: [1, 2],
                    weight: 4,
                },
                Edge {
                    id: 2,
                    ends: [0, 2],
                    weight: -2,
                },
            ],
        )
        .unwrap();
        let p = path_profile(&g, 2, LengthMode::Standard, DEFAULT_PATH_CAP).unwrap();
        assert_eq!(p.t, 1);
        assert_eq!(p.omega, Some(7));
        let single = path_profile(&g, 0, LengthMode::Standard, DEFAULT_PATH_CAP).unwrap();
        assert_eq!(single.paths[0].length, 2 + (4 - 2));
    }

    #[test]
    fn disconnected_gives_empty_profile() {
        let g = WeightedPlanarGraph::pretzel(&[3]);
        let p = path_profile(&g, 0, LengthMode::Standard, DEFAULT_PATH_CAP).unwrap();
        assert_eq!(p.t, 0);
        assert_eq!(p.omega, None);
    }

    #[test]
    fn path_cap_overflows() {
        let g = WeightedPlanarGraph::pretzel(&[-2, 7, 7, 7]);
        let err = path_profile(&g, 0, LengthMode::Standard, 2).unwrap_err();
        assert!(matches!(err, Error::Capacity { .. }));
    }
}
