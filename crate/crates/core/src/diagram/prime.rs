use super::pd::LinkDiagram;

/// No two arcs whose removal disconnects the projection into two pieces with crossings.
pub fn is_prime(d: &LinkDiagram) -> bool {
    if !d.is_connected() || d.num_crossings() == 0 {
        return false;
    }
    two_arc_cuts(d).is_empty()
}

/// All pairs of arc labels forming a 2-edge cut of the projection graph.
pub fn two_arc_cuts(d: &LinkDiagram) -> Vec<(u32, u32)> {
    let topo = d.topo();
    let n = d.num_crossings();
    let edges: Vec<(usize, usize)> = topo.arc_ends.iter().map(|[p, q]| (p.0, q.0)).collect();
    let mut cuts = Vec::new();
    for skip in 0..edges.len() {
        for b in bridges(n, &edges, skip) {
            if b > skip {
                cuts.push((topo.labels[skip], topo.labels[b]));
            }
        }
    }
    cuts
}

/// Bridges of the multigraph with edge `skip` removed (iterative lowpoint search).
fn bridges(n: usize, edges: &[(usize, usize)], skip: usize) -> Vec<usize> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, &(a, b)) in edges.iter().enumerate() {
        if i == skip || a == b {
            continue;
        }
        adj[a].push((b, i));
        adj[b].push((a, i));
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut out = Vec::new();
    let mut timer = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // frames: (vertex, parent edge, next adjacency index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(&mut (v, pe, ref mut i)) = stack.last_mut() {
            if *i < adj[v].len() {
                let (w, eid) = adj[v][*i];
                *i += 1;
                if eid == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, eid, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] > disc[u] {
                        out.push(pe);
                    }
                }
            }
        }
    }
    out
}
