use std::collections::{BTreeMap, HashMap};

use super::pd::{Crossing, LinkDiagram, Sign};
use super::state::UnionFind;
use crate::error::{Error, Result};

/// Blackboard `j`-parallel of every component.
pub fn cable(d: &LinkDiagram, j: u32) -> Result<LinkDiagram> {
    cable_components(d, &vec![j; d.num_components()])
}

/// Blackboard parallel with `js[i]` copies of component `i`; components are ordered as in
/// [`LinkDiagram::component_arcs`], followed by the free loops.
///
/// Copy `k` of an arc is the `k`-th strand from the left of the direction of travel, so each
/// crossing becomes a `j_under x j_over` grid of crossings of the same sign.
pub fn cable_components(d: &LinkDiagram, js: &[u32]) -> Result<LinkDiagram> {
    if js.len() != d.num_components() {
        return Err(Error::Argument(format!(
            "expected {} cable multiplicities, got {}",
            d.num_components(),
            js.len()
        )));
    }
    let comp_of = d.arc_component();
    let n_link_comps = d.component_arcs().len();
    let mut copies_free: u32 = js[n_link_comps..].iter().sum();

    // ids 0.. for arc copies, then interior segments
    let mut arc_base: BTreeMap<u32, usize> = BTreeMap::new();
    let mut next_id = 0usize;
    let mut labels: Vec<u32> = comp_of.keys().copied().collect();
    labels.sort_unstable();
    for &l in &labels {
        arc_base.insert(l, next_id);
        next_id += js[comp_of[&l]] as usize;
    }
    let copy_id = |l: u32, k: usize| arc_base[&l] + k;

    let mut grid: Vec<(Sign, [usize; 4])> = Vec::new();
    let mut joins: Vec<(usize, usize)> = Vec::new();
    for c in d.crossings() {
        let [a, b, cc, dd] = c.arcs;
        let ju = js[comp_of[&a]] as usize;
        let jo = js[comp_of[&dd]] as usize;
        let mut fresh = |count: usize| {
            let start = next_id;
            next_id += count;
            start
        };
        // under copy p: segments 0..=jo from south to north
        let mut under: Vec<Vec<usize>> = Vec::with_capacity(ju);
        for p in 0..ju {
            let base = fresh(jo.saturating_sub(1));
            let mut segs = vec![copy_id(a, p)];
            segs.extend((0..jo.saturating_sub(1)).map(|i| base + i));
            if jo == 0 {
                joins.push((copy_id(a, p), copy_id(cc, p)));
            } else {
                segs.push(copy_id(cc, p));
            }
            under.push(segs);
        }
        // over copy q: segments 0..=ju from west to east
        let mut over: Vec<Vec<usize>> = Vec::with_capacity(jo);
        for q in 0..jo {
            let base = fresh(ju.saturating_sub(1));
            let mut segs = vec![copy_id(dd, q)];
            segs.extend((0..ju.saturating_sub(1)).map(|i| base + i));
            if ju == 0 {
                joins.push((copy_id(dd, q), copy_id(b, q)));
            } else {
                segs.push(copy_id(b, q));
            }
            over.push(segs);
        }
        for p in 0..ju {
            for q in 0..jo {
                let rank = match c.sign {
                    Sign::Pos => jo - 1 - q,
                    Sign::Neg => q,
                };
                let s = under[p][rank];
                let n = under[p][rank + 1];
                let w = over[q][p];
                let e = over[q][p + 1];
                grid.push((c.sign, [s, e, n, w]));
            }
        }
    }
    let mut uf = UnionFind::new(next_id);
    for (x, y) in joins {
        uf.union(x, y);
    }
    let mut new_label: HashMap<usize, u32> = HashMap::new();
    let crossings: Vec<Crossing> = grid
        .into_iter()
        .map(|(sign, ids)| {
            let arcs = ids.map(|i| {
                let r = uf.find(i);
                let next = new_label.len() as u32 + 1;
                *new_label.entry(r).or_insert(next)
            });
            Crossing { sign, arcs }
        })
        .collect();
    // strands that met no crossing close up into crossingless loops
    let mut roots = std::collections::BTreeSet::new();
    for i in 0..next_id {
        roots.insert(uf.find(i));
    }
    copies_free += roots.iter().filter(|r| !new_label.contains_key(r)).count() as u32;
    LinkDiagram::new(crossings, copies_free)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::state::{circle_count, Smoothing};

    fn trefoil() -> LinkDiagram {
        LinkDiagram::parse_pd("Xp[1,5,2,4]\nXp[3,1,4,6]\nXp[5,3,6,2]\n").unwrap()
    }

    #[test]
    fn cable_sizes_and_writhe() {
        let d = trefoil();
        let c2 = cable(&d, 2).unwrap();
        assert_eq!(c2.num_crossings(), 12);
        assert_eq!(c2.writhe(), 12);
        assert_eq!(c2.num_components(), 2);
        let c3 = cable(&d, 3).unwrap();
        assert_eq!(c3.num_crossings(), 27);
        assert_eq!(c3.num_components(), 3);
    }

    #[test]
    fn trivial_multiplicities() {
        let d = trefoil();
        assert_eq!(cable(&d, 1).unwrap().canonical_code(), d.canonical_code());
        assert!(cable(&d, 0).unwrap().is_empty());
        let loops = cable(&LinkDiagram::unknot(), 3).unwrap();
        assert_eq!(loops.free_loops(), 3);
    }

    #[test]
    fn all_a_circles_scale() {
        // blackboard copies of the all-A state circles
        let d = trefoil();
        let c2 = cable(&d, 2).unwrap();
        assert_eq!(
            circle_count(&c2, Smoothing::A),
            2 * circle_count(&d, Smoothing::A)
        );
        assert_eq!(
            circle_count(&c2, Smoothing::B),
            2 * circle_count(&d, Smoothing::B)
        );
    }
}
