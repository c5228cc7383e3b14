use std::collections::BTreeMap;

use serde::Serialize;

use super::pd::{Crossing, LinkDiagram};
use super::state::{resolve, KauffmanState, Smoothing, StateGraphSummary};
use crate::error::{Error, Result};

/// Result of gluing two all-A state graphs along a vertex, with the bookkeeping needed to
/// audit it.
#[derive(Clone, Debug, Serialize)]
pub struct MurasugiSum {
    pub diagram: LinkDiagram,
    pub circle1: usize,
    pub circle2: usize,
    /// The arcs of the two circles that were cut and crosswise reconnected; `None` when one
    /// side is a crossingless loop.
    pub cut_arcs: Option<(u32, u32)>,
    pub circles1: usize,
    pub circles2: usize,
    pub circles: usize,
    /// One-edged loops of `s_A(D1)` and `s_A(D2)`, as crossing indices of each summand.
    pub loops1: Vec<usize>,
    pub loops2: Vec<usize>,
}

fn all_a(d: &LinkDiagram) -> StateGraphSummary {
    resolve(d, &KauffmanState::all(d.num_crossings(), Smoothing::A))
}

fn min_arc_on(s: &StateGraphSummary, circle: usize) -> Option<u32> {
    s.arc_circle
        .iter()
        .filter(|&(_, &c)| c == circle)
        .map(|(&l, _)| l)
        .min()
}

/// Slot where arc `label` arrives.
fn head_slot(d: &LinkDiagram, label: u32) -> (usize, usize) {
    for (x, c) in d.crossings().iter().enumerate() {
        for s in 0..4 {
            if c.arcs[s] == label && c.slot_incoming(s) {
                return (x, s);
            }
        }
    }
    unreachable!("every arc of a valid diagram has a head")
}

/// Star product of `d1` and `d2` along circle `circle1` of `s_A(d1)` and `circle2` of
/// `s_A(d2)`. Circle ids are those of [`resolve`]; crossingless loops come last.
///
/// Realized by cutting one arc of each circle and reconnecting them crosswise, so the two
/// circles fuse and every other circle and every crossing is kept.
pub fn murasugi_sum(
    d1: &LinkDiagram,
    circle1: usize,
    d2: &LinkDiagram,
    circle2: usize,
) -> Result<MurasugiSum> {
    let s1 = all_a(d1);
    let s2 = all_a(d2);
    if circle1 >= s1.circles || circle2 >= s2.circles {
        return Err(Error::Argument(format!(
            "circle ids ({circle1}, {circle2}) out of range ({}, {})",
            s1.circles, s2.circles
        )));
    }
    let bad = s1.loops_at(circle1);
    if !bad.is_empty() {
        return Err(Error::Hypothesis(format!(
            "circle {circle1} of s_A(D1) carries one-edged loops at crossings {bad:?}"
        )));
    }
    let offset = d1
        .crossings()
        .iter()
        .flat_map(|c| c.arcs)
        .max()
        .unwrap_or(0);
    let shifted: Vec<Crossing> = d2
        .crossings()
        .iter()
        .map(|c| Crossing {
            sign: c.sign,
            arcs: c.arcs.map(|a| a + offset),
        })
        .collect();
    let alpha = min_arc_on(&s1, circle1);
    let beta = min_arc_on(&s2, circle2).map(|b| b + offset);

    let mut crossings: Vec<Crossing> = d1.crossings().to_vec();
    let n1 = crossings.len();
    crossings.extend(shifted);
    let mut free = d1.free_loops() + d2.free_loops();
    let cut_arcs = match (alpha, beta) {
        (Some(a), Some(b)) => {
            let (y, sy) = head_slot(d1, a);
            let (y2, sy2) = head_slot(d2, b - offset);
            crossings[y].arcs[sy] = b;
            crossings[n1 + y2].arcs[sy2] = a;
            Some((a, b))
        }
        // a crossingless loop is the identity of the product
        _ => {
            free -= 1;
            None
        }
    };
    let diagram = LinkDiagram::new(crossings, free)?;
    let glued = all_a(&diagram);
    check_gluing(&s1, circle1, &s2, circle2, offset, &glued)?;
    Ok(MurasugiSum {
        circles: glued.circles,
        diagram: diagram.relabeled(),
        circle1,
        circle2,
        cut_arcs,
        circles1: s1.circles,
        circles2: s2.circles,
        loops1: s1.one_edged_loops.clone(),
        loops2: s2.one_edged_loops.clone(),
    })
}

/// The state graph of the sum must be the vertex gluing of the summands' state graphs.
fn check_gluing(
    s1: &StateGraphSummary,
    c1: usize,
    s2: &StateGraphSummary,
    c2: usize,
    offset: u32,
    glued: &StateGraphSummary,
) -> Result<()> {
    let fail = |what: &str| Err(Error::Internal(format!("Murasugi sum gluing: {what}")));
    if glued.circles + 1 != s1.circles + s2.circles {
        return fail("circle count is not |s1| + |s2| - 1");
    }
    let mut phi1: BTreeMap<usize, usize> = BTreeMap::new();
    for (&l, &c) in &s1.arc_circle {
        phi1.insert(c, glued.arc_circle[&l]);
    }
    let mut phi2: BTreeMap<usize, usize> = BTreeMap::new();
    for (&l, &c) in &s2.arc_circle {
        phi2.insert(c, glued.arc_circle[&(l + offset)]);
    }
    if let (Some(a), Some(b)) = (phi1.get(&c1), phi2.get(&c2)) {
        if a != b {
            return fail("chosen circles did not fuse");
        }
    }
    let norm = |(a, b): (usize, usize)| (a.min(b), a.max(b));
    let n1 = s1.edges.len();
    for (x, &(a, b)) in s1.edges.iter().enumerate() {
        if norm((phi1[&a], phi1[&b])) != norm(glued.edges[x]) {
            return fail("edge of the first summand moved");
        }
    }
    for (x, &(a, b)) in s2.edges.iter().enumerate() {
        if norm((phi2[&a], phi2[&b])) != norm(glued.edges[n1 + x]) {
            return fail("edge of the second summand moved");
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::build_diagram;
    use crate::graphmodel::WeightedPlanarGraph;

    fn trefoil() -> LinkDiagram {
        LinkDiagram::parse_pd("Xp[1,5,2,4]\nXp[3,1,4,6]\nXp[5,3,6,2]\n").unwrap()
    }

    #[test]
    fn unknot_is_identity() {
        let d = trefoil();
        let s = murasugi_sum(&d, 0, &LinkDiagram::unknot(), 0).unwrap();
        assert_eq!(s.diagram.canonical_code(), d.canonical_code());
        let s = murasugi_sum(&LinkDiagram::unknot(), 0, &d, 1).unwrap();
        assert_eq!(s.diagram.canonical_code(), d.canonical_code());
    }

    #[test]
    fn circles_add_minus_one() {
        let d1 = build_diagram(&WeightedPlanarGraph::pretzel(&[-2, 7, 7, 7])).unwrap();
        let s1 = all_a(&d1);
        let eligible = (0..s1.circles)
            .find(|&c| s1.loops_at(c).is_empty())
            .unwrap();
        let s = murasugi_sum(&d1, eligible, &trefoil(), 0).unwrap();
        assert_eq!(s.circles, s.circles1 + s.circles2 - 1);
        assert_eq!(s.diagram.num_crossings(), 26);
        assert_eq!(s.diagram.num_components(), 1);
    }

    #[test]
    fn looped_circle_is_rejected() {
        let d1 = build_diagram(&WeightedPlanarGraph::pretzel(&[-2, 7, 7, 7])).unwrap();
        let s1 = all_a(&d1);
        let looped = s1.edges[s1.one_edged_loops[0]].0;
        let err = murasugi_sum(&d1, looped, &trefoil(), 0).unwrap_err();
        assert_eq!(err.kind(), "hypothesis");
    }
}
