use rustc_hash::FxHashMap;
use serde::Serialize;

use super::coef::{Coef, StridePoly};
use super::{BracketStats, EngineConfig};
use crate::diagram::{LinkDiagram, Topology};
use crate::error::{Error, Result};
use crate::qalgebra::{loop_value, LaurentPoly, Var};

/// Order in which crossings are absorbed into the evaluated region, and the number of open
/// arc ends on the region boundary after each step.
#[derive(Clone, Debug, Serialize)]
pub struct SweepPlan {
    pub order: Vec<usize>,
    pub widths: Vec<usize>,
    pub max_width: usize,
}

impl SweepPlan {
    fn cost(&self) -> (usize, usize) {
        (self.max_width, self.widths.iter().sum())
    }
}

fn greedy_plan(topo: &Topology, start: usize, prefer_old: bool) -> SweepPlan {
    let n = topo.slot_arc.len();
    let mut done = vec![false; n];
    let mut opened_at: Vec<Option<usize>> = vec![None; topo.num_arcs()];
    let mut open: Vec<usize> = Vec::new();
    let mut order = Vec::with_capacity(n);
    let mut widths = Vec::with_capacity(n);
    let mut next_fresh = 0;
    for step in 0..n {
        let mut best: Option<(usize, usize, usize)> = None; // (shared, oldest, x)
        for &a in &open {
            for (y, _) in topo.arc_ends[a] {
                if done[y] {
                    continue;
                }
                let mut shared = 0;
                let mut oldest = usize::MAX;
                for &b in &topo.slot_arc[y] {
                    if let Some(t) = opened_at[b] {
                        shared += 1;
                        oldest = oldest.min(if prefer_old { t } else { usize::MAX - t });
                    }
                }
                let better = match best {
                    None => true,
                    Some((s, o, bx)) => {
                        (shared, std::cmp::Reverse(oldest), std::cmp::Reverse(y))
                            > (s, std::cmp::Reverse(o), std::cmp::Reverse(bx))
                    }
                };
                if better {
                    best = Some((shared, oldest, y));
                }
            }
        }
        let x = match best {
            Some((_, _, x)) => x,
            None if step == 0 && !done[start] => start,
            None => {
                while done[next_fresh] {
                    next_fresh += 1;
                }
                next_fresh
            }
        };
        done[x] = true;
        for &a in &topo.slot_arc[x] {
            if opened_at[a].is_some() {
                opened_at[a] = None;
            } else if topo.arc_ends[a].iter().all(|&(y, _)| y == x) {
                // loop arc at x, closed at once
            } else {
                opened_at[a] = Some(step);
            }
        }
        open = (0..topo.num_arcs())
            .filter(|&a| opened_at[a].is_some())
            .collect();
        order.push(x);
        widths.push(open.len());
    }
    let max_width = widths.iter().copied().max().unwrap_or(0);
    SweepPlan {
        order,
        widths,
        max_width,
    }
}

/// Greedy absorption order: repeatedly take the crossing sharing most arcs with the boundary,
/// preferring the longest-open arcs. Several starting crossings are tried and the narrowest
/// plan kept.
pub fn sweep_plan(topo: &Topology) -> SweepPlan {
    let n = topo.slot_arc.len();
    if n == 0 {
        return SweepPlan {
            order: Vec::new(),
            widths: Vec::new(),
            max_width: 0,
        };
    }
    let tries = n.min(64);
    let mut best: Option<SweepPlan> = None;
    for i in 0..tries {
        for prefer_old in [true, false] {
            let plan = greedy_plan(topo, i * n / tries, prefer_old);
            if best.as_ref().is_none_or(|b| plan.cost() < b.cost()) {
                best = Some(plan);
            }
        }
    }
    best.unwrap()
}

#[derive(Clone, Copy)]
enum SlotLink {
    /// Arc already open on the boundary, at this position.
    Old(usize),
    /// Arc joining two slots of this crossing.
    Loop(usize),
    /// Arc opened by this crossing.
    New,
}

const UNSET: u8 = u8::MAX;
const GONE: usize = usize::MAX;

struct Step {
    link: [SlotLink; 4],
    /// New boundary index of each old position, or `GONE`.
    old_to_new: Vec<usize>,
    /// Slot closing each old position, for closed positions.
    slot_of_pos: Vec<usize>,
    new_of_slot: [usize; 4],
    survivors: Vec<usize>,
    new_width: usize,
}

fn partner_after(step: &Step, key: &[u8], sm: &[usize; 4]) -> (Box<[u8]>, u32) {
    let mut out = vec![UNSET; step.new_width];
    let mut seen = 0u8;
    // follows the strand entering slot `s` along an arc until it reaches the new boundary
    let walk = |mut s: usize, seen: &mut u8| -> usize {
        loop {
            *seen |= 1 << s;
            let s2 = sm[s];
            *seen |= 1 << s2;
            match step.link[s2] {
                SlotLink::New => return step.new_of_slot[s2],
                SlotLink::Loop(s3) => s = s3,
                SlotLink::Old(p2) => {
                    let p3 = key[p2] as usize;
                    let np = step.old_to_new[p3];
                    if np != GONE {
                        return np;
                    }
                    s = step.slot_of_pos[p3];
                }
            }
        }
    };
    for &p in &step.survivors {
        let np = step.old_to_new[p];
        if out[np] != UNSET {
            continue;
        }
        let q = key[p] as usize;
        let end = if step.old_to_new[q] != GONE {
            step.old_to_new[q]
        } else {
            walk(step.slot_of_pos[q], &mut seen)
        };
        out[np] = end as u8;
        out[end] = np as u8;
    }
    for k in 0..4 {
        if let SlotLink::New = step.link[k] {
            let e = step.new_of_slot[k];
            if out[e] != UNSET {
                continue;
            }
            let end = walk(k, &mut seen);
            out[e] = end as u8;
            out[end] = e as u8;
        }
    }
    let mut cycles = 0;
    for k in 0..4 {
        if seen >> k & 1 == 1 {
            continue;
        }
        cycles += 1;
        let mut s = k;
        loop {
            seen |= 1 << s;
            let s2 = sm[s];
            seen |= 1 << s2;
            s = match step.link[s2] {
                SlotLink::Loop(s3) => s3,
                SlotLink::Old(p2) => step.slot_of_pos[key[p2] as usize],
                SlotLink::New => unreachable!("closed strand reached the boundary"),
            };
            if s == k {
                break;
            }
        }
    }
    (out.into_boxed_slice(), cycles)
}

const SMOOTHINGS: [([usize; 4], i32); 2] = [([1, 0, 3, 2], 1), ([3, 2, 1, 0], -1)];

/// Returns `None` when a coefficient overflows `T`.
fn evaluate<T: Coef>(topo: &Topology, plan: &SweepPlan) -> Option<(StridePoly<T>, u64)> {
    let mut boundary: Vec<usize> = Vec::new();
    let mut pos_of: Vec<usize> = vec![GONE; topo.num_arcs()];
    let mut states: FxHashMap<Box<[u8]>, StridePoly<T>> = FxHashMap::default();
    states.insert(Box::new([]), StridePoly::one());
    let mut processed = 0u64;
    for &x in &plan.order {
        let arcs = topo.slot_arc[x];
        let mut link = [SlotLink::New; 4];
        let mut slot_of_pos = vec![GONE; boundary.len()];
        for k in 0..4 {
            let a = arcs[k];
            if pos_of[a] != GONE {
                link[k] = SlotLink::Old(pos_of[a]);
                slot_of_pos[pos_of[a]] = k;
            } else if let Some(k2) = (0..4).find(|&j| j != k && arcs[j] == a) {
                link[k] = SlotLink::Loop(k2);
            }
        }
        let mut old_to_new = vec![GONE; boundary.len()];
        let mut new_boundary = Vec::with_capacity(boundary.len() + 4);
        let mut survivors = Vec::new();
        for (p, &a) in boundary.iter().enumerate() {
            if slot_of_pos[p] == GONE {
                old_to_new[p] = new_boundary.len();
                survivors.push(p);
                new_boundary.push(a);
            }
        }
        let mut new_of_slot = [GONE; 4];
        for k in 0..4 {
            if let SlotLink::New = link[k] {
                new_of_slot[k] = new_boundary.len();
                new_boundary.push(arcs[k]);
            }
        }
        let step = Step {
            link,
            old_to_new,
            slot_of_pos,
            new_of_slot,
            survivors,
            new_width: new_boundary.len(),
        };
        let mut next: FxHashMap<Box<[u8]>, StridePoly<T>> =
            FxHashMap::with_capacity_and_hasher(states.len(), Default::default());
        for (key, poly) in &states {
            for (sm, shift) in SMOOTHINGS {
                let (nk, cycles) = partner_after(&step, key, &sm);
                let target = next
                    .entry(nk)
                    .or_insert_with(|| StridePoly::empty_like(poly.lo + shift));
                let ok = match cycles {
                    0 => target.add_shifted(poly, shift, 1),
                    1 => {
                        target.add_shifted(poly, shift + 2, -1)
                            && target.add_shifted(poly, shift - 2, -1)
                    }
                    _ => {
                        debug_assert_eq!(cycles, 2);
                        target.add_shifted(poly, shift + 4, 1)
                            && target.add_shifted(poly, shift, 2)
                            && target.add_shifted(poly, shift - 4, 1)
                    }
                };
                if !ok {
                    return None;
                }
            }
        }
        next.retain(|_, p| {
            p.trim();
            !p.is_zero()
        });
        processed += states.len() as u64;
        states = next;
        for &a in &boundary {
            pos_of[a] = GONE;
        }
        for (p, &a) in new_boundary.iter().enumerate() {
            pos_of[a] = p;
        }
        boundary = new_boundary;
    }
    let empty: Box<[u8]> = Box::new([]);
    let result = states
        .remove(&empty)
        .unwrap_or_else(|| StridePoly::empty_like(0));
    Some((result, processed))
}

fn to_laurent<T: Coef>(p: &StridePoly<T>) -> LaurentPoly {
    LaurentPoly::from_terms(Var::A, p.terms())
}

/// Bracket by absorbing crossings one at a time into a region whose boundary state is a
/// perfect matching of open arc ends, each carrying a polynomial.
pub fn bracket_sweep_with_stats(
    d: &LinkDiagram,
    cfg: &EngineConfig,
) -> Result<(LaurentPoly, BracketStats)> {
    let topo = d.topo();
    let plan = sweep_plan(&topo);
    if plan.max_width > cfg.sweep_max_width {
        return Err(Error::Capacity {
            what: format!("sweep width for a {}-crossing diagram", d.num_crossings()),
            limit: cfg.sweep_max_width,
            actual: plan.max_width,
        });
    }
    let (poly, states, ty) = if let Some((p, s)) = evaluate::<i64>(&topo, &plan) {
        (to_laurent(&p), s, i64::NAME)
    } else if let Some((p, s)) = evaluate::<i128>(&topo, &plan) {
        (to_laurent(&p), s, i128::NAME)
    } else {
        let (p, s) =
            evaluate::<num_bigint::BigInt>(&topo, &plan).expect("big integers do not overflow");
        (to_laurent(&p), s, num_bigint::BigInt::NAME)
    };
    let poly = &poly * &loop_value().pow(d.free_loops());
    let stats = BracketStats {
        engine: "sweep".into(),
        crossings: d.num_crossings(),
        states_evaluated: states,
        max_width: Some(plan.max_width),
        coefficient_type: Some(ty.into()),
    };
    Ok((poly, stats))
}

pub fn bracket_sweep(d: &LinkDiagram, cfg: &EngineConfig) -> Result<LaurentPoly> {
    bracket_sweep_with_stats(d, cfg).map(|(p, _)| p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::bracket_bruteforce;
    use crate::diagram::{build_diagram, cable};
    use crate::graphmodel::WeightedPlanarGraph;

    fn cfg() -> EngineConfig {
        EngineConfig::default()
    }

    #[test]
    fn matches_brute_force_on_small_diagrams() {
        let cases = [
            "Xp[1,5,2,4]\nXp[3,1,4,6]\nXp[5,3,6,2]\n",
            "Xp[1,1,2,2]",
            "Xn[1,2,2,1]",
            "O\nO",
            "Xp[1,5,2,4]\nXp[3,1,4,6]\nXp[5,3,6,2]\nO\n",
        ];
        for pd in cases {
            let d = LinkDiagram::parse_pd(pd).unwrap();
            assert_eq!(
                bracket_sweep(&d, &cfg()).unwrap(),
                bracket_bruteforce(&d, &cfg()).unwrap(),
                "{pd}"
            );
        }
        for w in [[2i64, 2, 2], [-2, 3, 3], [3, -1, 2]] {
            let d = build_diagram(&WeightedPlanarGraph::pretzel(&w)).unwrap();
            assert_eq!(
                bracket_sweep(&d, &cfg()).unwrap(),
                bracket_bruteforce(&d, &cfg()).unwrap()
            );
        }
    }

    #[test]
    fn cabled_trefoil_matches() {
        let d = LinkDiagram::parse_pd("Xp[1,5,2,4]\nXp[3,1,4,6]\nXp[5,3,6,2]\n").unwrap();
        let c2 = cable(&d, 2).unwrap();
        assert_eq!(
            bracket_sweep(&c2, &cfg()).unwrap(),
            bracket_bruteforce(&c2, &cfg()).unwrap()
        );
    }

    #[test]
    fn width_cap_is_enforced() {
        let d = build_diagram(&WeightedPlanarGraph::pretzel(&[3, 3, 3])).unwrap();
        let tight = EngineConfig {
            sweep_max_width: 2,
            ..EngineConfig::default()
        };
        assert_eq!(bracket_sweep(&d, &tight).unwrap_err().kind(), "capacity");
    }

    #[test]
    fn plan_visits_every_crossing() {
        let d = build_diagram(&WeightedPlanarGraph::pretzel(&[-2, 7, 7, 7])).unwrap();
        let plan = sweep_plan(&d.topo());
        let mut seen = plan.order.clone();
        seen.sort_unstable();
        assert_eq!(seen, (0..23).collect::<Vec<_>>());
        assert_eq!(*plan.widths.last().unwrap(), 0);
        assert!(plan.max_width <= 8, "{}", plan.max_width);
    }
}
