mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;

use jslope_core::diagram::*;
use jslope_core::graphmodel::WeightedPlanarGraph;

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 128,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

/// Circles of a state, counted by joining arc labels through each smoothing.
fn circles_by_union_find(d: &LinkDiagram, state: &KauffmanState) -> usize {
    let mut parent: BTreeMap<u32, u32> = BTreeMap::new();
    fn find(p: &mut BTreeMap<u32, u32>, x: u32) -> u32 {
        let up = *p.entry(x).or_insert(x);
        if up == x {
            return x;
        }
        let r = find(p, up);
        p.insert(x, r);
        r
    }
    for (c, s) in d.crossings().iter().zip(&state.choice) {
        let [a, b, cc, dd] = c.arcs;
        let pairs = match s {
            Smoothing::A => [(a, b), (cc, dd)],
            Smoothing::B => [(a, dd), (b, cc)],
        };
        for (x, y) in pairs {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            parent.insert(rx, ry);
        }
    }
    let labels: Vec<u32> = parent.keys().copied().collect();
    let roots: std::collections::BTreeSet<u32> = labels.into_iter().map(|l| find(&mut parent, l)).collect();
    roots.len() + d.free_loops() as usize
}

fn diagrams() -> Vec<&'static LinkDiagram> {
    common::corpus().entries.iter().map(|e| &e.diagram).collect()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn one_flip_changes_circles_by_one(idx in 0usize..1_000_000, bits in any::<u64>(), at in 0usize..64) {
        let ds = diagrams();
        let d = ds[idx % ds.len()];
        prop_assume!(d.num_crossings() > 0);
        let n = d.num_crossings();
        let s = KauffmanState::from_bits(n, bits);
        let mut t = s.clone();
        let x = at % n;
        t.choice[x] = match t.choice[x] { Smoothing::A => Smoothing::B, Smoothing::B => Smoothing::A };
        let (cs, ct) = (resolve(d, &s).circles, resolve(d, &t).circles);
        prop_assert_eq!(cs, circles_by_union_find(d, &s));
        prop_assert_eq!(ct, circles_by_union_find(d, &t));
        prop_assert_eq!(cs.abs_diff(ct), 1);
    }

    #[test]
    fn adequacy_ignores_labels_and_crossing_order(idx in 0usize..1_000_000, shift in 1u32..1000, rot in 0usize..64) {
        let ds = diagrams();
        let d = ds[idx % ds.len()];
        let mut xs: Vec<Crossing> = d
            .crossings()
            .iter()
            .map(|c| Crossing { sign: c.sign, arcs: c.arcs.map(|a| a * 3 + shift) })
            .collect();
        if !xs.is_empty() {
            let k = rot % xs.len();
            xs.rotate_left(k);
        }
        let e = LinkDiagram::new(xs, d.free_loops()).unwrap();
        prop_assert_eq!(adequacy(&e), adequacy(d));
        prop_assert_eq!(adequacy(&d.relabeled()), adequacy(d));
        prop_assert_eq!(e.canonical_code(), d.canonical_code());
    }
}

#[test]
fn all_positive_graph_circle_counts() {
    let mut checked = 0;
    for e in &common::corpus().entries {
        let Some(g) = common::graph_of(e) else { continue };
        if g.num_edges() == 0 || g.edges.iter().any(|x| x.weight < 0) {
            continue;
        }
        let d = &e.diagram;
        let predicted = g.num_vertices() as i64 + g.edges.iter().map(|x| x.weight - 1).sum::<i64>();
        let n = d.num_crossings();
        let all_a = KauffmanState::all(n, Smoothing::A);
        assert_eq!(circle_count(d, Smoothing::A) as i64, predicted);
        assert_eq!(circle_count(d, Smoothing::A), circles_by_union_find(d, &all_a));
        assert_eq!(circle_count(d, Smoothing::B), g.num_faces());
        checked += 1;
    }
    println!("{checked} all-positive graphs");
    assert!(checked > 500);
}

#[test]
fn mirror_of_build_is_build_of_negated_graph() {
    for e in common::corpus().entries.iter().step_by(5) {
        let Some(g) = common::graph_of(e) else { continue };
        let negated: WeightedPlanarGraph = g.map_weights(|w| -w);
        let built = build_diagram(&negated).unwrap();
        assert_eq!(built.canonical_code(), e.diagram.mirror().canonical_code());
    }
}

#[test]
fn murasugi_sum_glues_state_graphs() {
    let pool: Vec<&LinkDiagram> = diagrams()
        .into_iter()
        .filter(|d| d.num_crossings() >= 2 && d.is_connected())
        .step_by(397)
        .collect();
    let mut checked = 0;
    for (i, d1) in pool.iter().enumerate() {
        let d2 = pool[(i * 7 + 3) % pool.len()];
        let s1 = resolve(d1, &KauffmanState::all(d1.num_crossings(), Smoothing::A));
        let s2 = resolve(d2, &KauffmanState::all(d2.num_crossings(), Smoothing::A));
        let Some(c1) = (0..s1.circles).find(|&c| s1.loops_at(c).is_empty()) else { continue };
        let Some(c2) = (0..s2.circles).find(|&c| s2.loops_at(c).is_empty()) else { continue };
        let m = murasugi_sum(d1, c1, d2, c2).unwrap();
        assert_eq!(m.circles, s1.circles + s2.circles - 1);
        assert_eq!(m.diagram.num_crossings(), d1.num_crossings() + d2.num_crossings());
        let glued = resolve(&m.diagram, &KauffmanState::all(m.diagram.num_crossings(), Smoothing::A));
        assert_eq!(glued.circles, m.circles);
        // edges only move by the vertex identification, so the cycle rank adds up
        assert_eq!(glued.edges.len(), s1.edges.len() + s2.edges.len());
        checked += 1;
    }
    assert!(checked >= 10, "{checked}");
}
