mod common;

use proptest::prelude::*;

use jslope_core::bracket::*;
use jslope_core::corpus::braid_closure;
use jslope_core::diagram::{build_diagram, cable, LinkDiagram};
use jslope_core::graphmodel::WeightedPlanarGraph;
use jslope_core::qalgebra::{loop_value, BiLaurentPoly, LaurentPoly, Var};

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 96,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn threads(k: usize) -> EngineConfig {
    EngineConfig {
        threads: k,
        ..EngineConfig::default()
    }
}

/// `Λ(-A^3, A + A^-1)` times `(A + A^-1)^k`, with `k` clearing negative powers of `z`.
fn lambda_at_bracket_point(l: &BiLaurentPoly, k: u32) -> LaurentPoly {
    let z = LaurentPoly::from_terms(Var::A, [(1, 1), (-1, 1)]);
    let mut out = LaurentPoly::zero(Var::A);
    for ((r, s), c) in l.terms() {
        let sign = if r.rem_euclid(2) == 1 { -c.clone() } else { c.clone() };
        let power = s + k as i32;
        assert!(power >= 0);
        let term = &LaurentPoly::monomial(Var::A, 3 * r, sign) * &z.pow(power as u32);
        out += &term;
    }
    out
}

#[test]
fn lambda_specializes_to_the_bracket() {
    let mut checked = 0;
    for e in common::corpus().entries.iter().step_by(4) {
        let d = &e.diagram;
        if d.num_crossings() > 8 {
            continue;
        }
        let l = kauffman_lambda(d, KAUFFMAN_MAX_CROSSINGS).unwrap();
        let k = (-l.min_second().unwrap_or(0)).max(0) as u32;
        let br = bracket(d, &EngineConfig::default()).unwrap();
        // Λ(O) = 1 while <O> = δ
        let normalized = br.div_exact(&loop_value()).unwrap();
        let z = LaurentPoly::from_terms(Var::A, [(1, 1), (-1, 1)]);
        assert_eq!(lambda_at_bracket_point(&l, k), &normalized * &z.pow(k), "{}", d.to_pd());
        checked += 1;
    }
    assert!(checked > 1000);
}

#[test]
fn lambda_on_twenty_three_crossings() {
    let d = build_diagram(&WeightedPlanarGraph::pretzel(&[-2, 7, 7, 7])).unwrap();
    let c = d.num_crossings();
    let l = kauffman_lambda(&d, c).unwrap();
    assert_eq!(l.max_second(), Some(c as i32 - 2));
    let k = (-l.min_second().unwrap()).max(0) as u32;
    let z = LaurentPoly::from_terms(Var::A, [(1, 1), (-1, 1)]);
    let normalized = bracket(&d, &EngineConfig::default()).unwrap().div_exact(&loop_value()).unwrap();
    assert_eq!(lambda_at_bracket_point(&l, k), &normalized * &z.pow(k));
}

#[test]
fn lambda_of_mirror_inverts_a() {
    for e in common::corpus().entries.iter().step_by(11) {
        let d = &e.diagram;
        if d.num_crossings() > 8 {
            continue;
        }
        let l = kauffman_lambda(d, KAUFFMAN_MAX_CROSSINGS).unwrap();
        let m = kauffman_lambda(&d.mirror(), KAUFFMAN_MAX_CROSSINGS).unwrap();
        assert_eq!(m, l.invert_first());
    }
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let d = build_diagram(&WeightedPlanarGraph::pretzel(&[-2, 7, 7, 7])).unwrap();
    let two = cable(&d, 2).unwrap();
    let one = bracket_sweep(&two, &threads(1)).unwrap();
    assert_eq!(bracket_sweep(&two, &threads(4)).unwrap(), one);
    for e in common::corpus().entries.iter().step_by(1009) {
        let a = bracket_bruteforce(&e.diagram, &threads(1)).unwrap();
        assert_eq!(bracket_bruteforce(&e.diagram, &threads(3)).unwrap(), a);
    }
    let t = colored_jones(&d, 3, &threads(1)).unwrap();
    assert_eq!(colored_jones(&d, 3, &threads(2)).unwrap(), t);
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn sweep_matches_brute_force_on_braid_closures(
        strands in 2u32..=5,
        word in prop::collection::vec((1i32..5, any::<bool>()), 1..=12),
    ) {
        let word: Vec<i32> = word
            .into_iter()
            .map(|(g, pos)| {
                let g = (g - 1) % (strands as i32 - 1) + 1;
                if pos { g } else { -g }
            })
            .collect();
        let d: LinkDiagram = braid_closure(strands, &word).unwrap();
        let cfg = EngineConfig::default();
        prop_assert_eq!(bracket_sweep(&d, &cfg).unwrap(), bracket_bruteforce(&d, &cfg).unwrap());
    }

    #[test]
    fn writhe_normalized_jones_is_invariant_under_conjugation(
        word in prop::collection::vec((1i32..3, any::<bool>()), 1..=8),
        k in 0usize..8,
    ) {
        let word: Vec<i32> = word.into_iter().map(|(g, pos)| if pos { g } else { -g }).collect();
        let mut rotated = word.clone();
        let k = k % word.len();
        rotated.rotate_left(k);
        let cfg = EngineConfig::default();
        let a = colored_jones(&braid_closure(3, &word).unwrap(), 2, &cfg).unwrap();
        let b = colored_jones(&braid_closure(3, &rotated).unwrap(), 2, &cfg).unwrap();
        prop_assert_eq!(a, b);
    }
}
