use serde::Serialize;

use crate::diagram::{resolve, KauffmanState, LinkDiagram, Sign, Smoothing};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct SurfaceReport {
    pub boundary_slope: i64,
    pub euler_char: i64,
    pub boundary_components: usize,
    pub state_circles: usize,
    pub positive_b: usize,
    pub negative_a: usize,
    pub state: KauffmanState,
}

/// Boundary slope `2 c+^B - 2 c-^A` and Euler characteristic `|s_sigma| - c` of the state
/// surface of `state`.
pub fn surface_report(d: &LinkDiagram, state: &KauffmanState) -> Result<SurfaceReport> {
    if state.choice.len() != d.num_crossings() {
        return Err(Error::Argument(format!(
            "state has {} entries for {} crossings",
            state.choice.len(),
            d.num_crossings()
        )));
    }
    let mut positive_b = 0;
    let mut negative_a = 0;
    for (c, &s) in d.crossings().iter().zip(&state.choice) {
        match (c.sign, s) {
            (Sign::Pos, Smoothing::B) => positive_b += 1,
            (Sign::Neg, Smoothing::A) => negative_a += 1,
            _ => {}
        }
    }
    let circles = resolve(d, state).circles;
    Ok(SurfaceReport {
        boundary_slope: 2 * positive_b as i64 - 2 * negative_a as i64,
        euler_char: circles as i64 - d.num_crossings() as i64,
        boundary_components: d.num_components(),
        state_circles: circles,
        positive_b,
        negative_a,
        state: state.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{build_diagram, circle_count, pretzel_state};
    use crate::graphmodel::WeightedPlanarGraph;

    #[test]
    fn all_a_on_positive_diagram_has_slope_zero() {
        let d = build_diagram(&WeightedPlanarGraph::pretzel(&[3, 3, 3])).unwrap();
        let s = surface_report(&d, &KauffmanState::all(9, Smoothing::A)).unwrap();
        assert_eq!(s.boundary_slope, -2 * d.negative_count() as i64);
    }

    #[test]
    fn pretzel_surface() {
        let g = WeightedPlanarGraph::pretzel(&[-2, 7, 7, 7]);
        let d = build_diagram(&g).unwrap();
        let s = surface_report(&d, &pretzel_state(&d, &g).unwrap()).unwrap();
        let cm = d.negative_count() as i64;
        assert_eq!(s.boundary_slope, -2 * cm + 4);
        let sa = circle_count(&d, Smoothing::A) as i64;
        assert_eq!(s.euler_char, sa + 2 - 23);
    }
}
