use serde::Serialize;

use super::graph::{validate, WeightedPlanarGraph};
use super::paths::{path_profile, ratio_exceeds, LengthMode, DEFAULT_PATH_CAP};
use super::transform::{contract_edge, delete_edge};
use crate::diagram::{adequacy, build_diagram, is_prime};
use crate::error::Result;

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub negative_edges: Vec<u32>,
    /// Weight of the single negative edge, when there is exactly one.
    pub r: Option<i64>,
    pub single_negative_edge: bool,
    pub abs_r_at_least_two: bool,
    pub t: usize,
    pub omega: Option<i64>,
    /// `omega/t` as an exact fraction string.
    pub ratio: Option<String>,
    pub t_greater_than_two: bool,
    pub ratio_exceeds_abs_r: bool,
    pub deleted_two_connected: bool,
    pub deleted_diagram_prime: bool,
    pub contracted_diagram_adequate: bool,
    pub notes: Vec<String>,
    pub near_alternating: bool,
}

/// Checks every clause of the near-alternating condition on `g`; failures are report entries.
pub fn near_alternating_check(g: &WeightedPlanarGraph) -> Result<ClassificationReport> {
    let v = validate(g)?;
    let mut rep = ClassificationReport {
        negative_edges: v.negative_edges.clone(),
        r: None,
        single_negative_edge: v.negative_edges.len() == 1,
        abs_r_at_least_two: false,
        t: 0,
        omega: None,
        ratio: None,
        t_greater_than_two: false,
        ratio_exceeds_abs_r: false,
        deleted_two_connected: false,
        deleted_diagram_prime: false,
        contracted_diagram_adequate: false,
        notes: Vec::new(),
        near_alternating: false,
    };
    if !v.planar {
        rep.notes.push("graph fails the Euler check".into());
    }
    if !v.two_connected {
        rep.notes.push(format!(
            "graph is not 2-connected, cut vertices {:?}",
            v.cut_vertices
        ));
    }
    if !v.self_loops.is_empty() {
        rep.notes
            .push(format!("graph has self-loops {:?}", v.self_loops));
    }
    if !rep.single_negative_edge {
        rep.notes.push(format!(
            "expected one negative edge, found {}",
            v.negative_edges.len()
        ));
        return Ok(rep);
    }
    let e = v.negative_edges[0];
    let r = g.edge(e).unwrap().weight;
    rep.r = Some(r);
    rep.abs_r_at_least_two = r.abs() >= 2;

    let prof = path_profile(g, e, LengthMode::Standard, DEFAULT_PATH_CAP)?;
    rep.t = prof.t;
    rep.omega = prof.omega;
    if let Some(w) = prof.omega {
        rep.ratio = Some(format!("{w}/{}", prof.t));
        rep.ratio_exceeds_abs_r = ratio_exceeds(w, prof.t, r.abs());
    }
    rep.t_greater_than_two = prof.t > 2;

    let deleted = delete_edge(g, e)?;
    rep.deleted_two_connected = deleted.is_two_connected();
    match build_diagram(&deleted) {
        Ok(d) => rep.deleted_diagram_prime = is_prime(&d),
        Err(err) => rep.notes.push(format!("deleted graph diagram: {err}")),
    }
    match contract_edge(g, e).and_then(|h| build_diagram(&h)) {
        Ok(d) => rep.contracted_diagram_adequate = adequacy(&d).both(),
        Err(err) => rep.notes.push(format!("contracted graph diagram: {err}")),
    }
    rep.near_alternating = v.planar
        && v.two_connected
        && v.self_loops.is_empty()
        && rep.single_negative_edge
        && rep.abs_r_at_least_two
        && rep.t_greater_than_two
        && rep.ratio_exceeds_abs_r
        && rep.deleted_two_connected
        && rep.deleted_diagram_prime
        && rep.contracted_diagram_adequate;
    Ok(rep)
}
