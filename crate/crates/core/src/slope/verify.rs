use serde::Serialize;

use super::coeffs::stable_coeff_report;
use super::degree::{
    degree_prediction, fit_quasi_quadratic, h_bounds, DegreePrediction, DegreeVariant,
};
use super::surface::surface_report;
use crate::bracket::{colored_jones_range, CableStat, EngineConfig};
use crate::diagram::{
    adequacy, build_diagram, circle_count, murasugi_sum, pretzel_state, LinkDiagram, Smoothing,
};
use crate::error::{Error, Result};
use crate::graphmodel::{
    multi_twist_profile, near_alternating_check, ClassificationReport, WeightedPlanarGraph,
    DEFAULT_PATH_CAP,
};
use crate::qalgebra::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    Degree,
    Surface,
    Coefficients,
}

impl std::str::FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "degree" => Ok(Theorem::Degree),
            "surface" => Ok(Theorem::Surface),
            "coefficients" | "coeffs" => Ok(Theorem::Coefficients),
            _ => Err(Error::Argument(format!(
                "unknown theorem {s:?}; expected degree, surface or coefficients"
            ))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyRow {
    pub item: String,
    pub n: Option<u32>,
    pub predicted: String,
    pub observed: String,
    pub pass: bool,
    pub advisory: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct EngineRecord {
    pub n: u32,
    pub cables: Vec<CableStat>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EngineFailure {
    pub n: u32,
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub variant: DegreeVariant,
    pub hypotheses: serde_json::Value,
    pub hypotheses_failed: Vec<String>,
    pub rows: Vec<VerifyRow>,
    pub engine: Vec<EngineRecord>,
    pub engine_failures: Vec<EngineFailure>,
    /// Every non-advisory row passes.
    pub all_pass: bool,
}

impl VerificationReport {
    fn finish(mut self) -> Self {
        self.all_pass = self.rows.iter().filter(|r| !r.advisory).all(|r| r.pass);
        self
    }
}

fn row(
    item: &str,
    n: Option<u32>,
    predicted: impl ToString,
    observed: impl ToString,
    advisory: bool,
) -> VerifyRow {
    let (p, o) = (predicted.to_string(), observed.to_string());
    VerifyRow {
        item: item.to_string(),
        n,
        pass: p == o,
        predicted: p,
        observed: o,
        advisory,
    }
}

fn failed_clauses(c: &ClassificationReport) -> Vec<String> {
    let mut out = Vec::new();
    let clauses = [
        (c.single_negative_edge, "single negative edge"),
        (c.abs_r_at_least_two, "|r| >= 2"),
        (c.t_greater_than_two, "t > 2"),
        (c.ratio_exceeds_abs_r, "omega/t > |r|"),
        (c.deleted_two_connected, "G minus e is 2-connected"),
        (c.deleted_diagram_prime, "diagram of G minus e is prime"),
        (c.contracted_diagram_adequate, "diagram of G/e is adequate"),
    ];
    for (ok, what) in clauses {
        if !ok {
            out.push(what.to_string());
        }
    }
    if !c.near_alternating && out.is_empty() {
        out.extend(c.notes.iter().cloned());
    }
    out
}

/// Degree prediction for `D = ∂F_G`, picking the variant from the number of negative edges.
pub fn predict_from_graph(
    g: &WeightedPlanarGraph,
) -> Result<(LinkDiagram, DegreePrediction, serde_json::Value)> {
    let d = build_diagram(g)?;
    let neg = g.negative_edges();
    match neg.len() {
        0 => {
            let mut failed = Vec::new();
            if !adequacy(&d).a_adequate {
                failed.push("A-adequate".to_string());
            }
            let p = degree_prediction(&d, 0, DegreeVariant::NearAlt, failed);
            Ok((d, p, serde_json::json!({ "negative_edges": [] })))
        }
        1 => {
            let c = near_alternating_check(g)?;
            let r = g.edge(neg[0]).unwrap().weight;
            let p = degree_prediction(&d, r, DegreeVariant::NearAlt, failed_clauses(&c));
            Ok((d, p, serde_json::to_value(&c)?))
        }
        _ => {
            let prof = multi_twist_profile(g, DEFAULT_PATH_CAP)?;
            let mut failed = Vec::new();
            if !g.is_two_connected() {
                failed.push("G is 2-connected".to_string());
            }
            if !prof.predicate {
                failed.push("omega/t > |r| R".to_string());
            }
            let p = degree_prediction(&d, prof.sum_r, DegreeVariant::Multi, failed);
            Ok((d, p, serde_json::to_value(&prof)?))
        }
    }
}

struct Computed {
    jones: Vec<(u32, LaurentPoly, LaurentPoly)>,
    engine: Vec<EngineRecord>,
    failures: Vec<EngineFailure>,
}

fn compute(d: &LinkDiagram, ns: &[u32], cfg: &EngineConfig) -> Computed {
    let mut out = Computed {
        jones: Vec::new(),
        engine: Vec::new(),
        failures: Vec::new(),
    };
    for (&n, r) in ns.iter().zip(colored_jones_range(d, ns, cfg)) {
        match r {
            Ok(j) => {
                out.engine.push(EngineRecord {
                    n,
                    cables: j.cables,
                });
                out.jones.push((n, j.poly, j.reduced));
            }
            Err(e) => out.failures.push(EngineFailure {
                n,
                kind: e.kind().to_string(),
                message: e.to_string(),
            }),
        }
    }
    out
}

fn failure_rows(c: &Computed) -> Vec<VerifyRow> {
    c.failures
        .iter()
        .map(|f| VerifyRow {
            item: "engine".into(),
            n: Some(f.n),
            predicted: "completed".into(),
            observed: f.kind.clone(),
            pass: false,
            advisory: true,
        })
        .collect()
}

/// Minimum degree against `pred`, and with `check_max` the maximum degree against `h*_n`.
fn degree_rows(
    d: &LinkDiagram,
    pred: &DegreePrediction,
    c: &Computed,
    check_max: bool,
) -> Vec<VerifyRow> {
    let adv = !pred.hypotheses_hold();
    let b_adv = !adequacy(d).b_adequate;
    let mut rows = Vec::new();
    let mut mins = Vec::new();
    for (n, j, _) in &c.jones {
        let lo = j.min_deg().unwrap_or(0) as i64;
        mins.push((*n, lo));
        rows.push(row("min_degree", Some(*n), pred.at(*n), lo, adv));
        if check_max {
            let hi = j.max_deg().unwrap_or(0) as i64;
            rows.push(row("max_degree", Some(*n), h_bounds(d, *n).1, hi, b_adv));
        }
    }
    if mins.len() >= 4 {
        if let Ok(fit) = fit_quasi_quadratic(&mins) {
            rows.push(row("quadratic_fit", None, true, fit.fit_verified, adv));
            rows.push(row("js", None, &pred.a2, &fit.js, adv));
            rows.push(row(
                "jx",
                None,
                &pred.a1 / num_rational::BigRational::from_integer(2.into()),
                &fit.jx,
                adv,
            ));
        }
    }
    rows
}

pub fn verify(
    g: &WeightedPlanarGraph,
    theorem: Theorem,
    ns: &[u32],
    cfg: &EngineConfig,
) -> Result<VerificationReport> {
    if ns.is_empty() || ns.iter().any(|&n| n < 2) {
        return Err(Error::Argument(
            "n-range must be nonempty with every n >= 2".into(),
        ));
    }
    cfg.validate()?;
    let (d, pred, hyp) = predict_from_graph(g)?;
    let adv = !pred.hypotheses_hold();
    let mut rep = VerificationReport {
        theorem,
        variant: pred.variant,
        hypotheses: hyp,
        hypotheses_failed: pred.hypotheses_failed.clone(),
        rows: Vec::new(),
        engine: Vec::new(),
        engine_failures: Vec::new(),
        all_pass: false,
    };
    let needs_engine = theorem != Theorem::Surface || ns.len() >= 4;
    let computed = if needs_engine {
        compute(&d, ns, cfg)
    } else {
        Computed {
            jones: Vec::new(),
            engine: Vec::new(),
            failures: Vec::new(),
        }
    };
    match theorem {
        Theorem::Degree => rep.rows.extend(degree_rows(&d, &pred, &computed, true)),
        Theorem::Surface => {
            let sigma = pretzel_state(&d, g)?;
            let s = surface_report(&d, &sigma)?;
            let r = pred.inputs.r;
            let sa = circle_count(&d, Smoothing::A) as i64;
            let c = d.num_crossings() as i64;
            let cm = d.negative_count() as i64;
            rep.rows.push(row(
                "boundary_slope",
                None,
                -2 * cm - 2 * r,
                s.boundary_slope,
                adv,
            ));
            rep.rows
                .push(row("euler_char", None, sa - r - c, s.euler_char, adv));
            rep.rows
                .push(row("slope_vs_js", None, &pred.a2, s.boundary_slope, adv));
            let jx = &pred.a1 / num_rational::BigRational::from_integer(2.into());
            rep.rows
                .push(row("minus_euler_vs_jx", None, jx, -s.euler_char, adv));
            let mins: Vec<(u32, i64)> = computed
                .jones
                .iter()
                .map(|(n, j, _)| (*n, j.min_deg().unwrap_or(0) as i64))
                .collect();
            if let Ok(fit) = fit_quasi_quadratic(&mins) {
                rep.rows.push(row(
                    "observed_js_vs_slope",
                    None,
                    s.boundary_slope,
                    &fit.js,
                    adv,
                ));
            }
        }
        Theorem::Coefficients => {
            let sigma = pretzel_state(&d, g)?;
            let reduced: Vec<(u32, LaurentPoly)> = computed
                .jones
                .iter()
                .map(|(n, _, r)| (*n, r.clone()))
                .collect();
            let mut sc = stable_coeff_report(&d, &sigma, pred.inputs.r, &reduced);
            sc.predicted.beta_from_contracted = super::coeffs::contracted_betti(g)?;
            rep.hypotheses =
                serde_json::json!({ "classification": rep.hypotheses, "predicted": sc.predicted });
            let p = &sc.predicted;
            let abs = |s: &str| s.trim_start_matches('-').to_string();
            for o in &sc.observed {
                let n = Some(o.n);
                rep.rows
                    .push(row("|alpha|", n, p.alpha, abs(&o.alpha), adv));
                rep.rows
                    .push(row("|alpha'|", n, p.alpha_prime, abs(&o.alpha_prime), adv));
                rep.rows.push(row(
                    "|beta|",
                    n,
                    p.beta,
                    abs(&o.beta),
                    adv || o.inconclusive,
                ));
                rep.rows.push(row(
                    "|beta'|",
                    n,
                    p.beta_prime,
                    abs(&o.beta_prime),
                    adv || o.inconclusive,
                ));
            }
            if sc.observed.len() >= 2 {
                for (item, flag) in [
                    ("alpha_stable", sc.alpha_stable),
                    ("beta_stable", sc.beta_stable),
                    ("alpha_prime_stable", sc.alpha_prime_stable),
                    ("beta_prime_stable", sc.beta_prime_stable),
                ] {
                    rep.rows.push(row(item, None, true, flag, adv));
                }
            }
        }
    }
    rep.rows.extend(failure_rows(&computed));
    rep.engine = computed.engine;
    rep.engine_failures = computed.failures;
    Ok(rep.finish())
}

/// Minimum degree of the star product of `D1 = ∂F_G1` with an A-adequate `d2`.
pub fn verify_murasugi(
    g1: &WeightedPlanarGraph,
    circle1: usize,
    d2: &LinkDiagram,
    circle2: usize,
    ns: &[u32],
    cfg: &EngineConfig,
) -> Result<VerificationReport> {
    let d1 = build_diagram(g1)?;
    let c = near_alternating_check(g1)?;
    let mut failed = failed_clauses(&c);
    if !adequacy(d2).a_adequate {
        failed.push("second summand is A-adequate".into());
    }
    let sum = murasugi_sum(&d1, circle1, d2, circle2)?;
    let r =
        c.r.ok_or_else(|| Error::Hypothesis("first summand needs one negative edge".into()))?;
    let pred = degree_prediction(&sum.diagram, r, DegreeVariant::Murasugi, failed.clone());
    let computed = compute(&sum.diagram, ns, cfg);
    let mut rows = vec![row(
        "circles_glued",
        None,
        sum.circles1 + sum.circles2 - 1,
        circle_count(&sum.diagram, Smoothing::A),
        false,
    )];
    rows.extend(degree_rows(&sum.diagram, &pred, &computed, false));
    rows.extend(failure_rows(&computed));
    Ok(VerificationReport {
        theorem: Theorem::Degree,
        variant: DegreeVariant::Murasugi,
        hypotheses: serde_json::json!({ "first_summand": c, "gluing": {
            "circle1": sum.circle1, "circle2": sum.circle2, "cut_arcs": sum.cut_arcs,
            "loops1": sum.loops1, "loops2": sum.loops2 } }),
        hypotheses_failed: failed,
        rows,
        engine: computed.engine,
        engine_failures: computed.failures,
        all_pass: false,
    }
    .finish())
}
