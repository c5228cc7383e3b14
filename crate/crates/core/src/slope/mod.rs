//! Predictions for degrees, slopes, stable coefficients and volume bounds, and a harness that
//! checks them against the exact invariants.

mod coeffs;
mod degree;
mod gap;
mod surface;
mod twisting;
mod verify;
mod volume;

pub use coeffs::{
    contracted_betti, predicted_coeffs, stable_coeff_report, stable_coeffs, ObservedCoeffs,
    PredictedCoeffs, StableCoeffReport,
};
pub use degree::{
    degree_prediction, fit_quasi_quadratic, formula_inputs, h_bounds, slope_report,
    DegreePrediction, DegreeVariant, FormulaInputs, SlopeReport,
};
pub use gap::{gap_bound, gap_bound_variant, GapQuery, GapVariant};
pub use surface::{surface_report, SurfaceReport};
pub use twisting::{find_m_k, FullTwistThreshold};
pub use verify::{
    predict_from_graph, verify, verify_murasugi, EngineFailure, EngineRecord, Theorem,
    VerificationReport, VerifyRow,
};
pub use volume::{
    checklist, compute_m, format_decimal, v3, volume_bounds, volume_inputs, Bound,
    HypothesisChecklist, VolumeInputs, VolumeReport, VolumeVariant,
};

use num_rational::BigRational;
use serde::Serializer;

pub(crate) fn ser_rat<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

pub(crate) fn ser_opt_rat<S: Serializer>(x: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(x) => s.serialize_str(&x.to_string()),
        None => s.serialize_none(),
    }
}
