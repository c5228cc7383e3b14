use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Serialize, Serializer};

use crate::diagram::{
    adequacy, build_diagram, counts, is_prime, pretzel_state, resolve, twist_reduced_warnings,
    KauffmanState, LinkDiagram, Smoothing,
};
use crate::error::{Error, Result};
use crate::graphmodel::{
    contract_edge, multi_twist_profile, near_alternating_check, WeightedPlanarGraph,
    DEFAULT_PATH_CAP,
};

use super::coeffs::predicted_coeffs;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn int(n: i64) -> BigRational {
    rat(n, 1)
}

/// Volume of the regular ideal tetrahedron, to the precision the constants are quoted at.
pub fn v3() -> BigRational {
    rat(10149, 10000)
}

/// Exact rational, optionally times `v3`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bound {
    pub value: BigRational,
    pub times_v3: bool,
}

impl Bound {
    fn plain(value: BigRational) -> Self {
        Bound {
            value,
            times_v3: false,
        }
    }

    fn v3(value: BigRational) -> Self {
        Bound {
            value,
            times_v3: true,
        }
    }

    pub fn numeric(&self) -> BigRational {
        if self.times_v3 {
            &self.value * v3()
        } else {
            self.value.clone()
        }
    }

    /// Rounded to 5 decimal places, half away from zero.
    pub fn decimal(&self) -> String {
        format_decimal(&self.numeric(), 5)
    }
}

pub fn format_decimal(x: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10).pow(places);
    let scaled = x * BigRational::from_integer(scale.clone());
    let half = rat(1, 2);
    let rounded = if scaled.is_negative() {
        -(-scaled + half).floor()
    } else {
        (scaled + half).floor()
    }
    .to_integer();
    let neg = rounded.is_negative();
    let digits = rounded.abs().to_string();
    let p = places as usize;
    let padded = format!("{digits:0>width$}", width = p + 1);
    let (whole, frac) = padded.split_at(padded.len() - p);
    format!("{}{whole}.{frac}", if neg { "-" } else { "" })
}

impl Serialize for Bound {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Bound", 3)?;
        st.serialize_field("exact", &self.value.to_string())?;
        st.serialize_field("times_v3", &self.times_v3)?;
        st.serialize_field("decimal", &self.decimal())?;
        st.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VolumeVariant {
    /// Twist-number bounds on the volume.
    FkpTwist,
    /// Twist-number bounds on `|beta| + |beta'|` for adequate diagrams.
    AdequateCoeff,
    /// Coefficient bounds on the volume of a near-alternating link.
    NearAlt,
    /// Twist-number bounds on `|beta| + |beta'| + M - 1` for a near-alternating link.
    TwistEstimate,
    /// Several negative regions, as printed.
    Multi,
    /// Several negative regions, chained through the twist-number constants.
    MultiFkp,
}

impl VolumeVariant {
    pub const ALL: [VolumeVariant; 6] = [
        VolumeVariant::FkpTwist,
        VolumeVariant::AdequateCoeff,
        VolumeVariant::NearAlt,
        VolumeVariant::TwistEstimate,
        VolumeVariant::Multi,
        VolumeVariant::MultiFkp,
    ];
}

#[derive(Clone, Debug, Serialize)]
pub struct VolumeInputs {
    pub tw: i64,
    pub beta_abs: i64,
    pub beta_prime_abs: i64,
    /// Number of negative twist regions.
    pub big_r: i64,
    pub m: Option<i64>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct HypothesisChecklist {
    pub prime: bool,
    pub twist_reduced: bool,
    pub adequate: bool,
    pub near_alternating: bool,
    pub multi_structure: bool,
    pub tw: usize,
    pub min_region: usize,
    pub abs_r: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VolumeReport {
    pub variant: VolumeVariant,
    /// What the interval bounds: `"vol"` or a coefficient expression.
    pub quantity: String,
    pub lower: Bound,
    pub upper: Bound,
    pub inputs: VolumeInputs,
    pub hypotheses: HypothesisChecklist,
    pub failed: Vec<String>,
    /// Hypotheses failed, so the interval is informational only.
    pub advisory: bool,
    pub lower_le_upper: bool,
}

pub fn checklist(d: &LinkDiagram, declared_twist_reduced: bool) -> HypothesisChecklist {
    let k = counts(d);
    HypothesisChecklist {
        prime: is_prime(d),
        twist_reduced: declared_twist_reduced
            || d.twist_reduced()
            || twist_reduced_warnings(d).is_empty(),
        adequate: adequacy(d).both(),
        near_alternating: false,
        multi_structure: false,
        tw: k.tw,
        min_region: k.regions.iter().map(|r| r.size).min().unwrap_or(0),
        abs_r: 0,
    }
}

fn require(failed: &mut Vec<String>, ok: bool, what: &str) {
    if !ok {
        failed.push(what.to_string());
    }
}

pub fn volume_bounds(
    inputs: &VolumeInputs,
    hyp: &HypothesisChecklist,
    variant: VolumeVariant,
) -> VolumeReport {
    let tw = inputs.tw;
    let bb = inputs.beta_abs + inputs.beta_prime_abs;
    let m = inputs.m.unwrap_or(0);
    let big_r = inputs.big_r;
    let mut failed = Vec::new();
    if inputs.m.is_none()
        && !matches!(
            variant,
            VolumeVariant::FkpTwist | VolumeVariant::AdequateCoeff
        )
    {
        failed.push("M unavailable".into());
    }
    let base = |f: &mut Vec<String>, min_region: usize| {
        require(f, hyp.prime, "prime");
        require(f, hyp.twist_reduced, "twist-reduced");
        require(
            f,
            hyp.min_region >= min_region,
            &format!("every twist region has >= {min_region} crossings"),
        );
    };
    let (quantity, lower, upper) = match variant {
        VolumeVariant::FkpTwist => {
            base(&mut failed, 7);
            require(&mut failed, tw > 2, "tw > 2");
            (
                "vol".to_string(),
                Bound::plain(rat(70735, 100000) * int(tw - 1)),
                Bound::v3(int(10 * (tw - 1))),
            )
        }
        VolumeVariant::AdequateCoeff => {
            require(&mut failed, hyp.adequate, "adequate");
            require(
                &mut failed,
                hyp.min_region >= 3,
                "every twist region has >= 3 crossings",
            );
            (
                "|beta|+|beta'|".to_string(),
                Bound::plain(rat(tw, 3) + int(1)),
                Bound::plain(int(2 * tw)),
            )
        }
        VolumeVariant::NearAlt => {
            base(&mut failed, 7);
            require(&mut failed, hyp.near_alternating, "near-alternating");
            require(&mut failed, tw > 2, "tw > 2");
            (
                "vol".to_string(),
                Bound::plain(rat(35367, 100000) * int(bb - 1)),
                Bound::v3(int(30 * (bb + m - 2))),
            )
        }
        VolumeVariant::TwistEstimate => {
            base(&mut failed, 3);
            require(&mut failed, hyp.near_alternating, "near-alternating");
            require(&mut failed, hyp.abs_r > 2, "|r| > 2");
            (
                "|beta|+|beta'|+M-1".to_string(),
                Bound::plain(rat(tw - 1, 3) + int(1)),
                Bound::plain(int(2 * (tw - 1))),
            )
        }
        VolumeVariant::Multi => {
            base(&mut failed, 7);
            require(
                &mut failed,
                hyp.multi_structure,
                "negative edges isolated, deletion 2-connected",
            );
            require(&mut failed, tw >= 2, "tw >= 2");
            (
                "vol".to_string(),
                Bound::plain(int(bb + m + 2 * (big_r - 1))),
                Bound::plain(int(bb + m - 1) + rat(big_r - 1, 3)),
            )
        }
        VolumeVariant::MultiFkp => {
            // (tw - R)/3 + 1 <= X <= 2(tw - R) with X = |beta|+|beta'|+M, then the twist bounds
            base(&mut failed, 7);
            require(
                &mut failed,
                hyp.multi_structure,
                "negative edges isolated, deletion 2-connected",
            );
            require(&mut failed, tw > 2, "tw > 2");
            let x = bb + m;
            (
                "vol".to_string(),
                Bound::plain(rat(70735, 100000) * (rat(x, 2) + int(big_r - 1))),
                Bound::v3(int(10 * (3 * (x - 1) + big_r - 1))),
            )
        }
    };
    let lower_le_upper = lower.numeric() <= upper.numeric();
    VolumeReport {
        variant,
        quantity,
        lower,
        upper,
        inputs: inputs.clone(),
        hypotheses: hyp.clone(),
        advisory: !failed.is_empty(),
        failed,
        lower_le_upper,
    }
}

fn reduced_b_edges(d: &LinkDiagram) -> (i64, i64) {
    let s = resolve(d, &KauffmanState::all(d.num_crossings(), Smoothing::B));
    (s.reduced_edges as i64, s.betti1)
}

/// `M = e'_B(D_r) - e'_B(D) - r` with `D_r` the diagram of `G` with its negative edge
/// contracted; for several negative edges, the difference of first Betti numbers of the
/// reduced all-B graphs.
pub fn compute_m(g: &WeightedPlanarGraph) -> Result<i64> {
    let d = build_diagram(g)?;
    let neg = g.negative_edges();
    let mut contracted = g.clone();
    for &e in &neg {
        contracted = contract_edge(&contracted, e)?;
    }
    let dr = build_diagram(&contracted)?;
    let (e_d, b_d) = reduced_b_edges(&d);
    let (e_r, b_r) = reduced_b_edges(&dr);
    match neg.len() {
        0 => Err(Error::Hypothesis("graph has no negative edge".into())),
        1 => Ok(e_r - e_d - g.edge(neg[0]).unwrap().weight),
        _ => Ok(b_r - b_d),
    }
}

/// Inputs and checklist from the graph, using the predicted `|beta|`, `|beta'|`.
pub fn volume_inputs(g: &WeightedPlanarGraph) -> Result<(VolumeInputs, HypothesisChecklist)> {
    let d = build_diagram(g)?;
    let sigma = pretzel_state(&d, g)?;
    let neg = g.negative_edges();
    let r = neg
        .iter()
        .map(|&e| g.edge(e).unwrap().weight)
        .min()
        .unwrap_or(0);
    let pred = predicted_coeffs(&d, &sigma, r);
    let mut hyp = checklist(&d, false);
    hyp.abs_r = r.abs();
    hyp.near_alternating = near_alternating_check(g)?.near_alternating;
    hyp.multi_structure = !neg.is_empty()
        && multi_twist_profile(g, DEFAULT_PATH_CAP).is_ok()
        && g.is_two_connected()
        && {
            let mut h = g.clone();
            neg.iter()
                .try_for_each(|e| crate::graphmodel::delete_edge(&h, *e).map(|x| h = x))
                .is_ok()
                && h.is_two_connected()
        };
    let m = if neg.is_empty() {
        None
    } else {
        Some(compute_m(g)?)
    };
    Ok((
        VolumeInputs {
            tw: hyp.tw as i64,
            beta_abs: pred.beta,
            beta_prime_abs: pred.beta_prime,
            big_r: neg.len() as i64,
            m,
        },
        hyp,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hyp_ok() -> HypothesisChecklist {
        HypothesisChecklist {
            prime: true,
            twist_reduced: true,
            adequate: true,
            near_alternating: true,
            multi_structure: true,
            tw: 4,
            min_region: 8,
            abs_r: 8,
        }
    }

    #[test]
    fn twist_constants() {
        let inp = VolumeInputs {
            tw: 4,
            beta_abs: 2,
            beta_prime_abs: 3,
            big_r: 1,
            m: Some(0),
        };
        let r = volume_bounds(&inp, &hyp_ok(), VolumeVariant::FkpTwist);
        assert_eq!(r.lower.value, rat(212205, 100000));
        assert_eq!(r.upper, Bound::v3(int(30)));
        assert_eq!(r.upper.decimal(), "30.44700");
        assert!(!r.advisory && r.lower_le_upper);
        let na = volume_bounds(&inp, &hyp_ok(), VolumeVariant::NearAlt);
        assert_eq!(na.lower.decimal(), "1.41468");
    }

    #[test]
    fn decimals() {
        assert_eq!(format_decimal(&rat(-1, 3), 5), "-0.33333");
        assert_eq!(format_decimal(&rat(2, 3), 2), "0.67");
        assert_eq!(format_decimal(&int(0), 3), "0.000");
    }

    #[test]
    fn short_region_is_advisory() {
        let inp = VolumeInputs {
            tw: 4,
            beta_abs: 2,
            beta_prime_abs: 3,
            big_r: 1,
            m: Some(0),
        };
        let h = HypothesisChecklist {
            min_region: 2,
            ..hyp_ok()
        };
        assert!(volume_bounds(&inp, &h, VolumeVariant::FkpTwist).advisory);
    }
}
