use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::ser_rat;
use crate::diagram::{circle_count, counts, LinkDiagram, Smoothing};
use crate::error::{Error, Result};

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// `(h_n, h*_n)`: the all-A lower bound on the minimum degree and the all-B upper bound on the
/// maximum degree of `J(v, n)`.
pub fn h_bounds(d: &LinkDiagram, n: u32) -> (i64, i64) {
    let u = n as i64 - 1;
    let c = d.num_crossings() as i64;
    let w = d.writhe();
    let sa = circle_count(d, Smoothing::A) as i64;
    let sb = circle_count(d, Smoothing::B) as i64;
    let twist = w * (u * u + 2 * u);
    (
        -u * u * c - 2 * u * sa + twist,
        u * u * c + 2 * u * sb + twist,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeVariant {
    /// One negative twist region.
    NearAlt,
    /// Near-alternating diagram star an A-adequate one.
    Murasugi,
    /// Several negative twist regions; `r` is the sum of their weights.
    Multi,
}

#[derive(Clone, Debug, Serialize)]
pub struct FormulaInputs {
    pub c: i64,
    pub c_plus: i64,
    pub c_minus: i64,
    pub writhe: i64,
    pub s_a: i64,
    pub s_b: i64,
    /// `r`, or the sum of the `r_i` for the multi variant.
    pub r: i64,
}

/// `d(n) = a2 n^2 + a1 n + a0`.
#[derive(Clone, Debug, Serialize)]
pub struct DegreePrediction {
    pub variant: DegreeVariant,
    #[serde(serialize_with = "ser_rat")]
    pub a2: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub a1: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub a0: BigRational,
    pub inputs: FormulaInputs,
    pub hypotheses_failed: Vec<String>,
}

impl DegreePrediction {
    pub fn at(&self, n: u32) -> BigRational {
        let n = rat(n as i64);
        &self.a2 * &n * &n + &self.a1 * &n + &self.a0
    }

    pub fn at_int(&self, n: u32) -> Option<i64> {
        let v = self.at(n);
        if v.is_integer() {
            v.to_integer().to_i64()
        } else {
            None
        }
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses_failed.is_empty()
    }
}

pub fn formula_inputs(d: &LinkDiagram, r: i64) -> FormulaInputs {
    let k = counts(d);
    FormulaInputs {
        c: k.c as i64,
        c_plus: k.c_plus as i64,
        c_minus: k.c_minus as i64,
        writhe: k.writhe,
        s_a: circle_count(d, Smoothing::A) as i64,
        s_b: circle_count(d, Smoothing::B) as i64,
        r,
    }
}

/// `h_n(D) - 2r((n-1)^2 + (n-1))` written out in powers of `n`.
pub fn degree_prediction(
    d: &LinkDiagram,
    r: i64,
    variant: DegreeVariant,
    hypotheses_failed: Vec<String>,
) -> DegreePrediction {
    let inputs = formula_inputs(d, r);
    // in u = n - 1: q u^2 + l u
    let q = inputs.writhe - inputs.c - 2 * r;
    let l = 2 * inputs.writhe - 2 * inputs.s_a - 2 * r;
    DegreePrediction {
        variant,
        a2: rat(q),
        a1: rat(l - 2 * q),
        a0: rat(q - l),
        inputs,
        hypotheses_failed,
    }
}

/// Jones slope data read off a quadratic fit.
#[derive(Clone, Debug, Serialize)]
pub struct SlopeReport {
    #[serde(serialize_with = "ser_rat")]
    pub js: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub jx: BigRational,
    #[serde(serialize_with = "super::ser_opt_rat")]
    pub js_star: Option<BigRational>,
    #[serde(serialize_with = "super::ser_opt_rat")]
    pub jx_star: Option<BigRational>,
    pub fit_n_range: (u32, u32),
    pub fit_verified: bool,
    /// `(n, observed - fitted)` at every sample that misses the fit.
    pub residuals: Vec<(u32, String)>,
}

struct Quadratic {
    a2: BigRational,
    a1: BigRational,
    residuals: Vec<(u32, String)>,
}

fn fit(samples: &[(u32, i64)]) -> Result<Quadratic> {
    if samples.len() < 4 {
        return Err(Error::Argument(format!(
            "need at least 4 samples to fit and check a quadratic, got {}",
            samples.len()
        )));
    }
    if samples.windows(2).any(|w| w[1].0 != w[0].0 + 1) {
        return Err(Error::Argument("samples must be at consecutive n".into()));
    }
    let n0 = rat(samples[0].0 as i64);
    let [y0, y1, y2] = [0, 1, 2].map(|i| rat(samples[i].1));
    let a2 = (&y2 - &y1 * rat(2) + &y0) / rat(2);
    let a1 = (&y1 - &y0) - &a2 * (&n0 * rat(2) + rat(1));
    let a0 = &y0 - &a2 * &n0 * &n0 - &a1 * &n0;
    let mut residuals = Vec::new();
    for &(n, y) in &samples[3..] {
        let nn = rat(n as i64);
        let diff = rat(y) - (&a2 * &nn * &nn + &a1 * &nn + &a0);
        if !diff.is_zero() {
            residuals.push((n, diff.to_string()));
        }
    }
    Ok(Quadratic { a2, a1, residuals })
}

/// Fits one quadratic through the first three samples and checks it on the rest (period 1).
pub fn fit_quasi_quadratic(samples: &[(u32, i64)]) -> Result<SlopeReport> {
    let q = fit(samples)?;
    Ok(SlopeReport {
        js: q.a2,
        jx: q.a1 / rat(2),
        js_star: None,
        jx_star: None,
        fit_n_range: (samples[0].0, samples[samples.len() - 1].0),
        fit_verified: q.residuals.is_empty(),
        residuals: q.residuals,
    })
}

/// Both sides: `min_samples` give `js, jx`, `max_samples` give `js*, jx*`.
pub fn slope_report(min_samples: &[(u32, i64)], max_samples: &[(u32, i64)]) -> Result<SlopeReport> {
    let mut rep = fit_quasi_quadratic(min_samples)?;
    let q = fit(max_samples)?;
    rep.fit_verified &= q.residuals.is_empty();
    rep.residuals.extend(
        q.residuals
            .into_iter()
            .map(|(n, r)| (n, format!("max side: {r}"))),
    );
    rep.js_star = Some(q.a2);
    rep.jx_star = Some(q.a1 / rat(2));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> LinkDiagram {
        LinkDiagram::parse_pd("Xp[1,5,2,4]\nXp[3,1,4,6]\nXp[5,3,6,2]\n").unwrap()
    }

    #[test]
    fn trefoil_h2() {
        assert_eq!(h_bounds(&trefoil(), 2).0, 2);
        assert_eq!(h_bounds(&trefoil(), 1), (0, 0));
    }

    #[test]
    fn prediction_matches_direct_formula() {
        let d = trefoil();
        let p = degree_prediction(&d, -2, DegreeVariant::NearAlt, vec![]);
        for n in 1..8u32 {
            let u = n as i64 - 1;
            let want = h_bounds(&d, n).0 + 4 * (u * u + u);
            assert_eq!(p.at_int(n), Some(want));
        }
    }

    #[test]
    fn fit_recovers_quadratic() {
        let s: Vec<(u32, i64)> = (2..6)
            .map(|n| (n, 3 * (n * n) as i64 - 5 * n as i64 + 1))
            .collect();
        let r = fit_quasi_quadratic(&s).unwrap();
        assert!(r.fit_verified);
        assert_eq!(r.js, rat(3));
        assert_eq!(r.jx, BigRational::new((-5).into(), 2.into()));
    }

    #[test]
    fn constant_and_perturbed_samples() {
        let s: Vec<(u32, i64)> = (2..6).map(|n| (n, 7)).collect();
        let r = fit_quasi_quadratic(&s).unwrap();
        assert!(r.js.is_zero() && r.jx.is_zero() && r.fit_verified);
        let mut bad = s.clone();
        bad[3].1 += 4;
        let r = fit_quasi_quadratic(&bad).unwrap();
        assert!(!r.fit_verified);
        assert_eq!(r.residuals, vec![(5, "4".to_string())]);
        assert!(fit_quasi_quadratic(&s[..3]).is_err());
    }
}
