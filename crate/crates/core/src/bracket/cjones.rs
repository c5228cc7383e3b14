use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::{bracket_with_stats, BracketStats, EngineConfig};
use crate::diagram::{cable_components, LinkDiagram};
use crate::error::{Error, Result};
use crate::qalgebra::{chebyshev_coeffs, delta, LaurentPoly, Var};

/// Brackets of cables of one diagram, keyed by the per-component multiplicities.
#[derive(Default)]
pub struct CableCache {
    brackets: BTreeMap<Vec<u32>, (LaurentPoly, BracketStats)>,
}

impl CableCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.brackets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.brackets.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CableStat {
    pub multiplicities: Vec<u32>,
    pub coefficient: String,
    #[serde(flatten)]
    pub bracket: BracketStats,
}

#[derive(Clone, Debug, Serialize)]
pub struct ColoredJones {
    pub n: u32,
    pub writhe: i64,
    /// Unreduced, in `v`.
    pub poly: LaurentPoly,
    /// Divided by the unknot value `(-1)^(n-1) [n-1]`.
    pub reduced: LaurentPoly,
    pub cables: Vec<CableStat>,
}

/// `J_O(v, n) = (-1)^(n-1) [n-1]`.
pub fn unknot_colored_jones(n: u32) -> LaurentPoly {
    delta(n.saturating_sub(1)).invert_var(Var::V)
}

fn expansion_terms(n: u32, comps: usize) -> Vec<(Vec<u32>, BigInt)> {
    let cheb: Vec<(u32, BigInt)> = chebyshev_coeffs(n - 1).into_iter().collect();
    let mut terms = vec![(Vec::new(), BigInt::from(1))];
    for _ in 0..comps {
        let mut next = Vec::with_capacity(terms.len() * cheb.len());
        for (js, c) in &terms {
            for (j, cj) in &cheb {
                let mut js2 = js.clone();
                js2.push(*j);
                next.push((js2, c * cj));
            }
        }
        terms = next;
    }
    terms
}

/// Colored Jones polynomial: every component decorated by the closed Jones-Wenzl idempotent,
/// expanded into plain cables through the Chebyshev coefficients of `S_(n-1)`, with the
/// framing factor `((-1)^(n-1) v^(n^2-1))^writhe` and `A = v^-1`.
pub fn colored_jones_cached(
    d: &LinkDiagram,
    n: u32,
    cfg: &EngineConfig,
    cache: &mut CableCache,
) -> Result<ColoredJones> {
    if n < 2 {
        return Err(Error::Argument(format!(
            "colour n = {n} must be at least 2"
        )));
    }
    let terms = expansion_terms(n, d.num_components());
    let missing: Vec<Vec<u32>> = terms
        .iter()
        .map(|(js, _)| js.clone())
        .filter(|js| !cache.brackets.contains_key(js))
        .collect();
    type Computed = (Vec<u32>, Result<(LaurentPoly, BracketStats)>);
    let computed: Vec<Computed> = missing
        .into_par_iter()
        .map(|js| {
            let r = cable_components(d, &js).and_then(|c| bracket_with_stats(&c, cfg));
            (js, r)
        })
        .collect();
    for (js, r) in computed {
        cache.brackets.insert(js, r?);
    }
    let mut sum = LaurentPoly::zero(Var::A);
    let mut cables = Vec::new();
    for (js, c) in &terms {
        let (b, stats) = &cache.brackets[js];
        sum += &b.scale(c);
        cables.push(CableStat {
            multiplicities: js.clone(),
            coefficient: c.to_string(),
            bracket: stats.clone(),
        });
    }
    let w = d.writhe();
    let sign = if (n - 1) % 2 == 1 && w.rem_euclid(2) == 1 {
        -1
    } else {
        1
    };
    let framing_a = -((n * n - 1) as i64 * w) as i32;
    let poly = sum
        .shift(framing_a)
        .scale(&BigInt::from(sign))
        .invert_var(Var::V);
    let reduced = poly.div_exact(&unknot_colored_jones(n))?;
    Ok(ColoredJones {
        n,
        writhe: w,
        poly,
        reduced,
        cables,
    })
}

pub fn colored_jones(d: &LinkDiagram, n: u32, cfg: &EngineConfig) -> Result<LaurentPoly> {
    colored_jones_cached(d, n, cfg, &mut CableCache::new()).map(|j| j.poly)
}

pub fn reduced_colored_jones(d: &LinkDiagram, n: u32, cfg: &EngineConfig) -> Result<LaurentPoly> {
    colored_jones_cached(d, n, cfg, &mut CableCache::new()).map(|j| j.reduced)
}

/// One result per colour, sharing cable brackets between colours.
pub fn colored_jones_range(
    d: &LinkDiagram,
    ns: &[u32],
    cfg: &EngineConfig,
) -> Vec<Result<ColoredJones>> {
    let mut cache = CableCache::new();
    ns.iter()
        .map(|&n| colored_jones_cached(d, n, cfg, &mut cache))
        .collect()
}
