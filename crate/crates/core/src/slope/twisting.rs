use serde::Serialize;

use crate::error::Result;
use crate::graphmodel::{
    add_full_twists, multi_twist_profile, MultiTwistProfile, WeightedPlanarGraph, DEFAULT_PATH_CAP,
};

const SEARCH_LIMIT: u32 = 1 << 24;

#[derive(Clone, Debug, Serialize)]
pub struct FullTwistThreshold {
    /// Smallest number of full twists after which `omega / t > |r| R` holds.
    pub m: Option<u32>,
    pub unbounded: bool,
    pub diagnosis: Option<String>,
    pub profile_at_m: Option<MultiTwistProfile>,
    /// Predicate one twist earlier; `None` when `m = 0`.
    pub predicate_before: Option<bool>,
}

fn holds(g: &WeightedPlanarGraph, m: u32) -> Result<bool> {
    Ok(multi_twist_profile(&add_full_twists(g, m), DEFAULT_PATH_CAP)?.predicate)
}

fn unbounded(why: String) -> FullTwistThreshold {
    FullTwistThreshold {
        m: None,
        unbounded: true,
        diagnosis: Some(why),
        profile_at_m: None,
        predicate_before: None,
    }
}

/// Smallest `m >= 0` such that adding `m` full twists to every positive edge satisfies the
/// multi-region predicate. `omega` grows linearly in `m` and `t`, `r`, `R` do not change, so
/// the predicate is monotone and doubling followed by bisection finds the threshold.
pub fn find_m_k(g: &WeightedPlanarGraph) -> Result<FullTwistThreshold> {
    let p0 = multi_twist_profile(g, DEFAULT_PATH_CAP)?;
    if p0.big_r == 0 {
        return Ok(unbounded("graph has no negative edge".into()));
    }
    if p0.t == 0 || p0.per_edge.iter().any(|e| e.omega_i.is_none()) {
        return Ok(unbounded(
            "some negative edge has no path between its ends once it is deleted".into(),
        ));
    }
    let m = if p0.predicate {
        0
    } else {
        let mut hi = 1u32;
        while !holds(g, hi)? {
            if hi >= SEARCH_LIMIT {
                return Ok(unbounded(format!(
                    "predicate still fails after {hi} full twists: a shortest path between the ends \
                     of a negative edge carries no positive edge, so omega does not grow"
                )));
            }
            hi *= 2;
        }
        let mut lo = hi / 2; // fails, or is 0 which already failed
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if holds(g, mid)? {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    };
    Ok(FullTwistThreshold {
        m: Some(m),
        unbounded: false,
        diagnosis: None,
        profile_at_m: Some(multi_twist_profile(
            &add_full_twists(g, m),
            DEFAULT_PATH_CAP,
        )?),
        predicate_before: if m == 0 { None } else { Some(holds(g, m - 1)?) },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn already_satisfied() {
        let g = WeightedPlanarGraph::pretzel(&[-2, 7, 7, 7]);
        let r = find_m_k(&g).unwrap();
        assert_eq!(r.m, Some(0));
        assert_eq!(r.predicate_before, None);
    }

    #[test]
    fn needs_twists() {
        // t = 3, omega = 5 against |r| R = 2
        let g = WeightedPlanarGraph::pretzel(&[-2, 5, 5, 5]);
        let r = find_m_k(&g).unwrap();
        assert_eq!(r.m, Some(1));
        assert_eq!(r.predicate_before, Some(false));
    }

    #[test]
    fn all_positive_is_unbounded() {
        let r = find_m_k(&WeightedPlanarGraph::pretzel(&[3, 3, 3])).unwrap();
        assert!(r.unbounded && r.m.is_none());
    }
}
