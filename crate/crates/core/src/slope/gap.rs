use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qalgebra::minimal_partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapQuery {
    pub omega: i64,
    pub t: usize,
    pub r: i64,
    /// Number of split strands.
    pub c_split: u64,
}

/// The three linear terms that appear for the fused twist region.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GapVariant {
    /// `2c r`, the displayed form.
    Displayed,
    /// `2c (r - 1)`.
    RMinusOne,
    /// `2c (r + 1)`.
    RPlusOne,
}

/// `-(sum (omega-2)(2m^2+2m) + 4m^2) - (r (2c)^2 / 2 + 2c r)` over a minimal partition
/// `m` of the split strands into `t` paths.
pub fn gap_bound(q: &GapQuery) -> Result<BigRational> {
    gap_bound_variant(q, GapVariant::Displayed)
}

pub fn gap_bound_variant(q: &GapQuery, variant: GapVariant) -> Result<BigRational> {
    if q.t < 1 || q.omega < 2 {
        return Err(Error::Argument(format!(
            "need t >= 1 and omega >= 2, got t = {}, omega = {}",
            q.t, q.omega
        )));
    }
    let parts = minimal_partition(q.c_split, q.t)?;
    let om = BigInt::from(q.omega - 2);
    let mut paths = BigInt::from(0);
    for &m in &parts.parts {
        let m = BigInt::from(m);
        paths += &om * (&m * &m * 2 + &m * 2) + &m * &m * 4;
    }
    let c2 = BigInt::from(2 * q.c_split);
    let r = BigInt::from(q.r);
    let lin_r = match variant {
        GapVariant::Displayed => r.clone(),
        GapVariant::RMinusOne => &r - 1,
        GapVariant::RPlusOne => &r + 1,
    };
    let quad = BigRational::new(&r * &c2 * &c2, BigInt::from(2));
    let fused = quad + BigRational::from_integer(&c2 * lin_r);
    Ok(-BigRational::from_integer(paths) - fused)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn worked_value() {
        let q = GapQuery {
            omega: 7,
            t: 3,
            r: -2,
            c_split: 1,
        };
        assert_eq!(
            gap_bound(&q).unwrap(),
            BigRational::from_integer((-16).into())
        );
        let z = GapQuery { c_split: 0, ..q };
        assert!(gap_bound(&z).unwrap().is_zero());
    }

    #[test]
    fn invalid_query() {
        assert!(gap_bound(&GapQuery {
            omega: 1,
            t: 3,
            r: -2,
            c_split: 1
        })
        .is_err());
        assert!(gap_bound(&GapQuery {
            omega: 7,
            t: 0,
            r: -2,
            c_split: 1
        })
        .is_err());
    }
}
