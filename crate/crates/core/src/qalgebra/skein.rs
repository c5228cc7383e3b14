use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::laurent::{LaurentPoly, Var};
use crate::error::{Error, Result};

/// `[n] = A^(2n) + A^(2n-4) + ... + A^(-2n)`.
pub fn quantum_int(n: u32) -> LaurentPoly {
    let n = n as i32;
    LaurentPoly::from_terms(Var::A, (0..=n).map(|k| (2 * n - 4 * k, 1)))
}

/// Closed Jones-Wenzl loop value `(-1)^n [n]`.
pub fn delta(n: u32) -> LaurentPoly {
    let q = quantum_int(n);
    if n % 2 == 1 {
        -q
    } else {
        q
    }
}

/// The loop value `-A^2 - A^-2`.
pub fn loop_value() -> LaurentPoly {
    delta(1)
}

/// `Δ_1 Δ_2 ... Δ_k`, with the empty product for `k <= 0`.
pub fn delta_factorial(k: i64) -> LaurentPoly {
    let mut out = LaurentPoly::one(Var::A);
    for i in 1..=k.max(0) {
        out = &out * &delta(i as u32);
    }
    out
}

pub fn is_admissible(a: i64, b: i64, c: i64) -> bool {
    a >= 0 && b >= 0 && c >= 0 && (a + b + c) % 2 == 0 && (a - b).abs() <= c && c <= a + b
}

/// Numerator and denominator of the theta-graph evaluation with edge colors `a, b, c`, as
/// products of Δ-factorials.
pub fn theta_fraction(a: i64, b: i64, c: i64) -> Result<(LaurentPoly, LaurentPoly)> {
    if !is_admissible(a, b, c) {
        return Err(Error::Admissibility { a, b, c });
    }
    let x = (a + b - c) / 2;
    let y = (b + c - a) / 2;
    let z = (a + c - b) / 2;
    let num = &(&delta_factorial(x + y + z) * &delta_factorial(x - 1))
        * &(&delta_factorial(y - 1) * &delta_factorial(z - 1));
    let den =
        &(&delta_factorial(y + z - 1) * &delta_factorial(z + x - 1)) * &delta_factorial(x + y - 1);
    Ok((num, den))
}

/// Theta-graph evaluation with edge colors `a, b, c`.
///
/// The quotient is only a Laurent polynomial for some triples (`(2,2,2)` already gives
/// `Δ_2 Δ_3 / Δ_1^2`); the others fail with an inexact-division error.
pub fn theta(a: i64, b: i64, c: i64) -> Result<LaurentPoly> {
    let (num, den) = theta_fraction(a, b, c)?;
    num.div_exact(&den)
}

/// Coefficients of `S_m(x)` with `S_0 = 1`, `S_1 = x`, `S_{m+1} = x S_m - S_{m-1}`.
pub fn chebyshev_coeffs(m: u32) -> BTreeMap<u32, BigInt> {
    let mut prev: BTreeMap<u32, BigInt> = BTreeMap::new();
    let mut cur: BTreeMap<u32, BigInt> = [(0, BigInt::one())].into();
    for _ in 0..m {
        let mut next: BTreeMap<u32, BigInt> = BTreeMap::new();
        for (j, c) in &cur {
            *next.entry(j + 1).or_default() += c;
        }
        for (j, c) in &prev {
            *next.entry(*j).or_default() -= c;
        }
        next.retain(|_, c| *c != BigInt::default());
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Var::A, terms.iter().copied())
    }

    #[test]
    fn quantum_integers_small() {
        assert_eq!(quantum_int(0), a(&[(0, 1)]));
        assert_eq!(quantum_int(1), a(&[(2, 1), (-2, 1)]));
        assert_eq!(quantum_int(2), a(&[(4, 1), (0, 1), (-4, 1)]));
    }

    #[test]
    fn quantum_int_matches_defining_quotient() {
        let den = a(&[(2, 1), (-2, -1)]);
        for n in 0..=32 {
            let e = 2 * (n as i32 + 1);
            let num = a(&[(e, 1), (-e, -1)]);
            assert_eq!(num.div_exact(&den).unwrap(), quantum_int(n));
            assert_eq!(quantum_int(n).max_deg(), Some(2 * n as i32));
        }
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta(0), a(&[(0, 1)]));
        assert_eq!(delta(1), a(&[(2, -1), (-2, -1)]));
        assert_eq!(delta(2), a(&[(4, 1), (0, 1), (-4, 1)]));
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(0, 0, 0).unwrap(), a(&[(0, 1)]));
        assert_eq!(theta(1, 1, 2).unwrap(), a(&[(4, 1), (0, 1), (-4, 1)]));
        for n in 0..=6 {
            assert_eq!(theta(n, n, 0).unwrap(), delta(n as u32));
        }
        assert!(matches!(theta(1, 1, 1), Err(Error::Admissibility { .. })));
        assert!(matches!(theta(1, 4, 1), Err(Error::Admissibility { .. })));
    }

    #[test]
    fn chebyshev_examples() {
        let m0: BTreeMap<u32, BigInt> = [(0, 1.into())].into();
        let m2: BTreeMap<u32, BigInt> = [(2, 1.into()), (0, (-1).into())].into();
        let m4: BTreeMap<u32, BigInt> = [(4, 1.into()), (2, (-3).into()), (0, 1.into())].into();
        assert_eq!(chebyshev_coeffs(0), m0);
        assert_eq!(chebyshev_coeffs(2), m2);
        assert_eq!(chebyshev_coeffs(4), m4);
    }
}
