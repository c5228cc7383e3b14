use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Variable tag carried by a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    A,
    V,
    LowerA,
    Z,
    X,
    Y,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::A => "A",
            Var::V => "v",
            Var::LowerA => "a",
            Var::Z => "z",
            Var::X => "x",
            Var::Y => "y",
        }
    }

    pub fn parse(s: &str) -> Option<Var> {
        Some(match s {
            "A" => Var::A,
            "v" => Var::V,
            "a" => Var::LowerA,
            "z" => Var::Z,
            "x" => Var::X,
            "y" => Var::Y,
            _ => return None,
        })
    }
}

/// Sparse Laurent polynomial with big-integer coefficients.
///
/// Zero coefficients are never stored, so `==` is structural equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    var: Var,
    coeffs: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        LaurentPoly {
            var,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::monomial(var, 0, BigInt::one())
    }

    pub fn monomial(var: Var, exp: i32, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exp, &c.into());
        p
    }

    pub fn from_terms<C: Into<BigInt>>(
        var: Var,
        terms: impl IntoIterator<Item = (i32, C)>,
    ) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, &c.into());
        }
        p
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_deg(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_deg(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly {
            var: self.var,
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.var);
        }
        LaurentPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Substitutes `var -> new_var^(-1)`, e.g. `A = v^-1`.
    pub fn invert_var(&self, new_var: Var) -> Self {
        LaurentPoly {
            var: new_var,
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Substitutes `var -> var^k` for `k != 0`.
    pub fn substitute_power(&self, k: i32) -> Self {
        assert!(k != 0);
        LaurentPoly {
            var: self.var,
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e * k, c.clone()))
                .collect(),
        }
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    /// Value at `var = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Exact value at an integer point; negative exponents must divide evenly.
    pub fn eval_int(&self, x: &BigInt) -> Option<BigInt> {
        let mut num = BigInt::zero();
        let low = self.min_deg().unwrap_or(0).min(0);
        for (e, c) in &self.coeffs {
            num += c * num_traits::pow(x.clone(), (e - low) as usize);
        }
        let den = num_traits::pow(x.clone(), (-low) as usize);
        if den.is_zero() {
            return None;
        }
        let (q, r) = num.div_rem(&den);
        r.is_zero().then_some(q)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.var);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        out
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs
            .iter()
            .all(|(e, c)| self.coeffs.get(&-e) == Some(c))
    }

    /// Exact division; errors if the divisor does not divide `self`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (dmin, dmax) = match (divisor.min_deg(), divisor.max_deg()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::Internal("division by zero polynomial".into())),
        };
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero(self.var);
        let Some(floor) = rem.min_deg().map(|m| m - dmin) else {
            return Ok(quot);
        };
        let lead = divisor.coeffs[&dmax].clone();
        while let Some(rmax) = rem.max_deg() {
            let qe = rmax - dmax;
            if qe < floor {
                return Err(Error::Internal("inexact polynomial division".into()));
            }
            let (qc, r) = rem.coeffs[&rmax].div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::Internal("inexact polynomial division".into()));
            }
            for (e, c) in &divisor.coeffs {
                rem.add_term(e + qe, &-(c * &qc));
            }
            quot.add_term(qe, &qc);
        }
        Ok(quot)
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    fn check_var(&self, other: &LaurentPoly) {
        debug_assert!(
            self.var == other.var || self.is_zero() || other.is_zero(),
            "mixing variables {} and {}",
            self.var.name(),
            other.var.name()
        );
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let name = self.var.name();
            match (*e, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "{name}")?,
                (1, false) => write!(f, "{a}*{name}")?,
                (e, true) => write!(f, "{name}^{e}")?,
                (e, false) => write!(f, "{a}*{name}^{e}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.check_var(rhs);
        if self.is_zero() {
            self.var = rhs.var;
        }
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.check_var(rhs);
        if self.is_zero() {
            self.var = rhs.var;
        }
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, &-c);
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_var(rhs);
        let mut out = LaurentPoly::zero(self.var);
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    var: String,
    coeffs: BTreeMap<String, String>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        // keys in numeric order, so the JSON form is canonical and readable
        struct Coeffs<'a>(&'a BTreeMap<i32, BigInt>);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                use serde::ser::SerializeMap;
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (e, c) in self.0 {
                    m.serialize_entry(&e.to_string(), &c.to_string())?;
                }
                m.end()
            }
        }
        let mut st = s.serialize_struct("LaurentPoly", 2)?;
        st.serialize_field("var", self.var.name())?;
        st.serialize_field("coeffs", &Coeffs(&self.coeffs))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        let var = Var::parse(&repr.var).ok_or_else(|| D::Error::custom("unknown variable"))?;
        let mut p = LaurentPoly::zero(var);
        for (e, c) in repr.coeffs {
            let e: i32 = e.parse().map_err(D::Error::custom)?;
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            p.add_term(e, &c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Var::A, terms.iter().copied())
    }

    #[test]
    fn zero_coefficients_are_pruned() {
        let a = p(&[(2, 1), (-2, 1)]);
        let b = p(&[(2, -1)]);
        assert_eq!(&a + &b, p(&[(-2, 1)]));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = p(&[(2, 1), (-2, 1)]);
        let b = p(&[(4, 1), (0, -3), (-6, 2)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert!(b.div_exact(&a).is_err());
    }

    #[test]
    fn json_shape() {
        let a = p(&[(-4, 1), (0, -12)]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"var":"A","coeffs":{"-4":"1","0":"-12"}}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn display_is_descending() {
        let a = p(&[(-4, 1), (0, -12), (1, 1)]);
        assert_eq!(a.to_string(), "A - 12 + A^-4");
    }
}
