use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::laurent::{LaurentPoly, Var};

/// Two-variable Laurent polynomial, keyed by `(first exponent, second exponent)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiLaurentPoly {
    vars: (Var, Var),
    coeffs: BTreeMap<(i32, i32), BigInt>,
}

impl BiLaurentPoly {
    pub fn zero(vars: (Var, Var)) -> Self {
        BiLaurentPoly {
            vars,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(vars: (Var, Var)) -> Self {
        Self::monomial(vars, 0, 0, 1)
    }

    pub fn monomial(vars: (Var, Var), e1: i32, e2: i32, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(e1, e2, &c.into());
        p
    }

    pub fn from_terms<C: Into<BigInt>>(
        vars: (Var, Var),
        terms: impl IntoIterator<Item = ((i32, i32), C)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for ((e1, e2), c) in terms {
            p.add_term(e1, e2, &c.into());
        }
        p
    }

    pub fn vars(&self) -> (Var, Var) {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i32, i32), &BigInt)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, e1: i32, e2: i32) -> BigInt {
        self.coeffs.get(&(e1, e2)).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e1: i32, e2: i32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry((e1, e2)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&(e1, e2));
        }
    }

    pub fn shift(&self, d1: i32, d2: i32) -> Self {
        BiLaurentPoly {
            vars: self.vars,
            coeffs: self
                .coeffs
                .iter()
                .map(|((a, b), c)| ((a + d1, b + d2), c.clone()))
                .collect(),
        }
    }

    /// Substitutes the first variable by its inverse.
    pub fn invert_first(&self) -> Self {
        BiLaurentPoly {
            vars: self.vars,
            coeffs: self
                .coeffs
                .iter()
                .map(|((a, b), c)| ((-a, *b), c.clone()))
                .collect(),
        }
    }

    pub fn min_second(&self) -> Option<i32> {
        self.coeffs.keys().map(|k| k.1).min()
    }

    pub fn max_second(&self) -> Option<i32> {
        self.coeffs.keys().map(|k| k.1).max()
    }

    /// Coefficient of `second^k` as a polynomial in the first variable.
    pub fn coeff_of_second(&self, k: i32) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.vars.0,
            self.coeffs
                .iter()
                .filter(|((_, b), _)| *b == k)
                .map(|((a, _), c)| (*a, c.clone())),
        )
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.vars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl fmt::Debug for BiLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BiLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let (x, y) = (self.vars.0.name(), self.vars.1.name());
        let mut first = true;
        for ((a, b), c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mut parts = Vec::new();
            if !abs.is_one() || (*a == 0 && *b == 0) {
                parts.push(abs.to_string());
            }
            for (name, e) in [(x, *a), (y, *b)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    e => parts.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl AddAssign<&BiLaurentPoly> for BiLaurentPoly {
    fn add_assign(&mut self, rhs: &BiLaurentPoly) {
        for ((a, b), c) in &rhs.coeffs {
            self.add_term(*a, *b, c);
        }
    }
}

impl SubAssign<&BiLaurentPoly> for BiLaurentPoly {
    fn sub_assign(&mut self, rhs: &BiLaurentPoly) {
        for ((a, b), c) in &rhs.coeffs {
            self.add_term(*a, *b, &-c);
        }
    }
}

impl<'a> Add<&'a BiLaurentPoly> for &'a BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn add(self, rhs: &BiLaurentPoly) -> BiLaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a BiLaurentPoly> for &'a BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn sub(self, rhs: &BiLaurentPoly) -> BiLaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a BiLaurentPoly> for &'a BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn mul(self, rhs: &BiLaurentPoly) -> BiLaurentPoly {
        let mut out = BiLaurentPoly::zero(self.vars);
        for ((a1, b1), c1) in &self.coeffs {
            for ((a2, b2), c2) in &rhs.coeffs {
                out.add_term(a1 + a2, b1 + b2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &BiLaurentPoly {
    type Output = BiLaurentPoly;
    fn neg(self) -> BiLaurentPoly {
        BiLaurentPoly {
            vars: self.vars,
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Serialize for BiLaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::{SerializeMap, SerializeStruct};
        struct Coeffs<'a>(&'a BTreeMap<(i32, i32), BigInt>);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for ((a, b), c) in self.0 {
                    m.serialize_entry(&format!("{a},{b}"), &c.to_string())?;
                }
                m.end()
            }
        }
        let mut st = s.serialize_struct("BiLaurentPoly", 2)?;
        st.serialize_field("vars", &[self.vars.0.name(), self.vars.1.name()])?;
        st.serialize_field("coeffs", &Coeffs(&self.coeffs))?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const AZ: (Var, Var) = (Var::LowerA, Var::Z);

    #[test]
    fn arithmetic_prunes_and_multiplies() {
        let a = BiLaurentPoly::from_terms(AZ, [((1, 0), 1), ((-1, 0), 1)]);
        let b = BiLaurentPoly::from_terms(AZ, [((0, -1), 1)]);
        let mu = &(&a * &b) - &BiLaurentPoly::one(AZ);
        assert_eq!(mu.coeff(1, -1), BigInt::from(1));
        assert_eq!(mu.coeff(0, 0), BigInt::from(-1));
        assert!((&mu - &mu).is_zero());
        assert_eq!(a.invert_first(), a);
    }

    #[test]
    fn coefficient_extraction() {
        let p = BiLaurentPoly::from_terms(AZ, [((1, 2), 3), ((-1, 2), 1), ((0, 0), 5)]);
        let c = p.coeff_of_second(2);
        assert_eq!(c, LaurentPoly::from_terms(Var::LowerA, [(1, 3), (-1, 1)]));
        assert_eq!(p.max_second(), Some(2));
    }
}
