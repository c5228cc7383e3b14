use num_bigint::BigInt;
use num_traits::Zero;

/// Coefficient ring for the sweep. Fixed-width types report overflow so the caller can
/// retry with a wider type.
pub(crate) trait Coef: Clone + Send + Sync + 'static {
    const NAME: &'static str;
    fn zero() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// `self += k * other`; false on overflow.
    fn add_mul(&mut self, other: &Self, k: i64) -> bool;
    fn to_big(&self) -> BigInt;
}

impl Coef for i64 {
    const NAME: &'static str = "i64";

    fn zero() -> Self {
        0
    }

    fn from_i64(v: i64) -> Self {
        v as Self
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    #[inline]
    fn add_mul(&mut self, other: &Self, k: i64) -> bool {
        match other.checked_mul(k).and_then(|p| self.checked_add(p)) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }

    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coef for i128 {
    const NAME: &'static str = "i128";

    fn zero() -> Self {
        0
    }

    fn from_i64(v: i64) -> Self {
        v as Self
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    #[inline]
    fn add_mul(&mut self, other: &Self, k: i64) -> bool {
        match other
            .checked_mul(k as i128)
            .and_then(|p| self.checked_add(p))
        {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }

    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coef for BigInt {
    const NAME: &'static str = "bigint";

    fn zero() -> Self {
        Zero::zero()
    }

    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add_mul(&mut self, other: &Self, k: i64) -> bool {
        match k {
            1 => *self += other,
            -1 => *self -= other,
            _ => *self += other * k,
        }
        true
    }

    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Dense Laurent polynomial on exponents `lo, lo + 2, ...`; every exponent in one sweep
/// state has the same parity.
#[derive(Clone, Debug)]
pub(crate) struct StridePoly<T> {
    pub lo: i32,
    pub c: Vec<T>,
}

impl<T: Coef> StridePoly<T> {
    pub fn one() -> Self {
        StridePoly {
            lo: 0,
            c: vec![T::from_i64(1)],
        }
    }

    pub fn empty_like(lo: i32) -> Self {
        StridePoly { lo, c: Vec::new() }
    }

    fn hi(&self) -> i32 {
        self.lo + 2 * (self.c.len() as i32 - 1)
    }

    fn reserve_range(&mut self, lo: i32, hi: i32) {
        if self.c.is_empty() {
            self.lo = lo;
            self.c = vec![T::zero(); ((hi - lo) / 2 + 1) as usize];
            return;
        }
        debug_assert_eq!((self.lo - lo).rem_euclid(2), 0);
        if lo < self.lo {
            let extra = ((self.lo - lo) / 2) as usize;
            let mut v = vec![T::zero(); extra];
            v.append(&mut self.c);
            self.c = v;
            self.lo = lo;
        }
        let cur_hi = self.hi();
        if hi > cur_hi {
            let extra = ((hi - cur_hi) / 2) as usize;
            self.c.extend(std::iter::repeat_with(T::zero).take(extra));
        }
    }

    /// `self += k * A^shift * src`; false on overflow.
    pub fn add_shifted(&mut self, src: &StridePoly<T>, shift: i32, k: i64) -> bool {
        if src.c.is_empty() {
            return true;
        }
        let lo = src.lo + shift;
        self.reserve_range(lo, src.hi() + shift);
        let off = ((lo - self.lo) / 2) as usize;
        for (dst, s) in self.c[off..off + src.c.len()].iter_mut().zip(&src.c) {
            if !dst.add_mul(s, k) {
                return false;
            }
        }
        true
    }

    /// Drops zero coefficients at both ends.
    pub fn trim(&mut self) {
        let start = self.c.iter().position(|x| !x.is_zero());
        match start {
            None => self.c.clear(),
            Some(s) => {
                let end = self.c.iter().rposition(|x| !x.is_zero()).unwrap();
                self.c.truncate(end + 1);
                self.c.drain(..s);
                self.lo += 2 * s as i32;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, BigInt)> + '_ {
        self.c
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(i, x)| (self.lo + 2 * i as i32, x.to_big()))
    }
}
