use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// The prime field F_p with p < 2^16.
///
/// Elements are plain `u32` values in `[0, p)`; a product of two reduced
/// values fits in a `u32` and sums of up to 2^32 such products fit in a `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub const MAX_MODULUS: u64 = 1 << 16;

    pub fn new(p: u64) -> Result<Self> {
        if p >= Self::MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn reduce_u64(&self, v: u64) -> u32 {
        (v % self.p as u64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0 && a < self.p);
        self.pow(a, self.p as u64 - 2)
    }

    /// Checks that a value is already a canonical representative.
    pub fn check_reduced(&self, v: u64) -> Result<u32> {
        if v < self.p as u64 {
            Ok(v as u32)
        } else {
            Err(Error::NotReduced { value: v, p: self.p })
        }
    }

    pub(crate) fn same(&self, other: &PrimeField) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.p, other.p))
        }
    }
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.p)
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// Trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_small_values() {
        assert_eq!(PrimeField::new(0), Err(Error::NotPrime(0)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert_eq!(PrimeField::new(9), Err(Error::NotPrime(9)));
        assert_eq!(PrimeField::new(65537), Err(Error::ModulusTooLarge(65537)));
        assert!(PrimeField::new(65521).is_ok());
    }

    #[test]
    fn inverses() {
        for p in [2u64, 3, 5, 7, 65521] {
            let f = PrimeField::new(p).unwrap();
            for a in 1..(p.min(500) as u32) {
                assert_eq!(f.mul(a, f.inv(a)), 1, "p={p} a={a}");
            }
        }
    }

    #[test]
    fn arithmetic_wraps() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.add(4, 3), 2);
        assert_eq!(f.sub(1, 3), 3);
        assert_eq!(f.neg(0), 0);
        assert_eq!(f.neg(2), 3);
        assert_eq!(f.reduce(-7), 3);
    }
}
