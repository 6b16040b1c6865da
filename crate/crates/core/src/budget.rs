use crate::error::{Error, Result};

/// Explicit limits for every exhaustive routine.
///
/// `max_dim` bounds algebra dimensions accepted by constructors and loaders,
/// `enumeration_cap` bounds the number of elements any single scan may visit.
/// `deterministic` makes parallel searches report the scan-order-minimal
/// witness instead of whichever worker finishes first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_dim: usize,
    pub enumeration_cap: u64,
    pub deterministic: bool,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_dim: 64,
            enumeration_cap: 1 << 24,
            deterministic: true,
        }
    }
}

impl Budget {
    pub fn with_cap(cap: u64) -> Self {
        Budget {
            enumeration_cap: cap,
            ..Budget::default()
        }
    }

    pub fn check_dim(&self, what: &str, dim: usize) -> Result<()> {
        if dim > self.max_dim {
            Err(Error::cap(format!("{what} dimension"), dim, self.max_dim))
        } else {
            Ok(())
        }
    }

    /// Returns p^exponent when it fits within the enumeration cap.
    pub fn check_enumeration(&self, what: &str, p: u32, exponent: usize) -> Result<u64> {
        match power(p, exponent) {
            Some(n) if n <= self.enumeration_cap => Ok(n),
            _ => Err(Error::cap(what, format!("{p}^{exponent}"), self.enumeration_cap)),
        }
    }

    pub fn allows(&self, p: u32, exponent: usize) -> bool {
        matches!(power(p, exponent), Some(n) if n <= self.enumeration_cap)
    }
}

pub(crate) fn power(p: u32, exponent: usize) -> Option<u64> {
    let e = u32::try_from(exponent).ok()?;
    (p as u64).checked_pow(e)
}
