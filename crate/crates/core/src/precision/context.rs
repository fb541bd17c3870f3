use rug::Float;

use crate::error::{Error, Result};

/// Precision and truncation policy shared by every floating evaluation.
///
/// Results aim for a relative error of `2^-target_bits`; intermediate work is
/// carried at `target_bits + guard_bits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrecisionContext {
    target_bits: u32,
    guard_bits: u32,
    max_terms: usize,
    tail_confirm: usize,
}

pub const MIN_TARGET_BITS: u32 = 24;
pub const MIN_GUARD_BITS: u32 = 16;

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext {
            target_bits: 128,
            guard_bits: 64,
            max_terms: 10_000,
            tail_confirm: 3,
        }
    }
}

impl PrecisionContext {
    pub fn new(target_bits: u32) -> Result<Self> {
        if target_bits < MIN_TARGET_BITS {
            return Err(Error::InvalidArgument(format!(
                "target precision must be at least {MIN_TARGET_BITS} bits, got {target_bits}"
            )));
        }
        Ok(PrecisionContext { target_bits, ..Default::default() })
    }

    pub fn with_guard_bits(mut self, guard_bits: u32) -> Result<Self> {
        if guard_bits < MIN_GUARD_BITS {
            return Err(Error::InvalidArgument(format!(
                "guard bits must be at least {MIN_GUARD_BITS}, got {guard_bits}"
            )));
        }
        self.guard_bits = guard_bits;
        Ok(self)
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Result<Self> {
        if max_terms == 0 {
            return Err(Error::InvalidArgument("max_terms must be positive".into()));
        }
        self.max_terms = max_terms;
        Ok(self)
    }

    pub fn with_tail_confirm(mut self, tail_confirm: usize) -> Result<Self> {
        if tail_confirm == 0 {
            return Err(Error::InvalidArgument("tail_confirm must be positive".into()));
        }
        self.tail_confirm = tail_confirm;
        Ok(self)
    }

    pub fn target_bits(&self) -> u32 {
        self.target_bits
    }

    pub fn guard_bits(&self) -> u32 {
        self.guard_bits
    }

    pub fn working_bits(&self) -> u32 {
        self.target_bits + self.guard_bits
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    pub fn tail_confirm(&self) -> usize {
        self.tail_confirm
    }

    /// Same policy with `extra` more target bits.
    pub fn raised(&self, extra: u32) -> Self {
        PrecisionContext { target_bits: self.target_bits + extra, ..self.clone() }
    }

    /// Same policy aimed at `target_bits` exactly.
    pub fn retargeted(&self, target_bits: u32) -> Self {
        PrecisionContext {
            target_bits: target_bits.max(MIN_TARGET_BITS),
            ..self.clone()
        }
    }

    /// `2^-target_bits` at working precision.
    pub fn epsilon(&self) -> Float {
        Float::with_val(self.working_bits(), Float::i_exp(1, -(self.target_bits as i32)))
    }

    /// Decimal digits that identify a value at the target precision uniquely.
    pub fn round_trip_digits(&self) -> usize {
        1 + (self.target_bits as f64 * std::f64::consts::LOG10_2).ceil() as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_validation() {
        let c = PrecisionContext::default();
        assert_eq!((c.target_bits(), c.guard_bits(), c.max_terms(), c.tail_confirm()), (128, 64, 10_000, 3));
        assert_eq!(c.working_bits(), 192);
        assert!(PrecisionContext::new(23).is_err());
        assert!(PrecisionContext::new(24).is_ok());
        assert!(c.clone().with_guard_bits(15).is_err());
        assert!(c.clone().with_max_terms(0).is_err());
        assert_eq!(c.raised(64).target_bits(), 192);
        assert_eq!(c.epsilon().get_exp(), Some(-127));
    }
}
