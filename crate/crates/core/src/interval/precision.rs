use super::IntervalError;

/// Working mantissa length in bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Precision(u32);

impl Precision {
    pub const MIN_BITS: u32 = 32;

    pub fn new(bits: u32) -> Result<Self, IntervalError> {
        if bits < Self::MIN_BITS {
            return Err(IntervalError::PrecisionTooSmall(bits));
        }
        Ok(Self(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn plus(self, extra: u32) -> Self {
        Self(self.0.saturating_add(extra))
    }

    pub fn doubled(self) -> Self {
        Self(self.0.saturating_mul(2))
    }
}

impl Default for Precision {
    fn default() -> Self {
        Self(128)
    }
}

/// Start at `start` bits, double while the answer is undecided, give up past
/// `cap`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdaptivePrecision {
    pub start: Precision,
    pub cap: Precision,
}

impl Default for AdaptivePrecision {
    fn default() -> Self {
        Self {
            start: Precision(128),
            cap: Precision(32768),
        }
    }
}

impl AdaptivePrecision {
    pub fn new(start: Precision, cap: Precision) -> Result<Self, IntervalError> {
        if start > cap {
            return Err(IntervalError::PrecisionRange {
                start: start.bits(),
                cap: cap.bits(),
            });
        }
        Ok(Self { start, cap })
    }

    /// Runs `attempt` at increasing precision until it returns `Some`.
    ///
    /// Returns the decided value with the precision that decided it, or the
    /// last precision tried when the cap was reached undecided.
    pub fn run<T>(
        &self,
        mut attempt: impl FnMut(Precision) -> Option<T>,
    ) -> Result<(T, Precision), Precision> {
        let mut prec = self.start;
        loop {
            if let Some(v) = attempt(prec) {
                return Ok((v, prec));
            }
            if prec >= self.cap {
                return Err(prec);
            }
            prec = prec.doubled().min(self.cap);
        }
    }
}
