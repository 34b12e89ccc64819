use serde::{Deserialize, Serialize};

use crate::error::{ModelError, Result};

/// Default ceiling on the number of traces in a bounded universe.
pub const UNIVERSE_CEILING: u64 = 5_000_000;

/// A finite model: `state_count` opaque states and traces of at most
/// `length_bound` steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ModelConfig {
    pub state_count: u8,
    pub length_bound: u8,
}

impl ModelConfig {
    pub fn new(state_count: u8, length_bound: u8) -> Result<Self> {
        if state_count == 0 {
            return Err(ModelError::Invalid("state_count must be at least 1".into()));
        }
        Ok(ModelConfig {
            state_count,
            length_bound,
        })
    }

    /// Exact size of the bounded trace universe.
    ///
    /// Per initial state there are (2N)^k step sequences of internal steps for
    /// each k <= L, plus 3 terminal variants appended to each sequence of
    /// length k-1.
    pub fn universe_size(&self) -> u64 {
        let n = self.state_count as u64;
        let l = self.length_bound as u32;
        let internal = 2 * n;
        let mut per_init: u64 = 0;
        let mut pow: u64 = 1; // internal^k
        for k in 0..=l {
            per_init = per_init.saturating_add(pow);
            if k < l {
                per_init = per_init.saturating_add(pow.saturating_mul(3));
            }
            pow = pow.saturating_mul(internal);
        }
        // terminal variants after the full-length internal prefix are not
        // possible (they would exceed L), except the length-L sequences that
        // *end* in a terminal, which were counted above via pow at k-1.
        per_init.saturating_mul(n)
    }

    pub fn check_capacity(&self) -> Result<()> {
        let size = self.universe_size();
        if size > UNIVERSE_CEILING {
            return Err(ModelError::Capacity {
                what: format!("trace universe for {self:?}"),
                needed: size,
                ceiling: UNIVERSE_CEILING,
            });
        }
        Ok(())
    }

    pub fn same_as(&self, other: &ModelConfig) -> Result<()> {
        if self != other {
            return Err(ModelError::ConfigMismatch(
                format!("{self:?}"),
                format!("{other:?}"),
            ));
        }
        Ok(())
    }
}
