//! Wall-clock budget for exhaustive searches.

use std::time::{Duration, Instant};

use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("computation budget of {0:?} exhausted")]
pub struct BudgetExceeded(pub Duration);

/// An optional deadline. `check` is cheap enough to call in inner loops
/// every few thousand iterations.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    limit: Option<(Instant, Duration)>,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget { limit: None }
    }

    pub fn seconds(secs: f64) -> Budget {
        Budget::from_duration(Duration::from_secs_f64(secs.max(0.0)))
    }

    pub fn from_duration(d: Duration) -> Budget {
        Budget {
            limit: Some((Instant::now() + d, d)),
        }
    }

    pub fn check(&self) -> Result<(), BudgetExceeded> {
        match self.limit {
            Some((deadline, d)) if Instant::now() >= deadline => Err(BudgetExceeded(d)),
            _ => Ok(()),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expiry() {
        assert!(Budget::unlimited().check().is_ok());
        assert!(Budget::seconds(3600.0).check().is_ok());
        assert!(Budget::seconds(0.0).check().is_err());
    }
}
