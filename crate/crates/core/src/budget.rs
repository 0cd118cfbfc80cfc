use std::time::{Duration, Instant};

use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("time budget of {0:?} exceeded")]
pub struct Timeout(pub Duration);

/// Wall-clock allowance checked cooperatively by long computations.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    // `None` for unlimited budgets, which never read the clock (so they also
    // work on targets without one, such as wasm32-unknown-unknown).
    clock: Option<(Instant, Duration)>,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget { clock: None }
    }

    pub fn new(limit: Duration) -> Budget {
        Budget {
            clock: Some((Instant::now(), limit)),
        }
    }

    pub fn from_millis(ms: Option<u64>) -> Budget {
        match ms {
            Some(ms) => Budget::new(Duration::from_millis(ms)),
            None => Budget::unlimited(),
        }
    }

    pub fn check(&self) -> Result<(), Timeout> {
        match self.clock {
            Some((start, limit)) if start.elapsed() > limit => Err(Timeout(limit)),
            _ => Ok(()),
        }
    }

    /// Time since creation; zero for unlimited budgets.
    pub fn elapsed(&self) -> Duration {
        self.clock.map_or(Duration::ZERO, |(start, _)| start.elapsed())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::unlimited()
    }
}
