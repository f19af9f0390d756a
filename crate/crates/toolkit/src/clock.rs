use std::time::{Duration, Instant};

use dandelion_core::Clock;

/// Wall clock measured from construction.
#[derive(Debug, Clone, Copy)]
pub struct InstantClock(Instant);

impl InstantClock {
    pub fn start() -> Self {
        InstantClock(Instant::now())
    }
}

impl Clock for InstantClock {
    fn elapsed(&self) -> Duration {
        self.0.elapsed()
    }
}
