//! Thread-local phase timers feeding the CLI run reports. Recording is a
//! no-op on wasm targets, which lack a monotonic clock.

use std::cell::RefCell;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Parse,
    Groebner,
    Heights,
    Identities,
    Reduction,
}

#[derive(Debug, Default, Clone, Copy, PartialEq)]
pub struct PhaseMillis {
    pub parse: f64,
    pub groebner: f64,
    pub heights: f64,
    pub identities: f64,
    pub reduction: f64,
}

thread_local! {
    static ACCUM: RefCell<PhaseMillis> = RefCell::new(PhaseMillis::default());
}

pub fn reset() {
    ACCUM.with(|a| *a.borrow_mut() = PhaseMillis::default());
}

pub fn snapshot() -> PhaseMillis {
    ACCUM.with(|a| *a.borrow())
}

pub struct Guard {
    phase: Phase,
    #[cfg(not(target_arch = "wasm32"))]
    started: std::time::Instant,
}

/// Starts a scoped timer; the elapsed time is added to the phase bucket
/// when the guard drops.
pub fn start(phase: Phase) -> Guard {
    Guard {
        phase,
        #[cfg(not(target_arch = "wasm32"))]
        started: std::time::Instant::now(),
    }
}

impl Drop for Guard {
    fn drop(&mut self) {
        #[cfg(not(target_arch = "wasm32"))]
        {
            let ms = self.started.elapsed().as_secs_f64() * 1e3;
            ACCUM.with(|a| {
                let mut acc = a.borrow_mut();
                match self.phase {
                    Phase::Parse => acc.parse += ms,
                    Phase::Groebner => acc.groebner += ms,
                    Phase::Heights => acc.heights += ms,
                    Phase::Identities => acc.identities += ms,
                    Phase::Reduction => acc.reduction += ms,
                }
            });
        }
        #[cfg(target_arch = "wasm32")]
        {
            let _ = self.phase;
        }
    }
}
