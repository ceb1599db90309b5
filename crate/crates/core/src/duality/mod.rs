//! Weak and strong duality: each engine returns an orientation of `S`
//! avoiding `F` (consistent, for the strong one) or an S-tree over `F`.

mod certificate;
mod shift;
mod strong;
mod weak;

use crate::star::StarFamily;
use crate::system::SeparationSystem;
use crate::universe::Sep;

pub use crate::star::{avoidance_witness, avoids};
pub use certificate::{verify_strong, verify_weak, Certificate, Check, Transcript};
pub use shift::{emulates, emulates_for_f, emulation_failure, find_separator, shift_map, shift_stree};
pub use strong::{strong_duality, ShiftRecord, StrongOptions, StrongRun};
pub use weak::weak_duality;

/// The separations `F` forces, the degenerate ones, and the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityState {
    /// `{ s : {s*} ∈ F }`, ascending.
    pub o_minus: Vec<Sep>,
    /// Degenerate members.
    pub degenerate: Vec<Sep>,
    /// Nondegenerate separations (least-id orientation) with neither
    /// orientation in `o_minus`.
    pub open: Vec<Sep>,
}

impl DualityState {
    pub fn new(sys: &SeparationSystem, family: &StarFamily) -> Self {
        let o_minus = family.forced(sys);
        let has = |s: Sep| o_minus.binary_search(&s).is_ok();
        let open = sys
            .nondegenerate_separations()
            .filter(|&s| !has(s) && !has(sys.inv(s)))
            .collect();
        DualityState { o_minus, degenerate: sys.degenerate().to_vec(), open }
    }

    pub fn forced(&self, s: Sep) -> bool {
        self.o_minus.binary_search(&s).is_ok()
    }

    /// The least `s` with both orientations forced.
    pub fn symmetric_pair(&self, sys: &SeparationSystem) -> Option<Sep> {
        self.o_minus.iter().copied().find(|&s| self.forced(sys.inv(s)))
    }

    /// `O⁻ ∪ D`, ascending.
    pub fn forced_and_degenerate(&self) -> Vec<Sep> {
        let mut v: Vec<Sep> = self.o_minus.iter().chain(&self.degenerate).copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// `F ∪ { {r*} : r trivial in S }`.
pub fn standardize(family: &StarFamily, sys: &SeparationSystem) -> StarFamily {
    let mut f = family.clone();
    for r in sys.trivial_members() {
        f.insert(crate::star::Star::singleton(sys.inv(r)));
    }
    f
}

/// The least trivial member `F` does not force.
pub fn first_unforced_trivial(family: &StarFamily, sys: &SeparationSystem) -> Option<Sep> {
    sys.trivial_members().into_iter().find(|&r| !family.forces(sys, r))
}
