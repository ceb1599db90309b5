//! Brute-force census of all orientations, independent of the engines.

use rayon::prelude::*;
use serde::Serialize;

use crate::duality::{strong_duality, Certificate, StrongOptions};
use crate::error::{Error, Result};
use crate::star::{avoids, Star, StarFamily};
use crate::stree::find_guided_sink;
use crate::system::{Orientation, SeparationSystem};
use crate::universe::Sep;

pub const DEFAULT_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Avoiding,
    Tangle,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Census {
    pub total: u64,
    pub consistent: Vec<Orientation>,
    pub f_avoiding: Vec<Orientation>,
    pub f_tangles: Vec<Orientation>,
}

impl Census {
    pub fn listing(&self, mode: Mode) -> &[Orientation] {
        match mode {
            Mode::Avoiding => &self.f_avoiding,
            Mode::Tangle => &self.f_tangles,
        }
    }
}

/// The `index`-th full orientation: bit `i` set picks the inverse of the
/// `i`-th nondegenerate separation, otherwise its lower-id orientation.
pub fn orientation_at(sys: &SeparationSystem, reps: &[Sep], index: u64) -> Orientation {
    let picks = reps
        .iter()
        .enumerate()
        .map(|(i, &s)| if index >> i & 1 == 1 { sys.inv(s) } else { s })
        .chain(sys.degenerate().iter().copied());
    Orientation::new(picks)
}

/// One full orientation with its flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classified {
    pub orientation: Orientation,
    pub consistent: bool,
    pub avoiding: bool,
}

/// Every full orientation, in counter order. Fails with `TooLarge` above
/// `cap` nondegenerate separations.
pub fn classify(sys: &SeparationSystem, family: &StarFamily, cap: usize) -> Result<Vec<Classified>> {
    let reps: Vec<Sep> = sys.nondegenerate_separations().collect();
    if reps.len() > cap || reps.len() >= 64 {
        return Err(Error::TooLarge(reps.len(), cap));
    }
    Ok((0..1u64 << reps.len())
        .into_par_iter()
        .map(|i| {
            let orientation = orientation_at(sys, &reps, i);
            let consistent = sys.is_consistent(orientation.picks());
            let avoiding = avoids(orientation.picks(), family);
            Classified { orientation, consistent, avoiding }
        })
        .collect())
}

pub fn enumerate(sys: &SeparationSystem, family: &StarFamily, cap: usize) -> Result<Census> {
    let all = classify(sys, family, cap)?;
    let mut census = Census { total: all.len() as u64, ..Census::default() };
    for c in all {
        if c.consistent && c.avoiding {
            census.f_tangles.push(c.orientation.clone());
        }
        if c.consistent {
            census.consistent.push(c.orientation.clone());
        }
        if c.avoiding {
            census.f_avoiding.push(c.orientation);
        }
    }
    Ok(census)
}

/// Outcome of running the strong engine against the census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossReport {
    /// False when the engine hit `NotFSeparable`; nothing else is asserted then.
    pub hypothesis_met: bool,
    pub engine_found_tangle: bool,
    pub census_tangles: usize,
    pub agrees: bool,
    /// Consistent orientations whose guided sink star is not in `F` or not
    /// contained in them.
    pub sink_failures: usize,
}

pub fn cross_check(sys: &SeparationSystem, family: &StarFamily, cap: usize) -> Result<CrossReport> {
    let run = match strong_duality(sys, family, StrongOptions::default()) {
        Err(Error::NotFSeparable { .. }) => {
            return Ok(CrossReport {
                hypothesis_met: false,
                engine_found_tangle: false,
                census_tangles: 0,
                agrees: true,
                sink_failures: 0,
            })
        }
        r => r?,
    };
    let census = enumerate(sys, &run.family, cap)?;
    let mut sink_failures = 0;
    let agrees = match &run.certificate {
        Certificate::Orientation(o) => census.f_tangles.contains(o),
        Certificate::Tree(t) => {
            for o in &census.consistent {
                let star = Star::new(t.node_star(find_guided_sink(t, o)));
                if !run.family.contains(&star) || !star.is_subset_of(|s| o.contains(s)) {
                    sink_failures += 1;
                }
            }
            census.f_tangles.is_empty()
        }
    };
    Ok(CrossReport {
        hypothesis_met: true,
        engine_found_tangle: !run.certificate.is_tree(),
        census_tangles: census.f_tangles.len(),
        agrees: agrees && sink_failures == 0,
        sink_failures,
    })
}
