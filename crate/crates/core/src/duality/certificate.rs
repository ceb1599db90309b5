//! Certificates and their independent re-verification.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::star::{avoidance_witness, StarFamily};
use crate::stree::{node_not_over, validate_stree, STree};
use crate::system::{Orientation, SeparationSystem};

/// One side of a duality theorem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// An orientation of `S` avoiding `F` (consistent, for strong duality).
    Orientation(Orientation),
    /// An S-tree over `F`.
    Tree(STree),
}

impl Certificate {
    pub fn is_tree(&self) -> bool {
        matches!(self, Certificate::Tree(_))
    }

    pub fn tree(&self) -> Option<&STree> {
        match self {
            Certificate::Tree(t) => Some(t),
            Certificate::Orientation(_) => None,
        }
    }

    pub fn orientation(&self) -> Option<&Orientation> {
        match self {
            Certificate::Orientation(o) => Some(o),
            Certificate::Tree(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
}

/// The checks that ran, in order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Transcript(pub Vec<Check>);

impl Transcript {
    fn push(&mut self, name: &'static str, passed: bool) -> bool {
        self.0.push(Check { name, passed });
        passed
    }

    pub fn all_passed(&self) -> bool {
        self.0.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        self.0.iter().find(|c| !c.passed).map(|c| c.name)
    }
}

fn verify(sys: &SeparationSystem, family: &StarFamily, cert: &Certificate, consistent: bool) -> Result<Transcript> {
    let mut tr = Transcript::default();
    match cert {
        Certificate::Orientation(o) => {
            tr.push("orientation of S", sys.is_orientation(o.picks()));
            if consistent {
                tr.push("consistent", sys.is_consistent(o.picks()));
            }
            tr.push("avoids F", avoidance_witness(o.picks(), family).is_none());
        }
        Certificate::Tree(t) => {
            let report = validate_stree(t, sys)?;
            tr.push("S-tree", report.is_stree);
            tr.push("over stars", report.is_over_stars);
            tr.push("over F", node_not_over(t, family).is_none());
        }
    }
    Ok(tr)
}

/// Re-checks a weak duality certificate from the definitions.
pub fn verify_weak(sys: &SeparationSystem, family: &StarFamily, cert: &Certificate) -> Result<Transcript> {
    verify(sys, family, cert, false)
}

/// Re-checks a strong duality certificate: an F-tangle, or an S-tree over `F`.
pub fn verify_strong(sys: &SeparationSystem, family: &StarFamily, cert: &Certificate) -> Result<Transcript> {
    verify(sys, family, cert, true)
}

pub(crate) fn require(tr: Transcript) -> Result<Transcript> {
    match tr.first_failure() {
        None => Ok(tr),
        Some(name) => Err(Error::InternalInvariant(format!("certificate check failed: {name}"))),
    }
}
