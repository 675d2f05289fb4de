//! The homological test that distinguishes contact surgeries on the same
//! link with different stabilization choices.
//!
//! For each component the two choices differ by a relative Chern number
//! `2 * (p1 - p2)`. If the component's class is torsion the structures are
//! non-isotopic exactly when that number is nonzero; if the class is
//! non-torsion with divisibility `d`, exactly when it is nonzero modulo
//! `d`. One witnessing component suffices. The test needs a symplectic
//! filling or a non-vanishing plus-class to transport the Chern data, so
//! callers must say which hypothesis they are working under; the Stein
//! variant compares rotation numbers directly instead.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::ClassInfo;
use crate::legendrian::{relative_chern, LegendrianError, StabilizationProfile};

/// Failure modes of the comparison layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriterionError {
    /// The gcd test does not apply under the Stein hypothesis; rotation
    /// numbers carry the information there.
    #[error("the stein-s3 hypothesis compares rotation numbers; use stein_decide")]
    SteinNeedsRotations,

    /// Rotation lists must pair up elementwise.
    #[error("rotation lists have lengths {left} and {right}")]
    RotationLengthMismatch { left: usize, right: usize },

    /// There is nothing to compare.
    #[error("no components to compare")]
    NoComponents,

    /// Divisibility data must be a positive integer.
    #[error("non-torsion divisor {d} is not positive")]
    InvalidDivisor { d: i64 },

    #[error(transparent)]
    Profile(#[from] LegendrianError),
}

/// Geometric setting that licenses the comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Hypothesis {
    /// Both structures admit weak symplectic fillings.
    #[serde(rename = "weakly-fillable")]
    WeaklyFillable,
    /// Both structures have non-vanishing Heegaard Floer plus-class.
    #[serde(rename = "c-plus")]
    NonVanishingCPlus,
    /// Surgery on a link in the standard three-sphere, compared through
    /// the Stein domains it bounds.
    #[serde(rename = "stein-s3")]
    SteinS3,
}

/// One link component readied for the test: the shared stabilization
/// total, the two positive counts, and the divisibility class of the
/// component in the ambient homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentComparison {
    s: u32,
    p1: u32,
    p2: u32,
    class_info: ClassInfo,
}

impl ComponentComparison {
    pub fn new(s: u32, p1: u32, p2: u32, class_info: ClassInfo) -> Result<Self, CriterionError> {
        StabilizationProfile::new(s, p1)?;
        StabilizationProfile::new(s, p2)?;
        if let ClassInfo::NonTorsion(d) = class_info {
            if d < 1 {
                return Err(CriterionError::InvalidDivisor { d });
            }
        }
        Ok(ComponentComparison { s, p1, p2, class_info })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn p1(&self) -> u32 {
        self.p1
    }

    pub fn p2(&self) -> u32 {
        self.p2
    }

    pub fn class_info(&self) -> ClassInfo {
        self.class_info
    }

    /// Relative Chern number of the two choices on this component.
    pub fn chern_difference(&self) -> i64 {
        let a = StabilizationProfile::new(self.s, self.p1).expect("validated");
        let b = StabilizationProfile::new(self.s, self.p2).expect("validated");
        relative_chern(a, b).expect("equal totals")
    }
}

/// Outcome of a comparison. `NotIsotopic` always names at least one
/// witnessing component index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    NotIsotopic { witnesses: Vec<usize> },
    Inconclusive,
}

impl Verdict {
    pub fn is_not_isotopic(&self) -> bool {
        matches!(self, Verdict::NotIsotopic { .. })
    }
}

/// Whether this single component already distinguishes the two structures.
///
/// Torsion class: the relative Chern number must be nonzero. Non-torsion
/// class with divisibility `d`: nonzero modulo `d`, so `d = 1` and `d = 2`
/// can never distinguish (the difference `2 * (p1 - p2)` is even).
pub fn decide_component(component: &ComponentComparison) -> bool {
    let diff = component.chern_difference();
    match component.class_info() {
        ClassInfo::Torsion => diff != 0,
        ClassInfo::NonTorsion(d) => diff.rem_euclid(d) != 0,
    }
}

/// Runs the test across all components under a fillability-type
/// hypothesis, collecting every witnessing index.
pub fn decide(components: &[ComponentComparison], hypothesis: Hypothesis) -> Result<Verdict, CriterionError> {
    if hypothesis == Hypothesis::SteinS3 {
        return Err(CriterionError::SteinNeedsRotations);
    }
    if components.is_empty() {
        return Err(CriterionError::NoComponents);
    }
    let witnesses: Vec<usize> = components
        .iter()
        .enumerate()
        .filter(|(_, c)| decide_component(c))
        .map(|(i, _)| i)
        .collect();
    if witnesses.is_empty() {
        Ok(Verdict::Inconclusive)
    } else {
        Ok(Verdict::NotIsotopic { witnesses })
    }
}

/// Stein-domain comparison for surgeries on links in the standard
/// three-sphere: the induced structures differ exactly where the rotation
/// numbers do.
pub fn stein_decide(rotations1: &[i64], rotations2: &[i64]) -> Result<Verdict, CriterionError> {
    if rotations1.len() != rotations2.len() {
        return Err(CriterionError::RotationLengthMismatch {
            left: rotations1.len(),
            right: rotations2.len(),
        });
    }
    if rotations1.is_empty() {
        return Err(CriterionError::NoComponents);
    }
    let witnesses: Vec<usize> = rotations1
        .iter()
        .zip(rotations2)
        .enumerate()
        .filter(|(_, (a, b))| a != b)
        .map(|(i, _)| i)
        .collect();
    if witnesses.is_empty() {
        Ok(Verdict::Inconclusive)
    } else {
        Ok(Verdict::NotIsotopic { witnesses })
    }
}
