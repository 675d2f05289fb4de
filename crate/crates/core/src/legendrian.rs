//! Stabilization bookkeeping for Legendrian knots.
//!
//! A knot carries an integer twisting (its contact framing against the
//! background framing) and a reference to its homology class; a
//! stabilization profile records how many stabilizations were applied in
//! total and how many of them were positive. Positive counts enter the
//! rotation number with weight +1, negative ones with weight -1, so the
//! relative rotation offset of a profile is `2p - s`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Failure modes of stabilization bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LegendrianError {
    /// Positive stabilizations cannot outnumber the total.
    #[error("profile has {positive} positive stabilizations out of {total}")]
    ProfileExceedsTotal { positive: u32, total: u32 },

    /// Chern evaluations compare knots stabilized the same number of times.
    #[error("stabilization totals differ: {left} vs {right}")]
    MismatchedTotals { left: u32, right: u32 },

    /// A surgery description needs at least one component.
    #[error("surgery description has no components")]
    EmptySpec,
}

/// A Legendrian knot with its twisting number and a reference to its class
/// in the homology of the ambient manifold (coordinates in a caller-chosen
/// generator basis; the criterion layer never interprets them).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FramedLegendrian {
    pub label: String,
    pub twisting: i64,
    pub class_ref: Vec<i64>,
}

/// How a knot was stabilized: `s` times in total, `p` of them positively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ProfileRepr", into = "ProfileRepr")]
pub struct StabilizationProfile {
    s: u32,
    p: u32,
}

#[derive(Serialize, Deserialize)]
struct ProfileRepr {
    s: u32,
    p: u32,
}

impl TryFrom<ProfileRepr> for StabilizationProfile {
    type Error = LegendrianError;

    fn try_from(r: ProfileRepr) -> Result<Self, Self::Error> {
        StabilizationProfile::new(r.s, r.p)
    }
}

impl From<StabilizationProfile> for ProfileRepr {
    fn from(p: StabilizationProfile) -> Self {
        ProfileRepr { s: p.s, p: p.p }
    }
}

impl StabilizationProfile {
    pub fn new(s: u32, p: u32) -> Result<Self, LegendrianError> {
        if p > s {
            return Err(LegendrianError::ProfileExceedsTotal { positive: p, total: s });
        }
        Ok(StabilizationProfile { s, p })
    }

    /// The unstabilized profile.
    pub fn fresh() -> Self {
        StabilizationProfile { s: 0, p: 0 }
    }

    pub fn total(&self) -> u32 {
        self.s
    }

    pub fn positive(&self) -> u32 {
        self.p
    }

    pub fn negative(&self) -> u32 {
        self.s - self.p
    }

    /// Contribution of the stabilizations to the rotation number.
    pub fn rotation_offset(&self) -> i64 {
        2 * i64::from(self.p) - i64::from(self.s)
    }
}

/// Sign of a single stabilization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StabilizationSign {
    Positive,
    Negative,
}

/// One stabilization: the twisting drops by one and the profile counters
/// advance. The class reference is unchanged since stabilization preserves
/// the homology class.
pub fn stabilize(
    knot: &FramedLegendrian,
    profile: StabilizationProfile,
    sign: StabilizationSign,
) -> (FramedLegendrian, StabilizationProfile) {
    let stabilized = FramedLegendrian {
        label: knot.label.clone(),
        twisting: knot.twisting - 1,
        class_ref: knot.class_ref.clone(),
    };
    let p = match sign {
        StabilizationSign::Positive => profile.p + 1,
        StabilizationSign::Negative => profile.p,
    };
    (stabilized, StabilizationProfile { s: profile.s + 1, p })
}

/// Pairing of the relative first Chern class of two stabilization choices
/// on the same knot: `2 * (p_a - p_b)`. Defined only when both choices
/// stabilize the same total number of times.
pub fn relative_chern(
    a: StabilizationProfile,
    b: StabilizationProfile,
) -> Result<i64, LegendrianError> {
    if a.s != b.s {
        return Err(LegendrianError::MismatchedTotals { left: a.s, right: b.s });
    }
    Ok(a.rotation_offset() - b.rotation_offset())
}

/// Smooth surgery coefficient realized by contact surgery on the
/// stabilized knot: the contact framing `twisting - s`, with one extra
/// left twist from the surgery itself.
pub fn surgery_framing(knot: &FramedLegendrian, profile: StabilizationProfile) -> i64 {
    knot.twisting - i64::from(profile.s) - 1
}

/// First Chern class evaluations on the handle classes of a Stein domain
/// built from the surgery diagram: these are exactly the rotation numbers,
/// so the list passes through unchanged. Kept as an explicit step so the
/// Stein comparison reads as a pairing computation.
pub fn stein_chern_values(rotations: &[i64]) -> Vec<i64> {
    rotations.to_vec()
}

/// A surgery diagram: a nonempty list of framed Legendrian knots, each
/// with its stabilization profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgerySpec {
    components: Vec<(FramedLegendrian, StabilizationProfile)>,
}

impl SurgerySpec {
    pub fn new(
        components: Vec<(FramedLegendrian, StabilizationProfile)>,
    ) -> Result<Self, LegendrianError> {
        if components.is_empty() {
            return Err(LegendrianError::EmptySpec);
        }
        Ok(SurgerySpec { components })
    }

    pub fn components(&self) -> &[(FramedLegendrian, StabilizationProfile)] {
        &self.components
    }
}

/// One link component of a comparison document: a knot plus two
/// stabilization assignments sharing the same total `s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComparisonComponent {
    pub label: String,
    pub twisting: i64,
    pub class: Vec<i64>,
    pub s: u32,
    pub p1: u32,
    pub p2: u32,
}

impl ComparisonComponent {
    pub fn knot(&self) -> FramedLegendrian {
        FramedLegendrian {
            label: self.label.clone(),
            twisting: self.twisting,
            class_ref: self.class.clone(),
        }
    }

    /// The two profiles, validated against the shared total.
    pub fn profiles(&self) -> Result<(StabilizationProfile, StabilizationProfile), LegendrianError>
    {
        Ok((StabilizationProfile::new(self.s, self.p1)?, StabilizationProfile::new(self.s, self.p2)?))
    }
}

/// A pair of surgery diagrams on the same link differing only in the
/// stabilization choices, as read from a comparison file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeryComparison {
    pub components: Vec<ComparisonComponent>,
}

impl SurgeryComparison {
    /// Splits into the two underlying surgery diagrams.
    pub fn specs(&self) -> Result<(SurgerySpec, SurgerySpec), LegendrianError> {
        let mut first = Vec::with_capacity(self.components.len());
        let mut second = Vec::with_capacity(self.components.len());
        for c in &self.components {
            let (pa, pb) = c.profiles()?;
            first.push((c.knot(), pa));
            second.push((c.knot(), pb));
        }
        Ok((SurgerySpec::new(first)?, SurgerySpec::new(second)?))
    }
}
