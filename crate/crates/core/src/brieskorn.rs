//! Candidate tight contact structures on the Brieskorn spheres with
//! parameters (2, 3, 6n-1), oriented against their natural orientation,
//! and the pairwise distinctions currently provable among them.
//!
//! For each `n >= 2` the convex-surface upper bound yields `n * (n - 1) / 2`
//! candidates, indexed by the twisting level `m` of the third singular
//! fiber (`1 <= m <= n - 1`) and the number `p` of positive stabilizations
//! applied before surgery (`0 <= p <= n - m - 1`). Candidates at the same
//! level are distinguished by the homological test; levels 1 and 2 are
//! additionally separated by the plus-class. The largest family that is
//! pairwise distinguished this way has `2n - 3` members.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::ClassInfo;
use crate::criterion::{decide, ComponentComparison, CriterionError, Hypothesis};
use crate::legendrian::{surgery_framing, FramedLegendrian, StabilizationProfile};
use crate::torus::{brieskorn_splitting, transform_slope, Slope, TorusError};

/// Failure modes of candidate enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BrieskornError {
    /// The family starts at n = 2.
    #[error("family index {n} is out of range (need n >= 2)")]
    IndexOutOfRange { n: i64 },

    /// Twisting levels run from 1 to n - 1.
    #[error("level m = {m} is out of range for n = {n}")]
    LevelOutOfRange { n: i64, m: i64 },

    /// Positive counts at level m run from 0 to n - m - 1.
    #[error("positive count p = {p} is out of range at level m = {m}, n = {n}")]
    PositiveCountOutOfRange { n: i64, m: i64, p: i64 },

    /// Pairwise comparison needs candidates from the same family.
    #[error("candidates live in different families: n = {left} vs n = {right}")]
    MixedFamilies { left: i64, right: i64 },

    /// A candidate is never compared against itself.
    #[error("cannot compare a candidate with itself")]
    IdenticalCandidates,

    #[error(transparent)]
    Torus(#[from] TorusError),

    #[error(transparent)]
    Criterion(#[from] CriterionError),
}

/// One candidate tight structure, indexed by family, level, and positive
/// stabilization count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Candidate {
    n: i64,
    m: i64,
    p: i64,
}

impl Candidate {
    pub fn new(n: i64, m: i64, p: i64) -> Result<Self, BrieskornError> {
        if n < 2 {
            return Err(BrieskornError::IndexOutOfRange { n });
        }
        if m < 1 || m > n - 1 {
            return Err(BrieskornError::LevelOutOfRange { n, m });
        }
        if p < 0 || p > n - m - 1 {
            return Err(BrieskornError::PositiveCountOutOfRange { n, m, p });
        }
        Ok(Candidate { n, m, p })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn p(&self) -> i64 {
        self.p
    }
}

/// Twisting bookkeeping shared by every candidate at level `m`: the fiber
/// twisting, the two meridional surgery twists, and the slope of the third
/// gluing torus seen from both sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwistingData {
    pub t: i64,
    pub n1: i64,
    pub n2: i64,
    /// Dividing slope on the third torus, central-piece basis.
    pub slope_t3: Slope,
    /// The same slope in the fiber-neighborhood basis; always the integer
    /// `m - n`.
    pub slope_v3: Slope,
}

/// Why a pair of candidates is known to be non-isotopic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NonIsotopyReason {
    /// Same level: the homological test separates the stabilization
    /// choices on the third fiber.
    #[serde(rename = "same-m")]
    SameM,
    /// Levels 1 and 2: the plus-classes differ.
    #[serde(rename = "c-plus")]
    CPlusSeparates,
}

/// Outcome of a pairwise comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairVerdict {
    NotIsotopic(NonIsotopyReason),
    Unknown,
}

/// All candidates in the family, in lexicographic `(m, p)` order. The
/// count is always `n * (n - 1) / 2`.
pub fn enumerate(n: i64) -> Result<Vec<Candidate>, BrieskornError> {
    if n < 2 {
        return Err(BrieskornError::IndexOutOfRange { n });
    }
    let mut out = Vec::new();
    for m in 1..n {
        for p in 0..(n - m) {
            out.push(Candidate { n, m, p });
        }
    }
    Ok(out)
}

/// Twisting data at level `m` of family `n`.
///
/// The third-torus slope is computed two ways: the closed form
/// `-m / (6m - 1)` in the central basis, and its pullback through the
/// inverse gluing map, which always lands on the integer `m - n`.
pub fn twisting_data(n: i64, m: i64) -> Result<TwistingData, BrieskornError> {
    Candidate::new(n, m, 0)?;
    let t = 1 - 6 * m;
    let n1 = 1 - 3 * m;
    let n2 = -2 * m;
    let slope_t3 = Slope::new(-m, 6 * m - 1)?;
    let splitting = brieskorn_splitting(n)?;
    let slope_v3 = transform_slope(&splitting.phi3().inverse(), slope_t3);
    debug_assert_eq!(slope_v3, Slope::integer(m - n));
    Ok(TwistingData { t, n1, n2, slope_t3, slope_v3 })
}

/// Compares two distinct candidates from the same family.
///
/// Same level: the third-fiber knot was stabilized `n - m - 1` times in
/// both diagrams with different positive counts, and its class is torsion
/// (the ambient space is a homology sphere), so the homological test under
/// the fillability hypothesis applies. Levels {1, 2}: separated by the
/// plus-class. Anything else is out of reach of the implemented tests.
pub fn compare(a: Candidate, b: Candidate) -> Result<PairVerdict, BrieskornError> {
    if a.n != b.n {
        return Err(BrieskornError::MixedFamilies { left: a.n, right: b.n });
    }
    if (a.m, a.p) == (b.m, b.p) {
        return Err(BrieskornError::IdenticalCandidates);
    }
    if a.m == b.m {
        let s = u32::try_from(a.n - a.m - 1).expect("candidate range");
        let component = ComponentComparison::new(
            s,
            u32::try_from(a.p).expect("candidate range"),
            u32::try_from(b.p).expect("candidate range"),
            ClassInfo::Torsion,
        )?;
        let verdict = decide(&[component], Hypothesis::WeaklyFillable)?;
        debug_assert!(verdict.is_not_isotopic(), "distinct p at equal m must separate");
        return Ok(PairVerdict::NotIsotopic(NonIsotopyReason::SameM));
    }
    let levels = (a.m.min(b.m), a.m.max(b.m));
    if levels == (1, 2) {
        return Ok(PairVerdict::NotIsotopic(NonIsotopyReason::CPlusSeparates));
    }
    Ok(PairVerdict::Unknown)
}

/// Size of the largest family of candidates that is pairwise provably
/// non-isotopic, found by exact maximum-clique search on the comparison
/// graph. Equals `2n - 3`: the union of levels 1 and 2.
pub fn lower_bound(n: i64) -> Result<usize, BrieskornError> {
    let candidates = enumerate(n)?;
    let count = candidates.len();
    let mut adjacent = vec![vec![false; count]; count];
    for i in 0..count {
        for j in (i + 1)..count {
            if compare(candidates[i], candidates[j])? != PairVerdict::Unknown {
                adjacent[i][j] = true;
                adjacent[j][i] = true;
            }
        }
    }
    Ok(max_clique_size(&adjacent))
}

/// Exact maximum clique by branch and bound over vertices in index order.
fn max_clique_size(adjacent: &[Vec<bool>]) -> usize {
    fn grow(adjacent: &[Vec<bool>], allowed: &[usize], size: usize, best: &mut usize) {
        if size + allowed.len() <= *best {
            return;
        }
        if allowed.is_empty() {
            *best = (*best).max(size);
            return;
        }
        for (pos, &v) in allowed.iter().enumerate() {
            if size + (allowed.len() - pos) <= *best {
                break;
            }
            let narrowed: Vec<usize> =
                allowed[pos + 1..].iter().copied().filter(|&w| adjacent[v][w]).collect();
            grow(adjacent, &narrowed, size + 1, best);
        }
        *best = (*best).max(size);
    }

    let mut best = 0;
    let all: Vec<usize> = (0..adjacent.len()).collect();
    grow(adjacent, &all, 0, &mut best);
    best
}

/// Checks that attaching the third-fiber surgery reproduces the smooth
/// description: a fiber with twisting `-m`, stabilized `n - m - 1` times,
/// carries smooth surgery coefficient `-n`.
pub fn surgery_consistency(n: i64, m: i64) -> Result<bool, BrieskornError> {
    Candidate::new(n, m, 0)?;
    let fiber = FramedLegendrian {
        label: format!("fiber-m{m}"),
        twisting: -m,
        class_ref: Vec::new(),
    };
    let profile = StabilizationProfile::new(u32::try_from(n - m - 1).expect("range"), 0)
        .expect("0 <= total");
    Ok(surgery_framing(&fiber, profile) == -n)
}

/// Per-pair entry of the family report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub a: [i64; 2],
    pub b: [i64; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<NonIsotopyReason>,
    pub verdict: &'static str,
}

/// Everything the family-level summary exposes: the candidate list, the
/// counting bounds, and one verdict per unordered pair in lexicographic
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub candidates: Vec<[i64; 2]>,
    pub lower_bound: usize,
    pub n: i64,
    pub pairs: Vec<PairReport>,
    pub upper_bound: usize,
}

/// Builds the full report for family `n`.
pub fn report(n: i64) -> Result<FamilyReport, BrieskornError> {
    let candidates = enumerate(n)?;
    let mut pairs = Vec::new();
    for (i, &a) in candidates.iter().enumerate() {
        for &b in &candidates[i + 1..] {
            let (verdict, reason) = match compare(a, b)? {
                PairVerdict::NotIsotopic(reason) => ("not-isotopic", Some(reason)),
                PairVerdict::Unknown => ("unknown", None),
            };
            pairs.push(PairReport { a: [a.m, a.p], b: [b.m, b.p], reason, verdict });
        }
    }
    Ok(FamilyReport {
        candidates: candidates.iter().map(|c| [c.m, c.p]).collect(),
        lower_bound: lower_bound(n)?,
        n,
        pairs,
        upper_bound: candidates.len(),
    })
}
