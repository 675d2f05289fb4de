//! Slopes on a torus boundary and their transforms under gluing matrices.
//!
//! A slope `p/q` is the isotopy class of the curve `q * mu + p * lambda`
//! in a fixed (meridian, longitude) basis, recorded as the column vector
//! `(q, p)`. A gluing map acts on that column on the left; `1/0` is the
//! infinite slope. The convention is pinned down by the reproduced
//! boundary-slope values in the tests rather than by documentation alone.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::algebra::{IntegerMatrix, Rational};

/// Failure modes of slope and splitting computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorusError {
    /// The zero vector names no curve on the torus.
    #[error("slope class (0, 0) is not a curve")]
    ZeroClass,

    /// Gluing maps are 2x2.
    #[error("gluing matrix is {rows}x{cols}, expected 2x2")]
    NotTwoByTwo { rows: usize, cols: usize },

    /// Gluing maps must be invertible over Z.
    #[error("gluing matrix has determinant {det}, expected +1 or -1")]
    NotUnimodular { det: i64 },

    /// Seifert invariants need at least one coefficient.
    #[error("empty Seifert coefficient list")]
    EmptySeifertData,

    /// The splitting is defined for indices n >= 2 only.
    #[error("splitting index {n} is out of range (need n >= 2)")]
    IndexOutOfRange { n: i64 },

    /// Exceptional-fiber twists must be negative integers.
    #[error("twist parameter n{index} = {value} must be negative")]
    NonNegativeTwist { index: u8, value: i64 },

    /// Tight-structure counting on a solid torus needs a negative integer
    /// boundary slope.
    #[error("slope {slope} is not a negative integer, cannot count tight structures")]
    UnsupportedSlope { slope: Slope },

    /// A slope string was not of the form `p`, `p/q`, or `inf`.
    #[error("cannot parse {value:?} as a slope")]
    ParseSlope { value: String },
}

/// Slope of an essential simple closed curve on the torus, reduced so the
/// class `(q, p)` has `q >= 0`, `gcd(p, q) = 1`, and the infinite slope is
/// `(0, 1)` written `inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    /// Reduces `p/q` to canonical form. Only `(0, 0)` is rejected.
    pub fn new(p: i64, q: i64) -> Result<Self, TorusError> {
        if p == 0 && q == 0 {
            return Err(TorusError::ZeroClass);
        }
        Ok(Self::from_class(i128::from(q), i128::from(p)))
    }

    pub fn integer(p: i64) -> Self {
        Slope { p, q: 1 }
    }

    pub fn infinity() -> Self {
        Slope { p: 1, q: 0 }
    }

    /// Canonicalizes the column `(q, p)`; callers guarantee it is nonzero.
    fn from_class(q: i128, p: i128) -> Self {
        debug_assert!(p != 0 || q != 0);
        let g = p.unsigned_abs().gcd(&q.unsigned_abs()) as i128;
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 || (q == 0 && p < 0) {
            p = -p;
            q = -q;
        }
        let narrow = |v: i128| i64::try_from(v).expect("slope component exceeds 64 bits");
        Slope { p: narrow(p), q: narrow(q) }
    }

    pub fn numerator(&self) -> i64 {
        self.p
    }

    pub fn denominator(&self) -> i64 {
        self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q == 0
    }

    /// Integer value for slopes of the form `p/1`.
    pub fn as_integer(&self) -> Option<i64> {
        (self.q == 1).then_some(self.p)
    }

    /// Finite slopes as exact rationals; `None` for `inf`.
    pub fn to_rational(&self) -> Option<Rational> {
        (!self.is_infinite()).then(|| Rational::new(self.p, self.q).expect("q > 0"))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

impl FromStr for Slope {
    type Err = TorusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "inf" {
            return Ok(Slope::infinity());
        }
        let bad = || TorusError::ParseSlope { value: s.to_string() };
        let (p, q) = match t.split_once('/') {
            Some((p, q)) => {
                (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?)
            }
            None => (t.parse().map_err(|_| bad())?, 1),
        };
        Slope::new(p, q).map_err(|_| bad())
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|_| de::Error::custom(format!("invalid slope {s:?}")))
    }
}

/// Change of basis between two torus boundaries: a 2x2 integer matrix with
/// determinant +1 or -1, acting on slope classes as column vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "IntegerMatrix", into = "IntegerMatrix")]
pub struct GluingMap {
    m: IntegerMatrix,
}

impl TryFrom<IntegerMatrix> for GluingMap {
    type Error = TorusError;

    fn try_from(m: IntegerMatrix) -> Result<Self, Self::Error> {
        GluingMap::new(m)
    }
}

impl From<GluingMap> for IntegerMatrix {
    fn from(g: GluingMap) -> IntegerMatrix {
        g.m
    }
}

impl GluingMap {
    pub fn new(m: IntegerMatrix) -> Result<Self, TorusError> {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(TorusError::NotTwoByTwo { rows: m.rows(), cols: m.cols() });
        }
        let det = det2(&m);
        if det != 1 && det != -1 {
            return Err(TorusError::NotUnimodular { det });
        }
        Ok(GluingMap { m })
    }

    pub fn from_rows(rows: [[i64; 2]; 2]) -> Result<Self, TorusError> {
        GluingMap::new(
            IntegerMatrix::from_rows(&[rows[0].to_vec(), rows[1].to_vec()]).expect("2x2"),
        )
    }

    pub fn identity() -> Self {
        GluingMap { m: IntegerMatrix::identity(2) }
    }

    pub fn matrix(&self) -> &IntegerMatrix {
        &self.m
    }

    pub fn det(&self) -> i64 {
        det2(&self.m)
    }

    /// Exact inverse: the adjugate divided by the determinant.
    pub fn inverse(&self) -> GluingMap {
        let (a, b, c, d) = self.entries();
        let det = self.det();
        GluingMap::from_rows([[d * det, -b * det], [-c * det, a * det]]).expect("inverse of unit")
    }

    /// `self * other`, the map applying `other` first.
    pub fn compose(&self, other: &GluingMap) -> GluingMap {
        GluingMap::new(self.m.mul(&other.m).expect("2x2 product")).expect("product of units")
    }

    /// Image of a slope under the basis change.
    pub fn apply(&self, s: Slope) -> Slope {
        let (a, b, c, d) = self.entries();
        let q = i128::from(s.q);
        let p = i128::from(s.p);
        let q2 = i128::from(a) * q + i128::from(b) * p;
        let p2 = i128::from(c) * q + i128::from(d) * p;
        Slope::from_class(q2, p2)
    }

    fn entries(&self) -> (i64, i64, i64, i64) {
        (self.m.get(0, 0), self.m.get(0, 1), self.m.get(1, 0), self.m.get(1, 1))
    }
}

fn det2(m: &IntegerMatrix) -> i64 {
    let prod = i128::from(m.get(0, 0)) * i128::from(m.get(1, 1))
        - i128::from(m.get(0, 1)) * i128::from(m.get(1, 0));
    i64::try_from(prod).expect("determinant exceeds 64 bits")
}

/// Applies the gluing map to the slope; `g.apply(s)` as a free function.
pub fn transform_slope(g: &GluingMap, s: Slope) -> Slope {
    g.apply(s)
}

/// Unnormalized Seifert invariants of a small Seifert fibered space,
/// written `M(r1, ..., rk)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertData {
    coefficients: Vec<Rational>,
}

impl SeifertData {
    pub fn new(coefficients: Vec<Rational>) -> Result<Self, TorusError> {
        if coefficients.is_empty() {
            return Err(TorusError::EmptySeifertData);
        }
        Ok(SeifertData { coefficients })
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }
}

/// Euler number of the fibration: the sum of the coefficients.
pub fn euler_number(data: &SeifertData) -> Rational {
    let mut total = Rational::zero();
    for c in &data.coefficients {
        total = total + c;
    }
    total
}

/// Gluing matrices of the three exceptional-fiber neighborhoods in the
/// standard splitting of the Brieskorn sphere with parameters (2, 3, 6n-1),
/// oriented as the boundary of the negative-definite plumbing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrieskornSplitting {
    n: i64,
    phi1: GluingMap,
    phi2: GluingMap,
    phi3: GluingMap,
}

impl BrieskornSplitting {
    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn phi1(&self) -> &GluingMap {
        &self.phi1
    }

    pub fn phi2(&self) -> &GluingMap {
        &self.phi2
    }

    pub fn phi3(&self) -> &GluingMap {
        &self.phi3
    }

    /// The same space as a small Seifert fibration over the sphere.
    pub fn seifert_data(&self) -> SeifertData {
        SeifertData::new(vec![
            Rational::new(-1, 2).expect("nonzero"),
            Rational::new(1, 3).expect("nonzero"),
            Rational::new(self.n, 6 * self.n - 1).expect("nonzero"),
        ])
        .expect("nonempty")
    }
}

/// Splitting data for the index-n member of the family; `n >= 2` is
/// required because the index-1 space admits no tight structure at all and
/// the gluing calculus below does not apply to it.
pub fn brieskorn_splitting(n: i64) -> Result<BrieskornSplitting, TorusError> {
    if n < 2 {
        return Err(TorusError::IndexOutOfRange { n });
    }
    Ok(BrieskornSplitting {
        n,
        phi1: GluingMap::from_rows([[2, -1], [1, 0]])?,
        phi2: GluingMap::from_rows([[3, 1], [-1, 0]])?,
        phi3: GluingMap::from_rows([[6 * n - 1, 6], [-n, -1]])?,
    })
}

/// Boundary slopes, measured in the central-piece basis, of the three
/// exceptional-fiber tori when the fiber neighborhoods are glued with
/// interior slopes `1/n1`, `1/n2`, `1/n3`.
pub fn boundary_slopes(
    n: i64,
    n1: i64,
    n2: i64,
    n3: i64,
) -> Result<(Slope, Slope, Slope), TorusError> {
    let splitting = brieskorn_splitting(n)?;
    for (index, value) in [(1, n1), (2, n2), (3, n3)] {
        if value >= 0 {
            return Err(TorusError::NonNegativeTwist { index, value });
        }
    }
    let s1 = splitting.phi1().apply(Slope::new(1, n1)?);
    let s2 = splitting.phi2().apply(Slope::new(1, n2)?);
    let s3 = splitting.phi3().apply(Slope::new(1, n3)?);
    Ok((s1, s2, s3))
}

/// Number of tight structures on a solid torus whose boundary slope is the
/// negative integer `-k`, namely `k`. Any other slope is rejected: the
/// count used downstream is only ever taken at integer slopes.
pub fn solid_torus_tight_count(s: Slope) -> Result<u64, TorusError> {
    match s.as_integer() {
        Some(p) if p <= -1 => Ok(p.unsigned_abs()),
        _ => Err(TorusError::UnsupportedSlope { slope: s }),
    }
}
