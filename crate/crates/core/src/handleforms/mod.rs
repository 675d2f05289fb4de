//! Symbolic exterior calculus over rational-coefficient polynomials in
//! the four handle coordinates, with one extra symbolic parameter for the
//! region cutoff.
//!
//! The polynomials, vector fields, and differential forms here carry the
//! explicit data of the standard symplectic 2-handle: the potential whose
//! gradient is the Liouville field, the contact form it induces on the
//! lower level set, the framing matrix, and the cutoff hypersurface. The
//! verification entry points expand each published identity exactly and
//! report pass or fail per item; nothing is ever evaluated in floating
//! point.

mod form;
mod matrix;
mod poly;
mod verify;

pub use form::{exterior_d, gradient, interior_product, wedge, Form, VField};
pub use matrix::PolyMatrix;
pub use poly::{Coordinate, Monomial, Poly};
pub use verify::{
    contact_positivity_at, contact_sample_points, frame_norm_squared, frame_numerator,
    handle_contact_form, handle_potential, liouville_field, pairing_matrix, region_cutoff,
    sigma_sample_points, sigma_transversality_at, standard_symplectic_form,
    transversality_pairing, verify_handle_identities, CheckReport,
};

use thiserror::Error;

/// Failure modes of the symbolic calculus and the pointwise checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HandleformsError {
    /// Forms on 4-space have degree at most 4.
    #[error("form degree {degree} is out of range")]
    InvalidDegree { degree: u8 },

    /// Every component multi-index must have cardinality equal to the
    /// form degree.
    #[error("component mask {mask:#06b} does not match form degree {degree}")]
    ComponentArity { mask: u8, degree: u8 },

    /// The interior product lowers degree, so scalars are excluded.
    #[error("interior product of a 0-form is undefined")]
    InteriorOfScalar,

    /// A k-form pairs with exactly k tangent vectors.
    #[error("a {degree}-form pairs with {degree} vectors, got {vectors}")]
    DegreeMismatch { degree: u8, vectors: usize },

    /// The polynomial mentions the symbolic parameter but no value for it
    /// was supplied at evaluation time.
    #[error("polynomial uses the region parameter but no value was supplied")]
    MissingParam,

    /// The sample point misses the level set the check lives on.
    #[error("point is off the surface, residual {residual}")]
    OffSurface { residual: String },

    /// The cutoff parameter must exceed 1 for the region to be a handle.
    #[error("region parameter {value} is out of range (need a value > 1)")]
    ParamOutOfRange { value: String },

    /// Transversality and positivity checks need a nonzero field vector.
    #[error("the field vanishes at the sample point")]
    VanishingField,

    /// Sample generation found no rational point with the required
    /// square-sum.
    #[error("no rational point found with square-sum {radius}")]
    NoRationalSample { radius: String },
}
