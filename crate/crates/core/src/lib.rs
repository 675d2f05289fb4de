//! Exact arithmetic for the bookkeeping that surrounds Legendrian surgery
//! diagrams.
//!
//! Everything here is computed over the integers or the rationals; no
//! floating point is used anywhere and no result is ever rounded.
//!
//! - [`algebra`]: big-integer Smith normal form, negative continued
//!   fractions, and divisibility of a class in a finitely presented
//!   abelian group.
//! - [`torus`]: slopes on a torus boundary, gluing matrices in GL(2, Z),
//!   and the splitting data of the small Seifert spaces this crate cares
//!   about.
//! - [`legendrian`]: stabilization counters, relative Chern evaluations,
//!   and the contact-to-smooth framing translation.
//! - [`criterion`]: the gcd test that distinguishes surgeries on
//!   differently stabilized links, plus its Stein-domain variant.
//! - [`brieskorn`]: enumeration and pairwise comparison of the candidate
//!   tight structures on the relevant Brieskorn spheres.
//! - [`handleforms`]: a small exterior calculus over Q[x1, y1, x2, y2]
//!   used to verify the standard symplectic 2-handle identities
//!   symbolically.

pub mod algebra;
pub mod brieskorn;
pub mod criterion;
pub mod handleforms;
pub mod legendrian;
pub mod torus;
