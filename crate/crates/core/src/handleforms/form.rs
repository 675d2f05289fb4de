//! Differential forms and polynomial vector fields on 4-space.
//!
//! A k-form stores one polynomial per basis multi-index, the multi-index
//! being a bitmask over the four coordinates with exactly k bits set,
//! always in ascending coordinate order. All three operators below use
//! the standard alternating signs; their mutual consistency is pinned by
//! the Leibniz and antiderivation property tests.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::Rational;

use super::poly::{unsigned_term_text, Coordinate, Poly};
use super::HandleformsError;

/// Polynomial vector field: one coefficient per coordinate direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VField {
    components: [Poly; 4],
}

impl VField {
    pub fn new(components: [Poly; 4]) -> VField {
        VField { components }
    }

    pub fn component(&self, x: Coordinate) -> &Poly {
        &self.components[x.index()]
    }

    /// Pointwise dot product against another field.
    pub fn dot(&self, other: &VField) -> Poly {
        let mut total = Poly::zero();
        for i in 0..4 {
            total = total + &self.components[i] * &other.components[i];
        }
        total
    }

    pub fn eval(
        &self,
        point: &[Rational; 4],
        param: Option<&Rational>,
    ) -> Result<[Rational; 4], HandleformsError> {
        Ok([
            self.components[0].eval(point, param)?,
            self.components[1].eval(point, param)?,
            self.components[2].eval(point, param)?,
            self.components[3].eval(point, param)?,
        ])
    }
}

/// Componentwise partial derivatives of a scalar in the standard metric.
pub fn gradient(f: &Poly) -> VField {
    VField::new([
        f.partial(Coordinate::X1),
        f.partial(Coordinate::Y1),
        f.partial(Coordinate::X2),
        f.partial(Coordinate::Y2),
    ])
}

/// Coordinates named by a multi-index, in ascending order.
fn mask_bits(mask: u8) -> impl Iterator<Item = usize> {
    (0..4).filter(move |i| mask & (1 << i) != 0)
}

/// Differential form of a fixed degree. Zero polynomials are never
/// stored; two zero forms are equal regardless of their nominal degrees.
#[derive(Debug, Clone, Eq)]
pub struct Form {
    degree: u8,
    terms: BTreeMap<u8, Poly>,
}

impl PartialEq for Form {
    fn eq(&self, other: &Self) -> bool {
        if self.terms.is_empty() && other.terms.is_empty() {
            return true;
        }
        self.degree == other.degree && self.terms == other.terms
    }
}

impl Form {
    pub fn zero(degree: u8) -> Form {
        Form { degree, terms: BTreeMap::new() }
    }

    /// Builds a form from components, validating that every multi-index
    /// has cardinality equal to the degree.
    pub fn new(degree: u8, components: Vec<(u8, Poly)>) -> Result<Form, HandleformsError> {
        if degree > 4 {
            return Err(HandleformsError::InvalidDegree { degree });
        }
        let mut form = Form::zero(degree);
        for (mask, poly) in components {
            if mask >= 16 || mask.count_ones() != u32::from(degree) {
                return Err(HandleformsError::ComponentArity { mask, degree });
            }
            form.add_component(mask, poly);
        }
        Ok(form)
    }

    /// A polynomial as a 0-form.
    pub fn scalar(f: Poly) -> Form {
        let mut form = Form::zero(0);
        form.add_component(0, f);
        form
    }

    /// The coordinate differential as a 1-form.
    pub fn differential(x: Coordinate) -> Form {
        let mut form = Form::zero(1);
        form.add_component(1 << x.index(), Poly::one());
        form
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn component(&self, mask: u8) -> Poly {
        self.terms.get(&mask).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn components(&self) -> impl Iterator<Item = (u8, &Poly)> {
        self.terms.iter().map(|(mask, poly)| (*mask, poly))
    }

    fn add_component(&mut self, mask: u8, poly: Poly) {
        if poly.is_zero() {
            return;
        }
        let combined = match self.terms.remove(&mask) {
            None => poly,
            Some(existing) => existing + poly,
        };
        if !combined.is_zero() {
            self.terms.insert(mask, combined);
        }
    }

    pub fn add(&self, other: &Form) -> Form {
        debug_assert!(
            self.is_zero() || other.is_zero() || self.degree == other.degree,
            "form degrees differ"
        );
        let degree = if self.is_zero() { other.degree } else { self.degree };
        let mut out = Form { degree, terms: self.terms.clone() };
        for (mask, poly) in &other.terms {
            out.add_component(*mask, poly.clone());
        }
        out
    }

    pub fn sub(&self, other: &Form) -> Form {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Form {
        let mut out = Form::zero(self.degree);
        for (mask, poly) in &self.terms {
            out.add_component(*mask, poly.scale(c));
        }
        out
    }

    /// Value of the k-form on k tangent vectors at a point: for each
    /// multi-index, the coefficient value times the minor determinant of
    /// the vectors in those coordinates.
    pub fn eval_on_vectors(
        &self,
        point: &[Rational; 4],
        param: Option<&Rational>,
        vectors: &[[Rational; 4]],
    ) -> Result<Rational, HandleformsError> {
        if vectors.len() != usize::from(self.degree) {
            return Err(HandleformsError::DegreeMismatch {
                degree: self.degree,
                vectors: vectors.len(),
            });
        }
        let mut total = Rational::zero();
        for (mask, poly) in &self.terms {
            let rows: Vec<Vec<Rational>> = mask_bits(*mask)
                .map(|coord| vectors.iter().map(|v| v[coord].clone()).collect())
                .collect();
            total = total + poly.eval(point, param)? * det(&rows);
        }
        Ok(total)
    }
}

/// Determinant of a small square rational matrix by Laplace expansion on
/// the first row; the empty matrix has determinant 1.
pub(super) fn det(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    if n == 0 {
        return Rational::one();
    }
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut total = Rational::zero();
    for col in 0..n {
        if rows[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = rows[1..]
            .iter()
            .map(|row| {
                row.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, v)| v.clone()).collect()
            })
            .collect();
        let cofactor = rows[0][col].clone() * det(&minor);
        total = if col % 2 == 0 { total + cofactor } else { total - cofactor };
    }
    total
}

/// Exterior derivative. Degree-4 input differentiates to zero since there
/// is no room for a fifth index.
pub fn exterior_d(f: &Form) -> Form {
    let out_degree = (f.degree + 1).min(4);
    let mut out = Form::zero(out_degree);
    if f.degree == 4 {
        return out;
    }
    for (mask, poly) in f.components() {
        for x in Coordinate::ALL {
            let bit = 1u8 << x.index();
            if mask & bit != 0 {
                continue;
            }
            let coefficient = poly.partial(x);
            // Inserting the new differential in front costs one sign per
            // index already present below it.
            let below = (mask & (bit - 1)).count_ones();
            let signed = if below.is_multiple_of(2) {
                coefficient
            } else {
                coefficient.scale(&-Rational::one())
            };
            out.add_component(mask | bit, signed);
        }
    }
    out
}

/// Wedge product. Degrees add; past top degree everything is zero.
pub fn wedge(a: &Form, b: &Form) -> Form {
    let degree = (a.degree + b.degree).min(4);
    let mut out = Form::zero(degree);
    if a.degree + b.degree > 4 {
        return out;
    }
    for (mask_a, poly_a) in a.components() {
        for (mask_b, poly_b) in b.components() {
            if mask_a & mask_b != 0 {
                continue;
            }
            // Merge sign: one transposition per pair of indices out of
            // order across the two factors.
            let mut inversions = 0u32;
            for i in mask_bits(mask_a) {
                inversions += (mask_b & ((1 << i) - 1)).count_ones();
            }
            let product = poly_a * poly_b;
            let signed = if inversions.is_multiple_of(2) {
                product
            } else {
                product.scale(&-Rational::one())
            };
            out.add_component(mask_a | mask_b, signed);
        }
    }
    out
}

/// Interior product (contraction) of a vector field into a form of
/// positive degree.
pub fn interior_product(v: &VField, f: &Form) -> Result<Form, HandleformsError> {
    if f.degree == 0 {
        return Err(HandleformsError::InteriorOfScalar);
    }
    let mut out = Form::zero(f.degree - 1);
    for (mask, poly) in f.components() {
        for (position, coord) in mask_bits(mask).enumerate() {
            let contracted = poly * v.component(Coordinate::from_index(coord));
            let signed = if position % 2 == 0 {
                contracted
            } else {
                contracted.scale(&-Rational::one())
            };
            out.add_component(mask & !(1 << coord), signed);
        }
    }
    Ok(out)
}

impl fmt::Display for Form {
    /// Canonical text: per multi-index in mask order, each polynomial term
    /// in descending order, rendered `coef*vars*dx1^dy1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mask, poly) in &self.terms {
            let basis: Vec<&str> = mask_bits(*mask)
                .map(|i| Coordinate::from_index(i).differential_name())
                .collect();
            for (m, c) in poly.terms().rev() {
                if first {
                    if c.is_negative() {
                        write!(f, "-")?;
                    }
                    first = false;
                } else if c.is_negative() {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                let scalar = unsigned_term_text(m, c);
                if basis.is_empty() {
                    write!(f, "{scalar}")?;
                } else if scalar == "1" {
                    write!(f, "{}", basis.join("^"))?;
                } else {
                    write!(f, "{}*{}", scalar, basis.join("^"))?;
                }
            }
        }
        Ok(())
    }
}
