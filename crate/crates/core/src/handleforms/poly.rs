//! Multivariate polynomials with exact rational coefficients.
//!
//! Variables are the four handle coordinates plus one symbolic parameter
//! for the region cutoff. The parameter occupies a fifth exponent slot:
//! it multiplies like any variable but is never differentiated, and
//! evaluation only needs a value for it when it actually occurs.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::Rational;

use super::HandleformsError;

/// The four coordinates, in the fixed order used everywhere in this
/// module: first handle direction, then its dual, then the second pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Coordinate {
    X1,
    Y1,
    X2,
    Y2,
}

impl Coordinate {
    pub const ALL: [Coordinate; 4] = [Coordinate::X1, Coordinate::Y1, Coordinate::X2, Coordinate::Y2];

    pub fn index(self) -> usize {
        match self {
            Coordinate::X1 => 0,
            Coordinate::Y1 => 1,
            Coordinate::X2 => 2,
            Coordinate::Y2 => 3,
        }
    }

    pub fn from_index(i: usize) -> Coordinate {
        Coordinate::ALL[i]
    }

    pub fn name(self) -> &'static str {
        ["x1", "y1", "x2", "y2"][self.index()]
    }

    /// Name of the dual basis 1-form.
    pub fn differential_name(self) -> &'static str {
        ["dx1", "dy1", "dx2", "dy2"][self.index()]
    }
}

/// Exponent vector: four coordinate slots followed by the parameter slot.
/// Ordered by total degree first, then lexicographically, so map iteration
/// is deterministic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Monomial(pub [u32; 5]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 5]);

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0; 5];
        for (slot, e) in exps.iter_mut().enumerate() {
            *e = self.0[slot] + other.0[slot];
        }
        Monomial(exps)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.total_degree(), self.0).cmp(&(other.total_degree(), other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in the four coordinates and the parameter. Zero coefficients
/// are never stored, so the term map is a canonical representation and
/// equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::term(Monomial::ONE, c)
    }

    pub fn integer(n: i64) -> Poly {
        Poly::constant(Rational::integer(n))
    }

    /// The single term `c * m`; collapses to zero when `c` is zero.
    pub fn term(m: Monomial, c: Rational) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn coordinate(x: Coordinate) -> Poly {
        let mut exps = [0; 5];
        exps[x.index()] = 1;
        Poly::term(Monomial(exps), Rational::one())
    }

    /// The symbolic region parameter as a degree-1 polynomial.
    pub fn parameter() -> Poly {
        Poly::term(Monomial([0, 0, 0, 0, 1]), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether any term carries a positive parameter exponent.
    pub fn uses_parameter(&self) -> bool {
        self.terms.keys().any(|m| m.0[4] > 0)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect() }
    }

    /// Partial derivative in one coordinate. The parameter slot is inert:
    /// it never appears as a differentiation direction.
    pub fn partial(&self, x: Coordinate) -> Poly {
        let slot = x.index();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if m.0[slot] == 0 {
                continue;
            }
            let mut exps = m.0;
            exps[slot] -= 1;
            out.add_term(Monomial(exps), c * &Rational::integer(i64::from(m.0[slot])));
        }
        out
    }

    /// Exact value at a coordinate point. A value for the parameter is
    /// required exactly when the polynomial mentions it.
    pub fn eval(
        &self,
        point: &[Rational; 4],
        param: Option<&Rational>,
    ) -> Result<Rational, HandleformsError> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (slot, coord) in point.iter().enumerate() {
                if m.0[slot] > 0 {
                    value = value * coord.pow(m.0[slot]);
                }
            }
            if m.0[4] > 0 {
                let a = param.ok_or(HandleformsError::MissingParam)?;
                value = value * a.pow(m.0[4]);
            }
            total = total + value;
        }
        Ok(total)
    }

    /// Replaces the parameter by a rational value, leaving a polynomial in
    /// the coordinates alone.
    pub fn substitute_parameter(&self, value: &Rational) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut exps = m.0;
            exps[4] = 0;
            out.add_term(Monomial(exps), c * value.pow(m.0[4]));
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(existing) => {
                let sum = existing + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
        }
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }

        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}

/// Coefficient text without a redundant unit denominator.
fn coefficient_text(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        c.to_string()
    }
}

fn monomial_text(m: &Monomial) -> String {
    let mut factors = Vec::new();
    for x in Coordinate::ALL {
        let e = m.0[x.index()];
        match e {
            0 => {}
            1 => factors.push(x.name().to_string()),
            _ => factors.push(format!("{}^{}", x.name(), e)),
        }
    }
    match m.0[4] {
        0 => {}
        1 => factors.push("A".to_string()),
        e => factors.push(format!("A^{e}")),
    }
    factors.join("*")
}

/// Renders one term for the canonical text format: the unsigned
/// coefficient (omitted when 1 on a non-constant term) times the
/// monomial factors.
pub(super) fn unsigned_term_text(m: &Monomial, c: &Rational) -> String {
    let vars = monomial_text(m);
    let coef = c.abs();
    if vars.is_empty() {
        coefficient_text(&coef)
    } else if coef == Rational::one() {
        vars
    } else {
        format!("{}*{}", coefficient_text(&coef), vars)
    }
}

impl fmt::Display for Poly {
    /// Canonical text: terms in descending graded-lexicographic order,
    /// joined with signed separators.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (position, (m, c)) in self.terms.iter().rev().enumerate() {
            if position == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", unsigned_term_text(m, c))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Poly {
        Poly::coordinate(Coordinate::from_index(i))
    }

    #[test]
    fn arithmetic_and_canonical_storage() {
        let p = x(0) * x(0) + Poly::integer(2) * x(1);
        let q = &p - &p;
        assert!(q.is_zero());
        assert_eq!(q, Poly::zero());

        // Cancellation inside a sum must drop the term entirely.
        let r = (x(0) + x(1)) * (x(0) - x(1));
        assert_eq!(r, x(0) * x(0) - x(1) * x(1));
        assert_eq!(r.terms().count(), 2);
    }

    #[test]
    fn partial_derivatives() {
        // d/dx1 (x1^2 y1) = 2 x1 y1, and the parameter slot is inert.
        let p = x(0) * x(0) * x(1) + Poly::parameter() * x(0);
        let dp = p.partial(Coordinate::X1);
        assert_eq!(dp, Poly::integer(2) * x(0) * x(1) + Poly::parameter());
        assert!(p.partial(Coordinate::Y2).is_zero());
    }

    #[test]
    fn evaluation_and_parameter_handling() {
        let p = Poly::parameter() * x(0) - Poly::one();
        let pt = [Rational::integer(3), Rational::zero(), Rational::zero(), Rational::zero()];
        assert_eq!(p.eval(&pt, Some(&Rational::integer(2))).unwrap(), Rational::integer(5));
        assert_eq!(p.eval(&pt, None), Err(HandleformsError::MissingParam));

        let q = p.substitute_parameter(&Rational::integer(2));
        assert!(!q.uses_parameter());
        assert_eq!(q.eval(&pt, None).unwrap(), Rational::integer(5));
    }

    #[test]
    fn monomial_order_is_graded() {
        let low = Monomial([1, 0, 0, 0, 0]);
        let high = Monomial([0, 0, 0, 0, 2]);
        assert!(low < high);
        let left = Monomial([1, 1, 0, 0, 0]);
        let right = Monomial([0, 2, 0, 0, 0]);
        assert!(left > right, "equal degree falls back to lexicographic");
    }

    #[test]
    fn display_format() {
        let p = Poly::integer(2) * x(0) * x(0) - x(1) + Poly::constant(Rational::new(3, 2).unwrap());
        assert_eq!(p.to_string(), "2*x1^2 - y1 + 3/2");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!((-x(3)).to_string(), "-y2");
        assert_eq!(Poly::parameter().to_string(), "A");
    }
}
