//! The explicit handle data and the identity suite over it.
//!
//! The constants below are the standard symplectic 2-handle in the fixed
//! coordinate order: the potential, its gradient field, the contact form
//! the field induces, the framing numerator and its norm, and the cutoff
//! hypersurface with the symbolic region parameter. Each verification
//! item expands both sides of one published identity and compares exactly.

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::algebra::{IntegerMatrix, Rational};

use super::form::{det, exterior_d, gradient, interior_product, wedge, Form, VField};
use super::matrix::PolyMatrix;
use super::poly::{Coordinate, Poly};
use super::HandleformsError;

fn coord(x: Coordinate) -> Poly {
    Poly::coordinate(x)
}

fn half() -> Rational {
    Rational::new(1, 2).expect("nonzero")
}

/// The standard symplectic form: first pair wedge plus second pair wedge.
pub fn standard_symplectic_form() -> Form {
    let d = Form::differential;
    wedge(&d(Coordinate::X1), &d(Coordinate::Y1))
        .add(&wedge(&d(Coordinate::X2), &d(Coordinate::Y2)))
}

/// The handle potential: x-squares minus half the y-squares.
pub fn handle_potential() -> Poly {
    let sq = |x: Coordinate| coord(x) * coord(x);
    sq(Coordinate::X1) - sq(Coordinate::Y1).scale(&half()) + sq(Coordinate::X2)
        - sq(Coordinate::Y2).scale(&half())
}

/// The Liouville field of the handle, the gradient of the potential.
pub fn liouville_field() -> VField {
    VField::new([
        Poly::integer(2) * coord(Coordinate::X1),
        -coord(Coordinate::Y1),
        Poly::integer(2) * coord(Coordinate::X2),
        -coord(Coordinate::Y2),
    ])
}

/// The contact form induced on level sets transverse to the field.
pub fn handle_contact_form() -> Form {
    Form::new(
        1,
        vec![
            (0b0001, coord(Coordinate::Y1)),
            (0b0010, Poly::integer(2) * coord(Coordinate::X1)),
            (0b0100, coord(Coordinate::Y2)),
            (0b1000, Poly::integer(2) * coord(Coordinate::X2)),
        ],
    )
    .expect("degree-1 masks")
}

/// Squared norm of the framing columns: 4 x-squares plus y-squares.
pub fn frame_norm_squared() -> Poly {
    let sq = |x: Coordinate| coord(x) * coord(x);
    Poly::integer(4) * sq(Coordinate::X1)
        + sq(Coordinate::Y1)
        + Poly::integer(4) * sq(Coordinate::X2)
        + sq(Coordinate::Y2)
}

/// Un-normalized framing matrix. Its columns are pairwise orthogonal with
/// common squared norm `frame_norm_squared`, which is what the theta
/// check verifies.
pub fn frame_numerator() -> PolyMatrix {
    let x1 = || coord(Coordinate::X1);
    let y1 = || coord(Coordinate::Y1);
    let x2 = || coord(Coordinate::X2);
    let y2 = || coord(Coordinate::Y2);
    let two = |p: Poly| Poly::integer(2) * p;
    let rows: [[Poly; 4]; 4] = [
        [two(x1()), y1(), -two(x2()), y2()],
        [-y1(), two(x1()), -y2(), -two(x2())],
        [two(x2()), y2(), two(x1()), -y1()],
        [-y2(), two(x2()), y1(), two(x1())],
    ];
    PolyMatrix::from_fn(|r, c| rows[r][c].clone())
}

/// Matrix of the standard symplectic form in the fixed coordinate order:
/// block-diagonal rotation pairs.
pub fn pairing_matrix() -> PolyMatrix {
    let entries: [[i64; 4]; 4] =
        [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]];
    PolyMatrix::from_fn(|r, c| Poly::integer(entries[r][c]))
}

/// The cutoff function bounding the handle region, with the symbolic
/// parameter multiplying the x-squares. Its zero set is the transverse
/// hypersurface for parameter values above 1.
pub fn region_cutoff() -> Poly {
    let sq = |x: Coordinate| coord(x) * coord(x);
    Poly::parameter() * (sq(Coordinate::X1) + sq(Coordinate::X2))
        - (sq(Coordinate::Y1) + sq(Coordinate::Y2)).scale(&half())
        - Poly::one()
}

/// Pairing of the cutoff gradient with the Liouville field, expanded as a
/// polynomial in the parameter and the coordinates.
pub fn transversality_pairing() -> Poly {
    let sq = |x: Coordinate| coord(x) * coord(x);
    Poly::integer(4) * Poly::parameter() * (sq(Coordinate::X1) + sq(Coordinate::X2))
        + sq(Coordinate::Y1)
        + sq(Coordinate::Y2)
}

/// One verification item: which identity, whether both sides matched, and
/// a rendering of the identity checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// Runs the full identity suite against the claimed contact form. Split
/// out so the suite can be exercised with corrupted inputs.
fn run_checks(claimed_contact_form: &Form) -> Vec<CheckReport> {
    let omega = standard_symplectic_form();
    let field = liouville_field();
    let contracted = interior_product(&field, &omega).expect("degree 2");

    let liouville = exterior_d(&contracted) == omega;
    let grad_matches = gradient(&handle_potential()) == field;
    let alpha = &contracted == claimed_contact_form;

    let numerator = frame_numerator();
    let norm = frame_norm_squared();
    let pairing = pairing_matrix();
    let gram = numerator.transpose().mul(&numerator);
    let twisted = numerator.transpose().mul(&pairing).mul(&numerator);
    let theta = gram == PolyMatrix::identity().scale(&norm) && twisted == pairing.scale(&norm);

    let left = IntegerMatrix::from_rows(&[vec![1, 0], vec![-1, 1]]).expect("2x2");
    let right = IntegerMatrix::from_rows(&[vec![1, 1], vec![0, 1]]).expect("2x2");
    let product = IntegerMatrix::from_rows(&[vec![1, 1], vec![-1, 0]]).expect("2x2");
    let monodromy = left.mul(&right).expect("2x2 product") == product;

    let transversality =
        gradient(&region_cutoff()).dot(&field) == transversality_pairing();

    vec![
        CheckReport {
            name: "liouville",
            pass: liouville,
            detail: "d(interior(v, omega)) = omega".to_string(),
        },
        CheckReport {
            name: "gradient",
            pass: grad_matches,
            detail: "gradient of the potential = v".to_string(),
        },
        CheckReport {
            name: "alpha",
            pass: alpha,
            detail: "interior(v, omega) = alpha".to_string(),
        },
        CheckReport {
            name: "theta",
            pass: theta,
            detail: "M'M = N*I and M'JM = N*J".to_string(),
        },
        CheckReport {
            name: "monodromy",
            pass: monodromy,
            detail: "[[1,0],[-1,1]] * [[1,1],[0,1]] = [[1,1],[-1,0]]".to_string(),
        },
        CheckReport {
            name: "transversality",
            pass: transversality,
            detail: "gradient(cutoff) . v = 4*A*(x1^2+x2^2) + y1^2 + y2^2".to_string(),
        },
    ]
}

/// The six exact identities of the handle construction, each expanded
/// symbolically and reported by name.
pub fn verify_handle_identities() -> Vec<CheckReport> {
    run_checks(&handle_contact_form())
}

fn unit_vector(i: usize) -> [Rational; 4] {
    let mut v = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
    v[i] = Rational::one();
    v
}

/// Deterministic positively-oriented completion of a nonzero vector: the
/// three coordinate axes other than the one of largest absolute entry
/// (ties to the lowest index), in ascending order, with the last two
/// swapped when the resulting 4-frame is negatively oriented.
fn completion_basis(v: &[Rational; 4]) -> [[Rational; 4]; 3] {
    let mut pivot = 0;
    for i in 1..4 {
        if v[i].abs() > v[pivot].abs() {
            pivot = i;
        }
    }
    let axes: Vec<usize> = (0..4).filter(|&i| i != pivot).collect();
    let mut basis = [
        unit_vector(axes[0]),
        unit_vector(axes[1]),
        unit_vector(axes[2]),
    ];
    let rows: Vec<Vec<Rational>> = std::iter::once(v.to_vec())
        .chain(basis.iter().map(|b| b.to_vec()))
        .collect();
    if det(&rows).is_negative() {
        basis.swap(1, 2);
    }
    basis
}

/// Value of the contact volume at a point of the lower level set: the
/// 3-form alpha wedge d(alpha) evaluated on a positively-oriented
/// completion of the field vector. The value depends on the completion
/// but its sign does not, since contracting the field into the 3-form
/// gives zero identically.
pub fn contact_positivity_at(point: &[Rational; 4]) -> Result<Rational, HandleformsError> {
    let residual =
        handle_potential().eval(point, None).expect("no parameter") + Rational::one();
    if !residual.is_zero() {
        return Err(HandleformsError::OffSurface { residual: residual.to_string() });
    }
    let v = liouville_field().eval(point, None).expect("no parameter");
    if v.iter().all(Rational::is_zero) {
        return Err(HandleformsError::VanishingField);
    }
    let alpha = handle_contact_form();
    let volume = wedge(&alpha, &exterior_d(&alpha));
    let basis = completion_basis(&v);
    volume.eval_on_vectors(point, None, &basis)
}

/// Pairing of the cutoff gradient with the field at a point of the cutoff
/// hypersurface, for a fixed parameter value above 1.
pub fn sigma_transversality_at(
    param: &Rational,
    point: &[Rational; 4],
) -> Result<Rational, HandleformsError> {
    if param <= &Rational::one() {
        return Err(HandleformsError::ParamOutOfRange { value: param.to_string() });
    }
    let residual = region_cutoff().eval(point, Some(param))?;
    if !residual.is_zero() {
        return Err(HandleformsError::OffSurface { residual: residual.to_string() });
    }
    transversality_pairing().eval(point, Some(param))
}

/// Deterministic rational points on the lower level set, starting with
/// the two reference points. One family walks a rational line, the other
/// walks the core circle through its rational parametrization; both stay
/// on the surface identically.
pub fn contact_sample_points(count: usize) -> Vec<[Rational; 4]> {
    let mut points: Vec<[Rational; 4]> = Vec::with_capacity(count);
    let push = |pt: [Rational; 4], points: &mut Vec<[Rational; 4]>| {
        if points.len() < count && !points.contains(&pt) {
            debug_assert_eq!(
                handle_potential().eval(&pt, None).expect("no parameter"),
                -Rational::one()
            );
            points.push(pt);
        }
    };
    push(
        [Rational::zero(), Rational::one(), Rational::zero(), Rational::one()],
        &mut points,
    );
    push(
        [Rational::integer(1), Rational::integer(2), Rational::zero(), Rational::zero()],
        &mut points,
    );
    let mut k: i64 = 1;
    while points.len() < count {
        // Line family: (a, a+1, 0, a-1) solves the level equation for
        // every rational a.
        let a = Rational::integer(k);
        push(
            [
                a.clone(),
                &a + &Rational::one(),
                Rational::zero(),
                &a - &Rational::one(),
            ],
            &mut points,
        );
        // Core-circle family: y-pair on the circle of squared radius 2,
        // rationally parametrized through (1, 1).
        let t = Rational::integer(k);
        let denom = &t * &t + Rational::one();
        let y1 = (&t * &t - Rational::integer(2) * &t - Rational::one()) / &denom;
        let y2 = (Rational::one() - Rational::integer(2) * &t - &t * &t) / &denom;
        push([Rational::zero(), y1, Rational::zero(), y2], &mut points);
        k += 1;
    }
    points
}

/// Searches for a rational point with the given nonnegative square-sum:
/// scales the radius by square denominators up to a fixed bound and looks
/// for integer two-square decompositions.
fn two_square_point(radius: &Rational) -> Result<(Rational, Rational), HandleformsError> {
    let missing = || HandleformsError::NoRationalSample { radius: radius.to_string() };
    for scale in 1i64..=64 {
        let scaled = radius * Rational::integer(scale * scale);
        if !scaled.is_integer() {
            continue;
        }
        let target = scaled.numer().clone();
        let limit = target.sqrt().to_u64().map_or(100_000, |l| l.min(100_000));
        // Descending, so the first coordinate takes the largest square.
        for first in (0..=limit).rev() {
            let first_big = num_bigint::BigInt::from(first);
            let rest = &target - &first_big * &first_big;
            let root = rest.sqrt();
            if &root * &root == rest {
                let second = root.to_i64().ok_or_else(missing)?;
                return Ok((
                    Rational::new(i64::try_from(first).expect("bounded"), scale)
                        .expect("nonzero"),
                    Rational::new(second, scale).expect("nonzero"),
                ));
            }
        }
    }
    Err(missing())
}

/// Deterministic rational points on the cutoff hypersurface for a fixed
/// parameter value above 1: a base point with unit first coordinate,
/// extended by rational rotations of its y-pair.
pub fn sigma_sample_points(
    param: &Rational,
    count: usize,
) -> Result<Vec<[Rational; 4]>, HandleformsError> {
    if param <= &Rational::one() {
        return Err(HandleformsError::ParamOutOfRange { value: param.to_string() });
    }
    // With x = (1, 0) the level equation forces the y-pair onto the
    // circle of squared radius 2(param - 1).
    let radius = Rational::integer(2) * (param - Rational::one());
    let (c, d) = two_square_point(&radius)?;
    let cutoff = region_cutoff();
    let mut points: Vec<[Rational; 4]> = Vec::with_capacity(count);
    let push = |pt: [Rational; 4], points: &mut Vec<[Rational; 4]>| {
        if points.len() < count && !points.contains(&pt) {
            debug_assert_eq!(cutoff.eval(&pt, Some(param)).expect("param given"), Rational::zero());
            points.push(pt);
        }
    };
    push([Rational::one(), c.clone(), Rational::zero(), d.clone()], &mut points);
    let mut t: i64 = 1;
    while points.len() < count {
        // Rational rotation by parameter t preserves the square-sum.
        let tr = Rational::integer(t);
        let denom = &tr * &tr + Rational::one();
        let cos = (Rational::one() - &tr * &tr) / &denom;
        let sin = Rational::integer(2) * &tr / &denom;
        let y1 = &cos * &c - &sin * &d;
        let y2 = &sin * &c + &cos * &d;
        push([Rational::one(), y1, Rational::zero(), y2], &mut points);
        t += 1;
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(values: [i64; 4]) -> [Rational; 4] {
        values.map(Rational::integer)
    }

    #[test]
    fn all_identities_pass() {
        let report = verify_handle_identities();
        let names: Vec<&str> = report.iter().map(|c| c.name).collect();
        assert_eq!(
            names,
            ["liouville", "gradient", "alpha", "theta", "monodromy", "transversality"]
        );
        for check in &report {
            assert!(check.pass, "check {} failed", check.name);
        }
    }

    #[test]
    fn corrupted_contact_form_fails_only_the_alpha_item() {
        // Flip the sign of the first component.
        let good = handle_contact_form();
        let mut bad_components: Vec<(u8, Poly)> = good
            .components()
            .map(|(mask, poly)| (mask, poly.clone()))
            .collect();
        bad_components[0].1 = -bad_components[0].1.clone();
        let bad = Form::new(1, bad_components).unwrap();

        let report = run_checks(&bad);
        for check in &report {
            assert_eq!(check.pass, check.name != "alpha", "unexpected state for {}", check.name);
        }
    }

    #[test]
    fn contracting_the_field_into_the_potential_differential() {
        let df = exterior_d(&Form::scalar(handle_potential()));
        let contracted = interior_product(&liouville_field(), &df).unwrap();
        assert_eq!(contracted, Form::scalar(frame_norm_squared()));
    }

    #[test]
    fn contact_form_differential_is_the_symplectic_form() {
        assert_eq!(exterior_d(&handle_contact_form()), standard_symplectic_form());
        let alpha = handle_contact_form();
        assert!(wedge(&alpha, &alpha).is_zero());
    }

    #[test]
    fn positivity_reference_values() {
        assert_eq!(
            contact_positivity_at(&pt([0, 1, 0, 1])).unwrap(),
            Rational::integer(1)
        );
        assert_eq!(
            contact_positivity_at(&pt([1, 2, 0, 0])).unwrap(),
            Rational::integer(2)
        );
    }

    #[test]
    fn positivity_rejects_points_off_the_surface() {
        let err = contact_positivity_at(&pt([0, 1, 0, 0])).unwrap_err();
        assert_eq!(err, HandleformsError::OffSurface { residual: "1/2".to_string() });
    }

    #[test]
    fn positivity_with_an_orientation_swap() {
        // At (0,-1,0,-1) the raw axis completion is negatively oriented,
        // so the rule swaps the last two axes; the value stays positive.
        let value = contact_positivity_at(&pt([0, -1, 0, -1])).unwrap();
        assert_eq!(value, Rational::integer(1));
    }

    #[test]
    fn positivity_across_generated_samples() {
        for point in contact_sample_points(24) {
            let value = contact_positivity_at(&point).unwrap();
            assert!(value.is_positive(), "nonpositive at {point:?}");
        }
    }

    #[test]
    fn sample_generator_includes_reference_points() {
        let points = contact_sample_points(24);
        assert_eq!(points.len(), 24);
        assert!(points.contains(&pt([0, 1, 0, 1])));
        assert!(points.contains(&pt([1, 2, 0, 0])));
        for (i, a) in points.iter().enumerate() {
            assert!(!points[i + 1..].contains(a), "duplicate sample {a:?}");
        }
    }

    #[test]
    fn sigma_reference_values() {
        let two = Rational::integer(2);
        assert_eq!(
            sigma_transversality_at(&two, &pt([1, 1, 0, 1])).unwrap(),
            Rational::integer(10)
        );
        let three_halves = Rational::new(3, 2).unwrap();
        assert_eq!(
            sigma_transversality_at(&three_halves, &pt([1, 1, 0, 0])).unwrap(),
            Rational::integer(7)
        );
    }

    #[test]
    fn sigma_rejections() {
        let two = Rational::integer(2);
        assert!(matches!(
            sigma_transversality_at(&two, &pt([1, 0, 0, 0])),
            Err(HandleformsError::OffSurface { .. })
        ));
        assert!(matches!(
            sigma_transversality_at(&Rational::one(), &pt([1, 1, 0, 1])),
            Err(HandleformsError::ParamOutOfRange { .. })
        ));
    }

    #[test]
    fn sigma_samples_stay_on_the_surface() {
        let two = Rational::integer(2);
        let points = sigma_sample_points(&two, 12).unwrap();
        assert_eq!(points.len(), 12);
        assert!(points.contains(&pt([1, 1, 0, 1])));
        for point in &points {
            let value = sigma_transversality_at(&two, point).unwrap();
            assert!(value.is_positive());
        }

        let three_halves = Rational::new(3, 2).unwrap();
        let more = sigma_sample_points(&three_halves, 6).unwrap();
        assert!(more.contains(&pt([1, 1, 0, 0])));
    }

    #[test]
    fn sigma_samples_need_a_rational_circle_point() {
        // Squared radius 3 is not a sum of two rational squares.
        let param = Rational::new(5, 2).unwrap();
        assert!(matches!(
            sigma_sample_points(&param, 3),
            Err(HandleformsError::NoRationalSample { .. })
        ));
        assert!(sigma_sample_points(&Rational::one(), 3).is_err());
    }
}
