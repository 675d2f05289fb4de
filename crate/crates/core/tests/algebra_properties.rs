//! Property suites for the exact linear algebra layer. The matrix
//! identities are checked against test-local big-integer arithmetic, not
//! against the library's own multiplication.

use contact_surgery::algebra::{
    smith_normal_form, AbelianGroupPresentation, ClassInfo, IntegerMatrix, Rational,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn to_big(m: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| BigInt::from(m.get(r, c))).collect())
        .collect()
}

fn big_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| (0..inner).map(|k| &row[k] * &b[k][c]).sum())
                .collect()
        })
        .collect()
}

fn big_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| {
                row.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, v)| v.clone()).collect()
            })
            .collect();
        let term = &m[0][col] * big_det(&minor);
        if col % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn matrix_strategy() -> impl Strategy<Value = IntegerMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(rows, cols)| {
        proptest::collection::vec(-9i64..=9, rows * cols)
            .prop_map(move |entries| IntegerMatrix::new(rows, cols, entries).expect("shape"))
    })
}

/// Generators, relation rows, a class vector, and combination
/// coefficients for building one redundant extra row.
fn presentation_case() -> impl Strategy<Value = (usize, Vec<Vec<i64>>, Vec<i64>, Vec<i64>)> {
    (1usize..=4).prop_flat_map(|gens| {
        proptest::collection::vec(proptest::collection::vec(-9i64..=9, gens), 0..=4)
            .prop_flat_map(move |rows| {
                let count = rows.len();
                (
                    Just(gens),
                    Just(rows),
                    proptest::collection::vec(-9i64..=9, gens),
                    proptest::collection::vec(-3i64..=3, count),
                )
            })
    })
}

fn build(gens: usize, rows: &[Vec<i64>]) -> AbelianGroupPresentation {
    let entries: Vec<i64> = rows.iter().flatten().copied().collect();
    let relations = IntegerMatrix::new(rows.len(), gens, entries).expect("shape");
    AbelianGroupPresentation::new(gens, relations).expect("columns match")
}

proptest! {
    #[test]
    fn smith_decomposition_invariants(a in matrix_strategy()) {
        let snf = smith_normal_form(&a).unwrap();

        let product = big_mul(&big_mul(&to_big(snf.u()), &to_big(&a)), &to_big(snf.v()));
        prop_assert_eq!(product, to_big(snf.d()));
        prop_assert_eq!(big_det(&to_big(snf.u())).abs(), BigInt::one());
        prop_assert_eq!(big_det(&to_big(snf.v())).abs(), BigInt::one());

        // Off-diagonal zero, diagonal nonnegative, zeros trailing, and
        // each nonzero entry divides the next.
        let d = snf.d();
        for r in 0..d.rows() {
            for c in 0..d.cols() {
                if r != c {
                    prop_assert_eq!(d.get(r, c), 0);
                }
            }
        }
        let diag = snf.diagonal();
        for pair in diag.windows(2) {
            prop_assert!(pair[0] >= 0 && pair[1] >= 0);
            if pair[0] == 0 {
                prop_assert_eq!(pair[1], 0);
            } else if pair[1] != 0 {
                prop_assert_eq!(pair[1] % pair[0], 0);
            }
        }
    }

    #[test]
    fn class_divisibility_ignores_redundant_relations(
        (gens, rows, class, coefficients) in presentation_case()
    ) {
        let base = build(gens, &rows);
        let mut extended_rows = rows.clone();
        let mut extra = vec![0i64; gens];
        for (row, &weight) in rows.iter().zip(&coefficients) {
            for (slot, &value) in row.iter().enumerate() {
                extra[slot] += weight * value;
            }
        }
        extended_rows.push(extra);
        let extended = build(gens, &extended_rows);

        prop_assert_eq!(
            base.class_divisibility(&class).unwrap(),
            extended.class_divisibility(&class).unwrap()
        );
    }

    #[test]
    fn zero_class_is_torsion((gens, rows, _, _) in presentation_case()) {
        let presentation = build(gens, &rows);
        let zero = vec![0i64; gens];
        prop_assert_eq!(presentation.class_divisibility(&zero).unwrap(), ClassInfo::Torsion);
    }

    #[test]
    fn rational_serde_round_trip(p in -400i64..=400, q in 1i64..=60) {
        let value = Rational::new(p, q).unwrap();
        let json = serde_json::to_string(&value).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), value);
    }

    #[test]
    fn matrix_serde_round_trip(m in matrix_strategy()) {
        let json = serde_json::to_string(&m).unwrap();
        prop_assert_eq!(serde_json::from_str::<IntegerMatrix>(&json).unwrap(), m);
    }

    #[test]
    fn class_info_serde_round_trip(d in proptest::option::of(1i64..=50)) {
        let value = match d {
            None => ClassInfo::Torsion,
            Some(d) => ClassInfo::NonTorsion(d),
        };
        let json = serde_json::to_string(&value).unwrap();
        prop_assert_eq!(serde_json::from_str::<ClassInfo>(&json).unwrap(), value);
    }
}
