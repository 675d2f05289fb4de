use num_traits::ToPrimitive;

use super::{AlgebraError, Rational};

/// Expands `r <= -1` as `a0 - 1/(a1 - 1/(... - 1/ak))`.
///
/// Every coefficient satisfies `ai <= -2` except that `a0 = -1` occurs
/// exactly when `r = -1`. The expansion with this coefficient range is
/// unique, and evaluating it back reproduces `r` exactly.
pub fn neg_continued_fraction(r: &Rational) -> Result<Vec<i64>, AlgebraError> {
    if *r > Rational::integer(-1) {
        return Err(AlgebraError::ContinuedFractionRange { value: r.to_string() });
    }
    let mut rest = r.clone();
    let mut coefficients = Vec::new();
    loop {
        let fl = rest.floor();
        let a = fl
            .to_i64()
            .ok_or_else(|| AlgebraError::Overflow { value: fl.to_string() })?;
        coefficients.push(a);
        if rest.is_integer() {
            return Ok(coefficients);
        }
        // rest = a - 1/next with rest - a in (0, 1), so next < -1 and the
        // following coefficient is at most -2.
        let frac = &rest - Rational::from_bigint(fl);
        rest = -frac.recip();
    }
}
