use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{LaurentPoly, PolyError};

/// The unique polynomial of degree at most `degree_bound` through `samples`,
/// computed with exact rational Newton divided differences.
///
/// The first `degree_bound + 1` distinct points determine the fit; any further
/// samples must lie on it. Non-integer coefficients are an error: in this crate
/// interpolated polynomials are point counts, and a fractional coefficient
/// means the bound or the counts are wrong.
pub fn interpolate(
    samples: &[(u64, BigInt)],
    degree_bound: usize,
) -> Result<LaurentPoly, PolyError> {
    let mut points: Vec<(BigInt, BigInt)> = Vec::new();
    for (x, y) in samples {
        let x = BigInt::from(*x);
        match points.iter().find(|(px, _)| *px == x) {
            Some((_, py)) if py != y => {
                return Err(PolyError::ConflictingSamples(x.to_string()));
            }
            Some(_) => {}
            None => points.push((x, y.clone())),
        }
    }
    let needed = degree_bound + 1;
    if points.len() < needed {
        return Err(PolyError::InsufficientSamples {
            needed,
            got: points.len(),
        });
    }
    let (fit, extra) = points.split_at(needed);

    let xs: Vec<BigRational> = fit
        .iter()
        .map(|(x, _)| BigRational::from_integer(x.clone()))
        .collect();
    let mut table: Vec<BigRational> = fit
        .iter()
        .map(|(_, y)| BigRational::from_integer(y.clone()))
        .collect();
    for level in 1..needed {
        for i in (level..needed).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }

    // Expand the Newton form into monomial coefficients, innermost first.
    let mut coeffs: Vec<BigRational> = vec![BigRational::zero(); needed];
    for i in (0..needed).rev() {
        // coeffs <- coeffs * (q - x_i) + table[i]
        let mut next = vec![BigRational::zero(); needed];
        for (e, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if e + 1 < needed {
                next[e + 1] += c;
            }
            next[e] -= c * &xs[i];
        }
        next[0] += &table[i];
        coeffs = next;
    }

    let mut out = LaurentPoly::zero();
    for (e, c) in coeffs.iter().enumerate() {
        if !c.denom().is_one() {
            return Err(PolyError::NonIntegral {
                exponent: e,
                value: c.to_string(),
            });
        }
        out.add_term(e as i64, c.numer().clone());
    }

    for (x, y) in extra {
        let v = out.eval(x);
        if v != BigRational::from_integer(y.clone()) {
            return Err(PolyError::DegreeBoundViolated {
                degree_bound,
                at: x.to_string(),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(pts: &[(u64, i64)]) -> Vec<(u64, BigInt)> {
        pts.iter().map(|&(x, y)| (x, BigInt::from(y))).collect()
    }

    #[test]
    fn line_through_two_points() {
        assert_eq!(
            interpolate(&s(&[(2, 3), (3, 4)]), 1).unwrap().to_string(),
            "q+1"
        );
    }

    #[test]
    fn degree_bound_is_enforced() {
        // (2,5),(3,7),(5,11) happen to be collinear: 2q+1.
        assert_eq!(
            interpolate(&s(&[(2, 5), (3, 7), (5, 11)]), 1)
                .unwrap()
                .to_string(),
            "2q+1"
        );
        let pts = s(&[(2, 5), (3, 7), (5, 12)]);
        assert!(matches!(
            interpolate(&pts, 1),
            Err(PolyError::DegreeBoundViolated {
                degree_bound: 1,
                ..
            })
        ));
        // Quadratic through those: (q^2 - 3q + 12)/... is fractional, so the
        // bound-2 fit must also be rejected as non-integral.
        assert!(matches!(
            interpolate(&pts, 2),
            Err(PolyError::NonIntegral { .. })
        ));
    }

    #[test]
    fn lines_in_three_space() {
        assert_eq!(
            interpolate(&s(&[(2, 7), (3, 13), (5, 31)]), 2)
                .unwrap()
                .to_string(),
            "q^2+q+1"
        );
    }

    #[test]
    fn errors() {
        assert!(matches!(
            interpolate(&s(&[(2, 3)]), 1),
            Err(PolyError::InsufficientSamples { needed: 2, got: 1 })
        ));
        assert!(matches!(
            interpolate(&s(&[(2, 3), (2, 3)]), 1),
            Err(PolyError::InsufficientSamples { .. })
        ));
        assert!(matches!(
            interpolate(&s(&[(2, 0), (4, 1)]), 1),
            Err(PolyError::NonIntegral { .. })
        ));
        assert!(matches!(
            interpolate(&s(&[(2, 1), (2, 2)]), 0),
            Err(PolyError::ConflictingSamples(_))
        ));
        assert!(interpolate(&s(&[(7, 0)]), 0).unwrap().is_zero());
    }
}
