use num_bigint::BigInt;

use super::LaurentPoly;

/// The q-binomial coefficient `[m choose k]_q`, built from the Pascal
/// recurrence `[m,k] = [m-1,k-1] + q^k [m-1,k]`. Zero when `k > m`.
pub fn gaussian_binomial(m: usize, k: usize) -> LaurentPoly {
    if k > m {
        return LaurentPoly::zero();
    }
    // row[j] holds [i choose j] for the current i.
    let mut row = vec![LaurentPoly::one()];
    for i in 1..=m {
        let mut next = Vec::with_capacity(i + 1);
        for j in 0..=i.min(k) {
            let left = if j > 0 {
                row[j - 1].clone()
            } else {
                LaurentPoly::zero()
            };
            let right = row.get(j).map(|p| p.shift(j as i64)).unwrap_or_default();
            next.push(&left + &right);
        }
        row = next;
    }
    row.swap_remove(k)
}

/// `[m choose k]_q` at an integer `q`, computed directly as a product of
/// ratios `(q^{m-i} - 1) / (q^{i+1} - 1)`.
pub fn gaussian_binomial_at(m: usize, k: usize, q: u64) -> BigInt {
    if k > m {
        return BigInt::from(0);
    }
    let q = BigInt::from(q);
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..k {
        num *= num_traits::pow(q.clone(), m - i) - 1u32;
        den *= num_traits::pow(q.clone(), i + 1) - 1u32;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(gaussian_binomial(2, 1).to_string(), "q+1");
        assert_eq!(gaussian_binomial(4, 2).to_string(), "q^4+q^3+2q^2+q+1");
        assert_eq!(gaussian_binomial(5, 0), LaurentPoly::one());
        assert_eq!(gaussian_binomial(5, 5), LaurentPoly::one());
        assert_eq!(gaussian_binomial(0, 0), LaurentPoly::one());
        assert!(gaussian_binomial(2, 3).is_zero());
    }

    #[test]
    fn direct_evaluation_agrees() {
        for m in 0..=7 {
            for k in 0..=m + 1 {
                for q in [2u64, 3, 7] {
                    let poly = gaussian_binomial(m, k)
                        .eval_integer(&BigInt::from(q))
                        .unwrap();
                    assert_eq!(poly, gaussian_binomial_at(m, k, q), "m={m} k={k} q={q}");
                }
            }
        }
    }
}
