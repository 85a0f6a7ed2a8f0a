use super::{CombinatoricsError, Partition};

fn hook_lengths(shape: &Partition) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
    let conj = shape.conjugate();
    shape.parts().iter().enumerate().flat_map(move |(i, &row)| {
        let conj = conj.clone();
        (0..row).map(move |j| (i, j, (row - j - 1) + (conj.part(j) - i - 1) + 1))
    })
}

fn checked_product(mut factors: impl Iterator<Item = u128>) -> Result<u128, CombinatoricsError> {
    factors.try_fold(1u128, |acc, f| {
        acc.checked_mul(f).ok_or(CombinatoricsError::Overflow)
    })
}

fn narrow(x: u128) -> Result<u64, CombinatoricsError> {
    u64::try_from(x).map_err(|_| CombinatoricsError::Overflow)
}

/// Number of standard Young tableaux of `shape`, by the hook-length formula.
pub fn syt_count(shape: &Partition) -> Result<u64, CombinatoricsError> {
    let num = checked_product(1..=shape.size() as u128)?;
    let den = checked_product(hook_lengths(shape).map(|(_, _, h)| h as u128))?;
    narrow(num / den)
}

/// Dimension of the Schur functor of `shape` applied to an `n`-dimensional
/// space, by the hook-content formula. Zero when `shape` has more than `n`
/// rows.
pub fn schur_dim(shape: &Partition, n: usize) -> Result<u64, CombinatoricsError> {
    if shape.len() > n {
        return Ok(0);
    }
    let num = checked_product(hook_lengths(shape).map(|(i, j, _)| (n + j - i) as u128))?;
    let den = checked_product(hook_lengths(shape).map(|(_, _, h)| h as u128))?;
    narrow(num / den)
}

/// `(Σ μ_i)! / Π μ_i!`.
pub fn multinomial(parts: &[usize]) -> Result<u64, CombinatoricsError> {
    // Build up as a product of binomials to keep intermediates small.
    let mut acc: u128 = 1;
    let mut total = 0usize;
    for &m in parts {
        for k in 1..=m {
            total += 1;
            acc = acc
                .checked_mul(total as u128)
                .ok_or(CombinatoricsError::Overflow)?
                / k as u128;
        }
    }
    narrow(acc)
}

/// `base^exp` with overflow detection.
pub fn checked_pow(base: usize, exp: usize) -> Result<u64, CombinatoricsError> {
    (base as u64)
        .checked_pow(u32::try_from(exp).map_err(|_| CombinatoricsError::Overflow)?)
        .ok_or(CombinatoricsError::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn hook_length_examples() {
        assert_eq!(syt_count(&p("2,1")).unwrap(), 2);
        assert_eq!(syt_count(&p("5")).unwrap(), 1);
        assert_eq!(syt_count(&p("2,2")).unwrap(), 2);
        assert_eq!(syt_count(&p("3,2,1")).unwrap(), 16);
    }

    #[test]
    fn hook_content_examples() {
        assert_eq!(schur_dim(&p("2,1"), 2).unwrap(), 2);
        assert_eq!(schur_dim(&p("3"), 2).unwrap(), 4);
        assert_eq!(schur_dim(&p("1,1,1"), 2).unwrap(), 0);
        assert_eq!(schur_dim(&p("2,1"), 3).unwrap(), 8);
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(&[2, 1]).unwrap(), 3);
        assert_eq!(multinomial(&[1, 1, 1, 1]).unwrap(), 24);
        assert_eq!(multinomial(&[0, 3]).unwrap(), 1);
    }

    #[test]
    fn overflow_is_reported() {
        let huge = Partition::column(40);
        assert_eq!(syt_count(&huge), Err(CombinatoricsError::Overflow));
        assert_eq!(checked_pow(10, 30), Err(CombinatoricsError::Overflow));
    }
}
