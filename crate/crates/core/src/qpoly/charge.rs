use num_bigint::BigInt;

use super::{LaurentPoly, PolyError};
use crate::combinatorics::{enumerate_ssyt, Partition, Tableau};

/// Lascoux–Schützenberger charge of a word whose content is a partition
/// (letter 1 at least as frequent as letter 2, and so on).
///
/// The word is split into standard subwords: scanning leftwards from the
/// right end, cyclically, pick the first unused 1, then the first unused 2
/// to its left (wrapping around), and so on up to the largest remaining
/// letter. In each subword letter 1 has index 0 and letter `r + 1` has the
/// index of `r`, plus one when it sits to the right of `r`. The charge is the
/// sum of all indices over all subwords.
pub fn charge_of_word(word: &[usize]) -> Result<u64, PolyError> {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut content = vec![0usize; max];
    for &x in word {
        if x == 0 {
            return Err(PolyError::ContentNotPartition(word.to_vec()));
        }
        content[x - 1] += 1;
    }
    if content.windows(2).any(|w| w[0] < w[1]) {
        return Err(PolyError::ContentNotPartition(content));
    }

    let n = word.len();
    let mut used = vec![false; n];
    let mut remaining = n;
    let mut total = 0u64;
    while remaining > 0 {
        let top = (0..n)
            .filter(|&i| !used[i])
            .map(|i| word[i])
            .max()
            .unwrap_or(0);
        // The cursor starts just past the right end.
        let mut cursor = n;
        let mut prev_pos: Option<usize> = None;
        let mut index = 0u64;
        for letter in 1..=top {
            let pos = (1..=n)
                .map(|s| (cursor + n - s) % n)
                .find(|&j| !used[j] && word[j] == letter)
                .expect("partition content guarantees every letter up to the maximum");
            if let Some(p) = prev_pos {
                if pos > p {
                    index += 1;
                }
            }
            total += index;
            used[pos] = true;
            remaining -= 1;
            prev_pos = Some(pos);
            cursor = pos;
        }
    }
    Ok(total)
}

/// Charge of the bottom-row-first reading word of `t`.
pub fn charge(t: &Tableau) -> Result<u64, PolyError> {
    charge_of_word(&t.reading_word())
}

/// `K_{shape,weight}(q) = Σ_T q^{charge(T)}` over semistandard tableaux of the
/// given shape and content.
pub fn kostka_foulkes(shape: &Partition, weight: &Partition) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for t in enumerate_ssyt(shape, weight.parts()) {
        let c = charge(&t).expect("weight is a partition");
        out.add_term(c as i64, BigInt::from(1));
    }
    out
}

/// `K̃_{shape,weight}(q) = q^{n(weight)} K_{shape,weight}(1/q)`.
pub fn modified_kostka_foulkes(shape: &Partition, weight: &Partition) -> LaurentPoly {
    kostka_foulkes(shape, weight)
        .invert_variable()
        .shift(weight.n_stat() as i64)
}
