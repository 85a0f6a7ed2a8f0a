use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::CombinatoricsError;

/// A weakly decreasing sequence of positive integers.
///
/// The same value labels a Jordan type (a nilpotent orbit), a Young diagram
/// shape and a highest weight. The empty partition is allowed and is the only
/// partition of zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CombinatoricsError> {
        if parts.contains(&0) {
            return Err(CombinatoricsError::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinatoricsError::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros, so any composition can be turned into the
    /// partition with the same multiset of nonzero parts.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `(1, 1, ..., 1)` with `d` parts.
    pub fn column(d: usize) -> Self {
        Partition(vec![1; d])
    }

    /// `(d)`, or the empty partition when `d == 0`.
    pub fn row(d: usize) -> Self {
        if d == 0 {
            Partition(Vec::new())
        } else {
            Partition(vec![d])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part, zero for the empty partition.
    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_column(&self) -> bool {
        self.0.iter().all(|&p| p == 1)
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = (0..self.largest())
            .map(|j| self.0.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition(cols)
    }

    /// Dominance order: every prefix sum of `self` is at least the
    /// corresponding prefix sum of `other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool, CombinatoricsError> {
        self.check_same_size(other)?;
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Strict refinement: `coarser` arises by merging groups of parts of
    /// `self`, and the two differ.
    pub fn refines(&self, coarser: &Partition) -> Result<bool, CombinatoricsError> {
        self.check_same_size(coarser)?;
        if self == coarser {
            return Ok(false);
        }
        let mut bins: Vec<usize> = coarser.0.clone();
        Ok(pack_into_bins(&self.0, &mut bins))
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Dimension of the nilpotent orbit with this Jordan type:
    /// `d² - Σ_j (λ'_j)²`.
    pub fn orbit_dim(&self) -> usize {
        let d = self.size();
        let sq: usize = self.conjugate().0.iter().map(|&c| c * c).sum();
        d * d - sq
    }

    fn check_same_size(&self, other: &Partition) -> Result<(), CombinatoricsError> {
        if self.size() != other.size() {
            return Err(CombinatoricsError::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(())
    }
}

// Assign each item to a bin so that every bin is filled exactly.
fn pack_into_bins(items: &[usize], bins: &mut [usize]) -> bool {
    let Some((&first, rest)) = items.split_first() else {
        return bins.iter().all(|&b| b == 0);
    };
    for i in 0..bins.len() {
        if bins[i] < first || bins[..i].contains(&bins[i]) {
            continue;
        }
        bins[i] -= first;
        let ok = pack_into_bins(rest, bins);
        bins[i] += first;
        if ok {
            return true;
        }
    }
    false
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = CombinatoricsError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = CombinatoricsError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::new(parse_csv(s)?)
    }
}

pub(crate) fn write_csv(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

pub(crate) fn parse_csv(s: &str) -> Result<Vec<usize>, CombinatoricsError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CombinatoricsError::Parse(s.to_string()))
        })
        .collect()
}

/// All partitions of `d` with parts at most `max_part`, in lexicographically
/// decreasing order.
pub fn partitions_bounded(max_part: usize, d: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill_partitions(d, max_part.min(d), &mut cur, &mut out);
    out
}

fn fill_partitions(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for first in (1..=max.min(rem)).rev() {
        cur.push(first);
        fill_partitions(rem - first, first, cur, out);
        cur.pop();
    }
}

/// `P_{n,d}`: partitions of `d` with every part at most `n`.
pub fn enumerate_partitions(n: usize, d: usize) -> Result<Vec<Partition>, CombinatoricsError> {
    if n == 0 || d == 0 {
        return Err(CombinatoricsError::InvalidParameters { n, d });
    }
    Ok(partitions_bounded(n, d))
}

/// All partitions of `d`.
pub fn all_partitions(d: usize) -> Vec<Partition> {
    partitions_bounded(d, d)
}

/// Dimension of `{a : a^n = 0}` in `gl_d`, i.e. the orbit dimension of the
/// dominance-greatest Jordan type with parts at most `n`.
pub fn nilcone_dim(n: usize, d: usize) -> Result<usize, CombinatoricsError> {
    if n == 0 || d == 0 {
        return Err(CombinatoricsError::InvalidParameters { n, d });
    }
    Ok(dense_type(n, d).orbit_dim())
}

/// `(n, n, ..., n, r)` with `r = d mod n`.
pub fn dense_type(n: usize, d: usize) -> Partition {
    let mut parts = vec![n; d / n];
    if !d.is_multiple_of(n) {
        parts.push(d % n);
    }
    Partition(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn enumerates_p_nd() {
        assert_eq!(
            enumerate_partitions(2, 3).unwrap(),
            vec![p("2,1"), p("1,1,1")]
        );
        assert_eq!(
            enumerate_partitions(3, 3).unwrap(),
            vec![p("3"), p("2,1"), p("1,1,1")]
        );
        assert_eq!(enumerate_partitions(1, 3).unwrap(), vec![p("1,1,1")]);
        assert!(enumerate_partitions(0, 3).is_err());
        assert!(enumerate_partitions(2, 0).is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("3").conjugate(), p("1,1,1"));
        assert_eq!(p("2,1").conjugate(), p("2,1"));
        assert_eq!(p("2,2").conjugate(), p("2,2"));
        assert_eq!(p("4,2,1").conjugate(), p("3,2,1,1"));
    }

    #[test]
    fn dominance_examples() {
        assert!(p("2,1").dominates(&p("1,1,1")).unwrap());
        assert!(!p("2,2").dominates(&p("3,1")).unwrap());
        assert!(!p("3,1,1,1").dominates(&p("2,2,2")).unwrap());
        assert!(!p("2,2,2").dominates(&p("3,1,1,1")).unwrap());
        assert!(matches!(
            p("2").dominates(&p("2,1")),
            Err(CombinatoricsError::SizeMismatch { .. })
        ));
    }

    #[test]
    fn refinement_examples() {
        assert!(p("1,1,1").refines(&p("2,1")).unwrap());
        assert!(p("2,1").refines(&p("3")).unwrap());
        assert!(!p("2,2").refines(&p("3,1")).unwrap());
        assert!(!p("2,1").refines(&p("2,1")).unwrap());
        assert!(p("2,2,1,1").refines(&p("3,3")).unwrap());
        assert!(p("1,1,1").refines(&p("2,1")).is_ok());
        assert!(p("1,1").refines(&p("2,1")).is_err());
    }

    #[test]
    fn statistics() {
        assert_eq!(p("1,1,1").n_stat(), 3);
        assert_eq!(p("2,1").n_stat(), 1);
        assert_eq!(p("3").n_stat(), 0);
        assert_eq!(p("1,1").orbit_dim(), 0);
        assert_eq!(p("2").orbit_dim(), 2);
        assert_eq!(p("2,1").orbit_dim(), 4);
        assert_eq!(nilcone_dim(2, 2).unwrap(), 2);
        assert_eq!(nilcone_dim(2, 3).unwrap(), 4);
        assert_eq!(nilcone_dim(3, 3).unwrap(), 6);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("2,x".parse::<Partition>().is_err());
        assert_eq!(Partition::from_unsorted(vec![0, 1, 3, 0, 2]), p("3,2,1"));
    }

    #[test]
    fn text_form_round_trips() {
        let q = p("3,1,1");
        assert_eq!(q.to_string(), "3,1,1");
        assert_eq!(q.to_string().parse::<Partition>().unwrap(), q);
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, "[3,1,1]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }
}
