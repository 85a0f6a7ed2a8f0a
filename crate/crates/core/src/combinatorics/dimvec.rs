use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::partition::{parse_csv, write_csv};
use super::{CombinatoricsError, Partition};

/// An ordered tuple of non-negative integers: the successive quotient
/// dimensions of a partial flag, and equally a torus weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct DimVector(Vec<usize>);

impl DimVector {
    pub fn new(entries: Vec<usize>) -> Self {
        DimVector(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Number of steps `n` of the flag.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Drops the first entry.
    pub fn tail(&self) -> DimVector {
        DimVector(self.0.get(1..).unwrap_or_default().to_vec())
    }

    /// Dimension of the flag variety component: `Σ_{i<j} d_i d_j`.
    pub fn flag_dim(&self) -> usize {
        let total = self.total();
        let sq: usize = self.0.iter().map(|&x| x * x).sum();
        (total * total - sq) / 2
    }

    /// The partition with the same nonzero entries.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }

    /// A partition padded with zeros to length `n`, or `None` if it has more
    /// than `n` parts.
    pub fn padded(p: &Partition, n: usize) -> Option<DimVector> {
        if p.len() > n {
            return None;
        }
        let mut v = p.parts().to_vec();
        v.resize(n, 0);
        Some(DimVector(v))
    }

    pub fn reversed(&self) -> DimVector {
        DimVector(self.0.iter().rev().copied().collect())
    }
}

impl From<Vec<usize>> for DimVector {
    fn from(v: Vec<usize>) -> Self {
        DimVector(v)
    }
}

impl From<DimVector> for Vec<usize> {
    fn from(v: DimVector) -> Self {
        v.0
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, &self.0)
    }
}

impl FromStr for DimVector {
    type Err = CombinatoricsError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v = parse_csv(s)?;
        if v.is_empty() {
            return Err(CombinatoricsError::Parse(s.to_string()));
        }
        Ok(DimVector(v))
    }
}

/// `Q_{n,d}`: all `n`-tuples of non-negative integers summing to `d`, in
/// lexicographically decreasing order.
pub fn enumerate_dimvecs(n: usize, d: usize) -> Result<Vec<DimVector>, CombinatoricsError> {
    if n == 0 || d == 0 {
        return Err(CombinatoricsError::InvalidParameters { n, d });
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fill_compositions(n, d, &mut cur, &mut out);
    Ok(out)
}

fn fill_compositions(slots: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<DimVector>) {
    if slots == 1 {
        cur.push(rem);
        out.push(DimVector(cur.clone()));
        cur.pop();
        return;
    }
    for first in (0..=rem).rev() {
        cur.push(first);
        fill_compositions(slots - 1, rem - first, cur, out);
        cur.pop();
    }
}
