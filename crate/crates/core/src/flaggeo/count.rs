use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::cache::CountCache;
use super::jordan::{block_starts, jordan_matrix, quotient_type};
use super::{enumerate_subspaces, FlagError, FqMatrix, FqSubspace, PrimeField};
use crate::combinatorics::{DimVector, Partition};
use crate::qpoly::gaussian_binomial_at;

/// Default cap on subspaces (or cells) examined by one counting call.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// One evaluation: the number of `F_q`-rational flags of type `dimvec` in the
/// fiber over a nilpotent of Jordan type `lambda`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberCountRecord {
    pub lambda: Partition,
    pub dimvec: DimVector,
    pub q: u64,
    pub count: u64,
}

/// How the first step `V_1 ⊆ ker a` of the recursion is enumerated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Group the `d_1`-subspaces of `ker a` into Schubert cells of the socle
    /// flag (socle of the largest blocks first). The quotient type is
    /// constant on each cell, since the automorphisms of the Jordan form act
    /// on `ker a` through the parabolic subgroup of that flag; one
    /// representative per cell is reduced and weighted by the cell size.
    #[default]
    Cells,
    /// Visit every `d_1`-subspace of `ker a` individually.
    Subspaces,
}

#[derive(Debug, Default)]
struct Stats {
    cache_hits: AtomicU64,
    memo_hits: AtomicU64,
    examined: AtomicU64,
    computed: AtomicU64,
}

/// Snapshot of a counter's activity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CounterStats {
    /// Top-level requests answered from the persistent cache.
    pub cache_hits: u64,
    /// Recursive subproblems answered from the in-memory memo.
    pub memo_hits: u64,
    /// Subspaces or cells examined over `F_p`.
    pub examined: u64,
    /// Top-level requests that had to be computed.
    pub computed: u64,
}

/// Memoizing fiber counter.
///
/// The memo is keyed on `(Jordan type, remaining dimension vector, p)`; every
/// subproblem is evaluated on [`jordan_matrix`], and the answer does not
/// depend on the chosen representative of the orbit.
pub struct FiberCounter {
    budget: u64,
    strategy: Strategy,
    memo: Mutex<HashMap<(Partition, DimVector, u64), u64>>,
    cache: Option<CountCache>,
    stats: Stats,
}

impl Default for FiberCounter {
    fn default() -> Self {
        Self::new()
    }
}

impl FiberCounter {
    pub fn new() -> Self {
        FiberCounter {
            budget: DEFAULT_BUDGET,
            strategy: Strategy::default(),
            memo: Mutex::new(HashMap::new()),
            cache: None,
            stats: Stats::default(),
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn with_cache(mut self, cache: CountCache) -> Self {
        self.cache = Some(cache);
        self
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn stats(&self) -> CounterStats {
        CounterStats {
            cache_hits: self.stats.cache_hits.load(Ordering::Relaxed),
            memo_hits: self.stats.memo_hits.load(Ordering::Relaxed),
            examined: self.stats.examined.load(Ordering::Relaxed),
            computed: self.stats.computed.load(Ordering::Relaxed),
        }
    }

    /// Counts flags `V_1 ⊂ ... ⊂ V_n` with `dim V_i/V_{i-1} = d_i` and
    /// `a(V_i) ⊆ V_{i-1}`, where `a` has Jordan type `lambda`.
    ///
    /// Recursion: `V_1` ranges over `d_1`-subspaces of `ker a`, and the rest
    /// of the flag is a flag of the same kind for the map induced on
    /// `F^d / V_1`. When `a = 0` the number of choices is a Gaussian binomial
    /// and the induced map is again zero, so nothing is enumerated.
    pub fn fiber_count(
        &self,
        lambda: &Partition,
        dimvec: &DimVector,
        p: u64,
    ) -> Result<FiberCountRecord, FlagError> {
        check_sizes(lambda, dimvec)?;
        let field = PrimeField::new(p)?;
        if let Some(count) = self.cache.as_ref().and_then(|c| c.get(lambda, dimvec, p)) {
            self.stats.cache_hits.fetch_add(1, Ordering::Relaxed);
            return Ok(FiberCountRecord {
                lambda: lambda.clone(),
                dimvec: dimvec.clone(),
                q: p,
                count,
            });
        }
        let mut spent = 0u64;
        let count = self.count_rec(lambda, dimvec, field, &mut spent)?;
        self.stats.computed.fetch_add(1, Ordering::Relaxed);
        let record = FiberCountRecord {
            lambda: lambda.clone(),
            dimvec: dimvec.clone(),
            q: p,
            count,
        };
        if let Some(cache) = &self.cache {
            cache.insert(&record)?;
        }
        Ok(record)
    }

    fn count_rec(
        &self,
        lambda: &Partition,
        dimvec: &DimVector,
        field: PrimeField,
        spent: &mut u64,
    ) -> Result<u64, FlagError> {
        let Some(&d1) = dimvec.entries().first() else {
            return Ok(u64::from(lambda.is_empty()));
        };
        let rest = dimvec.tail();
        let kernel_dim = lambda.len();
        if d1 > kernel_dim {
            return Ok(0);
        }
        let p = field.characteristic();
        if lambda.is_column() {
            let choices = u64::try_from(gaussian_binomial_at(kernel_dim, d1, p))
                .map_err(|_| FlagError::Overflow)?;
            if choices == 0 {
                return Ok(0);
            }
            let sub = self.count_rec(&Partition::column(kernel_dim - d1), &rest, field, spent)?;
            return choices.checked_mul(sub).ok_or(FlagError::Overflow);
        }

        let key = (lambda.clone(), dimvec.clone(), p);
        if let Some(&hit) = self.memo.lock().expect("memo poisoned").get(&key) {
            self.stats.memo_hits.fetch_add(1, Ordering::Relaxed);
            return Ok(hit);
        }

        let a = jordan_matrix(lambda, field);
        let by_type = match self.strategy {
            Strategy::Cells => self.first_step_cells(lambda, &a, d1, spent)?,
            Strategy::Subspaces => self.first_step_subspaces(&a, d1, spent)?,
        };
        let mut total = 0u64;
        for (mu, weight) in by_type {
            let sub = self.count_rec(&mu, &rest, field, spent)?;
            let term = weight.checked_mul(sub).ok_or(FlagError::Overflow)?;
            total = total.checked_add(term).ok_or(FlagError::Overflow)?;
        }

        // Concurrent duplicates compute the same value, so last write wins.
        self.memo.lock().expect("memo poisoned").insert(key, total);
        Ok(total)
    }

    fn charge_budget(&self, spent: &mut u64, n: u64) -> Result<(), FlagError> {
        *spent += n;
        self.stats.examined.fetch_add(n, Ordering::Relaxed);
        if *spent > self.budget {
            return Err(FlagError::BudgetExceeded {
                budget: self.budget,
            });
        }
        Ok(())
    }

    // Number of choices of V_1 leading to each quotient type.
    fn first_step_cells(
        &self,
        lambda: &Partition,
        a: &FqMatrix,
        d1: usize,
        spent: &mut u64,
    ) -> Result<BTreeMap<Partition, u64>, FlagError> {
        let field = a.field();
        let p = field.characteristic();
        let d = lambda.size();
        let starts = block_starts(lambda);
        let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
        for cell in combinations(starts.len(), d1) {
            self.charge_budget(spent, 1)?;
            // A subspace in this cell has a basis vector ending at each chosen
            // socle coordinate, with free entries at earlier unchosen ones.
            let free: usize = cell.iter().enumerate().map(|(rank, &s)| s - rank).sum();
            let size = p
                .checked_pow(u32::try_from(free).map_err(|_| FlagError::Overflow)?)
                .ok_or(FlagError::Overflow)?;
            let vectors: Vec<Vec<u32>> = cell
                .iter()
                .map(|&s| {
                    let mut v = vec![0u32; d];
                    v[starts[s]] = 1;
                    v
                })
                .collect();
            let rep = FqSubspace::from_vectors(field, d, &vectors);
            let mu = quotient_type(a, &rep)?;
            let slot = out.entry(mu).or_insert(0);
            *slot = slot.checked_add(size).ok_or(FlagError::Overflow)?;
        }
        Ok(out)
    }

    fn first_step_subspaces(
        &self,
        a: &FqMatrix,
        d1: usize,
        spent: &mut u64,
    ) -> Result<BTreeMap<Partition, u64>, FlagError> {
        let kernel = FqSubspace::kernel(a);
        let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
        for v in enumerate_subspaces(&kernel, d1) {
            self.charge_budget(spent, 1)?;
            *out.entry(quotient_type(a, &v)?).or_insert(0) += 1;
        }
        Ok(out)
    }
}

fn check_sizes(lambda: &Partition, dimvec: &DimVector) -> Result<(), FlagError> {
    if lambda.size() != dimvec.total() {
        return Err(FlagError::SizeMismatch {
            lambda: lambda.size(),
            dimvec: dimvec.total(),
        });
    }
    if dimvec.is_empty() {
        return Err(FlagError::EmptyDimVector);
    }
    Ok(())
}

/// k-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Counts the flags of type `dimvec` with `a(V_i) ⊆ V_{i-1}` by listing every
/// subspace of `F_p^d` of each prefix dimension and walking all chains. No
/// kernel restriction or quotient is used.
pub fn count_flags_brute(a: &FqMatrix, dimvec: &DimVector, budget: u64) -> Result<u64, FlagError> {
    let d = a.rows();
    if dimvec.total() != d {
        return Err(FlagError::SizeMismatch {
            lambda: d,
            dimvec: dimvec.total(),
        });
    }
    let field = a.field();
    let p = field.characteristic();
    let prefix: Vec<usize> = dimvec
        .entries()
        .iter()
        .scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect();
    let mut dims: Vec<usize> = prefix.clone();
    dims.sort_unstable();
    dims.dedup();
    let needed: BigInt = dims.iter().map(|&k| gaussian_binomial_at(d, k, p)).sum();
    if needed > BigInt::from(budget) {
        return Err(FlagError::BudgetExceeded { budget });
    }
    let full = FqSubspace::full(field, d);
    let lists: HashMap<usize, Vec<FqSubspace>> = dims
        .iter()
        .map(|&k| (k, enumerate_subspaces(&full, k).collect()))
        .collect();

    fn walk(
        a: &FqMatrix,
        prefix: &[usize],
        lists: &HashMap<usize, Vec<FqSubspace>>,
        prev: &FqSubspace,
    ) -> u64 {
        let Some((&dim, rest)) = prefix.split_first() else {
            return 1;
        };
        lists[&dim]
            .iter()
            .filter(|w| w.contains(prev) && w.maps_into(a, prev))
            .map(|w| walk(a, rest, lists, w))
            .sum()
    }
    Ok(walk(a, &prefix, &lists, &FqSubspace::zero(field, d)))
}

/// Brute-force count over the Jordan form of `lambda`.
pub fn fiber_count_brute(
    lambda: &Partition,
    dimvec: &DimVector,
    p: u64,
    budget: u64,
) -> Result<FiberCountRecord, FlagError> {
    check_sizes(lambda, dimvec)?;
    let field = PrimeField::new(p)?;
    let count = count_flags_brute(&jordan_matrix(lambda, field), dimvec, budget)?;
    Ok(FiberCountRecord {
        lambda: lambda.clone(),
        dimvec: dimvec.clone(),
        q: p,
        count,
    })
}
