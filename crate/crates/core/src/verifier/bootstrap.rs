use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::{CheckResult, Verifier, Witness};
use crate::combinatorics::{DimVector, Partition};
use crate::qpoly::{modified_kostka_foulkes, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("system has {rows} equations but {rhs} right-hand sides")]
    DimensionMismatch { rows: usize, rhs: usize },
    #[error("coefficient matrix has rank {rank} < {unknowns} unknowns")]
    RankDeficient { rank: usize, unknowns: usize },
    #[error("equation {row} is inconsistent with the others")]
    Inconsistent { row: usize },
    #[error("unknown {unknown} has a non-integral solution")]
    NonIntegral { unknown: usize },
}

struct Row {
    index: usize,
    coeffs: Vec<BigInt>,
    rhs: LaurentPoly,
}

impl Row {
    fn make_primitive(&mut self) {
        let g = self
            .coeffs
            .iter()
            .chain(self.rhs.terms().map(|(_, c)| c))
            .fold(BigInt::zero(), |g, c| g.gcd(c));
        if g > BigInt::one() {
            for c in &mut self.coeffs {
                *c /= &g;
            }
            self.rhs = self.rhs.div_exact(&g).expect("g divides every coefficient");
        }
    }
}

/// Solves `A x = b` for a full-column-rank integer matrix `A` and Laurent
/// polynomial right-hand sides, by fraction-free elimination. Every equation
/// must be satisfied and every `x_j` must have integer coefficients.
pub fn solve_integer_system(
    a: &[Vec<BigInt>],
    b: &[LaurentPoly],
) -> Result<Vec<LaurentPoly>, SolveError> {
    if a.len() != b.len() {
        return Err(SolveError::DimensionMismatch {
            rows: a.len(),
            rhs: b.len(),
        });
    }
    let unknowns = a.first().map_or(0, Vec::len);
    let mut rows: Vec<Row> = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(index, (coeffs, rhs))| {
            assert_eq!(coeffs.len(), unknowns, "ragged coefficient matrix");
            Row {
                index,
                coeffs: coeffs.clone(),
                rhs: rhs.clone(),
            }
        })
        .collect();

    for col in 0..unknowns {
        let pivot = (col..rows.len())
            .filter(|&i| !rows[i].coeffs[col].is_zero())
            .min_by_key(|&i| rows[i].coeffs[col].abs());
        let Some(pivot) = pivot else {
            return Err(SolveError::RankDeficient {
                rank: col,
                unknowns,
            });
        };
        rows.swap(col, pivot);
        let (head, tail) = rows.split_at_mut(col + 1);
        let prow = &head[col];
        for row in tail.iter_mut().filter(|r| !r.coeffs[col].is_zero()) {
            let g = prow.coeffs[col].gcd(&row.coeffs[col]);
            let mine = &prow.coeffs[col] / &g;
            let theirs = &row.coeffs[col] / &g;
            for (c, p) in row.coeffs.iter_mut().zip(&prow.coeffs) {
                *c = &*c * &mine - p * &theirs;
            }
            row.rhs = row.rhs.scale(&mine) - prow.rhs.scale(&theirs);
            row.make_primitive();
        }
    }
    if let Some(bad) = rows[unknowns..].iter().find(|r| !r.rhs.is_zero()) {
        return Err(SolveError::Inconsistent { row: bad.index });
    }

    let mut x = vec![LaurentPoly::zero(); unknowns];
    for j in (0..unknowns).rev() {
        let row = &rows[j];
        let mut acc = row.rhs.clone();
        for (c, xk) in row.coeffs.iter().zip(&x).skip(j + 1) {
            if !c.is_zero() {
                acc = acc - xk.scale(c);
            }
        }
        x[j] = acc
            .div_exact(&row.coeffs[j])
            .ok_or(SolveError::NonIntegral { unknown: j })?;
    }
    Ok(x)
}

/// Normalized stalk polynomials `t_P(λ)`, indexed by `(P, λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StalkTable {
    pub n: usize,
    pub d: usize,
    pub entries: BTreeMap<(Partition, Partition), LaurentPoly>,
}

impl StalkTable {
    pub fn get(&self, p: &Partition, lambda: &Partition) -> Option<&LaurentPoly> {
        self.entries.get(&(p.clone(), lambda.clone()))
    }
}

fn lambda_witness(lambda: &Partition) -> Witness {
    Witness {
        lambda: Some(lambda.clone()),
        ..Default::default()
    }
}

impl Verifier<'_> {
    /// Solves, for each `λ`, the system
    /// `q^{-|dv|} #fiber(λ, dv) = Σ_P t_P(λ) · mult(P, dv)` over all `dv`,
    /// and re-solves it on the square subsystems indexed by the sorted and
    /// reversed weights of `P'` to confirm the answer does not depend on the
    /// equations chosen.
    pub fn bootstrap_stalks(&self) -> Result<StalkTable, Vec<Witness>> {
        let orbits = self.orbits();
        let convention = self.convention();
        let n = self.n();
        let matrix: Vec<Vec<BigInt>> = self
            .dimvecs()
            .iter()
            .map(|v| {
                orbits
                    .iter()
                    .map(|p| BigInt::from(convention.weight_multiplicity(p, v)))
                    .collect()
            })
            .collect();
        let position: BTreeMap<&DimVector, usize> = self
            .dimvecs()
            .iter()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let subsets: Vec<Vec<usize>> = [false, true]
            .iter()
            .map(|&rev| {
                orbits
                    .iter()
                    .map(|p| {
                        let v =
                            DimVector::padded(&p.conjugate(), n).expect("P' has at most n rows");
                        let v = if rev { v.reversed() } else { v };
                        position[&v]
                    })
                    .collect()
            })
            .collect();

        let mut entries = BTreeMap::new();
        let mut witnesses = Vec::new();
        for lambda in orbits {
            let mut rhs = Vec::with_capacity(self.dimvecs().len());
            for v in self.dimvecs() {
                match &self.fiber_table()[&(lambda.clone(), v.clone())] {
                    Ok(fp) => rhs.push(fp.poly.shift(-(v.flag_dim() as i64))),
                    Err(e) => witnesses.push(Witness::at(lambda, v).detail(e.to_string())),
                }
            }
            if rhs.len() != self.dimvecs().len() {
                continue;
            }
            let full = match solve_integer_system(&matrix, &rhs) {
                Ok(x) => x,
                Err(e) => {
                    let mut w = lambda_witness(lambda).detail(e.to_string());
                    if let SolveError::Inconsistent { row } = e {
                        w.dimvec = Some(self.dimvecs()[row].clone());
                    }
                    witnesses.push(w);
                    continue;
                }
            };
            for subset in &subsets {
                let sub_a: Vec<Vec<BigInt>> = subset.iter().map(|&i| matrix[i].clone()).collect();
                let sub_b: Vec<LaurentPoly> = subset.iter().map(|&i| rhs[i].clone()).collect();
                match solve_integer_system(&sub_a, &sub_b) {
                    Ok(x) if x == full => {}
                    Ok(_) => witnesses.push(
                        lambda_witness(lambda)
                            .detail("square subsystem gives a different solution"),
                    ),
                    Err(e) => witnesses
                        .push(lambda_witness(lambda).detail(format!("square subsystem: {e}"))),
                }
            }
            for (p, t) in orbits.iter().zip(full) {
                entries.insert((p.clone(), lambda.clone()), t);
            }
        }
        if witnesses.is_empty() {
            Ok(StalkTable {
                n,
                d: self.d(),
                entries,
            })
        } else {
            Err(witnesses)
        }
    }

    /// Bootstraps the stalks and checks their structural invariants:
    /// `t_P(λ) = 0` unless `P ⊵ λ`, and `t_λ(λ) = q^{-dim O_λ / 2}`.
    pub fn verify_bootstrap(&self) -> (CheckResult, Option<StalkTable>) {
        let cases = self.orbits().len();
        let table = match self.bootstrap_stalks() {
            Ok(t) => t,
            Err(ws) => {
                return (
                    CheckResult::from_witnesses("stalk_bootstrap", cases, ws),
                    None,
                )
            }
        };
        let mut witnesses = Vec::new();
        for ((p, lambda), t) in &table.entries {
            let dominates = p.dominates(lambda).unwrap_or(false);
            if p == lambda {
                let expected = LaurentPoly::q_pow(-((lambda.orbit_dim() / 2) as i64));
                if *t != expected {
                    witnesses.push(
                        lambda_witness(lambda)
                            .with_shape(p)
                            .sides(t, &expected)
                            .detail("normalization"),
                    );
                }
            } else if !dominates && !t.is_zero() {
                witnesses.push(
                    lambda_witness(lambda)
                        .with_shape(p)
                        .sides(t, 0)
                        .detail("support outside dominance"),
                );
            }
        }
        (
            CheckResult::from_witnesses("stalk_bootstrap", cases, witnesses),
            Some(table),
        )
    }

    /// Compares bootstrapped stalks with `q^{-n(1^d)} K̃_{P,λ}(q)`.
    pub fn verify_stalk_hypothesis(&self, table: &StalkTable) -> CheckResult {
        let shift = -(Partition::column(self.d()).n_stat() as i64);
        let witnesses = table
            .entries
            .iter()
            .filter_map(|((p, lambda), t)| {
                let expected = modified_kostka_foulkes(p, lambda).shift(shift);
                (*t != expected).then(|| lambda_witness(lambda).with_shape(p).sides(t, &expected))
            })
            .collect();
        CheckResult::from_witnesses("stalk_hypothesis", table.entries.len(), witnesses)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flaggeo::FiberCounter;
    use crate::verifier::Convention;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
            .collect()
    }

    fn polys(s: &[&str]) -> Vec<LaurentPoly> {
        s.iter().map(|p| p.parse().unwrap()).collect()
    }

    #[test]
    fn solves_overdetermined_triangular() {
        let a = ints(&[&[1, 0], &[1, 1], &[2, 1]]);
        let b = polys(&["q^-1", "q^-1+q", "2q^-1+q"]);
        let x = solve_integer_system(&a, &b).unwrap();
        assert_eq!(x, polys(&["q^-1", "q"]));
    }

    #[test]
    fn reports_failures() {
        let a = ints(&[&[1, 0], &[1, 1], &[2, 1]]);
        let b = polys(&["1", "2", "4"]);
        assert_eq!(
            solve_integer_system(&a, &b),
            Err(SolveError::Inconsistent { row: 2 })
        );
        let a = ints(&[&[2]]);
        assert_eq!(
            solve_integer_system(&a, &polys(&["q+2"])),
            Err(SolveError::NonIntegral { unknown: 0 })
        );
        let a = ints(&[&[1, 1], &[2, 2]]);
        assert!(matches!(
            solve_integer_system(&a, &polys(&["1", "2"])),
            Err(SolveError::RankDeficient {
                rank: 1,
                unknowns: 2
            })
        ));
    }

    #[test]
    fn bootstrap_matches_hypothesis() {
        let counter = FiberCounter::new();
        for (n, d) in [(2, 2), (2, 3), (3, 3)] {
            let v = Verifier::new(n, d, &counter).unwrap();
            let (check, table) = v.verify_bootstrap();
            assert!(check.passed(), "{check:?}");
            let table = table.unwrap();
            assert!(v.verify_stalk_hypothesis(&table).passed());
        }
        let v = Verifier::new(2, 2, &counter).unwrap();
        let table = v.bootstrap_stalks().unwrap();
        let t = |p: &str, l: &str| {
            table
                .get(&p.parse().unwrap(), &l.parse().unwrap())
                .unwrap()
                .to_string()
        };
        assert_eq!(t("1,1", "1,1"), "1");
        assert_eq!(t("2", "2"), "q^-1");
        assert_eq!(t("2", "1,1"), "q^-1");
        assert_eq!(t("1,1", "2"), "0");
    }

    #[test]
    fn literal_pairing_does_not_bootstrap_cleanly() {
        let counter = FiberCounter::new();
        let v = Verifier::new(2, 2, &counter)
            .unwrap()
            .with_convention(Convention::LiteralPaper);
        let (check, _) = v.verify_bootstrap();
        assert!(!check.passed());
    }
}
