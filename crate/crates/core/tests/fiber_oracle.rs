use flagfib_core::combinatorics::{all_partitions, enumerate_dimvecs, DimVector, Partition};
use flagfib_core::flaggeo::{
    count_flags_brute, degree_bound, fiber_count_brute, jordan_matrix, jordan_type, FiberCounter,
    FqMatrix, PrimeField, Strategy as Enumeration, DEFAULT_BUDGET,
};
use flagfib_core::qpoly::{gaussian_binomial, LaurentPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Every `(λ, dv)` with `|λ| = d`, parts of `λ` at most `n` and `dv` of length `n`.
fn instances(max_d: usize) -> Vec<(Partition, DimVector)> {
    let mut out = Vec::new();
    for d in 1..=max_d {
        for n in 1..=d {
            for lambda in all_partitions(d).into_iter().filter(|l| l.largest() <= n) {
                for v in enumerate_dimvecs(n, d).unwrap() {
                    out.push((lambda.clone(), v));
                }
            }
        }
    }
    out
}

#[test]
fn recursion_matches_brute_force() {
    let cells = FiberCounter::new();
    let subspaces = FiberCounter::new().with_strategy(Enumeration::Subspaces);
    let mut checked = 0;
    for (lambda, v) in instances(4) {
        for p in [2, 3] {
            let brute = fiber_count_brute(&lambda, &v, p, DEFAULT_BUDGET)
                .unwrap()
                .count;
            assert_eq!(
                cells.fiber_count(&lambda, &v, p).unwrap().count,
                brute,
                "{lambda} {v:?} q={p}"
            );
            assert_eq!(
                subspaces.fiber_count(&lambda, &v, p).unwrap().count,
                brute,
                "{lambda} {v:?} q={p}"
            );
            checked += 1;
        }
    }
    assert!(checked > 200, "only {checked} instances");
}

#[test]
fn strategies_agree_beyond_brute_force_range() {
    let cells = FiberCounter::new();
    let subspaces = FiberCounter::new().with_strategy(Enumeration::Subspaces);
    for (lambda, v) in instances(5).into_iter().filter(|(l, _)| l.size() == 5) {
        for p in [2, 5] {
            assert_eq!(
                cells.fiber_count(&lambda, &v, p).unwrap().count,
                subspaces.fiber_count(&lambda, &v, p).unwrap().count,
                "{lambda} {v:?} q={p}"
            );
        }
    }
}

#[test]
fn zero_nilpotent_counts_partial_flags() {
    // a = 0 imposes nothing: the count is the q-multinomial of dv.
    let counter = FiberCounter::new();
    for d in 1..=6 {
        let lambda = Partition::column(d);
        for n in 1..=4 {
            for v in enumerate_dimvecs(n, d).unwrap() {
                let mut expected = LaurentPoly::one();
                let mut rest = d;
                for &k in v.entries() {
                    expected = &expected * &gaussian_binomial(rest, k);
                    rest -= k;
                }
                for p in [2u64, 7] {
                    let count = counter.fiber_count(&lambda, &v, p).unwrap().count;
                    assert_eq!(
                        BigInt::from(count),
                        expected.eval_integer(&BigInt::from(p)).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn empty_fibers_beyond_the_degree_bound() {
    let counter = FiberCounter::new();
    for (lambda, v) in instances(5) {
        if degree_bound(&lambda, &v) < 0 {
            for p in [2, 3, 5] {
                assert_eq!(
                    counter.fiber_count(&lambda, &v, p).unwrap().count,
                    0,
                    "{lambda} {v:?}"
                );
            }
        }
    }
    for (lambda, v) in instances(5) {
        let empty: Vec<bool> = [2, 3, 5, 7]
            .iter()
            .map(|&p| counter.fiber_count(&lambda, &v, p).unwrap().count == 0)
            .collect();
        assert!(empty.iter().all(|&e| e == empty[0]), "{lambda} {v:?}");
    }
    // A regular nilpotent only fixes the complete flag, once.
    let reg = Partition::row(4);
    assert_eq!(
        counter
            .fiber_count(&reg, &DimVector::new(vec![1, 1, 1, 1]), 3)
            .unwrap()
            .count,
        1
    );
}

#[test]
fn polynomials_have_nonnegative_coefficients_and_extend_to_fresh_primes() {
    let counter = FiberCounter::new();
    for (lambda, v) in instances(5) {
        let fp = counter.fiber_polynomial(&lambda, &v, None).unwrap();
        assert!(
            fp.poly.has_nonnegative_coeffs(),
            "{lambda} {v:?}: {}",
            fp.poly
        );
        assert!(fp.poly.is_polynomial());
        for p in [13u64, 29] {
            let count = counter.fiber_count(&lambda, &v, p).unwrap().count;
            assert_eq!(
                BigInt::from(count),
                fp.poly.eval_integer(&BigInt::from(p)).unwrap()
            );
        }
    }
}

#[test]
fn budget_is_enforced() {
    let lambda: Partition = "1,1,1,1".parse().unwrap();
    let v = DimVector::new(vec![2, 2]);
    assert!(fiber_count_brute(&lambda, &v, 3, 10).is_err());
    let tight = FiberCounter::new()
        .with_budget(1)
        .with_strategy(Enumeration::Subspaces);
    assert!(tight.fiber_count(&"2,1,1".parse().unwrap(), &v, 3).is_err());
}

fn invertible(p: u64, d: usize) -> impl Strategy<Value = FqMatrix> {
    prop::collection::vec(0..p, d * d).prop_filter_map("singular", move |entries| {
        let field = PrimeField::new(p).unwrap();
        let rows: Vec<Vec<u64>> = entries.chunks(d).map(<[u64]>::to_vec).collect();
        let g = FqMatrix::from_rows(field, d, &rows);
        (g.rank() == d).then_some(g)
    })
}

fn conjugation_case() -> impl Strategy<Value = (Partition, DimVector, u64, FqMatrix)> {
    (2usize..=4, prop::sample::select(vec![2u64, 3])).prop_flat_map(|(d, p)| {
        let lambdas = all_partitions(d);
        let dvs = enumerate_dimvecs(3, d).unwrap();
        (
            prop::sample::select(lambdas),
            prop::sample::select(dvs),
            Just(p),
            invertible(p, d),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn counts_do_not_depend_on_the_representative((lambda, v, p, g) in conjugation_case()) {
        let field = PrimeField::new(p).unwrap();
        let a = jordan_matrix(&lambda, field);
        let conj = g.mul(&a).mul(&g.inverse().unwrap());
        prop_assert_eq!(jordan_type(&conj).unwrap(), lambda.clone());
        let direct = count_flags_brute(&conj, &v, DEFAULT_BUDGET).unwrap();
        let fast = FiberCounter::new().fiber_count(&lambda, &v, p).unwrap().count;
        prop_assert_eq!(direct, fast);
    }
}
