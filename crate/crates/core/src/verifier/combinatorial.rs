use super::{CheckResult, Witness};
use crate::combinatorics::{
    all_partitions, checked_pow, enumerate_dimvecs, kostka_number, multinomial, schur_dim,
    syt_count, CombinatoricsError, Partition,
};

fn shape_witness(shape: &Partition) -> Witness {
    Witness {
        shape: Some(shape.clone()),
        ..Default::default()
    }
}

fn error_check(name: &str, e: CombinatoricsError) -> CheckResult {
    CheckResult::from_witnesses(name, 0, vec![Witness::default().detail(e.to_string())])
}

/// `Σ_μ f^μ · dim S_μ(F^n) = n^d`, and `dim S_μ(F^n)` equals the number of
/// semistandard tableaux of shape `μ` with entries at most `n`. Skipped
/// beyond `n ≤ 6`, `d ≤ 7`.
pub fn verify_schur_weyl(n: usize, d: usize) -> CheckResult {
    const NAME: &str = "schur_weyl";
    if n > 6 || d > 7 {
        return CheckResult::skipped(
            NAME,
            format!("only run for n <= 6 and d <= 7, got n={n} d={d}"),
        );
    }
    let dimvecs = match enumerate_dimvecs(n, d) {
        Ok(v) => v,
        Err(e) => return error_check(NAME, e),
    };
    let shapes = all_partitions(d);
    let mut witnesses = Vec::new();
    let mut total = 0u64;
    for mu in &shapes {
        let (f, dim) = match (syt_count(mu), schur_dim(mu, n)) {
            (Ok(f), Ok(dim)) => (f, dim),
            (Err(e), _) | (_, Err(e)) => return error_check(NAME, e),
        };
        total += f * dim;
        let tableaux: u64 = dimvecs.iter().map(|v| kostka_number(mu, v.entries())).sum();
        if tableaux != dim {
            witnesses.push(
                shape_witness(mu)
                    .sides(dim, tableaux)
                    .detail("hook-content vs tableau count"),
            );
        }
    }
    match checked_pow(n, d) {
        Ok(expected) if expected == total => {}
        Ok(expected) => witnesses.push(
            Witness::default()
                .sides(total, expected)
                .detail("sum of f * dim vs n^d"),
        ),
        Err(e) => return error_check(NAME, e),
    }
    CheckResult::from_witnesses(NAME, shapes.len() + 1, witnesses)
}

/// `Σ_λ f^λ K_{λ,μ} = d! / Π μ_i!` for every `μ ⊢ d`. Skipped for `d > 8`.
pub fn verify_young_rule(d: usize) -> CheckResult {
    const NAME: &str = "young_rule";
    if d > 8 {
        return CheckResult::skipped(NAME, format!("only run for d <= 8, got d={d}"));
    }
    let shapes = all_partitions(d);
    let mut witnesses = Vec::new();
    for mu in &shapes {
        let mut lhs = 0u64;
        for lambda in &shapes {
            match syt_count(lambda) {
                Ok(f) => lhs += f * kostka_number(lambda, mu.parts()),
                Err(e) => return error_check(NAME, e),
            }
        }
        match multinomial(mu.parts()) {
            Ok(rhs) if rhs == lhs => {}
            Ok(rhs) => witnesses.push(shape_witness(mu).sides(lhs, rhs)),
            Err(e) => return error_check(NAME, e),
        }
    }
    CheckResult::from_witnesses(NAME, shapes.len(), witnesses)
}
