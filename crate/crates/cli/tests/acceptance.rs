//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fail.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use flagfib_core::combinatorics::{all_partitions, enumerate_dimvecs, DimVector, Partition};
use flagfib_core::flaggeo::{fiber_count_brute, FiberCounter, DEFAULT_BUDGET};
use flagfib_core::verifier::{
    run_suite, verify_schur_weyl, CheckResult, Convention, Mode, SuiteConfig, Verifier,
};

const GRID: [(usize, usize); 8] = [
    (2, 2),
    (2, 3),
    (3, 3),
    (2, 4),
    (3, 4),
    (4, 4),
    (2, 5),
    (3, 5),
];

type Outcome = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let elapsed = start.elapsed();
    ensure(elapsed <= limit, || {
        format!("took {elapsed:.2?}, limit {limit:?}")
    })?;
    Ok(elapsed)
}

fn require_pass(check: &CheckResult, context: &str) -> Result<(), String> {
    ensure(check.passed(), || {
        format!(
            "{context}: {} is {:?} with {} witnesses",
            check.name,
            check.status,
            check.witnesses.len()
        )
    })
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let counter = FiberCounter::new();
    let mut instances = 0;
    for d in 1..=4 {
        for n in 1..=d {
            for lambda in all_partitions(d).into_iter().filter(|l| l.largest() <= n) {
                for v in enumerate_dimvecs(n, d).unwrap() {
                    for p in [2, 3] {
                        let fast = counter
                            .fiber_count(&lambda, &v, p)
                            .map_err(|e| e.to_string())?
                            .count;
                        let brute = fiber_count_brute(&lambda, &v, p, DEFAULT_BUDGET)
                            .map_err(|e| e.to_string())?
                            .count;
                        ensure(fast == brute, || {
                            format!("{lambda} {v:?} q={p}: {fast} vs {brute}")
                        })?;
                        instances += 1;
                    }
                }
            }
        }
    }
    ensure(instances >= 200, || format!("only {instances} instances"))?;
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!("{instances} instances agree in {t:.2?}"))
}

fn polynomial_grid<F>(name: &str, pick: F) -> Outcome
where
    F: Fn(&Verifier<'_>) -> CheckResult,
{
    let start = Instant::now();
    let counter = FiberCounter::new();
    let mut cases = 0;
    for (n, d) in GRID {
        let v = Verifier::new(n, d, &counter).map_err(|e| e.to_string())?;
        let check = pick(&v);
        require_pass(&check, &format!("({n},{d})"))?;
        cases += check.cases;
    }
    let t = within(start, Duration::from_secs(600))?;
    Ok(format!(
        "{name}: {cases} cases over {} grids in {t:.2?}",
        GRID.len()
    ))
}

fn numeric_six() -> Outcome {
    let start = Instant::now();
    let counter = FiberCounter::new();
    let mut cases = 0;
    for n in [2, 3] {
        let v = Verifier::new(n, 6, &counter)
            .map_err(|e| e.to_string())?
            .with_primes(vec![2, 3]);
        let check = v.verify_trace_identity(Mode::Numeric);
        require_pass(&check, &format!("({n},6)"))?;
        cases += check.cases;
    }
    let t = within(start, Duration::from_secs(600))?;
    Ok(format!("{cases} cases at q=2,3 in {t:.2?}"))
}

fn fixed_points() -> Outcome {
    let counter = FiberCounter::new();
    let expected = [
        ("1,1", "1,1", "q+1"),
        ("2,1", "1,1,1", "2q+1"),
        ("1,1,1", "2,1", "q^2+q+1"),
        ("2", "2,0", "0"),
    ];
    for (l, v, want) in expected {
        let lambda: Partition = l.parse().unwrap();
        let dv: DimVector = v.parse().unwrap();
        let fp = counter
            .fiber_polynomial(&lambda, &dv, None)
            .map_err(|e| e.to_string())?;
        let got = fp.poly.to_string();
        ensure(got == want, || {
            format!("({l}),({v}): got {got}, want {want}")
        })?;
    }
    Ok(format!("{} fiber polynomials exact", expected.len()))
}

fn top_components() -> Outcome {
    let summary = polynomial_grid("top_components", |v| v.verify_top_components())?;
    let counter = FiberCounter::new();
    let fp = counter
        .fiber_polynomial(&"2,1".parse().unwrap(), &"1,1,1".parse().unwrap(), None)
        .map_err(|e| e.to_string())?;
    let coeff = fp.poly.coeff(1);
    ensure(coeff == 2.into(), || {
        format!("subregular coefficient of q is {coeff}")
    })?;
    Ok(format!("{summary}; subregular coefficient 2"))
}

fn bootstrap() -> Outcome {
    let counter = FiberCounter::new();
    let mut systems = 0;
    for d in 1..=4 {
        for n in 1..=d {
            let v = Verifier::new(n, d, &counter).map_err(|e| e.to_string())?;
            let (check, table) = v.verify_bootstrap();
            require_pass(&check, &format!("({n},{d})"))?;
            let table = table.ok_or_else(|| format!("({n},{d}): no stalk table"))?;
            require_pass(&v.verify_stalk_hypothesis(&table), &format!("({n},{d})"))?;
            systems += check.cases;
        }
    }
    Ok(format!(
        "{systems} systems consistent, invariants and hypothesis hold"
    ))
}

fn schur_weyl() -> Outcome {
    let mut runs = 0;
    for n in 1..=4 {
        for d in 1..=6 {
            require_pass(&verify_schur_weyl(n, d), &format!("({n},{d})"))?;
            runs += 1;
        }
    }
    Ok(format!("{runs} (n,d) pairs"))
}

fn convention_guard() -> Outcome {
    let counter = FiberCounter::new();
    let literal = SuiteConfig {
        convention: Convention::LiteralPaper,
        ..SuiteConfig::new(2, 2)
    };
    let report = run_suite(&literal, &counter).map_err(|e| e.to_string())?;
    ensure(!report.passed(), || "literal pairing passed".to_string())?;
    let trace = report
        .check("trace_identity")
        .ok_or("no trace_identity check")?;
    ensure(
        trace.has_witness(&"2".parse().unwrap(), &"2,0".parse().unwrap()),
        || "no witness at lambda=(2), dv=(2,0)".to_string(),
    )?;
    let standard = run_suite(&SuiteConfig::new(2, 2), &counter).map_err(|e| e.to_string())?;
    ensure(standard.passed(), || "standard pairing failed".to_string())?;
    Ok("literal pairing fails at (2),(2,0); standard pairing passes".to_string())
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_flagfib");
    let run = || {
        Command::new(bin)
            .args(["verify", "--n", "3", "--d", "4"])
            .env_remove("FLAGFIB_CACHE")
            .output()
            .map_err(|e| e.to_string())
    };
    let a = run()?;
    let b = run()?;
    ensure(a.status.success() && b.status.success(), || {
        "verify did not exit 0".to_string()
    })?;
    ensure(a.stdout == b.stdout, || "reports differ".to_string())?;
    Ok(format!(
        "two runs byte-identical ({} bytes)",
        a.stdout.len()
    ))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("oracle equivalence", Box::new(oracle_equivalence)),
        (
            "trace identity, polynomial grid",
            Box::new(|| {
                polynomial_grid("trace_identity", |v| {
                    v.verify_trace_identity(Mode::Polynomial)
                })
            }),
        ),
        ("trace identity, numeric at d=6", Box::new(numeric_six)),
        ("worked fixed points", Box::new(fixed_points)),
        (
            "semi-smallness",
            Box::new(|| polynomial_grid("semismall", |v| v.verify_semismall())),
        ),
        ("top components", Box::new(top_components)),
        ("stalk bootstrap", Box::new(bootstrap)),
        ("Schur-Weyl dimension sums", Box::new(schur_weyl)),
        ("convention guard", Box::new(convention_guard)),
        ("determinism", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
