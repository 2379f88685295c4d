//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! every check is exact and must finish inside its time budget.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::Value;

use normord::egf::{egf_coefficient, factorial, graph_egf, series_exp, weight_series, WeightSpec};
use normord::graphs::enumerate_weighted;
use normord::numbers::{bell, bell_rs, stirling, stirling_recurrence, stirling_row};
use normord::verify;
use normord::Word;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_normord"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?} exited {:?}", out.status.code()));
    }
    Ok(String::from_utf8_lossy(&out.stdout).trim_end().to_string())
}

/// `(dag, ann, coeff)` triples of `order --json`.
fn order_terms(word: &str, method: &str) -> Result<Vec<(u64, u64, String)>, String> {
    let text = cli(&["order", word, "--method", method, "--json"])?;
    let v: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    v["terms"]
        .as_array()
        .ok_or("missing terms")?
        .iter()
        .map(|t| {
            Ok((
                t["dag"].as_u64().ok_or("dag")?,
                t["ann"].as_u64().ok_or("ann")?,
                t["coeff"].as_str().ok_or("coeff")?.to_string(),
            ))
        })
        .collect()
}

fn expect_terms(word: &str, expected: &[(u64, u64, &str)]) -> Check {
    let expected: Vec<(u64, u64, String)> = expected
        .iter()
        .map(|&(i, j, c)| (i, j, c.to_string()))
        .collect();
    for method in ["rewrite", "rook"] {
        let got = order_terms(word, method)?;
        ensure(got == expected, || format!("{method} on {word:?}: {got:?}"))?;
    }
    let both = cli(&["order", word, "--method", "both"])?;
    ensure(!both.contains("MISMATCH"), || both.clone())
}

fn criterion_1() -> Check {
    expect_terms("d^2 a d a d^4 a", &[(7, 3, "1"), (6, 2, "9"), (5, 1, "16")])?;
    let text = cli(&["order", "d^2 a d a d^4 a"])?;
    ensure(text == "d^7 a^3 + 9 d^6 a^2 + 16 d^5 a", || text.clone())
}

fn criterion_2() -> Check {
    expect_terms(
        "a d a^2 d^2",
        &[(3, 3, "1"), (2, 2, "7"), (1, 1, "10"), (0, 0, "2")],
    )?;
    let board: Value = serde_json::from_str(&cli(&["board", "a d a^2 d^2", "--json"])?)
        .map_err(|e| e.to_string())?;
    ensure(
        board == serde_json::json!({"partition": [3, 2, 2], "rooks": ["1", "7", "10", "2"]}),
        || board.to_string(),
    )?;
    let board: Value = serde_json::from_str(&cli(&["board", "d^2 a d a d^4 a", "--json"])?)
        .map_err(|e| e.to_string())?;
    ensure(
        board == serde_json::json!({"partition": [5, 4], "rooks": ["1", "9", "16"]}),
        || board.to_string(),
    )
}

fn suite(report: verify::SuiteReport, expected_checked: usize) -> Check {
    ensure(report.checked == expected_checked, || {
        format!("{} checked, expected {expected_checked}", report.checked)
    })?;
    ensure(report.passed(), || report.to_string())
}

fn criterion_3() -> Check {
    suite(verify::rook_vs_rewrite(10), 2047)
}

fn criterion_4() -> Check {
    // Σ_{n=0}^{12} p(n)
    suite(
        verify::rook_bruteforce(12),
        1 + 1 + 2 + 3 + 5 + 7 + 11 + 15 + 22 + 30 + 42 + 56 + 77,
    )
}

fn bell_routes(n: usize) -> Result<[BigInt; 4], String> {
    let by_rewrite = bell(n).map_err(|e| e.to_string())?;
    let by_rook: BigInt = normord::normal_order_rook(&Word::normal_monomial(1, 1).repeat(n))
        .iter()
        .map(|(_, c)| c.eval_one())
        .sum();
    let egf = series_exp(&weight_series(&WeightSpec::Ones, n)).map_err(|e| e.to_string())?;
    let by_egf = egf_coefficient(&egf, n).map_err(|e| e.to_string())?;
    let by_graphs = enumerate_weighted(n, &WeightSpec::Ones, &WeightSpec::DeltaAt(1))
        .map_err(|e| e.to_string())?;
    let as_int = |r: BigRational| {
        if r.is_integer() {
            Ok(r.to_integer())
        } else {
            Err(format!("n={n}: non-integer {r}"))
        }
    };
    Ok([by_rewrite, by_rook, as_int(by_egf)?, as_int(by_graphs)?])
}

fn criterion_5() -> Check {
    let published = [1, 2, 5, 15, 52, 203, 877];
    for (n, &b) in (1..=7).zip(&published) {
        let routes = bell_routes(n)?;
        ensure(routes.iter().all(|r| r == &BigInt::from(b)), || {
            format!("n={n}: routes {routes:?}, expected {b}")
        })?;
    }
    for n in 8..=10 {
        let routes = bell_routes(n)?;
        ensure(routes.iter().all(|r| r == &routes[0]), || {
            format!("n={n}: routes disagree {routes:?}")
        })?;
    }
    Ok(())
}

fn criterion_6() -> Check {
    let row = stirling_row(3).map_err(|e| e.to_string())?;
    ensure(row == [1, 3, 1].map(BigInt::from), || {
        format!("S(3,·) = {row:?}")
    })?;
    for n in 1..=10usize {
        for k in 0..=n as i64 + 1 {
            let a = stirling(n, k).map_err(|e| e.to_string())?;
            let b = stirling_recurrence(n, k);
            ensure(a == b, || format!("S({n},{k}): {a} vs recurrence {b}"))?;
        }
    }
    Ok(())
}

/// n! [x^n] exp(x/(1−x)) = Σ_{k=1}^n C(n−1, k−1) n!/k!  (Lah numbers).
fn exp_x_over_one_minus_x(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let binom = |a: usize, b: usize| factorial(a) / (factorial(b) * factorial(a - b));
    (1..=n)
        .map(|k| binom(n - 1, k - 1) * factorial(n) / factorial(k))
        .sum()
}

fn criterion_7() -> Check {
    let g = graph_egf(&WeightSpec::Factorial, &WeightSpec::DeltaAt(1), 12);
    for (n, value) in g.egf_values().into_iter().enumerate() {
        let closed = BigRational::from_integer(exp_x_over_one_minus_x(n));
        ensure(value == closed, || {
            format!("n={n}: egf {value}, closed form {closed}")
        })?;
    }
    for n in 1..=8 {
        let from_egf = egf_coefficient(&g, n).map_err(|e| e.to_string())?;
        let from_rewrite = bell_rs(2, 1, n).map_err(|e| e.to_string())?;
        ensure(
            from_egf == BigRational::from_integer(from_rewrite.clone()),
            || format!("n={n}: egf {from_egf}, B_21 {from_rewrite}"),
        )?;
    }
    Ok(())
}

fn criterion_8() -> Check {
    let mut pairs = verify::preset_weight_pairs();
    let random = verify::random_weight_pairs(20, 6, 2024);
    ensure(random.len() == 20, || "random specs".into())?;
    pairs.extend(random);
    let expected = pairs.len() * 7;
    suite(verify::egf_vs_enumerator(6, &pairs), expected)
}

fn criterion_9() -> Check {
    suite(verify::q_one_reduction(8), 511)
}

/// Counterexamples are reported in the line but never fail the criterion.
fn criterion_10() -> Result<String, String> {
    let report = verify::unimodality_scan(10);
    ensure(report.checked == 2047, || {
        format!("{} checked", report.checked)
    })?;
    Ok(if report.all_unimodal() {
        "all 2047 q-polynomials unimodal".to_string()
    } else {
        let shown: Vec<String> = report
            .counterexamples
            .iter()
            .take(5)
            .map(|(w, p)| format!("\"{w}\": {p}"))
            .collect();
        format!(
            "EXPERIMENTAL: {} non-unimodal, e.g. {}",
            report.counterexamples.len(),
            shown.join("; ")
        )
    })
}

fn timed<T>(
    f: impl FnOnce() -> Result<T, String>,
    budget: Duration,
) -> (Result<T, String>, Duration) {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let result = match result {
        Ok(_) if elapsed > budget => Err(format!("took {elapsed:?}, budget {budget:?}")),
        other => other,
    };
    (result, elapsed)
}

#[test]
fn acceptance() {
    let secs = Duration::from_secs;
    let criteria: Vec<Criterion> = vec![
        (
            "1 normal form of d^2 a d a d^4 a, both methods",
            criterion_1,
            secs(1),
        ),
        (
            "2 normal form and board of a d a^2 d^2; board of d^2 a d a d^4 a",
            criterion_2,
            secs(1),
        ),
        (
            "3 rook = rewrite for all 2047 words of length <= 10",
            criterion_3,
            secs(30),
        ),
        (
            "4 rook recurrence = enumeration for partitions <= 12 cells",
            criterion_4,
            secs(30),
        ),
        (
            "5 Bell numbers agree across four routes",
            criterion_5,
            secs(60),
        ),
        (
            "6 Stirling triangle n <= 10 vs recurrence",
            criterion_6,
            secs(5),
        ),
        (
            "7 graph egf(V = s!, L = delta1) = exp(x/(1-x)) = B_21",
            criterion_7,
            secs(30),
        ),
        (
            "8 graph egf = enumerator, n <= 6, presets + 20 random specs",
            criterion_8,
            secs(60),
        ),
        (
            "9 q = 1 reduction for words of length <= 8",
            criterion_9,
            secs(30),
        ),
    ];

    let mut failed = Vec::new();
    for (name, check, budget) in criteria {
        let (result, elapsed) = timed(check, budget);
        match result {
            Ok(()) => println!("PASS [{elapsed:.2?}] {name}"),
            Err(msg) => {
                println!("FAIL [{elapsed:.2?}] {name}: {msg}");
                failed.push(name);
            }
        }
    }

    let name = "10 unimodality scan, words of length <= 10 (experimental)";
    let (result, elapsed) = timed(criterion_10, secs(60));
    match result {
        Ok(note) => println!("PASS [{elapsed:.2?}] {name}: {note}"),
        Err(msg) => {
            println!("FAIL [{elapsed:.2?}] {name}: {msg}");
            failed.push(name);
        }
    }

    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn closed_form_oracle_sanity() {
    // 1, 1, 3, 13, 73, 501, 4051 (A000262)
    let v: Vec<BigInt> = (0..=6).map(exp_x_over_one_minus_x).collect();
    assert_eq!(v, [1, 1, 3, 13, 73, 501, 4051].map(BigInt::from));
}
