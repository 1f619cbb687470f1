//! Acceptance gate: one test per criterion, each printing a single
//! `PASS criterion-N ...` line on success. Exact arithmetic throughout;
//! any mismatch is a hard failure.

use std::process::Command;

use convexcount::counting::{
    breakdown, check_s1_telescoping, check_s2_telescoping, count_perimeter, count_rect,
    quadruple_sum,
};
use convexcount::exactnum::{binomial, BigInt};
use convexcount::lattice::{
    count_convex_bruteforce, count_path_pairs_bruteforce, count_path_pairs_lgv, decompose,
    enumerate_convex, recompose,
};
use convexcount::{cli, series};

fn pass(line: &str) {
    println!("PASS {line}");
}

/// Criterion 1: the three routes agree for all (m,n) with m+n <= 9,
/// including the anchor values.
#[test]
fn criterion_1_route_agreement() {
    assert_eq!(count_rect(1, 1), BigInt::from(5));
    assert_eq!(count_rect(1, 2), BigInt::from(13));
    assert_eq!(count_rect(2, 2), BigInt::from(68));
    for m in 0..=9i64 {
        for n in 0..=9 - m {
            let closed = count_rect(m, n);
            let brute = count_convex_bruteforce(m, n).unwrap();
            assert_eq!(brute, closed, "bruteforce vs closed at ({m},{n})");
            if m >= 1 && n >= 1 {
                assert_eq!(quadruple_sum(m, n), closed, "quadruple vs closed at ({m},{n})");
            }
        }
    }
    pass("criterion-1 route agreement for m+n <= 9");
}

/// Criterion 2: summing the rectangle counts over m+n = N+2 reproduces the
/// perimeter formula for 0 <= N <= 20.
#[test]
fn criterion_2_perimeter_refinement() {
    assert_eq!(count_perimeter(0), BigInt::from(7));
    assert_eq!(count_perimeter(1), BigInt::from(28));
    assert_eq!(count_perimeter(2), BigInt::from(120));
    for big_n in 0..=20i64 {
        let total: BigInt = (0..=big_n + 2).map(|m| count_rect(m, big_n + 2 - m)).sum();
        assert_eq!(total, count_perimeter(big_n), "refinement at N={big_n}");
    }
    pass("criterion-2 perimeter refinement for N <= 20");
}

/// Criterion 3: for 1 <= m,n <= 10, S5 vanishes, every raw S equals its
/// closed form, and the alternating sum equals the quadruple sum.
#[test]
fn criterion_3_decomposition_suite() {
    for m in 1..=10i64 {
        for n in 1..=10 {
            let b = breakdown(m, n);
            assert!(b.raw_matches_closed(), "raw vs closed at ({m},{n})");
            assert!(b.decomposition_holds(), "alternating sum at ({m},{n})");
        }
    }
    pass("criterion-3 decomposition suite for m,n <= 10");
}

/// Criterion 4: the path-pair determinant matches the brute-force oracle
/// on every hypothesis-satisfying endpoint tuple in [0,5]^8.
#[test]
fn criterion_4_lemma1_oracle() {
    let max = 5i64;
    let mut checked = 0u64;
    for a in 0..=max {
        for b in 0..=max {
            for a2 in a + 1..=max {
                for b2 in 0..b {
                    for c in a + 1..=max {
                        for d2 in b2 + 1..=max {
                            for c2 in a2.max(c) + 1..=max {
                                for d in b.max(d2) + 1..=max {
                                    let lgv =
                                        count_path_pairs_lgv((a, b), (c, d), (a2, b2), (c2, d2))
                                            .unwrap();
                                    let brute = count_path_pairs_bruteforce(
                                        (a, b),
                                        (c, d),
                                        (a2, b2),
                                        (c2, d2),
                                    )
                                    .unwrap();
                                    assert_eq!(
                                        lgv, brute,
                                        "tuple ({a},{b})->({c},{d}), ({a2},{b2})->({c2},{d2})"
                                    );
                                    checked += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 0);
    pass("criterion-4 path-pair determinant vs oracle over [0,5]^8");
}

/// Criterion 5: recompose(decompose(p)) = p over all of P_{m,n} for
/// m+n <= 7, with the (L1,L2) and (L3,L4) pairs vertex-disjoint.
#[test]
fn criterion_5_bijection_roundtrip() {
    fn disjoint(p: &convexcount::lattice::LatticePath, q: &convexcount::lattice::LatticePath) -> bool {
        let pv = p.vertices();
        q.vertices().iter().all(|v| !pv.contains(v))
    }
    for m in 0..=7i64 {
        for n in 0..=7 - m {
            for p in enumerate_convex(m, n).unwrap() {
                let d = decompose(&p).unwrap();
                assert!(disjoint(&d.l1, &d.l2), "(L1,L2) intersect for\n{}", p.to_ascii());
                assert!(disjoint(&d.l3, &d.l4), "(L3,L4) intersect for\n{}", p.to_ascii());
                assert_eq!(recompose(&d).unwrap(), p, "roundtrip for\n{}", p.to_ascii());
            }
        }
    }
    pass("criterion-5 bijection roundtrip for m+n <= 7");
}

/// Criterion 6: the full series identity suite at degree 12 (bisection at
/// 14), coefficient for coefficient.
#[test]
fn criterion_6_series_identity_suite() {
    for &alpha in &[0u32, 1, 2, 3, 5] {
        for &beta in &[0u32, 1, 2, 3, 5] {
            series::verify_jacobi_gf(alpha, beta, 12)
                .unwrap_or_else(|e| panic!("jacobi ({alpha},{beta}): {e}"));
        }
    }
    series::verify_eq_delta(12).unwrap();
    series::verify_s3_gf(12).unwrap();
    series::verify_s4_gf(12).unwrap();
    series::verify_bisection(14).unwrap();
    pass("criterion-6 series identity suite at degree 12 (bisection 14)");
}

/// Criterion 7: 200 sampled Chu-Vandermonde evaluations and exhaustive
/// telescoping over m,n <= 12.
#[test]
fn criterion_7_chu_vandermonde_and_telescoping() {
    assert_eq!(cli::chu_vandermonde_sample(200), None);
    for m in 1..=12i64 {
        for n in 1..=12 {
            for a in 1..=m {
                assert!(check_s1_telescoping(m, n, a), "S1 at ({m},{n},{a})");
                assert!(check_s2_telescoping(m, n, a), "S2 at ({m},{n},{a})");
            }
        }
    }
    // the raw C(m+n,m)^2 identity behind the sampled evaluations
    for m in 0..=12i64 {
        for n in 0..=12 {
            let lhs: BigInt = (0..=m).map(|k| binomial(m, k) * binomial(n, k)).sum::<BigInt>();
            assert_eq!(lhs, binomial(m + n, m), "vandermonde at ({m},{n})");
        }
    }
    pass("criterion-7 Chu-Vandermonde sample and telescoping for m,n <= 12");
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_convexcount"))
}

fn run_ok(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
    )
}

/// Criterion 8: the documented CLI invocations produce the stated outputs
/// and exit codes byte-exactly.
#[test]
fn criterion_8_cli_contract() {
    // count examples
    assert_eq!(run_ok(&["count", "rect", "1", "1"]), (0, "5\n".into()));
    assert_eq!(run_ok(&["count", "perimeter", "0"]), (0, "7\n".into()));
    assert_eq!(run_ok(&["count", "rect", "0", "0"]), (0, "1\n".into()));

    // feasibility and usage exits; the env var moves the bound both ways
    let out = bin().args(["count", "rect", "9", "9", "--route", "bruteforce"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = bin()
        .args(["count", "rect", "3", "2", "--route", "bruteforce"])
        .env("CONVEXCOUNT_MAX_BRUTE", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = bin()
        .args(["count", "rect", "12", "1", "--route", "bruteforce"])
        .env("CONVEXCOUNT_MAX_BRUTE", "13")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        count_rect(12, 1).to_string()
    );
    let out = bin().args(["count", "rect", "-1", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // table: 0..3 x 0..3 closed-only has a header plus 16 rows
    let (code, stdout) = run_ok(&["table", "--m-range", "0..3", "--n-range", "0..3"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "m,n,closed");
    assert_eq!(lines.len(), 17);

    // closed+bruteforce agree over m+n <= 6: no flagged rows, exit 0
    let (code, _) = run_ok(&[
        "table",
        "--m-range",
        "0..3",
        "--n-range",
        "0..3",
        "--routes",
        "closed,bruteforce",
    ]);
    assert_eq!(code, 0);

    // json mode round-trips through a generic parser
    let (code, stdout) = run_ok(&[
        "table",
        "--m-range",
        "0..2",
        "--n-range",
        "0..2",
        "--routes",
        "closed,quadruple",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let parsed: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(parsed.as_array().unwrap().len(), 9);
    assert_eq!(parsed[0]["m"], 0);
    assert_eq!(parsed[4]["closed"], "5");

    // breakdown examples
    let (code, stdout) = run_ok(&["breakdown", "1", "1"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "S0 = 3\nS1 raw=2 closed=2\nS2 raw=1 closed=1\nS3 raw=1 closed=1\n\
         S4 raw=0 closed=0\nS5 raw=0\nquadruple = 5\ncount_rect = 5\ndecomposition: PASS\n"
    );
    let (code, stdout) = run_ok(&["breakdown", "5", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.ends_with("decomposition: PASS\n"));
    let out = bin().args(["breakdown", "0", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // verify examples
    assert_eq!(run_ok(&["verify", "bisection", "--degree", "14"]), (0, "PASS\n".into()));
    assert_eq!(
        run_ok(&["verify", "jacobi", "--alpha", "1", "--beta", "1", "--degree", "12"]),
        (0, "PASS\n".into())
    );
    assert_eq!(run_ok(&["verify", "lemma1", "--max", "5"]), (0, "PASS\n".into()));

    // enumerate examples
    assert_eq!(run_ok(&["enumerate", "1", "1", "--format", "count"]), (0, "5\n".into()));
    assert_eq!(run_ok(&["enumerate", "0", "0"]), (0, "#\n".into()));
    let (code, stdout) = run_ok(&["enumerate", "1", "1"]);
    assert_eq!(code, 0);
    let blocks: Vec<&str> = stdout.split("\n\n").collect();
    assert_eq!(blocks.len(), 5);
    assert_eq!(blocks[0], "##\n##");

    // determinism: identical invocations, byte-identical output
    let first = run_ok(&["table", "--m-range", "0..4", "--n-range", "0..4"]);
    let second = run_ok(&["table", "--m-range", "0..4", "--n-range", "0..4"]);
    assert_eq!(first, second);

    pass("criterion-8 CLI contract");
}
