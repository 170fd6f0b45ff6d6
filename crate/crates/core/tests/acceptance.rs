//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Reference values come from oracles written here (Pascal additions,
//! Stirling recurrences, direct products of sequence terms, explicit
//! Möbius convolution sums) rather than from the library's own helpers.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use fibonomial::cobweb::{self, DEFAULT_CHAIN_CAP, DEFAULT_DFS_CAP, DEFAULT_SEED};
use fibonomial::interpret;
use fibonomial::lgv::{self, DEFAULT_SYSTEM_CAP};
use fibonomial::{
    build_cobweb, fnomial_product, triangle, FSequence, Method, SequenceKind, Vertex,
};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

type Outcome = Result<String, String>;
/// Id, name, time limit in seconds, check.
type Criterion = (u8, &'static str, Option<u64>, fn() -> Outcome);

macro_rules! check {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn seq(kind: SequenceKind) -> FSequence {
    FSequence::new(kind)
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn pascal(n: usize, k: usize) -> BigUint {
    let mut row = vec![big(1)];
    for _ in 0..n {
        let mut next = vec![big(1)];
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(big(1));
        row = next;
    }
    row.get(k).cloned().unwrap_or_default()
}

fn stirling(n_max: usize, first_kind: bool) -> Vec<Vec<u64>> {
    let mut t = vec![vec![0u64; n_max + 2]; n_max + 1];
    t[0][0] = 1;
    for n in 1..=n_max {
        for k in 1..=n {
            let factor = if first_kind { n as u64 - 1 } else { k as u64 };
            t[n][k] = factor * t[n - 1][k] + t[n - 1][k - 1];
        }
    }
    t
}

fn criterion_1() -> Outcome {
    for kind in [
        SequenceKind::Fibonacci,
        SequenceKind::Natural,
        SequenceKind::Gaussian(2),
        SequenceKind::Gaussian(3),
    ] {
        let s = seq(kind);
        let p = triangle(&s, 24, Method::Product).map_err(|e| e.to_string())?;
        let r = triangle(&s, 24, Method::Recurrence).map_err(|e| e.to_string())?;
        check!(p.rows == r.rows, "{kind}: product and recurrence differ");
        for (n, row) in p.rows.iter().enumerate() {
            check!(row.len() == n + 1, "{kind}: row {n} length");
            check!(row[0].is_one() && row[n].is_one(), "{kind}: row {n} boundary");
            check!(row.iter().eq(row.iter().rev()), "{kind}: row {n} not symmetric");
        }
    }
    let fib = triangle(&seq(SequenceKind::Fibonacci), 7, Method::Recurrence).unwrap();
    let want: Vec<BigUint> = [1, 13, 104, 260, 260, 104, 13, 1].map(big).to_vec();
    check!(fib.rows[7] == want, "fibonacci row 7 = {:?}", fib.rows[7]);
    Ok("4 sequences, rows 0..24 agree, symmetric, boundary 1".into())
}

fn criterion_2() -> Outcome {
    let natural = seq(SequenceKind::Natural);
    for n in 0..=12 {
        for k in 0..=n {
            let oracle = interpret::count_k_subsets(n, k).unwrap().value;
            let closed = fnomial_product(&natural, n, k as i64).unwrap();
            check!(closed == pascal(n, k), "natural fnomial ({n},{k}) vs Pascal");
            check!(oracle == BigInt::from(closed), "subsets ({n},{k})");
        }
    }
    for (q, n_cap) in [(2u32, 4usize), (3, 3)] {
        let g = seq(SequenceKind::Gaussian(q));
        for n in 0..=n_cap {
            for k in 0..=n {
                let oracle = interpret::count_subspaces_bruteforce(n, k, q).unwrap().value;
                let closed = fnomial_product(&g, n, k as i64).unwrap();
                check!(oracle == BigInt::from(closed), "subspaces ({n},{k},{q}): {oracle}");
            }
        }
    }
    let v = interpret::count_subspaces_bruteforce(4, 2, 2).unwrap().value;
    check!(v == BigInt::from(35), "subspaces (4,2,2) = {v}");
    let s2 = stirling(12, false);
    for n in 0..=12 {
        for k in 0..=n {
            let oracle = interpret::count_partitions_k_blocks(n, k).unwrap().value;
            check!(oracle == BigInt::from(s2[n][k]), "S({n},{k}) = {}, oracle {oracle}", s2[n][k]);
        }
    }
    let c1 = stirling(9, true);
    for n in 0..=9 {
        for k in 0..=n {
            let oracle = interpret::count_perms_k_cycles(n, k).unwrap().value;
            check!(oracle == BigInt::from(c1[n][k]), "c({n},{k}) = {}, oracle {oracle}", c1[n][k]);
        }
    }
    Ok("subsets n<=12, subspaces in cap ((4,2,2)=35), S(n,k) n<=12, c(n,k) n<=9".into())
}

fn criterion_3() -> Outcome {
    for (kind, n_max) in [(SequenceKind::Fibonacci, 7), (SequenceKind::Natural, 6)] {
        let s = seq(kind);
        let p = build_cobweb(&s, n_max).unwrap();
        for n in 1..=n_max {
            for k in 0..n {
                let direct: BigUint = (k + 1..=n).map(|i| s.term(i)).product();
                let oracle = cobweb::enumerate_max_chains(&p, k, n, DEFAULT_CHAIN_CAP).unwrap().value;
                check!(oracle == BigInt::from(direct.clone()), "{kind} k={k} n={n}: {oracle} vs {direct}");
            }
        }
    }
    let p = build_cobweb(&seq(SequenceKind::Fibonacci), 7).unwrap();
    let full = cobweb::enumerate_max_chains(&p, 0, 7, DEFAULT_CHAIN_CAP).unwrap().value;
    check!(full == BigInt::from(3120), "full fibonacci chain count {full}");
    Ok("fibonacci n<=7, natural n<=6 layers; full count 3120".into())
}

fn criterion_4() -> Outcome {
    for (kind, n_max) in [
        (SequenceKind::Fibonacci, 7),
        (SequenceKind::Natural, 6),
        (SequenceKind::Gaussian(2), 5),
    ] {
        let p = build_cobweb(&seq(kind), n_max).unwrap();
        for n in 0..=n_max {
            for k in 0..=n {
                let r = cobweb::chain_quotient_identity(&p, k, n).unwrap();
                check!(r.equal && r.lhs == r.rhs, "{kind} k={k} n={n}");
            }
        }
    }
    let p = build_cobweb(&seq(SequenceKind::Fibonacci), 7).unwrap();
    let r = cobweb::chain_quotient_identity(&p, 2, 6).unwrap();
    check!(r.fnomial == big(40) && r.lhs == big(240) && r.rhs == big(240), "spot {:?}", r);
    Ok("all 0<=k<=n in range; k=2 n=6: 40*6 = 240".into())
}

fn criterion_5() -> Outcome {
    for n in 4..=6 {
        let p = build_cobweb(&seq(SequenceKind::Fibonacci), n).unwrap();
        let r = cobweb::binomial_check(&p, DEFAULT_SEED, DEFAULT_DFS_CAP);
        check!(!r.is_binomial, "n={n} reported binomial");
        let (a, b) = r.counterexample.ok_or(format!("n={n}: no counterexample"))?;
        check!(a.length == 2 && b.length == 2, "n={n}: counterexample length");
        let counts: BTreeSet<BigUint> = [a.chains, b.chains].into();
        check!(counts == BTreeSet::from([big(1), big(2)]), "n={n}: counts {counts:?}");
        check!(r.spot_check.mismatches == 0, "n={n}: DFS spot check");
    }
    Ok("fibonacci n=4..6 not binomial, length-2 counts {1,2}".into())
}

fn criterion_6() -> Outcome {
    for n in 1..=5 {
        let p = build_cobweb(&seq(SequenceKind::Fibonacci), n).unwrap();
        let mu = cobweb::mobius_table(&p).unwrap();
        let verts: Vec<Vertex> = p.vertices().collect();
        for &x in &verts {
            for &y in verts.iter().filter(|&&y| p.leq(x, y)) {
                let sum: BigInt = verts
                    .iter()
                    .filter(|&&z| p.leq(x, z) && p.leq(z, y))
                    .map(|&z| mu.get(x, z).unwrap().clone())
                    .sum();
                let delta = if x == y { BigInt::one() } else { BigInt::zero() };
                check!(sum == delta, "n={n}: convolution at {x}..{y} = {sum}");
                let v = mu.get(x, y).unwrap();
                if y.level == x.level + 1 {
                    check!(*v == BigInt::from(-1), "cover {x}<{y}: {v}");
                }
                if x.level == 2 && y.level == 4 {
                    check!(v.is_one(), "μ{x}{y} = {v}");
                }
            }
        }
    }
    Ok("convolution δ for fibonacci n<=5; covers -1; Φ2→Φ4 = 1".into())
}

fn criterion_7() -> Outcome {
    let grid = lgv::build_grid_dag(4, 4, &[(0, 1), (1, 0)], &[(2, 3), (3, 2)]).unwrap();
    let det = lgv::lgv_determinant(&lgv::path_matrix(&grid));
    let brute = lgv::enumerate_disjoint_systems(&grid, DEFAULT_SYSTEM_CAP).unwrap().value;
    check!(det == BigInt::from(20) && brute == det, "grid det {det} brute {brute}");
    check!(lgv::lgv_verify(&grid, DEFAULT_SYSTEM_CAP).unwrap().nonpermutable, "grid permutable");
    for m in [2usize, 3] {
        let d = lgv::build_fib_dag(2 * m + 1, &[0, 1], &[2 * m, 2 * m + 1]).unwrap();
        let r = lgv::lgv_verify(&d, DEFAULT_SYSTEM_CAP).unwrap();
        check!(r.nonpermutable && r.determinant.is_one() && r.brute_force.is_one(), "fib m={m}: {r:?}");
    }
    let fib = seq(SequenceKind::Fibonacci);
    let d = lgv::build_fib_dag(20, &[0], &[20]).unwrap();
    for m in 1..=20 {
        let paths = lgv::count_paths(&d, 0, m).unwrap();
        check!(paths == BigInt::from(fib.term(m + 1)), "paths 0→{m} = {paths}");
    }
    Ok("grid 20 = 20; fib (0,1)→(4,5),(6,7) det 1 = brute 1; paths F(m+1), m<=20".into())
}

fn run_bin(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_fibonomial"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn criterion_8() -> Outcome {
    let (c1, a) = run_bin(&["report", "all", "--format", "json"]);
    let (c2, b) = run_bin(&["report", "all", "--format", "json"]);
    check!(c1 == 0 && c2 == 0, "report all exit codes {c1}, {c2}");
    check!(a == b && !a.is_empty(), "report JSON differs between runs");

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let corrupted = dir.path().join("corrupted.json");
    std::fs::write(&corrupted, r#"{"subspaces_4_2_2": 36}"#).unwrap();
    let (code, out) = run_bin(&["report", "all", "--format", "json", "--expected", corrupted.to_str().unwrap()]);
    check!(code == 1, "corrupted expected file: exit {code}");
    let v: serde_json::Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
    check!(v["all_passed"] == false, "corrupted run still reports all_passed");

    let malformed = dir.path().join("malformed.json");
    std::fs::write(&malformed, "{ not json").unwrap();
    let (code, _) = run_bin(&["report", "all", "--expected", malformed.to_str().unwrap()]);
    check!(code == 2, "malformed expected file: exit {code}");
    let (code, _) = run_bin(&["triangle", "--seq", "one", "--rows", "5", "--method", "recurrence"]);
    check!(code == 2, "unsupported recurrence: exit {code}");
    Ok("byte-identical JSON; exit 0 / 1 (corrupted) / 2 (malformed, usage)".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        (1, "triangle cross-validation", Some(1), criterion_1),
        (2, "interpretation oracles", Some(30), criterion_2),
        (3, "cobweb chain oracle", Some(10), criterion_3),
        (4, "chain-quotient identity", None, criterion_4),
        (5, "non-binomiality", Some(1), criterion_5),
        (6, "Möbius function", None, criterion_6),
        (7, "LGV lemma", Some(10), criterion_7),
        (8, "CLI determinism and exit codes", None, criterion_8),
    ];
    let mut failed = 0;
    for (id, name, limit, f) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(s)) if elapsed > Duration::from_secs(s) => {
                Err(format!("took {:.2} s, limit {s} s", elapsed.as_secs_f64()))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS  criterion {id}: {name} [{:.3} s] {detail}", elapsed.as_secs_f64()),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {id}: {name} [{:.3} s] {detail}", elapsed.as_secs_f64());
            }
        }
    }
    let in_lib = fibonomial::report::run_all(&Default::default(), Default::default());
    if in_lib.all_passed {
        println!("PASS  report all (library runner)");
    } else {
        failed += 1;
        println!("FAIL  report all (library runner)\n{}", in_lib.to_table());
    }
    if failed > 0 {
        println!("{failed} acceptance check(s) failed");
        std::process::exit(1);
    }
    println!("acceptance: all criteria passed");
}
