//! The end-to-end verification suite behind `report all`.
//!
//! Each criterion recomputes its quantities through two independent routes
//! and compares them; a handful of spot values are read from [`Expected`],
//! which can be overridden from a JSON file to check that failures surface.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cobweb::{self, build_cobweb, CobwebPoset, Vertex};
use crate::error::{Error, Result};
use crate::fnomial::{fnomial_product, triangle, triangle_report, Method};
use crate::interpret;
use crate::json;
use crate::lgv;
use crate::sequences::{FSequence, SequenceKind};

/// Spot values the suite asserts. Every field may be overridden.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Expected {
    pub fibonacci_row_7: Vec<u64>,
    pub subspaces_4_2_2: u64,
    pub fibonacci_full_chains_7: u64,
    pub chain_quotient_2_6: u64,
    pub counterexample_counts: Vec<u64>,
    pub mobius_cover: i64,
    pub mobius_level2_level4: i64,
    pub lgv_grid: i64,
    pub lgv_cassini: i64,
}

impl Default for Expected {
    fn default() -> Self {
        Expected {
            fibonacci_row_7: vec![1, 13, 104, 260, 260, 104, 13, 1],
            subspaces_4_2_2: 35,
            fibonacci_full_chains_7: 3120,
            chain_quotient_2_6: 240,
            counterexample_counts: vec![1, 2],
            mobius_cover: -1,
            mobius_level2_level4: 1,
            lgv_grid: 20,
            lgv_cassini: 1,
        }
    }
}

impl Expected {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Expected(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Criterion {
    pub id: u8,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub time_limit: Option<Duration>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub criteria: Vec<Criterion>,
    pub all_passed: bool,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        json::to_canonical_string(self)
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for c in &self.criteria {
            let _ = writeln!(
                out,
                "[{}] {}. {} ({:.1} ms) - {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.id,
                c.name,
                c.elapsed.as_secs_f64() * 1e3,
                c.detail
            );
        }
        let _ = writeln!(
            out,
            "{}",
            if self.all_passed { "all criteria passed" } else { "some criteria FAILED" }
        );
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,name,passed,detail\n");
        for c in &self.criteria {
            let _ = writeln!(out, "{},\"{}\",{},\"{}\"", c.id, c.name, c.passed, c.detail.replace('"', "'"));
        }
        out
    }
}

/// Outcome of one check: pass flag plus a one-line detail.
type Check = std::result::Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed(id: u8, name: &str, limit: Option<Duration>, check: impl FnOnce() -> Check) -> Criterion {
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if let Some(limit) = limit {
        if elapsed > limit {
            passed = false;
            detail = format!("{detail}; exceeded time limit {} s", limit.as_secs());
        }
    }
    Criterion {
        id,
        name: name.to_string(),
        passed,
        detail,
        elapsed,
        time_limit: limit,
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn seq(kind: SequenceKind) -> FSequence {
    FSequence::new(kind)
}

/// Pascal's triangle by additions only.
pub fn pascal_rows(n_max: usize) -> Vec<Vec<BigUint>> {
    let mut rows = vec![vec![BigUint::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let left = if k > 0 { prev[k - 1].clone() } else { BigUint::zero() };
                let right = prev.get(k).cloned().unwrap_or_default();
                left + right
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// `S(n,k) = k S(n-1,k) + S(n-1,k-1)`.
pub fn stirling2_rows(n_max: usize) -> Vec<Vec<u64>> {
    let mut rows = vec![vec![1u64]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let stay = prev.get(k).map_or(0, |v| k as u64 * v);
                let open = if k > 0 { prev.get(k - 1).copied().unwrap_or(0) } else { 0 };
                stay + open
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// `c(n,k) = (n-1) c(n-1,k) + c(n-1,k-1)`.
pub fn stirling1_rows(n_max: usize) -> Vec<Vec<u64>> {
    let mut rows = vec![vec![1u64]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let row = (0..=n)
            .map(|k| {
                let insert = prev.get(k).map_or(0, |v| (n as u64 - 1) * v);
                let fixed = if k > 0 { prev.get(k - 1).copied().unwrap_or(0) } else { 0 };
                insert + fixed
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// Bell numbers `B_0..=B_n` from the Bell triangle.
pub fn bell_numbers(n_max: usize) -> Vec<u64> {
    let mut bells = vec![1u64];
    let mut row = vec![1u64];
    for _ in 0..n_max {
        let mut next = vec![*row.last().unwrap()];
        for v in &row {
            let last = *next.last().unwrap();
            next.push(last + v);
        }
        bells.push(next[0]);
        row = next;
    }
    bells
}

fn criterion_triangles(expected: &Expected) -> Check {
    let kinds = [
        SequenceKind::Fibonacci,
        SequenceKind::Natural,
        SequenceKind::Gaussian(2),
        SequenceKind::Gaussian(3),
    ];
    for kind in kinds {
        let r = triangle_report(&seq(kind), 24).map_err(err)?;
        ensure(r.agree && r.symmetry_ok && r.integrality_ok, || {
            format!("{kind}: agree={} symmetry={} integrality={} first_mismatch={:?}", r.agree, r.symmetry_ok, r.integrality_ok, r.first_mismatch)
        })?;
    }
    let fib = triangle(&seq(SequenceKind::Fibonacci), 7, Method::Recurrence).map_err(err)?;
    let row7: Vec<BigUint> = expected.fibonacci_row_7.iter().map(|&v| BigUint::from(v)).collect();
    ensure(fib.rows[7] == row7, || format!("fibonacci row 7 is {:?}", fib.rows[7]))?;
    Ok("fibonacci, natural, gaussian:2, gaussian:3 rows 0..24 agree; symmetric; boundary 1".into())
}

fn criterion_interpretations(expected: &Expected) -> Check {
    let natural = seq(SequenceKind::Natural);
    let pascal = pascal_rows(12);
    for n in 0..=12 {
        for k in 0..=n {
            let oracle = interpret::count_k_subsets(n, k).map_err(err)?.value;
            let closed: BigInt = fnomial_product(&natural, n, k as i64).map_err(err)?.into();
            ensure(oracle == closed && closed == pascal[n][k].clone().into(), || {
                format!("subsets n={n} k={k}: oracle {oracle} vs fnomial {closed}")
            })?;
        }
    }
    let mut subspace_checks = 0;
    for (q, cap) in [(2u32, 4usize), (3, 3)] {
        let gauss = seq(SequenceKind::Gaussian(q));
        for n in 0..=cap {
            for k in 0..=n {
                let oracle = interpret::count_subspaces_bruteforce(n, k, q).map_err(err)?.value;
                let closed: BigInt = fnomial_product(&gauss, n, k as i64).map_err(err)?.into();
                ensure(oracle == closed, || format!("subspaces n={n} k={k} q={q}: {oracle} vs {closed}"))?;
                subspace_checks += 1;
            }
        }
    }
    let spot = interpret::count_subspaces_bruteforce(4, 2, 2).map_err(err)?.value;
    ensure(spot == BigInt::from(expected.subspaces_4_2_2), || {
        format!("subspaces (4,2,2) = {spot}, expected {}", expected.subspaces_4_2_2)
    })?;

    let s2 = stirling2_rows(12);
    let bells = bell_numbers(12);
    for n in 0..=12 {
        let (hist, total) = interpret::partition_block_histogram(n).map_err(err)?;
        ensure(hist == s2[n], || format!("partitions n={n}: {hist:?} vs {:?}", s2[n]))?;
        ensure(total == bells[n], || format!("Bell({n}) = {}, generated {total}", bells[n]))?;
    }
    let c1 = stirling1_rows(9);
    let mut factorial = 1u64;
    for n in 0..=9 {
        if n > 0 {
            factorial *= n as u64;
        }
        let (hist, total) = interpret::permutation_cycle_histogram(n).map_err(err)?;
        ensure(hist == c1[n], || format!("cycles n={n}: {hist:?} vs {:?}", c1[n]))?;
        ensure(total == factorial, || format!("{n}! = {factorial}, generated {total}"))?;
    }
    Ok(format!(
        "subsets n<=12, {subspace_checks} subspace cases (4,2,2)={spot}, blocks n<=12, cycles n<=9"
    ))
}

fn layer_checks(p: &CobwebPoset, cap: u64) -> std::result::Result<usize, String> {
    let mut checked = 0;
    for n in 1..=p.n_levels() {
        for k in 0..n {
            let oracle = cobweb::enumerate_max_chains(p, k, n, cap).map_err(err)?.value;
            let closed = cobweb::count_max_chains_layer(p, k, n).map_err(err)?;
            let direct = p.sequence().falling_product(k, n);
            ensure(oracle == BigInt::from(closed.clone()) && closed == direct, || {
                format!("{} layer k={k} n={n}: DFS {oracle} vs product {closed}", p.seq_kind())
            })?;
            checked += 1;
        }
    }
    Ok(checked)
}

fn criterion_chain_oracle(expected: &Expected, cap: u64) -> Check {
    let fib = build_cobweb(&seq(SequenceKind::Fibonacci), 7).map_err(err)?;
    let nat = build_cobweb(&seq(SequenceKind::Natural), 6).map_err(err)?;
    let checked = layer_checks(&fib, cap)? + layer_checks(&nat, cap)?;
    let full = cobweb::enumerate_max_chains(&fib, 0, 7, cap).map_err(err)?.value;
    ensure(full == BigInt::from(expected.fibonacci_full_chains_7), || {
        format!("fibonacci n=7 full chain count {full}, expected {}", expected.fibonacci_full_chains_7)
    })?;
    Ok(format!("{checked} layers match; fibonacci n=7 has {full} maximal chains"))
}

fn criterion_chain_quotient(expected: &Expected) -> Check {
    let mut checked = 0;
    for (kind, n_max) in [
        (SequenceKind::Fibonacci, 7),
        (SequenceKind::Natural, 6),
        (SequenceKind::Gaussian(2), 5),
    ] {
        let p = build_cobweb(&seq(kind), n_max).map_err(err)?;
        for n in 0..=n_max {
            for k in 0..=n {
                let r = cobweb::chain_quotient_identity(&p, k, n).map_err(err)?;
                ensure(r.equal, || format!("{kind} k={k} n={n}: {} vs {}", r.lhs, r.rhs))?;
                checked += 1;
            }
        }
    }
    let fib = build_cobweb(&seq(SequenceKind::Fibonacci), 7).map_err(err)?;
    let spot = cobweb::chain_quotient_identity(&fib, 2, 6).map_err(err)?;
    ensure(spot.lhs == BigUint::from(expected.chain_quotient_2_6), || {
        format!("k=2 n=6 gives {}, expected {}", spot.lhs, expected.chain_quotient_2_6)
    })?;
    Ok(format!("{checked} (k,n) pairs; k=2 n=6: {}*{} = {}", spot.fnomial, &spot.lhs / &spot.fnomial, spot.lhs))
}

fn criterion_non_binomial(expected: &Expected, seed: u64) -> Check {
    let want: std::collections::BTreeSet<BigUint> =
        expected.counterexample_counts.iter().map(|&v| BigUint::from(v)).collect();
    for n in 4..=6 {
        let p = build_cobweb(&seq(SequenceKind::Fibonacci), n).map_err(err)?;
        let r = cobweb::binomial_check(&p, seed, cobweb::DEFAULT_DFS_CAP);
        ensure(!r.is_binomial, || format!("n={n} reported binomial"))?;
        let (a, b) = r.counterexample.clone().ok_or_else(|| format!("n={n}: no counterexample"))?;
        let got: std::collections::BTreeSet<BigUint> = [a.chains.clone(), b.chains.clone()].into();
        ensure(a.length == 2 && b.length == 2 && got == want, || {
            format!("n={n}: counterexample lengths {}/{} counts {got:?}", a.length, b.length)
        })?;
        ensure(r.spot_check.mismatches == 0, || format!("n={n}: DFS spot check mismatches"))?;
    }
    Ok("fibonacci n=4..6 not binomial; length-2 intervals with 1 and 2 chains".into())
}

fn criterion_mobius(expected: &Expected) -> Check {
    let mut pairs = 0;
    for n in 1..=5 {
        let p = build_cobweb(&seq(SequenceKind::Fibonacci), n).map_err(err)?;
        let mu = cobweb::mobius_table(&p).map_err(err)?;
        if let Some((x, y)) = mu.convolution_failure() {
            return Err(format!("n={n}: convolution fails at {x}..{y}"));
        }
        for (x, y, v) in mu.iter() {
            if p.covers(x, y) {
                ensure(*v == BigInt::from(expected.mobius_cover), || format!("cover {x}<{y}: μ = {v}"))?;
            }
            if x.level == 2 && y.level == 4 {
                ensure(*v == BigInt::from(expected.mobius_level2_level4), || {
                    format!("μ{x}{y} = {v}, expected {}", expected.mobius_level2_level4)
                })?;
            }
        }
        pairs += mu.len();
    }
    let p = build_cobweb(&seq(SequenceKind::Fibonacci), 5).map_err(err)?;
    let mu = cobweb::mobius_table(&p).map_err(err)?;
    let sample = mu
        .get(Vertex { level: 2, index: 1 }, Vertex { level: 4, index: 1 })
        .cloned()
        .unwrap_or_default();
    Ok(format!("{pairs} comparable pairs over n=1..5; covers -1; Φ2→Φ4 μ = {sample}"))
}

fn criterion_lgv(expected: &Expected, cap: u64) -> Check {
    let grid = lgv::build_grid_dag(4, 4, &[(0, 1), (1, 0)], &[(2, 3), (3, 2)]).map_err(err)?;
    let r = lgv::lgv_verify(&grid, cap).map_err(err)?;
    ensure(r.nonpermutable && r.equal && r.determinant == BigInt::from(expected.lgv_grid), || {
        format!("grid: det {} brute {} nonpermutable {}", r.determinant, r.brute_force, r.nonpermutable)
    })?;
    for m in [2usize, 3] {
        let d = lgv::build_fib_dag(2 * m + 1, &[0, 1], &[2 * m, 2 * m + 1]).map_err(err)?;
        let r = lgv::lgv_verify(&d, cap).map_err(err)?;
        ensure(r.nonpermutable && r.equal && r.determinant == BigInt::from(expected.lgv_cassini), || {
            format!("fib m={m}: det {} brute {} nonpermutable {}", r.determinant, r.brute_force, r.nonpermutable)
        })?;
    }
    let fib = seq(SequenceKind::Fibonacci);
    let d = lgv::build_fib_dag(20, &[0], &[20]).map_err(err)?;
    for m in 1..=20 {
        let paths = lgv::count_paths(&d, 0, m).map_err(err)?;
        ensure(paths == fib.term(m + 1).into(), || format!("paths 0→{m} = {paths}"))?;
    }
    Ok(format!("grid det = brute = {}; fibonacci (0,1)→(4,5),(6,7) det = brute = 1; paths 0→m = F(m+1), m<=20", r.determinant))
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub seed: u64,
    pub cap: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: cobweb::DEFAULT_SEED,
            cap: cobweb::DEFAULT_CHAIN_CAP,
        }
    }
}

fn run_core(expected: &Expected, opts: SuiteOptions) -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        timed(1, "triangle cross-validation", Some(secs(1)), || criterion_triangles(expected)),
        timed(2, "interpretation oracles", Some(secs(30)), || criterion_interpretations(expected)),
        timed(3, "cobweb chain oracle", Some(secs(10)), || criterion_chain_oracle(expected, opts.cap)),
        timed(4, "chain-quotient identity", None, || criterion_chain_quotient(expected)),
        timed(5, "non-binomiality", Some(secs(1)), || criterion_non_binomial(expected, opts.seed)),
        timed(6, "Möbius function", None, || criterion_mobius(expected)),
        timed(7, "LGV lemma", Some(secs(10)), || criterion_lgv(expected, opts.cap)),
    ]
}

/// Runs every criterion. The last one reruns the first seven and compares
/// the canonical JSON byte for byte.
pub fn run_all(expected: &Expected, opts: SuiteOptions) -> SuiteReport {
    let mut criteria = run_core(expected, opts);
    let first = json::to_canonical_string(&criteria);
    criteria.push(timed(8, "determinism", None, || {
        let again = json::to_canonical_string(&run_core(expected, opts));
        ensure(first == again, || "two runs produced different JSON".into())?;
        Ok(format!("two runs byte-identical ({} bytes)", first.len()))
    }));
    SuiteReport {
        all_passed: criteria.iter().all(|c| c.passed),
        criteria,
    }
}
