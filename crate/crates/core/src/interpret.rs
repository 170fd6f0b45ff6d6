//! Brute-force counting oracles for the classical binomial-type families:
//! subsets, set partitions by block count, permutations by cycle count and
//! subspaces of a vector space over a small prime field.
//!
//! Every oracle generates the objects it counts. Caps are hard errors.

use std::collections::HashSet;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::json;

pub const SUBSET_CAP: usize = 20;
pub const PARTITION_CAP: usize = 12;
pub const PERMUTATION_CAP: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    #[serde(serialize_with = "json::dec")]
    pub value: BigInt,
    /// Objects visited during generation.
    pub enumerated: u64,
    pub capped: bool,
}

impl OracleResult {
    pub(crate) fn exact(value: impl Into<BigInt>, enumerated: u64) -> Self {
        OracleResult {
            value: value.into(),
            enumerated,
            capped: false,
        }
    }
}

/// Number of `k`-element subsets of an `n`-set, by lexicographic generation.
pub fn count_k_subsets(n: usize, k: usize) -> Result<OracleResult> {
    if n > SUBSET_CAP {
        return Err(Error::cap("subset oracle n", n, SUBSET_CAP));
    }
    if k > n {
        return Ok(OracleResult::exact(0u32, 0));
    }
    let mut combo: Vec<usize> = (0..k).collect();
    let mut count = 0u64;
    loop {
        count += 1;
        // advance to the next k-combination of 0..n
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(OracleResult::exact(count, count));
            }
            i -= 1;
            if combo[i] < n - k + i {
                break;
            }
        }
        combo[i] += 1;
        for j in i + 1..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

/// Histogram of set partitions of an `n`-set by number of blocks
/// (`hist[k]` partitions have `k` blocks), plus the total visited.
pub fn partition_block_histogram(n: usize) -> Result<(Vec<u64>, u64)> {
    if n > PARTITION_CAP {
        return Err(Error::cap("partition oracle n", n, PARTITION_CAP));
    }
    fn walk(pos: usize, n: usize, blocks: usize, hist: &mut [u64]) {
        if pos == n {
            hist[blocks] += 1;
            return;
        }
        // restricted growth string: element `pos` joins an existing block or opens a new one
        for _ in 0..blocks {
            walk(pos + 1, n, blocks, hist);
        }
        walk(pos + 1, n, blocks + 1, hist);
    }
    let mut hist = vec![0u64; n + 1];
    walk(0, n, 0, &mut hist);
    let total = hist.iter().sum();
    Ok((hist, total))
}

/// Set partitions of an `n`-set into exactly `k` nonempty blocks.
pub fn count_partitions_k_blocks(n: usize, k: usize) -> Result<OracleResult> {
    let (hist, total) = partition_block_histogram(n)?;
    Ok(OracleResult::exact(hist.get(k).copied().unwrap_or(0), total))
}

fn cycle_count(perm: &[usize], seen: &mut [bool]) -> usize {
    seen.iter_mut().for_each(|s| *s = false);
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
        }
    }
    cycles
}

/// Histogram of permutations of `n` letters by cycle count, via Heap's algorithm.
pub fn permutation_cycle_histogram(n: usize) -> Result<(Vec<u64>, u64)> {
    if n > PERMUTATION_CAP {
        return Err(Error::cap("permutation oracle n", n, PERMUTATION_CAP));
    }
    let mut hist = vec![0u64; n + 1];
    let mut perm: Vec<usize> = (0..n).collect();
    let mut seen = vec![false; n];
    let mut c = vec![0usize; n];
    hist[cycle_count(&perm, &mut seen)] += 1;
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            hist[cycle_count(&perm, &mut seen)] += 1;
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    let total = hist.iter().sum();
    Ok((hist, total))
}

/// Permutations of `n` letters with exactly `k` cycles.
pub fn count_perms_k_cycles(n: usize, k: usize) -> Result<OracleResult> {
    let (hist, total) = permutation_cycle_histogram(n)?;
    Ok(OracleResult::exact(hist.get(k).copied().unwrap_or(0), total))
}

/// Vectors of `GF(q)^n` encoded as base-`q` integers `0..q^n`.
struct SmallSpace {
    q: u32,
    n: usize,
    size: u32,
}

impl SmallSpace {
    fn new(q: u32, n: usize) -> Self {
        SmallSpace {
            q,
            n,
            size: q.pow(n as u32),
        }
    }

    fn digits(&self, mut v: u32) -> Vec<u32> {
        (0..self.n)
            .map(|_| {
                let d = v % self.q;
                v /= self.q;
                d
            })
            .collect()
    }

    fn encode(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.q + d)
    }

    /// `u + c v`
    fn axpy(&self, u: u32, c: u32, v: u32) -> u32 {
        let (du, dv) = (self.digits(u), self.digits(v));
        let sum: Vec<u32> = du
            .iter()
            .zip(&dv)
            .map(|(a, b)| (a + c * b) % self.q)
            .collect();
        self.encode(&sum)
    }

    /// Span of `members ∪ {v}` as a membership bitmask; `members` is a subspace.
    fn extend(&self, members: u32, v: u32) -> u32 {
        let mut out = members;
        for u in (0..self.size).filter(|&u| members >> u & 1 == 1) {
            for c in 1..self.q {
                out |= 1 << self.axpy(u, c, v);
            }
        }
        out
    }

    /// True when `mask` is closed under addition and scalar multiplication.
    fn is_closed(&self, mask: u32) -> bool {
        let members: Vec<u32> = (0..self.size).filter(|&u| mask >> u & 1 == 1).collect();
        members.iter().all(|&u| {
            members
                .iter()
                .all(|&v| (0..self.q).all(|c| mask >> self.axpy(u, c, v) & 1 == 1))
        })
    }
}

fn subspace_cap(q: u32) -> Result<usize> {
    match q {
        2 => Ok(4),
        3 => Ok(3),
        q if (2..q).any(|d| q % d == 0) || q < 2 => Err(Error::NonPrimeField(q)),
        q => Err(Error::cap("subspace oracle field size", q, 3)),
    }
}

/// All subspaces of `GF(q)^n`, grown from the zero subspace one vector at a time.
fn subspaces_by_closure(space: &SmallSpace) -> HashSet<u32> {
    let zero = 1u32;
    let mut found: HashSet<u32> = HashSet::from([zero]);
    let mut frontier = vec![zero];
    while let Some(s) = frontier.pop() {
        for v in (0..space.size).filter(|&v| s >> v & 1 == 0) {
            let t = space.extend(s, v);
            if found.insert(t) {
                frontier.push(t);
            }
        }
    }
    found
}

/// Ordered linearly independent `k`-tuples in `GF(q)^dim`.
fn ordered_independent_tuples(space: &SmallSpace, k: usize) -> u64 {
    fn walk(space: &SmallSpace, span: u32, depth: usize, k: usize) -> u64 {
        if depth == k {
            return 1;
        }
        (0..space.size)
            .filter(|&v| span >> v & 1 == 0)
            .map(|v| walk(space, space.extend(span, v), depth + 1, k))
            .sum()
    }
    walk(space, 1, 0, k)
}

/// Number of `k`-dimensional subspaces of `GF(q)^n`.
///
/// Counted twice: by generating every subspace as a closed subset of
/// vectors, and by dividing the number of ordered independent `k`-tuples of
/// the ambient space by the number of ordered bases of `GF(q)^k`. The two
/// must agree.
pub fn count_subspaces_bruteforce(n: usize, k: usize, q: u32) -> Result<OracleResult> {
    let cap = subspace_cap(q)?;
    if n > cap {
        return Err(Error::cap("subspace oracle n", n, cap));
    }
    if k > n {
        return Ok(OracleResult::exact(0u32, 0));
    }
    let ambient = SmallSpace::new(q, n);
    let all = subspaces_by_closure(&ambient);
    let target = q.pow(k as u32);
    let by_closure = all
        .iter()
        .filter(|&&mask| mask.count_ones() == target && ambient.is_closed(mask))
        .count() as u64;

    let tuples = ordered_independent_tuples(&ambient, k);
    let bases = ordered_independent_tuples(&SmallSpace::new(q, k), k);
    let by_tuples = tuples / bases;
    if by_closure != by_tuples || !tuples.is_multiple_of(bases) {
        return Err(Error::OracleDisagreement {
            n,
            k,
            q,
            closure: by_closure.to_string(),
            tuples: format!("{tuples}/{bases}"),
        });
    }
    Ok(OracleResult::exact(by_closure, all.len() as u64 + tuples))
}
