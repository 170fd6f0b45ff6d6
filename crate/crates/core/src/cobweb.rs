//! Finite prefixes of the cobweb poset.
//!
//! Level `s` holds `F_s` vertices and every vertex of level `s` is covered
//! by every vertex of level `s + 1`. The order is the transitive closure:
//! `(s, j) < (t, k)` iff `s < t`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fnomial::fnomial_product;
use crate::interpret::OracleResult;
use crate::json;
use crate::sequences::{FSequence, SequenceKind};

pub const DEFAULT_VERTEX_CAP: usize = 5000;
pub const DEFAULT_CHAIN_CAP: u64 = 1_000_000;
/// Dense Möbius tables hold one big integer per comparable pair.
pub const MOBIUS_VERTEX_CAP: usize = 2000;
/// Upper bound on DFS spot checks in [`binomial_check`].
pub const MAX_SPOT_CHECKS: usize = 2000;
/// Largest interval chain count recounted by DFS in [`binomial_check`].
pub const DEFAULT_DFS_CAP: u64 = 10_000;
pub const DEFAULT_SEED: u64 = 0x00C0_BEB0;

/// Vertex `(level, index)`, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Vertex {
    pub level: usize,
    pub index: usize,
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.level, self.index)
    }
}

#[derive(Debug, Clone)]
pub struct CobwebPoset {
    seq: FSequence,
    level_sizes: Vec<usize>,
    /// `offsets[s - 1]` is the id of `(s, 1)`; the last entry is the vertex count.
    offsets: Vec<usize>,
}

pub fn build_cobweb(seq: &FSequence, n: usize) -> Result<CobwebPoset> {
    CobwebPoset::build(seq, n, DEFAULT_VERTEX_CAP)
}

impl CobwebPoset {
    pub fn build(seq: &FSequence, n_levels: usize, vertex_cap: usize) -> Result<Self> {
        if n_levels == 0 {
            return Err(Error::BadRange("a cobweb prefix needs at least one level".into()));
        }
        let mut level_sizes = Vec::with_capacity(n_levels);
        let mut offsets = vec![0usize];
        let mut total = BigUint::zero();
        for s in 1..=n_levels {
            let f = seq.term(s);
            total += &f;
            if total > BigUint::from(vertex_cap) {
                return Err(Error::cap("cobweb vertex count", total, vertex_cap));
            }
            let f = f.to_usize().expect("bounded by the vertex cap");
            level_sizes.push(f);
            offsets.push(offsets[s - 1] + f);
        }
        Ok(CobwebPoset {
            seq: seq.clone(),
            level_sizes,
            offsets,
        })
    }

    pub fn seq_kind(&self) -> SequenceKind {
        self.seq.kind()
    }

    pub fn sequence(&self) -> &FSequence {
        &self.seq
    }

    pub fn n_levels(&self) -> usize {
        self.level_sizes.len()
    }

    pub fn level_sizes(&self) -> &[usize] {
        &self.level_sizes
    }

    pub fn vertex_count(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    /// Number of covering pairs, `sum F_s F_{s+1}`.
    pub fn cover_count(&self) -> usize {
        self.level_sizes.windows(2).map(|w| w[0] * w[1]).sum()
    }

    /// Number of strictly comparable pairs `x < y`.
    pub fn relation_count(&self) -> usize {
        let n = self.vertex_count();
        self.level_sizes
            .iter()
            .zip(&self.offsets[1..])
            .map(|(&f, &end)| f * (n - end))
            .sum()
    }

    pub fn id(&self, v: Vertex) -> usize {
        self.offsets[v.level - 1] + v.index - 1
    }

    pub fn vertex(&self, id: usize) -> Vertex {
        let level = self.offsets.partition_point(|&o| o <= id);
        Vertex {
            level,
            index: id - self.offsets[level - 1] + 1,
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.level >= 1 && v.level <= self.n_levels() && v.index >= 1 && v.index <= self.level_sizes[v.level - 1]
    }

    pub fn level(&self, s: usize) -> impl Iterator<Item = Vertex> + '_ {
        (1..=self.level_sizes[s - 1]).map(move |index| Vertex { level: s, index })
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (1..=self.n_levels()).flat_map(move |s| self.level(s))
    }

    pub fn leq(&self, x: Vertex, y: Vertex) -> bool {
        x == y || x.level < y.level
    }

    pub fn covers(&self, x: Vertex, y: Vertex) -> bool {
        y.level == x.level + 1
    }

    /// Upper covers of `x`.
    pub fn covers_above(&self, x: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let next = x.level + 1;
        let size = if next <= self.n_levels() { self.level_sizes[next - 1] } else { 0 };
        (1..=size).map(move |index| Vertex { level: next, index })
    }

    fn check_layer(&self, k: usize, n: usize, allow_empty: bool) -> Result<()> {
        let ok = if allow_empty { k <= n } else { k < n };
        if !ok || n > self.n_levels() {
            return Err(Error::BadRange(format!(
                "layer k={k}, n={n} outside 0 <= k {} n <= {}",
                if allow_empty { "<=" } else { "<" },
                self.n_levels()
            )));
        }
        Ok(())
    }
}

/// Closed form `F_{k+1} ... F_n` for the maximal chains of layer `Φ_{k+1}..Φ_n`.
pub fn count_max_chains_layer(p: &CobwebPoset, k: usize, n: usize) -> Result<BigUint> {
    p.check_layer(k, n, false)?;
    Ok(p.level_sizes[k..n].iter().map(|&f| BigUint::from(f)).product())
}

/// Depth-first enumeration of the maximal chains of layer `Φ_{k+1}..Φ_n`,
/// following covering edges.
pub fn enumerate_max_chains(p: &CobwebPoset, k: usize, n: usize, cap: u64) -> Result<OracleResult> {
    let predicted = count_max_chains_layer(p, k, n)?;
    if predicted > BigUint::from(cap) {
        return Err(Error::cap("maximal chain enumeration", predicted, cap));
    }
    let mut stack: Vec<Vertex> = p.level(k + 1).collect();
    let mut chains = 0u64;
    let mut visited = 0u64;
    while let Some(v) = stack.pop() {
        visited += 1;
        if v.level == n {
            chains += 1;
        } else {
            stack.extend(p.covers_above(v));
        }
    }
    Ok(OracleResult::exact(chains, visited))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainQuotientReport {
    pub k: usize,
    pub n: usize,
    #[serde(serialize_with = "json::dec")]
    pub fnomial: BigUint,
    #[serde(serialize_with = "json::dec")]
    pub lhs: BigUint,
    #[serde(serialize_with = "json::dec")]
    pub rhs: BigUint,
    pub equal: bool,
}

/// Surrogate for the cobweb interpretation of F-nomials:
/// `(n over k)_F * (n-k)_F! == #maximal chains of layer Φ_{k+1}..Φ_n`.
pub fn chain_quotient_identity(p: &CobwebPoset, k: usize, n: usize) -> Result<ChainQuotientReport> {
    p.check_layer(k, n, true)?;
    let fnomial = fnomial_product(&p.seq, n, k as i64)?;
    let lhs = &fnomial * p.seq.factorial(n - k);
    let rhs = if k == n {
        BigUint::one()
    } else {
        count_max_chains_layer(p, k, n)?
    };
    Ok(ChainQuotientReport {
        k,
        n,
        equal: lhs == rhs,
        fnomial,
        lhs,
        rhs,
    })
}

/// `μ(x, y)` for every comparable pair of a cobweb prefix.
#[derive(Debug, Clone)]
pub struct MobiusTable {
    n: usize,
    /// `rows[x][y - x]` for vertex ids `x <= y`; ids are level-ordered so
    /// every comparable pair has `x <= y`.
    rows: Vec<Vec<Option<BigInt>>>,
    poset: CobwebPoset,
}

impl MobiusTable {
    pub fn get(&self, x: Vertex, y: Vertex) -> Option<&BigInt> {
        if !self.poset.contains(x) || !self.poset.contains(y) {
            return None;
        }
        let (xi, yi) = (self.poset.id(x), self.poset.id(y));
        if yi < xi {
            return None;
        }
        self.rows[xi][yi - xi].as_ref()
    }

    pub fn len(&self) -> usize {
        self.rows.iter().flatten().filter(|v| v.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Vertex, &BigInt)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(xi, row)| {
            row.iter().enumerate().filter_map(move |(d, v)| {
                v.as_ref()
                    .map(|v| (self.poset.vertex(xi), self.poset.vertex(xi + d), v))
            })
        })
    }

    /// Checks `sum_{x <= z <= y} μ(x, z) = [x = y]` by direct summation over
    /// every vertex `z`, and returns the first failing pair.
    pub fn convolution_failure(&self) -> Option<(Vertex, Vertex)> {
        let p = &self.poset;
        for (x, y, _) in self.iter() {
            let mut sum = BigInt::zero();
            for z in p.vertices() {
                if p.leq(x, z) && p.leq(z, y) {
                    sum += self.get(x, z).expect("comparable pair present");
                }
            }
            let expected = if x == y { BigInt::one() } else { BigInt::zero() };
            if sum != expected {
                return Some((x, y));
            }
        }
        None
    }
}

/// Möbius function by `μ(x,x) = 1`, `μ(x,y) = -sum_{x <= z < y} μ(x,z)`.
///
/// Vertices are visited in level order, a linear extension. For fixed `x`
/// the strict down-set of `y` inside `[x, y]` is `x` plus all vertices of
/// levels strictly between, so running per-level sums suffice.
pub fn mobius_table(p: &CobwebPoset) -> Result<MobiusTable> {
    let n = p.vertex_count();
    if n > MOBIUS_VERTEX_CAP {
        return Err(Error::cap("Möbius table vertex count", n, MOBIUS_VERTEX_CAP));
    }
    let mut rows = Vec::with_capacity(n);
    for xi in 0..n {
        let x = p.vertex(xi);
        let mut row: Vec<Option<BigInt>> = Vec::with_capacity(n - xi);
        // sum of μ(x, z) over z processed so far on levels below the current one
        let mut below = BigInt::zero();
        let mut current_level = BigInt::zero();
        let mut level = x.level;
        for yi in xi..n {
            let y = p.vertex(yi);
            if y.level != level {
                below += std::mem::take(&mut current_level);
                level = y.level;
            }
            if !p.leq(x, y) {
                row.push(None);
                continue;
            }
            let mu = if yi == xi { BigInt::one() } else { -below.clone() };
            current_level += &mu;
            row.push(Some(mu));
        }
        rows.push(row);
    }
    Ok(MobiusTable {
        n,
        rows,
        poset: p.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub bottom: Vertex,
    pub top: Vertex,
    pub length: usize,
    #[serde(serialize_with = "json::dec")]
    pub chains: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpotCheck {
    pub seed: u64,
    pub comparable_pairs: u64,
    pub sampled: usize,
    pub verified: usize,
    /// Sampled intervals whose chain count exceeded the DFS cap.
    pub skipped: usize,
    pub mismatches: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinomialCheckReport {
    #[serde(serialize_with = "json::dec")]
    pub sequence: SequenceKind,
    pub levels: usize,
    #[serde(serialize_with = "by_length_json")]
    pub by_length: BTreeMap<usize, BTreeSet<BigUint>>,
    pub is_binomial: bool,
    pub counterexample: Option<(Interval, Interval)>,
    pub spot_check: SpotCheck,
}

fn by_length_json<S: serde::Serializer>(
    m: &BTreeMap<usize, BTreeSet<BigUint>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(m.iter().map(|(len, counts)| {
        (
            len.to_string(),
            counts.iter().map(ToString::to_string).collect::<Vec<_>>(),
        )
    }))
}

impl BinomialCheckReport {
    pub fn to_json(&self) -> String {
        json::to_canonical_string(self)
    }
}

/// Maximal chains of `[x, y]` by walking covering edges.
fn dfs_interval_chains(p: &CobwebPoset, x: Vertex, y: Vertex) -> u64 {
    if x == y {
        return 1;
    }
    p.covers_above(x)
        .filter(|&z| p.leq(z, y))
        .map(|z| dfs_interval_chains(p, z, y))
        .sum()
}

/// Tests whether the maximal-chain count of an interval depends only on its
/// length.
///
/// Chain counts come from the closed form `prod_{s < u < t} F_u`; a seeded
/// sample of about a tenth of the comparable pairs (at most
/// [`MAX_SPOT_CHECKS`]) is recounted by DFS.
pub fn binomial_check(p: &CobwebPoset, seed: u64, dfs_cap: u64) -> BinomialCheckReport {
    let n = p.n_levels();
    let chains = |s: usize, t: usize| -> BigUint {
        p.level_sizes[s..t.saturating_sub(1)]
            .iter()
            .map(|&f| BigUint::from(f))
            .product()
    };

    let mut by_length: BTreeMap<usize, BTreeSet<BigUint>> = BTreeMap::new();
    let mut first_seen: BTreeMap<usize, Interval> = BTreeMap::new();
    let mut counterexample = None;
    let rep = |s: usize, t: usize, c: BigUint| Interval {
        bottom: Vertex { level: s, index: 1 },
        top: Vertex { level: t, index: 1 },
        length: t - s,
        chains: c,
    };
    // x == y intervals have length 0 and a single chain
    by_length.entry(0).or_default().insert(BigUint::one());
    for length in 1..n {
        for s in 1..=n - length {
            let t = s + length;
            let c = chains(s, t);
            by_length.entry(length).or_default().insert(c.clone());
            match first_seen.get(&length) {
                None => {
                    first_seen.insert(length, rep(s, t, c));
                }
                Some(first) if counterexample.is_none() && first.chains != c => {
                    counterexample = Some((first.clone(), rep(s, t, c)));
                }
                Some(_) => {}
            }
        }
    }

    // comparable pairs x < y, indexed by x then y
    let total_vertices = p.vertex_count();
    let above: Vec<u64> = (0..total_vertices)
        .map(|xi| (total_vertices - p.offsets[p.vertex(xi).level]) as u64)
        .collect();
    let comparable: u64 = above.iter().sum();
    let sample_size = (comparable.div_ceil(10) as usize).min(MAX_SPOT_CHECKS);
    let mut spot = SpotCheck {
        seed,
        comparable_pairs: comparable,
        sampled: sample_size,
        verified: 0,
        skipped: 0,
        mismatches: 0,
    };
    if sample_size > 0 {
        let mut prefix = Vec::with_capacity(above.len());
        let mut acc = 0u64;
        for a in &above {
            acc += a;
            prefix.push(acc);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut picks: Vec<usize> = index::sample(&mut rng, comparable as usize, sample_size).into_vec();
        picks.sort_unstable();
        for pick in picks {
            let pick = pick as u64;
            let xi = prefix.partition_point(|&c| c <= pick);
            let before = if xi == 0 { 0 } else { prefix[xi - 1] };
            let x = p.vertex(xi);
            let yi = p.offsets[x.level] + (pick - before) as usize;
            let y = p.vertex(yi);
            let expected = chains(x.level, y.level);
            if expected > BigUint::from(dfs_cap) {
                spot.skipped += 1;
                continue;
            }
            if BigUint::from(dfs_interval_chains(p, x, y)) == expected {
                spot.verified += 1;
            } else {
                spot.mismatches += 1;
            }
        }
    }

    BinomialCheckReport {
        sequence: p.seq_kind(),
        levels: n,
        is_binomial: by_length.values().all(|c| c.len() == 1),
        by_length,
        counterexample,
        spot_check: spot,
    }
}
