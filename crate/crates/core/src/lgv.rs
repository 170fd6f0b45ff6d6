//! Lindström–Gessel–Viennot machinery on finite weighted DAGs: path counts,
//! path matrices, fraction-free determinants and a brute-force count of
//! vertex-disjoint path systems to check the lemma against.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fnomial::fnomial_product;
use crate::interpret::OracleResult;
use crate::json;
use crate::sequences::{FSequence, SequenceKind};

pub const DEFAULT_SYSTEM_CAP: u64 = 1_000_000;

#[derive(Debug, Clone)]
pub struct PathDag {
    labels: Vec<String>,
    edges: Vec<(usize, usize, BigInt)>,
    /// `out[v]` lists `(target, edge index)`.
    out: Vec<Vec<(usize, usize)>>,
    topo: Vec<usize>,
    sources: Vec<usize>,
    sinks: Vec<usize>,
}

impl PathDag {
    /// Validates vertex ids, source/sink arity and acyclicity.
    pub fn new(
        vertex_count: usize,
        edges: Vec<(usize, usize, BigInt)>,
        sources: Vec<usize>,
        sinks: Vec<usize>,
    ) -> Result<Self> {
        let labels = (0..vertex_count).map(|v| v.to_string()).collect();
        Self::with_labels(labels, edges, sources, sinks)
    }

    pub fn with_labels(
        labels: Vec<String>,
        edges: Vec<(usize, usize, BigInt)>,
        sources: Vec<usize>,
        sinks: Vec<usize>,
    ) -> Result<Self> {
        let n = labels.len();
        if sources.is_empty() || sources.len() != sinks.len() {
            return Err(Error::InvalidDag(format!(
                "need r >= 1 sources and sinks of equal length, got {} and {}",
                sources.len(),
                sinks.len()
            )));
        }
        for &v in sources.iter().chain(&sinks) {
            if v >= n {
                return Err(Error::BadVertex(format!("vertex {v} not in 0..{n}")));
            }
        }
        let mut out = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for (i, (a, b, _)) in edges.iter().enumerate() {
            if *a >= n || *b >= n {
                return Err(Error::BadVertex(format!("edge {a}->{b} leaves 0..{n}")));
            }
            out[*a].push((*b, i));
            indegree[*b] += 1;
        }
        // Kahn's algorithm
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            topo.push(v);
            for &(w, _) in &out[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::InvalidDag("graph has a directed cycle".into()));
        }
        Ok(PathDag {
            labels,
            edges,
            out,
            topo,
            sources,
            sinks,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn sources(&self) -> &[usize] {
        &self.sources
    }

    pub fn sinks(&self) -> &[usize] {
        &self.sinks
    }

    pub fn edges(&self) -> &[(usize, usize, BigInt)] {
        &self.edges
    }

    pub fn with_endpoints(&self, sources: Vec<usize>, sinks: Vec<usize>) -> Result<Self> {
        Self::with_labels(self.labels.clone(), self.edges.clone(), sources, sinks)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count() {
            return Err(Error::BadVertex(format!("vertex {v} not in 0..{}", self.vertex_count())));
        }
        Ok(())
    }

    /// Path count from `a` to every vertex, with each edge contributing `weight(edge)`.
    fn path_sums(&self, a: usize, weight: impl Fn(&BigInt) -> BigInt) -> Vec<BigInt> {
        let mut acc = vec![BigInt::zero(); self.vertex_count()];
        acc[a] = BigInt::one();
        for &v in &self.topo {
            if acc[v].is_zero() {
                continue;
            }
            let here = acc[v].clone();
            for &(w, e) in &self.out[v] {
                acc[w] += &here * weight(&self.edges[e].2);
            }
        }
        acc
    }

    /// Number of distinct directed paths, ignoring weights.
    fn unweighted_paths(&self, a: usize, b: usize) -> BigInt {
        self.path_sums(a, |_| BigInt::one()).swap_remove(b)
    }

    /// Every path `a -> b` as its vertex list and weight.
    fn all_paths(&self, a: usize, b: usize) -> Vec<(Vec<usize>, BigInt)> {
        fn walk(
            d: &PathDag,
            v: usize,
            b: usize,
            path: &mut Vec<usize>,
            w: BigInt,
            out: &mut Vec<(Vec<usize>, BigInt)>,
        ) {
            if v == b {
                out.push((path.clone(), w));
                return;
            }
            for &(next, e) in &d.out[v] {
                path.push(next);
                walk(d, next, b, path, &w * &d.edges[e].2, out);
                path.pop();
            }
        }
        let mut out = Vec::new();
        walk(self, a, b, &mut vec![a], BigInt::one(), &mut out);
        out
    }
}

/// Vertices `0..=n`, edges `i -> i+1` and `i -> i+2`; there are `F_{m+1}`
/// paths from `0` to `m`.
pub fn build_fib_dag(n: usize, sources: &[usize], sinks: &[usize]) -> Result<PathDag> {
    if n == 0 {
        return Err(Error::BadVertex("Fibonacci step graph needs n >= 1".into()));
    }
    for &v in sources.iter().chain(sinks) {
        if v > n {
            return Err(Error::BadVertex(format!("vertex {v} not in 0..={n}")));
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, i + 1, BigInt::one()));
        if i + 2 <= n {
            edges.push((i, i + 2, BigInt::one()));
        }
    }
    PathDag::new(n + 1, edges, sources.to_vec(), sinks.to_vec())
}

pub fn grid_vertex(width: usize, point: (usize, usize)) -> usize {
    point.1 * (width + 1) + point.0
}

/// Lattice points `(x, y)` with `0 <= x <= width`, `0 <= y <= height`, unit
/// east and north steps.
pub fn build_grid_dag(
    width: usize,
    height: usize,
    sources: &[(usize, usize)],
    sinks: &[(usize, usize)],
) -> Result<PathDag> {
    if width == 0 || height == 0 {
        return Err(Error::BadVertex("grid needs width, height >= 1".into()));
    }
    for &(x, y) in sources.iter().chain(sinks) {
        if x > width || y > height {
            return Err(Error::BadVertex(format!("point ({x},{y}) outside {width}x{height} grid")));
        }
    }
    let mut labels = Vec::with_capacity((width + 1) * (height + 1));
    let mut edges = Vec::new();
    for y in 0..=height {
        for x in 0..=width {
            labels.push(format!("({x},{y})"));
            let v = grid_vertex(width, (x, y));
            if x < width {
                edges.push((v, v + 1, BigInt::one()));
            }
            if y < height {
                edges.push((v, grid_vertex(width, (x, y + 1)), BigInt::one()));
            }
        }
    }
    let map = |pts: &[(usize, usize)]| pts.iter().map(|&p| grid_vertex(width, p)).collect();
    PathDag::with_labels(labels, edges, map(sources), map(sinks))
}

/// Parses `0,1,5`.
pub fn parse_vertex_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::BadVertex(format!("`{t}` in `{s}`"))))
        .collect()
}

/// Parses `x,y;x,y`.
pub fn parse_grid_points(s: &str) -> Result<Vec<(usize, usize)>> {
    s.split(';')
        .map(|p| match parse_vertex_list(p)?.as_slice() {
            [x, y] => Ok((*x, *y)),
            _ => Err(Error::BadVertex(format!("point `{p}` must be x,y"))),
        })
        .collect()
}

/// Weighted number of paths `a -> b`; `1` when `a == b`.
pub fn count_paths(d: &PathDag, a: usize, b: usize) -> Result<BigInt> {
    d.check_vertex(a)?;
    d.check_vertex(b)?;
    Ok(d.path_sums(a, Clone::clone).swap_remove(b))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PathMatrix {
    #[serde(serialize_with = "json::dec_rows")]
    pub entries: Vec<Vec<BigInt>>,
}

impl PathMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }
}

/// Entry `(i, j)` counts paths from source `i` to sink `j`.
pub fn path_matrix(d: &PathDag) -> PathMatrix {
    let entries = d
        .sources
        .iter()
        .map(|&a| {
            let sums = d.path_sums(a, Clone::clone);
            d.sinks.iter().map(|&b| sums[b].clone()).collect()
        })
        .collect();
    PathMatrix { entries }
}

/// Determinant by Bareiss fraction-free elimination; every division is exact.
pub fn lgv_determinant(m: &PathMatrix) -> BigInt {
    let n = m.size();
    let mut a = m.entries.clone();
    assert!(a.iter().all(|row| row.len() == n), "determinant needs a square matrix");
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Weighted count of vertex-disjoint systems with path `i` running from
/// source `i` to sink `matching[i]`.
pub fn enumerate_disjoint_for_matching(d: &PathDag, matching: &[usize], cap: u64) -> Result<OracleResult> {
    let r = d.sources.len();
    assert_eq!(matching.len(), r);
    let mut predicted = BigInt::one();
    for (i, &j) in matching.iter().enumerate() {
        predicted *= d.unweighted_paths(d.sources[i], d.sinks[j]);
    }
    if predicted > BigInt::from(cap) {
        return Err(Error::cap("disjoint path systems", predicted, cap));
    }
    let paths: Vec<_> = matching
        .iter()
        .enumerate()
        .map(|(i, &j)| d.all_paths(d.sources[i], d.sinks[j]))
        .collect();

    fn walk(
        paths: &[Vec<(Vec<usize>, BigInt)>],
        i: usize,
        used: &mut [bool],
        weight: &BigInt,
        visited: &mut u64,
        total: &mut BigInt,
    ) {
        if i == paths.len() {
            *total += weight;
            return;
        }
        for (path, w) in &paths[i] {
            *visited += 1;
            if path.iter().any(|&v| used[v]) {
                continue;
            }
            path.iter().for_each(|&v| used[v] = true);
            walk(paths, i + 1, used, &(weight * w), visited, total);
            path.iter().for_each(|&v| used[v] = false);
        }
    }
    let mut used = vec![false; d.vertex_count()];
    let mut visited = 0;
    let mut total = BigInt::zero();
    walk(&paths, 0, &mut used, &BigInt::one(), &mut visited, &mut total);
    Ok(OracleResult::exact(total, visited))
}

/// Disjoint systems for the identity matching `a_i -> b_i`.
pub fn enumerate_disjoint_systems(d: &PathDag, cap: u64) -> Result<OracleResult> {
    let identity: Vec<usize> = (0..d.sources.len()).collect();
    enumerate_disjoint_for_matching(d, &identity, cap)
}

/// One vertex-disjoint system for the identity matching, if any exists.
pub fn first_disjoint_system(d: &PathDag, cap: u64) -> Result<Option<Vec<Vec<usize>>>> {
    let identity: Vec<usize> = (0..d.sources.len()).collect();
    let mut predicted = BigInt::one();
    for (i, &j) in identity.iter().enumerate() {
        predicted *= d.unweighted_paths(d.sources[i], d.sinks[j]);
    }
    if predicted > BigInt::from(cap) {
        return Err(Error::cap("disjoint path systems", predicted, cap));
    }
    let paths: Vec<Vec<Vec<usize>>> = identity
        .iter()
        .map(|&i| d.all_paths(d.sources[i], d.sinks[i]).into_iter().map(|(p, _)| p).collect())
        .collect();
    fn walk(paths: &[Vec<Vec<usize>>], i: usize, used: &mut [bool], chosen: &mut Vec<Vec<usize>>) -> bool {
        if i == paths.len() {
            return true;
        }
        for path in &paths[i] {
            if path.iter().any(|&v| used[v]) {
                continue;
            }
            path.iter().for_each(|&v| used[v] = true);
            chosen.push(path.clone());
            if walk(paths, i + 1, used, chosen) {
                return true;
            }
            chosen.pop();
            path.iter().for_each(|&v| used[v] = false);
        }
        false
    }
    let mut chosen = Vec::new();
    let found = walk(&paths, 0, &mut vec![false; d.vertex_count()], &mut chosen);
    Ok(found.then_some(chosen))
}

/// All permutations of `0..r` with their signs, in lexicographic order.
pub(crate) fn permutations(r: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..r).collect();
    loop {
        let inversions = (0..r)
            .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        out.push((p.clone(), inversions % 2 == 1));
        // next lexicographic permutation
        let Some(i) = (1..r).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..r).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LgvReport {
    pub sources: Vec<String>,
    pub sinks: Vec<String>,
    pub matrix: PathMatrix,
    #[serde(serialize_with = "json::dec")]
    pub determinant: BigInt,
    #[serde(serialize_with = "json::dec")]
    pub brute_force: BigInt,
    /// `sum_σ sign(σ) N_σ` over all matchings; always equals the determinant.
    #[serde(serialize_with = "json::dec")]
    pub signed_sum: BigInt,
    pub nonpermutable: bool,
    /// Determinant equals the identity-matching count. Only meaningful when
    /// `nonpermutable` holds.
    pub equal: bool,
}

impl LgvReport {
    /// The lemma's claim for this configuration holds.
    pub fn verified(&self) -> bool {
        self.signed_sum == self.determinant && (!self.nonpermutable || self.equal)
    }

    pub fn to_json(&self) -> String {
        json::to_canonical_string(self)
    }
}

/// Compares the path-matrix determinant with brute-force enumeration of
/// disjoint systems over every matching of sources to sinks.
pub fn lgv_verify(d: &PathDag, cap: u64) -> Result<LgvReport> {
    let matrix = path_matrix(d);
    let determinant = lgv_determinant(&matrix);
    let mut brute_force = BigInt::zero();
    let mut signed_sum = BigInt::zero();
    let mut nonpermutable = true;
    for (sigma, odd) in permutations(d.sources.len()) {
        let identity = sigma.iter().enumerate().all(|(i, &j)| i == j);
        let count = enumerate_disjoint_for_matching(d, &sigma, cap)?.value;
        if identity {
            brute_force = count.clone();
        } else if !count.is_zero() {
            nonpermutable = false;
        }
        if odd {
            signed_sum -= count;
        } else {
            signed_sum += count;
        }
    }
    let name = |vs: &[usize]| vs.iter().map(|&v| d.label(v).to_string()).collect();
    Ok(LgvReport {
        sources: name(&d.sources),
        sinks: name(&d.sinks),
        equal: determinant == brute_force,
        matrix,
        determinant,
        brute_force,
        signed_sum,
        nonpermutable,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExploreRow {
    pub k: usize,
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
    #[serde(serialize_with = "json::dec")]
    pub determinant: BigInt,
    /// `(m over k)_F` with `m` the largest sink, printed alongside.
    #[serde(serialize_with = "json::dec")]
    pub fibonomial: BigInt,
}

/// Determinants of Fibonacci step-graph path matrices for sources
/// `0..k` and consecutive sinks `m-k+1..=m`, next to Fibonomials. No
/// relation between the columns is asserted.
pub fn lgv_explore(max_sink: usize) -> Result<Vec<ExploreRow>> {
    let fib = FSequence::with_bound(SequenceKind::Fibonacci, max_sink.max(8));
    let mut rows = Vec::new();
    for k in [2usize, 3] {
        for m in 2 * k - 1..=max_sink {
            let sources: Vec<usize> = (0..k).collect();
            let sinks: Vec<usize> = (m + 1 - k..=m).collect();
            let d = build_fib_dag(m, &sources, &sinks)?;
            rows.push(ExploreRow {
                k,
                determinant: lgv_determinant(&path_matrix(&d)),
                fibonomial: fnomial_product(&fib, m, k as i64)?.into(),
                sources,
                sinks,
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn matrix(rows: &[&[i64]]) -> PathMatrix {
        PathMatrix {
            entries: rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect(),
        }
    }

    #[test]
    fn fib_paths() {
        let d = build_fib_dag(7, &[0], &[7]).unwrap();
        assert_eq!(count_paths(&d, 0, 5).unwrap(), int(8));
        assert_eq!(count_paths(&d, 0, 1).unwrap(), int(1));
        assert_eq!(count_paths(&d, 0, 2).unwrap(), int(2));
        assert_eq!(count_paths(&d, 0, 7).unwrap(), int(21));
        assert_eq!(count_paths(&d, 3, 3).unwrap(), int(1));
        assert_eq!(count_paths(&d, 5, 2).unwrap(), int(0));
        assert!(matches!(count_paths(&d, 0, 8), Err(Error::BadVertex(_))));
        assert!(matches!(build_fib_dag(5, &[0], &[6]), Err(Error::BadVertex(_))));
    }

    #[test]
    fn grid_paths() {
        let g3 = build_grid_dag(3, 3, &[(0, 0)], &[(2, 2)]).unwrap();
        assert_eq!(count_paths(&g3, 0, grid_vertex(3, (2, 2))).unwrap(), int(6));
        let g1 = build_grid_dag(1, 1, &[(0, 0)], &[(1, 1)]).unwrap();
        assert_eq!(count_paths(&g1, 0, 3).unwrap(), int(2));
        let g4 = build_grid_dag(4, 4, &[(0, 1)], &[(2, 3)]).unwrap();
        assert_eq!(path_matrix(&g4), matrix(&[&[6]]));
        assert_eq!(
            count_paths(&g4, grid_vertex(4, (1, 0)), grid_vertex(4, (3, 2))).unwrap(),
            int(6)
        );
        assert!(build_grid_dag(2, 2, &[(0, 0)], &[(3, 0)]).is_err());
    }

    #[test]
    fn path_matrices() {
        let d = build_fib_dag(5, &[0, 1], &[4, 5]).unwrap();
        assert_eq!(path_matrix(&d), matrix(&[&[5, 8], &[3, 5]]));
        let g = build_grid_dag(4, 4, &[(0, 1), (1, 0)], &[(2, 3), (3, 2)]).unwrap();
        assert_eq!(path_matrix(&g), matrix(&[&[6, 4], &[4, 6]]));
    }

    #[test]
    fn determinants() {
        assert_eq!(lgv_determinant(&matrix(&[&[5, 8], &[3, 5]])), int(1));
        assert_eq!(lgv_determinant(&matrix(&[&[6, 4], &[4, 6]])), int(20));
        assert_eq!(lgv_determinant(&matrix(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])), int(1));
        // needs a row swap
        assert_eq!(lgv_determinant(&matrix(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]])), int(-2));
        assert_eq!(lgv_determinant(&matrix(&[&[1, 2], &[2, 4]])), int(0));
        assert_eq!(lgv_determinant(&matrix(&[&[7]])), int(7));
    }

    #[test]
    fn disjoint_systems() {
        let d = build_fib_dag(5, &[0, 1], &[4, 5]).unwrap();
        assert_eq!(enumerate_disjoint_systems(&d, DEFAULT_SYSTEM_CAP).unwrap().value, int(1));
        assert_eq!(
            first_disjoint_system(&d, DEFAULT_SYSTEM_CAP).unwrap(),
            Some(vec![vec![0, 2, 4], vec![1, 3, 5]])
        );
        let g = build_grid_dag(4, 4, &[(0, 1), (1, 0)], &[(2, 3), (3, 2)]).unwrap();
        assert_eq!(enumerate_disjoint_systems(&g, DEFAULT_SYSTEM_CAP).unwrap().value, int(20));
        let single = build_fib_dag(7, &[0], &[7]).unwrap();
        assert_eq!(enumerate_disjoint_systems(&single, DEFAULT_SYSTEM_CAP).unwrap().value, int(21));
        assert!(matches!(enumerate_disjoint_systems(&g, 35), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn verify_examples() {
        for (sinks, expected) in [([4, 5], 1), ([6, 7], 1)] {
            let d = build_fib_dag(sinks[1], &[0, 1], &sinks).unwrap();
            let r = lgv_verify(&d, DEFAULT_SYSTEM_CAP).unwrap();
            assert!(r.nonpermutable && r.equal && r.verified(), "{r:?}");
            assert_eq!(r.determinant, int(expected));
        }
        let g = build_grid_dag(4, 4, &[(0, 1), (1, 0)], &[(2, 3), (3, 2)]).unwrap();
        let r = lgv_verify(&g, DEFAULT_SYSTEM_CAP).unwrap();
        assert_eq!((r.determinant.clone(), r.brute_force.clone()), (int(20), int(20)));
        assert_eq!(r.sources, vec!["(0,1)", "(1,0)"]);
    }

    #[test]
    fn permutable_configuration_is_flagged() {
        // sources listed in crossing order: only the swapped matching is disjoint
        let g = build_grid_dag(4, 4, &[(0, 1), (1, 0)], &[(3, 2), (2, 3)]).unwrap();
        let r = lgv_verify(&g, DEFAULT_SYSTEM_CAP).unwrap();
        assert!(!r.nonpermutable);
        assert_eq!(r.brute_force, int(0));
        assert_eq!(r.determinant, int(-20));
        assert_eq!(r.signed_sum, r.determinant);
        assert!(r.verified());
    }

    #[test]
    fn weighted_edges() {
        // two parallel routes 0 -> 2 of weights 2*3 and 5
        let d = PathDag::new(
            3,
            vec![(0, 1, int(2)), (1, 2, int(3)), (0, 2, int(5))],
            vec![0],
            vec![2],
        )
        .unwrap();
        assert_eq!(count_paths(&d, 0, 2).unwrap(), int(11));
        assert_eq!(enumerate_disjoint_systems(&d, 10).unwrap().value, int(11));
    }

    #[test]
    fn invalid_graphs() {
        assert!(matches!(
            PathDag::new(2, vec![(0, 1, int(1)), (1, 0, int(1))], vec![0], vec![1]),
            Err(Error::InvalidDag(_))
        ));
        assert!(matches!(PathDag::new(2, vec![], vec![0, 1], vec![1]), Err(Error::InvalidDag(_))));
        assert!(matches!(PathDag::new(2, vec![], vec![], vec![]), Err(Error::InvalidDag(_))));
        assert!(matches!(PathDag::new(2, vec![(0, 2, int(1))], vec![0], vec![1]), Err(Error::BadVertex(_))));
    }

    #[test]
    fn parses_lists_and_points() {
        assert_eq!(parse_vertex_list("0, 1").unwrap(), vec![0, 1]);
        assert_eq!(parse_grid_points("0,1;1,0").unwrap(), vec![(0, 1), (1, 0)]);
        assert!(parse_grid_points("0,1,2").is_err());
        assert!(parse_vertex_list("a").is_err());
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().filter(|(_, odd)| *odd).count(), 3);
        assert_eq!(perms[0], (vec![0, 1, 2], false));
        assert_eq!(permutations(1), vec![(vec![0], false)]);
    }

    #[test]
    fn explore_rows() {
        let rows = lgv_explore(8).unwrap();
        let first = &rows[0];
        assert_eq!((first.k, first.sources.clone(), first.sinks.clone()), (2, vec![0, 1], vec![2, 3]));
        // consecutive-sink 2x2 minors are Cassini determinants
        for r in rows.iter().filter(|r| r.k == 2) {
            assert_eq!(r.determinant.magnitude(), &num_bigint::BigUint::from(1u32));
        }
    }
}
