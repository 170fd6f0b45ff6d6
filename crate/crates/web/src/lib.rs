//! wasm-bindgen bindings for the static demo page in `www/`.
//!
//! Each exported function returns a JSON string; the page renders it. The
//! plain `*_view` functions carry the logic so they can be tested natively.

use fibonomial::cobweb::{self, CobwebPoset, Vertex};
use fibonomial::lgv;
use fibonomial::{Error, FSequence, Method, Result, SequenceKind};
use serde::Serialize;
use wasm_bindgen::prelude::*;

pub const MAX_ROWS: usize = 40;
pub const MAX_VERTICES: usize = 400;
pub const MAX_GRID: usize = 8;
pub const SYSTEM_CAP: u64 = 200_000;

fn to_js(e: Error) -> JsError {
    JsError::new(&e.to_string())
}

fn limit(what: &'static str, value: usize, max: usize) -> Result<()> {
    if value > max {
        return Err(Error::CapExceeded {
            what,
            requested: value.to_string(),
            cap: max.to_string(),
        });
    }
    Ok(())
}

#[derive(Serialize)]
struct TriangleView {
    sequence: String,
    method: String,
    rows: Vec<Vec<String>>,
    /// `rows` recomputed by the other method agree.
    cross_checked: bool,
}

pub fn triangle_view(seq: &str, rows: usize, method: &str) -> Result<String> {
    limit("demo rows", rows, MAX_ROWS)?;
    let kind: SequenceKind = seq.parse()?;
    let method: Method = method.parse()?;
    let seq = FSequence::new(kind);
    let t = fibonomial::triangle(&seq, rows, method)?;
    let cross_checked = if kind.supports_recurrence() {
        let other = match method {
            Method::Product => Method::Recurrence,
            Method::Recurrence => Method::Product,
        };
        fibonomial::triangle(&seq, rows, other)?.rows == t.rows
    } else {
        true
    };
    let view = TriangleView {
        sequence: kind.to_string(),
        method: method.to_string(),
        rows: t.rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
        cross_checked,
    };
    Ok(fibonomial::to_canonical_string(&view))
}

#[derive(Serialize)]
struct MobiusEntry {
    from_level: usize,
    to_level: usize,
    mu: String,
}

#[derive(Serialize)]
struct CobwebView {
    sequence: String,
    level_sizes: Vec<usize>,
    covers: usize,
    full_chains: String,
    is_binomial: bool,
    by_length: Vec<(usize, Vec<String>)>,
    counterexample: Option<[(usize, usize, String); 2]>,
    mobius: Vec<MobiusEntry>,
    mobius_convolution_ok: bool,
}

pub fn cobweb_view(seq: &str, levels: usize) -> Result<String> {
    let kind: SequenceKind = seq.parse()?;
    let p = CobwebPoset::build(&FSequence::new(kind), levels, MAX_VERTICES)?;
    let check = cobweb::binomial_check(&p, cobweb::DEFAULT_SEED, cobweb::DEFAULT_DFS_CAP);
    let mu = cobweb::mobius_table(&p)?;
    let first = |level| Vertex { level, index: 1 };
    let mut mobius = Vec::new();
    for s in 1..=levels {
        for t in s..=levels {
            if let Some(v) = mu.get(first(s), first(t)) {
                mobius.push(MobiusEntry {
                    from_level: s,
                    to_level: t,
                    mu: v.to_string(),
                });
            }
        }
    }
    let view = CobwebView {
        sequence: kind.to_string(),
        level_sizes: p.level_sizes().to_vec(),
        covers: p.cover_count(),
        full_chains: cobweb::count_max_chains_layer(&p, 0, levels)?.to_string(),
        is_binomial: check.is_binomial,
        by_length: check
            .by_length
            .iter()
            .map(|(len, c)| (*len, c.iter().map(ToString::to_string).collect()))
            .collect(),
        counterexample: check.counterexample.map(|(a, b)| {
            [
                (a.bottom.level, a.top.level, a.chains.to_string()),
                (b.bottom.level, b.top.level, b.chains.to_string()),
            ]
        }),
        mobius,
        mobius_convolution_ok: mu.convolution_failure().is_none(),
    };
    Ok(fibonomial::to_canonical_string(&view))
}

#[derive(Serialize)]
struct LgvView {
    matrix: Vec<Vec<String>>,
    determinant: String,
    brute_force: String,
    nonpermutable: bool,
    equal: bool,
    /// One disjoint system for the identity matching, as lattice points.
    example: Option<Vec<Vec<(usize, usize)>>>,
}

pub fn lgv_grid_view(width: usize, height: usize, sources: &str, sinks: &str) -> Result<String> {
    limit("demo grid width", width, MAX_GRID)?;
    limit("demo grid height", height, MAX_GRID)?;
    let d = lgv::build_grid_dag(
        width,
        height,
        &lgv::parse_grid_points(sources)?,
        &lgv::parse_grid_points(sinks)?,
    )?;
    let r = lgv::lgv_verify(&d, SYSTEM_CAP)?;
    let point = |v: usize| (v % (width + 1), v / (width + 1));
    let example = lgv::first_disjoint_system(&d, SYSTEM_CAP)?
        .map(|paths| paths.iter().map(|p| p.iter().map(|&v| point(v)).collect()).collect());
    let view = LgvView {
        matrix: r
            .matrix
            .entries
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect(),
        determinant: r.determinant.to_string(),
        brute_force: r.brute_force.to_string(),
        nonpermutable: r.nonpermutable,
        equal: r.equal,
        example,
    };
    Ok(fibonomial::to_canonical_string(&view))
}

#[wasm_bindgen]
pub fn fnomial_triangle(seq: &str, rows: usize, method: &str) -> Result<String, JsError> {
    triangle_view(seq, rows, method).map_err(to_js)
}

#[wasm_bindgen]
pub fn cobweb_poset(seq: &str, levels: usize) -> Result<String, JsError> {
    cobweb_view(seq, levels).map_err(to_js)
}

#[wasm_bindgen]
pub fn lgv_grid(width: usize, height: usize, sources: &str, sinks: &str) -> Result<String, JsError> {
    lgv_grid_view(width, height, sources, sinks).map_err(to_js)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn triangle_view_row_seven() {
        let v = parse(triangle_view("fibonacci", 7, "recurrence").unwrap());
        assert_eq!(v["rows"][7][3], "260");
        assert_eq!(v["cross_checked"], true);
        assert!(triangle_view("fibonacci", MAX_ROWS + 1, "product").is_err());
        assert!(triangle_view("one", 4, "recurrence").is_err());
        assert_eq!(parse(triangle_view("one", 4, "product").unwrap())["cross_checked"], true);
    }

    #[test]
    fn cobweb_view_fibonacci() {
        let v = parse(cobweb_view("fibonacci", 5).unwrap());
        assert_eq!(v["level_sizes"], serde_json::json!([1, 1, 2, 3, 5]));
        assert_eq!(v["full_chains"], "30");
        assert_eq!(v["is_binomial"], false);
        assert_eq!(v["mobius_convolution_ok"], true);
        let mu24 = v["mobius"]
            .as_array()
            .unwrap()
            .iter()
            .find(|e| e["from_level"] == 2 && e["to_level"] == 4)
            .unwrap();
        assert_eq!(mu24["mu"], "1");
        assert!(cobweb_view("gaussian:3", 8).is_err());
    }

    #[test]
    fn lgv_view_grid() {
        let v = parse(lgv_grid_view(4, 4, "0,1;1,0", "2,3;3,2").unwrap());
        assert_eq!(v["determinant"], "20");
        assert_eq!(v["brute_force"], "20");
        let example = v["example"].as_array().unwrap();
        assert_eq!(example.len(), 2);
        assert_eq!(example[0][0], serde_json::json!([0, 1]));
        assert!(lgv_grid_view(9, 4, "0,0", "1,1").is_err());
    }
}
