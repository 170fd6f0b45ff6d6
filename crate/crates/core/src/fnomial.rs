//! F-nomial coefficients `(n over k)_F = F_n F_{n-1} ... F_{n-k+1} / (F_k ... F_1)`,
//! computed by the explicit product and, independently, by a two-term
//! triangle recurrence.

use std::borrow::Cow;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::json;
use crate::sequences::{FSequence, SequenceKind};

/// Largest `n_max` accepted by [`triangle`].
pub const DEFAULT_ROW_CAP: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Product,
    Recurrence,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Product => "product",
            Method::Recurrence => "recurrence",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "product" => Ok(Method::Product),
            "recurrence" => Ok(Method::Recurrence),
            other => Err(Error::BadRange(format!("unknown method `{other}`"))),
        }
    }
}

/// Exact F-nomial by the product formula. Out-of-range `k` gives 0.
///
/// Numerator and denominator are formed in full and divided once; a nonzero
/// remainder is reported as [`Error::NonIntegralFnomial`].
pub fn fnomial_product(seq: &FSequence, n: usize, k: i64) -> Result<BigUint> {
    if k < 0 || k as u64 > n as u64 {
        return Ok(BigUint::zero());
    }
    let k = k as usize;
    let numerator = seq.falling_product(n - k, n);
    let denominator = seq.factorial(k);
    let (q, r) = numerator.div_rem(&denominator);
    if !r.is_zero() {
        return Err(Error::NonIntegralFnomial { n, k });
    }
    Ok(q)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FnomialTriangle {
    #[serde(rename = "sequence", serialize_with = "json::dec")]
    pub seq_kind: SequenceKind,
    #[serde(serialize_with = "json::dec")]
    pub method: Method,
    #[serde(serialize_with = "json::dec_rows")]
    pub rows: Vec<Vec<BigUint>>,
}

impl FnomialTriangle {
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&BigUint> {
        self.rows.get(n).and_then(|row| row.get(k))
    }

    /// One row per line, no header.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("# {} triangle ({})\n", self.seq_kind, self.method);
        for (n, row) in self.rows.iter().enumerate() {
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&format!("{n:>4} | {}\n", line.join(" ")));
        }
        out
    }

    pub fn to_json(&self) -> String {
        json::to_canonical_string(self)
    }
}

/// A sequence whose memo table reaches `n`, reusing `seq` when it already does.
fn covering(seq: &FSequence, n: usize) -> Cow<'_, FSequence> {
    if seq.memo_bound() >= n {
        Cow::Borrowed(seq)
    } else {
        Cow::Owned(FSequence::with_bound(seq.kind(), n))
    }
}

pub fn triangle(seq: &FSequence, n_max: usize, method: Method) -> Result<FnomialTriangle> {
    triangle_with_cap(seq, n_max, method, DEFAULT_ROW_CAP)
}

pub fn triangle_with_cap(
    seq: &FSequence,
    n_max: usize,
    method: Method,
    row_cap: usize,
) -> Result<FnomialTriangle> {
    if n_max > row_cap {
        return Err(Error::cap("triangle rows", n_max, row_cap));
    }
    if method == Method::Recurrence && !seq.kind().supports_recurrence() {
        return Err(Error::UnsupportedRecurrence(seq.kind().to_string()));
    }
    let seq = covering(seq, n_max);
    let rows = match method {
        Method::Product => (0..=n_max)
            .map(|n| {
                (0..=n)
                    .map(|k| fnomial_product(&seq, n, k as i64))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?,
        Method::Recurrence => {
            let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n_max + 1);
            rows.push(vec![BigUint::one()]);
            for n in 1..=n_max {
                let prev = &rows[n - 1];
                let mut row = Vec::with_capacity(n + 1);
                row.push(BigUint::one());
                for k in 1..n {
                    let (a, b) = seq.recurrence_coeffs(n, k)?;
                    row.push(a * &prev[k] + b * &prev[k - 1]);
                }
                row.push(BigUint::one());
                rows.push(row);
            }
            rows
        }
    };
    Ok(FnomialTriangle {
        seq_kind: seq.kind(),
        method,
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleReport {
    #[serde(serialize_with = "json::dec")]
    pub sequence: SequenceKind,
    pub n_max: usize,
    pub agree: bool,
    pub first_mismatch: Option<(usize, usize)>,
    pub symmetry_ok: bool,
    pub integrality_ok: bool,
}

/// Compares the product and recurrence triangles entrywise.
pub fn triangle_report(seq: &FSequence, n_max: usize) -> Result<TriangleReport> {
    let recurrence = triangle(seq, n_max, Method::Recurrence)?;
    let seq = covering(seq, n_max);

    let mut integrality_ok = true;
    let mut product: Vec<Vec<Option<BigUint>>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            match fnomial_product(&seq, n, k as i64) {
                Ok(v) => row.push(Some(v)),
                Err(Error::NonIntegralFnomial { .. }) => {
                    integrality_ok = false;
                    row.push(None);
                }
                Err(e) => return Err(e),
            }
        }
        product.push(row);
    }

    let mut first_mismatch = None;
    'outer: for (n, row) in product.iter().enumerate() {
        for (k, entry) in row.iter().enumerate() {
            if entry.as_ref() != recurrence.get(n, k) {
                first_mismatch = Some((n, k));
                break 'outer;
            }
        }
    }

    let symmetric = |rows: &[Vec<BigUint>]| {
        rows.iter()
            .all(|row| row.iter().eq(row.iter().rev()) && row[0].is_one() && row[row.len() - 1].is_one())
    };
    let symmetry_ok = symmetric(&recurrence.rows)
        && product
            .iter()
            .all(|row| row.iter().eq(row.iter().rev()));

    Ok(TriangleReport {
        sequence: seq.kind(),
        n_max,
        agree: first_mismatch.is_none(),
        first_mismatch,
        symmetry_ok,
        integrality_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(kind: SequenceKind) -> FSequence {
        FSequence::new(kind)
    }

    fn row(values: &[u64]) -> Vec<BigUint> {
        values.iter().map(|&v| BigUint::from(v)).collect()
    }

    #[test]
    fn product_examples() {
        let fib = seq(SequenceKind::Fibonacci);
        assert_eq!(fnomial_product(&fib, 6, 3).unwrap(), BigUint::from(60u32));
        for n in 0..30 {
            assert!(fnomial_product(&fib, n, 0).unwrap().is_one());
        }
        let g2 = seq(SequenceKind::Gaussian(2));
        assert_eq!(fnomial_product(&g2, 4, 2).unwrap(), BigUint::from(35u32));
        let nat = seq(SequenceKind::Natural);
        assert_eq!(fnomial_product(&nat, 5, 2).unwrap(), BigUint::from(10u32));
    }

    #[test]
    fn out_of_range_is_zero() {
        let fib = seq(SequenceKind::Fibonacci);
        assert!(fnomial_product(&fib, 5, -1).unwrap().is_zero());
        assert!(fnomial_product(&fib, 5, 6).unwrap().is_zero());
        assert!(fnomial_product(&fib, 0, 1).unwrap().is_zero());
    }

    #[test]
    fn recurrence_row_seven() {
        let t = triangle(&seq(SequenceKind::Fibonacci), 7, Method::Recurrence).unwrap();
        assert_eq!(t.rows[6], row(&[1, 8, 40, 60, 40, 8, 1]));
        assert_eq!(t.rows[7], row(&[1, 13, 104, 260, 260, 104, 13, 1]));
    }

    #[test]
    fn base_row_and_gaussian_row_two() {
        let t = triangle(&seq(SequenceKind::Fibonacci), 0, Method::Product).unwrap();
        assert_eq!(t.rows, vec![row(&[1])]);
        let g = triangle(&seq(SequenceKind::Gaussian(2)), 2, Method::Recurrence).unwrap();
        assert_eq!(g.rows[2], row(&[1, 3, 1]));
    }

    #[test]
    fn constant_one_recurrence_unsupported() {
        let one = seq(SequenceKind::ConstantOne);
        assert!(matches!(
            triangle(&one, 5, Method::Recurrence),
            Err(Error::UnsupportedRecurrence(_))
        ));
        let t = triangle(&one, 24, Method::Product).unwrap();
        assert!(t.rows.iter().flatten().all(One::is_one));
    }

    #[test]
    fn cap_enforced() {
        let fib = seq(SequenceKind::Fibonacci);
        assert!(matches!(
            triangle(&fib, 513, Method::Product),
            Err(Error::CapExceeded { .. })
        ));
        assert!(triangle_with_cap(&fib, 10, Method::Product, 9).is_err());
    }

    #[test]
    fn reports_agree() {
        for (kind, n) in [
            (SequenceKind::Fibonacci, 20),
            (SequenceKind::Natural, 12),
            (SequenceKind::Gaussian(3), 10),
        ] {
            let r = triangle_report(&seq(kind), n).unwrap();
            assert!(r.agree && r.symmetry_ok && r.integrality_ok, "{r:?}");
            assert_eq!(r.first_mismatch, None);
        }
    }

    #[test]
    fn rows_beyond_memo_bound() {
        let small = FSequence::with_bound(SequenceKind::Fibonacci, 8);
        let a = triangle(&small, 30, Method::Product).unwrap();
        let b = triangle(&small, 30, Method::Recurrence).unwrap();
        assert_eq!(a.rows, b.rows);
    }

    #[test]
    fn csv_and_json_shape() {
        let t = triangle(&seq(SequenceKind::Fibonacci), 7, Method::Recurrence).unwrap();
        let csv = t.to_csv();
        assert_eq!(csv.lines().nth(7), Some("1,13,104,260,260,104,13,1"));
        let v: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(v["sequence"], "fibonacci");
        assert_eq!(v["method"], "recurrence");
        assert_eq!(v["rows"][7][2], "104");
    }
}
