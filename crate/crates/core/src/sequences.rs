//! Grading sequences `F_0 = 0, F_1, F_2, ...` that parameterize F-factorials,
//! F-nomial coefficients and cobweb level sizes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Number of terms filled eagerly by [`FSequence::new`].
pub const DEFAULT_MEMO_BOUND: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    Fibonacci,
    Natural,
    /// `F_n = 1 + q + ... + q^(n-1)`, `q >= 2`.
    Gaussian(u32),
    /// `F_n = 1` for `n >= 1`; degenerate fixture, every F-nomial is 1.
    ConstantOne,
}

impl SequenceKind {
    pub fn gaussian(q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidSequence(format!("gaussian:{q}")));
        }
        Ok(SequenceKind::Gaussian(q))
    }

    pub fn supports_recurrence(self) -> bool {
        !matches!(self, SequenceKind::ConstantOne)
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceKind::Fibonacci => f.write_str("fibonacci"),
            SequenceKind::Natural => f.write_str("natural"),
            SequenceKind::Gaussian(q) => write!(f, "gaussian:{q}"),
            SequenceKind::ConstantOne => f.write_str("one"),
        }
    }
}

impl FromStr for SequenceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "fibonacci" | "fib" => Ok(SequenceKind::Fibonacci),
            "natural" => Ok(SequenceKind::Natural),
            "one" => Ok(SequenceKind::ConstantOne),
            other => {
                let q = other
                    .strip_prefix("gaussian:")
                    .and_then(|q| q.parse::<u32>().ok())
                    .ok_or_else(|| Error::InvalidSequence(other.to_string()))?;
                SequenceKind::gaussian(q)
            }
        }
    }
}

/// A grading sequence with its first terms evaluated eagerly.
///
/// Terms below the memo bound are read from the table; terms above it are
/// recomputed on demand without touching the table, so a constructed
/// sequence is never mutated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FSequence {
    kind: SequenceKind,
    terms: Vec<BigUint>,
}

impl FSequence {
    pub fn new(kind: SequenceKind) -> Self {
        Self::with_bound(kind, DEFAULT_MEMO_BOUND)
    }

    /// Fills terms `F_0..=F_bound` eagerly.
    pub fn with_bound(kind: SequenceKind, bound: usize) -> Self {
        FSequence {
            kind,
            terms: generate(kind, bound + 1),
        }
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn memo_bound(&self) -> usize {
        self.terms.len() - 1
    }

    /// `F_n`.
    pub fn term(&self, n: usize) -> BigUint {
        match self.terms.get(n) {
            Some(t) => t.clone(),
            None => generate(self.kind, n + 1).pop().unwrap_or_default(),
        }
    }

    /// Borrowing access for indices inside the memo bound.
    pub fn term_ref(&self, n: usize) -> Option<&BigUint> {
        self.terms.get(n)
    }

    /// `n_F! = F_1 F_2 ... F_n`; `1` for `n = 0`.
    pub fn factorial(&self, n: usize) -> BigUint {
        self.falling_product(0, n)
    }

    /// `F_{k+1} F_{k+2} ... F_n`; `1` when `k >= n`.
    pub fn falling_product(&self, k: usize, n: usize) -> BigUint {
        let mut acc = BigUint::one();
        for s in k + 1..=n {
            match self.term_ref(s) {
                Some(t) => acc *= t,
                None => acc *= self.term(s),
            }
        }
        acc
    }

    /// Coefficients `(a, b)` of `B(n,k) = a B(n-1,k) + b B(n-1,k-1)`, for
    /// `1 <= k <= n-1`.
    pub fn recurrence_coeffs(&self, n: usize, k: usize) -> Result<(BigUint, BigUint)> {
        if k == 0 || k >= n {
            return Err(Error::BadRange(format!(
                "recurrence coefficients need 1 <= k < n, got n={n}, k={k}"
            )));
        }
        match self.kind {
            SequenceKind::Fibonacci => Ok((self.term(k + 1), self.term(n - k - 1))),
            SequenceKind::Natural => Ok((BigUint::one(), BigUint::one())),
            SequenceKind::Gaussian(q) => Ok((BigUint::from(q).pow(k as u32), BigUint::one())),
            SequenceKind::ConstantOne => Err(Error::UnsupportedRecurrence(self.kind.to_string())),
        }
    }
}

/// Terms `F_0..F_{len-1}`.
fn generate(kind: SequenceKind, len: usize) -> Vec<BigUint> {
    let mut out: Vec<BigUint> = Vec::with_capacity(len);
    for n in 0..len {
        let next = if n == 0 {
            BigUint::zero()
        } else {
            match kind {
                SequenceKind::Fibonacci if n <= 2 => BigUint::one(),
                SequenceKind::Fibonacci => &out[n - 1] + &out[n - 2],
                SequenceKind::Natural => BigUint::from(n),
                // [n] = q [n-1] + 1
                SequenceKind::Gaussian(q) => &out[n - 1] * q + 1u32,
                SequenceKind::ConstantOne => BigUint::one(),
            }
        };
        out.push(next);
    }
    out
}

pub fn f_term(seq: &FSequence, n: usize) -> BigUint {
    seq.term(n)
}

pub fn f_factorial(seq: &FSequence, n: usize) -> BigUint {
    seq.factorial(n)
}
