//! Exact F-nomial coefficients and the combinatorial structures that count
//! them: Fibonomial and Gaussian triangles, brute-force oracles for the
//! classical binomial-type families, finite cobweb posets with their Möbius
//! function and binomial-poset test, and Lindström–Gessel–Viennot path
//! counting on small DAGs.
//!
//! All arithmetic is exact (`num-bigint`); enumerations refuse to run past
//! their caps instead of truncating.


#[cfg(feature = "cli")]
pub mod cli;
pub mod cobweb;
pub mod error;
pub mod fnomial;
pub mod interpret;
mod json;
pub mod lgv;
pub mod report;

pub mod sequences;

pub use cobweb::{
    binomial_check, build_cobweb, chain_quotient_identity, count_max_chains_layer,
    enumerate_max_chains, mobius_table, BinomialCheckReport, CobwebPoset, MobiusTable, Vertex,
};
pub use error::{Error, Result};
pub use fnomial::{fnomial_product, triangle, triangle_report, FnomialTriangle, Method};
pub use interpret::{
    count_k_subsets, count_partitions_k_blocks, count_perms_k_cycles, count_subspaces_bruteforce,
    OracleResult,
};
pub use json::to_canonical_string;
pub use lgv::{
    build_fib_dag, build_grid_dag, count_paths, enumerate_disjoint_systems, lgv_determinant,
    lgv_verify, path_matrix, PathDag, PathMatrix,
};
pub use sequences::{f_factorial, f_term, FSequence, SequenceKind};
