//! Exact combinatorics of nilpotent orbits and sheets of the classical
//! simple Lie algebras, with a file-backed catalog for the exceptional
//! types.
//!
//! Everything is decided by integer arithmetic on partitions:
//!
//! - [`partition`]: partitions, dual partitions, the dominance order and
//!   enumeration;
//! - [`kind`]: the classical kinds `A:n`, `B:N`, `C:N`, `D:N`, Jordan-type
//!   validity, the B/C/D collapse and orbit dimensions;
//! - [`sheets`]: sheets of sl_n, the sheet-closure order and the search for
//!   dominance-comparable pairs that are not sheet-comparable;
//! - [`orbits`]: closure order, induction from Levi subalgebras, rigidity,
//!   and the search for rigid orbits with non-rigid orbits in their
//!   closure;
//! - [`exceptional`]: the catalog of exceptional-type facts;
//! - [`oracle`]: an independent exact-arithmetic check for type A built on
//!   Jordan matrices and rank computations.
//!
//! Both searches produce witnesses that the closure of a sheet need not be
//! a union of sheets. No floating point is used anywhere.

pub mod error;
pub mod exceptional;
pub mod kind;
pub mod oracle;
pub mod orbits;
pub mod partition;
pub mod sheets;

pub use error::{Error, Result};
pub use kind::{Family, LieAlgebraKind};
pub use partition::{enumerate_partitions, Partition};

/// Default exact scalar for the matrix oracle.
pub type OracleInt = num_bigint::BigInt;

/// Exact matrix over the default oracle scalar.
pub type OracleMatrix = oracle::ExactMatrix<OracleInt>;
