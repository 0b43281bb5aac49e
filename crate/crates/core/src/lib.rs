//! Exact invariants of edge ideals of finite simple graphs.
//!
//! The crate computes the induced matching number, the matching number, the
//! Castelnuovo–Mumford regularity and the Hilbert series (h-polynomial) of
//! `K[x_1..x_n]/I(G)`, implements the S-suspension and `{x_i,x_j},S`-suspension
//! constructions together with their predicted effect on these invariants,
//! and builds, for every triple `1 <= a <= r`, `s >= 1`, a connected graph with
//! `im = a`, `reg = r` and `deg h = s` along with a recomputed certificate.
//!
//! Everything here is `no_std` + `alloc`; file formats and the command line
//! live in the companion `edgereg` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod complex;
pub mod constructor;
pub mod edge_ideal;
mod error;
pub mod graph;
pub mod oracle;
pub mod suspension;

pub use algebra::{BettiTable, HilbertSeries, IntegerPolynomial, SquarefreeMonomialIdeal};
pub use complex::{FVector, FieldSpec, SimplicialComplex};
pub use constructor::{BaseGraphProvider, Certificate};
pub use edge_ideal::InvariantReport;
pub use error::Error;
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use suspension::{SuspensionKind, SuspensionStep};

pub type Result<T, E = Error> = core::result::Result<T, E>;
