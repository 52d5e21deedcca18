//! Exact engine for weight structures on homotopy categories of complexes.
//!
//! The crate is organized bottom-up:
//!
//! * [`linalg`] — exact scalars (arbitrary-precision rationals and prime
//!   fields), dense matrices, Hermite/Smith normal forms and integer
//!   lattice arithmetic;
//! * [`base`] — additive base categories: finite dimensional vector
//!   spaces and projectives over path algebras of finite acyclic
//!   quivers, with idempotent splitting;
//! * [`homotopy`] — bounded complexes up to homotopy: cones, shifts,
//!   minimal models, hom spaces, Krull–Schmidt decomposition;
//! * [`weight`] — weight structures as executable objects: membership,
//!   weight decompositions, transport certificates, axiom checking;
//! * [`slope`] — the slope-invariant engine for eventually periodic
//!   dimension profiles of unbounded complexes with bounded dimensions;
//! * [`k0`] — the Grothendieck-group lattice criterion for extending a
//!   weight structure to idempotent extensions;
//! * [`sample`] — seeded random generators used by property suites and
//!   by the CLI.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod linalg;
pub mod base;
pub mod homotopy;
pub mod weight;
pub mod slope;
pub mod k0;
pub mod sample;

mod error;
pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
