//! Signature and nullity invariants of complex schemes of real plane curves,
//! computed from plumbing diagrams with exact rational arithmetic.
//!
//! The pipeline is
//!
//! 1. [`scheme`]: parse a complex scheme written in Viro notation and count
//!    its numerical characteristics;
//! 2. [`graph`]: build the decorated plumbing tree of the scheme and its
//!    plumbing matrix;
//! 3. [`exact`]: exact linear algebra (solves, inertia, characteristic data);
//! 4. [`cg`]: Casson–Gordon invariants of graph manifolds and signatures of
//!    graph links for an arbitrary weighted tree;
//! 5. [`curve`]: the curve-level invariants `sig_{b/p}` and `eta_p`, their
//!    step-function profile over `(0, 1/2)` and related closed forms;
//! 6. [`prohibit`]: degree-level verdicts for dividing real algebraic curves.

pub mod cg;
pub mod cli;
pub mod curve;
mod error;
pub mod exact;
pub mod graph;
pub mod primes;
pub mod prohibit;
pub mod scheme;

pub use error::{Error, Result};
pub use scheme::{ComplexScheme, Oval, SchemeKind, Sign};
