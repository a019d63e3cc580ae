//! Signature-based Gröbner basis computation over prime fields.
//!
//! The engine runs the generalized-criterion loop: every critical pair is
//! checked against a pluggable partial order on the basis (F5's insertion
//! order, the ratio order shared by GVW, or none), then reduced with
//! signature-preserving top-reductions. A classical Buchberger implementation
//! in [`oracle`] serves as an independent reference.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod bench;
pub mod criteria;
pub mod engine;
mod error;
pub mod ground;
pub mod oracle;
pub mod pairs;
pub mod poly;
pub mod sig;

pub use error::{Error, Result};
pub use ground::{FieldElement, Monomial, PrimeField, TermOrder, TermOrderKind};
pub use poly::{Polynomial, Ring, Term};
pub use sig::{LabeledPoly, ModuleOrder, Signature, SyzygyOrigin, SyzygyRecord};
