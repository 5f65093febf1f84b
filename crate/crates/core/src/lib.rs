//! Exact-arithmetic computational Lie theory for the classical root systems.
//!
//! Everything here is computed over arbitrary-precision rationals: root systems
//! `A`/`B`/`C`/`D` in the reversed-basis coordinates (basis vector `f_1` is the
//! rightmost diagram node, larger systems grow to the left), signed-permutation
//! Weyl groups and their odd-sign-change extensions, characteristic-polynomial
//! invariant families and their restrictions to left-padded subspaces, the
//! symmetric-space catalog with class-one fundamental weights, injectivity radii
//! and the convex domains controlling spherical support, Weyl characters with a
//! Freudenthal multiplicity oracle and character-subtraction branching, and the
//! rho-shifted alternating polynomial spaces with the restriction operators that
//! make them a projective system.
//!
//! The crate is organized as a verification library: each module exposes the
//! constructions plus `check_*` functions that assert the relevant identities
//! exactly and return machine-readable reports. The [`suite`] module bundles the
//! full check matrix used by the CLI and the acceptance tests.

pub mod coord;
pub mod error;
pub mod geometry;
pub mod invariants;
pub mod linalg;
pub mod poly;
pub mod propagation;
pub mod pwtransform;
pub mod ratio;
pub mod report;
pub mod rootsys;
pub mod spectral;
pub mod suite;
pub mod weylgrp;

pub use coord::CoordVector;
pub use error::{Error, Result};
pub use poly::SparsePoly;
pub use ratio::Rational;
pub use rootsys::{ClassicalType, RootSystemCtx};
pub use weylgrp::{SignedPerm, WeylGroup};

/// JSON schema tag stamped on every serialized report.
pub const SCHEMA: &str = "weyl-restrict/1";
