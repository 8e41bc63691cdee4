//! Exact-arithmetic models of varieties through their Néron–Severi lattice,
//! with certificate-carrying positivity classifiers.
//!
//! A [`surface::SurfaceModel`] bundles an intersection lattice, a catalog of
//! known integral curves, the canonical class and optional cone data. The
//! classifiers in [`surface`] decide whether a divisor class is nef, big,
//! anti-big, ample or tensor-ample, returning three-valued [`surface::Verdict`]s
//! whose evidence re-verifies by a pure checker. [`builders`] constructs the
//! standard worked families (reducible curves, ruled surfaces, smooth complete
//! toric surfaces, blow-ups of the plane) and the associated special-purpose
//! integer checks. [`scheme`] composes verdicts across irreducible components
//! and validates stratification certificates.
//!
//! Everything runs over arbitrary-precision rationals ([`exact::Rat`]); there
//! is no floating point anywhere in a verdict path. All values are immutable
//! after construction and every operation is pure, so concurrent use needs no
//! synchronization.
//!
//! The crate is `no_std` (with `alloc`); IO, serialization and the command
//! line front end live in the companion `tensamp-cli` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod builders;
pub mod cone;
pub mod exact;
pub mod scheme;
pub mod surface;

pub use exact::{Rat, RatMat, RatVec};
pub use surface::{DivisorClass, Status, SurfaceModel, Verdict};

