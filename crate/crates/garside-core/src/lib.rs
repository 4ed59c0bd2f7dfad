//! Exact computation in finitely presented homogeneous monoids and their
//! groups of fractions.
//!
//! The crate builds finite length-truncations of monoids given by homogeneous
//! presentations (every defining relation equates words of equal length),
//! answers divisibility-lattice queries on them (divisor sets, gcds, lcms,
//! balanced elements, Garside elements, greedy normal forms, conjugation by
//! the Garside element, center exponents), and checks a battery of structural
//! properties with replayable counterexamples. A companion module provides
//! dense exact linear algebra over prime fields and the rationals for
//! matrix-algebra and Lie-algebra closure dimensions, and another carries the
//! concrete monoid families plus an exact Coxeter reflection representation
//! used to verify a rank-5 diagram embedding inside the type-E8 reflection
//! group.
//!
//! Everything is `no_std`-compatible (an allocator is required); no floating
//! point arithmetic is used anywhere.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod checks;
pub mod families;
pub mod garside;
pub mod group;
pub mod lattice;
pub mod matspan;
pub mod oracle;
pub mod presentation;
pub mod reflect;
pub mod report;
pub mod table;

pub use garside::{AtomPermutation, CenterExponent, ConjugationError, Garside, GarsideError};
pub use group::GroupElement;
pub use lattice::{GarsideSearch, LatticeError, LcmOutcome, Side};
pub use presentation::{Presentation, PresentationError, Word};
pub use report::{PropertyId, PropertyReport, PropertyStatus, Witness};
pub use table::{BoundExceeded, BuildError, Element, MonoidTable};
