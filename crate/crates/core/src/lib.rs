// Index-based loops and `% == 0` divisibility tests read naturally in
// dense linear algebra and number-theoretic code; keep them.
#![allow(clippy::needless_range_loop, clippy::manual_is_multiple_of)]

//! Exact computational engine for modular (characteristic-p) representations
//! of finite groups: induction, restriction, conjugation, inertia groups, the
//! Clifford correspondence, Meataxe irreducibility testing, and Brauer
//! character tables, with built-in constructors for `SL_2(F_p)` inside
//! `GL_2(F_p)` in defining characteristic.

pub mod brauer;
pub mod clifford;
pub mod field;
pub mod group;
pub mod linalg;
pub mod rep;
pub mod sl2gl2;
pub mod structure;

pub use brauer::{BrauerTable, CyclotomicInt};
pub use clifford::{ClauseCheck, CliffordReport};
pub use field::{embed, make_field, FieldCtx, FieldElement, FieldError};
pub use group::Group;
pub use linalg::{Matrix, LinalgError};
pub use rep::{RepError, Representation};
