//! A desk-scale laboratory for finite commutative rings: construct small
//! rings from explicit operation tables, enumerate their ideal lattices,
//! decide S-variant properties (S-integral domain, S-prime, S-maximal,
//! S-field, ...) with re-checkable witnesses, build localizations from
//! first principles, and exhaustively verify the transfer theorems that
//! connect them.
//!
//! Everything is a finite loop over tables; correctness and auditability
//! are preferred over scale. Ring order is capped at 128 by the bitmask
//! representation.

pub mod classify;
mod error;
pub mod ideal;
pub mod iso;
pub mod krull;
pub mod localize;
pub mod multset;
pub mod ring;
pub mod sweep;

pub use error::{Error, Result};
pub use ring::{Elem, FiniteRing};
