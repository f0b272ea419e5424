//! Computations with meet-closed semigroups of partial transformations.
//!
//! A *partial transformation* of a finite base set `{0, .., n-1}` is a partial
//! map from the base set into itself.  Sets of such maps closed under
//! composition (and, optionally, under intersection of graphs) form concrete
//! semigroups; this crate provides
//!
//! * the elementary algebra of partial maps ([`pfun`]),
//! * generation and exhaustive enumeration of closed map sets ([`tsemi`]),
//! * finite abstract systems `(G, ·, ⋏, δ)` together with the identity and
//!   order-condition batteries that characterize which abstract systems arise
//!   from partial transformations ([`algebra`]),
//! * the closure operator `f` and the derived quasi-order `χ₀` used by the
//!   delta-only characterization ([`closure`]),
//! * a bounded backtracking search reconstructing a concrete representation
//!   of an abstract system ([`repsearch`]),
//! * and a command-line front end ([`cli`]).

pub mod algebra;
pub mod cli;
pub mod closure;
mod error;
pub mod pfun;
pub mod repsearch;
pub mod tsemi;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
