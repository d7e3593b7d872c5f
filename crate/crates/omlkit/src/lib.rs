//! Finite orthomodular lattices on explicit tables: validation with
//! witnesses, quantum-logic connectives, and the exhaustively verified
//! correspondence between central boolean subalgebras and join-compatible
//! closure operators.
//!
//! # What lives where
//!
//! * [`lattice`] — specifications, table assembly, and the axiom validator.
//!   The type boundary matters: [`LatticeTables`] is assembled but
//!   unvalidated, [`OmlTable`] certifies every axiom. Everything downstream
//!   takes `&OmlTable` and may assume the invariants.
//! * [`catalog`] — boolean power sets ([`boolean_algebra`]), horizontal
//!   sums ([`mo`]), direct [`product`]s, and the twelve-element showcase
//!   [`g12`].
//! * [`logic`] — the Sasaki hook, the product connective [`finch_and`],
//!   [`compatible`], the [`center`], and [`central_cover`].
//! * [`quantale`] — the induced product `a & b = a ^ j(b)` and its laws.
//! * [`correspondence`] — [`check_bvb`], both enumerations, and
//!   [`verify_correspondence`], which round-trips every item on both sides.
//! * [`report`] / [`error`] — every checker answers with axiom identifiers
//!   and concrete witnesses, never a bare boolean.
//!
//! All items are re-exported at the crate root; the module paths are
//! equivalent and exist for orientation.
//!
//! # A three-minute tour
//!
//! ```
//! use omlkit::{
//!     center, check_bvb, central_cover_endo, mo, quantale_from_endo,
//!     validate_oml, verify_correspondence,
//! };
//!
//! // A horizontal sum of two four-element blocks: orthomodular, far from
//! // boolean, with a trivial center.
//! let m = mo(2)?;
//! assert!(validate_oml(&m).passed());
//! assert_eq!(center(&m).members(), vec![0, 5]);
//!
//! // Projecting onto the center is a join-compatible closure operator,
//! // and the product it induces satisfies the quantale laws.
//! let e = central_cover_endo(&m);
//! assert!(check_bvb(&m, &e).passed());
//! let q = quantale_from_endo(&m, &e);
//! assert_eq!(q.amp(1, 3), 1);
//!
//! // On this lattice the correspondence has exactly one item per side.
//! let report = verify_correspondence(&m)?;
//! assert!(report.passed());
//! assert_eq!(report.endos.len(), 1);
//! # Ok::<(), omlkit::Error>(())
//! ```
//!
//! # Conventions
//!
//! * Elements are indices `0..n` and are never renumbered; reports,
//!   serialized files, and labels all refer to the same indices.
//! * Checkers scan in ascending index order and record the first witness
//!   per axiom, so reports are deterministic.
//! * Serialized JSON is canonical: fixed field order, no whitespace, no
//!   maps with unstable iteration order. Equal values serialize to equal
//!   bytes.
//! * The exhaustive scans in [`correspondence`] are exponential by nature
//!   and guarded by [`ScanLimits`]; the `_with` variants take explicit
//!   limits.

pub mod catalog;
pub mod correspondence;
pub mod error;
pub mod lattice;
pub mod logic;
pub mod quantale;
pub mod report;

pub use catalog::*;
pub use correspondence::*;
pub use error::Error;
pub use lattice::*;
pub use logic::*;
pub use quantale::*;
pub use report::{axiom, ValidationReport, Violation};

/// Crate version, as embedded in serialized reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

// Compile and run every code block in the guide alongside the doctests,
// one module per chapter so a failing snippet names its source file.
#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/lattices.md")]
    mod lattices {}
    #[doc = include_str!("../../../book/src/connectives.md")]
    mod connectives {}
    #[doc = include_str!("../../../book/src/center.md")]
    mod center {}
    #[doc = include_str!("../../../book/src/quantales.md")]
    mod quantales {}
    #[doc = include_str!("../../../book/src/correspondence.md")]
    mod correspondence {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
