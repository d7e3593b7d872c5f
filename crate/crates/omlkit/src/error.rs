//! The crate-wide error type.
//!
//! Structural failures (not a poset, not a lattice, ...) carry the
//! [`Violation`] that triggered them, so callers get the failed axiom and a
//! concrete witness, not just a category:
//!
//! ```
//! use omlkit::{build_lattice, Error, LatticeSpec, OrderSpec};
//!
//! // 0 <= 1 and 1 <= 0: fine as a relation, but not antisymmetric.
//! let spec = LatticeSpec {
//!     n: 2,
//!     order: OrderSpec::Leq(vec![vec![true, true], vec![true, true]]),
//!     ortho: vec![1, 0],
//!     labels: None,
//! };
//! match build_lattice(&spec) {
//!     Err(Error::NotAPoset(v)) => assert_eq!(v.axiom_id, "poset-antisymmetric"),
//!     other => panic!("expected NotAPoset, got {other:?}"),
//! }
//! ```

use crate::report::Violation;

/// Everything that can go wrong while building or querying lattices.
#[derive(Debug, thiserror::Error)]
#[non_exhaustive]
pub enum Error {
    /// The order relation is not reflexive, antisymmetric, and transitive
    /// (a cycle among cover pairs also lands here).
    #[error("not a partial order: {0}")]
    NotAPoset(Violation),

    /// Some pair of elements has no greatest lower or least upper bound.
    #[error("not a lattice: {0}")]
    NotALattice(Violation),

    /// The orthocomplement map breaks involution, antitonicity, De Morgan,
    /// or a complement law.
    #[error("not an ortholattice: {0}")]
    NotOrtholattice(Violation),

    /// The ortholattice fails weak modularity.
    #[error("not orthomodular: {0}")]
    NotOrthomodular(Violation),

    /// A construction or scan would exceed a configured size limit.
    #[error("size limit exceeded: {what} needs {required}, limit is {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        required: u64,
        limit: u64,
    },

    /// An operation was called outside its stated precondition.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// A subset handed to the subalgebra-to-endomorphism direction is not a
    /// complete boolean subalgebra of the center. `flag` names the first
    /// failed requirement; `witnesses` the offending elements, if any.
    #[error("not a central boolean subalgebra: fails {flag} at {witnesses:?}")]
    NotCentralSubalgebra {
        flag: &'static str,
        witnesses: Vec<usize>,
    },

    /// Reading or writing a file failed.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Input text does not match the documented JSON formats, or a
    /// specification is internally inconsistent (wrong vector lengths,
    /// both or neither order field, ...).
    #[error("malformed input: {0}")]
    MalformedInput(String),

    /// An element index does not refer to an element of the lattice at hand.
    #[error("index out of range: {what} {index} must be below {n}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        n: usize,
    },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::axiom;

    #[test]
    fn display_includes_axiom_and_witnesses() {
        let e = Error::NotOrthomodular(Violation::new(axiom::ORTHOMODULAR, vec![1, 2]));
        let msg = e.to_string();
        assert!(msg.contains("orthomodular"));
        assert!(msg.contains("[1, 2]"));
    }

    #[test]
    fn size_limit_message_names_the_limit() {
        let e = Error::SizeLimitExceeded {
            what: "catalog lattice size",
            required: 8192,
            limit: 4096,
        };
        assert_eq!(
            e.to_string(),
            "size limit exceeded: catalog lattice size needs 8192, limit is 4096"
        );
    }
}
