//! Validation reports: which axioms failed, and on which elements.
//!
//! Every checker in this crate (the lattice validator, the closure-operator
//! checker, the quantale-law checker, the locale checker) answers with a
//! [`ValidationReport`]: a list of [`Violation`]s, one per failed axiom,
//! each carrying the *first* witness found in ascending element order.
//! An empty list means every axiom held.
//!
//! Witness order is deterministic: checkers scan elements (and pairs, and
//! triples) in ascending index order and record the first counterexample,
//! so the same input always produces byte-identical reports.
//!
//! ```
//! use omlkit::{boolean_algebra, validate_oml};
//!
//! let b3 = boolean_algebra(3)?;
//! let report = validate_oml(&b3);
//! assert!(report.passed());
//! assert!(report.violations.is_empty());
//! # Ok::<(), omlkit::Error>(())
//! ```

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::lattice::Elem;

/// Identifiers for every axiom the crate's checkers can report on.
///
/// These strings are part of the stable output format: they appear in
/// [`Violation::axiom_id`] and therefore in JSON reports.
pub mod axiom {
    /// `a <= a` for every element.
    pub const POSET_REFLEXIVE: &str = "poset-reflexive";
    /// `a <= b` and `b <= a` only when `a = b`.
    pub const POSET_ANTISYMMETRIC: &str = "poset-antisymmetric";
    /// `a <= b` and `b <= c` imply `a <= c`.
    pub const POSET_TRANSITIVE: &str = "poset-transitive";
    /// The designated bottom lies below every element.
    pub const BOUNDS_BOTTOM: &str = "bounds-bottom";
    /// The designated top lies above every element.
    pub const BOUNDS_TOP: &str = "bounds-top";
    /// Every pair has a greatest lower bound, and the meet table stores it.
    pub const LATTICE_MEET: &str = "lattice-meet";
    /// Every pair has a least upper bound, and the join table stores it.
    pub const LATTICE_JOIN: &str = "lattice-join";
    /// The orthocomplement is an involution: `a'' = a`.
    pub const ORTHO_INVOLUTION: &str = "ortho-involution";
    /// The orthocomplement reverses order: `a <= b` implies `b' <= a'`.
    pub const ORTHO_ANTITONE: &str = "ortho-antitone";
    /// De Morgan: `(a v b)' = a' ^ b'`.
    pub const DE_MORGAN: &str = "de-morgan";
    /// `a v a' = 1`.
    pub const COMPLEMENT_JOIN: &str = "complement-join";
    /// `a ^ a' = 0`.
    pub const COMPLEMENT_MEET: &str = "complement-meet";
    /// Weak modularity: `a <= b` implies `b = a v (a' ^ b)`.
    pub const ORTHOMODULAR: &str = "orthomodular";

    /// `a <= b` implies `j(a) <= j(b)`.
    pub const CLOSURE_MONOTONE: &str = "closure-monotone";
    /// `j(j(a)) = j(a)`.
    pub const CLOSURE_IDEMPOTENT: &str = "closure-idempotent";
    /// `a <= j(a)`.
    pub const BVB_INFLATIONARY: &str = "bvb-inflationary";
    /// `j(a ^ j(b)) = j(a) ^ j(b)`.
    pub const BVB_MEET_INTERCHANGE: &str = "bvb-meet-interchange";
    /// `a ^ j(-)` preserves joins, including the empty join:
    /// `a ^ j(b1 v b2) = (a ^ j(b1)) v (a ^ j(b2))` and `a ^ j(0) = 0`.
    pub const BVB_LEFT_JOIN: &str = "bvb-left-join";
    /// `- ^ j(b)` preserves joins:
    /// `(a1 v a2) ^ j(b) = (a1 ^ j(b)) v (a2 ^ j(b))`.
    pub const BVB_RIGHT_JOIN: &str = "bvb-right-join";

    /// `(a & b) & c = a & (b & c)` for the induced product `a & b = a ^ j(b)`.
    pub const AMP_ASSOCIATIVE: &str = "amp-associative";
    /// `a & -` preserves joins, including the empty join.
    pub const AMP_LEFT_JOIN: &str = "amp-left-join";
    /// `- & b` preserves joins, including the empty join.
    pub const AMP_RIGHT_JOIN: &str = "amp-right-join";
    /// Right-sidedness: `a & 1 = a`.
    pub const AMP_RIGHT_SIDED: &str = "amp-right-sided";
    /// Idempotence: `a & a = a`.
    pub const AMP_IDEMPOTENT: &str = "amp-idempotent";

    /// The fixed points contain bottom and top.
    pub const LOCALE_BOUNDS: &str = "locale-bounds";
    /// The fixed points are closed under the ambient meet.
    pub const LOCALE_MEET_CLOSED: &str = "locale-meet-closed";
    /// The fixed points are closed under the ambient join.
    pub const LOCALE_JOIN_CLOSED: &str = "locale-join-closed";
    /// Meets distribute over joins inside the fixed points.
    pub const LOCALE_DISTRIBUTIVE: &str = "locale-distributive";
}

/// One failed axiom together with the first counterexample found.
///
/// `witnesses` lists the element indices the axiom was instantiated with, in
/// the order the axiom quantifies them. A binary axiom carries two indices, a
/// ternary one three; a few checks (for example the empty-join case of
/// [`axiom::BVB_LEFT_JOIN`]) carry fewer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// One of the constants in [`axiom`].
    pub axiom_id: String,
    /// Element indices instantiating the failed axiom.
    pub witnesses: Vec<Elem>,
}

impl Violation {
    pub fn new(axiom_id: &str, witnesses: Vec<Elem>) -> Self {
        Violation {
            axiom_id: axiom_id.to_owned(),
            witnesses,
        }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "axiom {} fails at witness {:?}",
            self.axiom_id, self.witnesses
        )
    }
}

impl Serialize for Violation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Violation", 2)?;
        s.serialize_field("axiom_id", &self.axiom_id)?;
        s.serialize_field("witnesses", &self.witnesses)?;
        s.end()
    }
}

/// Outcome of running a family of axiom checks.
///
/// At most one [`Violation`] is recorded per axiom: the first witness in
/// ascending scan order. The report passes exactly when `violations` is
/// empty.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passing() -> Self {
        ValidationReport::default()
    }

    /// True exactly when no axiom failed.
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// The violation recorded for `axiom_id`, if that axiom failed.
    pub fn violation(&self, axiom_id: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom_id == axiom_id)
    }

    pub(crate) fn push(&mut self, axiom_id: &str, witnesses: Vec<Elem>) {
        self.violations.push(Violation::new(axiom_id, witnesses));
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.passed() {
            write!(f, "all axioms hold")
        } else {
            write!(f, "{} axiom(s) fail:", self.violations.len())?;
            for v in &self.violations {
                write!(f, "\n  {v}")?;
            }
            Ok(())
        }
    }
}

impl Serialize for ValidationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ValidationReport", 2)?;
        s.serialize_field("passed", &self.passed())?;
        s.serialize_field("violations", &self.violations)?;
        s.end()
    }
}
