//! The product `a & b = a ^ j(b)` induced by an endomap, and the laws that
//! make it a quantale multiplication.
//!
//! Any endomap `j` induces a binary product by tabulating `a ^ j(b)`;
//! whether that product is any good is a separate, checkable question.
//! When `j` passes [`check_bvb`](crate::correspondence::check_bvb), the
//! product is associative, distributes over joins on both sides (empty
//! families included), has top as a right unit, and is idempotent — the
//! complete-lattice analogue of a ring structure, with join as addition.
//! [`check_quantale_axioms`] measures exactly those laws, witness by
//! witness, without assuming anything about where the table came from.
//!
//! The fixed points of such a `j` do more than form a subalgebra: meets
//! distribute over joins inside them, so they carry the structure of a
//! finite locale. [`fixed_point_locale_check`] verifies that directly.
//!
//! ```
//! use omlkit::logic::central_cover_endo;
//! use omlkit::quantale::{check_quantale_axioms, quantale_from_endo};
//! use omlkit::mo;
//!
//! let m = mo(2)?;
//! let q = quantale_from_endo(&m, &central_cover_endo(&m));
//! // Every nonzero element covers to top, so the product collapses:
//! // a & b is just a whenever b is nonzero.
//! assert_eq!(q.amp(1, 3), 1);
//! assert_eq!(q.amp(1, 0), 0);
//! assert!(check_quantale_axioms(&m, &q).passed());
//! # Ok::<(), omlkit::Error>(())
//! ```

use crate::correspondence::{check_bvb, Endomap};
use crate::error::Error;
use crate::lattice::{Elem, OmlTable};
use crate::report::{axiom, ValidationReport};

/// The tabulated product `a & b = a ^ j(b)` for one endomap `j`.
///
/// Only constructible through [`quantale_from_endo`], so the table always
/// agrees with its stored source map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantaleTable {
    n: usize,
    /// Row-major `n x n` product table.
    amp: Vec<u32>,
    source: Endomap,
}

impl QuantaleTable {
    /// The product `a & b`.
    pub fn amp(&self, a: Elem, b: Elem) -> Elem {
        self.amp[a * self.n + b] as Elem
    }

    /// Number of elements.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The endomap the table was built from.
    pub fn source(&self) -> &Endomap {
        &self.source
    }
}

/// Tabulate `a & b = a ^ j(b)` for every pair.
///
/// Works for an arbitrary endomap; run [`check_quantale_axioms`] to find
/// out which laws the result actually satisfies.
///
/// # Panics
///
/// Panics if `j` was built for a lattice of a different size.
pub fn quantale_from_endo(l: &OmlTable, j: &Endomap) -> QuantaleTable {
    assert_eq!(j.len(), l.n(), "endomap size must match the lattice");
    let n = l.n();
    let mut amp = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            amp.push(l.meet(a, j.apply(b)) as u32);
        }
    }
    QuantaleTable {
        n,
        amp,
        source: j.clone(),
    }
}

/// Check the quantale laws for a tabulated product.
///
/// One report entry per failed law, first witness in ascending scan order:
///
/// * [`axiom::AMP_ASSOCIATIVE`] — `(a & b) & c = a & (b & c)`;
/// * [`axiom::AMP_LEFT_JOIN`] — `a & (b1 v b2) = (a & b1) v (a & b2)` and
///   the empty instance `a & 0 = 0` (one-element witness);
/// * [`axiom::AMP_RIGHT_JOIN`] — `(a1 v a2) & b = (a1 & b) v (a2 & b)` and
///   the empty instance `0 & b = 0`;
/// * [`axiom::AMP_RIGHT_SIDED`] — `a & 1 = a`;
/// * [`axiom::AMP_IDEMPOTENT`] — `a & a = a`.
///
/// Binary plus empty joins give all finite joins by induction, so the scan
/// is complete for arbitrary join families on a finite lattice.
///
/// # Panics
///
/// Panics if `q` was built for a lattice of a different size.
pub fn check_quantale_axioms(l: &OmlTable, q: &QuantaleTable) -> ValidationReport {
    assert_eq!(q.n(), l.n(), "quantale table size must match the lattice");
    let n = l.n();
    let mut report = ValidationReport::default();

    'assoc: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if q.amp(q.amp(a, b), c) != q.amp(a, q.amp(b, c)) {
                    report.push(axiom::AMP_ASSOCIATIVE, vec![a, b, c]);
                    break 'assoc;
                }
            }
        }
    }

    'left: {
        if let Some(a) = (0..n).find(|&a| q.amp(a, l.bottom()) != l.bottom()) {
            report.push(axiom::AMP_LEFT_JOIN, vec![a]);
            break 'left;
        }
        for a in 0..n {
            for b1 in 0..n {
                for b2 in 0..n {
                    let lhs = q.amp(a, l.join(b1, b2));
                    let rhs = l.join(q.amp(a, b1), q.amp(a, b2));
                    if lhs != rhs {
                        report.push(axiom::AMP_LEFT_JOIN, vec![a, b1, b2]);
                        break 'left;
                    }
                }
            }
        }
    }

    'right: {
        if let Some(b) = (0..n).find(|&b| q.amp(l.bottom(), b) != l.bottom()) {
            report.push(axiom::AMP_RIGHT_JOIN, vec![b]);
            break 'right;
        }
        for a1 in 0..n {
            for a2 in 0..n {
                for b in 0..n {
                    let lhs = q.amp(l.join(a1, a2), b);
                    let rhs = l.join(q.amp(a1, b), q.amp(a2, b));
                    if lhs != rhs {
                        report.push(axiom::AMP_RIGHT_JOIN, vec![a1, a2, b]);
                        break 'right;
                    }
                }
            }
        }
    }

    if let Some(a) = (0..n).find(|&a| q.amp(a, l.top()) != a) {
        report.push(axiom::AMP_RIGHT_SIDED, vec![a]);
    }

    if let Some(a) = (0..n).find(|&a| q.amp(a, a) != a) {
        report.push(axiom::AMP_IDEMPOTENT, vec![a]);
    }

    report
}

/// Verify that the fixed points of a closure operator form a finite locale.
///
/// Requires `j` to pass [`check_bvb`] first (anything else is rejected
/// with [`Error::PreconditionViolated`]); then checks, inside the fixed
/// set, that the bounds are present, that ambient meets and joins stay in
/// the set, and that meets distribute over joins — which on a finite
/// lattice is exactly the locale (frame) condition.
pub fn fixed_point_locale_check(l: &OmlTable, j: &Endomap) -> Result<ValidationReport, Error> {
    let bvb = check_bvb(l, j);
    if !bvb.passed() {
        return Err(Error::PreconditionViolated(format!(
            "fixed_point_locale_check needs a closure operator that passes check_bvb; {bvb}"
        )));
    }

    let fixed: Vec<Elem> = l.elements().filter(|&a| j.apply(a) == a).collect();
    let in_fixed = |e: Elem| j.apply(e) == e;
    let mut report = ValidationReport::default();

    if !in_fixed(l.bottom()) {
        report.push(axiom::LOCALE_BOUNDS, vec![l.bottom()]);
    } else if !in_fixed(l.top()) {
        report.push(axiom::LOCALE_BOUNDS, vec![l.top()]);
    }

    'meets: for &x in &fixed {
        for &y in &fixed {
            if !in_fixed(l.meet(x, y)) {
                report.push(axiom::LOCALE_MEET_CLOSED, vec![x, y]);
                break 'meets;
            }
        }
    }
    'joins: for &x in &fixed {
        for &y in &fixed {
            if !in_fixed(l.join(x, y)) {
                report.push(axiom::LOCALE_JOIN_CLOSED, vec![x, y]);
                break 'joins;
            }
        }
    }

    'dist: for &x in &fixed {
        for &y in &fixed {
            for &z in &fixed {
                if l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)) {
                    report.push(axiom::LOCALE_DISTRIBUTIVE, vec![x, y, z]);
                    break 'dist;
                }
            }
        }
    }

    Ok(report)
}
