//! Quantum-logic connectives: the Sasaki hook, the order-theoretic product
//! connective, compatibility, and the center.
//!
//! In a boolean algebra, `a -> b` is `a' v b` and conjunction is the meet.
//! An orthomodular lattice supports order-aware analogues instead:
//!
//! * [`sasaki_hook`]`(a, b) = (a ^ b) v a'` — implication,
//! * [`finch_and`]`(a, b) = (a v b') ^ b` — its adjoint product,
//!
//! and the two sit in a genuine adjunction: `finch_and(x, b) <= c` exactly
//! when `x <= sasaki_hook(b, c)`. Elements for which the product degrades
//! to the plain meet against *everything* form the [`center`], the largest
//! boolean part of the lattice; [`central_cover`] projects any element onto
//! the least central element above it.
//!
//! ```
//! use omlkit::logic::{center, compatible, finch_and, sasaki_hook};
//! use omlkit::mo;
//!
//! let m = mo(2)?; // atoms a1 = 1, a1' = 2, a2 = 3, a2' = 4
//! // Atoms from different pairs are incompatible...
//! assert!(!compatible(&m, 1, 3));
//! // ...which the product connective makes visible: it is not the meet.
//! assert_eq!(finch_and(&m, 1, 3), 3);
//! assert_eq!(m.meet(1, 3), 0);
//! // The hook degrades to the orthocomplement on incompatible atoms.
//! assert_eq!(sasaki_hook(&m, 1, 3), 2);
//! // Only the bounds commute with everything here.
//! assert_eq!(center(&m).members(), vec![0, 5]);
//! # Ok::<(), omlkit::Error>(())
//! ```

use fixedbitset::FixedBitSet;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::correspondence::Endomap;
use crate::error::Error;
use crate::lattice::{Elem, OmlTable};

/// Sasaki hook `a -> b = (a ^ b) v a'`.
///
/// The orthomodular implication: restricted to compatible pairs it behaves
/// like classical material implication, and it is characterized by the
/// adjunction with [`finch_and`].
pub fn sasaki_hook(l: &OmlTable, a: Elem, b: Elem) -> Elem {
    l.join(l.meet(a, b), l.ortho(a))
}

/// Product connective `a & b = (a v b') ^ b`.
///
/// The left adjoint of [`sasaki_hook`] in its second argument:
/// `finch_and(x, b) <= c` iff `x <= sasaki_hook(b, c)`. Unlike the meet it
/// is neither commutative nor associative in general; it collapses to the
/// meet exactly on compatible pairs.
pub fn finch_and(l: &OmlTable, a: Elem, b: Elem) -> Elem {
    l.meet(l.join(a, l.ortho(b)), b)
}

/// Whether `a` and `b` are compatible: `finch_and(a, b) = a ^ b`.
///
/// Compatible elements generate a boolean sublattice, so on them the
/// orthomodular connectives are classical. The relation is symmetric on an
/// orthomodular lattice, even though the defining equation reads
/// one-sidedly.
pub fn compatible(l: &OmlTable, a: Elem, b: Elem) -> bool {
    finch_and(l, a, b) == l.meet(a, b)
}

/// The center: all elements compatible with every element.
///
/// Scans both product orders, so the result does not lean on the symmetry
/// theorem. The returned [`Sublattice`] always reports every closure flag
/// true: the center of an orthomodular lattice is a boolean subalgebra
/// containing the bounds.
pub fn center(l: &OmlTable) -> Sublattice {
    let members = l.elements().filter(|&a| {
        l.elements().all(|b| {
            let m = l.meet(a, b);
            finch_and(l, a, b) == m && finch_and(l, b, a) == m
        })
    });
    Sublattice::from_members(l, members).expect("element indices are in range")
}

/// Least central element above `a`.
///
/// Always defined: top is central, and the center is closed under meets, so
/// the meet of all central upper bounds of `a` is itself a central upper
/// bound.
pub fn central_cover(l: &OmlTable, a: Elem) -> Elem {
    central_cover_in(l, &center(l), a)
}

fn central_cover_in(l: &OmlTable, z: &Sublattice, a: Elem) -> Elem {
    let mut acc = l.top();
    for c in z.members() {
        if l.leq(a, c) {
            acc = l.meet(acc, c);
        }
    }
    acc
}

/// The map `a -> central_cover(a)` as an endomap on element indices.
///
/// This is the motivating example of a join-compatible closure operator:
/// [`crate::correspondence::check_bvb`] passes on it for every orthomodular
/// lattice, and its fixed points are exactly the center.
pub fn central_cover_endo(l: &OmlTable) -> Endomap {
    let z = center(l);
    Endomap::from_trusted_image(l.elements().map(|a| central_cover_in(l, &z, a)).collect())
}

/// Which closure properties a subset of lattice elements enjoys.
///
/// Computed exhaustively by [`Sublattice::from_members`]; `distributive`
/// checks both distributive identities over all member triples (evaluated
/// with the ambient meet and join).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct ClosureFlags {
    pub contains_bounds: bool,
    pub meet_closed: bool,
    pub join_closed: bool,
    pub complement_closed: bool,
    pub distributive: bool,
}

impl ClosureFlags {
    /// True when every flag is set.
    pub fn all(&self) -> bool {
        self.contains_bounds
            && self.meet_closed
            && self.join_closed
            && self.complement_closed
            && self.distributive
    }

    /// Name of the first unset flag, if any. The order matches the field
    /// order, which is also the serialization order.
    pub fn first_missing(&self) -> Option<&'static str> {
        [
            ("contains-bounds", self.contains_bounds),
            ("meet-closed", self.meet_closed),
            ("join-closed", self.join_closed),
            ("complement-closed", self.complement_closed),
            ("distributive", self.distributive),
        ]
        .into_iter()
        .find_map(|(name, ok)| (!ok).then_some(name))
    }
}

/// A subset of lattice elements together with its computed closure flags.
///
/// The flags are determined by the member set at construction time, never
/// stored stale: `from_members` is the only constructor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sublattice {
    members: FixedBitSet,
    flags: ClosureFlags,
}

impl Sublattice {
    /// Collect a member set and measure every closure flag against `l`.
    ///
    /// Duplicate members are fine; out-of-range indices fail with
    /// [`Error::IndexOutOfRange`].
    pub fn from_members(
        l: &OmlTable,
        members: impl IntoIterator<Item = Elem>,
    ) -> Result<Self, Error> {
        let n = l.n();
        let mut set = FixedBitSet::with_capacity(n);
        for e in members {
            if e >= n {
                return Err(Error::IndexOutOfRange {
                    what: "sublattice member",
                    index: e,
                    n,
                });
            }
            set.insert(e);
        }

        let mem: Vec<Elem> = set.ones().collect();
        let contains_bounds = set.contains(l.bottom()) && set.contains(l.top());
        let meet_closed = mem
            .iter()
            .all(|&x| mem.iter().all(|&y| set.contains(l.meet(x, y))));
        let join_closed = mem
            .iter()
            .all(|&x| mem.iter().all(|&y| set.contains(l.join(x, y))));
        let complement_closed = mem.iter().all(|&x| set.contains(l.ortho(x)));
        let distributive = mem.iter().all(|&x| {
            mem.iter().all(|&y| {
                mem.iter().all(|&z| {
                    l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z))
                        && l.join(x, l.meet(y, z)) == l.meet(l.join(x, y), l.join(x, z))
                })
            })
        });

        Ok(Sublattice {
            members: set,
            flags: ClosureFlags {
                contains_bounds,
                meet_closed,
                join_closed,
                complement_closed,
                distributive,
            },
        })
    }

    /// Member indices in ascending order.
    pub fn members(&self) -> Vec<Elem> {
        self.members.ones().collect()
    }

    /// Whether `e` is a member.
    pub fn contains(&self, e: Elem) -> bool {
        e < self.members.len() && self.members.contains(e)
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    /// Whether the subset is empty.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether every member of `self` is a member of `other`.
    pub fn is_subset_of(&self, other: &Sublattice) -> bool {
        self.members.is_subset(&other.members)
    }

    /// The computed closure flags.
    pub fn flags(&self) -> ClosureFlags {
        self.flags
    }

    pub(crate) fn mask(&self) -> &FixedBitSet {
        &self.members
    }
}

impl Serialize for Sublattice {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Sublattice", 2)?;
        s.serialize_field("members", &self.members())?;
        s.serialize_field("flags", &self.flags)?;
        s.end()
    }
}
