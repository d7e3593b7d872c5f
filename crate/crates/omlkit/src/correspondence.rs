//! The correspondence between complete boolean subalgebras of the center
//! and join-compatible closure operators.
//!
//! A lattice endomap `j` qualifies when [`check_bvb`] finds it monotone,
//! idempotent, inflationary, meet-interchanging (`j(a ^ j(b)) = j(a) ^
//! j(b)`), and join-compatible on both sides of the induced product
//! `a ^ j(b)` — including the empty join, which forces `j(0) = 0`. On a
//! finite orthomodular lattice these maps are in bijection with the
//! subsets of the [`center`](crate::logic::center) that contain the bounds
//! and are closed under meet, join, and orthocomplement:
//!
//! * forward ([`endo_from_subalgebra`]): send a subalgebra `M` to
//!   `j(a) = meet of all x in M with a <= x`;
//! * backward ([`fixed_points`]): send `j` to its set of fixed elements.
//!
//! [`verify_correspondence`] checks the whole story exhaustively on one
//! lattice: it enumerates both sides, round-trips every item, and reports
//! the outcome. Nothing is trusted: every claimed closure operator is
//! re-validated, every fixed-point set re-measured.
//!
//! ```
//! use omlkit::correspondence::verify_correspondence;
//! use omlkit::boolean_algebra;
//!
//! // On a boolean algebra every element is central, and the subalgebras
//! // containing the bounds correspond to partitions of the atoms.
//! let report = verify_correspondence(&boolean_algebra(3)?)?;
//! assert_eq!(report.subalgebras.len(), 5);
//! assert_eq!(report.endos.len(), 5);
//! assert!(report.passed());
//! # Ok::<(), omlkit::Error>(())
//! ```

use serde::ser::{Serialize, SerializeStruct, Serializer};
use serde::Deserialize;

use crate::error::Error;
use crate::lattice::{Elem, OmlTable};
use crate::logic::{center, Sublattice};
use crate::report::{axiom, ValidationReport};

/// A total map from element indices to element indices.
///
/// Construction through [`Endomap::new`] guarantees the image has one
/// in-range entry per element of the lattice it was checked against.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Endomap {
    image: Vec<Elem>,
}

impl Endomap {
    /// Validate an image vector against a lattice.
    pub fn new(l: &OmlTable, image: Vec<Elem>) -> Result<Self, Error> {
        if image.len() != l.n() {
            return Err(Error::MalformedInput(format!(
                "endomap image has {} entries, expected {}",
                image.len(),
                l.n()
            )));
        }
        if let Some(&bad) = image.iter().find(|&&v| v >= l.n()) {
            return Err(Error::IndexOutOfRange {
                what: "endomap image entry",
                index: bad,
                n: l.n(),
            });
        }
        Ok(Endomap { image })
    }

    /// Internal constructor for images that are in range by construction.
    pub(crate) fn from_trusted_image(image: Vec<Elem>) -> Self {
        Endomap { image }
    }

    /// Apply the map to one element.
    pub fn apply(&self, a: Elem) -> Elem {
        self.image[a]
    }

    /// The full image vector, indexed by element.
    pub fn image(&self) -> &[Elem] {
        &self.image
    }

    /// Number of elements of the underlying lattice.
    pub fn len(&self) -> usize {
        self.image.len()
    }

    /// An endomap always has as many entries as the lattice has elements,
    /// and lattices are nonempty.
    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }
}

/// On-disk JSON shape of an endomap: `{"image": [..]}`.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EndomapJson {
    image: Vec<Elem>,
}

/// Parse the JSON endomap format and validate it against `l`.
pub fn parse_endomap_json(l: &OmlTable, text: &str) -> Result<Endomap, Error> {
    let raw: EndomapJson =
        serde_json::from_str(text).map_err(|e| Error::MalformedInput(e.to_string()))?;
    Endomap::new(l, raw.image)
}

/// Budget for the exhaustive scans in this module.
///
/// The endomap side enumerates the `2^(n-1)` top-containing subsets of an
/// `n`-element lattice; the subalgebra side enumerates the `2^m` subsets
/// of an `m`-element center. Both are exponential by nature, so both are
/// gated, and both gates can be widened (or tightened) per call.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanLimits {
    /// Largest lattice size the endomap-side scan will accept.
    pub moore_scan_max_n: usize,
    /// Largest number of center subsets the subalgebra-side scan will visit.
    pub center_scan_max_subsets: u64,
}

impl Default for ScanLimits {
    fn default() -> Self {
        ScanLimits {
            moore_scan_max_n: 20,
            center_scan_max_subsets: 1 << 20,
        }
    }
}

/// Check the closure-operator laws for `j` on `l`.
///
/// One report entry per failed law, each with the first witness in
/// ascending scan order:
///
/// * [`axiom::CLOSURE_MONOTONE`], [`axiom::CLOSURE_IDEMPOTENT`],
///   [`axiom::BVB_INFLATIONARY`] — `j` is a closure operator;
/// * [`axiom::BVB_MEET_INTERCHANGE`] — `j(a ^ j(b)) = j(a) ^ j(b)`;
/// * [`axiom::BVB_LEFT_JOIN`] — `a ^ j(-)` turns joins into joins,
///   including the empty join `a ^ j(0) = 0` (a one-element witness);
/// * [`axiom::BVB_RIGHT_JOIN`] — `- ^ j(b)` turns joins into joins. (Its
///   empty instance is `0 ^ j(b) = 0`, true in any lattice, so it is not
///   scanned.)
///
/// Binary joins plus the empty join give all finite joins by induction, so
/// on finite lattices this check is complete for arbitrary join families.
///
/// # Panics
///
/// Panics if `j` was built for a lattice of a different size.
pub fn check_bvb(l: &OmlTable, j: &Endomap) -> ValidationReport {
    assert_eq!(j.len(), l.n(), "endomap size must match the lattice");
    let n = l.n();
    let mut report = ValidationReport::default();

    'monotone: for a in 0..n {
        for b in 0..n {
            if l.leq(a, b) && !l.leq(j.apply(a), j.apply(b)) {
                report.push(axiom::CLOSURE_MONOTONE, vec![a, b]);
                break 'monotone;
            }
        }
    }

    if let Some(a) = (0..n).find(|&a| j.apply(j.apply(a)) != j.apply(a)) {
        report.push(axiom::CLOSURE_IDEMPOTENT, vec![a]);
    }

    if let Some(a) = (0..n).find(|&a| !l.leq(a, j.apply(a))) {
        report.push(axiom::BVB_INFLATIONARY, vec![a]);
    }

    'interchange: for a in 0..n {
        for b in 0..n {
            if j.apply(l.meet(a, j.apply(b))) != l.meet(j.apply(a), j.apply(b)) {
                report.push(axiom::BVB_MEET_INTERCHANGE, vec![a, b]);
                break 'interchange;
            }
        }
    }

    // Left join law; the nullary instance first, then binary joins.
    'left: {
        let j0 = j.apply(l.bottom());
        if let Some(a) = (0..n).find(|&a| l.meet(a, j0) != l.bottom()) {
            report.push(axiom::BVB_LEFT_JOIN, vec![a]);
            break 'left;
        }
        for a in 0..n {
            for b1 in 0..n {
                for b2 in 0..n {
                    let lhs = l.meet(a, j.apply(l.join(b1, b2)));
                    let rhs = l.join(l.meet(a, j.apply(b1)), l.meet(a, j.apply(b2)));
                    if lhs != rhs {
                        report.push(axiom::BVB_LEFT_JOIN, vec![a, b1, b2]);
                        break 'left;
                    }
                }
            }
        }
    }

    'right: for a1 in 0..n {
        for a2 in 0..n {
            for b in 0..n {
                let jb = j.apply(b);
                let lhs = l.meet(l.join(a1, a2), jb);
                let rhs = l.join(l.meet(a1, jb), l.meet(a2, jb));
                if lhs != rhs {
                    report.push(axiom::BVB_RIGHT_JOIN, vec![a1, a2, b]);
                    break 'right;
                }
            }
        }
    }

    report
}

/// The set of elements `j` leaves fixed, as a measured [`Sublattice`].
///
/// Only defined for maps that pass [`check_bvb`]; anything else is
/// rejected with [`Error::PreconditionViolated`] so the caller cannot
/// mistake an arbitrary fixed set for a subalgebra.
pub fn fixed_points(l: &OmlTable, j: &Endomap) -> Result<Sublattice, Error> {
    let report = check_bvb(l, j);
    if !report.passed() {
        return Err(Error::PreconditionViolated(format!(
            "fixed_points needs a closure operator that passes check_bvb; {report}"
        )));
    }
    Sublattice::from_members(l, l.elements().filter(|&a| j.apply(a) == a))
}

/// Forward direction: the closure operator `j(a) = meet {x in M : a <= x}`.
///
/// `m` must contain the bounds, be closed under meet, join, and
/// orthocomplement, and consist of central elements only. The conditions
/// are re-measured here against `l` (the stored flags are not trusted),
/// and the first failure is reported as [`Error::NotCentralSubalgebra`]
/// with the requirement name and a witness.
///
/// # Panics
///
/// Panics if `m` was built for a lattice of a different size.
pub fn endo_from_subalgebra(l: &OmlTable, m: &Sublattice) -> Result<Endomap, Error> {
    assert_eq!(
        m.mask().len(),
        l.n(),
        "sublattice size must match the lattice"
    );
    let members = m.members();

    if !m.contains(l.bottom()) {
        return Err(Error::NotCentralSubalgebra {
            flag: "contains-bounds",
            witnesses: vec![l.bottom()],
        });
    }
    if !m.contains(l.top()) {
        return Err(Error::NotCentralSubalgebra {
            flag: "contains-bounds",
            witnesses: vec![l.top()],
        });
    }
    for &x in &members {
        for &y in &members {
            if !m.contains(l.meet(x, y)) {
                return Err(Error::NotCentralSubalgebra {
                    flag: "meet-closed",
                    witnesses: vec![x, y],
                });
            }
            if !m.contains(l.join(x, y)) {
                return Err(Error::NotCentralSubalgebra {
                    flag: "join-closed",
                    witnesses: vec![x, y],
                });
            }
        }
    }
    if let Some(&x) = members.iter().find(|&&x| !m.contains(l.ortho(x))) {
        return Err(Error::NotCentralSubalgebra {
            flag: "complement-closed",
            witnesses: vec![x],
        });
    }
    let z = center(l);
    if let Some(&x) = members.iter().find(|&&x| !z.contains(x)) {
        return Err(Error::NotCentralSubalgebra {
            flag: "central",
            witnesses: vec![x],
        });
    }

    let image = l
        .elements()
        .map(|a| {
            members
                .iter()
                .filter(|&&x| l.leq(a, x))
                .fold(l.top(), |acc, &x| l.meet(acc, x))
        })
        .collect();
    Ok(Endomap::from_trusted_image(image))
}

/// Enumerate every endomap that passes [`check_bvb`], with default limits.
///
/// See [`enumerate_bvb_endos_with`].
pub fn enumerate_bvb_endos(l: &OmlTable) -> Result<Vec<Endomap>, Error> {
    enumerate_bvb_endos_with(l, ScanLimits::default())
}

/// Enumerate every endomap that passes [`check_bvb`].
///
/// Instead of filtering all `n^n` maps, the scan visits the `2^(n-1)`
/// subsets `S` containing top: a qualifying `j` is determined by its fixed
/// set via `j(a) = meet {x : j(x) = x, a <= x}`, and the fixed set of any
/// monotone idempotent map contains top and — when the meet-interchange
/// law holds — is meet-closed. Each meet-closed `S` induces the candidate
/// `j_S(a) = meet {x in S : a <= x}`, distinct `S` induce distinct
/// candidates (`j_S` fixes exactly `S`), and each candidate faces the full
/// [`check_bvb`]. Results arrive in ascending order of the fixed-set
/// bitmask.
///
/// Lattices larger than `limits.moore_scan_max_n` elements are rejected
/// with [`Error::SizeLimitExceeded`].
pub fn enumerate_bvb_endos_with(l: &OmlTable, limits: ScanLimits) -> Result<Vec<Endomap>, Error> {
    let n = l.n();
    let cap = limits.moore_scan_max_n.min(63);
    if n > cap {
        return Err(Error::SizeLimitExceeded {
            what: "fixed-set scan lattice size",
            required: n as u64,
            limit: cap as u64,
        });
    }

    let top = l.top();
    let mut out = Vec::new();
    let below_top = 1u64 << top; // bits strictly below the top position
    for raw in 0..1u64 << (n - 1) {
        // Spread `raw` over the non-top positions, then set the top bit.
        let mask = (raw & (below_top - 1)) | ((raw & !(below_top - 1)) << 1) | below_top;

        if !mask_is_meet_closed(l, mask) {
            continue;
        }
        let image: Vec<Elem> = l
            .elements()
            .map(|a| {
                let mut acc = top;
                let mut rest = mask;
                while rest != 0 {
                    let x = rest.trailing_zeros() as Elem;
                    rest &= rest - 1;
                    if l.leq(a, x) {
                        acc = l.meet(acc, x);
                    }
                }
                acc
            })
            .collect();
        let j = Endomap::from_trusted_image(image);
        if check_bvb(l, &j).passed() {
            out.push(j);
        }
    }
    Ok(out)
}

fn mask_is_meet_closed(l: &OmlTable, mask: u64) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let x = rest.trailing_zeros() as Elem;
        rest &= rest - 1;
        // Pairs with earlier members, plus the diagonal, are already done.
        let mut rest2 = rest;
        while rest2 != 0 {
            let y = rest2.trailing_zeros() as Elem;
            rest2 &= rest2 - 1;
            if mask & (1u64 << l.meet(x, y)) == 0 {
                return false;
            }
        }
    }
    true
}

/// Enumerate the central boolean subalgebras, with default limits.
///
/// See [`enumerate_central_boolean_subalgebras_with`].
pub fn enumerate_central_boolean_subalgebras(l: &OmlTable) -> Result<Vec<Sublattice>, Error> {
    enumerate_central_boolean_subalgebras_with(l, ScanLimits::default())
}

/// Enumerate every subset of the center that contains the bounds and is
/// closed under meet, join, and orthocomplement.
///
/// On a finite lattice these are exactly the complete boolean subalgebras
/// of the center: the center of an orthomodular lattice is itself a
/// boolean algebra, so distributivity is inherited rather than re-checked
/// here (though the returned [`Sublattice`] flags measure it anyway).
/// Results arrive in ascending order of the member bitmask.
///
/// Centers with more subsets than `limits.center_scan_max_subsets` are
/// rejected with [`Error::SizeLimitExceeded`].
pub fn enumerate_central_boolean_subalgebras_with(
    l: &OmlTable,
    limits: ScanLimits,
) -> Result<Vec<Sublattice>, Error> {
    let z = center(l);
    let zs = z.members();
    let m = zs.len();
    let subsets = if m >= 64 { u64::MAX } else { 1u64 << m };
    if m >= 64 || subsets > limits.center_scan_max_subsets {
        return Err(Error::SizeLimitExceeded {
            what: "center subset scan",
            required: subsets,
            limit: limits.center_scan_max_subsets,
        });
    }

    // Positions of the bounds within the ascending center member list.
    let bottom_pos = zs
        .iter()
        .position(|&e| e == l.bottom())
        .expect("bottom is central");
    let top_pos = zs
        .iter()
        .position(|&e| e == l.top())
        .expect("top is central");
    let required = (1u64 << bottom_pos) | (1u64 << top_pos);

    let mut pos_of = vec![usize::MAX; l.n()];
    for (p, &e) in zs.iter().enumerate() {
        pos_of[e] = p;
    }

    // The center is closed under meet, join, and orthocomplement, so these
    // lookups always land on a real position; the guard merely keeps a
    // hypothetical miss from turning into an oversized shift.
    let in_mask = |mask: u64, e: Elem| pos_of[e] != usize::MAX && mask & (1u64 << pos_of[e]) != 0;

    let mut out = Vec::new();
    'masks: for mask in 0..subsets {
        if mask & required != required {
            continue;
        }
        let mut rest = mask;
        while rest != 0 {
            let x = zs[rest.trailing_zeros() as usize];
            rest &= rest - 1;
            if !in_mask(mask, l.ortho(x)) {
                continue 'masks;
            }
            let mut rest2 = mask;
            while rest2 != 0 {
                let y = zs[rest2.trailing_zeros() as usize];
                rest2 &= rest2 - 1;
                if !in_mask(mask, l.meet(x, y)) || !in_mask(mask, l.join(x, y)) {
                    continue 'masks;
                }
            }
        }
        let mut members = Vec::new();
        let mut rest = mask;
        while rest != 0 {
            members.push(zs[rest.trailing_zeros() as usize]);
            rest &= rest - 1;
        }
        out.push(Sublattice::from_members(l, members).expect("center members are in range"));
    }
    Ok(out)
}

/// Everything [`verify_correspondence`] measured on one lattice.
///
/// `forward_roundtrips[i]` records whether subalgebra `i` survived the
/// round trip subalgebra → closure operator → fixed points; likewise
/// `backward_roundtrips[i]` for endomap `i` through its fixed points. The
/// overall verdict [`passed`](Self::passed) is computed from the parts,
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceReport {
    /// Every central boolean subalgebra, ascending by member bitmask.
    pub subalgebras: Vec<Sublattice>,
    /// Every endomap passing [`check_bvb`], ascending by fixed-set bitmask.
    pub endos: Vec<Endomap>,
    /// Per subalgebra: built the endomap, endomap passed `check_bvb`, and
    /// its fixed points are the subalgebra again.
    pub forward_roundtrips: Vec<bool>,
    /// Per endomap: fixed points form a central boolean subalgebra whose
    /// induced endomap is the original again.
    pub backward_roundtrips: Vec<bool>,
}

impl CorrespondenceReport {
    /// Whether both enumerations have the same length.
    pub fn counts_equal(&self) -> bool {
        self.subalgebras.len() == self.endos.len()
    }

    /// Whether the two enumerations are in verified bijection: equal
    /// counts and every round trip in both directions returned home.
    pub fn passed(&self) -> bool {
        self.counts_equal()
            && self.forward_roundtrips.iter().all(|&ok| ok)
            && self.backward_roundtrips.iter().all(|&ok| ok)
    }
}

impl Serialize for CorrespondenceReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CorrespondenceReport", 8)?;
        s.serialize_field("passed", &self.passed())?;
        s.serialize_field("counts_equal", &self.counts_equal())?;
        s.serialize_field("subalgebra_count", &self.subalgebras.len())?;
        s.serialize_field("endo_count", &self.endos.len())?;
        s.serialize_field("forward_roundtrips", &self.forward_roundtrips)?;
        s.serialize_field("backward_roundtrips", &self.backward_roundtrips)?;
        s.serialize_field("subalgebras", &self.subalgebras)?;
        s.serialize_field("endos", &self.endos)?;
        s.end()
    }
}

/// Enumerate both sides and round-trip every item, with default limits.
///
/// See [`verify_correspondence_with`].
pub fn verify_correspondence(l: &OmlTable) -> Result<CorrespondenceReport, Error> {
    verify_correspondence_with(l, ScanLimits::default())
}

/// Enumerate both sides of the correspondence and round-trip every item.
///
/// A failed round trip (including any error while rebuilding one side from
/// the other) degrades to `false` in the report rather than aborting the
/// run; `Err` is reserved for the scan limits.
pub fn verify_correspondence_with(
    l: &OmlTable,
    limits: ScanLimits,
) -> Result<CorrespondenceReport, Error> {
    let subalgebras = enumerate_central_boolean_subalgebras_with(l, limits)?;
    let endos = enumerate_bvb_endos_with(l, limits)?;

    let forward_roundtrips = subalgebras
        .iter()
        .map(|m| {
            endo_from_subalgebra(l, m)
                .ok()
                .filter(|j| check_bvb(l, j).passed())
                .and_then(|j| fixed_points(l, &j).ok())
                .is_some_and(|fixed| fixed == *m)
        })
        .collect();

    let backward_roundtrips = endos
        .iter()
        .map(|j| {
            fixed_points(l, j)
                .ok()
                .and_then(|fixed| endo_from_subalgebra(l, &fixed).ok())
                .is_some_and(|rebuilt| rebuilt == *j)
        })
        .collect();

    Ok(CorrespondenceReport {
        subalgebras,
        endos,
        forward_roundtrips,
        backward_roundtrips,
    })
}
