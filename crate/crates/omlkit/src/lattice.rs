//! Finite lattice tables: build them from an order description, then verify
//! the orthomodular-lattice axioms element by element.
//!
//! The pipeline has two stages with a type boundary between them:
//!
//! 1. [`assemble_tables`] turns a [`LatticeSpec`] into [`LatticeTables`]:
//!    it closes cover pairs, checks the partial-order axioms, computes the
//!    meet/join tables, and locates bottom and top. The result is a plain
//!    data bundle with **no** orthomodular guarantee.
//! 2. [`validate_oml`] checks every remaining axiom (bounds, greatest lower
//!    bounds, orthocomplement laws, weak modularity) and reports each
//!    failure with a witness. [`build_lattice`] runs both stages and wraps
//!    a clean result in [`OmlTable`], the validated type the rest of the
//!    crate operates on.
//!
//! Elements are `0..n` and keep their input numbering everywhere: tables,
//! reports, and serialized output all refer to the same indices.
//!
//! ```
//! use omlkit::{build_lattice, Bound, LatticeSpec, OrderSpec};
//!
//! // The four-element boolean lattice as cover pairs.
//! let spec = LatticeSpec {
//!     n: 4,
//!     order: OrderSpec::Covers(vec![(0, 1), (0, 2), (1, 3), (2, 3)]),
//!     ortho: vec![3, 2, 1, 0],
//!     labels: None,
//! };
//! let l = build_lattice(&spec)?;
//! assert_eq!(l.meet(1, 2), 0);
//! assert_eq!(l.join(1, 2), 3);
//! assert_eq!(l.bound_of([1, 2, 3], Bound::Meet), 0);
//! assert_eq!(l.bound_of([], Bound::Join), l.bottom());
//! # Ok::<(), omlkit::Error>(())
//! ```

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::report::{axiom, ValidationReport, Violation};

/// Index of a lattice element.
///
/// All functions in this crate identify elements by their index in the
/// defining specification; nothing is ever renumbered.
pub type Elem = usize;

/// Hard ceiling on lattice size. Meet and join are stored as full `n x n`
/// tables, so memory grows quadratically; this cap keeps a single lattice
/// around 135 MB in the worst case.
pub const MAX_ELEMENTS: usize = 4096;

/// Which bound [`LatticeTables::bound_of`] computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    /// Greatest lower bound; the empty family yields top.
    Meet,
    /// Least upper bound; the empty family yields bottom.
    Join,
}

/// Input description of a finite ordered set with an orthocomplement map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSpec {
    /// Number of elements; indices run over `0..n`.
    pub n: usize,
    /// The order, as a full relation or as cover pairs.
    pub order: OrderSpec,
    /// `ortho[a]` is the proposed orthocomplement of `a`.
    pub ortho: Vec<Elem>,
    /// Optional display names, one per element; indices are used if absent.
    pub labels: Option<Vec<String>>,
}

/// The order part of a [`LatticeSpec`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderSpec {
    /// `rows[a][b]` is true when `a <= b`. Must be `n x n`.
    Leq(Vec<Vec<bool>>),
    /// Pairs `(lower, upper)` whose reflexive-transitive closure is the
    /// order. Listing only the covering pairs is conventional, but any
    /// acyclic set of strict comparabilities closes to the same relation.
    Covers(Vec<(Elem, Elem)>),
}

/// Assembled order, meet, join, and orthocomplement tables.
///
/// This is the *unvalidated* stage: the order axioms were enforced during
/// [`assemble_tables`], but nothing beyond them is promised, and the
/// mutators ([`set_ortho`](Self::set_ortho), ...) can deliberately damage
/// any table. Run [`validate_oml`] to find out what holds; see [`OmlTable`]
/// for the validated wrapper.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeTables {
    n: usize,
    /// `up[a]` is the bitset of all `b` with `a <= b`.
    up: Vec<FixedBitSet>,
    /// `down[a]` is the bitset of all `b` with `b <= a`.
    down: Vec<FixedBitSet>,
    /// Row-major `n x n` meet table.
    meet: Vec<u32>,
    /// Row-major `n x n` join table.
    join: Vec<u32>,
    ortho: Vec<u32>,
    bottom: u32,
    top: u32,
    labels: Vec<String>,
}

impl LatticeTables {
    #[inline]
    fn idx(&self, a: Elem, b: Elem) -> usize {
        debug_assert!(a < self.n && b < self.n);
        a * self.n + b
    }

    /// Number of elements.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Iterator over all element indices, `0..n`.
    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    /// Whether `a <= b`.
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.up[a].contains(b)
    }

    /// Greatest lower bound of `a` and `b` (by table lookup).
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[self.idx(a, b)] as Elem
    }

    /// Least upper bound of `a` and `b` (by table lookup).
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[self.idx(a, b)] as Elem
    }

    /// Orthocomplement of `a`.
    pub fn ortho(&self, a: Elem) -> Elem {
        self.ortho[a] as Elem
    }

    /// The least element.
    pub fn bottom(&self) -> Elem {
        self.bottom as Elem
    }

    /// The greatest element.
    pub fn top(&self) -> Elem {
        self.top as Elem
    }

    /// Display name of `a`.
    pub fn label(&self, a: Elem) -> &str {
        &self.labels[a]
    }

    /// All display names, indexed by element.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Greatest lower / least upper bound of an arbitrary family.
    ///
    /// Follows the usual conventions for the empty family: its meet is top
    /// and its join is bottom.
    ///
    /// # Panics
    ///
    /// Panics if an index is out of range.
    pub fn bound_of(&self, elems: impl IntoIterator<Item = Elem>, bound: Bound) -> Elem {
        match bound {
            Bound::Meet => elems
                .into_iter()
                .fold(self.top(), |acc, e| self.meet(acc, e)),
            Bound::Join => elems
                .into_iter()
                .fold(self.bottom(), |acc, e| self.join(acc, e)),
        }
    }

    /// Replace the orthocomplement map wholesale.
    ///
    /// This is a diagnostic escape hatch: it lets tests and experiments
    /// construct tables that *fail* [`validate_oml`] in controlled ways.
    ///
    /// # Panics
    ///
    /// Panics if `ortho` has the wrong length or contains an out-of-range
    /// index.
    pub fn set_ortho(&mut self, ortho: Vec<Elem>) {
        assert_eq!(ortho.len(), self.n, "ortho must have one entry per element");
        assert!(
            ortho.iter().all(|&o| o < self.n),
            "ortho entries must be element indices"
        );
        self.ortho = ortho.into_iter().map(|o| o as u32).collect();
    }

    /// Overwrite one meet-table entry. Diagnostic escape hatch; the caller
    /// is responsible for symmetry if both orders matter.
    ///
    /// # Panics
    ///
    /// Panics if an index is out of range.
    pub fn set_meet_entry(&mut self, a: Elem, b: Elem, value: Elem) {
        assert!(value < self.n, "value must be an element index");
        let i = self.idx(a, b);
        self.meet[i] = value as u32;
    }

    /// Overwrite one join-table entry. Diagnostic escape hatch.
    ///
    /// # Panics
    ///
    /// Panics if an index is out of range.
    pub fn set_join_entry(&mut self, a: Elem, b: Elem, value: Elem) {
        assert!(value < self.n, "value must be an element index");
        let i = self.idx(a, b);
        self.join[i] = value as u32;
    }
}

/// A fully validated orthomodular lattice.
///
/// The only ways to obtain one are [`build_lattice`] and the catalog
/// constructors, both of which run the complete axiom check first, so every
/// function that takes `&OmlTable` may assume all invariants hold. Derefs
/// to [`LatticeTables`] for read access.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmlTable {
    tables: LatticeTables,
}

impl std::ops::Deref for OmlTable {
    type Target = LatticeTables;

    fn deref(&self) -> &LatticeTables {
        &self.tables
    }
}

impl AsRef<LatticeTables> for OmlTable {
    fn as_ref(&self) -> &LatticeTables {
        &self.tables
    }
}

impl OmlTable {
    /// Give up the validation guarantee and take the raw tables, e.g. to
    /// damage them deliberately before re-running [`validate_oml`].
    pub fn into_tables(self) -> LatticeTables {
        self.tables
    }
}

/// Close cover pairs, check the order axioms, and derive all tables.
///
/// Fails with [`Error::NotAPoset`] (reflexivity, antisymmetry, transitivity,
/// or a cycle among covers) or [`Error::NotALattice`] (a pair without a
/// greatest lower or least upper bound), each carrying a witness. Performs
/// **no** orthocomplement or orthomodularity checks; see [`build_lattice`].
pub fn assemble_tables(spec: &LatticeSpec) -> Result<LatticeTables, Error> {
    let n = spec.n;
    if n == 0 {
        return Err(Error::MalformedInput(
            "element count must be positive".into(),
        ));
    }
    if n > MAX_ELEMENTS {
        return Err(Error::SizeLimitExceeded {
            what: "lattice size",
            required: n as u64,
            limit: MAX_ELEMENTS as u64,
        });
    }
    if spec.ortho.len() != n {
        return Err(Error::MalformedInput(format!(
            "ortho has {} entries, expected {n}",
            spec.ortho.len()
        )));
    }
    if let Some(&bad) = spec.ortho.iter().find(|&&o| o >= n) {
        return Err(Error::IndexOutOfRange {
            what: "ortho entry",
            index: bad,
            n,
        });
    }
    if let Some(labels) = &spec.labels {
        if labels.len() != n {
            return Err(Error::MalformedInput(format!(
                "labels has {} entries, expected {n}",
                labels.len()
            )));
        }
    }

    let up = match &spec.order {
        OrderSpec::Covers(pairs) => up_sets_from_covers(n, pairs)?,
        OrderSpec::Leq(rows) => up_sets_from_leq(n, rows)?,
    };

    let mut down = vec![FixedBitSet::with_capacity(n); n];
    for (a, ups) in up.iter().enumerate() {
        for b in ups.ones() {
            down[b].insert(a);
        }
    }

    let down_pop: Vec<u32> = down.iter().map(|s| s.count_ones(..) as u32).collect();
    let up_pop: Vec<u32> = up.iter().map(|s| s.count_ones(..) as u32).collect();

    let mut meet = vec![0u32; n * n];
    let mut join = vec![0u32; n * n];
    let mut scratch = FixedBitSet::with_capacity(n);
    for a in 0..n {
        for b in a..n {
            scratch.clone_from(&down[a]);
            scratch.intersect_with(&down[b]);
            let size = scratch.count_ones(..) as u32;
            let glb = scratch
                .ones()
                .find(|&m| down_pop[m] == size)
                .ok_or_else(|| {
                    Error::NotALattice(Violation::new(axiom::LATTICE_MEET, vec![a, b]))
                })?;
            meet[a * n + b] = glb as u32;
            meet[b * n + a] = glb as u32;

            scratch.clone_from(&up[a]);
            scratch.intersect_with(&up[b]);
            let size = scratch.count_ones(..) as u32;
            let lub = scratch.ones().find(|&j| up_pop[j] == size).ok_or_else(|| {
                Error::NotALattice(Violation::new(axiom::LATTICE_JOIN, vec![a, b]))
            })?;
            join[a * n + b] = lub as u32;
            join[b * n + a] = lub as u32;
        }
    }

    let bottom = (1..n).fold(0, |acc, e| meet[acc * n + e] as usize);
    let top = (1..n).fold(0, |acc, e| join[acc * n + e] as usize);

    let labels = match &spec.labels {
        Some(labels) => labels.clone(),
        None => (0..n).map(|e| e.to_string()).collect(),
    };

    Ok(LatticeTables {
        n,
        up,
        down,
        meet,
        join,
        ortho: spec.ortho.iter().map(|&o| o as u32).collect(),
        bottom: bottom as u32,
        top: top as u32,
        labels,
    })
}

/// Reflexive-transitive closure of cover pairs, as up-sets.
fn up_sets_from_covers(n: usize, covers: &[(Elem, Elem)]) -> Result<Vec<FixedBitSet>, Error> {
    let mut succ: Vec<Vec<u32>> = vec![Vec::new(); n];
    for &(lo, hi) in covers {
        if lo >= n {
            return Err(Error::IndexOutOfRange {
                what: "cover pair entry",
                index: lo,
                n,
            });
        }
        if hi >= n {
            return Err(Error::IndexOutOfRange {
                what: "cover pair entry",
                index: hi,
                n,
            });
        }
        if lo == hi {
            // A self-loop makes `lo` strictly below itself after closure.
            return Err(Error::NotAPoset(Violation::new(
                axiom::POSET_ANTISYMMETRIC,
                vec![lo],
            )));
        }
        succ[lo].push(hi as u32);
    }

    // Kahn's algorithm; leftovers mean a cycle, i.e. antisymmetry dies.
    let mut indegree = vec![0u32; n];
    for tails in &succ {
        for &h in tails {
            indegree[h as usize] += 1;
        }
    }
    let mut queue: Vec<usize> = (0..n).filter(|&e| indegree[e] == 0).collect();
    let mut topo = Vec::with_capacity(n);
    while let Some(e) = queue.pop() {
        topo.push(e);
        for &h in &succ[e] {
            indegree[h as usize] -= 1;
            if indegree[h as usize] == 0 {
                queue.push(h as usize);
            }
        }
    }
    if topo.len() < n {
        let cycle = find_cycle(&succ);
        return Err(Error::NotAPoset(Violation::new(
            axiom::POSET_ANTISYMMETRIC,
            cycle,
        )));
    }

    let mut up = vec![FixedBitSet::with_capacity(n); n];
    for &e in topo.iter().rev() {
        let mut acc = std::mem::take(&mut up[e]);
        acc.insert(e);
        for &h in &succ[e] {
            acc.union_with(&up[h as usize]);
        }
        up[e] = acc;
    }
    Ok(up)
}

/// Depth-first search for a back edge; returns the nodes on the cycle it
/// closes. Must only be called when a cycle exists.
fn find_cycle(succ: &[Vec<u32>]) -> Vec<Elem> {
    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Gray,
        Black,
    }
    let n = succ.len();
    let mut color = vec![Color::White; n];
    for root in 0..n {
        if color[root] != Color::White {
            continue;
        }
        let mut path = vec![root];
        let mut stack = vec![(root, 0usize)];
        color[root] = Color::Gray;
        while let Some(frame) = stack.last_mut() {
            let node = frame.0;
            if frame.1 < succ[node].len() {
                let next = succ[node][frame.1] as usize;
                frame.1 += 1;
                match color[next] {
                    Color::White => {
                        color[next] = Color::Gray;
                        path.push(next);
                        stack.push((next, 0));
                    }
                    Color::Gray => {
                        let first = path
                            .iter()
                            .position(|&e| e == next)
                            .expect("gray node is on the path");
                        return path[first..].to_vec();
                    }
                    Color::Black => {}
                }
            } else {
                color[node] = Color::Black;
                path.pop();
                stack.pop();
            }
        }
    }
    unreachable!("no cycle found")
}

/// Check a full relation for the partial-order axioms; return it as up-sets.
fn up_sets_from_leq(n: usize, rows: &[Vec<bool>]) -> Result<Vec<FixedBitSet>, Error> {
    if rows.len() != n {
        return Err(Error::MalformedInput(format!(
            "leq has {} rows, expected {n}",
            rows.len()
        )));
    }
    let mut up = Vec::with_capacity(n);
    for (a, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedInput(format!(
                "leq row {a} has {} entries, expected {n}",
                row.len()
            )));
        }
        let mut set = FixedBitSet::with_capacity(n);
        for (b, &le) in row.iter().enumerate() {
            if le {
                set.insert(b);
            }
        }
        up.push(set);
    }

    if let Some(v) = first_poset_failure(&up) {
        return Err(Error::NotAPoset(v));
    }
    Ok(up)
}

/// First reflexivity, antisymmetry, or transitivity failure of `up`, if any.
fn first_poset_failure(up: &[FixedBitSet]) -> Option<Violation> {
    let n = up.len();
    for (a, ups) in up.iter().enumerate() {
        if !ups.contains(a) {
            return Some(Violation::new(axiom::POSET_REFLEXIVE, vec![a]));
        }
    }
    for a in 0..n {
        for b in (a + 1)..n {
            if up[a].contains(b) && up[b].contains(a) {
                return Some(Violation::new(axiom::POSET_ANTISYMMETRIC, vec![a, b]));
            }
        }
    }
    for a in 0..n {
        for b in up[a].ones() {
            if !up[b].is_subset(&up[a]) {
                let c = up[b]
                    .ones()
                    .find(|&c| !up[a].contains(c))
                    .expect("subset check failed");
                return Some(Violation::new(axiom::POSET_TRANSITIVE, vec![a, b, c]));
            }
        }
    }
    None
}

/// Check every orthomodular-lattice axiom against the stored tables.
///
/// Covers the partial-order axioms, the designated bounds, correctness of
/// the meet and join tables as greatest lower / least upper bounds, the
/// orthocomplement laws (involution, antitonicity, De Morgan, both
/// complement laws), and weak modularity. Each failed axiom contributes one
/// [`Violation`] with the first witness in ascending scan order.
///
/// Tables straight out of [`assemble_tables`] pass the order and bound
/// checks by construction; the function re-checks them anyway so it gives a
/// complete verdict on arbitrary (possibly deliberately damaged) tables.
pub fn validate_oml(t: &LatticeTables) -> ValidationReport {
    let n = t.n;
    let mut report = ValidationReport::default();

    if let Some(v) = first_poset_failure(&t.up) {
        report.violations.push(v);
    }

    if let Some(x) = (0..n).find(|&x| !t.leq(t.bottom(), x)) {
        report.push(axiom::BOUNDS_BOTTOM, vec![x]);
    }
    if let Some(x) = (0..n).find(|&x| !t.leq(x, t.top())) {
        report.push(axiom::BOUNDS_TOP, vec![x]);
    }

    let mut scratch = FixedBitSet::with_capacity(n);
    'meets: for a in 0..n {
        for b in 0..n {
            let m = t.meet(a, b);
            scratch.clone_from(&t.down[a]);
            scratch.intersect_with(&t.down[b]);
            if !scratch.contains(m) || !scratch.is_subset(&t.down[m]) {
                report.push(axiom::LATTICE_MEET, vec![a, b]);
                break 'meets;
            }
        }
    }
    'joins: for a in 0..n {
        for b in 0..n {
            let j = t.join(a, b);
            scratch.clone_from(&t.up[a]);
            scratch.intersect_with(&t.up[b]);
            if !scratch.contains(j) || !scratch.is_subset(&t.up[j]) {
                report.push(axiom::LATTICE_JOIN, vec![a, b]);
                break 'joins;
            }
        }
    }

    if let Some(a) = (0..n).find(|&a| t.ortho(t.ortho(a)) != a) {
        report.push(axiom::ORTHO_INVOLUTION, vec![a]);
    }

    'antitone: for a in 0..n {
        for b in t.up[a].ones() {
            if !t.leq(t.ortho(b), t.ortho(a)) {
                report.push(axiom::ORTHO_ANTITONE, vec![a, b]);
                break 'antitone;
            }
        }
    }

    'de_morgan: for a in 0..n {
        for b in 0..n {
            if t.ortho(t.join(a, b)) != t.meet(t.ortho(a), t.ortho(b)) {
                report.push(axiom::DE_MORGAN, vec![a, b]);
                break 'de_morgan;
            }
        }
    }

    if let Some(a) = (0..n).find(|&a| t.join(a, t.ortho(a)) != t.top()) {
        report.push(axiom::COMPLEMENT_JOIN, vec![a]);
    }
    if let Some(a) = (0..n).find(|&a| t.meet(a, t.ortho(a)) != t.bottom()) {
        report.push(axiom::COMPLEMENT_MEET, vec![a]);
    }

    // Weak modularity: a <= b implies b = a v (a' ^ b).
    'om: for a in 0..n {
        for b in t.up[a].ones() {
            if t.join(a, t.meet(t.ortho(a), b)) != b {
                report.push(axiom::ORTHOMODULAR, vec![a, b]);
                break 'om;
            }
        }
    }

    report
}

/// Assemble and fully validate; the one-call path to an [`OmlTable`].
///
/// On failure the error carries the first violation: [`Error::NotAPoset`],
/// [`Error::NotALattice`], [`Error::NotOrtholattice`], or
/// [`Error::NotOrthomodular`]. For a complete list of violations use
/// [`validate_spec`] or [`validate_oml`] instead.
pub fn build_lattice(spec: &LatticeSpec) -> Result<OmlTable, Error> {
    let tables = assemble_tables(spec)?;
    let report = validate_oml(&tables);
    if let Some(first) = report.violations.into_iter().next() {
        return Err(classify(first));
    }
    Ok(OmlTable { tables })
}

/// Wrap a violation in the matching error variant.
fn classify(v: Violation) -> Error {
    match v.axiom_id.as_str() {
        axiom::POSET_REFLEXIVE | axiom::POSET_ANTISYMMETRIC | axiom::POSET_TRANSITIVE => {
            Error::NotAPoset(v)
        }
        axiom::BOUNDS_BOTTOM | axiom::BOUNDS_TOP | axiom::LATTICE_MEET | axiom::LATTICE_JOIN => {
            Error::NotALattice(v)
        }
        axiom::ORTHOMODULAR => Error::NotOrthomodular(v),
        _ => Error::NotOrtholattice(v),
    }
}

/// Full diagnostic run on a specification.
///
/// Mathematical failures come back inside the report (order axioms as well
/// as lattice, orthocomplement, and orthomodularity violations). `Err` is
/// reserved for inputs that are not a well-formed specification at all:
/// wrong vector lengths, out-of-range indices, or the size cap.
pub fn validate_spec(spec: &LatticeSpec) -> Result<ValidationReport, Error> {
    match assemble_tables(spec) {
        Ok(tables) => Ok(validate_oml(&tables)),
        Err(Error::NotAPoset(v)) | Err(Error::NotALattice(v)) => Ok(ValidationReport {
            violations: vec![v],
        }),
        Err(other) => Err(other),
    }
}

// ---------------------------------------------------------------------------
// JSON format
// ---------------------------------------------------------------------------

/// On-disk JSON shape of a lattice.
///
/// Exactly one of `covers` and `leq` must be present. `leq` rows hold `0`
/// and `1` only. `labels` is optional.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LatticeJson {
    name: String,
    n: usize,
    #[serde(default)]
    covers: Option<Vec<(usize, usize)>>,
    #[serde(default)]
    leq: Option<Vec<Vec<u8>>>,
    ortho: Vec<usize>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

#[derive(Serialize)]
struct LatticeJsonOut<'a> {
    name: &'a str,
    n: usize,
    leq: Vec<Vec<u8>>,
    ortho: Vec<usize>,
    labels: &'a [String],
}

/// Parse the JSON lattice format into a name and a [`LatticeSpec`].
///
/// The format is strict: unknown fields are rejected, exactly one of
/// `covers` and `leq` must be present, and `leq` entries must be `0` or
/// `1`. Length errors against `n` are left to [`assemble_tables`].
///
/// ```
/// use omlkit::{build_lattice, parse_lattice_json};
///
/// let text = r#"{
///     "name": "C2",
///     "n": 2,
///     "covers": [[0, 1]],
///     "ortho": [1, 0]
/// }"#;
/// let (name, spec) = parse_lattice_json(text)?;
/// assert_eq!(name, "C2");
/// assert!(build_lattice(&spec).is_ok());
/// # Ok::<(), omlkit::Error>(())
/// ```
pub fn parse_lattice_json(text: &str) -> Result<(String, LatticeSpec), Error> {
    let raw: LatticeJson =
        serde_json::from_str(text).map_err(|e| Error::MalformedInput(e.to_string()))?;
    let order = match (raw.covers, raw.leq) {
        (Some(covers), None) => OrderSpec::Covers(covers),
        (None, Some(rows)) => {
            let mut out = Vec::with_capacity(rows.len());
            for (i, row) in rows.into_iter().enumerate() {
                let mut bools = Vec::with_capacity(row.len());
                for (j, v) in row.into_iter().enumerate() {
                    match v {
                        0 => bools.push(false),
                        1 => bools.push(true),
                        other => {
                            return Err(Error::MalformedInput(format!(
                                "leq[{i}][{j}] is {other}, expected 0 or 1"
                            )))
                        }
                    }
                }
                out.push(bools);
            }
            OrderSpec::Leq(out)
        }
        (None, None) | (Some(_), Some(_)) => {
            return Err(Error::MalformedInput(
                "exactly one of \"covers\" and \"leq\" must be present".into(),
            ))
        }
    };
    let spec = LatticeSpec {
        n: raw.n,
        order,
        ortho: raw.ortho,
        labels: raw.labels,
    };
    Ok((raw.name, spec))
}

/// Serialize tables to the canonical JSON lattice form.
///
/// The output always uses the `leq` field, lists every field in a fixed
/// order, and contains no whitespace, so equal tables serialize to
/// byte-identical text. Feeding the text back through
/// [`parse_lattice_json`] and [`build_lattice`] reproduces the tables.
pub fn lattice_to_json(name: &str, t: &LatticeTables) -> String {
    let n = t.n();
    let leq: Vec<Vec<u8>> = (0..n)
        .map(|a| (0..n).map(|b| u8::from(t.leq(a, b))).collect())
        .collect();
    let out = LatticeJsonOut {
        name,
        n,
        leq,
        ortho: (0..n).map(|a| t.ortho(a)).collect(),
        labels: t.labels(),
    };
    serde_json::to_string(&out).expect("plain data serializes")
}
