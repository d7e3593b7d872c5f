//! Ready-made lattice families: boolean power sets, horizontal sums, and
//! direct products.
//!
//! Every constructor funnels through [`build_lattice`], so a catalog table
//! carries the same validation guarantee as one built from a hand-written
//! specification — the constructors cannot hand out an invalid [`OmlTable`].
//!
//! Element numbering is part of each constructor's contract and is relied
//! on by tests and serialized output:
//!
//! * [`boolean_algebra`]`(k)`: element `e` is the subset of atoms whose bits
//!   are set in `e`, so `0` is bottom, `2^k - 1` is top, and meet/join are
//!   bitwise and/or of indices.
//! * [`mo`]`(n)`: `0` is bottom, the atoms come in complementary pairs
//!   `a_i = 2i - 1`, `a_i' = 2i` for `i = 1..=n`, and `2n + 1` is top.
//! * [`product`]`(a, b)`: the pair `(x, y)` sits at index `x * b.n() + y`.
//!
//! ```
//! use omlkit::{boolean_algebra, mo, product};
//!
//! let b2 = boolean_algebra(2)?;
//! assert_eq!(b2.meet(1, 2), 1 & 2);
//! assert_eq!(b2.join(1, 2), 1 | 2);
//!
//! let mo2 = mo(2)?;
//! assert_eq!(mo2.meet(1, 3), mo2.bottom()); // distinct atom pairs clash to 0
//!
//! let p = product(&mo2, &b2)?;
//! assert_eq!(p.n(), 24);
//! # Ok::<(), omlkit::Error>(())
//! ```

use crate::error::Error;
use crate::lattice::{build_lattice, LatticeSpec, OmlTable, OrderSpec, MAX_ELEMENTS};

/// The power set of `k` atoms, ordered by inclusion.
///
/// Element indices are the subset bitmasks themselves; the orthocomplement
/// is bitwise complement. `k = 0` gives the one-element lattice. Fails with
/// [`Error::SizeLimitExceeded`] when `2^k` exceeds [`MAX_ELEMENTS`].
pub fn boolean_algebra(k: usize) -> Result<OmlTable, Error> {
    let required = if k >= 64 { u64::MAX } else { 1u64 << k };
    if required > MAX_ELEMENTS as u64 {
        return Err(Error::SizeLimitExceeded {
            what: "catalog lattice size",
            required,
            limit: MAX_ELEMENTS as u64,
        });
    }
    let n = 1usize << k;
    let full = n - 1;
    let leq = (0..n)
        .map(|a| (0..n).map(|b| a & b == a).collect())
        .collect();
    let labels = (0..n).map(|e| subset_label(e, k)).collect();
    let spec = LatticeSpec {
        n,
        order: OrderSpec::Leq(leq),
        ortho: (0..n).map(|e| full ^ e).collect(),
        labels: Some(labels),
    };
    build_lattice(&spec)
}

fn subset_label(e: usize, k: usize) -> String {
    let atoms: Vec<String> = (0..k)
        .filter(|i| e >> i & 1 == 1)
        .map(|i| i.to_string())
        .collect();
    format!("{{{}}}", atoms.join(","))
}

/// The horizontal sum of `n` four-element blocks: bottom, top, and `n`
/// complementary atom pairs with no other comparabilities.
///
/// For `n >= 2` this is the standard small example of an orthomodular
/// lattice that is not boolean; `mo(1)` is boolean (it is the power set of
/// two points up to isomorphism). Requires `n >= 1`.
pub fn mo(n_pairs: usize) -> Result<OmlTable, Error> {
    if n_pairs == 0 {
        return Err(Error::PreconditionViolated(
            "mo requires at least one atom pair".into(),
        ));
    }
    let required = (n_pairs as u64).saturating_mul(2).saturating_add(2);
    if required > MAX_ELEMENTS as u64 {
        return Err(Error::SizeLimitExceeded {
            what: "catalog lattice size",
            required,
            limit: MAX_ELEMENTS as u64,
        });
    }
    let n = 2 * n_pairs + 2;
    let top = n - 1;
    let mut covers = Vec::with_capacity(2 * (n - 2));
    let mut ortho = vec![0; n];
    ortho[0] = top;
    ortho[top] = 0;
    let mut labels = vec!["0".to_string()];
    for i in 1..=n_pairs {
        let atom = 2 * i - 1;
        covers.push((0, atom));
        covers.push((0, atom + 1));
        covers.push((atom, top));
        covers.push((atom + 1, top));
        ortho[atom] = atom + 1;
        ortho[atom + 1] = atom;
        labels.push(format!("a{i}"));
        labels.push(format!("a{i}'"));
    }
    labels.push("1".to_string());
    let spec = LatticeSpec {
        n,
        order: OrderSpec::Covers(covers),
        ortho,
        labels: Some(labels),
    };
    build_lattice(&spec)
}

/// Direct product: componentwise order, meets, joins, and orthocomplement.
///
/// The pair `(x, y)` lives at index `x * b.n() + y`, and its label joins
/// the component labels as `(lx,ly)`. Fails with
/// [`Error::SizeLimitExceeded`] when `a.n() * b.n()` exceeds
/// [`MAX_ELEMENTS`].
pub fn product(a: &OmlTable, b: &OmlTable) -> Result<OmlTable, Error> {
    let (na, nb) = (a.n(), b.n());
    let required = (na as u64) * (nb as u64);
    if required > MAX_ELEMENTS as u64 {
        return Err(Error::SizeLimitExceeded {
            what: "catalog lattice size",
            required,
            limit: MAX_ELEMENTS as u64,
        });
    }
    let n = na * nb;
    let leq = (0..n)
        .map(|i| {
            let (x1, y1) = (i / nb, i % nb);
            (0..n)
                .map(|j| {
                    let (x2, y2) = (j / nb, j % nb);
                    a.leq(x1, x2) && b.leq(y1, y2)
                })
                .collect()
        })
        .collect();
    let ortho = (0..n)
        .map(|i| a.ortho(i / nb) * nb + b.ortho(i % nb))
        .collect();
    let labels = (0..n)
        .map(|i| format!("({},{})", a.label(i / nb), b.label(i % nb)))
        .collect();
    let spec = LatticeSpec {
        n,
        order: OrderSpec::Leq(leq),
        ortho,
        labels: Some(labels),
    };
    build_lattice(&spec)
}

/// The twelve-element product of [`mo`]`(2)` with the two-element boolean
/// algebra.
///
/// This is the smallest member of the catalog whose center is neither
/// trivial nor everything, which makes it the go-to example for the
/// subalgebra/endomorphism correspondence. The factor order matches
/// [`product`]: element `(x, y)` of `mo(2) x B1` sits at `2x + y`.
pub fn g12() -> OmlTable {
    let mo2 = mo(2).expect("mo(2) is well below the size limit");
    let b1 = boolean_algebra(1).expect("B1 is well below the size limit");
    product(&mo2, &b1).expect("12 elements is well below the size limit")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::validate_oml;

    #[test]
    fn boolean_algebra_is_bitwise() {
        let b3 = boolean_algebra(3).unwrap();
        assert_eq!(b3.n(), 8);
        assert_eq!(b3.bottom(), 0);
        assert_eq!(b3.top(), 7);
        for a in b3.elements() {
            assert_eq!(b3.ortho(a), 7 ^ a);
            for b in b3.elements() {
                assert_eq!(b3.meet(a, b), a & b);
                assert_eq!(b3.join(a, b), a | b);
                assert_eq!(b3.leq(a, b), a & b == a);
            }
        }
        assert_eq!(b3.label(0), "{}");
        assert_eq!(b3.label(5), "{0,2}");
        assert_eq!(b3.label(7), "{0,1,2}");
    }

    #[test]
    fn boolean_algebra_degenerate_and_oversize() {
        let b0 = boolean_algebra(0).unwrap();
        assert_eq!(b0.n(), 1);
        assert!(validate_oml(&b0).passed());

        match boolean_algebra(13) {
            Err(Error::SizeLimitExceeded {
                required, limit, ..
            }) => {
                assert_eq!(required, 8192);
                assert_eq!(limit, 4096);
            }
            other => panic!("expected SizeLimitExceeded, got {other:?}"),
        }
        assert!(matches!(
            boolean_algebra(200),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn mo_layout_matches_the_documented_numbering() {
        let m = mo(3).unwrap();
        assert_eq!(m.n(), 8);
        assert_eq!(m.bottom(), 0);
        assert_eq!(m.top(), 7);
        for i in 1..=3 {
            let atom = 2 * i - 1;
            assert_eq!(m.ortho(atom), atom + 1);
            assert_eq!(m.ortho(atom + 1), atom);
            assert_eq!(m.label(atom), format!("a{i}"));
            assert_eq!(m.label(atom + 1), format!("a{i}'"));
        }
        // Distinct blocks only meet at the bounds.
        assert_eq!(m.meet(1, 3), 0);
        assert_eq!(m.join(1, 3), 7);
        assert_eq!(m.meet(1, 2), 0);
        assert_eq!(m.join(1, 2), 7);
        assert!(!m.leq(1, 3));
    }

    #[test]
    fn mo_rejects_zero_pairs() {
        assert!(matches!(mo(0), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn product_is_componentwise() {
        let m = mo(2).unwrap();
        let b = boolean_algebra(1).unwrap();
        let p = product(&m, &b).unwrap();
        assert_eq!(p.n(), 12);
        for x in m.elements() {
            for y in b.elements() {
                let i = x * 2 + y;
                assert_eq!(p.ortho(i), m.ortho(x) * 2 + b.ortho(y));
                assert_eq!(p.label(i), format!("({},{})", m.label(x), b.label(y)));
                for x2 in m.elements() {
                    for y2 in b.elements() {
                        let j = x2 * 2 + y2;
                        assert_eq!(p.meet(i, j), m.meet(x, x2) * 2 + b.meet(y, y2));
                        assert_eq!(p.join(i, j), m.join(x, x2) * 2 + b.join(y, y2));
                    }
                }
            }
        }
    }

    #[test]
    fn product_size_limit() {
        let b6 = boolean_algebra(6).unwrap();
        let b7 = boolean_algebra(7).unwrap();
        // 64 * 128 = 8192 > 4096
        assert!(matches!(
            product(&b6, &b7),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn g12_is_the_documented_product() {
        let g = g12();
        assert_eq!(g.n(), 12);
        assert!(validate_oml(&g).passed());
        let m = mo(2).unwrap();
        let b = boolean_algebra(1).unwrap();
        assert_eq!(g, product(&m, &b).unwrap());
        assert_eq!(g.label(0), "(0,{})");
        assert_eq!(g.label(11), "(1,{0})");
    }
}
