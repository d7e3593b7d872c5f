//! Exhaustive checks of the connective laws across the whole catalog.

use omlkit::{
    boolean_algebra, center, central_cover, compatible, finch_and, g12, mo, product, sasaki_hook,
    OmlTable,
};

/// Every catalog family member small enough for cubic scans.
fn catalog() -> Vec<(String, OmlTable)> {
    let mut out: Vec<(String, OmlTable)> = Vec::new();
    for k in 0..=4 {
        out.push((format!("B{k}"), boolean_algebra(k).unwrap()));
    }
    for n in 1..=4 {
        out.push((format!("MO{n}"), mo(n).unwrap()));
    }
    let mo2 = mo(2).unwrap();
    out.push((
        "MO2xB1".into(),
        product(&mo2, &boolean_algebra(1).unwrap()).unwrap(),
    ));
    out.push(("MO2xMO2".into(), product(&mo2, &mo2).unwrap()));
    out.push(("G12".into(), g12()));
    out
}

#[test]
fn product_and_hook_are_adjoint_everywhere() {
    for (name, l) in catalog() {
        for x in l.elements() {
            for b in l.elements() {
                for c in l.elements() {
                    let galois = l.leq(finch_and(&l, x, b), c) == l.leq(x, sasaki_hook(&l, b, c));
                    assert!(galois, "adjunction fails on {name} at ({x}, {b}, {c})");
                }
            }
        }
    }
}

#[test]
fn hook_and_product_stay_inside_expected_bounds() {
    for (name, l) in catalog() {
        for a in l.elements() {
            for b in l.elements() {
                let p = finch_and(&l, a, b);
                assert!(
                    l.leq(p, b),
                    "{name}: product must refine its right argument"
                );
                assert!(
                    l.leq(l.meet(a, b), p),
                    "{name}: product must dominate the meet"
                );
                let h = sasaki_hook(&l, a, b);
                assert!(
                    l.leq(l.ortho(a), h),
                    "{name}: hook must dominate the negation"
                );
            }
        }
    }
}

#[test]
fn boolean_algebras_collapse_to_classical_logic() {
    for k in 0..=4 {
        let b = boolean_algebra(k).unwrap();
        for a in b.elements() {
            for c in b.elements() {
                assert_eq!(finch_and(&b, a, c), b.meet(a, c));
                assert_eq!(sasaki_hook(&b, a, c), b.join(b.ortho(a), c));
                assert!(compatible(&b, a, c));
            }
        }
        assert_eq!(center(&b).len(), b.n());
    }
}

#[test]
fn horizontal_sums_forget_the_left_argument_across_blocks() {
    for n in 2..=4 {
        let m = mo(n).unwrap();
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                for &a in &[2 * i - 1, 2 * i] {
                    for &b in &[2 * j - 1, 2 * j] {
                        assert_eq!(finch_and(&m, a, b), b);
                        assert!(!compatible(&m, a, b));
                    }
                }
            }
        }
        assert_eq!(center(&m).members(), vec![0, 2 * n + 1]);
    }
}

#[test]
fn compatibility_is_symmetric_across_the_catalog() {
    for (name, l) in catalog() {
        for a in l.elements() {
            for b in l.elements() {
                assert_eq!(
                    compatible(&l, a, b),
                    compatible(&l, b, a),
                    "symmetry fails on {name} at ({a}, {b})"
                );
            }
        }
    }
}

#[test]
fn comparable_pairs_are_compatible() {
    for (name, l) in catalog() {
        for a in l.elements() {
            for b in l.elements() {
                if l.leq(a, b) || l.leq(b, a) {
                    assert!(compatible(&l, a, b), "{name}: comparable pair ({a}, {b})");
                }
            }
        }
    }
}

#[test]
fn central_cover_is_left_adjoint_to_inclusion_of_the_center() {
    for (name, l) in catalog() {
        let z = center(&l);
        for a in l.elements() {
            let c = central_cover(&l, a);
            assert!(z.contains(c));
            for zc in z.members() {
                assert_eq!(
                    l.leq(c, zc),
                    l.leq(a, zc),
                    "{name}: cover of {a} misses the galois property at {zc}"
                );
            }
        }
    }
}

#[test]
fn center_of_a_product_is_the_product_of_centers() {
    let mo2 = mo(2).unwrap();
    let b2 = boolean_algebra(2).unwrap();
    let p = product(&mo2, &b2).unwrap();
    let zm: Vec<usize> = center(&mo2).members();
    let zb: Vec<usize> = center(&b2).members();
    let nb = b2.n();
    let mut expected: Vec<usize> = zm
        .iter()
        .flat_map(|&x| zb.iter().map(move |&y| x * nb + y))
        .collect();
    expected.sort_unstable();
    assert_eq!(center(&p).members(), expected);
}
