//! Independent oracles for the enumeration machinery.
//!
//! The subset-scan enumeration is clever, so it gets checked the dumb way:
//! against a filter over *all* `n^n` endomaps on small lattices, and
//! against the partition model of boolean subalgebras.

use std::collections::BTreeSet;

use omlkit::{
    boolean_algebra, center, check_bvb, check_quantale_axioms, enumerate_bvb_endos,
    enumerate_central_boolean_subalgebras, fixed_point_locale_check, fixed_points, g12, mo,
    product, quantale_from_endo, Endomap, OmlTable,
};

/// Run `f` on every image vector of an endomap on `n` elements.
fn for_each_image(n: usize, mut f: impl FnMut(&[usize])) {
    let mut image = vec![0usize; n];
    loop {
        f(&image);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            image[i] += 1;
            if image[i] < n {
                break;
            }
            image[i] = 0;
            i += 1;
        }
    }
}

/// Filter all `n^n` maps through `check_bvb` and compare with the scan.
fn brute_force_matches_enumeration(l: &OmlTable) -> usize {
    let enumerated: BTreeSet<Vec<usize>> = enumerate_bvb_endos(l)
        .unwrap()
        .iter()
        .map(|j| j.image().to_vec())
        .collect();

    let mut passing = BTreeSet::new();
    for_each_image(l.n(), |img| {
        let j = Endomap::new(l, img.to_vec()).unwrap();
        if check_bvb(l, &j).passed() {
            passing.insert(img.to_vec());
        }
    });

    assert_eq!(
        passing,
        enumerated,
        "scan and brute force disagree on n = {}",
        l.n()
    );
    enumerated.len()
}

#[test]
fn all_maps_oracle_on_the_four_element_boolean_algebra() {
    let b2 = boolean_algebra(2).unwrap();
    assert_eq!(brute_force_matches_enumeration(&b2), 2);
}

#[test]
fn all_maps_oracle_on_the_two_pair_horizontal_sum() {
    let m = mo(2).unwrap();
    assert_eq!(brute_force_matches_enumeration(&m), 1);
}

#[test]
fn all_maps_oracle_on_the_eight_element_boolean_algebra_spot() {
    // 8^8 maps is too many; check instead that every enumerated operator
    // really passes and that a sample of near misses really fails.
    let b3 = boolean_algebra(3).unwrap();
    let endos = enumerate_bvb_endos(&b3).unwrap();
    assert_eq!(endos.len(), 5);
    for j in &endos {
        assert!(check_bvb(&b3, j).passed());
        // Perturb each entry upward; the damaged map must fail.
        for a in b3.elements() {
            for v in b3.elements() {
                if v == j.apply(a) {
                    continue;
                }
                let mut img = j.image().to_vec();
                img[a] = v;
                let damaged = Endomap::new(&b3, img).unwrap();
                assert!(
                    !check_bvb(&b3, &damaged).passed(),
                    "changing j({a}) to {v} should break some law"
                );
            }
        }
    }
}

#[test]
fn every_passing_map_induces_a_central_quantale_and_locale() {
    for l in [
        mo(2).unwrap(),
        mo(3).unwrap(),
        boolean_algebra(3).unwrap(),
        g12(),
    ] {
        let z = center(&l);
        for j in enumerate_bvb_endos(&l).unwrap() {
            // Fixed points: a central boolean subalgebra, measured.
            let fixed = fixed_points(&l, &j).unwrap();
            assert!(fixed.is_subset_of(&z));
            assert!(fixed.flags().all());

            // The operator is determined by its fixed points.
            for a in l.elements() {
                let from_fixed = fixed
                    .members()
                    .into_iter()
                    .filter(|&x| l.leq(a, x))
                    .fold(l.top(), |acc, x| l.meet(acc, x));
                assert_eq!(j.apply(a), from_fixed);
            }

            // The induced product is a quantale, and the fixed points are
            // a locale.
            assert!(check_quantale_axioms(&l, &quantale_from_endo(&l, &j)).passed());
            assert!(fixed_point_locale_check(&l, &j).unwrap().passed());
        }
    }
}

/// All partitions of `{0, .., k-1}`, built by inserting one element at a
/// time into every block and as a new block.
fn partitions(k: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for elem in 0..k {
        let mut next = Vec::new();
        for p in &out {
            for i in 0..p.len() {
                let mut q = p.clone();
                q[i].push(elem);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![elem]);
            next.push(q);
        }
        out = next;
    }
    out
}

#[test]
fn partition_counts_are_the_bell_numbers() {
    let bell: Vec<usize> = (0..=6).map(|k| partitions(k).len()).collect();
    assert_eq!(bell, vec![1, 1, 2, 5, 15, 52, 203]);
}

#[test]
fn boolean_subalgebras_are_partitions_of_the_atoms() {
    for k in 0..=4 {
        let b = boolean_algebra(k).unwrap();
        let enumerated: BTreeSet<Vec<usize>> = enumerate_central_boolean_subalgebras(&b)
            .unwrap()
            .iter()
            .map(|s| s.members())
            .collect();

        // A partition's subalgebra contains exactly the unions of blocks;
        // in the power-set numbering a union of blocks is the bitwise or
        // of the block masks.
        let mut from_partitions = BTreeSet::new();
        for p in partitions(k) {
            let block_masks: Vec<usize> = p
                .iter()
                .map(|block| block.iter().fold(0, |m, &atom| m | 1 << atom))
                .collect();
            let mut members = BTreeSet::new();
            for choice in 0..1usize << block_masks.len() {
                let union = block_masks
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| choice >> i & 1 == 1)
                    .fold(0, |m, (_, &bm)| m | bm);
                members.insert(union);
            }
            from_partitions.insert(members.into_iter().collect::<Vec<usize>>());
        }

        assert_eq!(
            enumerated, from_partitions,
            "partition oracle fails for k = {k}"
        );
        assert_eq!(enumerated.len(), partitions(k).len());
    }
}

#[test]
fn both_sides_count_the_same_on_every_small_catalog_lattice() {
    let mut lattices = vec![g12()];
    for k in 0..=4 {
        lattices.push(boolean_algebra(k).unwrap());
    }
    for n in 1..=4 {
        lattices.push(mo(n).unwrap());
    }
    lattices.push(product(&mo(2).unwrap(), &boolean_algebra(1).unwrap()).unwrap());

    for l in lattices {
        let subs = enumerate_central_boolean_subalgebras(&l).unwrap();
        let endos = enumerate_bvb_endos(&l).unwrap();
        assert_eq!(subs.len(), endos.len(), "count mismatch on n = {}", l.n());
    }
}
