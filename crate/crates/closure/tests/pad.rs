use std::collections::BTreeMap;

use deodhar_closure::{adjacent_pairs, pad, pad_instance, promote, truncate, ClosureInstance, PadSide};
use deodhar_core::diagram::{go_diagrams_in_box, go_diagrams_up_to, Cell, Filling, GoDiagram, Partition, Tile};
use proptest::prelude::*;

#[test]
fn identity_diagrams_pad_to_themselves() {
    for d in go_diagrams_up_to(8).into_iter().filter(|d| d.trace().perm.is_identity()) {
        let (p, steps) = pad(&d).unwrap();
        assert!(steps.is_empty());
        assert_eq!(p, d);
    }
}

#[test]
fn padding_depends_only_on_the_permutation() {
    for (k, n) in [(2, 5), (3, 6), (3, 7)] {
        let mut seen: BTreeMap<(Vec<usize>, Vec<usize>), (Vec<PadSide>, Vec<usize>)> = BTreeMap::new();
        for d in go_diagrams_in_box(k, n) {
            let (p, steps) = pad(&d).unwrap();
            assert!(p.trace().perm.is_identity());
            let key = (d.shape().parts().to_vec(), d.trace().perm.images().to_vec());
            let val = (steps, p.shape().parts().to_vec());
            if let Some(prev) = seen.get(&key) {
                assert_eq!(prev, &val, "{:?}", d.stone_rows());
            } else {
                seen.insert(key, val);
            }
        }
    }
}

#[test]
fn every_pair_in_small_boxes_pads_consistently() {
    for (k, n) in [(2, 5), (3, 6), (3, 7), (4, 7)] {
        for d in go_diagrams_in_box(k, n) {
            for p in adjacent_pairs(&d) {
                let inst = pad_instance(&d, p.c, p.c_prime).unwrap();
                assert!(inst.consistent, "{:?} {p:?}", d.stone_rows());
                assert!(inst.d_prime.trace().perm.is_identity());
            }
        }
    }
}

#[test]
fn truncation_undoes_padding() {
    for d in go_diagrams_in_box(3, 6) {
        let (mut p, steps) = pad(&d).unwrap();
        for &s in steps.iter().rev() {
            p = truncate(&p, s).unwrap();
        }
        assert_eq!(p, d);
    }
}

/// A pair whose pipes are not adjacent is rejected by promotion.
#[test]
fn promotion_requires_adjacent_pipes() {
    let mut found = false;
    for d in go_diagrams_in_box(3, 7) {
        for p in d.crossing_pairs().into_iter().filter(|p| p.j > p.i + 1) {
            assert!(promote(&d, p.c, p.c_prime).is_err());
            found = true;
        }
    }
    assert!(found);
}

/// Smallest pair: a White cell in the corner and a Black cell diagonally above it.
#[test]
fn synthetic_promotion() {
    let shape = Partition::rectangle(2, 4);
    let f = Filling::new(shape, vec![vec![Tile::Crossing, Tile::Elbow], vec![Tile::Elbow, Tile::Crossing]]).unwrap();
    let d = GoDiagram::from_filling(&f).unwrap();
    assert_eq!(d.stone_rows(), ["*+", "+o"]);
    assert!(d.trace().perm.is_identity());
    let inst = ClosureInstance::new(&d, Cell::new(1, 1), Cell::new(0, 0)).unwrap();
    assert_eq!(inst.d.stone_rows(), ["++", "++"]);
    assert_eq!((inst.pair.i, inst.pair.j), (2, 3));
    assert_eq!(adjacent_pairs(&d).len(), 1);
}

fn arbitrary_go() -> impl Strategy<Value = GoDiagram> {
    (1usize..=3, 1usize..=4, any::<u64>()).prop_filter_map("not Go", |(k, m, mask)| {
        let shape = Partition::rectangle(k, k + m);
        GoDiagram::from_filling(&Filling::from_mask(&shape, mask & ((1 << (k * m)) - 1))).ok()
    })
}

proptest! {
    #[test]
    fn pad_reaches_identity_and_truncates_back(d in arbitrary_go()) {
        let (p, steps) = pad(&d).unwrap();
        prop_assert!(p.trace().perm.is_identity());
        let mut back = p;
        for &s in steps.iter().rev() {
            back = truncate(&back, s).unwrap();
        }
        prop_assert_eq!(back, d);
    }
}
