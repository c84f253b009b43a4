use deodhar_closure::mr_cross_check;
use deodhar_core::algebra::mr::PhiConvention;

#[test]
fn bottom_convention_matches_with_reversed_columns() {
    let r = mr_cross_check::<2>(7, PhiConvention::Bottom, true).unwrap();
    assert!(r.ok(), "{:?}", r.mismatches.first());
    assert!(r.components > 2000);
    let r = mr_cross_check::<3>(5, PhiConvention::Bottom, true).unwrap();
    assert!(r.ok(), "{:?}", r.mismatches.first());
}

#[test]
fn other_frames_disagree() {
    for (conv, rev) in [(PhiConvention::Bottom, false), (PhiConvention::Top, false), (PhiConvention::Top, true)] {
        let r = mr_cross_check::<3>(4, conv, rev).unwrap();
        assert!(!r.ok(), "{conv:?} {rev}");
    }
}
