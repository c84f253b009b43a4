use deodhar_closure::{conjecture_scan, ConjectureMode, Verdict, SCAN_DISCLAIMER};
use deodhar_core::diagram::Partition;

#[test]
fn adjacent_pairs_always_pass_the_vanishing_check() {
    for (k, n) in [(2, 5), (3, 6), (2, 6)] {
        let r = conjecture_scan(&Partition::rectangle(k, n), ConjectureMode::Conj1, 12).unwrap();
        assert!(r.adjacent_checked > 0);
        assert_eq!(r.adjacent_failed, 0);
    }
}

#[test]
fn reports_are_deterministic_and_labelled() {
    let shape = Partition::rectangle(3, 7);
    for mode in [ConjectureMode::Conj1, ConjectureMode::Conj2] {
        let a = conjecture_scan(&shape, mode, 12).unwrap();
        let b = conjecture_scan(&shape, mode, 12).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.disclaimer, SCAN_DISCLAIMER);
        assert!(a.disclaimer.starts_with("EXPLORATORY"));
    }
}

#[test]
fn three_by_seven_scan() {
    let shape = Partition::rectangle(3, 7);
    let c1 = conjecture_scan(&shape, ConjectureMode::Conj1, 12).unwrap();
    assert!(!c1.entries.is_empty());
    assert!(c1.entries.iter().all(|e| e.witness_k.is_none() && e.j > e.i + 1));
    assert!(c1.entries.iter().all(|e| e.verdict != Verdict::NonContainment));
    let c2 = conjecture_scan(&shape, ConjectureMode::Conj2, 12).unwrap();
    assert!(!c2.entries.is_empty());
    for e in &c2.entries {
        let k = e.witness_k.unwrap();
        assert!(e.i < k && k < e.j);
        assert_eq!(e.failing_index.is_some(), e.verdict == Verdict::NonContainment);
    }
    assert!(c2.entries.iter().any(|e| e.verdict == Verdict::NonContainment));
}

#[test]
fn guard() {
    assert!(conjecture_scan(&Partition::rectangle(4, 8), ConjectureMode::Conj1, 12).is_err());
}
