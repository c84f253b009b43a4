use deodhar_closure::{adjacent_pairs, distort, verify_closure_general, verify_closure_identity_case, ClosureInstance};
use deodhar_core::diagram::{go_diagrams_up_to, ReadingOrder};

#[test]
fn identity_case_all_small_shapes() {
    let mut checked = 0;
    for d_prime in go_diagrams_up_to(9) {
        if !d_prime.trace().perm.is_identity() {
            continue;
        }
        let reading = ReadingOrder::row_major(d_prime.shape());
        for p in adjacent_pairs(&d_prime) {
            let inst = ClosureInstance::new(&d_prime, p.c, p.c_prime).unwrap();
            let dist = distort(&inst, &reading, 1).unwrap_or_else(|e| panic!("{:?} {p:?}: {e}", d_prime.stone_rows()));
            assert!((dist.created as u128) <= dist.bound, "{:?}", d_prime.stone_rows());
            let r = verify_closure_identity_case(&d_prime, p.c, p.c_prime, &reading, 1).unwrap();
            assert!(r.ok, "{:?} {p:?} witness {:?}", d_prime.stone_rows(), r.witness);
            checked += 1;
        }
    }
    eprintln!("identity-case pairs checked: {checked}");
    assert!(checked > 0);
}

#[test]
fn general_case_all_small_shapes() {
    let mut checked = 0;
    for d_prime in go_diagrams_up_to(9) {
        for p in adjacent_pairs(&d_prime) {
            let r = verify_closure_general(&d_prime, p.c, p.c_prime, 1)
                .unwrap_or_else(|e| panic!("{:?} {p:?}: {e}", d_prime.stone_rows()));
            assert!(r.padded.consistent, "{:?} {p:?} padding", d_prime.stone_rows());
            assert!(r.ok, "{:?} {p:?} witness {:?}", d_prime.stone_rows(), r.identity.witness);
            checked += 1;
        }
    }
    eprintln!("general-case pairs checked: {checked}");
    assert!(checked > 0);
}
