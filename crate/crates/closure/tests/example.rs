mod common;

use common::*;
use deodhar_closure::{distort, numeric_limit_check, solve_gamma, verify_closure_identity_case, ClosureInstance};
use deodhar_core::algebra::{Poly, Ring};
use deodhar_core::diagram::{Cell, ReadingOrder};

fn instance() -> (ClosureInstance, ReadingOrder) {
    let dp = example_d_prime();
    let inst = ClosureInstance::new(&dp, EXAMPLE_C, EXAMPLE_C_PRIME).unwrap();
    let reading = ReadingOrder::row_major(dp.shape());
    (inst, reading)
}

fn cell(label: usize) -> Cell {
    let r = (20 - label) / 4;
    Cell::new(r, (20 - label) % 4)
}

#[test]
fn reconstructed_diagrams_have_the_expected_exits() {
    let (inst, reading) = instance();
    assert!(inst.d_prime.trace().perm.is_identity());
    assert_eq!(inst.d_prime.stone_rows(), ["*+++", "***+", "+o+o", "+++o", "+++o"]);
    assert_eq!(inst.d.stone_rows(), ["*+++", "*+*+", "+o+o", "+++o", "++++"]);
    for (r, row) in EXAMPLE_SIGMA_D.iter().enumerate() {
        for (c, &s) in row.iter().enumerate() {
            assert_eq!(inst.d.sigma(Cell::new(r, c)), s);
        }
    }
    assert_eq!((inst.i(), reading.label(inst.c()), reading.label(inst.c_prime())), (5, 1, 15));
}

#[test]
fn migration_sequence() {
    let (inst, reading) = instance();
    let dist = distort(&inst, &reading, 7).unwrap();
    let captions: Vec<&str> = dist.snapshots.iter().map(|s| s.caption.as_str()).collect();
    assert_eq!(captions.len(), 7);
    assert_eq!(captions[0], "product formula for D");
    assert_eq!(captions[1], "conjugated");
    assert_eq!(dist.created, 4);
    assert!(u128::from(dist.created as u64) <= dist.bound);

    let at = |k: usize, label: usize| -> Vec<String> {
        dist.snapshots[k].table.factors_at(cell(label)).iter().map(|f| f.to_string()).collect()
    };
    assert_eq!(at(1, 1), ["{X(6,5)(-g1)}", "X(5,6)(g1^-1)"]);
    assert_eq!(at(1, 15), ["X(6,5)(g1+g15)", "X(5,6)(-g1^-1)", "X(6,5)(g1)"]);
    assert_eq!(at(2, 6), ["X(5,4)(g1^-1*g6)", "{X(6,4)(g6)}"]);
    assert_eq!(at(3, 16), ["X(6,4)(g6+g16)"]);
    assert_eq!(at(3, 15), ["X(6,5)(g1+g15)", "X(5,6)(-g1^-1)", "{X(5,4)(-g1^-1*g6)}"]);
    assert_eq!(at(3, 10), ["X(4,3)(g10)", "{X(6,3)(-g6*g10)}"]);
    assert_eq!(at(4, 20), ["X(5,4)(g20-g1^-1*g6)"]);
    assert_eq!(at(4, 15), ["X(6,5)(g1+g15)", "{X(6,4)(-g1^-1*g6*g15-g6)}", "X(5,6)(-g1^-1)"]);
    assert_eq!(at(5, 16), ["X(6,4)(-g1^-1*g6*g15+g16)"]);
    assert_eq!(at(6, 14), ["X(6,3)(-g1*g14-g6*g10)"]);
}

#[test]
fn final_table_entries() {
    let (inst, reading) = instance();
    let dist = distort(&inst, &reading, 3).unwrap();
    let t = dist.final_table();
    assert_eq!(t.excited_count(), 0);
    let g1 = g(1);
    let expect: Vec<(usize, (usize, usize), Poly)> = vec![
        (20, (5, 4), g(20).sub(&div(&g(6), &g1))),
        (16, (6, 4), g(16).sub(&div(&g(6).mul(&g(15)), &g1))),
        (15, (6, 5), g(15).add(&g1)),
        (14, (6, 3), g(14).mul(&g1).add(&g(6).mul(&g(10))).neg()),
        (13, (6, 2), g(13).mul(&g1).neg()),
        (11, (4, 5), int(0)),
        (9, (3, 6), int(0)),
        (7, (7, 5), g(7).mul(&g1)),
        (6, (5, 4), div(&g(6), &g1)),
        (5, (4, 6), int(0)),
        (2, (7, 5), g(2).mul(&g1)),
        (1, (5, 6), div(&int(1), &g1)),
    ];
    for (label, pair, entry) in expect {
        let p = t.principal(cell(label)).unwrap();
        assert_eq!((p.pair, &p.entry), (pair, &entry), "cell {label}");
    }
    let cp = t.factors_at(cell(15));
    assert_eq!(cp.len(), 2);
    assert_eq!((cp[1].pair, cp[1].entry.clone()), ((5, 6), div(&int(-1), &g1)));
    for label in [19, 18, 17, 12, 10, 8, 4, 3] {
        let p = t.principal(cell(label)).unwrap();
        assert_eq!(p.entry, g(label as u32), "cell {label}");
        assert_eq!(p.pair, inst.d_prime.sigma(cell(label)));
    }
}

#[test]
fn equations_and_solution() {
    let (inst, reading) = instance();
    let dist = distort(&inst, &reading, 3).unwrap();
    let sol = solve_gamma(&dist).unwrap();
    assert_eq!(sol.equations.len(), 19);
    let lhs = |label: usize| sol.equation(cell(label)).unwrap().lhs.clone();
    let rhs = |label: usize| sol.equation(cell(label)).unwrap().rhs.clone();
    assert_eq!(lhs(15), g(15).add(&g(1)));
    assert_eq!(rhs(15), b(15));
    assert!(rhs(11).is_zero() && rhs(9).is_zero() && rhs(5).is_zero());
    // Solved values: γ6 = β6 γ1, γ20 = β20 + β6, γ16 = β16 + β6(β15 − γ1).
    let s = |label: u32| sol.subs[&deodhar_core::algebra::Var::new(deodhar_core::algebra::Family::Gamma, label)].clone();
    assert_eq!(s(6), b(6).mul(&g(1)));
    assert_eq!(s(20), b(20).add(&b(6)));
    assert_eq!(s(15), b(15).sub(&g(1)));
    assert_eq!(s(16), b(16).add(&b(6).mul(&b(15).sub(&g(1)))));
    assert_eq!(s(14), b(14).add(&b(6).mul(&b(10)).mul(&g(1))).neg().div(&g(1)).unwrap());
}

#[test]
fn limit_recovers_d_prime() {
    let (inst, reading) = instance();
    let report = verify_closure_identity_case(&inst.d_prime, inst.c(), inst.c_prime(), &reading, 11).unwrap();
    assert!(report.ok, "witness {:?}", report.witness);
    assert!(report.full_ok);
    assert_eq!(report.limit, report.r_d_prime);
    assert_eq!(report.max_degree, 0);
    assert_ne!(report.r_d, report.limit);
    let worst = numeric_limit_check(&report, 5).unwrap();
    assert!(worst.windows(2).all(|w| w[1] <= w[0]));
    assert!(worst.last().unwrap() < &num::BigRational::new(1.into(), 1000.into()));
}
