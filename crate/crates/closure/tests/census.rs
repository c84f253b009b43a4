use deodhar_closure::fq_cell_census;

#[test]
fn census_matches_gaussian_binomials() {
    for n in 0..=7 {
        for k in 0..=n {
            let r = fq_cell_census(n, k, 7).unwrap();
            assert!(r.ok(), "n={n} k={k}: {} vs {}", r.sum, r.expected);
        }
    }
}

#[test]
fn census_examples() {
    assert_eq!(fq_cell_census(4, 2, 8).unwrap().sum.to_string(), "q^4+q^3+2q^2+q+1");
    let r = fq_cell_census(6, 3, 8).unwrap();
    assert!(r.ok());
    assert!(fq_cell_census(8, 4, 7).is_err());
}
