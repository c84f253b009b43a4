use std::collections::BTreeSet;

use deodhar_core::algebra::{subsets, Family, Poly, Ring};
use deodhar_core::diagram::{go_diagrams_in_box, go_diagrams_up_to, io, GoDiagram, Stone};
use deodhar_networks::{ParamFamily, Params};
use deodhar_toggle::plucker::all_index_sets;
use deodhar_toggle::*;

fn running() -> GoDiagram {
    io::parse_text("+++/+*+/++o").unwrap().into_go().unwrap()
}

fn b(i: u32) -> Poly {
    Poly::sym(Family::Beta, i)
}

fn small(max: usize) -> Vec<GoDiagram> {
    let mut out = go_diagrams_up_to(max);
    out.extend(go_diagrams_in_box(3, 5).into_iter().filter(|d| d.shape().size() <= max));
    out
}

#[test]
fn running_example_356() {
    let d = running();
    let beta = Params::<Poly>::symbolic(&d, ParamFamily::Beta);
    let i = [3, 5, 6];
    assert_eq!(nonintersecting_systems(&d, &i).len(), 2);
    let g = toggle_graph(&d, DEFAULT_TOGGLE_GUARD).unwrap();
    let diagrams: Vec<_> = g.vertices.iter().filter(|e| e.index_set() == i).collect();
    assert_eq!(diagrams.len(), 2);
    assert!(diagrams.iter().all(|e| e.sign() == 1));
    for m in [Method::Minor, Method::Lgv, Method::Toggle] {
        assert_eq!(plucker(&d, &beta, &i, m, DEFAULT_TOGGLE_GUARD).unwrap(), b(5) + b(9));
    }
    assert_eq!(plucker(&d, &beta, &[4, 5, 6], Method::Toggle, DEFAULT_TOGGLE_GUARD).unwrap(), Poly::one());
    let nz = nonzero_pluckers(&d, &beta, DEFAULT_TOGGLE_GUARD).unwrap();
    for i in [vec![4, 5, 6], vec![3, 5, 6], vec![1, 2, 3]] {
        assert!(nz.contains(&i), "{i:?}");
    }
}

#[test]
fn root_paths_are_pipes() {
    let d = running();
    let root = RestrictedDiagram::root(&d);
    let (west, north) = boundary_paths(&d, &root).unwrap();
    assert_eq!(west.iter().map(|p| p.sink).collect::<Vec<_>>(), vec![4, 5, 6]);
    assert_eq!(north.iter().map(|p| p.sink).collect::<Vec<_>>(), vec![1, 2, 3]);
    assert!(west.iter().chain(&north).all(|p| p.jump_sites().is_empty()));
}

#[test]
fn all_white_has_one_vertex() {
    let p = deodhar_core::diagram::Partition::rectangle(2, 4);
    let f = deodhar_core::diagram::Filling::uniform(&p, deodhar_core::diagram::Tile::Crossing);
    let d = GoDiagram::from_filling(&f).unwrap();
    assert_eq!(d.count(Stone::White), 4);
    assert_eq!(toggle_graph(&d, DEFAULT_TOGGLE_GUARD).unwrap().vertices.len(), 1);
}

#[test]
fn guard_is_enforced() {
    let d = running();
    assert!(matches!(toggle_graph(&d, 4), Err(ToggleError::GuardExceeded { .. })));
}

#[test]
fn graph_matches_path_systems() {
    for d in small(6) {
        let g = toggle_graph(&d, DEFAULT_TOGGLE_GUARD).unwrap();
        let n = d.shape().n();
        let k = d.shape().k();
        let systems: usize = subsets(n, k).iter().map(|i| nonintersecting_systems(&d, i).len()).sum();
        let duals: usize = subsets(n, n - k).iter().map(|i| nonintersecting_dual_systems(&d, i).len()).sum();
        assert_eq!(g.vertices.len(), systems, "{:?}", d.stone_rows());
        assert_eq!(g.vertices.len(), duals, "{:?}", d.stone_rows());

        let mut f1 = BTreeSet::new();
        let mut f2 = BTreeSet::new();
        for e in &g.vertices {
            assert!(e.toggled().iter().all(|&c| d.stone(c) != Stone::White));
            let (west, north) = boundary_paths(&d, e).unwrap();
            let sites: BTreeSet<_> = west.iter().flat_map(|p| p.jump_sites()).collect();
            assert_eq!(&sites, e.toggled());
            let dual_sites: BTreeSet<_> = north.iter().flat_map(|p| p.jump_sites()).collect();
            assert_eq!(&dual_sites, e.toggled());
            assert_eq!(e.sign(), system_sign(&west));
            // Toggling the jump sites on D reproduces E.
            let mut again = RestrictedDiagram::root(&d);
            for &c in e.toggled() {
                again = again.toggle_unchecked(c);
            }
            assert_eq!(again.key(), e.key());
            f1.insert(west);
            f2.insert(north);
        }
        assert_eq!(f1.len(), g.vertices.len());
        assert_eq!(f2.len(), g.vertices.len());
    }
}

#[test]
fn three_plucker_methods_agree() {
    for d in small(6) {
        let beta = Params::<Poly>::symbolic(&d, ParamFamily::Beta);
        for i in all_index_sets(&d) {
            let m = plucker(&d, &beta, &i, Method::Minor, DEFAULT_TOGGLE_GUARD).unwrap();
            assert_eq!(plucker(&d, &beta, &i, Method::Lgv, DEFAULT_TOGGLE_GUARD).unwrap(), m, "{:?} {i:?}", d.stone_rows());
            assert_eq!(plucker(&d, &beta, &i, Method::Toggle, DEFAULT_TOGGLE_GUARD).unwrap(), m, "{:?} {i:?}", d.stone_rows());
        }
    }
}

#[test]
fn length_condition_matches_label_comparison() {
    for d in small(6) {
        let g = toggle_graph(&d, DEFAULT_TOGGLE_GUARD).unwrap();
        for e in &g.vertices {
            for p in d.shape().cells() {
                if let Some((b, c)) = e.boundary_pair(p) {
                    let longer = e.toggle_unchecked(p).length() > e.length();
                    assert_eq!(longer, c < b);
                }
            }
            for p in togglable_cells(&d, e) {
                // The west-ending pipe leaves p westward, the north-ending one northward.
                let (b, c) = e.boundary_pair(p).unwrap();
                assert_eq!(e.trace().exits(p), (b, c));
            }
        }
    }
}

#[test]
fn rank_of_nonzero_pluckers_over_random_points() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for d in small(6).into_iter().take(50) {
        let beta = Params::<Poly>::symbolic(&d, ParamFamily::Beta);
        let nz = nonzero_pluckers(&d, &beta, DEFAULT_TOGGLE_GUARD).unwrap();
        let mut seen = BTreeSet::new();
        for _ in 0..20 {
            let pt = deodhar_networks::random_params::<11>(&d, ParamFamily::Beta, &mut rng);
            let (_, r) = deodhar_networks::restricted_weight_matrix(&d, &pt).unwrap();
            for i in all_index_sets(&d) {
                if !r.minor_field(&i).is_zero() {
                    seen.insert(i);
                }
            }
        }
        assert!(seen.is_subset(&nz), "{:?}", d.stone_rows());
    }
}

#[test]
fn running_example_graph_size() {
    let d = running();
    let g = toggle_graph(&d, DEFAULT_TOGGLE_GUARD).unwrap();
    let systems: usize = subsets(6, 3).iter().map(|i| nonintersecting_systems(&d, i).len()).sum();
    assert_eq!(g.vertices.len(), systems);
    // Regression values for the running example.
    assert_eq!((g.vertices.len(), g.edges.len(), g.out_degree(0)), (27, 40, 4));
}

proptest::proptest! {
    #[test]
    fn toggle_sum_matches_minor_over_f11(seed in proptest::prelude::any::<u64>(), which in 0usize..1000) {
        use rand::SeedableRng;
        let all = small(5);
        let d = &all[which % all.len()];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let beta = deodhar_networks::random_params::<11>(d, ParamFamily::Beta, &mut rng);
        let (_, r) = deodhar_networks::restricted_weight_matrix(d, &beta).unwrap();
        for i in all_index_sets(d) {
            let t = plucker(d, &beta, &i, Method::Toggle, DEFAULT_TOGGLE_GUARD).unwrap();
            proptest::prop_assert_eq!(t, r.minor_field(&i));
        }
    }
}
