//! Frozen combinatorics of the two cones: extremal generators, low-degree
//! strata, and the duality bijection between the automorphic and relevant
//! weight sets.

use num::traits::Signed;

use weakdual_core::cones::{
    decompose_on_extremals, enumerate_automorphic, enumerate_pre_reindex, enumerate_relevant,
    extremal_generators, is_relevant, satisfies_automorphic_bounds, weight_set_duality_check,
};
use weakdual_core::rat::{qi, qr};
use weakdual_core::reptheory::weyl_dimension;
use weakdual_core::rootdata::{case, load_case, CaseId, CoweightVector, WeightVector};
use weakdual_core::Exec;

fn wv(coords: &[i64]) -> WeightVector {
    WeightVector::from_i64(coords)
}

#[test]
fn extremal_generators_are_degree_one_and_relevant() {
    for name in ["ginzburg_dual", "garrett_dual", "ginzburg_auto", "garrett_auto"] {
        let cd = load_case(name).unwrap();
        let gens = extremal_generators(cd).unwrap();
        for g in &gens {
            assert_eq!(cd.label_degree(g).unwrap(), qi(1), "{name}: {g}");
            assert!(is_relevant(cd, g).unwrap(), "{name}: {g}");
        }
    }
}

#[test]
fn ginzburg_dual_generators_and_strata() {
    let cd = case(CaseId::GinzburgDual);
    let gens = extremal_generators(cd).unwrap();
    let expected = [wv(&[1, 0, -1]), wv(&[1, 1, -1]), wv(&[2, 1, -1])];
    assert_eq!(gens.len(), 3);
    for e in &expected {
        assert!(gens.contains(e), "missing generator {e}");
    }

    let set = enumerate_relevant(cd, 3).unwrap();
    assert_eq!(set.by_degree[0], vec![wv(&[0, 0, 0])]);
    let mut d1 = set.by_degree[1].clone();
    d1.sort_by_key(|w| format!("{w}"));
    assert_eq!(d1.len(), 3);
    for e in &expected {
        assert!(set.by_degree[1].contains(e));
    }
    // Degree d stratum is {(a+b, b, -d) : 0 <= a, b <= d, a + b >= d}.
    assert_eq!(set.by_degree[2].len(), 6);
    assert_eq!(set.by_degree[3].len(), 10);
    for (d, expect_dim) in [(0usize, 1i64), (1, 14), (2, 77), (3, 273)] {
        let total: i64 = set.by_degree[d]
            .iter()
            .map(|w| weyl_dimension(cd, w).unwrap() as i64)
            .sum();
        assert_eq!(total, expect_dim, "degree {d} graded dimension");
    }
}

#[test]
fn garrett_dual_generators_and_strata() {
    let cd = case(CaseId::GarrettDual);
    let gens = extremal_generators(cd).unwrap();
    assert_eq!(gens.len(), 4);
    let spin = WeightVector(vec![qr(1, 2), qr(1, 2), qr(1, 2), qi(-1)]);
    assert!(gens.contains(&spin));
    let single = WeightVector(vec![qr(1, 2), qi(0), qi(0), qi(-1)]);
    assert!(gens.contains(&single));

    let set = enumerate_relevant(cd, 2).unwrap();
    assert_eq!(set.by_degree[0].len(), 1);
    assert_eq!(set.by_degree[1].len(), 4);
    for (d, expect_dim) in [(1usize, 14i64), (2, 84)] {
        let total: i64 = set.by_degree[d]
            .iter()
            .map(|w| weyl_dimension(cd, w).unwrap() as i64)
            .sum();
        assert_eq!(total, expect_dim, "degree {d} graded dimension");
    }
}

#[test]
fn relevance_equals_nonnegative_decomposition() {
    for name in ["ginzburg_dual", "garrett_dual"] {
        let cd = load_case(name).unwrap();
        let set = enumerate_relevant(cd, 3).unwrap();
        for stratum in &set.by_degree {
            for w in stratum {
                let dec = decompose_on_extremals(cd, w).unwrap();
                let coeffs = dec.expect("relevant weight must decompose");
                assert!(coeffs.iter().all(|c| !c.is_negative()));
            }
        }
    }
    // A dominant lattice weight outside the cone has no such decomposition.
    let cd = case(CaseId::GinzburgDual);
    assert!(!is_relevant(cd, &wv(&[1, 0, -2])).unwrap());
    assert_eq!(decompose_on_extremals(cd, &wv(&[1, 0, -2])).unwrap(), None);
}

#[test]
fn automorphic_sets_biject_with_relevant_sets() {
    for name in ["ginzburg_auto", "garrett_auto", "ginzburg_dual", "garrett_dual"] {
        let cd = load_case(name).unwrap();
        let report = weight_set_duality_check(cd, 6).unwrap();
        assert!(report.pass(), "{name}: {:?}", report.mismatches);
    }
}

#[test]
fn automorphic_bounds_filter_matches_enumeration() {
    let cd = case(CaseId::GinzburgAuto);
    let set = enumerate_automorphic(cd, 4).unwrap();
    for stratum in &set.by_degree {
        for chi in stratum {
            assert!(satisfies_automorphic_bounds(cd, chi).unwrap());
            assert!(cd.is_dominant_coweight(chi));
            assert!(cd.coweight_in_lattice(chi));
        }
    }
    // Counts match the dual relevant strata.
    let dual = enumerate_relevant(case(CaseId::GinzburgDual), 4).unwrap();
    let counts: Vec<usize> = set.by_degree.iter().map(Vec::len).collect();
    let dual_counts: Vec<usize> = dual.by_degree.iter().map(Vec::len).collect();
    assert_eq!(counts, dual_counts);

    // chi = (1,1,1): the image of the dual-side generator (1,0,-1) under
    // duality and -w0; height 1, inside all bounds.
    let chi = CoweightVector(vec![qi(1), qi(1), qi(1)]);
    assert!(satisfies_automorphic_bounds(cd, &chi).unwrap());
    // Flipping the grading coordinate sends the height negative, below the
    // rho - alpha bound.
    let bad = CoweightVector(vec![qi(1), qi(1), qi(-1)]);
    assert!(!satisfies_automorphic_bounds(cd, &bad).unwrap());
}

#[test]
fn pre_reindex_at_m_zero_is_the_automorphic_set() {
    for name in ["ginzburg_auto", "garrett_auto"] {
        let cd = load_case(name).unwrap();
        let entries = enumerate_pre_reindex(cd, 0, 5, Exec::default()).unwrap();
        let set = enumerate_automorphic(cd, 5).unwrap();
        let total: usize = set.by_degree.iter().map(Vec::len).sum();
        assert_eq!(entries.len(), total, "{name}");
        for (chi, w) in &entries {
            let h = cd.theta_height(chi).unwrap();
            assert_eq!(h, qi(*w), "{name}: height of {chi}");
        }
    }
}

#[test]
fn pre_reindex_shifted_set_grows_with_m() {
    let cd = case(CaseId::GinzburgAuto);
    let base = enumerate_pre_reindex(cd, 0, 4, Exec::default()).unwrap();
    let shifted = enumerate_pre_reindex(cd, 1, 4, Exec::default()).unwrap();
    // The m = 1 window opens below height zero.
    assert!(shifted.iter().any(|(_, w)| *w < 0));
    assert!(shifted.len() > base.len());
    for (chi, _) in &shifted {
        let two_rho = cd.rho_check.scale(&qi(2));
        let s = chi.add(&two_rho);
        assert!(cd.is_dominant_coweight(&s), "shifted coweight {chi} must be dominant");
    }
}
