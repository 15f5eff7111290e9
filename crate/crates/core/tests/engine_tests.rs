//! End-to-end comparisons between the automorphic and spectral sides.

use weakdual_core::engine::{
    assemble_global, central_term_token, duality_checker, normalization_ledger, period_pair,
    presum_local_factor, verify_local_duality, verify_local_duality_corrupted,
    verify_pre_reindex, verify_prefactor_identities, PlaceInput,
};
use weakdual_core::rat::{qi, qr};
use weakdual_core::rootdata::load_case;
use weakdual_core::sampling::sample_satake;

#[test]
fn period_pair_lookup() {
    let p = period_pair("ginzburg").unwrap();
    assert_eq!(p.automorphic.name, "ginzburg_auto");
    assert_eq!(p.dual.name, "ginzburg_dual");
    let p = period_pair("garrett").unwrap();
    assert_eq!(p.automorphic.name, "garrett_auto");
    assert_eq!(p.dual.name, "garrett_dual");
    assert!(period_pair("tate").is_err());
}

// Duality read in the other direction: the cover and the Lagrangian cone as
// the automorphic side, the nilpotent cone and the hyperdeterminant
// hypersurface as the spectral side.
#[test]
fn reverse_direction_duality_holds_on_the_dual_cases() {
    for name in ["ginzburg_dual", "garrett_dual"] {
        let cd = load_case(name).unwrap();
        let rank = cd.dual().unwrap().rank;
        let checker = duality_checker(cd, 8).unwrap();
        for point in sample_satake(rank, 5, 311) {
            let v = checker.verify(&point).unwrap();
            assert!(
                v.pass,
                "{name} at {:?}: first mismatch {:?}",
                v.point_label, v.first_mismatch_degree
            );
        }
    }
}

#[test]
fn verdict_carries_the_comparison_metadata() {
    let cd = load_case("ginzburg_auto").unwrap();
    let point = &sample_satake(cd.rank, 3, 99)[2];
    let v = verify_local_duality(cd, point, 4).unwrap();
    assert!(v.pass);
    assert_eq!(v.automorphic_case, "ginzburg_auto");
    assert_eq!(v.dual_case, "ginzburg_dual");
    assert_eq!(v.trunc, 4);
    assert!(v.point_label.is_some());
}

#[test]
fn presum_reindexing_holds_for_small_twists() {
    for name in ["ginzburg_auto", "garrett_auto"] {
        let cd = load_case(name).unwrap();
        let points = sample_satake(cd.rank, 4, 1812);
        for m in 0..=2 {
            for point in points.iter().skip(2) {
                let v = verify_pre_reindex(cd, point, m, 6).unwrap();
                assert!(v.pass, "{name} m={m}: mismatch at {:?}", v.first_mismatch_degree);
            }
        }
    }
}

#[test]
fn presum_at_zero_twist_is_the_automorphic_factor() {
    let cd = load_case("garrett_auto").unwrap();
    let point = &sample_satake(cd.rank, 3, 5)[2];
    let pre = presum_local_factor(cd, point, 0, 5).unwrap();
    let aut = weakdual_core::engine::automorphic_local_factor(cd, point, 5).unwrap();
    assert!(pre.eq_up_to(&aut, 5));
}

#[test]
fn deleting_a_coweight_breaks_the_comparison_at_its_height() {
    for name in ["ginzburg_auto", "garrett_auto"] {
        let cd = load_case(name).unwrap();
        let point = &sample_satake(cd.rank, 3, 17)[2];
        for corrupt in [0usize, 2] {
            let v = verify_local_duality_corrupted(cd, point, 5, corrupt).unwrap();
            assert!(!v.pass, "{name} height {corrupt}");
            assert_eq!(v.first_mismatch_degree, Some(corrupt as i64), "{name}");
        }
        assert!(verify_local_duality_corrupted(cd, point, 5, 9).is_err());
    }
}

#[test]
fn ledger_entries_account_for_every_quarter_power() {
    let gz = load_case("ginzburg_auto").unwrap();
    let l = normalization_ledger(gz, 2).unwrap();
    assert!(l.pass);
    assert_eq!(l.dual_case, "ginzburg_dual");
    // gimel = 3/2: the eigenform normalization carries 2*gimel = 3 quarter
    // units, recombination takes them back, the trace side sits at
    // epsilon - dim = 3 - 6 = -3.
    let aut: Vec<&str> = l.automorphic.entries.iter().map(|(_, v)| v.as_str()).collect();
    assert_eq!(aut, ["3", "-3"]);
    let spec: Vec<&str> = l.spectral.entries.iter().map(|(_, v)| v.as_str()).collect();
    assert_eq!(spec, ["-3"]);
    assert_eq!(l.difference_quarter_units, "3");
    assert_eq!(l.expected_discrepancy, "3");
    assert_eq!(l.q_exponent_difference, "3/2");

    let ga = load_case("garrett_auto").unwrap();
    let l = normalization_ledger(ga, 3).unwrap();
    assert!(l.pass);
    // gimel = 0: both automorphic entries vanish, the trace side sits at
    // 4 - 7 = -3, and at genus 3 the q-exponent is 3 * (3-1)/2.
    let aut: Vec<&str> = l.automorphic.entries.iter().map(|(_, v)| v.as_str()).collect();
    assert_eq!(aut, ["0", "0"]);
    assert_eq!(l.difference_quarter_units, "3");
    assert_eq!(l.q_exponent_difference, "3");
}

#[test]
fn central_token_spells_the_gamma_exponent() {
    let gz = load_case("ginzburg_auto").unwrap();
    assert_eq!(central_term_token(gz).unwrap(), "(chi_f o theta_check)(partial^(-3/2))");
    let ga = load_case("garrett_auto").unwrap();
    assert_eq!(central_term_token(ga).unwrap(), "(chi_f o theta_check)(partial^(-2))");
}

#[test]
fn prefactor_identities_hold_across_rational_a() {
    for a in [qi(2), qr(3, 2), qi(11), qr(7, 3), qr(-5, 2), qi(0)] {
        assert!(verify_prefactor_identities(&a).unwrap());
    }
    assert!(verify_prefactor_identities(&qi(1)).is_err());
}

#[test]
fn global_assembly_over_three_places() {
    let cd = load_case("ginzburg_auto").unwrap();
    let points = sample_satake(cd.rank, 5, 2024);
    let places: Vec<PlaceInput> = [2u64, 3, 5]
        .iter()
        .zip(points.into_iter().skip(2))
        .map(|(&q, point)| PlaceInput { q, point })
        .collect();
    let g = assemble_global(cd, 2, &places, 6).unwrap();
    assert!(g.pass);
    assert!(g.all_places_pass);
    assert!(g.ledger.pass);
    assert!(g.central_term_matches);
    assert_eq!(g.places.len(), 3);
    assert_eq!(g.places.iter().map(|p| p.q).collect::<Vec<_>>(), vec![2, 3, 5]);
    assert_eq!(g.central_term, "(chi_f o theta_check)(partial^(-3/2))");
    assert_eq!(g.genus, 2);
}
