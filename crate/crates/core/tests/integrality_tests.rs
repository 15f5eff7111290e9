//! Integrality forms against the matrix and tensor valuation criteria.

use weakdual_core::integrality::{
    chi_from_garrett, chi_from_ginzburg, garrett_tensor_oracle, ginzburg_matrix_oracle,
    integrality_forms, is_integral, oracle_agreement_garrett, oracle_agreement_ginzburg, vt_form,
    vt_monotone, LocalPoint, Vt,
};
use weakdual_core::rat::{qi, qr};
use weakdual_core::rootdata::{case, CaseId, CoweightVector};

#[test]
fn form_families_have_one_member_per_simple_root() {
    for id in [CaseId::GinzburgAuto, CaseId::GarrettAuto] {
        let cd = case(id);
        let forms = integrality_forms(cd).unwrap();
        assert_eq!(forms.len(), 2 * cd.simple_roots.len(), "{}", cd.name);
    }
    // No distinguished cocharacter, no integrality theory.
    assert!(integrality_forms(case(CaseId::Sl2)).is_err());
    assert!(vt_form(case(CaseId::Sl2)).is_err());
}

#[test]
fn vt_form_reproduces_the_oracle_thresholds() {
    let gz = case(CaseId::GinzburgAuto);
    let form = vt_form(gz).unwrap();
    for (a, b, c) in [(0i64, 0i64, 1i64), (3, 0, 3), (-2, 1, 4), (5, -1, 0)] {
        let chi = chi_from_ginzburg(a, b, c);
        // The matrix criterion needs v_t + c - a >= 0.
        assert_eq!(gz.pair(&form, &chi), qi(a - c));
    }

    let ga = case(CaseId::GarrettAuto);
    let form = vt_form(ga).unwrap();
    for pairs in [[(1i64, 1i64), (1, 0), (0, 0)], [(2, -1), (0, 1), (1, 0)], [(3, 3), (0, 0), (0, 0)]] {
        let chi = chi_from_garrett(&pairs).unwrap();
        let total: i64 = pairs.iter().map(|(x, y)| x + y).sum();
        let sum_b: i64 = pairs.iter().map(|(_, y)| *y).sum();
        // The tensor criterion needs v_t + sum b_i - s >= 0.
        assert_eq!(ga.pair(&form, &chi), qi(total / 3 - sum_b));
    }
}

#[test]
fn infinite_valuation_keeps_only_the_torus_conditions() {
    let gz = case(CaseId::GinzburgAuto);
    // Fails c - b >= 0: no valuation rescues it.
    let bad = LocalPoint { chi: chi_from_ginzburg(0, 1, 0), v_t: Vt::Infinite };
    assert!(!is_integral(gz, &bad).unwrap());
    assert!(!ginzburg_matrix_oracle(0, 1, 0, Vt::Infinite));
    // Torus conditions hold (c - b = 0, c + b - a = 3) but a - c = 1 needs
    // v_t >= 1.
    let chi = chi_from_ginzburg(5, 4, 4);
    assert!(!is_integral(gz, &LocalPoint { chi: chi.clone(), v_t: Vt::Finite(0) }).unwrap());
    assert!(is_integral(gz, &LocalPoint { chi: chi.clone(), v_t: Vt::Finite(1) }).unwrap());
    assert!(is_integral(gz, &LocalPoint { chi, v_t: Vt::Infinite }).unwrap());
}

#[test]
fn non_lattice_parameters_are_rejected() {
    let gz = case(CaseId::GinzburgAuto);
    let chi = CoweightVector(vec![qr(1, 2), qi(0), qi(0)]);
    assert!(is_integral(gz, &LocalPoint { chi, v_t: Vt::Infinite }).is_err());
    // Tensor side: total determinant exponent must be divisible by 3.
    assert!(chi_from_garrett(&[(1, 0), (0, 0), (0, 0)]).is_err());
    assert!(garrett_tensor_oracle(&[(0, 1), (1, 0), (1, 1)], Vt::Infinite).is_err());
}

#[test]
fn medium_grids_agree_with_the_valuation_oracles() {
    let r = oracle_agreement_ginzburg(3, -3, 3).unwrap();
    assert!(r.pass(), "{:?}", r.disagreements.first());
    assert_eq!(r.grid_size, 7 * 7 * 7 * 8);
    assert_eq!(r.case_name, "ginzburg_auto");

    let r = oracle_agreement_garrett(2, -2, 2).unwrap();
    assert!(r.pass(), "{:?}", r.disagreements.first());
    assert_eq!(r.case_name, "garrett_auto");
    // 5^6 exponent tuples, a third on the quotient lattice, six valuations.
    assert_eq!(r.grid_size, (5usize.pow(6) / 3 + 1) * 6);
}

#[test]
fn raising_the_valuation_never_breaks_integrality() {
    let gz = case(CaseId::GinzburgAuto);
    for a in -2..=2 {
        for b in -2..=2 {
            for c in -2..=2 {
                assert!(vt_monotone(gz, &chi_from_ginzburg(a, b, c), -4, 4).unwrap());
            }
        }
    }
    let ga = case(CaseId::GarrettAuto);
    for pairs in [[(1i64, 1i64), (1, 0), (0, 0)], [(2, -1), (0, 1), (1, 0)], [(0, 0), (0, 0), (0, 0)]] {
        let chi = chi_from_garrett(&pairs).unwrap();
        assert!(vt_monotone(ga, &chi, -4, 4).unwrap());
    }
}
