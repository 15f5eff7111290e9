//! Spectral local factors against their classical product forms.

use weakdual_core::lfactors::{
    closed_form_hilbert, hilbert_series, lci_local_factor, linear_local_factor,
    nonlinear_local_factor, spectral_tables, LfactorSpace,
};
use weakdual_core::rat::{q_to_i64, qi, qr, Q};
use weakdual_core::reptheory::SatakePoint;
use weakdual_core::rootdata::{case, load_case, CaseId};
use weakdual_core::sampling::sample_satake;
use weakdual_core::series::GradedSeries;

fn int_coeffs(s: &GradedSeries) -> Vec<i64> {
    s.coeffs().iter().map(|c| q_to_i64(c).unwrap()).collect()
}

#[test]
fn hilbert_enumeration_matches_closed_forms() {
    for (id, trunc) in [
        (CaseId::GinzburgAuto, 7),
        (CaseId::GarrettAuto, 7),
        (CaseId::GarrettDual, 4),
    ] {
        let cd = case(id);
        let by_weights = hilbert_series(cd, trunc).unwrap();
        let closed = closed_form_hilbert(id, trunc).unwrap();
        assert_eq!(by_weights.coeffs(), closed.coeffs(), "{}", cd.name);
    }
}

#[test]
fn triple_cover_hilbert_series_has_no_closed_form_but_known_values() {
    let cd = case(CaseId::GinzburgDual);
    assert!(closed_form_hilbert(CaseId::GinzburgDual, 3).is_err());
    let s = hilbert_series(cd, 3).unwrap();
    assert_eq!(int_coeffs(&s), vec![1, 14, 77, 273]);
}

#[test]
fn nonlinear_factor_at_identity_is_the_hilbert_series() {
    for name in ["ginzburg_auto", "garrett_auto", "ginzburg_dual", "garrett_dual"] {
        let cd = load_case(name).unwrap();
        let id = SatakePoint::identity(cd.rank);
        let nf = nonlinear_local_factor(cd, &id, 4).unwrap();
        let hs = hilbert_series(cd, 4).unwrap();
        assert_eq!(nf.coeffs(), hs.coeffs(), "{name}");
    }
}

#[test]
fn affine_three_space_matches_linear_product_form() {
    let evs = vec![qr(2, 1), qr(1, 2), qr(-1, 3)];
    let p = SatakePoint::new(evs.clone(), None).unwrap();
    let traced = LfactorSpace::AffineThreeSpace.local_factor(&[p], 9).unwrap();
    let product = linear_local_factor(&evs, 9).unwrap();
    assert_eq!(traced.coeffs(), product.coeffs());
}

#[test]
fn tensor_square_satisfies_the_cauchy_identity() {
    let a = [qr(2, 3), qr(-5, 1)];
    let b = [qr(1, 7), qr(3, 2)];
    let pa = SatakePoint::new(a.to_vec(), None).unwrap();
    let pb = SatakePoint::new(b.to_vec(), None).unwrap();
    let lhs = LfactorSpace::TensorSquare.local_factor(&[pa, pb], 8).unwrap();
    let evs: Vec<Q> = a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect();
    let rhs = linear_local_factor(&evs, 8).unwrap();
    assert_eq!(lhs.coeffs(), rhs.coeffs());
}

#[test]
fn tensor_square_is_rank_one_cone_times_determinant_correction() {
    // s_{(l1,l2)} = (det)^{l2} h_{l1-l2}, so summing over two-row partitions
    // is the rank <= 1 sum times a geometric series in (det A)(det B) t^2.
    let a = [qr(3, 4), qr(2, 1)];
    let b = [qr(-1, 2), qr(5, 3)];
    let pa = SatakePoint::new(a.to_vec(), None).unwrap();
    let pb = SatakePoint::new(b.to_vec(), None).unwrap();
    let trunc = 8;
    let full = LfactorSpace::TensorSquare
        .local_factor(&[pa.clone(), pb.clone()], trunc)
        .unwrap();
    let cone = LfactorSpace::RankOneTensors.local_factor(&[pa, pb], trunc).unwrap();
    let dets = (&a[0] * &a[1]) * (&b[0] * &b[1]);
    let correction = GradedSeries::one_minus_term(trunc, &dets, 2).invert().unwrap();
    assert_eq!(full.coeffs(), cone.mul(&correction).coeffs());
}

#[test]
fn koszul_factor_agrees_with_the_trace_at_generic_points() {
    for name in ["ginzburg_auto", "garrett_auto"] {
        let cd = load_case(name).unwrap();
        for p in sample_satake(cd.rank, 4, 61).iter().skip(2) {
            let koszul = lci_local_factor(cd, p, 6).unwrap();
            let traced = nonlinear_local_factor(cd, p, 6).unwrap();
            assert_eq!(koszul.coeffs(), traced.coeffs(), "{name} at {p:?}");
        }
    }
}

#[test]
fn koszul_factor_needs_a_complete_intersection_presentation() {
    let cd = case(CaseId::GinzburgDual);
    let id = SatakePoint::identity(cd.rank);
    assert!(lci_local_factor(cd, &id, 3).is_err());
}

#[test]
fn batched_tables_reproduce_the_single_point_factor() {
    let cd = case(CaseId::GarrettDual);
    let tables = spectral_tables(cd, 5).unwrap();
    assert_eq!(tables.trunc(), 5);
    for p in sample_satake(cd.rank, 3, 7) {
        let batched = tables.local_factor(&p).unwrap();
        let single = nonlinear_local_factor(cd, &p, 5).unwrap();
        assert_eq!(batched.coeffs(), single.coeffs());
    }
}

#[test]
fn space_parsing_and_point_shape_errors() {
    assert!(LfactorSpace::parse("nope").is_err());
    assert_eq!(LfactorSpace::parse("a2").unwrap(), LfactorSpace::AffinePlane);
    assert_eq!(
        LfactorSpace::parse("ginzburg_auto").unwrap(),
        LfactorSpace::Cone(CaseId::GinzburgAuto)
    );

    let p1 = SatakePoint::new(vec![qi(2)], None).unwrap();
    assert!(LfactorSpace::AffinePlane.local_factor(&[p1.clone()], 3).is_err());
    assert!(LfactorSpace::TensorSquare.local_factor(&[p1], 3).is_err());
}
