//! Classical anchors: the cases where the machinery must reproduce textbook
//! answers before the singular cases can be trusted.

use crate::error::{Error, Result};
use crate::rat::{q_pow, q_to_i64, qi, qr, Q};
use crate::reptheory::{character_value, coweight_character_case, SatakePoint};
use crate::rootdata::{case, CaseData, CaseId, CoweightVector, WeightVector};
use crate::series::{GradedSeries, HalfPowerSeries};

/// Local Tate factor (1 - chi(p) t)^{-1}.
pub fn tate_local_factor(chi_p: &Q, trunc: usize) -> Result<GradedSeries> {
    GradedSeries::product_of_binomials(trunc, &[(chi_p.clone(), 1, -1)])
}

#[derive(Debug, Clone)]
pub struct WhittakerValue {
    /// Character of the dual-group representation with highest weight
    /// chi + 2m rho_check; zero when that shift fails to be dominant.
    pub character: Q,
    /// Exponent e such that the Whittaker value is character * u^{-e},
    /// namely 2<rho, chi + 2m rho_check>.
    pub u_exponent: Q,
}

/// Unramified Whittaker value at the coweight point e^chi shifted by the
/// m-twisted Weyl vector.
pub fn casselman_shalika_value(
    cd: &CaseData,
    chi: &CoweightVector,
    point: &SatakePoint,
    m: i64,
) -> Result<WhittakerValue> {
    let shifted = chi.add(&cd.rho_check.scale(&qi(2 * m)));
    let ccase = coweight_character_case(cd)?;
    let character = character_value(ccase, &WeightVector(shifted.0.clone()), point)?;
    let u_exponent = qi(2) * cd.pair(&cd.rho, &shifted);
    Ok(WhittakerValue { character, u_exponent })
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct HeckeVerdict {
    pub m: i64,
    pub trunc: i64,
    pub pass: bool,
    pub first_mismatch_degree: Option<i64>,
}

/// Unfolded GL2 Hecke sum at twist m: summing the Whittaker values over the
/// full torus lattice beta >= -2m gives det^{-m} times the standard local
/// factor sum_d h_d u^{-d}. The lower end of the range matters: at m >= 1
/// the terms with beta < 0 carry the det^{-m} prefactor.
pub fn hecke_local_factor(point: &SatakePoint, m: i64, trunc: i64) -> Result<HeckeVerdict> {
    if m < 0 {
        return Err(Error::Domain("twist m must be nonnegative".into()));
    }
    let gl2 = case(CaseId::Gl2);
    if point.rank() != 2 {
        return Err(Error::Dimension("Hecke check needs a rank-2 point".into()));
    }

    // Torus sum: beta runs from -2m; the u-exponent of the beta term is
    // d = beta + 2m, so the series is complete up to u^{-trunc}.
    let mut torus = HalfPowerSeries::zero(trunc);
    for d in 0..=trunc {
        let beta = d - 2 * m;
        let hw = WeightVector::from_i64(&[beta + m, -m]);
        torus.add_term(d, character_value(gl2, &hw, point)?);
    }

    // Closed form: det^{-m} sum_d h_d u^{-d}.
    let det = character_value(gl2, &WeightVector::from_i64(&[1, 1]), point)?;
    let det_pow = q_pow(&det, -m);
    let mut closed = HalfPowerSeries::zero(trunc);
    for d in 0..=trunc {
        let h = character_value(gl2, &WeightVector::from_i64(&[d, 0]), point)?;
        closed.add_term(d, h * &det_pow);
    }

    let first = torus.first_mismatch(&closed, trunc);
    Ok(HeckeVerdict { m, trunc, pass: first.is_none(), first_mismatch_degree: first })
}

/// Exponent of q in the global Whittaker normalization of an everywhere
/// unramified form on a curve of the given genus: (g-1)(dim U - 4<rho, rho_check>).
pub fn whittaker_normalization_exponent(cd: &CaseData, genus: i64) -> Result<Q> {
    if cd.positive_root_pairs.is_empty() {
        return Err(Error::Domain(format!("case {} has no unipotent radical", cd.name)));
    }
    let a = cd.pair(&cd.rho, &cd.rho_check);
    Ok(qi(genus - 1) * (qi(cd.dim_u as i64) - qi(4) * &a))
}

/// The same exponent written as the period-side combination: -beta/2 must
/// equal (2g-2)(a - dim U / 4).
pub fn whittaker_exponent_forms_agree(cd: &CaseData, genus: i64) -> Result<bool> {
    let beta = whittaker_normalization_exponent(cd, genus)?;
    let a = cd.pair(&cd.rho, &cd.rho_check);
    let rhs = qi(2 * genus - 2) * (&a - qi(cd.dim_u as i64) * qr(1, 4));
    Ok(-&beta * qr(1, 2) == rhs)
}

/// Fixed unfolding exponents for the two classical Whittaker anchors.
pub fn whittaker_exponent_reference(cd: &CaseData, genus: i64) -> Result<Option<i64>> {
    let beta = whittaker_normalization_exponent(cd, genus)?;
    match cd.id {
        Some(CaseId::Sl2) => Ok(Some(-(genus - 1))),
        Some(CaseId::Gl3) => Ok(Some(-5 * (genus - 1))),
        _ => Ok(None),
    }
    .map(|expect| {
        if let Some(e) = expect {
            assert_eq!(q_to_i64(&beta), Some(e), "reference exponent mismatch for {}", cd.name);
        }
        expect
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::fmt_q;

    fn gl2_point(a: Q, b: Q) -> SatakePoint {
        SatakePoint::new(vec![a, b], None).unwrap()
    }

    #[test]
    fn tate_factor_coeffs_are_powers() {
        let s = tate_local_factor(&qr(2, 3), 3).unwrap();
        assert_eq!(fmt_q(s.coeff(3)), "8/27");
    }

    #[test]
    fn hecke_zero_twist_and_one_twist() {
        let p = gl2_point(qr(2, 1), qr(1, 3));
        for m in 0..=2 {
            let v = hecke_local_factor(&p, m, 12).unwrap();
            assert!(v.pass, "m={m} mismatch at {:?}", v.first_mismatch_degree);
        }
    }

    #[test]
    fn hecke_truncated_range_fails_at_one_twist() {
        // Starting the torus sum at beta = 0 instead of beta = -2m loses the
        // d < 2m terms; the d = 0 coefficient alone disagrees: det^{-1} != 0.
        let p = gl2_point(qr(2, 1), qr(1, 3));
        let gl2 = case(CaseId::Gl2);
        let d0 = character_value(gl2, &WeightVector::from_i64(&[-1, -1]), &p).unwrap();
        assert_eq!(fmt_q(&d0), "3/2");
    }

    #[test]
    fn whittaker_exponents() {
        let sl2 = case(CaseId::Sl2);
        let gl3 = case(CaseId::Gl3);
        for g in 0..4 {
            assert_eq!(whittaker_exponent_reference(sl2, g).unwrap(), Some(-(g - 1)));
            assert_eq!(whittaker_exponent_reference(gl3, g).unwrap(), Some(-5 * (g - 1)));
            assert!(whittaker_exponent_forms_agree(sl2, g).unwrap());
            assert!(whittaker_exponent_forms_agree(gl3, g).unwrap());
        }
    }

    #[test]
    fn cs_value_at_gl2() {
        // chi = (1,0), m = 0: character is alpha + beta, exponent 2<rho,chi> = 1.
        let gl2 = case(CaseId::Gl2);
        let p = gl2_point(qr(3, 1), qr(5, 1));
        let chi = CoweightVector::from_i64(&[1, 0]);
        let v = casselman_shalika_value(gl2, &chi, &p, 0).unwrap();
        assert_eq!(fmt_q(&v.character), "8");
        assert_eq!(fmt_q(&v.u_exponent), "1");
    }
}
