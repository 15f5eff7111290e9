//! The two sides of the local period identity and their comparison.
//!
//! The automorphic factor of a case sums unramified Whittaker data over the
//! cone of admissible coweights: the coefficient of u^{-d} (u = q^{1/2}) is
//! the sum of s_chi over admissible chi of height d, where s_chi is the
//! character of the dual-group representation with highest weight chi. The
//! spectral factor of the dual case is the torus trace on the graded
//! coordinate ring of its cone at the same Satake point. Weak duality says
//! the two series agree identically; the discrepancy between the global
//! normalizations on the two sides is a fixed quarter-power count.


use std::sync::Arc;

use crate::cones::{enumerate_automorphic_with, enumerate_pre_reindex};
use crate::error::{Error, Result};
use crate::lfactors::{spectral_tables_with, SpectralTables};
use crate::par::Exec;
use crate::rat::{fmt_q, q_to_i64, q_zero, qi, qr, Q};
use crate::reptheory::{character_value, weight_multiplicities, MultiplicityTable, SatakePoint};
use crate::rootdata::{CaseData, WeightVector};
use crate::series::HalfPowerSeries;

/// The automorphic/dual pair of a singular period problem.
#[derive(Debug, Clone, Copy)]
pub struct PeriodPair {
    pub automorphic: &'static CaseData,
    pub dual: &'static CaseData,
}

pub fn period_pair(name: &str) -> Result<PeriodPair> {
    use crate::rootdata::{case, CaseId};
    match name {
        "ginzburg" => Ok(PeriodPair {
            automorphic: case(CaseId::GinzburgAuto),
            dual: case(CaseId::GinzburgDual),
        }),
        "garrett" => Ok(PeriodPair {
            automorphic: case(CaseId::GarrettAuto),
            dual: case(CaseId::GarrettDual),
        }),
        other => Err(Error::UnknownCase(format!("{other} (expected ginzburg or garrett)"))),
    }
}

/// Evaluates the character s_chi of the dual group at a Satake point given
/// on the dual side. The coweight's ambient coordinates are literally dual
/// weight coordinates, which is the coordinate identity behind duality.
fn dual_character(cd: &CaseData, chi_coords: &[Q], point: &SatakePoint) -> Result<Q> {
    let dual = cd.dual()?;
    character_value(dual, &WeightVector(chi_coords.to_vec()), point)
}

/// Sum of s_chi u^{-<theta, chi>} over the admissible coweight cone, up to
/// height `trunc`.
pub fn automorphic_local_factor(
    cd: &CaseData,
    point: &SatakePoint,
    trunc: usize,
) -> Result<HalfPowerSeries> {
    automorphic_local_factor_with(cd, point, trunc, Exec::default())
}

pub fn automorphic_local_factor_with(
    cd: &CaseData,
    point: &SatakePoint,
    trunc: usize,
    exec: Exec,
) -> Result<HalfPowerSeries> {
    automorphic_tables_with(cd, trunc, exec)?.local_factor(point)
}

/// Character tables of the dual-group representations indexed by the
/// admissible coweight cone, grouped by height. One enumeration serves any
/// number of Satake points.
pub struct AutomorphicTables {
    case_name: String,
    rank: usize,
    trunc: usize,
    by_degree: Vec<Vec<Arc<MultiplicityTable>>>,
}

pub fn automorphic_tables(cd: &CaseData, trunc: usize) -> Result<AutomorphicTables> {
    automorphic_tables_with(cd, trunc, Exec::default())
}

pub fn automorphic_tables_with(
    cd: &CaseData,
    trunc: usize,
    exec: Exec,
) -> Result<AutomorphicTables> {
    let dual = cd.dual()?;
    let set = enumerate_automorphic_with(cd, trunc, exec)?;
    let mut by_degree = Vec::with_capacity(set.by_degree.len());
    for chis in &set.by_degree {
        let tables = crate::par::map_indices(exec, chis.len(), |i| {
            weight_multiplicities(dual, &WeightVector(chis[i].0.clone()))
        });
        by_degree.push(tables.into_iter().collect::<Result<Vec<_>>>()?);
    }
    Ok(AutomorphicTables { case_name: cd.name.clone(), rank: dual.rank, trunc, by_degree })
}

impl AutomorphicTables {
    pub fn local_factor(&self, point: &SatakePoint) -> Result<HalfPowerSeries> {
        if point.rank() != self.rank {
            return Err(Error::Dimension(format!(
                "point rank {} vs dual of {} rank {}",
                point.rank(),
                self.case_name,
                self.rank
            )));
        }
        let mut s = HalfPowerSeries::zero(self.trunc as i64);
        for (d, tables) in self.by_degree.iter().enumerate() {
            let mut total = q_zero();
            for t in tables {
                total += t.eval(point);
            }
            s.add_term(d as i64, total);
        }
        Ok(s)
    }
}

/// Same sum with one coweight deleted at the given height. This is the
/// negative control: the comparison must then fail at exactly that height.
pub fn automorphic_local_factor_corrupted(
    cd: &CaseData,
    point: &SatakePoint,
    trunc: usize,
    corrupt_degree: usize,
) -> Result<HalfPowerSeries> {
    if corrupt_degree > trunc {
        return Err(Error::Domain(format!(
            "corruption height {corrupt_degree} beyond truncation {trunc}"
        )));
    }
    let set = enumerate_automorphic_with(cd, trunc, Exec::default())?;
    if set.by_degree[corrupt_degree].is_empty() {
        return Err(Error::Domain(format!("no coweights at height {corrupt_degree} to delete")));
    }
    let mut s = HalfPowerSeries::zero(trunc as i64);
    for (d, chis) in set.by_degree.iter().enumerate() {
        let skip = if d == corrupt_degree { 1 } else { 0 };
        let mut total = q_zero();
        for chi in chis.iter().skip(skip) {
            total += dual_character(cd, &chi.0, point)?;
        }
        s.add_term(d as i64, total);
    }
    Ok(s)
}

/// Torus trace on the graded coordinate ring of the dual cone, reindexed to
/// the half-power variable: the coefficient of u^{-d} is the trace on the
/// degree-d piece.
pub fn spectral_local_factor(
    dual: &CaseData,
    point: &SatakePoint,
    trunc: usize,
) -> Result<HalfPowerSeries> {
    spectral_local_factor_with(dual, point, trunc, Exec::default())
}

pub fn spectral_local_factor_with(
    dual: &CaseData,
    point: &SatakePoint,
    trunc: usize,
    exec: Exec,
) -> Result<HalfPowerSeries> {
    let t_series = crate::lfactors::nonlinear_local_factor_with(dual, point, trunc, exec)?;
    Ok(t_series.to_half_power(1))
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct DualityVerdict {
    pub automorphic_case: String,
    pub dual_case: String,
    pub point_label: Option<String>,
    pub trunc: usize,
    pub pass: bool,
    pub first_mismatch_degree: Option<i64>,
}

/// Compares the automorphic factor of `cd` against the spectral factor of
/// its dual at one Satake point, coefficient by coefficient up to u^{-trunc}.
pub fn verify_local_duality(
    cd: &CaseData,
    point: &SatakePoint,
    trunc: usize,
) -> Result<DualityVerdict> {
    verify_local_duality_with(cd, point, trunc, Exec::default())
}

pub fn verify_local_duality_with(
    cd: &CaseData,
    point: &SatakePoint,
    trunc: usize,
    exec: Exec,
) -> Result<DualityVerdict> {
    duality_checker_with(cd, trunc, exec)?.verify(point)
}

/// Both sides of the comparison precompiled once; `verify` per point is then
/// evaluation only.
pub struct DualityChecker {
    automorphic_case: String,
    dual_case: String,
    trunc: usize,
    aut: AutomorphicTables,
    spec: SpectralTables,
}

pub fn duality_checker(cd: &CaseData, trunc: usize) -> Result<DualityChecker> {
    duality_checker_with(cd, trunc, Exec::default())
}

pub fn duality_checker_with(cd: &CaseData, trunc: usize, exec: Exec) -> Result<DualityChecker> {
    let dual = cd.dual()?;
    Ok(DualityChecker {
        automorphic_case: cd.name.clone(),
        dual_case: dual.name.clone(),
        trunc,
        aut: automorphic_tables_with(cd, trunc, exec)?,
        spec: spectral_tables_with(dual, trunc, exec)?,
    })
}

impl DualityChecker {
    pub fn verify(&self, point: &SatakePoint) -> Result<DualityVerdict> {
        let aut = self.aut.local_factor(point)?;
        let spec = self.spec.local_factor(point)?.to_half_power(1);
        let first = aut.first_mismatch(&spec, self.trunc as i64);
        Ok(DualityVerdict {
            automorphic_case: self.automorphic_case.clone(),
            dual_case: self.dual_case.clone(),
            point_label: point.label.clone(),
            trunc: self.trunc,
            pass: first.is_none(),
            first_mismatch_degree: first,
        })
    }
}

/// Negative-control comparison: drops one coweight at `corrupt_degree` from
/// the automorphic side and reports where the comparison breaks.
pub fn verify_local_duality_corrupted(
    cd: &CaseData,
    point: &SatakePoint,
    trunc: usize,
    corrupt_degree: usize,
) -> Result<DualityVerdict> {
    let dual = cd.dual()?;
    let aut = automorphic_local_factor_corrupted(cd, point, trunc, corrupt_degree)?;
    let spec = spectral_local_factor(dual, point, trunc)?;
    let first = aut.first_mismatch(&spec, trunc as i64);
    Ok(DualityVerdict {
        automorphic_case: cd.name.clone(),
        dual_case: dual.name.clone(),
        point_label: point.label.clone(),
        trunc,
        pass: first.is_none(),
        first_mismatch_degree: first,
    })
}

/// The twisted Whittaker sum before reindexing: q^{m(1-2a)} times the sum of
/// q^{-<theta,chi>/2} s_{chi + 2m rho_check} over the m-shifted bound set,
/// with the coweight height <theta,chi> running up to
/// target_degree - (2+gamma) m.
pub fn presum_local_factor(
    cd: &CaseData,
    point: &SatakePoint,
    m: i64,
    target_degree: i64,
) -> Result<HalfPowerSeries> {
    let consts = cd.derived_constants()?;
    let two_m_gimel = q_to_i64(&(qi(2 * m) * &consts.gimel))
        .ok_or_else(|| Error::Domain("2m*gimel is not an integer".into()))?;
    let shift_step = q_to_i64(&((qi(2) + &consts.gamma) * qi(m)))
        .ok_or_else(|| Error::Domain("(2+gamma)m is not an integer".into()))?;
    let height_bound = target_degree - shift_step;
    let entries = enumerate_pre_reindex(cd, m, height_bound, Exec::default())?;
    // u-exponent of the prefactor: q^{m(1-2a)} = u^{2m(1-2a)}.
    let pref = q_to_i64(&(qi(2 * m) * (qi(1) - qi(2) * &consts.a)))
        .ok_or_else(|| Error::Domain("2m(1-2a) is not an integer".into()))?;
    let trunc = target_degree + two_m_gimel;
    let mut s = HalfPowerSeries::zero(trunc);
    let two_m_rho_check = cd.rho_check.scale(&qi(2 * m));
    for (chi, w) in entries {
        let shifted = chi.add(&two_m_rho_check);
        let val = dual_character(cd, &shifted.0, point)?;
        // u^{2m(1-2a)} * u^{-w} = u^{-(w - pref)}.
        s.add_term(w - pref, val);
    }
    Ok(s)
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct ReindexVerdict {
    pub case: String,
    pub m: i64,
    pub target_degree: i64,
    pub pass: bool,
    pub first_mismatch_degree: Option<i64>,
}

/// The reindexing identity behind the twisted comparison: the pre-sum times
/// the character value of (2+gamma)m theta_check equals q^{-m*gimel} times
/// the plain automorphic factor, as complete series up to
/// u^{-(target_degree + 2m gimel)}.
pub fn verify_pre_reindex(
    cd: &CaseData,
    point: &SatakePoint,
    m: i64,
    target_degree: i64,
) -> Result<ReindexVerdict> {
    let consts = cd.derived_constants()?;
    let two_m_gimel = q_to_i64(&(qi(2 * m) * &consts.gimel))
        .ok_or_else(|| Error::Domain("2m*gimel is not an integer".into()))?;
    let pre = presum_local_factor(cd, point, m, target_degree)?;

    // theta_check^((2+gamma)m) evaluated at the point, as one combined
    // coweight (theta_check alone need not be a lattice point).
    let tc = cd
        .theta_check
        .as_ref()
        .ok_or_else(|| Error::Domain(format!("case {} has no theta_check", cd.name)))?;
    let combined = tc.scale(&((qi(2) + &consts.gamma) * qi(m)));
    let scale = dual_character(cd, &combined.0, point)?;
    let lhs = pre.scale(&scale);

    let aut = automorphic_local_factor(cd, point, target_degree as usize)?;
    let rhs = aut.shift(two_m_gimel);

    let bound = target_degree + two_m_gimel;
    let first = lhs.first_mismatch(&rhs, bound);
    Ok(ReindexVerdict {
        case: cd.name.clone(),
        m,
        target_degree,
        pass: first.is_none(),
        first_mismatch_degree: first,
    })
}

/// One side of the normalization ledger. Entries are exponents of
/// Delta^{1/4}, where Delta = q^{2g-2} is the global discriminant factor.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ExponentLedger {
    pub entries: Vec<(String, String)>,
    #[serde(skip)]
    pub total: Q,
}

impl ExponentLedger {
    fn new(entries: Vec<(String, Q)>) -> Self {
        let total = entries.iter().fold(q_zero(), |acc, (_, v)| acc + v);
        ExponentLedger {
            entries: entries.into_iter().map(|(l, v)| (l, fmt_q(&v))).collect(),
            total,
        }
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct NormalizationLedger {
    pub automorphic_case: String,
    pub dual_case: String,
    pub genus: i64,
    pub automorphic: ExponentLedger,
    pub spectral: ExponentLedger,
    /// Automorphic total minus spectral total, in Delta^{1/4} units.
    pub difference_quarter_units: String,
    /// The same difference as an exponent of q: difference * (g-1)/2.
    pub q_exponent_difference: String,
    /// Expected value: the case constant dim(G/U) - (2a-1)gamma.
    pub expected_discrepancy: String,
    pub pass: bool,
}

/// Tracks every quarter-power of Delta the two global normalizations carry
/// and checks their difference against the discrepancy constant.
pub fn normalization_ledger(cd: &CaseData, genus: i64) -> Result<NormalizationLedger> {
    let consts = cd.derived_constants()?;
    let dual = cd.dual()?;
    let dim_cone = dual.cone_dim.ok_or_else(|| {
        Error::Domain(format!("dual case {} has no recorded cone dimension", dual.name))
    })? as i64;

    // Delta^{gimel/2} in the period normalization is 2*gimel quarter-units;
    // recombining the local factors costs the same amount back.
    let automorphic = ExponentLedger::new(vec![
        ("global eigenform normalization Delta^(gimel/2)".into(), qi(2) * &consts.gimel),
        ("local factor recombination Delta^(-gimel/2)".into(), qi(-2) * &consts.gimel),
    ]);
    // The trace side carries Delta^((epsilon - dim cone)/4).
    let spectral = ExponentLedger::new(vec![(
        "spectral trace normalization Delta^((epsilon - dim)/4)".into(),
        &consts.epsilon - qi(dim_cone),
    )]);

    let diff = &automorphic.total - &spectral.total;
    let expected = consts.discrepancy_exponent.clone();
    let q_exp = &diff * qr(genus - 1, 2);
    Ok(NormalizationLedger {
        automorphic_case: cd.name.clone(),
        dual_case: dual.name.clone(),
        genus,
        pass: diff == expected,
        automorphic,
        spectral,
        difference_quarter_units: fmt_q(&diff),
        q_exponent_difference: fmt_q(&q_exp),
        expected_discrepancy: fmt_q(&expected),
    })
}

/// The unresolved central factor carried symbolically by both sides: the
/// finite character composed with theta_check, evaluated on the derivative
/// operator raised to -(1 + gamma/2).
pub fn central_term_token(cd: &CaseData) -> Result<String> {
    let consts = cd.derived_constants()?;
    let exp = qi(-1) - &consts.gamma * qr(1, 2);
    Ok(format!("(chi_f o theta_check)(partial^({}))", fmt_q(&exp)))
}

/// Two polynomial identities in the normalization constants that the global
/// bookkeeping relies on: the pre-sum prefactors collapse to -m*gimel, and
/// the eigenform weight factor collapses to gimel/2. Both are rational
/// identities in a alone; a = 1 is outside the domain.
pub fn verify_prefactor_identities(a: &Q) -> Result<bool> {
    if *a == qi(1) {
        return Err(Error::Domain("a = 1 makes gamma undefined".into()));
    }
    let gamma = qi(1) / (a - qi(1));
    let gimel = (qi(2) * a - qi(1)) * (qi(2) * a - qi(3)) / (qi(2) * a - qi(2));
    // Per unit m: -2a - 2(a-1) + (2+gamma)(2a-1)/2 = -gimel.
    let lhs1 = qi(-2) * a - qi(2) * (a - qi(1)) + (qi(2) + &gamma) * (qi(2) * a - qi(1)) * qr(1, 2);
    // (a - 1/2)(1 - gamma/2) = gimel/2.
    let lhs2 = (a - qr(1, 2)) * (qi(1) - &gamma * qr(1, 2));
    Ok(lhs1 == -&gimel && lhs2 == &gimel * qr(1, 2))
}

#[derive(Debug, Clone)]
pub struct PlaceInput {
    pub q: u64,
    pub point: SatakePoint,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct PlaceVerdict {
    pub q: u64,
    pub label: Option<String>,
    pub pass: bool,
    pub first_mismatch_degree: Option<i64>,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct GlobalComparison {
    pub automorphic_case: String,
    pub dual_case: String,
    pub genus: i64,
    pub trunc: usize,
    pub places: Vec<PlaceVerdict>,
    pub ledger: NormalizationLedger,
    /// Symbolic central factor, identical on both sides by construction.
    pub central_term: String,
    pub central_term_matches: bool,
    pub all_places_pass: bool,
    pub pass: bool,
}

/// Assembles the global comparison: local verification at every supplied
/// place, the normalization ledger at the given genus, and the symbolic
/// central factor. The residue cardinalities q_v are metadata; the local
/// comparisons are exact coefficient identities independent of them.
pub fn assemble_global(
    cd: &CaseData,
    genus: i64,
    places: &[PlaceInput],
    trunc: usize,
) -> Result<GlobalComparison> {
    let dual = cd.dual()?;
    let checker = duality_checker(cd, trunc)?;
    let mut verdicts = Vec::with_capacity(places.len());
    for p in places {
        let v = checker.verify(&p.point)?;
        verdicts.push(PlaceVerdict {
            q: p.q,
            label: p.point.label.clone(),
            pass: v.pass,
            first_mismatch_degree: v.first_mismatch_degree,
        });
    }
    let ledger = normalization_ledger(cd, genus)?;
    let token = central_term_token(cd)?;
    let all_places_pass = verdicts.iter().all(|v| v.pass);
    let pass = all_places_pass && ledger.pass;
    Ok(GlobalComparison {
        automorphic_case: cd.name.clone(),
        dual_case: dual.name.clone(),
        genus,
        trunc,
        places: verdicts,
        ledger,
        central_term: token,
        central_term_matches: true,
        all_places_pass,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{case, CaseId};

    #[test]
    fn identity_point_duality_low_degrees() {
        let cd = case(CaseId::GinzburgAuto);
        let point = SatakePoint::identity(cd.rank);
        let v = verify_local_duality(cd, &point, 3).unwrap();
        assert!(v.pass, "mismatch at {:?}", v.first_mismatch_degree);
    }

    #[test]
    fn ledger_difference_is_three_quarters() {
        for name in ["ginzburg_auto", "garrett_auto"] {
            let cd = crate::rootdata::load_case(name).unwrap();
            let l = normalization_ledger(cd, 2).unwrap();
            assert!(l.pass);
            assert_eq!(l.difference_quarter_units, "3");
        }
    }

    #[test]
    fn prefactor_identities_hold_away_from_one() {
        assert!(verify_prefactor_identities(&qi(2)).unwrap());
        assert!(verify_prefactor_identities(&qr(3, 2)).unwrap());
        assert!(verify_prefactor_identities(&qr(7, 5)).unwrap());
        assert!(verify_prefactor_identities(&qi(1)).is_err());
    }

    #[test]
    fn central_token_mentions_exact_exponent() {
        let cd = case(CaseId::GinzburgAuto);
        assert_eq!(central_term_token(cd).unwrap(), "(chi_f o theta_check)(partial^(-3/2))");
        let cd = case(CaseId::GarrettAuto);
        assert_eq!(central_term_token(cd).unwrap(), "(chi_f o theta_check)(partial^(-2))");
    }
}
