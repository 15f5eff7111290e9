//! The relevant cone of spectral component labels and the automorphic
//! support cone of Hecke coweights, with exhaustive lattice enumeration.
//!
//! Relevance of a label lambda means
//!   0 <= <lambda, rho_check_prime> <= min_i <lambda, acheck_i>,
//! which forces dominance. The cone's extremal generators are
//! pi_i - n_acheck_i * theta (one per simple root) and rho - (a-1) theta,
//! and a label is relevant exactly when it is a nonnegative combination of
//! them. Grading degrees come from `grading_cochar` and are nonnegative
//! integers on lattice points of the cone.
//!
//! Enumeration is by bounding box in lattice coordinates: the degree <= N
//! slice of each cone is the convex hull of explicit corner points, so the
//! integer box spanned by the corners provably contains every lattice point
//! of the slice, and a pointwise filter does the rest.

use num::traits::Signed;

use crate::error::{Error, Result};
use crate::par::{filter_map_indices, Exec};
use crate::rat::{q_floor_i64, q_to_i64, q_zero, qi, Q};
use crate::rootdata::{CaseData, CoweightVector, WeightVector};

/// Extremal ray generators of the relevant cone, one per simple root plus the
/// top generator rho - (a-1) theta.
pub fn extremal_generators(case: &CaseData) -> Result<Vec<WeightVector>> {
    let theta = case
        .theta
        .as_ref()
        .ok_or_else(|| Error::Domain(format!("case {} has no theta", case.name)))?;
    let a = case.pair(&case.rho, &case.rho_check);
    let mut gens = Vec::new();
    for (pi, n_check) in case.fundamental_like.iter().zip(&case.n_alpha_check) {
        gens.push(pi.sub(&theta.scale(n_check)));
    }
    gens.push(case.rho.sub(&theta.scale(&(a - qi(1)))));
    Ok(gens)
}

pub fn is_relevant(case: &CaseData, lambda: &WeightVector) -> Result<bool> {
    let rcp = case
        .rho_check_prime
        .as_ref()
        .ok_or_else(|| Error::Domain(format!("case {} has no rho_check_prime", case.name)))?;
    let height = case.pair(lambda, rcp);
    if height.is_negative() {
        return Ok(false);
    }
    Ok(case.simple_coroots.iter().all(|ac| case.pair(lambda, ac) >= height))
}

/// Expresses lambda on the extremal generators. `Ok(None)` reports failure as
/// a value: the system is inconsistent or some coefficient is negative.
/// Succeeds exactly on the relevant cone.
pub fn decompose_on_extremals(case: &CaseData, lambda: &WeightVector) -> Result<Option<Vec<Q>>> {
    let gens = extremal_generators(case)?;
    let m = crate::linalg::Mat::from_cols(gens.iter().map(|g| g.0.clone()).collect());
    let Some(coeffs) = m.solve_full_col_rank(&lambda.0) else {
        return Ok(None);
    };
    if coeffs.iter().any(|c| c.is_negative()) {
        return Ok(None);
    }
    Ok(Some(coeffs))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelevantWeightSet {
    pub case_name: String,
    pub max_degree: usize,
    /// by_degree[d] lists the relevant lattice labels of grading degree d,
    /// sorted canonically.
    pub by_degree: Vec<Vec<WeightVector>>,
}

impl RelevantWeightSet {
    pub fn total(&self) -> usize {
        self.by_degree.iter().map(Vec::len).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphicWeightSet {
    pub case_name: String,
    pub max_degree: usize,
    /// by_degree[d] lists the bounded dominant lattice coweights with
    /// <theta, chi> = d, sorted canonically.
    pub by_degree: Vec<Vec<CoweightVector>>,
}

impl AutomorphicWeightSet {
    pub fn total(&self) -> usize {
        self.by_degree.iter().map(Vec::len).sum()
    }
}

/// Integer bounding box, in basis coordinates, of the convex hull of corner
/// points given in ambient coordinates.
fn coord_box(basis_inv: &crate::linalg::Mat, corners: &[Vec<Q>]) -> (Vec<i64>, Vec<i64>) {
    let rank = basis_inv.rows;
    let mut lo = vec![i64::MAX; rank];
    let mut hi = vec![i64::MIN; rank];
    for corner in corners {
        let coords = basis_inv.mul_vec(corner);
        for (i, c) in coords.iter().enumerate() {
            lo[i] = lo[i].min(q_floor_i64(c));
            hi[i] = hi[i].max(-q_floor_i64(&-c.clone())); // ceiling
        }
    }
    (lo, hi)
}

fn box_size(lo: &[i64], hi: &[i64]) -> usize {
    lo.iter().zip(hi).map(|(l, h)| (h - l + 1).max(0) as usize).product()
}

fn decode_index(mut idx: usize, lo: &[i64], hi: &[i64]) -> Vec<i64> {
    let mut coords = vec![0i64; lo.len()];
    for i in (0..lo.len()).rev() {
        let span = (hi[i] - lo[i] + 1) as usize;
        coords[i] = lo[i] + (idx % span) as i64;
        idx /= span;
    }
    coords
}

fn scan_lattice_box<T: Send>(
    exec: Exec,
    basis: &crate::linalg::Mat,
    lo: &[i64],
    hi: &[i64],
    f: impl Fn(Vec<Q>) -> Option<T> + Sync + Send,
) -> Vec<T> {
    let total = box_size(lo, hi);
    filter_map_indices(exec, total, |idx| {
        let coords = decode_index(idx, lo, hi);
        let qcoords: Vec<Q> = coords.iter().map(|&c| qi(c)).collect();
        f(basis.mul_vec(&qcoords))
    })
}

pub fn enumerate_relevant(case: &CaseData, max_degree: usize) -> Result<RelevantWeightSet> {
    enumerate_relevant_with(case, max_degree, Exec::default())
}

pub fn enumerate_relevant_with(
    case: &CaseData,
    max_degree: usize,
    exec: Exec,
) -> Result<RelevantWeightSet> {
    let gens = extremal_generators(case)?;
    let n = qi(max_degree as i64);
    // The degree <= N slice is the convex hull of 0 and N * g / deg(g).
    let mut corners: Vec<Vec<Q>> = vec![vec![q_zero(); case.rank]];
    for g in &gens {
        let deg = case.label_degree(g)?;
        if !deg.is_positive() {
            return Err(Error::Domain(format!(
                "case {} has a cone generator of degree {deg}; graded enumeration needs every degree slice finite",
                case.name
            )));
        }
        corners.push(g.scale(&(&n / deg)).0);
    }
    let (lo, hi) = coord_box(&case.weight_basis_inv, &corners);

    let found: Vec<(i64, WeightVector)> = scan_lattice_box(exec, &case.weight_basis, &lo, &hi, |v| {
        let w = WeightVector(v);
        if !is_relevant(case, &w).expect("case has cone data") {
            return None;
        }
        let deg = case.label_degree(&w).expect("case has cone data");
        let d = q_to_i64(&deg).expect("relevant lattice label has integer degree");
        assert!(d >= 0, "relevant label with negative degree");
        (d as usize <= max_degree).then_some((d, w))
    });

    let mut by_degree = vec![Vec::new(); max_degree + 1];
    for (d, w) in found {
        by_degree[d as usize].push(w);
    }
    for bucket in &mut by_degree {
        bucket.sort();
    }
    Ok(RelevantWeightSet { case_name: case.name.clone(), max_degree, by_degree })
}

/// Membership in the automorphic support cone:
/// dominance, <rho,chi> / (a-1) >= <theta,chi>, and for every simple root
/// <theta,chi> >= <rho - alpha, chi> / (a-1). The fundamental-weight bounds
/// <theta,chi> >= <pi,chi> / n_acheck follow from these; that implication is
/// asserted on every call rather than assumed.
pub fn satisfies_automorphic_bounds(case: &CaseData, chi: &CoweightVector) -> Result<bool> {
    let theta = case
        .theta
        .as_ref()
        .ok_or_else(|| Error::Domain(format!("case {} has no theta", case.name)))?;
    let a = case.pair(&case.rho, &case.rho_check);
    let a1 = a - qi(1);
    if !a1.is_positive() {
        return Err(Error::Domain("automorphic bounds need a > 1".into()));
    }
    if !case.is_dominant_coweight(chi) {
        return Ok(false);
    }
    let w = case.pair(theta, chi);
    let whittaker = case.pair(&case.rho, chi) >= &a1 * &w;
    let mut support = true;
    for alpha in &case.simple_roots {
        let bound = case.pair(&case.rho.sub(alpha), chi) / &a1;
        if bound > w {
            support = false;
        }
    }
    let in_cone = whittaker && support;
    if in_cone {
        // The pi_alpha inequalities must be consequences, not extra cuts.
        for (pi, n_check) in case.fundamental_like.iter().zip(&case.n_alpha_check) {
            let pi_bound = case.pair(pi, chi) / n_check;
            assert!(
                pi_bound <= w,
                "fundamental-weight bound not implied by the support bounds at {chi}"
            );
        }
    }
    Ok(in_cone)
}

pub fn enumerate_automorphic(case: &CaseData, max_degree: usize) -> Result<AutomorphicWeightSet> {
    enumerate_automorphic_with(case, max_degree, Exec::default())
}

pub fn enumerate_automorphic_with(
    case: &CaseData,
    max_degree: usize,
    exec: Exec,
) -> Result<AutomorphicWeightSet> {
    let theta = case
        .theta
        .as_ref()
        .ok_or_else(|| Error::Domain(format!("case {} has no theta", case.name)))?;
    let theta_check = case.theta_check.as_ref().expect("theta_check comes with theta");
    // Validates a > 1 up front so the scan closure can treat bound checks as
    // infallible.
    satisfies_automorphic_bounds(case, &CoweightVector::zero(case.rank))?;
    let n = qi(max_degree as i64);

    // chi = sum <pi_i,chi> acheck_i + <theta,chi> theta_check, with
    // 0 <= <pi_i,chi> <= n_acheck_i * N and 0 <= <theta,chi> <= N on the
    // degree <= N slice. Corners of that parallelepiped bound the box.
    let mut corners = Vec::new();
    for mask in 0..(1u32 << (case.simple_roots.len() + 1)) {
        let mut corner = CoweightVector::zero(case.rank);
        for (i, (ac, nc)) in case.simple_coroots.iter().zip(&case.n_alpha_check).enumerate() {
            if mask & (1 << i) != 0 {
                corner = corner.add(&ac.scale(&(nc * &n)));
            }
        }
        if mask & (1 << case.simple_roots.len()) != 0 {
            corner = corner.add(&theta_check.scale(&n));
        }
        corners.push(corner.0);
    }
    let (lo, hi) = coord_box(&case.coweight_basis_inv, &corners);

    let found: Vec<(i64, CoweightVector)> =
        scan_lattice_box(exec, &case.coweight_basis, &lo, &hi, |v| {
            let chi = CoweightVector(v);
            if !satisfies_automorphic_bounds(case, &chi).expect("case has theta") {
                return None;
            }
            let d = q_to_i64(&case.pair(theta, &chi)).expect("integer theta height");
            (0 <= d && d as usize <= max_degree).then_some((d, chi))
        });

    let mut by_degree = vec![Vec::new(); max_degree + 1];
    for (d, chi) in found {
        by_degree[d as usize].push(chi);
    }
    for bucket in &mut by_degree {
        bucket.sort();
    }
    Ok(AutomorphicWeightSet { case_name: case.name.clone(), max_degree, by_degree })
}

/// Coweights of the pre-reindexing Whittaker sum at conductor exponent m:
/// chi + 2m rho_check dominant, <rho,chi> + m >= (a-1)<theta,chi>, and for
/// every simple root <theta,chi> >= <rho-alpha,chi>/(a-1) - gamma m and
/// <theta,chi> >= <pi,chi>/n_acheck - gamma m, truncated at
/// <theta,chi> <= height_bound. Pairs each coweight with its theta height.
pub fn enumerate_pre_reindex(
    case: &CaseData,
    m: i64,
    height_bound: i64,
    exec: Exec,
) -> Result<Vec<(CoweightVector, i64)>> {
    if m < 0 {
        return Err(Error::Domain("conductor exponent m must be >= 0".into()));
    }
    let theta = case
        .theta
        .as_ref()
        .ok_or_else(|| Error::Domain(format!("case {} has no theta", case.name)))?;
    let theta_check = case.theta_check.as_ref().expect("theta_check comes with theta");
    let consts = case.derived_constants()?;
    let gamma = &consts.gamma;
    let a1 = &consts.a - qi(1);
    let mq = qi(m);

    // Box: <pi_i,chi> in [-2m n_acheck_i, n_acheck_i (bound + gamma m)],
    // <theta,chi> in [-(2+gamma) m, bound].
    let w_lo = -(qi(2) + gamma) * &mq;
    let w_hi = qi(height_bound);
    let mut corners = Vec::new();
    for mask in 0..(1u32 << (case.simple_roots.len() + 1)) {
        let mut corner = CoweightVector::zero(case.rank);
        for (i, (ac, nc)) in case.simple_coroots.iter().zip(&case.n_alpha_check).enumerate() {
            let y = if mask & (1 << i) != 0 {
                nc * (&w_hi + gamma * &mq)
            } else {
                qi(-2) * &mq * nc
            };
            corner = corner.add(&ac.scale(&y));
        }
        let w = if mask & (1 << case.simple_roots.len()) != 0 { w_hi.clone() } else { w_lo.clone() };
        corner = corner.add(&theta_check.scale(&w));
        corners.push(corner.0);
    }
    let (lo, hi) = coord_box(&case.coweight_basis_inv, &corners);

    let shift = case.rho_check.scale(&qi(2 * m));
    let found: Vec<(CoweightVector, i64)> =
        scan_lattice_box(exec, &case.coweight_basis, &lo, &hi, |v| {
            let chi = CoweightVector(v);
            let shifted = chi.add(&shift);
            if !case.is_dominant_coweight(&shifted) {
                return None;
            }
            let w = case.pair(theta, &chi);
            if w > w_hi {
                return None;
            }
            if case.pair(&case.rho, &chi) + &mq < &a1 * &w {
                return None;
            }
            for alpha in &case.simple_roots {
                if &case.pair(&case.rho.sub(alpha), &chi) / &a1 - gamma * &mq > w {
                    return None;
                }
            }
            for (pi, nc) in case.fundamental_like.iter().zip(&case.n_alpha_check) {
                if &case.pair(pi, &chi) / nc - gamma * &mq > w {
                    return None;
                }
            }
            let wd = q_to_i64(&w).expect("integer theta height");
            Some((chi, wd))
        });
    let mut found = found;
    found.sort();
    Ok(found)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub case_name: String,
    pub dual_name: String,
    pub max_degree: usize,
    /// (degree, description) for every weight set discrepancy.
    pub mismatches: Vec<(usize, String)>,
}

impl DualityReport {
    pub fn pass(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Degree-by-degree comparison: minus_w0 followed by the coordinate
/// identification must biject the automorphic coweights of the case with the
/// relevant labels of its dual.
pub fn weight_set_duality_check(case: &CaseData, max_degree: usize) -> Result<DualityReport> {
    let dual = case.dual()?;
    let auto = enumerate_automorphic(case, max_degree)?;
    let relevant = enumerate_relevant(dual, max_degree)?;
    let mut mismatches = Vec::new();
    for d in 0..=max_degree {
        let mut mapped: Vec<WeightVector> = auto.by_degree[d]
            .iter()
            .map(|chi| WeightVector(case.apply_minus_w0_cowt(chi).0))
            .collect();
        mapped.sort();
        let expected = &relevant.by_degree[d];
        if &mapped != expected {
            let only_auto: Vec<String> = mapped
                .iter()
                .filter(|w| !expected.contains(w))
                .map(|w| w.to_string())
                .collect();
            let only_rel: Vec<String> = expected
                .iter()
                .filter(|w| !mapped.contains(w))
                .map(|w| w.to_string())
                .collect();
            mismatches.push((
                d,
                format!(
                    "automorphic-only: [{}], relevant-only: [{}]",
                    only_auto.join(" "),
                    only_rel.join(" ")
                ),
            ));
        }
    }
    Ok(DualityReport {
        case_name: case.name.clone(),
        dual_name: dual.name.clone(),
        max_degree,
        mismatches,
    })
}
