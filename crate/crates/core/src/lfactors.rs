//! Local factors on the spectral side.
//!
//! The nonlinear factor of a graded cone is the generating function of torus
//! traces on its coordinate ring: the coefficient of t^d is the sum of the
//! characters of V_{-w0 lambda} over the relevant lambda of degree d. For
//! smooth or complete-intersection spaces the same trace has a closed
//! product form, which is what the comparison criteria exercise.

use std::sync::Arc;

use crate::cones::enumerate_relevant_with;
use crate::error::{Error, Result};
use crate::par::Exec;
use crate::rat::{q_one, qi, Q};
use crate::reptheory::{
    character_value, weight_multiplicities, weyl_dimension, MultiplicityTable, SatakePoint,
};
use crate::rootdata::{c3_auxiliary, case, CaseData, CaseId, WeightVector};
use crate::series::GradedSeries;

/// Spaces whose local factor the CLI can evaluate. The cone variants run the
/// weight enumeration; the affine and tensor variants are the classical
/// sanity targets with known product forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LfactorSpace {
    /// Graded cone of a catalogued case.
    Cone(CaseId),
    /// Affine line with scaling action: sum_k z^k t^k.
    AffineLine,
    /// Affine plane under GL2: sum_k h_k(alpha, beta) t^k.
    AffinePlane,
    /// Affine 3-space under GL3.
    AffineThreeSpace,
    /// Rank <= 1 matrices in the 2x2 tensor square: sum_k s_k(A) s_k(B) t^k.
    RankOneTensors,
    /// Full tensor square of two planes: partitions of length <= 2.
    TensorSquare,
}

impl LfactorSpace {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "a1" => Ok(LfactorSpace::AffineLine),
            "a2" => Ok(LfactorSpace::AffinePlane),
            "a3" => Ok(LfactorSpace::AffineThreeSpace),
            "rank1cone" => Ok(LfactorSpace::RankOneTensors),
            "tensor" => Ok(LfactorSpace::TensorSquare),
            other => CaseId::parse(other).map(LfactorSpace::Cone).map_err(|_| {
                Error::UnknownCase(format!(
                    "{other} (expected a case name or a1/a2/a3/rank1cone/tensor)"
                ))
            }),
        }
    }

    /// Number of Satake points the space expects and their ranks.
    pub fn point_ranks(&self) -> Vec<usize> {
        match self {
            LfactorSpace::Cone(id) => vec![case(*id).rank],
            LfactorSpace::AffineLine => vec![1],
            LfactorSpace::AffinePlane => vec![2],
            LfactorSpace::AffineThreeSpace => vec![3],
            LfactorSpace::RankOneTensors | LfactorSpace::TensorSquare => vec![2, 2],
        }
    }

    pub fn local_factor(&self, points: &[SatakePoint], trunc: usize) -> Result<GradedSeries> {
        let ranks = self.point_ranks();
        if points.len() != ranks.len() {
            return Err(Error::Dimension(format!(
                "space expects {} Satake point(s), got {}",
                ranks.len(),
                points.len()
            )));
        }
        for (p, r) in points.iter().zip(&ranks) {
            if p.rank() != *r {
                return Err(Error::Dimension(format!(
                    "Satake point rank {} does not match expected {r}",
                    p.rank()
                )));
            }
        }
        match self {
            LfactorSpace::Cone(id) => nonlinear_local_factor(case(*id), &points[0], trunc),
            LfactorSpace::AffineLine => {
                let z = &points[0].values()[0];
                let mut s = GradedSeries::zero(trunc);
                let mut pw = q_one();
                for d in 0..=trunc {
                    s.set_coeff(d, pw.clone());
                    pw *= z;
                }
                Ok(s)
            }
            LfactorSpace::AffinePlane => {
                let gl2 = case(CaseId::Gl2);
                let mut s = GradedSeries::zero(trunc);
                for d in 0..=trunc {
                    let hw = WeightVector::from_i64(&[d as i64, 0]);
                    s.set_coeff(d, character_value(gl2, &hw, &points[0])?);
                }
                Ok(s)
            }
            LfactorSpace::AffineThreeSpace => {
                let gl3 = case(CaseId::Gl3);
                let mut s = GradedSeries::zero(trunc);
                for d in 0..=trunc {
                    let hw = WeightVector::from_i64(&[d as i64, 0, 0]);
                    s.set_coeff(d, character_value(gl3, &hw, &points[0])?);
                }
                Ok(s)
            }
            LfactorSpace::RankOneTensors => {
                let gl2 = case(CaseId::Gl2);
                let mut s = GradedSeries::zero(trunc);
                for d in 0..=trunc {
                    let hw = WeightVector::from_i64(&[d as i64, 0]);
                    let a = character_value(gl2, &hw, &points[0])?;
                    let b = character_value(gl2, &hw, &points[1])?;
                    s.set_coeff(d, a * b);
                }
                Ok(s)
            }
            LfactorSpace::TensorSquare => {
                let gl2 = case(CaseId::Gl2);
                let mut s = GradedSeries::zero(trunc);
                for d in 0..=trunc {
                    let mut total = crate::rat::q_zero();
                    // Partitions (d-j, j) of d with at most two parts.
                    for j in 0..=(d / 2) {
                        let hw = WeightVector::from_i64(&[(d - j) as i64, j as i64]);
                        let a = character_value(gl2, &hw, &points[0])?;
                        let b = character_value(gl2, &hw, &points[1])?;
                        total += a * b;
                    }
                    s.set_coeff(d, total);
                }
                Ok(s)
            }
        }
    }
}

/// Trace generating function of the graded coordinate ring of the cone:
/// coefficient of t^d is sum over relevant lambda of degree d of the
/// character of V_{-w0 lambda} at the point.
pub fn nonlinear_local_factor(
    cd: &CaseData,
    point: &SatakePoint,
    trunc: usize,
) -> Result<GradedSeries> {
    nonlinear_local_factor_with(cd, point, trunc, Exec::default())
}

pub fn nonlinear_local_factor_with(
    cd: &CaseData,
    point: &SatakePoint,
    trunc: usize,
    exec: Exec,
) -> Result<GradedSeries> {
    spectral_tables_with(cd, trunc, exec)?.local_factor(point)
}

/// Character tables of every V_{-w0 lambda} over the relevant cone, grouped
/// by degree. Building them costs one weight enumeration plus one
/// multiplicity computation per weight; evaluating at a Satake point is then
/// a plain table scan, so a batch of points should share one value.
pub struct SpectralTables {
    case_name: String,
    rank: usize,
    trunc: usize,
    by_degree: Vec<Vec<Arc<MultiplicityTable>>>,
}

pub fn spectral_tables(cd: &CaseData, trunc: usize) -> Result<SpectralTables> {
    spectral_tables_with(cd, trunc, Exec::default())
}

pub fn spectral_tables_with(cd: &CaseData, trunc: usize, exec: Exec) -> Result<SpectralTables> {
    let set = enumerate_relevant_with(cd, trunc, exec)?;
    let mut by_degree = Vec::with_capacity(set.by_degree.len());
    for weights in &set.by_degree {
        let tables = crate::par::map_indices(exec, weights.len(), |i| {
            weight_multiplicities(cd, &cd.apply_minus_w0(&weights[i]))
        });
        by_degree.push(tables.into_iter().collect::<Result<Vec<_>>>()?);
    }
    Ok(SpectralTables { case_name: cd.name.clone(), rank: cd.rank, trunc, by_degree })
}

impl SpectralTables {
    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn local_factor(&self, point: &SatakePoint) -> Result<GradedSeries> {
        if point.rank() != self.rank {
            return Err(Error::Dimension(format!(
                "point rank {} vs case {} rank {}",
                point.rank(),
                self.case_name,
                self.rank
            )));
        }
        let mut s = GradedSeries::zero(self.trunc);
        for (d, tables) in self.by_degree.iter().enumerate() {
            let mut total = crate::rat::q_zero();
            for t in tables {
                total += t.eval(point);
            }
            s.set_coeff(d, total);
        }
        Ok(s)
    }
}

/// Hilbert series of the cone: character at the identity point.
pub fn hilbert_series(cd: &CaseData, trunc: usize) -> Result<GradedSeries> {
    hilbert_series_with(cd, trunc, Exec::default())
}

pub fn hilbert_series_with(cd: &CaseData, trunc: usize, exec: Exec) -> Result<GradedSeries> {
    let set = enumerate_relevant_with(cd, trunc, exec)?;
    let mut s = GradedSeries::zero(trunc);
    for (d, weights) in set.by_degree.iter().enumerate() {
        let dims = crate::par::map_indices(exec, weights.len(), |i| weyl_dimension(cd, &weights[i]));
        let mut total = crate::rat::q_zero();
        for v in dims {
            total += qi(v? as i64);
        }
        s.set_coeff(d, total);
    }
    Ok(s)
}

/// Product form for a smooth linear space: product of (1 - e t)^{-1} over the
/// eigenvalues.
pub fn linear_local_factor(eigenvalues: &[Q], trunc: usize) -> Result<GradedSeries> {
    let factors: Vec<(Q, usize, i64)> =
        eigenvalues.iter().map(|e| (e.clone(), 1usize, -1i64)).collect();
    GradedSeries::product_of_binomials(trunc, &factors)
}

/// Koszul product form for a complete intersection: ambient eigenvalues in
/// the denominator, one numerator factor per defining invariant.
pub fn lci_local_factor(cd: &CaseData, point: &SatakePoint, trunc: usize) -> Result<GradedSeries> {
    let lci = cd.lci.as_ref().ok_or_else(|| {
        Error::Domain(format!("case {} has no complete intersection presentation", cd.name))
    })?;
    let mut factors: Vec<(Q, usize, i64)> = Vec::new();
    for w in &lci.ambient {
        factors.push((point.eval_weight(cd, w)?, 1, -1));
    }
    for inv in &lci.invariants {
        factors.push((point.eval_weight(cd, &inv.weight)?, inv.degree as usize, 1));
    }
    GradedSeries::product_of_binomials(trunc, &factors)
}

/// Closed-form Hilbert series where one exists.
pub fn closed_form_hilbert(id: CaseId, trunc: usize) -> Result<GradedSeries> {
    match id {
        // Nilpotent cone of sl3: codim-2 complete intersection in A^8 cut by
        // invariants of degrees 2 and 3.
        CaseId::GinzburgAuto => GradedSeries::product_of_binomials(
            trunc,
            &[(q_one(), 2, 1), (q_one(), 3, 1), (q_one(), 1, -8)],
        ),
        // Hyperdeterminant hypersurface in A^8.
        CaseId::GarrettAuto => {
            GradedSeries::product_of_binomials(trunc, &[(q_one(), 4, 1), (q_one(), 1, -8)])
        }
        // Cone over the Lagrangian Grassmannian LGr(3,6): degree-k piece is
        // the k-th fundamental power of the third fundamental rep of C3.
        CaseId::GarrettDual => {
            let c3 = c3_auxiliary();
            let mut s = GradedSeries::zero(trunc);
            for k in 0..=trunc {
                let lam = WeightVector::from_i64(&[k as i64, k as i64, k as i64]);
                s.set_coeff(k, qi(weyl_dimension(c3, &lam)? as i64));
            }
            Ok(s)
        }
        other => Err(Error::Domain(format!(
            "no closed-form Hilbert series catalogued for {}",
            other.name()
        ))),
    }
}
