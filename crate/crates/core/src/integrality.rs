//! Integrality of local Satake parameters against the cone forms.
//!
//! A local parameter is a lattice coweight chi together with a twisting
//! valuation v_t (possibly infinite). Integrality holds when chi lands in
//! the automorphic cone cut out by three families of linear forms, with v_t
//! entering only the rho-form. Two concrete valuation criteria, stated
//! directly on matrix and tensor data, serve as independent oracles.


use crate::error::{Error, Result};
use crate::par::Exec;
use crate::rat::{q_zero, qi, Q};
use crate::rootdata::{case, CaseData, CaseId, CoweightVector, WeightVector};

/// Valuation of the twisting parameter. Infinite means the twist is trivial
/// and only the torus conditions apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Vt {
    Finite(i64),
    Infinite,
}

#[derive(Debug, Clone)]
pub struct LocalPoint {
    pub chi: CoweightVector,
    pub v_t: Vt,
}

/// The weight forms whose nonnegativity on chi defines integrality, apart
/// from the v_t form. One entry per simple root from each family.
pub fn integrality_forms(cd: &CaseData) -> Result<Vec<WeightVector>> {
    let consts = cd.derived_constants()?;
    let theta = cd
        .theta
        .as_ref()
        .ok_or_else(|| Error::Domain(format!("case {} has no distinguished cocharacter", cd.name)))?;
    let a_minus_1 = &consts.a - qi(1);
    let mut forms = Vec::new();
    for (i, omega) in cd.fundamental_like.iter().enumerate() {
        // n_check theta - omega >= 0: the fundamental bound.
        forms.push(theta.scale(&cd.n_alpha_check[i]).sub(omega));
    }
    for alpha in &cd.simple_roots {
        // (a-1) theta + alpha - rho >= 0: the shifted-root bound.
        forms.push(theta.scale(&a_minus_1).add(alpha).sub(&cd.rho));
    }
    Ok(forms)
}

/// The form paired against chi in the v_t condition: v_t >= <rho - (a-1) theta, chi>.
pub fn vt_form(cd: &CaseData) -> Result<WeightVector> {
    let consts = cd.derived_constants()?;
    let theta = cd
        .theta
        .as_ref()
        .ok_or_else(|| Error::Domain(format!("case {} has no distinguished cocharacter", cd.name)))?;
    Ok(cd.rho.sub(&theta.scale(&(&consts.a - qi(1)))))
}

pub fn is_integral(cd: &CaseData, point: &LocalPoint) -> Result<bool> {
    if cd.coweight_coords(&point.chi).is_none() {
        return Err(Error::Domain(format!(
            "coweight {} is not in the lattice of case {}",
            point.chi, cd.name
        )));
    }
    for form in integrality_forms(cd)? {
        if cd.pair(&form, &point.chi) < q_zero() {
            return Ok(false);
        }
    }
    match point.v_t {
        Vt::Infinite => Ok(true),
        Vt::Finite(v) => {
            let needed = cd.pair(&vt_form(cd)?, &point.chi);
            Ok(qi(v) >= needed)
        }
    }
}

/// Valuation criterion for a 3x3 matrix parameter diag(p^a, p^b, p^c) in the
/// nilpotent-cone case: c - b >= 0, c + b - a >= 0, and v_t + c - a >= 0.
pub fn ginzburg_matrix_oracle(a: i64, b: i64, c: i64, v_t: Vt) -> bool {
    if c - b < 0 || c + b - a < 0 {
        return false;
    }
    match v_t {
        Vt::Infinite => true,
        Vt::Finite(v) => v + c - a >= 0,
    }
}

pub fn chi_from_ginzburg(a: i64, b: i64, c: i64) -> CoweightVector {
    CoweightVector::from_i64(&[a, b, c])
}

/// Valuation criterion for a triple of 2x2 parameters diag(p^{a_i}, p^{b_i})
/// in the tensor case. The total determinant exponent must be divisible by 3
/// for the parameter to live on the quotient torus. Writing s = (sum a_i +
/// sum b_i)/3, the conditions are b_i + b_j + a_k - s >= 0 for each choice of
/// distinguished factor k, and v_t + sum b_i - s >= 0.
pub fn garrett_tensor_oracle(pairs: &[(i64, i64); 3], v_t: Vt) -> Result<bool> {
    let total: i64 = pairs.iter().map(|(a, b)| a + b).sum();
    if total % 3 != 0 {
        return Err(Error::Domain(format!(
            "total determinant exponent {total} is not divisible by 3"
        )));
    }
    let s = total / 3;
    let (a, b): (Vec<i64>, Vec<i64>) = pairs.iter().copied().unzip();
    for k in 0..3 {
        let others: i64 = (0..3).filter(|&i| i != k).map(|i| b[i]).sum();
        if others + a[k] - s < 0 {
            return Ok(false);
        }
    }
    match v_t {
        Vt::Infinite => Ok(true),
        Vt::Finite(v) => Ok(v + b.iter().sum::<i64>() - s >= 0),
    }
}

/// Coweight of the tensor case carried by a triple of 2x2 parameters:
/// semisimple parts (a_i - b_i)/2 and central height (sum a_i + sum b_i)/3.
pub fn chi_from_garrett(pairs: &[(i64, i64); 3]) -> Result<CoweightVector> {
    let total: i64 = pairs.iter().map(|(a, b)| a + b).sum();
    if total % 3 != 0 {
        return Err(Error::Domain(format!(
            "total determinant exponent {total} is not divisible by 3"
        )));
    }
    let mut coords: Vec<Q> = pairs.iter().map(|(a, b)| crate::rat::qr(a - b, 2)).collect();
    coords.push(qi(total / 3));
    Ok(CoweightVector(coords))
}

#[derive(Debug, Clone)]
pub struct AgreementReport {
    pub case_name: String,
    pub grid_size: usize,
    pub disagreements: Vec<String>,
}

impl AgreementReport {
    pub fn pass(&self) -> bool {
        self.disagreements.is_empty()
    }
}

fn vt_grid(vt_lo: i64, vt_hi: i64) -> Vec<Vt> {
    let mut g: Vec<Vt> = (vt_lo..=vt_hi).map(Vt::Finite).collect();
    g.push(Vt::Infinite);
    g
}

/// Sweeps diag exponents |a|,|b|,|c| <= bound and v_t in [vt_lo, vt_hi] plus
/// infinity, comparing the cone forms with the matrix valuation criterion.
pub fn oracle_agreement_ginzburg(bound: i64, vt_lo: i64, vt_hi: i64) -> Result<AgreementReport> {
    oracle_agreement_ginzburg_with(bound, vt_lo, vt_hi, Exec::default())
}

pub fn oracle_agreement_ginzburg_with(
    bound: i64,
    vt_lo: i64,
    vt_hi: i64,
    exec: Exec,
) -> Result<AgreementReport> {
    let cd = case(CaseId::GinzburgAuto);
    let vts = vt_grid(vt_lo, vt_hi);
    let side = (2 * bound + 1) as usize;
    let total = side * side * side * vts.len();
    let outcomes = crate::par::map_indices(exec, total, |idx| {
        let mut r = idx;
        let a = (r % side) as i64 - bound;
        r /= side;
        let b = (r % side) as i64 - bound;
        r /= side;
        let c = (r % side) as i64 - bound;
        r /= side;
        let v_t = vts[r];
        let expected = ginzburg_matrix_oracle(a, b, c, v_t);
        let got = is_integral(cd, &LocalPoint { chi: chi_from_ginzburg(a, b, c), v_t })
            .expect("grid coweights are lattice points");
        if got == expected {
            None
        } else {
            Some(format!("(a,b,c)=({a},{b},{c}) v_t={v_t:?}: forms={got} oracle={expected}"))
        }
    });
    Ok(AgreementReport {
        case_name: cd.name.clone(),
        grid_size: total,
        disagreements: outcomes.into_iter().flatten().collect(),
    })
}

/// Sweeps all six 2x2 exponents in [-bound, bound] with total determinant
/// exponent divisible by 3, comparing the cone forms with the tensor
/// valuation criterion.
pub fn oracle_agreement_garrett(bound: i64, vt_lo: i64, vt_hi: i64) -> Result<AgreementReport> {
    oracle_agreement_garrett_with(bound, vt_lo, vt_hi, Exec::default())
}

pub fn oracle_agreement_garrett_with(
    bound: i64,
    vt_lo: i64,
    vt_hi: i64,
    exec: Exec,
) -> Result<AgreementReport> {
    let cd = case(CaseId::GarrettAuto);
    let vts = vt_grid(vt_lo, vt_hi);
    let side = (2 * bound + 1) as usize;
    let mut tuples = Vec::new();
    for idx in 0..side.pow(6) {
        let mut r = idx;
        let mut v = [0i64; 6];
        for slot in &mut v {
            *slot = (r % side) as i64 - bound;
            r /= side;
        }
        let pairs = [(v[0], v[1]), (v[2], v[3]), (v[4], v[5])];
        let total: i64 = v.iter().sum();
        if total % 3 == 0 {
            tuples.push(pairs);
        }
    }
    let total = tuples.len() * vts.len();
    let outcomes = crate::par::map_indices(exec, total, |idx| {
        let pairs = tuples[idx / vts.len()];
        let v_t = vts[idx % vts.len()];
        let expected = garrett_tensor_oracle(&pairs, v_t).expect("grid respects the lattice");
        let chi = chi_from_garrett(&pairs).expect("grid respects the lattice");
        let got =
            is_integral(cd, &LocalPoint { chi, v_t }).expect("tensor coweights are lattice points");
        if got == expected {
            None
        } else {
            Some(format!("pairs={pairs:?} v_t={v_t:?}: forms={got} oracle={expected}"))
        }
    });
    Ok(AgreementReport {
        case_name: cd.name.clone(),
        grid_size: total,
        disagreements: outcomes.into_iter().flatten().collect(),
    })
}

/// Integrality is monotone in v_t: raising the valuation never breaks it.
/// Exposed so tests can state the property directly.
pub fn vt_monotone(cd: &CaseData, chi: &CoweightVector, lo: i64, hi: i64) -> Result<bool> {
    let mut prev = is_integral(cd, &LocalPoint { chi: chi.clone(), v_t: Vt::Finite(lo) })?;
    for v in (lo + 1)..=hi {
        let cur = is_integral(cd, &LocalPoint { chi: chi.clone(), v_t: Vt::Finite(v) })?;
        if prev && !cur {
            return Ok(false);
        }
        prev = cur;
    }
    let inf = is_integral(cd, &LocalPoint { chi: chi.clone(), v_t: Vt::Infinite })?;
    Ok(!prev || inf)
}
