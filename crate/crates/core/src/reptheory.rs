//! Weight multiplicities, characters, and torus points.
//!
//! Multiplicity tables come from Freudenthal's recursion over the exact
//! rationals, memoized per (case, highest weight). Two independent oracles
//! cross them: the Weyl dimension product formula and the alternating-sum
//! character quotient at generic points.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use num::traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::rat::{fmt_q, q_floor_i64, q_is_integer, q_one, q_pow, q_to_i64, q_zero, qi, Q};
use crate::rootdata::{CaseData, CoweightVector, WeightVector};

/// A rational point of the dual torus: one nonzero value per weight-basis
/// character of the case. Weights evaluate through their lattice coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SatakePoint {
    values: Vec<Q>,
    pub label: Option<String>,
}

impl SatakePoint {
    pub fn new(values: Vec<Q>, label: Option<String>) -> Result<Self> {
        if values.iter().any(|v| v.is_zero()) {
            return Err(Error::Domain("Satake point has a zero coordinate".into()));
        }
        Ok(SatakePoint { values, label })
    }

    pub fn identity(rank: usize) -> Self {
        SatakePoint { values: vec![q_one(); rank], label: Some("identity".into()) }
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    /// Evaluates the character with the given weight. The weight must be a
    /// lattice point of the case.
    pub fn eval_weight(&self, case: &CaseData, w: &WeightVector) -> Result<Q> {
        let coords = case.weight_coords(w).ok_or_else(|| {
            Error::Domain(format!("weight {w} is not in the {} lattice", case.name))
        })?;
        assert_eq!(coords.len(), self.values.len(), "point rank mismatch");
        let mut acc = q_one();
        for (v, e) in self.values.iter().zip(coords) {
            if e != 0 {
                acc *= q_pow(v, e);
            }
        }
        Ok(acc)
    }

    /// Evaluates a coweight of the case read as a weight of the character
    /// case (the catalog dual, or the case itself when self-identified).
    pub fn eval_coweight(&self, case: &CaseData, c: &CoweightVector) -> Result<Q> {
        let eval_case = coweight_character_case(case)?;
        self.eval_weight(eval_case, &WeightVector(c.0.clone()))
    }
}

/// The case whose weight lattice carries the coweights of `case`: its catalog
/// dual when linked, else the case itself when weights and coweights share a
/// basis (the self-dual GL factors).
pub fn coweight_character_case(case: &CaseData) -> Result<&CaseData> {
    if let Ok(d) = case.dual() {
        return Ok(d);
    }
    if case.weight_basis == case.coweight_basis {
        return Ok(case);
    }
    Err(Error::Domain(format!(
        "case {} has no torus identification for coweight characters",
        case.name
    )))
}

#[derive(Debug, Clone)]
pub struct MultiplicityTable {
    pub highest_weight: WeightVector,
    /// Dominant weights with positive multiplicity.
    pub dominant: Vec<(WeightVector, u64)>,
    /// Every weight of the representation (full Weyl orbits) with its lattice
    /// coordinates and multiplicity.
    pub expanded: Vec<(Vec<i64>, u64)>,
    /// Per-coordinate (min, max) over the expanded exponents.
    pub exp_ranges: Vec<(i64, i64)>,
    pub dim: u64,
}

static MULT_CACHE: LazyLock<RwLock<HashMap<(String, WeightVector), Arc<MultiplicityTable>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn cache_key(case: &CaseData) -> String {
    match case.id {
        Some(_) => case.name.clone(),
        None => format!("user:{}", case.name),
    }
}

/// Nonnegative-integer pairings against all simple coroots.
pub fn is_dominant_integral(case: &CaseData, w: &WeightVector) -> bool {
    case.simple_coroots.iter().all(|ac| {
        let v = case.pair(w, ac);
        q_is_integer(&v) && !v.is_negative()
    })
}

/// Reflects into the dominant chamber.
pub fn dominantize(case: &CaseData, w: &WeightVector) -> WeightVector {
    let mut v = w.clone();
    'outer: loop {
        for i in 0..case.simple_roots.len() {
            let p = case.pair(&v, &case.simple_coroots[i]);
            if p.is_negative() {
                v = v.sub(&case.simple_roots[i].scale(&p));
                continue 'outer;
            }
        }
        return v;
    }
}

/// Reflects into the dominant chamber tracking the sign of the Weyl element;
/// None when the weight sits on a wall (stabilized by a reflection).
pub fn dominantize_signed(case: &CaseData, w: &WeightVector) -> Option<(WeightVector, i64)> {
    let mut v = w.clone();
    let mut sign = 1i64;
    'outer: loop {
        for i in 0..case.simple_roots.len() {
            let p = case.pair(&v, &case.simple_coroots[i]);
            if p.is_zero() {
                return None;
            }
            if p.is_negative() {
                v = v.sub(&case.simple_roots[i].scale(&p));
                sign = -sign;
                continue 'outer;
            }
        }
        return Some((v, sign));
    }
}

/// Full Weyl orbit of a weight.
pub fn weyl_orbit(case: &CaseData, w: &WeightVector) -> Vec<WeightVector> {
    let mut seen: Vec<WeightVector> = Vec::new();
    let mut frontier = vec![w.clone()];
    while let Some(v) = frontier.pop() {
        if seen.contains(&v) {
            continue;
        }
        for i in 0..case.simple_roots.len() {
            let p = case.pair(&v, &case.simple_coroots[i]);
            frontier.push(v.sub(&case.simple_roots[i].scale(&p)));
        }
        seen.push(v);
    }
    seen.sort();
    seen
}

fn compositions(parts: usize, max_sum: i64) -> Vec<Vec<i64>> {
    fn rec(parts: usize, budget: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if parts == 0 {
            out.push(prefix.clone());
            return;
        }
        for c in 0..=budget {
            prefix.push(c);
            rec(parts - 1, budget - c, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(parts, max_sum, &mut Vec::new(), &mut out);
    out
}

/// The W-invariant form B(x,y) = sum over positive roots of
/// <x,beta_check><y,beta_check>. Positive semidefinite, degenerate exactly on
/// the central directions, which never occur in the differences it is fed.
fn b_form(case: &CaseData, x: &WeightVector, y: &WeightVector) -> Q {
    let mut acc = q_zero();
    for (_, bc) in &case.positive_root_pairs {
        acc += case.pair(x, bc) * case.pair(y, bc);
    }
    acc
}

/// Freudenthal multiplicities of the irreducible with the given dominant
/// lattice highest weight. Memoized; safe for concurrent callers.
pub fn weight_multiplicities(case: &CaseData, lambda: &WeightVector) -> Result<Arc<MultiplicityTable>> {
    if !is_dominant_integral(case, lambda) {
        return Err(Error::Domain(format!(
            "highest weight {lambda} is not dominant integral for {}",
            case.name
        )));
    }
    if !case.weight_in_lattice(lambda) {
        return Err(Error::Domain(format!(
            "highest weight {lambda} is not in the {} lattice",
            case.name
        )));
    }
    let key = (cache_key(case), lambda.clone());
    if let Some(t) = MULT_CACHE.read().unwrap().get(&key) {
        return Ok(t.clone());
    }
    let table = Arc::new(compute_multiplicities(case, lambda));
    MULT_CACHE.write().unwrap().entry(key).or_insert_with(|| table.clone());
    Ok(table)
}

fn compute_multiplicities(case: &CaseData, lambda: &WeightVector) -> MultiplicityTable {
    // Levels (root-lattice depths below lambda) are integers even when the
    // rho_check height of lambda itself is a half-integer.
    let level_cap = q_floor_i64(&case.pair(lambda, &case.rho_check));

    // Candidate dominant weights mu = lambda - sum c_i alpha_i.
    let mut cands: Vec<(i64, WeightVector)> = Vec::new();
    for c in compositions(case.simple_roots.len(), level_cap) {
        let mut mu = lambda.clone();
        let mut level = 0i64;
        for (i, ci) in c.iter().enumerate() {
            if *ci > 0 {
                mu = mu.sub(&case.simple_roots[i].scale(&qi(*ci)));
                level += ci;
            }
        }
        if case.is_dominant_weight(&mu) {
            cands.push((level, mu));
        }
    }
    cands.sort();

    let b_top = {
        let lr = lambda.add(&case.rho);
        b_form(case, &lr, &lr)
    };
    let b_lambda = b_form(case, lambda, lambda);

    let mut mult: HashMap<WeightVector, u64> = HashMap::new();
    let mut dominant: Vec<(WeightVector, u64)> = Vec::new();
    for (level, mu) in &cands {
        if *level == 0 {
            mult.insert(mu.clone(), 1);
            dominant.push((mu.clone(), 1));
            continue;
        }
        let mut num = q_zero();
        for (beta, _) in &case.positive_root_pairs {
            let ht = q_to_i64(&case.pair(beta, &case.rho_check)).expect("integer root height");
            // mu + k*beta can only be a weight while its depth below lambda
            // stays nonnegative: k*ht(beta) <= level(mu).
            let k_max = level / ht;
            let mut nu = mu.clone();
            for _k in 1..=k_max {
                nu = nu.add(beta);
                if b_form(case, &nu, &nu) > b_lambda {
                    continue; // too long to be a weight, but later k can return
                }
                let dom = dominantize(case, &nu);
                if let Some(m) = mult.get(&dom) {
                    num += qi(*m as i64 * 2) * b_form(case, &nu, beta);
                }
            }
        }
        let mur = mu.add(&case.rho);
        let denom = &b_top - b_form(case, &mur, &mur);
        assert!(denom.is_positive(), "Freudenthal denominator must be positive");
        let m = num / denom;
        assert!(q_is_integer(&m), "multiplicity must be an integer, got {}", fmt_q(&m));
        let m = q_to_i64(&m).expect("multiplicity fits i64");
        assert!(m >= 0);
        if m > 0 {
            mult.insert(mu.clone(), m as u64);
            dominant.push((mu.clone(), m as u64));
        }
    }

    // Expand full orbits with lattice coordinates.
    let mut expanded = Vec::new();
    let mut dim = 0u64;
    let mut exp_ranges = vec![(i64::MAX, i64::MIN); case.rank];
    for (mu, m) in &dominant {
        for w in weyl_orbit(case, mu) {
            let coords = case
                .weight_coords(&w)
                .expect("orbit of a lattice weight stays in the lattice");
            for (r, e) in exp_ranges.iter_mut().zip(&coords) {
                r.0 = r.0.min(*e);
                r.1 = r.1.max(*e);
            }
            expanded.push((coords, *m));
            dim += *m;
        }
    }
    expanded.sort();
    dominant.sort();

    MultiplicityTable { highest_weight: lambda.clone(), dominant, expanded, exp_ranges, dim }
}

/// Weyl dimension product formula; the second oracle against Freudenthal.
pub fn weyl_dimension(case: &CaseData, lambda: &WeightVector) -> Result<u64> {
    if !is_dominant_integral(case, lambda) {
        return Err(Error::Domain(format!(
            "highest weight {lambda} is not dominant integral for {}",
            case.name
        )));
    }
    let mut num = q_one();
    let mut den = q_one();
    let lr = lambda.add(&case.rho);
    for (_, bc) in &case.positive_root_pairs {
        num *= case.pair(&lr, bc);
        den *= case.pair(&case.rho, bc);
    }
    let d = num / den;
    assert!(q_is_integer(&d) && d.is_positive(), "Weyl dimension must be a positive integer");
    Ok(q_to_i64(&d).expect("dimension fits u64") as u64)
}

/// Character value at a torus point: the multiplicity-weighted sum of the
/// point over all weights. Returns 0 for a non-dominant (Cartan-integral)
/// highest weight, following the Casselman-Shalika convention.
pub fn character_value(case: &CaseData, lambda: &WeightVector, point: &SatakePoint) -> Result<Q> {
    if point.rank() != case.rank {
        return Err(Error::Dimension(format!(
            "point rank {} vs case rank {}",
            point.rank(),
            case.rank
        )));
    }
    if !case.is_dominant_weight(lambda) {
        return Ok(q_zero());
    }
    let table = weight_multiplicities(case, lambda)?;
    Ok(table.eval(point))
}

impl MultiplicityTable {
    /// Sum of the point over all expanded weights, with per-coordinate power
    /// tables built once. Powers of a reduced fraction stay reduced, so the
    /// incremental products below never trigger large gcd reductions.
    pub fn eval(&self, point: &SatakePoint) -> Q {
        let pows: Vec<(Vec<Q>, Vec<Q>)> = point
            .values()
            .iter()
            .zip(&self.exp_ranges)
            .map(|(v, &(lo, hi))| {
                let mut pos = vec![q_one()];
                for _ in 0..hi.max(0) {
                    let next = pos.last().unwrap() * v;
                    pos.push(next);
                }
                let mut neg = vec![q_one()];
                if lo < 0 {
                    let inv = q_one() / v;
                    for _ in 0..(-lo) {
                        let next = neg.last().unwrap() * &inv;
                        neg.push(next);
                    }
                }
                (pos, neg)
            })
            .collect();
        let mut acc = q_zero();
        for (coords, m) in &self.expanded {
            let mut term: Option<Q> = None;
            for (p, e) in pows.iter().zip(coords) {
                if *e != 0 {
                    let f = if *e > 0 { &p.0[*e as usize] } else { &p.1[(-e) as usize] };
                    term = Some(match term {
                        Some(t) => t * f,
                        None => f.clone(),
                    });
                }
            }
            let term = match term {
                Some(t) => {
                    if *m == 1 {
                        t
                    } else {
                        t * qi(*m as i64)
                    }
                }
                None => qi(*m as i64),
            };
            acc += term;
        }
        acc
    }
}

/// Weyl group elements as weight-coordinate matrices with determinant signs.
pub fn weyl_elements(case: &CaseData) -> Vec<(Mat, i64)> {
    let n = case.rank;
    let mut seen: Vec<(Mat, i64)> = vec![(Mat::identity(n), 1)];
    let mut frontier = vec![(Mat::identity(n), 1i64)];
    while let Some((m, sign)) = frontier.pop() {
        for g in &case.weyl_generators_wt {
            let next = g.mul(&m);
            if !seen.iter().any(|(s, _)| *s == next) {
                seen.push((next.clone(), -sign));
                frontier.push((next, -sign));
            }
        }
    }
    seen
}

/// Character by the alternating-sum quotient
/// sum_w sign(w) x^(w(lambda+rho)-rho) / sum_w sign(w) x^(w(rho)-rho).
/// Fails on points where the denominator vanishes; callers resample.
pub fn weyl_character_oracle(case: &CaseData, lambda: &WeightVector, point: &SatakePoint) -> Result<Q> {
    if !is_dominant_integral(case, lambda) {
        return Err(Error::Domain(format!("oracle needs a dominant integral weight, got {lambda}")));
    }
    let elements = weyl_elements(case);
    let shifted_eval = |target: &WeightVector| -> Result<Q> {
        let shifted = target.add(&case.rho);
        let mut acc = q_zero();
        for (w, sign) in &elements {
            // w(target+rho) - rho is a lattice weight even when rho is not.
            let img = WeightVector(w.mul_vec(&shifted.0)).sub(&case.rho);
            let v = point.eval_weight(case, &img)?;
            acc += if *sign > 0 { v } else { -v };
        }
        Ok(acc)
    };
    let den = shifted_eval(&WeightVector::zero(case.rank))?;
    if den.is_zero() {
        return Err(Error::Domain("character oracle point lies on a reflection wall".into()));
    }
    let num = shifted_eval(lambda)?;
    Ok(num / den)
}
