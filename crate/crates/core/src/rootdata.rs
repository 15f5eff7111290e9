//! Embedded case catalog: rational root data for the two singular rank-one
//! pairs (Ginzburg and Garrett, automorphic and spectral sides) plus small
//! auxiliary groups used by the classical cross-checks.
//!
//! Conventions, fixed once here and relied on everywhere else:
//! - Weights and coweights live in Q^rank and pair through `pairing`
//!   (the identity matrix for every embedded case, so dual pairs literally
//!   share coordinates: weights of one side are coweights of the other).
//! - `grading_cochar` is the functional giving the grading degree of a
//!   component label: degree(lambda) = <lambda, grading_cochar>. It equals
//!   minus `action_cochar`, the scaling cocharacter itself; function weights
//!   pair positively against `action_cochar`, component labels negatively.
//! - `minus_w0_wt` is the map lambda -> -w0(lambda) on weight coordinates
//!   (the highest weight of the dual representation); `minus_w0_cowt` is its
//!   adjoint under the pairing.
//! - Lattice membership means integer coordinates in `weight_basis`
//!   (resp. `coweight_basis`); the rows of the basis inverses are exactly the
//!   integrality forms of the lattice.

use std::collections::HashMap;
use std::sync::LazyLock;

use num::traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::rat::{fmt_q, parse_q, q_dot, q_is_integer, q_one, q_to_i64, q_zero, qi, qr, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    GinzburgAuto,
    GinzburgDual,
    GarrettAuto,
    GarrettDual,
    Gl1,
    Gl2,
    Sl2,
    Gl3,
}

impl CaseId {
    pub const ALL: [CaseId; 8] = [
        CaseId::GinzburgAuto,
        CaseId::GinzburgDual,
        CaseId::GarrettAuto,
        CaseId::GarrettDual,
        CaseId::Gl1,
        CaseId::Gl2,
        CaseId::Sl2,
        CaseId::Gl3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseId::GinzburgAuto => "ginzburg_auto",
            CaseId::GinzburgDual => "ginzburg_dual",
            CaseId::GarrettAuto => "garrett_auto",
            CaseId::GarrettDual => "garrett_dual",
            CaseId::Gl1 => "gl1",
            CaseId::Gl2 => "gl2",
            CaseId::Sl2 => "sl2",
            CaseId::Gl3 => "gl3",
        }
    }

    pub fn parse(name: &str) -> Result<CaseId> {
        CaseId::ALL
            .iter()
            .copied()
            .find(|c| c.name() == name)
            .ok_or_else(|| Error::UnknownCase(name.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(pub Vec<Q>);

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoweightVector(pub Vec<Q>);

macro_rules! vector_impls {
    ($t:ident) => {
        impl $t {
            pub fn from_i64(coords: &[i64]) -> Self {
                $t(coords.iter().map(|&n| qi(n)).collect())
            }

            pub fn zero(rank: usize) -> Self {
                $t(vec![q_zero(); rank])
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn add(&self, other: &Self) -> Self {
                assert_eq!(self.rank(), other.rank());
                $t(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
            }

            pub fn sub(&self, other: &Self) -> Self {
                assert_eq!(self.rank(), other.rank());
                $t(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
            }

            pub fn scale(&self, c: &Q) -> Self {
                $t(self.0.iter().map(|a| a * c).collect())
            }

            pub fn neg(&self) -> Self {
                $t(self.0.iter().map(|a| -a).collect())
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|a| a.is_zero())
            }
        }

        impl std::fmt::Display for $t {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                let parts: Vec<String> = self.0.iter().map(fmt_q).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    };
}

vector_impls!(WeightVector);
vector_impls!(CoweightVector);

/// One defining equation of a complete-intersection model: a semi-invariant
/// of the given torus weight, homogeneous of the given grading degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantSpec {
    pub degree: u32,
    pub weight: WeightVector,
}

/// Ambient linear functions plus cutting equations for the spaces that are
/// complete intersections. Weights are in the function convention (they pair
/// positively against `action_cochar`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LciPresentation {
    pub ambient: Vec<WeightVector>,
    pub invariants: Vec<InvariantSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseConstants {
    /// a = <rho, rho_check> = sum of the coroot coefficients of rho_check.
    pub a: Q,
    /// gamma = 1/(a-1).
    pub gamma: Q,
    /// gimel = (2a-1)(2a-3)/(2a-2).
    pub gimel: Q,
    /// epsilon = (2a-1)gamma.
    pub epsilon: Q,
    /// 2a-1: the power of the eigenform entering the global period.
    pub eigenform_power: Q,
    pub dim_g: usize,
    pub dim_u: usize,
    pub dim_g_mod_u: usize,
    /// dim(G/U) - (2a-1)gamma; equals 3 for both singular pairs.
    pub discrepancy_exponent: Q,
}

#[derive(Debug, Clone)]
pub struct CaseData {
    pub id: Option<CaseId>,
    pub name: String,
    pub rank: usize,
    pub pairing: Mat,
    pub simple_roots: Vec<WeightVector>,
    pub simple_coroots: Vec<CoweightVector>,
    /// All positive roots paired with their coroots, ordered by height.
    pub positive_root_pairs: Vec<(WeightVector, CoweightVector)>,
    pub theta: Option<WeightVector>,
    pub theta_check: Option<CoweightVector>,
    pub rho: WeightVector,
    pub rho_check: CoweightVector,
    /// rho_check + theta_check, the functional cutting the relevant cone.
    pub rho_check_prime: Option<CoweightVector>,
    /// Degree functional on component labels: -gamma * theta_check.
    pub grading_cochar: Option<CoweightVector>,
    /// Scaling cocharacter gamma * theta_check; function weights pair
    /// positively against it.
    pub action_cochar: Option<CoweightVector>,
    pub n_alpha: Vec<Q>,
    pub n_alpha_check: Vec<Q>,
    /// Dual basis to {simple coroots} + {theta_check}: <pi_i, acheck_j> = delta,
    /// <pi_i, theta_check> = 0. Empty when there is no theta.
    pub fundamental_like: Vec<WeightVector>,
    pub weyl_generators_wt: Vec<Mat>,
    pub weyl_generators_cowt: Vec<Mat>,
    pub minus_w0_wt: Mat,
    pub minus_w0_cowt: Mat,
    pub weight_basis: Mat,
    pub weight_basis_inv: Mat,
    pub coweight_basis: Mat,
    pub coweight_basis_inv: Mat,
    pub dual_case: Option<CaseId>,
    pub dim_g: usize,
    pub dim_u: usize,
    pub lci: Option<LciPresentation>,
    /// Krull dimension of the affine cone attached to the case, if any.
    pub cone_dim: Option<usize>,
}

impl CaseData {
    pub fn pair(&self, w: &WeightVector, c: &CoweightVector) -> Q {
        assert_eq!(w.rank(), self.rank, "weight rank mismatch");
        assert_eq!(c.rank(), self.rank, "coweight rank mismatch");
        q_dot(&w.0, &self.pairing.mul_vec(&c.0))
    }

    pub fn is_dominant_weight(&self, w: &WeightVector) -> bool {
        self.simple_coroots.iter().all(|ac| !self.pair(w, ac).is_negative())
    }

    pub fn is_dominant_coweight(&self, c: &CoweightVector) -> bool {
        self.simple_roots.iter().all(|a| !self.pair(a, c).is_negative())
    }

    /// Integer coordinates in the weight lattice basis, or None if the vector
    /// is not a lattice point.
    pub fn weight_coords(&self, w: &WeightVector) -> Option<Vec<i64>> {
        integer_coords(&self.weight_basis_inv, &w.0)
    }

    pub fn coweight_coords(&self, c: &CoweightVector) -> Option<Vec<i64>> {
        integer_coords(&self.coweight_basis_inv, &c.0)
    }

    pub fn weight_in_lattice(&self, w: &WeightVector) -> bool {
        self.weight_coords(w).is_some()
    }

    pub fn coweight_in_lattice(&self, c: &CoweightVector) -> bool {
        self.coweight_coords(c).is_some()
    }

    /// Rows of the weight-basis inverse: the linear forms whose integrality
    /// characterizes lattice membership.
    pub fn integrality_forms_weights(&self) -> Vec<Vec<Q>> {
        (0..self.rank).map(|i| self.weight_basis_inv.row(i).to_vec()).collect()
    }

    pub fn integrality_forms_coweights(&self) -> Vec<Vec<Q>> {
        (0..self.rank).map(|i| self.coweight_basis_inv.row(i).to_vec()).collect()
    }

    pub fn apply_minus_w0(&self, w: &WeightVector) -> WeightVector {
        WeightVector(self.minus_w0_wt.mul_vec(&w.0))
    }

    pub fn apply_minus_w0_cowt(&self, c: &CoweightVector) -> CoweightVector {
        CoweightVector(self.minus_w0_cowt.mul_vec(&c.0))
    }

    /// Grading degree of a component label lambda of the coordinate ring.
    pub fn label_degree(&self, w: &WeightVector) -> Result<Q> {
        let g = self
            .grading_cochar
            .as_ref()
            .ok_or_else(|| Error::Domain(format!("case {} has no grading cocharacter", self.name)))?;
        Ok(self.pair(w, g))
    }

    /// <theta, chi>, the automorphic degree of a coweight.
    pub fn theta_height(&self, c: &CoweightVector) -> Result<Q> {
        let t = self
            .theta
            .as_ref()
            .ok_or_else(|| Error::Domain(format!("case {} has no theta", self.name)))?;
        Ok(self.pair(t, c))
    }

    pub fn derived_constants(&self) -> Result<CaseConstants> {
        if self.simple_roots.is_empty() {
            return Err(Error::Domain(format!(
                "case {} has no roots: a is undefined",
                self.name
            )));
        }
        let a = self.pair(&self.rho, &self.rho_check);
        let one = q_one();
        let two = qi(2);
        if a == one {
            return Err(Error::Domain("a = 1: gamma = 1/(a-1) is undefined".into()));
        }
        let gamma = (&a - &one).recip();
        let two_a = &two * &a;
        let gimel = (&two_a - &one) * (&two_a - qi(3)) / (&two_a - &two);
        let epsilon = (&two_a - &one) * &gamma;
        let eigenform_power = &two_a - &one;
        let dim_g_mod_u = self.dim_g - self.dim_u;
        let discrepancy_exponent = qi(dim_g_mod_u as i64) - &eigenform_power * &gamma;
        Ok(CaseConstants {
            a,
            gamma,
            gimel,
            epsilon,
            eigenform_power,
            dim_g: self.dim_g,
            dim_u: self.dim_u,
            dim_g_mod_u,
            discrepancy_exponent,
        })
    }

    pub fn dual(&self) -> Result<&'static CaseData> {
        self.dual_case
            .map(case)
            .ok_or_else(|| Error::Domain(format!("case {} has no catalog dual", self.name)))
    }
}

fn integer_coords(basis_inv: &Mat, v: &[Q]) -> Option<Vec<i64>> {
    let coords = basis_inv.mul_vec(v);
    coords.iter().map(q_to_i64).collect()
}

/// Specification from which `CaseData` is finished and validated.
struct CaseSpec {
    id: Option<CaseId>,
    name: String,
    rank: usize,
    pairing: Mat,
    simple_roots: Vec<WeightVector>,
    simple_coroots: Vec<CoweightVector>,
    theta: Option<WeightVector>,
    theta_check: Option<CoweightVector>,
    rho: WeightVector,
    rho_check: CoweightVector,
    n_alpha: Vec<Q>,
    n_alpha_check: Vec<Q>,
    fundamental_like: Vec<WeightVector>,
    weight_basis: Mat,
    coweight_basis: Mat,
    minus_w0_wt: Mat,
    dual_case: Option<CaseId>,
    lci: Option<LciPresentation>,
    cone_dim: Option<usize>,
}

impl CaseSpec {
    fn finish(self) -> Result<CaseData> {
        let r = self.rank;
        let err = |msg: String| Error::InvalidCase(format!("{}: {}", self.name, msg));

        let pair = |w: &WeightVector, c: &CoweightVector| -> Q {
            q_dot(&w.0, &self.pairing.mul_vec(&c.0))
        };

        // Positive roots: Weyl orbits of the simple pairs, kept when the
        // rho_check height is positive (rho_check is regular on the root span).
        let mut positive: Vec<(WeightVector, CoweightVector)> = Vec::new();
        {
            let mut seen: Vec<(WeightVector, CoweightVector)> = Vec::new();
            let mut frontier: Vec<(WeightVector, CoweightVector)> = self
                .simple_roots
                .iter()
                .cloned()
                .zip(self.simple_coroots.iter().cloned())
                .collect();
            while let Some(pairv) = frontier.pop() {
                if seen.contains(&pairv) {
                    continue;
                }
                for i in 0..self.simple_roots.len() {
                    let alpha = &self.simple_roots[i];
                    let acheck = &self.simple_coroots[i];
                    let beta = pairv.0.sub(&alpha.scale(&pair(&pairv.0, acheck)));
                    let beta_check = pairv.1.sub(&acheck.scale(&pair(alpha, &pairv.1)));
                    frontier.push((beta, beta_check));
                }
                seen.push(pairv);
            }
            for (beta, beta_check) in seen {
                if pair(&beta, &self.rho_check).is_positive() {
                    positive.push((beta, beta_check));
                }
            }
            positive.sort_by_key(|(b, _)| {
                let h = pair(b, &self.rho_check);
                (h.clone(), b.clone())
            });
        }
        let dim_u = positive.len();
        let dim_g = r + 2 * dim_u;

        // Cartan relations.
        for (i, a) in self.simple_roots.iter().enumerate() {
            for (j, ac) in self.simple_coroots.iter().enumerate() {
                let v = pair(a, ac);
                if i == j && v != qi(2) {
                    return Err(err(format!("<alpha_{i}, acheck_{i}> = {} != 2", fmt_q(&v))));
                }
                if i != j && (!q_is_integer(&v) || v.is_positive()) {
                    return Err(err(format!("bad Cartan entry <alpha_{i}, acheck_{j}> = {}", fmt_q(&v))));
                }
            }
        }

        // rho and rho_check: pair to 1 against every simple (co)root and are
        // the stated combinations of the simples.
        for (i, ac) in self.simple_coroots.iter().enumerate() {
            if pair(&self.rho, ac) != q_one() {
                return Err(err(format!("<rho, acheck_{i}> != 1")));
            }
        }
        for (i, a) in self.simple_roots.iter().enumerate() {
            if pair(a, &self.rho_check) != q_one() {
                return Err(err(format!("<alpha_{i}, rho_check> != 1")));
            }
        }
        if self.n_alpha.len() != self.simple_roots.len()
            || self.n_alpha_check.len() != self.simple_roots.len()
        {
            return Err(err("n_alpha length mismatch".into()));
        }
        let mut rho_sum = WeightVector::zero(r);
        for (n, a) in self.n_alpha.iter().zip(&self.simple_roots) {
            rho_sum = rho_sum.add(&a.scale(n));
        }
        if rho_sum != self.rho {
            return Err(err("rho != sum n_alpha * alpha".into()));
        }
        let mut rhoc_sum = CoweightVector::zero(r);
        for (n, ac) in self.n_alpha_check.iter().zip(&self.simple_coroots) {
            rhoc_sum = rhoc_sum.add(&ac.scale(n));
        }
        if rhoc_sum != self.rho_check {
            return Err(err("rho_check != sum n_alpha_check * acheck".into()));
        }

        // theta: central (orthogonal to the root system), normalized height 1.
        match (&self.theta, &self.theta_check) {
            (Some(t), Some(tc)) => {
                if pair(t, tc) != q_one() {
                    return Err(err("<theta, theta_check> != 1".into()));
                }
                for ac in &self.simple_coroots {
                    if !pair(t, ac).is_zero() {
                        return Err(err("theta not orthogonal to coroots".into()));
                    }
                }
                for a in &self.simple_roots {
                    if !pair(a, tc).is_zero() {
                        return Err(err("theta_check not orthogonal to roots".into()));
                    }
                }
            }
            (None, None) => {}
            _ => return Err(err("theta and theta_check must come together".into())),
        }

        // fundamental_like: dual basis to simple coroots and theta_check.
        if self.theta.is_some() && self.fundamental_like.len() != self.simple_roots.len() {
            return Err(err("fundamental_like length mismatch".into()));
        }
        for (i, pi) in self.fundamental_like.iter().enumerate() {
            for (j, ac) in self.simple_coroots.iter().enumerate() {
                let want = if i == j { q_one() } else { q_zero() };
                if pair(pi, ac) != want {
                    return Err(err(format!("<pi_{i}, acheck_{j}> wrong")));
                }
            }
            if let Some(tc) = &self.theta_check {
                if !pair(pi, tc).is_zero() {
                    return Err(err(format!("<pi_{i}, theta_check> != 0")));
                }
            }
        }

        // Derived functionals.
        let rho_check_prime = self.theta_check.as_ref().map(|tc| self.rho_check.add(tc));
        let a_const = pair(&self.rho, &self.rho_check);
        let (grading_cochar, action_cochar) = match &self.theta_check {
            Some(tc) if a_const != q_one() && !self.simple_roots.is_empty() => {
                let gamma = (&a_const - q_one()).recip();
                let action = tc.scale(&gamma);
                (Some(action.neg()), Some(action))
            }
            _ => (None, None),
        };

        // Extremal pairings of the relevant cone, when defined.
        if let (Some(rcp), Some(t)) = (&rho_check_prime, &self.theta) {
            for (i, pi) in self.fundamental_like.iter().enumerate() {
                let gen = pi.sub(&t.scale(&self.n_alpha_check[i]));
                if !pair(&gen, rcp).is_zero() {
                    return Err(err(format!("<pi_{i} - n_acheck*theta, rho_check_prime> != 0")));
                }
            }
            let top = self.rho.sub(&t.scale(&(&a_const - q_one())));
            if pair(&top, rcp) != q_one() {
                return Err(err("<rho - (a-1)theta, rho_check_prime> != 1".into()));
            }
        }

        // Bases invert.
        let weight_basis_inv = self
            .weight_basis
            .inverse()
            .map_err(|_| err("weight basis is singular".into()))?;
        let coweight_basis_inv = self
            .coweight_basis
            .inverse()
            .map_err(|_| err("coweight basis is singular".into()))?;

        // Simple roots are weight-lattice points; simple coroots are
        // coweight-lattice points. (rho, theta_check need not be.)
        for a in &self.simple_roots {
            if integer_coords(&weight_basis_inv, &a.0).is_none() {
                return Err(err(format!("simple root {a} outside the weight lattice")));
            }
        }
        for ac in &self.simple_coroots {
            if integer_coords(&coweight_basis_inv, &ac.0).is_none() {
                return Err(err(format!("simple coroot {ac} outside the coweight lattice")));
            }
        }
        if let Some(t) = &self.theta {
            if integer_coords(&weight_basis_inv, &t.0).is_none() {
                return Err(err("theta outside the weight lattice".into()));
            }
        }

        // Simple reflection matrices: s_i = id - alpha_i (P acheck_i)^T on
        // weights, and the adjoint formula on coweights.
        let mut weyl_generators_wt = Vec::new();
        let mut weyl_generators_cowt = Vec::new();
        for i in 0..self.simple_roots.len() {
            let alpha = &self.simple_roots[i];
            let acheck = &self.simple_coroots[i];
            let pc = self.pairing.mul_vec(&acheck.0);
            let pa = self.pairing.transpose().mul_vec(&alpha.0);
            let mut mw = Mat::identity(r);
            let mut mc = Mat::identity(r);
            for row in 0..r {
                for col in 0..r {
                    let dw = &alpha.0[row] * &pc[col];
                    mw[(row, col)] -= dw;
                    let dc = &acheck.0[row] * &pa[col];
                    mc[(row, col)] -= dc;
                }
            }
            weyl_generators_wt.push(mw);
            weyl_generators_cowt.push(mc);
        }

        // minus_w0: involution, permutes the simple roots, adjoint on coweights.
        let m = &self.minus_w0_wt;
        if m.mul(m) != Mat::identity(r) {
            return Err(err("minus_w0 is not an involution".into()));
        }
        let p_inv = self
            .pairing
            .inverse()
            .map_err(|_| err("pairing matrix is singular".into()))?;
        let minus_w0_cowt = p_inv.mul(&m.transpose()).mul(&self.pairing);
        {
            let mut images: Vec<WeightVector> = self
                .simple_roots
                .iter()
                .map(|a| WeightVector(m.mul_vec(&a.0)))
                .collect();
            images.sort();
            let mut originals = self.simple_roots.clone();
            originals.sort();
            if images != originals {
                return Err(err("minus_w0 does not permute the simple roots".into()));
            }
        }
        if let (Some(t), Some(tc)) = (&self.theta, &self.theta_check) {
            if WeightVector(m.mul_vec(&t.0)) != t.neg() {
                return Err(err("minus_w0 must negate theta".into()));
            }
            if CoweightVector(minus_w0_cowt.mul_vec(&tc.0)) != tc.neg() {
                return Err(err("minus_w0 adjoint must negate theta_check".into()));
            }
        }

        // LCI presentation consistency: ambient functions sit in degree 1,
        // invariants in their declared degree.
        if let (Some(lci), Some(action)) = (&self.lci, &action_cochar) {
            for w in &lci.ambient {
                if pair(w, action) != q_one() {
                    return Err(err(format!("ambient function weight {w} not of degree 1")));
                }
            }
            for inv in &lci.invariants {
                if pair(&inv.weight, action) != qi(inv.degree as i64) {
                    return Err(err(format!(
                        "invariant weight {} degree mismatch",
                        inv.weight
                    )));
                }
            }
        } else if self.lci.is_some() {
            return Err(err("LCI data requires a grading cocharacter".into()));
        }

        // A complete intersection has codimension = number of invariants.
        if let (Some(lci), Some(dim)) = (&self.lci, self.cone_dim) {
            if lci.ambient.len() != dim + lci.invariants.len() {
                return Err(err(format!(
                    "cone dimension {dim} inconsistent with {} ambient / {} invariants",
                    lci.ambient.len(),
                    lci.invariants.len()
                )));
            }
        }

        Ok(CaseData {
            id: self.id,
            name: self.name,
            rank: r,
            pairing: self.pairing,
            simple_roots: self.simple_roots,
            simple_coroots: self.simple_coroots,
            positive_root_pairs: positive,
            theta: self.theta,
            theta_check: self.theta_check,
            rho: self.rho,
            rho_check: self.rho_check,
            rho_check_prime,
            grading_cochar,
            action_cochar,
            n_alpha: self.n_alpha,
            n_alpha_check: self.n_alpha_check,
            fundamental_like: self.fundamental_like,
            weyl_generators_wt,
            weyl_generators_cowt,
            minus_w0_wt: self.minus_w0_wt,
            minus_w0_cowt,
            weight_basis: self.weight_basis,
            weight_basis_inv,
            coweight_basis: self.coweight_basis,
            coweight_basis_inv,
            dual_case: self.dual_case,
            dim_g,
            dim_u,
            lci: self.lci,
            cone_dim: self.cone_dim,
        })
    }
}

fn wv(coords: &[Q]) -> WeightVector {
    WeightVector(coords.to_vec())
}

fn cv(coords: &[Q]) -> CoweightVector {
    CoweightVector(coords.to_vec())
}

fn wi(coords: &[i64]) -> WeightVector {
    WeightVector::from_i64(coords)
}

fn ci(coords: &[i64]) -> CoweightVector {
    CoweightVector::from_i64(coords)
}

fn mat_i(rows: &[&[i64]]) -> Mat {
    Mat::from_rows(rows.iter().map(|r| r.iter().map(|&n| qi(n)).collect()).collect())
}

/// PGL3 x Gm acting on the nilpotent cone of sl3. Weight coordinates (u,v;s)
/// mean t1^u t2^v t3^(-u-v) z^s; coweight coordinates (a,b;c) mean
/// (diag(pi^a, pi^b, 1), pi^c).
fn ginzburg_auto_spec() -> CaseSpec {
    let roots: Vec<WeightVector> = vec![wi(&[1, -1, 0]), wi(&[0, 1, 0])];
    let ambient: Vec<WeightVector> = vec![
        wi(&[1, -1, 1]),
        wi(&[-1, 1, 1]),
        wi(&[0, 1, 1]),
        wi(&[0, -1, 1]),
        wi(&[1, 0, 1]),
        wi(&[-1, 0, 1]),
        wi(&[0, 0, 1]),
        wi(&[0, 0, 1]),
    ];
    CaseSpec {
        id: Some(CaseId::GinzburgAuto),
        name: "ginzburg_auto".into(),
        rank: 3,
        pairing: Mat::identity(3),
        simple_roots: roots,
        simple_coroots: vec![ci(&[1, -1, 0]), ci(&[1, 2, 0])],
        theta: Some(wi(&[0, 0, 1])),
        theta_check: Some(ci(&[0, 0, 1])),
        rho: wi(&[1, 0, 0]),
        rho_check: ci(&[2, 1, 0]),
        n_alpha: vec![q_one(), q_one()],
        n_alpha_check: vec![q_one(), q_one()],
        fundamental_like: vec![wv(&[qr(2, 3), qr(-1, 3), q_zero()]), wv(&[qr(1, 3), qr(1, 3), q_zero()])],
        weight_basis: Mat::identity(3),
        coweight_basis: Mat::identity(3),
        minus_w0_wt: mat_i(&[&[1, 1, 0], &[0, -1, 0], &[0, 0, -1]]),
        dual_case: Some(CaseId::GinzburgDual),
        lci: Some(LciPresentation {
            ambient,
            invariants: vec![
                InvariantSpec { degree: 2, weight: wi(&[0, 0, 2]) },
                InvariantSpec { degree: 3, weight: wi(&[0, 0, 3]) },
            ],
        }),
        cone_dim: Some(6),
    }
}

/// SL3 x Gm acting on the generically 3:1 cover. Weight coordinates (p,q;m)
/// are the class of (p,q,0) in Z^3/(1,1,1) with a central exponent m;
/// coweight coordinates (u,v;s) mean (diag(t^u, t^v, t^(-u-v)), t^s).
fn ginzburg_dual_spec() -> CaseSpec {
    CaseSpec {
        id: Some(CaseId::GinzburgDual),
        name: "ginzburg_dual".into(),
        rank: 3,
        pairing: Mat::identity(3),
        simple_roots: vec![wi(&[1, -1, 0]), wi(&[1, 2, 0])],
        simple_coroots: vec![ci(&[1, -1, 0]), ci(&[0, 1, 0])],
        theta: Some(wi(&[0, 0, 1])),
        theta_check: Some(ci(&[0, 0, 1])),
        rho: wi(&[2, 1, 0]),
        rho_check: ci(&[1, 0, 0]),
        n_alpha: vec![q_one(), q_one()],
        n_alpha_check: vec![q_one(), q_one()],
        fundamental_like: vec![wi(&[1, 0, 0]), wi(&[1, 1, 0])],
        weight_basis: Mat::identity(3),
        coweight_basis: Mat::identity(3),
        minus_w0_wt: mat_i(&[&[1, 0, 0], &[1, -1, 0], &[0, 0, -1]]),
        dual_case: Some(CaseId::GinzburgAuto),
        lci: None,
        // Same dimension as the nilpotent cone it covers generically 3:1.
        cone_dim: Some(6),
    }
}

/// Triple-product group (three GL2 factors glued over a cube-root center)
/// acting on 2x2x2 tensors. Weight coordinates (u1,u2,u3;m): ui is the
/// SL2-weight in factor i, m the central exponent; coweights (v1,v2,v3;e).
fn garrett_auto_spec() -> CaseSpec {
    let h = qr(1, 2);
    let mut ambient = Vec::new();
    for s1 in [1i64, -1] {
        for s2 in [1i64, -1] {
            for s3 in [1i64, -1] {
                ambient.push(wv(&[qi(s1), qi(s2), qi(s3), h.clone()]));
            }
        }
    }
    CaseSpec {
        id: Some(CaseId::GarrettAuto),
        name: "garrett_auto".into(),
        rank: 4,
        pairing: Mat::identity(4),
        simple_roots: vec![wi(&[2, 0, 0, 0]), wi(&[0, 2, 0, 0]), wi(&[0, 0, 2, 0])],
        simple_coroots: vec![ci(&[1, 0, 0, 0]), ci(&[0, 1, 0, 0]), ci(&[0, 0, 1, 0])],
        theta: Some(wi(&[0, 0, 0, 1])),
        theta_check: Some(ci(&[0, 0, 0, 1])),
        rho: wi(&[1, 1, 1, 0]),
        rho_check: cv(&[h.clone(), h.clone(), h.clone(), q_zero()]),
        n_alpha: vec![h.clone(), h.clone(), h.clone()],
        n_alpha_check: vec![h.clone(), h.clone(), h.clone()],
        fundamental_like: vec![wi(&[1, 0, 0, 0]), wi(&[0, 1, 0, 0]), wi(&[0, 0, 1, 0])],
        weight_basis: Mat::from_cols(vec![
            vec![qi(1), qi(1), qi(1), h.clone()],
            vec![qi(2), qi(0), qi(0), qi(0)],
            vec![qi(0), qi(2), qi(0), qi(0)],
            vec![qi(0), qi(0), qi(0), qi(1)],
        ]),
        coweight_basis: Mat::from_cols(vec![
            vec![h.clone(), -h.clone(), qi(0), qi(0)],
            vec![qi(0), h.clone(), -h.clone(), qi(0)],
            vec![h.clone(), h.clone(), h.clone(), qi(1)],
            vec![qi(0), qi(0), qi(1), qi(0)],
        ]),
        minus_w0_wt: mat_i(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, -1]]),
        dual_case: Some(CaseId::GarrettDual),
        lci: Some(LciPresentation {
            ambient,
            invariants: vec![InvariantSpec { degree: 4, weight: wi(&[0, 0, 0, 2]) }],
        }),
        cone_dim: Some(7),
    }
}

/// Three GL2 factors with equal determinant, modulo the diagonal cube roots,
/// acting on the cone over the Lagrangian Grassmannian LGr(3,6). Weight
/// coordinates (P1,P2,P3;K): Pi in (1/2)Z is half the SL2-weight of factor i,
/// K the determinant exponent; coweights (V1,V2,V3;E).
fn garrett_dual_spec() -> CaseSpec {
    let h = qr(1, 2);
    CaseSpec {
        id: Some(CaseId::GarrettDual),
        name: "garrett_dual".into(),
        rank: 4,
        pairing: Mat::identity(4),
        simple_roots: vec![wi(&[1, 0, 0, 0]), wi(&[0, 1, 0, 0]), wi(&[0, 0, 1, 0])],
        simple_coroots: vec![ci(&[2, 0, 0, 0]), ci(&[0, 2, 0, 0]), ci(&[0, 0, 2, 0])],
        theta: Some(wi(&[0, 0, 0, 2])),
        theta_check: Some(cv(&[q_zero(), q_zero(), q_zero(), h.clone()])),
        rho: wv(&[h.clone(), h.clone(), h.clone(), q_zero()]),
        rho_check: ci(&[1, 1, 1, 0]),
        n_alpha: vec![h.clone(), h.clone(), h.clone()],
        n_alpha_check: vec![h.clone(), h.clone(), h.clone()],
        fundamental_like: vec![
            wv(&[h.clone(), q_zero(), q_zero(), q_zero()]),
            wv(&[q_zero(), h.clone(), q_zero(), q_zero()]),
            wv(&[q_zero(), q_zero(), h.clone(), q_zero()]),
        ],
        weight_basis: Mat::from_cols(vec![
            vec![h.clone(), qi(0), qi(0), qi(1)],
            vec![qi(0), h.clone(), qi(0), qi(1)],
            vec![qi(0), qi(0), h.clone(), qi(1)],
            vec![qi(0), qi(0), qi(0), qi(2)],
        ]),
        coweight_basis: Mat::from_cols(vec![
            vec![qi(1), qi(1), qi(1), h.clone()],
            vec![qi(2), qi(0), qi(0), qi(0)],
            vec![qi(0), qi(2), qi(0), qi(0)],
            vec![qi(0), qi(0), qi(0), qi(1)],
        ]),
        minus_w0_wt: mat_i(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, -1]]),
        dual_case: Some(CaseId::GarrettAuto),
        lci: None,
        // Cone over the 6-dimensional Lagrangian Grassmannian LGr(3,6).
        cone_dim: Some(7),
    }
}

fn gl1_spec() -> CaseSpec {
    CaseSpec {
        id: Some(CaseId::Gl1),
        name: "gl1".into(),
        rank: 1,
        pairing: Mat::identity(1),
        simple_roots: vec![],
        simple_coroots: vec![],
        theta: Some(wi(&[1])),
        theta_check: Some(ci(&[1])),
        rho: wi(&[0]),
        rho_check: ci(&[0]),
        n_alpha: vec![],
        n_alpha_check: vec![],
        fundamental_like: vec![],
        weight_basis: Mat::identity(1),
        coweight_basis: Mat::identity(1),
        minus_w0_wt: mat_i(&[&[-1]]),
        // GL1 is canonically self-dual; the dual link stays unset because the
        // theta <-> gamma*theta_check exchange is a property of the period
        // pairs only. Coweights self-identify through the shared basis.
        dual_case: None,
        lci: None,
        cone_dim: None,
    }
}

fn gl2_spec() -> CaseSpec {
    let h = qr(1, 2);
    CaseSpec {
        id: Some(CaseId::Gl2),
        name: "gl2".into(),
        rank: 2,
        pairing: Mat::identity(2),
        simple_roots: vec![wi(&[1, -1])],
        simple_coroots: vec![ci(&[1, -1])],
        theta: Some(wi(&[1, 1])),
        theta_check: Some(cv(&[h.clone(), h.clone()])),
        rho: wv(&[h.clone(), -h.clone()]),
        rho_check: cv(&[h.clone(), -h.clone()]),
        n_alpha: vec![h.clone()],
        n_alpha_check: vec![h.clone()],
        fundamental_like: vec![wv(&[h.clone(), -h.clone()])],
        weight_basis: Mat::identity(2),
        coweight_basis: Mat::identity(2),
        minus_w0_wt: mat_i(&[&[0, -1], &[-1, 0]]),
        dual_case: None,
        lci: None,
        cone_dim: None,
    }
}

fn sl2_spec() -> CaseSpec {
    CaseSpec {
        id: Some(CaseId::Sl2),
        name: "sl2".into(),
        rank: 1,
        pairing: Mat::identity(1),
        simple_roots: vec![wi(&[2])],
        simple_coroots: vec![ci(&[1])],
        theta: None,
        theta_check: None,
        rho: wi(&[1]),
        rho_check: cv(&[qr(1, 2)]),
        n_alpha: vec![qr(1, 2)],
        n_alpha_check: vec![qr(1, 2)],
        fundamental_like: vec![],
        weight_basis: Mat::identity(1),
        coweight_basis: Mat::identity(1),
        minus_w0_wt: mat_i(&[&[1]]),
        dual_case: None,
        lci: None,
        cone_dim: None,
    }
}

fn gl3_spec() -> CaseSpec {
    let third = qr(1, 3);
    CaseSpec {
        id: Some(CaseId::Gl3),
        name: "gl3".into(),
        rank: 3,
        pairing: Mat::identity(3),
        simple_roots: vec![wi(&[1, -1, 0]), wi(&[0, 1, -1])],
        simple_coroots: vec![ci(&[1, -1, 0]), ci(&[0, 1, -1])],
        theta: Some(wi(&[1, 1, 1])),
        theta_check: Some(cv(&[third.clone(), third.clone(), third.clone()])),
        rho: wi(&[1, 0, -1]),
        rho_check: ci(&[1, 0, -1]),
        n_alpha: vec![q_one(), q_one()],
        n_alpha_check: vec![q_one(), q_one()],
        fundamental_like: vec![
            wv(&[qr(2, 3), qr(-1, 3), qr(-1, 3)]),
            wv(&[qr(1, 3), qr(1, 3), qr(-2, 3)]),
        ],
        weight_basis: Mat::identity(3),
        coweight_basis: Mat::identity(3),
        minus_w0_wt: mat_i(&[&[0, 0, -1], &[0, -1, 0], &[-1, 0, 0]]),
        dual_case: None,
        lci: None,
        cone_dim: None,
    }
}

/// Type C3 datum backing the Hilbert-series cross-check for the Lagrangian
/// cone: its third fundamental representation has dimension 14, and the
/// degree-k coefficient of that cone's Hilbert series is dim V(k*pi_3).
/// Not part of the public catalog.
fn c3_auxiliary_spec() -> CaseSpec {
    CaseSpec {
        id: None,
        name: "c3_auxiliary".into(),
        rank: 3,
        pairing: Mat::identity(3),
        simple_roots: vec![wi(&[1, -1, 0]), wi(&[0, 1, -1]), wi(&[0, 0, 2])],
        simple_coroots: vec![ci(&[1, -1, 0]), ci(&[0, 1, -1]), ci(&[0, 0, 1])],
        theta: None,
        theta_check: None,
        rho: wi(&[3, 2, 1]),
        rho_check: cv(&[qr(5, 2), qr(3, 2), qr(1, 2)]),
        n_alpha: vec![qi(3), qi(5), qi(3)],
        n_alpha_check: vec![qr(5, 2), qi(4), qr(9, 2)],
        fundamental_like: vec![],
        weight_basis: Mat::identity(3),
        coweight_basis: Mat::identity(3),
        minus_w0_wt: mat_i(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
        dual_case: None,
        lci: None,
        cone_dim: None,
    }
}

static CATALOG: LazyLock<HashMap<CaseId, CaseData>> = LazyLock::new(|| {
    let specs = [
        ginzburg_auto_spec(),
        ginzburg_dual_spec(),
        garrett_auto_spec(),
        garrett_dual_spec(),
        gl1_spec(),
        gl2_spec(),
        sl2_spec(),
        gl3_spec(),
    ];
    let mut map = HashMap::new();
    for spec in specs {
        let id = spec.id.expect("catalog entries carry ids");
        let data = spec.finish().expect("catalog entry must validate");
        map.insert(id, data);
    }
    for case in map.values() {
        if let Some(dual_id) = case.dual_case {
            let dual = map.get(&dual_id).expect("dual case present");
            validate_duality(case, dual).expect("catalog duality must validate");
        }
    }
    map
});

static C3_AUX: LazyLock<CaseData> =
    LazyLock::new(|| c3_auxiliary_spec().finish().expect("C3 auxiliary must validate"));

pub fn case(id: CaseId) -> &'static CaseData {
    CATALOG.get(&id).expect("catalog is total")
}

pub fn load_case(name: &str) -> Result<&'static CaseData> {
    Ok(case(CaseId::parse(name)?))
}

pub fn all_cases() -> impl Iterator<Item = &'static CaseData> {
    CaseId::ALL.iter().map(|&id| case(id))
}

pub fn c3_auxiliary() -> &'static CaseData {
    &C3_AUX
}

/// The four cases carrying a graded cone structure.
pub const MAIN_CASES: [CaseId; 4] = [
    CaseId::GinzburgAuto,
    CaseId::GinzburgDual,
    CaseId::GarrettAuto,
    CaseId::GarrettDual,
];

/// Cross-checks tying a case to its catalog dual: shared coordinates identify
/// weights of one side with coweights of the other, exchange roots with
/// coroots and theta with gamma*theta_check, and identify the lattices.
pub fn validate_duality(case: &CaseData, dual: &CaseData) -> Result<()> {
    let err = |msg: String| Error::InvalidCase(format!("{} / {}: {}", case.name, dual.name, msg));
    if case.rank != dual.rank {
        return Err(err("rank mismatch".into()));
    }
    if case.pairing != dual.pairing {
        return Err(err("pairing matrices differ".into()));
    }
    let same_len = case.simple_roots.len() == dual.simple_coroots.len();
    if !same_len {
        return Err(err("simple root counts differ".into()));
    }
    for (a, dac) in case.simple_roots.iter().zip(&dual.simple_coroots) {
        if a.0 != dac.0 {
            return Err(err(format!("root {a} does not match dual coroot")));
        }
    }
    for (ac, da) in case.simple_coroots.iter().zip(&dual.simple_roots) {
        if ac.0 != da.0 {
            return Err(err(format!("coroot {ac} does not match dual root")));
        }
    }
    if case.rho.0 != dual.rho_check.0 || case.rho_check.0 != dual.rho.0 {
        return Err(err("rho / rho_check do not exchange".into()));
    }

    match (&case.theta, &dual.theta_check) {
        (Some(t), Some(dtc)) => {
            let a = case.pair(&case.rho, &case.rho_check);
            let da = dual.pair(&dual.rho, &dual.rho_check);
            if a != da {
                return Err(err("constant a differs across the pair".into()));
            }
            if a == q_one() {
                return Err(err("a = 1 on a graded pair".into()));
            }
            let gamma = (&a - q_one()).recip();
            if t.0 != dtc.scale(&gamma).0 {
                return Err(err("theta != gamma * dual theta_check".into()));
            }
        }
        (None, None) => {}
        _ => return Err(err("theta present on one side only".into())),
    }

    // Lattice identification: every basis vector of one lattice is integral
    // in the other's basis.
    for j in 0..case.rank {
        let col = case.weight_basis.col(j);
        if integer_coords(&dual.coweight_basis_inv, &col).is_none() {
            return Err(err("weight lattice not contained in dual coweight lattice".into()));
        }
        let dcol = dual.coweight_basis.col(j);
        if integer_coords(&case.weight_basis_inv, &dcol).is_none() {
            return Err(err("dual coweight lattice not contained in weight lattice".into()));
        }
    }

    if case.minus_w0_wt != dual.minus_w0_cowt {
        return Err(err("minus_w0 maps disagree across the pair".into()));
    }
    Ok(())
}

// JSON case descriptions: an interchange format mirroring the embedded data,
// with every number rendered "p/q". Imported cases run the same validation.

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CaseDescription {
    pub name: String,
    pub rank: usize,
    pub pairing: Vec<Vec<String>>,
    pub simple_roots: Vec<Vec<String>>,
    pub simple_coroots: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta_check: Option<Vec<String>>,
    pub rho: Vec<String>,
    pub rho_check: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_alpha: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_alpha_check: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fundamental_like: Option<Vec<Vec<String>>>,
    pub weight_basis: Vec<Vec<String>>,
    pub coweight_basis: Vec<Vec<String>>,
    pub minus_w0: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_case: Option<String>,
}

fn strs(v: &[Q]) -> Vec<String> {
    v.iter().map(fmt_q).collect()
}

fn mat_strs(m: &Mat) -> Vec<Vec<String>> {
    (0..m.rows).map(|i| strs(m.row(i))).collect()
}

fn parse_vec(v: &[String]) -> Result<Vec<Q>> {
    v.iter().map(|s| parse_q(s)).collect()
}

fn parse_mat(rows: &[Vec<String>]) -> Result<Mat> {
    let parsed: Result<Vec<Vec<Q>>> = rows.iter().map(|r| parse_vec(r)).collect();
    Ok(Mat::from_rows(parsed?))
}

pub fn case_description(case: &CaseData) -> CaseDescription {
    CaseDescription {
        name: case.name.clone(),
        rank: case.rank,
        pairing: mat_strs(&case.pairing),
        simple_roots: case.simple_roots.iter().map(|w| strs(&w.0)).collect(),
        simple_coroots: case.simple_coroots.iter().map(|c| strs(&c.0)).collect(),
        theta: case.theta.as_ref().map(|t| strs(&t.0)),
        theta_check: case.theta_check.as_ref().map(|t| strs(&t.0)),
        rho: strs(&case.rho.0),
        rho_check: strs(&case.rho_check.0),
        n_alpha: Some(case.n_alpha.iter().map(fmt_q).collect()),
        n_alpha_check: Some(case.n_alpha_check.iter().map(fmt_q).collect()),
        fundamental_like: Some(case.fundamental_like.iter().map(|w| strs(&w.0)).collect()),
        weight_basis: mat_strs(&case.weight_basis),
        coweight_basis: mat_strs(&case.coweight_basis),
        minus_w0: mat_strs(&case.minus_w0_wt),
        dual_case: case.dual_case.map(|d| d.name().to_string()),
    }
}

/// Builds and validates a case from a JSON description. `n_alpha` and
/// `fundamental_like` are derived when omitted. The dual reference, if any,
/// must point into the catalog and is cross-validated.
pub fn case_from_description(desc: &CaseDescription) -> Result<CaseData> {
    let rank = desc.rank;
    let pairing = parse_mat(&desc.pairing)?;
    let simple_roots: Vec<WeightVector> = desc
        .simple_roots
        .iter()
        .map(|v| parse_vec(v).map(WeightVector))
        .collect::<Result<_>>()?;
    let simple_coroots: Vec<CoweightVector> = desc
        .simple_coroots
        .iter()
        .map(|v| parse_vec(v).map(CoweightVector))
        .collect::<Result<_>>()?;
    let rho = WeightVector(parse_vec(&desc.rho)?);
    let rho_check = CoweightVector(parse_vec(&desc.rho_check)?);
    let theta = desc.theta.as_ref().map(|v| parse_vec(v).map(WeightVector)).transpose()?;
    let theta_check = desc
        .theta_check
        .as_ref()
        .map(|v| parse_vec(v).map(CoweightVector))
        .transpose()?;

    let n_alpha = match &desc.n_alpha {
        Some(v) => v.iter().map(|s| parse_q(s)).collect::<Result<Vec<Q>>>()?,
        None => derive_combination(&simple_roots, &rho, rank)?,
    };
    let n_alpha_check = match &desc.n_alpha_check {
        Some(v) => v.iter().map(|s| parse_q(s)).collect::<Result<Vec<Q>>>()?,
        None => {
            let as_weights: Vec<WeightVector> =
                simple_coroots.iter().map(|c| WeightVector(c.0.clone())).collect();
            derive_combination(&as_weights, &WeightVector(rho_check.0.clone()), rank)?
        }
    };
    let fundamental_like = match &desc.fundamental_like {
        Some(v) => v.iter().map(|w| parse_vec(w).map(WeightVector)).collect::<Result<_>>()?,
        None => derive_fundamental(&pairing, &simple_coroots, theta_check.as_ref(), rank)?,
    };

    let spec = CaseSpec {
        id: None,
        name: desc.name.clone(),
        rank,
        pairing,
        simple_roots,
        simple_coroots,
        theta,
        theta_check,
        rho,
        rho_check,
        n_alpha,
        n_alpha_check,
        fundamental_like,
        weight_basis: parse_mat(&desc.weight_basis)?,
        coweight_basis: parse_mat(&desc.coweight_basis)?,
        minus_w0_wt: parse_mat(&desc.minus_w0)?,
        dual_case: desc.dual_case.as_deref().map(CaseId::parse).transpose()?,
        lci: None,
        cone_dim: None,
    };
    let data = spec.finish()?;
    if let Some(dual_id) = data.dual_case {
        validate_duality(&data, case(dual_id))?;
    }
    Ok(data)
}

fn derive_combination(vectors: &[WeightVector], target: &WeightVector, rank: usize) -> Result<Vec<Q>> {
    if vectors.is_empty() {
        return if target.is_zero() {
            Ok(vec![])
        } else {
            Err(Error::InvalidCase("no roots but nonzero rho".into()))
        };
    }
    let m = Mat::from_cols(vectors.iter().map(|v| v.0.clone()).collect());
    assert_eq!(m.rows, rank);
    m.solve_full_col_rank(&target.0)
        .ok_or_else(|| Error::InvalidCase("rho is not a combination of the simple roots".into()))
}

fn derive_fundamental(
    pairing: &Mat,
    simple_coroots: &[CoweightVector],
    theta_check: Option<&CoweightVector>,
    rank: usize,
) -> Result<Vec<WeightVector>> {
    if theta_check.is_none() || simple_coroots.is_empty() {
        return Ok(vec![]);
    }
    // Rows: <., P acheck_j> for each j, then <., P theta_check>.
    let mut rows: Vec<Vec<Q>> = simple_coroots.iter().map(|c| pairing.mul_vec(&c.0)).collect();
    rows.push(pairing.mul_vec(&theta_check.unwrap().0));
    if rows.len() != rank {
        return Err(Error::InvalidCase(
            "cannot derive fundamental_like: coroots + theta_check do not determine it".into(),
        ));
    }
    let a = Mat::from_rows(rows);
    let mut out = Vec::new();
    for i in 0..simple_coroots.len() {
        let mut rhs = vec![q_zero(); rank];
        rhs[i] = q_one();
        let sol = a
            .solve_full_col_rank(&rhs)
            .ok_or_else(|| Error::InvalidCase("fundamental_like system inconsistent".into()))?;
        out.push(WeightVector(sol));
    }
    Ok(out)
}
