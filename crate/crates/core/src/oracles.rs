//! Independent oracles on the polynomial side.
//!
//! The graded dimensions of a quotient by an explicit ideal are computed by
//! plain exact linear algebra: in degree d the ideal piece is spanned by
//! generator * monomial products, so dim k[X]_d = dim S_d - rank of that
//! span. This never touches weights or characters, which is what makes it a
//! genuine cross-check on the Hilbert series coming from the cone.
//!
//! The 2x2x2 hyperdeterminant is derived here, not hard-coded: it is the
//! t-discriminant of det(X0 + t X1), checked to be slicing-independent and a
//! torus semi-invariant.

use std::collections::{BTreeMap, HashMap};

use num::traits::Zero;

use crate::linalg::Mat;
use crate::rat::{q_zero, qi, Q};

/// Sparse multivariate polynomial: exponent vector -> coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u16>, Q>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly { nvars, terms: BTreeMap::new() }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0u16; nvars];
        e[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, qi(1));
        SparsePoly { nvars, terms }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0u16; nvars], c);
        }
        SparsePoly { nvars, terms }
    }

    pub fn add_term(&mut self, exp: Vec<u16>, c: Q) {
        assert_eq!(exp.len(), self.nvars);
        let entry = self.terms.entry(exp).or_insert_with(q_zero);
        *entry += c;
        if entry.is_zero() {
            let key: Vec<u16> = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .expect("zero entry present");
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = SparsePoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exp, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by a single monomial.
    pub fn shift_monomial(&self, exp: &[u16]) -> Self {
        SparsePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(exp).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn total_degree(&self) -> usize {
        self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum::<usize>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// The common weight of all terms under diagonal variable weights, or
    /// None if the polynomial is not a semi-invariant for them.
    pub fn common_weight(&self, var_weights: &[Vec<i64>]) -> Option<Vec<i64>> {
        assert_eq!(var_weights.len(), self.nvars);
        let dim = var_weights.first().map_or(0, Vec::len);
        let mut result: Option<Vec<i64>> = None;
        for e in self.terms.keys() {
            let mut w = vec![0i64; dim];
            for (i, &exp) in e.iter().enumerate() {
                for (j, val) in var_weights[i].iter().enumerate() {
                    w[j] += val * exp as i64;
                }
            }
            match &result {
                None => result = Some(w),
                Some(r) if *r == w => {}
                _ => return None,
            }
        }
        result
    }
}

/// All exponent vectors of the given total degree, lexicographic.
pub fn monomials(nvars: usize, degree: usize) -> Vec<Vec<u16>> {
    fn rec(nvars: usize, degree: usize, prefix: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if nvars == 1 {
            prefix.push(degree as u16);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for d in 0..=degree {
            prefix.push(d as u16);
            rec(nvars - 1, degree - d, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(nvars, degree, &mut Vec::new(), &mut out);
    out
}

/// Graded dimensions of k[x_1..x_n]/(relations) for degrees 0..=max_degree.
/// Relations must be homogeneous; their degrees are read off the polynomials.
pub fn ideal_quotient_dims(nvars: usize, relations: &[SparsePoly], max_degree: usize) -> Vec<usize> {
    for r in relations {
        assert!(r.is_homogeneous(), "ideal oracle needs homogeneous relations");
        assert!(!r.terms.is_empty(), "zero relation");
    }
    let mut dims = Vec::with_capacity(max_degree + 1);
    for d in 0..=max_degree {
        let mons = monomials(nvars, d);
        let index: HashMap<Vec<u16>, usize> =
            mons.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows: Vec<Vec<Q>> = Vec::new();
        for r in relations {
            let rd = r.total_degree();
            if rd > d {
                continue;
            }
            for m in monomials(nvars, d - rd) {
                let prod = r.shift_monomial(&m);
                let mut row = vec![q_zero(); mons.len()];
                for (e, c) in &prod.terms {
                    row[*index.get(e).expect("product stays in degree d")] = c.clone();
                }
                rows.push(row);
            }
        }
        let rank = if rows.is_empty() { 0 } else { Mat::from_rows(rows).rank() };
        dims.push(mons.len() - rank);
    }
    dims
}

/// Trace form and determinant of the generic traceless 3x3 matrix
/// [[h1, x1, x3], [y1, h2, x2], [y3, y2, -h1-h2]] in the variable order
/// [h1, h2, x1, x2, x3, y1, y2, y3]. These generate the invariant ring whose
/// vanishing cuts the nilpotent cone.
pub fn sl3_nilcone_relations() -> (SparsePoly, SparsePoly) {
    let n = 8;
    let v = |i: usize| SparsePoly::var(n, i);
    let (h1, h2, x1, x2, x3, y1, y2, y3) = (v(0), v(1), v(2), v(3), v(4), v(5), v(6), v(7));
    let h3 = h1.neg().sub(&h2);
    // Matrix entries m[i][j].
    let zero = SparsePoly::zero(n);
    let m: [[&SparsePoly; 3]; 3] = [[&h1, &x1, &x3], [&y1, &h2, &x2], [&y3, &y2, &h3]];
    let _ = &zero;

    // tr(M^2)
    let mut tr2 = SparsePoly::zero(n);
    for i in 0..3 {
        for j in 0..3 {
            tr2 = tr2.add(&m[i][j].mul(m[j][i]));
        }
    }
    // det(M)
    let mut det = SparsePoly::zero(n);
    let perms: [([usize; 3], i64); 6] = [
        ([0, 1, 2], 1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([0, 2, 1], -1),
        ([2, 1, 0], -1),
        ([1, 0, 2], -1),
    ];
    for (p, sign) in perms {
        let term = m[0][p[0]].mul(m[1][p[1]]).mul(m[2][p[2]]).scale(&qi(sign));
        det = det.add(&term);
    }
    (tr2, det)
}

/// 2x2 determinant of a matrix of polynomials.
fn det2(m: &[[SparsePoly; 2]; 2]) -> SparsePoly {
    m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0]))
}

/// Derives the 2x2x2 hyperdeterminant as the t-discriminant of the pencil of
/// slices along the given axis (0, 1 or 2). Variables are x_{ijk} ordered by
/// the binary index 4i + 2j + k.
pub fn hyperdet_via_slicing(axis: usize) -> SparsePoly {
    let n = 8;
    let x = |i: usize, j: usize, k: usize| SparsePoly::var(n, 4 * i + 2 * j + k);
    // Slice s in {0,1} along `axis`, remaining indices (r, c).
    let entry = |s: usize, r: usize, c: usize| match axis {
        0 => x(s, r, c),
        1 => x(r, s, c),
        2 => x(r, c, s),
        _ => panic!("axis out of range"),
    };
    let m0 = [[entry(0, 0, 0), entry(0, 0, 1)], [entry(0, 1, 0), entry(0, 1, 1)]];
    let m1 = [[entry(1, 0, 0), entry(1, 0, 1)], [entry(1, 1, 0), entry(1, 1, 1)]];
    // det(M0 + t M1) = c0 + c1 t + c2 t^2 with c0 = det M0, c2 = det M1,
    // c1 = det(M0+M1) - det M0 - det M1.
    let c0 = det2(&m0);
    let c2 = det2(&m1);
    let msum = [
        [m0[0][0].add(&m1[0][0]), m0[0][1].add(&m1[0][1])],
        [m0[1][0].add(&m1[1][0]), m0[1][1].add(&m1[1][1])],
    ];
    let c1 = det2(&msum).sub(&c0).sub(&c2);
    // Discriminant c1^2 - 4 c0 c2.
    c1.mul(&c1).sub(&c0.mul(&c2).scale(&qi(4)))
}

/// The hyperdeterminant, with its derivation checks: the three slicing axes
/// agree exactly, the result is a homogeneous quartic, and it is a torus
/// semi-invariant of weight zero in the three SL2 directions.
pub fn hyperdet_2x2x2() -> SparsePoly {
    let d0 = hyperdet_via_slicing(0);
    let d1 = hyperdet_via_slicing(1);
    let d2 = hyperdet_via_slicing(2);
    assert_eq!(d0, d1, "slicing axes 0 and 1 disagree");
    assert_eq!(d0, d2, "slicing axes 0 and 2 disagree");
    assert!(d0.is_homogeneous() && d0.total_degree() == 4, "hyperdet must be a quartic");
    let var_weights: Vec<Vec<i64>> = (0..8)
        .map(|idx| {
            let i = (idx >> 2) & 1;
            let j = (idx >> 1) & 1;
            let k = idx & 1;
            vec![1 - 2 * i as i64, 1 - 2 * j as i64, 1 - 2 * k as i64]
        })
        .collect();
    let w = d0.common_weight(&var_weights).expect("hyperdet must be a torus semi-invariant");
    assert_eq!(w, vec![0, 0, 0], "hyperdet must have weight zero under the SL2 torus");
    d0
}
