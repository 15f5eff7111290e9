//! Truncated exact power series.
//!
//! `GradedSeries` is a series in the grading variable t, carrying coefficients
//! for t^0..=t^trunc. `HalfPowerSeries` collects terms c_n * u^(-n) where
//! u = q^(1/2); exponents n may be negative (positive powers of u) and the
//! series is complete for all n <= trunc.

use std::collections::BTreeMap;

use num::traits::Zero;

use crate::error::{Error, Result};
use crate::rat::{q_one, q_zero, Q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSeries {
    pub trunc: usize,
    coeffs: Vec<Q>,
}

impl GradedSeries {
    pub fn zero(trunc: usize) -> Self {
        GradedSeries { trunc, coeffs: vec![q_zero(); trunc + 1] }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = GradedSeries::zero(trunc);
        s.coeffs[0] = q_one();
        s
    }

    pub fn from_coeffs(trunc: usize, coeffs: Vec<Q>) -> Self {
        assert_eq!(coeffs.len(), trunc + 1, "coefficient count mismatch");
        GradedSeries { trunc, coeffs }
    }

    pub fn coeff(&self, d: usize) -> &Q {
        &self.coeffs[d]
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, d: usize, v: Q) {
        self.coeffs[d] = v;
    }

    pub fn add_to_coeff(&mut self, d: usize, v: &Q) {
        if d <= self.trunc {
            self.coeffs[d] += v;
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let coeffs = (0..=trunc).map(|d| &self.coeffs[d] + &other.coeffs[d]).collect();
        GradedSeries { trunc, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let mut out = GradedSeries::zero(trunc);
        for i in 0..=trunc {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(trunc - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let add = &self.coeffs[i] * &other.coeffs[j];
                out.coeffs[i + j] += add;
            }
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        GradedSeries { trunc: self.trunc, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn invert(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::Domain("series with zero constant term has no inverse".into()));
        }
        let inv0 = self.coeffs[0].recip();
        let mut out = GradedSeries::zero(self.trunc);
        out.coeffs[0] = inv0.clone();
        for n in 1..=self.trunc {
            let mut acc = q_zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &out.coeffs[n - k];
            }
            out.coeffs[n] = -(acc * &inv0);
        }
        Ok(out)
    }

    /// The polynomial 1 - c * t^d, truncated.
    pub fn one_minus_term(trunc: usize, c: &Q, d: usize) -> Self {
        let mut s = GradedSeries::one(trunc);
        if d <= trunc && d > 0 {
            s.coeffs[d] = -c;
        }
        s
    }

    /// Product over (1 - c_i t^(d_i))^(e_i) with integer exponents e_i.
    pub fn product_of_binomials(trunc: usize, factors: &[(Q, usize, i64)]) -> Result<Self> {
        let mut acc = GradedSeries::one(trunc);
        for (c, d, e) in factors {
            let base = GradedSeries::one_minus_term(trunc, c, *d);
            let powed = if *e >= 0 { base } else { base.invert()? };
            for _ in 0..e.unsigned_abs() {
                acc = acc.mul(&powed);
            }
        }
        Ok(acc)
    }

    /// Substitutes t -> u^(-k): coefficient of t^d lands on u^(-kd).
    pub fn to_half_power(&self, units_per_degree: i64) -> HalfPowerSeries {
        assert!(units_per_degree > 0);
        let trunc = units_per_degree * self.trunc as i64;
        let mut out = HalfPowerSeries::zero(trunc);
        for (d, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.add_term(units_per_degree * d as i64, c.clone());
            }
        }
        out
    }
}

/// Sum of terms coeff * u^(-n), n <= trunc, with u = q^(1/2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfPowerSeries {
    pub trunc: i64,
    terms: BTreeMap<i64, Q>,
}

impl HalfPowerSeries {
    pub fn zero(trunc: i64) -> Self {
        HalfPowerSeries { trunc, terms: BTreeMap::new() }
    }

    pub fn one(trunc: i64) -> Self {
        let mut s = HalfPowerSeries::zero(trunc);
        s.add_term(0, q_one());
        s
    }

    pub fn add_term(&mut self, n: i64, c: Q) {
        if n > self.trunc || c.is_zero() {
            return;
        }
        let entry = self.terms.entry(n).or_insert_with(q_zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&n);
        }
    }

    pub fn coeff(&self, n: i64) -> Q {
        self.terms.get(&n).cloned().unwrap_or_else(q_zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Q)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = HalfPowerSeries::zero(self.trunc.min(other.trunc));
        for (n, c) in &self.terms {
            out.add_term(*n, c.clone());
        }
        for (n, c) in &other.terms {
            out.add_term(*n, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = HalfPowerSeries::zero(self.trunc);
        for (n, v) in &self.terms {
            out.add_term(*n, v * c);
        }
        out
    }

    /// Multiplication by u^(-shift): each exponent n becomes n + shift.
    pub fn shift(&self, shift: i64) -> Self {
        let mut out = HalfPowerSeries::zero(self.trunc + shift);
        for (n, v) in &self.terms {
            out.add_term(n + shift, v.clone());
        }
        out
    }

    /// First exponent (scanning upward) where the two series differ, looking
    /// only at n <= bound. None means they agree on that window.
    pub fn first_mismatch(&self, other: &Self, bound: i64) -> Option<i64> {
        let mut exps: Vec<i64> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .filter(|n| *n <= bound)
            .collect();
        exps.sort_unstable();
        exps.dedup();
        exps.into_iter().find(|&n| self.coeff(n) != other.coeff(n))
    }

    pub fn eq_up_to(&self, other: &Self, bound: i64) -> bool {
        assert!(
            bound <= self.trunc && bound <= other.trunc,
            "comparison window exceeds truncation"
        );
        self.first_mismatch(other, bound).is_none()
    }
}
