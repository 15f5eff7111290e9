//! Brute-force invariant dimensions in explicit tensor models.
//!
//! The multiplicity of V_lambda* in the coordinate ring is the dimension of
//! the subspace of V_lambda killed by the degenerate unipotent directions
//! and of weight zero against rho_check'. This module computes that
//! dimension with no cone input at all: it realizes V_lambda as the Cartan
//! component of an explicit tensor product, finds the weight-zero slice, and
//! takes the kernel of the raising operators. Agreement with the relevance
//! predicate is a theorem, not a definition, which is why the two live in
//! different modules.

use std::collections::BTreeMap;

use num::traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::rat::{q_to_i64, q_zero, qi, qr, Q};
use crate::reptheory::weyl_dimension;
use crate::rootdata::{CaseData, CaseId, WeightVector};

type SparseVec = BTreeMap<u32, Q>;

/// One operator on the tensor ambient, acting by the Leibniz rule: for each
/// copy and each local basis index, the list of (target index, coefficient).
type Op = Vec<Vec<Vec<(usize, i64)>>>;

struct TensorModel {
    copy_dims: Vec<usize>,
    strides: Vec<u32>,
    /// Number of semisimple exponent slots, fixed even when there are no copies.
    exp_slots: usize,
    /// Semisimple exponent contribution of each local basis vector.
    copy_exps: Vec<Vec<Vec<i64>>>,
    lowering: Vec<Op>,
    raising_u0: Vec<Op>,
    highest: SparseVec,
}

#[derive(Debug, Clone)]
pub struct ModelOptions {
    /// Hard bound on the ambient tensor dimension.
    pub ambient_cap: usize,
    /// Re-run the computation in an independent second model when it fits.
    pub cross_check: bool,
    /// Ambient bound for the second model.
    pub cross_check_cap: usize,
}

impl Default for ModelOptions {
    fn default() -> Self {
        ModelOptions { ambient_cap: 20_000, cross_check: true, cross_check_cap: 8_200 }
    }
}

fn strides_of(copy_dims: &[usize]) -> (Vec<u32>, usize) {
    let mut strides = Vec::with_capacity(copy_dims.len());
    let mut total = 1usize;
    for &d in copy_dims {
        strides.push(total as u32);
        total *= d;
    }
    (strides, total)
}

fn apply_op(model: &TensorModel, op: &Op, v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (&idx, c) in v {
        for (copy, stride) in model.strides.iter().enumerate() {
            let digit = ((idx / stride) as usize) % model.copy_dims[copy];
            for &(to, k) in &op[copy][digit] {
                let nidx = idx + (to as u32) * stride - (digit as u32) * stride;
                let entry = out.entry(nidx).or_insert_with(q_zero);
                *entry += c * qi(k);
                if entry.is_zero() {
                    out.remove(&nidx);
                }
            }
        }
    }
    out
}

fn sub_scaled(v: &mut SparseVec, w: &SparseVec, c: &Q) {
    for (&idx, wc) in w {
        let entry = v.entry(idx).or_insert_with(q_zero);
        *entry -= c * wc;
        if entry.is_zero() {
            v.remove(&idx);
        }
    }
}

/// Reduces v against the pivot-keyed echelon basis in place.
fn reduce(v: &mut SparseVec, basis: &BTreeMap<u32, SparseVec>) {
    loop {
        let Some((&p, c)) = v.iter().next() else { return };
        let Some(b) = basis.get(&p) else { return };
        let c = c.clone();
        sub_scaled(v, b, &c);
    }
}

/// Span closure of the highest vector under the lowering operators.
fn cartan_component(model: &TensorModel) -> Vec<SparseVec> {
    let mut basis: BTreeMap<u32, SparseVec> = BTreeMap::new();
    let mut queue: Vec<SparseVec> = Vec::new();
    let insert = |v: SparseVec, basis: &mut BTreeMap<u32, SparseVec>| -> Option<SparseVec> {
        let mut v = v;
        reduce(&mut v, basis);
        let (&p, c) = v.iter().next()?;
        let c = c.clone();
        let normalized: SparseVec = v.iter().map(|(i, x)| (*i, x / &c)).collect();
        basis.insert(p, normalized.clone());
        Some(normalized)
    };
    if let Some(h) = insert(model.highest.clone(), &mut basis) {
        queue.push(h);
    }
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head].clone();
        head += 1;
        for op in &model.lowering {
            let w = apply_op(model, op, &v);
            if w.is_empty() {
                continue;
            }
            if let Some(nv) = insert(w, &mut basis) {
                queue.push(nv);
            }
        }
    }
    basis.into_values().collect()
}

/// Semisimple exponents of a single ambient basis index.
fn exps_of(model: &TensorModel, idx: u32) -> Vec<i64> {
    let mut e = vec![0i64; model.exp_slots];
    for (copy, stride) in model.strides.iter().enumerate() {
        let digit = ((idx / stride) as usize) % model.copy_dims[copy];
        for (slot, val) in model.copy_exps[copy][digit].iter().enumerate() {
            e[slot] += val;
        }
    }
    e
}

fn invariant_dim_in_model(
    cd: &CaseData,
    lam: &WeightVector,
    model: &TensorModel,
    weight_of: &dyn Fn(&[i64]) -> WeightVector,
) -> Result<usize> {
    let rep_basis = cartan_component(model);
    let expected = weyl_dimension(cd, lam)? as usize;
    if rep_basis.len() != expected {
        return Err(Error::Dimension(format!(
            "tensor model for {lam} in {} has dimension {}, Weyl formula gives {expected}",
            cd.name,
            rep_basis.len()
        )));
    }
    let rcp = cd
        .rho_check_prime
        .as_ref()
        .ok_or_else(|| Error::Domain(format!("case {} has no rho_check_prime", cd.name)))?;

    // Weight-zero slice. Every basis vector is weight-homogeneous because the
    // operators are; the assertion checks it anyway.
    let mut zero_slice: Vec<&SparseVec> = Vec::new();
    for v in &rep_basis {
        let first = *v.keys().next().expect("basis vectors are nonzero");
        let wt = weight_of(&exps_of(model, first));
        for &idx in v.keys() {
            assert_eq!(
                weight_of(&exps_of(model, idx)).0,
                wt.0,
                "basis vector is not weight-homogeneous"
            );
        }
        if cd.pair(&wt, rcp).is_zero() {
            zero_slice.push(v);
        }
    }
    if zero_slice.is_empty() {
        return Ok(0);
    }

    // Kernel of the stacked raising operators on the zero slice.
    let images: Vec<Vec<SparseVec>> = zero_slice
        .iter()
        .map(|v| model.raising_u0.iter().map(|op| apply_op(model, op, v)).collect())
        .collect();
    let mut support: Vec<(usize, u32)> = Vec::new();
    for imgs in &images {
        for (op_idx, img) in imgs.iter().enumerate() {
            for &idx in img.keys() {
                support.push((op_idx, idx));
            }
        }
    }
    support.sort_unstable();
    support.dedup();
    if support.is_empty() {
        return Ok(zero_slice.len());
    }
    let row_of: BTreeMap<(usize, u32), usize> =
        support.iter().copied().enumerate().map(|(r, k)| (k, r)).collect();
    let cols: Vec<Vec<Q>> = images
        .iter()
        .map(|imgs| {
            let mut col = vec![q_zero(); support.len()];
            for (op_idx, img) in imgs.iter().enumerate() {
                for (&idx, c) in img {
                    col[row_of[&(op_idx, idx)]] = c.clone();
                }
            }
            col
        })
        .collect();
    let rank = Mat::from_cols(cols).rank();
    Ok(zero_slice.len() - rank)
}

// Local operator matrices for the standard 3-dimensional sl3 module with
// basis (e0, e1, e2) and for its exterior square with basis
// (e0^e1, e0^e2, e1^e2).
fn std3(entries: &[(usize, usize, i64)]) -> Vec<Vec<(usize, i64)>> {
    let mut m = vec![Vec::new(); 3];
    for &(from, to, c) in entries {
        m[from].push((to, c));
    }
    m
}

struct A2Ops {
    f1_std: Vec<Vec<(usize, i64)>>,
    f2_std: Vec<Vec<(usize, i64)>>,
    u1_std: Vec<Vec<(usize, i64)>>,
    u2_std: Vec<Vec<(usize, i64)>>,
    f1_wedge: Vec<Vec<(usize, i64)>>,
    f2_wedge: Vec<Vec<(usize, i64)>>,
    u1_wedge: Vec<Vec<(usize, i64)>>,
    u2_wedge: Vec<Vec<(usize, i64)>>,
}

fn a2_ops() -> A2Ops {
    A2Ops {
        // E21: e0 -> e1; E32: e1 -> e2.
        f1_std: std3(&[(0, 1, 1)]),
        f2_std: std3(&[(1, 2, 1)]),
        // Degenerate directions: E12 - E23 and E13.
        u1_std: std3(&[(1, 0, 1), (2, 1, -1)]),
        u2_std: std3(&[(2, 0, 1)]),
        // The same operators on the exterior square by the Leibniz rule.
        f1_wedge: std3(&[(1, 2, 1)]),
        f2_wedge: std3(&[(0, 1, 1)]),
        u1_wedge: std3(&[(2, 1, 1), (1, 0, -1)]),
        u2_wedge: std3(&[(2, 0, -1)]),
    }
}

fn a2_exps() -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let std_exps = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
    let wedge_exps = vec![vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]];
    (std_exps, wedge_exps)
}

/// Standard model for the A2 cases: a1 copies of the standard module and a2
/// copies of its exterior square, Cartan component from the product of
/// highest vectors.
fn a2_model(a1: usize, a2: usize) -> TensorModel {
    let ops = a2_ops();
    let (std_exps, wedge_exps) = a2_exps();
    let copies = a1 + a2;
    let copy_dims = vec![3usize; copies];
    let (strides, _) = strides_of(&copy_dims);
    let per_copy = |std_op: &Vec<Vec<(usize, i64)>>, wedge_op: &Vec<Vec<(usize, i64)>>| -> Op {
        (0..copies).map(|c| if c < a1 { std_op.clone() } else { wedge_op.clone() }).collect()
    };
    let copy_exps =
        (0..copies).map(|c| if c < a1 { std_exps.clone() } else { wedge_exps.clone() }).collect();
    let mut highest = SparseVec::new();
    highest.insert(0, qi(1));
    TensorModel {
        exp_slots: 3,
        copy_dims,
        strides,
        copy_exps,
        lowering: vec![
            per_copy(&ops.f1_std, &ops.f1_wedge),
            per_copy(&ops.f2_std, &ops.f2_wedge),
        ],
        raising_u0: vec![
            per_copy(&ops.u1_std, &ops.u1_wedge),
            per_copy(&ops.u2_std, &ops.u2_wedge),
        ],
        highest,
    }
}

/// Independent A2 model: every exterior-square copy is replaced by an
/// antisymmetrized pair of standard copies, so the ambient and the embedding
/// are genuinely different.
fn a2_alt_model(a1: usize, a2: usize) -> TensorModel {
    let ops = a2_ops();
    let (std_exps, _) = a2_exps();
    let copies = a1 + 2 * a2;
    let copy_dims = vec![3usize; copies];
    let (strides, _) = strides_of(&copy_dims);
    let all_std = |op: &Vec<Vec<(usize, i64)>>| -> Op { vec![op.clone(); copies] };
    let copy_exps = vec![std_exps; copies];
    // Highest vector: e0 on the standard copies, (e0 x e1 - e1 x e0) on each
    // antisymmetrized pair.
    let mut highest = SparseVec::new();
    for mask in 0..(1u32 << a2) {
        let mut idx = 0u32;
        let mut sign = 1i64;
        for pair_i in 0..a2 {
            let (d1, d2) = if mask & (1 << pair_i) == 0 {
                (0u32, 1u32)
            } else {
                sign = -sign;
                (1u32, 0u32)
            };
            idx += d1 * strides[a1 + 2 * pair_i] + d2 * strides[a1 + 2 * pair_i + 1];
        }
        highest.insert(idx, qi(sign));
    }
    TensorModel {
        exp_slots: 3,
        copy_dims,
        strides,
        copy_exps,
        lowering: vec![all_std(&ops.f1_std), all_std(&ops.f2_std)],
        raising_u0: vec![all_std(&ops.u1_std), all_std(&ops.u2_std)],
        highest,
    }
}

/// Standard model for the triple-product cases: Sym^{k_i} of a plane per
/// factor, basis x^{k-j} y^j.
fn a1cubed_model(k: [usize; 3]) -> TensorModel {
    let copy_dims: Vec<usize> = k.iter().map(|&ki| ki + 1).collect();
    let (strides, _) = strides_of(&copy_dims);
    let mut lowering: Vec<Op> = Vec::new();
    let mut raising: Vec<Op> = Vec::new();
    let mut copy_exps = Vec::new();
    for (i, &ki) in k.iter().enumerate() {
        // f: x^a y^b -> a x^{a-1} y^{b+1}; e: -> b x^{a+1} y^{b-1}.
        let mut f = vec![Vec::new(); ki + 1];
        let mut e = vec![Vec::new(); ki + 1];
        for j in 0..=ki {
            let a = ki - j;
            if a > 0 {
                f[j].push((j + 1, a as i64));
            }
            if j > 0 {
                e[j].push((j - 1, j as i64));
            }
        }
        let zero_op = |dims: &[usize]| -> Op { dims.iter().map(|&d| vec![Vec::new(); d]).collect() };
        let mut fop = zero_op(&copy_dims);
        fop[i] = f;
        lowering.push(fop);
        let mut eop = zero_op(&copy_dims);
        eop[i] = e;
        raising.push(eop);
        copy_exps.push((0..=ki).map(|j| {
            let mut ex = vec![0i64; 3];
            ex[i] = ki as i64 - 2 * j as i64;
            ex
        }).collect());
    }
    // U0 combos: e1 - e2 and e2 - e3.
    let combine = |p: &Op, q: &Op, sign: i64| -> Op {
        p.iter()
            .zip(q)
            .map(|(pc, qc)| {
                pc.iter()
                    .zip(qc)
                    .map(|(pe, qe)| {
                        let mut v = pe.clone();
                        v.extend(qe.iter().map(|&(to, c)| (to, sign * c)));
                        v
                    })
                    .collect()
            })
            .collect()
    };
    let u1 = combine(&raising[0], &raising[1], -1);
    let u2 = combine(&raising[1], &raising[2], -1);
    let mut highest = SparseVec::new();
    highest.insert(0, qi(1));
    TensorModel { copy_dims, strides, exp_slots: 3, copy_exps, lowering, raising_u0: vec![u1, u2], highest }
}

/// Independent triple-product model: full tensor powers of the plane, the
/// symmetric power arising as the Cartan component.
fn a1cubed_alt_model(k: [usize; 3]) -> TensorModel {
    let copies: usize = k.iter().sum();
    let copy_dims = vec![2usize; copies];
    let (strides, _) = strides_of(&copy_dims);
    let factor_of = |copy: usize| -> usize {
        if copy < k[0] {
            0
        } else if copy < k[0] + k[1] {
            1
        } else {
            2
        }
    };
    let f_local = vec![vec![(1usize, 1i64)], Vec::new()];
    let e_local = vec![Vec::new(), vec![(0usize, 1i64)]];
    let zero_local = vec![Vec::new(), Vec::new()];
    let op_for_factor = |local: &Vec<Vec<(usize, i64)>>, fac: usize| -> Op {
        (0..copies)
            .map(|c| if factor_of(c) == fac { local.clone() } else { zero_local.clone() })
            .collect()
    };
    let lowering = (0..3).map(|fac| op_for_factor(&f_local, fac)).collect();
    let e_ops: Vec<Op> = (0..3).map(|fac| op_for_factor(&e_local, fac)).collect();
    let neg = |op: &Op| -> Op {
        op.iter()
            .map(|pc| pc.iter().map(|pe| pe.iter().map(|&(t, c)| (t, -c)).collect()).collect())
            .collect()
    };
    let merge = |p: &Op, q: &Op| -> Op {
        p.iter()
            .zip(q)
            .map(|(pc, qc)| {
                pc.iter()
                    .zip(qc)
                    .map(|(pe, qe)| {
                        let mut v = pe.clone();
                        v.extend_from_slice(qe);
                        v
                    })
                    .collect()
            })
            .collect()
    };
    let u1 = merge(&e_ops[0], &neg(&e_ops[1]));
    let u2 = merge(&e_ops[1], &neg(&e_ops[2]));
    let copy_exps = (0..copies)
        .map(|c| {
            let fac = factor_of(c);
            vec![
                { let mut e = vec![0i64; 3]; e[fac] = 1; e },
                { let mut e = vec![0i64; 3]; e[fac] = -1; e },
            ]
        })
        .collect();
    let mut highest = SparseVec::new();
    highest.insert(0, qi(1));
    TensorModel { copy_dims, strides, exp_slots: 3, copy_exps, lowering, raising_u0: vec![u1, u2], highest }
}

fn pairing_as_usize(cd: &CaseData, lam: &WeightVector, i: usize) -> Result<usize> {
    let v = cd.pair(lam, &cd.simple_coroots[i]);
    q_to_i64(&v)
        .filter(|x| *x >= 0)
        .map(|x| x as usize)
        .ok_or_else(|| Error::Domain(format!("<{lam}, acheck_{i}> is not a nonnegative integer")))
}

/// Dimension of the degenerate-invariant subspace of V_lambda, computed in
/// an explicit tensor model. Errors if lambda is not a dominant lattice
/// weight, if the case has no model, or if the ambient would exceed the cap.
pub fn invariant_dimension_bruteforce(cd: &CaseData, lam: &WeightVector) -> Result<usize> {
    invariant_dimension_bruteforce_with(cd, lam, &ModelOptions::default())
}

pub fn invariant_dimension_bruteforce_with(
    cd: &CaseData,
    lam: &WeightVector,
    opts: &ModelOptions,
) -> Result<usize> {
    if cd.weight_coords(lam).is_none() {
        return Err(Error::Domain(format!("{lam} is not a lattice weight of {}", cd.name)));
    }
    if !cd.is_dominant_weight(lam) {
        return Err(Error::Domain(format!("{lam} is not dominant in {}", cd.name)));
    }
    let id = cd
        .id
        .ok_or_else(|| Error::Domain(format!("case {} has no tensor model", cd.name)))?;
    match id {
        CaseId::GinzburgAuto | CaseId::GinzburgDual => {
            let a1 = pairing_as_usize(cd, lam, 0)?;
            let a2 = pairing_as_usize(cd, lam, 1)?;
            let central = lam.0[2].clone();
            let weight_of: Box<dyn Fn(&[i64]) -> WeightVector> = match id {
                CaseId::GinzburgAuto => Box::new(move |d: &[i64]| {
                    let total = d[0] + d[1] + d[2];
                    assert_eq!(total.rem_euclid(3), 0, "weight not on the adjoint-type lattice");
                    let t = total / 3;
                    WeightVector(vec![qi(d[0] - t), qi(d[1] - t), central.clone()])
                }),
                _ => Box::new(move |d: &[i64]| {
                    WeightVector(vec![qi(d[0] - d[2]), qi(d[1] - d[2]), central.clone()])
                }),
            };
            let ambient = 3usize.checked_pow((a1 + a2) as u32).unwrap_or(usize::MAX);
            if ambient > opts.ambient_cap {
                return Err(Error::Capacity(format!(
                    "tensor ambient 3^{} exceeds cap {}",
                    a1 + a2,
                    opts.ambient_cap
                )));
            }
            let dim = invariant_dim_in_model(cd, lam, &a2_model(a1, a2), &weight_of)?;
            let alt_ambient = 3usize.checked_pow((a1 + 2 * a2) as u32).unwrap_or(usize::MAX);
            if opts.cross_check && alt_ambient <= opts.cross_check_cap {
                let alt = invariant_dim_in_model(cd, lam, &a2_alt_model(a1, a2), &weight_of)?;
                if alt != dim {
                    return Err(Error::Dimension(format!(
                        "models disagree for {lam} in {}: {dim} vs {alt}",
                        cd.name
                    )));
                }
            }
            Ok(dim)
        }
        CaseId::GarrettAuto | CaseId::GarrettDual => {
            let k = [
                pairing_as_usize(cd, lam, 0)?,
                pairing_as_usize(cd, lam, 1)?,
                pairing_as_usize(cd, lam, 2)?,
            ];
            let central = lam.0[3].clone();
            let weight_of: Box<dyn Fn(&[i64]) -> WeightVector> = match id {
                CaseId::GarrettAuto => Box::new(move |u: &[i64]| {
                    WeightVector(vec![qi(u[0]), qi(u[1]), qi(u[2]), central.clone()])
                }),
                _ => Box::new(move |u: &[i64]| {
                    WeightVector(vec![qr(u[0], 2), qr(u[1], 2), qr(u[2], 2), central.clone()])
                }),
            };
            let ambient = (k[0] + 1) * (k[1] + 1) * (k[2] + 1);
            if ambient > opts.ambient_cap {
                return Err(Error::Capacity(format!(
                    "tensor ambient {ambient} exceeds cap {}",
                    opts.ambient_cap
                )));
            }
            let dim = invariant_dim_in_model(cd, lam, &a1cubed_model(k), &weight_of)?;
            let alt_ambient = 2usize
                .checked_pow((k[0] + k[1] + k[2]) as u32)
                .unwrap_or(usize::MAX);
            if opts.cross_check && alt_ambient <= opts.cross_check_cap {
                let alt = invariant_dim_in_model(cd, lam, &a1cubed_alt_model(k), &weight_of)?;
                if alt != dim {
                    return Err(Error::Dimension(format!(
                        "models disagree for {lam} in {}: {dim} vs {alt}",
                        cd.name
                    )));
                }
            }
            Ok(dim)
        }
        _ => Err(Error::Domain(format!("case {} has no tensor model", cd.name))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::is_relevant;
    use crate::rootdata::case;

    #[test]
    fn adjoint_weight_of_dual_case_is_multiplicity_one() {
        let cd = case(CaseId::GinzburgDual);
        let lam = WeightVector::from_i64(&[2, 1, -1]);
        assert!(is_relevant(cd, &lam).unwrap());
        assert_eq!(invariant_dimension_bruteforce(cd, &lam).unwrap(), 1);
    }

    #[test]
    fn non_relevant_weight_has_no_invariants() {
        let cd = case(CaseId::GinzburgDual);
        let lam = WeightVector::from_i64(&[2, 0, -1]);
        assert!(!is_relevant(cd, &lam).unwrap());
        assert_eq!(invariant_dimension_bruteforce(cd, &lam).unwrap(), 0);
    }

    #[test]
    fn garrett_degree_one_generators() {
        let cd = case(CaseId::GarrettDual);
        // (1/2, 1/2, 1/2; -1): the distinguished degree-one generator.
        let lam = WeightVector(vec![qr(1, 2), qr(1, 2), qr(1, 2), qi(-1)]);
        assert!(is_relevant(cd, &lam).unwrap());
        assert_eq!(invariant_dimension_bruteforce(cd, &lam).unwrap(), 1);
        // (1/2, 0, 0; -1) is relevant; (1/2, 1/2, 0; -1) is not a lattice point.
        let lam = WeightVector(vec![qr(1, 2), qi(0), qi(0), qi(-1)]);
        assert!(is_relevant(cd, &lam).unwrap());
        assert_eq!(invariant_dimension_bruteforce(cd, &lam).unwrap(), 1);
        let bad = WeightVector(vec![qr(1, 2), qr(1, 2), qi(0), qi(-1)]);
        assert!(invariant_dimension_bruteforce(cd, &bad).is_err());
    }

    #[test]
    fn trivial_weight_counts_constants() {
        let cd = case(CaseId::GinzburgDual);
        let lam = WeightVector::from_i64(&[0, 0, 0]);
        assert_eq!(invariant_dimension_bruteforce(cd, &lam).unwrap(), 1);
        let lam = WeightVector::from_i64(&[0, 0, -1]);
        assert_eq!(invariant_dimension_bruteforce(cd, &lam).unwrap(), 0);
    }
}
