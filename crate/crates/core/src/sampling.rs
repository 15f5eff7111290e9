//! Deterministic Satake point sampling.
//!
//! Verification batches always lead with the two structurally delicate
//! points: the identity (all characters collapse to dimensions) and a point
//! with a repeated coordinate (Weyl-denominator formulas degenerate there,
//! so they catch implementations that divide by differences of eigenvalues).

use num::traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::rat::{qi, qr, Q};
use crate::reptheory::SatakePoint;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Reads the seed override from the WEAKDUAL_SEED environment variable.
pub fn seed_from_env(default: u64) -> u64 {
    std::env::var("WEAKDUAL_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(default)
}

/// Nonzero rational with numerator in [-10, 10] and denominator in [1, 10].
pub fn sample_nonzero_rational(rng: &mut ChaCha8Rng) -> Q {
    loop {
        let num = rng.gen_range(-10i64..=10);
        let den = rng.gen_range(1i64..=10);
        let q = qr(num, den);
        if !q.is_zero() {
            return q;
        }
    }
}

/// `count` points of the given rank: identity first, then a point with its
/// first two coordinates equal, then generic ones.
pub fn sample_satake(rank: usize, count: usize, seed: u64) -> Vec<SatakePoint> {
    let mut rng = rng_from_seed(seed);
    let mut points = Vec::with_capacity(count);
    if count > 0 {
        points.push(SatakePoint::identity(rank));
    }
    if count > 1 && rank >= 2 {
        let repeated = sample_nonzero_rational(&mut rng);
        let mut values = vec![repeated.clone(), repeated];
        while values.len() < rank {
            values.push(sample_nonzero_rational(&mut rng));
        }
        points.push(
            SatakePoint::new(values, Some("repeated-coordinate".into()))
                .expect("sampled coordinates are nonzero"),
        );
    }
    let mut i = points.len();
    while points.len() < count {
        let values = (0..rank).map(|_| sample_nonzero_rational(&mut rng)).collect();
        points.push(
            SatakePoint::new(values, Some(format!("sample-{i}")))
                .expect("sampled coordinates are nonzero"),
        );
        i += 1;
    }
    points
}

/// Rank-2 points with coordinate product 1, as (alpha, 1/alpha).
pub fn sample_det_one_gl2(count: usize, seed: u64) -> Vec<SatakePoint> {
    let mut rng = rng_from_seed(seed);
    let mut points = Vec::with_capacity(count);
    if count > 0 {
        points.push(SatakePoint::identity(2));
    }
    while points.len() < count {
        let a = sample_nonzero_rational(&mut rng);
        let inv = qi(1) / &a;
        points.push(
            SatakePoint::new(vec![a, inv], Some(format!("det1-{}", points.len())))
                .expect("nonzero by construction"),
        );
    }
    points
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::fmt_q;

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_satake(3, 5, 7);
        let b = sample_satake(3, 5, 7);
        let fa: Vec<Vec<String>> =
            a.iter().map(|p| p.values().iter().map(fmt_q).collect()).collect();
        let fb: Vec<Vec<String>> =
            b.iter().map(|p| p.values().iter().map(fmt_q).collect()).collect();
        assert_eq!(fa, fb);
        assert_eq!(a[0].values()[0], qi(1));
        assert_eq!(a[1].values()[0], a[1].values()[1]);
    }

    #[test]
    fn det_one_points_have_unit_product() {
        for p in sample_det_one_gl2(6, 3) {
            let v = p.values();
            assert_eq!(&v[0] * &v[1], qi(1));
        }
    }
}
