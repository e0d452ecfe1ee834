//! Seeded random generation of interval-line elements for the sampled
//! verdicts on the infinite carrier.

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::carrier::{Endpoint, IntervalSet};

pub const DEFAULT_SAMPLES: usize = 1000;
pub const DEFAULT_SEED: u64 = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleConfig {
    pub samples: usize,
    pub seed: u64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
        }
    }
}

impl SampleConfig {
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    /// Independent stream for one named check, so adding checks does not
    /// perturb the samples drawn by the others.
    pub fn rng_for(&self, tag: &str) -> ChaCha8Rng {
        let salt = tag.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
            (h ^ b as u64).wrapping_mul(0x100_0000_01b3)
        });
        ChaCha8Rng::seed_from_u64(self.seed ^ salt)
    }
}

fn grid_point<R: Rng>(rng: &mut R) -> BigRational {
    BigRational::new(rng.gen_range(-12i64..=12).into(), 2.into())
}

fn length<R: Rng>(rng: &mut R) -> BigRational {
    BigRational::new(rng.gen_range(1i64..=6).into(), 2.into())
}

/// Elements that make good edge cases: empty, full, half-lines, touching
/// and nested intervals.
pub fn anchors() -> Vec<IntervalSet> {
    vec![
        IntervalSet::empty(),
        IntervalSet::full(),
        IntervalSet::ints(&[(Some(1), None)]),
        IntervalSet::ints(&[(None, Some(-1))]),
        IntervalSet::ints(&[(Some(0), Some(1))]),
        IntervalSet::ints(&[(Some(1), Some(2))]),
        IntervalSet::ints(&[(Some(-1), Some(2))]),
        IntervalSet::ints(&[(None, Some(0)), (Some(2), Some(3))]),
    ]
}

/// Random element: up to three bounded pieces plus optional rays, endpoints
/// on the half-integer grid in `[-6, 6]`.
pub fn random_element<R: Rng>(rng: &mut R) -> IntervalSet {
    if rng.gen_ratio(1, 10) {
        return anchors().choose(rng).cloned().expect("anchors non-empty");
    }
    let mut pairs = Vec::new();
    for _ in 0..rng.gen_range(0..=3) {
        let lo = grid_point(rng);
        let hi = &lo + length(rng);
        pairs.push((Endpoint::Finite(lo), Endpoint::Finite(hi)));
    }
    if rng.gen_ratio(1, 4) {
        pairs.push((Endpoint::NegInf, Endpoint::Finite(grid_point(rng))));
    }
    if rng.gen_ratio(1, 4) {
        pairs.push((Endpoint::Finite(grid_point(rng)), Endpoint::PosInf));
    }
    IntervalSet::new(pairs).expect("generated intervals have positive length")
}

pub fn random_bounded<R: Rng>(rng: &mut R) -> IntervalSet {
    loop {
        let s = random_element(rng);
        if s.is_bounded() {
            return s;
        }
    }
}

/// A pair `(a, c)` where `c` often contains a neighbourhood of `a`, so that
/// implications guarded by `a ≪ c` are exercised.
pub fn random_nested_pair<R: Rng>(rng: &mut R, bounded_first: bool) -> (IntervalSet, IntervalSet) {
    let a = if bounded_first {
        random_bounded(rng)
    } else {
        random_element(rng)
    };
    let c = if rng.gen_bool(0.5) {
        let delta = BigRational::new(rng.gen_range(1i64..=4).into(), 4.into());
        a.neighbourhood(&delta).join(&random_element(rng))
    } else {
        random_element(rng)
    };
    (a, c)
}
