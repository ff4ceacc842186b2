//! Subset quantifier policy: exhaustive below a size threshold, seeded
//! uniform samples above it. Deterministic given the seed.

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Exhaustive cutoff for subset-quantified invariants.
pub const EXHAUSTIVE_THRESHOLD: usize = 24;

/// Exhaustive cutoff for subsets of point sets (theorem-level assertions).
pub const POINT_THRESHOLD: usize = 12;

/// Number of sampled subsets beyond the exhaustive range.
pub const SAMPLES: usize = 2000;

/// Visits subsets of `0..n`: all of them when `n <= threshold`, otherwise
/// `SAMPLES` uniform draws from the seeded generator. The visitor returns
/// `false` to stop early; the function reports whether the walk ran to
/// completion.
pub fn for_each_subset<F>(n: usize, threshold: usize, seed: u64, mut visit: F) -> bool
where
    F: FnMut(&FixedBitSet) -> bool,
{
    let mut set = FixedBitSet::with_capacity(n);
    if n <= threshold {
        let total: u64 = 1 << n;
        for mask in 0..total {
            set.clear();
            for i in 0..n {
                if mask >> i & 1 == 1 {
                    set.insert(i);
                }
            }
            if !visit(&set) {
                return false;
            }
        }
        true
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..SAMPLES {
            set.clear();
            for i in 0..n {
                if rng.random::<bool>() {
                    set.insert(i);
                }
            }
            if !visit(&set) {
                return false;
            }
        }
        true
    }
}

/// Visits nested pairs `A` inside `B` of subsets of `0..n`. Exhaustive over
/// the 3^n in/out/middle assignments when small, sampled otherwise.
pub fn for_each_nested_pair<F>(n: usize, seed: u64, mut visit: F) -> bool
where
    F: FnMut(&FixedBitSet, &FixedBitSet) -> bool,
{
    let mut a = FixedBitSet::with_capacity(n);
    let mut b = FixedBitSet::with_capacity(n);
    // 3^n assignments stay within budget while 3^n <= 2^21 or so.
    if 3usize.checked_pow(n as u32).is_some_and(|t| t <= 1 << 21) {
        let total = 3usize.pow(n as u32);
        for mut code in 0..total {
            a.clear();
            b.clear();
            for i in 0..n {
                match code % 3 {
                    1 => {
                        b.insert(i);
                    }
                    2 => {
                        a.insert(i);
                        b.insert(i);
                    }
                    _ => {}
                }
                code /= 3;
            }
            if !visit(&a, &b) {
                return false;
            }
        }
        true
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
        for _ in 0..SAMPLES {
            a.clear();
            b.clear();
            for i in 0..n {
                match rng.random_range(0..3) {
                    1 => {
                        b.insert(i);
                    }
                    2 => {
                        a.insert(i);
                        b.insert(i);
                    }
                    _ => {}
                }
            }
            if !visit(&a, &b) {
                return false;
            }
        }
        true
    }
}

/// Random subsets of a fixed point count, for oracle cross-checks.
pub fn random_subsets(n: usize, count: usize, seed: u64) -> Vec<FixedBitSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut s = FixedBitSet::with_capacity(n);
            for i in 0..n {
                if rng.random::<bool>() {
                    s.insert(i);
                }
            }
            s
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_walk_visits_every_subset() {
        let mut count = 0;
        for_each_subset(4, 24, 0, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 16);
    }

    #[test]
    fn sampled_walk_is_deterministic() {
        let mut first = Vec::new();
        for_each_subset(30, 24, 7, |s| {
            first.push(s.clone());
            first.len() < 5
        });
        let mut second = Vec::new();
        for_each_subset(30, 24, 7, |s| {
            second.push(s.clone());
            second.len() < 5
        });
        assert_eq!(first, second);
    }

    #[test]
    fn nested_pairs_nest() {
        for_each_nested_pair(5, 0, |a, b| {
            assert!(a.is_subset(b));
            true
        });
    }
}
