//! Logical entropy: the (normalized or product) measure of distinction sets.
//!
//! Every function is generic over [`Scalar`], so the same code runs on `f64`
//! and on exact rationals. Partition quantities take optional point weights;
//! with `None` the counting measure `|S| / n²` is used. The conditional and
//! mutual quantities for weighted universes use the product measure in the
//! same way as the unweighted ones use counting.

use crate::distribution::{check_len, DistanceMatrix, Distribution, Given, JointDistribution};
use crate::error::Result;
use crate::lattice::{join, mutual_dit_set};
use crate::partition::Partition;
use crate::relation::PairRelation;
use crate::scalar::Scalar;

fn sum_of_squares<'a, T: Scalar + 'a>(xs: impl IntoIterator<Item = &'a T>) -> T {
    xs.into_iter().map(|x| x.clone() * x.clone()).sum()
}

/// `μ(S) = Σ{pᵢpⱼ : (i, j) ∈ S}`.
pub fn product_measure<T: Scalar>(s: &PairRelation, p: &Distribution<T>) -> Result<T> {
    check_len(s.universe().size(), p.len())?;
    let w = p.probs();
    Ok(s.pairs().map(|(i, j)| w[i].clone() * w[j].clone()).sum())
}

/// Measure of a relation: counting `|S| / n²` without weights, product measure with them.
pub fn relation_measure<T: Scalar>(s: &PairRelation, weights: Option<&Distribution<T>>) -> Result<T> {
    match weights {
        Some(p) => product_measure(s, p),
        None => Ok(T::ratio(s.cardinality() as u64, s.universe().pair_count() as u64)),
    }
}

/// Block probabilities `p_B = Σ_{u∈B} p_u`, in canonical block order.
pub fn block_probabilities<T: Scalar>(
    pi: &Partition,
    weights: Option<&Distribution<T>>,
) -> Result<Distribution<T>> {
    let n = pi.size() as u64;
    let probs = match weights {
        Some(w) => {
            check_len(pi.size(), w.len())?;
            pi.blocks()
                .iter()
                .map(|b| b.iter().map(|&u| w.probs()[u].clone()).sum())
                .collect()
        }
        None => pi
            .blocks()
            .iter()
            .map(|b| T::ratio(b.len() as u64, n))
            .collect(),
    };
    Distribution::new(probs)
}

/// `h(π) = μ(dit(π))`.
pub fn logical_entropy_partition<T: Scalar>(
    pi: &Partition,
    weights: Option<&Distribution<T>>,
) -> Result<T> {
    match weights {
        Some(_) => relation_measure(&pi.dit_set(), weights),
        None => Ok(T::ratio(pi.dit_count() as u64, pi.universe().pair_count() as u64)),
    }
}

/// `Σ_B p_B (1 − p_B)`, the block form of `h(π)`.
pub fn logical_entropy_blocks<T: Scalar>(
    pi: &Partition,
    weights: Option<&Distribution<T>>,
) -> Result<T> {
    let pb = block_probabilities(pi, weights)?;
    Ok(pb
        .probs()
        .iter()
        .map(|b| b.clone() * (T::one() - b.clone()))
        .sum())
}

/// `h(p) = 1 − Σ pᵢ²`.
pub fn logical_entropy_dist<T: Scalar>(p: &Distribution<T>) -> T {
    T::one() - sum_of_squares(p.probs())
}

/// Repeat rate `Σ pᵢ² = 1 − h(p)`.
pub fn identification_probability<T: Scalar>(p: &Distribution<T>) -> T {
    sum_of_squares(p.probs())
}

/// `h(π|σ) = μ(dit(π) − dit(σ))`.
pub fn logical_conditional_partition<T: Scalar>(
    pi: &Partition,
    sigma: &Partition,
    weights: Option<&Distribution<T>>,
) -> Result<T> {
    pi.universe().check_same(sigma.universe())?;
    relation_measure(&(&pi.dit_set() - &sigma.dit_set()), weights)
}

/// `m(π, σ) = μ(dit(π) ∩ dit(σ))`.
pub fn logical_mutual_partition<T: Scalar>(
    pi: &Partition,
    sigma: &Partition,
    weights: Option<&Distribution<T>>,
) -> Result<T> {
    relation_measure(&mutual_dit_set(pi, sigma)?, weights)
}

/// `h(π∨σ)`, the joint logical entropy of two partitions.
pub fn logical_joint_partition<T: Scalar>(
    pi: &Partition,
    sigma: &Partition,
    weights: Option<&Distribution<T>>,
) -> Result<T> {
    logical_entropy_partition(&join(pi, sigma)?, weights)
}

/// `h(x, y) = 1 − Σ p(x,y)²`.
pub fn joint_logical_entropy<T: Scalar>(j: &JointDistribution<T>) -> T {
    T::one() - sum_of_squares(j.cells())
}

/// `h(x|y) = Σ p(x,y)[p(y) − p(x,y)]` (or `h(y|x)` with [`Given::X`]).
pub fn logical_conditional_joint<T: Scalar>(j: &JointDistribution<T>, given: Given) -> T {
    let (rows, cols) = j.shape();
    let mut total = T::zero();
    for x in 0..rows {
        for y in 0..cols {
            let pxy = j.get(x, y).clone();
            let cond = match given {
                Given::Y => j.marginal_y()[y].clone(),
                Given::X => j.marginal_x()[x].clone(),
            };
            total = total + pxy.clone() * (cond - pxy);
        }
    }
    total
}

/// `m(x, y) = Σ p(x,y)[(1−p(x)) + (1−p(y)) − (1−p(x,y))]`.
pub fn logical_mutual_joint<T: Scalar>(j: &JointDistribution<T>) -> T {
    let (rows, cols) = j.shape();
    let one = T::one();
    let mut total = T::zero();
    for x in 0..rows {
        for y in 0..cols {
            let pxy = j.get(x, y).clone();
            let term = (one.clone() - j.marginal_x()[x].clone())
                + (one.clone() - j.marginal_y()[y].clone())
                - (one.clone() - pxy.clone());
            total = total + pxy * term;
        }
    }
    total
}

/// `h(p‖q) = 1 − Σ pᵢqᵢ`; symmetric.
pub fn logical_cross_entropy<T: Scalar>(p: &Distribution<T>, q: &Distribution<T>) -> Result<T> {
    check_len(p.len(), q.len())?;
    let dot: T = p
        .probs()
        .iter()
        .zip(q.probs())
        .map(|(a, b)| a.clone() * b.clone())
        .sum();
    Ok(T::one() - dot)
}

/// `d(p‖q) = ½ Σ (pᵢ − qᵢ)²`.
pub fn logical_divergence<T: Scalar>(p: &Distribution<T>, q: &Distribution<T>) -> Result<T> {
    check_len(p.len(), q.len())?;
    let sq: T = p
        .probs()
        .iter()
        .zip(q.probs())
        .map(|(a, b)| {
            let d = a.clone() - b.clone();
            d.clone() * d
        })
        .sum();
    Ok(sq / (T::one() + T::one()))
}

/// `h(p‖q) − [h(p) + h(q)] / 2`, the Jensen difference; equals [`logical_divergence`].
pub fn jensen_difference<T: Scalar>(p: &Distribution<T>, q: &Distribution<T>) -> Result<T> {
    let cross = logical_cross_entropy(p, q)?;
    let two = T::one() + T::one();
    Ok(cross - (logical_entropy_dist(p) + logical_entropy_dist(q)) / two)
}

/// `Q = Σ_{i≠j} dᵢⱼ pᵢ pⱼ`.
pub fn quadratic_entropy(p: &Distribution<f64>, d: &DistanceMatrix) -> Result<f64> {
    check_len(d.len(), p.len())?;
    let w = p.probs();
    let mut total = 0.0;
    for i in 0..w.len() {
        for j in 0..w.len() {
            if i != j {
                total += d.get(i, j) * w[i] * w[j];
            }
        }
    }
    Ok(total)
}

/// The three quantities compared when two distributions are mixed half and half.
#[derive(Debug, Clone, PartialEq)]
pub struct MixingEntropy<T> {
    /// `h((p+q)/2)`
    pub h_mix: T,
    /// `h(p‖q)`
    pub cross: T,
    /// `[h(p) + h(q)] / 2`
    pub mean_h: T,
}

impl<T: Scalar> MixingEntropy<T> {
    /// `|h((p+q)/2) − (h(p‖q)/2 + [h(p)+h(q)]/4)|`
    pub fn identity_residual(&self) -> T {
        let two = T::one() + T::one();
        let rhs = self.cross.clone() / two.clone() + self.mean_h.clone() / two;
        self.h_mix.abs_diff(&rhs)
    }

    /// `h(p‖q) ≥ h((p+q)/2) ≥ [h(p)+h(q)]/2`
    pub fn chain_holds(&self) -> bool {
        self.cross >= self.h_mix && self.h_mix >= self.mean_h
    }

    /// The chain with slack `tol` for floating-point inputs.
    pub fn chain_holds_within(&self, tol: f64) -> bool {
        let (c, m, a) = (self.cross.to_f64(), self.h_mix.to_f64(), self.mean_h.to_f64());
        c + tol >= m && m + tol >= a
    }
}

pub fn mixing_entropy<T: Scalar>(p: &Distribution<T>, q: &Distribution<T>) -> Result<MixingEntropy<T>> {
    let mix = p.mixture(q)?;
    let two = T::one() + T::one();
    Ok(MixingEntropy {
        h_mix: logical_entropy_dist(&mix),
        cross: logical_cross_entropy(p, q)?,
        mean_h: (logical_entropy_dist(p) + logical_entropy_dist(q)) / two,
    })
}
