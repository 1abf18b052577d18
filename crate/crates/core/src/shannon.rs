//! Shannon entropy and its compounds, the dit-bit bridge, and the Stirling
//! comparison against exact multinomial entropy.
//!
//! Logarithms are base 2 unless stated otherwise. Terms with zero weight
//! contribute zero (`0·log(1/0) = 0`). Cross entropy and KL divergence return
//! `+∞` when `q` misses part of the support of `p`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::distribution::{check_len, Distribution, Given, JointDistribution};
use crate::error::{Error, Result};
use crate::lattice::join;
use crate::logical::{block_probabilities, logical_entropy_dist};
use crate::partition::Partition;

/// Units for information quantities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Base {
    #[default]
    Bits,
    Nats,
}

impl Base {
    pub fn unit(self) -> &'static str {
        match self {
            Base::Bits => "bits",
            Base::Nats => "nats",
        }
    }
}

impl FromStr for Base {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "2" | "bits" => Ok(Base::Bits),
            "e" | "nats" => Ok(Base::Nats),
            other => Err(Error::UnknownSelector(other.to_string())),
        }
    }
}

/// A non-negative information quantity, stored in bits. May be `+∞`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct BitValue(f64);

impl BitValue {
    pub const INFINITY: BitValue = BitValue(f64::INFINITY);

    pub fn from_bits(bits: f64) -> Self {
        BitValue(bits)
    }

    pub fn from_nats(nats: f64) -> Self {
        BitValue(nats / std::f64::consts::LN_2)
    }

    #[inline]
    pub fn bits(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn nats(self) -> f64 {
        self.0 * std::f64::consts::LN_2
    }

    pub fn in_base(self, base: Base) -> f64 {
        match base {
            Base::Bits => self.bits(),
            Base::Nats => self.nats(),
        }
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_infinite()
    }
}

impl fmt::Display for BitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} bits", self.0)
    }
}

/// `x·log₂(1/x)` with the zero convention.
#[inline]
fn plogp(x: f64) -> f64 {
    if x > 0.0 {
        -x * x.log2()
    } else {
        0.0
    }
}

/// Absolute difference that treats two infinities of the same sign as equal.
pub fn residual(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs()
    }
}

/// `H(p₀) = log₂(1/p₀)`, the entropy of an equiprobable set with point probability `p₀`.
pub fn shannon_hartley(p0: f64) -> Result<BitValue> {
    if !(p0 > 0.0 && p0 <= 1.0) {
        return Err(Error::Domain(format!("p0 = {p0} is not in (0, 1]")));
    }
    Ok(BitValue(-p0.log2()))
}

/// `H(p) = Σ pᵢ log(1/pᵢ)`.
pub fn shannon_entropy_dist(p: &Distribution<f64>) -> BitValue {
    BitValue(p.probs().iter().map(|&x| plogp(x)).sum())
}

/// `H(π) = Σ_B p_B log(1/p_B)`.
pub fn shannon_entropy_partition(
    pi: &Partition,
    weights: Option<&Distribution<f64>>,
) -> Result<BitValue> {
    Ok(shannon_entropy_dist(&block_probabilities(pi, weights)?))
}

/// `H(x, y)`, the entropy of the joint cells.
pub fn shannon_joint_entropy(j: &JointDistribution<f64>) -> BitValue {
    BitValue(j.cells().iter().map(|&x| plogp(x)).sum())
}

/// `H(x|y) = Σ p(x,y) log(p(y)/p(x,y))` (or `H(y|x)` with [`Given::X`]).
pub fn shannon_conditional_joint(j: &JointDistribution<f64>, given: Given) -> BitValue {
    let (rows, cols) = j.shape();
    let mut total = 0.0;
    for x in 0..rows {
        for y in 0..cols {
            let pxy = *j.get(x, y);
            if pxy > 0.0 {
                let cond = match given {
                    Given::Y => j.marginal_y()[y],
                    Given::X => j.marginal_x()[x],
                };
                total += pxy * (cond / pxy).log2();
            }
        }
    }
    BitValue(total)
}

/// `I(x, y) = Σ p(x,y) log(p(x,y) / (p(x)p(y)))`.
pub fn shannon_mutual_joint(j: &JointDistribution<f64>) -> BitValue {
    let (rows, cols) = j.shape();
    let mut total = 0.0;
    for x in 0..rows {
        for y in 0..cols {
            let pxy = *j.get(x, y);
            if pxy > 0.0 {
                total += pxy * (pxy / (j.marginal_x()[x] * j.marginal_y()[y])).log2();
            }
        }
    }
    BitValue(total)
}

// p_{B∩C} indexed [b][c], plus the marginals p_B and p_C.
fn block_intersections(
    pi: &Partition,
    sigma: &Partition,
    weights: Option<&Distribution<f64>>,
) -> Result<(Vec<Vec<f64>>, Vec<f64>, Vec<f64>)> {
    pi.universe().check_same(sigma.universe())?;
    let n = pi.size();
    if let Some(w) = weights {
        check_len(n, w.len())?;
    }
    let mut cells = vec![vec![0.0; sigma.block_count()]; pi.block_count()];
    for u in 0..n {
        let wu = weights.map_or(1.0 / n as f64, |w| w.probs()[u]);
        cells[pi.block_of(u)][sigma.block_of(u)] += wu;
    }
    let pb = cells.iter().map(|r| r.iter().sum()).collect();
    let pc = (0..sigma.block_count())
        .map(|c| cells.iter().map(|r| r[c]).sum())
        .collect();
    Ok((cells, pb, pc))
}

/// `H(π|σ) = Σ_C p_C H(π|C)`.
pub fn shannon_conditional_partition(
    pi: &Partition,
    sigma: &Partition,
    weights: Option<&Distribution<f64>>,
) -> Result<BitValue> {
    let (cells, _, pc) = block_intersections(pi, sigma, weights)?;
    let mut total = 0.0;
    for (c, &p_c) in pc.iter().enumerate() {
        if p_c > 0.0 {
            let h_given_c: f64 = cells.iter().map(|r| plogp(r[c] / p_c)).sum();
            total += p_c * h_given_c;
        }
    }
    Ok(BitValue(total))
}

/// `I(π, σ) = Σ p_{B∩C} log(p_{B∩C} / (p_B p_C))`.
pub fn shannon_mutual_partition(
    pi: &Partition,
    sigma: &Partition,
    weights: Option<&Distribution<f64>>,
) -> Result<BitValue> {
    let (cells, pb, pc) = block_intersections(pi, sigma, weights)?;
    let mut total = 0.0;
    for (b, row) in cells.iter().enumerate() {
        for (c, &pbc) in row.iter().enumerate() {
            if pbc > 0.0 {
                total += pbc * (pbc / (pb[b] * pc[c])).log2();
            }
        }
    }
    Ok(BitValue(total))
}

/// `H(π∨σ)`.
pub fn shannon_joint_partition(
    pi: &Partition,
    sigma: &Partition,
    weights: Option<&Distribution<f64>>,
) -> Result<BitValue> {
    shannon_entropy_partition(&join(pi, sigma)?, weights)
}

/// `H(p‖q) = Σ pᵢ log(1/qᵢ)`; not symmetric.
pub fn shannon_cross_entropy(p: &Distribution<f64>, q: &Distribution<f64>) -> Result<BitValue> {
    check_len(p.len(), q.len())?;
    let mut total = 0.0;
    for (&a, &b) in p.probs().iter().zip(q.probs()) {
        if a > 0.0 {
            if b == 0.0 {
                return Ok(BitValue::INFINITY);
            }
            total -= a * b.log2();
        }
    }
    Ok(BitValue(total))
}

/// `H_s(p‖q) = ½[H(p‖q) + H(q‖p)]`.
pub fn symmetrized_cross_entropy(p: &Distribution<f64>, q: &Distribution<f64>) -> Result<BitValue> {
    Ok(BitValue(
        0.5 * (shannon_cross_entropy(p, q)?.bits() + shannon_cross_entropy(q, p)?.bits()),
    ))
}

/// `D(p‖q) = Σ pᵢ log(pᵢ/qᵢ)`.
pub fn kl_divergence(p: &Distribution<f64>, q: &Distribution<f64>) -> Result<BitValue> {
    check_len(p.len(), q.len())?;
    let mut total = 0.0;
    for (&a, &b) in p.probs().iter().zip(q.probs()) {
        if a > 0.0 {
            if b == 0.0 {
                return Ok(BitValue::INFINITY);
            }
            total += a * (a / b).log2();
        }
    }
    Ok(BitValue(total))
}

/// `D_s(p‖q) = ½[D(p‖q) + D(q‖p)]`.
pub fn symmetrized_kl(p: &Distribution<f64>, q: &Distribution<f64>) -> Result<BitValue> {
    Ok(BitValue(0.5 * (kl_divergence(p, q)?.bits() + kl_divergence(q, p)?.bits())))
}

/// `H₀ = log₂(1/(1 − h₀))` for an equiprobable set with logical entropy `h₀`.
pub fn dit_to_bit(h0: f64) -> Result<BitValue> {
    if !(0.0..1.0).contains(&h0) {
        return Err(Error::Domain(format!("h0 = {h0} is not in [0, 1)")));
    }
    Ok(BitValue(-(1.0 - h0).log2()))
}

/// `h₀ = 1 − 2^(−H₀)`.
pub fn bit_to_dit(bits: BitValue) -> Result<f64> {
    let h = bits.bits();
    if !(h >= 0.0) {
        return Err(Error::Domain(format!("H0 = {h} is negative")));
    }
    Ok(1.0 - (-h).exp2())
}

/// Compound quantities that have both a logical and a Shannon form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CompoundKind {
    Entropy,
    Conditional,
    Mutual,
    Cross,
    Divergence,
}

impl FromStr for CompoundKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "entropy" => CompoundKind::Entropy,
            "conditional" => CompoundKind::Conditional,
            "mutual" => CompoundKind::Mutual,
            "cross" => CompoundKind::Cross,
            "divergence" => CompoundKind::Divergence,
            other => return Err(Error::UnknownSelector(other.to_string())),
        })
    }
}

/// Inputs for [`dit_bit_transform`].
#[derive(Debug, Clone, Copy)]
pub enum Compound<'a> {
    Entropy(&'a Distribution<f64>),
    /// `h(x|y)` or `h(y|x)`.
    Conditional(&'a JointDistribution<f64>, Given),
    Mutual(&'a JointDistribution<f64>),
    Cross(&'a Distribution<f64>, &'a Distribution<f64>),
    Divergence(&'a Distribution<f64>, &'a Distribution<f64>),
}

impl Compound<'_> {
    pub fn kind(&self) -> CompoundKind {
        match self {
            Compound::Entropy(_) => CompoundKind::Entropy,
            Compound::Conditional(..) => CompoundKind::Conditional,
            Compound::Mutual(_) => CompoundKind::Mutual,
            Compound::Cross(..) => CompoundKind::Cross,
            Compound::Divergence(..) => CompoundKind::Divergence,
        }
    }
}

/// One summand `coef · weight · (1 − arg)` of a logical formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DitTerm {
    pub coef: f64,
    pub weight: f64,
    pub arg: f64,
}

/// Writes a logical compound as a sum of `coef · weight · (1 − arg)` terms.
pub fn dit_terms(input: &Compound<'_>) -> Result<Vec<DitTerm>> {
    let term = |coef, weight, arg| DitTerm { coef, weight, arg };
    let mut terms = Vec::new();
    match *input {
        Compound::Entropy(p) => {
            terms.extend(p.probs().iter().map(|&x| term(1.0, x, x)));
        }
        Compound::Conditional(j, given) => {
            let (rows, cols) = j.shape();
            for x in 0..rows {
                for y in 0..cols {
                    let pxy = *j.get(x, y);
                    let cond = match given {
                        Given::Y => j.marginal_y()[y],
                        Given::X => j.marginal_x()[x],
                    };
                    terms.push(term(1.0, pxy, pxy));
                    terms.push(term(-1.0, pxy, cond));
                }
            }
        }
        Compound::Mutual(j) => {
            let (rows, cols) = j.shape();
            for x in 0..rows {
                for y in 0..cols {
                    let pxy = *j.get(x, y);
                    terms.push(term(1.0, pxy, j.marginal_x()[x]));
                    terms.push(term(1.0, pxy, j.marginal_y()[y]));
                    terms.push(term(-1.0, pxy, pxy));
                }
            }
        }
        Compound::Cross(p, q) => {
            check_len(p.len(), q.len())?;
            terms.extend(p.probs().iter().zip(q.probs()).map(|(&a, &b)| term(1.0, a, b)));
        }
        Compound::Divergence(p, q) => {
            check_len(p.len(), q.len())?;
            // ½[Σp(1−q) + Σq(1−p)] − ½[Σp(1−p) + Σq(1−q)]
            for (&a, &b) in p.probs().iter().zip(q.probs()) {
                terms.push(term(0.5, a, b));
                terms.push(term(0.5, b, a));
                terms.push(term(-0.5, a, a));
                terms.push(term(-0.5, b, b));
            }
        }
    }
    Ok(terms)
}

/// Outcome of replacing every dit-count `(1 − x)` by the bit-count `log(1/x)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TransformReport {
    pub kind: CompoundKind,
    /// The logical compound evaluated from its terms.
    pub logical: f64,
    /// The same terms with `log₂(1/x)` substituted.
    pub transformed: f64,
    /// The Shannon counterpart computed by its own formula.
    pub direct: f64,
    pub residual: f64,
}

fn eval_bits(terms: &[DitTerm]) -> f64 {
    let mut total = 0.0;
    for t in terms {
        if t.weight == 0.0 {
            continue;
        }
        if t.arg == 0.0 {
            return t.coef.signum() * f64::INFINITY;
        }
        total += t.coef * t.weight * -t.arg.log2();
    }
    total
}

/// Computes the Shannon counterpart of a logical compound by termwise
/// substitution and compares it against the directly computed quantity.
pub fn dit_bit_transform(input: &Compound<'_>) -> Result<TransformReport> {
    let terms = dit_terms(input)?;
    let logical = terms.iter().map(|t| t.coef * t.weight * (1.0 - t.arg)).sum();
    let transformed = eval_bits(&terms);
    let direct = match *input {
        Compound::Entropy(p) => shannon_entropy_dist(p).bits(),
        Compound::Conditional(j, given) => {
            let marginal = match given {
                Given::Y => j.marginal_y_dist(),
                Given::X => j.marginal_x_dist(),
            };
            shannon_joint_entropy(j).bits() - shannon_entropy_dist(&marginal).bits()
        }
        Compound::Mutual(j) => {
            shannon_entropy_dist(&j.marginal_x_dist()).bits()
                + shannon_entropy_dist(&j.marginal_y_dist()).bits()
                - shannon_joint_entropy(j).bits()
        }
        Compound::Cross(p, q) => shannon_cross_entropy(p, q)?.bits(),
        Compound::Divergence(p, q) => symmetrized_kl(p, q)?.bits(),
    };
    Ok(TransformReport {
        kind: input.kind(),
        logical,
        transformed,
        direct,
        residual: residual(transformed, direct),
    })
}

/// The logical value a [`Compound`] should have, from the logical-measure functions.
pub fn logical_compound(input: &Compound<'_>) -> Result<f64> {
    use crate::logical as lg;
    Ok(match *input {
        Compound::Entropy(p) => logical_entropy_dist(p),
        Compound::Conditional(j, given) => lg::logical_conditional_joint(j, given),
        Compound::Mutual(j) => lg::logical_mutual_joint(j),
        Compound::Cross(p, q) => lg::logical_cross_entropy(p, q)?,
        Compound::Divergence(p, q) => lg::logical_divergence(p, q)?,
    })
}

/// `ln k!` by compensated summation of `ln 2 + … + ln k`.
pub fn ln_factorial(k: u64) -> f64 {
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for i in 2..=k {
        let term = (i as f64).ln();
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Multinomial entropy `S = (1/N) ln W` against its two Stirling approximations, in nats.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StirlingReport {
    pub total: u64,
    pub s_exact: f64,
    /// `H_e(p)` from `ln N! ≈ N ln N − N`.
    pub approx2: f64,
    /// `H_e(p)` plus the `½ ln(2πN)` correction.
    pub approx3: f64,
    pub err2: f64,
    pub err3: f64,
}

impl StirlingReport {
    /// The same report with every entropy converted to bits.
    pub fn in_bits(&self) -> StirlingReport {
        let c = std::f64::consts::LOG2_E;
        StirlingReport {
            total: self.total,
            s_exact: self.s_exact * c,
            approx2: self.approx2 * c,
            approx3: self.approx3 * c,
            err2: self.err2 * c,
            err3: self.err3 * c,
        }
    }
}

/// Compares `S = (1/N) ln(N! / (N₁!⋯Nₙ!))` with `H_e(p)` and the three-term correction
///
/// `H_e(p) + (1/2N) ln(2πN / ((2πN)ⁿ Π pᵢ))`, where `pᵢ = Nᵢ/N`.
pub fn stirling_entropy(block_sizes: &[u64]) -> Result<StirlingReport> {
    if block_sizes.is_empty() {
        return Err(Error::EmptyInput);
    }
    if block_sizes.contains(&0) {
        return Err(Error::Domain("block sizes must be positive".into()));
    }
    let total: u64 = block_sizes.iter().sum();
    let n_f = total as f64;
    let ln_w = ln_factorial(total) - block_sizes.iter().map(|&k| ln_factorial(k)).sum::<f64>();
    let s_exact = ln_w / n_f;

    let probs: Vec<f64> = block_sizes.iter().map(|&k| k as f64 / n_f).collect();
    let approx2: f64 = probs.iter().map(|&p| -p * p.ln()).sum();

    let two_pi = 2.0 * std::f64::consts::PI;
    let blocks = block_sizes.len() as f64;
    let ln_prod_p: f64 = probs.iter().map(|p| p.ln()).sum();
    let correction = ((two_pi * n_f).ln() - blocks * (two_pi * n_f).ln() - ln_prod_p) / (2.0 * n_f);
    let approx3 = approx2 + correction;

    Ok(StirlingReport {
        total,
        s_exact,
        approx2,
        approx3,
        err2: (s_exact - approx2).abs(),
        err3: (s_exact - approx3).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Distribution<f64> {
        Distribution::parse(s).unwrap()
    }

    fn j(s: &str) -> JointDistribution<f64> {
        JointDistribution::parse_csv(s).unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn hartley_examples() {
        assert_eq!(shannon_hartley(1.0 / 32.0).unwrap().bits(), 5.0);
        assert_eq!(shannon_hartley(1.0).unwrap().bits(), 0.0);
        assert!(close(shannon_hartley(1.0 / 3.0).unwrap().bits(), 3f64.log2()));
        assert!(shannon_hartley(0.0).is_err());
        assert!(shannon_hartley(1.5).is_err());
    }

    #[test]
    fn entropy_examples() {
        assert!(close(shannon_entropy_dist(&Distribution::uniform(8).unwrap()).bits(), 3.0));
        assert_eq!(shannon_entropy_dist(&d("1,0,0")).bits(), 0.0);
        assert!(close(shannon_entropy_dist(&d("1/2,1/4,1/4")).bits(), 1.5));
        assert!(close(shannon_entropy_dist(&d("1/2,1/4,1/4")).nats(), 1.5 * std::f64::consts::LN_2));
    }

    #[test]
    fn partition_entropy_examples() {
        let one = Partition::discrete(4).unwrap();
        assert!(close(shannon_entropy_partition(&one, None).unwrap().bits(), 2.0));
        let zero = Partition::indiscrete(4).unwrap();
        assert_eq!(shannon_entropy_partition(&zero, None).unwrap().bits(), 0.0);
        assert!(close(shannon_entropy_partition(&p("0,1|2|3"), None).unwrap().bits(), 1.5));
        assert!(shannon_entropy_partition(&one, Some(&d("1/2,1/2"))).is_err());
    }

    #[test]
    fn conditional_joint_examples() {
        assert!(close(shannon_conditional_joint(&j("1/4,1/4\n1/4,1/4"), Given::Y).bits(), 1.0));
        assert_eq!(shannon_conditional_joint(&j("1/2,0\n0,1/2"), Given::Y).bits(), 0.0);
        let skew = j("1/4,1/4\n1/2,0");
        let h = shannon_conditional_joint(&skew, Given::Y).bits();
        assert!((h - 0.6887218755408672).abs() < 1e-12);
        let via = shannon_joint_entropy(&skew).bits() - shannon_entropy_dist(&skew.marginal_y_dist()).bits();
        assert!(close(h, via));
    }

    #[test]
    fn conditional_partition_examples() {
        let a = p("0,1|2,3");
        let zero = Partition::indiscrete(4).unwrap();
        let h = shannon_entropy_partition(&a, None).unwrap().bits();
        assert!(close(shannon_conditional_partition(&a, &zero, None).unwrap().bits(), h));
        assert_eq!(shannon_conditional_partition(&a, &a, None).unwrap().bits(), 0.0);
        assert!(close(shannon_conditional_partition(&a, &p("0,2|1,3"), None).unwrap().bits(), 1.0));
    }

    #[test]
    fn mutual_examples() {
        assert_eq!(shannon_mutual_joint(&j("1/4,1/4\n1/4,1/4")).bits(), 0.0);
        assert!(close(shannon_mutual_joint(&j("1/2,0\n0,1/2")).bits(), 1.0));
        let skew = j("1/4,1/4\n1/2,0");
        let i = shannon_mutual_joint(&skew).bits();
        assert!((i - 0.31127812445913294).abs() < 1e-12);
        let kl = kl_divergence(&skew.flattened(), &skew.marginal_product()).unwrap().bits();
        assert!(close(i, kl));

        let a = p("0,1|2,3");
        assert_eq!(shannon_mutual_partition(&a, &Partition::indiscrete(4).unwrap(), None).unwrap().bits(), 0.0);
        assert!(shannon_mutual_partition(&a, &p("0,2|1,3"), None).unwrap().bits().abs() < 1e-15);
    }

    #[test]
    fn cross_and_kl_examples() {
        let (a, b) = (d("1/2,1/2"), d("1/4,3/4"));
        assert!(close(shannon_cross_entropy(&a, &a).unwrap().bits(), 1.0));
        assert!(shannon_cross_entropy(&d("1,0"), &d("0,1")).unwrap().is_infinite());
        assert!((shannon_cross_entropy(&a, &b).unwrap().bits() - 1.207518749639422).abs() < 1e-12);

        assert_eq!(kl_divergence(&a, &a).unwrap().bits(), 0.0);
        assert!((kl_divergence(&a, &b).unwrap().bits() - 0.20751874963942185).abs() < 1e-12);
        assert!(close(kl_divergence(&d("1,0"), &a).unwrap().bits(), 1.0));
        assert!((symmetrized_kl(&a, &b).unwrap().bits() - 0.1981203125901445).abs() < 1e-12);
        let hs = symmetrized_cross_entropy(&a, &b).unwrap().bits();
        let mean_h = 0.5 * (shannon_entropy_dist(&a).bits() + shannon_entropy_dist(&b).bits());
        assert!(close(symmetrized_kl(&a, &b).unwrap().bits(), hs - mean_h));
        assert!(kl_divergence(&a, &d("1")).is_err());
    }

    #[test]
    fn conversion_examples() {
        assert!(close(dit_to_bit(0.5).unwrap().bits(), 1.0));
        assert_eq!(dit_to_bit(0.0).unwrap().bits(), 0.0);
        assert!(close(dit_to_bit(1.0 - 1.0 / 8.0).unwrap().bits(), 3.0));
        assert!(dit_to_bit(1.0).is_err());
        assert!(dit_to_bit(-0.1).is_err());

        assert!(close(bit_to_dit(BitValue::from_bits(1.0)).unwrap(), 0.5));
        assert_eq!(bit_to_dit(BitValue::from_bits(0.0)).unwrap(), 0.0);
        assert!(close(bit_to_dit(BitValue::from_bits(3f64.log2())).unwrap(), 2.0 / 3.0));
        assert!(bit_to_dit(BitValue::from_bits(-1.0)).is_err());
    }

    #[test]
    fn transform_examples() {
        let e = d("1/2,1/4,1/4");
        let r = dit_bit_transform(&Compound::Entropy(&e)).unwrap();
        assert!(close(r.transformed, 1.5) && r.residual < 1e-12);
        assert!(close(r.logical, logical_entropy_dist(&e)));

        let (a, b) = (d("1/2,1/2"), d("1/4,3/4"));
        let r = dit_bit_transform(&Compound::Divergence(&a, &b)).unwrap();
        assert!((r.transformed - 0.1981203125901445).abs() < 1e-12);
        assert!(close(r.logical, 1.0 / 16.0));

        let ind = j("1/4,1/4\n1/4,1/4");
        let r = dit_bit_transform(&Compound::Mutual(&ind)).unwrap();
        assert!(r.transformed.abs() < 1e-15);
        assert!(close(r.logical, 0.25));

        let r = dit_bit_transform(&Compound::Cross(&d("1,0"), &d("0,1"))).unwrap();
        assert!(r.transformed.is_infinite() && r.residual == 0.0);

        assert_eq!(
            "entropies".parse::<CompoundKind>(),
            Err(Error::UnknownSelector("entropies".into()))
        );
        assert_eq!("mutual".parse::<CompoundKind>().unwrap(), CompoundKind::Mutual);
    }

    #[test]
    fn logical_terms_reproduce_logical_measures() {
        let skew = j("0.1,0.2,0.05\n0.3,0,0.35");
        let (a, b) = (d("0.2,0.3,0.5"), d("0.6,0.1,0.3"));
        for c in [
            Compound::Entropy(&a),
            Compound::Conditional(&skew, Given::Y),
            Compound::Conditional(&skew, Given::X),
            Compound::Mutual(&skew),
            Compound::Cross(&a, &b),
            Compound::Divergence(&a, &b),
        ] {
            let r = dit_bit_transform(&c).unwrap();
            assert!(close(r.logical, logical_compound(&c).unwrap()), "{:?}", r.kind);
            assert!(r.residual < 1e-12, "{:?}", r);
        }
    }

    #[test]
    fn ln_factorial_small() {
        assert_eq!(ln_factorial(0), 0.0);
        assert_eq!(ln_factorial(1), 0.0);
        assert!(close(ln_factorial(5), 120f64.ln()));
        assert!(close(ln_factorial(12), 479001600f64.ln()));
    }

    #[test]
    fn stirling_examples() {
        let r = stirling_entropy(&[6, 6]).unwrap();
        assert!((r.s_exact - 924f64.ln() / 12.0).abs() < 1e-12);
        assert!((r.approx2 - std::f64::consts::LN_2).abs() < 1e-15);

        let r = stirling_entropy(&[1]).unwrap();
        assert_eq!((r.s_exact, r.approx2), (0.0, 0.0));

        let r = stirling_entropy(&[250; 4]).unwrap();
        assert!(r.err3 < r.err2);
        assert!((r.in_bits().approx2 - 2.0).abs() < 1e-12);

        assert_eq!(stirling_entropy(&[]), Err(Error::EmptyInput));
        assert!(stirling_entropy(&[3, 0]).is_err());
    }
}
