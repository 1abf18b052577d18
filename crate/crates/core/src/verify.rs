//! Identity suites: exhaustive sweeps over `Π(U)` for small universes and
//! seeded randomized sweeps over distributions and joints.
//!
//! Each suite returns one [`IdentityCheck`] per named identity with the
//! number of instances checked and the worst residual seen.

use num::Zero;
use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use serde::Serialize;

use crate::closure::{interior, partition_from_equivalence, rst_closure};
use crate::distribution::{DistanceMatrix, Distribution, Given, JointDistribution};
use crate::enumerate::{bell_number, enumerate_partitions};
use crate::error::{Error, Result};
use crate::lattice::{
    implication, implication_via_interior, join, meet, meet_via_interior, mutual_dit_set,
    mutual_dit_set_structural, refines,
};
use crate::logical::{self as lg, MixingEntropy};
use crate::partition::{Partition, Universe};
use crate::relation::PairRelation;
use crate::scalar::{Rational, Scalar};
use crate::shannon::{self as sh, residual, Compound};

/// Floating-point tolerance for identities between computed reals.
pub const FLOAT_TOLERANCE: f64 = 1e-12;

/// Largest `max_n` accepted by [`run_all`].
pub const MAX_VERIFY_N: usize = 6;

/// Outcome of checking one named identity over many instances.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub checks: u64,
    pub failures: u64,
    pub worst_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone)]
pub(crate) struct Tracker {
    name: &'static str,
    tolerance: f64,
    checks: u64,
    failures: u64,
    worst: f64,
}

impl Tracker {
    pub(crate) fn new(name: &'static str, tolerance: f64) -> Self {
        Self {
            name,
            tolerance,
            checks: 0,
            failures: 0,
            worst: 0.0,
        }
    }

    fn exact(name: &'static str) -> Self {
        Self::new(name, 0.0)
    }

    pub(crate) fn residual(&mut self, r: f64) {
        self.checks += 1;
        if r.is_nan() || r > self.tolerance {
            self.failures += 1;
        }
        if r.is_nan() || r > self.worst {
            self.worst = r;
        }
    }

    pub(crate) fn holds(&mut self, ok: bool) {
        self.residual(if ok { 0.0 } else { 1.0 });
    }

    // exact comparison; the residual is reported in f64 but any mismatch fails
    fn rational(&mut self, a: &Rational, b: &Rational) {
        let r = Scalar::to_f64(&a.abs_diff(b));
        self.checks += 1;
        if a != b {
            self.failures += 1;
        }
        if r > self.worst {
            self.worst = r;
        }
    }

    pub(crate) fn finish(self) -> IdentityCheck {
        IdentityCheck {
            name: self.name.to_string(),
            checks: self.checks,
            failures: self.failures,
            worst_residual: self.worst,
            tolerance: self.tolerance,
            passed: self.failures == 0,
        }
    }
}

/// Result of [`run_all`].
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub max_n: usize,
    pub seed: u64,
    /// Ordered partition pairs visited by the exhaustive suites at `n = max_n`.
    pub pairs_checked: u64,
    pub identities: Vec<IdentityCheck>,
    pub passed: bool,
}

/// Runs every suite: exhaustive for `n ≤ max_n`, randomized with `trials` inputs.
pub fn run_all(max_n: usize, seed: u64, trials: u64) -> Result<VerifyReport> {
    if !(2..=MAX_VERIFY_N).contains(&max_n) {
        return Err(Error::LimitExceeded {
            n: max_n,
            limit: MAX_VERIFY_N,
        });
    }
    let mut identities = Vec::new();
    identities.extend(lattice_suite(max_n)?);
    identities.extend(measure_suite_exact(max_n)?);
    identities.extend(shannon_partition_suite(max_n)?);
    identities.extend(independence_suite(&[2, 3, 4])?);
    identities.extend(closure_suite(4.min(max_n), trials, seed)?);
    identities.extend(joint_suite(trials, seed)?);
    identities.extend(divergence_suite(trials, seed)?);
    identities.extend(transform_suite(trials, seed)?);
    identities.extend(conversion_suite(1000)?);
    identities.extend(bounds_suite(64)?);
    identities.extend(stirling_suite()?);
    let passed = identities.iter().all(|c| c.passed);
    let b = bell_number(max_n) as u64;
    Ok(VerifyReport {
        max_n,
        seed,
        pairs_checked: b * b,
        identities,
        passed,
    })
}

/// Exhaustive lattice and dit-set identities for every `n ≤ max_n`, with zero tolerance.
pub fn lattice_suite(max_n: usize) -> Result<Vec<IdentityCheck>> {
    let mut open = Tracker::exact("dit set is a partition relation; indit set its complementary equivalence");
    let mut round = Tracker::exact("partition_from_equivalence(indit(π)) = π");
    let mut join_t = Tracker::exact("dit(π∨σ) = dit(π) ∪ dit(σ)");
    let mut meet_t = Tracker::exact("dit(π∧σ) = int[dit(π) ∩ dit(σ)], both meet routes agree");
    let mut refine_t = Tracker::exact("σ⪯π ⟺ dit(σ) ⊆ dit(π) ⟺ σ⇒π = 1");
    let mut impl_t = Tracker::exact("σ⇒π discretization = int[dit(σ)ᶜ ∪ dit(π)]");
    let mut structure = Tracker::exact("Mut(π,σ) = ⋃ (B−C)×(C−B)");
    let mut nonempty = Tracker::exact("non-empty dit sets intersect");
    let mut contra = Tracker::exact("E₁ ∪ E₂ = U² implies E₁ = U² or E₂ = U²");
    let mut laws = Tracker::exact("lattice laws: commutative, idempotent, absorption, bounds");
    let mut assoc = Tracker::exact("join and meet associative");

    for n in 1..=max_n {
        let all = enumerate_partitions(n)?;
        let universe = Universe::new(n)?;
        let full = PairRelation::full(universe);
        let one = Partition::discrete(n)?;
        let zero = Partition::indiscrete(n)?;
        let dits: Vec<PairRelation> = all.iter().map(Partition::dit_set).collect();

        for (pi, dit) in all.iter().zip(&dits) {
            let indit = pi.indit_set();
            open.holds(
                dit.is_partition_relation()
                    && indit.is_equivalence()
                    && (dit & &indit).is_empty()
                    && (dit | &indit) == full,
            );
            round.holds(partition_from_equivalence(&indit)? == *pi);
            laws.holds(
                join(pi, &one)? == one
                    && meet(pi, &zero)? == zero
                    && join(pi, &zero)? == *pi
                    && meet(pi, &one)? == *pi
                    && join(pi, pi)? == *pi
                    && meet(pi, pi)? == *pi,
            );
        }

        for (pi, dpi) in all.iter().zip(&dits) {
            for (sigma, dsigma) in all.iter().zip(&dits) {
                let j = join(pi, sigma)?;
                join_t.holds(j.dit_set() == (dpi | dsigma));

                let m = meet(pi, sigma)?;
                meet_t.holds(
                    m.dit_set() == interior(&(dpi & dsigma)) && m == meet_via_interior(pi, sigma)?,
                );

                let r = refines(sigma, pi)?;
                let imp = implication(sigma, pi)?;
                refine_t.holds(r == dsigma.is_subset(dpi) && r == imp.is_discrete());
                impl_t.holds(imp == implication_via_interior(sigma, pi)?);

                let mutual = mutual_dit_set(pi, sigma)?;
                structure.holds(mutual == mutual_dit_set_structural(pi, sigma)?);
                if !pi.is_indiscrete() && !sigma.is_indiscrete() {
                    nonempty.holds(!mutual.is_empty());
                }

                let (e1, e2) = (pi.indit_set(), sigma.indit_set());
                if (&e1 | &e2) == full {
                    contra.holds(e1 == full || e2 == full);
                }

                laws.holds(
                    j == join(sigma, pi)?
                        && m == meet(sigma, pi)?
                        && join(pi, &meet(pi, sigma)?)? == *pi
                        && meet(pi, &j)? == *pi,
                );
            }
        }

        if n <= 4 {
            for pi in &all {
                for sigma in &all {
                    for tau in &all {
                        assoc.holds(
                            join(&join(pi, sigma)?, tau)? == join(pi, &join(sigma, tau)?)?
                                && meet(&meet(pi, sigma)?, tau)? == meet(pi, &meet(sigma, tau)?)?,
                        );
                    }
                }
            }
        }
    }

    Ok(vec![
        open.finish(),
        round.finish(),
        join_t.finish(),
        meet_t.finish(),
        refine_t.finish(),
        impl_t.finish(),
        structure.finish(),
        nonempty.finish(),
        contra.finish(),
        laws.finish(),
        assoc.finish(),
    ])
}

/// Closure and interior operator laws on `n ≤ max_n`: every dit-derived relation
/// plus `samples` random relations per `n`.
pub fn closure_suite(max_n: usize, samples: u64, seed: u64) -> Result<Vec<IdentityCheck>> {
    let mut closure_t = Tracker::exact("rst closure idempotent, extensive, monotone");
    let mut interior_t = Tracker::exact("interior idempotent, contractive, monotone");
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed ^ 0xC105_E000);
    for n in 1..=max_n {
        let universe = Universe::new(n)?;
        let mut relations: Vec<PairRelation> = Vec::new();
        for p in enumerate_partitions(n)? {
            relations.push(p.dit_set());
            relations.push(p.indit_set());
        }
        for _ in 0..samples {
            let mut r = PairRelation::empty(universe);
            let bits = rng.next_u64();
            for k in 0..n * n {
                if (bits >> k) & 1 == 1 {
                    r.insert(k / n, k % n);
                }
            }
            relations.push(r);
        }
        for pair in relations.windows(2) {
            let (r, s) = (&pair[0], &pair[1]);
            let small = r & s;
            let c = rst_closure(r);
            closure_t.holds(
                rst_closure(&c) == c
                    && r.is_subset(&c)
                    && rst_closure(&small).is_subset(&c)
                    && c.is_equivalence(),
            );
            let i = interior(r);
            interior_t.holds(
                interior(&i) == i
                    && i.is_subset(r)
                    && interior(&small).is_subset(&i)
                    && i.is_partition_relation(),
            );
        }
    }
    Ok(vec![closure_t.finish(), interior_t.finish()])
}

/// Measure identities in exact rationals with uniform weights, all pairs, `n ≤ max_n`.
pub fn measure_suite_exact(max_n: usize) -> Result<Vec<IdentityCheck>> {
    let none: Option<&Distribution<Rational>> = None;
    let mut h_form = Tracker::exact("h(π) = 1 − Σ(|B|/n)² = μ(dit(π)) = Σ p_B(1−p_B)");
    let mut incl_excl = Tracker::exact("m(π,σ) = h(π) + h(σ) − h(π∨σ)");
    let mut cond = Tracker::exact("h(π|σ) = h(π∨σ) − h(σ)");
    let mut submod = Tracker::exact("h(π∧σ) ≤ h(π) + h(σ) − h(π∨σ)");
    let mut general = Tracker::exact("[1−h(π∨σ)] − [1−h(π)][1−h(σ)] = m(π,σ) − h(π)h(σ)");

    for n in 1..=max_n {
        let all = enumerate_partitions(n)?;
        let uniform = Distribution::<Rational>::uniform(n)?;
        let hs: Vec<Rational> = all
            .iter()
            .map(|p| lg::logical_entropy_partition(p, none))
            .collect::<Result<_>>()?;
        for (pi, h) in all.iter().zip(&hs) {
            let sq: Rational = pi
                .block_sizes()
                .iter()
                .map(|&b| {
                    let f = Rational::ratio(b as u64, n as u64);
                    f.clone() * f
                })
                .sum();
            let one = Rational::from_integer(1.into());
            h_form.rational(h, &(one - sq));
            h_form.rational(h, &lg::product_measure(&pi.dit_set(), &uniform)?);
            h_form.rational(h, &lg::logical_entropy_blocks(pi, Some(&uniform))?);
        }
        for (pi, h_pi) in all.iter().zip(&hs) {
            for (sigma, h_sigma) in all.iter().zip(&hs) {
                let h_join = lg::logical_entropy_partition(&join(pi, sigma)?, none)?;
                let h_meet = lg::logical_entropy_partition(&meet(pi, sigma)?, none)?;
                let m = lg::logical_mutual_partition(pi, sigma, none)?;
                let c = lg::logical_conditional_partition(pi, sigma, none)?;
                let rhs = h_pi.clone() + h_sigma.clone() - h_join.clone();
                incl_excl.rational(&m, &rhs);
                cond.rational(&c, &(h_join.clone() - h_sigma.clone()));
                submod.holds(h_meet <= rhs);
                let one = Rational::from_integer(1.into());
                let lhs = (one.clone() - h_join)
                    - (one.clone() - h_pi.clone()) * (one - h_sigma.clone());
                general.rational(&lhs, &(m - h_pi.clone() * h_sigma.clone()));
            }
        }
    }
    Ok(vec![
        h_form.finish(),
        incl_excl.finish(),
        cond.finish(),
        submod.finish(),
        general.finish(),
    ])
}

/// Shannon partition identities, uniform weights, all pairs, `n ≤ max_n`.
pub fn shannon_partition_suite(max_n: usize) -> Result<Vec<IdentityCheck>> {
    let mut cond = Tracker::new("H(π|σ) = H(π∨σ) − H(σ)", FLOAT_TOLERANCE);
    let mut mutual = Tracker::new("I(π,σ) = H(π) + H(σ) − H(π∨σ) ≥ 0", FLOAT_TOLERANCE);
    for n in 1..=max_n {
        let all = enumerate_partitions(n)?;
        let hs: Vec<f64> = all
            .iter()
            .map(|p| sh::shannon_entropy_partition(p, None).map(|b| b.bits()))
            .collect::<Result<_>>()?;
        for (pi, &h_pi) in all.iter().zip(&hs) {
            for (sigma, &h_sigma) in all.iter().zip(&hs) {
                let h_join = sh::shannon_joint_partition(pi, sigma, None)?.bits();
                let c = sh::shannon_conditional_partition(pi, sigma, None)?.bits();
                cond.residual(residual(c, h_join - h_sigma));
                let i = sh::shannon_mutual_partition(pi, sigma, None)?.bits();
                mutual.residual(residual(i, h_pi + h_sigma - h_join).max(-i));
            }
        }
    }
    Ok(vec![cond.finish(), mutual.finish()])
}

/// Lifts a partition of one factor to the product universe `X×Y` (element `x·|Y| + y`).
pub fn lift_to_product(factor: &Partition, rows: usize, cols: usize, along_x: bool) -> Result<Partition> {
    let universe = Universe::new(rows * cols)?;
    Ok(Partition::from_key(universe, |u| {
        if along_x {
            factor.block_of(u / cols)
        } else {
            factor.block_of(u % cols)
        }
    }))
}

/// Independence theorems on product universes `X×Y` with uniform weights:
/// every partition of `X` against every partition of `Y`.
pub fn independence_suite(sizes: &[usize]) -> Result<Vec<IdentityCheck>> {
    let none: Option<&Distribution<Rational>> = None;
    let mut mult = Tracker::exact("independent: m(π,σ) = h(π)h(σ)");
    let mut ident = Tracker::exact("independent: [1−h(π)][1−h(σ)] = 1−h(π∨σ)");
    let mut stoch = Tracker::exact("independent: p(B∩C) = p(B)p(C)");
    let mut info = Tracker::new("independent: I(π,σ) = 0", FLOAT_TOLERANCE);
    let mut additive = Tracker::new("independent: H(π∨σ) = H(π) + H(σ)", FLOAT_TOLERANCE);
    for &rows in sizes {
        for &cols in sizes {
            let xs = enumerate_partitions(rows)?;
            let ys = enumerate_partitions(cols)?;
            for alpha in &xs {
                let pi = lift_to_product(alpha, rows, cols, true)?;
                let h_pi: Rational = lg::logical_entropy_partition(&pi, none)?;
                let big_h_pi = sh::shannon_entropy_partition(&pi, None)?.bits();
                for beta in &ys {
                    let sigma = lift_to_product(beta, rows, cols, false)?;
                    let h_sigma: Rational = lg::logical_entropy_partition(&sigma, none)?;
                    let j = join(&pi, &sigma)?;
                    let pb: Distribution<Rational> = lg::block_probabilities(&pi, none)?;
                    let pc: Distribution<Rational> = lg::block_probabilities(&sigma, none)?;
                    let n = (rows * cols) as u64;
                    let mut ok = true;
                    for b in 0..pi.block_count() {
                        for c in 0..sigma.block_count() {
                            let both = pi.blocks()[b]
                                .iter()
                                .filter(|&&u| sigma.block_of(u) == c)
                                .count() as u64;
                            ok &= Rational::ratio(both, n)
                                == pb.probs()[b].clone() * pc.probs()[c].clone();
                        }
                    }
                    stoch.holds(ok);

                    let m: Rational = lg::logical_mutual_partition(&pi, &sigma, none)?;
                    mult.rational(&m, &(h_pi.clone() * h_sigma.clone()));
                    let one = Rational::from_integer(1.into());
                    let h_join: Rational = lg::logical_entropy_partition(&j, none)?;
                    ident.rational(
                        &((one.clone() - h_pi.clone()) * (one.clone() - h_sigma.clone())),
                        &(one - h_join),
                    );

                    let i = sh::shannon_mutual_partition(&pi, &sigma, None)?.bits();
                    info.residual(i.abs());
                    let big_h_sigma = sh::shannon_entropy_partition(&sigma, None)?.bits();
                    let big_h_join = sh::shannon_entropy_partition(&j, None)?.bits();
                    additive.residual(residual(big_h_join, big_h_pi + big_h_sigma));
                }
            }
        }
    }
    Ok(vec![
        mult.finish(),
        ident.finish(),
        stoch.finish(),
        info.finish(),
        additive.finish(),
    ])
}

/// Seeded source of random distributions and joints for the randomized suites.
#[derive(Debug, Clone)]
pub struct RandomInputs {
    rng: Xoshiro256PlusPlus,
}

impl RandomInputs {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: Xoshiro256PlusPlus::seed_from_u64(seed),
        }
    }

    pub fn uniform(&mut self) -> f64 {
        ((self.rng.next_u64() >> 11) + 1) as f64 / (1u64 << 53) as f64
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.rng.next_u64() % n
    }

    /// Strictly positive weights from exponential draws, normalized.
    pub fn distribution(&mut self, n: usize) -> Distribution<f64> {
        let raw: Vec<f64> = (0..n).map(|_| -self.uniform().ln() + 1e-3).collect();
        normalized(raw)
    }

    /// Like [`Self::distribution`] but roughly a quarter of the entries are zero.
    pub fn sparse_distribution(&mut self, n: usize) -> Distribution<f64> {
        let mut raw: Vec<f64> = (0..n)
            .map(|_| if self.below(4) == 0 { 0.0 } else { -self.uniform().ln() + 1e-3 })
            .collect();
        if raw.iter().all(|&x| x == 0.0) {
            raw[0] = 1.0;
        }
        normalized(raw)
    }

    pub fn joint(&mut self, rows: usize, cols: usize, sparse: bool) -> JointDistribution<f64> {
        let flat = if sparse {
            self.sparse_distribution(rows * cols)
        } else {
            self.distribution(rows * cols)
        };
        JointDistribution::new(flat.probs().chunks(cols).map(<[f64]>::to_vec).collect())
            .expect("normalized cells form a joint distribution")
    }
}

fn normalized(raw: Vec<f64>) -> Distribution<f64> {
    let s: f64 = raw.iter().sum();
    Distribution::new(raw.into_iter().map(|x| x / s).collect())
        .expect("normalized weights form a distribution")
}

// h(x|y) and m(x,y) as product measures over (X×Y)² by double sum.
pub(crate) fn joint_pair_measures(j: &JointDistribution<f64>) -> (f64, f64) {
    let (rows, cols) = j.shape();
    let (mut cond, mut mutual) = (0.0, 0.0);
    for x in 0..rows {
        for y in 0..cols {
            for x2 in 0..rows {
                for y2 in 0..cols {
                    let w = j.get(x, y) * j.get(x2, y2);
                    if x != x2 && y == y2 {
                        cond += w;
                    }
                    if x != x2 && y != y2 {
                        mutual += w;
                    }
                }
            }
        }
    }
    (cond, mutual)
}

/// Venn identities for random joints, logical and Shannon, including zero cells.
pub fn joint_suite(trials: u64, seed: u64) -> Result<Vec<IdentityCheck>> {
    let mut rnd = RandomInputs::new(seed ^ 0x0101);
    let tol = FLOAT_TOLERANCE;
    let mut lc = Tracker::new("h(x|y) = h(x,y) − h(y)", tol);
    let mut lm = Tracker::new("m(x,y) = h(x) + h(y) − h(x,y)", tol);
    let mut pairs = Tracker::new("h(x|y), m(x,y) equal product measures of their pair sets", tol);
    let mut sc = Tracker::new("H(x|y) = H(x,y) − H(y)", tol);
    let mut sm = Tracker::new("I(x,y) = H(x) + H(y) − H(x,y)", tol);
    let mut kl = Tracker::new("I(x,y) = D(p(x,y)‖p(x)p(y)) ≥ 0", tol);
    let mut ind = Tracker::new("product joint: m = h(x)h(y), [1−h(x)][1−h(y)] = 1−h(x,y), I = 0", tol);
    for t in 0..trials {
        let rows = 1 + rnd.below(5) as usize;
        let cols = 1 + rnd.below(5) as usize;
        let j = rnd.joint(rows, cols, t % 2 == 1);
        let (px, py) = (j.marginal_x_dist(), j.marginal_y_dist());
        let (hx, hy, hxy) = (
            lg::logical_entropy_dist(&px),
            lg::logical_entropy_dist(&py),
            lg::joint_logical_entropy(&j),
        );
        let h_x_y = lg::logical_conditional_joint(&j, Given::Y);
        let m = lg::logical_mutual_joint(&j);
        lc.residual(residual(h_x_y, hxy - hy));
        lc.residual(residual(lg::logical_conditional_joint(&j, Given::X), hxy - hx));
        lm.residual(residual(m, hx + hy - hxy));
        let (pc, pm) = joint_pair_measures(&j);
        pairs.residual(residual(h_x_y, pc).max(residual(m, pm)));

        let (bx, by, bxy) = (
            sh::shannon_entropy_dist(&px).bits(),
            sh::shannon_entropy_dist(&py).bits(),
            sh::shannon_joint_entropy(&j).bits(),
        );
        sc.residual(residual(sh::shannon_conditional_joint(&j, Given::Y).bits(), bxy - by));
        sc.residual(residual(sh::shannon_conditional_joint(&j, Given::X).bits(), bxy - bx));
        let i = sh::shannon_mutual_joint(&j).bits();
        sm.residual(residual(i, bx + by - bxy));
        let d = sh::kl_divergence(&j.flattened(), &j.marginal_product())?.bits();
        kl.residual(residual(i, d).max(-d));

        let prod = JointDistribution::product(&px, &py);
        let (qx, qy) = (prod.marginal_x_dist(), prod.marginal_y_dist());
        let (gx, gy) = (lg::logical_entropy_dist(&qx), lg::logical_entropy_dist(&qy));
        let r = residual(lg::logical_mutual_joint(&prod), gx * gy)
            .max(residual((1.0 - gx) * (1.0 - gy), 1.0 - lg::joint_logical_entropy(&prod)))
            .max(sh::shannon_mutual_joint(&prod).bits().abs());
        ind.residual(r);
    }
    Ok(vec![
        lc.finish(),
        lm.finish(),
        pairs.finish(),
        sc.finish(),
        sm.finish(),
        kl.finish(),
        ind.finish(),
    ])
}

/// Divergence, cross entropy and mixing results on random pairs; every fifth pair has `q = p`.
pub fn divergence_suite(trials: u64, seed: u64) -> Result<Vec<IdentityCheck>> {
    let mut rnd = RandomInputs::new(seed ^ 0x0202);
    let tol = FLOAT_TOLERANCE;
    let mut kl_t = Tracker::new("D(p‖q) ≥ 0, zero iff p = q; D = H(p‖q) − H(p)", tol);
    let mut d_t = Tracker::new("d(p‖q) ≥ 0, zero iff p = q", tol);
    let mut jensen = Tracker::new("d(p‖q) = h(p‖q) − [h(p)+h(q)]/2", tol);
    let mut mix = Tracker::new("h((p+q)/2) = h(p‖q)/2 + [h(p)+h(q)]/4, chain h(p‖q) ≥ h_mix ≥ mean h", tol);
    let mut cross = Tracker::new("h(p‖p) = h(p), H(p‖p) = H(p), h(p‖q) = h(q‖p)", tol);
    let mut ds = Tracker::new("D_s(p‖q) = H_s(p‖q) − [H(p)+H(q)]/2", tol);
    let mut quad = Tracker::new("quadratic entropy with logical distance = h(p)", tol);
    for t in 0..trials {
        let n = 1 + rnd.below(8) as usize;
        let p = rnd.distribution(n);
        let same = t % 5 == 0;
        let q = if same { p.clone() } else { rnd.distribution(n) };
        let differs = p.probs().iter().zip(q.probs()).any(|(a, b)| (a - b).abs() > 1e-9);

        let kl = sh::kl_divergence(&p, &q)?.bits();
        let big_cross = sh::shannon_cross_entropy(&p, &q)?.bits();
        let zero_iff = if differs { kl > 0.0 } else { kl.abs() <= tol };
        let r = residual(kl, big_cross - sh::shannon_entropy_dist(&p).bits()).max(-kl);
        kl_t.residual(if zero_iff { r } else { f64::INFINITY });

        let d = lg::logical_divergence(&p, &q)?;
        let zero_iff = if differs { d > 0.0 } else { d.abs() <= tol };
        d_t.residual(if zero_iff { (-d).max(0.0) } else { f64::INFINITY });

        jensen.residual(residual(d, lg::jensen_difference(&p, &q)?));

        let m: MixingEntropy<f64> = lg::mixing_entropy(&p, &q)?;
        mix.residual(if m.chain_holds_within(tol) { m.identity_residual() } else { f64::INFINITY });

        let h = lg::logical_entropy_dist(&p);
        cross.residual(
            residual(lg::logical_cross_entropy(&p, &p)?, h)
                .max(residual(
                    sh::shannon_cross_entropy(&p, &p)?.bits(),
                    sh::shannon_entropy_dist(&p).bits(),
                ))
                .max(residual(lg::logical_cross_entropy(&p, &q)?, lg::logical_cross_entropy(&q, &p)?)),
        );

        let mean_big_h =
            0.5 * (sh::shannon_entropy_dist(&p).bits() + sh::shannon_entropy_dist(&q).bits());
        ds.residual(residual(
            sh::symmetrized_kl(&p, &q)?.bits(),
            sh::symmetrized_cross_entropy(&p, &q)?.bits() - mean_big_h,
        ));

        quad.residual(residual(lg::quadratic_entropy(&p, &DistanceMatrix::logical(n))?, h));
    }
    Ok(vec![
        kl_t.finish(),
        d_t.finish(),
        jensen.finish(),
        mix.finish(),
        cross.finish(),
        ds.finish(),
        quad.finish(),
    ])
}

/// Termwise dit-to-bit substitution against the direct Shannon formula, `trials` inputs per compound.
pub fn transform_suite(trials: u64, seed: u64) -> Result<Vec<IdentityCheck>> {
    let mut rnd = RandomInputs::new(seed ^ 0x0303);
    let names = [
        "transform(h) = H",
        "transform(h(x|y)) = H(x|y)",
        "transform(m) = I",
        "transform(h(p‖q)) = H(p‖q)",
        "transform(d) = D_s",
    ];
    let mut trackers: Vec<Tracker> = names.iter().map(|n| Tracker::new(n, FLOAT_TOLERANCE)).collect();
    for _ in 0..trials {
        let n = 1 + rnd.below(8) as usize;
        let (p, q) = (rnd.distribution(n), rnd.distribution(n));
        let rows = 1 + rnd.below(5) as usize;
        let cols = 1 + rnd.below(5) as usize;
        let j = rnd.joint(rows, cols, false);
        let inputs = [
            Compound::Entropy(&p),
            Compound::Conditional(&j, Given::Y),
            Compound::Mutual(&j),
            Compound::Cross(&p, &q),
            Compound::Divergence(&p, &q),
        ];
        for (tracker, input) in trackers.iter_mut().zip(&inputs) {
            let report = sh::dit_bit_transform(input)?;
            let logical = sh::logical_compound(input)?;
            tracker.residual(report.residual.max(residual(report.logical, logical)));
        }
    }
    Ok(trackers.into_iter().map(Tracker::finish).collect())
}

/// Dit-bit conversions: round trips over a grid of `h₀ ∈ [0, 0.999]` and the
/// equiprobable anchors `p₀ = 1/2 … 1/64`.
pub fn conversion_suite(grid: u64) -> Result<Vec<IdentityCheck>> {
    let mut round = Tracker::new("bit_to_dit(dit_to_bit(h₀)) = h₀", FLOAT_TOLERANCE);
    let mut anchors = Tracker::new("equiprobable: dit_to_bit(1−p₀) = log(1/p₀), bit_to_dit = 1−p₀", FLOAT_TOLERANCE);
    for k in 0..grid {
        let h0 = 0.999 * k as f64 / (grid.max(2) - 1) as f64;
        let back = sh::bit_to_dit(sh::dit_to_bit(h0)?)?;
        round.residual(residual(back, h0));
    }
    for k in 1..=6 {
        let p0 = 1.0 / (1u64 << k) as f64;
        let hartley = sh::shannon_hartley(p0)?;
        let bits = sh::dit_to_bit(1.0 - p0)?;
        anchors.residual(
            residual(bits.bits(), hartley.bits()).max(residual(sh::bit_to_dit(hartley)?, 1.0 - p0)),
        );
    }
    Ok(vec![round.finish(), anchors.finish()])
}

/// Extreme values: uniform distributions and partitions reach `1 − 1/n` and `log₂ n`,
/// point masses reach zero.
pub fn bounds_suite(max_n: usize) -> Result<Vec<IdentityCheck>> {
    let mut uni = Tracker::new("uniform: h = 1 − 1/n, H = log₂ n", FLOAT_TOLERANCE);
    let mut point = Tracker::exact("point mass: h = 0, H = 0");
    for n in 2..=max_n {
        let u = Distribution::<Rational>::uniform(n)?;
        let h = lg::logical_entropy_dist(&u);
        let exact_ok = h == Rational::ratio(n as u64 - 1, n as u64);
        let big_h = sh::shannon_entropy_dist(&u.to_f64()).bits();
        let r = residual(big_h, (n as f64).log2());
        uni.residual(if exact_ok { r } else { f64::INFINITY });
        let one = Partition::discrete(n)?;
        let hp: Rational = lg::logical_entropy_partition(&one, None)?;
        let hb = sh::shannon_entropy_partition(&one, None)?.bits();
        uni.residual(if hp == h { residual(hb, (n as f64).log2()) } else { f64::INFINITY });
        for at in [0, n - 1] {
            let pm = Distribution::<Rational>::point_mass(n, at)?;
            point.holds(
                lg::logical_entropy_dist(&pm).is_zero()
                    && sh::shannon_entropy_dist(&pm.to_f64()).bits() == 0.0,
            );
        }
    }
    Ok(vec![uni.finish(), point.finish()])
}

/// Stirling comparison on equal four-block configurations.
pub fn stirling_suite() -> Result<Vec<IdentityCheck>> {
    let mut closer = Tracker::exact("three-term Stirling closer than two-term for N ≥ 100");
    let mut decay = Tracker::exact("Stirling errors decrease in N");
    let mut prev: Option<(f64, f64)> = None;
    for total in [100u64, 1000, 10_000] {
        let r = sh::stirling_entropy(&[total / 4; 4])?;
        closer.holds(r.err3 < r.err2);
        if let Some((e2, e3)) = prev {
            decay.holds(r.err2 < e2 && r.err3 < e3);
        }
        prev = Some((r.err2, r.err3));
    }
    Ok(vec![closer.finish(), decay.finish()])
}
