//! Command implementations for the `partition-logic` binary.
//!
//! Every command returns a [`CommandResult`] holding the parsed inputs, the
//! named output quantities (each with its unit) and the residuals of every
//! identity that applies to the inputs. Logical quantities are computed in
//! exact rationals when the input contains a fraction or `exact` is set.

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::distribution::{DistanceMatrix, Distribution, Given, JointDistribution};
use crate::enumerate::{bell_number, enumerate_partitions, DEFAULT_LIMIT};
use crate::error::{Error, Result};
use crate::lattice::{implication, join, meet, refines};
use crate::logical as lg;
use crate::partition::Partition;
use crate::scalar::{format_rational, Rational, Scalar};
use crate::shannon::{self as sh, residual, Base, BitValue, Compound};
use crate::stochastic;
use crate::verify;

/// Largest `n` for which `lattice` emits cover edges.
pub const LATTICE_EDGE_LIMIT: usize = 6;

/// Invocation-wide settings.
#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    /// `None` means bits, except for `stirling` which defaults to nats.
    pub base: Option<Base>,
    pub exact: bool,
}

impl Options {
    fn base(&self) -> Base {
        self.base.unwrap_or_default()
    }

    fn bits(&self, v: BitValue) -> Quantity {
        let base = self.base();
        Quantity::float(v.in_base(base), base.unit())
    }
}

/// A named output value with its unit; `exact` carries the rational form when available.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Quantity {
    pub value: Value,
    pub unit: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

fn number(v: f64) -> Value {
    if v.is_finite() {
        json!(v)
    } else if v.is_nan() {
        json!("nan")
    } else if v > 0.0 {
        json!("inf")
    } else {
        json!("-inf")
    }
}

impl Quantity {
    pub fn float(v: f64, unit: &'static str) -> Self {
        Self {
            value: number(v),
            unit,
            exact: None,
        }
    }

    pub fn count(v: u128) -> Self {
        Self {
            value: json!(v as u64),
            unit: "count",
            exact: None,
        }
    }

    /// Numeric value, with `"inf"` mapped back to infinity.
    pub fn as_f64(&self) -> Option<f64> {
        match &self.value {
            Value::Number(n) => n.as_f64(),
            Value::String(s) if s == "inf" => Some(f64::INFINITY),
            _ => None,
        }
    }
}

/// Converts a logical-measure scalar to a [`Quantity`].
pub trait Emit: Scalar {
    fn quantity(&self, unit: &'static str) -> Quantity;
}

impl Emit for f64 {
    fn quantity(&self, unit: &'static str) -> Quantity {
        Quantity::float(*self, unit)
    }
}

impl Emit for Rational {
    fn quantity(&self, unit: &'static str) -> Quantity {
        Quantity {
            value: number(Scalar::to_f64(self)),
            unit,
            exact: Some(format_rational(self)),
        }
    }
}

const PROB: &str = "probability";

/// Output of one command.
#[derive(Debug, Clone, Serialize)]
pub struct CommandResult {
    pub command: &'static str,
    pub inputs: Value,
    pub outputs: Map<String, Value>,
    pub residuals: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub passed: Option<bool>,
}

impl CommandResult {
    fn new(command: &'static str, inputs: Value) -> Self {
        Self {
            command,
            inputs,
            outputs: Map::new(),
            residuals: Map::new(),
            passed: None,
        }
    }

    fn out(&mut self, name: &str, q: Quantity) {
        self.outputs.insert(name.to_string(), json!(q));
    }

    fn out_value(&mut self, name: &str, v: Value) {
        self.outputs.insert(name.to_string(), v);
    }

    fn res(&mut self, name: &str, q: Quantity) {
        self.residuals.insert(name.to_string(), json!(q));
    }

    fn res_float(&mut self, name: &str, r: f64) {
        self.res(name, Quantity::float(r, "residual"));
    }

    /// Output quantity by name.
    pub fn output(&self, name: &str) -> Option<Quantity> {
        self.outputs
            .get(name)
            .and_then(|v| serde_json::from_value::<QuantityOwned>(v.clone()).ok())
            .map(QuantityOwned::into_quantity)
    }

    /// Largest numeric residual; `None` when there are no residuals.
    pub fn max_residual(&self) -> Option<f64> {
        self.residuals
            .values()
            .filter_map(|v| v.get("value").and_then(Value::as_f64))
            .fold(None, |m, r| Some(m.map_or(r, |m: f64| m.max(r))))
    }

    /// Process exit code: 0 on success, 2 when a verification failed.
    pub fn exit_code(&self) -> i32 {
        if self.passed == Some(false) {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("command results serialize")
    }

    /// Human-readable rendering.
    pub fn to_table(&self) -> String {
        let mut s = format!("{}\n", self.command);
        let render = |v: &Value| -> String {
            match v {
                Value::Object(o) if o.contains_key("value") => {
                    let mut t = match &o["value"] {
                        Value::String(x) => x.clone(),
                        other => other.to_string(),
                    };
                    if let Some(Value::String(e)) = o.get("exact") {
                        t = format!("{e} ({t})");
                    }
                    if let Some(Value::String(u)) = o.get("unit") {
                        t = format!("{t} {u}");
                    }
                    t
                }
                Value::String(x) => x.clone(),
                other => other.to_string(),
            }
        };
        for (title, map) in [("outputs", &self.outputs), ("residuals", &self.residuals)] {
            if map.is_empty() {
                continue;
            }
            s.push_str(&format!("  {title}:\n"));
            let width = map.keys().map(|k| k.chars().count()).max().unwrap_or(0);
            for (k, v) in map {
                let pad = width - k.chars().count();
                s.push_str(&format!("    {k}{}  {}\n", " ".repeat(pad), render(v)));
            }
        }
        if let Some(p) = self.passed {
            s.push_str(&format!("  passed: {p}\n"));
        }
        s
    }
}

#[derive(serde::Deserialize)]
struct QuantityOwned {
    value: Value,
    unit: String,
    exact: Option<String>,
}

impl QuantityOwned {
    fn into_quantity(self) -> Quantity {
        let unit: &'static str = match self.unit.as_str() {
            "probability" => "probability",
            "bits" => "bits",
            "nats" => "nats",
            "count" => "count",
            "residual" => "residual",
            _ => "other",
        };
        Quantity {
            value: self.value,
            unit,
            exact: self.exact,
        }
    }
}

fn wants_exact(opts: &Options, texts: &[&str]) -> bool {
    opts.exact || texts.iter().any(|t| t.contains('/'))
}

/// `entropy`: logical and Shannon entropy of a partition (optionally weighted) or a distribution.
pub fn cmd_entropy(
    input: &str,
    weights: Option<&str>,
    force_partition: bool,
    opts: &Options,
) -> Result<CommandResult> {
    let exact = wants_exact(opts, &[input, weights.unwrap_or("")]);
    let is_partition = force_partition || input.contains('|');
    if is_partition {
        let pi: Partition = input.trim().parse()?;
        if exact {
            let w = weights.map(Distribution::parse_exact).transpose()?;
            entropy_of_partition(&pi, w.as_ref(), opts)
        } else {
            let w = weights.map(Distribution::parse).transpose()?;
            entropy_of_partition(&pi, w.as_ref(), opts)
        }
    } else {
        if weights.is_some() {
            return Err(Error::Domain("weights apply only to partition input".into()));
        }
        if exact {
            entropy_of_distribution(&Distribution::parse_exact(input)?, opts)
        } else {
            entropy_of_distribution(&Distribution::parse(input)?, opts)
        }
    }
}

fn dist_echo<T: Emit>(p: &Distribution<T>) -> Value {
    json!(p
        .probs()
        .iter()
        .map(|x| x.quantity(PROB).exact.unwrap_or_else(|| x.to_f64().to_string()))
        .collect::<Vec<_>>())
}

fn entropy_of_partition<T: Emit>(
    pi: &Partition,
    weights: Option<&Distribution<T>>,
    opts: &Options,
) -> Result<CommandResult> {
    let mut inputs = json!({ "partition": pi.to_string(), "n": pi.size() });
    if let Some(w) = weights {
        inputs["weights"] = dist_echo(w);
    }
    let mut r = CommandResult::new("entropy", inputs);
    let h: T = lg::logical_entropy_partition(pi, weights)?;
    let blocks = lg::block_probabilities(pi, weights)?;
    let wf = weights.map(Distribution::to_f64);
    let big_h = sh::shannon_entropy_partition(pi, wf.as_ref())?;
    let rho = T::one() - h.clone();

    r.out("h", h.quantity(PROB));
    r.out("H", opts.bits(big_h));
    r.out("dits", Quantity::count(pi.dit_count() as u128));
    r.out("blocks", Quantity::count(pi.block_count() as u128));
    r.out("identification_probability", rho.quantity(PROB));
    r.out("bits_at_equal_h", opts.bits(sh::dit_to_bit(h.to_f64())?));
    r.out("dits_at_equal_H", Quantity::float(sh::bit_to_dit(big_h)?, PROB));

    let block_form = lg::logical_entropy_blocks(pi, weights)?;
    r.res("h_vs_block_form", h.abs_diff(&block_form).quantity("residual"));
    let rho_form = lg::identification_probability(&blocks);
    r.res("identification_vs_repeat_rate", rho.abs_diff(&rho_form).quantity("residual"));
    let direct = sh::shannon_entropy_dist(&blocks.to_f64());
    r.res_float("H_vs_block_distribution", residual(big_h.bits(), direct.bits()));
    let t = sh::dit_bit_transform(&Compound::Entropy(&blocks.to_f64()))?;
    r.res_float("dit_bit_transform", t.residual);
    Ok(r)
}

fn entropy_of_distribution<T: Emit>(p: &Distribution<T>, opts: &Options) -> Result<CommandResult> {
    let mut r = CommandResult::new("entropy", json!({ "distribution": dist_echo(p) }));
    let h = lg::logical_entropy_dist(p);
    let pf = p.to_f64();
    let big_h = sh::shannon_entropy_dist(&pf);
    let rho = lg::identification_probability(p);
    r.out("h", h.quantity(PROB));
    r.out("H", opts.bits(big_h));
    r.out("identification_probability", rho.quantity(PROB));
    r.out("bits_at_equal_h", opts.bits(sh::dit_to_bit(h.to_f64())?));
    r.out("dits_at_equal_H", Quantity::float(sh::bit_to_dit(big_h)?, PROB));

    r.res("h_plus_identification", (h.clone() + rho).abs_diff(&T::one()).quantity("residual"));
    let q = lg::quadratic_entropy(&pf, &DistanceMatrix::logical(p.len()))?;
    r.res_float("quadratic_entropy_logical_distance", residual(q, h.to_f64()));
    let t = sh::dit_bit_transform(&Compound::Entropy(&pf))?;
    r.res_float("dit_bit_transform", t.residual);
    Ok(r)
}

/// Parses CSV text where `;` may also separate rows.
fn csv_text(s: &str) -> String {
    s.replace(';', "\n")
}

/// `joint`: the comparison table of logical and Shannon quantities for a joint distribution.
pub fn cmd_joint(csv: &str, opts: &Options) -> Result<CommandResult> {
    let text = csv_text(csv);
    if wants_exact(opts, &[&text]) {
        joint_table(&JointDistribution::parse_csv_exact(&text)?, opts)
    } else {
        joint_table(&JointDistribution::parse_csv(&text)?, opts)
    }
}

fn joint_table<T: Emit>(j: &JointDistribution<T>, opts: &Options) -> Result<CommandResult> {
    let (rows, cols) = j.shape();
    let matrix: Vec<Vec<String>> = (0..rows)
        .map(|x| {
            (0..cols)
                .map(|y| {
                    let v = j.get(x, y);
                    v.quantity(PROB).exact.unwrap_or_else(|| v.to_f64().to_string())
                })
                .collect()
        })
        .collect();
    let mut r = CommandResult::new("joint", json!({ "shape": [rows, cols], "matrix": matrix }));

    let (px, py) = (j.marginal_x_dist(), j.marginal_y_dist());
    let hx = lg::logical_entropy_dist(&px);
    let hy = lg::logical_entropy_dist(&py);
    let hxy = lg::joint_logical_entropy(j);
    let h_x_y = lg::logical_conditional_joint(j, Given::Y);
    let h_y_x = lg::logical_conditional_joint(j, Given::X);
    let m = lg::logical_mutual_joint(j);

    let jf = j.to_f64();
    let (pxf, pyf) = (jf.marginal_x_dist(), jf.marginal_y_dist());
    let bx = sh::shannon_entropy_dist(&pxf);
    let by = sh::shannon_entropy_dist(&pyf);
    let bxy = sh::shannon_joint_entropy(&jf);
    let b_x_y = sh::shannon_conditional_joint(&jf, Given::Y);
    let b_y_x = sh::shannon_conditional_joint(&jf, Given::X);
    let i = sh::shannon_mutual_joint(&jf);

    for (name, v) in [
        ("h(x)", &hx),
        ("h(y)", &hy),
        ("h(x,y)", &hxy),
        ("h(x|y)", &h_x_y),
        ("h(y|x)", &h_y_x),
        ("m(x,y)", &m),
    ] {
        r.out(name, v.quantity(PROB));
    }
    for (name, v) in [
        ("H(x)", bx),
        ("H(y)", by),
        ("H(x,y)", bxy),
        ("H(x|y)", b_x_y),
        ("H(y|x)", b_y_x),
        ("I(x,y)", i),
    ] {
        r.out(name, opts.bits(v));
    }
    r.out("independence_residual", j.independence_residual().quantity(PROB));

    let res = |a: &T, b: T| a.abs_diff(&b).quantity("residual");
    r.res("h(x|y) = h(x,y) - h(y)", res(&h_x_y, hxy.clone() - hy.clone()));
    r.res("h(y|x) = h(x,y) - h(x)", res(&h_y_x, hxy.clone() - hx.clone()));
    r.res("m = h(x) + h(y) - h(x,y)", res(&m, hx.clone() + hy.clone() - hxy.clone()));
    r.res(
        "[1-h(x)][1-h(y)] - [1-h(x,y)] - (h(x)h(y) - m)",
        res(
            &((T::one() - hx.clone()) * (T::one() - hy.clone()) - (T::one() - hxy.clone())),
            hx.clone() * hy.clone() - m.clone(),
        ),
    );
    let (pc, pm) = verify::joint_pair_measures(&jf);
    r.res_float("h(x|y) = pair measure", residual(h_x_y.to_f64(), pc));
    r.res_float("m(x,y) = pair measure", residual(m.to_f64(), pm));
    r.res_float("H(x|y) = H(x,y) - H(y)", residual(b_x_y.bits(), bxy.bits() - by.bits()));
    r.res_float("H(y|x) = H(x,y) - H(x)", residual(b_y_x.bits(), bxy.bits() - bx.bits()));
    r.res_float("I = H(x) + H(y) - H(x,y)", residual(i.bits(), bx.bits() + by.bits() - bxy.bits()));
    let kl = sh::kl_divergence(&jf.flattened(), &jf.marginal_product())?;
    r.res_float("I = D(p(x,y) || p(x)p(y))", residual(i.bits(), kl.bits()));
    for (name, c) in [
        ("transform h(x|y) -> H(x|y)", Compound::Conditional(&jf, Given::Y)),
        ("transform m -> I", Compound::Mutual(&jf)),
    ] {
        r.res_float(name, sh::dit_bit_transform(&c)?.residual);
    }
    Ok(r)
}

/// Lattice operation selector for [`cmd_ops`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeOp {
    Join,
    Meet,
    /// `implies A B`: `A` with each of its blocks contained in a block of `B` discretized.
    Implies,
}

impl std::str::FromStr for LatticeOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "join" => Ok(LatticeOp::Join),
            "meet" => Ok(LatticeOp::Meet),
            "implies" | "implication" => Ok(LatticeOp::Implies),
            other => Err(Error::UnknownSelector(other.to_string())),
        }
    }
}

/// `ops`: join, meet or implication of two partitions on the same universe.
pub fn cmd_ops(op: LatticeOp, a: &str, b: &str, opts: &Options) -> Result<CommandResult> {
    let (pa, pb): (Partition, Partition) = (a.trim().parse()?, b.trim().parse()?);
    pa.universe().check_same(pb.universe())?;
    let name = match op {
        LatticeOp::Join => "join",
        LatticeOp::Meet => "meet",
        LatticeOp::Implies => "implies",
    };
    let mut r = CommandResult::new(
        "ops",
        json!({ "operation": name, "a": pa.to_string(), "b": pb.to_string() }),
    );
    let result = match op {
        LatticeOp::Join => join(&pa, &pb)?,
        LatticeOp::Meet => meet(&pa, &pb)?,
        LatticeOp::Implies => implication(&pb, &pa)?,
    };
    let none: Option<&Distribution<Rational>> = None;
    r.out_value("result", json!(result.to_string()));
    r.out("dits", Quantity::count(result.dit_count() as u128));
    r.out("h", lg::logical_entropy_partition(&result, none)?.quantity(PROB));
    r.out("H", opts.bits(sh::shannon_entropy_partition(&result, None)?));

    let holds = |ok: bool| Quantity::float(if ok { 0.0 } else { 1.0 }, "residual");
    match op {
        LatticeOp::Join => {
            r.res("dit(a v b) = dit(a) u dit(b)", holds(result.dit_set() == (&pa.dit_set() | &pb.dit_set())));
        }
        LatticeOp::Meet => {
            let via = crate::lattice::meet_via_interior(&pa, &pb)?;
            r.res("meet routes agree", holds(via == result));
        }
        LatticeOp::Implies => {
            let via = crate::lattice::implication_via_interior(&pb, &pa)?;
            r.res("implication routes agree", holds(via == result));
            r.res("refines(b, a) iff result = 1", holds(refines(&pb, &pa)? == result.is_discrete()));
        }
    }
    Ok(r)
}

/// `compare`: cross entropies and divergences of two distributions.
pub fn cmd_compare(p: &str, q: &str, opts: &Options) -> Result<CommandResult> {
    if wants_exact(opts, &[p, q]) {
        compare(&Distribution::parse_exact(p)?, &Distribution::parse_exact(q)?, opts)
    } else {
        compare(&Distribution::parse(p)?, &Distribution::parse(q)?, opts)
    }
}

fn compare<T: Emit>(p: &Distribution<T>, q: &Distribution<T>, opts: &Options) -> Result<CommandResult> {
    let mut r = CommandResult::new("compare", json!({ "p": dist_echo(p), "q": dist_echo(q) }));
    let cross = lg::logical_cross_entropy(p, q)?;
    let d = lg::logical_divergence(p, q)?;
    let mix = lg::mixing_entropy(p, q)?;
    let (pf, qf) = (p.to_f64(), q.to_f64());
    let h_pq = sh::shannon_cross_entropy(&pf, &qf)?;
    let h_qp = sh::shannon_cross_entropy(&qf, &pf)?;
    let d_pq = sh::kl_divergence(&pf, &qf)?;
    let d_qp = sh::kl_divergence(&qf, &pf)?;
    let hs = sh::symmetrized_cross_entropy(&pf, &qf)?;
    let ds = sh::symmetrized_kl(&pf, &qf)?;

    r.out("h(p||q)", cross.quantity(PROB));
    r.out("H(p||q)", opts.bits(h_pq));
    r.out("H(q||p)", opts.bits(h_qp));
    r.out("H_s(p||q)", opts.bits(hs));
    r.out("D(p||q)", opts.bits(d_pq));
    r.out("D(q||p)", opts.bits(d_qp));
    r.out("D_s(p||q)", opts.bits(ds));
    r.out("d(p||q)", d.quantity(PROB));
    r.out("h((p+q)/2)", mix.h_mix.quantity(PROB));
    r.out("[h(p)+h(q)]/2", mix.mean_h.quantity(PROB));
    r.out_value("chain h(p||q) >= h((p+q)/2)", json!(mix.cross >= mix.h_mix));
    r.out_value("chain h((p+q)/2) >= [h(p)+h(q)]/2", json!(mix.h_mix >= mix.mean_h));

    let jensen = lg::jensen_difference(p, q)?;
    r.res("d = h(p||q) - [h(p)+h(q)]/2", d.abs_diff(&jensen).quantity("residual"));
    r.res("h((p+q)/2) = h(p||q)/2 + [h(p)+h(q)]/4", mix.identity_residual().quantity("residual"));
    let hp = sh::shannon_entropy_dist(&pf).bits();
    let hq = sh::shannon_entropy_dist(&qf).bits();
    r.res_float("D(p||q) = H(p||q) - H(p)", residual(d_pq.bits(), h_pq.bits() - hp));
    r.res_float("D_s = H_s - [H(p)+H(q)]/2", residual(ds.bits(), hs.bits() - 0.5 * (hp + hq)));
    r.res_float(
        "transform d -> D_s",
        sh::dit_bit_transform(&Compound::Divergence(&pf, &qf))?.residual,
    );
    r.res_float(
        "transform h(p||q) -> H(p||q)",
        sh::dit_bit_transform(&Compound::Cross(&pf, &qf))?.residual,
    );
    Ok(r)
}

/// `verify`: every identity suite; `passed` is false (exit 2) if any identity fails.
pub fn cmd_verify(max_n: usize, seed: u64, trials: u64) -> Result<CommandResult> {
    let report = verify::run_all(max_n, seed, trials)?;
    let mut r = CommandResult::new("verify", json!({ "max_n": max_n, "seed": seed, "trials": trials }));
    r.out("pairs_checked", Quantity::count(report.pairs_checked as u128));
    r.out("identities", Quantity::count(report.identities.len() as u128));
    for c in &report.identities {
        r.out_value(
            &c.name,
            json!({ "passed": c.passed, "checks": c.checks, "failures": c.failures, "tolerance": c.tolerance }),
        );
        r.res_float(&c.name, c.worst_residual);
    }
    r.passed = Some(report.passed);
    Ok(r)
}

/// `lattice`: Bell count, and for small `n` the Hasse diagram of the refinement order.
pub fn cmd_lattice(n: usize, dot: bool) -> Result<CommandResult> {
    if n == 0 || n > DEFAULT_LIMIT {
        return Err(Error::LimitExceeded {
            n,
            limit: DEFAULT_LIMIT,
        });
    }
    let mut r = CommandResult::new("lattice", json!({ "n": n }));
    r.out("partitions", Quantity::count(bell_number(n)));
    if n > LATTICE_EDGE_LIMIT {
        return Ok(r);
    }
    let all = enumerate_partitions(n)?;
    let mut edges = Vec::new();
    for lower in &all {
        for upper in &all {
            if upper.block_count() == lower.block_count() + 1 && refines(lower, upper)? {
                edges.push((lower.to_string(), upper.to_string()));
            }
        }
    }
    r.out("edges", Quantity::count(edges.len() as u128));
    r.out_value("cover_relation", json!(edges.iter().map(|(a, b)| [a, b]).collect::<Vec<_>>()));
    r.res(
        "partitions enumerated = Bell(n)",
        Quantity::float((all.len() as f64 - bell_number(n) as f64).abs(), "residual"),
    );
    if dot {
        let mut g = String::from("digraph partitions {\n  rankdir=BT;\n");
        for p in &all {
            g.push_str(&format!("  \"{p}\";\n"));
        }
        for (a, b) in &edges {
            g.push_str(&format!("  \"{a}\" -> \"{b}\";\n"));
        }
        g.push_str("}\n");
        r.out_value("dot", json!(g));
    }
    Ok(r)
}

/// Sampling experiment selector for [`cmd_sample`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleKind {
    /// Fraction of draw pairs that differ.
    Pairs,
    /// Average of `1 − Pr(uⱼ)` along one sequence.
    SeqAvg,
    /// Per-letter surprisal of sampled messages.
    Typical,
}

impl std::str::FromStr for SampleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pairs" => Ok(SampleKind::Pairs),
            "seqavg" => Ok(SampleKind::SeqAvg),
            "typical" => Ok(SampleKind::Typical),
            other => Err(Error::UnknownSelector(other.to_string())),
        }
    }
}

/// Counts for [`cmd_sample`].
#[derive(Debug, Clone, Copy)]
pub struct SampleParams {
    /// Pair count (`pairs`) or sequence length (`seqavg`).
    pub trials: u64,
    /// Message length for `typical`.
    pub length: u64,
    /// Number of messages for `typical`.
    pub samples: u64,
    pub seed: u64,
}

/// `sample`: a seeded Monte Carlo estimate with its analytic target.
pub fn cmd_sample(kind: SampleKind, p: &str, params: SampleParams, opts: &Options) -> Result<CommandResult> {
    let dist = Distribution::parse(p)?;
    if params.trials == 0 || params.length == 0 || params.samples == 0 {
        return Err(Error::Domain("counts must be positive".into()));
    }
    let (name, report, target, unit, scale) = match kind {
        SampleKind::Pairs => (
            "pairs",
            stochastic::pair_distinction_rate(&dist, params.trials, params.seed),
            lg::logical_entropy_dist(&dist),
            PROB,
            1.0,
        ),
        SampleKind::SeqAvg => (
            "seqavg",
            stochastic::average_difference_rate(&dist, params.trials, params.seed),
            lg::logical_entropy_dist(&dist),
            PROB,
            1.0,
        ),
        SampleKind::Typical => {
            let base = opts.base();
            let scale = match base {
                Base::Bits => 1.0,
                Base::Nats => std::f64::consts::LN_2,
            };
            (
                "typical",
                stochastic::typical_message_stats(&dist, params.length, params.samples, params.seed),
                sh::shannon_entropy_dist(&dist).bits(),
                base.unit(),
                scale,
            )
        }
    };
    let mut inputs = json!({ "kind": name, "distribution": dist_echo(&dist), "seed": params.seed });
    match kind {
        SampleKind::Typical => {
            inputs["length"] = json!(params.length);
            inputs["samples"] = json!(params.samples);
        }
        _ => inputs["trials"] = json!(params.trials),
    }
    let mut r = CommandResult::new("sample", inputs);
    r.out("estimate", Quantity::float(report.estimate * scale, unit));
    r.out("target", Quantity::float(target * scale, unit));
    r.out("abs_error", Quantity::float((report.estimate - target).abs() * scale, unit));
    r.out("std_error", Quantity::float(report.std_error * scale, unit));
    r.out("trials", Quantity::count(report.trials as u128));
    r.out_value("seed", json!(report.seed));
    if kind == SampleKind::Typical {
        r.out(
            "typical_count_log2",
            Quantity::float(stochastic::typical_count_log(&dist, params.length), "bits"),
        );
    }
    Ok(r)
}

/// `stirling`: exact multinomial entropy against the two- and three-term approximations.
pub fn cmd_stirling(sizes: &str, opts: &Options) -> Result<CommandResult> {
    let mut parsed = Vec::new();
    let mut pos = 0;
    for tok in sizes.split(',') {
        let t = tok.trim();
        let v = t.parse::<u64>().map_err(|_| crate::error::Error::Parse {
            position: pos + tok.len() - tok.trim_start().len(),
            message: format!("invalid block size `{t}`"),
        })?;
        parsed.push(v);
        pos += tok.len() + 1;
    }
    let report = sh::stirling_entropy(&parsed)?;
    let (report, unit) = match opts.base {
        Some(Base::Bits) => (report.in_bits(), "bits"),
        _ => (report, "nats"),
    };
    let mut r = CommandResult::new("stirling", json!({ "block_sizes": parsed, "N": report.total }));
    r.out("S_exact", Quantity::float(report.s_exact, unit));
    r.out("approx2", Quantity::float(report.approx2, unit));
    r.out("approx3", Quantity::float(report.approx3, unit));
    r.out("err2", Quantity::float(report.err2, unit));
    r.out("err3", Quantity::float(report.err3, unit));
    r.out_value("approx3_closer", json!(report.err3 < report.err2));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn val(r: &CommandResult, k: &str) -> f64 {
        r.output(k).and_then(|q| q.as_f64()).unwrap_or_else(|| panic!("missing {k}"))
    }

    fn exact(r: &CommandResult, k: &str) -> String {
        r.output(k).and_then(|q| q.exact).unwrap_or_else(|| panic!("no exact {k}"))
    }

    #[test]
    fn entropy_partition() {
        let r = cmd_entropy("0,1|2", None, false, &Options { exact: true, ..Default::default() }).unwrap();
        assert_eq!(exact(&r, "h"), "4/9");
        assert!((val(&r, "H") - 0.9182958340544896).abs() < 1e-12);
        assert_eq!(val(&r, "dits"), 4.0);
        assert_eq!(r.max_residual(), Some(0.0));

        let r = cmd_entropy("0|1|2|3", None, false, &Options::default()).unwrap();
        assert_eq!(val(&r, "h"), 0.75);
        assert!((val(&r, "H") - 2.0).abs() < 1e-12);
        assert!((val(&r, "bits_at_equal_h") - 2.0).abs() < 1e-12);
        assert!(r.max_residual().unwrap() < 1e-9);
    }

    #[test]
    fn entropy_distribution() {
        let r = cmd_entropy("1", None, false, &Options::default()).unwrap();
        assert_eq!((val(&r, "h"), val(&r, "H")), (0.0, 0.0));
        let r = cmd_entropy("1/2,1/3,1/6", None, false, &Options::default()).unwrap();
        assert_eq!(exact(&r, "h"), "11/18");
        assert_eq!(exact(&r, "identification_probability"), "7/18");
        let r = cmd_entropy("0,1,2", None, true, &Options::default()).unwrap();
        assert_eq!(val(&r, "h"), 0.0);
        assert!(cmd_entropy("0.5,0.5", Some("1"), false, &Options::default()).is_err());
    }

    #[test]
    fn entropy_weighted_and_nats() {
        let opts = Options { base: Some(Base::Nats), exact: false };
        let r = cmd_entropy("0,1|2", Some("1/2,1/4,1/4"), false, &opts).unwrap();
        assert_eq!(exact(&r, "h"), "3/8");
        assert_eq!(r.output("H").unwrap().unit, "nats");
        assert!(matches!(
            cmd_entropy("0,1|2", Some("1/2,1/2"), false, &opts),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn joint_examples() {
        let opts = Options::default();
        let r = cmd_joint("1/4,1/4;1/4,1/4", &opts).unwrap();
        assert_eq!(val(&r, "I(x,y)"), 0.0);
        assert_eq!(exact(&r, "m(x,y)"), "1/4");
        assert_eq!(exact(&r, "independence_residual"), "0");
        assert!(r.max_residual().unwrap() < 1e-12);

        let r = cmd_joint("1/2,0\n0,1/2", &opts).unwrap();
        assert!((val(&r, "I(x,y)") - 1.0).abs() < 1e-12);
        assert_eq!(exact(&r, "m(x,y)"), "1/2");
        assert_eq!(exact(&r, "h(x|y)"), "0");
        assert_eq!(val(&r, "H(x|y)"), 0.0);

        let r = cmd_joint("0,1\n0,0", &opts).unwrap();
        for k in ["h(x)", "h(y)", "h(x,y)", "m(x,y)", "H(x)", "H(x,y)", "I(x,y)"] {
            assert_eq!(val(&r, k), 0.0, "{k}");
        }
        assert!(cmd_joint("0.5,-0.5\n0.5,0.5", &opts).is_err());
        assert!(cmd_joint("0.5,0.5\n0.5,0.5", &opts).is_err());
    }

    #[test]
    fn ops_examples() {
        let o = Options::default();
        let r = cmd_ops(LatticeOp::Join, "0,1|2,3", "0,2|1,3", &o).unwrap();
        assert_eq!(r.outputs["result"], "0|1|2|3");
        let r = cmd_ops(LatticeOp::Meet, "0,1|2,3", "0,2|1,3", &o).unwrap();
        assert_eq!(r.outputs["result"], "0,1,2,3");
        let r = cmd_ops(LatticeOp::Implies, "0,1|2,3", "0,1,2|3", &o).unwrap();
        assert_eq!(r.outputs["result"], "0|1|2,3");
        assert_eq!(r.max_residual(), Some(0.0));
        assert!(matches!(
            cmd_ops(LatticeOp::Join, "0|1", "0|1|2", &o),
            Err(Error::UniverseMismatch { .. })
        ));
        assert!("xor".parse::<LatticeOp>().is_err());
    }

    #[test]
    fn compare_examples() {
        let o = Options::default();
        let r = cmd_compare("0.2,0.8", "0.2,0.8", &o).unwrap();
        for k in ["D(p||q)", "D(q||p)", "D_s(p||q)", "d(p||q)"] {
            assert_eq!(val(&r, k), 0.0, "{k}");
        }
        let r = cmd_compare("1,0", "0,1", &o).unwrap();
        assert_eq!(val(&r, "d(p||q)"), 1.0);
        assert_eq!(val(&r, "h(p||q)"), 1.0);
        assert_eq!(r.outputs["D(p||q)"]["value"], "inf");

        let r = cmd_compare("1/2,1/2", "1/4,3/4", &o).unwrap();
        assert_eq!(exact(&r, "d(p||q)"), "1/16");
        assert!((val(&r, "D(p||q)") - 0.20751874963942185).abs() < 1e-12);
        assert!((val(&r, "D_s(p||q)") - 0.1981203125901445).abs() < 1e-12);
        assert_eq!(r.outputs["chain h(p||q) >= h((p+q)/2)"], true);
        assert!(r.max_residual().unwrap() < 1e-12);
        assert!(matches!(cmd_compare("1", "0.5,0.5", &o), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn verify_counts() {
        let r = cmd_verify(4, 1, 50).unwrap();
        assert_eq!(val(&r, "pairs_checked"), 225.0);
        assert_eq!(r.exit_code(), 0);
        assert!(matches!(cmd_verify(7, 1, 50), Err(Error::LimitExceeded { n: 7, .. })));
    }

    #[test]
    fn lattice_examples() {
        let r = cmd_lattice(3, true).unwrap();
        assert_eq!(val(&r, "partitions"), 5.0);
        assert_eq!(val(&r, "edges"), 6.0);
        assert!(r.outputs["dot"].as_str().unwrap().contains("\"0,1,2\" -> \"0,1|2\""));
        let r = cmd_lattice(1, false).unwrap();
        assert_eq!((val(&r, "partitions"), val(&r, "edges")), (1.0, 0.0));
        assert_eq!(val(&cmd_lattice(5, false).unwrap(), "partitions"), 52.0);
        let r = cmd_lattice(12, false).unwrap();
        assert_eq!(val(&r, "partitions"), 4_213_597.0);
        assert!(r.output("edges").is_none());
        assert!(cmd_lattice(13, false).is_err());
        assert!(cmd_lattice(0, false).is_err());
    }

    #[test]
    fn sample_examples() {
        let o = Options::default();
        let params = SampleParams { trials: 100_000, length: 1000, samples: 10, seed: 42 };
        let r = cmd_sample(SampleKind::Pairs, "1/2,1/2", params, &o).unwrap();
        assert_eq!(val(&r, "target"), 0.5);
        assert!(val(&r, "abs_error") < 0.01);
        let r = cmd_sample(SampleKind::Typical, "1/3,1/3,1/3", params, &o).unwrap();
        assert!((val(&r, "estimate") - 3f64.log2()).abs() < 1e-12);
        let r = cmd_sample(SampleKind::SeqAvg, "0,1", params, &o).unwrap();
        assert_eq!(val(&r, "estimate"), 0.0);
        let zero = SampleParams { trials: 0, ..params };
        assert!(cmd_sample(SampleKind::Pairs, "1", zero, &o).is_err());
        assert!("triples".parse::<SampleKind>().is_err());
    }

    #[test]
    fn stirling_examples() {
        let o = Options::default();
        let r = cmd_stirling("6,6", &o).unwrap();
        assert!((val(&r, "S_exact") - 924f64.ln() / 12.0).abs() < 1e-12);
        assert_eq!(r.output("S_exact").unwrap().unit, "nats");
        let r = cmd_stirling("1", &o).unwrap();
        for k in ["S_exact", "approx2", "approx3", "err2", "err3"] {
            assert_eq!(val(&r, k), 0.0, "{k}");
        }
        let r = cmd_stirling("250,250,250,250", &o).unwrap();
        assert_eq!(r.outputs["approx3_closer"], true);
        let bits = cmd_stirling("6,6", &Options { base: Some(Base::Bits), exact: false }).unwrap();
        assert!((val(&bits, "approx2") - 1.0).abs() < 1e-12);
        assert!(matches!(cmd_stirling("3,x", &o), Err(Error::Parse { position: 2, .. })));
    }

    #[test]
    fn table_rendering() {
        let r = cmd_entropy("0,1|2", None, false, &Options { exact: true, ..Default::default() }).unwrap();
        let t = r.to_table();
        assert!(t.starts_with("entropy\n"));
        assert!(t.contains("4/9 ("));
    }
}
