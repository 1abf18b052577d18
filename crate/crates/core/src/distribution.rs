//! Finite probability distributions, joint distributions and distance matrices,
//! with their text/CSV input formats.

use crate::error::{parse_err, Error, Result};
use crate::scalar::{parse_number, Number, Rational, Scalar};

/// Inputs whose sum lies within this distance of 1 are renormalized; others are rejected.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

fn normalize<T: Scalar>(values: Vec<T>) -> Result<Vec<T>> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    for (index, v) in values.iter().enumerate() {
        let f = v.to_f64();
        if v.is_negative() || f.is_nan() {
            return Err(Error::NegativeProbability { index, value: f });
        }
    }
    let sum: T = values.iter().cloned().sum();
    let s = sum.to_f64();
    if !((s - 1.0).abs() <= NORMALIZATION_TOLERANCE) {
        return Err(Error::Normalization { sum: s });
    }
    if sum.is_one() {
        Ok(values)
    } else {
        Ok(values.into_iter().map(|v| v / sum.clone()).collect())
    }
}

/// A probability vector `p = (p₁, …, pₙ)`. Zero entries are kept.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution<T = f64> {
    probs: Vec<T>,
}

impl<T: Scalar> Distribution<T> {
    pub fn new(probs: Vec<T>) -> Result<Self> {
        Ok(Self {
            probs: normalize(probs)?,
        })
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        Ok(Self {
            probs: vec![T::ratio(1, n as u64); n],
        })
    }

    /// All mass on outcome `at`.
    pub fn point_mass(n: usize, at: usize) -> Result<Self> {
        if at >= n {
            return Err(Error::OutOfRange { element: at, size: n });
        }
        let mut probs = vec![T::zero(); n];
        probs[at] = T::one();
        Ok(Self { probs })
    }

    pub fn probs(&self) -> &[T] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn to_f64(&self) -> Distribution<f64> {
        Distribution {
            probs: self.probs.iter().map(Scalar::to_f64).collect(),
        }
    }

    /// Pointwise average `(p + q) / 2`.
    pub fn mixture(&self, other: &Self) -> Result<Self> {
        check_len(self.len(), other.len())?;
        let two = T::one() + T::one();
        Ok(Self {
            probs: self
                .probs
                .iter()
                .zip(&other.probs)
                .map(|(a, b)| (a.clone() + b.clone()) / two.clone())
                .collect(),
        })
    }
}

impl Distribution<f64> {
    /// Parses `0.5, 0.25, 1/4`.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(parse_list(s)?.into_iter().map(|n| n.value).collect())
    }
}

impl Distribution<Rational> {
    pub fn parse_exact(s: &str) -> Result<Self> {
        Self::new(parse_list(s)?.into_iter().map(|n| n.exact).collect())
    }
}

pub(crate) fn check_len(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::SizeMismatch {
            expected: a,
            found: b,
        })
    }
}

/// Parses a comma-separated list of numbers, tracking positions for errors.
pub fn parse_list(s: &str) -> Result<Vec<Number>> {
    parse_list_at(s, 0)
}

fn parse_list_at(s: &str, offset: usize) -> Result<Vec<Number>> {
    let mut out = Vec::new();
    let mut pos = offset;
    for tok in s.split(',') {
        out.push(parse_number(tok, pos)?);
        pos += tok.len() + 1;
    }
    Ok(out)
}

/// Parses a CSV matrix of numbers; blank lines and `#` comments are skipped.
pub fn parse_matrix(s: &str) -> Result<Vec<Vec<Number>>> {
    let mut rows = Vec::new();
    let mut offset = 0;
    for line in s.split('\n') {
        let content = line.trim_end_matches('\r');
        let trimmed = content.trim();
        if !trimmed.is_empty() && !trimmed.starts_with('#') {
            let row = parse_list_at(content, offset)?;
            if let Some(first) = rows.first() {
                let first: &Vec<Number> = first;
                if first.len() != row.len() {
                    return Err(parse_err(
                        offset,
                        format!("row has {} columns, expected {}", row.len(), first.len()),
                    ));
                }
            }
            rows.push(row);
        }
        offset += line.len() + 1;
    }
    if rows.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(rows)
}

/// Which variable a conditional quantity conditions on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Given {
    /// `·(x | y)`
    Y,
    /// `·(y | x)`
    X,
}

/// A probability matrix `p(x, y)`: rows index `x`, columns index `y`.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDistribution<T = f64> {
    rows: usize,
    cols: usize,
    cells: Vec<T>,
    marginal_x: Vec<T>,
    marginal_y: Vec<T>,
}

impl<T: Scalar> JointDistribution<T> {
    pub fn new(matrix: Vec<Vec<T>>) -> Result<Self> {
        let rows = matrix.len();
        if rows == 0 || matrix[0].is_empty() {
            return Err(Error::EmptyInput);
        }
        let cols = matrix[0].len();
        if let Some(bad) = matrix.iter().find(|r| r.len() != cols) {
            return Err(Error::SizeMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        let cells = normalize(matrix.into_iter().flatten().collect())?;
        Ok(Self::from_cells(rows, cols, cells))
    }

    fn from_cells(rows: usize, cols: usize, cells: Vec<T>) -> Self {
        let marginal_x = (0..rows)
            .map(|x| cells[x * cols..(x + 1) * cols].iter().cloned().sum())
            .collect();
        let marginal_y = (0..cols)
            .map(|y| (0..rows).map(|x| cells[x * cols + y].clone()).sum())
            .collect();
        Self {
            rows,
            cols,
            cells,
            marginal_x,
            marginal_y,
        }
    }

    /// The product joint `p(x)·q(y)`.
    pub fn product(px: &Distribution<T>, py: &Distribution<T>) -> Self {
        let cells = px
            .probs()
            .iter()
            .flat_map(|a| py.probs().iter().map(move |b| a.clone() * b.clone()))
            .collect();
        Self::from_cells(px.len(), py.len(), cells)
    }

    /// `(|X|, |Y|)`
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> &T {
        &self.cells[x * self.cols + y]
    }

    /// Row-major cells.
    pub fn cells(&self) -> &[T] {
        &self.cells
    }

    pub fn marginal_x(&self) -> &[T] {
        &self.marginal_x
    }

    pub fn marginal_y(&self) -> &[T] {
        &self.marginal_y
    }

    pub fn marginal_x_dist(&self) -> Distribution<T> {
        Distribution {
            probs: self.marginal_x.clone(),
        }
    }

    pub fn marginal_y_dist(&self) -> Distribution<T> {
        Distribution {
            probs: self.marginal_y.clone(),
        }
    }

    /// The cells as one distribution over `X×Y`.
    pub fn flattened(&self) -> Distribution<T> {
        Distribution {
            probs: self.cells.clone(),
        }
    }

    /// Swaps the roles of `x` and `y`.
    pub fn transpose(&self) -> Self {
        let cells = (0..self.cols)
            .flat_map(|y| (0..self.rows).map(move |x| (x, y)))
            .map(|(x, y)| self.get(x, y).clone())
            .collect();
        Self::from_cells(self.cols, self.rows, cells)
    }

    /// `p(x)·p(y)` as a distribution over `X×Y`, row-major.
    pub fn marginal_product(&self) -> Distribution<T> {
        Distribution {
            probs: self
                .marginal_x
                .iter()
                .flat_map(|a| self.marginal_y.iter().map(move |b| a.clone() * b.clone()))
                .collect(),
        }
    }

    /// `max |p(x,y) − p(x)p(y)|`; zero exactly for independent joints.
    pub fn independence_residual(&self) -> T {
        self.cells
            .iter()
            .zip(self.marginal_product().probs())
            .map(|(a, b)| a.abs_diff(b))
            .fold(T::zero(), |m, d| if d > m { d } else { m })
    }

    pub fn to_f64(&self) -> JointDistribution<f64> {
        JointDistribution::from_cells(
            self.rows,
            self.cols,
            self.cells.iter().map(Scalar::to_f64).collect(),
        )
    }
}

impl JointDistribution<f64> {
    pub fn parse_csv(s: &str) -> Result<Self> {
        Self::new(
            parse_matrix(s)?
                .into_iter()
                .map(|r| r.into_iter().map(|n| n.value).collect())
                .collect(),
        )
    }
}

impl JointDistribution<Rational> {
    pub fn parse_csv_exact(s: &str) -> Result<Self> {
        Self::new(
            parse_matrix(s)?
                .into_iter()
                .map(|r| r.into_iter().map(|n| n.exact).collect())
                .collect(),
        )
    }
}

/// Symmetric non-negative distances with a zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<f64>,
}

impl DistanceMatrix {
    pub fn new(matrix: Vec<Vec<f64>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        if let Some(r) = matrix.iter().find(|r| r.len() != n) {
            return Err(Error::InvalidDistance(format!(
                "matrix is not square: row of length {} in a {n}-row matrix",
                r.len()
            )));
        }
        for i in 0..n {
            if matrix[i][i] != 0.0 {
                return Err(Error::InvalidDistance(format!("nonzero diagonal at {i}")));
            }
            for j in 0..n {
                let v = matrix[i][j];
                if !(v >= 0.0) {
                    return Err(Error::InvalidDistance(format!("negative distance at ({i}, {j})")));
                }
                if v != matrix[j][i] {
                    return Err(Error::InvalidDistance(format!("asymmetric at ({i}, {j})")));
                }
            }
        }
        Ok(Self {
            n,
            d: matrix.into_iter().flatten().collect(),
        })
    }

    /// The logical distance `1 − δᵢⱼ`.
    pub fn logical(n: usize) -> Self {
        Self {
            n,
            d: (0..n * n).map(|k| if k / n == k % n { 0.0 } else { 1.0 }).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.d[i * self.n + j]
    }

    pub fn parse_csv(s: &str) -> Result<Self> {
        Self::new(
            parse_matrix(s)?
                .into_iter()
                .map(|r| r.into_iter().map(|n| n.value).collect())
                .collect(),
        )
    }
}
