//! Finite probability vectors and multi-coordinate probability tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance on `|sum - 1|` when validating probability data.
pub const PROB_SUM_TOLERANCE: f64 = 1e-12;

fn check_entries(probs: &[f64]) -> Result<()> {
    if probs.is_empty() {
        return Err(Error::InvalidDistribution(
            "probability vector is empty".into(),
        ));
    }
    for (i, &p) in probs.iter().enumerate() {
        if !p.is_finite() || p < 0.0 {
            return Err(Error::InvalidDistribution(format!(
                "entry {i} is {p}, expected a finite nonnegative real"
            )));
        }
    }
    Ok(())
}

fn check_normalized(probs: &[f64]) -> Result<()> {
    let sum: f64 = probs.iter().sum();
    if (sum - 1.0).abs() > PROB_SUM_TOLERANCE {
        return Err(Error::InvalidDistribution(format!(
            "entries sum to {sum}, expected 1 within {PROB_SUM_TOLERANCE:e}"
        )));
    }
    Ok(())
}

fn renormalize(probs: &mut [f64]) -> Result<()> {
    let sum: f64 = probs.iter().sum();
    if sum <= 0.0 {
        return Err(Error::InvalidDistribution(
            "cannot renormalize: total mass is zero".into(),
        ));
    }
    for p in probs.iter_mut() {
        *p /= sum;
    }
    Ok(())
}

/// A probability mass function over a finite set of outcomes.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteDistribution {
    probs: Vec<f64>,
    labels: Option<Vec<String>>,
}

impl DiscreteDistribution {
    /// Validates entries (nonnegative, summing to 1 within [`PROB_SUM_TOLERANCE`]).
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        check_entries(&probs)?;
        check_normalized(&probs)?;
        Ok(Self {
            probs,
            labels: None,
        })
    }

    /// Accepts any nonnegative vector with positive total mass and rescales it.
    pub fn renormalized(mut probs: Vec<f64>) -> Result<Self> {
        check_entries(&probs)?;
        renormalize(&mut probs)?;
        Ok(Self {
            probs,
            labels: None,
        })
    }

    /// Attaches outcome identifiers; the length must match.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.probs.len() {
            return Err(Error::Argument(format!(
                "{} labels for {} outcomes",
                labels.len(),
                self.probs.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Uniform distribution over `n` outcomes.
    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument(
                "uniform distribution over 0 outcomes".into(),
            ));
        }
        Ok(Self {
            probs: vec![1.0 / n as f64; n],
            labels: None,
        })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Parses the wire format: a bare JSON array of reals.
    pub fn from_json_str(s: &str, renormalize: bool) -> Result<Self> {
        let probs: Vec<f64> = serde_json::from_str(s)
            .map_err(|e| Error::Ingestion(format!("distribution JSON: {e}")))?;
        if renormalize {
            Self::renormalized(probs)
        } else {
            Self::new(probs)
        }
    }
}

/// Raw wire form of a [`JointTable`]: `{"shape": [...], "probs": [...]}`.
#[derive(Debug, Serialize, Deserialize)]
struct JointTableWire {
    shape: Vec<usize>,
    probs: Vec<f64>,
}

/// A joint probability table over a product alphabet, stored row-major.
///
/// Coordinate `d` ranges over `0..shape[d]`; the flat index of a cell is the
/// usual row-major mixed-radix encoding of its coordinate values.
#[derive(Debug, Clone, PartialEq)]
pub struct JointTable {
    shape: Vec<usize>,
    probs: Vec<f64>,
}

impl JointTable {
    pub fn new(shape: Vec<usize>, probs: Vec<f64>) -> Result<Self> {
        Self::build(shape, probs, false)
    }

    /// As [`JointTable::new`] but rescales any positive total mass to 1.
    pub fn renormalized(shape: Vec<usize>, probs: Vec<f64>) -> Result<Self> {
        Self::build(shape, probs, true)
    }

    fn build(shape: Vec<usize>, mut probs: Vec<f64>, rescale: bool) -> Result<Self> {
        if shape.is_empty() || shape.contains(&0) {
            return Err(Error::Argument(format!(
                "table shape must be nonempty with positive sizes, got {shape:?}"
            )));
        }
        let cells: usize = shape.iter().product();
        if cells != probs.len() {
            return Err(Error::Argument(format!(
                "shape {shape:?} implies {cells} cells but {} provided",
                probs.len()
            )));
        }
        check_entries(&probs)?;
        if rescale {
            renormalize(&mut probs)?;
        } else {
            check_normalized(&probs)?;
        }
        Ok(Self { shape, probs })
    }

    pub(crate) fn from_validated(shape: Vec<usize>, probs: Vec<f64>) -> Self {
        debug_assert_eq!(shape.iter().product::<usize>(), probs.len());
        Self { shape, probs }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn num_coords(&self) -> usize {
        self.shape.len()
    }

    /// Checks that `coords` are distinct, nonempty, and in range.
    pub(crate) fn check_coords(&self, coords: &[usize]) -> Result<()> {
        if coords.is_empty() {
            return Err(Error::Argument("empty coordinate set".into()));
        }
        let mut seen = vec![false; self.shape.len()];
        for &c in coords {
            if c >= self.shape.len() {
                return Err(Error::Argument(format!(
                    "coordinate {c} out of range for a {}-coordinate table",
                    self.shape.len()
                )));
            }
            if seen[c] {
                return Err(Error::Argument(format!("coordinate {c} repeated")));
            }
            seen[c] = true;
        }
        Ok(())
    }

    /// Marginal table over `coords`, in the order given.
    pub fn marginalize(&self, coords: &[usize]) -> Result<JointTable> {
        self.check_coords(coords)?;
        let out_shape: Vec<usize> = coords.iter().map(|&c| self.shape[c]).collect();
        let out_len: usize = out_shape.iter().product();
        let mut out = vec![0.0; out_len];

        // Row-major strides in the source and in the target.
        let src_strides = strides(&self.shape);
        let dst_strides = strides(&out_shape);

        for (flat, &p) in self.probs.iter().enumerate() {
            if p == 0.0 {
                continue;
            }
            let mut dst = 0;
            for (k, &c) in coords.iter().enumerate() {
                let coord_value = (flat / src_strides[c]) % self.shape[c];
                dst += coord_value * dst_strides[k];
            }
            out[dst] += p;
        }
        Ok(JointTable::from_validated(out_shape, out))
    }

    /// Replaces the values of one coordinate by blocks of a partition:
    /// block `b` of the new table accumulates every cell whose `coord` value
    /// lies in `partition[b]`. The partition must cover `0..shape[coord]`
    /// exactly once, with no empty blocks.
    pub fn merge_coordinate_values(
        &self,
        coord: usize,
        partition: &[Vec<usize>],
    ) -> Result<JointTable> {
        if coord >= self.shape.len() {
            return Err(Error::Argument(format!(
                "coordinate {coord} out of range for a {}-coordinate table",
                self.shape.len()
            )));
        }
        let size = self.shape[coord];
        let mut block_of = vec![usize::MAX; size];
        for (b, block) in partition.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Argument(format!("partition block {b} is empty")));
            }
            for &v in block {
                if v >= size {
                    return Err(Error::Argument(format!(
                        "partition value {v} out of range for coordinate of size {size}"
                    )));
                }
                if block_of[v] != usize::MAX {
                    return Err(Error::Precondition(format!(
                        "value {v} appears in more than one partition block"
                    )));
                }
                block_of[v] = b;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::Precondition(format!(
                "value {v} of coordinate {coord} is not covered by the partition"
            )));
        }

        let mut out_shape = self.shape.clone();
        out_shape[coord] = partition.len();
        let out_len: usize = out_shape.iter().product();
        let mut out = vec![0.0; out_len];

        let src_strides = strides(&self.shape);
        let dst_strides = strides(&out_shape);
        for (flat, &p) in self.probs.iter().enumerate() {
            if p == 0.0 {
                continue;
            }
            let mut dst = 0;
            for d in 0..self.shape.len() {
                let v = (flat / src_strides[d]) % self.shape[d];
                let v = if d == coord { block_of[v] } else { v };
                dst += v * dst_strides[d];
            }
            out[dst] += p;
        }
        Ok(JointTable::from_validated(out_shape, out))
    }

    /// Parses the wire format: `{"shape": [...], "probs": [...]}`.
    pub fn from_json_str(s: &str, renormalize: bool) -> Result<Self> {
        let wire: JointTableWire =
            serde_json::from_str(s).map_err(|e| Error::Ingestion(format!("table JSON: {e}")))?;
        if renormalize {
            Self::renormalized(wire.shape, wire.probs)
        } else {
            Self::new(wire.shape, wire.probs)
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&JointTableWire {
            shape: self.shape.clone(),
            probs: self.probs.clone(),
        })
        .expect("table serialization cannot fail")
    }
}

/// Row-major strides of a shape vector.
pub(crate) fn strides(shape: &[usize]) -> Vec<usize> {
    let mut s = vec![1; shape.len()];
    for d in (0..shape.len().saturating_sub(1)).rev() {
        s[d] = s[d + 1] * shape[d + 1];
    }
    s
}
