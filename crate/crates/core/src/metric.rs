//! Validated finite metric spaces and the elementary quantities built on them.
//!
//! A [`FiniteMetricSpace`] is a dense, symmetric distance matrix with one label
//! per point. Labels ride along for reporting only; every algorithm in this
//! crate works on point indices `0..n`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Default relative slack for the triangle inequality and for equality tests.
pub const DEFAULT_RELATIVE_EPS: f64 = 1e-9;

/// Tolerances used when validating input and when comparing distances.
///
/// Both values are *relative*: `eps_tri` is multiplied by the largest matrix
/// entry, `eps_eq` by the diameter of the space a comparison is made in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    pub eps_tri: f64,
    pub eps_eq: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            eps_tri: DEFAULT_RELATIVE_EPS,
            eps_eq: DEFAULT_RELATIVE_EPS,
        }
    }
}

impl ToleranceConfig {
    pub fn new(eps_tri: f64, eps_eq: f64) -> Result<Self, MetricError> {
        if !(eps_tri >= 0.0 && eps_tri.is_finite()) || !(eps_eq >= 0.0 && eps_eq.is_finite()) {
            return Err(MetricError::InvalidTolerance);
        }
        Ok(Self { eps_tri, eps_eq })
    }

    /// Tolerances that only accept exact equalities.
    pub const fn exact() -> Self {
        Self {
            eps_tri: 0.0,
            eps_eq: 0.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum MetricError {
    Empty,
    NotSquare { row: usize, len: usize, expected: usize },
    LabelCount { labels: usize, points: usize },
    NonFinite { i: usize, j: usize },
    NegativeDistance { i: usize, j: usize },
    NonzeroDiagonal { i: usize },
    Asymmetric { i: usize, j: usize },
    DegeneratePair { i: usize, j: usize },
    /// `dist[i][j] > dist[i][k] + dist[k][j]` beyond the allowed slack.
    TriangleViolation { i: usize, j: usize, k: usize },
    NegativeScale,
    NonpositiveLambda,
    EmptySet,
    IndexOutOfRange { index: usize, len: usize },
    InvalidTolerance,
    InvalidPartition(PartitionError),
}

impl MetricError {
    /// Short variant name, echoed by command-line front ends.
    pub fn name(&self) -> &'static str {
        match self {
            Self::Empty => "Empty",
            Self::NotSquare { .. } => "NotSquare",
            Self::LabelCount { .. } => "LabelCount",
            Self::NonFinite { .. } => "NonFinite",
            Self::NegativeDistance { .. } => "NegativeDistance",
            Self::NonzeroDiagonal { .. } => "NonzeroDiagonal",
            Self::Asymmetric { .. } => "Asymmetric",
            Self::DegeneratePair { .. } => "DegeneratePair",
            Self::TriangleViolation { .. } => "TriangleViolation",
            Self::NegativeScale => "NegativeScale",
            Self::NonpositiveLambda => "NonpositiveLambda",
            Self::EmptySet => "EmptySet",
            Self::IndexOutOfRange { .. } => "IndexOutOfRange",
            Self::InvalidTolerance => "InvalidTolerance",
            Self::InvalidPartition(_) => "InvalidPartition",
        }
    }
}

impl fmt::Display for MetricError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty => write!(f, "distance matrix has no points"),
            Self::NotSquare { row, len, expected } => {
                write!(f, "row {row} has {len} entries, expected {expected}")
            }
            Self::LabelCount { labels, points } => {
                write!(f, "{labels} labels given for {points} points")
            }
            Self::NonFinite { i, j } => write!(f, "dist[{i}][{j}] is not a finite number"),
            Self::NegativeDistance { i, j } => write!(f, "dist[{i}][{j}] is negative"),
            Self::NonzeroDiagonal { i } => write!(f, "dist[{i}][{i}] is not zero"),
            Self::Asymmetric { i, j } => write!(f, "dist[{i}][{j}] != dist[{j}][{i}]"),
            Self::DegeneratePair { i, j } => {
                write!(f, "distinct points {i} and {j} are at distance zero")
            }
            Self::TriangleViolation { i, j, k } => {
                write!(f, "triangle inequality fails: dist[{i}][{j}] > dist[{i}][{k}] + dist[{k}][{j}]")
            }
            Self::NegativeScale => write!(f, "scale factor must be non-negative"),
            Self::NonpositiveLambda => write!(f, "single-distance value must be positive"),
            Self::EmptySet => write!(f, "index set is empty"),
            Self::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range for a space of {len} points")
            }
            Self::InvalidTolerance => write!(f, "tolerances must be finite and non-negative"),
            Self::InvalidPartition(e) => write!(f, "invalid partition: {e}"),
        }
    }
}

impl core::error::Error for MetricError {}

/// A finite metric space stored as a dense row-major distance matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteMetricSpace {
    n: usize,
    labels: Vec<String>,
    dist: Vec<f64>,
}

/// Checks every metric axiom and builds the space.
///
/// Entries within `eps_tri * max_entry` of symmetric are accepted and the
/// upper triangle is mirrored, so the stored matrix is exactly symmetric.
pub fn validate_metric(
    matrix: &[Vec<f64>],
    labels: Option<Vec<String>>,
    tol: &ToleranceConfig,
) -> Result<FiniteMetricSpace, MetricError> {
    let n = matrix.len();
    if n == 0 {
        return Err(MetricError::Empty);
    }
    for (row, r) in matrix.iter().enumerate() {
        if r.len() != n {
            return Err(MetricError::NotSquare {
                row,
                len: r.len(),
                expected: n,
            });
        }
    }
    let labels = match labels {
        Some(l) if l.len() != n => {
            return Err(MetricError::LabelCount {
                labels: l.len(),
                points: n,
            })
        }
        Some(l) => l,
        None => default_labels(n),
    };

    for (i, r) in matrix.iter().enumerate() {
        for (j, &d) in r.iter().enumerate() {
            if !d.is_finite() {
                return Err(MetricError::NonFinite { i, j });
            }
            if d < 0.0 {
                return Err(MetricError::NegativeDistance { i, j });
            }
        }
    }
    for (i, r) in matrix.iter().enumerate() {
        if r[i] != 0.0 {
            return Err(MetricError::NonzeroDiagonal { i });
        }
    }

    let max_entry = matrix
        .iter()
        .flat_map(|r| r.iter().copied())
        .fold(0.0_f64, f64::max);
    let slack = tol.eps_tri * max_entry;

    let mut dist = vec![0.0; n * n];
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (matrix[i][j], matrix[j][i]);
            if (a - b).abs() > slack {
                return Err(MetricError::Asymmetric { i, j });
            }
            if a == 0.0 || b == 0.0 {
                return Err(MetricError::DegeneratePair { i, j });
            }
            dist[i * n + j] = a;
            dist[j * n + i] = a;
        }
    }

    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let direct = dist[i * n + j];
            for k in 0..n {
                if k == i || k == j {
                    continue;
                }
                if direct > dist[i * n + k] + dist[k * n + j] + slack {
                    return Err(MetricError::TriangleViolation { i, j, k });
                }
            }
        }
    }

    Ok(FiniteMetricSpace { n, labels, dist })
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{i}")).collect()
}

impl FiniteMetricSpace {
    /// Builds a space from a matrix, validating with default tolerances.
    pub fn from_rows(matrix: &[Vec<f64>]) -> Result<Self, MetricError> {
        validate_metric(matrix, None, &ToleranceConfig::default())
    }

    /// The one-point space.
    pub fn one_point() -> Self {
        Self {
            n: 1,
            labels: default_labels(1),
            dist: vec![0.0],
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn dist(&self, i: usize, j: usize) -> f64 {
        self.dist[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.dist[i * self.n..(i + 1) * self.n]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    /// Replaces the labels; the count must match.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, MetricError> {
        if labels.len() != self.n {
            return Err(MetricError::LabelCount {
                labels: labels.len(),
                points: self.n,
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn diameter(&self) -> f64 {
        self.dist.iter().copied().fold(0.0, f64::max)
    }

    /// Largest distance within an index set (0 for singletons).
    pub fn set_diameter(&self, set: &[usize]) -> f64 {
        let mut d = 0.0_f64;
        for (p, &a) in set.iter().enumerate() {
            for &b in &set[p + 1..] {
                d = d.max(self.dist(a, b));
            }
        }
        d
    }

    /// The subspace on the given indices, in the given order.
    pub fn subspace(&self, indices: &[usize]) -> Result<Self, MetricError> {
        if indices.is_empty() {
            return Err(MetricError::EmptySet);
        }
        self.check_indices(indices)?;
        let m = indices.len();
        let mut dist = vec![0.0; m * m];
        for (p, &a) in indices.iter().enumerate() {
            for (q, &b) in indices.iter().enumerate() {
                dist[p * m + q] = self.dist(a, b);
            }
        }
        let labels = indices.iter().map(|&i| self.labels[i].clone()).collect();
        Ok(Self { n: m, labels, dist })
    }

    /// True when every entry of `self` equals `c` times the matching entry of
    /// `other` up to `eps` times the larger diameter, for a common `c > 0`.
    pub fn proportional_to(&self, other: &Self, eps: f64) -> Option<f64> {
        if self.n != other.n || self.n < 2 {
            return None;
        }
        let c = self.dist(0, 1) / other.dist(0, 1);
        let slack = eps * self.diameter().max(other.diameter());
        let ok = self
            .dist
            .iter()
            .zip(&other.dist)
            .all(|(&a, &b)| (a - c * b).abs() <= slack);
        ok.then_some(c)
    }

    pub(crate) fn check_indices(&self, set: &[usize]) -> Result<(), MetricError> {
        match set.iter().find(|&&i| i >= self.n) {
            Some(&index) => Err(MetricError::IndexOutOfRange { index, len: self.n }),
            None => Ok(()),
        }
    }

    pub(crate) fn raw(&self) -> &[f64] {
        &self.dist
    }
}

pub fn diameter(space: &FiniteMetricSpace) -> f64 {
    space.diameter()
}

/// Multiplies all distances by `lambda`; `lambda = 0` collapses to the one-point space.
pub fn scale(space: &FiniteMetricSpace, lambda: f64) -> Result<FiniteMetricSpace, MetricError> {
    if lambda.is_nan() || lambda < 0.0 || lambda.is_infinite() {
        return Err(MetricError::NegativeScale);
    }
    if lambda == 0.0 {
        let mut p = FiniteMetricSpace::one_point();
        p.labels = vec![space.labels[0].clone()];
        return Ok(p);
    }
    Ok(FiniteMetricSpace {
        n: space.n,
        labels: space.labels.clone(),
        dist: space.dist.iter().map(|d| d * lambda).collect(),
    })
}

/// The single-distance space on `m` points with all nonzero distances `lambda`.
pub fn delta_simplex(m: usize, lambda: f64) -> Result<FiniteMetricSpace, MetricError> {
    if m == 0 {
        return Err(MetricError::Empty);
    }
    if m == 1 {
        return Ok(FiniteMetricSpace::one_point());
    }
    if lambda.is_nan() || lambda <= 0.0 || lambda.is_infinite() {
        return Err(MetricError::NonpositiveLambda);
    }
    let mut dist = vec![lambda; m * m];
    for i in 0..m {
        dist[i * m + i] = 0.0;
    }
    Ok(FiniteMetricSpace {
        n: m,
        labels: default_labels(m),
        dist,
    })
}

/// `(min, max)` of the distance over `a x b`.
pub fn block_distances(
    space: &FiniteMetricSpace,
    a: &[usize],
    b: &[usize],
) -> Result<(f64, f64), MetricError> {
    if a.is_empty() || b.is_empty() {
        return Err(MetricError::EmptySet);
    }
    space.check_indices(a)?;
    space.check_indices(b)?;
    Ok(block_distances_unchecked(space, a, b))
}

pub(crate) fn block_distances_unchecked(space: &FiniteMetricSpace, a: &[usize], b: &[usize]) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = 0.0_f64;
    for &i in a {
        let row = space.row(i);
        for &j in b {
            lo = lo.min(row[j]);
            hi = hi.max(row[j]);
        }
    }
    (lo, hi)
}

/// Hausdorff distance between two nonempty index sets, as the larger of the
/// two directed sup-inf distances.
pub fn hausdorff_distance(
    space: &FiniteMetricSpace,
    a: &[usize],
    b: &[usize],
) -> Result<f64, MetricError> {
    if a.is_empty() || b.is_empty() {
        return Err(MetricError::EmptySet);
    }
    space.check_indices(a)?;
    space.check_indices(b)?;
    Ok(directed(space, a, b).max(directed(space, b, a)))
}

fn directed(space: &FiniteMetricSpace, from: &[usize], to: &[usize]) -> f64 {
    from.iter()
        .map(|&i| to.iter().map(|&j| space.dist(i, j)).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max)
}

/// Hausdorff distance as the least radius `r` such that each set lies in the
/// closed `r`-neighbourhood of the other.
///
/// For finite sets the infimum is attained at one of the realized distances,
/// so it suffices to test those radii in increasing order.
pub fn hausdorff_distance_by_balls(
    space: &FiniteMetricSpace,
    a: &[usize],
    b: &[usize],
) -> Result<f64, MetricError> {
    if a.is_empty() || b.is_empty() {
        return Err(MetricError::EmptySet);
    }
    space.check_indices(a)?;
    space.check_indices(b)?;
    let mut radii: Vec<f64> = a
        .iter()
        .flat_map(|&i| b.iter().map(move |&j| (i, j)))
        .map(|(i, j)| space.dist(i, j))
        .collect();
    radii.push(0.0);
    radii.sort_by(f64::total_cmp);
    let covers = |from: &[usize], to: &[usize], r: f64| {
        from.iter().all(|&i| to.iter().any(|&j| space.dist(i, j) <= r))
    };
    Ok(radii
        .into_iter()
        .find(|&r| covers(a, b, r) && covers(b, a, r))
        .expect("the largest cross distance always covers"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    EmptyBlock,
    IndexOutOfRange { index: usize },
    Overlap { index: usize },
    Uncovered { index: usize },
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptyBlock => write!(f, "a block is empty"),
            Self::IndexOutOfRange { index } => write!(f, "index {index} is out of range"),
            Self::Overlap { index } => write!(f, "index {index} appears in two blocks"),
            Self::Uncovered { index } => write!(f, "index {index} is in no block"),
        }
    }
}

/// A partition of `{0, .., n-1}` into nonempty blocks.
///
/// Stored canonically: each block sorted, blocks ordered by smallest element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionOf {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl PartitionOf {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let mut seen = vec![false; n];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            block.sort_unstable();
            for &i in block.iter() {
                if i >= n {
                    return Err(PartitionError::IndexOutOfRange { index: i });
                }
                if seen[i] {
                    return Err(PartitionError::Overlap { index: i });
                }
                seen[i] = true;
            }
        }
        if let Some(index) = seen.iter().position(|s| !s) {
            return Err(PartitionError::Uncovered { index });
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Self { n, blocks })
    }

    /// Builds a partition from a block label per point (labels need not be contiguous).
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut slot: Vec<(usize, usize)> = Vec::new();
        for (i, &l) in labels.iter().enumerate() {
            match slot.iter().find(|(lab, _)| *lab == l) {
                Some(&(_, b)) => blocks[b].push(i),
                None => {
                    slot.push((l, blocks.len()));
                    blocks.push(vec![i]);
                }
            }
        }
        Self {
            n: labels.len(),
            blocks,
        }
    }

    pub fn singletons(n: usize) -> Self {
        Self {
            n,
            blocks: (0..n).map(|i| vec![i]).collect(),
        }
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }
}

/// Largest block diameter.
pub fn partition_diameter(space: &FiniteMetricSpace, part: &PartitionOf) -> Result<f64, MetricError> {
    if part.universe() != space.len() {
        return Err(MetricError::InvalidPartition(PartitionError::Uncovered {
            index: part.universe().min(space.len()),
        }));
    }
    Ok(part
        .blocks()
        .iter()
        .map(|b| space.set_diameter(b))
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(m: &[&[f64]]) -> Vec<Vec<f64>> {
        m.iter().map(|r| r.to_vec()).collect()
    }

    fn path3() -> FiniteMetricSpace {
        FiniteMetricSpace::from_rows(&rows(&[&[0., 1., 2.], &[1., 0., 1.], &[2., 1., 0.]])).unwrap()
    }

    fn line013() -> FiniteMetricSpace {
        FiniteMetricSpace::from_rows(&rows(&[&[0., 1., 3.], &[1., 0., 2.], &[3., 2., 0.]])).unwrap()
    }

    #[test]
    fn one_point_space_is_valid() {
        let x = FiniteMetricSpace::from_rows(&rows(&[&[0.]])).unwrap();
        assert_eq!(x.len(), 1);
        assert_eq!(x.diameter(), 0.0);
    }

    #[test]
    fn triangle_violation_reports_witness() {
        let err = FiniteMetricSpace::from_rows(&rows(&[&[0., 1., 3.], &[1., 0., 1.], &[3., 1., 0.]]))
            .unwrap_err();
        assert_eq!(err, MetricError::TriangleViolation { i: 0, j: 2, k: 1 });
    }

    #[test]
    fn equality_case_of_triangle_is_accepted() {
        assert_eq!(path3().diameter(), 2.0);
    }

    #[test]
    fn axiom_errors() {
        let t = ToleranceConfig::default();
        assert_eq!(validate_metric(&[], None, &t), Err(MetricError::Empty));
        assert!(matches!(
            validate_metric(&rows(&[&[0., 1.], &[1.]]), None, &t),
            Err(MetricError::NotSquare { row: 1, .. })
        ));
        assert_eq!(
            validate_metric(&rows(&[&[0., -1.], &[-1., 0.]]), None, &t),
            Err(MetricError::NegativeDistance { i: 0, j: 1 })
        );
        assert_eq!(
            validate_metric(&rows(&[&[1., 1.], &[1., 0.]]), None, &t),
            Err(MetricError::NonzeroDiagonal { i: 0 })
        );
        assert_eq!(
            validate_metric(&rows(&[&[0., 1.], &[2., 0.]]), None, &t),
            Err(MetricError::Asymmetric { i: 0, j: 1 })
        );
        assert_eq!(
            validate_metric(&rows(&[&[0., 0.], &[0., 0.]]), None, &t),
            Err(MetricError::DegeneratePair { i: 0, j: 1 })
        );
        assert_eq!(
            validate_metric(&rows(&[&[0., f64::NAN], &[1., 0.]]), None, &t),
            Err(MetricError::NonFinite { i: 0, j: 1 })
        );
        assert!(matches!(
            validate_metric(&rows(&[&[0.]]), Some(vec!["a".into(), "b".into()]), &t),
            Err(MetricError::LabelCount { .. })
        ));
    }

    #[test]
    fn tiny_asymmetry_is_absorbed() {
        let x = FiniteMetricSpace::from_rows(&rows(&[&[0., 1.0], &[1.0 + 1e-12, 0.]])).unwrap();
        assert_eq!(x.dist(0, 1), x.dist(1, 0));
    }

    #[test]
    fn diameters() {
        assert_eq!(FiniteMetricSpace::one_point().diameter(), 0.0);
        assert_eq!(delta_simplex(3, 1.0).unwrap().diameter(), 1.0);
        assert_eq!(path3().diameter(), 2.0);
    }

    #[test]
    fn scaling() {
        let x = path3();
        assert_eq!(scale(&x, 1.0).unwrap(), x);
        assert_eq!(scale(&x, 0.0).unwrap().len(), 1);
        let s = scale(&delta_simplex(3, 1.0).unwrap(), 2.0).unwrap();
        assert_eq!(s, delta_simplex(3, 2.0).unwrap());
        assert_eq!(scale(&x, -1.0), Err(MetricError::NegativeScale));
    }

    #[test]
    fn simplex_construction() {
        assert_eq!(delta_simplex(1, 7.0).unwrap().len(), 1);
        assert_eq!(delta_simplex(1, -7.0).unwrap().len(), 1);
        let two = delta_simplex(2, 5.0).unwrap();
        assert_eq!(two.dist(0, 1), 5.0);
        assert_eq!(delta_simplex(3, 0.0), Err(MetricError::NonpositiveLambda));
    }

    #[test]
    fn block_distance_examples() {
        let x = line013();
        assert_eq!(block_distances(&x, &[1], &[1]).unwrap(), (0.0, 0.0));
        assert_eq!(block_distances(&x, &[0, 1], &[2]).unwrap(), (2.0, 3.0));
        assert_eq!(block_distances(&x, &[0, 1, 2], &[0, 1, 2]).unwrap(), (0.0, 3.0));
        assert_eq!(block_distances(&x, &[], &[2]), Err(MetricError::EmptySet));
        assert!(matches!(
            block_distances(&x, &[5], &[2]),
            Err(MetricError::IndexOutOfRange { index: 5, .. })
        ));
    }

    #[test]
    fn hausdorff_examples() {
        let x = line013();
        assert_eq!(hausdorff_distance(&x, &[0, 2], &[0, 2]).unwrap(), 0.0);
        assert_eq!(hausdorff_distance(&x, &[0, 1], &[2]).unwrap(), 3.0);
        // A inside B: only the B -> A direction contributes.
        assert_eq!(hausdorff_distance(&x, &[0], &[0, 1, 2]).unwrap(), 3.0);
        assert_eq!(hausdorff_distance_by_balls(&x, &[0, 1], &[2]).unwrap(), 3.0);
        assert_eq!(hausdorff_distance(&x, &[0], &[]), Err(MetricError::EmptySet));
    }

    #[test]
    fn partition_diameters() {
        let x = line013();
        assert_eq!(partition_diameter(&x, &PartitionOf::singletons(3)).unwrap(), 0.0);
        let whole = PartitionOf::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(partition_diameter(&x, &whole).unwrap(), 3.0);
        let d = PartitionOf::new(3, vec![vec![2], vec![1, 0]]).unwrap();
        assert_eq!(d.blocks(), &[vec![0, 1], vec![2]]);
        assert_eq!(partition_diameter(&x, &d).unwrap(), 1.0);
    }

    #[test]
    fn partition_validation() {
        assert_eq!(PartitionOf::new(2, vec![vec![0]]), Err(PartitionError::Uncovered { index: 1 }));
        assert_eq!(
            PartitionOf::new(2, vec![vec![0, 1], vec![1]]),
            Err(PartitionError::Overlap { index: 1 })
        );
        assert_eq!(PartitionOf::new(2, vec![vec![0, 1], vec![]]), Err(PartitionError::EmptyBlock));
        assert_eq!(
            PartitionOf::new(1, vec![vec![0, 3]]),
            Err(PartitionError::IndexOutOfRange { index: 3 })
        );
        let p = PartitionOf::from_labels(&[7, 3, 7, 1]);
        assert_eq!(p.blocks(), &[vec![0, 2], vec![1], vec![3]]);
    }

    #[test]
    fn proportionality() {
        let x = path3();
        let y = scale(&x, 2.5).unwrap();
        assert_eq!(y.proportional_to(&x, 1e-12), Some(2.5));
        assert_eq!(line013().proportional_to(&x, 1e-12), None);
    }
}
