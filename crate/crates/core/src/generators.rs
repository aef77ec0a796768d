//! Seeded construction of finite metric spaces.
//!
//! All randomness comes from ChaCha8 seeded with `GenSpec::seed`; each
//! kind draws from its own stream so that, for example, `euclidean:5:2:1:7`
//! and `synthetic:5:2:1:7` are unrelated.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;
use core::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::metric::{delta_simplex, validate_metric, FiniteMetricSpace, MetricError, ToleranceConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenKind {
    Euclidean,
    Synthetic,
    Polygon,
    SphereSample,
    Simplex,
}

impl GenKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Euclidean => "euclidean",
            Self::Synthetic => "synthetic",
            Self::Polygon => "polygon",
            Self::SphereSample => "sphere-sample",
            Self::Simplex => "simplex",
        }
    }

    fn stream(&self) -> u64 {
        match self {
            Self::Euclidean => 1,
            Self::Synthetic => 2,
            Self::Polygon => 3,
            Self::SphereSample => 4,
            Self::Simplex => 5,
        }
    }

    fn default_dim(&self) -> usize {
        match self {
            Self::SphereSample => 3,
            _ => 2,
        }
    }
}

impl FromStr for GenKind {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "euclidean" => Self::Euclidean,
            "synthetic" => Self::Synthetic,
            "polygon" => Self::Polygon,
            "sphere-sample" | "sphere" => Self::SphereSample,
            "simplex" => Self::Simplex,
            other => return Err(GenError::InvalidSpec(alloc::format!("unknown kind `{other}`"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    pub dim: usize,
    pub seed: u64,
    pub scale: f64,
}

impl GenSpec {
    pub fn new(kind: GenKind, n: usize) -> Self {
        Self {
            kind,
            n,
            dim: kind.default_dim(),
            seed: 0,
            scale: 1.0,
        }
    }

    pub fn dim(mut self, dim: usize) -> Self {
        self.dim = dim;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }

    fn check(&self) -> Result<(), GenError> {
        if self.n == 0 {
            return Err(GenError::InvalidSpec("n must be at least 1".to_string()));
        }
        if self.dim == 0 {
            return Err(GenError::InvalidSpec("dim must be at least 1".to_string()));
        }
        if self.kind == GenKind::SphereSample && self.dim < 2 {
            return Err(GenError::InvalidSpec("sphere samples need dim >= 2".to_string()));
        }
        if !(self.scale > 0.0 && self.scale.is_finite()) {
            return Err(GenError::InvalidSpec("scale must be positive".to_string()));
        }
        Ok(())
    }
}

/// `kind:n[:dim][:scale][:seed]`; the fields are positional.
impl FromStr for GenSpec {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split(':');
        let kind: GenKind = parts.next().unwrap_or("").parse()?;
        let bad = |what: &str, v: &str| GenError::InvalidSpec(alloc::format!("bad {what} `{v}`"));
        let n_str = parts.next().ok_or_else(|| GenError::InvalidSpec("missing point count".to_string()))?;
        let mut spec = GenSpec::new(kind, n_str.parse().map_err(|_| bad("n", n_str))?);
        if let Some(v) = parts.next() {
            spec.dim = v.parse().map_err(|_| bad("dim", v))?;
        }
        if let Some(v) = parts.next() {
            spec.scale = v.parse().map_err(|_| bad("scale", v))?;
        }
        if let Some(v) = parts.next() {
            spec.seed = v.parse().map_err(|_| bad("seed", v))?;
        }
        if parts.next().is_some() {
            return Err(GenError::InvalidSpec("too many fields".to_string()));
        }
        spec.check()?;
        Ok(spec)
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}:{}:{}", self.kind.as_str(), self.n, self.dim, self.scale, self.seed)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GenError {
    InvalidSpec(String),
    Metric(MetricError),
}

impl GenError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::InvalidSpec(_) => "InvalidSpec",
            Self::Metric(e) => e.name(),
        }
    }
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvalidSpec(why) => write!(f, "invalid generator spec: {why}"),
            Self::Metric(e) => write!(f, "generated matrix failed validation: {e}"),
        }
    }
}

impl core::error::Error for GenError {}

pub fn generate(spec: &GenSpec) -> Result<FiniteMetricSpace, GenError> {
    spec.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    rng.set_stream(spec.kind.stream());
    let rows = match spec.kind {
        GenKind::Simplex => return delta_simplex(spec.n, spec.scale).map_err(GenError::Metric),
        GenKind::Euclidean => euclidean_rows(&mut rng, spec.n, spec.dim, spec.scale),
        GenKind::Synthetic => synthetic_rows(&mut rng, spec.n, spec.scale),
        GenKind::Polygon => polygon_rows(spec.n, spec.scale),
        GenKind::SphereSample => sphere_rows(&mut rng, spec.n, spec.dim, spec.scale),
    };
    validate_metric(&rows, None, &ToleranceConfig::default()).map_err(GenError::Metric)
}

fn symmetric_from(n: usize, mut entry: impl FnMut(usize, usize) -> f64) -> Vec<Vec<f64>> {
    let mut rows = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let d = entry(i, j);
            rows[i][j] = d;
            rows[j][i] = d;
        }
    }
    rows
}

fn euclidean_rows<R: Rng>(rng: &mut R, n: usize, dim: usize, scale: f64) -> Vec<Vec<f64>> {
    let pts: Vec<Vec<f64>> = (0..n).map(|_| (0..dim).map(|_| rng.gen::<f64>()).collect()).collect();
    symmetric_from(n, |i, j| {
        let sq: f64 = pts[i].iter().zip(&pts[j]).map(|(a, b)| (a - b) * (a - b)).sum();
        libm::sqrt(sq) * scale
    })
}

/// Uniform entries in `[0.5, 1.5] * scale`, symmetrized by averaging, then
/// closed under shortest paths.
fn synthetic_rows<R: Rng>(rng: &mut R, n: usize, scale: f64) -> Vec<Vec<f64>> {
    let raw: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..n).map(|_| (0.5 + rng.gen::<f64>()) * scale).collect())
        .collect();
    let mut d = symmetric_from(n, |i, j| 0.5 * (raw[i][j] + raw[j][i]));
    shortest_path_closure(&mut d);
    d
}

/// Floyd-Warshall relaxation in place; the result is mirrored so it stays exactly symmetric.
pub fn shortest_path_closure(d: &mut [Vec<f64>]) {
    let n = d.len();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            d[j][i] = d[i][j];
        }
    }
}

/// Regular `n`-gon with unit side (times `scale`), chord metric.
fn polygon_rows(n: usize, scale: f64) -> Vec<Vec<f64>> {
    let radius = if n >= 2 { 0.5 / libm::sin(PI / n as f64) } else { 0.0 };
    // Chords depend only on the cyclic step, so equal chords are bit-identical.
    let chord: Vec<f64> = (0..=n / 2)
        .map(|k| 2.0 * radius * libm::sin(PI * k as f64 / n as f64) * scale)
        .collect();
    symmetric_from(n, |i, j| {
        let k = j - i;
        chord[k.min(n - k)]
    })
}

/// Points uniform on the unit sphere in `dim` dimensions, great-circle metric.
fn sphere_rows<R: Rng>(rng: &mut R, n: usize, dim: usize, scale: f64) -> Vec<Vec<f64>> {
    let pts: Vec<Vec<f64>> = (0..n)
        .map(|_| loop {
            let v: Vec<f64> = (0..dim).map(|_| 2.0 * rng.gen::<f64>() - 1.0).collect();
            let norm = libm::sqrt(v.iter().map(|a| a * a).sum());
            if norm > 1e-3 && norm <= 1.0 {
                break v.into_iter().map(|a| a / norm).collect();
            }
        })
        .collect();
    symmetric_from(n, |i, j| {
        let (mut diff, mut sum) = (0.0, 0.0);
        for (a, b) in pts[i].iter().zip(&pts[j]) {
            diff += (a - b) * (a - b);
            sum += (a + b) * (a + b);
        }
        2.0 * libm::atan2(libm::sqrt(diff), libm::sqrt(sum)) * scale
    })
}

/// A space of `n` points whose first `clique` points are pairwise at distance
/// `diam` and whose other distances are uniform in `[diam / 2, diam)`.
///
/// Any symmetric matrix with off-diagonal entries in `[diam / 2, diam]` is a
/// metric, and the clique forces the Borsuk number to be at least `clique`.
pub fn space_with_clique<R: Rng>(rng: &mut R, n: usize, clique: usize, diam: f64) -> FiniteMetricSpace {
    assert!(clique <= n && n >= 1 && diam > 0.0);
    let rows = symmetric_from(n, |_, j| {
        if j < clique {
            diam
        } else {
            diam * (0.5 + 0.5 * rng.gen::<f64>())
        }
    });
    validate_metric(&rows, None, &ToleranceConfig::default()).expect("entries in [diam/2, diam] form a metric")
}

/// A uniformly chosen generator kind with a random size in `sizes`.
pub fn random_spec<R: Rng>(rng: &mut R, sizes: core::ops::RangeInclusive<usize>) -> GenSpec {
    let kinds = [
        GenKind::Euclidean,
        GenKind::Synthetic,
        GenKind::Polygon,
        GenKind::SphereSample,
        GenKind::Simplex,
    ];
    let kind = kinds[rng.gen_range(0..kinds.len())];
    let n = rng.gen_range(sizes);
    let mut spec = GenSpec::new(kind, n).seed(rng.gen()).scale(0.5 + rng.gen::<f64>() * 2.0);
    if kind == GenKind::Euclidean {
        spec.dim = rng.gen_range(1..=3);
    }
    spec
}
