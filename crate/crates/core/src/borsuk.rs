//! Borsuk numbers of finite metric spaces.
//!
//! In a finite space a block has strictly smaller diameter exactly when it
//! contains no diametrical pair, and the slack is then uniform over blocks
//! (the diameter minus the largest sub-diametral distance used). So the
//! Borsuk number is the chromatic number of the diameter graph, which is
//! computed exactly here by backtracking colouring.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::metric::{delta_simplex, partition_diameter, FiniteMetricSpace, PartitionOf, ToleranceConfig};
use crate::solver::{gh_exact, SolverError, SolverOptions};

#[derive(Debug, Clone, PartialEq)]
pub enum BorsukError {
    SinglePoint,
    CardinalOutOfRange { m: usize, n: usize },
    LambdaOutOfRange,
    Solver(SolverError),
}

impl BorsukError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::SinglePoint => "SinglePoint",
            Self::CardinalOutOfRange { .. } => "CardinalOutOfRange",
            Self::LambdaOutOfRange => "LambdaOutOfRange",
            Self::Solver(e) => e.name(),
        }
    }
}

impl fmt::Display for BorsukError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::SinglePoint => write!(f, "a one-point space has no Borsuk number"),
            Self::CardinalOutOfRange { m, n } => write!(f, "m = {m} is outside 2..={n}"),
            Self::LambdaOutOfRange => write!(f, "lambda must satisfy 0 < lambda < diam X"),
            Self::Solver(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for BorsukError {}

impl From<SolverError> for BorsukError {
    fn from(e: SolverError) -> Self {
        Self::Solver(e)
    }
}

/// Graph whose edges are the diametrical pairs of a space.
#[derive(Debug, Clone, PartialEq)]
pub struct DiameterGraph {
    n: usize,
    diam: f64,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl DiameterGraph {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn diam(&self) -> f64 {
        self.diam
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }
}

/// Pairs at distance within `eps_eq * diam` of the diameter.
pub fn diameter_graph(x: &FiniteMetricSpace, tol: &ToleranceConfig) -> Result<DiameterGraph, BorsukError> {
    let n = x.len();
    if n < 2 {
        return Err(BorsukError::SinglePoint);
    }
    let diam = x.diameter();
    let slack = tol.eps_eq * diam;
    let mut edges = Vec::new();
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if diam - x.dist(i, j) <= slack {
                edges.push((i, j));
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    Ok(DiameterGraph { n, diam, edges, adj })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BorsukResult {
    pub number: usize,
    pub witness: PartitionOf,
    /// `diam X` minus the largest block diameter of the witness.
    pub epsilon: f64,
    pub diam: f64,
}

pub fn borsuk_number(x: &FiniteMetricSpace, tol: &ToleranceConfig) -> Result<BorsukResult, BorsukError> {
    let g = diameter_graph(x, tol)?;
    let (number, colors) = chromatic_number(&g);
    let witness = PartitionOf::from_labels(&colors);
    let widest = partition_diameter(x, &witness).expect("witness covers the space");
    let mut epsilon = g.diam - widest;
    // The subtraction may round up; step down until `widest <= diam - epsilon` holds exactly.
    while epsilon > 0.0 && g.diam - epsilon < widest {
        epsilon = f64::from_bits(epsilon.to_bits() - 1);
    }
    Ok(BorsukResult {
        number,
        witness,
        epsilon,
        diam: g.diam,
    })
}

/// Whether `x` splits into exactly `m` blocks of strictly smaller diameter,
/// with such a partition when it does.
pub fn can_partition_smaller(
    x: &FiniteMetricSpace,
    m: usize,
    tol: &ToleranceConfig,
) -> Result<(bool, Option<PartitionOf>), BorsukError> {
    let n = x.len();
    if m < 2 || m > n {
        return Err(BorsukError::CardinalOutOfRange { m, n });
    }
    let g = diameter_graph(x, tol)?;
    match color_with(&g, m) {
        None => Ok((false, None)),
        Some(colors) => {
            let base = PartitionOf::from_labels(&colors);
            Ok((true, Some(split_to(base, m))))
        }
    }
}

/// Splits blocks (never merging) until there are exactly `m` of them.
fn split_to(part: PartitionOf, m: usize) -> PartitionOf {
    let n = part.universe();
    let mut blocks = part.blocks().to_vec();
    while blocks.len() < m {
        let widest = (0..blocks.len())
            .max_by_key(|&i| (blocks[i].len(), core::cmp::Reverse(i)))
            .expect("nonempty");
        let moved = blocks[widest].pop().expect("a block with two or more points exists when m <= n");
        blocks.push(vec![moved]);
    }
    PartitionOf::new(n, blocks).expect("splitting keeps a partition")
}

/// Borsuk number greater than `n`: every cover by at most `n` sets has a
/// member containing a diametrical pair.
pub fn is_dls_n(x: &FiniteMetricSpace, n: usize, tol: &ToleranceConfig) -> Result<bool, BorsukError> {
    Ok(borsuk_number(x, tol)?.number > n)
}

/// Both sides of the partition / distance-to-simplex dichotomy for one `(X, m, lambda)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConsistencyReport {
    pub m: usize,
    pub lambda: f64,
    pub diam: f64,
    pub partition_exists: bool,
    pub partition: Option<PartitionOf>,
    /// `2 d_GH(lambda Delta_m, X)` from exhaustive search.
    pub twice_gh: f64,
    /// `twice_gh < diam - eps_eq * diam`.
    pub strictly_below: bool,
    pub biconditional_holds: bool,
    /// In the no-partition case, whether `twice_gh` equals `diam` within tolerance.
    pub equality_holds: Option<bool>,
}

/// Decides the partition question directly and through the distance to the
/// single-distance space `lambda Delta_m`, without any closed-form shortcut.
pub fn generalized_borsuk_via_gh(
    x: &FiniteMetricSpace,
    m: usize,
    lambda: f64,
    opts: &SolverOptions,
) -> Result<ConsistencyReport, BorsukError> {
    let n = x.len();
    if m < 2 || m > n {
        return Err(BorsukError::CardinalOutOfRange { m, n });
    }
    let diam = x.diameter();
    if !(lambda > 0.0 && lambda < diam) {
        return Err(BorsukError::LambdaOutOfRange);
    }
    let (partition_exists, partition) = can_partition_smaller(x, m, &opts.tol)?;
    let simplex = delta_simplex(m, lambda).expect("m >= 2 and lambda > 0");
    let search = SolverOptions {
        allow_shortcuts: false,
        ..*opts
    };
    let twice_gh = 2.0 * gh_exact(&simplex, x, &search)?.value;
    let slack = opts.tol.eps_eq * diam;
    let strictly_below = twice_gh < diam - slack;
    let equality_holds = (!partition_exists).then(|| (twice_gh - diam).abs() <= slack);
    Ok(ConsistencyReport {
        m,
        lambda,
        diam,
        partition_exists,
        partition,
        twice_gh,
        strictly_below,
        biconditional_holds: partition_exists == strictly_below,
        equality_holds,
    })
}

/// Exact chromatic number with a colouring attaining it.
pub fn chromatic_number(g: &DiameterGraph) -> (usize, Vec<usize>) {
    let lower = greedy_clique(g).max(1);
    let greedy = dsatur_greedy(g);
    let upper = greedy.iter().copied().max().map_or(1, |c| c + 1);
    for k in lower..upper {
        if let Some(colors) = color_with(g, k) {
            return (k, colors);
        }
    }
    (upper, greedy)
}

fn greedy_clique(g: &DiameterGraph) -> usize {
    let mut best = if g.n > 0 { 1 } else { 0 };
    for start in 0..g.n {
        let mut clique = vec![start];
        let mut cands: Vec<usize> = g.adj[start].clone();
        cands.sort_by_key(|&v| core::cmp::Reverse(g.adj[v].len()));
        for v in cands {
            if clique.iter().all(|&u| g.adjacent(u, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

const UNCOLORED: usize = usize::MAX;

/// Saturation-degree greedy colouring.
fn dsatur_greedy(g: &DiameterGraph) -> Vec<usize> {
    let mut colors = vec![UNCOLORED; g.n];
    for _ in 0..g.n {
        let v = pick_vertex(g, &colors).expect("an uncoloured vertex remains");
        let mut c = 0;
        while g.adj[v].iter().any(|&u| colors[u] == c) {
            c += 1;
        }
        colors[v] = c;
    }
    colors
}

/// Uncoloured vertex with most distinct neighbour colours, then highest
/// degree, then lowest index.
fn pick_vertex(g: &DiameterGraph, colors: &[usize]) -> Option<usize> {
    let mut best: Option<(usize, usize, usize)> = None;
    let mut seen: Vec<usize> = Vec::new();
    for v in (0..g.n).filter(|&v| colors[v] == UNCOLORED) {
        seen.clear();
        for &u in &g.adj[v] {
            if colors[u] != UNCOLORED && !seen.contains(&colors[u]) {
                seen.push(colors[u]);
            }
        }
        let key = (seen.len(), g.adj[v].len());
        if best.is_none_or(|(s, d, _)| key > (s, d)) {
            best = Some((key.0, key.1, v));
        }
    }
    best.map(|(_, _, v)| v)
}

/// A proper colouring with at most `k` colours, if one exists. New colours are
/// opened in increasing order only, which removes colour-permutation symmetry.
pub fn color_with(g: &DiameterGraph, k: usize) -> Option<Vec<usize>> {
    if k == 0 {
        return (g.n == 0).then(Vec::new);
    }
    let mut colors = vec![UNCOLORED; g.n];
    backtrack(g, k, &mut colors, 0).then_some(colors)
}

fn backtrack(g: &DiameterGraph, k: usize, colors: &mut [usize], used: usize) -> bool {
    let Some(v) = pick_vertex(g, colors) else {
        return true;
    };
    let limit = k.min(used + 1);
    for c in 0..limit {
        if g.adj[v].iter().any(|&u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if backtrack(g, k, colors, used.max(c + 1)) {
            return true;
        }
    }
    colors[v] = UNCOLORED;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::delta_simplex;

    fn square() -> FiniteMetricSpace {
        let s = 2f64.sqrt();
        FiniteMetricSpace::from_rows(&[
            vec![0., 1., s, 1.],
            vec![1., 0., 1., s],
            vec![s, 1., 0., 1.],
            vec![1., s, 1., 0.],
        ])
        .unwrap()
    }

    fn two() -> FiniteMetricSpace {
        delta_simplex(2, 3.0).unwrap()
    }

    #[test]
    fn diameter_graph_examples() {
        let t = ToleranceConfig::default();
        let g = diameter_graph(&delta_simplex(4, 1.0).unwrap(), &t).unwrap();
        assert_eq!(g.edges().len(), 6);
        let g = diameter_graph(&square(), &t).unwrap();
        assert_eq!(g.edges(), &[(0, 2), (1, 3)]);
        assert_eq!(diameter_graph(&two(), &t).unwrap().edges(), &[(0, 1)]);
        assert_eq!(
            diameter_graph(&FiniteMetricSpace::one_point(), &t),
            Err(BorsukError::SinglePoint)
        );
    }

    #[test]
    fn borsuk_examples() {
        let t = ToleranceConfig::default();
        for m in 2..=6 {
            let r = borsuk_number(&delta_simplex(m, 1.0).unwrap(), &t).unwrap();
            assert_eq!(r.number, m);
            assert_eq!(r.epsilon, 1.0);
        }
        assert_eq!(borsuk_number(&two(), &t).unwrap().number, 2);
        let r = borsuk_number(&square(), &t).unwrap();
        assert_eq!(r.number, 2);
        assert_eq!(r.witness.num_blocks(), 2);
        assert!(r.epsilon > 0.0);
        assert_eq!(r.diam - r.epsilon, 1.0);
    }

    #[test]
    fn partition_question() {
        let t = ToleranceConfig::default();
        let d3 = delta_simplex(3, 1.0).unwrap();
        assert_eq!(can_partition_smaller(&d3, 2, &t).unwrap(), (false, None));
        let (ok, w) = can_partition_smaller(&square(), 2, &t).unwrap();
        assert!(ok);
        assert_eq!(w.unwrap().num_blocks(), 2);
        let (ok, w) = can_partition_smaller(&square(), 4, &t).unwrap();
        assert!(ok);
        assert_eq!(w.unwrap(), PartitionOf::singletons(4));
        let (ok, w) = can_partition_smaller(&square(), 3, &t).unwrap();
        assert!(ok && w.unwrap().num_blocks() == 3);
        assert_eq!(
            can_partition_smaller(&square(), 5, &t),
            Err(BorsukError::CardinalOutOfRange { m: 5, n: 4 })
        );
        assert!(can_partition_smaller(&square(), 1, &t).is_err());
    }

    #[test]
    fn dls_examples() {
        let t = ToleranceConfig::default();
        let d3 = delta_simplex(3, 1.0).unwrap();
        assert!(is_dls_n(&d3, 2, &t).unwrap());
        assert!(!is_dls_n(&d3, 3, &t).unwrap());
        assert!(is_dls_n(&two(), 1, &t).unwrap());
    }

    #[test]
    fn dichotomy_examples() {
        let o = SolverOptions::search_only();
        let r = generalized_borsuk_via_gh(&delta_simplex(3, 1.0).unwrap(), 2, 0.5, &o).unwrap();
        assert!(!r.partition_exists);
        assert_eq!(r.twice_gh, 1.0);
        assert!(r.biconditional_holds);
        assert_eq!(r.equality_holds, Some(true));

        let r = generalized_borsuk_via_gh(&square(), 2, 0.7, &o).unwrap();
        assert!(r.partition_exists);
        assert!(r.twice_gh < 2f64.sqrt());
        assert!(r.biconditional_holds);
        assert_eq!(r.equality_holds, None);

        let r = generalized_borsuk_via_gh(&square(), 4, 1.0, &o).unwrap();
        assert!(r.partition_exists && r.strictly_below);

        assert_eq!(
            generalized_borsuk_via_gh(&square(), 2, 1.5, &o),
            Err(BorsukError::LambdaOutOfRange)
        );
    }

    #[test]
    fn odd_cycle_needs_three_colours() {
        // Diameter graph of a regular pentagon is a 5-cycle.
        let n = 5;
        let rows: Vec<Vec<f64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let k = (i as isize - j as isize).unsigned_abs();
                        [0.0, 1.0, 1.618][k.min(n - k)]
                    })
                    .collect()
            })
            .collect();
        let x = FiniteMetricSpace::from_rows(&rows).unwrap();
        assert_eq!(borsuk_number(&x, &ToleranceConfig::default()).unwrap().number, 3);
    }
}
