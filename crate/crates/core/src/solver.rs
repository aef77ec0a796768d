//! Exact Gromov-Hausdorff distance between finite metric spaces.
//!
//! The distance is half the smallest distortion of an irreducible
//! correspondence. [`gh_exact`] first tries closed-form shortcuts and then
//! runs a depth-first branch-and-bound over the oriented walk of
//! [`crate::correspondence`]. Because that walk emits pair lists in
//! lexicographic order and a branch is cut as soon as its bound reaches the
//! incumbent, the returned witness is the lexicographically smallest optimal
//! correspondence (in the frame whose rows are the smaller space).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use crate::borsuk::borsuk_number;
use crate::correspondence::{bits, distortion, Correspondence, Orientation, Relation, WalkState, MAX_WALK_SIDE};
use crate::metric::{FiniteMetricSpace, ToleranceConfig};

/// How a [`GhResult`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Search,
    ShortcutDelta1,
    ShortcutScaling,
    ShortcutBorsuk,
    ShortcutEqual,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Search => "search",
            Self::ShortcutDelta1 => "shortcut-Δ1",
            Self::ShortcutScaling => "shortcut-scaling",
            Self::ShortcutBorsuk => "shortcut-borsuk",
            Self::ShortcutEqual => "shortcut-equal",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GhResult {
    pub value: f64,
    pub witness: Option<Correspondence>,
    pub method: Method,
    pub lower: f64,
    pub upper: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Largest number of points per side the exact search accepts.
    pub max_points: usize,
    pub allow_shortcuts: bool,
    pub worker_count: usize,
    pub tol: ToleranceConfig,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            max_points: 10,
            allow_shortcuts: true,
            worker_count: 1,
            tol: ToleranceConfig::default(),
        }
    }
}

impl SolverOptions {
    /// Brute-force search only, no closed forms.
    pub fn search_only() -> Self {
        Self {
            allow_shortcuts: false,
            ..Self::default()
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.worker_count = workers;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SolverError {
    TooLarge { nx: usize, ny: usize, max_points: usize },
    InvalidOptions(&'static str),
    NegativeScale,
}

impl SolverError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::TooLarge { .. } => "TooLarge",
            Self::InvalidOptions(_) => "InvalidOptions",
            Self::NegativeScale => "NegativeScale",
        }
    }
}

impl fmt::Display for SolverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TooLarge { nx, ny, max_points } => write!(
                f,
                "instance {nx} x {ny} exceeds the exact-search limit of {max_points} points per side"
            ),
            Self::InvalidOptions(why) => write!(f, "invalid solver options: {why}"),
            Self::NegativeScale => write!(f, "scale factor must be non-negative"),
        }
    }
}

impl core::error::Error for SolverError {}

/// `(|diam X - diam Y| / 2, max(diam X, diam Y) / 2)`.
pub fn gh_bounds(x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> (f64, f64) {
    let (dx, dy) = (x.diameter(), y.diameter());
    (0.5 * (dx - dy).abs(), 0.5 * dx.max(dy))
}

/// Closed-form values, when one of their hypotheses can be checked.
///
/// In order: identical matrices, a one-point side, proportional matrices
/// (`d(sX, tX) = |s - t| diam X / 2`), and the Borsuk regime: if the smaller
/// space has fewer points than the Borsuk number of a space at least as wide,
/// the distance is half the wider diameter.
pub fn gh_shortcut(
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
    beta_x: Option<usize>,
    beta_y: Option<usize>,
    tol: &ToleranceConfig,
) -> Option<GhResult> {
    let (lower, upper) = gh_bounds(x, y);
    let (nx, ny) = (x.len(), y.len());
    let make = |value: f64, pairs: Vec<(usize, usize)>, method| GhResult {
        value,
        witness: Some(Correspondence::from_pairs(nx, ny, pairs).expect("shortcut witnesses cover both sides")),
        method,
        lower,
        upper,
    };
    let identity = || (0..nx).map(|i| (i, i)).collect::<Vec<_>>();

    if nx == ny && x.raw() == y.raw() {
        return Some(make(0.0, identity(), Method::ShortcutEqual));
    }
    if nx == 1 || ny == 1 {
        return Some(make(upper, Relation::full(nx, ny).pairs().to_vec(), Method::ShortcutDelta1));
    }
    if x.proportional_to(y, tol.eps_eq).is_some() {
        return Some(make(lower, identity(), Method::ShortcutScaling));
    }
    let (dx, dy) = (x.diameter(), y.diameter());
    let x_side = matches!(beta_y, Some(b) if nx < b) && dx <= dy;
    let y_side = matches!(beta_x, Some(b) if ny < b) && dy <= dx;
    if x_side || y_side {
        // Every correspondence has distortion at most the larger diameter, and
        // here none does better, so the first one walked is optimal.
        let first = first_irreducible(nx, ny);
        return Some(make(upper, first, Method::ShortcutBorsuk));
    }
    None
}

fn first_irreducible(nx: usize, ny: usize) -> Vec<(usize, usize)> {
    crate::correspondence::enumerate_irreducible(nx, ny)
        .pairs()
        .next()
        .expect("at least one irreducible correspondence exists")
}

/// Exact distance: shortcuts (when allowed) and then branch-and-bound.
pub fn gh_exact(x: &FiniteMetricSpace, y: &FiniteMetricSpace, opts: &SolverOptions) -> Result<GhResult, SolverError> {
    if opts.max_points == 0 {
        return Err(SolverError::InvalidOptions("max_points must be at least 1"));
    }
    if opts.worker_count == 0 {
        return Err(SolverError::InvalidOptions("worker_count must be at least 1"));
    }
    if opts.allow_shortcuts {
        let beta = |s: &FiniteMetricSpace| (s.len() >= 2).then(|| borsuk_number(s, &opts.tol).ok()).flatten();
        let (bx, by) = (beta(x).map(|b| b.number), beta(y).map(|b| b.number));
        if let Some(r) = gh_shortcut(x, y, bx, by, &opts.tol) {
            return Ok(r);
        }
    }
    let limit = opts.max_points.min(MAX_WALK_SIDE);
    if x.len() > limit || y.len() > limit {
        return Err(SolverError::TooLarge {
            nx: x.len(),
            ny: y.len(),
            max_points: limit,
        });
    }
    Ok(search(x, y, opts.worker_count))
}

/// Result for `(s X, s Y)` from the result for `(X, Y)`.
pub fn gh_scaled(base: &GhResult, lambda: f64) -> Result<GhResult, SolverError> {
    if lambda.is_nan() || lambda < 0.0 || lambda.is_infinite() {
        return Err(SolverError::NegativeScale);
    }
    if lambda == 0.0 {
        return Ok(GhResult {
            value: 0.0,
            witness: Some(Correspondence::from_pairs(1, 1, vec![(0, 0)]).expect("single pair")),
            method: Method::ShortcutEqual,
            lower: 0.0,
            upper: 0.0,
        });
    }
    Ok(GhResult {
        value: lambda * base.value,
        witness: base.witness.clone(),
        method: base.method,
        lower: lambda * base.lower,
        upper: lambda * base.upper,
    })
}

/// Branch-and-bound over irreducible correspondences.
fn search(x: &FiniteMetricSpace, y: &FiniteMetricSpace, workers: usize) -> GhResult {
    let (lower, upper) = gh_bounds(x, y);
    let orient = Orientation::for_sizes(x.len(), y.len());
    let (rows, cols) = match orient {
        Orientation::XRows => (x, y),
        Orientation::YRows => (y, x),
    };
    let problem = Problem {
        a: rows,
        b: cols,
        target: (x.diameter() - y.diameter()).abs(),
    };
    let root = WalkState::new(rows.len(), cols.len());
    let branches = root.candidates();
    let shared = Shared {
        best: AtomicU64::new(f64::INFINITY.to_bits()),
        branch_best: branches.iter().map(|_| AtomicU64::new(f64::INFINITY.to_bits())).collect(),
        stop_after: AtomicUsize::new(usize::MAX),
        next: AtomicUsize::new(0),
    };

    let results = run_branches(&problem, &root, &branches, &shared, workers);

    let (dis, images) = results
        .into_iter()
        .flatten()
        .fold(None::<(f64, Vec<u64>)>, |acc, (v, img)| match acc {
            Some((bv, _)) if bv <= v => acc,
            _ => Some((v, img)),
        })
        .expect("the walk always reaches at least one correspondence");

    let mut state = WalkState::new(rows.len(), cols.len());
    for img in images {
        state.push(img);
    }
    let witness = Correspondence::from_pairs(x.len(), y.len(), state.pairs(orient)).expect("walk leaves are correspondences");
    debug_assert_eq!(distortion(x, y, witness.relation()).ok(), Some(dis));
    GhResult {
        value: 0.5 * dis,
        witness: Some(witness),
        method: Method::Search,
        lower,
        upper,
    }
}

struct Problem<'a> {
    a: &'a FiniteMetricSpace,
    b: &'a FiniteMetricSpace,
    /// Distortion lower bound; reaching it ends the search.
    target: f64,
}

struct Shared {
    best: AtomicU64,
    branch_best: Vec<AtomicU64>,
    stop_after: AtomicUsize,
    #[cfg_attr(not(feature = "std"), allow(dead_code))]
    next: AtomicUsize,
}

impl Shared {
    fn best(&self) -> f64 {
        f64::from_bits(self.best.load(Ordering::Relaxed))
    }

    /// Non-negative floats order like their bit patterns.
    fn offer(&self, branch: usize, value: f64) {
        self.best.fetch_min(value.to_bits(), Ordering::Relaxed);
        self.branch_best[branch].fetch_min(value.to_bits(), Ordering::Relaxed);
    }

    fn prefix_best(&self, branch: usize) -> f64 {
        self.branch_best[..branch]
            .iter()
            .map(|b| f64::from_bits(b.load(Ordering::Relaxed)))
            .fold(f64::INFINITY, f64::min)
    }
}

type BranchResult = Option<(f64, Vec<u64>)>;

#[cfg(feature = "std")]
fn run_branches(problem: &Problem<'_>, root: &WalkState, branches: &[u64], shared: &Shared, workers: usize) -> Vec<BranchResult> {
    extern crate std;
    use std::sync::Mutex;

    if workers <= 1 || branches.len() <= 1 {
        return run_sequential(problem, root, branches, shared);
    }
    let slots: Vec<Mutex<BranchResult>> = branches.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..workers.min(branches.len()) {
            scope.spawn(|| loop {
                let k = shared.next.fetch_add(1, Ordering::Relaxed);
                if k >= branches.len() {
                    break;
                }
                if k > shared.stop_after.load(Ordering::Relaxed) {
                    continue;
                }
                let r = run_branch(problem, root, branches[k], k, shared);
                *slots[k].lock().expect("result slot poisoned") = r;
            });
        }
    });
    slots
        .into_iter()
        .map(|m| m.into_inner().expect("result slot poisoned"))
        .collect()
}

#[cfg(not(feature = "std"))]
fn run_branches(problem: &Problem<'_>, root: &WalkState, branches: &[u64], shared: &Shared, _workers: usize) -> Vec<BranchResult> {
    run_sequential(problem, root, branches, shared)
}

fn run_sequential(problem: &Problem<'_>, root: &WalkState, branches: &[u64], shared: &Shared) -> Vec<BranchResult> {
    let mut out = Vec::with_capacity(branches.len());
    for (k, &img) in branches.iter().enumerate() {
        if k > shared.stop_after.load(Ordering::Relaxed) {
            out.push(None);
            continue;
        }
        out.push(run_branch(problem, root, img, k, shared));
    }
    out
}

fn run_branch(problem: &Problem<'_>, root: &WalkState, image: u64, branch: usize, shared: &Shared) -> BranchResult {
    let rows = root.rows;
    let cols = root.cols;
    let mut s = BranchSearch {
        p: problem,
        shared,
        branch,
        state: root.clone(),
        // Earlier branches' results precede anything found here, so ties with
        // them can be cut.
        local_best: shared.prefix_best(branch),
        found: None,
        costs: vec![vec![0.0; rows * cols]; rows + 1],
        aborted: false,
    };
    s.descend(image, 0.0, 0);
    s.found.map(|imgs| (s.local_best, imgs))
}

struct BranchSearch<'a, 'p> {
    p: &'a Problem<'p>,
    shared: &'a Shared,
    branch: usize,
    state: WalkState,
    local_best: f64,
    found: Option<Vec<u64>>,
    /// `costs[d][r * cols + c]`: with `d` rows placed, the worst mismatch that
    /// pairing future row `r` with column `c` would cause against placed pairs.
    costs: Vec<Vec<f64>>,
    aborted: bool,
}

impl BranchSearch<'_, '_> {
    #[inline]
    fn beaten(&self, bound: f64) -> bool {
        bound >= self.local_best || bound > self.shared.best()
    }

    /// Places `image` for the next row and explores below it.
    fn descend(&mut self, image: u64, partial: f64, depth: usize) {
        if self.aborted {
            return;
        }
        let (a, b) = (self.p.a, self.p.b);
        let cols = self.state.cols;
        let rows = self.state.rows;
        let row = depth;

        let mut part = partial;
        {
            let cost = &self.costs[depth];
            for c in bits(image) {
                part = part.max(cost[row * cols + c]);
            }
        }
        for c in bits(image) {
            for c2 in bits(image & !((2u64 << c) - 1)) {
                part = part.max(b.dist(c, c2));
            }
        }
        if self.beaten(part) {
            return;
        }

        self.state.push(image);
        if row + 1 == rows {
            self.leaf(part);
            self.state.pop();
            return;
        }

        // Extend the look-ahead table with the new pairs and bound the future.
        let (cur, next) = self.costs.split_at_mut(depth + 1);
        let (cur, next) = (&cur[depth], &mut next[0]);
        let free = crate::correspondence::full_mask(cols) & !self.state.locked;
        let mut lb = part;
        for r in (row + 1)..rows {
            let a_rr = a.row(r)[row];
            let mut row_min = f64::INFINITY;
            for c in 0..cols {
                let mut v = cur[r * cols + c];
                let b_row = b.row(c);
                for c2 in bits(image) {
                    v = v.max((a_rr - b_row[c2]).abs());
                }
                next[r * cols + c] = v;
                if free >> c & 1 == 1 {
                    row_min = row_min.min(v);
                }
            }
            lb = lb.max(row_min);
        }
        for c in bits(self.state.unused) {
            let col_min = ((row + 1)..rows)
                .map(|r| next[r * cols + c])
                .fold(f64::INFINITY, f64::min);
            lb = lb.max(col_min);
        }
        if self.beaten(lb) {
            self.state.pop();
            return;
        }

        for img in self.state.candidates() {
            self.descend(img, part, depth + 1);
            if self.aborted {
                break;
            }
        }
        self.state.pop();
    }

    fn leaf(&mut self, value: f64) {
        self.local_best = value;
        self.found = Some(self.state.images.clone());
        self.shared.offer(self.branch, value);
        if value <= self.p.target {
            self.shared.stop_after.fetch_min(self.branch, Ordering::Relaxed);
            self.aborted = true;
        }
        if self.shared.stop_after.load(Ordering::Relaxed) < self.branch {
            self.aborted = true;
        }
    }
}
