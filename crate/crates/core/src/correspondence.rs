//! Relations and correspondences between two finite metric spaces.
//!
//! An irreducible correspondence is an inclusion-minimal correspondence. Every
//! one of them splits uniquely into matched blocks `X_i x Y_i` where one side
//! of each block is a single point; [`BlockDecomposition`] stores that form.
//!
//! Enumeration works in an *oriented* frame whose rows are the smaller space
//! (X on ties). Each row picks its image: either one column, which other
//! single-column rows may share, or at least two columns that nobody else
//! touches. Rows are decided in increasing order and images are offered so
//! that the emitted pair lists come out in strictly increasing lexicographic
//! order of the oriented `(row, column)` pairs.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::metric::{block_distances_unchecked, FiniteMetricSpace};

/// Widest side the bitmask walk supports.
pub const MAX_WALK_SIDE: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorrespondenceError {
    EmptyRelation,
    IndexOutOfRange { x: usize, y: usize },
    NotACorrespondence,
    NotIrreducible { x: usize, y: usize },
    SizeMismatch,
    InvalidBlocks(&'static str),
}

impl CorrespondenceError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::EmptyRelation => "EmptyRelation",
            Self::IndexOutOfRange { .. } => "IndexOutOfRange",
            Self::NotACorrespondence => "NotACorrespondence",
            Self::NotIrreducible { .. } => "NotIrreducible",
            Self::SizeMismatch => "SizeMismatch",
            Self::InvalidBlocks(_) => "InvalidBlocks",
        }
    }
}

impl fmt::Display for CorrespondenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptyRelation => write!(f, "relation has no pairs"),
            Self::IndexOutOfRange { x, y } => write!(f, "pair ({x}, {y}) is out of range"),
            Self::NotACorrespondence => write!(f, "relation does not cover both spaces"),
            Self::NotIrreducible { x, y } => {
                write!(f, "pair ({x}, {y}) has both a multi-point image and a multi-point pre-image")
            }
            Self::SizeMismatch => write!(f, "relation sizes do not match the spaces"),
            Self::InvalidBlocks(why) => write!(f, "invalid block decomposition: {why}"),
        }
    }
}

impl core::error::Error for CorrespondenceError {}

/// A nonempty set of index pairs, kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    nx: usize,
    ny: usize,
    pairs: Vec<(usize, usize)>,
}

impl Relation {
    pub fn new(nx: usize, ny: usize, mut pairs: Vec<(usize, usize)>) -> Result<Self, CorrespondenceError> {
        if pairs.is_empty() {
            return Err(CorrespondenceError::EmptyRelation);
        }
        if let Some(&(x, y)) = pairs.iter().find(|&&(x, y)| x >= nx || y >= ny) {
            return Err(CorrespondenceError::IndexOutOfRange { x, y });
        }
        pairs.sort_unstable();
        pairs.dedup();
        Ok(Self { nx, ny, pairs })
    }

    /// The full relation `X x Y`.
    pub fn full(nx: usize, ny: usize) -> Self {
        let pairs = (0..nx).flat_map(|x| (0..ny).map(move |y| (x, y))).collect();
        Self { nx, ny, pairs }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            nx: n,
            ny: n,
            pairs: (0..n).map(|i| (i, i)).collect(),
        }
    }

    pub fn sizes(&self) -> (usize, usize) {
        (self.nx, self.ny)
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.pairs.binary_search(&(x, y)).is_ok()
    }

    pub fn image(&self, x: usize) -> Vec<usize> {
        self.pairs.iter().filter(|p| p.0 == x).map(|p| p.1).collect()
    }

    pub fn preimage(&self, y: usize) -> Vec<usize> {
        self.pairs.iter().filter(|p| p.1 == y).map(|p| p.0).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut pairs: Vec<_> = self.pairs.iter().map(|&(x, y)| (y, x)).collect();
        pairs.sort_unstable();
        Self {
            nx: self.ny,
            ny: self.nx,
            pairs,
        }
    }

    fn degrees(&self) -> (Vec<usize>, Vec<usize>) {
        let mut dx = vec![0; self.nx];
        let mut dy = vec![0; self.ny];
        for &(x, y) in &self.pairs {
            dx[x] += 1;
            dy[y] += 1;
        }
        (dx, dy)
    }
}

pub fn is_correspondence(rel: &Relation) -> bool {
    let (dx, dy) = rel.degrees();
    dx.iter().all(|&d| d > 0) && dy.iter().all(|&d| d > 0)
}

/// A relation whose projections cover both spaces.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Correspondence(Relation);

impl Correspondence {
    pub fn new(rel: Relation) -> Result<Self, CorrespondenceError> {
        if is_correspondence(&rel) {
            Ok(Self(rel))
        } else {
            Err(CorrespondenceError::NotACorrespondence)
        }
    }

    pub fn from_pairs(nx: usize, ny: usize, pairs: Vec<(usize, usize)>) -> Result<Self, CorrespondenceError> {
        Self::new(Relation::new(nx, ny, pairs)?)
    }

    pub fn relation(&self) -> &Relation {
        &self.0
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        self.0.pairs()
    }

    pub fn sizes(&self) -> (usize, usize) {
        self.0.sizes()
    }

    pub fn transpose(&self) -> Self {
        Self(self.0.transpose())
    }

    pub fn into_relation(self) -> Relation {
        self.0
    }
}

impl TryFrom<Relation> for Correspondence {
    type Error = CorrespondenceError;

    fn try_from(rel: Relation) -> Result<Self, Self::Error> {
        Self::new(rel)
    }
}

/// Largest `| d_X(x, x') - d_Y(y, y') |` over all pairs of pairs in the relation.
pub fn distortion(x: &FiniteMetricSpace, y: &FiniteMetricSpace, rel: &Relation) -> Result<f64, CorrespondenceError> {
    if rel.sizes() != (x.len(), y.len()) {
        return Err(CorrespondenceError::SizeMismatch);
    }
    let pairs = rel.pairs();
    let mut worst = 0.0_f64;
    for (p, &(a, b)) in pairs.iter().enumerate() {
        for &(c, d) in &pairs[p + 1..] {
            worst = worst.max((x.dist(a, c) - y.dist(b, d)).abs());
        }
    }
    Ok(worst)
}

/// Every pair has a singleton image or a singleton pre-image.
pub fn is_irreducible(r: &Correspondence) -> bool {
    first_reducible_pair(r.relation()).is_none()
}

fn first_reducible_pair(rel: &Relation) -> Option<(usize, usize)> {
    let (dx, dy) = rel.degrees();
    rel.pairs().iter().copied().find(|&(x, y)| dx[x] > 1 && dy[y] > 1)
}

/// Drops pairs until the correspondence is irreducible.
///
/// Points of X are visited in increasing order and, for each, its image is
/// trimmed from the largest index downward. A pair is dropped only while both
/// its endpoints keep another partner, so coverage is preserved; degrees never
/// grow, so a single pass reaches a fixed point.
pub fn reduce_to_irreducible(r: &Correspondence) -> Correspondence {
    let rel = r.relation();
    let (mut dx, mut dy) = rel.degrees();
    let mut keep = vec![true; rel.len()];
    let mut order: Vec<usize> = (0..rel.len()).collect();
    order.sort_by(|&a, &b| {
        let (pa, pb) = (rel.pairs[a], rel.pairs[b]);
        pa.0.cmp(&pb.0).then(pb.1.cmp(&pa.1))
    });
    for idx in order {
        let (x, y) = rel.pairs[idx];
        if dx[x] > 1 && dy[y] > 1 {
            keep[idx] = false;
            dx[x] -= 1;
            dy[y] -= 1;
        }
    }
    let pairs = rel
        .pairs
        .iter()
        .zip(&keep)
        .filter(|(_, &k)| k)
        .map(|(&p, _)| p)
        .collect();
    Correspondence(Relation {
        nx: rel.nx,
        ny: rel.ny,
        pairs,
    })
}

/// Matched partitions `{X_i}` and `{Y_i}` with `min(#X_i, #Y_i) = 1` per block.
///
/// Blocks are sorted by their smallest X index; each side is sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockDecomposition {
    nx: usize,
    ny: usize,
    blocks: Vec<(Vec<usize>, Vec<usize>)>,
}

impl BlockDecomposition {
    pub fn new(nx: usize, ny: usize, mut blocks: Vec<(Vec<usize>, Vec<usize>)>) -> Result<Self, CorrespondenceError> {
        if blocks.is_empty() {
            return Err(CorrespondenceError::InvalidBlocks("no blocks"));
        }
        let mut seen_x = vec![false; nx];
        let mut seen_y = vec![false; ny];
        for (xs, ys) in &mut blocks {
            if xs.is_empty() || ys.is_empty() {
                return Err(CorrespondenceError::InvalidBlocks("empty block side"));
            }
            if xs.len() > 1 && ys.len() > 1 {
                return Err(CorrespondenceError::InvalidBlocks("neither side of a block is a single point"));
            }
            xs.sort_unstable();
            ys.sort_unstable();
            for (side, seen) in [(&*xs, &mut seen_x), (&*ys, &mut seen_y)] {
                for &i in side {
                    if i >= seen.len() {
                        return Err(CorrespondenceError::InvalidBlocks("index out of range"));
                    }
                    if core::mem::replace(&mut seen[i], true) {
                        return Err(CorrespondenceError::InvalidBlocks("blocks overlap"));
                    }
                }
            }
        }
        if seen_x.contains(&false) || seen_y.contains(&false) {
            return Err(CorrespondenceError::InvalidBlocks("blocks do not cover both spaces"));
        }
        blocks.sort_unstable_by_key(|(xs, ys)| (xs[0], ys[0]));
        Ok(Self { nx, ny, blocks })
    }

    pub fn sizes(&self) -> (usize, usize) {
        (self.nx, self.ny)
    }

    pub fn blocks(&self) -> &[(Vec<usize>, Vec<usize>)] {
        &self.blocks
    }

    /// The pair set `U_i X_i x Y_i`.
    pub fn to_correspondence(&self) -> Correspondence {
        let mut pairs = Vec::new();
        for (xs, ys) in &self.blocks {
            for &a in xs {
                for &b in ys {
                    pairs.push((a, b));
                }
            }
        }
        pairs.sort_unstable();
        Correspondence(Relation {
            nx: self.nx,
            ny: self.ny,
            pairs,
        })
    }
}

/// The unique block form of an irreducible correspondence: blocks are the
/// distinct products `R^{-1}(y) x R(x)` over pairs `(x, y)`.
pub fn decompose_blocks(r: &Correspondence) -> Result<BlockDecomposition, CorrespondenceError> {
    let rel = r.relation();
    if let Some((x, y)) = first_reducible_pair(rel) {
        return Err(CorrespondenceError::NotIrreducible { x, y });
    }
    let (nx, ny) = rel.sizes();
    let mut blocks: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    let mut done_x = vec![false; nx];
    for &(x, y) in rel.pairs() {
        if done_x[x] {
            continue;
        }
        let xs = rel.preimage(y);
        let ys = rel.image(x);
        for &a in &xs {
            done_x[a] = true;
        }
        blocks.push((xs, ys));
    }
    BlockDecomposition::new(nx, ny, blocks)
}

/// The block form of the distortion: the largest of
/// `sup d_X(X_i, X_j) - inf d_Y(Y_i, Y_j)` and the mirrored term over all `i, j`.
pub fn block_distortion(
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
    b: &BlockDecomposition,
) -> Result<f64, CorrespondenceError> {
    if b.sizes() != (x.len(), y.len()) {
        return Err(CorrespondenceError::SizeMismatch);
    }
    let blocks = b.blocks();
    let mut worst = 0.0_f64;
    for (i, (xi, yi)) in blocks.iter().enumerate() {
        for (xj, yj) in &blocks[i..] {
            let (x_inf, x_sup) = block_distances_unchecked(x, xi, xj);
            let (y_inf, y_sup) = block_distances_unchecked(y, yi, yj);
            worst = worst.max(x_sup - y_inf).max(y_sup - x_inf);
        }
    }
    Ok(worst)
}

/// Lazily enumerates every irreducible correspondence between index sets of
/// sizes `nx` and `ny`, each exactly once.
///
/// # Panics
///
/// If the larger side exceeds [`MAX_WALK_SIDE`] or either side is zero.
pub fn enumerate_irreducible(nx: usize, ny: usize) -> IrreducibleIter {
    IrreducibleIter::new(nx, ny)
}

/// Which space supplies the rows of the oriented walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Orientation {
    XRows,
    YRows,
}

impl Orientation {
    pub(crate) fn for_sizes(nx: usize, ny: usize) -> Self {
        if nx <= ny {
            Self::XRows
        } else {
            Self::YRows
        }
    }
}

/// Partial assignment of row images during the walk.
#[derive(Debug, Clone)]
pub(crate) struct WalkState {
    pub rows: usize,
    pub cols: usize,
    pub images: Vec<u64>,
    pub pre_count: Vec<u32>,
    /// Columns owned by a multi-column image.
    pub locked: u64,
    /// Columns with no pre-image yet.
    pub unused: u64,
}

impl WalkState {
    pub(crate) fn new(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "both sides need at least one point");
        assert!(cols <= MAX_WALK_SIDE && rows <= MAX_WALK_SIDE, "side too large for enumeration");
        Self {
            rows,
            cols,
            images: Vec::with_capacity(rows),
            pre_count: vec![0; cols],
            locked: 0,
            unused: full_mask(cols),
        }
    }

    #[inline]
    pub(crate) fn next_row(&self) -> usize {
        self.images.len()
    }

    pub(crate) fn push(&mut self, image: u64) {
        let mut m = image;
        while m != 0 {
            let c = m.trailing_zeros() as usize;
            self.pre_count[c] += 1;
            m &= m - 1;
        }
        if image.count_ones() > 1 {
            self.locked |= image;
        }
        self.unused &= !image;
        self.images.push(image);
    }

    pub(crate) fn pop(&mut self) {
        let image = self.images.pop().expect("pop on empty walk");
        let mut m = image;
        while m != 0 {
            let c = m.trailing_zeros() as usize;
            self.pre_count[c] -= 1;
            if self.pre_count[c] == 0 {
                self.unused |= 1 << c;
            }
            m &= m - 1;
        }
        if image.count_ones() > 1 {
            self.locked &= !image;
        }
    }

    /// Images the next row may take, in emission order. Choices that leave a
    /// later row without any admissible image are left out.
    pub(crate) fn candidates(&self) -> Vec<u64> {
        let row = self.next_row();
        let free = full_mask(self.cols) & !self.locked;
        let last = row + 1 == self.rows;
        let mut out = Vec::new();
        if last {
            match self.unused.count_ones() {
                0 => out.extend(bits(free).map(|c| 1u64 << c)),
                _ => out.push(self.unused),
            }
            return out;
        }
        out.extend(bits(free).map(|c| 1u64 << c));
        let u = self.unused;
        // Proper nonempty submasks of `u` with at least two bits, plus `u` itself.
        let mut sub = u;
        while sub != 0 {
            if sub.count_ones() >= 2 {
                out.push(sub);
            }
            sub = (sub - 1) & u;
        }
        // A multi-column image that locks every column strands the remaining rows.
        let full = full_mask(self.cols);
        out.retain(|&img| img.count_ones() == 1 || (self.locked | img) != full);
        out.sort_by(|&a, &b| image_order(a, b));
        out
    }

    pub(crate) fn pairs(&self, orient: Orientation) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for (r, &img) in self.images.iter().enumerate() {
            for c in bits(img) {
                pairs.push(match orient {
                    Orientation::XRows => (r, c),
                    Orientation::YRows => (c, r),
                });
            }
        }
        pairs.sort_unstable();
        pairs
    }

    pub(crate) fn blocks(&self, orient: Orientation) -> Vec<(Vec<usize>, Vec<usize>)> {
        let mut blocks: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        let mut shared: Vec<Option<usize>> = vec![None; self.cols];
        for (r, &img) in self.images.iter().enumerate() {
            if img.count_ones() > 1 {
                blocks.push((vec![r], bits(img).collect()));
            } else {
                let c = img.trailing_zeros() as usize;
                match shared[c] {
                    Some(b) => blocks[b].0.push(r),
                    None => {
                        shared[c] = Some(blocks.len());
                        blocks.push((vec![r], vec![c]));
                    }
                }
            }
        }
        if orient == Orientation::YRows {
            for b in &mut blocks {
                core::mem::swap(&mut b.0, &mut b.1);
            }
        }
        blocks
    }
}

/// Order of images for one row: sets compare element by element and, when one
/// is a prefix of the other, the longer set comes first (its next pair still
/// belongs to the current row, so it sorts before the next row's pairs).
pub(crate) fn image_order(a: u64, b: u64) -> Ordering {
    let (mut a, mut b) = (a, b);
    loop {
        match (a == 0, b == 0) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Greater,
            (false, true) => return Ordering::Less,
            _ => {}
        }
        let (la, lb) = (a.trailing_zeros(), b.trailing_zeros());
        if la != lb {
            return la.cmp(&lb);
        }
        a &= a - 1;
        b &= b - 1;
    }
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let c = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(c)
        }
    })
}

/// Iterator returned by [`enumerate_irreducible`].
#[derive(Debug)]
pub struct IrreducibleIter {
    nx: usize,
    ny: usize,
    orient: Orientation,
    state: WalkState,
    stack: Vec<(Vec<u64>, usize)>,
    done: bool,
}

impl IrreducibleIter {
    fn new(nx: usize, ny: usize) -> Self {
        let orient = Orientation::for_sizes(nx, ny);
        let (rows, cols) = match orient {
            Orientation::XRows => (nx, ny),
            Orientation::YRows => (ny, nx),
        };
        let state = WalkState::new(rows, cols);
        let first = state.candidates();
        Self {
            nx,
            ny,
            orient,
            state,
            stack: vec![(first, 0)],
            done: false,
        }
    }

    /// Pair lists instead of block decompositions, sorted lexicographically.
    pub fn pairs(self) -> impl Iterator<Item = Vec<(usize, usize)>> {
        let orient = self.orient;
        let mut inner = self;
        core::iter::from_fn(move || inner.advance().then(|| inner.state.pairs(orient)))
    }

    /// Moves to the next complete assignment; false when exhausted.
    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        // Leave the previously emitted leaf.
        if self.state.next_row() == self.state.rows {
            self.state.pop();
        }
        while let Some((cands, pos)) = self.stack.last_mut() {
            if *pos == cands.len() {
                self.stack.pop();
                if self.stack.is_empty() {
                    break;
                }
                self.state.pop();
                continue;
            }
            let img = cands[*pos];
            *pos += 1;
            self.state.push(img);
            if self.state.next_row() == self.state.rows {
                return true;
            }
            let next = self.state.candidates();
            self.stack.push((next, 0));
        }
        self.done = true;
        false
    }
}

impl Iterator for IrreducibleIter {
    type Item = BlockDecomposition;

    fn next(&mut self) -> Option<BlockDecomposition> {
        if !self.advance() {
            return None;
        }
        let mut blocks = self.state.blocks(self.orient);
        for (xs, ys) in &mut blocks {
            xs.sort_unstable();
            ys.sort_unstable();
        }
        blocks.sort_unstable_by_key(|(xs, ys)| (xs[0], ys[0]));
        Some(BlockDecomposition {
            nx: self.nx,
            ny: self.ny,
            blocks,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::FiniteMetricSpace;

    fn corr(nx: usize, ny: usize, pairs: &[(usize, usize)]) -> Correspondence {
        Correspondence::from_pairs(nx, ny, pairs.to_vec()).unwrap()
    }

    /// Every subset of `nx x ny` that is a correspondence, by bitmask.
    fn all_correspondences(nx: usize, ny: usize) -> Vec<Relation> {
        let cells: Vec<(usize, usize)> = (0..nx).flat_map(|x| (0..ny).map(move |y| (x, y))).collect();
        (1u32..(1 << cells.len()))
            .map(|m| {
                let pairs = cells.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &p)| p).collect();
                Relation::new(nx, ny, pairs).unwrap()
            })
            .filter(is_correspondence)
            .collect()
    }

    fn brute_irreducible(nx: usize, ny: usize) -> Vec<Vec<(usize, usize)>> {
        let mut v: Vec<_> = all_correspondences(nx, ny)
            .into_iter()
            .map(|r| Correspondence::new(r).unwrap())
            .filter(is_irreducible)
            .map(|c| c.pairs().to_vec())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn correspondence_checks() {
        assert!(is_correspondence(&Relation::full(2, 3)));
        assert!(!is_correspondence(&Relation::new(2, 2, vec![(0, 0)]).unwrap()));
        assert!(is_correspondence(&Relation::new(3, 3, vec![(0, 2), (1, 0), (2, 1)]).unwrap()));
        assert_eq!(Relation::new(2, 2, vec![]), Err(CorrespondenceError::EmptyRelation));
        assert_eq!(
            Correspondence::from_pairs(2, 2, vec![(0, 0)]),
            Err(CorrespondenceError::NotACorrespondence)
        );
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&corr(3, 3, &[(0, 1), (1, 2), (2, 0)])));
        assert!(!is_irreducible(&corr(2, 2, &[(0, 0), (0, 1), (1, 1)])));
        assert!(!is_irreducible(&Correspondence::new(Relation::full(2, 2)).unwrap()));
    }

    #[test]
    fn decomposition_examples() {
        let b = decompose_blocks(&Correspondence::new(Relation::identity(4)).unwrap()).unwrap();
        assert_eq!(b.blocks().len(), 4);
        let b = decompose_blocks(&Correspondence::new(Relation::full(1, 3)).unwrap()).unwrap();
        assert_eq!(b.blocks(), &[(vec![0], vec![0, 1, 2])]);
        let b = decompose_blocks(&corr(2, 3, &[(0, 0), (1, 1), (1, 2)])).unwrap();
        assert_eq!(b.blocks(), &[(vec![0], vec![0]), (vec![1], vec![1, 2])]);
        assert_eq!(b.to_correspondence(), corr(2, 3, &[(0, 0), (1, 1), (1, 2)]));
        assert_eq!(
            decompose_blocks(&Correspondence::new(Relation::full(2, 2)).unwrap()),
            Err(CorrespondenceError::NotIrreducible { x: 0, y: 0 })
        );
    }

    #[test]
    fn reduction_examples() {
        let id = Correspondence::new(Relation::identity(3)).unwrap();
        assert_eq!(reduce_to_irreducible(&id), id);
        let r = corr(2, 2, &[(0, 0), (0, 1), (1, 1)]);
        assert_eq!(reduce_to_irreducible(&r).pairs(), &[(0, 0), (1, 1)]);
        let full = Correspondence::new(Relation::full(2, 2)).unwrap();
        assert_eq!(reduce_to_irreducible(&full).pairs(), &[(0, 0), (1, 1)]);
    }

    #[test]
    fn reduction_of_every_small_correspondence() {
        for (nx, ny) in [(2, 2), (2, 3), (3, 3), (1, 4)] {
            for rel in all_correspondences(nx, ny) {
                let r = Correspondence::new(rel.clone()).unwrap();
                let red = reduce_to_irreducible(&r);
                assert!(is_irreducible(&red), "{rel:?}");
                assert!(red.pairs().iter().all(|&(a, b)| rel.contains(a, b)));
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_irreducible(1, 4).count(), 1);
        assert_eq!(enumerate_irreducible(4, 1).count(), 1);
        assert_eq!(enumerate_irreducible(2, 2).count(), 2);
        assert_eq!(enumerate_irreducible(2, 3).count(), 6);
        assert_eq!(enumerate_irreducible(3, 2).count(), 6);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for nx in 1..=4 {
            for ny in 1..=4 {
                let mut got: Vec<_> = enumerate_irreducible(nx, ny)
                    .map(|b| b.to_correspondence().pairs().to_vec())
                    .collect();
                got.sort();
                assert_eq!(got, brute_irreducible(nx, ny), "sizes {nx}x{ny}");
            }
        }
    }

    #[test]
    fn enumeration_is_strictly_increasing_in_oriented_frame() {
        for (nx, ny) in [(3, 3), (2, 5), (5, 2), (4, 4)] {
            let flip = nx > ny;
            let lists: Vec<Vec<(usize, usize)>> = enumerate_irreducible(nx, ny)
                .pairs()
                .map(|p| {
                    let mut p: Vec<_> = if flip { p.iter().map(|&(a, b)| (b, a)).collect() } else { p };
                    p.sort_unstable();
                    p
                })
                .collect();
            assert!(lists.windows(2).all(|w| w[0] < w[1]), "{nx}x{ny}");
        }
    }

    #[test]
    fn distortion_examples() {
        let x = FiniteMetricSpace::from_rows(&[vec![0., 1., 2.], vec![1., 0., 1.], vec![2., 1., 0.]]).unwrap();
        let y = FiniteMetricSpace::from_rows(&[vec![0., 3.], vec![3., 0.]]).unwrap();
        assert_eq!(distortion(&x, &x, &Relation::identity(3)).unwrap(), 0.0);
        assert_eq!(distortion(&x, &y, &Relation::full(3, 2)).unwrap(), 3.0);
        let p = FiniteMetricSpace::one_point();
        assert_eq!(distortion(&p, &x, &Relation::full(1, 3)).unwrap(), 2.0);
        assert_eq!(distortion(&x, &y, &Relation::full(2, 2)), Err(CorrespondenceError::SizeMismatch));
    }

    #[test]
    fn block_distortion_examples() {
        let x = FiniteMetricSpace::from_rows(&[vec![0., 1.], vec![1., 0.]]).unwrap();
        let y = FiniteMetricSpace::from_rows(&[vec![0., 1., 2.], vec![1., 0., 1.5], vec![2., 1.5, 0.]]).unwrap();
        let single = BlockDecomposition::new(1, 3, vec![(vec![0], vec![0, 1, 2])]).unwrap();
        assert_eq!(block_distortion(&FiniteMetricSpace::one_point(), &y, &single).unwrap(), 2.0);
        for b in enumerate_irreducible(2, 3) {
            let direct = distortion(&x, &y, b.to_correspondence().relation()).unwrap();
            assert_eq!(block_distortion(&x, &y, &b).unwrap(), direct);
        }
        let id = BlockDecomposition::new(2, 2, vec![(vec![0], vec![1]), (vec![1], vec![0])]).unwrap();
        assert_eq!(block_distortion(&x, &x, &id).unwrap(), 0.0);
    }

    #[test]
    fn block_validation() {
        assert!(BlockDecomposition::new(2, 2, vec![(vec![0, 1], vec![0, 1])]).is_err());
        assert!(BlockDecomposition::new(2, 2, vec![(vec![0], vec![0])]).is_err());
        assert!(BlockDecomposition::new(2, 2, vec![(vec![0], vec![0]), (vec![0], vec![1])]).is_err());
    }

    #[test]
    fn image_order_prefers_longer_on_shared_prefix() {
        assert_eq!(image_order(0b011, 0b001), Ordering::Less);
        assert_eq!(image_order(0b001, 0b010), Ordering::Less);
        assert_eq!(image_order(0b110, 0b011), Ordering::Greater);
    }
}
