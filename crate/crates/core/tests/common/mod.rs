//! Brute-force oracles shared by the integration tests. None of these go
//! through the walk, the solver or the colouring code.
#![allow(dead_code)]

use ghborsuk_core::{generate, FiniteMetricSpace, GenSpec};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Smallest distortion over every subset of `X x Y` that covers both sides.
pub fn brute_min_distortion(x: &FiniteMetricSpace, y: &FiniteMetricSpace) -> f64 {
    let (nx, ny) = (x.len(), y.len());
    let cells: Vec<(usize, usize)> = (0..nx).flat_map(|a| (0..ny).map(move |b| (a, b))).collect();
    assert!(cells.len() <= 20, "oracle limited to 20 cells");
    let mut best = f64::INFINITY;
    for mask in 1u32..(1 << cells.len()) {
        let pairs: Vec<(usize, usize)> = cells
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let covers_x = (0..nx).all(|a| pairs.iter().any(|p| p.0 == a));
        let covers_y = (0..ny).all(|b| pairs.iter().any(|p| p.1 == b));
        if !(covers_x && covers_y) {
            continue;
        }
        let mut dis = 0.0_f64;
        for &(a, b) in &pairs {
            for &(c, d) in &pairs {
                dis = dis.max((x.dist(a, c) - y.dist(b, d)).abs());
            }
        }
        best = best.min(dis);
    }
    best
}

/// All set partitions of `0..n` as restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max {
            cur.push(b);
            rec(i + 1, n, max.max(b + 1), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(1, n, 1, &mut vec![0], &mut out);
    }
    out
}

/// Fewest blocks in a partition whose blocks all have diameter strictly below `diam X`.
pub fn brute_borsuk(x: &FiniteMetricSpace) -> usize {
    let n = x.len();
    let diam = x.diameter();
    set_partitions(n)
        .into_iter()
        .filter(|labels| {
            (0..n).all(|i| (0..n).all(|j| labels[i] != labels[j] || x.dist(i, j) < diam))
        })
        .map(|labels| labels.iter().max().unwrap() + 1)
        .min()
        .unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A generated space of a random kind with size in `sizes`.
pub fn random_space(seed: u64, sizes: std::ops::RangeInclusive<usize>) -> FiniteMetricSpace {
    let mut r = rng(seed);
    let spec: GenSpec = ghborsuk_core::generators::random_spec(&mut r, sizes);
    generate(&spec).unwrap()
}
