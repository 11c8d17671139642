//! Exact chromatic number by saturation-degree branch and bound.

use crate::error::{Error, Result};
use crate::clique::max_clique;
use crate::graph::Graph;

/// Cap on vertex count for exact coloring.
pub const DEFAULT_CHI_CAP: usize = 64;

/// Exact chromatic number. Lower bound from the clique solver, upper bound
/// from greedy DSATUR, then branch and bound on saturation degree.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_capped(g, DEFAULT_CHI_CAP)
}

pub fn chromatic_number_capped(g: &Graph, cap: usize) -> Result<usize> {
    let n = g.n();
    if n > cap {
        return Err(Error::SolverCapExceeded { n, cap });
    }
    if n == 0 {
        return Ok(0);
    }
    let lower = max_clique(g).len();
    let mut colors = vec![usize::MAX; n];
    let mut best = greedy_dsatur(g);
    if best == lower {
        return Ok(best);
    }
    branch(g, &mut colors, 0, 0, lower, &mut best);
    Ok(best)
}

fn greedy_dsatur(g: &Graph) -> usize {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    let mut used = 0usize;
    for _ in 0..n {
        let v = pick_vertex(g, &colors).unwrap();
        let c = first_free_color(g, &colors, v);
        colors[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// Uncolored vertex of maximum saturation; ties by degree, then index.
fn pick_vertex(g: &Graph, colors: &[usize]) -> Option<usize> {
    let n = g.n();
    (0..n)
        .filter(|&v| colors[v] == usize::MAX)
        .max_by_key(|&v| {
            let mut sat: Vec<usize> = g
                .neighbors(v)
                .filter_map(|u| (colors[u] != usize::MAX).then_some(colors[u]))
                .collect();
            sat.sort_unstable();
            sat.dedup();
            (sat.len(), g.degree(v), std::cmp::Reverse(v))
        })
}

fn first_free_color(g: &Graph, colors: &[usize], v: usize) -> usize {
    let mut taken = 0u64;
    for u in g.neighbors(v) {
        if colors[u] != usize::MAX {
            taken |= 1 << colors[u];
        }
    }
    taken.trailing_ones() as usize
}

fn branch(g: &Graph, colors: &mut [usize], colored: usize, used: usize, lower: usize, best: &mut usize) {
    if used >= *best {
        return;
    }
    if colored == g.n() {
        *best = used;
        return;
    }
    let v = pick_vertex(g, colors).unwrap();
    let mut taken = 0u64;
    for u in g.neighbors(v) {
        if colors[u] != usize::MAX {
            taken |= 1 << colors[u];
        }
    }
    let limit = (used + 1).min(*best - 1);
    for c in 0..limit {
        if taken >> c & 1 != 0 {
            continue;
        }
        colors[v] = c;
        branch(g, colors, colored + 1, used.max(c + 1), lower, best);
        colors[v] = usize::MAX;
        if *best == lower {
            return;
        }
    }
}
