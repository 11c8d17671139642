//! Exact clique solvers: branch and bound with greedy-coloring bounds, a
//! subset-enumeration oracle, and fixed-size clique counting.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Cap on vertex count for the subset-enumeration oracle.
pub const DEFAULT_OMEGA_BRUTE_CAP: usize = 16;

struct Bitset;

impl Bitset {
    fn full(n: usize, words: usize) -> Vec<u64> {
        let mut m = vec![u64::MAX; words];
        if n % 64 != 0 && words > 0 {
            m[words - 1] = (1u64 << (n % 64)) - 1;
        }
        if n == 0 {
            m.clear();
        }
        m
    }

    fn count(m: &[u64]) -> usize {
        m.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn contains(m: &[u64], v: usize) -> bool {
        m[v / 64] >> (v % 64) & 1 != 0
    }

    fn remove(m: &mut [u64], v: usize) {
        m[v / 64] &= !(1 << (v % 64));
    }

    fn iter(m: &[u64]) -> impl Iterator<Item = usize> + '_ {
        m.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }
}

/// A maximum clique of `g`, found by branch and bound with a greedy-coloring
/// upper bound recomputed at every node. Deterministic: the static vertex
/// order is descending degree with index tiebreak.
pub fn max_clique(g: &Graph) -> VertexSet {
    let n = g.n();
    if n == 0 {
        return VertexSet::new(vec![]);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let words = g.words();
    let mut best: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let candidates = Bitset::full(n, words);
    expand(g, &order, &candidates, &mut current, &mut best);
    VertexSet::new(best)
}

fn expand(g: &Graph, order: &[usize], candidates: &[u64], current: &mut Vec<usize>, best: &mut Vec<usize>) {
    // greedy coloring of the candidate set in static order; color numbers
    // bound the clique size attainable from each vertex
    let mut classes: Vec<Vec<u64>> = Vec::new();
    let mut colored: Vec<(usize, usize)> = Vec::new(); // (vertex, color index)
    for &v in order {
        if !Bitset::contains(candidates, v) {
            continue;
        }
        let mut c = 0;
        while c < classes.len() {
            let clash = g
                .row(v)
                .iter()
                .zip(&classes[c])
                .any(|(a, b)| a & b != 0);
            if !clash {
                break;
            }
            c += 1;
        }
        if c == classes.len() {
            classes.push(vec![0u64; g.words()]);
        }
        classes[c][v / 64] |= 1 << (v % 64);
        colored.push((v, c + 1));
    }
    // process in descending color order so the bound check can cut the loop
    colored.sort_by_key(|&(_, c)| c);
    let mut remaining = candidates.to_vec();
    for &(v, bound) in colored.iter().rev() {
        if current.len() + bound <= best.len() {
            return;
        }
        current.push(v);
        let next: Vec<u64> = remaining
            .iter()
            .zip(g.row(v))
            .map(|(a, b)| a & b)
            .collect();
        if Bitset::count(&next) == 0 {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(g, order, &next, current, best);
        }
        current.pop();
        Bitset::remove(&mut remaining, v);
    }
}

/// Clique number by exhausting all vertex subsets; independent oracle for
/// `max_clique`.
pub fn omega_brute(g: &Graph) -> Result<usize> {
    omega_brute_capped(g, DEFAULT_OMEGA_BRUTE_CAP)
}

pub fn omega_brute_capped(g: &Graph, cap: usize) -> Result<usize> {
    let n = g.n();
    if n > cap {
        return Err(Error::SolverCapExceeded { n, cap });
    }
    let rows: Vec<u64> = (0..n)
        .map(|v| (0..n).filter(|&u| g.has_edge(v, u)).fold(0u64, |m, u| m | 1 << u))
        .collect();
    let mut best = 0usize;
    for s in 0u64..(1 << n) {
        let size = s.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut t = s;
        let mut ok = true;
        while t != 0 {
            let v = t.trailing_zeros() as usize;
            t &= t - 1;
            if rows[v] & s != s & !(1 << v) {
                ok = false;
                break;
            }
        }
        if ok {
            best = size;
        }
    }
    Ok(best)
}

/// Number of k-subsets of vertices inducing a complete subgraph.
pub fn count_cliques_of_size(g: &Graph, k: usize) -> u64 {
    if k == 0 {
        return 1;
    }
    let n = g.n();
    let words = g.words();
    let candidates = Bitset::full(n, words);
    let mut count = 0u64;
    count_from(g, &candidates, 0, k, &mut count);
    count
}

fn count_from(g: &Graph, candidates: &[u64], start: usize, need: usize, count: &mut u64) {
    if need == 0 {
        *count += 1;
        return;
    }
    if Bitset::count(candidates) < need {
        return;
    }
    for v in Bitset::iter(candidates).skip_while(|&v| v < start) {
        if need == 1 {
            *count += 1;
            continue;
        }
        let next: Vec<u64> = candidates
            .iter()
            .zip(g.row(v))
            .map(|(a, b)| a & b)
            .collect();
        count_from(g, &next, v + 1, need - 1, count);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::clique_boost;
    use crate::graph::*;

    #[test]
    fn max_clique_examples() {
        assert_eq!(max_clique(&complete_graph(5)).len(), 5);
        assert_eq!(max_clique(&cycle_graph(5).unwrap()).len(), 2);
        assert_eq!(max_clique(&empty_graph(0)).len(), 0);
        assert_eq!(max_clique(&empty_graph(3)).len(), 1);
    }

    #[test]
    fn boosted_c5_max_clique_is_the_added_clique() {
        let (boosted, _) = clique_boost(&cycle_graph(5).unwrap()).unwrap();
        let clique = max_clique(&boosted);
        assert_eq!(clique, VertexSet::range(5, 10));
        // oracle: all 2^10 subsets
        assert_eq!(omega_brute(&boosted).unwrap(), 5);
    }

    #[test]
    fn omega_brute_examples() {
        assert_eq!(omega_brute(&empty_graph(3)).unwrap(), 1);
        // K_4 minus the edge {2,3}
        let k4_minus = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(omega_brute(&k4_minus).unwrap(), 3);
        let mut g = path_graph(6);
        g.add_edge(1, 3).unwrap();
        assert_eq!(omega_brute(&g).unwrap(), 3);
        assert!(omega_brute(&empty_graph(17)).is_err());
    }

    #[test]
    fn clique_counting() {
        assert_eq!(count_cliques_of_size(&complete_graph(4), 3), 4);
        assert_eq!(count_cliques_of_size(&cycle_graph(5).unwrap(), 3), 0);
        let (boosted, _) = clique_boost(&path_graph(3)).unwrap();
        assert_eq!(count_cliques_of_size(&boosted, 3), 1);
    }

    #[test]
    fn solver_matches_oracle_on_random_graphs() {
        // simple deterministic LCG corpus
        let mut state = 0x2545F491u64;
        for n in 4..=12usize {
            for _ in 0..20 {
                let mut g = Graph::new(n).unwrap();
                for u in 0..n {
                    for v in (u + 1)..n {
                        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        if state >> 33 & 1 == 1 {
                            g.add_edge(u, v).unwrap();
                        }
                    }
                }
                assert_eq!(max_clique(&g).len(), omega_brute(&g).unwrap());
            }
        }
    }
}
