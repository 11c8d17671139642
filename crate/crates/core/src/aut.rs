//! Automorphism groups: a factorial-time oracle for tiny graphs and a
//! partition-refinement backtracking solver that enumerates every
//! automorphism of desk-scale instances.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::{minimal_generating_set, PermGroup, Permutation};

/// Cap on vertex count for the brute-force oracle.
pub const DEFAULT_BRUTE_CAP: usize = 8;
/// Cap on the number of automorphisms the solver will enumerate.
pub const DEFAULT_AUT_CAP: usize = 1_000_000;

/// True iff `p` preserves adjacency and non-adjacency on every pair.
pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool> {
    if p.degree() != g.n() {
        return Err(Error::DegreeMismatch(g.n(), p.degree()));
    }
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            if g.has_edge(u, v) != g.has_edge(p.apply(u), p.apply(v)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Filters all n! permutations through `is_automorphism`. The generator list
/// of the result is the full element list.
pub fn aut_brute_force(g: &Graph) -> Result<PermGroup> {
    aut_brute_force_capped(g, DEFAULT_BRUTE_CAP)
}

pub fn aut_brute_force_capped(g: &Graph, cap: usize) -> Result<PermGroup> {
    let n = g.n();
    if n > cap {
        return Err(Error::SolverCapExceeded { n, cap });
    }
    let mut elements = Vec::new();
    let mut images: Vec<usize> = (0..n).collect();
    collect_perms(g, &mut images, 0, &mut elements);
    let order = elements.len().max(1);
    let elements = if elements.is_empty() {
        vec![Permutation::identity(n)]
    } else {
        elements
    };
    Ok(PermGroup {
        degree: n,
        generators: elements,
        order,
    })
}

fn collect_perms(g: &Graph, images: &mut Vec<usize>, k: usize, out: &mut Vec<Permutation>) {
    let n = g.n();
    if k == n {
        let p = Permutation::from_images(images.clone()).unwrap();
        if is_automorphism(g, &p).unwrap() {
            out.push(p);
        }
        return;
    }
    for i in k..n {
        images.swap(k, i);
        // prune: edges among the first k+1 vertices must be preserved
        let ok = (0..k).all(|j| g.has_edge(j, k) == g.has_edge(images[j], images[k]));
        if ok {
            collect_perms(g, images, k + 1, out);
        }
        images.swap(k, i);
    }
}

/// An ordered partition of the vertex set into cells; each cell is kept
/// sorted by vertex index.
pub type Partition = Vec<Vec<usize>>;

fn cell_mask(words: usize, cell: &[usize]) -> Vec<u64> {
    let mut mask = vec![0u64; words];
    for &v in cell {
        mask[v / 64] |= 1 << (v % 64);
    }
    mask
}

fn count_into(g: &Graph, v: usize, mask: &[u64]) -> usize {
    g.row(v)
        .iter()
        .zip(mask)
        .map(|(a, b)| (a & b).count_ones() as usize)
        .sum()
}

/// Coarsest equitable partition refining `cells`: in the result, any two
/// vertices in one cell have the same number of neighbors in every cell.
/// Split cells are ordered by ascending neighbor count, giving a
/// deterministic, automorphism-invariant refinement.
pub fn equitable_refinement(g: &Graph, cells: &Partition) -> Partition {
    let mut cells: Partition = cells.iter().map(|c| {
        let mut c = c.clone();
        c.sort_unstable();
        c
    }).collect();
    cells.retain(|c| !c.is_empty());
    refine_in_place(g, &mut cells);
    cells
}

fn refine_in_place(g: &Graph, cells: &mut Partition) {
    let words = g.words();
    loop {
        let mut changed = false;
        let masks: Vec<Vec<u64>> = cells.iter().map(|c| cell_mask(words, c)).collect();
        let mut next: Partition = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            // key of a vertex: its neighbor-count profile over all cells
            let keys: Vec<Vec<usize>> = cell
                .iter()
                .map(|&v| masks.iter().map(|m| count_into(g, v, m)).collect())
                .collect();
            if keys.iter().all(|k| *k == keys[0]) {
                next.push(cell.clone());
                continue;
            }
            let mut order: Vec<usize> = (0..cell.len()).collect();
            order.sort_by(|&a, &b| keys[a].cmp(&keys[b]).then(cell[a].cmp(&cell[b])));
            let mut part: Vec<usize> = vec![cell[order[0]]];
            for w in order.windows(2) {
                if keys[w[1]] != keys[w[0]] {
                    next.push(std::mem::take(&mut part));
                }
                part.push(cell[w[1]]);
            }
            next.push(part);
            changed = true;
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

fn individualize(cells: &Partition, cell_idx: usize, v: usize) -> Partition {
    let mut out = Vec::with_capacity(cells.len() + 1);
    for (i, cell) in cells.iter().enumerate() {
        if i == cell_idx {
            out.push(vec![v]);
            out.push(cell.iter().copied().filter(|&u| u != v).collect());
        } else {
            out.push(cell.clone());
        }
    }
    out
}

fn shapes_match(a: &Partition, b: &Partition) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.len() == y.len())
}

/// First smallest non-singleton cell, lowest index on ties.
fn branch_cell(cells: &Partition) -> Option<usize> {
    cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i)
}

/// Enumerates every automorphism of `g` by individualization-refinement
/// backtracking over a pair of aligned partitions.
pub fn automorphisms(g: &Graph, cap: usize) -> Result<Vec<Permutation>> {
    let n = g.n();
    let base = if n == 0 {
        Partition::new()
    } else {
        equitable_refinement(g, &vec![(0..n).collect()])
    };
    let mut found = Vec::new();
    search(g, &base, &base, &mut found, cap)?;
    if found.is_empty() {
        found.push(Permutation::identity(n));
    }
    Ok(found)
}

fn search(
    g: &Graph,
    source: &Partition,
    target: &Partition,
    found: &mut Vec<Permutation>,
    cap: usize,
) -> Result<()> {
    match branch_cell(source) {
        None => {
            // both partitions discrete: read off the candidate map
            let mut images = vec![0usize; g.n()];
            for (s, t) in source.iter().zip(target) {
                images[s[0]] = t[0];
            }
            let p = Permutation::from_images(images)
                .map_err(|_| Error::ValidationFailed("refinement produced a non-bijection".into()))?;
            if is_automorphism(g, &p)? {
                if found.len() >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                found.push(p);
            }
            Ok(())
        }
        Some(c) => {
            let v = source[c][0];
            let mut s_next = individualize(source, c, v);
            refine_in_place(g, &mut s_next);
            for &u in &target[c] {
                let mut t_next = individualize(target, c, u);
                refine_in_place(g, &mut t_next);
                if shapes_match(&s_next, &t_next) {
                    search(g, &s_next, &t_next, found, cap)?;
                }
            }
            Ok(())
        }
    }
}

/// Automorphism group of `g`: all automorphisms are enumerated, the order is
/// their count, and the generator list is greedily reduced.
pub fn aut_group(g: &Graph) -> Result<PermGroup> {
    aut_group_capped(g, DEFAULT_AUT_CAP)
}

pub fn aut_group_capped(g: &Graph, cap: usize) -> Result<PermGroup> {
    let elements = automorphisms(g, cap)?;
    let order = elements.len();
    let generators = minimal_generating_set(g.n(), &elements);
    Ok(PermGroup {
        degree: g.n(),
        generators,
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn automorphism_predicate() {
        let c5 = cycle_graph(5).unwrap();
        assert!(is_automorphism(&c5, &Permutation::identity(5)).unwrap());
        let rot = Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        assert!(is_automorphism(&c5, &rot).unwrap());
        let p3 = path_graph(3);
        let bad = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        assert!(!is_automorphism(&p3, &bad).unwrap());
        assert!(is_automorphism(&p3, &Permutation::identity(4)).is_err());
    }

    #[test]
    fn brute_force_orders() {
        assert_eq!(aut_brute_force(&empty_graph(4)).unwrap().order, 24);
        assert_eq!(aut_brute_force(&cycle_graph(5).unwrap()).unwrap().order, 10);
        assert_eq!(aut_brute_force(&path_graph(4)).unwrap().order, 2);
        assert!(aut_brute_force(&empty_graph(9)).is_err());
    }

    #[test]
    fn refinement_examples() {
        let c5 = cycle_graph(5).unwrap();
        let uniform = vec![(0..5).collect::<Vec<_>>()];
        assert_eq!(equitable_refinement(&c5, &uniform), vec![vec![0, 1, 2, 3, 4]]);

        // star K_{1,3} with center 0
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let cells = equitable_refinement(&star, &vec![(0..4).collect()]);
        assert_eq!(cells, vec![vec![1, 2, 3], vec![0]]);

        let p3 = path_graph(3);
        let cells = equitable_refinement(&p3, &vec![(0..3).collect()]);
        assert_eq!(cells, vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn solver_matches_oracle_on_fixtures() {
        for g in [
            empty_graph(3),
            complete_graph(4),
            path_graph(4),
            path_graph(6),
            cycle_graph(5).unwrap(),
            cycle_graph(6).unwrap(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 3)]).unwrap(),
        ] {
            let solver = aut_group(&g).unwrap();
            let oracle = aut_brute_force(&g).unwrap();
            assert_eq!(solver.order, oracle.order, "graph {:?}", g.edges());
            for gen in &solver.generators {
                assert!(is_automorphism(&g, gen).unwrap());
            }
        }
    }

    #[test]
    fn solver_small_orders() {
        assert_eq!(aut_group(&empty_graph(3)).unwrap().order, 6);
        assert_eq!(aut_group(&cycle_graph(5).unwrap()).unwrap().order, 10);
        // the 6-vertex path plus the chord {1,3} is asymmetric
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 3)]).unwrap();
        assert_eq!(aut_group(&g).unwrap().order, 1);
    }

    #[test]
    fn solver_handles_degenerate_sizes() {
        assert_eq!(aut_group(&empty_graph(0)).unwrap().order, 1);
        assert_eq!(aut_group(&empty_graph(1)).unwrap().order, 1);
    }
}
