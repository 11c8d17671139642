//! Undirected simple graphs on vertices `0..n`, stored as bitset adjacency rows.

use crate::error::{Error, Result};

/// Hard cap on vertex counts accepted by constructors and parsers.
pub const DEFAULT_MAX_N: usize = 4096;

/// An undirected simple graph. Adjacency is symmetric and loop-free by
/// construction; values are conceptually immutable once built.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Graph> {
        Self::with_cap(n, DEFAULT_MAX_N)
    }

    pub fn with_cap(n: usize, cap: usize) -> Result<Graph> {
        if n > cap {
            return Err(Error::TooManyVertices { n, cap });
        }
        let words = n.div_ceil(64);
        Ok(Graph {
            n,
            words,
            rows: vec![0; n * words],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Adds the edge `u v`. Idempotent; loops and out-of-range vertices are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopRejected(u));
        }
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 != 0
    }

    /// The adjacency row of `v` as bitset words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    pub fn is_complete(&self) -> bool {
        // vacuously true for n <= 1
        (0..self.n).all(|v| self.degree(v) == self.n - 1) || self.n == 0
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n).expect("complement keeps the vertex count");
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    /// The subgraph induced by `s`, with vertices reindexed in increasing order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        for &v in s.members() {
            self.check_vertex(v)?;
        }
        let verts = s.members();
        let mut g = Graph::new(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        Ok(g)
    }
}

pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::new(n).expect("within cap");
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

pub fn empty_graph(n: usize) -> Graph {
    Graph::new(n).expect("within cap")
}

pub fn path_graph(n: usize) -> Graph {
    assert!(n >= 1, "path graph needs at least one vertex");
    let mut g = Graph::new(n).expect("within cap");
    for v in 1..n {
        g.add_edge(v - 1, v).unwrap();
    }
    g
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::EdgeList(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let mut g = path_graph(n);
    g.add_edge(n - 1, 0)?;
    Ok(g)
}

/// A set of vertex indices, kept sorted and deduplicated.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> VertexSet {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn full(n: usize) -> VertexSet {
        VertexSet {
            members: (0..n).collect(),
        }
    }

    pub fn range(lo: usize, hi: usize) -> VertexSet {
        VertexSet {
            members: (lo..hi).collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_edge_counts() {
        assert_eq!(complete_graph(1).edge_count(), 0);
        assert_eq!(complete_graph(3).edge_count(), 3);
        assert_eq!(complete_graph(5).edge_count(), 10);
    }

    #[test]
    fn empty_graph_has_no_edges() {
        assert_eq!(empty_graph(0).n(), 0);
        assert_eq!(empty_graph(2).edge_count(), 0);
        assert_eq!(empty_graph(4).edge_count(), 0);
    }

    #[test]
    fn path_and_cycle_shapes() {
        assert_eq!(path_graph(2).edges(), vec![(0, 1)]);
        assert_eq!(
            path_graph(6).edges(),
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]
        );
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert!(cycle_graph(2).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete_graph(3).complement(), empty_graph(3));
        assert_eq!(empty_graph(2).complement(), complete_graph(2));
    }

    #[test]
    fn complement_of_c5_is_isomorphic_to_c5() {
        // oracle: exhaustion over all 5! vertex maps
        let c5 = cycle_graph(5).unwrap();
        let co = c5.complement();
        let mut found = false;
        let mut perm = [0usize, 1, 2, 3, 4];
        permute_all(&mut perm, 0, &mut |p| {
            let ok = (0..5).all(|u| (0..5).all(|v| u == v || c5.has_edge(u, v) == co.has_edge(p[u], p[v])));
            if ok {
                found = true;
            }
        });
        assert!(found);
    }

    fn permute_all(a: &mut [usize; 5], k: usize, f: &mut impl FnMut(&[usize; 5])) {
        if k == a.len() {
            f(a);
            return;
        }
        for i in k..a.len() {
            a.swap(k, i);
            permute_all(a, k + 1, f);
            a.swap(k, i);
        }
    }

    #[test]
    fn completeness_predicate() {
        assert!(complete_graph(1).is_complete());
        assert!(complete_graph(4).is_complete());
        assert!(!path_graph(3).is_complete());
        assert!(empty_graph(0).is_complete());
        assert!(empty_graph(1).is_complete());
    }

    #[test]
    fn connectivity_predicate() {
        assert!(!empty_graph(2).is_connected());
        assert!(cycle_graph(5).unwrap().is_connected());
        assert!(complete_graph(1).is_connected());
        assert!(empty_graph(0).is_connected());
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = complete_graph(4);
        assert_eq!(
            k4.induced_subgraph(&VertexSet::new(vec![0, 1])).unwrap(),
            complete_graph(2)
        );
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(
            c5.induced_subgraph(&VertexSet::new(vec![0, 1, 2])).unwrap(),
            path_graph(3)
        );
        assert_eq!(c5.induced_subgraph(&VertexSet::full(5)).unwrap(), c5);
        assert!(c5.induced_subgraph(&VertexSet::new(vec![7])).is_err());
    }

    #[test]
    fn vertex_cap_enforced() {
        assert!(Graph::new(DEFAULT_MAX_N + 1).is_err());
        assert!(Graph::new(DEFAULT_MAX_N).is_ok());
    }

    #[test]
    fn loops_rejected() {
        let mut g = Graph::new(3).unwrap();
        assert!(matches!(g.add_edge(1, 1), Err(Error::LoopRejected(1))));
        assert!(matches!(
            g.add_edge(0, 3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }
}
