//! Permutations of `0..n` and finite permutation groups given by generators.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Default cap on generated-group size for closure enumeration.
pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

/// A bijection on `0..n`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n {
                return Err(Error::BadPermutation(format!("image {v} out of range for degree {n}")));
            }
            if seen[v] {
                return Err(Error::BadPermutation(format!("image {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Permutation> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (i, &v) in cycle.iter().enumerate() {
                if v >= n {
                    return Err(Error::BadPermutation(format!("point {v} out of range")));
                }
                images[v] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Composition `self ∘ other`: `other` is applied first,
    /// so `result[v] = self[other[v]]`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// Multiplicative order of the permutation.
    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self).unwrap();
            k += 1;
        }
        k
    }

    /// Parses the one-line image-list form `p: 2 0 1` (the `p:` prefix is optional).
    pub fn parse(line: &str) -> Result<Permutation> {
        let body = line.trim().strip_prefix("p:").unwrap_or(line.trim());
        let images = body
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::BadPermutation(format!("bad image {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if images.is_empty() {
            return Err(Error::BadPermutation("empty image list".into()));
        }
        Permutation::from_images(images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p:")?;
        for v in &self.images {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// A finite permutation group: a generator list plus the order of the group
/// they generate.
#[derive(Clone, Debug)]
pub struct PermGroup {
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub order: usize,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            degree,
            generators: vec![Permutation::identity(degree)],
            order: 1,
        }
    }

    pub fn from_generators(degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<PermGroup> {
        let order = closure_order(degree, &generators, cap)?;
        Ok(PermGroup {
            degree,
            generators,
            order,
        })
    }

    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        closure_elements(self.degree, &self.generators, cap)
    }
}

/// All elements of the group generated by `gens`, by breadth-first closure in
/// deterministic order (identity first).
pub fn closure_elements(degree: usize, gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    for g in gens {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
    }
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut out = vec![Permutation::identity(degree)];
    seen.insert(out[0].clone());
    let mut head = 0;
    while head < out.len() {
        let cur = out[head].clone();
        head += 1;
        for g in gens {
            let next = cur.compose(g).unwrap();
            if seen.insert(next.clone()) {
                if out.len() >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                out.push(next);
            }
        }
    }
    Ok(out)
}

/// Order of the group generated by `gens`.
pub fn closure_order(degree: usize, gens: &[Permutation], cap: usize) -> Result<usize> {
    Ok(closure_elements(degree, gens, cap)?.len())
}

/// Greedily reduces an element list to a small generating set for the same
/// group, scanning elements in the given order. Returns `[identity]` for the
/// trivial group.
pub fn minimal_generating_set(degree: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let target = elements.len().max(1);
    let mut gens: Vec<Permutation> = Vec::new();
    let mut closure: HashSet<Permutation> = HashSet::new();
    closure.insert(Permutation::identity(degree));
    for e in elements {
        if closure.len() == target {
            break;
        }
        if closure.contains(e) {
            continue;
        }
        gens.push(e.clone());
        closure = closure_elements(degree, &gens, target + 1)
            .expect("closure of a subset cannot exceed the group order")
            .into_iter()
            .collect();
    }
    if gens.is_empty() {
        gens.push(Permutation::identity(degree));
    }
    gens
}
