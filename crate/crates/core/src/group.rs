//! Finite-group input: named families, Cayley tables, and explicit permutation
//! generators, plus an exhaustive abstract-isomorphism test for small groups.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::{minimal_generating_set, PermGroup, Permutation, DEFAULT_CLOSURE_CAP};

/// Cap on group order accepted by `groups_isomorphic`.
pub const DEFAULT_ISO_CAP: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NamedFamily {
    Trivial,
    Cyclic,
    Dihedral,
    Symmetric,
    KleinFour,
}

/// A finite group given in one of the supported input forms.
#[derive(Clone, Debug)]
pub enum GroupSpec {
    Named {
        family: NamedFamily,
        parameter: usize,
    },
    /// k x k multiplication table over element indices `0..k`.
    CayleyTable(Vec<Vec<usize>>),
    PermGenerators {
        degree: usize,
        generators: Vec<Permutation>,
    },
}

impl GroupSpec {
    pub fn named(family: NamedFamily, parameter: usize) -> GroupSpec {
        GroupSpec::Named { family, parameter }
    }
}

/// Standard generators for the named families, as permutations.
fn named_generators(family: NamedFamily, parameter: usize) -> Result<(usize, Vec<Permutation>)> {
    match family {
        NamedFamily::Trivial => Ok((1, vec![Permutation::identity(1)])),
        NamedFamily::Cyclic => {
            if parameter < 1 {
                return Err(Error::BadGroupSpec("cyclic needs parameter >= 1".into()));
            }
            let n = parameter;
            let cycle: Vec<usize> = (0..n).collect();
            Ok((n, vec![Permutation::from_cycles(n, &[&cycle])?]))
        }
        NamedFamily::Dihedral => {
            if parameter < 3 {
                return Err(Error::BadGroupSpec("dihedral needs parameter >= 3".into()));
            }
            let n = parameter;
            let cycle: Vec<usize> = (0..n).collect();
            let rot = Permutation::from_cycles(n, &[&cycle])?;
            // reflection fixing vertex 0
            let refl = Permutation::from_images((0..n).map(|i| (n - i) % n).collect())?;
            Ok((n, vec![rot, refl]))
        }
        NamedFamily::Symmetric => {
            if parameter < 1 {
                return Err(Error::BadGroupSpec("symmetric needs parameter >= 1".into()));
            }
            let n = parameter;
            if n == 1 {
                return Ok((1, vec![Permutation::identity(1)]));
            }
            let swap = Permutation::from_cycles(n, &[&[0, 1]])?;
            let cycle: Vec<usize> = (0..n).collect();
            let rot = Permutation::from_cycles(n, &[&cycle])?;
            Ok((n, if n == 2 { vec![swap] } else { vec![swap, rot] }))
        }
        NamedFamily::KleinFour => {
            let a = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]])?;
            let b = Permutation::from_cycles(4, &[&[0, 2], &[1, 3]])?;
            Ok((4, vec![a, b]))
        }
    }
}

/// Checks that `table` is a Latin square with an identity element and an
/// associative product.
pub fn validate_cayley_table(table: &[Vec<usize>]) -> Result<usize> {
    let k = table.len();
    if k == 0 {
        return Err(Error::BadCayleyTable("empty table".into()));
    }
    for row in table {
        if row.len() != k {
            return Err(Error::BadCayleyTable(format!("row length {} != {k}", row.len())));
        }
        for &x in row {
            if x >= k {
                return Err(Error::BadCayleyTable(format!("entry {x} out of range")));
            }
        }
    }
    // Latin square: each row and column is a bijection
    for i in 0..k {
        let mut row_seen = vec![false; k];
        let mut col_seen = vec![false; k];
        for j in 0..k {
            if row_seen[table[i][j]] {
                return Err(Error::BadCayleyTable(format!("row {i} repeats {}", table[i][j])));
            }
            row_seen[table[i][j]] = true;
            if col_seen[table[j][i]] {
                return Err(Error::BadCayleyTable(format!("column {i} repeats {}", table[j][i])));
            }
            col_seen[table[j][i]] = true;
        }
    }
    let identity = (0..k)
        .find(|&e| (0..k).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| Error::BadCayleyTable("no identity element".into()))?;
    // exhaustive associativity check
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::BadCayleyTable(format!(
                        "associativity fails at ({a}, {b}, {c})"
                    )));
                }
            }
        }
    }
    Ok(identity)
}

/// Builds a faithful permutation representation of the specified group.
/// Cayley tables go to the left-regular representation of degree k.
pub fn group_from_spec(spec: &GroupSpec) -> Result<PermGroup> {
    match spec {
        GroupSpec::Named { family, parameter } => {
            let (degree, gens) = named_generators(*family, *parameter)?;
            PermGroup::from_generators(degree, gens, DEFAULT_CLOSURE_CAP)
        }
        GroupSpec::CayleyTable(table) => {
            let identity = validate_cayley_table(table)?;
            let k = table.len();
            // left multiplication by each non-identity element
            let gens = (0..k)
                .filter(|&a| a != identity)
                .map(|a| Permutation::from_images(table[a].clone()))
                .collect::<Result<Vec<_>>>()?;
            let gens = if gens.is_empty() {
                vec![Permutation::identity(k)]
            } else {
                gens
            };
            let group = PermGroup::from_generators(k, gens, DEFAULT_CLOSURE_CAP)?;
            if group.order != k {
                return Err(Error::BadCayleyTable(format!(
                    "regular representation has order {} != {k}",
                    group.order
                )));
            }
            Ok(group)
        }
        GroupSpec::PermGenerators { degree, generators } => {
            if generators.is_empty() {
                return Err(Error::BadGroupSpec("no generators given".into()));
            }
            for g in generators {
                if g.degree() != *degree {
                    return Err(Error::DegreeMismatch(*degree, g.degree()));
                }
            }
            PermGroup::from_generators(*degree, generators.clone(), DEFAULT_CLOSURE_CAP)
        }
    }
}

/// True iff `a` and `b` are abstractly isomorphic, decided by exhaustive
/// search over generator images. Both orders must be within `DEFAULT_ISO_CAP`.
pub fn groups_isomorphic(a: &PermGroup, b: &PermGroup) -> Result<bool> {
    if a.order > DEFAULT_ISO_CAP || b.order > DEFAULT_ISO_CAP {
        return Err(Error::CapExceeded(DEFAULT_ISO_CAP));
    }
    if a.order != b.order {
        return Ok(false);
    }
    let elems_a = a.elements(DEFAULT_ISO_CAP + 1)?;
    let elems_b = b.elements(DEFAULT_ISO_CAP + 1)?;
    // fast pre-filter: the multisets of element orders must agree
    let mut orders_a: Vec<usize> = elems_a.iter().map(|p| p.order()).collect();
    let mut orders_b: Vec<usize> = elems_b.iter().map(|p| p.order()).collect();
    orders_a.sort_unstable();
    orders_b.sort_unstable();
    if orders_a != orders_b {
        return Ok(false);
    }
    let gens = minimal_generating_set(a.degree, &elems_a);
    let gen_orders: Vec<usize> = gens.iter().map(|p| p.order()).collect();
    let mut images: Vec<Permutation> = Vec::new();
    Ok(search_images(&gens, &gen_orders, &elems_a, &elems_b, &mut images))
}

fn search_images(
    gens: &[Permutation],
    gen_orders: &[usize],
    elems_a: &[Permutation],
    elems_b: &[Permutation],
    images: &mut Vec<Permutation>,
) -> bool {
    if images.len() == gens.len() {
        return check_homomorphism(gens, images, elems_a, elems_b);
    }
    let want = gen_orders[images.len()];
    for cand in elems_b {
        if cand.order() != want {
            continue;
        }
        images.push(cand.clone());
        if search_images(gens, gen_orders, elems_a, elems_b, images) {
            images.pop();
            return true;
        }
        images.pop();
    }
    false
}

/// Extends the generator assignment to the whole of `a` by word propagation,
/// failing on any conflict; accepts iff the extension is a bijection.
fn check_homomorphism(
    gens: &[Permutation],
    images: &[Permutation],
    elems_a: &[Permutation],
    elems_b: &[Permutation],
) -> bool {
    let id_a = Permutation::identity(gens[0].degree());
    let id_b = Permutation::identity(images[0].degree());
    let mut map: HashMap<Permutation, Permutation> = HashMap::new();
    map.insert(id_a.clone(), id_b);
    let mut queue = vec![id_a];
    while let Some(x) = queue.pop() {
        let fx = map[&x].clone();
        for (g, fg) in gens.iter().zip(images) {
            let xg = x.compose(g).unwrap();
            let fxg = fx.compose(fg).unwrap();
            match map.get(&xg) {
                Some(existing) => {
                    if *existing != fxg {
                        return false;
                    }
                }
                None => {
                    map.insert(xg.clone(), fxg);
                    queue.push(xg);
                }
            }
        }
    }
    if map.len() != elems_a.len() {
        return false;
    }
    let image_count = map.values().collect::<std::collections::HashSet<_>>().len();
    image_count == elems_b.len()
}
