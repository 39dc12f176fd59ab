use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Closes `gens` under `mul` by breadth-first enumeration of products.
///
/// Returns the group (identity at index 0, then elements in BFS order) and
/// the concrete elements in index order. Fails with `OrderCap` as soon as
/// more than `max_order` elements appear.
pub fn closure<T, F>(
    identity: T,
    gens: &[T],
    mul: F,
    max_order: usize,
) -> Result<(FiniteGroup, Vec<T>)>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let gens: Vec<T> = gens.iter().filter(|g| **g != identity).cloned().collect();
    let ng = gens.len();
    let mut elems = vec![identity.clone()];
    let mut index: HashMap<T, usize> = HashMap::new();
    index.insert(identity, 0);
    // parent[x] = (y, s) with x = y * gens[s]
    let mut parent: Vec<(usize, usize)> = vec![(0, 0)];
    let mut right: Vec<u32> = Vec::new();
    let mut i = 0;
    while i < elems.len() {
        for (s, g) in gens.iter().enumerate() {
            let y = mul(&elems[i], g);
            let j = match index.get(&y) {
                Some(&j) => j,
                None => {
                    let j = elems.len();
                    if j >= max_order {
                        return Err(Error::OrderCap { cap: max_order });
                    }
                    index.insert(y.clone(), j);
                    elems.push(y);
                    parent.push((i, s));
                    j
                }
            };
            right.push(j as u32);
        }
        i += 1;
    }
    let n = elems.len();
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        let row = &mut table[a * n..(a + 1) * n];
        row[0] = a as u32;
        for h in 1..n {
            let (ph, s) = parent[h];
            row[h] = right[row[ph] as usize * ng + s];
        }
    }
    Ok((FiniteGroup::from_table_unchecked(n, table), elems))
}

/// Composition of permutations on `0..k`, `(ab)(x) = a(b(x))`.
pub(crate) fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    b.iter().map(|&x| a[x as usize]).collect()
}

impl FiniteGroup {
    /// Group generated by permutations of `0..degree`.
    pub fn from_permutations(degree: usize, gens: &[Vec<usize>], max_order: usize) -> Result<Self> {
        let mut perms = Vec::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            if g.len() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator {i} has length {}, expected {degree}",
                    g.len()
                )));
            }
            let mut seen = vec![false; degree];
            for &x in g {
                if x >= degree || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "generator {i} is not a bijection of {degree} points"
                    )));
                }
            }
            perms.push(g.iter().map(|&x| x as u32).collect::<Vec<u32>>());
        }
        let id: Vec<u32> = (0..degree as u32).collect();
        let (g, _) = closure(id, &perms, |a, b| compose(a, b), max_order)?;
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_symmetries() {
        // (1 2 3 4) and (1 3) on points 0..4
        let g =
            FiniteGroup::from_permutations(4, &[vec![1, 2, 3, 0], vec![2, 1, 0, 3]], 100).unwrap();
        assert_eq!(g.order(), 8);
        assert!(!g.is_abelian());
    }

    #[test]
    fn cap_is_enforced() {
        let r = FiniteGroup::from_permutations(5, &[vec![1, 2, 3, 4, 0], vec![1, 0, 2, 3, 4]], 100);
        assert!(matches!(r, Err(Error::OrderCap { cap: 100 })));
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(FiniteGroup::from_permutations(3, &[vec![0, 0, 1]], 10).is_err());
        assert!(FiniteGroup::from_permutations(3, &[vec![0, 1]], 10).is_err());
    }
}
