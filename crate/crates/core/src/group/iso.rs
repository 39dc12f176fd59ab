use serde::Serialize;

use crate::group::FiniteGroup;

/// Isomorphism invariants used when a full search is out of range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    /// Sorted `(class size, element order)` pairs, one per class.
    pub classes: Vec<(usize, usize)>,
    pub derived_series: Vec<usize>,
    pub center_order: usize,
}

pub fn fingerprint(g: &FiniteGroup) -> Fingerprint {
    let mut classes: Vec<(usize, usize)> = g
        .conjugacy_classes()
        .iter()
        .map(|c| (c.size(), g.element_order(c.representative)))
        .collect();
    classes.sort_unstable();
    Fingerprint {
        order: g.order(),
        classes,
        derived_series: g.derived_series_orders(),
        center_order: g.center().order(),
    }
}

/// Generators chosen by decreasing element order, so that few are needed.
fn search_generators(g: &FiniteGroup) -> Vec<usize> {
    let mut by_order: Vec<usize> = (0..g.order()).collect();
    by_order.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
    let mut member = vec![false; g.order()];
    member[0] = true;
    let mut elems = vec![0];
    let mut gens = Vec::new();
    for x in by_order {
        if !member[x] {
            gens.push(x);
            g.extend_closure(&mut member, &mut elems, &gens);
        }
    }
    gens
}

struct Search<'a> {
    a: &'a FiniteGroup,
    b: &'a FiniteGroup,
    gens: Vec<usize>,
    cands: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Extends the partial map along the Cayley graph of `⟨gens[..k]⟩`.
    /// Returns `None` on any clash.
    fn extend(&self, images: &[usize]) -> Option<Vec<usize>> {
        let (a, b) = (self.a, self.b);
        let mut phi = vec![usize::MAX; a.order()];
        let mut used = vec![false; b.order()];
        phi[0] = 0;
        used[0] = true;
        let mut queue = vec![0usize];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            for (s, &img) in images.iter().enumerate() {
                let y = a.mul(x, self.gens[s]);
                let fy = b.mul(phi[x], img);
                if phi[y] == usize::MAX {
                    if used[fy] {
                        return None;
                    }
                    phi[y] = fy;
                    used[fy] = true;
                    queue.push(y);
                } else if phi[y] != fy {
                    return None;
                }
            }
        }
        Some(phi)
    }

    fn run(&self, images: &mut Vec<usize>) -> Option<Vec<usize>> {
        let k = images.len();
        if k == self.gens.len() {
            return self.extend(images);
        }
        for &c in &self.cands[k] {
            if images.contains(&c) {
                continue;
            }
            images.push(c);
            if self.extend(images).is_some() {
                if let Some(phi) = self.run(images) {
                    return Some(phi);
                }
            }
            images.pop();
        }
        None
    }
}

/// Searches for an isomorphism `a → b`, returned as an index table.
pub fn find_isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<usize>> {
    if a.order() != b.order() || a.class_count() != b.class_count() {
        return None;
    }
    if fingerprint(a) != fingerprint(b) {
        return None;
    }
    let gens = search_generators(a);
    let class_size = |g: &FiniteGroup, x: usize| g.conjugacy_classes()[g.class_of(x)].size();
    let cands: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            (0..b.order())
                .filter(|&y| {
                    b.element_order(y) == a.element_order(x) && class_size(b, y) == class_size(a, x)
                })
                .collect()
        })
        .collect();
    let search = Search { a, b, gens, cands };
    let phi = search.run(&mut Vec::new())?;
    debug_assert!(phi.iter().all(|&y| y != usize::MAX));
    Some(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{agl1, alternating, cyclic, dihedral, direct_product, quaternion, sl2};

    fn is_iso(a: &FiniteGroup, b: &FiniteGroup, phi: &[usize]) -> bool {
        (0..a.order()).all(|x| (0..a.order()).all(|y| phi[a.mul(x, y)] == b.mul(phi[x], phi[y])))
    }

    #[test]
    fn agl14_is_a4() {
        let a = agl1(4).unwrap();
        let b = alternating(4).unwrap();
        let phi = find_isomorphism(&a, &b).unwrap();
        assert!(is_iso(&a, &b, &phi));
        let d = sl2(3).unwrap();
        let q = d.quotient(&d.second_derived()).unwrap();
        assert!(find_isomorphism(q.target(), &a).is_some());
    }

    #[test]
    fn non_isomorphic_pairs() {
        assert!(find_isomorphism(&dihedral(8).unwrap(), &quaternion(8).unwrap()).is_none());
        let c2 = cyclic(2).unwrap();
        let v4 = direct_product(&c2, &c2);
        assert!(find_isomorphism(&cyclic(4).unwrap(), &v4).is_none());
        assert!(find_isomorphism(
            &cyclic(6).unwrap(),
            &direct_product(&c2, &cyclic(3).unwrap())
        )
        .is_some());
    }
}
