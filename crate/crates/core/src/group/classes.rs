use serde::Serialize;

use crate::group::{FiniteGroup, Subgroup};

/// A conjugacy class with its smallest element as representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjClass {
    pub representative: usize,
    /// Sorted.
    pub elements: Vec<usize>,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

#[derive(Clone, Debug)]
pub(crate) struct ClassData {
    classes: Vec<ConjClass>,
    class_of: Vec<usize>,
}

impl FiniteGroup {
    /// Orbit of `x` under conjugation by the subgroup generated by `gens`, sorted.
    pub fn conjugation_orbit(&self, x: usize, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[x] = true;
        let mut orbit = vec![x];
        let mut i = 0;
        while i < orbit.len() {
            let y = orbit[i];
            for &g in gens {
                let z = self.conj(y, g);
                if !seen[z] {
                    seen[z] = true;
                    orbit.push(z);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    fn class_data(&self) -> &ClassData {
        self.classes.get_or_init(|| {
            let gens = self.generators().to_vec();
            let mut assigned = vec![false; self.order()];
            let mut classes = Vec::new();
            for x in 0..self.order() {
                if assigned[x] {
                    continue;
                }
                let orbit = self.conjugation_orbit(x, &gens);
                for &y in &orbit {
                    assigned[y] = true;
                }
                classes.push(ConjClass {
                    representative: x,
                    elements: orbit,
                });
            }
            classes.sort_by_key(|c| (c.size(), c.representative));
            let mut class_of = vec![0; self.order()];
            for (i, c) in classes.iter().enumerate() {
                for &y in &c.elements {
                    class_of[y] = i;
                }
            }
            ClassData { classes, class_of }
        })
    }

    /// Conjugacy classes sorted by `(size, representative)`; class 0 is `{1}`.
    pub fn conjugacy_classes(&self) -> &[ConjClass] {
        &self.class_data().classes
    }

    #[inline]
    pub fn class_of(&self, x: usize) -> usize {
        self.class_data().class_of[x]
    }

    pub fn class_count(&self) -> usize {
        self.class_data().classes.len()
    }

    pub fn are_conjugate(&self, x: usize, y: usize) -> bool {
        self.class_of(x) == self.class_of(y)
    }

    /// Every element outside `G'` is conjugate to its whole `G'`-coset.
    pub fn is_camina(&self) -> bool {
        let d = self.derived_subgroup();
        (0..self.order()).filter(|&x| !d.contains(x)).all(|x| {
            let c = &self.conjugacy_classes()[self.class_of(x)];
            c.size() == d.order()
                && c.elements
                    .iter()
                    .all(|&y| d.contains(self.mul(self.inv(x), y)))
        })
    }

    /// The Camina condition for a subgroup `K` relative to `[K, K]`, using
    /// `K`-conjugacy inside the parent: `[g]_K = g[K, K]` for `g ∈ K ∖ [K, K]`.
    pub fn is_camina_subgroup(&self, k: &Subgroup) -> bool {
        let d = self.derived_of(k);
        k.elements().iter().filter(|&&x| !d.contains(x)).all(|&x| {
            let orbit = self.conjugation_orbit(x, k.generators());
            orbit.len() == d.order() && orbit.iter().all(|&y| d.contains(self.mul(self.inv(x), y)))
        })
    }

    /// `K` is normal, proper, nontrivial and contains `C_G(x)` for all `1 ≠ x ∈ K`.
    pub fn is_frobenius_with_kernel(&self, k: &Subgroup) -> bool {
        if !k.is_normal() || k.is_trivial() || k.order() == self.order() {
            return false;
        }
        k.non_identity().all(|x| {
            (0..self.order())
                .filter(|&g| self.mul(g, x) == self.mul(x, g))
                .all(|g| k.contains(g))
        })
    }
}

#[cfg(test)]
mod tests {
    use crate::group::{agl1, cyclic, dihedral, quaternion, sl2};

    fn sizes(g: &crate::group::FiniteGroup) -> Vec<usize> {
        g.conjugacy_classes().iter().map(|c| c.size()).collect()
    }

    #[test]
    fn class_sizes() {
        assert_eq!(sizes(&cyclic(5).unwrap()), vec![1; 5]);
        assert_eq!(sizes(&quaternion(8).unwrap()), vec![1, 1, 2, 2, 2]);
        assert_eq!(sizes(&sl2(3).unwrap()), vec![1, 1, 4, 4, 4, 4, 6]);
    }

    #[test]
    fn camina_examples() {
        assert!(quaternion(8).unwrap().is_camina());
        assert!(cyclic(4).unwrap().is_camina());
        // D8: a reflection class has size 2 = |G'|, but the check runs on every element
        let d8 = dihedral(8).unwrap();
        let brute = (0..8)
            .filter(|&x| !d8.derived_subgroup().contains(x))
            .all(|x| {
                d8.conjugacy_classes()[d8.class_of(x)].size() == d8.derived_subgroup().order()
            });
        assert_eq!(d8.is_camina(), brute);
    }

    #[test]
    fn frobenius_examples() {
        let a = agl1(4).unwrap();
        assert!(a.is_frobenius_with_kernel(&a.derived_subgroup()));
        let s3 = dihedral(6).unwrap();
        assert!(s3.is_frobenius_with_kernel(&s3.derived_subgroup()));
        let s = sl2(3).unwrap();
        assert!(!s.is_frobenius_with_kernel(&s.derived_subgroup()));
    }
}
