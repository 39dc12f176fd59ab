use std::fmt;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// A subgroup of a fixed parent group. Equality compares element sets.
#[derive(Clone)]
pub struct Subgroup {
    elements: Vec<usize>,
    member: Vec<bool>,
    gens: Vec<usize>,
    normal: bool,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.elements.len())
            .field("normal", &self.normal)
            .field("generators", &self.gens)
            .finish()
    }
}

impl Subgroup {
    #[inline]
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Sorted element indices; the first is always the identity.
    #[inline]
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.member[x]
    }

    pub fn mask(&self) -> &[bool] {
        &self.member
    }

    #[inline]
    pub fn is_normal(&self) -> bool {
        self.normal
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn parent_order(&self) -> usize {
        self.member.len()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&x| other.member[x])
    }

    pub fn non_identity(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements[1..].iter().copied()
    }
}

impl FiniteGroup {
    fn make_subgroup(&self, member: Vec<bool>, gens: Vec<usize>) -> Subgroup {
        let elements: Vec<usize> = (0..self.order()).filter(|&x| member[x]).collect();
        let normal = self
            .generators()
            .iter()
            .all(|&g| gens.iter().all(|&s| member[self.conj(s, g)]));
        Subgroup {
            elements,
            member,
            gens,
            normal,
        }
    }

    pub fn whole(&self) -> Subgroup {
        self.make_subgroup(vec![true; self.order()], self.generators().to_vec())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut member = vec![false; self.order()];
        member[0] = true;
        self.make_subgroup(member, Vec::new())
    }

    /// `⟨gens⟩`.
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut elems = vec![0];
        let mut kept: Vec<usize> = Vec::new();
        for &g in gens {
            if !member[g] {
                kept.push(g);
                self.extend_closure(&mut member, &mut elems, &kept);
            }
        }
        self.make_subgroup(member, kept)
    }

    /// Checks that `elements` is closed and returns it as a subgroup.
    pub fn subgroup_from_elements(&self, elements: &[usize]) -> Result<Subgroup> {
        let mut member = vec![false; self.order()];
        for &x in elements {
            if x >= self.order() {
                return Err(Error::NotAGroup(format!("element {x} out of range")));
            }
            member[x] = true;
        }
        if !member[0] {
            return Err(Error::NotAGroup(
                "subset does not contain the identity".into(),
            ));
        }
        let h = self.generate(elements);
        if h.order() != member.iter().filter(|&&b| b).count() {
            return Err(Error::NotAGroup(
                "subset is not closed under multiplication".into(),
            ));
        }
        Ok(h)
    }

    /// Smallest subgroup containing `s` and normalized by `within`.
    pub fn normal_closure_in(&self, within: &Subgroup, s: &[usize]) -> Subgroup {
        let mut gens: Vec<usize> = Vec::new();
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut elems = vec![0];
        let mut pending: Vec<usize> = s.to_vec();
        while !pending.is_empty() {
            for x in pending.drain(..) {
                if !member[x] {
                    gens.push(x);
                    self.extend_closure(&mut member, &mut elems, &gens);
                }
            }
            for &w in within.generators() {
                for &y in &gens {
                    let c = self.conj(y, w);
                    if !member[c] {
                        pending.push(c);
                    }
                }
            }
        }
        self.make_subgroup(member, gens)
    }

    pub fn normal_closure(&self, s: &[usize]) -> Subgroup {
        self.normal_closure_in(&self.whole(), s)
    }

    /// `[K, K]` for a subgroup `K`.
    pub fn derived_of(&self, k: &Subgroup) -> Subgroup {
        let gens = k.generators();
        let mut comms = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                let c = self.commutator(a, b);
                if c != 0 {
                    comms.push(c);
                }
            }
        }
        self.normal_closure_in(k, &comms)
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        self.derived_of(&self.whole())
    }

    /// `G''`.
    pub fn second_derived(&self) -> Subgroup {
        self.derived_of(&self.derived_subgroup())
    }

    /// Orders of the derived series down to the perfect term.
    pub fn derived_series_orders(&self) -> Vec<usize> {
        let mut k = self.whole();
        let mut out = vec![k.order()];
        loop {
            let d = self.derived_of(&k);
            if d.order() == k.order() {
                break;
            }
            out.push(d.order());
            k = d;
        }
        out
    }

    /// `C_within(S)`.
    pub fn centralizer(&self, s: &[usize], within: &Subgroup) -> Subgroup {
        let member: Vec<bool> = (0..self.order())
            .map(|t| within.contains(t) && s.iter().all(|&x| self.mul(t, x) == self.mul(x, t)))
            .collect();
        let elems: Vec<usize> = (0..self.order()).filter(|&x| member[x]).collect();
        let sub = self.generate(&elems);
        debug_assert_eq!(sub.order(), elems.len());
        sub
    }

    /// Centralizer of a subgroup, using its generators.
    pub fn centralizer_of(&self, h: &Subgroup, within: &Subgroup) -> Subgroup {
        self.centralizer(h.generators(), within)
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(self.generators(), &self.whole())
    }

    /// `Z(K)` for a subgroup `K`.
    pub fn center_of(&self, k: &Subgroup) -> Subgroup {
        self.centralizer(k.generators(), k)
    }

    /// `N_within(H)`.
    pub fn normalizer(&self, h: &Subgroup, within: &Subgroup) -> Subgroup {
        let elems: Vec<usize> = within
            .elements()
            .iter()
            .copied()
            .filter(|&g| h.generators().iter().all(|&s| h.contains(self.conj(s, g))))
            .collect();
        self.generate(&elems)
    }

    /// Whether `h` is normalized by every element of `k`.
    pub fn is_normalized_by(&self, h: &Subgroup, k: &Subgroup) -> bool {
        k.generators()
            .iter()
            .all(|&g| h.generators().iter().all(|&s| h.contains(self.conj(s, g))))
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = a
            .generators()
            .iter()
            .chain(b.generators())
            .copied()
            .collect();
        self.generate(&gens)
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let elems: Vec<usize> = a
            .elements()
            .iter()
            .copied()
            .filter(|&x| b.contains(x))
            .collect();
        self.generate(&elems)
    }

    /// `[A, B]`, the subgroup generated by commutators of the generators,
    /// closed under conjugation by `A` and `B`.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let comms: Vec<usize> = a
            .generators()
            .iter()
            .flat_map(|&x| b.generators().iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.commutator(x, y))
            .collect();
        let ab = self.join(a, b);
        self.normal_closure_in(&ab, &comms)
    }

    /// `Φ(P) = P^p [P, P]` for a p-group `P`.
    pub fn frattini_of_p_group(&self, q: &Subgroup) -> Result<Subgroup> {
        if q.is_trivial() {
            return Ok(self.trivial_subgroup());
        }
        let primes = crate::linalg::prime_divisors(q.order() as u64);
        if primes.len() != 1 {
            return Err(Error::NotPGroup(primes[0] as u32));
        }
        let p = primes[0] as i64;
        let mut gens: Vec<usize> = q.elements().iter().map(|&x| self.pow(x, p)).collect();
        gens.extend_from_slice(self.derived_of(q).generators());
        Ok(self.generate(&gens))
    }

    /// The subgroup as a standalone group on `0..|K|` (sorted order) together
    /// with the embedding into the parent.
    pub fn subgroup_as_group(&self, k: &Subgroup) -> (FiniteGroup, Vec<usize>) {
        let emb = k.elements().to_vec();
        let mut pos = vec![u32::MAX; self.order()];
        for (i, &x) in emb.iter().enumerate() {
            pos[x] = i as u32;
        }
        let m = emb.len();
        let mut table = vec![0u32; m * m];
        for (i, &a) in emb.iter().enumerate() {
            for (j, &b) in emb.iter().enumerate() {
                table[i * m + j] = pos[self.mul(a, b)];
            }
        }
        (FiniteGroup::from_table_unchecked(m, table), emb)
    }

    /// Whether `|K|` is a power of `p`.
    pub fn is_p_subgroup(&self, k: &Subgroup, p: u64) -> bool {
        let (part, _) = split(k.order() as u64, p);
        part == k.order() as u64
    }
}

pub(crate) fn split(mut n: u64, p: u64) -> (u64, u64) {
    let mut part = 1;
    while n.is_multiple_of(p) && n > 0 {
        n /= p;
        part *= p;
    }
    (part, n)
}

#[cfg(test)]
mod tests {
    use crate::group::{dihedral, quaternion, sl2};

    #[test]
    fn quaternion_subgroups() {
        let q = quaternion(8).unwrap();
        let d = q.derived_subgroup();
        assert_eq!(d.order(), 2);
        assert_eq!(q.center(), d);
        let phi = q.frattini_of_p_group(&q.whole()).unwrap();
        assert_eq!(phi, d);
    }

    #[test]
    fn frattini_needs_p_group() {
        let g = dihedral(6).unwrap();
        assert!(g.frattini_of_p_group(&g.whole()).is_err());
    }

    #[test]
    fn sl23_centralizer_of_derived() {
        let g = sl2(3).unwrap();
        let d = g.derived_subgroup();
        assert_eq!(d.order(), 8);
        let c = g.centralizer_of(&d, &g.whole());
        assert_eq!(c.order(), 2);
        assert_eq!(c, g.center_of(&d));
        assert_eq!(g.second_derived().order(), 2);
    }

    #[test]
    fn generated_subgroup_is_closed() {
        let g = dihedral(12).unwrap();
        for x in 0..g.order() {
            let h = g.generate(&[x]);
            assert_eq!(h.order(), g.element_order(x));
            assert_eq!(g.order() % h.order(), 0);
        }
        assert!(g.subgroup_from_elements(&[0, 1]).is_err() || g.element_order(1) == 2);
    }
}
