use crate::group::subgroup::split;
use crate::group::{FiniteGroup, Subgroup};

/// A Sylow subgroup and, when it is normal, a complement.
#[derive(Clone, Debug)]
pub struct SylowHall {
    pub sylow: Subgroup,
    pub hall_complement: Option<Subgroup>,
}

#[derive(Clone, Debug)]
pub struct CoresAndResiduals {
    /// `O_p(G)`.
    pub o_p: Subgroup,
    /// `O_{p'}(G)`.
    pub o_p_prime: Subgroup,
    /// `O^p(G)`.
    pub o_upper_p: Subgroup,
    /// `O^{p'}(G)`.
    pub o_upper_p_prime: Subgroup,
}

/// `(x_p, x_{p'})` with `x = x_p x_{p'}`, both powers of `x`.
pub fn element_parts(g: &FiniteGroup, x: usize, p: u64) -> (usize, usize) {
    let o = g.element_order(x) as u64;
    let (pa, m) = split(o, p);
    // e ≡ 1 mod p^a, e ≡ 0 mod m
    let e = if pa == 1 {
        0
    } else {
        let inv = modinv(m % pa, pa);
        (m * inv) % o
    };
    let xp = g.pow(x, e as i64);
    let xq = g.pow(x, (1 + o as i64 - e as i64) % o as i64);
    (xp, xq)
}

fn modinv(a: u64, m: u64) -> u64 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (m as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(m as i64) as u64
}

impl FiniteGroup {
    pub fn is_p_element(&self, x: usize, p: u64) -> bool {
        let o = self.element_order(x) as u64;
        split(o, p).1 == 1
    }

    pub fn is_p_prime_element(&self, x: usize, p: u64) -> bool {
        !(self.element_order(x) as u64).is_multiple_of(p)
    }

    /// A Sylow `p`-subgroup, grown one factor of `p` at a time inside
    /// normalizers: if `xP ∈ N(P)/P` has order `k` with `p | k`, then
    /// `⟨P, x^{k/p}⟩` is a `p`-group of order `p|P|`.
    pub fn sylow(&self, p: u64) -> Subgroup {
        let target = split(self.order() as u64, p).0 as usize;
        let whole = self.whole();
        let mut s = self.trivial_subgroup();
        while s.order() < target {
            let n = self.normalizer(&s, &whole);
            let mut grown = None;
            for &x in n.elements() {
                if s.contains(x) {
                    continue;
                }
                let mut k = 1;
                let mut y = x;
                while !s.contains(y) {
                    y = self.mul(y, x);
                    k += 1;
                }
                if (k as u64).is_multiple_of(p) {
                    let z = self.pow(x, (k as u64 / p) as i64);
                    let mut gens = s.generators().to_vec();
                    gens.push(z);
                    grown = Some(self.generate(&gens));
                    break;
                }
            }
            s = grown.expect("a p-subgroup below Sylow order grows inside its normalizer");
        }
        s
    }

    /// Sylow subgroup plus a complement found by greedily adjoining
    /// `p'`-elements; attempted only when the Sylow subgroup is normal, where
    /// every maximal `p'`-subgroup is a complement.
    pub fn sylow_and_hall(&self, p: u64) -> SylowHall {
        let sylow = self.sylow(p);
        let hall_complement = if sylow.is_normal() {
            let want = self.order() / sylow.order();
            let mut h = self.trivial_subgroup();
            for x in 0..self.order() {
                if h.order() == want {
                    break;
                }
                if h.contains(x) || !self.is_p_prime_element(x, p) {
                    continue;
                }
                let mut gens = h.generators().to_vec();
                gens.push(x);
                let cand = self.generate(&gens);
                if !(cand.order() as u64).is_multiple_of(p) {
                    h = cand;
                }
            }
            (h.order() == want).then_some(h)
        } else {
            None
        };
        SylowHall {
            sylow,
            hall_complement,
        }
    }

    fn core_by(&self, keep: impl Fn(&Subgroup) -> bool) -> Subgroup {
        let mut gens = Vec::new();
        for c in self.conjugacy_classes() {
            let n = self.normal_closure(&[c.representative]);
            if keep(&n) {
                gens.push(c.representative);
            }
        }
        self.normal_closure(&gens)
    }

    pub fn o_p(&self, p: u64) -> Subgroup {
        self.core_by(|n| split(n.order() as u64, p).1 == 1)
    }

    pub fn o_p_prime(&self, p: u64) -> Subgroup {
        self.core_by(|n| !(n.order() as u64).is_multiple_of(p))
    }

    /// `O^p(G)`, generated by the `p'`-elements.
    pub fn o_upper_p(&self, p: u64) -> Subgroup {
        let gens: Vec<usize> = (0..self.order())
            .filter(|&x| self.is_p_prime_element(x, p))
            .collect();
        self.generate(&gens)
    }

    /// `O^{p'}(G)`, generated by the `p`-elements.
    pub fn o_upper_p_prime(&self, p: u64) -> Subgroup {
        let gens: Vec<usize> = (0..self.order())
            .filter(|&x| self.is_p_element(x, p))
            .collect();
        self.generate(&gens)
    }

    pub fn cores_and_residuals(&self, p: u64) -> CoresAndResiduals {
        CoresAndResiduals {
            o_p: self.o_p(p),
            o_p_prime: self.o_p_prime(p),
            o_upper_p: self.o_upper_p(p),
            o_upper_p_prime: self.o_upper_p_prime(p),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{agl1, cyclic, sl2};

    #[test]
    fn parts_in_c6() {
        let g = cyclic(6).unwrap();
        let x = 1;
        assert_eq!(g.element_order(x), 6);
        assert_eq!(element_parts(&g, x, 2), (g.pow(x, 3), g.pow(x, 4)));
    }

    #[test]
    fn sl23_sylow_and_cores() {
        let g = sl2(3).unwrap();
        let sh = g.sylow_and_hall(2);
        assert_eq!(sh.sylow.order(), 8);
        assert!(sh.sylow.is_normal());
        assert_eq!(sh.hall_complement.unwrap().order(), 3);
        let c = g.cores_and_residuals(2);
        assert_eq!(c.o_p.order(), 8);
        assert!(c.o_p_prime.is_trivial());
        assert_eq!(c.o_upper_p.order(), 24);
        assert_eq!(c.o_upper_p_prime.order(), 8);
    }

    #[test]
    fn c6_cores() {
        let g = cyclic(6).unwrap();
        let c = g.cores_and_residuals(2);
        assert_eq!(c.o_p.order(), 2);
        assert_eq!(c.o_p_prime.order(), 3);
        assert_eq!(c.o_upper_p.order(), 3);
        assert_eq!(c.o_upper_p_prime.order(), 2);
    }

    #[test]
    fn agl18_hall() {
        let g = agl1(8).unwrap();
        let sh = g.sylow_and_hall(2);
        assert_eq!(sh.sylow, g.derived_subgroup());
        assert_eq!(sh.hall_complement.unwrap().order(), 7);
    }
}
