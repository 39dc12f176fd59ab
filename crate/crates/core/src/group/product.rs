use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// `A × B` on pairs, `(a, b)` at index `a·|B| + b`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        let (xa, xb) = (x / nb, x % nb);
        for y in 0..n {
            let (ya, yb) = (y / nb, y % nb);
            table[x * n + y] = (a.mul(xa, ya) * nb + b.mul(xb, yb)) as u32;
        }
    }
    FiniteGroup::from_table_unchecked(n, table)
}

/// Data for `N ⋊ H`: `action[h]` is the automorphism table of `N` by which `h` acts.
#[derive(Clone, Debug)]
pub struct SemidirectSpec {
    pub kernel_group: FiniteGroup,
    pub acting_group: FiniteGroup,
    pub action: Vec<Vec<usize>>,
}

impl SemidirectSpec {
    pub fn validate(&self) -> Result<()> {
        let (n, h) = (&self.kernel_group, &self.acting_group);
        if self.action.len() != h.order() {
            return Err(Error::InvalidAction(format!(
                "{} automorphisms for an acting group of order {}",
                self.action.len(),
                h.order()
            )));
        }
        for (i, phi) in self.action.iter().enumerate() {
            if phi.len() != n.order() {
                return Err(Error::InvalidAction(format!(
                    "automorphism {i} has the wrong length"
                )));
            }
            let mut seen = vec![false; n.order()];
            for &x in phi {
                if x >= n.order() || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidAction(format!(
                        "automorphism {i} is not a bijection"
                    )));
                }
            }
            for x in 0..n.order() {
                for y in 0..n.order() {
                    if phi[n.mul(x, y)] != n.mul(phi[x], phi[y]) {
                        return Err(Error::InvalidAction(format!(
                            "automorphism {i} is not a homomorphism"
                        )));
                    }
                }
            }
        }
        for a in 0..h.order() {
            for b in 0..h.order() {
                let ab = &self.action[h.mul(a, b)];
                if (0..n.order()).any(|x| ab[x] != self.action[a][self.action[b][x]]) {
                    return Err(Error::InvalidAction(format!(
                        "action is not a homomorphism at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// `N ⋊ H` on pairs with `(n₁,h₁)(n₂,h₂) = (n₁·h₁(n₂), h₁h₂)`; the pair
/// `(n, h)` has index `h·|N| + n`, so `N` occupies the first `|N|` indices.
pub fn semidirect_product(spec: &SemidirectSpec) -> Result<FiniteGroup> {
    spec.validate()?;
    let (ng, hg) = (&spec.kernel_group, &spec.acting_group);
    let (nn, nh) = (ng.order(), hg.order());
    let total = nn * nh;
    let mut table = vec![0u32; total * total];
    for x in 0..total {
        let (xh, xn) = (x / nn, x % nn);
        let phi = &spec.action[xh];
        for y in 0..total {
            let (yh, yn) = (y / nn, y % nn);
            table[x * total + y] = (hg.mul(xh, yh) * nn + ng.mul(xn, phi[yn])) as u32;
        }
    }
    Ok(FiniteGroup::from_table_unchecked(total, table))
}

/// A central product with the images of both factors.
#[derive(Clone, Debug)]
pub struct CentralProduct {
    pub group: FiniteGroup,
    /// `embed_a[x]` is the image of `x ∈ A`.
    pub embed_a: Vec<usize>,
    pub embed_b: Vec<usize>,
}

/// `A ∘ B` identifying `⟨za⟩ ≤ Z(A)` with `⟨zb⟩ ≤ Z(B)` via `za^k ↦ zb^k`.
pub fn central_product(
    a: &FiniteGroup,
    b: &FiniteGroup,
    za: usize,
    zb: usize,
) -> Result<CentralProduct> {
    if !a.center().contains(za) || !b.center().contains(zb) {
        return Err(Error::CentralProduct(
            "identified elements must be central".into(),
        ));
    }
    let k = a.element_order(za);
    if k != b.element_order(zb) {
        return Err(Error::CentralProduct(format!(
            "orders {k} and {} of identified generators differ",
            b.element_order(zb)
        )));
    }
    let d = direct_product(a, b);
    let nb = b.order();
    let pair = |x: usize, y: usize| x * nb + y;
    let kernel_elems: Vec<usize> = (0..k as i64)
        .map(|i| pair(a.pow(za, i), b.pow(zb, -i)))
        .collect();
    let kernel = d.subgroup_from_elements(&kernel_elems)?;
    let q = d.quotient(&kernel)?;
    let embed_a: Vec<usize> = (0..a.order()).map(|x| q.proj(pair(x, 0))).collect();
    let embed_b: Vec<usize> = (0..b.order()).map(|y| q.proj(pair(0, y))).collect();
    Ok(CentralProduct {
        group: q.target().clone(),
        embed_a,
        embed_b,
    })
}

/// Central product identifying the subgroups of order `gcd(|Z(A)|, |Z(B)|)`
/// of two cyclic centers; each is generated by its smallest-index element
/// of that order.
pub fn central_product_auto(a: &FiniteGroup, b: &FiniteGroup) -> Result<CentralProduct> {
    let (ca, cb) = (a.center(), b.center());
    let cyclic = |g: &FiniteGroup, c: &crate::group::Subgroup| {
        c.elements()
            .iter()
            .any(|&x| g.element_order(x) == c.order())
    };
    if !cyclic(a, &ca) || !cyclic(b, &cb) {
        return Err(Error::CentralProduct("centers must be cyclic".into()));
    }
    let k = gcd(ca.order(), cb.order());
    let pick = |g: &FiniteGroup, c: &crate::group::Subgroup| {
        *c.elements()
            .iter()
            .find(|&&x| g.element_order(x) == k)
            .expect("cyclic center has elements of every dividing order")
    };
    central_product(a, b, pick(a, &ca), pick(b, &cb))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, elementary_abelian, quaternion, sl2};

    #[test]
    fn s3_as_semidirect() {
        let n = cyclic(3).unwrap();
        let h = cyclic(2).unwrap();
        let spec = SemidirectSpec {
            kernel_group: n,
            acting_group: h,
            action: vec![vec![0, 1, 2], vec![0, 2, 1]],
        };
        let g = semidirect_product(&spec).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
    }

    #[test]
    fn a4_as_semidirect() {
        let n = elementary_abelian(2, 2).unwrap();
        let h = cyclic(3).unwrap();
        // 1 -> 2 -> 3 -> 1 on the three involutions
        let spec = SemidirectSpec {
            kernel_group: n,
            acting_group: h,
            action: vec![vec![0, 1, 2, 3], vec![0, 2, 3, 1], vec![0, 3, 1, 2]],
        };
        let g = semidirect_product(&spec).unwrap();
        let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 4, 4]);
    }

    #[test]
    fn bad_action_is_rejected() {
        let spec = SemidirectSpec {
            kernel_group: cyclic(3).unwrap(),
            acting_group: cyclic(2).unwrap(),
            action: vec![vec![0, 1, 2], vec![0, 1, 1]],
        };
        assert!(semidirect_product(&spec).is_err());
        let spec = SemidirectSpec {
            kernel_group: cyclic(3).unwrap(),
            acting_group: cyclic(3).unwrap(),
            action: vec![vec![0, 1, 2], vec![0, 2, 1], vec![0, 2, 1]],
        };
        assert!(semidirect_product(&spec).is_err());
    }

    #[test]
    fn central_products() {
        let s = sl2(3).unwrap();
        let c = central_product_auto(&s, &s).unwrap();
        assert_eq!(c.group.order(), 288);
        let q = quaternion(8).unwrap();
        let qq = central_product_auto(&q, &q).unwrap();
        assert_eq!(qq.group.order(), 32);
        assert_eq!(qq.group.center().order(), 2);
        let d = dihedral(8).unwrap();
        // r is not central in D8
        assert!(central_product(&d, &q, 1, 0).is_err());
    }
}
