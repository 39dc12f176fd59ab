use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

/// The canonical projection `G → G/N`.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    kernel: Subgroup,
    target: FiniteGroup,
    proj: Vec<usize>,
    section: Vec<usize>,
}

impl QuotientMap {
    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    #[inline]
    pub fn proj(&self, x: usize) -> usize {
        self.proj[x]
    }

    pub fn proj_table(&self) -> &[usize] {
        &self.proj
    }

    /// Smallest-index representative of the coset with quotient index `c`.
    #[inline]
    pub fn section(&self, c: usize) -> usize {
        self.section[c]
    }

    pub fn source_order(&self) -> usize {
        self.proj.len()
    }

    /// Full preimage of a subgroup of the quotient, as a subgroup of the source.
    pub fn preimage(&self, source: &FiniteGroup, sub: &Subgroup) -> Subgroup {
        let elems: Vec<usize> = (0..self.proj.len())
            .filter(|&x| sub.contains(self.proj[x]))
            .collect();
        source.generate(&elems)
    }

    /// Image of a subgroup of the source.
    pub fn image(&self, sub: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = sub.generators().iter().map(|&x| self.proj[x]).collect();
        self.target.generate(&gens)
    }
}

impl FiniteGroup {
    /// `G/N` for a normal subgroup `N`. Cosets are numbered in order of their
    /// smallest element, so the identity coset is 0.
    pub fn quotient(&self, n: &Subgroup) -> Result<QuotientMap> {
        if n.parent_order() != self.order() {
            return Err(Error::DimensionMismatch(
                "subgroup of a different group".into(),
            ));
        }
        if !n.is_normal() {
            return Err(Error::NotNormal);
        }
        let mut proj = vec![usize::MAX; self.order()];
        let mut section = Vec::with_capacity(self.order() / n.order());
        for x in 0..self.order() {
            if proj[x] != usize::MAX {
                continue;
            }
            let c = section.len();
            section.push(x);
            for &k in n.elements() {
                proj[self.mul(x, k)] = c;
            }
        }
        let m = section.len();
        let mut table = vec![0u32; m * m];
        for i in 0..m {
            for j in 0..m {
                table[i * m + j] = proj[self.mul(section[i], section[j])] as u32;
            }
        }
        Ok(QuotientMap {
            kernel: n.clone(),
            target: FiniteGroup::from_table_unchecked(m, table),
            proj,
            section,
        })
    }
}
