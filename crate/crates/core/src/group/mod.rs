//! Finite groups given by multiplication tables.
//!
//! Elements are indices `0..n` with the identity at `0`. Every choice the
//! toolkit makes (class representatives, coset sections, generators) breaks
//! ties by the smallest element index, so results are reproducible.

mod classes;
mod closure;
mod families;
pub mod field;
pub mod io;
mod iso;
mod product;
mod quotient;
mod subgroup;
mod sylow;

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};

pub use classes::ConjClass;
pub use closure::closure;
pub use families::{
    affine_class_two, agl1, alternating, cyclic, dihedral, elementary_abelian, extraspecial,
    quaternion, sl2, symmetric, ExtraspecialType,
};
pub use iso::{find_isomorphism, fingerprint, Fingerprint};
pub use product::{
    central_product, central_product_auto, direct_product, semidirect_product, CentralProduct,
    SemidirectSpec,
};
pub use quotient::QuotientMap;
pub use subgroup::Subgroup;
pub use sylow::{element_parts, CoresAndResiduals, SylowHall};

/// Default cap on the order of table-based groups.
pub const DEFAULT_MAX_ORDER: usize = 2000;

/// Full associativity is checked up to this order; above it triples are sampled.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 512;

const ASSOCIATIVITY_SAMPLES: usize = 200_000;

/// A finite group stored as its Cayley table.
pub struct FiniteGroup {
    n: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    labels: Option<Vec<String>>,
    orders: OnceLock<Vec<usize>>,
    generators: OnceLock<Vec<usize>>,
    classes: OnceLock<classes::ClassData>,
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        FiniteGroup {
            n: self.n,
            table: self.table.clone(),
            inv: self.inv.clone(),
            labels: self.labels.clone(),
            orders: self.orders.clone(),
            generators: self.generators.clone(),
            classes: self.classes.clone(),
        }
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.n)
            .finish()
    }
}

impl FiniteGroup {
    /// Builds a group from a Cayley table, checking the group axioms.
    ///
    /// The identity may sit anywhere; it is relabeled to index 0.
    pub fn from_table(rows: &[Vec<usize>], max_order: usize) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if n > max_order {
            return Err(Error::OrderCap { cap: max_order });
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotAGroup(format!(
                    "row {i} has {} entries, expected {n}",
                    r.len()
                )));
            }
            if let Some(&bad) = r.iter().find(|&&x| x >= n) {
                return Err(Error::NotAGroup(format!(
                    "entry {bad} out of range in row {i}"
                )));
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|g| rows[e][g] == g && rows[g][e] == g))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        // swap labels e <-> 0
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[relabel(a) * n + relabel(b)] = relabel(rows[a][b]) as u32;
            }
        }
        let mut inv = vec![u32::MAX; n];
        for a in 0..n {
            let row = &table[a * n..(a + 1) * n];
            let mut seen = vec![false; n];
            for &x in row {
                if std::mem::replace(&mut seen[x as usize], true) {
                    return Err(Error::NotAGroup(format!(
                        "row {} repeats element {x}",
                        relabel(a)
                    )));
                }
            }
            let b = row
                .iter()
                .position(|&x| x == 0)
                .expect("row is a permutation");
            if table[b * n + a] != 0 {
                return Err(Error::NotAGroup(format!(
                    "element {a} has no two-sided inverse"
                )));
            }
            inv[a] = b as u32;
        }
        let g = Self::from_parts(n, table, inv);
        g.check_associative()?;
        Ok(g)
    }

    /// Trusted constructor for tables produced internally.
    pub(crate) fn from_parts(n: usize, table: Vec<u32>, inv: Vec<u32>) -> Self {
        debug_assert_eq!(table.len(), n * n);
        FiniteGroup {
            n,
            table,
            inv,
            labels: None,
            orders: OnceLock::new(),
            generators: OnceLock::new(),
            classes: OnceLock::new(),
        }
    }

    /// Trusted constructor from a table whose identity is at index 0.
    pub(crate) fn from_table_unchecked(n: usize, table: Vec<u32>) -> Self {
        let mut inv = vec![0u32; n];
        for a in 0..n {
            let row = &table[a * n..(a + 1) * n];
            inv[a] = row.iter().position(|&x| x == 0).expect("identity in row") as u32;
        }
        Self::from_parts(n, table, inv)
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.n;
        let bad = |a: usize, b: usize, c: usize| {
            Error::NotAGroup(format!("not associative on ({a}, {b}, {c})"))
        };
        if n <= FULL_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(bad(a, b, c));
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x0005_eed0_fa55);
            for _ in 0..ASSOCIATIVITY_SAMPLES {
                let (a, b, c) = (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                );
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(bad(a, b, c));
                }
            }
        }
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        if labels.len() == self.n {
            self.labels = Some(labels);
        }
        self
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g x g⁻¹`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let ord = self.element_order(a) as i64;
        let mut e = e.rem_euclid(ord);
        let mut base = a;
        let mut r = 0;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        r
    }

    pub fn row(&self, a: usize) -> &[u32] {
        &self.table[a * self.n..(a + 1) * self.n]
    }

    /// The table as nested rows, for export.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| self.row(a).iter().map(|&x| x as usize).collect())
            .collect()
    }

    pub fn element_orders(&self) -> &[usize] {
        self.orders.get_or_init(|| {
            (0..self.n)
                .map(|a| {
                    let mut k = 1;
                    let mut x = a;
                    while x != 0 {
                        x = self.mul(x, a);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    #[inline]
    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders()[a]
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A generating set chosen greedily: repeatedly add the smallest-index
    /// element not yet generated.
    pub fn generators(&self) -> &[usize] {
        self.generators.get_or_init(|| {
            let mut gens = Vec::new();
            let mut member = vec![false; self.n];
            member[0] = true;
            let mut elems = vec![0];
            for x in 0..self.n {
                if member[x] {
                    continue;
                }
                gens.push(x);
                self.extend_closure(&mut member, &mut elems, &gens);
            }
            gens
        })
    }

    /// Grows `elems` (with mask `member`) to the subgroup generated by `gens`.
    /// `elems` must contain the identity and lie inside that subgroup.
    pub(crate) fn extend_closure(
        &self,
        member: &mut [bool],
        elems: &mut Vec<usize>,
        gens: &[usize],
    ) {
        let mut queue: VecDeque<usize> = elems.iter().copied().collect();
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if !member[y] {
                    member[y] = true;
                    elems.push(y);
                    queue.push_back(y);
                }
            }
        }
    }
}
